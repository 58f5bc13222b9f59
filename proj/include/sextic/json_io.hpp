#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "sextic/lattice.hpp"
#include "sextic/lattice_resolvent.hpp"
#include "sextic/quintic_ring.hpp"
#include "sextic/resolvent.hpp"

namespace sextic {

using Json = nlohmann::ordered_json;

Json scalar_ring_to_json(const ScalarRing& ring);
ScalarRing scalar_ring_from_json(const Json& j);

/// {"scalar": …, "c": [[i, j, [c0..c4]], …]} with all ten pairs i ≤ j.
Json ring_to_json(const QuinticRing& q);
QuinticRing ring_from_json(const Json& j);

struct ResolventFile {
  ResolventData data;
  /// Rows of a basis (in the coordinates of data) of the lattice carrying the resolvent.
  std::optional<RationalLattice> lattice;
};

/// {"scalar", "phi": four lists of the ten entries above the diagonal, "t", "lattice"?}.
Json resolvent_to_json(const ResolventData& res, const std::optional<RationalLattice>& lattice = std::nullopt);
ResolventFile resolvent_from_json(const Json& j);

Json lattice_to_json(const RationalLattice& lattice);
Json lattice_to_json(const IntegerLattice& lattice);
RationalLattice lattice_from_json(const Json& j);

/// {"conductor", "M0", "resolvents": [{"basis", "numerical", "theta_index", "index_in_M0",
///  "M0_coordinates"}]}; "basis" and "M0" use the reference coordinates.
Json report_to_json(const BoundingLattice& bl, const Conductor& c, const EnumerationResult& result);

/// Canonical text: two-space indent and a trailing newline.
std::string dump(const Json& j);
/// Throws ParseError with the reason.
Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace sextic
