#include "sextic/json_io.hpp"

#include <fstream>
#include <sstream>

#include "sextic/errors.hpp"

namespace sextic {

namespace {

std::string number_text(const mpq_class& v) { return v.get_str(); }

mpq_class parse_number(const Json& j) {
  if (!j.is_string()) throw Error(ErrorCode::ParseError, "numbers must be decimal strings");
  mpq_class v;
  if (v.set_str(j.get<std::string>(), 10) != 0) throw Error(ErrorCode::ParseError, "bad number '" + j.get<std::string>() + "'");
  if (v.get_den() == 0) throw Error(ErrorCode::ParseError, "zero denominator");
  v.canonicalize();
  return v;
}

Scalar parse_scalar(const ScalarRing& ring, const Json& j) {
  const mpq_class v = parse_number(j);
  if (ring.kind() == ScalarKind::Integer && v.get_den() != 1)
    throw Error(ErrorCode::ParseError, "non-integral value for scalar ring Z");
  return Scalar(ring, v);
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::ParseError, std::string("missing field '") + key + "'");
  return j.at(key);
}

}  // namespace

Json scalar_ring_to_json(const ScalarRing& ring) {
  switch (ring.kind()) {
    case ScalarKind::Integer: return "Z";
    case ScalarKind::Rational: return "Q";
    case ScalarKind::PrimeField: {
      Json j = Json::object();
      j["Fp"] = ring.characteristic();
      return j;
    }
  }
  return nullptr;
}

ScalarRing scalar_ring_from_json(const Json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "Z") return ScalarRing::integers();
    if (s == "Q") return ScalarRing::rationals();
  } else if (j.is_object() && j.contains("Fp") && j.at("Fp").is_number_unsigned()) {
    const auto p = j.at("Fp").get<std::uint64_t>();
    if (p > 0xffffffffULL || !is_prime(p)) throw Error(ErrorCode::ParseError, "Fp needs a prime");
    return ScalarRing::prime_field(static_cast<std::uint32_t>(p));
  }
  throw Error(ErrorCode::ParseError, "scalar must be \"Z\", \"Q\" or {\"Fp\": p}");
}

Json ring_to_json(const QuinticRing& q) {
  Json j = Json::object();
  j["scalar"] = scalar_ring_to_json(q.ring());
  Json c = Json::array();
  for (std::size_t i = 1; i <= 4; ++i) {
    for (std::size_t k = i; k <= 4; ++k) {
      Json coeffs = Json::array();
      for (std::size_t r = 0; r <= 4; ++r) coeffs.push_back(number_text(q.c(i, k, r).value()));
      c.push_back(Json::array({i, k, coeffs}));
    }
  }
  j["c"] = c;
  return j;
}

QuinticRing ring_from_json(const Json& j) {
  const ScalarRing ring = scalar_ring_from_json(field(j, "scalar"));
  QuinticRing q(ring);
  const Json& c = field(j, "c");
  if (!c.is_array()) throw Error(ErrorCode::ParseError, "'c' must be a list");
  for (const auto& entry : c) {
    if (!entry.is_array() || entry.size() != 3 || !entry[0].is_number_unsigned() || !entry[1].is_number_unsigned() ||
        !entry[2].is_array() || entry[2].size() != 5)
      throw Error(ErrorCode::ParseError, "each 'c' entry is [i, j, [c0, c1, c2, c3, c4]]");
    const auto i = entry[0].get<std::size_t>();
    const auto k = entry[1].get<std::size_t>();
    if (i < 1 || i > 4 || k < 1 || k > 4) throw Error(ErrorCode::ParseError, "indices must be in 1..4");
    for (std::size_t r = 0; r <= 4; ++r) q.set(i, k, r, parse_scalar(ring, entry[2][r]));
  }
  return q;
}

Json lattice_to_json(const RationalLattice& lattice) {
  Json rows = Json::array();
  for (const auto& r : lattice.basis()) {
    Json row = Json::array();
    for (const auto& v : r) row.push_back(number_text(v));
    rows.push_back(row);
  }
  return rows;
}

Json lattice_to_json(const IntegerLattice& lattice) {
  Json rows = Json::array();
  for (const auto& r : lattice.basis()) {
    Json row = Json::array();
    for (const auto& v : r) row.push_back(v.get_str());
    rows.push_back(row);
  }
  return rows;
}

RationalLattice lattice_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 5) throw Error(ErrorCode::ParseError, "lattice must be five rows");
  std::vector<RatVector> rows;
  for (const auto& r : j) {
    if (!r.is_array() || r.size() != 5) throw Error(ErrorCode::ParseError, "lattice rows have five entries");
    RatVector v;
    for (const auto& x : r) v.push_back(parse_number(x));
    rows.push_back(v);
  }
  return RationalLattice::from_generators(rows, 5);
}

Json resolvent_to_json(const ResolventData& res, const std::optional<RationalLattice>& lattice) {
  Json j = Json::object();
  j["scalar"] = scalar_ring_to_json(res.ring());
  Json phi = Json::array();
  for (const auto& a : res.phi()) {
    Json upper = Json::array();
    for (std::size_t r = 0; r < 5; ++r)
      for (std::size_t c = r + 1; c < 5; ++c) upper.push_back(number_text(a(r, c).value()));
    phi.push_back(upper);
  }
  j["phi"] = phi;
  j["t"] = number_text(res.t().value());
  if (lattice) j["lattice"] = lattice_to_json(*lattice);
  return j;
}

ResolventFile resolvent_from_json(const Json& j) {
  const ScalarRing ring = scalar_ring_from_json(field(j, "scalar"));
  const Json& phi = field(j, "phi");
  if (!phi.is_array() || phi.size() != 4) throw Error(ErrorCode::ParseError, "'phi' must hold four matrices");
  std::array<Matrix, 4> mats{Matrix(ring, 5, 5), Matrix(ring, 5, 5), Matrix(ring, 5, 5), Matrix(ring, 5, 5)};
  for (std::size_t i = 0; i < 4; ++i) {
    if (!phi[i].is_array() || phi[i].size() != 10)
      throw Error(ErrorCode::ParseError, "each 'phi' entry lists the ten entries above the diagonal");
    std::size_t pos = 0;
    for (std::size_t r = 0; r < 5; ++r) {
      for (std::size_t c = r + 1; c < 5; ++c) {
        const Scalar v = parse_scalar(ring, phi[i][pos++]);
        mats[i](r, c) = v;
        mats[i](c, r) = -v;
      }
    }
  }
  ResolventFile file{ResolventData(std::move(mats), parse_scalar(ring, field(j, "t"))), std::nullopt};
  if (j.contains("lattice")) file.lattice = lattice_from_json(j.at("lattice"));
  return file;
}

Json report_to_json(const BoundingLattice& bl, const Conductor& c, const EnumerationResult& result) {
  Json j = Json::object();
  j["conductor"] = c.value.get_str();
  j["M0"] = lattice_to_json(bl.m0);
  Json list = Json::array();
  for (const auto& s : result.resolvents) {
    Json r = Json::object();
    r["basis"] = lattice_to_json(s.reference_lattice);
    r["numerical"] = s.is_numerical;
    r["theta_index"] = s.theta_index.get_str();
    r["index_in_M0"] = s.index_in_m0.get_str();
    r["M0_coordinates"] = lattice_to_json(s.lattice);
    list.push_back(r);
  }
  j["resolvents"] = list;
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path);
  out << dump(j);
}

}  // namespace sextic
