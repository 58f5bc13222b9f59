#include "sextic/cli.hpp"

#include <filesystem>
#include <sstream>

#include "CLI11.hpp"
#include "sextic/degeneracy.hpp"
#include "sextic/errors.hpp"
#include "sextic/examples.hpp"
#include "sextic/field_resolvent.hpp"
#include "sextic/json_io.hpp"
#include "sextic/lattice_resolvent.hpp"
#include "sextic/selfcheck.hpp"

namespace sextic {
namespace {

struct Options {
  bool json = false;
  std::uint64_t seed = 0;
  std::string ring_path;
  std::string resolvent_path;
  std::string output_path;
  std::optional<unsigned> mod;
  bool all = false;
  std::optional<std::string> index_cap;
  std::vector<unsigned> primes;
  int example_id = 0;
  std::optional<unsigned> p;
  std::string emit_dir;
  std::optional<unsigned> star_seed;
};

// Input problems (unreadable files, malformed JSON) are usage errors.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json load(const std::string& path) {
  try {
    return read_json_file(path);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

QuinticRing load_ring(const std::string& path) {
  try {
    return ring_from_json(load(path));
  } catch (const Error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

ResolventFile load_resolvent(const std::string& path) {
  try {
    return resolvent_from_json(load(path));
  } catch (const Error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

// The resolvent data on the lattice it names, if any.
ResolventData effective(const ResolventFile& file) {
  if (!file.lattice) return file.data;
  return file.data.rebase(lattice_matrix(*file.lattice));
}

// Common scalar ring for comparing a ring with a resolvent: a prime field wins,
// otherwise ℚ unless both are over ℤ.
ScalarRing common_ring(const ScalarRing& a, const ScalarRing& b) {
  if (a == b) return a;
  if (a.kind() == ScalarKind::PrimeField) return a;
  if (b.kind() == ScalarKind::PrimeField) return b;
  return ScalarRing::rationals();
}

Json lvector_json(const LVector& v) {
  Json j = Json::array();
  for (const auto& s : v) j.push_back(s.to_string());
  return j;
}

std::string lvector_text(const LVector& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ")";
  return os.str();
}

Json tuple_json(const std::array<std::size_t, 5>& t) {
  Json j = Json::array();
  for (auto g : t) j.push_back(g);
  return j;
}

Json element_json(const Element& v) { return lvector_json(v); }

void emit(std::ostream& out, const Json& j) { out << dump(j); }

int cmd_verify(const Options& o, std::ostream& out) {
  const QuinticRing ring = load_ring(o.ring_path);
  const ResolventData res = effective(load_resolvent(o.resolvent_path));
  const ScalarRing common = common_ring(ring.ring(), res.ring());
  const auto report = verify_resolvent(res.in(common), ring.in(common), o.seed);
  if (o.json) {
    Json j{{"command", "verify"},
           {"pass", report.pass},
           {"grid_checks", report.grid_checks},
           {"random_checks", report.random_checks}};
    Json failures = Json::array();
    for (const auto& f : report.failures) {
      failures.push_back({{"x", lvector_json(f.x)},
                          {"y", lvector_json(f.y)},
                          {"z", lvector_json(f.z)},
                          {"lhs", f.lhs.to_string()},
                          {"rhs", f.rhs.to_string()}});
    }
    j["failures"] = failures;
    emit(out, j);
  } else if (report.pass) {
    out << "pass: " << report.grid_checks << " grid checks, " << report.random_checks << " random checks\n";
  } else {
    const auto& f = report.failures.front();
    out << "fail: " << report.failures.size() << " failing triples; first x = " << lvector_text(f.x)
        << ", y = " << lvector_text(f.y) << ", z = " << lvector_text(f.z) << ": resolvent side " << f.lhs
        << ", ring side " << f.rhs << "\n";
  }
  return report.pass ? kExitSuccess : kExitFailure;
}

int cmd_ring_from_resolvent(const Options& o, std::ostream& out) {
  const QuinticRing ring = ring_from_resolvent(effective(load_resolvent(o.resolvent_path)));
  const Json j = ring_to_json(ring);
  if (o.output_path.empty()) {
    emit(out, j);
  } else {
    write_json_file(o.output_path, j);
    if (o.json) {
      emit(out, Json{{"command", "ring-from-resolvent"}, {"written", o.output_path}});
    } else {
      out << "wrote " << o.output_path << "\n";
    }
  }
  return kExitSuccess;
}

QuinticRing over_field(const QuinticRing& q) {
  return q.ring().kind() == ScalarKind::Integer ? q.in(ScalarRing::rationals()) : q;
}

int cmd_construct_resolvent(const Options& o, std::ostream& out) {
  const ResolventData res = construct_resolvent(over_field(load_ring(o.ring_path)));
  emit(out, resolvent_to_json(res));
  return kExitSuccess;
}

int cmd_very_degenerate(const Options& o, std::ostream& out) {
  QuinticRing ring = load_ring(o.ring_path);
  if (o.mod) {
    if (!is_prime(*o.mod)) throw UsageError("--mod needs a prime");
    ring = ring.in(ScalarRing::prime_field(*o.mod));
  }
  Json j{{"command", "very-degenerate"}, {"scalar", ring.ring().name()}};
  bool very = false;
  if (ring.ring().kind() == ScalarKind::PrimeField) {
    const auto report = is_very_degenerate(ring);
    very = report.very_degenerate;
    j["very_degenerate"] = very;
    j["methods_agree"] = report.methods_agree;
    if (report.nonzero_tuple) j["nonzero_tuple"] = tuple_json(*report.nonzero_tuple);
    if (report.witness) {
      Json w = Json::array();
      for (const auto& v : report.witness->q4) w.push_back(element_json(v));
      j["witness"] = w;
    }
  } else {
    const auto tuple = first_nonzero_F(ring);
    very = !tuple.has_value();
    j["very_degenerate"] = very;
    if (tuple) j["nonzero_tuple"] = tuple_json(*tuple);
  }
  if (very) {
    const auto cls = classify_very_degenerate(ring);
    j["type"] = to_string(cls.type);
    j["alpha_square"] = element_json(cls.alpha_square);
  }
  if (o.json) {
    emit(out, j);
  } else {
    out << (very ? "very degenerate" : "not very degenerate") << " over " << ring.ring().name();
    if (very) out << ", type " << j["type"].get<std::string>();
    out << "\n";
  }
  return kExitSuccess;
}

BoundingLattice bounding_lattice(const Options& o) {
  const QuinticRing ring = load_ring(o.ring_path);
  if (ring.ring().kind() != ScalarKind::Integer) throw UsageError("the ring must be over Z");
  if (o.resolvent_path.empty()) return compute_M0(ring);
  return compute_M0(ring, effective(load_resolvent(o.resolvent_path)).in(ScalarRing::rationals()));
}

Json factorization_json(const Conductor& c) {
  Json j = Json::array();
  for (const auto& [p, e] : c.factorization) j.push_back(Json::array({p.get_str(), e}));
  return j;
}

int cmd_conductor(const Options& o, std::ostream& out) {
  const BoundingLattice bl = bounding_lattice(o);
  const Conductor c = conductor(bl);
  if (o.json) {
    emit(out, Json{{"command", "conductor"},
                   {"conductor", c.value.get_str()},
                   {"factorization", factorization_json(c)},
                   {"from_theta", c.from_theta.get_str()},
                   {"from_F", c.from_F.get_str()},
                   {"formulas_agree", c.formulas_agree},
                   {"M0", lattice_to_json(bl.m0)}});
  } else {
    out << "conductor " << c.value << " (theta index " << c.from_theta << ", gcd of F " << c.from_F << ")\n";
  }
  return c.formulas_agree ? kExitSuccess : kExitFailure;
}

int cmd_resolvents(const Options& o, std::ostream& out) {
  const BoundingLattice bl = bounding_lattice(o);
  const Conductor c = conductor(bl);
  EnumerationResult result;
  if (o.all || o.index_cap) {
    std::optional<mpz_class> cap;
    if (o.index_cap) {
      try {
        cap = mpz_class(*o.index_cap);
      } catch (const std::invalid_argument&) {
        throw UsageError("--index-cap needs an integer");
      }
    }
    result = enumerate_all_resolvents(bl, c, cap);
  } else {
    result = enumerate_numerical_resolvents(bl, c);
  }
  if (o.json) {
    Json j = report_to_json(bl, c, result);
    j["partial"] = result.partial;
    j["count_bound"] = result.count_bound.get_str();
    j["numerical_count"] = result.numerical_count;
    j["within_bound"] = result.within_bound;
    emit(out, j);
  } else {
    out << "conductor " << c.value << ", " << result.resolvents.size() << " resolvents ("
        << result.numerical_count << " numerical, bound " << result.count_bound << ")"
        << (result.partial ? ", partial search" : "") << "\n";
    for (const auto& r : result.resolvents) {
      out << "  index " << r.index_in_m0 << (r.is_numerical ? " numerical" : " theta index " + r.theta_index.get_str())
          << ": " << r.reference_lattice.to_string() << "\n";
    }
  }
  return result.within_bound || o.all || o.index_cap ? kExitSuccess : kExitFailure;
}

int cmd_strong_maximal(const Options& o, std::ostream& out) {
  const QuinticRing ring = load_ring(o.ring_path);
  if (ring.ring().kind() != ScalarKind::Integer) throw UsageError("the ring must be over Z");
  for (unsigned p : o.primes) {
    if (!is_prime(p)) throw UsageError("--primes takes primes");
  }
  const auto report = check_strong_maximal_hypothesis(ring, o.primes);
  if (o.json) {
    Json primes = Json::array();
    for (const auto& e : report.primes) primes.push_back({{"p", e.p}, {"dimension", e.dimension}, {"holds", e.holds}});
    Json j{{"command", "strong-maximal"},
           {"primes", primes},
           {"covers_conductor", report.covers_conductor},
           {"predicts_unique", report.predicts_unique},
           {"confirmed", report.confirmed}};
    if (report.numerical_count) j["numerical_count"] = *report.numerical_count;
    emit(out, j);
  } else {
    for (const auto& e : report.primes) {
      out << "p = " << e.p << ": dimension " << e.dimension << (e.holds ? ", holds" : ", fails") << "\n";
    }
    out << (report.predicts_unique ? "unique numerical resolvent predicted" : "no prediction");
    if (report.numerical_count) out << ", enumeration found " << *report.numerical_count;
    out << "\n";
  }
  return kExitSuccess;
}

Json expectations_json(const ExampleExpectations& e) {
  Json j = Json::object();
  if (e.conductor) j["conductor"] = e.conductor->get_str();
  if (e.numerical_count) j["numerical_count"] = *e.numerical_count;
  if (e.m0) j["M0"] = lattice_to_json(*e.m0);
  if (e.very_degenerate_mod_p) j["very_degenerate_mod_p"] = *e.very_degenerate_mod_p;
  return j;
}

int cmd_example(const Options& o, std::ostream& out) {
  ExampleStars stars;
  if (o.star_seed) {
    RandomSource rnd(*o.star_seed);
    for (auto* family : {&stars.a18, &stars.a19})
      for (auto& m : *family)
        for (auto& v : m) v = rnd.integer(-5, 5);
  }
  const ExampleSpec spec = build_example(o.example_id, o.p, stars);
  const bool several = spec.cases.size() > 1;
  std::vector<std::string> written;
  if (!o.emit_dir.empty()) {
    std::filesystem::create_directories(o.emit_dir);
    for (const auto& c : spec.cases) {
      const std::string prefix = several ? c.name + "_" : "";
      const auto ring_file = (std::filesystem::path(o.emit_dir) / (prefix + "ring.json")).string();
      write_json_file(ring_file, ring_to_json(c.ring));
      written.push_back(ring_file);
      if (c.resolvent) {
        const auto res_file = (std::filesystem::path(o.emit_dir) / (prefix + "res.json")).string();
        write_json_file(res_file, resolvent_to_json(*c.resolvent, c.lattice));
        written.push_back(res_file);
      }
    }
  }
  if (o.json) {
    Json cases = Json::array();
    for (const auto& c : spec.cases) {
      Json jc{{"name", c.name}, {"ring", ring_to_json(c.ring)}};
      if (c.resolvent) jc["resolvent"] = resolvent_to_json(*c.resolvent, c.lattice);
      cases.push_back(jc);
    }
    Json j{{"example", spec.id}};
    if (spec.p) j["p"] = *spec.p;
    j["cases"] = cases;
    j["expected"] = expectations_json(spec.expected);
    if (!written.empty()) j["written"] = written;
    emit(out, j);
  } else {
    out << "example " << spec.id;
    if (spec.p) out << " (p = " << *spec.p << ")";
    out << ": " << spec.cases.size() << (several ? " cases" : " case") << "\n";
    for (const auto& c : spec.cases) {
      out << "  " << c.name << (c.resolvent ? " with resolvent" : "") << (c.lattice ? " on a sublattice" : "") << "\n";
    }
    if (spec.expected.conductor) out << "  expected conductor " << *spec.expected.conductor << "\n";
    if (spec.expected.numerical_count) out << "  expected numerical resolvents " << *spec.expected.numerical_count << "\n";
    for (const auto& f : written) out << "wrote " << f << "\n";
  }
  return kExitSuccess;
}

int cmd_selfcheck(const Options& o, std::ostream& out) {
  Json suites = Json::array();
  bool ok = true;
  for (const auto& name : suite_names()) {
    const SuiteResult r = run_suite(name, o.seed);
    ok = ok && r.passed();
    if (o.json) {
      suites.push_back({{"name", r.name}, {"cases", r.cases}, {"passed", r.passed()}, {"failures", r.failures}});
    } else {
      out << (r.passed() ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases)\n";
      for (const auto& f : r.failures) out << "  " << f << "\n";
    }
  }
  if (o.json) emit(out, Json{{"command", "selfcheck"}, {"seed", o.seed}, {"passed", ok}, {"suites", suites}});
  return ok ? kExitSuccess : kExitFailure;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Resolvent computations for quintic rings"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "Machine-readable output");
  app.add_option("--seed", o.seed, "Seed for randomized checks");

  auto* verify = app.add_subcommand("verify", "Check a resolvent against a ring");
  verify->add_option("--ring", o.ring_path)->required();
  verify->add_option("--resolvent", o.resolvent_path)->required();

  auto* rfr = app.add_subcommand("ring-from-resolvent", "Recover the ring of a resolvent");
  rfr->add_option("--resolvent", o.resolvent_path)->required();
  rfr->add_option("-o,--output", o.output_path);

  auto* construct = app.add_subcommand("construct-resolvent", "Resolvent of the ring tensored with Q");
  construct->add_option("--ring", o.ring_path)->required();

  auto* vd = app.add_subcommand("very-degenerate", "Very degeneracy test and classification");
  vd->add_option("--ring", o.ring_path)->required();
  vd->add_option("--mod", o.mod, "Reduce modulo a prime first");

  auto* cond = app.add_subcommand("conductor", "Bounding lattice and conductor");
  cond->add_option("--ring", o.ring_path)->required();
  cond->add_option("--resolvent", o.resolvent_path, "Reference resolvent over Q");

  auto* res = app.add_subcommand("resolvents", "Enumerate resolvents");
  res->add_option("--ring", o.ring_path)->required();
  res->add_option("--resolvent", o.resolvent_path, "Reference resolvent over Q");
  res->add_flag("--all", o.all, "Include non-numerical resolvents");
  res->add_option("--index-cap", o.index_cap, "Largest index in M0 to search");

  auto* sm = app.add_subcommand("strong-maximal", "Test the strong maximality hypothesis");
  sm->add_option("--ring", o.ring_path)->required();
  sm->add_option("--primes", o.primes)->required()->delimiter(',');

  auto* ex = app.add_subcommand("example", "Built-in examples 1 to 5");
  ex->add_option("id", o.example_id)->required();
  ex->add_option("--p", o.p, "Prime parameter");
  ex->add_option("--emit", o.emit_dir, "Write ring and resolvent files");
  ex->add_option("--star-seed", o.star_seed, "Random star entries (example 5)");

  auto* sc = app.add_subcommand("selfcheck", "Run the invariant suites");

  std::vector<std::string> argv_storage{"sextic"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitSuccess;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (verify->parsed()) return cmd_verify(o, out);
    if (rfr->parsed()) return cmd_ring_from_resolvent(o, out);
    if (construct->parsed()) return cmd_construct_resolvent(o, out);
    if (vd->parsed()) return cmd_very_degenerate(o, out);
    if (cond->parsed()) return cmd_conductor(o, out);
    if (res->parsed()) return cmd_resolvents(o, out);
    if (sm->parsed()) return cmd_strong_maximal(o, out);
    if (ex->parsed()) return cmd_example(o, out);
    if (sc->parsed()) return cmd_selfcheck(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::UnknownExample || e.code() == ErrorCode::MissingPrime) {
      err << "error: " << e.what() << "\n";
      return kExitUsage;
    }
    if (o.json) {
      emit(out, Json{{"status", "error"}, {"code", to_string(e.code())}, {"message", e.what()}});
    } else {
      err << to_string(e.code()) << ": " << e.what() << "\n";
    }
    return kExitFailure;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace sextic
