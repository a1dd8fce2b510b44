#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <regex>

#include "ckit/calgmod/enumerate.hpp"
#include "ckit/cubic27/incidence.hpp"
#include "ckit/jordan/octonion_plane.hpp"
#include "ckit/verify/suite.hpp"

using namespace ckit;

namespace {

constexpr int kPass = 0, kMathFail = 1, kUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string field = "q";
  std::optional<std::uint32_t> p;
  std::size_t trials = 1000;
  std::uint64_t seed = 1;
  bool long_running = false;
  std::string out;
};

FieldContext field_of(const Globals& g) {
  if (g.field == "q") {
    if (g.p) throw UsageError("--p applies only to --field fp");
    return FieldContext::rationals();
  }
  if (g.field != "fp") throw UsageError("--field must be q or fp");
  if (!g.p) throw UsageError("--field fp needs --p");
  if (*g.p < 2 || *g.p >= (1u << 16) || !is_prime_number(*g.p))
    throw UsageError("--p must be a prime below 65536");
  return FieldContext::prime(*g.p);
}

void emit(const Globals& g, const Json& j, bool print_when_no_out) {
  if (!g.out.empty()) {
    write_json_file(g.out, j);
  } else if (print_when_no_out) {
    std::cout << j.dump(2) << "\n";
  }
}

std::string scalar_text(const Scalar& s) { return s.to_string(); }

// Scalar multiples of 1 print as the scalar.
std::string element_text(const comp::CompElement& x) {
  const comp::CompElement one = comp::CompElement::one(x.tag());
  for (std::size_t i = 0; i < one.coords().size(); ++i) {
    if (one[i].is_one()) continue;
    if (!x[i].is_zero()) return x.to_string();
  }
  Scalar c = x[0];
  for (std::size_t i = 0; i < one.coords().size(); ++i)
    if (one[i].is_one() && x[i] != c) return x.to_string();
  return scalar_text(c);
}

std::chrono::milliseconds parse_budget(const std::string& text) {
  static const std::regex re(R"(^\s*(\d+)\s*(ms|s|m|h)?\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) throw UsageError("--budget must look like 300s, 5m or 1500ms");
  const long long v = std::stoll(m[1]);
  const std::string unit = m[2].matched ? m[2].str() : "s";
  if (unit == "ms") return std::chrono::milliseconds(v);
  if (unit == "m") return std::chrono::minutes(v);
  if (unit == "h") return std::chrono::hours(v);
  return std::chrono::seconds(v);
}

int run_verify(const Globals& g, const std::string& suite) {
  verify::SuiteConfig c;
  c.suite = suite;
  c.field = field_of(g);
  c.trials = g.trials;
  c.seed = g.seed;
  c.long_running = g.long_running;
  try {
    verify::validate(c);
  } catch (const PreconditionError& e) {
    throw UsageError(e.what());
  }
  Report rep = verify::run_suite(c);
  for (const auto& ch : rep.checks()) std::cout << (ch.passed ? "PASS " : "FAIL ") << ch.name << "\n";
  std::size_t failed = 0;
  for (const auto& ch : rep.checks()) failed += !ch.passed;
  std::cout << rep.checks().size() - failed << "/" << rep.checks().size() << " checks passed\n";
  if (const auto* f = rep.first_failure()) std::cout << "first failure " << f->name << ": " << f->detail.dump() << "\n";
  emit(g, verify::suite_report(c, rep), false);
  return rep.passed() ? kPass : kMathFail;
}

int run_classify(const Globals& g, const std::string& path) {
  jordan::HermitianMatrix a;
  try {
    a = jordan::hermitian_from_json(read_json_file(path));
  } catch (const std::exception& e) {
    throw UsageError(std::string("cannot read matrix: ") + e.what());
  }
  if (a.tag().kind() != comp::Kind::O || a.n() != 3) throw UsageError("classify needs a 3 x 3 octonionic matrix");

  VectorK res = jordan::octonion_quadrics(a);
  const bool rank_one = !a.is_zero() && jordan::jordan_rank_one(a);
  Json out{{"matrix", jordan::hermitian_to_json(a)}, {"rank_one", rank_one}, {"residuals", vector_to_json(res)}};
  if (!rank_one) {
    std::cout << "not rank one";
    for (std::size_t i = 0; i < res.size(); ++i)
      if (!res[i].is_zero()) {
        std::cout << ", first nonzero residual r" << i << " = " << res[i].to_string();
        out["first_nonzero_residual"] = {{"index", i}, {"value", scalar_to_json(res[i])}};
        break;
      }
    if (a.is_zero()) std::cout << " (zero matrix)";
    std::cout << "\n";
  } else {
    auto c = jordan::classify_rank_one_octonion(a);
    out["classification"] = jordan::classification_to_json(c);
    if (c.cls == jordan::PlaneClass::X1) {
      std::cout << "rank one, X1, witness (";
      for (std::size_t t = 0; t < c.triple.size(); ++t) std::cout << (t ? "," : "") << element_text(c.triple[t]);
      std::cout << ")";
      if (!c.scale.is_one()) std::cout << " scale " << c.scale.to_string();
      std::cout << "\n";
    } else {
      std::cout << "rank one, X0, null plane spanned by";
      for (const auto& x : c.plane) std::cout << " " << x.to_string();
      std::cout << "\n";
    }
  }
  emit(g, out, false);
  return kPass;
}

int run_enumerate(const Globals& g, const std::string& alg, std::size_t n, std::size_t dim) {
  if (!g.p) throw UsageError("enumerate-submodules needs --p");
  if (alg != "c" && alg != "h") throw UsageError("--alg must be c or h");
  calgmod::Census c;
  try {
    c = calgmod::enumerate_submodules(alg == "c" ? comp::Kind::C : comp::Kind::H, n, dim, *g.p);
  } catch (const PreconditionError& e) {
    throw UsageError(e.what());
  }
  Json j = calgmod::census_to_json(c);
  j["config"]["seed"] = g.seed;
  for (const auto& grp : c.groups)
    std::cerr << "(" << grp.dims.first << "," << grp.dims.second << "): " << grp.count << (grp.free ? " free" : "")
              << "\n";
  std::cerr << "total " << c.total << ", groups " << c.groups.size() << "\n";
  emit(g, j, true);
  return kPass;
}

int run_export(const Globals& g) {
  const auto& s = cubic27::IncidenceStructure::get();
  Json j = cubic27::incidence_to_json(s);
  j["config"] = {{"command", "export-incidence"}, {"seed", g.seed}};
  std::cerr << s.planes().size() << " planes\n";
  emit(g, j, true);
  return kPass;
}

int run_automorphisms(const Globals& g, const std::string& budget_text) {
  auto budget = parse_budget(budget_text);
  auto c = cubic27::incidence_automorphism_count(cubic27::IncidenceStructure::get(), budget);
  const bool ok = !c.complete || c.count == 51840;
  Json j{{"config", {{"command", "automorphisms"}, {"budget_ms", budget.count()}, {"seed", g.seed}}},
         {"count", c.count},
         {"complete", c.complete},
         {"expected", 51840},
         {"matches", c.complete && c.count == 51840}};
  std::cout << (c.complete ? "automorphisms " : "partial count (budget exhausted) ") << c.count << "\n";
  emit(g, j, false);
  return ok ? kPass : kMathFail;
}

int run_witness(const Globals& g) {
  Json j = jordan::hermitian_to_json(verify::constructed_x0_witness());
  emit(g, j, true);
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"compalg-kit: exact checks for split composition algebras, Jordan algebras and the 27-line cubic"};
  app.require_subcommand(1);
  Globals g;
  std::uint32_t p = 0;
  app.add_option("--field", g.field, "q or fp")->check(CLI::IsMember({"q", "fp"}));
  auto* popt = app.add_option("--p", p, "prime for --field fp");
  app.add_option("--trials", g.trials, "samples per sampled check");
  app.add_option("--seed", g.seed, "generator seed");
  app.add_flag("--long", g.long_running, "include long-running sweeps");
  app.add_option("--out", g.out, "JSON output path");

  std::string suite, path, alg = "c", budget = "300s";
  std::size_t n = 2, dim = 2;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "compalg | jordan | classical | calgmod | cubic27 | all")->required();
  auto* classify = app.add_subcommand("classify", "rank-one verdict and X0/X1 class of an H_3(O) matrix");
  classify->add_option("path", path, "HermitianMatrix JSON")->required();
  auto* enumerate = app.add_subcommand("enumerate-submodules", "census of right submodules over F_p");
  enumerate->add_option("--alg", alg, "c or h");
  enumerate->add_option("--n", n, "rank of the ambient module");
  enumerate->add_option("--dim", dim, "K-dimension of the submodules");
  auto* exporter = app.add_subcommand("export-incidence", "the 27 points and 45 signed planes");
  auto* autos = app.add_subcommand("automorphisms", "count incidence automorphisms");
  autos->add_option("--budget", budget, "time budget, e.g. 300s or 5m");
  auto* witness = app.add_subcommand("x0-witness", "write the constructed X0 witness matrix");
  for (auto* sub : {verify, classify, enumerate, exporter, autos, witness}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  if (popt->count()) g.p = p;

  try {
    if (*verify) return run_verify(g, suite);
    if (*classify) return run_classify(g, path);
    if (*enumerate) return run_enumerate(g, alg, n, dim);
    if (*exporter) return run_export(g);
    if (*autos) return run_automorphisms(g, budget);
    if (*witness) return run_witness(g);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "check aborted: " << e.what() << "\n";
    return kMathFail;
  }
  return kUsage;
}
