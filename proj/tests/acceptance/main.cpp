// One line per acceptance criterion. --long adds the automorphism census and
// the H_3(H) sweep over F_2; --tolerate-known accepts the square-test clause
// of criterion 4 only when it fails at exactly the recorded counterexample.
#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <string>

#include "ckit/jordan/hermitian.hpp"
#include "ckit/verify/criteria.hpp"

using namespace ckit;
using namespace ckit::verify;

namespace {

struct Outcome {
  bool passed = true;
  std::string note;
  bool tolerated = false;
};

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;  // 0 = no bound
  bool long_only;
  std::function<Outcome(const Report&)> judge;  // defaults to report.passed()
  std::function<Report()> run;
};

Sampling sampling(std::size_t trials) { return Sampling{1, trials, 0}; }

std::string failures(const Report& r) {
  std::string s;
  for (const auto& c : r.checks())
    if (!c.passed) s += (s.empty() ? "" : ", ") + c.name;
  return s;
}

bool tolerate_known = false;

// Criterion 4 with the square test read separately: every other clause must pass,
// and each H_3 sweep over F_2 may disagree with the square test only at A = Id.
bool identity_counterexample(const Json& d) {
  if (d.value("disagreements", 0) != 1 || !d.contains("counterexample") || d.value("definition", true)) return false;
  jordan::HermitianMatrix a = jordan::hermitian_from_json(d["counterexample"]);
  return a.n() == 3 && a.context().is_prime() && a.context().characteristic() == 2 &&
         a == jordan::HermitianMatrix::identity(a.tag(), 3);
}

Outcome judge_rank_one(const Report& r) {
  Outcome o;
  std::string other, squares, unexpected;
  for (const auto& c : r.checks()) {
    if (c.passed) continue;
    if (c.name.find("square_iff_definition") != std::string::npos) {
      squares += (squares.empty() ? "" : ", ") + c.name;
      if (!identity_counterexample(c.detail)) unexpected += " " + c.name + ": " + c.detail.dump();
      continue;
    }
    other += (other.empty() ? "" : ", ") + c.name;
  }
  if (!other.empty()) return {false, "failed: " + other};
  if (squares.empty()) return {true, ""};
  o.passed = false;
  if (!unexpected.empty()) {
    o.note = "square test failed at an unexpected element:" + unexpected;
    return o;
  }
  o.note = "square test A^2 = tr(A) A disagrees only at A = Id over F_2 (tr Id = 1) in " + squares +
           "; other clauses pass";
  if (tolerate_known) {
    o.note += " [tolerated]";
    o.tolerated = true;
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  bool long_mode = false;
  std::string witness_path = CKIT_X0_WITNESS;
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "--long")) long_mode = true;
    else if (!std::strcmp(argv[i], "--tolerate-known")) tolerate_known = true;
    else if (!std::strcmp(argv[i], "--witness") && i + 1 < argc) witness_path = argv[++i];
    else {
      std::fprintf(stderr, "usage: %s [--long] [--tolerate-known] [--witness path]\n", argv[0]);
      return 2;
    }
  }
  const FieldContext q = FieldContext::rationals(), f2 = FieldContext::prime(2), f3 = FieldContext::prime(3),
                     f5 = FieldContext::prime(5), f7 = FieldContext::prime(7);

  const std::vector<Criterion> criteria = {
      {1, "composition identities over F5, F7, Q (1e4 pairs per algebra)", 10, false, nullptr,
       [&] {
         Report r;
         for (const auto& k : {f5, f7, q}) r.merge(composition_identities(k, sampling(10000)), k.name() + ".");
         return r;
       }},
      {2, "isotropic octonions over F3 exhaustive; left-image criterion on 1e5 pairs", 60, false, nullptr,
       [&] {
         Report r = isotropic_octonions_exhaustive(f3);
         r.merge(left_image_sampled(f3, sampling(100000)), "F_3.");
         return r;
       }},
      {3, "triality bullets and parity on 1e4 isotropic pairs over F5 and F7", 60, false, nullptr,
       [&] {
         Report r;
         for (const auto& k : {f5, f7}) r.merge(triality_sampled(k, sampling(10000)), k.name() + ".");
         return r;
       }},
      {4, "rank-one equivalences on H3(C_F2) and H2(H_F2) (plus H3(H_F2) with --long), exhaustive", 60, false, judge_rank_one,
       [&] {
         Report r;
         r.merge(rank_one_exhaustive(comp::AlgebraTag(comp::Kind::C, f2), 3), "C3.");
         r.merge(rank_one_exhaustive(comp::AlgebraTag(comp::Kind::H, f2), 2), "H2.");
         if (long_mode) r.merge(rank_one_exhaustive(comp::AlgebraTag(comp::Kind::H, f2), 3), "H3.");
         return r;
       }},
      {5, "det3 o theta = beta as polynomials over Z", 10, false, nullptr, [] { return theta_identity(); }},
      {6, "theta 3-grid identity on every 3-grid", 30, false, nullptr, [] { return theta_grids(); }},
      {7, "beta invariant under 1e3 SL3(F7)^3 actions; beta(A,0,0) = det A", 0, false, nullptr,
       [&] { return beta_invariance_sampled(f7, sampling(1000)); }},
      {8, "singular locus equivalence on 1e4 points over F5 plus 1e3 rank-one points", 60, false, nullptr,
       [&] { return singular_locus_sampled(f5, sampling(10000)); }},
      {9, "shipped X0 witness; 1e3 associative nu2 images classify as X1", 0, false, nullptr,
       [&] {
         Report r = x0_witness_checks(jordan::hermitian_from_json(read_json_file(witness_path)));
         r.merge(x1_classification_sampled(q, sampling(1000)), "Q.");
         return r;
       }},
      {10, "Grassmannian census over F2; extract_generators on H^2; duality on 500 free modules", 0, false, nullptr,
       [&] {
         Report r = grassmann_census();
         r.merge(submodule_lattice_exhaustive());
         for (const auto& k : {f3, q}) r.merge(duality_sampled(k, sampling(500)), k.name() + ".");
         return r;
       }},
      {11, "structure group: 200 elements per classical model over F7 and Q", 0, false, nullptr,
       [&] {
         Report r;
         for (const auto& k : {f7, q}) r.merge(structure_group_sampled(k, sampling(200)), k.name() + ".");
         return r;
       }},
      {12, "octonionic nu2 scaling failure witness over F3", 0, false, nullptr, [] { return scaling_failure_search(); }},
      {13, "incidence automorphism count = 51840 within 5 min", 300, true, nullptr,
       [] { return automorphism_census(std::chrono::minutes(5)); }},
  };

  int failed = 0, tolerated = 0;
  for (const auto& c : criteria) {
    if (c.long_only && !long_mode) {
      std::printf("C%-2d SKIP  %s (needs --long)\n", c.id, c.title);
      continue;
    }
    const auto t0 = std::chrono::steady_clock::now();
    Report r;
    Outcome o;
    try {
      r = c.run();
      o = c.judge ? c.judge(r) : Outcome{r.passed(), r.passed() ? "" : "failed: " + failures(r)};
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_seconds > 0 && secs > c.limit_seconds) {
      o.passed = false;
      o.tolerated = false;
      o.note += (o.note.empty() ? "" : "; ") + std::string("over time limit");
    }
    const std::size_t n = r.checks().size();
    std::printf("C%-2d %s  %s [%zu check%s, %.1fs%s]\n", c.id, o.passed ? "PASS" : "FAIL", c.title, n,
                n == 1 ? "" : "s", secs, c.limit_seconds > 0 ? (" of " + std::to_string(static_cast<int>(c.limit_seconds)) + "s").c_str() : "");
    if (!o.note.empty()) std::printf("    %s\n", o.note.c_str());
    if (o.tolerated) ++tolerated;
    else if (!o.passed) ++failed;
  }
  std::printf("%d failed, %d tolerated\n", failed, tolerated);
  return failed == 0 ? 0 : 1;
}
