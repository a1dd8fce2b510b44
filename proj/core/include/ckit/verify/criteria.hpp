#pragma once

#include <chrono>

#include "ckit/jordan/hermitian.hpp"
#include "ckit/verify/sampling.hpp"

// Named batteries of checks shared by the verify suites, the CLI and the
// acceptance binary. Sampled batteries take (seed, trials, workers); the
// exhaustive ones fix their own field.
namespace ckit::verify {

struct Sampling {
  std::uint64_t seed = 1;
  std::size_t trials = 1000;
  unsigned workers = 0;
  SampleSpec spec(const std::string& stream) const { return {stream, seed, trials, workers}; }
};

// --- compalg
Report field_axioms(const FieldContext& ctx, const Sampling& s);
Report linear_algebra_invariants(const FieldContext& ctx, const Sampling& s);
// Q(xy) = Q(x)Q(y) and conj(z)(zx) = Q(z)x for R, C, H, O.
Report composition_identities(const FieldContext& ctx, const Sampling& s);
// Q(xy) = Q(x)Q(y) on every pair over F_2 for R, C, H.
Report composition_exhaustive_f2();
// Every nonzero isotropic octonion over F_p: dim L = dim R = 4, both inside {Q = 0};
// and L(x) = L(y) only for proportional x, y.
Report isotropic_octonions_exhaustive(const FieldContext& fp);
Report composition_general_sampled(const FieldContext& ctx, const Sampling& s);
// z2 in L(z1) iff conj(z1) z2 = 0 on isotropic pairs of C, H, O.
Report left_image_sampled(const FieldContext& ctx, const Sampling& s);
// The three bullets and the parity surrogate on isotropic octonion pairs.
Report triality_sampled(const FieldContext& ctx, const Sampling& s);

// --- jordan
// definition <=> minors (n = 3) <=> L_A rank <=> nu2 preimage, and the square test (n = 3),
// on every element of H_n(A) over F_p.
Report rank_one_exhaustive(const comp::AlgebraTag& tag, std::size_t n);
Report rank_one_sampled(const FieldContext& ctx, const Sampling& s);
Report fundamental_identity_sampled(const FieldContext& ctx, const Sampling& s);
Report octonion_u_crosscheck_sampled(const FieldContext& ctx, const Sampling& s);
Report veronese_scaling_sampled(const FieldContext& ctx, const Sampling& s);
Report rank_one_sums_sampled(const FieldContext& ctx, const Sampling& s);
// nu2 images of random associative triples classify as X1 with a witness reproducing A.
Report x1_classification_sampled(const FieldContext& ctx, const Sampling& s);
// Null-plane matrix of the first F_3 null plane, lifted to Q.
jordan::HermitianMatrix constructed_x0_witness();
// Quadrics vanish, rank one, class X0, and no nu2 preimage over F_3.
Report x0_witness_checks(const jordan::HermitianMatrix& a);
Report scaling_failure_search();

// --- classical
Report structure_group_sampled(const FieldContext& ctx, const Sampling& s);
Report classical_rank_sampled(const FieldContext& ctx, const Sampling& s);
Report scorza_agreement_exhaustive();

// --- calgmod
Report grassmann_census();
Report submodule_lattice_exhaustive();
Report duality_sampled(const FieldContext& ctx, const Sampling& s);

// --- cubic27
Report theta_identity();
Report incidence_checks();
Report theta_grids();
Report beta_invariance_sampled(const FieldContext& ctx, const Sampling& s);
// Random points plus trials / 10 points pulled back from rank-one matrices.
Report singular_locus_sampled(const FieldContext& ctx, const Sampling& s);
Report automorphism_census(std::chrono::milliseconds budget);

}  // namespace ckit::verify
