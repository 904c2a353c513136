#pragma once

// Residue formulas on the flag manifold Fl(1,...,m; C^n) and the
// Grassmannian G(m, n), with weights specialized to t_i = w_i * t.

#include <map>
#include <vector>

#include "resloc/algebra.hpp"
#include "resloc/sympoly.hpp"

namespace resloc {

// Distinct integer torus weights (w_1, ..., w_m).
class WeightVector {
 public:
  // Throws Error(RepeatedWeight) on duplicates.
  explicit WeightVector(std::vector<int> weights);

  std::size_t size() const { return w_.size(); }
  int operator[](std::size_t i) const { return w_[i]; }
  const std::vector<int>& values() const { return w_; }

 private:
  std::vector<int> w_;
};

// Permutations are 0-based: (0, 1, ..., m-1) is the identity.
using Permutation = std::vector<int>;

// Sum over i = 2..m of (n - i): the relative dimension of Fl -> P(V).
int flag_fiber_dimension(int m, int n);

// Q[h, z1, ..., z_{m-1}] with h^n = 0. The z_s are formal nilpotents
// truncated above every exponent that can push forward nontrivially.
RingPtr flag_ring(int m, int n);
// Q[h]/(h^n): cohomology of P(V), V = C^n.
RingPtr base_ring(int n);

// prod_{j<k}(t_{i_k} - t_{i_j}) * prod_s (t_{i_{s+1}} - t_{i_s} - z_s), in flag_ring(m, n).
LaurentClass euler_class_fixed_flag(const Permutation& perm, const WeightVector& w, int n);
// prod_{s != i} (h + t_s - t_i)^n, in base_ring(n). `i` is 0-based.
LaurentClass euler_class_fixed_line(int i, const WeightVector& w, int n);

// Pushforwards pi_*(z^A) in Q[h]/(h^n), keyed by A = (a_1, ..., a_{m-1}).
struct ZetaTable {
  int m = 0;
  int n = 0;
  std::map<Exponents, CohClass> entries;

  int fiber_dimension() const { return flag_fiber_dimension(m, n); }
  // 0 below the fiber dimension and above the top degree; otherwise the
  // stored entry, or Error(MissingZetaEntry).
  CohClass pushforward(const Exponents& a) const;
  // pi_* of an arbitrary class of flag_ring(m, n), by the projection formula.
  LaurentClass pushforward(const LaurentClass& c) const;
  // Integral over Fl of h^a * z^A.
  Rat intersection_number(int h_power, const Exponents& a) const;
};

// Solves the localization identity for pi_*(z^A), treating these as unknowns,
// over every fixed line i and every weight sample. Errors: RepeatedWeight,
// RankDeficient, Inconsistent.
ZetaTable flag_pushforward_extract(int m, int n, const std::vector<WeightVector>& samples);

// binom(-n, j - n + 2) h^{j - n + 2}: the closed form for m = 2.
CohClass flag_pushforward_closed_form_m2(int n, int j);

// Difference LHS - RHS of the pushforward identity for fixed line i (0-based),
// using the table for pi_*. Zero iff the identity holds exactly.
LaurentClass flag_identity_residual(const ZetaTable& table, int i, const WeightVector& w);

// Integral over G(2, n) of tau: coefficient of h^{n-1} t^{-2} in
// h * tau(h, h + t) / (h + t)^n with h^n = 0.
Rat grassmann_integral_residue(int n, const SymPoly& tau);

// Coefficient of s_{((n-m)^m)} in the Schur expansion of tau.
Rat schur_integral_oracle(int m, int n, const SymPoly& tau);

// Checks, for every fixed line i, that
//   sum_{perm(0)=i} pi_*( rho^* tau / euler(perm) )
// agrees with tau(h + t_1 - t_i, ...) / prod_{s != i}(h + t_s - t_i)^n on all
// t-exponents the left side can reach. rho^* q_k = h + z_1 + ... + z_{k-1}.
bool formula2_verify(int m, int n, const SymPoly& tau, const WeightVector& w, const ZetaTable& table);

// Deterministic family of generic weight vectors used when none are given;
// samples with different `first` offsets never coincide.
std::vector<WeightVector> default_weight_samples(int m, int count, int first = 0);

// Fewest default samples that determine the table for (m, n).
int default_sample_count(int m, int n);

}  // namespace resloc
