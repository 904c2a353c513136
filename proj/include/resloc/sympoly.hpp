#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "resloc/algebra.hpp"

namespace resloc {

// Sparse polynomial in variables q1..qm over Q, no truncation.
class Poly {
 public:
  using Terms = std::map<Exponents, Rat>;

  explicit Poly(int variables);
  static Poly constant(int variables, const Rat& c);
  static Poly variable(int variables, int index);  // 0-based

  int variables() const { return vars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rat coeff(const Exponents& e) const;
  void add_term(const Exponents& e, const Rat& c);

  // Degrees of the homogeneous components present.
  std::vector<int> degrees() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rat& c);
  Poly operator-() const;
  Poly pow(unsigned k) const;

  // Image under q_i <-> q_j.
  Poly swapped(int i, int j) const;
  // First adjacent transposition (i, i+1) that changes the polynomial.
  std::optional<std::pair<int, int>> asymmetry_witness() const;

  // Substitutes q_k -> values[k] into any commutative algebra T.
  template <typename T>
  T evaluate(const std::vector<T>& values, const T& one) const;

  bool operator==(const Poly& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }
  std::string to_string() const;

 private:
  int vars_;
  Terms terms_;
};

// A polynomial validated to be symmetric in its variables.
class SymPoly {
 public:
  // Throws Error(NotSymmetric) naming a transposition that breaks symmetry.
  explicit SymPoly(Poly p);

  const Poly& poly() const { return poly_; }
  int variables() const { return poly_.variables(); }
  bool operator==(const SymPoly& o) const { return poly_ == o.poly_; }

 private:
  Poly poly_;
};

using Partition = std::vector<int>;

// Complete homogeneous h_k and Schur s_lambda in m variables.
Poly complete_homogeneous(int m, int k);
Poly schur_polynomial(int m, const Partition& lambda);

// tau = sum_lambda c_lambda s_lambda, computed by stripping alternants from
// tau * a_delta. Throws InexactDivision if tau * a_delta is not alternating.
std::map<Partition, Rat> schur_expand(const SymPoly& tau);

// prod_{i=0}^{l} (i q1 + (l-i) q2): top Chern class of Sym^l of the dual
// tautological subbundle on G(2, n).
SymPoly sym_power_top_chern(int l);

template <typename T>
T Poly::evaluate(const std::vector<T>& values, const T& one) const {
  if (static_cast<int>(values.size()) != vars_)
    throw Error(Errc::ArityMismatch, "evaluate: expected " + std::to_string(vars_) + " values");
  std::vector<std::vector<T>> powers(static_cast<std::size_t>(vars_));
  T out = one * Rat(0);
  for (const auto& [e, c] : terms_) {
    T term = one * c;
    for (int v = 0; v < vars_; ++v) {
      auto& pw = powers[v];
      if (pw.empty()) pw.push_back(one);
      while (static_cast<int>(pw.size()) <= e[v]) pw.push_back(pw.back() * values[v]);
      if (e[v] > 0) term = term * pw[e[v]];
    }
    out += term;
  }
  return out;
}

}  // namespace resloc
