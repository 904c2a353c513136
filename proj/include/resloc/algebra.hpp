#pragma once

// Exact kernel: nilpotent-truncated polynomial rings over Q and finite
// Laurent polynomials in a single formal variable t over them.

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "resloc/errors.hpp"
#include "resloc/rational.hpp"

namespace resloc {

using Exponents = std::vector<int>;

// Q[x_1..x_r] / (x_1^{N_1}, ..., x_r^{N_r}) together with a scale used by
// integration: the integral of the top monomial is integral_scale().
class Ring {
 public:
  Ring(std::vector<std::string> names, std::vector<int> truncation, Rat integral_scale = 1);

  std::size_t rank() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<int>& truncations() const { return truncation_; }
  int truncation(std::size_t v) const { return truncation_.at(v); }
  const Rat& integral_scale() const { return scale_; }

  // Exponent vector of x_1^{N_1-1} ... x_r^{N_r-1}.
  Exponents top_monomial() const;
  int top_degree() const;
  bool admits(const Exponents& e) const;
  Exponents zero_exponents() const { return Exponents(rank(), 0); }

  // Every exponent vector the ring admits, in lexicographic order.
  std::vector<Exponents> monomial_basis() const;

  std::string describe() const;

  bool operator==(const Ring& other) const {
    return names_ == other.names_ && truncation_ == other.truncation_ && scale_ == other.scale_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<int> truncation_;
  Rat scale_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> names, std::vector<int> truncation,
                  Rat integral_scale = 1);
bool same_ring(const RingPtr& a, const RingPtr& b);
void require_same_ring(const RingPtr& a, const RingPtr& b, const char* where);

int total_degree(const Exponents& e);

// Element of a truncated ring. Zero coefficients and truncated monomials are
// never stored.
class CohClass {
 public:
  using Terms = std::map<Exponents, Rat>;

  explicit CohClass(RingPtr ring);

  static CohClass constant(RingPtr ring, const Rat& c);
  static CohClass generator(RingPtr ring, std::size_t v);
  static CohClass monomial(RingPtr ring, const Exponents& e, const Rat& c = 1);

  const RingPtr& ring() const { return ring_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rat coeff(const Exponents& e) const;
  Rat scalar_part() const;
  bool is_scalar() const;
  // True when every stored monomial involves some generator.
  bool is_nilpotent() const;

  // -1 for zero; otherwise the common total degree, or throws when the class
  // mixes degrees (use is_homogeneous first).
  bool is_homogeneous() const;
  int degree() const;

  void add_term(const Exponents& e, const Rat& c);

  CohClass& operator+=(const CohClass& o);
  CohClass& operator-=(const CohClass& o);
  CohClass& operator*=(const CohClass& o);
  CohClass& operator*=(const Rat& c);

  friend CohClass operator+(CohClass a, const CohClass& b) { return a += b; }
  friend CohClass operator-(CohClass a, const CohClass& b) { return a -= b; }
  friend CohClass operator*(const CohClass& a, const CohClass& b);
  friend CohClass operator*(CohClass a, const Rat& c) { return a *= c; }
  friend CohClass operator*(const Rat& c, CohClass a) { return a *= c; }
  CohClass operator-() const;

  CohClass pow(unsigned k) const;

  bool operator==(const CohClass& o) const;

  std::string to_string() const;

 private:
  RingPtr ring_;
  Terms terms_;
};

// Finite Laurent polynomial in t with CohClass coefficients from one ring.
class LaurentClass {
 public:
  using Terms = std::map<int, CohClass>;

  explicit LaurentClass(RingPtr ring);
  LaurentClass(const CohClass& c, int t_exp = 0);

  static LaurentClass t_power(RingPtr ring, int k, const Rat& c = 1);
  static LaurentClass scalar(RingPtr ring, const Rat& c);

  const RingPtr& ring() const { return ring_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Coefficient of t^k (zero class when absent).
  CohClass at(int k) const;
  Rat coeff(const Exponents& monomial, int t_power) const;

  int min_t() const;
  int max_t() const;

  // Scalars (pure rationals times t-powers) only.
  bool is_scalar() const;
  // The pure-scalar coefficient of t^0 when is_scalar(); else throws.
  Rat scalar_value() const;

  void add_term(int k, const CohClass& c);

  LaurentClass& operator+=(const LaurentClass& o);
  LaurentClass& operator-=(const LaurentClass& o);
  LaurentClass& operator*=(const Rat& c);

  friend LaurentClass operator+(LaurentClass a, const LaurentClass& b) { return a += b; }
  friend LaurentClass operator-(LaurentClass a, const LaurentClass& b) { return a -= b; }
  friend LaurentClass operator*(const LaurentClass& a, const LaurentClass& b);
  friend LaurentClass operator*(LaurentClass a, const Rat& c) { return a *= c; }
  friend LaurentClass operator*(const Rat& c, LaurentClass a) { return a *= c; }
  LaurentClass operator-() const;

  LaurentClass pow(unsigned k) const;
  LaurentClass shifted(int k) const;  // multiply by t^k
  LaurentClass negate_t() const;      // t -> -t

  bool operator==(const LaurentClass& o) const;

  std::string to_string() const;

 private:
  RingPtr ring_;
  Terms terms_;
};

// e^{-1}, exact. Requires e = c t^k (1 + u) with exactly one pure-scalar
// monomial c t^k and u carrying nilpotent generators in every term.
LaurentClass laurent_invert(const LaurentClass& e);

Rat coeff(const LaurentClass& e, const Exponents& monomial, int t_power);

// Terms with strictly negative t-exponent.
LaurentClass neg_part(const LaurentClass& e);
// Terms with t-exponent >= 0.
LaurentClass nonneg_part(const LaurentClass& e);

}  // namespace resloc
