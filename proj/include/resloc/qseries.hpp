#pragma once

#include <map>
#include <vector>

#include "resloc/algebra.hpp"

namespace resloc {

using Degree = std::vector<int>;

// Power series in r quantum variables q_1..q_r, truncated at total degree
// order(), with LaurentClass coefficients.
class QSeries {
 public:
  using Terms = std::map<Degree, LaurentClass>;

  QSeries(RingPtr ring, int variables, int order);

  // Single-variable scalar series sum_d coeffs[d] q^d.
  static QSeries scalar_series(RingPtr ring, const std::vector<Rat>& coeffs, int order);
  static QSeries one(RingPtr ring, int variables, int order);

  const RingPtr& ring() const { return ring_; }
  int variables() const { return vars_; }
  int order() const { return order_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  LaurentClass at(const Degree& d) const;
  LaurentClass at(int d) const { return at(Degree{d}); }
  // Scalar coefficient of q^d when the series is scalar-valued.
  Rat scalar_at(int d) const;
  std::vector<Rat> scalar_coefficients() const;

  void add_term(const Degree& d, const LaurentClass& c);
  void set(const Degree& d, const LaurentClass& c);

  QSeries& operator+=(const QSeries& o);
  QSeries& operator-=(const QSeries& o);
  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  friend QSeries operator*(const QSeries& a, const LaurentClass& c);
  friend QSeries operator*(const QSeries& a, const Rat& c);

  QSeries truncated(int order) const;
  bool operator==(const QSeries& o) const;

 private:
  void check_compatible(const QSeries& o, const char* where) const;

  RingPtr ring_;
  int vars_;
  int order_;
  Terms terms_;
};

int total_degree_of(const Degree& d);

// exp(e) = sum e^k / k!, exact. Every term of e must have q-degree >= 1 or
// carry a nilpotent generator.
QSeries laurent_exp(const QSeries& e);

// F(q * exp(s(q))) for single-variable F and pure-scalar s with s(0) = 0.
QSeries qseries_compose(const QSeries& f, const QSeries& s);

}  // namespace resloc
