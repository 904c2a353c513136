#pragma once

// J-functions of projective spaces and their products, the I-function of a
// degree-l hypersurface, and the mirror transformation relating the two.

#include <vector>

#include <nlohmann/json.hpp>

#include "resloc/qseries.hpp"
#include "resloc/rings.hpp"

namespace resloc {

// sum_d F_d q^d with one quantum variable per generator of the ring.
struct JFunction {
  RingSpec spec;
  QSeries series;

  int order() const { return series.order(); }
  LaurentClass at(const Degree& d) const { return series.at(d); }
  LaurentClass at(int d) const { return series.at(d); }

  // True when every coefficient of positive degree has t-exponents <= -2.
  bool has_j_shape() const;

  Json to_json() const;
  static JFunction from_json(const Json& j);
};

// I_{X/P^n} for a degree-l hypersurface, living in H*(P^n).
struct IFunction {
  int n = 0;
  int l = 0;
  QSeries series;

  Json to_json() const;
  static IFunction from_json(const Json& j);
};

struct MirrorData {
  int n = 0;
  int l = 0;
  // Coefficients of q^0..q^D; index 0 is always 0.
  std::vector<Rat> a, b, c;
  // exp(b + (c + H a)/t) I(q e^a), still in H*(P^n).
  JFunction normalized;

  Json to_json() const;
};

// {"d": {"t_exp": {"H_exp": "num/den"}}}; multi-indices are comma-joined.
Json series_to_json(const QSeries& s);
QSeries series_from_json(const Json& j, const RingPtr& ring, int variables, int order);

// F_d = 1 / prod_{k=1}^d (H + k t)^{n+1}.
JFunction j_projective(int n, int order);

// The J-function of a point: F_0 = 1 and nothing else.
JFunction j_point(int order);

// Tensor product; the truncation is the smaller of the two.
JFunction j_product(const JFunction& a, const JFunction& b);

// I_d = prod_{k=0}^{dl}(lH + kt) / prod_{k=1}^d (H + kt)^{n+1}, 1 <= l <= n+1.
IFunction i_function(int n, int l, int order);

// Solves order by order for a, b, c in qQ[[q]] killing the H t^0, H t^-1 and
// H^2 t^-1 coefficients, then checks that every coefficient of positive degree
// has t-exponents <= -2. Errors: DegenerateSystem, NormalizationFailed.
MirrorData mirror_normalize(const IFunction& i);

// Divides every coefficient by lH, giving the J-function of the hypersurface.
// Errors: NotDivisible.
JFunction pull_to_hypersurface(const JFunction& pushed, int l);

}  // namespace resloc
