#include "resloc/qseries.hpp"

#include <numeric>

namespace resloc {

int total_degree_of(const Degree& d) { return std::accumulate(d.begin(), d.end(), 0); }

QSeries::QSeries(RingPtr ring, int variables, int order)
    : ring_(std::move(ring)), vars_(variables), order_(order) {
  if (variables < 1) throw Error(Errc::InvalidArgument, "q-series needs at least one variable");
  if (order < 0) throw Error(Errc::InvalidArgument, "q-series order must be >= 0");
}

QSeries QSeries::scalar_series(RingPtr ring, const std::vector<Rat>& coeffs, int order) {
  QSeries out(ring, 1, order);
  for (std::size_t d = 0; d < coeffs.size(); ++d)
    out.add_term(Degree{static_cast<int>(d)}, LaurentClass::scalar(ring, coeffs[d]));
  return out;
}

QSeries QSeries::one(RingPtr ring, int variables, int order) {
  QSeries out(ring, variables, order);
  out.add_term(Degree(variables, 0), LaurentClass::scalar(ring, 1));
  return out;
}

LaurentClass QSeries::at(const Degree& d) const {
  auto it = terms_.find(d);
  return it == terms_.end() ? LaurentClass(ring_) : it->second;
}

Rat QSeries::scalar_at(int d) const { return at(d).is_zero() ? Rat(0) : at(d).scalar_value(); }

std::vector<Rat> QSeries::scalar_coefficients() const {
  if (vars_ != 1) throw Error(Errc::ArityMismatch, "scalar_coefficients needs a single-variable series");
  std::vector<Rat> out(static_cast<std::size_t>(order_) + 1);
  for (int d = 0; d <= order_; ++d) out[d] = scalar_at(d);
  return out;
}

void QSeries::add_term(const Degree& d, const LaurentClass& c) {
  if (static_cast<int>(d.size()) != vars_) throw Error(Errc::ArityMismatch, "q-degree arity mismatch");
  require_same_ring(ring_, c.ring(), "QSeries term");
  if (total_degree_of(d) > order_ || c.is_zero()) return;
  auto it = terms_.find(d);
  if (it == terms_.end()) {
    terms_.emplace(d, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void QSeries::set(const Degree& d, const LaurentClass& c) {
  terms_.erase(d);
  add_term(d, c);
}

void QSeries::check_compatible(const QSeries& o, const char* where) const {
  require_same_ring(ring_, o.ring_, where);
  if (vars_ != o.vars_) throw Error(Errc::ArityMismatch, std::string(where) + ": variable count differs");
}

QSeries& QSeries::operator+=(const QSeries& o) {
  check_compatible(o, "QSeries +");
  order_ = std::min(order_, o.order_);
  *this = truncated(order_);
  for (const auto& [d, c] : o.terms_) add_term(d, c);
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) {
  check_compatible(o, "QSeries -");
  order_ = std::min(order_, o.order_);
  *this = truncated(order_);
  for (const auto& [d, c] : o.terms_) add_term(d, -c);
  return *this;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  a.check_compatible(b, "QSeries *");
  QSeries out(a.ring_, a.vars_, std::min(a.order_, b.order_));
  Degree d(a.vars_);
  for (const auto& [da, ca] : a.terms_) {
    int ta = total_degree_of(da);
    for (const auto& [db, cb] : b.terms_) {
      if (ta + total_degree_of(db) > out.order_) continue;
      for (int v = 0; v < a.vars_; ++v) d[v] = da[v] + db[v];
      out.add_term(d, ca * cb);
    }
  }
  return out;
}

QSeries operator*(const QSeries& a, const LaurentClass& c) {
  QSeries out(a.ring_, a.vars_, a.order_);
  for (const auto& [d, x] : a.terms_) out.add_term(d, x * c);
  return out;
}

QSeries operator*(const QSeries& a, const Rat& c) {
  QSeries out(a.ring_, a.vars_, a.order_);
  for (const auto& [d, x] : a.terms_) out.add_term(d, x * c);
  return out;
}

QSeries QSeries::truncated(int order) const {
  QSeries out(ring_, vars_, std::min(order, order_));
  for (const auto& [d, c] : terms_) out.add_term(d, c);
  return out;
}

bool QSeries::operator==(const QSeries& o) const {
  return same_ring(ring_, o.ring_) && vars_ == o.vars_ && order_ == o.order_ && terms_ == o.terms_;
}

QSeries laurent_exp(const QSeries& e) {
  for (const auto& [d, c] : e.terms()) {
    if (total_degree_of(d) > 0) continue;
    for (const auto& [k, coh] : c.terms()) {
      if (!coh.is_nilpotent())
        throw Error(Errc::NotExponentiable,
                    "q-degree 0 term " + coh.to_string() + " at t^" + std::to_string(k) + " is not nilpotent");
    }
  }
  QSeries sum = QSeries::one(e.ring(), e.variables(), e.order());
  QSeries term = sum;
  // Nilpotent part and q-truncation together bound the number of powers.
  const int bound = e.order() + e.ring()->top_degree() + 1;
  for (int k = 1; k <= bound; ++k) {
    term = term * e * Rat(1, k);
    if (term.is_zero()) break;
    sum += term;
  }
  return sum;
}

QSeries qseries_compose(const QSeries& f, const QSeries& s) {
  if (f.variables() != 1 || s.variables() != 1)
    throw Error(Errc::ArityMismatch, "qseries_compose needs single-variable series");
  require_same_ring(f.ring(), s.ring(), "qseries_compose");
  for (const auto& [d, c] : s.terms()) {
    if (!c.is_scalar()) throw Error(Errc::InvalidArgument, "substitution series must be pure scalar");
    if (d[0] == 0) throw Error(Errc::InvalidArgument, "substitution series must vanish at q = 0");
  }
  const int order = std::min(f.order(), s.order());
  const RingPtr& ring = f.ring();
  // q^d -> q^d exp(d s(q)).
  QSeries exp_s = laurent_exp(s.truncated(order));
  QSeries out(ring, 1, order);
  QSeries factor = QSeries::one(ring, 1, order);  // exp(s)^d
  for (int d = 0; d <= order; ++d) {
    LaurentClass fd = f.at(d);
    if (!fd.is_zero()) {
      for (const auto& [k, c] : factor.terms()) out.add_term(Degree{k[0] + d}, c * fd);
    }
    factor = factor * exp_s;
  }
  return out;
}

}  // namespace resloc
