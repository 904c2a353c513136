#include "resloc/algebra.hpp"

#include <numeric>
#include <sstream>

namespace resloc {

Ring::Ring(std::vector<std::string> names, std::vector<int> truncation, Rat integral_scale)
    : names_(std::move(names)), truncation_(std::move(truncation)), scale_(std::move(integral_scale)) {
  if (names_.size() != truncation_.size())
    throw Error(Errc::InvalidArgument, "ring generator/truncation count mismatch");
  for (int n : truncation_)
    if (n < 1) throw Error(Errc::InvalidArgument, "truncation order must be >= 1");
}

Exponents Ring::top_monomial() const {
  Exponents e(rank());
  for (std::size_t v = 0; v < rank(); ++v) e[v] = truncation_[v] - 1;
  return e;
}

int Ring::top_degree() const { return total_degree(top_monomial()); }

bool Ring::admits(const Exponents& e) const {
  if (e.size() != rank()) return false;
  for (std::size_t v = 0; v < rank(); ++v)
    if (e[v] < 0 || e[v] >= truncation_[v]) return false;
  return true;
}

std::vector<Exponents> Ring::monomial_basis() const {
  std::vector<Exponents> out;
  Exponents e(rank(), 0);
  while (true) {
    out.push_back(e);
    std::size_t v = rank();
    while (v > 0) {
      --v;
      if (++e[v] < truncation_[v]) break;
      e[v] = 0;
      if (v == 0) return out;
    }
    if (rank() == 0) return out;
  }
}

std::string Ring::describe() const {
  std::ostringstream os;
  os << "Q[";
  for (std::size_t v = 0; v < rank(); ++v) os << (v ? "," : "") << names_[v];
  os << "]/(";
  for (std::size_t v = 0; v < rank(); ++v) os << (v ? "," : "") << names_[v] << "^" << truncation_[v];
  os << ")";
  return os.str();
}

RingPtr make_ring(std::vector<std::string> names, std::vector<int> truncation, Rat integral_scale) {
  return std::make_shared<const Ring>(std::move(names), std::move(truncation), std::move(integral_scale));
}

bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || (a && b && *a == *b); }

void require_same_ring(const RingPtr& a, const RingPtr& b, const char* where) {
  if (!same_ring(a, b))
    throw Error(Errc::RingMismatch, std::string(where) + ": " + a->describe() + " vs " + b->describe());
}

int total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

// ---------------------------------------------------------------- CohClass

CohClass::CohClass(RingPtr ring) : ring_(std::move(ring)) {}

CohClass CohClass::constant(RingPtr ring, const Rat& c) {
  CohClass out(ring);
  out.add_term(ring->zero_exponents(), c);
  return out;
}

CohClass CohClass::generator(RingPtr ring, std::size_t v) {
  Exponents e = ring->zero_exponents();
  e.at(v) = 1;
  return monomial(std::move(ring), e);
}

CohClass CohClass::monomial(RingPtr ring, const Exponents& e, const Rat& c) {
  if (e.size() != ring->rank()) throw Error(Errc::RingMismatch, "monomial arity does not match ring");
  CohClass out(ring);
  out.add_term(e, c);
  return out;
}

Rat CohClass::coeff(const Exponents& e) const {
  if (e.size() != ring_->rank()) throw Error(Errc::RingMismatch, "monomial arity does not match ring");
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

Rat CohClass::scalar_part() const { return coeff(ring_->zero_exponents()); }

bool CohClass::is_scalar() const {
  return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

bool CohClass::is_nilpotent() const {
  for (const auto& [e, c] : terms_)
    if (total_degree(e) == 0) return false;
  return true;
}

bool CohClass::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = total_degree(terms_.begin()->first);
  for (const auto& [e, c] : terms_)
    if (total_degree(e) != d) return false;
  return true;
}

int CohClass::degree() const {
  if (terms_.empty()) return -1;
  if (!is_homogeneous()) throw Error(Errc::InvalidArgument, "class is not homogeneous");
  return total_degree(terms_.begin()->first);
}

void CohClass::add_term(const Exponents& e, const Rat& c) {
  if (c == 0 || !ring_->admits(e)) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

CohClass& CohClass::operator+=(const CohClass& o) {
  require_same_ring(ring_, o.ring_, "CohClass +");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

CohClass& CohClass::operator-=(const CohClass& o) {
  require_same_ring(ring_, o.ring_, "CohClass -");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

CohClass operator*(const CohClass& a, const CohClass& b) {
  require_same_ring(a.ring_, b.ring_, "CohClass *");
  CohClass out(a.ring_);
  const auto& trunc = a.ring_->truncations();
  Exponents e(a.ring_->rank());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      bool keep = true;
      for (std::size_t v = 0; v < e.size(); ++v) {
        e[v] = ea[v] + eb[v];
        if (e[v] >= trunc[v]) {
          keep = false;
          break;
        }
      }
      if (keep) out.add_term(e, ca * cb);
    }
  }
  return out;
}

CohClass& CohClass::operator*=(const CohClass& o) { return *this = *this * o; }

CohClass& CohClass::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, x] : terms_) x *= c;
  return *this;
}

CohClass CohClass::operator-() const {
  CohClass out = *this;
  for (auto& [e, x] : out.terms_) x = -x;
  return out;
}

CohClass CohClass::pow(unsigned k) const {
  CohClass out = constant(ring_, 1);
  for (unsigned i = 0; i < k; ++i) out = out * *this;
  return out;
}

bool CohClass::operator==(const CohClass& o) const {
  return same_ring(ring_, o.ring_) && terms_ == o.terms_;
}

std::string CohClass::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest degree first reads naturally for truncated rings.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rat mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool any_var = total_degree(e) > 0;
    bool wrote = false;
    if (!any_var || mag != 1) {
      os << resloc::to_string(mag);
      wrote = true;
    }
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      if (wrote) os << "*";
      os << ring_->names()[v];
      if (e[v] > 1) os << "^" << e[v];
      wrote = true;
    }
  }
  return os.str();
}

// ------------------------------------------------------------ LaurentClass

LaurentClass::LaurentClass(RingPtr ring) : ring_(std::move(ring)) {}

LaurentClass::LaurentClass(const CohClass& c, int t_exp) : ring_(c.ring()) { add_term(t_exp, c); }

LaurentClass LaurentClass::t_power(RingPtr ring, int k, const Rat& c) {
  return LaurentClass(CohClass::constant(ring, c), k);
}

LaurentClass LaurentClass::scalar(RingPtr ring, const Rat& c) { return t_power(std::move(ring), 0, c); }

CohClass LaurentClass::at(int k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? CohClass(ring_) : it->second;
}

Rat LaurentClass::coeff(const Exponents& monomial, int t_power) const {
  if (monomial.size() != ring_->rank())
    throw Error(Errc::RingMismatch, "monomial arity does not match ring " + ring_->describe());
  auto it = terms_.find(t_power);
  return it == terms_.end() ? Rat(0) : it->second.coeff(monomial);
}

int LaurentClass::min_t() const {
  if (terms_.empty()) throw Error(Errc::InvalidArgument, "min_t of zero");
  return terms_.begin()->first;
}

int LaurentClass::max_t() const {
  if (terms_.empty()) throw Error(Errc::InvalidArgument, "max_t of zero");
  return terms_.rbegin()->first;
}

bool LaurentClass::is_scalar() const {
  for (const auto& [k, c] : terms_)
    if (!c.is_scalar()) return false;
  return true;
}

Rat LaurentClass::scalar_value() const {
  for (const auto& [k, c] : terms_)
    if (k != 0 || !c.is_scalar()) throw Error(Errc::InvalidArgument, "not a pure scalar: " + to_string());
  return at(0).scalar_part();
}

void LaurentClass::add_term(int k, const CohClass& c) {
  require_same_ring(ring_, c.ring(), "LaurentClass term");
  if (c.is_zero()) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

LaurentClass& LaurentClass::operator+=(const LaurentClass& o) {
  require_same_ring(ring_, o.ring_, "LaurentClass +");
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

LaurentClass& LaurentClass::operator-=(const LaurentClass& o) {
  require_same_ring(ring_, o.ring_, "LaurentClass -");
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

LaurentClass& LaurentClass::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, x] : terms_) x *= c;
  return *this;
}

LaurentClass operator*(const LaurentClass& a, const LaurentClass& b) {
  require_same_ring(a.ring_, b.ring_, "LaurentClass *");
  LaurentClass out(a.ring_);
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) out.add_term(ka + kb, ca * cb);
  return out;
}

LaurentClass LaurentClass::operator-() const {
  LaurentClass out = *this;
  for (auto& [k, c] : out.terms_) c = -c;
  return out;
}

LaurentClass LaurentClass::pow(unsigned k) const {
  LaurentClass out = scalar(ring_, 1);
  LaurentClass base = *this;
  while (k > 0) {
    if (k & 1u) out = out * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return out;
}

LaurentClass LaurentClass::shifted(int k) const {
  LaurentClass out(ring_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e + k, c);
  return out;
}

LaurentClass LaurentClass::negate_t() const {
  LaurentClass out = *this;
  for (auto& [k, c] : out.terms_)
    if (k % 2 != 0) c = -c;
  return out;
}

bool LaurentClass::operator==(const LaurentClass& o) const {
  return same_ring(ring_, o.ring_) && terms_ == o.terms_;
}

std::string LaurentClass::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [k, raw] = *it;
    const bool simple = raw.size() == 1;
    const bool negative = simple && raw.terms().begin()->second < 0;
    const CohClass c = negative ? -raw : raw;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    const std::string body = simple ? c.to_string() : "(" + c.to_string() + ")";
    if (k == 0) {
      os << body;
      continue;
    }
    if (!(simple && c.is_scalar() && c.scalar_part() == 1)) os << body << "*";
    os << "t";
    if (k != 1) os << "^" << k;
  }
  return os.str();
}

// ------------------------------------------------------------ free functions

LaurentClass laurent_invert(const LaurentClass& e) {
  const RingPtr& ring = e.ring();
  if (e.is_zero()) throw Error(Errc::NotInvertible, "zero is not invertible");
  // Locate the unique pure-scalar monomial c t^k.
  const Exponents zero = ring->zero_exponents();
  int lead_k = 0;
  Rat lead_c = 0;
  int found = 0;
  for (const auto& [k, c] : e.terms()) {
    Rat s = c.coeff(zero);
    if (s != 0) {
      ++found;
      lead_k = k;
      lead_c = s;
    }
  }
  if (found == 0)
    throw Error(Errc::NotInvertible, "no invertible scalar part in " + e.to_string());
  if (found > 1)
    throw Error(Errc::NotInvertible, "scalar part spans several t-powers, inverse is not finite: " + e.to_string());

  // e = c t^k (1 + u), u nilpotent: e^{-1} = c^{-1} t^{-k} sum_j (-u)^j.
  Rat inv_c = 1 / lead_c;
  LaurentClass minus_u = e.shifted(-lead_k) * (-inv_c);
  minus_u.add_term(0, CohClass::constant(ring, 1));
  LaurentClass sum = LaurentClass::scalar(ring, 1);
  LaurentClass power = LaurentClass::scalar(ring, 1);
  // u^j vanishes once j exceeds the nilpotency index of the ring.
  const int bound = ring->top_degree() + 1;
  for (int j = 1; j <= bound; ++j) {
    power = power * minus_u;
    if (power.is_zero()) break;
    sum += power;
  }
  return sum.shifted(-lead_k) * inv_c;
}

Rat coeff(const LaurentClass& e, const Exponents& monomial, int t_power) {
  return e.coeff(monomial, t_power);
}

LaurentClass neg_part(const LaurentClass& e) {
  LaurentClass out(e.ring());
  for (const auto& [k, c] : e.terms())
    if (k < 0) out.add_term(k, c);
  return out;
}

LaurentClass nonneg_part(const LaurentClass& e) {
  LaurentClass out(e.ring());
  for (const auto& [k, c] : e.terms())
    if (k >= 0) out.add_term(k, c);
  return out;
}

}  // namespace resloc
