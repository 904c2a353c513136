#include "resloc/sympoly.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace resloc {

Poly::Poly(int variables) : vars_(variables) {
  if (variables < 1) throw Error(Errc::InvalidArgument, "polynomial needs at least one variable");
}

Poly Poly::constant(int variables, const Rat& c) {
  Poly p(variables);
  p.add_term(Exponents(variables, 0), c);
  return p;
}

Poly Poly::variable(int variables, int index) {
  Poly p(variables);
  Exponents e(variables, 0);
  e.at(index) = 1;
  p.add_term(e, 1);
  return p;
}

Rat Poly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

void Poly::add_term(const Exponents& e, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::vector<int> Poly::degrees() const {
  std::set<int> ds;
  for (const auto& [e, c] : terms_) ds.insert(total_degree(e));
  return {ds.begin(), ds.end()};
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.vars_ != vars_) throw Error(Errc::ArityMismatch, "polynomial variable count differs");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.vars_ != vars_) throw Error(Errc::ArityMismatch, "polynomial variable count differs");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.vars_ != b.vars_) throw Error(Errc::ArityMismatch, "polynomial variable count differs");
  Poly out(a.vars_);
  Exponents e(a.vars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (int v = 0; v < a.vars_; ++v) e[v] = ea[v] + eb[v];
      out.add_term(e, ca * cb);
    }
  return out;
}

Poly operator*(Poly a, const Rat& c) {
  if (c == 0) return Poly(a.vars_);
  for (auto& [e, x] : a.terms_) x *= c;
  return a;
}

Poly Poly::operator-() const { return *this * Rat(-1); }

Poly Poly::pow(unsigned k) const {
  Poly out = constant(vars_, 1);
  for (unsigned i = 0; i < k; ++i) out = out * *this;
  return out;
}

Poly Poly::swapped(int i, int j) const {
  Poly out(vars_);
  for (const auto& [e, c] : terms_) {
    Exponents x = e;
    std::swap(x.at(i), x.at(j));
    out.add_term(x, c);
  }
  return out;
}

std::optional<std::pair<int, int>> Poly::asymmetry_witness() const {
  for (int i = 0; i + 1 < vars_; ++i)
    if (!(swapped(i, i + 1) == *this)) return std::make_pair(i, i + 1);
  return std::nullopt;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    Rat mag = abs(c);
    bool wrote = false;
    if (total_degree(e) == 0 || mag != 1) {
      os << resloc::to_string(mag);
      wrote = true;
    }
    for (int v = 0; v < vars_; ++v) {
      if (e[v] == 0) continue;
      if (wrote) os << "*";
      os << "q" << v + 1;
      if (e[v] > 1) os << "^" << e[v];
      wrote = true;
    }
  }
  return os.str();
}

SymPoly::SymPoly(Poly p) : poly_(std::move(p)) {
  if (auto w = poly_.asymmetry_witness())
    throw Error(Errc::NotSymmetric,
                "swap q" + std::to_string(w->first + 1) + ",q" + std::to_string(w->second + 1) +
                    " changes the polynomial");
}

Poly complete_homogeneous(int m, int k) {
  Poly out(m);
  if (k < 0) return out;
  // Enumerate all exponent vectors of total degree k.
  Exponents e(m, 0);
  std::function<void(int, int)> rec = [&](int v, int left) {
    if (v == m - 1) {
      e[v] = left;
      out.add_term(e, 1);
      return;
    }
    for (int x = left; x >= 0; --x) {
      e[v] = x;
      rec(v + 1, left - x);
    }
  };
  rec(0, k);
  return out;
}

namespace {

int permutation_sign(const std::vector<int>& p) {
  int sign = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) sign = -sign;
  return sign;
}

Poly determinant(std::vector<std::vector<Poly>> mat, int vars) {
  const std::size_t n = mat.size();
  if (n == 0) return Poly::constant(vars, 1);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Poly out(vars);
  do {
    Poly term = Poly::constant(vars, permutation_sign(perm));
    for (std::size_t i = 0; i < n && !term.is_zero(); ++i) term = term * mat[i][perm[i]];
    out += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// sum_sigma sign(sigma) q^{sigma(e)}
Poly alternant(int m, const Exponents& e) {
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  Poly out(m);
  Exponents x(m);
  do {
    for (int v = 0; v < m; ++v) x[perm[v]] = e[v];
    out.add_term(x, permutation_sign(perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace

Poly schur_polynomial(int m, const Partition& lambda) {
  Partition lam;
  for (int p : lambda)
    if (p > 0) lam.push_back(p);
  if (!std::is_sorted(lam.rbegin(), lam.rend()))
    throw Error(Errc::InvalidArgument, "partition parts must be non-increasing");
  if (static_cast<int>(lam.size()) > m) return Poly(m);
  // Jacobi-Trudi: det[h_{lambda_i - i + j}].
  const std::size_t len = lam.size();
  std::vector<std::vector<Poly>> mat(len, std::vector<Poly>(len, Poly(m)));
  for (std::size_t i = 0; i < len; ++i)
    for (std::size_t j = 0; j < len; ++j)
      mat[i][j] = complete_homogeneous(m, lam[i] - static_cast<int>(i) + static_cast<int>(j));
  return determinant(std::move(mat), m);
}

std::map<Partition, Rat> schur_expand(const SymPoly& tau) {
  const int m = tau.variables();
  Exponents delta(m);
  for (int v = 0; v < m; ++v) delta[v] = m - 1 - v;
  Poly work = tau.poly() * alternant(m, delta);
  std::map<Partition, Rat> out;
  while (!work.is_zero()) {
    // The lexicographically largest monomial of an alternating polynomial has
    // strictly decreasing exponents.
    const Exponents lead = work.terms().rbegin()->first;
    const Rat coeff = work.terms().rbegin()->second;
    for (int v = 0; v + 1 < m; ++v)
      if (lead[v] <= lead[v + 1])
        throw Error(Errc::InexactDivision, "tau * a_delta is not alternating; tau = " + tau.poly().to_string());
    Partition lambda(m);
    for (int v = 0; v < m; ++v) lambda[v] = lead[v] - delta[v];
    work -= alternant(m, lead) * coeff;
    while (!lambda.empty() && lambda.back() == 0) lambda.pop_back();
    out[lambda] += coeff;
  }
  return out;
}

SymPoly sym_power_top_chern(int l) {
  if (l < 1) throw Error(Errc::InvalidArgument, "sym_power_top_chern needs l >= 1");
  Poly q1 = Poly::variable(2, 0), q2 = Poly::variable(2, 1);
  Poly out = Poly::constant(2, 1);
  for (int i = 0; i <= l; ++i) out = out * (q1 * Rat(i) + q2 * Rat(l - i));
  return SymPoly(std::move(out));
}

}  // namespace resloc
