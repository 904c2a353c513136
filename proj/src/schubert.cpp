#include "resloc/schubert.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "resloc/linsolve.hpp"

namespace resloc {

WeightVector::WeightVector(std::vector<int> weights) : w_(std::move(weights)) {
  std::set<int> seen;
  for (int x : w_)
    if (!seen.insert(x).second)
      throw Error(Errc::RepeatedWeight, "weight " + std::to_string(x) + " occurs more than once");
}

int flag_fiber_dimension(int m, int n) {
  int fd = 0;
  for (int i = 2; i <= m; ++i) fd += n - i;
  return fd;
}

RingPtr flag_ring(int m, int n) {
  const int fd = flag_fiber_dimension(m, n);
  std::vector<std::string> names{"h"};
  std::vector<int> trunc{n};
  for (int s = 1; s < m; ++s) {
    names.push_back("z" + std::to_string(s));
    trunc.push_back(fd + n);
  }
  return make_ring(std::move(names), std::move(trunc));
}

RingPtr base_ring(int n) { return make_ring({"h"}, {n}); }

namespace {

void check_shape(int m, int n) {
  if (m < 2) throw Error(Errc::InvalidArgument, "flag residues need m >= 2");
  if (n <= m) throw Error(Errc::InvalidArgument, "flag residues need n > m");
}

void check_permutation(const Permutation& perm, std::size_t m) {
  std::vector<int> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t k = 0; k < sorted.size(); ++k)
    if (sorted[k] != static_cast<int>(k) || sorted.size() != m)
      throw Error(Errc::InvalidArgument, "not a permutation of 0..m-1");
}

// All permutations of 0..m-1 starting with i.
std::vector<Permutation> permutations_starting_with(int i, int m) {
  Permutation rest;
  for (int k = 0; k < m; ++k)
    if (k != i) rest.push_back(k);
  std::vector<Permutation> out;
  do {
    Permutation p{i};
    p.insert(p.end(), rest.begin(), rest.end());
    out.push_back(std::move(p));
  } while (std::next_permutation(rest.begin(), rest.end()));
  return out;
}

LaurentClass linear_in_t(const RingPtr& ring, const CohClass& constant, int t_coeff) {
  LaurentClass out(constant, 0);
  out.add_term(1, CohClass::constant(ring, t_coeff));
  return out;
}

}  // namespace

LaurentClass euler_class_fixed_flag(const Permutation& perm, const WeightVector& w, int n) {
  const int m = static_cast<int>(w.size());
  check_shape(m, n);
  check_permutation(perm, w.size());
  RingPtr ring = flag_ring(m, n);
  LaurentClass out = LaurentClass::scalar(ring, 1);
  for (int j = 0; j < m; ++j)
    for (int k = j + 1; k < m; ++k) out = out * LaurentClass::t_power(ring, 1, w[perm[k]] - w[perm[j]]);
  for (int s = 0; s + 1 < m; ++s) {
    CohClass z = CohClass::generator(ring, static_cast<std::size_t>(s) + 1);
    out = out * linear_in_t(ring, -z, w[perm[s + 1]] - w[perm[s]]);
  }
  return out;
}

LaurentClass euler_class_fixed_line(int i, const WeightVector& w, int n) {
  const int m = static_cast<int>(w.size());
  if (i < 0 || i >= m) throw Error(Errc::InvalidArgument, "fixed line index out of range");
  RingPtr ring = base_ring(n);
  CohClass h = CohClass::generator(ring, 0);
  LaurentClass out = LaurentClass::scalar(ring, 1);
  for (int s = 0; s < m; ++s) {
    if (s == i) continue;
    out = out * linear_in_t(ring, h, w[s] - w[i]).pow(static_cast<unsigned>(n));
  }
  return out;
}

CohClass ZetaTable::pushforward(const Exponents& a) const {
  const RingPtr ring = base_ring(n);
  const int excess = total_degree(a) - fiber_dimension();
  if (excess < 0 || excess >= n) return CohClass(ring);
  auto it = entries.find(a);
  if (it == entries.end()) {
    std::string key;
    for (int x : a) key += (key.empty() ? "" : ",") + std::to_string(x);
    throw Error(Errc::MissingZetaEntry, "no entry for z^(" + key + ")");
  }
  return it->second;
}

LaurentClass ZetaTable::pushforward(const LaurentClass& c) const {
  const RingPtr ring = base_ring(n);
  LaurentClass out(ring);
  for (const auto& [k, coh] : c.terms()) {
    CohClass acc(ring);
    for (const auto& [e, x] : coh.terms()) {
      Exponents a(e.begin() + 1, e.end());
      CohClass pa = pushforward(a);
      if (pa.is_zero()) continue;
      acc += CohClass::monomial(ring, Exponents{e[0]}, x) * pa;
    }
    out.add_term(k, acc);
  }
  return out;
}

Rat ZetaTable::intersection_number(int h_power, const Exponents& a) const {
  const RingPtr ring = base_ring(n);
  return (CohClass::monomial(ring, Exponents{h_power}) * pushforward(a)).coeff(Exponents{n - 1});
}

ZetaTable flag_pushforward_extract(int m, int n, const std::vector<WeightVector>& samples) {
  check_shape(m, n);
  if (samples.empty()) throw Error(Errc::RankDeficient, "no weight samples supplied");
  for (const auto& w : samples)
    if (static_cast<int>(w.size()) != m) throw Error(Errc::InvalidArgument, "weight vector length must equal m");
  const int fd = flag_fiber_dimension(m, n);

  // Unknowns pi_*(z^A) = p_A h^{|A| - fd}, grouped by j = |A| - fd.
  std::vector<std::vector<Exponents>> unknowns(static_cast<std::size_t>(n));
  std::vector<std::map<Exponents, std::size_t>> index(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    Poly all = complete_homogeneous(m - 1, fd + j);
    for (const auto& [a, c] : all.terms()) {
      index[j].emplace(a, unknowns[j].size());
      unknowns[j].push_back(a);
    }
  }

  struct Equation {
    std::vector<Rat> row;
    Rat rhs = 0;
  };
  std::vector<std::vector<Equation>> blocks(static_cast<std::size_t>(n));

  for (const auto& w : samples) {
    for (int i = 0; i < m; ++i) {
      LaurentClass lhs(flag_ring(m, n));
      for (const auto& perm : permutations_starting_with(i, m))
        lhs += laurent_invert(euler_class_fixed_flag(perm, w, n));
      const LaurentClass rhs = laurent_invert(euler_class_fixed_line(i, w, n));

      std::map<std::pair<int, int>, Equation> eqs;  // (j, t-exponent)
      auto equation = [&](int j, int k) -> Equation& {
        auto [it, fresh] = eqs.try_emplace({j, k});
        if (fresh) it->second.row.assign(unknowns[j].size(), Rat(0));
        return it->second;
      };
      for (const auto& [k, coh] : lhs.terms()) {
        for (const auto& [e, x] : coh.terms()) {
          Exponents a(e.begin() + 1, e.end());
          const int j = total_degree(a) - fd;
          if (j < 0 || j >= n) continue;
          equation(j, k).row[index[j].at(a)] += x;
        }
      }
      for (const auto& [k, coh] : rhs.terms()) {
        for (const auto& [e, x] : coh.terms()) equation(e[0], k).rhs += x;
      }
      for (auto& [key, eq] : eqs) blocks[key.first].push_back(std::move(eq));
    }
  }

  ZetaTable table;
  table.m = m;
  table.n = n;
  const RingPtr ring = base_ring(n);
  for (int j = 0; j < n; ++j) {
    std::vector<std::vector<Rat>> a;
    std::vector<Rat> b;
    for (auto& eq : blocks[j]) {
      a.push_back(std::move(eq.row));
      b.push_back(eq.rhs);
    }
    SolveResult res = solve_exact(a, b, unknowns[j].size());
    if (res.status == SolveStatus::Inconsistent)
      throw Error(Errc::Inconsistent, "no solution at h-degree " + std::to_string(j));
    if (res.status == SolveStatus::RankDeficient)
      throw Error(Errc::RankDeficient, "rank " + std::to_string(res.rank) + " < " +
                                           std::to_string(unknowns[j].size()) + " unknowns at h-degree " +
                                           std::to_string(j) + "; supply more weight samples");
    for (std::size_t u = 0; u < unknowns[j].size(); ++u)
      table.entries.emplace(unknowns[j][u], CohClass::monomial(ring, Exponents{j}, res.x[u]));
  }
  return table;
}

CohClass flag_pushforward_closed_form_m2(int n, int j) {
  const RingPtr ring = base_ring(n);
  const int k = j - n + 2;
  if (k < 0) return CohClass(ring);
  return CohClass::monomial(ring, Exponents{k}, Rat(binomial_signed(-n, k)));
}

LaurentClass flag_identity_residual(const ZetaTable& table, int i, const WeightVector& w) {
  const int m = table.m, n = table.n;
  if (static_cast<int>(w.size()) != m) throw Error(Errc::InvalidArgument, "weight vector length must equal m");
  LaurentClass lhs(flag_ring(m, n));
  for (const auto& perm : permutations_starting_with(i, m))
    lhs += laurent_invert(euler_class_fixed_flag(perm, w, n));
  return table.pushforward(lhs) - laurent_invert(euler_class_fixed_line(i, w, n));
}

Rat grassmann_integral_residue(int n, const SymPoly& tau) {
  if (tau.variables() != 2) throw Error(Errc::InvalidArgument, "the residue formula is for G(2, n)");
  if (n < 2) throw Error(Errc::InvalidArgument, "G(2, n) needs n >= 2");
  // h is kept formally up to h^{n-1}; the extracted monomial is h^{n-1} t^{-2}.
  const RingPtr ring = base_ring(n);
  const CohClass h = CohClass::generator(ring, 0);
  const LaurentClass one = LaurentClass::scalar(ring, 1);
  const LaurentClass hl(h);
  const LaurentClass h_plus_t = linear_in_t(ring, h, 1);
  LaurentClass value = tau.poly().evaluate<LaurentClass>({hl, h_plus_t}, one) * hl *
                       laurent_invert(h_plus_t.pow(static_cast<unsigned>(n)));
  return value.coeff(Exponents{n - 1}, -2);
}

Rat schur_integral_oracle(int m, int n, const SymPoly& tau) {
  if (tau.variables() != m) throw Error(Errc::InvalidArgument, "tau must have m variables");
  if (n < m) throw Error(Errc::InvalidArgument, "G(m, n) needs n >= m");
  auto expansion = schur_expand(tau);
  Partition top(static_cast<std::size_t>(n - m > 0 ? m : 0), n - m);
  auto it = expansion.find(top);
  return it == expansion.end() ? Rat(0) : it->second;
}

bool formula2_verify(int m, int n, const SymPoly& tau, const WeightVector& w, const ZetaTable& table) {
  check_shape(m, n);
  if (tau.variables() != m || static_cast<int>(w.size()) != m || table.m != m || table.n != n)
    throw Error(Errc::InvalidArgument, "formula2_verify: m/n mismatch among arguments");
  const RingPtr fring = flag_ring(m, n);
  const RingPtr bring = base_ring(n);

  // rho^* q_k = h + z_1 + ... + z_{k-1}
  std::vector<LaurentClass> pulled;
  CohClass acc = CohClass::generator(fring, 0);
  for (int k = 0; k < m; ++k) {
    if (k > 0) acc += CohClass::generator(fring, static_cast<std::size_t>(k));
    pulled.emplace_back(acc);
  }
  const LaurentClass rho_tau = tau.poly().evaluate<LaurentClass>(pulled, LaurentClass::scalar(fring, 1));

  // The left side only reaches t-exponents at or below this bound.
  const int bound = -(m * (m - 1) / 2 + m - 1);
  const CohClass h = CohClass::generator(bring, 0);
  for (int i = 0; i < m; ++i) {
    LaurentClass lhs_up(fring);
    for (const auto& perm : permutations_starting_with(i, m))
      lhs_up += rho_tau * laurent_invert(euler_class_fixed_flag(perm, w, n));
    const LaurentClass lhs = table.pushforward(lhs_up);

    std::vector<LaurentClass> shifted;
    for (int k = 0; k < m; ++k) shifted.push_back(linear_in_t(bring, h, w[k] - w[i]));
    const LaurentClass rhs = tau.poly().evaluate<LaurentClass>(shifted, LaurentClass::scalar(bring, 1)) *
                             laurent_invert(euler_class_fixed_line(i, w, n));
    LaurentClass diff = lhs - rhs;
    for (const auto& [k, coh] : diff.terms())
      if (k <= bound) return false;
  }
  return true;
}

std::vector<WeightVector> default_weight_samples(int m, int count, int first) {
  std::vector<WeightVector> out;
  for (int k = first; k < first + count; ++k) {
    std::vector<int> w(static_cast<std::size_t>(m));
    for (int v = 0; v < m; ++v) w[v] = v * v * v + (k + 2) * v * v + (3 * k + 1) * v;
    out.emplace_back(std::move(w));
  }
  return out;
}

int default_sample_count(int m, int n) {
  // Each sample contributes m equations per h-degree; the largest block has
  // C(fd + n - 1 + m - 2, m - 2) unknowns.
  const int fd = flag_fiber_dimension(m, n);
  const Int unknowns = binomial(fd + n - 1 + m - 2, m - 2);
  const long need = (unknowns.get_si() + m - 1) / m;
  return static_cast<int>(std::max(3L, need + 1));
}

}  // namespace resloc
