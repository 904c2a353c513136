#include "resloc/reconstruction.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "resloc/linsolve.hpp"

namespace resloc {

namespace {

// All degree vectors with `vars` entries and total degree in [lo, hi],
// ordered by total degree, then lexicographically.
std::vector<Degree> degrees_up_to(int vars, int lo, int hi) {
  std::vector<Degree> out;
  Degree d(static_cast<std::size_t>(vars), 0);
  for (int total = lo; total <= hi; ++total) {
    std::vector<Degree> layer;
    std::function<void(int, int)> rec = [&](int v, int left) {
      if (v == vars - 1) {
        d[v] = left;
        layer.push_back(d);
        return;
      }
      for (int x = 0; x <= left; ++x) {
        d[v] = x;
        rec(v + 1, left - x);
      }
    };
    rec(0, total);
    std::sort(layer.begin(), layer.end());
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

bool is_zero_degree(const Degree& d) {
  return std::all_of(d.begin(), d.end(), [](int x) { return x == 0; });
}

// prod_i (H_i - unit d_i t)^{a_i}
LaurentClass shifted_power(const RingPtr& ring, const Degree& d, const Exponents& a, int unit) {
  LaurentClass out = LaurentClass::scalar(ring, 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    LaurentClass factor(CohClass::generator(ring, i));
    factor.add_term(1, CohClass::constant(ring, -unit * d[i]));
    out = out * factor.pow(static_cast<unsigned>(a[i]));
  }
  return out;
}

// G_{d1} applied to X, linearly over t-Laurent scalars.
LaurentClass apply_g(const TwoPointTable& table, const std::vector<LaurentClass>& g_d1, const LaurentClass& x) {
  LaurentClass out(table.spec.ring());
  for (const auto& [k, coh] : x.terms())
    for (const auto& [e, c] : coh.terms()) out += g_d1[table.basis_index(e)].shifted(k) * c;
  return out;
}

LaurentClass expression_k(const TwoPointTable& table, const JFunction& j, const Degree& d, const Exponents& a,
                          int unit) {
  const RingPtr& ring = table.spec.ring();
  LaurentClass k = j.at(d).negate_t() * shifted_power(ring, d, a, unit);
  for (const auto& [d1, g_d1] : table.series) {
    Degree d2(d.size());
    bool fits = true;
    for (std::size_t i = 0; i < d.size(); ++i) {
      d2[i] = d[i] - d1[i];
      if (d2[i] < 0) fits = false;
    }
    if (!fits || is_zero_degree(d2)) continue;
    k += apply_g(table, g_d1, j.at(d2).negate_t() * shifted_power(ring, d2, a, unit));
  }
  return k;
}

int pairing(const Degree& d, const std::vector<int>& c1) {
  int out = 0;
  for (std::size_t i = 0; i < d.size(); ++i) out += d[i] * c1[i];
  return out;
}

std::string join(const std::vector<int>& v, char sep) {
  std::string out;
  for (int x : v) out += (out.empty() ? "" : std::string(1, sep)) + std::to_string(x);
  return out;
}

Json index_json(const std::vector<int>& v) {
  if (v.size() == 1) return v[0];
  return Json(v);
}

std::vector<int> index_from_json(const Json& j) {
  if (j.is_number_integer()) return {j.get<int>()};
  return j.get<std::vector<int>>();
}

Json qpoly_json(const QPoly& p) {
  Json out = Json::object();
  for (const auto& [d, c] : p) out[join(d, ',')] = to_string(c);
  return out;
}

QPoly qpoly_from_json(const Json& j, std::size_t vars) {
  QPoly out;
  for (const auto& [key, value] : j.items()) {
    Degree d;
    std::stringstream ss(key);
    std::string part;
    while (std::getline(ss, part, ',')) d.push_back(std::stoi(part));
    if (d.size() != vars) throw Error(Errc::SyntaxError, "q-exponent \"" + key + "\" has the wrong arity");
    out[d] += parse_rat(value.get<std::string>());
  }
  return out;
}

void qpoly_add(QPoly& p, const Degree& d, const Rat& c) {
  if (c == 0) return;
  Rat& slot = p[d];
  slot += c;
  if (slot == 0) p.erase(d);
}

QPoly qpoly_mul(const QPoly& a, const QPoly& b, int order) {
  QPoly out;
  for (const auto& [da, ca] : a)
    for (const auto& [db, cb] : b) {
      Degree d(da.size());
      for (std::size_t i = 0; i < d.size(); ++i) d[i] = da[i] + db[i];
      if (total_degree_of(d) <= order) qpoly_add(out, d, ca * cb);
    }
  return out;
}

std::string h_monomial(const std::string& name, int k) {
  if (k == 0) return "";
  return k == 1 ? name : name + "^" + std::to_string(k);
}

}  // namespace

std::size_t TwoPointTable::basis_index(const Exponents& a) const {
  auto it = std::lower_bound(basis.begin(), basis.end(), a);
  if (it == basis.end() || *it != a) throw Error(Errc::InvalidArgument, "monomial outside the ring basis");
  return static_cast<std::size_t>(it - basis.begin());
}

const LaurentClass& TwoPointTable::g(const Degree& d, const Exponents& a) const {
  auto it = series.find(d);
  if (it == series.end()) throw Error(Errc::InvalidArgument, "degree outside the reconstructed range");
  return it->second.at(basis_index(a));
}

CohClass TwoPointTable::g_coeff(const Degree& d, const Exponents& a, int k) const { return g(d, a).at(-k - 1); }

int TwoPointTable::expected_degree(const Degree& d, const Exponents& a, int k) const {
  return total_degree(a) + k + 1 - pairing(d, spec.c1());
}

TwoPointTable reconstruct_two_point(const JFunction& j, int d_beta_unit) {
  std::vector<Exponents> basis = j.spec.ring()->monomial_basis();
  std::sort(basis.begin(), basis.end());
  TwoPointTable table{j.spec, j.order(), std::move(basis), {}};
  for (const Degree& d : degrees_up_to(j.series.variables(), 1, j.order())) {
    std::vector<LaurentClass> row;
    row.reserve(table.basis.size());
    for (const Exponents& a : table.basis) row.push_back(-neg_part(expression_k(table, j, d, a, d_beta_unit)));
    table.series.emplace(d, std::move(row));
  }
  return table;
}

LaurentClass reconstruction_residual(const TwoPointTable& table, const JFunction& j, const Degree& d,
                                     const Exponents& a, int d_beta_unit) {
  return neg_part(table.g(d, a) + expression_k(table, j, d, a, d_beta_unit));
}

Rat two_point_invariant(const TwoPointTable& table, const Exponents& a, const Exponents& b, const Degree& d) {
  if (!satisfies_dimension_constraint(table, a, b, d)) return 0;
  const RingPtr& ring = table.spec.ring();
  return integrate(CohClass::monomial(ring, b) * table.g_coeff(d, a, 0));
}

bool satisfies_dimension_constraint(const TwoPointTable& table, const Exponents& a, const Exponents& b,
                                    const Degree& d) {
  return total_degree(a) + total_degree(b) == table.spec.dimension() + pairing(d, table.spec.c1()) - 1;
}

std::vector<InvariantEntry> invariant_list(const TwoPointTable& table) {
  std::vector<InvariantEntry> out;
  for (const auto& [d, row] : table.series)
    for (const auto& a : table.basis)
      for (const auto& b : table.basis)
        if (satisfies_dimension_constraint(table, a, b, d))
          out.push_back(InvariantEntry{d, a, b, two_point_invariant(table, a, b, d)});
  std::stable_sort(out.begin(), out.end(), [](const InvariantEntry& x, const InvariantEntry& y) {
    return total_degree_of(x.d) != total_degree_of(y.d) ? total_degree_of(x.d) < total_degree_of(y.d) : false;
  });
  return out;
}

std::vector<QPoly> QuantumMatrix::apply(const std::vector<QPoly>& v) const {
  std::vector<QPoly> out(basis.size());
  for (std::size_t row = 0; row < basis.size(); ++row)
    for (std::size_t col = 0; col < basis.size(); ++col)
      for (const auto& [d, c] : qpoly_mul(entries[row][col], v[col], order)) qpoly_add(out[row], d, c);
  return out;
}

QuantumMatrix quantum_mult_matrix(const TwoPointTable& table, std::size_t divisor) {
  const RingPtr& ring = table.spec.ring();
  if (divisor >= ring->rank()) throw Error(Errc::InvalidArgument, "divisor index out of range");
  QuantumMatrix m{table.spec, table.order, divisor, table.basis, {}};
  const std::size_t size = m.basis.size();
  m.entries.assign(size, std::vector<QPoly>(size));
  const Exponents top = ring->top_monomial();
  const Rat scale = ring->integral_scale();
  const Degree zero(ring->rank(), 0);

  for (std::size_t col = 0; col < size; ++col) {
    Exponents up = m.basis[col];
    up[divisor] += 1;
    if (ring->admits(up)) qpoly_add(m.entries[table.basis_index(up)][col], zero, 1);
    for (const auto& [d, row] : table.series) {
      if (d[divisor] == 0) continue;
      for (const auto& b : m.basis) {
        const Rat inv = two_point_invariant(table, m.basis[col], b, d);
        if (inv == 0) continue;
        Exponents dual(top.size());
        for (std::size_t i = 0; i < top.size(); ++i) dual[i] = top[i] - b[i];
        qpoly_add(m.entries[table.basis_index(dual)][col], d, inv * d[divisor] / scale);
      }
    }
  }
  return m;
}

QhRelation qh_relation(const QuantumMatrix& m) {
  const std::size_t size = m.basis.size();
  const int vars = static_cast<int>(m.spec.generators());
  const std::vector<Degree> monomials = degrees_up_to(vars, 0, m.order);
  const Degree zero(static_cast<std::size_t>(vars), 0);

  std::vector<std::vector<QPoly>> powers;
  std::vector<QPoly> v(size);
  v[std::lower_bound(m.basis.begin(), m.basis.end(), Exponents(static_cast<std::size_t>(vars), 0)) - m.basis.begin()]
      [zero] = 1;
  powers.push_back(v);

  const int max_power = m.spec.dimension() + 1;
  for (int n = 1; n <= max_power; ++n) {
    powers.push_back(m.apply(powers.back()));
    const std::vector<QPoly>& target = powers.back();
    // Unknowns c_{k, delta}; one equation per (basis row, q-monomial).
    const std::size_t unknowns = static_cast<std::size_t>(n) * monomials.size();
    std::vector<std::vector<Rat>> a;
    std::vector<Rat> b;
    for (std::size_t row = 0; row < size; ++row)
      for (const Degree& delta : monomials) {
        std::vector<Rat> eq(unknowns, Rat(0));
        for (int k = 0; k < n; ++k)
          for (std::size_t u = 0; u < monomials.size(); ++u) {
            Degree rest(delta.size());
            bool ok = true;
            for (std::size_t i = 0; i < delta.size(); ++i) {
              rest[i] = delta[i] - monomials[u][i];
              if (rest[i] < 0) ok = false;
            }
            if (!ok) continue;
            auto it = powers[k][row].find(rest);
            if (it != powers[k][row].end()) eq[static_cast<std::size_t>(k) * monomials.size() + u] = it->second;
          }
        auto it = target[row].find(delta);
        a.push_back(std::move(eq));
        b.push_back(it == target[row].end() ? Rat(0) : it->second);
      }
    SolveResult res = solve_exact(a, b, unknowns);
    if (res.status != SolveStatus::Unique) continue;
    QhRelation rel;
    rel.divisor = m.divisor;
    rel.power = n;
    rel.lower.assign(static_cast<std::size_t>(n), QPoly{});
    for (int k = 0; k < n; ++k)
      for (std::size_t u = 0; u < monomials.size(); ++u)
        qpoly_add(rel.lower[k], monomials[u], res.x[static_cast<std::size_t>(k) * monomials.size() + u]);
    rel.q_names = q_variable_names(m.spec);
    rel.h_name = m.spec.ring()->names()[m.divisor];
    return rel;
  }
  throw Error(Errc::NoRelationFound, "no relation among the first " + std::to_string(max_power + 1) + " powers of " +
                                         m.spec.ring()->names()[m.divisor]);
}

std::vector<std::string> q_variable_names(const RingSpec& spec) {
  if (spec.generators() == 1) return {"q"};
  std::vector<std::string> out;
  for (std::size_t i = 0; i < spec.generators(); ++i) out.push_back("q" + std::to_string(i + 1));
  return out;
}

std::string qpoly_to_string(const QPoly& p, const std::vector<std::string>& q_names) {
  if (p.empty()) return "0";
  std::vector<std::pair<Degree, Rat>> terms(p.begin(), p.end());
  std::stable_sort(terms.begin(), terms.end(),
                   [](const auto& x, const auto& y) { return total_degree_of(x.first) < total_degree_of(y.first); });
  std::string out;
  for (const auto& [d, c] : terms) {
    std::string mono;
    for (std::size_t i = 0; i < d.size(); ++i)
      if (d[i] > 0) mono += (mono.empty() ? "" : "*") + h_monomial(q_names[i], d[i]);
    const Rat mag = abs(c);
    std::string body = mono.empty() ? to_string(mag) : (mag == 1 ? mono : to_string(mag) + "*" + mono);
    if (out.empty())
      out = (c < 0 ? "-" : "") + body;
    else
      out += (c < 0 ? " - " : " + ") + body;
  }
  return out;
}

std::string QhRelation::to_string() const {
  std::string out = h_monomial(h_name, power);
  for (int k = power - 1; k >= 0; --k) {
    std::vector<std::pair<Degree, Rat>> terms(lower[k].begin(), lower[k].end());
    std::stable_sort(terms.begin(), terms.end(),
                     [](const auto& x, const auto& y) { return total_degree_of(x.first) < total_degree_of(y.first); });
    for (const auto& [d, c] : terms) {
      // The relation is H^N - sum c_k H^k, so each coefficient flips sign.
      const Rat coeff = -c;
      std::vector<std::string> factors;
      for (std::size_t i = 0; i < d.size(); ++i)
        if (d[i] > 0) factors.push_back(h_monomial(q_names[i], d[i]));
      if (k > 0) factors.push_back(h_monomial(h_name, k));
      std::string mono;
      for (const auto& f : factors) mono += (mono.empty() ? "" : "*") + f;
      const Rat mag = abs(coeff);
      std::string body = mono.empty() ? resloc::to_string(mag) : (mag == 1 ? mono : resloc::to_string(mag) + "*" + mono);
      out += (coeff < 0 ? " - " : " + ") + body;
    }
  }
  return out;
}

Json invariants_to_json(const TwoPointTable& table) {
  Json list = Json::array();
  for (const auto& e : invariant_list(table))
    list.push_back(Json{{"d", index_json(e.d)}, {"a", index_json(e.a)}, {"b", index_json(e.b)}, {"value", to_string(e.value)}});
  return Json{{"ring", table.spec.to_json()}, {"D", table.order}, {"invariants", list}};
}

std::vector<InvariantEntry> invariants_from_json(const Json& j) {
  try {
    std::vector<InvariantEntry> out;
    for (const auto& e : j.at("invariants"))
      out.push_back(InvariantEntry{index_from_json(e.at("d")), index_from_json(e.at("a")), index_from_json(e.at("b")),
                                   parse_rat(e.at("value").get<std::string>())});
    return out;
  } catch (const Json::exception& e) {
    throw Error(Errc::SyntaxError, e.what());
  }
}

std::string invariants_to_csv(const TwoPointTable& table) {
  std::string out = "d,a,b,value\n";
  for (const auto& e : invariant_list(table))
    out += join(e.d, ';') + "," + join(e.a, ';') + "," + join(e.b, ';') + "," + to_string(e.value) + "\n";
  return out;
}

Json quantum_matrix_to_json(const QuantumMatrix& m) {
  Json basis = Json::array();
  for (const auto& e : m.basis) basis.push_back(Json(e));
  Json rows = Json::array();
  for (const auto& row : m.entries) {
    Json r = Json::array();
    for (const auto& p : row) r.push_back(qpoly_json(p));
    rows.push_back(r);
  }
  return Json{{"ring", m.spec.to_json()}, {"D", m.order}, {"divisor", m.divisor}, {"basis", basis}, {"matrix", rows}};
}

QuantumMatrix quantum_matrix_from_json(const Json& j) {
  try {
    QuantumMatrix m{RingSpec::from_json(j.at("ring")), j.at("D").get<int>(), j.at("divisor").get<std::size_t>(), {}, {}};
    for (const auto& e : j.at("basis")) m.basis.push_back(e.get<std::vector<int>>());
    for (const auto& row : j.at("matrix")) {
      std::vector<QPoly> r;
      for (const auto& p : row) r.push_back(qpoly_from_json(p, m.spec.generators()));
      m.entries.push_back(std::move(r));
    }
    if (m.entries.size() != m.basis.size()) throw Error(Errc::SyntaxError, "matrix size does not match the basis");
    return m;
  } catch (const Json::exception& e) {
    throw Error(Errc::SyntaxError, e.what());
  }
}

}  // namespace resloc
