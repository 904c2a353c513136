#include "resloc/jfunctions.hpp"

#include <sstream>

#include "resloc/linsolve.hpp"

namespace resloc {

namespace {

std::string join(const std::vector<int>& v) {
  std::string out;
  for (int x : v) out += (out.empty() ? "" : ",") + std::to_string(x);
  return out;
}

std::vector<int> split(const std::string& s, std::size_t expected) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) {
    std::size_t used = 0;
    int x = 0;
    try {
      x = std::stoi(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != part.size()) throw Error(Errc::SyntaxError, "bad index \"" + s + "\"");
    out.push_back(x);
  }
  if (out.size() != expected)
    throw Error(Errc::SyntaxError, "index \"" + s + "\" should have " + std::to_string(expected) + " parts");
  return out;
}

LaurentClass h_plus_kt(const RingPtr& ring, const Rat& h_coeff, int k) {
  LaurentClass out(CohClass::generator(ring, 0) * h_coeff);
  out.add_term(1, CohClass::constant(ring, k));
  return out;
}

// 1 / prod_{k=1}^d (H + k t)^{n+1}
LaurentClass projective_coefficient(const RingPtr& ring, int n, int d) {
  LaurentClass den = LaurentClass::scalar(ring, 1);
  for (int k = 1; k <= d; ++k) den = den * h_plus_kt(ring, 1, k).pow(static_cast<unsigned>(n + 1));
  return laurent_invert(den);
}

// Re-indexes the generators of `c` starting at `offset` inside `target`.
LaurentClass embed(const LaurentClass& c, const RingPtr& target, std::size_t offset) {
  LaurentClass out(target);
  Exponents e(target->rank(), 0);
  for (const auto& [k, coh] : c.terms()) {
    CohClass acc(target);
    for (const auto& [src, x] : coh.terms()) {
      std::fill(e.begin(), e.end(), 0);
      std::copy(src.begin(), src.end(), e.begin() + static_cast<std::ptrdiff_t>(offset));
      acc.add_term(e, x);
    }
    out.add_term(k, acc);
  }
  return out;
}

std::vector<RingSpec> flat_factors(const RingSpec& s) {
  if (s.kind() == RingSpec::Kind::Product) return s.factors();
  return {s};
}

// exp(b + (c + H a)/t) I(q e^a) for fixed scalar coefficient vectors.
QSeries transform(const QSeries& i, const std::vector<Rat>& a, const std::vector<Rat>& b, const std::vector<Rat>& c) {
  const RingPtr& ring = i.ring();
  const int order = i.order();
  const CohClass h = CohClass::generator(ring, 0);
  QSeries exponent(ring, 1, order);
  QSeries shift(ring, 1, order);
  for (int d = 1; d <= order; ++d) {
    LaurentClass term = LaurentClass::scalar(ring, b[d]);
    term.add_term(-1, CohClass::constant(ring, c[d]) + h * a[d]);
    exponent.add_term(Degree{d}, term);
    shift.add_term(Degree{d}, LaurentClass::scalar(ring, a[d]));
  }
  return laurent_exp(exponent) * qseries_compose(i, shift);
}

}  // namespace

Json series_to_json(const QSeries& s) {
  Json out = Json::object();
  for (const auto& [d, c] : s.terms()) {
    Json by_t = Json::object();
    for (const auto& [k, coh] : c.terms()) {
      Json by_h = Json::object();
      for (const auto& [e, x] : coh.terms()) by_h[join(e)] = to_string(x);
      by_t[std::to_string(k)] = by_h;
    }
    out[join(d)] = by_t;
  }
  return out;
}

QSeries series_from_json(const Json& j, const RingPtr& ring, int variables, int order) {
  if (!j.is_object()) throw Error(Errc::SyntaxError, "coefficients must be an object");
  QSeries out(ring, variables, order);
  for (const auto& [dkey, by_t] : j.items()) {
    const Degree d = split(dkey, static_cast<std::size_t>(variables));
    LaurentClass c(ring);
    for (const auto& [tkey, by_h] : by_t.items()) {
      const int k = split(tkey, 1)[0];
      CohClass coh(ring);
      for (const auto& [hkey, value] : by_h.items()) {
        if (!value.is_string()) throw Error(Errc::SyntaxError, "coefficient values must be strings");
        const Exponents e = split(hkey, ring->rank());
        if (!ring->admits(e)) throw Error(Errc::SyntaxError, "monomial " + hkey + " is truncated in " + ring->describe());
        coh.add_term(e, parse_rat(value.get<std::string>()));
      }
      c.add_term(k, coh);
    }
    if (total_degree_of(d) > order) throw Error(Errc::SyntaxError, "degree " + dkey + " exceeds D");
    out.add_term(d, c);
  }
  return out;
}

bool JFunction::has_j_shape() const {
  for (const auto& [d, c] : series.terms())
    if (total_degree_of(d) > 0 && !c.is_zero() && c.max_t() > -2) return false;
  return true;
}

Json JFunction::to_json() const {
  return Json{{"ring", spec.to_json()}, {"D", order()}, {"coefficients", series_to_json(series)}};
}

JFunction JFunction::from_json(const Json& j) {
  try {
    RingSpec spec = RingSpec::from_json(j.at("ring"));
    const int order = j.at("D").get<int>();
    if (order < 0) throw Error(Errc::SyntaxError, "D must be >= 0");
    QSeries s = series_from_json(j.at("coefficients"), spec.ring(), static_cast<int>(spec.generators()), order);
    return JFunction{std::move(spec), std::move(s)};
  } catch (const Json::exception& e) {
    throw Error(Errc::SyntaxError, e.what());
  }
}

Json IFunction::to_json() const {
  return Json{{"ring", RingSpec::projective(n).to_json()},
              {"l", l},
              {"D", series.order()},
              {"coefficients", series_to_json(series)}};
}

IFunction IFunction::from_json(const Json& j) {
  try {
    RingSpec spec = RingSpec::from_json(j.at("ring"));
    if (spec.kind() != RingSpec::Kind::Projective) throw Error(Errc::SyntaxError, "I-function ring must be projective");
    const int order = j.at("D").get<int>();
    if (order < 0) throw Error(Errc::SyntaxError, "D must be >= 0");
    return IFunction{spec.n(), j.at("l").get<int>(), series_from_json(j.at("coefficients"), spec.ring(), 1, order)};
  } catch (const Json::exception& e) {
    throw Error(Errc::SyntaxError, e.what());
  }
}

Json MirrorData::to_json() const {
  auto list = [](const std::vector<Rat>& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(resloc::to_string(x));
    return out;
  };
  return Json{{"n", n}, {"l", l}, {"a", list(a)}, {"b", list(b)}, {"c", list(c)}, {"normalized", normalized.to_json()}};
}

JFunction j_projective(int n, int order) {
  if (n < 1) throw Error(Errc::InvalidArgument, "j_projective needs n >= 1");
  if (order < 0) throw Error(Errc::InvalidArgument, "truncation order must be >= 0");
  RingSpec spec = RingSpec::projective(n);
  QSeries s(spec.ring(), 1, order);
  for (int d = 0; d <= order; ++d) s.add_term(Degree{d}, projective_coefficient(spec.ring(), n, d));
  return JFunction{std::move(spec), std::move(s)};
}

JFunction j_point(int order) {
  if (order < 0) throw Error(Errc::InvalidArgument, "truncation order must be >= 0");
  RingSpec spec = RingSpec::projective(0);
  return JFunction{spec, QSeries::one(spec.ring(), 1, order)};
}

JFunction j_product(const JFunction& a, const JFunction& b) {
  std::vector<RingSpec> factors = flat_factors(a.spec);
  const std::size_t offset = factors.size();
  for (auto& f : flat_factors(b.spec)) factors.push_back(std::move(f));
  RingSpec spec = RingSpec::product(std::move(factors));
  const RingPtr& ring = spec.ring();
  const int order = std::min(a.order(), b.order());
  QSeries s(ring, static_cast<int>(spec.generators()), order);
  for (const auto& [da, ca] : a.series.terms()) {
    const LaurentClass ea = embed(ca, ring, 0);
    for (const auto& [db, cb] : b.series.terms()) {
      if (total_degree_of(da) + total_degree_of(db) > order) continue;
      Degree d = da;
      d.insert(d.end(), db.begin(), db.end());
      s.add_term(d, ea * embed(cb, ring, offset));
    }
  }
  return JFunction{std::move(spec), std::move(s)};
}

IFunction i_function(int n, int l, int order) {
  if (n < 1) throw Error(Errc::InvalidArgument, "i_function needs n >= 1");
  if (l < 1 || l > n + 1) throw Error(Errc::InvalidArgument, "i_function needs 1 <= l <= n+1");
  if (order < 0) throw Error(Errc::InvalidArgument, "truncation order must be >= 0");
  const RingPtr ring = RingSpec::projective(n).ring();
  QSeries s(ring, 1, order);
  for (int d = 0; d <= order; ++d) {
    LaurentClass num = LaurentClass::scalar(ring, 1);
    for (int k = 0; k <= d * l; ++k) num = num * h_plus_kt(ring, l, k);
    s.add_term(Degree{d}, num * projective_coefficient(ring, n, d));
  }
  return IFunction{n, l, std::move(s)};
}

MirrorData mirror_normalize(const IFunction& in) {
  const QSeries& i = in.series;
  const int order = i.order();
  const RingPtr& ring = i.ring();
  if (ring->rank() != 1 || i.variables() != 1)
    throw Error(Errc::ArityMismatch, "mirror_normalize needs a one-generator, one-variable series");

  std::vector<Rat> sa(static_cast<std::size_t>(order) + 1, Rat(0)), sb = sa, sc = sa;

  // (H-exponent, t-exponent) conditions, in the order (b, c, a) they mostly control.
  const std::pair<int, int> targets[3] = {{1, 0}, {1, -1}, {2, -1}};
  auto conditions = [&](const QSeries& j, int d) {
    std::vector<Rat> v;
    const LaurentClass cd = j.at(d);
    for (auto [hp, tp] : targets) v.push_back(cd.coeff(Exponents{hp}, tp));
    return v;
  };

  for (int d = 1; d <= order; ++d) {
    const QSeries cut = i.truncated(d);
    auto trial = [&](int which) {
      std::vector<Rat> a = sa, b = sb, c = sc;
      a.resize(static_cast<std::size_t>(d) + 1);
      b.resize(a.size());
      c.resize(a.size());
      if (which == 0) b[d] = 1;
      if (which == 1) c[d] = 1;
      if (which == 2) a[d] = 1;
      return conditions(transform(cut, a, b, c), d);
    };
    // The order-d conditions are affine in (b_d, c_d, a_d).
    const std::vector<Rat> base = trial(-1);
    std::vector<std::vector<Rat>> mat(3, std::vector<Rat>(3));
    for (int col = 0; col < 3; ++col) {
      const std::vector<Rat> v = trial(col);
      for (int row = 0; row < 3; ++row) mat[row][col] = v[row] - base[row];
    }
    std::vector<Rat> rhs{-base[0], -base[1], -base[2]};
    SolveResult res = solve_exact(mat, rhs, 3);
    if (res.status != SolveStatus::Unique)
      throw Error(Errc::DegenerateSystem, "order-" + std::to_string(d) + " system has rank " + std::to_string(res.rank));
    sb[d] = res.x[0];
    sc[d] = res.x[1];
    sa[d] = res.x[2];
  }

  QSeries normalized = transform(i, sa, sb, sc);
  for (const auto& [d, c] : normalized.terms()) {
    if (d[0] == 0 || c.is_zero() || c.max_t() <= -2) continue;
    for (const auto& [k, coh] : c.terms())
      if (k > -2)
        throw Error(Errc::NormalizationFailed, "q^" + std::to_string(d[0]) + " keeps " + coh.to_string() + " at t^" +
                                                   std::to_string(k));
  }
  return MirrorData{in.n, in.l, std::move(sa), std::move(sb), std::move(sc),
                    JFunction{RingSpec::projective(in.n), std::move(normalized)}};
}

JFunction pull_to_hypersurface(const JFunction& pushed, int l) {
  if (pushed.spec.kind() != RingSpec::Kind::Projective)
    throw Error(Errc::InvalidArgument, "pull_to_hypersurface needs a J-function on projective space");
  RingSpec spec = RingSpec::hypersurface(pushed.spec.n(), l);
  const RingPtr& ring = spec.ring();
  QSeries s(ring, 1, pushed.order());
  for (const auto& [d, c] : pushed.series.terms()) {
    LaurentClass out(ring);
    for (const auto& [k, coh] : c.terms()) {
      CohClass acc(ring);
      for (const auto& [e, x] : coh.terms()) {
        if (e[0] == 0)
          throw Error(Errc::NotDivisible, "q^" + std::to_string(d[0]) + " coefficient has a term without H at t^" +
                                              std::to_string(k));
        acc.add_term(Exponents{e[0] - 1}, x / l);
      }
      out.add_term(k, acc);
    }
    s.add_term(d, out);
  }
  return JFunction{std::move(spec), std::move(s)};
}

}  // namespace resloc
