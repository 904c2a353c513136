#include <doctest.h>

#include "resloc/jfunctions.hpp"

using namespace resloc;

namespace {

LaurentClass term(const RingPtr& r, const Exponents& e, int k, const Rat& c) {
  return LaurentClass(CohClass::monomial(r, e, c), k);
}

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return Errc::InvalidArgument;
}

bool all_zero(const std::vector<Rat>& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace

TEST_CASE("J-function of projective space") {
  JFunction j = j_projective(1, 2);
  const RingPtr& r = j.spec.ring();
  CHECK(j.at(0) == LaurentClass::scalar(r, 1));
  CHECK(j.at(1) == term(r, {0}, -2, 1) + term(r, {1}, -3, -2));
  CHECK(j.at(2) == term(r, {0}, -4, Rat(1, 4)) + term(r, {1}, -5, Rat(-3, 4)));
  for (int n = 1; n <= 6; ++n) {
    CHECK(j_projective(n, 0).at(0) == LaurentClass::scalar(RingSpec::projective(n).ring(), 1));
    CHECK(j_projective(n, 4).has_j_shape());
  }
}

TEST_CASE("product formula") {
  JFunction p1 = j_projective(1, 3);
  JFunction pp = j_product(p1, p1);
  const RingPtr& r = pp.spec.ring();
  CHECK(pp.spec.generators() == 2);
  CHECK(pp.at({0, 0}) == LaurentClass::scalar(r, 1));
  CHECK(pp.at({1, 0}) == term(r, {0, 0}, -2, 1) + term(r, {1, 0}, -3, -2));
  CHECK(pp.at({0, 1}) == term(r, {0, 0}, -2, 1) + term(r, {0, 1}, -3, -2));
  CHECK(pp.at({1, 1}) == pp.at({1, 0}) * pp.at({0, 1}));
  CHECK(pp.at({2, 2}).is_zero());  // beyond total degree 3
  CHECK(pp.has_j_shape());

  JFunction jp = j_product(j_projective(2, 3), j_point(5));
  CHECK(jp.order() == 3);
  for (int d = 0; d <= 3; ++d) {
    const LaurentClass fd = j_projective(2, 3).at(d);
    CHECK(jp.at({d, 0}).terms().size() == fd.terms().size());
    for (const auto& [k, c] : fd.terms())
      for (const auto& [e, x] : c.terms()) CHECK(jp.at({d, 0}).coeff({e[0], 0}, k) == x);
    if (d > 0) CHECK(jp.at({0, d}).is_zero());
  }

  JFunction triple = j_product(pp, p1);
  CHECK(triple.spec.factors().size() == 3);
  CHECK(triple.at({0, 0, 1}).coeff({0, 0, 1}, -3) == -2);
}

TEST_CASE("I-function of a hypersurface") {
  for (int n = 1; n <= 5; ++n)
    for (int l = 1; l <= n + 1; ++l) {
      IFunction i = i_function(n, l, 3);
      const RingPtr& r = i.series.ring();
      CHECK(i.series.at(0) == term(r, {1}, 0, l));
      for (const auto& [d, c] : i.series.terms())
        for (const auto& [k, coh] : c.terms()) CHECK(coh.coeff({0}) == 0);
    }

  // Numerator 5H(5H+t)...(5H+5t) over (H+t)^5.
  IFunction quintic = i_function(4, 5, 1);
  const RingPtr& r = quintic.series.ring();
  CHECK(quintic.series.at(1) == term(r, {1}, 0, 600) + term(r, {2}, -1, 3850) + term(r, {3}, -2, 2875) +
                                    term(r, {4}, -3, -5750));

  IFunction i32 = i_function(3, 2, 1);
  const RingPtr& r3 = i32.series.ring();
  const LaurentClass h(CohClass::generator(r3, 0));
  const LaurentClass t = LaurentClass::t_power(r3, 1);
  CHECK(i32.series.at(1) == h * Rat(2) * (h * Rat(2) + t) * (h * Rat(2) + t * Rat(2)) * laurent_invert((h + t).pow(4)));

  CHECK(code_of([] { i_function(3, 5, 2); }) == Errc::InvalidArgument);
}

TEST_CASE("mirror transformation: no correction below the Calabi-Yau range") {
  for (int n = 2; n <= 6; ++n)
    for (int l = 1; l < n; ++l) {
      CAPTURE(n);
      CAPTURE(l);
      IFunction i = i_function(n, l, 5);
      MirrorData m = mirror_normalize(i);
      CHECK(all_zero(m.a));
      CHECK(all_zero(m.b));
      CHECK(all_zero(m.c));
      CHECK(m.normalized.series == i.series);
      CHECK(pull_to_hypersurface(JFunction{RingSpec::projective(n), i.series}, l).has_j_shape());
    }
}

TEST_CASE("mirror transformation: Fano index one") {
  for (int n = 2; n <= 6; ++n) {
    CAPTURE(n);
    MirrorData m = mirror_normalize(i_function(n, n, 5));
    CHECK(all_zero(m.a));
    CHECK(all_zero(m.b));
    std::vector<Rat> expected(6, Rat(0));
    expected[1] = -Rat(factorial(n));
    CHECK(m.c == expected);
    CHECK(m.normalized.has_j_shape());
  }
}

TEST_CASE("mirror transformation: Calabi-Yau") {
  for (int n = 2; n <= 5; ++n) {
    CAPTURE(n);
    MirrorData m = mirror_normalize(i_function(n, n + 1, 5));
    CHECK(all_zero(m.c));
    CHECK(m.a[1] != 0);
    CHECK(m.b[1] == -Rat(factorial(n + 1)));
    CHECK(m.normalized.has_j_shape());
  }
  MirrorData q = mirror_normalize(i_function(4, 5, 2));
  CHECK(q.a[1] == -770);
  CHECK(q.b[1] == -120);
  CHECK(q.a[2] == -124925);
  CHECK(q.b[2] == -13800);
}

TEST_CASE("mirror transformation is idempotent and stable under truncation") {
  for (auto [n, l] : std::vector<std::pair<int, int>>{{3, 3}, {4, 5}, {2, 3}}) {
    MirrorData m5 = mirror_normalize(i_function(n, l, 5));
    MirrorData again = mirror_normalize(IFunction{n, l, m5.normalized.series});
    CHECK(all_zero(again.a));
    CHECK(all_zero(again.b));
    CHECK(all_zero(again.c));
    CHECK(again.normalized.series == m5.normalized.series);

    MirrorData m3 = mirror_normalize(i_function(n, l, 3));
    CHECK(m5.normalized.series.truncated(3) == m3.normalized.series);
    CHECK(std::vector<Rat>(m5.a.begin(), m5.a.begin() + 4) == m3.a);
  }
}

TEST_CASE("mirror transformation errors") {
  CHECK(code_of([] { mirror_normalize(i_function(1, 2, 2)); }) == Errc::DegenerateSystem);

  IFunction bad = i_function(4, 5, 2);
  const RingPtr r = bad.series.ring();
  bad.series.add_term(Degree{1}, term(r, {3}, 0, 1));
  CHECK(code_of([&] { mirror_normalize(bad); }) == Errc::NormalizationFailed);
}

TEST_CASE("pulling back to the hypersurface") {
  const RingSpec p4 = RingSpec::projective(4);
  const RingPtr& r = p4.ring();
  QSeries s(r, 1, 1);
  s.add_term({0}, term(r, {1}, 0, 5));
  s.add_term({1}, term(r, {4}, -2, 5));
  JFunction pulled = pull_to_hypersurface(JFunction{p4, s}, 5);
  const RingPtr& x = pulled.spec.ring();
  CHECK(pulled.at(0) == LaurentClass::scalar(x, 1));
  CHECK(pulled.at(1) == term(x, {3}, -2, 1));
  for (const auto& [d, c] : pulled.series.terms()) CHECK(pushforward_hypersurface(c, pulled.spec) == s.at(d));

  QSeries one = QSeries::one(r, 1, 1);
  CHECK(code_of([&] { pull_to_hypersurface(JFunction{p4, one}, 5); }) == Errc::NotDivisible);

  JFunction quintic = pull_to_hypersurface(mirror_normalize(i_function(4, 5, 3)).normalized, 5);
  CHECK(quintic.has_j_shape());
  CHECK(quintic.at(0) == LaurentClass::scalar(quintic.spec.ring(), 1));
}

TEST_CASE("JSON round trip") {
  JFunction j = j_projective(1, 1);
  Json doc = j.to_json();
  CHECK(doc["coefficients"]["1"]["-2"]["0"] == "1");
  CHECK(doc["coefficients"]["1"]["-3"]["1"] == "-2");
  CHECK(JFunction::from_json(doc).series == j.series);
  CHECK(JFunction::from_json(Json::parse(doc.dump())).spec == j.spec);

  JFunction pp = j_product(j_projective(1, 2), j_projective(2, 2));
  CHECK(JFunction::from_json(Json::parse(pp.to_json().dump())).series == pp.series);

  IFunction i = i_function(4, 5, 2);
  IFunction back = IFunction::from_json(Json::parse(i.to_json().dump()));
  CHECK(back.series == i.series);
  CHECK(back.l == 5);

  Json broken = doc;
  broken["coefficients"]["1"]["-2"]["0"] = "1.5";
  CHECK(code_of([&] { JFunction::from_json(broken); }) == Errc::SyntaxError);
  CHECK(code_of([] { JFunction::from_json(Json{{"D", 1}}); }) == Errc::SyntaxError);
}
