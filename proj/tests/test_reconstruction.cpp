#include <doctest.h>

#include "resloc/reconstruction.hpp"
#include "resloc/schubert.hpp"

using namespace resloc;

namespace {

JFunction hypersurface_j(int n, int l, int order) {
  return pull_to_hypersurface(mirror_normalize(i_function(n, l, order)).normalized, l);
}

std::vector<JFunction> targets() {
  std::vector<JFunction> out;
  for (int n = 1; n <= 4; ++n) out.push_back(j_projective(n, 4));
  for (auto [n, l] : std::vector<std::pair<int, int>>{{2, 3}, {3, 2}, {3, 3}, {3, 4}, {4, 3}, {4, 5}})
    out.push_back(hypersurface_j(n, l, 4));
  out.push_back(j_product(j_projective(1, 3), j_projective(1, 3)));
  out.push_back(j_product(j_projective(1, 3), j_projective(2, 3)));
  return out;
}

QPoly q_power(std::size_t vars, std::size_t i, const Rat& c) {
  Degree d(vars, 0);
  d[i] = 1;
  return QPoly{{d, c}};
}

}  // namespace

TEST_CASE("two-point series of P^1") {
  JFunction j = j_projective(1, 2);
  TwoPointTable t = reconstruct_two_point(j);
  const RingPtr& r = j.spec.ring();
  CHECK(t.g({1}, {1}) == LaurentClass(CohClass::constant(r, 1), -1) + LaurentClass(CohClass::generator(r, 0), -2));
  CHECK(t.g_coeff({1}, {1}, 0) == CohClass::constant(r, 1));
  CHECK(t.g_coeff({1}, {1}, 1) == CohClass::generator(r, 0));
  CHECK(t.g({1}, {0}) == -neg_part(j.at(1).negate_t()));
  CHECK(t.g({1}, {0}) == LaurentClass(CohClass::constant(r, -1), -2) + LaurentClass(CohClass::generator(r, 0) * Rat(-2), -3));

  CHECK(two_point_invariant(t, {1}, {1}, {1}) == 1);
  CHECK(two_point_invariant(t, {0}, {1}, {1}) == 0);
  CHECK(two_point_invariant(t, {1}, {1}, {2}) == 0);
}

TEST_CASE("lines through two points of P^2") {
  TwoPointTable t = reconstruct_two_point(j_projective(2, 3));
  Poly s = Poly::variable(2, 0) + Poly::variable(2, 1);
  CHECK(two_point_invariant(t, {2}, {2}, {1}) == schur_integral_oracle(2, 3, SymPoly(s.pow(2))));
  CHECK(two_point_invariant(t, {2}, {2}, {1}) == 1);
}

TEST_CASE("quintic threefold") {
  TwoPointTable t = reconstruct_two_point(hypersurface_j(4, 5, 5));
  CHECK(two_point_invariant(t, {1}, {1}, {1}) == 2875);
  CHECK(two_point_invariant(t, {1}, {1}, {1}) == grassmann_integral_residue(5, sym_power_top_chern(5)));
  // Regression snapshots.
  CHECK(two_point_invariant(t, {1}, {1}, {2}) == make_rat(4876875, 2));
  CHECK(two_point_invariant(t, {1}, {1}, {3}) == make_rat(Int("8564575000"), 3));
  CHECK(two_point_invariant(t, {1}, {1}, {4}) == make_rat(Int("15517926796875"), 4));
  CHECK(two_point_invariant(t, {1}, {1}, {5}) == Rat(Int("5732647222191200")));
  for (int d = 1; d <= 5; ++d) {
    CHECK(two_point_invariant(t, {0}, {2}, {d}) == 0);
    CHECK(two_point_invariant(t, {2}, {0}, {d}) == 0);
  }

  QuantumMatrix m = quantum_mult_matrix(t);
  // H * H = (1 + 575 q + ...) H^2
  CHECK(m.entries[2][1].at({0}) == 1);
  CHECK(m.entries[2][1].at({1}) == 575);
  CHECK(qh_relation(m).to_string() == "H^4");
}

TEST_CASE("theorem-level properties on every target") {
  for (const JFunction& j : targets()) {
    CAPTURE(j.spec.describe());
    CHECK(j.has_j_shape());
    TwoPointTable t = reconstruct_two_point(j);
    const RingPtr& r = j.spec.ring();
    for (const auto& [d, row] : t.series)
      for (const auto& a : t.basis) {
        CHECK(reconstruction_residual(t, j, d, a).is_zero());
        const LaurentClass& g = t.g(d, a);
        if (!g.is_zero()) CHECK(g.max_t() < 0);
        for (const auto& [kt, coh] : g.terms()) {
          const int k = -kt - 1;
          CHECK(t.expected_degree(d, a, k) >= 0);
          CHECK(t.expected_degree(d, a, k) <= j.spec.dimension());
          for (const auto& [e, c] : coh.terms()) CHECK(total_degree(e) == t.expected_degree(d, a, k));
        }
        for (const auto& b : t.basis) {
          CHECK(two_point_invariant(t, a, b, d) == two_point_invariant(t, b, a, d));
          const Rat raw = integrate(CohClass::monomial(r, b) * t.g_coeff(d, a, 0));
          if (raw != 0) CHECK(satisfies_dimension_constraint(t, a, b, d));
        }
      }
  }
}

TEST_CASE("quantum cohomology of projective space") {
  for (int n = 1; n <= 6; ++n) {
    TwoPointTable t = reconstruct_two_point(j_projective(n, 5));
    QuantumMatrix m = quantum_mult_matrix(t);
    for (std::size_t a = 0; a + 1 < m.basis.size(); ++a) CHECK(m.entries[a + 1][a] == QPoly{{{0}, 1}});
    QhRelation rel = qh_relation(m);
    CHECK(rel.power == n + 1);
    CHECK(rel.to_string() == "H^" + std::to_string(n + 1) + " - q");
  }
}

TEST_CASE("quantum cohomology of P^1 x P^1") {
  JFunction j = j_product(j_projective(1, 3), j_projective(1, 3));
  TwoPointTable t = reconstruct_two_point(j);
  for (std::size_t i = 0; i < 2; ++i) {
    QuantumMatrix m = quantum_mult_matrix(t, i);
    QhRelation rel = qh_relation(m);
    CHECK(rel.power == 2);
    CHECK(rel.lower[0] == q_power(2, i, 1));
    CHECK(rel.lower[1].empty());
    const std::string hi = "H" + std::to_string(i + 1);
    CHECK(rel.to_string() == hi + "^2 - q" + std::to_string(i + 1));

    // H_i * H_{other} is the classical product H1 H2.
    const Exponents other = i == 0 ? Exponents{0, 1} : Exponents{1, 0};
    const std::size_t col = t.basis_index(other);
    for (std::size_t row = 0; row < t.basis.size(); ++row) {
      const QPoly expected = t.basis[row] == Exponents{1, 1} ? QPoly{{{0, 0}, 1}} : QPoly{};
      CHECK(m.entries[row][col] == expected);
    }
  }
  // Each factor matches its own reconstruction.
  TwoPointTable p1 = reconstruct_two_point(j_projective(1, 3));
  CHECK(two_point_invariant(t, {1, 1}, {1, 0}, {1, 0}) == two_point_invariant(p1, {1}, {1}, {1}));
  CHECK(two_point_invariant(t, {1, 1}, {0, 1}, {0, 1}) == two_point_invariant(p1, {1}, {1}, {1}));
  CHECK(two_point_invariant(t, {1, 1}, {0, 1}, {1, 0}) == 0);
}

TEST_CASE("reports round-trip") {
  TwoPointTable t = reconstruct_two_point(hypersurface_j(4, 5, 3));
  Json doc = Json::parse(invariants_to_json(t).dump());
  std::vector<InvariantEntry> back = invariants_from_json(doc);
  std::vector<InvariantEntry> direct = invariant_list(t);
  REQUIRE(back.size() == direct.size());
  for (std::size_t i = 0; i < back.size(); ++i) {
    CHECK(back[i].d == direct[i].d);
    CHECK(back[i].a == direct[i].a);
    CHECK(back[i].b == direct[i].b);
    CHECK(back[i].value == direct[i].value);
  }
  CHECK(invariants_to_csv(t).rfind("d,a,b,value\n1,0,2,0\n1,1,1,2875\n", 0) == 0);

  TwoPointTable pp = reconstruct_two_point(j_product(j_projective(1, 2), j_projective(1, 2)));
  QuantumMatrix m = quantum_mult_matrix(pp, 1);
  QuantumMatrix m2 = quantum_matrix_from_json(Json::parse(quantum_matrix_to_json(m).dump()));
  CHECK(m2.entries == m.entries);
  CHECK(m2.basis == m.basis);
  CHECK(m2.divisor == 1);
  CHECK(qh_relation(m2).to_string() == "H2^2 - q2");
}

TEST_CASE("q-polynomial printing") {
  CHECK(qpoly_to_string({}, {"q"}) == "0");
  CHECK(qpoly_to_string({{{0}, 1}, {{1}, 575}, {{2}, Rat(-3, 2)}}, {"q"}) == "1 + 575*q - 3/2*q^2");
  CHECK(qpoly_to_string({{{1, 1}, -1}}, {"q1", "q2"}) == "-q1*q2");
}
