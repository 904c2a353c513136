#pragma once

// Two-point descendant series G_d(H^a, t) from a J-function, the resulting
// two-point invariants, and small quantum multiplication by divisors.

#include <map>
#include <string>
#include <vector>

#include "resloc/jfunctions.hpp"

namespace resloc {

// Truncated polynomial in q_1..q_r with rational coefficients.
using QPoly = std::map<Degree, Rat>;

struct TwoPointTable {
  RingSpec spec;
  int order = 0;
  // Monomial basis of the ring; `series` is indexed by position in it.
  std::vector<Exponents> basis;
  // G_d(H^a, t) for every degree d != 0 of total degree <= order.
  std::map<Degree, std::vector<LaurentClass>> series;

  std::size_t basis_index(const Exponents& a) const;
  const LaurentClass& g(const Degree& d, const Exponents& a) const;
  // Coefficient of t^{-k-1} in G_d(H^a, t).
  CohClass g_coeff(const Degree& d, const Exponents& a, int k) const;
  // Ring degree a + k + 1 - <d, c1> that g_{d,a,k} must have.
  int expected_degree(const Degree& d, const Exponents& a, int k) const;
};

// Solves G_d(H^a) = -neg_part(K) degree by degree, where
//   K = sum_{d1 + d2 = d} G_{d1}(F_{d2}(-t) P_{d2,a}) + F_d(-t) P_{d,a}
// and P_{d,a} = prod_i (H_i - unit d_i t)^{a_i}; G is extended linearly over
// t-Laurent scalars.
TwoPointTable reconstruct_two_point(const JFunction& j, int d_beta_unit = 1);

// neg_part(G_d(H^a) + K) re-evaluated from the stored table; zero when the
// reconstruction expression is a polynomial in t.
LaurentClass reconstruction_residual(const TwoPointTable& table, const JFunction& j, const Degree& d,
                                     const Exponents& a, int d_beta_unit = 1);

// <H^a, H^b>_d = integral of H^b g_{d,a,0}.
Rat two_point_invariant(const TwoPointTable& table, const Exponents& a, const Exponents& b, const Degree& d);

// |a| + |b| = dim + <d, c1> - 1, the only case where <H^a, H^b>_d can be nonzero.
bool satisfies_dimension_constraint(const TwoPointTable& table, const Exponents& a, const Exponents& b,
                                    const Degree& d);

struct InvariantEntry {
  Degree d;
  Exponents a, b;
  Rat value;
};

// Every (d, a, b) meeting the dimension constraint, ordered by d, a, b.
std::vector<InvariantEntry> invariant_list(const TwoPointTable& table);

// Quantum multiplication by the divisor H_i, as a matrix over Q[q] truncated
// at the table's order. Column a holds H_i * basis[a] in the basis.
struct QuantumMatrix {
  RingSpec spec;
  int order = 0;
  std::size_t divisor = 0;
  std::vector<Exponents> basis;
  std::vector<std::vector<QPoly>> entries;  // entries[row][column]

  // H_i * v for a coordinate vector v over Q[q].
  std::vector<QPoly> apply(const std::vector<QPoly>& v) const;
};

// Uses <H_i, H^a, H^b>_d = d_i <H^a, H^b>_d and the dual basis of the
// integration pairing.
QuantumMatrix quantum_mult_matrix(const TwoPointTable& table, std::size_t divisor = 0);

// First relation H_i^{*N} = sum_{k<N} c_k(q) H_i^{*k} among quantum powers of
// the divisor applied to 1. Errors: NoRelationFound.
struct QhRelation {
  std::size_t divisor = 0;
  int power = 0;
  std::vector<QPoly> lower;  // c_0, ..., c_{N-1}
  std::vector<std::string> q_names;
  std::string h_name;

  std::string to_string() const;
};
QhRelation qh_relation(const QuantumMatrix& m);

std::string qpoly_to_string(const QPoly& p, const std::vector<std::string>& q_names);
std::vector<std::string> q_variable_names(const RingSpec& spec);

Json invariants_to_json(const TwoPointTable& table);
std::vector<InvariantEntry> invariants_from_json(const Json& j);
std::string invariants_to_csv(const TwoPointTable& table);

Json quantum_matrix_to_json(const QuantumMatrix& m);
QuantumMatrix quantum_matrix_from_json(const Json& j);

}  // namespace resloc
