#pragma once

// Concrete target rings: H*(P^n), the hyperplane-generated part of a degree-l
// hypersurface in P^n, and tensor products of these.

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "resloc/algebra.hpp"

namespace resloc {

// Objects keep insertion order so numeric keys print in numeric order.
using Json = nlohmann::ordered_json;

class RingSpec {
 public:
  enum class Kind { Projective, Hypersurface, Product };

  static RingSpec projective(int n);
  static RingSpec hypersurface(int n, int l);
  static RingSpec product(std::vector<RingSpec> factors);

  Kind kind() const { return kind_; }
  int n() const { return n_; }
  int l() const { return l_; }
  const std::vector<RingSpec>& factors() const { return factors_; }

  // Shared descriptor; generators H (or H1, H2, ... for products).
  const RingPtr& ring() const { return ring_; }
  int dimension() const { return ring_->top_degree(); }
  // Number of hyperplane-type generators (one per factor for products).
  std::size_t generators() const { return ring_->rank(); }

  // First Chern class of the tangent bundle as a multiple of each generator:
  // n+1 for P^n, n+1-l for a hypersurface.
  std::vector<int> c1() const;

  std::string describe() const;

  Json to_json() const;
  static RingSpec from_json(const Json& j);

  bool operator==(const RingSpec& o) const;

 private:
  RingSpec() = default;

  Kind kind_ = Kind::Projective;
  int n_ = 0;
  int l_ = 0;
  std::vector<RingSpec> factors_;
  RingPtr ring_;
};

// Coefficient of the top monomial times the ring's integral scale.
Rat integrate(const CohClass& c);

// f_* for the hypersurface inclusion: H^a -> l H^{a+1} in H*(P^n).
CohClass pushforward_hypersurface(const CohClass& c, const RingSpec& spec);
LaurentClass pushforward_hypersurface(const LaurentClass& c, const RingSpec& spec);

// Embeds a class of factor `index` into the product ring.
CohClass embed_factor(const CohClass& c, const RingSpec& product, std::size_t index);

}  // namespace resloc
