#include "resloc/rings.hpp"

#include <sstream>

namespace resloc {

RingSpec RingSpec::projective(int n) {
  if (n < 0) throw Error(Errc::InvalidArgument, "projective space needs n >= 0");
  RingSpec s;
  s.kind_ = Kind::Projective;
  s.n_ = n;
  s.ring_ = make_ring({"H"}, {n + 1}, 1);
  return s;
}

RingSpec RingSpec::hypersurface(int n, int l) {
  if (n < 1) throw Error(Errc::InvalidArgument, "hypersurface needs n >= 1");
  if (l < 1) throw Error(Errc::InvalidArgument, "hypersurface degree must be >= 1");
  RingSpec s;
  s.kind_ = Kind::Hypersurface;
  s.n_ = n;
  s.l_ = l;
  // dim X = n - 1 and the integral of H^{n-1} over X is the degree l.
  s.ring_ = make_ring({"H"}, {n}, l);
  return s;
}

RingSpec RingSpec::product(std::vector<RingSpec> factors) {
  if (factors.empty()) throw Error(Errc::InvalidArgument, "product needs at least one factor");
  RingSpec s;
  s.kind_ = Kind::Product;
  std::vector<std::string> names;
  std::vector<int> trunc;
  Rat scale = 1;
  for (const auto& f : factors) {
    if (f.kind_ == Kind::Product) throw Error(Errc::InvalidArgument, "nested products are not supported");
    trunc.push_back(f.ring_->truncation(0));
    scale *= f.ring_->integral_scale();
    names.push_back("H" + std::to_string(names.size() + 1));
  }
  s.factors_ = std::move(factors);
  s.ring_ = make_ring(std::move(names), std::move(trunc), scale);
  return s;
}

std::vector<int> RingSpec::c1() const {
  switch (kind_) {
    case Kind::Projective: return {n_ + 1};
    case Kind::Hypersurface: return {n_ + 1 - l_};
    case Kind::Product: {
      std::vector<int> out;
      for (const auto& f : factors_) out.push_back(f.c1().at(0));
      return out;
    }
  }
  return {};
}

std::string RingSpec::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::Projective: os << "P^" << n_; break;
    case Kind::Hypersurface: os << "X_" << l_ << " in P^" << n_; break;
    case Kind::Product:
      for (std::size_t i = 0; i < factors_.size(); ++i) os << (i ? " x " : "") << factors_[i].describe();
      break;
  }
  return os.str();
}

Json RingSpec::to_json() const {
  switch (kind_) {
    case Kind::Projective: return {{"kind", "projective"}, {"n", n_}};
    case Kind::Hypersurface: return {{"kind", "hypersurface"}, {"n", n_}, {"l", l_}};
    case Kind::Product: {
      Json fs = Json::array();
      for (const auto& f : factors_) fs.push_back(f.to_json());
      return {{"kind", "product"}, {"factors", fs}};
    }
  }
  return {};
}

RingSpec RingSpec::from_json(const Json& j) {
  try {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "projective") return projective(j.at("n").get<int>());
    if (kind == "hypersurface") return hypersurface(j.at("n").get<int>(), j.at("l").get<int>());
    if (kind == "product") {
      std::vector<RingSpec> fs;
      for (const auto& f : j.at("factors")) fs.push_back(from_json(f));
      return product(std::move(fs));
    }
    throw Error(Errc::InvalidArgument, "unknown ring kind '" + kind + "'");
  } catch (const Json::exception& e) {
    throw Error(Errc::InvalidArgument, std::string("malformed ring spec: ") + e.what());
  }
}

bool RingSpec::operator==(const RingSpec& o) const {
  return kind_ == o.kind_ && n_ == o.n_ && l_ == o.l_ && factors_ == o.factors_;
}

Rat integrate(const CohClass& c) {
  return c.coeff(c.ring()->top_monomial()) * c.ring()->integral_scale();
}

CohClass pushforward_hypersurface(const CohClass& c, const RingSpec& spec) {
  if (spec.kind() != RingSpec::Kind::Hypersurface)
    throw Error(Errc::InvalidArgument, "pushforward_hypersurface needs a hypersurface spec");
  require_same_ring(c.ring(), spec.ring(), "pushforward_hypersurface");
  const RingPtr target = RingSpec::projective(spec.n()).ring();
  CohClass out(target);
  for (const auto& [e, x] : c.terms()) out.add_term(Exponents{e[0] + 1}, x * spec.l());
  return out;
}

LaurentClass pushforward_hypersurface(const LaurentClass& c, const RingSpec& spec) {
  LaurentClass out(RingSpec::projective(spec.n()).ring());
  for (const auto& [k, coh] : c.terms()) out.add_term(k, pushforward_hypersurface(coh, spec));
  return out;
}

CohClass embed_factor(const CohClass& c, const RingSpec& product, std::size_t index) {
  if (product.kind() != RingSpec::Kind::Product || index >= product.factors().size())
    throw Error(Errc::InvalidArgument, "embed_factor needs a product spec and a valid factor index");
  require_same_ring(c.ring(), product.factors()[index].ring(), "embed_factor");
  CohClass out(product.ring());
  Exponents e(product.ring()->rank(), 0);
  for (const auto& [ce, x] : c.terms()) {
    e[index] = ce[0];
    out.add_term(e, x);
  }
  return out;
}

}  // namespace resloc
