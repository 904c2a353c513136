#include "resloc/rational.hpp"

#include "resloc/errors.hpp"

namespace resloc {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw Error(Errc::InvalidArgument, "zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rat parse_rat(std::string_view text) {
  std::string s(text);
  auto bad = [&] { return Error(Errc::SyntaxError, "not a rational: '" + s + "'"); };
  if (s.empty()) throw bad();
  auto slash = s.find('/');
  auto digits_ok = [](std::string_view part, bool allow_sign) {
    if (part.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (part[0] == '-' || part[0] == '+')) i = 1;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') return false;
    return true;
  };
  std::string_view num = std::string_view(s).substr(0, slash);
  if (!digits_ok(num, true)) throw bad();
  Int p(num[0] == '+' ? std::string(num.substr(1)) : std::string(num));
  Int q = 1;
  if (slash != std::string::npos) {
    std::string_view den = std::string_view(s).substr(slash + 1);
    if (!digits_ok(den, false)) throw bad();
    q = Int(std::string(den));
    if (q == 0) throw bad();
  }
  return make_rat(p, q);
}

Int binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Int binomial_signed(long n, long k) {
  if (k < 0) return 0;
  if (n >= 0) return binomial(n, k);
  // binom(-m, k) = (-1)^k binom(m + k - 1, k)
  Int r = binomial(-n + k - 1, k);
  return (k % 2 == 0) ? r : Int(-r);
}

Int factorial(long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

}  // namespace resloc
