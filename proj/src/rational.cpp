#include "g1n/rational.hpp"

#include <stdexcept>

namespace g1n {

Rat rat(long num, long den) {
  if (den == 0) throw std::invalid_argument("rat: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

std::string rat_to_string(const Rat& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("rat_from_string: empty string");
  const auto slash = s.find('/');
  try {
    mpz_class num(slash == std::string::npos ? s : s.substr(0, slash));
    mpz_class den(slash == std::string::npos ? std::string("1")
                                             : s.substr(slash + 1));
    if (den == 0)
      throw std::invalid_argument("rat_from_string: zero denominator");
    Rat r(num);
    r /= Rat(den);
    return r;
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("rat_from_string: cannot parse '" + s + "'");
  }
}

Rat factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rat(f);
}

}  // namespace g1n
