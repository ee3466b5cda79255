#include "rnc/rational.hpp"

#include "rnc/error.hpp"

namespace rnc {

Scalar frac(const Int& num, const Int& den) {
  require_input(den != 0, "rational with zero denominator");
  Scalar q(num, den);
  q.canonicalize();
  return q;
}

Scalar frac(long num, long den) { return frac(Int(num), Int(den)); }

Int factorial(unsigned n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Int binomial(unsigned n, unsigned k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Scalar parse_scalar(const std::string& text) {
  Scalar q;
  if (q.set_str(text, 10) != 0)
    throw_input("malformed rational '" + text + "'");
  require_input(q.get_den() != 0, "rational with zero denominator: '" + text + "'");
  q.canonicalize();
  return q;
}

std::string scalar_str(const Scalar& q) { return q.get_str(); }

}  // namespace rnc
