#pragma once

#include <gmpxx.h>

#include <string>

namespace rnc {

using Int = mpz_class;

// Exact rational scalar. Invariant: always canonical (lowest terms, positive
// denominator). GMP keeps arithmetic results canonical as long as the operands
// are, so the only rule is: never build one from a raw numerator/denominator
// pair directly -- use frac() below, which canonicalizes.
using Scalar = mpq_class;

Scalar frac(const Int& num, const Int& den);
Scalar frac(long num, long den);

Int factorial(unsigned n);
Int binomial(unsigned n, unsigned k);

// Accepts "p" or "p/q" with optional sign; throws on malformed input or q = 0.
Scalar parse_scalar(const std::string& text);

// "p" or "p/q", denominator omitted when 1.
std::string scalar_str(const Scalar& q);

}  // namespace rnc
