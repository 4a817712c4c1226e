#pragma once

#include <gmpxx.h>

namespace lukas {

// Path counts are exact, nonnegative, and unbounded in size.
using Count = mpz_class;
using Integer = mpz_class;
using Rational = mpq_class;

}  // namespace lukas
