#pragma once

#include <gmpxx.h>
#include <string>

namespace uqp {

using Rational = mpq_class;

inline Rational rat(long num, long den = 1)
{
	Rational r(num, den);
	r.canonicalize();
	return r;
}

inline std::string rat_str(const Rational& r)
{
	return r.get_str();
}

// r^e for integer e (e may be negative; r must be nonzero then).
Rational rat_pow(const Rational& r, long e);

} // namespace uqp
