#pragma once

#include <uqp/pseries.hpp>

#include <cstdint>
#include <random>

namespace uqp {

// How to decide equality of rational-function expressions.
enum class EqualityMode {
	Exact,        // cross-multiplied symbolic subtraction
	Probabilistic // exact rational evaluation at seeded random points
};

struct EqualityOptions {
	EqualityMode mode = EqualityMode::Probabilistic;
	uint64_t seed = 0xD1A;
	int trials = 24;
};

// Seeded source of exact rational sample points for the whole variable
// universe.  Values are small nonzero rationals; re-draws on denominator
// zeros are handled by the callers via fresh trials.
class PointSource {
public:
	explicit PointSource(uint64_t seed) : rng_(seed) {}
	// A random nonzero rational with small numerator/denominator.
	Rational draw();
	// A full assignment for variables [0, nvars).
	std::vector<Rational> draw_point(int nvars);

private:
	std::mt19937_64 rng_;
};

bool ratfun_equal(const RatFun& a, const RatFun& b, const EqualityOptions& opt);
bool ratfun_is_zero(const RatFun& a, const EqualityOptions& opt);
bool pseries_equal(const PSeries& a, const PSeries& b, const EqualityOptions& opt);
bool pseries_is_zero(const PSeries& a, const EqualityOptions& opt);

// a*d == b*c without forming quotients (proportionality of pairs).
bool ratfun_proportional(const RatFun& a, const RatFun& b, const RatFun& c,
                         const RatFun& d, const EqualityOptions& opt);

} // namespace uqp
