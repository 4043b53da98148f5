#include <uqp/equality.hpp>
#include <uqp/vars.hpp>

namespace uqp {

Rational PointSource::draw()
{
	// Small nonzero rationals with numerator in [-12,12]\{0} and
	// denominator in [1,7]; keeps evaluation exact and fast.
	std::uniform_int_distribution<int> num_d(1, 12), den_d(1, 7), sign_d(0, 1);
	int n = num_d(rng_);
	int d = den_d(rng_);
	if (sign_d(rng_)) n = -n;
	return rat(n, d);
}

std::vector<Rational> PointSource::draw_point(int nvars)
{
	std::vector<Rational> pt(nvars);
	for (int i = 0; i < nvars; ++i) pt[i] = draw();
	return pt;
}

namespace {

// One probabilistic zero trial for a cross-multiplied difference.
// Returns true if the value is zero at a sampled point, false if nonzero,
// and retries internally (fresh point) when a denominator vanishes.
bool zero_at_random_point(const RatFun& f, PointSource& src)
{
	for (int attempt = 0; attempt < 64; ++attempt) {
		std::vector<Rational> pt = src.draw_point(vars::count());
		auto point = [&](int id) { return pt[size_t(id)]; };
		if (f.den().evaluate(point) == 0) continue;
		return f.num().evaluate(point) == 0;
	}
	// Pathologically vanishing denominator: fall back to the symbolic test.
	return f.is_zero();
}

} // namespace

bool ratfun_is_zero(const RatFun& a, const EqualityOptions& opt)
{
	if (a.is_zero()) return true;
	if (opt.mode == EqualityMode::Exact) return a.num().is_zero();
	PointSource src(opt.seed);
	for (int t = 0; t < opt.trials; ++t)
		if (!zero_at_random_point(a, src)) return false;
	return true;
}

bool ratfun_equal(const RatFun& a, const RatFun& b, const EqualityOptions& opt)
{
	if (a.same_representative(b)) return true;
	if (a.den() == b.den()) {
		// shared denominator representative: compare numerators
		if (opt.mode == EqualityMode::Exact) return (a.num() - b.num()).is_zero();
	}
	if (opt.mode == EqualityMode::Exact)
		return (a.num() * b.den() - b.num() * a.den()).is_zero();
	// Evaluate the cross-multiplied difference without expanding it.
	PointSource src(opt.seed);
	for (int t = 0; t < opt.trials; ++t) {
		bool decided = false, zero = false;
		for (int attempt = 0; attempt < 64 && !decided; ++attempt) {
			std::vector<Rational> pt = src.draw_point(vars::count());
			auto point = [&](int id) { return pt[size_t(id)]; };
			Rational da = a.den().evaluate(point);
			Rational db = b.den().evaluate(point);
			if (da == 0 || db == 0) continue;
			zero = a.num().evaluate(point) * db == b.num().evaluate(point) * da;
			decided = true;
		}
		if (!decided)
			return (a.num() * b.den() - b.num() * a.den()).is_zero();
		if (!zero) return false;
	}
	return true;
}

bool pseries_is_zero(const PSeries& a, const EqualityOptions& opt)
{
	for (int k = 0; k <= a.order(); ++k) {
		EqualityOptions per = opt;
		per.seed = opt.seed + uint64_t(k) * 0x9E3779B97F4A7C15ull;
		if (!ratfun_is_zero(a[k], per)) return false;
	}
	return true;
}

bool pseries_equal(const PSeries& a, const PSeries& b, const EqualityOptions& opt)
{
	if (a.order() != b.order()) return false;
	for (int k = 0; k <= a.order(); ++k) {
		EqualityOptions per = opt;
		per.seed = opt.seed + uint64_t(k) * 0x9E3779B97F4A7C15ull;
		if (!ratfun_equal(a[k], b[k], per)) return false;
	}
	return true;
}

bool ratfun_proportional(const RatFun& a, const RatFun& b, const RatFun& c,
                         const RatFun& d, const EqualityOptions& opt)
{
	return ratfun_equal(a * d, b * c, opt);
}

} // namespace uqp
