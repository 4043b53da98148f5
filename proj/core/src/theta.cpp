#include <uqp/theta.hpp>
#include <uqp/vars.hpp>

namespace uqp {

namespace {

// 1 - p^k x as a PSeries.
PSeries linear_factor(const RatFun& x, int k, int N)
{
	PSeries f = PSeries::one(N);
	if (k <= N) f[k] -= x;
	return f;
}

} // namespace

PSeries pochhammer(const RatFun& x, int N)
{
	PSeries r = PSeries::one(N);
	for (int k = 0; k <= N; ++k)
		r = r * linear_factor(x, k, N);
	return r;
}

PSeries pochhammer_shifted(const RatFun& x, int N)
{
	PSeries r = PSeries::one(N);
	for (int k = 1; k <= N; ++k)
		r = r * linear_factor(x, k, N);
	return r;
}

PSeries theta_series(const RatFun& x, int N)
{
	return pochhammer(x, N) * pochhammer_shifted(x.inverse(), N);
}

PSeries pochhammer2(const RatFun& x, const Monomial& nu, int a, int b, int N)
{
	PSeries r = PSeries::one(N);
	for (int m = 0; m + a + b <= N; ++m) {
		for (int n = 0; m + n + a + b <= N; ++n) {
			int k = m + n + a + b;
			RatFun y = x * RatFun::monomial(nu.pow(n + b));
			r = r * linear_factor(y, k, N);
		}
	}
	return r;
}

PSeries gamma_series(const RatFun& x, const Monomial& Q, int N)
{
	RatFun qx = x * RatFun::monomial(Q);
	RatFun qix = x * RatFun::monomial(Q.inverse());
	return pochhammer(qx, N) * pochhammer_shifted(qix, N).inverse();
}

PSeries wtgamma_series(const RatFun& x, const Monomial& Q, int N)
{
	RatFun qx = x * RatFun::monomial(Q);
	RatFun qix = x * RatFun::monomial(Q.inverse());
	return pochhammer_shifted(qx, N) * pochhammer_shifted(qix, N).inverse();
}

} // namespace uqp
