#pragma once

#include <uqp/pseries.hpp>

namespace uqp {

// Truncated infinite products in the nome p.  Arguments x must be
// invertible scalars (monomials up to a rational factor).  All series are
// exact to O(p^{N+1}).  A series in a shifted nome p' = p*nu is obtained by
// applying nome_twist(nu) afterwards.

// (x;p)_inf = prod_{k>=0} (1 - p^k x), factors with k <= N.
PSeries pochhammer(const RatFun& x, int N);

// (p x;p)_inf = prod_{k>=1} (1 - p^k x), factors with k <= N.
PSeries pochhammer_shifted(const RatFun& x, int N);

// theta(x;p) = (x;p)_inf (p x^{-1};p)_inf.
PSeries theta_series(const RatFun& x, int N);

// (x p^a p'^b; p, p')_inf = prod_{m,n>=0} (1 - x p^{m+a} p'^{n+b}) where
// p' = p*nu; factors with total p-degree m+n+a+b <= N.
PSeries pochhammer2(const RatFun& x, const Monomial& nu, int a, int b, int N);

// gamma(x;Q,p) = (Qx;p)_inf / (p Q^{-1} x;p)_inf for a monomial Q (a power
// of q).
PSeries gamma_series(const RatFun& x, const Monomial& Q, int N);

// wtgamma(x;Q,p) = (p Q x;p)_inf / (p Q^{-1} x;p)_inf; p^0 term is 1.
PSeries wtgamma_series(const RatFun& x, const Monomial& Q, int N);

} // namespace uqp
