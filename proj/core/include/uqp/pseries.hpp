#pragma once

#include <uqp/ratfun.hpp>

#include <vector>

namespace uqp {

// Truncated power series in the elliptic nome p with RatFun coefficients:
//   f = sum_{k=0}^{order} coeff[k] p^k  +  O(p^{order+1}).
// The nome itself is not a VarTable variable; it lives only in the grading.
class PSeries {
public:
	explicit PSeries(int order = 4) : coeff_(order + 1) {}
	PSeries(const RatFun& c0, int order) : coeff_(order + 1) { coeff_[0] = c0; }

	static PSeries zero(int order) { return PSeries(order); }
	static PSeries one(int order) { return PSeries(RatFun::one(), order); }

	int order() const { return int(coeff_.size()) - 1; }
	const RatFun& operator[](int k) const { return coeff_[k]; }
	RatFun& operator[](int k) { return coeff_[k]; }

	bool is_zero() const;

	PSeries operator+(const PSeries& o) const;
	PSeries operator-(const PSeries& o) const;
	PSeries operator*(const PSeries& o) const;
	PSeries operator-() const;
	PSeries& operator+=(const PSeries& o);
	PSeries& operator-=(const PSeries& o);

	PSeries scaled(const RatFun& c) const;
	// Multiplicative inverse; coeff[0] must be invertible as a RatFun.
	PSeries inverse() const;
	// Integer power, any sign.
	PSeries pow(int e) const;

	// Substitution on every coefficient (the nome is untouched).
	PSeries substitute(int id, const Monomial& image, const Rational& c = Rational(1)) const;
	// Nome substitution p -> nu * p for a monomial nu in the other
	// variables: coeff[k] *= nu^k.
	PSeries nome_twist(const Monomial& nu) const;

	// The p -> 0 specialization.
	const RatFun& p_limit() const { return coeff_[0]; }

	// Exact structural equality of all coefficient representatives is too
	// strong; callers use equality strategies from equality.hpp instead.
	std::string str() const;

private:
	std::vector<RatFun> coeff_;
};

} // namespace uqp
