#pragma once

#include <uqp/laurent.hpp>

namespace uqp {

// Rational function represented as an unreduced fraction num/den of Laurent
// polynomials.  No gcd computation: equality is decided by cross
// multiplication (or by random exact evaluation at the call sites that
// prefer it).  The only normalization applied is stripping monomial and
// rational content, which keeps representatives small without factoring.
class RatFun {
public:
	RatFun() : num_(), den_(LaurentPoly::one()) {}
	explicit RatFun(const Rational& c) : num_(LaurentPoly(c)), den_(LaurentPoly::one()) {}
	explicit RatFun(const LaurentPoly& n) : num_(n), den_(LaurentPoly::one()) { normalize(); }
	RatFun(const LaurentPoly& n, const LaurentPoly& d);

	static RatFun zero() { return RatFun(); }
	static RatFun one() { return RatFun(Rational(1)); }
	static RatFun var(int id, int32_t exp = 1) { return RatFun(LaurentPoly::var(id, exp)); }
	static RatFun monomial(const Monomial& m, const Rational& c = Rational(1)) {
		return RatFun(LaurentPoly(m, c));
	}

	bool is_zero() const { return num_.is_zero(); }
	bool is_one() const;

	RatFun operator+(const RatFun& o) const;
	RatFun operator-(const RatFun& o) const;
	RatFun operator*(const RatFun& o) const;
	RatFun operator/(const RatFun& o) const;
	RatFun operator-() const;
	RatFun& operator+=(const RatFun& o);
	RatFun& operator-=(const RatFun& o);
	RatFun& operator*=(const RatFun& o);

	RatFun inverse() const;
	// Integer power, any sign.
	RatFun pow(int e) const;
	RatFun scaled(const Rational& c) const;

	RatFun substitute(int id, const Monomial& image, const Rational& c = Rational(1)) const;
	bool contains(int id) const;

	// Structural identity of representatives (sufficient, not necessary).
	bool same_representative(const RatFun& o) const {
		return num_ == o.num_ && den_ == o.den_;
	}
	// Exact equality via cross multiplication.
	bool equals(const RatFun& o) const;

	// Exact evaluation; throws if the denominator vanishes at the point.
	Rational evaluate(const std::function<Rational(int)>& point) const;

	const LaurentPoly& num() const { return num_; }
	const LaurentPoly& den() const { return den_; }
	std::string str() const;

private:
	void normalize();

	LaurentPoly num_;
	LaurentPoly den_;
};

} // namespace uqp
