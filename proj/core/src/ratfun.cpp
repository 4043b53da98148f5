#include <uqp/ratfun.hpp>

#include <stdexcept>

namespace uqp {

RatFun::RatFun(const LaurentPoly& n, const LaurentPoly& d) : num_(n), den_(d)
{
	if (den_.is_zero())
		throw std::domain_error("RatFun: zero denominator");
	normalize();
}

void RatFun::normalize()
{
	if (num_.is_zero()) {
		den_ = LaurentPoly::one();
		return;
	}
	// Strip monomial and rational content only; never a full gcd.
	Rational cn = num_.rational_content();
	Monomial mn = num_.monomial_content();
	Rational cd = den_.rational_content();
	Monomial md = den_.monomial_content();
	num_ = num_.divide_content(cn, mn);
	den_ = den_.divide_content(cd, md);
	Rational scale(cn / cd);
	Monomial shift = mn * md.inverse();
	num_ = num_.mul_monomial(shift, scale);
	// Keep the denominator's leading coefficient positive by pushing the
	// sign into the numerator.
	if (den_.terms().begin()->second < 0) {
		num_ = -num_;
		den_ = -den_;
	}
	if (num_ == den_) {
		num_ = LaurentPoly::one();
		den_ = LaurentPoly::one();
	}
}

bool RatFun::is_one() const
{
	return num_ == den_;
}

RatFun RatFun::operator+(const RatFun& o) const
{
	RatFun r;
	if (den_ == o.den_) {
		// Fast path: shared denominator representative.
		r.num_ = num_ + o.num_;
		r.den_ = den_;
	} else {
		r.num_ = num_ * o.den_ + o.num_ * den_;
		r.den_ = den_ * o.den_;
	}
	r.normalize();
	return r;
}

RatFun RatFun::operator-(const RatFun& o) const
{
	RatFun r;
	if (den_ == o.den_) {
		r.num_ = num_ - o.num_;
		r.den_ = den_;
	} else {
		r.num_ = num_ * o.den_ - o.num_ * den_;
		r.den_ = den_ * o.den_;
	}
	r.normalize();
	return r;
}

RatFun RatFun::operator*(const RatFun& o) const
{
	RatFun r;
	r.num_ = num_ * o.num_;
	r.den_ = den_ * o.den_;
	r.normalize();
	return r;
}

RatFun RatFun::operator/(const RatFun& o) const
{
	return *this * o.inverse();
}

RatFun RatFun::operator-() const
{
	RatFun r = *this;
	r.num_ = -r.num_;
	return r;
}

RatFun& RatFun::operator+=(const RatFun& o) { return *this = *this + o; }
RatFun& RatFun::operator-=(const RatFun& o) { return *this = *this - o; }
RatFun& RatFun::operator*=(const RatFun& o) { return *this = *this * o; }

RatFun RatFun::inverse() const
{
	if (num_.is_zero())
		throw std::domain_error("RatFun::inverse: zero");
	RatFun r;
	r.num_ = den_;
	r.den_ = num_;
	r.normalize();
	return r;
}

RatFun RatFun::pow(int e) const
{
	if (e < 0) return inverse().pow(-e);
	RatFun acc = one();
	RatFun base = *this;
	while (e) {
		if (e & 1) acc = acc * base;
		e >>= 1;
		if (e) base = base * base;
	}
	return acc;
}

RatFun RatFun::scaled(const Rational& c) const
{
	RatFun r = *this;
	r.num_ = r.num_.scaled(c);
	r.normalize();
	return r;
}

RatFun RatFun::substitute(int id, const Monomial& image, const Rational& c) const
{
	RatFun r;
	r.num_ = num_.substitute(id, image, c);
	r.den_ = den_.substitute(id, image, c);
	r.normalize();
	return r;
}

bool RatFun::contains(int id) const
{
	return num_.contains(id) || den_.contains(id);
}

bool RatFun::equals(const RatFun& o) const
{
	if (same_representative(o)) return true;
	return (num_ * o.den_ - o.num_ * den_).is_zero();
}

Rational RatFun::evaluate(const std::function<Rational(int)>& point) const
{
	Rational d = den_.evaluate(point);
	if (d == 0)
		throw std::domain_error("RatFun::evaluate: denominator vanished");
	return Rational(num_.evaluate(point) / d);
}

std::string RatFun::str() const
{
	if (den_.is_constant() && den_.constant_value() == 1)
		return num_.str();
	return "(" + num_.str() + ") / (" + den_.str() + ")";
}

} // namespace uqp
