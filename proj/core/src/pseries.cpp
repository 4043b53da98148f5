#include <uqp/pseries.hpp>

#include <stdexcept>

namespace uqp {

bool PSeries::is_zero() const
{
	for (const RatFun& c : coeff_)
		if (!c.is_zero()) return false;
	return true;
}

PSeries& PSeries::operator+=(const PSeries& o)
{
	if (o.order() != order())
		throw std::invalid_argument("PSeries: order mismatch");
	for (int k = 0; k <= order(); ++k) coeff_[k] += o.coeff_[k];
	return *this;
}

PSeries& PSeries::operator-=(const PSeries& o)
{
	if (o.order() != order())
		throw std::invalid_argument("PSeries: order mismatch");
	for (int k = 0; k <= order(); ++k) coeff_[k] -= o.coeff_[k];
	return *this;
}

PSeries PSeries::operator+(const PSeries& o) const
{
	PSeries r = *this;
	r += o;
	return r;
}

PSeries PSeries::operator-(const PSeries& o) const
{
	PSeries r = *this;
	r -= o;
	return r;
}

PSeries PSeries::operator-() const
{
	PSeries r = *this;
	for (RatFun& c : r.coeff_) c = -c;
	return r;
}

PSeries PSeries::operator*(const PSeries& o) const
{
	if (o.order() != order())
		throw std::invalid_argument("PSeries: order mismatch");
	PSeries r(order());
	for (int i = 0; i <= order(); ++i) {
		if (coeff_[i].is_zero()) continue;
		for (int j = 0; i + j <= order(); ++j) {
			if (o.coeff_[j].is_zero()) continue;
			r.coeff_[i + j] += coeff_[i] * o.coeff_[j];
		}
	}
	return r;
}

PSeries PSeries::scaled(const RatFun& c) const
{
	PSeries r = *this;
	for (RatFun& x : r.coeff_) x = x * c;
	return r;
}

PSeries PSeries::inverse() const
{
	if (coeff_[0].is_zero())
		throw std::domain_error("PSeries::inverse: zero constant term");
	PSeries r(order());
	RatFun c0inv = coeff_[0].inverse();
	r.coeff_[0] = c0inv;
	for (int k = 1; k <= order(); ++k) {
		RatFun acc;
		for (int j = 1; j <= k; ++j)
			acc += coeff_[j] * r.coeff_[k - j];
		r.coeff_[k] = -(c0inv * acc);
	}
	return r;
}

PSeries PSeries::pow(int e) const
{
	if (e < 0) return inverse().pow(-e);
	PSeries acc = one(order());
	PSeries base = *this;
	while (e) {
		if (e & 1) acc = acc * base;
		e >>= 1;
		if (e) base = base * base;
	}
	return acc;
}

PSeries PSeries::substitute(int id, const Monomial& image, const Rational& c) const
{
	PSeries r = *this;
	for (RatFun& x : r.coeff_) x = x.substitute(id, image, c);
	return r;
}

PSeries PSeries::nome_twist(const Monomial& nu) const
{
	PSeries r = *this;
	Monomial acc;
	for (int k = 1; k <= order(); ++k) {
		acc = acc * nu;
		r.coeff_[k] = r.coeff_[k] * RatFun::monomial(acc);
	}
	return r;
}

std::string PSeries::str() const
{
	std::string s;
	for (int k = 0; k <= order(); ++k) {
		if (coeff_[k].is_zero()) continue;
		if (!s.empty()) s += " + ";
		s += "(" + coeff_[k].str() + ")";
		if (k > 0) s += "*p^" + std::to_string(k);
	}
	if (s.empty()) s = "0";
	return s + " + O(p^" + std::to_string(order() + 1) + ")";
}

} // namespace uqp
