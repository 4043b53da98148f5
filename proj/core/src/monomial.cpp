#include <uqp/monomial.hpp>
#include <uqp/vars.hpp>

#include <algorithm>
#include <stdexcept>

namespace uqp {

Rational rat_pow(const Rational& r, long e)
{
	if (e == 0) return Rational(1);
	Rational base = e < 0 ? Rational(Rational(1) / r) : r;
	unsigned long n = e < 0 ? -(unsigned long)e : (unsigned long)e;
	Rational acc(1);
	while (n) {
		if (n & 1) acc *= base;
		base *= base;
		n >>= 1;
	}
	return acc;
}

Monomial Monomial::var(int id, int32_t exp)
{
	Monomial m;
	if (exp != 0) m.terms_.push_back({int32_t(id), exp});
	return m;
}

int32_t Monomial::exponent(int id) const
{
	for (const Pair& t : terms_)
		if (t.first == id) return t.second;
	return 0;
}

Monomial Monomial::operator*(const Monomial& o) const
{
	Monomial r;
	r.terms_.reserve(terms_.size() + o.terms_.size());
	auto a = terms_.begin(), b = o.terms_.begin();
	while (a != terms_.end() && b != o.terms_.end()) {
		if (a->first < b->first) r.terms_.push_back(*a++);
		else if (b->first < a->first) r.terms_.push_back(*b++);
		else {
			int32_t e = a->second + b->second;
			if (e != 0) r.terms_.push_back({a->first, e});
			++a; ++b;
		}
	}
	r.terms_.insert(r.terms_.end(), a, terms_.end());
	r.terms_.insert(r.terms_.end(), b, o.terms_.end());
	return r;
}

Monomial Monomial::inverse() const
{
	Monomial r = *this;
	for (Pair& t : r.terms_) t.second = -t.second;
	return r;
}

Monomial Monomial::pow(int32_t e) const
{
	Monomial r;
	if (e == 0) return r;
	r = *this;
	for (Pair& t : r.terms_) t.second *= e;
	return r;
}

Monomial Monomial::substitute(int id, const Monomial& image) const
{
	int32_t e = exponent(id);
	if (e == 0) return *this;
	return drop(id) * image.pow(e);
}

Monomial Monomial::drop(int id) const
{
	Monomial r;
	r.terms_.reserve(terms_.size());
	for (const Pair& t : terms_)
		if (t.first != id) r.terms_.push_back(t);
	return r;
}

Monomial Monomial::make(std::vector<Pair> terms)
{
	std::sort(terms.begin(), terms.end());
	Monomial r;
	for (const Pair& t : terms) {
		if (!r.terms_.empty() && r.terms_.back().first == t.first)
			r.terms_.back().second += t.second;
		else
			r.terms_.push_back(t);
	}
	std::erase_if(r.terms_, [](const Pair& t) { return t.second == 0; });
	return r;
}

std::string Monomial::str() const
{
	if (terms_.empty()) return "1";
	std::string s;
	for (const Pair& t : terms_) {
		if (!s.empty()) s += "*";
		s += vars::name_of(t.first);
		if (t.second != 1) s += "^" + std::to_string(t.second);
	}
	return s;
}

Monomial q_power(const Rational& r)
{
	Rational six = r * 6;
	if (six.get_den() != 1)
		throw std::invalid_argument("q_power: exponent not in (1/6)Z");
	return Monomial::var(vars::V, int32_t(six.get_num().get_si()));
}

Monomial c_power(int uvar, const Rational& r)
{
	Rational two = r * 2;
	if (two.get_den() != 1)
		throw std::invalid_argument("c_power: exponent not in (1/2)Z");
	return Monomial::var(uvar, int32_t(two.get_num().get_si()));
}

} // namespace uqp
