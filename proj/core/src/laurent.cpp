#include <uqp/laurent.hpp>

#include <stdexcept>

namespace uqp {

LaurentPoly::LaurentPoly(const Rational& c)
{
	if (c != 0) terms_.emplace(Monomial(), c);
}

LaurentPoly::LaurentPoly(const Monomial& m, const Rational& c)
{
	if (c != 0) terms_.emplace(m, c);
}

LaurentPoly LaurentPoly::var(int id, int32_t exp)
{
	return LaurentPoly(Monomial::var(id, exp));
}

bool LaurentPoly::is_constant() const
{
	return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational LaurentPoly::constant_value() const
{
	if (terms_.empty()) return Rational(0);
	if (!is_constant())
		throw std::logic_error("LaurentPoly::constant_value: not constant");
	return terms_.begin()->second;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o)
{
	for (const auto& [m, c] : o.terms_) {
		auto [it, fresh] = terms_.emplace(m, c);
		if (!fresh) {
			it->second += c;
			if (it->second == 0) terms_.erase(it);
		}
	}
	return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o)
{
	for (const auto& [m, c] : o.terms_) {
		auto [it, fresh] = terms_.emplace(m, -c);
		if (!fresh) {
			it->second -= c;
			if (it->second == 0) terms_.erase(it);
		}
	}
	return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const
{
	LaurentPoly r = *this;
	r += o;
	return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const
{
	LaurentPoly r = *this;
	r -= o;
	return r;
}

LaurentPoly LaurentPoly::operator-() const
{
	LaurentPoly r = *this;
	for (auto& [m, c] : r.terms_) c = -c;
	return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const
{
	LaurentPoly r;
	if (terms_.empty() || o.terms_.empty()) return r;
	// Multiply by the smaller factor term-by-term.
	const LaurentPoly& big = terms_.size() >= o.terms_.size() ? *this : o;
	const LaurentPoly& small = terms_.size() >= o.terms_.size() ? o : *this;
	for (const auto& [m, c] : small.terms_)
		r += big.mul_monomial(m, c);
	return r;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const
{
	LaurentPoly r;
	if (c == 0) return r;
	for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
	return r;
}

LaurentPoly LaurentPoly::mul_monomial(const Monomial& m, const Rational& c) const
{
	LaurentPoly r;
	if (c == 0) return r;
	for (const auto& [mm, k] : terms_) r.terms_.emplace(mm * m, k * c);
	return r;
}

LaurentPoly LaurentPoly::pow(int e) const
{
	if (e < 0) throw std::invalid_argument("LaurentPoly::pow: negative exponent");
	LaurentPoly acc = one();
	LaurentPoly base = *this;
	while (e) {
		if (e & 1) acc = acc * base;
		e >>= 1;
		if (e) base = base * base;
	}
	return acc;
}

LaurentPoly LaurentPoly::substitute(int id, const Monomial& image, const Rational& c) const
{
	LaurentPoly r;
	for (const auto& [m, k] : terms_) {
		int32_t e = m.exponent(id);
		if (e == 0) {
			r += LaurentPoly(m, k);
		} else {
			r += LaurentPoly(m.drop(id) * image.pow(e), k * rat_pow(c, e));
		}
	}
	return r;
}

bool LaurentPoly::contains(int id) const
{
	for (const auto& [m, c] : terms_)
		if (m.contains(id)) return true;
	return false;
}

Rational LaurentPoly::evaluate(const std::function<Rational(int)>& point) const
{
	Rational total(0);
	for (const auto& [m, c] : terms_) {
		Rational val = c;
		for (const auto& [id, e] : m.terms())
			val *= rat_pow(point(id), e);
		total += val;
	}
	return total;
}

Rational LaurentPoly::rational_content() const
{
	if (terms_.empty()) return Rational(1);
	mpz_class num_gcd(0), den_lcm(1);
	for (const auto& [m, c] : terms_) {
		mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
		mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
	}
	Rational r(num_gcd, den_lcm);
	r.canonicalize();
	return r;
}

Monomial LaurentPoly::monomial_content() const
{
	if (terms_.empty()) return Monomial();
	// Componentwise min of exponents over all terms (missing vars count 0).
	std::map<int32_t, int32_t> lo;
	bool first = true;
	std::map<int32_t, bool> everywhere;
	for (const auto& [m, c] : terms_) {
		std::map<int32_t, int32_t> cur;
		for (const auto& [id, e] : m.terms()) cur[id] = e;
		if (first) {
			lo.insert(cur.begin(), cur.end());
			first = false;
		} else {
			for (auto it = lo.begin(); it != lo.end();) {
				auto jt = cur.find(it->first);
				int32_t other = jt == cur.end() ? 0 : jt->second;
				it->second = std::min(it->second, other);
				++it;
			}
			for (const auto& [id, e] : cur)
				if (!lo.count(id)) lo[id] = std::min<int32_t>(0, e);
		}
	}
	std::vector<Monomial::Pair> out;
	for (const auto& [id, e] : lo)
		if (e != 0) out.push_back({id, e});
	return Monomial::make(std::move(out));
}

LaurentPoly LaurentPoly::divide_content(const Rational& c, const Monomial& m) const
{
	LaurentPoly r;
	Monomial mi = m.inverse();
	for (const auto& [mm, k] : terms_)
		r.terms_.emplace(mm * mi, Rational(k / c));
	return r;
}

std::string LaurentPoly::str() const
{
	if (terms_.empty()) return "0";
	std::string s;
	for (const auto& [m, c] : terms_) {
		if (!s.empty()) s += " + ";
		s += rat_str(c);
		if (!m.is_one()) s += "*" + m.str();
	}
	return s;
}

} // namespace uqp
