#pragma once

#include <uqp/monomial.hpp>
#include <uqp/rational.hpp>

#include <functional>
#include <map>
#include <string>

namespace uqp {

// Multivariate Laurent polynomial with exact rational coefficients.
class LaurentPoly {
public:
	using Terms = std::map<Monomial, Rational>;

	LaurentPoly() = default;
	explicit LaurentPoly(const Rational& c);
	explicit LaurentPoly(const Monomial& m, const Rational& c = Rational(1));

	static LaurentPoly zero() { return LaurentPoly(); }
	static LaurentPoly one() { return LaurentPoly(Rational(1)); }
	static LaurentPoly var(int id, int32_t exp = 1);

	bool is_zero() const { return terms_.empty(); }
	bool is_constant() const;
	bool is_monomial() const { return terms_.size() == 1; }
	// Constant term value (fails unless constant or zero).
	Rational constant_value() const;

	LaurentPoly operator+(const LaurentPoly& o) const;
	LaurentPoly operator-(const LaurentPoly& o) const;
	LaurentPoly operator*(const LaurentPoly& o) const;
	LaurentPoly operator-() const;
	LaurentPoly& operator+=(const LaurentPoly& o);
	LaurentPoly& operator-=(const LaurentPoly& o);

	LaurentPoly scaled(const Rational& c) const;
	LaurentPoly mul_monomial(const Monomial& m, const Rational& c = Rational(1)) const;
	// Integer power, e >= 0.
	LaurentPoly pow(int e) const;

	bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }

	// var id -> c * image, applied to every term.
	LaurentPoly substitute(int id, const Monomial& image, const Rational& c = Rational(1)) const;
	bool contains(int id) const;

	// Exact evaluation; `point` must cover every variable that occurs.
	Rational evaluate(const std::function<Rational(int)>& point) const;

	// Gcd of coefficients (positive) and common monomial divisor; used to
	// keep rational-function representatives small.
	Rational rational_content() const;
	Monomial monomial_content() const;
	LaurentPoly divide_content(const Rational& c, const Monomial& m) const;

	const Terms& terms() const { return terms_; }
	size_t size() const { return terms_.size(); }
	std::string str() const;

private:
	Terms terms_; // nonzero coefficients only
};

} // namespace uqp
