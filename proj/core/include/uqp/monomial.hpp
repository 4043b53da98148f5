#pragma once

#include <uqp/rational.hpp>

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace uqp {

// Sparse Laurent monomial: sorted (variable id, exponent) pairs with
// nonzero exponents.  Exponents of v count sixths of a q-power, so
// q^r is v^{6r}; exponents of u / u1 / u2 / u3 count halves of a
// central charge, so q^{c/2} is u^1.
class Monomial {
public:
	using Pair = std::pair<int32_t, int32_t>;

	Monomial() = default;
	static Monomial var(int id, int32_t exp = 1);

	bool is_one() const { return terms_.empty(); }
	int32_t exponent(int id) const;

	Monomial operator*(const Monomial& o) const;
	Monomial inverse() const;
	Monomial pow(int32_t e) const;

	// Replaces variable `id` (if present) by `image`; exponent e maps to
	// image^e.
	Monomial substitute(int id, const Monomial& image) const;
	// Drops variable `id` (sets it to 1).
	Monomial drop(int id) const;
	bool contains(int id) const { return exponent(id) != 0; }

	auto operator<=>(const Monomial&) const = default;

	const std::vector<Pair>& terms() const { return terms_; }
	std::string str() const;

	// Builds from possibly-unsorted pairs, merging duplicates.
	static Monomial make(std::vector<Pair> terms);

private:
	std::vector<Pair> terms_;
};

// q^r as a monomial in v; r must have denominator dividing 6.
Monomial q_power(const Rational& r);

// u_leg^{2r}:  q^{rc_leg} for leg variable `uvar` (vars::U, U1, ...).
Monomial c_power(int uvar, const Rational& r);

} // namespace uqp
