#pragma once

#include <uqp/equality.hpp>
#include <uqp/report.hpp>
#include <uqp/rootdata.hpp>

#include <map>

namespace uqp {

// The orbit-sum calculus behind the quartic/cubic Serre coefficients:
// commuting symbols g^m_n (1 <= m < n <= 4) and g^m_0 (1 <= m <= 4), a
// twisted symmetric-group action s_r(f) = g^r_{r+1} * f^{sigma_r} (indices
// swapped, g^n_m rewritten as (g^m_n)^{-1}), orbit sums over S_a, and the
// specializations to explicit rational functions in z, z1..z4.

namespace gsym {

// Variable id of g^m_n (n = 0 for the g^m_0 family).  1 <= m <= 4.
int var(int m, int n);

// Product monomial g^{m1 m2 ...}_{n1 n2 ...} as a Laurent polynomial.
LaurentPoly word(std::initializer_list<std::pair<int, int>> factors);

} // namespace gsym

// Twisted action of the generator s_r = (r, r+1), 1 <= r <= arity-1,
// extended linearly.
LaurentPoly sym_action(int arity, int r, const LaurentPoly& f);

// Orbit sum over all arity! group elements (BFS over shortest words in the
// adjacent transpositions, so the enumeration order is fixed).
LaurentPoly orbit_sum(int arity, const LaurentPoly& f);

// Numerator/denominator pair of an h-function at the generic-symbol level.
struct HSym {
	LaurentPoly num;
	LaurentPoly den;
};

// Closed form of the quadratic coefficient:
//   h2 = (g12 + 1)(g10 g20 + 1) / (g20 + g12 g10).
HSym h2_sym();
// Cubic: h3 = (orbit(g10 g20 g30) - orbit(1)) / (orbit(g20 g30) - orbit(g30)).
HSym h3_sym();
// Quartic pair: h42 is the 11-orbit-sum combination over orbit(g30 g40);
// h41 = (orbit(1) + orbit(g10..g40) + orbit(g30 g40) h42) / (orbit(g40) +
// orbit(g20 g30 g40)).
HSym h42_sym();
HSym h41_sym();

// The three generators of the ideal J (arity 4), as symbol polynomials;
// they vanish under the quartic specialization.
std::vector<LaurentPoly> j_generators();

// Uniform specialization for a Serre pair of arity a and length d = d_i:
//   g^m_n -> (1 - q^{2d} z_m/z_n)/(q^{2d} - z_m/z_n)
//   g^m_0 -> (q^{(a-1)d} - z_m/z)/(1 - q^{(a-1)d} z_m/z)
// using variables z1..z4 and z.
std::map<int, RatFun> spec_table(int arity, const Rational& d);

// Exact substitution of rational functions for the symbol variables,
// performed over the common denominator (no gcd anywhere).
RatFun specialize(const LaurentPoly& f, const std::map<int, RatFun>& images);

// The "strange formula" checks: [2], [3], [4], binom(4,2) recovered from
// orbit-sum ratios under the specialization, J-generator vanishing, the
// generic tautologies, and the per-type coefficient values.
std::vector<CheckResult> verify_strange_formulas(const EqualityOptions& opt);
std::vector<CheckResult> verify_gword_tautologies(const EqualityOptions& opt);
std::vector<CheckResult> verify_type_coefficients(const CartanData& cd,
                                                  const EqualityOptions& opt);

} // namespace uqp
