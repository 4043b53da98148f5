#pragma once

#include <uqp/laurent.hpp>

#include <string>
#include <vector>

namespace uqp {

// Finite root type X_l, family in {A,B,C,D,E,F,G}.
struct RootType {
	char family = 'A';
	int rank = 1;

	// Parses "A3", "B2", "E8", "G2", ... and validates the rank.
	static RootType parse(const std::string& s);
	std::string str() const { return family + std::to_string(rank); }
	bool operator==(const RootType&) const = default;
};

// All valid root types up to a rank bound (used by exhaustive property tests).
std::vector<RootType> all_root_types(int max_rank);

enum class Convention {
	Standard, // d per the usual labels/colabels ratio
	NS        // alternate integral choice for F4 (2,2,1,1) and G2 (3,1)
};

Convention convention_parse(const std::string& s);

// Cartan matrix A, symmetrizer entries d_i (so b_ij = d_i a_ij is
// symmetric), indices 0-based.
struct CartanData {
	RootType type;
	std::vector<std::vector<int>> A;
	std::vector<Rational> d;

	int rank() const { return int(d.size()); }
	int a(int i, int j) const { return A[size_t(i)][size_t(j)]; }
	Rational b(int i, int j) const { return d[size_t(i)] * A[size_t(i)][size_t(j)]; }
};

// Cartan data for a type under a convention.  A uses the transpose-of-
// Bourbaki orientation for B, C, F (the short-root row carries the -2)
// and [[2,-1],[-3,2]] for G2.
CartanData cartan_data(RootType t, Convention conv = Convention::Standard);

// Ordered pair (i, j) with a_ij < 0 and its Serre arity 1 - a_ij.
struct SerrePair {
	int i;
	int j;
	int arity; // 2, 3, or 4
};

std::vector<SerrePair> serre_pairs(const CartanData& cd);

// q-integers, factorials and binomials in base q_i = q^d, returned as
// Laurent polynomials in v = q^{1/6}.  d must lie in (1/6)Z.
LaurentPoly q_number(int n, const Rational& d);
LaurentPoly q_factorial(int n, const Rational& d);
LaurentPoly q_binomial(int m, int n, const Rational& d);

} // namespace uqp
