#include <uqp/rootdata.hpp>
#include <uqp/vars.hpp>

#include <stdexcept>

namespace uqp {

namespace {

int min_rank(char family)
{
	switch (family) {
	case 'A': return 1;
	case 'B': return 2;
	case 'C': return 2;
	case 'D': return 4;
	case 'E': return 6;
	case 'F': return 4;
	case 'G': return 2;
	default: return -1;
	}
}

int max_rank(char family)
{
	switch (family) {
	case 'E': return 8;
	case 'F': return 4;
	case 'G': return 2;
	default: return 1 << 20;
	}
}

} // namespace

RootType RootType::parse(const std::string& s)
{
	if (s.size() < 2)
		throw std::invalid_argument("root type: expected family letter + rank, got '" + s + "'");
	char fam = s[0];
	if (min_rank(fam) < 0)
		throw std::invalid_argument("root type: unknown family '" + std::string(1, fam) + "'");
	int rank;
	try {
		size_t pos = 0;
		rank = std::stoi(s.substr(1), &pos);
		if (pos + 1 != s.size()) throw std::invalid_argument("");
	} catch (...) {
		throw std::invalid_argument("root type: bad rank in '" + s + "'");
	}
	if (rank < min_rank(fam) || rank > max_rank(fam))
		throw std::invalid_argument("root type: invalid rank for family in '" + s + "'");
	return RootType{fam, rank};
}

std::vector<RootType> all_root_types(int max_rank)
{
	std::vector<RootType> out;
	for (int l = 1; l <= max_rank; ++l) out.push_back({'A', l});
	for (int l = 2; l <= max_rank; ++l) out.push_back({'B', l});
	for (int l = 2; l <= max_rank; ++l) out.push_back({'C', l});
	for (int l = 4; l <= max_rank; ++l) out.push_back({'D', l});
	for (int l = 6; l <= std::min(8, max_rank); ++l) out.push_back({'E', l});
	if (max_rank >= 4) out.push_back({'F', 4});
	if (max_rank >= 2) out.push_back({'G', 2});
	return out;
}

Convention convention_parse(const std::string& s)
{
	if (s == "standard") return Convention::Standard;
	if (s == "ns") return Convention::NS;
	throw std::invalid_argument("convention: expected 'standard' or 'ns', got '" + s + "'");
}

CartanData cartan_data(RootType t, Convention conv)
{
	const int l = t.rank;
	CartanData cd;
	cd.type = t;
	cd.A.assign(size_t(l), std::vector<int>(size_t(l), 0));
	for (int i = 0; i < l; ++i) cd.A[size_t(i)][size_t(i)] = 2;
	auto link = [&](int i, int j) { // simple edge, 0-based
		cd.A[size_t(i)][size_t(j)] = -1;
		cd.A[size_t(j)][size_t(i)] = -1;
	};
	auto chain = [&](int upto) {
		for (int i = 0; i + 1 < upto; ++i) link(i, i + 1);
	};
	cd.d.assign(size_t(l), Rational(1));

	switch (t.family) {
	case 'A':
		chain(l);
		break;
	case 'B':
		// short root at node l; the short-root row carries the -2
		chain(l);
		cd.A[size_t(l - 1)][size_t(l - 2)] = -2;
		cd.d[size_t(l - 1)] = rat(1, 2);
		break;
	case 'C':
		// long root at node l
		chain(l);
		cd.A[size_t(l - 2)][size_t(l - 1)] = -2;
		cd.d[size_t(l - 1)] = rat(2);
		break;
	case 'D':
		chain(l - 1);
		link(l - 3, l - 1);
		break;
	case 'E':
		// Bourbaki numbering: 1-3-4-5-...-l with 2 attached to 4
		link(0, 2);
		for (int i = 2; i + 1 < l; ++i) link(i, i + 1);
		link(1, 3);
		break;
	case 'F':
		// nodes 1,2 long; 3,4 short; the short-root row carries the -2
		chain(4);
		cd.A[2][1] = -2;
		if (conv == Convention::NS)
			cd.d = {rat(2), rat(2), rat(1), rat(1)};
		else
			cd.d = {rat(1), rat(1), rat(1, 2), rat(1, 2)};
		break;
	case 'G':
		cd.A = {{2, -1}, {-3, 2}};
		if (conv == Convention::NS)
			cd.d = {rat(3), rat(1)};
		else
			cd.d = {rat(1), rat(1, 3)};
		break;
	}
	return cd;
}

std::vector<SerrePair> serre_pairs(const CartanData& cd)
{
	std::vector<SerrePair> out;
	for (int i = 0; i < cd.rank(); ++i)
		for (int j = 0; j < cd.rank(); ++j)
			if (i != j && cd.a(i, j) < 0)
				out.push_back({i, j, 1 - cd.a(i, j)});
	return out;
}

LaurentPoly q_number(int n, const Rational& d)
{
	if (n < 0)
		throw std::invalid_argument("q_number: negative argument");
	// [n] = q_i^{n-1} + q_i^{n-3} + ... + q_i^{1-n}
	LaurentPoly r;
	for (int k = 0; k < n; ++k)
		r += LaurentPoly(q_power(d * (n - 1 - 2 * k)));
	return r;
}

LaurentPoly q_factorial(int n, const Rational& d)
{
	LaurentPoly r = LaurentPoly::one();
	for (int k = 2; k <= n; ++k)
		r = r * q_number(k, d);
	return r;
}

LaurentPoly q_binomial(int m, int n, const Rational& d)
{
	if (n < 0 || n > m)
		throw std::invalid_argument("q_binomial: need 0 <= n <= m");
	// symmetric recurrence: C(m,n) = q_i^n C(m-1,n) + q_i^{n-m} C(m-1,n-1)
	std::vector<LaurentPoly> row(1, LaurentPoly::one());
	for (int mm = 1; mm <= m; ++mm) {
		std::vector<LaurentPoly> next(size_t(mm) + 1);
		for (int nn = 0; nn <= mm; ++nn) {
			if (nn < mm)
				next[size_t(nn)] += row[size_t(nn)].mul_monomial(q_power(d * nn));
			if (nn > 0)
				next[size_t(nn)] += row[size_t(nn) - 1].mul_monomial(q_power(d * (nn - mm)));
		}
		row = std::move(next);
	}
	return row[size_t(n)];
}

} // namespace uqp
