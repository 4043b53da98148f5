#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <uqp/current.hpp>
#include <uqp/serre.hpp>

#include <random>

using namespace uqp;

namespace {

const EqualityOptions kExact{EqualityMode::Exact, 0, 0};
const EqualityOptions kProb{};

Monomial mv(int id) { return Monomial::var(id); }
Monomial zratio(int a, int b) { return mv(a) * mv(b).inverse(); }

// Right-to-left bubble schedule, for the confluence test.
Word sorted_word_rl(Word w, PSeries& coeff, const ExchangeContext& ctx)
{
	w = cancel_inverses(w);
	bool changed = true;
	while (changed) {
		changed = false;
		for (size_t k = w.size(); k-- > 1;) {
			if (sym_before(w[k], w[k - 1])) {
				coeff = coeff * swap_scalar(w[k - 1], w[k], ctx);
				std::swap(w[k - 1], w[k]);
				changed = true;
			}
		}
		if (changed) w = cancel_inverses(w);
	}
	return w;
}

} // namespace

TEST_CASE("sorting an already-sorted word keeps coefficient 1") {
	StructureFunctionSet s(cartan_data(RootType{'A', 2}), 2, Mode::Theta);
	ExchangeContext ctx{&s, vars::U, Monomial()};
	CurrentExpression x(2);
	x.add({sym_psi(+1, 0, vars::Z), sym_e(0, vars::Z1), sym_e(1, vars::Z)}, PSeries::one(2));
	CurrentExpression sorted = exchange_sort(x, ctx);
	REQUIRE(sorted.size() == 1);
	CHECK(pseries_equal(sorted.terms().begin()->second, PSeries::one(2), kExact));
}

TEST_CASE("double swap is neutral (Ding-Iohara condition)") {
	for (Mode mode : {Mode::Theta, Mode::Generic}) {
		StructureFunctionSet s(cartan_data(RootType{'B', 3}), 3, mode);
		if (mode == Mode::Theta) s.set_pins(probe_pins(kProb.seed));
		ExchangeContext ctx{&s, vars::U, Monomial()};
		CurrentSymbol a = sym_e(2, vars::Z), b = sym_e(1, vars::W);
		PSeries roundtrip = swap_scalar(a, b, ctx) * swap_scalar(b, a, ctx);
		CHECK(pseries_equal(roundtrip, PSeries::one(3), kProb));
		CurrentSymbol c = sym_psi(+1, 0, vars::Z), d = sym_psi(-1, 1, vars::W);
		roundtrip = swap_scalar(c, d, ctx) * swap_scalar(d, c, ctx);
		CHECK(pseries_equal(roundtrip, PSeries::one(3), kProb));
	}
	// Full symbolic round trip at order 1.
	StructureFunctionSet s(cartan_data(RootType{'B', 3}), 1, Mode::Theta);
	ExchangeContext ctx{&s, vars::U, Monomial()};
	CurrentSymbol c = sym_psi(+1, 0, vars::Z), d = sym_psi(-1, 1, vars::W);
	PSeries roundtrip = swap_scalar(c, d, ctx) * swap_scalar(d, c, ctx);
	CHECK(pseries_equal(roundtrip, PSeries::one(1), kExact));
}

TEST_CASE("exchange scalar table spot checks") {
	StructureFunctionSet s(cartan_data(RootType{'A', 2}), 2, Mode::Theta);
	ExchangeContext ctx{&s, vars::U, Monomial()};
	const Monomial u = Monomial::var(vars::U);
	// psi+_i(z) e_j(w) -> g*_ij(q^{-c/2} z/w)
	PSeries t = swap_scalar(sym_psi(+1, 0, vars::Z), sym_e(1, vars::W), ctx);
	PSeries expect = s.gstar(0, 1, zratio(vars::Z, vars::W) * u.inverse());
	CHECK(pseries_equal(t, expect, kExact));
	// e_i(z) e_j(w) -> g*_ij(z/w)
	t = swap_scalar(sym_e(0, vars::Z), sym_e(1, vars::W), ctx);
	CHECK(pseries_equal(t, s.gstar(0, 1, zratio(vars::Z, vars::W)), kExact));
	// f_i(z) f_j(w) -> g_ij(z/w)^{-1}
	t = swap_scalar(sym_f(0, vars::Z), sym_f(1, vars::W), ctx);
	CHECK(pseries_equal(t, s.g(0, 1, zratio(vars::Z, vars::W)).inverse(), kExact));
	// K+_i e_j -> q_i^{-a_ij} = q^{-b_ij}
	t = swap_scalar(sym_k(+1, 0), sym_e(1, vars::W), ctx);
	CHECK(t.p_limit().equals(RatFun::monomial(q_power(-s.cartan().b(0, 1)))));
	// inverting one side inverts the scalar
	t = swap_scalar(sym_psi(+1, 0, vars::Z, Monomial(), true), sym_e(1, vars::W), ctx);
	CHECK(pseries_equal(t, expect.inverse(), kExact));
	// inverting both sides restores it
	PSeries t2 = swap_scalar(sym_psi(+1, 0, vars::Z), sym_psi(-1, 1, vars::W), ctx);
	PSeries t3 = swap_scalar(sym_psi(+1, 0, vars::Z, Monomial(), true),
	                         sym_psi(-1, 1, vars::W, Monomial(), true), ctx);
	CHECK(pseries_equal(t2, t3, kExact));
	// e-f is not a scalar exchange
	CHECK_THROWS(swap_scalar(sym_e(0, vars::Z), sym_f(0, vars::W), ctx));
	CHECK_THROWS(swap_scalar(sym_f(0, vars::Z), sym_e(1, vars::W), ctx));
}

TEST_CASE("exchange sort is confluent on random words") {
	StructureFunctionSet s(cartan_data(RootType{'A', 2}), 2, Mode::Theta);
	s.set_pins(probe_pins(kProb.seed));
	ExchangeContext ctx{&s, vars::U, Monomial()};
	std::vector<CurrentSymbol> pool = {
	    sym_k(+1, 0),
	    sym_k(-1, 1),
	    sym_psi(+1, 0, vars::Z),
	    sym_psi(-1, 1, vars::W, q_power(1)),
	    sym_psi(+1, 1, vars::Z2),
	    sym_e(0, vars::Z1),
	    sym_e(1, vars::Z2),
	    sym_e(0, vars::W, c_power(vars::U, 1)),
	};
	std::mt19937 rng(7);
	for (int trial = 0; trial < 20; ++trial) {
		size_t len = 2 + rng() % 4;
		Word w;
		for (size_t k = 0; k < len; ++k) w.push_back(pool[rng() % pool.size()]);
		PSeries c1 = PSeries::one(2), c2 = PSeries::one(2);
		Word w1 = sorted_word(w, c1, ctx);
		Word w2 = sorted_word_rl(w, c2, ctx);
		REQUIRE(w1 == w2);
		CHECK(pseries_equal(c1, c2, kProb));
	}
}

TEST_CASE("A2 e-Serre: six displayed coefficients") {
	const int N = 2;
	StructureFunctionSet s(cartan_data(RootType{'A', 2}), N, Mode::Theta);
	s.set_pins(probe_pins(kProb.seed));
	ExchangeContext ctx{&s, vars::U, Monomial()};
	SerrePair pair{0, 1, 2};
	CurrentExpression x = serre_expression(s, pair, SerreVariant::E, ctx);
	REQUIRE(x.size() == 6);

	auto gt = [&](int i, int j, const Monomial& arg) { return s.gtilde_star(i, j, arg); };
	const Monomial z10 = zratio(vars::Z1, vars::Z), z20 = zratio(vars::Z2, vars::Z),
	               z12 = zratio(vars::Z1, vars::Z2);
	// h from the displayed closed form built on gbar.
	const RatFun one = RatFun::one();
	RatFun bii = s.gbar(0, 0, z12), b10 = s.gbar(0, 1, z10), b20 = s.gbar(0, 1, z20);
	RatFun h = (bii + one) * (b10 * b20 + one) / (b20 + bii * b10);
	PSeries hs = PSeries(h, N);

	CurrentSymbol e1z1 = sym_e(0, vars::Z1), e1z2 = sym_e(0, vars::Z2), e2z = sym_e(1, vars::Z);
	auto coeff = [&](const Word& w) { return x.terms().at(w); };
	CHECK(pseries_equal(coeff({e1z2, e1z1, e2z}), gt(0, 1, z10) * gt(0, 1, z20), kExact));
	CHECK(pseries_equal(coeff({e1z2, e2z, e1z1}), -hs * gt(0, 1, z20), kExact));
	CHECK(pseries_equal(coeff({e2z, e1z2, e1z1}), PSeries::one(N), kExact));
	CHECK(pseries_equal(coeff({e1z1, e1z2, e2z}),
	                    gt(0, 0, z12) * gt(0, 1, z20) * gt(0, 1, z10), kExact));
	CHECK(pseries_equal(coeff({e1z1, e2z, e1z2}), -hs * gt(0, 0, z12) * gt(0, 1, z10), kExact));
	CHECK(pseries_equal(coeff({e2z, e1z1, e1z2}), gt(0, 0, z12), kExact));
}

TEST_CASE("B3 cubic e-Serre: word count and top coefficient") {
	const int N = 2;
	StructureFunctionSet s(cartan_data(RootType{'B', 3}), N, Mode::Theta);
	s.set_pins(probe_pins_full(kProb.seed));
	ExchangeContext ctx{&s, vars::U, Monomial()};
	SerrePair top{-1, -1, 0};
	for (const SerrePair& pr : serre_pairs(s.cartan()))
		if (pr.arity == 3) top = pr;
	REQUIRE(top.arity == 3);

	CurrentExpression x = serre_expression(s, top, SerreVariant::E, ctx);
	CHECK(x.size() == 24);
	Word w = {sym_e(top.i, vars::Z3), sym_e(top.i, vars::Z2), sym_e(top.i, vars::Z1),
	          sym_e(top.j, vars::Z)};
	PSeries expect = s.gtilde_star(top.i, top.j, zratio(vars::Z1, vars::Z)) *
	                 s.gtilde_star(top.i, top.j, zratio(vars::Z2, vars::Z)) *
	                 s.gtilde_star(top.i, top.j, zratio(vars::Z3, vars::Z));
	CHECK(pseries_equal(x.terms().at(w), expect, kProb));

	CurrentExpression y = serre_expression(s, top, SerreVariant::F, ctx);
	CHECK(y.size() == 24);
	// Reversed orientation: f_j(z) f_i(z1) f_i(z2) f_i(z3) carries gbar/g tails.
	Word wf = {sym_f(top.j, vars::Z), sym_f(top.i, vars::Z1), sym_f(top.i, vars::Z2),
	           sym_f(top.i, vars::Z3)};
	PSeries expectf = s.gtilde(top.i, top.j, zratio(vars::Z1, vars::Z)).inverse() *
	                  s.gtilde(top.i, top.j, zratio(vars::Z2, vars::Z)).inverse() *
	                  s.gtilde(top.i, top.j, zratio(vars::Z3, vars::Z)).inverse();
	CHECK(pseries_equal(y.terms().at(wf), expectf, kProb));
}

TEST_CASE("elliptic Serre word count is a!(a+1)") {
	const int N = 1;
	StructureFunctionSet a2(cartan_data(RootType{'A', 2}), N, Mode::Theta);
	ExchangeContext ctx{&a2, vars::U, Monomial()};
	CHECK(elliptic_serre_expression(a2, {0, 1, 2}, SerreVariant::E, ctx).size() == 6);
	StructureFunctionSet b3(cartan_data(RootType{'B', 3}), N, Mode::Theta);
	ExchangeContext ctxb{&b3, vars::U, Monomial()};
	CHECK(elliptic_serre_expression(b3, {2, 1, 3}, SerreVariant::F, ctxb).size() == 24);
}

TEST_CASE("compare_combinations: x vs x with premultiplier 1") {
	const int N = 2;
	StructureFunctionSet s(cartan_data(RootType{'A', 2}), N, Mode::Theta);
	s.set_pins(probe_pins(kProb.seed));
	ExchangeContext ctx{&s, vars::U, Monomial()};
	CurrentExpression x = serre_expression(s, {0, 1, 2}, SerreVariant::E, ctx);
	auto rs = compare_combinations(x, x, PSeries::one(N), kProb, "self");
	CHECK(all_pass(rs));
}

TEST_CASE("Serre equivalence, sorting and p-limit for A2 and B3") {
	for (RootType t : {RootType{'A', 2}, RootType{'B', 3}}) {
		StructureFunctionSet s(cartan_data(t), 3, Mode::Theta);
		s.set_pins(probe_pins_full(kProb.seed));
		CHECK(all_pass(verify_serre_equivalence(s, kProb)));
		CHECK(all_pass(verify_serre_sort(s, kProb)));
		CHECK(all_pass(verify_serre_p_limit(s, kProb)));
		StructureFunctionSet gen(cartan_data(t), 1, Mode::Generic);
		// A2 runs fully symbolic; higher arities pin the scalar variables.
		if (t.family != 'A') gen.set_pins(probe_pins_full(kProb.seed));
		CHECK(all_pass(verify_serre_sort(gen, kProb)));
	}
}

TEST_CASE("delta substitution: delta(a z/w) g(z/w) = delta(a z/w) g(1/a)") {
	const int N = 2;
	// a = q^2: delta arg monomial q^2 z / w, so z -> q^{-2} w.
	Monomial m = q_power(2) * zratio(vars::Z, vars::W);
	CurrentExpression x(N);
	x.add({sym_e(0, vars::Z)}, PSeries(RatFun::monomial(zratio(vars::Z, vars::W)), N));
	CurrentExpression y = delta_substitute(m, x);
	REQUIRE(y.size() == 1);
	const auto& [w, c] = *y.terms().begin();
	CHECK(c[0].equals(RatFun::monomial(q_power(-2))));
	CHECK(w[0].var == vars::W);
	CHECK(w[0].shift == q_power(-2));
}

TEST_CASE("e-f commutator produces the two delta terms") {
	const int N = 2;
	StructureFunctionSet s(cartan_data(RootType{'A', 2}), N, Mode::Theta);
	ExchangeContext ctx{&s, vars::U, Monomial()};
	const Monomial u = Monomial::var(vars::U);

	CurrentExpression x(N);
	x.add({sym_e(0, vars::Z), sym_f(0, vars::W)}, PSeries::one(N));
	x.add({sym_f(0, vars::W), sym_e(0, vars::Z)}, -PSeries::one(N));
	DeltaExpression d = ef_exchange_sort(x, ctx);
	CHECK(d.regular.is_zero());
	REQUIRE(d.delta.size() == 2);

	const RatFun qdiff = RatFun::one() / (RatFun::monomial(q_power(1)) -
	                                      RatFun::monomial(q_power(-1)));
	// delta(q^{-c} z/w) psi^-(q^{c/2} w) / (q - q^{-1})
	Monomial m1 = u.pow(-2) * zratio(vars::Z, vars::W);
	REQUIRE(d.delta.count(m1) == 1);
	const auto& t1 = *d.delta.at(m1).terms().begin();
	CHECK(t1.first == Word{sym_psi(-1, 0, vars::W, u)});
	CHECK(t1.second[0].equals(qdiff));
	// -delta(q^c z/w) psi^+(q^{c/2} z) = -delta(...) psi^+(q^{-c/2} w)
	Monomial m2 = u.pow(2) * zratio(vars::Z, vars::W);
	REQUIRE(d.delta.count(m2) == 1);
	const auto& t2 = *d.delta.at(m2).terms().begin();
	CHECK(t2.first == Word{sym_psi(+1, 0, vars::W, u.inverse())});
	CHECK(t2.second[0].equals(-qdiff));

	// distinct nodes: plain scalar swap, no deltas
	CurrentExpression z(N);
	z.add({sym_f(1, vars::W), sym_e(0, vars::Z)}, PSeries::one(N));
	DeltaExpression dz = ef_exchange_sort(z, ctx);
	CHECK(dz.delta.empty());
	CHECK(dz.regular.size() == 1);
}
