#pragma once

#include <uqp/equality.hpp>
#include <uqp/report.hpp>
#include <uqp/rootdata.hpp>
#include <uqp/theta.hpp>

namespace uqp {

enum class Mode {
	Theta,  // g_ij(x;p) = q^{-b_ij} theta(q^{b_ij}x;p)/theta(q^{-b_ij}x;p)
	Generic // each g_ij(argument; nome) is an opaque invertible symbol
};

Mode mode_parse(const std::string& s);

// The shifted nome p* = p q^{-2c}: twist monomial u^{-4} (u = q^{c/2}).
Monomial pstar_twist();
// Leg copy: p q^{-2c_k} for u-variable `uvar`.
Monomial pstar_twist(int uvar);

// The family of structure functions g_ij(x; p nu) of a root datum,
// specialized by theta functions or kept as opaque symbols.  Arguments are
// monomials; the nome shift nu is a monomial in the u-variables.  The
// Ding-Iohara condition g_ji(x^{-1}; nu) = g_ij(x; nu)^{-1} is built in:
// in generic mode it is the sole rewriting rule (symbols are canonicalized
// under it), in theta mode it is a theorem checked by check_di_condition.
class StructureFunctionSet {
public:
	StructureFunctionSet(CartanData cd, int N, Mode mode);

	const CartanData& cartan() const { return cd_; }
	int order() const { return N_; }
	Mode mode() const { return mode_; }

	// g_ij(arg; p nu) as a truncated p-series.
	PSeries g(int i, int j, const Monomial& arg, const Monomial& nu = Monomial()) const;
	// g*_ij(arg; p nu) = g_ij(arg; p nu q^{-2c}).
	PSeries gstar(int i, int j, const Monomial& arg, const Monomial& nu = Monomial()) const;
	// gbar_ij(x) = lim_{p->0} g_ij(x;p) = q^{-b_ij}(1 - q^{b_ij}x)/(1 - q^{-b_ij}x),
	// exact in every mode.
	RatFun gbar(int i, int j, const Monomial& arg) const;

	// gtilde_ij = g_ij/gbar_ij and gtilde*_ij = gbar_ij/g*_ij; both have
	// p^0 term 1 in theta mode.
	PSeries gtilde(int i, int j, const Monomial& arg, const Monomial& nu = Monomial()) const;
	PSeries gtilde_star(int i, int j, const Monomial& arg, const Monomial& nu = Monomial()) const;

	// Seeded numeric specialization: substitute fixed rational values for
	// the listed variables in every theta-mode series as it is built.
	// Pinning q and the u-variables keeps coefficient sizes bounded in
	// long products while the current variables stay symbolic; used by
	// the probabilistic equality strategy.  Generic-mode symbols are
	// opaque and never pinned.
	void set_pins(std::vector<std::pair<int, Rational>> pins) { pins_ = std::move(pins); }
	const std::vector<std::pair<int, Rational>>& pins() const { return pins_; }
	RatFun pin(const RatFun& f) const;
	PSeries pin(const PSeries& s) const;

private:
	PSeries theta_g(int i, int j, const Monomial& arg, const Monomial& nu) const;
	RatFun generic_symbol(int i, int j, const Monomial& arg, const Monomial& nu) const;

	CartanData cd_;
	int N_;
	Mode mode_;
	std::vector<std::pair<int, Rational>> pins_;
};

// Seeded pin assignment for probabilistic runs: values for q^{1/6} and
// the central variable u = q^{c/2}.  Current variables are left symbolic.
std::vector<std::pair<int, Rational>> probe_pins(uint64_t seed);

// Pins for the current variables as well; for checks whose coefficients
// are never substituted into afterwards, making every coefficient a
// plain rational number.
std::vector<std::pair<int, Rational>> probe_pins_full(uint64_t seed);

// g_ij(z^{-1};p) g_ji(z;p) = 1 + O(p^{N+1}) for all pairs (theta mode);
// in generic mode the relation holds by canonicalization and the check
// verifies that.
std::vector<CheckResult> check_di_condition(const StructureFunctionSet& s,
                                            const EqualityOptions& opt);

// The three series identities behind the exchange-scalar computations:
//  (a) the psi-e scalar as a 4-factor Pochhammer product equals
//      g*_ij(q^{-c/2}x);
//  (b) C_ji(x) C_ij(x^{-1})^{-1} = g*_ij(x)/g_ij(x) with double-nome
//      Pochhammer symbols;
//  (c) x G+_ij(x^{-1};p) = -G-_ij(x;p).
std::vector<CheckResult> verify_exchange_scalars(const CartanData& cd, int N,
                                                 const EqualityOptions& opt);

// gbar_ij/g*_ij = wtgamma*(x^{-1};q^{b_ij})/wtgamma*(x;q^{b_ij}) and the
// mirror identity for g_ij/gbar_ij, to order N.
std::vector<CheckResult> verify_gtilde_factors(const CartanData& cd, int N,
                                               const EqualityOptions& opt);

} // namespace uqp
