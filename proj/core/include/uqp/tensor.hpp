#pragma once

#include <uqp/current.hpp>
#include <uqp/rootdata.hpp>

#include <map>
#include <string>
#include <vector>

namespace uqp {

// Opaque dynamical coefficient mu_l(F) / mu_r(F).  The factor stands for
// the function F evaluated at P + sum_r shift_r Q_r; the argument nome is
// fixed by the side (left: the shifted nome of its leg, right: the plain
// one) and never stored.  Factors of this kind commute with each other.
struct DynamicalFactor {
	int name = 0;
	bool right = false; // mu_r (argument P + h) instead of mu_l (argument P)
	std::vector<int> shift;

	auto operator<=>(const DynamicalFactor&) const = default;
	std::string str() const;
};

// Left/right lattice bigrade: e_i sits in (-Q_i, 0), f_i in (0, -Q_i),
// psi+-_i and K+-_i in (-Q_i, -Q_i) — inverses flip the sign — and
// scalars, q^{c/2} and d in (0, 0).  Coordinates over Q_1..Q_l.
struct Bigrade {
	std::vector<int> alpha, beta;

	bool operator==(const Bigrade&) const = default;
	Bigrade& operator+=(const Bigrade& o);
	std::string str() const;
};

Bigrade word_bigrade(const Word& w, int rank);

// One tensor leg: dynamical factors kept to the left of the word, sorted
// (they commute).  `tshift` is a plain lattice shift operator T_gamma; it
// only appears on difference-operator legs produced by the counit, whose
// word is empty.
struct Leg {
	std::vector<DynamicalFactor> dyn;
	Word word;
	std::vector<int> tshift;

	auto operator<=>(const Leg&) const = default;
	std::string str() const;
};

// Product of two legs as algebra elements: words concatenate and the
// right factor's dynamical prefix moves left through the left word,
// shifting by minus its left (mu_l) or right (mu_r) bigrade.
Leg leg_concat(const Leg& a, const Leg& b, int rank);

// A summand of a tensor expression: one leg per tensor slot plus an
// optional formal delta-function tag (empty monomial when absent).
struct TensorTerm {
	std::vector<Leg> legs;
	Monomial delta;

	auto operator<=>(const TensorTerm&) const = default;
	std::string str() const;
};

// The u-variable of leg k (0-based) among nlegs: u for a single leg,
// u1..u3 otherwise; and the leg's nome shift prod_{m>k} u_m^{-4} relative
// to the nome of the final leg.
int leg_uvar(int nlegs, int k);
Monomial leg_nome(int nlegs, int k);
ExchangeContext leg_context(const StructureFunctionSet& s, int nlegs, int k);

// Finite linear combination of tensor terms with one global truncated
// p-series coefficient each.  The grading nome is the plain nome of the
// final leg; scalars belonging to earlier legs carry the leg_nome twist.
class TensorExpression {
public:
	using Terms = std::map<TensorTerm, PSeries>;

	TensorExpression(int nlegs, int order, int rank)
	    : nlegs_(nlegs), order_(order), rank_(rank)
	{
	}

	int legs() const { return nlegs_; }
	int order() const { return order_; }
	int rank() const { return rank_; }
	bool is_zero() const { return terms_.empty(); }
	size_t size() const { return terms_.size(); }
	const Terms& terms() const { return terms_; }

	void add(const TensorTerm& t, const PSeries& c);

	TensorExpression operator+(const TensorExpression& o) const;
	TensorExpression operator-(const TensorExpression& o) const;
	TensorExpression operator-() const;
	TensorExpression operator*(const TensorExpression& o) const;
	TensorExpression scaled(const PSeries& c) const;

	// Substitution applied everywhere a variable can occur: coefficients,
	// symbol shifts, and delta tags.  The image must be a monomial.
	TensorExpression substituted(int id, const Monomial& image) const;

	std::string str() const;

private:
	int nlegs_;
	int order_;
	int rank_;
	Terms terms_;
};

// Lift of a one-leg word expression (u-variable vars::U).
TensorExpression to_tensor(const CurrentExpression& x, int rank);

// Comultiplication on leg k (0-based): splits the leg in two, renumbering
// the u-variables of later legs upward and replacing u_k by u_k u_{k+1};
// per-symbol images are the Drinfeld-type ones, mu_l factors stay on the
// first half and mu_r factors on the second.
TensorExpression coproduct_at(const TensorExpression& x, int k);

// Counit on leg k: terms whose leg-k word contains e, f or d are dropped;
// psi+-_i and K+-_i contribute T_{Q_i} to the leg's shift operator, the
// leg's u is set to 1, and dynamical factors keep their shift with a
// plain-nome argument.  The leg survives as a difference-operator leg.
TensorExpression counit_at(const TensorExpression& x, int k);

// Collapses the difference-operator leg k against its neighbour: a first
// leg F T_{-alpha} merges into the following leg as mu_l(F) provided the
// shift matches minus that leg's left bigrade, and a last leg merges into
// the preceding leg as mu_r(F) under the mirror condition.  Returns false
// (with a witness in *why) on a shift mismatch.
bool collapse_shift_leg(TensorExpression& x, int k, std::string* why = nullptr);

// Antipode on leg k: reverses the leg word and maps each symbol to its
// inverse-decorated image (e and f produce a two-symbol block and a
// sign), inverts the leg's u in shifts and coefficients, twists the nome
// by u_k^{-4}, and swaps the sides of the leg's dynamical factors.
TensorExpression antipode_at(const TensorExpression& x, int k);

// Multiplication map of a two-leg expression: legs concatenate with the
// dynamical pushes of leg_concat and u1, u2 both become u.  Coefficients
// must carry no cross-leg nome ladder (true for generator-level inputs).
TensorExpression merge_legs(const TensorExpression& x);

// Pushes mu_r factors off non-final legs (mu_r on leg k equals mu_l on
// leg k+1) and sorts every dynamical prefix; idempotent.
TensorExpression tensor_normal_form(const TensorExpression& x);
// The mirror form pushing mu_l factors rightwards, used on flipped
// expressions where the moment-map roles are exchanged.
TensorExpression tensor_normal_form_dagger(const TensorExpression& x);

// Reverses the legs and exchanges their u-variables.
TensorExpression flip(const TensorExpression& x);

// Leg-wise exchange sort under the leg contexts of `s`; e-f adjacencies
// resolve through the commutator and create delta-tagged terms whose
// substitution applies across the whole term.
TensorExpression tensor_sort(const TensorExpression& x, const StructureFunctionSet& s);

} // namespace uqp
