#pragma once

#include <uqp/equality.hpp>
#include <uqp/report.hpp>
#include <uqp/structfn.hpp>
#include <uqp/vars.hpp>

#include <map>
#include <vector>

namespace uqp {

// One generating current evaluated at a (shifted) variable.  The argument
// of a current is shift * var; K, q^{c/2}-powers and the degree operator d
// carry no variable.  Powers of q^{c/2} are normally tracked inside the
// scalar coefficients (they are central); the Qc kind exists so a word can
// name the generator itself.
enum class SymKind : int {
	KPlus = 0,
	KMinus = 1,
	Qc = 2,
	PsiPlus = 3,
	PsiMinus = 4,
	E = 5,
	F = 6,
	DOp = 7
};

struct CurrentSymbol {
	SymKind kind = SymKind::E;
	bool inv = false; // inverse of the symbol (K, psi only)
	int node = 0;     // Dynkin node, 0-based
	int var = -1;     // vars id of the current variable, -1 if none
	Monomial shift;   // argument prefactor (powers of v, u, u1..u3)

	auto operator<=>(const CurrentSymbol&) const = default;
	std::string str() const;
};

CurrentSymbol sym_e(int node, int var, const Monomial& shift = Monomial());
CurrentSymbol sym_f(int node, int var, const Monomial& shift = Monomial());
CurrentSymbol sym_psi(int sign, int node, int var, const Monomial& shift = Monomial(),
                      bool inv = false);
CurrentSymbol sym_k(int sign, int node, bool inv = false);

using Word = std::vector<CurrentSymbol>;

std::string word_str(const Word& w);

// Canonical position of a symbol: kind rank, then node, then variable
// label in descending order (z, z4, z3, z2, z1, w).  Inverse flags and
// shifts do not participate: symbols with equal keys are never reordered.
int label_rank(int var);
bool sym_before(const CurrentSymbol& a, const CurrentSymbol& b);

// Finite linear combination of words with truncated p-series coefficients.
// Words are kept exactly as given; sorting is an explicit operation.
class CurrentExpression {
public:
	using Terms = std::map<Word, PSeries>;

	explicit CurrentExpression(int order = 4) : order_(order) {}

	static CurrentExpression zero(int order) { return CurrentExpression(order); }

	int order() const { return order_; }
	bool is_zero() const { return terms_.empty(); }
	size_t size() const { return terms_.size(); }
	const Terms& terms() const { return terms_; }

	void add(const Word& w, const PSeries& c);

	CurrentExpression operator+(const CurrentExpression& o) const;
	CurrentExpression operator-(const CurrentExpression& o) const;
	CurrentExpression operator-() const;
	// Word concatenation, coefficient product.
	CurrentExpression operator*(const CurrentExpression& o) const;
	CurrentExpression scaled(const PSeries& c) const;

	std::string str() const;

private:
	int order_;
	Terms terms_; // no zero coefficients (tested probabilistically at add)
};

// Where a word lives: which structure-function set, which central-charge
// unit u (q^{c/2} = u) and which nome shift nu (so the word's leg nome is
// p*nu).  The base algebra uses {s, vars::U, 1}.
struct ExchangeContext {
	const StructureFunctionSet* s = nullptr;
	int uvar = vars::U;
	Monomial nome;
};

// Scalar of the quadratic exchange relation a·b = scalar · b·a.  Throws on
// e-f pairs (not a scalar exchange) and on the degree operator.
PSeries swap_scalar(const CurrentSymbol& a, const CurrentSymbol& b,
                    const ExchangeContext& ctx);

// Sorts every word to the canonical order by adjacent transpositions, each
// contributing its exchange scalar; equal outputs modulo the quadratic
// relations.  Also cancels adjacent inverse pairs (x x^{-1} -> 1).
CurrentExpression exchange_sort(const CurrentExpression& x, const ExchangeContext& ctx);
Word sorted_word(Word w, PSeries& coeff, const ExchangeContext& ctx);

// Removes adjacent exact-inverse pairs from a word.
Word cancel_inverses(Word w);

// A term of the formal delta-function calculus: delta(m) times an
// expression, where the monomial m = a*z/w encodes delta(a z/w).  The
// substitution rule delta(a z/w) F(z,w) = delta(a z/w) F(w/a, w) is applied
// eagerly when terms are created via delta_substitute.
struct DeltaTerm {
	Monomial delta;
	CurrentExpression expr;
};

// delta(m) with m = a * x / y for variables x, y: substitutes x -> y/a in
// every coefficient and every symbol shift of the expression.
CurrentExpression delta_substitute(const Monomial& m, const CurrentExpression& x);

// Expression plus delta-supported part, keyed by the delta argument.
struct DeltaExpression {
	CurrentExpression regular;
	std::map<Monomial, CurrentExpression> delta;
};

// Sorts like exchange_sort but resolves e-f adjacencies with the
// commutator relation, producing delta-supported terms (whose words are
// sorted recursively as well).
DeltaExpression ef_exchange_sort(const CurrentExpression& x, const ExchangeContext& ctx);

} // namespace uqp
