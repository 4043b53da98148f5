#include <uqp/current.hpp>

#include <stdexcept>

namespace uqp {

namespace {

const char* kind_name(SymKind k)
{
	switch (k) {
	case SymKind::KPlus: return "K+";
	case SymKind::KMinus: return "K-";
	case SymKind::Qc: return "qc";
	case SymKind::PsiPlus: return "psi+";
	case SymKind::PsiMinus: return "psi-";
	case SymKind::E: return "e";
	case SymKind::F: return "f";
	case SymKind::DOp: return "d";
	}
	return "?";
}

Monomial arg_of(const CurrentSymbol& s)
{
	if (s.var < 0) return s.shift;
	return s.shift * Monomial::var(s.var);
}

PSeries mono_series(const Monomial& m, int order)
{
	return PSeries(RatFun::monomial(m), order);
}

} // namespace

CurrentSymbol sym_e(int node, int var, const Monomial& shift)
{
	return {SymKind::E, false, node, var, shift};
}

CurrentSymbol sym_f(int node, int var, const Monomial& shift)
{
	return {SymKind::F, false, node, var, shift};
}

CurrentSymbol sym_psi(int sign, int node, int var, const Monomial& shift, bool inv)
{
	return {sign > 0 ? SymKind::PsiPlus : SymKind::PsiMinus, inv, node, var, shift};
}

CurrentSymbol sym_k(int sign, int node, bool inv)
{
	return {sign > 0 ? SymKind::KPlus : SymKind::KMinus, inv, node, -1, Monomial()};
}

std::string CurrentSymbol::str() const
{
	std::string out = kind_name(kind) + std::to_string(node + 1);
	if (var >= 0) {
		out += "(";
		if (!shift.is_one()) out += shift.str() + "*";
		out += vars::name_of(var) + ")";
	}
	if (inv) out += "^-1";
	return out;
}

std::string word_str(const Word& w)
{
	if (w.empty()) return "1";
	std::string out;
	for (const CurrentSymbol& s : w) {
		if (!out.empty()) out += " ";
		out += s.str();
	}
	return out;
}

int label_rank(int var)
{
	switch (var) {
	case vars::Z: return 0;
	case vars::Z4: return 1;
	case vars::Z3: return 2;
	case vars::Z2: return 3;
	case vars::Z1: return 4;
	case vars::W: return 5;
	default: return -1;
	}
}

static int kind_rank(SymKind k) { return int(k); }

bool sym_before(const CurrentSymbol& a, const CurrentSymbol& b)
{
	if (kind_rank(a.kind) != kind_rank(b.kind))
		return kind_rank(a.kind) < kind_rank(b.kind);
	if (a.node != b.node) return a.node < b.node;
	return label_rank(a.var) < label_rank(b.var);
}

void CurrentExpression::add(const Word& w, const PSeries& c)
{
	if (c.is_zero()) return;
	auto it = terms_.find(w);
	if (it == terms_.end()) {
		terms_.emplace(w, c);
		return;
	}
	it->second += c;
	if (it->second.is_zero()) terms_.erase(it);
}

CurrentExpression CurrentExpression::operator+(const CurrentExpression& o) const
{
	CurrentExpression out = *this;
	for (const auto& [w, c] : o.terms_) out.add(w, c);
	return out;
}

CurrentExpression CurrentExpression::operator-(const CurrentExpression& o) const
{
	CurrentExpression out = *this;
	for (const auto& [w, c] : o.terms_) out.add(w, -c);
	return out;
}

CurrentExpression CurrentExpression::operator-() const
{
	CurrentExpression out(order_);
	for (const auto& [w, c] : terms_) out.add(w, -c);
	return out;
}

CurrentExpression CurrentExpression::operator*(const CurrentExpression& o) const
{
	CurrentExpression out(order_);
	for (const auto& [w1, c1] : terms_)
		for (const auto& [w2, c2] : o.terms_) {
			Word w = w1;
			w.insert(w.end(), w2.begin(), w2.end());
			out.add(w, c1 * c2);
		}
	return out;
}

CurrentExpression CurrentExpression::scaled(const PSeries& c) const
{
	CurrentExpression out(order_);
	if (c.is_zero()) return out;
	for (const auto& [w, coeff] : terms_) out.add(w, coeff * c);
	return out;
}

std::string CurrentExpression::str() const
{
	if (terms_.empty()) return "0";
	std::string out;
	for (const auto& [w, c] : terms_) {
		if (!out.empty()) out += "\n";
		out += "(" + c.str() + ") " + word_str(w);
	}
	return out;
}

namespace {

// Exchange scalar with both symbols taken non-inverted and the first one
// of lower kind rank.  When invert is set the reciprocal scalar is built
// by inverting each structure-function factor individually; inverting a
// product series directly is far more expensive.
PSeries base_scalar(const CurrentSymbol& a, const CurrentSymbol& b,
                    const ExchangeContext& ctx, bool invert)
{
	const StructureFunctionSet& s = *ctx.s;
	const int N = s.order();
	const int i = a.node, j = b.node;
	const SymKind ka = a.kind, kb = b.kind;

	auto is_k = [](SymKind k) { return k == SymKind::KPlus || k == SymKind::KMinus; };
	auto is_psi = [](SymKind k) { return k == SymKind::PsiPlus || k == SymKind::PsiMinus; };
	auto G = [&](const Monomial& x, const Monomial& nome, bool inv) {
		PSeries g = s.g(i, j, x, nome);
		return inv ? g.inverse() : g;
	};

	// Central / commuting pairs.
	if (ka == SymKind::Qc || kb == SymKind::Qc) return PSeries::one(N);
	if (is_k(ka) && (is_k(kb) || is_psi(kb))) return PSeries::one(N);

	if (is_k(ka) && (kb == SymKind::E || kb == SymKind::F)) {
		int sign = (ka == SymKind::KPlus) ? -1 : +1; // K+ e: q^{-b_ij}
		if (kb == SymKind::F) sign = -sign;
		if (invert) sign = -sign;
		return s.pin(mono_series(q_power(s.cartan().b(i, j) * sign), N));
	}

	const Monomial x = arg_of(a) * arg_of(b).inverse();
	const Monomial nu = ctx.nome;
	const Monomial nustar = nu * pstar_twist(ctx.uvar);
	const Monomial qc = c_power(ctx.uvar, 1);      // q^c
	const Monomial qch = c_power(ctx.uvar, {1, 2}); // q^{c/2}

	if (is_psi(ka) && is_psi(kb)) {
		if (ka == kb)
			return G(x, nustar, invert) * G(x, nu, !invert);
		// psi+ psi-
		return G(x * qc.inverse(), nustar, invert) * G(x * qc, nu, !invert);
	}
	if (ka == SymKind::PsiPlus && kb == SymKind::E)
		return G(x * qch.inverse(), nustar, invert);
	if (ka == SymKind::PsiPlus && kb == SymKind::F)
		return G(x * qch, nu, !invert);
	if (ka == SymKind::PsiMinus && kb == SymKind::E)
		return G(x * qch, nustar, invert);
	if (ka == SymKind::PsiMinus && kb == SymKind::F)
		return G(x * qch.inverse(), nu, !invert);
	if (ka == SymKind::E && kb == SymKind::E)
		return G(x, nustar, invert);
	if (ka == SymKind::F && kb == SymKind::F)
		return G(x, nu, !invert);

	throw std::domain_error("swap_scalar: no scalar exchange for " + a.str() + " " + b.str());
}

} // namespace

PSeries swap_scalar(const CurrentSymbol& a, const CurrentSymbol& b,
                    const ExchangeContext& ctx)
{
	if (a.kind == SymKind::DOp || b.kind == SymKind::DOp)
		throw std::domain_error("swap_scalar: degree operator is not a scalar exchange");
	if ((a.kind == SymKind::E && b.kind == SymKind::F) ||
	    (a.kind == SymKind::F && b.kind == SymKind::E))
		throw std::domain_error("swap_scalar: e-f swap is not a scalar exchange");

	CurrentSymbol a0 = a, b0 = b;
	a0.inv = b0.inv = false;
	bool invert = kind_rank(a0.kind) > kind_rank(b0.kind);
	if (a.inv != b.inv) invert = !invert;
	return kind_rank(a0.kind) <= kind_rank(b0.kind)
	           ? base_scalar(a0, b0, ctx, invert)
	           : base_scalar(b0, a0, ctx, invert);
}

Word cancel_inverses(Word w)
{
	Word out;
	for (const CurrentSymbol& s : w) {
		if (!out.empty()) {
			const CurrentSymbol& t = out.back();
			if (t.kind == s.kind && t.node == s.node && t.var == s.var &&
			    t.shift == s.shift && t.inv != s.inv) {
				out.pop_back();
				continue;
			}
		}
		out.push_back(s);
	}
	return out;
}

Word sorted_word(Word w, PSeries& coeff, const ExchangeContext& ctx)
{
	w = cancel_inverses(w);
	bool changed = true;
	while (changed) {
		changed = false;
		for (size_t k = 0; k + 1 < w.size(); ++k) {
			if (sym_before(w[k + 1], w[k])) {
				coeff = coeff * swap_scalar(w[k], w[k + 1], ctx);
				std::swap(w[k], w[k + 1]);
				changed = true;
			}
		}
		if (changed) w = cancel_inverses(w);
	}
	return w;
}

CurrentExpression exchange_sort(const CurrentExpression& x, const ExchangeContext& ctx)
{
	CurrentExpression out(x.order());
	for (const auto& [w, c] : x.terms()) {
		PSeries coeff = c;
		Word sorted = sorted_word(w, coeff, ctx);
		out.add(sorted, coeff);
	}
	return out;
}

namespace {

// Splits a monomial argument into (current variable, prefactor).  Exactly
// one current-variable label must occur, with exponent +1.
std::pair<int, Monomial> split_arg(const Monomial& arg)
{
	int var = -1;
	for (int id : vars::current_labels()) {
		int32_t e = arg.exponent(id);
		if (e == 0) continue;
		if (e != 1 || var >= 0)
			throw std::domain_error("split_arg: not a shifted current variable: " + arg.str());
		var = id;
	}
	if (var < 0) throw std::domain_error("split_arg: no current variable in " + arg.str());
	return {var, arg * Monomial::var(var).inverse()};
}

} // namespace

CurrentExpression delta_substitute(const Monomial& m, const CurrentExpression& x)
{
	// m = a * zv / wv: substitute zv -> wv / a everywhere.
	int zv = -1;
	for (int id : vars::current_labels())
		if (m.exponent(id) == 1) { zv = id; break; }
	if (zv < 0) throw std::domain_error("delta_substitute: bad delta argument " + m.str());
	const Monomial image = (m * Monomial::var(zv).inverse()).inverse();

	CurrentExpression out(x.order());
	for (const auto& [w, c] : x.terms()) {
		Word nw;
		nw.reserve(w.size());
		for (CurrentSymbol s : w) {
			if (s.var >= 0) {
				auto [v, shift] = split_arg(arg_of(s).substitute(zv, image));
				s.var = v;
				s.shift = shift;
			}
			nw.push_back(s);
		}
		out.add(nw, c.substitute(zv, image));
	}
	return out;
}

DeltaExpression ef_exchange_sort(const CurrentExpression& x, const ExchangeContext& ctx)
{
	const int N = x.order();
	DeltaExpression out{CurrentExpression(N), {}};

	// 1/(q - q^{-1}) with q = v^6.
	const RatFun qdiff = ctx.s->pin(
	    RatFun::one() /
	    (RatFun::monomial(q_power(1)) - RatFun::monomial(q_power(-1))));
	const Monomial qc = c_power(ctx.uvar, 1);
	const Monomial qch = c_power(ctx.uvar, {1, 2});

	struct Item {
		Word w;
		PSeries c;
		bool has_delta;
		Monomial delta;
	};
	std::vector<Item> work;
	for (const auto& [w, c] : x.terms()) work.push_back({w, c, false, Monomial()});

	while (!work.empty()) {
		Item it = std::move(work.back());
		work.pop_back();

		it.w = cancel_inverses(it.w);
		bool swapped = true;
		bool requeued = false;
		while (swapped && !requeued) {
			swapped = false;
			for (size_t k = 0; k + 1 < it.w.size(); ++k) {
				if (!sym_before(it.w[k + 1], it.w[k])) continue;
				const CurrentSymbol& a = it.w[k];
				const CurrentSymbol& b = it.w[k + 1];
				if (a.kind == SymKind::F && b.kind == SymKind::E) {
					// f_j(Y) e_i(X) = e_i(X) f_j(Y) - [e_i(X), f_j(Y)].
					const Monomial X = arg_of(b), Y = arg_of(a);
					Item plain = it;
					std::swap(plain.w[k], plain.w[k + 1]);
					work.push_back(std::move(plain));
					if (a.node == b.node) {
						auto delta_item = [&](const Monomial& darg,
						                      const Monomial& psi_arg, int psi_sign,
						                      int sgn) {
							auto [pv, ps] = split_arg(psi_arg);
							Item d = it;
							d.w.erase(d.w.begin() + k, d.w.begin() + k + 2);
							d.w.insert(d.w.begin() + k,
							           sym_psi(psi_sign, a.node, pv, ps));
							d.c = d.c.scaled(qdiff.scaled(Rational(-sgn)));
							// Subtracted commutator terms, with the delta
							// substitution applied right away.  Terms
							// already under a delta keep their tag.
							CurrentExpression tmp(N);
							tmp.add(d.w, d.c);
							tmp = delta_substitute(darg, tmp);
							Monomial tag = d.has_delta ? d.delta : darg;
							for (const auto& [w2, c2] : tmp.terms())
								work.push_back({w2, ctx.s->pin(c2), true, tag});
						};
						delta_item(qc.inverse() * X * Y.inverse(), Y * qch, -1, +1);
						delta_item(qc * X * Y.inverse(), X * qch, +1, -1);
					}
					requeued = true;
					break;
				}
				it.c = it.c * swap_scalar(a, b, ctx);
				std::swap(it.w[k], it.w[k + 1]);
				swapped = true;
			}
			if (swapped) it.w = cancel_inverses(it.w);
		}
		if (requeued) continue;
		if (it.has_delta) {
			auto [pos, inserted] = out.delta.try_emplace(it.delta, CurrentExpression(N));
			pos->second.add(it.w, it.c);
			if (pos->second.is_zero()) out.delta.erase(pos);
		} else {
			out.regular.add(it.w, it.c);
		}
	}
	return out;
}

} // namespace uqp
