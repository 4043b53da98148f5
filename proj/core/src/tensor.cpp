#include <uqp/tensor.hpp>

#include <algorithm>
#include <stdexcept>

namespace uqp {

namespace {

Monomial arg_of(const CurrentSymbol& s)
{
	if (s.var < 0) return s.shift;
	return s.shift * Monomial::var(s.var);
}

// Splits a monomial argument into (current variable, prefactor); exactly
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

CurrentSymbol with_arg(CurrentSymbol s, const Monomial& arg)
{
	auto [v, shift] = split_arg(arg);
	s.var = v;
	s.shift = shift;
	return s;
}

std::vector<int>& grow(std::vector<int>& v, int rank)
{
	if (int(v.size()) < rank) v.resize(size_t(rank), 0);
	return v;
}

bool all_zero(const std::vector<int>& v)
{
	return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
}

std::string shift_str(const std::vector<int>& shift)
{
	std::string out;
	for (size_t r = 0; r < shift.size(); ++r) {
		if (shift[r] == 0) continue;
		if (!out.empty()) out += " ";
		out += (shift[r] > 0 ? "+" : "") + std::to_string(shift[r]) + "Q" +
		       std::to_string(r + 1);
	}
	return out.empty() ? "0" : out;
}

Word substituted_word(const Word& w, int id, const Monomial& image)
{
	Word out;
	out.reserve(w.size());
	for (const CurrentSymbol& s : w) {
		if (s.var < 0 && !s.shift.contains(id)) {
			out.push_back(s);
			continue;
		}
		if (s.var < 0) {
			CurrentSymbol t = s;
			t.shift = t.shift.substitute(id, image);
			out.push_back(t);
			continue;
		}
		out.push_back(with_arg(s, arg_of(s).substitute(id, image)));
	}
	return out;
}

TensorTerm substituted_term(const TensorTerm& t, int id, const Monomial& image)
{
	TensorTerm out = t;
	for (Leg& l : out.legs) l.word = substituted_word(l.word, id, image);
	out.delta = out.delta.substitute(id, image);
	return out;
}

} // namespace

std::string DynamicalFactor::str() const
{
	std::string out = right ? "mu_r(" : "mu_l(";
	out += "F" + std::to_string(name);
	if (!all_zero(shift)) out += "; " + shift_str(shift);
	return out + ")";
}

Bigrade& Bigrade::operator+=(const Bigrade& o)
{
	grow(alpha, int(o.alpha.size()));
	grow(beta, int(o.beta.size()));
	for (size_t r = 0; r < o.alpha.size(); ++r) alpha[r] += o.alpha[r];
	for (size_t r = 0; r < o.beta.size(); ++r) beta[r] += o.beta[r];
	return *this;
}

std::string Bigrade::str() const
{
	return "(" + shift_str(alpha) + ", " + shift_str(beta) + ")";
}

Bigrade word_bigrade(const Word& w, int rank)
{
	Bigrade g{std::vector<int>(size_t(rank), 0), std::vector<int>(size_t(rank), 0)};
	for (const CurrentSymbol& s : w) {
		const int d = s.inv ? +1 : -1;
		switch (s.kind) {
		case SymKind::E:
			g.alpha[size_t(s.node)] += d;
			break;
		case SymKind::F:
			g.beta[size_t(s.node)] += d;
			break;
		case SymKind::PsiPlus:
		case SymKind::PsiMinus:
		case SymKind::KPlus:
		case SymKind::KMinus:
			g.alpha[size_t(s.node)] += d;
			g.beta[size_t(s.node)] += d;
			break;
		case SymKind::Qc:
		case SymKind::DOp:
			break;
		}
	}
	return g;
}

std::string Leg::str() const
{
	std::string out;
	for (const DynamicalFactor& f : dyn) out += f.str() + " ";
	out += word_str(word);
	if (!all_zero(tshift)) out += " T[" + shift_str(tshift) + "]";
	return out;
}

Leg leg_concat(const Leg& a, const Leg& b, int rank)
{
	if (!all_zero(a.tshift) && !(b.word.empty() && b.dyn.empty()))
		throw std::domain_error("leg_concat: shift operator left of a word");
	const Bigrade g = word_bigrade(a.word, rank);
	Leg out = a;
	for (DynamicalFactor f : b.dyn) {
		grow(f.shift, rank);
		const std::vector<int>& grade = f.right ? g.beta : g.alpha;
		for (int r = 0; r < rank; ++r) f.shift[size_t(r)] -= grade[size_t(r)];
		out.dyn.push_back(std::move(f));
	}
	std::sort(out.dyn.begin(), out.dyn.end());
	out.word.insert(out.word.end(), b.word.begin(), b.word.end());
	grow(out.tshift, rank);
	for (size_t r = 0; r < b.tshift.size(); ++r) out.tshift[r] += b.tshift[r];
	if (all_zero(out.tshift)) out.tshift.clear();
	return out;
}

std::string TensorTerm::str() const
{
	std::string out;
	if (!delta.is_one()) out += "delta(" + delta.str() + ") ";
	for (size_t k = 0; k < legs.size(); ++k) {
		if (k) out += " (x) ";
		out += legs[k].str();
	}
	return out;
}

int leg_uvar(int nlegs, int k)
{
	if (nlegs == 1) return vars::U;
	return vars::U1 + k;
}

Monomial leg_nome(int nlegs, int k)
{
	Monomial nu;
	for (int m = k + 1; m < nlegs; ++m) nu = nu * Monomial::var(leg_uvar(nlegs, m), -4);
	return nu;
}

ExchangeContext leg_context(const StructureFunctionSet& s, int nlegs, int k)
{
	return {&s, leg_uvar(nlegs, k), leg_nome(nlegs, k)};
}

void TensorExpression::add(const TensorTerm& t, const PSeries& c)
{
	if (c.is_zero()) return;
	auto it = terms_.find(t);
	if (it == terms_.end()) {
		terms_.emplace(t, c);
		return;
	}
	it->second += c;
	if (it->second.is_zero()) terms_.erase(it);
}

TensorExpression TensorExpression::operator+(const TensorExpression& o) const
{
	TensorExpression out = *this;
	for (const auto& [t, c] : o.terms_) out.add(t, c);
	return out;
}

TensorExpression TensorExpression::operator-(const TensorExpression& o) const
{
	TensorExpression out = *this;
	for (const auto& [t, c] : o.terms_) out.add(t, -c);
	return out;
}

TensorExpression TensorExpression::operator-() const
{
	TensorExpression out(nlegs_, order_, rank_);
	for (const auto& [t, c] : terms_) out.add(t, -c);
	return out;
}

TensorExpression TensorExpression::operator*(const TensorExpression& o) const
{
	if (o.nlegs_ != nlegs_)
		throw std::domain_error("TensorExpression: leg count mismatch in product");
	TensorExpression out(nlegs_, order_, rank_);
	for (const auto& [t1, c1] : terms_)
		for (const auto& [t2, c2] : o.terms_) {
			TensorTerm t;
			t.legs.reserve(size_t(nlegs_));
			for (int k = 0; k < nlegs_; ++k)
				t.legs.push_back(leg_concat(t1.legs[size_t(k)], t2.legs[size_t(k)], rank_));
			t.delta = t1.delta * t2.delta;
			out.add(t, c1 * c2);
		}
	return out;
}

TensorExpression TensorExpression::scaled(const PSeries& c) const
{
	TensorExpression out(nlegs_, order_, rank_);
	for (const auto& [t, co] : terms_) out.add(t, co * c);
	return out;
}

TensorExpression TensorExpression::substituted(int id, const Monomial& image) const
{
	TensorExpression out(nlegs_, order_, rank_);
	for (const auto& [t, c] : terms_)
		out.add(substituted_term(t, id, image), c.substitute(id, image));
	return out;
}

std::string TensorExpression::str() const
{
	if (terms_.empty()) return "0";
	std::string out;
	for (const auto& [t, c] : terms_) {
		if (!out.empty()) out += "\n";
		out += "[" + c.str() + "] * " + t.str();
	}
	return out;
}

TensorExpression to_tensor(const CurrentExpression& x, int rank)
{
	TensorExpression out(1, x.order(), rank);
	for (const auto& [w, c] : x.terms()) out.add({{Leg{{}, w, {}}}, Monomial()}, c);
	return out;
}

TensorExpression coproduct_at(const TensorExpression& x, int k)
{
	const int n = x.legs();
	if (k < 0 || k >= n || n >= 3)
		throw std::domain_error("coproduct_at: leg index out of range");

	// Renumber the u-variables of the legs after k upward, then split the
	// u of leg k into the two new leg units.
	TensorExpression y = x;
	for (int m = n - 1; m > k; --m)
		y = y.substituted(leg_uvar(n, m), Monomial::var(leg_uvar(n + 1, m + 1)));
	const int ua = leg_uvar(n + 1, k), ub = leg_uvar(n + 1, k + 1);
	y = y.substituted(leg_uvar(n, k), Monomial::var(ua) * Monomial::var(ub));

	const Monomial mua = Monomial::var(ua), mub = Monomial::var(ub);
	TensorExpression out(n + 1, x.order(), x.rank());
	for (const auto& [t, c] : y.terms()) {
		const Leg& src = t.legs[size_t(k)];
		if (!all_zero(src.tshift))
			throw std::domain_error("coproduct_at: shift-operator leg");

		// Expand the leg word symbol by symbol; e, f and d branch.
		std::vector<std::pair<Word, Word>> states{{Word{}, Word{}}};
		for (const CurrentSymbol& s : src.word) {
			std::vector<std::pair<Word, Word>> next;
			auto push = [&](const std::pair<Word, Word>& st, const Word& a, const Word& b) {
				auto ns = st;
				ns.first.insert(ns.first.end(), a.begin(), a.end());
				ns.second.insert(ns.second.end(), b.begin(), b.end());
				next.push_back(std::move(ns));
			};
			const Monomial arg = s.var >= 0 ? arg_of(s) : Monomial();
			for (const auto& st : states) {
				switch (s.kind) {
				case SymKind::E:
					if (s.inv) throw std::domain_error("coproduct_at: inverse e");
					push(st, {s}, {});
					push(st, {with_arg(sym_psi(+1, s.node, 0), arg * mua)},
					     {with_arg(sym_e(s.node, 0), arg * mua.pow(2))});
					break;
				case SymKind::F:
					if (s.inv) throw std::domain_error("coproduct_at: inverse f");
					push(st, {}, {s});
					push(st, {with_arg(sym_f(s.node, 0), arg * mub.pow(2))},
					     {with_arg(sym_psi(-1, s.node, 0), arg * mub)});
					break;
				case SymKind::PsiPlus:
					push(st, {with_arg(sym_psi(+1, s.node, 0, Monomial(), s.inv),
					                   arg * mub.inverse())},
					     {with_arg(sym_psi(+1, s.node, 0, Monomial(), s.inv), arg * mua)});
					break;
				case SymKind::PsiMinus:
					push(st, {with_arg(sym_psi(-1, s.node, 0, Monomial(), s.inv), arg * mub)},
					     {with_arg(sym_psi(-1, s.node, 0, Monomial(), s.inv),
					               arg * mua.inverse())});
					break;
				case SymKind::KPlus:
				case SymKind::KMinus:
				case SymKind::Qc:
					push(st, {s}, {s});
					break;
				case SymKind::DOp:
					push(st, {s}, {});
					push(st, {}, {s});
					break;
				}
			}
			states = std::move(next);
		}

		Leg baseA{{}, {}, {}}, baseB{{}, {}, {}};
		for (const DynamicalFactor& f : src.dyn) (f.right ? baseB : baseA).dyn.push_back(f);

		for (const auto& st : states) {
			TensorTerm nt;
			nt.delta = t.delta;
			for (int m = 0; m < k; ++m) nt.legs.push_back(t.legs[size_t(m)]);
			Leg la = baseA, lb = baseB;
			la.word = st.first;
			lb.word = st.second;
			nt.legs.push_back(std::move(la));
			nt.legs.push_back(std::move(lb));
			for (int m = k + 1; m < n; ++m) nt.legs.push_back(t.legs[size_t(m)]);
			out.add(nt, c);
		}
	}
	return out;
}

TensorExpression counit_at(const TensorExpression& x, int k)
{
	const int n = x.legs();
	if (k < 0 || k >= n) throw std::domain_error("counit_at: leg index out of range");
	const int uk = leg_uvar(n, k);

	TensorExpression out(n, x.order(), x.rank());
	for (const auto& [t, c] : x.terms()) {
		const Leg& src = t.legs[size_t(k)];
		Leg nl;
		nl.tshift = src.tshift;
		grow(nl.tshift, x.rank());
		bool drop = false;
		for (const CurrentSymbol& s : src.word) {
			switch (s.kind) {
			case SymKind::E:
			case SymKind::F:
			case SymKind::DOp:
				drop = true;
				break;
			case SymKind::PsiPlus:
			case SymKind::PsiMinus:
			case SymKind::KPlus:
			case SymKind::KMinus:
				nl.tshift[size_t(s.node)] += s.inv ? -1 : +1;
				break;
			case SymKind::Qc:
				break;
			}
			if (drop) break;
		}
		if (drop) continue;
		for (DynamicalFactor f : src.dyn) {
			f.right = true; // the argument nome loses its shift
			nl.dyn.push_back(std::move(f));
		}
		std::sort(nl.dyn.begin(), nl.dyn.end());
		if (all_zero(nl.tshift)) nl.tshift.clear();

		TensorTerm nt = t;
		nt.legs[size_t(k)] = std::move(nl);
		out.add(substituted_term(nt, uk, Monomial()), c.substitute(uk, Monomial()));
	}
	return out;
}

bool collapse_shift_leg(TensorExpression& x, int k, std::string* why)
{
	const int n = x.legs();
	if (n != 2 || k < 0 || k >= n)
		throw std::domain_error("collapse_shift_leg: wants a two-leg expression");
	const int other = 1 - k;

	TensorExpression out(1, x.order(), x.rank());
	for (const auto& [t, c] : x.terms()) {
		const Leg& dh = t.legs[size_t(k)];
		const Leg& rest = t.legs[size_t(other)];
		if (!dh.word.empty())
			throw std::domain_error("collapse_shift_leg: leg is not a shift operator");

		const Bigrade g = word_bigrade(rest.word, x.rank());
		const std::vector<int>& grade = k == 0 ? g.alpha : g.beta;
		std::vector<int> ts = dh.tshift;
		grow(ts, x.rank());
		bool ok = true;
		for (int r = 0; r < x.rank(); ++r)
			if (ts[size_t(r)] + grade[size_t(r)] != 0) ok = false;
		if (!ok) {
			if (why)
				*why = "shift T[" + shift_str(dh.tshift) + "] against bigrade " + g.str() +
				       " in " + t.str();
			return false;
		}

		Leg moved;
		for (DynamicalFactor f : dh.dyn) {
			f.right = (k != 0); // first leg lands as mu_l, last as mu_r
			moved.dyn.push_back(std::move(f));
		}
		Leg merged = k == 0 ? leg_concat(moved, rest, x.rank())
		                    : leg_concat(rest, moved, x.rank());
		out.add({{std::move(merged)}, t.delta}, c);
	}
	out = out.substituted(leg_uvar(2, other), Monomial::var(vars::U));
	x = std::move(out);
	return true;
}

TensorExpression antipode_at(const TensorExpression& x, int k)
{
	const int n = x.legs();
	if (k < 0 || k >= n) throw std::domain_error("antipode_at: leg index out of range");
	const int uk = leg_uvar(n, k);
	const Monomial u = Monomial::var(uk);
	const Monomial uinv = u.inverse();

	// The leg's central-charge unit is leg-k material wherever its powers
	// were bookkept, so it is inverted across the whole term first.
	TensorExpression out(n, x.order(), x.rank());
	const TensorExpression inverted = x.substituted(uk, uinv);
	for (const auto& [t, c] : inverted.terms()) {
		const Leg& src = t.legs[size_t(k)];
		Leg nl;
		for (DynamicalFactor f : src.dyn) {
			f.right = !f.right;
			nl.dyn.push_back(std::move(f));
		}
		std::sort(nl.dyn.begin(), nl.dyn.end());
		nl.tshift = src.tshift;
		for (int& s : nl.tshift) s = -s;

		Rational sign(1);
		for (auto it = src.word.rbegin(); it != src.word.rend(); ++it) {
			CurrentSymbol s = *it;
			const Monomial arg = s.var >= 0 ? arg_of(s) : Monomial();
			switch (s.kind) {
			case SymKind::PsiPlus:
			case SymKind::PsiMinus:
				nl.word.push_back(
				    with_arg(sym_psi(s.kind == SymKind::PsiPlus ? +1 : -1, s.node, 0,
				                     Monomial(), !s.inv),
				             arg));
				break;
			case SymKind::KPlus:
			case SymKind::KMinus:
			case SymKind::Qc: {
				CurrentSymbol ns = s;
				ns.inv = !ns.inv;
				nl.word.push_back(ns);
				break;
			}
			case SymKind::E:
				if (s.inv) throw std::domain_error("antipode_at: inverse e");
				sign = -sign;
				nl.word.push_back(with_arg(sym_psi(+1, s.node, 0, Monomial(), true),
				                           arg * uinv));
				nl.word.push_back(with_arg(sym_e(s.node, 0), arg * uinv.pow(2)));
				break;
			case SymKind::F:
				if (s.inv) throw std::domain_error("antipode_at: inverse f");
				sign = -sign;
				nl.word.push_back(with_arg(sym_f(s.node, 0), arg * uinv.pow(2)));
				nl.word.push_back(with_arg(sym_psi(-1, s.node, 0, Monomial(), true),
				                           arg * uinv));
				break;
			case SymKind::DOp:
				sign = -sign;
				nl.word.push_back(s);
				break;
			}
		}

		TensorTerm nt = t;
		nt.legs[size_t(k)] = std::move(nl);
		out.add(nt, c.nome_twist(Monomial::var(uk, -4)).scaled(RatFun(sign)));
	}
	return out;
}

TensorExpression merge_legs(const TensorExpression& x)
{
	if (x.legs() != 2) throw std::domain_error("merge_legs: wants a two-leg expression");
	TensorExpression out(1, x.order(), x.rank());
	const Monomial u = Monomial::var(vars::U);
	for (const auto& [t, c] : x.terms()) {
		TensorTerm nt{{leg_concat(t.legs[0], t.legs[1], x.rank())}, t.delta};
		nt = substituted_term(nt, vars::U1, u);
		nt = substituted_term(nt, vars::U2, u);
		out.add(nt, c.substitute(vars::U1, u).substitute(vars::U2, u));
	}
	return out;
}

namespace {

TensorExpression push_factors(const TensorExpression& x, bool dagger)
{
	TensorExpression out(x.legs(), x.order(), x.rank());
	for (const auto& [t, c] : x.terms()) {
		TensorTerm nt = t;
		const int n = int(nt.legs.size());
		if (!dagger) {
			for (int k = 0; k + 1 < n; ++k) {
				auto& dyn = nt.legs[size_t(k)].dyn;
				auto mid = std::stable_partition(
				    dyn.begin(), dyn.end(),
				    [](const DynamicalFactor& f) { return !f.right; });
				for (auto it = mid; it != dyn.end(); ++it) {
					DynamicalFactor f = *it;
					f.right = false;
					nt.legs[size_t(k) + 1].dyn.push_back(std::move(f));
				}
				dyn.erase(mid, dyn.end());
			}
		} else {
			for (int k = n - 1; k > 0; --k) {
				auto& dyn = nt.legs[size_t(k)].dyn;
				auto mid = std::stable_partition(
				    dyn.begin(), dyn.end(),
				    [](const DynamicalFactor& f) { return f.right; });
				for (auto it = mid; it != dyn.end(); ++it) {
					DynamicalFactor f = *it;
					f.right = true;
					nt.legs[size_t(k) - 1].dyn.push_back(std::move(f));
				}
				dyn.erase(mid, dyn.end());
			}
		}
		for (Leg& l : nt.legs) std::sort(l.dyn.begin(), l.dyn.end());
		out.add(nt, c);
	}
	return out;
}

} // namespace

TensorExpression tensor_normal_form(const TensorExpression& x)
{
	return push_factors(x, false);
}

TensorExpression tensor_normal_form_dagger(const TensorExpression& x)
{
	return push_factors(x, true);
}

TensorExpression flip(const TensorExpression& x)
{
	const int n = x.legs();
	TensorExpression out(n, x.order(), x.rank());
	// Exchange the leg u-variables through a scratch slot.
	TensorExpression y = x;
	if (n == 2) {
		y = y.substituted(vars::U1, Monomial::var(vars::U3));
		y = y.substituted(vars::U2, Monomial::var(vars::U1));
		y = y.substituted(vars::U3, Monomial::var(vars::U2));
	} else if (n == 3) {
		y = y.substituted(vars::U1, Monomial::var(vars::U));
		y = y.substituted(vars::U3, Monomial::var(vars::U1));
		y = y.substituted(vars::U, Monomial::var(vars::U3));
	}
	for (const auto& [t, c] : y.terms()) {
		TensorTerm nt = t;
		std::reverse(nt.legs.begin(), nt.legs.end());
		out.add(nt, c);
	}
	return out;
}

TensorExpression tensor_sort(const TensorExpression& x, const StructureFunctionSet& s)
{
	const int n = x.legs();
	const int N = x.order();
	std::vector<ExchangeContext> ctx;
	for (int k = 0; k < n; ++k) ctx.push_back(leg_context(s, n, k));
	const RatFun qdiff =
	    s.pin(RatFun::one() /
	          (RatFun::monomial(q_power(1)) - RatFun::monomial(q_power(-1))));

	struct Item {
		TensorTerm t;
		PSeries c;
	};
	std::vector<Item> work;
	for (const auto& [t, c] : x.terms()) work.push_back({t, c});

	TensorExpression out(n, N, x.rank());
	while (!work.empty()) {
		Item it = std::move(work.back());
		work.pop_back();

		bool requeued = false;
		for (int k = 0; k < n && !requeued; ++k) {
			Word& w = it.t.legs[size_t(k)].word;
			w = cancel_inverses(w);
			bool swapped = true;
			while (swapped && !requeued) {
				swapped = false;
				for (size_t p = 0; p + 1 < w.size(); ++p) {
					if (!sym_before(w[p + 1], w[p])) continue;
					const CurrentSymbol a = w[p];
					const CurrentSymbol b = w[p + 1];
					if (a.kind == SymKind::F && b.kind == SymKind::E) {
						// f_j(Y) e_i(X) = e_i(X) f_j(Y) - [e_i(X), f_j(Y)].
						const Monomial X = arg_of(b), Y = arg_of(a);
						Item plain = it;
						std::swap(plain.t.legs[size_t(k)].word[p],
						          plain.t.legs[size_t(k)].word[p + 1]);
						work.push_back(std::move(plain));
						if (a.node == b.node) {
							const Monomial qc = c_power(ctx[size_t(k)].uvar, 1);
							const Monomial qch = c_power(ctx[size_t(k)].uvar, {1, 2});
							auto delta_item = [&](const Monomial& darg,
							                      const Monomial& psi_arg, int psi_sign,
							                      int sgn) {
								Item d = it;
								Word& dw = d.t.legs[size_t(k)].word;
								dw.erase(dw.begin() + long(p), dw.begin() + long(p) + 2);
								dw.insert(dw.begin() + long(p),
								          with_arg(sym_psi(psi_sign, a.node, 0), psi_arg));
								d.c = d.c.scaled(qdiff.scaled(Rational(-sgn)));
								// Apply the delta substitution across the
								// whole term; nested deltas keep their tag.
								int zv = -1;
								for (int id : vars::current_labels())
									if (darg.exponent(id) == 1) { zv = id; break; }
								if (zv < 0)
									throw std::domain_error(
									    "tensor_sort: bad delta argument " + darg.str());
								const Monomial image =
								    (darg * Monomial::var(zv).inverse()).inverse();
								const bool tagged = !d.t.delta.is_one();
								d.t = substituted_term(d.t, zv, image);
								d.c = s.pin(d.c.substitute(zv, image));
								if (!tagged) d.t.delta = darg;
								work.push_back(std::move(d));
							};
							delta_item(qc.inverse() * X * Y.inverse(), Y * qch, -1, +1);
							delta_item(qc * X * Y.inverse(), X * qch, +1, -1);
						}
						requeued = true;
						break;
					}
					it.c = it.c * swap_scalar(a, b, ctx[size_t(k)]);
					std::swap(w[p], w[p + 1]);
					swapped = true;
				}
				if (swapped) w = cancel_inverses(w);
			}
		}
		if (!requeued) out.add(it.t, it.c);
	}
	return out;
}

} // namespace uqp
