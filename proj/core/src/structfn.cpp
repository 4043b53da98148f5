#include <uqp/structfn.hpp>
#include <uqp/vars.hpp>

#include <stdexcept>

namespace uqp {

Mode mode_parse(const std::string& s)
{
	if (s == "theta") return Mode::Theta;
	if (s == "generic") return Mode::Generic;
	throw std::invalid_argument("mode: expected 'theta' or 'generic', got '" + s + "'");
}

Monomial pstar_twist()
{
	return Monomial::var(vars::U, -4);
}

Monomial pstar_twist(int uvar)
{
	return Monomial::var(uvar, -4);
}

StructureFunctionSet::StructureFunctionSet(CartanData cd, int N, Mode mode)
    : cd_(std::move(cd)), N_(N), mode_(mode)
{
}

RatFun StructureFunctionSet::pin(const RatFun& f) const
{
	RatFun r = f;
	for (const auto& [id, val] : pins_) r = r.substitute(id, Monomial(), val);
	return r;
}

PSeries StructureFunctionSet::pin(const PSeries& s) const
{
	PSeries r = s;
	for (const auto& [id, val] : pins_) r = r.substitute(id, Monomial(), val);
	return r;
}

RatFun StructureFunctionSet::gbar(int i, int j, const Monomial& arg) const
{
	Rational b = cd_.b(i, j);
	LaurentPoly num = LaurentPoly::one() - LaurentPoly(q_power(b) * arg);
	LaurentPoly den = LaurentPoly::one() - LaurentPoly(q_power(-b) * arg);
	return pin(RatFun(num.mul_monomial(q_power(-b)), den));
}

PSeries StructureFunctionSet::theta_g(int i, int j, const Monomial& arg, const Monomial& nu) const
{
	Rational b = cd_.b(i, j);
	RatFun x = RatFun::monomial(arg);
	// Pins are applied to each theta series before the inverse: the series
	// inverse is the step where coefficient sizes compound.
	PSeries gp = pin(theta_series(x * RatFun::monomial(q_power(b)), N_)
	                     .scaled(RatFun::monomial(q_power(-b))));
	PSeries gm = pin(theta_series(x * RatFun::monomial(q_power(-b)), N_));
	PSeries r = gp * gm.inverse();
	return nu.is_one() ? r : pin(r.nome_twist(nu));
}

RatFun StructureFunctionSet::generic_symbol(int i, int j, const Monomial& arg, const Monomial& nu) const
{
	// Canonical representative under g_ji(x^{-1}; nu) = g_ij(x; nu)^{-1}.
	Monomial inv = arg.inverse();
	if (i == j && arg == inv) {
		// g_ii(1) is -1: theta(q^{-b}) = -q^{-b} theta(q^b).
		return RatFun(Rational(-1));
	}
	bool flip = std::tie(j, i) < std::tie(i, j) || (i == j && inv < arg);
	int ci = flip ? j : i, cj = flip ? i : j;
	const Monomial& ca = flip ? inv : arg;
	std::string name = "g[" + std::to_string(ci) + "," + std::to_string(cj) +
	                   ";" + ca.str() + ";" + nu.str() + "]";
	RatFun sym = RatFun::var(vars::id_of(name));
	return flip ? sym.inverse() : sym;
}

PSeries StructureFunctionSet::g(int i, int j, const Monomial& arg, const Monomial& nu) const
{
	if (mode_ == Mode::Theta) return theta_g(i, j, arg, nu);
	return PSeries(generic_symbol(i, j, arg, nu), N_);
}

PSeries StructureFunctionSet::gstar(int i, int j, const Monomial& arg, const Monomial& nu) const
{
	return g(i, j, arg, nu * pstar_twist());
}

PSeries StructureFunctionSet::gtilde(int i, int j, const Monomial& arg, const Monomial& nu) const
{
	return g(i, j, arg, nu).scaled(gbar(i, j, arg).inverse());
}

PSeries StructureFunctionSet::gtilde_star(int i, int j, const Monomial& arg, const Monomial& nu) const
{
	return gstar(i, j, arg, nu).inverse().scaled(gbar(i, j, arg));
}

std::vector<std::pair<int, Rational>> probe_pins(uint64_t seed)
{
	PointSource pts(seed);
	return {{vars::V, pts.draw()}, {vars::U, pts.draw()}};
}

std::vector<std::pair<int, Rational>> probe_pins_full(uint64_t seed)
{
	auto pins = probe_pins(seed);
	PointSource pts(seed ^ 0x5eed);
	for (int id : {int(vars::Z), int(vars::W), int(vars::Z1), int(vars::Z2), int(vars::Z3),
	               int(vars::Z4)})
		pins.emplace_back(id, pts.draw());
	return pins;
}

std::vector<CheckResult> check_di_condition(const StructureFunctionSet& s,
                                            const EqualityOptions& opt)
{
	std::vector<CheckResult> out;
	const int l = s.cartan().rank();
	Monomial z = Monomial::var(vars::Z);
	for (int i = 0; i < l; ++i) {
		for (int j = 0; j < l; ++j) {
			std::string id = "dicond." + s.cartan().type.str() + "." +
			                 std::to_string(i + 1) + std::to_string(j + 1);
			PSeries prod = s.g(i, j, z.inverse()) * s.g(j, i, z);
			PSeries diff = prod - PSeries::one(s.order());
			bool ok = true;
			int bad = -1;
			for (int k = 0; k <= diff.order(); ++k) {
				if (!ratfun_is_zero(diff[k], opt)) {
					ok = false;
					bad = k;
					break;
				}
			}
			out.push_back(ok ? check_pass(id)
			                 : check_fail(id, "first failure at p-order " + std::to_string(bad)));
		}
	}
	return out;
}

namespace {

CheckResult series_check(const std::string& id, const PSeries& lhs, const PSeries& rhs,
                         const EqualityOptions& opt)
{
	for (int k = 0; k <= lhs.order(); ++k) {
		EqualityOptions per = opt;
		per.seed = opt.seed + uint64_t(k) * 0x9E3779B97F4A7C15ull;
		if (!ratfun_equal(lhs[k], rhs[k], per))
			return check_fail(id, "first failure at p-order " + std::to_string(k));
	}
	return check_pass(id);
}

} // namespace

std::vector<CheckResult> verify_exchange_scalars(const CartanData& cd, int N,
                                                 const EqualityOptions& opt)
{
	std::vector<CheckResult> out;
	StructureFunctionSet s(cd, N, Mode::Theta);
	const std::string t = cd.type.str();
	Monomial x = Monomial::var(vars::Z);
	Monomial star = pstar_twist();

	for (int i = 0; i < cd.rank(); ++i) {
		for (int j = 0; j < cd.rank(); ++j) {
			Monomial qb = q_power(cd.b(i, j));
			std::string suffix = "." + t + "." + std::to_string(i + 1) + std::to_string(j + 1);

			// (a) psi+e scalar: the 4-factor Pochhammer product in the nome p*
			//     C(x) = q^{-b} (q^b q^{-c/2}x;p*)(p* q^{-b} q^{c/2}x^{-1};p*)
			//                 / (q^{-b}q^{-c/2}x;p*)(p* q^b q^{c/2}x^{-1};p*)
			//     equals g*_ij(q^{-c/2} x).
			{
				Monomial lo = c_power(vars::U, rat(-1, 2)); // q^{-c/2}
				Monomial hi = c_power(vars::U, rat(1, 2));  // q^{c/2}
				RatFun xf = RatFun::monomial(x * lo);
				RatFun xi = RatFun::monomial(x.inverse() * hi);
				PSeries C = pochhammer(xf * RatFun::monomial(qb), N) *
				            pochhammer(xf * RatFun::monomial(qb.inverse()), N).inverse() *
				            pochhammer_shifted(xi * RatFun::monomial(qb.inverse()), N) *
				            pochhammer_shifted(xi * RatFun::monomial(qb), N).inverse();
				C = C.nome_twist(star).scaled(RatFun::monomial(qb.inverse()));
				out.push_back(series_check("lemma.pef" + suffix, C, s.gstar(i, j, x * lo), opt));
			}

			// (b) C_ji(x) C_ij(x^{-1})^{-1} = g*_ij(x)/g_ij(x) with
			//     C_ji(x) = (q^{-b}xp, q^b xp*; p,p*)/(q^{-b}xp*, q^b xp; p,p*).
			{
				auto Cfun = [&](const Monomial& arg) {
					RatFun lo = RatFun::monomial(arg * qb.inverse());
					RatFun hi = RatFun::monomial(arg * qb);
					return pochhammer2(lo, star, 1, 0, N) * pochhammer2(hi, star, 0, 1, N) *
					       (pochhammer2(lo, star, 0, 1, N) * pochhammer2(hi, star, 1, 0, N)).inverse();
				};
				PSeries lhs = Cfun(x) * Cfun(x.inverse()).inverse();
				PSeries rhs = s.gstar(i, j, x) * s.g(i, j, x).inverse();
				out.push_back(series_check("lemma.pp" + suffix, lhs, rhs, opt));
			}

			// (c) x G+_ij(x^{-1};p) = -G-_ij(x;p), from theta(x^{-1};p) =
			//     -x^{-1} theta(x;p).
			{
				PSeries gp = theta_series(RatFun::monomial(x.inverse() * qb), N)
				                 .scaled(RatFun::monomial(qb.inverse() * x));
				PSeries gm = theta_series(RatFun::monomial(x * qb.inverse()), N);
				out.push_back(series_check("lemma.ee" + suffix, gp, -gm, opt));
			}
		}
	}
	return out;
}

std::vector<CheckResult> verify_gtilde_factors(const CartanData& cd, int N,
                                               const EqualityOptions& opt)
{
	std::vector<CheckResult> out;
	StructureFunctionSet s(cd, N, Mode::Theta);
	const std::string t = cd.type.str();
	Monomial x = Monomial::var(vars::Z);
	Monomial star = pstar_twist();

	for (int i = 0; i < cd.rank(); ++i) {
		for (int j = 0; j < cd.rank(); ++j) {
			Monomial qb = q_power(cd.b(i, j));
			std::string suffix = "." + t + "." + std::to_string(i + 1) + std::to_string(j + 1);

			// gbar/g* = wtgamma*(x^{-1};q^b)/wtgamma*(x;q^b)
			PSeries lhs = s.gtilde_star(i, j, x);
			PSeries rhs = (wtgamma_series(RatFun::monomial(x.inverse()), qb, N) *
			               wtgamma_series(RatFun::monomial(x), qb, N).inverse())
			                  .nome_twist(star);
			out.push_back(series_check("gtilde.star" + suffix, lhs, rhs, opt));

			// g/gbar = wtgamma(x;q^b)/wtgamma(x^{-1};q^b)
			PSeries lhs2 = s.gtilde(i, j, x);
			PSeries rhs2 = wtgamma_series(RatFun::monomial(x), qb, N) *
			               wtgamma_series(RatFun::monomial(x.inverse()), qb, N).inverse();
			out.push_back(series_check("gtilde" + suffix, lhs2, rhs2, opt));
		}
	}
	return out;
}

} // namespace uqp
