#pragma once

#include <uqp/current.hpp>
#include <uqp/gword.hpp>

namespace uqp {

enum class SerreVariant { E, F };

// Serre coefficients h^{(a,s)} of a pair, as rational functions of the
// gbar values of `s` in the variables z, z1..za.  h^{(a,0)} = h^{(a,a)} = 1.
std::vector<RatFun> serre_h_values(const StructureFunctionSet& s, const SerrePair& pair);

// Left-hand side of the Serre-type relation of a pair: for the e-currents
// the sum over the twisted S_a-action of
//   Phi(z; z_1..z_a) = sum_s (-1)^s h^{(a,s)}
//       prod_{m>s} gtilde*_ij(z_m/z)
//       e_i(z_a)...e_i(z_{s+1}) e_j(z) e_i(z_s)...e_i(z_1),
// where the action generator (r, r+1) contributes gtilde*_ii(z_r/z_{r+1});
// the f-side mirrors it with gtilde in place of gtilde* (arity 2 keeps the
// same word orientation, arities 3 and 4 reverse every word and use the
// inverse quotient gbar/g).  a! * (a+1) words in total.
CurrentExpression serre_expression(const StructureFunctionSet& s, const SerrePair& pair,
                                   SerreVariant variant, const ExchangeContext& ctx);

// The elliptic form of the same relation: the double sum over sigma in S_a
// and s = 0..a of (-1)^s binom(a,s)_{q_i} with wtgamma coefficient
// products, nome p* for the e-currents and p for the f-currents.
CurrentExpression elliptic_serre_expression(const StructureFunctionSet& s,
                                            const SerrePair& pair, SerreVariant variant,
                                            const ExchangeContext& ctx);

// The closed-form premultiplier carrying one relation into the other on
// the e-side:
//   (-1)^a  prod_{m<n} wtgamma*(z_m/z_n; q^{b_ii})
//           prod_m     wtgamma*(z_m/z;   q^{b_ij}).
PSeries serre_premultiplier(const StructureFunctionSet& s, const SerrePair& pair,
                            const ExchangeContext& ctx);

// Decides premultiplier * x = y word by word.  `id_prefix` names the
// per-word sub-checks in the report.
std::vector<CheckResult> compare_combinations(const CurrentExpression& x,
                                              const CurrentExpression& y,
                                              const PSeries& premultiplier,
                                              const EqualityOptions& opt,
                                              const std::string& id_prefix);

// p -> 0 of the Serre combination: the same word sums with every
// structure-function quotient replaced by 1 and h at the gbar limit.
CurrentExpression serre_p_limit_expression(const StructureFunctionSet& s,
                                           const SerrePair& pair, SerreVariant variant,
                                           const ExchangeContext& ctx);

// Checks for one root datum:
//   serre-equiv.<pair>.<e|f>: ratio of the two relation forms is
//     word-independent, invertible, and (e-side) equals the closed-form
//     premultiplier;
//   serre-sort.<pair>.<e|f>: the relation sorts to zero in the formal
//     calculus where all exchange scalars are invertible;
//   serre-p0.<pair>.<e|f>: the p -> 0 coefficient of every word matches
//     the limit combination.
std::vector<CheckResult> verify_serre_equivalence(const StructureFunctionSet& s,
                                                  const EqualityOptions& opt);
std::vector<CheckResult> verify_serre_sort(const StructureFunctionSet& s,
                                           const EqualityOptions& opt);
std::vector<CheckResult> verify_serre_p_limit(const StructureFunctionSet& s,
                                              const EqualityOptions& opt);

// The e-f commutator block: cross terms of the coproducts of e_i(z) and
// f_j(w) cancel, and the delta-supported part matches the coproduct of the
// commutator's right-hand side.  Declared here, implemented with the
// tensor layer.
std::vector<CheckResult> delta_commutator_check(int i, int j, const StructureFunctionSet& s,
                                                const EqualityOptions& opt);

} // namespace uqp
