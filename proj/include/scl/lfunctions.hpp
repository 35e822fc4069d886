#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "scl/characters.hpp"
#include "scl/cyclotomic.hpp"

namespace scl {

/// B_n in the convention B_1 = -1/2 (generating function t/(e^t - 1)).
/// Cached; thread-safe.
Rat bernoulli_number(long n);

/// Bernoulli polynomial value B_n(x).
Rat bernoulli_polynomial(long n, const Rat& x);

/// Generalized Bernoulli number B_{n,chi} = f^{n-1} sum_{a=1..f} chi(a) B_n(a/f),
/// f the conductor. The trivial character is taken mod 1, so B_{1,triv} = +1/2
/// and B_{n,triv} = B_n for n >= 2.
CyclotomicNumber generalized_bernoulli(long n, const DirichletCharacter& chi);

/// L(1-s, chi) = -B_{s,chi}/s. Throws PoleError for the trivial character at s = 1.
CyclotomicNumber L_value(long s, const DirichletCharacter& chi);

/// L^{(p)}(1-s, chi) = (1 - chi(p) p^{s-1}) L(1-s, chi); chi(p) = 1 for the
/// trivial character (conductor 1) and 0 for nontrivial characters mod p.
CyclotomicNumber L_p_deprived(long s, const DirichletCharacter& chi);

/// Request for a Kubota-Leopoldt value L_p(1-s, omega^beta).
struct LValueRequest {
    long s = 1;               // evaluation point 1-s, s >= 1
    long omega_exponent = 0;  // beta: the character as a power of omega
    IdealBranch branch;       // fixes the embedding used to realize omega-powers
    long precision = 12;
};

/// Exact right-hand side of the interpolation formula
///   L_p(1-s, omega^beta) = -(1 - xi(p) p^{s-1}) B_{s,xi}/s,  xi = omega^{beta-s},
/// with xi materialized inside Q(mu_{p-1}) as psi^{-(beta-s)}.
/// Throws PoleError for s = 1 with beta = s mod p-1.
CyclotomicNumber padic_L_exact(long s, long beta, const IdealBranch& b);

/// padic_L_exact embedded at the branch to the requested precision.
PadicValue padic_L(const LValueRequest& req);

/// embed with automatic precision escalation (doubling up to the cap), so a
/// high-valuation result still carries `precision` digits of unit.
PadicValue embed_at_least(const CyclotomicNumber& x, const IdealBranch& b, long precision);

struct LimitStep {
    long m = 0;
    long weight = 0;  // l_m = l + a p^m
    PadicValue term = PadicValue::zero(3);
    bool diff_defined = false;            // false when the limit candidate is a pole
    std::optional<long> diff_valuation;   // nullopt = exact zero difference
    std::optional<long> pole_factor_inverse_valuation;  // v_p(L_p(1+2l-2l_m, triv)^{-1})
};

/// Convergence experiment for L^{(p)}(1 - l_m, omega^alpha) with
/// l_m = l + a p^m, a = -alpha + (p-1)/2^delta mod p-1, against the limit
/// candidate L^{(p)}(1 - l, (*/p)^delta).
struct LimitReport {
    long p = 0, l = 0, delta = 0, alpha = 0, a = 0, steps = 0, precision = 0;
    IdealBranch branch;
    bool alpha_nonquadratic = false;  // alpha != 0 mod (p-1)/2
    bool parity_feasible = false;     // l + (p-1)/2^delta even
    bool limit_is_pole = false;       // trivial character at s = 1 (delta = 0, l = 1)
    PadicValue limit = PadicValue::zero(3);
    std::vector<LimitStep> terms;
};

LimitReport limit_report(long l, int delta, long alpha, long p, const IdealBranch& branch,
                         long steps, long precision);

}  // namespace scl
