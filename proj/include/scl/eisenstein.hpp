#pragma once

#include "scl/lfunctions.hpp"
#include "scl/qexpansion.hpp"

namespace scl {

/// Weight-one Eisenstein series of a branch character:
/// E_{1,psi} = 1 - (2/B_{1,psi}) sum_{n>=1} (sum_{d|n} psi(d)) q^n.
FourierExpansion e1_psi(const IdealBranch& b, long bound);

/// Level-1 Eisenstein series E_k = 1 - (2k/B_k) sum sigma_{k-1}(n) q^n,
/// k even >= 4. Coefficients are rational; p_tag fixes the coefficient field.
FourierExpansion level1_eisenstein(long k, long bound, long p_tag);

/// Rank-1 local polynomial F_q(t, X) = sum_{i=0}^{v_q(t)} (qX)^i evaluated at
/// X = chi(q) q^{k-2} (so each term is (chi(q) q^{k-1})^i).
CyclotomicNumber local_factor(long q, long long t, const DirichletCharacter& chi, long k);

/// Degree-1 Eisenstein series with character via the local-polynomial
/// product form: a(0) = 1, a(t) = 2 prod_{q != p} F_q(t, chi(q) q^{k-2})
/// / L^{(p)}(1-k, chi). Requires chi(-1) = (-1)^k and k >= 2.
FourierExpansion degree1_eisenstein_chi(long k, const DirichletCharacter& chi, long bound);

/// Independent divisor-sum route for the same coefficient (t >= 1):
/// -(2k/B_{k,chi}) sum_{d|t} chi(d) d^{k-1}.
CyclotomicNumber eisenstein_chi_divisor_coeff(long k, const DirichletCharacter& chi, long long t);

struct EisLimitStep {
    long m = 0;
    long weight = 0;            // l_m = l + a p^m
    long companion_weight = 0;  // k_m = l + a' p^m, even
    bool consecutive_defined = false;            // true from the second step on
    std::optional<long> consecutive_min_valuation;  // min_t val(a_m(t) - a_{m-1}(t)); nullopt = +inf
    std::optional<long> companion_min_valuation;    // min_t val(a_m(t) - companion_m(t))
    bool constant_term_one = false;
    bool fq_congruence_ok = false;  // factor congruence mod p^{m+1} at rank 1
};

/// Degree-1 limit experiment: the sequence E_{l_m, chi} with chi = psi^{-alpha}
/// against the even-weight level-1 companion sequence E_{k_m}.
struct EisLimitReport {
    long p = 0, l = 0, delta = 0, alpha = 0, steps = 0, bound = 0, precision = 0;
    long a = 0, companion_a = 0;
    IdealBranch branch;
    bool alpha_nonquadratic = false;
    /// l + (p-1)/2^delta even; when false the character series does not exist
    /// (chi(-1) != (-1)^{l_m}) and no terms are emitted.
    bool parity_feasible = false;
    std::vector<EisLimitStep> terms;
};

EisLimitReport padic_limit_series(long l, int delta, long alpha, long steps, long bound,
                                  long precision, const IdealBranch& branch);

}  // namespace scl
