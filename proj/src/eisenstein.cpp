#include "scl/eisenstein.hpp"

#include <algorithm>

namespace scl {

FourierExpansion e1_psi(const IdealBranch& b, long bound) {
    const long p = b.p;
    DirichletCharacter psi = psi_for_branch(b);
    CyclotomicNumber b1 = generalized_bernoulli(1, psi);
    CyclotomicNumber factor = CyclotomicNumber(p, -2) / b1;

    // divisor sums of psi values, sieve style
    std::vector<CyclotomicNumber> sums(static_cast<std::size_t>(bound) + 1, CyclotomicNumber(p));
    for (long d = 1; d <= bound; ++d) {
        CyclotomicNumber v = psi.value(d % p);
        if (v.is_zero()) continue;
        for (long t = d; t <= bound; t += d) sums[static_cast<std::size_t>(t)] += v;
    }

    FourierExpansion f(p, 1, bound);
    f.set_coeff1(0, CyclotomicNumber(p, 1));
    for (long t = 1; t <= bound; ++t) f.set_coeff1(t, factor * sums[static_cast<std::size_t>(t)]);
    return f;
}

FourierExpansion level1_eisenstein(long k, long bound, long p_tag) {
    if (k < 4 || k % 2 != 0) throw std::invalid_argument("level1_eisenstein: k must be even and >= 4");
    const Rat factor = Rat(-2 * k) / bernoulli_number(k);
    FourierExpansion f(p_tag, 1, bound);
    f.set_coeff1(0, CyclotomicNumber(p_tag, 1));
    std::vector<Int> sigma(static_cast<std::size_t>(bound) + 1, Int(0));
    for (long d = 1; d <= bound; ++d) {
        const Int dk = pow_int(Int(d), static_cast<unsigned long>(k - 1));
        for (long t = d; t <= bound; t += d) sigma[static_cast<std::size_t>(t)] += dk;
    }
    for (long t = 1; t <= bound; ++t)
        f.set_coeff1(t, CyclotomicNumber(p_tag, factor * Rat(sigma[static_cast<std::size_t>(t)])));
    return f;
}

CyclotomicNumber local_factor(long q, long long t, const DirichletCharacter& chi, long k) {
    if (t < 1) throw std::invalid_argument("local_factor: t must be >= 1");
    long nu_q = 0;
    while (t % q == 0) {
        t /= q;
        ++nu_q;
    }
    const long p = chi.p();
    CyclotomicNumber base = chi.value(q) * Rat(pow_int(Int(q), static_cast<unsigned long>(k - 1)));
    CyclotomicNumber acc(p, 1);
    CyclotomicNumber term(p, 1);
    for (long i = 1; i <= nu_q; ++i) {
        term = term * base;
        acc += term;
    }
    return acc;
}

FourierExpansion degree1_eisenstein_chi(long k, const DirichletCharacter& chi, long bound) {
    if (k < 2) throw std::invalid_argument("degree1_eisenstein_chi: k must be >= 2");
    const long p = chi.p();
    if (chi.parity() != (k % 2 == 0 ? 1 : -1))
        throw std::invalid_argument("degree1_eisenstein_chi: parity chi(-1) != (-1)^k");

    CyclotomicNumber l_inv = L_p_deprived(k, chi).inverse();
    FourierExpansion f(p, 1, bound);
    f.set_coeff1(0, CyclotomicNumber(p, 1));
    for (long t = 1; t <= bound; ++t) {
        CyclotomicNumber prod(p, 2);
        long rest = t;
        std::vector<long> qs;
        for (long q = 2; q * q <= rest; ++q)
            if (rest % q == 0) {
                qs.push_back(q);
                while (rest % q == 0) rest /= q;
            }
        if (rest > 1) qs.push_back(rest);
        for (long q : qs) {
            if (q == p) continue;  // chi(p) = 0 makes the p factor 1 anyway
            prod = prod * local_factor(q, t, chi, k);
        }
        f.set_coeff1(t, prod * l_inv);
    }
    return f;
}

CyclotomicNumber eisenstein_chi_divisor_coeff(long k, const DirichletCharacter& chi, long long t) {
    if (t < 1) throw std::invalid_argument("eisenstein_chi_divisor_coeff: t must be >= 1");
    const long p = chi.p();
    CyclotomicNumber acc(p);
    for (long long d = 1; d <= t; ++d) {
        if (t % d != 0) continue;
        CyclotomicNumber v = chi.value(static_cast<long>(d % p));
        if (v.is_zero()) continue;
        acc += v * Rat(pow_int(Int(d), static_cast<unsigned long>(k - 1)));
    }
    CyclotomicNumber bk = generalized_bernoulli(k, chi);
    return (CyclotomicNumber(p, -2 * k) / bk) * acc;
}

namespace {

bool fq_congruence_check(long p, long l, long lm, long half, long alpha,
                         const DirichletCharacter& chi, long m, const IdealBranch& branch) {
    const long working = m + 1;
    const Int modulus = pow_int(Int(p), static_cast<unsigned long>(working));
    for (long q : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L}) {
        if (q == p) continue;
        long long t = 1;
        for (long e = 1; e <= 2; ++e) {
            t *= q;
            CyclotomicNumber lhs = local_factor(q, t, chi, lm);
            const Int lhs_res = branch_residue(lhs, branch, working);
            // F_q(t, omega^{half}(q) q^{l-2}) = sum_i (omega^{half}(q) q^{l-1})^i mod p^{m+1}
            const Int tq = teichmuller_lift(q % p, p, working);
            const Int omega_half = pow_mod(tq, Int(half), modulus);
            const Int base = nonneg_mod(omega_half * pow_mod(Int(q), Int(l - 1), modulus), modulus);
            Int rhs(1), term(1);
            for (long i = 1; i <= e; ++i) {
                term = nonneg_mod(term * base, modulus);
                rhs = nonneg_mod(rhs + term, modulus);
            }
            if (lhs_res != rhs) return false;
        }
    }
    (void)alpha;
    return true;
}

}  // namespace

EisLimitReport padic_limit_series(long l, int delta, long alpha, long steps, long bound,
                                  long precision, const IdealBranch& branch) {
    const long p = branch.p;
    if (l < 1) throw std::invalid_argument("padic_limit_series: l must be >= 1");
    if (delta != 0 && delta != 1) throw std::invalid_argument("padic_limit_series: delta must be 0 or 1");
    if (alpha < 1 || alpha > p - 2) throw std::invalid_argument("padic_limit_series: alpha out of range");

    const long n = p - 1;
    const long half = (delta == 0) ? n : n / 2;

    EisLimitReport rep;
    rep.p = p;
    rep.l = l;
    rep.delta = delta;
    rep.alpha = alpha;
    rep.steps = steps;
    rep.bound = bound;
    rep.precision = precision;
    rep.branch = branch;
    rep.alpha_nonquadratic = (alpha % (n / 2)) != 0;
    rep.parity_feasible = ((l + half) % 2) == 0;
    rep.a = (((-alpha + half) % n) + n) % n;
    if (rep.a == 0) rep.a = n;
    rep.companion_a = ((half % n) + n) % n;
    if (rep.companion_a == 0) rep.companion_a = n;

    if (!rep.parity_feasible || steps < 1) return rep;

    const DirichletCharacter chi = character_from_omega_exponent(branch, alpha);
    std::vector<FourierExpansion> series;
    Int pm(1);
    for (long m = 1; m <= steps; ++m) {
        pm *= p;
        const long lm = l + rep.a * static_cast<long>(pm.get_si());
        const long km = l + rep.companion_a * static_cast<long>(pm.get_si());

        FourierExpansion em = degree1_eisenstein_chi(lm, chi, bound);
        FourierExpansion cm = level1_eisenstein(km, bound, p);

        EisLimitStep step;
        step.m = m;
        step.weight = lm;
        step.companion_weight = km;
        step.constant_term_one = em.coeff1(0) == CyclotomicNumber(p, 1) && cm.coeff1(0) == CyclotomicNumber(p, 1);
        if (m >= 2) {
            step.consecutive_defined = true;
            step.consecutive_min_valuation = nu(em - series.back(), branch);
        }
        step.companion_min_valuation = nu(em - cm, branch);
        step.fq_congruence_ok = fq_congruence_check(p, l, lm, half, alpha, chi, m, branch);
        rep.terms.push_back(std::move(step));
        series.push_back(std::move(em));
    }
    return rep;
}

}  // namespace scl
