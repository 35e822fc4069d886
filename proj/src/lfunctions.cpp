#include "scl/lfunctions.hpp"

#include <mutex>

namespace scl {

namespace {

Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

}  // namespace

Rat bernoulli_number(long n) {
    if (n < 0) throw std::invalid_argument("bernoulli_number: n must be >= 0");
    static std::mutex mu;
    static std::vector<Rat> cache{Rat(1)};
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<long>(cache.size()) <= n) {
        const long k = static_cast<long>(cache.size());
        // sum_{j=0}^{k} C(k+1, j) B_j = 0
        Rat acc(0);
        for (long j = 0; j < k; ++j)
            acc += Rat(binomial(static_cast<unsigned long>(k + 1), static_cast<unsigned long>(j))) * cache[static_cast<std::size_t>(j)];
        cache.push_back(-acc / Rat(k + 1));
    }
    return cache[static_cast<std::size_t>(n)];
}

Rat bernoulli_polynomial(long n, const Rat& x) {
    // Horner over k: B_n(x) = sum_k C(n,k) B_k x^{n-k}
    Rat acc(0);
    for (long k = 0; k <= n; ++k)
        acc = acc * x + Rat(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k))) * bernoulli_number(k);
    return acc;
}

CyclotomicNumber generalized_bernoulli(long n, const DirichletCharacter& chi) {
    if (n < 1) throw std::invalid_argument("generalized_bernoulli: n must be >= 1");
    const long p = chi.p();
    const long f = chi.conductor();
    CyclotomicNumber acc(p);
    const Rat scale = (n >= 2) ? Rat(pow_int(Int(f), static_cast<unsigned long>(n - 1))) : Rat(1);
    for (long a = 1; a <= f; ++a) {
        CyclotomicNumber cv = chi.value(a);
        if (cv.is_zero()) continue;
        acc += cv * (bernoulli_polynomial(n, Rat(a, f)) * scale);
    }
    return acc;
}

CyclotomicNumber L_value(long s, const DirichletCharacter& chi) {
    if (s < 1) throw std::invalid_argument("L_value: s must be >= 1");
    if (chi.is_trivial() && s == 1) throw PoleError("L_value: pole at s = 1 for the trivial character");
    return (-generalized_bernoulli(s, chi)) * Rat(1, s);
}

CyclotomicNumber L_p_deprived(long s, const DirichletCharacter& chi) {
    CyclotomicNumber l = L_value(s, chi);
    if (!chi.is_trivial()) return l;  // chi(p) = 0 kills the Euler factor
    const Rat factor = Rat(1) - Rat(pow_int(Int(chi.p()), static_cast<unsigned long>(s - 1)));
    return l * factor;
}

CyclotomicNumber padic_L_exact(long s, long beta, const IdealBranch& b) {
    if (s < 1) throw std::invalid_argument("padic_L: s must be >= 1");
    const long p = b.p;
    const long n = p - 1;
    const long gamma = (((beta - s) % n) + n) % n;  // omega^beta * omega^{-s} = omega^gamma
    if (gamma == 0) {
        if (s == 1)
            throw PoleError("padic_L: s = 1 with omega^beta = omega (trivial-character pole case)");
        const Rat bn = bernoulli_number(s);
        const Rat euler = Rat(1) - Rat(pow_int(Int(p), static_cast<unsigned long>(s - 1)));
        return CyclotomicNumber(p, -euler * bn / Rat(s));
    }
    DirichletCharacter xi = character_from_omega_exponent(b, gamma);
    return (-generalized_bernoulli(s, xi)) * Rat(1, s);
}

PadicValue padic_L(const LValueRequest& req) {
    CyclotomicNumber v = padic_L_exact(req.s, req.omega_exponent, req.branch);
    return embed_at_least(v, req.branch, req.precision);
}

PadicValue embed_at_least(const CyclotomicNumber& x, const IdealBranch& b, long precision) {
    if (x.is_zero()) return PadicValue::zero(b.p);
    const long cap = precision_cap();
    for (long m = precision;; m *= 2) {
        if (m > cap) m = cap;
        try {
            PadicValue v = embed(x, b, m);
            if (v.precision() >= precision || m >= cap) return v;
        } catch (const PrecisionExhausted&) {
            if (m >= cap)
                throw PrecisionCapExceeded("embed_at_least: precision cap exceeded");
        }
    }
}

LimitReport limit_report(long l, int delta, long alpha, long p, const IdealBranch& branch,
                         long steps, long precision) {
    if (l < 1) throw std::invalid_argument("limit_report: l must be >= 1");
    if (delta != 0 && delta != 1) throw std::invalid_argument("limit_report: delta must be 0 or 1");
    if (alpha < 1 || alpha > p - 2) throw std::invalid_argument("limit_report: alpha out of range [1, p-2]");
    if (branch.p != p) throw std::invalid_argument("limit_report: branch prime mismatch");

    const long n = p - 1;
    const long half = n / (delta == 0 ? 1 : 2);  // (p-1)/2^delta
    LimitReport rep;
    rep.p = p;
    rep.l = l;
    rep.delta = delta;
    rep.alpha = alpha;
    rep.steps = steps;
    rep.precision = precision;
    rep.branch = branch;
    rep.alpha_nonquadratic = (alpha % ((p - 1) / 2)) != 0;
    rep.parity_feasible = ((l + half) % 2) == 0;
    rep.a = (((-alpha + half) % n) + n) % n;
    if (rep.a == 0) rep.a = n;

    // Limit candidate L^{(p)}(1-l, (*/p)^delta).
    CyclotomicNumber limit_exact(p);
    if (delta == 0) {
        if (l == 1) {
            rep.limit_is_pole = true;
        } else {
            DirichletCharacter triv(branch, 0);
            limit_exact = L_p_deprived(l, triv);
        }
    } else {
        limit_exact = L_p_deprived(l, quadratic_char(p, branch));
    }
    if (!rep.limit_is_pole) rep.limit = embed_at_least(limit_exact, branch, precision);
    else rep.limit = PadicValue::zero(p);

    const DirichletCharacter chi = character_from_omega_exponent(branch, alpha);
    Int pm(1);
    for (long m = 1; m <= steps; ++m) {
        pm *= p;
        LimitStep step;
        step.m = m;
        step.weight = l + rep.a * static_cast<long>(pm.get_si());
        CyclotomicNumber term_exact = L_p_deprived(step.weight, chi);
        step.term = embed_at_least(term_exact, branch, precision);
        if (!rep.limit_is_pole) {
            step.diff_defined = true;
            step.diff_valuation = valuation(term_exact - limit_exact, branch);
        }
        // Pole factor L_p(1+2l-2l_m, trivial) = padic_L at beta = 0, s = 2(l_m - l).
        const long s_m = 2 * (step.weight - l);
        CyclotomicNumber pole_exact = padic_L_exact(s_m, 0, branch);
        if (pole_exact.is_zero()) {
            step.pole_factor_inverse_valuation = std::nullopt;
        } else {
            step.pole_factor_inverse_valuation = -valuation(pole_exact, branch).value();
        }
        rep.terms.push_back(std::move(step));
    }
    return rep;
}

}  // namespace scl
