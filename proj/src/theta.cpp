#include "scl/theta.hpp"

#include <algorithm>

#include "scl/kernels.hpp"
#include "scl/linalg.hpp"

namespace scl {

GramMatrix GramMatrix::from_twice(int m, std::vector<long long> two_s) {
    if (m < 2 || m % 2 != 0) throw std::invalid_argument("GramMatrix: size must be even and >= 2");
    if (two_s.size() != static_cast<std::size_t>(m) * static_cast<std::size_t>(m))
        throw std::invalid_argument("GramMatrix: bad dimensions");
    for (int i = 0; i < m; ++i) {
        if (two_s[static_cast<std::size_t>(i * m + i)] % 2 != 0)
            throw std::invalid_argument("GramMatrix: 2S must have even diagonal");
        for (int j = i + 1; j < m; ++j)
            if (two_s[static_cast<std::size_t>(i * m + j)] != two_s[static_cast<std::size_t>(j * m + i)])
                throw std::invalid_argument("GramMatrix: 2S must be symmetric");
    }
    QMat q(static_cast<std::size_t>(m), std::vector<Rat>(static_cast<std::size_t>(m)));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            q[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = Rat(two_s[static_cast<std::size_t>(i * m + j)]);
    if (!is_positive_definite(q)) throw std::invalid_argument("GramMatrix: S must be positive definite");
    return GramMatrix(m, std::move(two_s));
}

long long GramMatrix::max_diag() const {
    long long best = 0;
    for (int i = 0; i < m_; ++i) best = std::max(best, two_s_at(i, i) / 2);
    return best;
}

FourierExpansion theta_series(const GramMatrix& s, int degree, long bound, long p_tag, Exec policy) {
    if (degree < 1 || degree > 3) throw std::invalid_argument("theta_series: degree must be 1..3");
    auto counts = kernels::theta_counts(s.m(), s.two_s(), degree, bound, policy);
    FourierExpansion f(p_tag, degree, bound);
    for (const auto& [t, c] : counts) f.set_coeff(t, CyclotomicNumber(p_tag, c));
    return f;
}

namespace {

long long pair_value(const std::vector<long long>& x, const std::vector<long long>& y,
                     const GramMatrix& s) {
    // x^t (2S) y
    long long acc = 0;
    for (int i = 0; i < s.m(); ++i) {
        long long row = 0;
        for (int j = 0; j < s.m(); ++j) row += s.two_s_at(i, j) * y[static_cast<std::size_t>(j)];
        acc += x[static_cast<std::size_t>(i)] * row;
    }
    return acc;
}

void aut_extend(const GramMatrix& s, const std::vector<std::vector<long long>>& candidates,
                std::vector<std::vector<long long>>& chosen, Int& count) {
    const int j = static_cast<int>(chosen.size());
    if (j == s.m()) {
        count += 1;
        return;
    }
    for (const auto& c : candidates) {
        if (pair_value(c, c, s) != s.two_s_at(j, j)) continue;
        bool ok = true;
        for (int i = 0; i < j; ++i)
            if (pair_value(chosen[static_cast<std::size_t>(i)], c, s) != s.two_s_at(i, j)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        chosen.push_back(c);
        aut_extend(s, candidates, chosen, count);
        chosen.pop_back();
    }
}

}  // namespace

Int aut_count(const GramMatrix& s) {
    // candidate images of the basis vectors: x with S[x] <= max diagonal of S
    auto candidates = kernels::ellipsoid_points(s.m(), s.two_s(), s.max_diag());
    Int count(0);
    std::vector<std::vector<long long>> chosen;
    aut_extend(s, candidates, chosen, count);
    return count;
}

LevelChar level_and_char(const GramMatrix& s) {
    const int m = s.m();
    QMat a(static_cast<std::size_t>(m), std::vector<Rat>(static_cast<std::size_t>(m)));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = Rat(s.two_s_at(i, j));

    LevelChar out;
    const Rat det = determinant(a);
    Int disc = det.get_num();  // det(2S), an integer
    if (m / 2 % 2 != 0) disc = -disc;
    out.discriminant = disc;

    QMat inv = inverse(a);
    Int level(1);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            Rat v = inv[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            Int need = v.get_den();
            if (i == j && v.get_num() % 2 != 0) need *= 2;  // diagonal must become even
            mpz_lcm(level.get_mpz_t(), level.get_mpz_t(), need.get_mpz_t());
        }
    out.level = level.get_si();
    return out;
}

int kronecker_chi(const Int& disc, long n) {
    return mpz_kronecker_si(disc.get_mpz_t(), n);
}

FourierExpansion genus_theta(const std::vector<GramMatrix>& reps, int degree, long bound,
                             long p_tag, Exec policy) {
    FourierExpansion acc(p_tag, degree, bound);
    if (reps.empty()) return acc;
    const int m0 = reps.front().m();
    for (const auto& s : reps) {
        if (s.m() != m0) throw std::invalid_argument("genus_theta: mixed sizes");
        Int eps = aut_count(s);
        acc = acc + theta_series(s, degree, bound, p_tag, policy).scaled(CyclotomicNumber(p_tag, Rat(1) / Rat(eps)));
    }
    return acc;
}

}  // namespace scl
