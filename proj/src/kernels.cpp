#include "scl/kernels.hpp"

#include <algorithm>
#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "scl/linalg.hpp"

namespace scl {
namespace kernels {

namespace {

long long isqrt_ll(long long v) {
    if (v < 0) return -1;
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(v)));
    while (r > 0 && r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

int num_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

std::vector<HalfIntegralMatrix> psd_degree1(long bound) {
    std::vector<HalfIntegralMatrix> out;
    out.reserve(static_cast<std::size_t>(bound + 1));
    for (long t = 0; t <= bound; ++t) out.push_back(HalfIntegralMatrix::scalar(t));
    return out;
}

void psd_degree2_row(long a, long bound, std::vector<HalfIntegralMatrix>& out) {
    for (long c = 0; c <= bound; ++c) {
        const long long lim = isqrt_ll(4LL * a * c);
        for (long long b = -lim; b <= lim; ++b)
            out.push_back(HalfIntegralMatrix::from_twice(2, {2 * a, b, b, 2 * c}));
    }
}

void psd_degree3_diag(long a, long b, long c, long bound, std::vector<HalfIntegralMatrix>& out) {
    (void)bound;
    const long long dl = isqrt_ll(4LL * a * b);
    const long long el = isqrt_ll(4LL * a * c);
    const long long fl = isqrt_ll(4LL * b * c);
    for (long long d = -dl; d <= dl; ++d)
        for (long long e = -el; e <= el; ++e)
            for (long long f = -fl; f <= fl; ++f) {
                // 2T = [[2a,d,e],[d,2b,f],[e,f,2c]]; principal 1x1 and 2x2
                // minors are nonnegative by the loop ranges, so semidefinite
                // iff det(2T) >= 0.
                const long long det = 2 * a * (4LL * b * c - f * f) - d * (2 * d * c - f * e) +
                                      e * (d * f - 2 * e * b);
                if (det < 0) continue;
                out.push_back(HalfIntegralMatrix::from_twice(3, {2 * a, d, e, d, 2 * b, f, e, f, 2 * c}));
            }
}

}  // namespace

std::vector<HalfIntegralMatrix> enumerate_psd(int degree, long bound, Exec policy) {
    if (degree < 1 || degree > 3) throw std::invalid_argument("enumerate_psd: degree must be 1..3");
    if (bound < 0) throw std::invalid_argument("enumerate_psd: bound must be >= 0");
    if (degree == 1) return psd_degree1(bound);

    std::vector<HalfIntegralMatrix> out;
    if (degree == 2) {
        if (policy == Exec::parallel) {
            std::vector<std::vector<HalfIntegralMatrix>> locals(static_cast<std::size_t>(num_threads()));
#ifdef _OPENMP
#pragma omp parallel
            {
                auto& local = locals[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(dynamic)
                for (long a = 0; a <= bound; ++a) psd_degree2_row(a, bound, local);
            }
#else
            for (long a = 0; a <= bound; ++a) psd_degree2_row(a, bound, locals[0]);
#endif
            for (auto& l : locals) out.insert(out.end(), l.begin(), l.end());
        } else {
            for (long a = 0; a <= bound; ++a) psd_degree2_row(a, bound, out);
        }
    } else {
        const long diag_count = (bound + 1) * (bound + 1) * (bound + 1);
        if (policy == Exec::parallel) {
            std::vector<std::vector<HalfIntegralMatrix>> locals(static_cast<std::size_t>(num_threads()));
#ifdef _OPENMP
#pragma omp parallel
            {
                auto& local = locals[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(dynamic)
                for (long idx = 0; idx < diag_count; ++idx) {
                    const long a = idx / ((bound + 1) * (bound + 1));
                    const long b = (idx / (bound + 1)) % (bound + 1);
                    const long c = idx % (bound + 1);
                    psd_degree3_diag(a, b, c, bound, local);
                }
            }
#else
            for (long idx = 0; idx < diag_count; ++idx) {
                const long a = idx / ((bound + 1) * (bound + 1));
                const long b = (idx / (bound + 1)) % (bound + 1);
                const long c = idx % (bound + 1);
                psd_degree3_diag(a, b, c, bound, locals[0]);
            }
#endif
            for (auto& l : locals) out.insert(out.end(), l.begin(), l.end());
        } else {
            for (long idx = 0; idx < diag_count; ++idx) {
                const long a = idx / ((bound + 1) * (bound + 1));
                const long b = (idx / (bound + 1)) % (bound + 1);
                const long c = idx % (bound + 1);
                psd_degree3_diag(a, b, c, bound, out);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

using CoeffMap = std::map<HalfIntegralMatrix, CyclotomicNumber>;
using CoeffList = std::vector<std::pair<HalfIntegralMatrix, CyclotomicNumber>>;

void accumulate(CoeffMap& acc, const HalfIntegralMatrix& key, const CyclotomicNumber& v) {
    auto it = acc.find(key);
    if (it == acc.end())
        acc.emplace(key, v);
    else
        it->second += v;
}

void convolve_range(long lo, long hi, const CoeffList& a, const CoeffList& b, long bound,
                    CoeffMap& acc) {
    for (long i = lo; i < hi; ++i) {
        const auto& [ta, ca] = a[static_cast<std::size_t>(i)];
        for (const auto& [tb, cb] : b) {
            HalfIntegralMatrix sum = ta + tb;
            if (sum.max_diag() > bound) continue;
            accumulate(acc, sum, ca * cb);
        }
    }
}

void drop_zeros(CoeffMap& m) {
    for (auto it = m.begin(); it != m.end();) {
        if (it->second.is_zero())
            it = m.erase(it);
        else
            ++it;
    }
}

}  // namespace

std::map<HalfIntegralMatrix, CyclotomicNumber> convolve(long p, const CoeffList& a,
                                                        const CoeffList& b, long bound,
                                                        Exec policy) {
    (void)p;
    CoeffMap out;
    const long total = static_cast<long>(a.size());
    if (policy == Exec::parallel && total > 1) {
        std::vector<CoeffMap> locals(static_cast<std::size_t>(num_threads()));
#ifdef _OPENMP
#pragma omp parallel
        {
            auto& local = locals[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(dynamic, 8)
            for (long i = 0; i < total; ++i) convolve_range(i, i + 1, a, b, bound, local);
        }
#else
        convolve_range(0, total, a, b, bound, locals[0]);
#endif
        for (auto& local : locals)
            for (const auto& [k, v] : local) accumulate(out, k, v);
    } else {
        convolve_range(0, total, a, b, bound, out);
    }
    drop_zeros(out);
    return out;
}

namespace {

// Fincke-Pohst style decomposition: Q(x) = sum_i q_ii (x_i + sum_{j>i} q_ij x_j)^2.
QMat fp_decompose(int m, const std::vector<long long>& two_s) {
    QMat q(static_cast<std::size_t>(m), std::vector<Rat>(static_cast<std::size_t>(m)));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) q[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = Rat(two_s[static_cast<std::size_t>(i * m + j)]);
    for (int i = 0; i < m; ++i) {
        auto& qi = q[static_cast<std::size_t>(i)];
        if (qi[static_cast<std::size_t>(i)] <= 0)
            throw std::invalid_argument("ellipsoid_points: matrix not positive definite");
        for (int j = i + 1; j < m; ++j) {
            q[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = qi[static_cast<std::size_t>(j)];
            qi[static_cast<std::size_t>(j)] /= qi[static_cast<std::size_t>(i)];
        }
        for (int k = i + 1; k < m; ++k)
            for (int l = k; l < m; ++l)
                q[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)] -=
                    q[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] * qi[static_cast<std::size_t>(l)];
        for (int k = i + 1; k < m; ++k) q[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] = 0;
    }
    return q;
}

// Integer x range with (x + shift)^2 <= radius_sq.
std::pair<long long, long long> integer_interval(const Rat& shift, const Rat& radius_sq) {
    if (radius_sq < 0) return {0, -1};
    const double sd = mpq_get_d(shift.get_mpq_t());
    const double rd = std::sqrt(std::max(0.0, mpq_get_d(radius_sq.get_mpq_t())));
    long long lo = static_cast<long long>(std::ceil(-sd - rd)) - 4;
    long long hi = static_cast<long long>(std::floor(-sd + rd)) + 4;
    auto inside = [&](long long x) {
        Rat d = Rat(static_cast<long>(x)) + shift;
        return d * d <= radius_sq;
    };
    while (lo <= hi && !inside(lo)) ++lo;
    while (hi >= lo && !inside(hi)) --hi;
    return {lo, hi};
}

void fp_enumerate(const QMat& q, int i, std::vector<long long>& x, const Rat& budget,
                  std::vector<std::vector<long long>>& out) {
    const int m = static_cast<int>(q.size());
    Rat shift(0);
    for (int j = i + 1; j < m; ++j)
        shift += q[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * Rat(static_cast<long>(x[static_cast<std::size_t>(j)]));
    const Rat qii = q[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
    auto [lo, hi] = integer_interval(shift, budget / qii);
    for (long long v = lo; v <= hi; ++v) {
        x[static_cast<std::size_t>(i)] = v;
        Rat d = Rat(static_cast<long>(v)) + shift;
        Rat used = qii * d * d;
        if (i == 0)
            out.push_back(x);
        else
            fp_enumerate(q, i - 1, x, budget - used, out);
    }
    x[static_cast<std::size_t>(i)] = 0;
}

}  // namespace

std::vector<std::vector<long long>> ellipsoid_points(int m, const std::vector<long long>& two_s,
                                                     long bound) {
    QMat q = fp_decompose(m, two_s);
    std::vector<std::vector<long long>> out;
    std::vector<long long> x(static_cast<std::size_t>(m), 0);
    fp_enumerate(q, m - 1, x, Rat(2 * bound), out);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

using CountMap = std::map<HalfIntegralMatrix, long long>;

// Gram matrix 2T for the chosen tuple of points, using precomputed 2S * x.
HalfIntegralMatrix tuple_gram(int degree, const std::vector<std::vector<long long>>& pts,
                              const std::vector<std::vector<long long>>& images,
                              const std::vector<std::size_t>& tuple) {
    std::vector<long long> twice(static_cast<std::size_t>(degree * degree), 0);
    for (int a = 0; a < degree; ++a)
        for (int b = a; b < degree; ++b) {
            long long dot = 0;
            const auto& xa = pts[tuple[static_cast<std::size_t>(a)]];
            const auto& wb = images[tuple[static_cast<std::size_t>(b)]];
            for (std::size_t k = 0; k < xa.size(); ++k) dot += xa[k] * wb[k];
            twice[static_cast<std::size_t>(a * degree + b)] = dot;
            twice[static_cast<std::size_t>(b * degree + a)] = dot;
        }
    return HalfIntegralMatrix::from_twice(degree, std::move(twice));
}

void theta_first_column(std::size_t first, int degree, long bound,
                        const std::vector<std::vector<long long>>& pts,
                        const std::vector<std::vector<long long>>& images, CountMap& acc) {
    const std::size_t count = pts.size();
    std::vector<std::size_t> tuple(static_cast<std::size_t>(degree), 0);
    tuple[0] = first;
    // odometer over the remaining columns
    while (true) {
        HalfIntegralMatrix g = tuple_gram(degree, pts, images, tuple);
        if (g.max_diag() <= bound) acc[g] += 1;
        int pos = degree - 1;
        while (pos >= 1) {
            if (++tuple[static_cast<std::size_t>(pos)] < count) break;
            tuple[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 1) break;
    }
}

}  // namespace

std::map<HalfIntegralMatrix, long long> theta_counts(int m, const std::vector<long long>& two_s,
                                                     int degree, long bound, Exec policy) {
    if (degree < 1 || degree > 3) throw std::invalid_argument("theta_counts: degree must be 1..3");
    const auto pts = ellipsoid_points(m, two_s, bound);
    std::vector<std::vector<long long>> images(pts.size(), std::vector<long long>(static_cast<std::size_t>(m), 0));
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (int r = 0; r < m; ++r) {
            long long acc = 0;
            for (int c = 0; c < m; ++c) acc += two_s[static_cast<std::size_t>(r * m + c)] * pts[i][static_cast<std::size_t>(c)];
            images[i][static_cast<std::size_t>(r)] = acc;
        }

    CountMap out;
    const long total = static_cast<long>(pts.size());
    if (policy == Exec::parallel && total > 1) {
        std::vector<CountMap> locals(static_cast<std::size_t>(num_threads()));
#ifdef _OPENMP
#pragma omp parallel
        {
            auto& local = locals[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(dynamic)
            for (long i = 0; i < total; ++i)
                theta_first_column(static_cast<std::size_t>(i), degree, bound, pts, images, local);
        }
#else
        for (long i = 0; i < total; ++i)
            theta_first_column(static_cast<std::size_t>(i), degree, bound, pts, images, locals[0]);
#endif
        for (auto& local : locals)
            for (const auto& [k, v] : local) out[k] += v;
    } else {
        for (long i = 0; i < total; ++i)
            theta_first_column(static_cast<std::size_t>(i), degree, bound, pts, images, out);
    }
    return out;
}

}  // namespace kernels
}  // namespace scl
