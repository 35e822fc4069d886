#include "scl/qexpansion.hpp"

#include <algorithm>

#include "scl/kernels.hpp"
#include "scl/linalg.hpp"

namespace scl {

HalfIntegralMatrix::HalfIntegralMatrix(int n)
    : n_(n), twice_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {
    if (n < 1) throw std::invalid_argument("HalfIntegralMatrix: size must be >= 1");
}

HalfIntegralMatrix HalfIntegralMatrix::from_twice(int n, std::vector<long long> twice) {
    if (n < 1 || twice.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
        throw std::invalid_argument("HalfIntegralMatrix: bad dimensions");
    for (int i = 0; i < n; ++i) {
        if (twice[static_cast<std::size_t>(i * n + i)] % 2 != 0)
            throw std::invalid_argument("HalfIntegralMatrix: 2T must have even diagonal");
        for (int j = i + 1; j < n; ++j)
            if (twice[static_cast<std::size_t>(i * n + j)] != twice[static_cast<std::size_t>(j * n + i)])
                throw std::invalid_argument("HalfIntegralMatrix: 2T must be symmetric");
    }
    HalfIntegralMatrix out(n);
    out.twice_ = std::move(twice);
    return out;
}

HalfIntegralMatrix HalfIntegralMatrix::scalar(long long t) { return from_twice(1, {2 * t}); }

long long HalfIntegralMatrix::max_diag() const {
    long long m = 0;
    for (int i = 0; i < n_; ++i) m = std::max(m, diag(i));
    return m;
}

namespace {

QMat to_qmat(const HalfIntegralMatrix& t) {
    QMat a(static_cast<std::size_t>(t.n()), std::vector<Rat>(static_cast<std::size_t>(t.n())));
    for (int i = 0; i < t.n(); ++i)
        for (int j = 0; j < t.n(); ++j)
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = Rat(t.twice(i, j));
    return a;
}

}  // namespace

bool HalfIntegralMatrix::is_psd() const { return is_positive_semidefinite(to_qmat(*this)); }

bool HalfIntegralMatrix::is_positive_definite() const { return scl::is_positive_definite(to_qmat(*this)); }

int HalfIntegralMatrix::rank() const { return matrix_rank(to_qmat(*this)); }

HalfIntegralMatrix HalfIntegralMatrix::operator+(const HalfIntegralMatrix& o) const {
    if (n_ != o.n_) throw std::invalid_argument("HalfIntegralMatrix: size mismatch");
    HalfIntegralMatrix out(n_);
    for (std::size_t i = 0; i < twice_.size(); ++i) out.twice_[i] = twice_[i] + o.twice_[i];
    return out;
}

long long HalfIntegralMatrix::trace_pair(const HalfIntegralMatrix& s0) const {
    if (n_ != s0.n_) throw std::invalid_argument("trace_pair: size mismatch");
    long long acc = 0;
    for (int i = 0; i < n_; ++i) {
        acc += twice(i, i) * s0.twice(i, i) / 2;
        for (int j = i + 1; j < n_; ++j) acc += twice(i, j) * s0.twice(i, j);
    }
    return acc;
}

bool HalfIntegralMatrix::congruent_mod(const HalfIntegralMatrix& t0, long R) const {
    if (n_ != t0.n_) throw std::invalid_argument("congruent_mod: size mismatch");
    if (R < 1) throw std::invalid_argument("congruent_mod: R must be >= 1");
    for (int i = 0; i < n_; ++i) {
        if ((diag(i) - t0.diag(i)) % R != 0) return false;
        for (int j = i + 1; j < n_; ++j)
            if ((twice(i, j) - t0.twice(i, j)) % R != 0) return false;
    }
    return true;
}

std::strong_ordering HalfIntegralMatrix::operator<=>(const HalfIntegralMatrix& o) const {
    if (auto c = n_ <=> o.n_; c != 0) return c;
    for (std::size_t i = 0; i < twice_.size(); ++i)
        if (auto c = twice_[i] <=> o.twice_[i]; c != 0) return c;
    return std::strong_ordering::equal;
}

std::vector<HalfIntegralMatrix> enumerate_psd(int degree, long bound, Exec policy) {
    return kernels::enumerate_psd(degree, bound, policy);
}

FourierExpansion::FourierExpansion(long p, int degree, long bound)
    : p_(p), degree_(degree), bound_(bound) {
    if (degree < 1 || degree > 3) throw std::invalid_argument("FourierExpansion: degree must be 1..3");
    if (bound < 0) throw std::invalid_argument("FourierExpansion: bound must be >= 0");
}

FourierExpansion FourierExpansion::constant(long p, int degree, long bound,
                                            const CyclotomicNumber& c) {
    FourierExpansion f(p, degree, bound);
    f.set_coeff(HalfIntegralMatrix(degree), c);
    return f;
}

CyclotomicNumber FourierExpansion::coeff(const HalfIntegralMatrix& t) const {
    if (t.n() != degree_) throw std::invalid_argument("coeff: degree mismatch");
    if (t.max_diag() > bound_) throw std::out_of_range("coeff: index beyond truncation bound");
    auto it = coeffs_.find(t);
    return it == coeffs_.end() ? CyclotomicNumber(p_) : it->second;
}

void FourierExpansion::set_coeff(const HalfIntegralMatrix& t, const CyclotomicNumber& c) {
    if (t.n() != degree_) throw std::invalid_argument("set_coeff: degree mismatch");
    if (t.max_diag() > bound_) throw std::out_of_range("set_coeff: index beyond truncation bound");
    if (c.p() != p_) throw std::invalid_argument("set_coeff: coefficient field mismatch");
    if (c.is_zero())
        coeffs_.erase(t);
    else
        coeffs_.insert_or_assign(t, c);
}

CyclotomicNumber FourierExpansion::coeff1(long long t) const {
    if (degree_ != 1) throw std::invalid_argument("coeff1: expansion degree is not 1");
    return coeff(HalfIntegralMatrix::scalar(t));
}

void FourierExpansion::set_coeff1(long long t, const CyclotomicNumber& c) {
    if (degree_ != 1) throw std::invalid_argument("set_coeff1: expansion degree is not 1");
    set_coeff(HalfIntegralMatrix::scalar(t), c);
}

FourierExpansion FourierExpansion::truncated(long new_bound) const {
    FourierExpansion out(p_, degree_, std::min(bound_, new_bound));
    for (const auto& [t, c] : coeffs_)
        if (t.max_diag() <= out.bound_) out.coeffs_.emplace(t, c);
    return out;
}

FourierExpansion FourierExpansion::operator+(const FourierExpansion& o) const {
    if (p_ != o.p_ || degree_ != o.degree_)
        throw std::invalid_argument("FourierExpansion: field or degree mismatch");
    FourierExpansion out(p_, degree_, std::min(bound_, o.bound_));
    for (const auto& [t, c] : coeffs_)
        if (t.max_diag() <= out.bound_) out.coeffs_.emplace(t, c);
    for (const auto& [t, c] : o.coeffs_) {
        if (t.max_diag() > out.bound_) continue;
        auto it = out.coeffs_.find(t);
        if (it == out.coeffs_.end())
            out.coeffs_.emplace(t, c);
        else {
            it->second += c;
            if (it->second.is_zero()) out.coeffs_.erase(it);
        }
    }
    return out;
}

FourierExpansion FourierExpansion::operator-(const FourierExpansion& o) const {
    return *this + o.scaled(CyclotomicNumber(o.p_, -1));
}

FourierExpansion FourierExpansion::scaled(const CyclotomicNumber& c) const {
    FourierExpansion out(p_, degree_, bound_);
    if (c.is_zero()) return out;
    for (const auto& [t, v] : coeffs_) {
        CyclotomicNumber w = v * c;
        if (!w.is_zero()) out.coeffs_.emplace(t, w);
    }
    return out;
}

FourierExpansion FourierExpansion::mul(const FourierExpansion& o, Exec policy) const {
    if (p_ != o.p_ || degree_ != o.degree_)
        throw std::invalid_argument("FourierExpansion: field or degree mismatch");
    FourierExpansion out(p_, degree_, std::min(bound_, o.bound_));
    std::vector<std::pair<HalfIntegralMatrix, CyclotomicNumber>> a(coeffs_.begin(), coeffs_.end());
    std::vector<std::pair<HalfIntegralMatrix, CyclotomicNumber>> b(o.coeffs_.begin(), o.coeffs_.end());
    out.coeffs_ = kernels::convolve(p_, a, b, out.bound_, policy);
    return out;
}

FourierExpansion FourierExpansion::pow(long e, Exec policy) const {
    if (e < 0) throw std::invalid_argument("pow: negative exponent");
    FourierExpansion acc = constant(p_, degree_, bound_, CyclotomicNumber(p_, 1));
    FourierExpansion base = *this;
    while (e > 0) {
        if (e & 1) acc = acc.mul(base, policy);
        e >>= 1;
        if (e > 0) base = base.mul(base, policy);
    }
    return acc;
}

bool FourierExpansion::operator==(const FourierExpansion& o) const {
    return p_ == o.p_ && degree_ == o.degree_ && bound_ == o.bound_ && coeffs_ == o.coeffs_;
}

FourierExpansion conj(const FourierExpansion& f) {
    FourierExpansion out(f.p(), f.degree(), f.bound());
    for (const auto& [t, c] : f.coeffs()) out.set_coeff(t, conj(c));
    return out;
}

std::optional<long> nu(const FourierExpansion& f, const IdealBranch& b) {
    if (f.p() != b.p) throw std::invalid_argument("nu: prime mismatch");
    std::optional<long> best;
    for (const auto& [t, c] : f.coeffs()) {
        auto v = valuation(c, b);
        if (!v) continue;
        if (!best || *v < *best) best = v;
    }
    return best;
}

bool congruent(const FourierExpansion& f, const FourierExpansion& g, const IdealBranch& b, long r) {
    if (r < 1) throw std::invalid_argument("congruent: r must be >= 1");
    const long common = std::min(f.bound(), g.bound());
    auto v = nu(f.truncated(common) - g.truncated(common), b);
    return !v || *v >= r;
}

FourierExpansion sieve(const FourierExpansion& f, long R, const HalfIntegralMatrix& t0) {
    if (R < 1) throw std::invalid_argument("sieve: R must be >= 1");
    if (t0.n() != f.degree()) throw std::invalid_argument("sieve: T0 degree mismatch");
    FourierExpansion out(f.p(), f.degree(), f.bound());
    for (const auto& [t, c] : f.coeffs())
        if (t.congruent_mod(t0, R)) out.set_coeff(t, c);
    return out;
}

FourierExpansion specialize(const FourierExpansion& f, const HalfIntegralMatrix& s0) {
    if (s0.n() != f.degree()) throw std::invalid_argument("specialize: S0 degree mismatch");
    if (!s0.is_positive_definite()) throw std::invalid_argument("specialize: S0 must be positive definite");

    // smallest c with S0 >= (1/c) * identity, so that tr(2T*S0) = t forces
    // max diag of T <= c*t/2 and the output is complete up to 2*bound/c
    long c = 1;
    for (;; ++c) {
        QMat test(static_cast<std::size_t>(s0.n()), std::vector<Rat>(static_cast<std::size_t>(s0.n())));
        for (int i = 0; i < s0.n(); ++i)
            for (int j = 0; j < s0.n(); ++j) {
                test[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = Rat(c * s0.twice(i, j));
                if (i == j) test[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -= 2;
            }
        if (is_positive_semidefinite(test)) break;
        if (c > 1000000) throw std::logic_error("specialize: scaling bound not found");
    }

    FourierExpansion out(f.p(), 1, 2 * f.bound() / c);
    for (const auto& [t, a] : f.coeffs()) {
        const long long idx = t.trace_pair(s0);
        if (idx > out.bound()) continue;
        auto key = HalfIntegralMatrix::scalar(idx);
        CyclotomicNumber prev = out.coeff(key);
        out.set_coeff(key, prev + a);
    }
    return out;
}

SingularProfile singular_profile(const FourierExpansion& f, const IdealBranch& b, long r) {
    SingularProfile out;
    out.r = r;
    out.min_valuation.assign(static_cast<std::size_t>(f.degree()) + 1, std::nullopt);
    for (const auto& [t, c] : f.coeffs()) {
        const auto rk = static_cast<std::size_t>(t.rank());
        auto v = valuation(c, b);
        if (!v) continue;
        auto& slot = out.min_valuation[rk];
        if (!slot || *v < *slot) slot = v;
    }
    for (const auto& mv : out.min_valuation) out.vanishes_mod_r.push_back(!mv || *mv >= r);
    return out;
}

}  // namespace scl
