#pragma once

#include <compare>
#include <map>
#include <optional>
#include <vector>

#include "scl/cyclotomic.hpp"

namespace scl {

/// Execution policy for the data-parallel kernels. The serial path is the
/// reference implementation; the parallel path must produce identical output.
enum class Exec { serial, parallel };

/// Half-integral symmetric matrix T, stored as the integer matrix 2T
/// (symmetric with even diagonal). Ordering is canonical: size first, then
/// the entries of 2T row-major.
class HalfIntegralMatrix {
  public:
    explicit HalfIntegralMatrix(int n);  // zero matrix
    static HalfIntegralMatrix from_twice(int n, std::vector<long long> twice);
    static HalfIntegralMatrix scalar(long long t);  // degree 1: T = (t)

    int n() const { return n_; }
    long long twice(int i, int j) const { return twice_[static_cast<std::size_t>(i * n_ + j)]; }
    const std::vector<long long>& twice_data() const { return twice_; }

    long long diag(int i) const { return twice(i, i) / 2; }  // t_ii
    long long max_diag() const;

    bool is_psd() const;
    bool is_positive_definite() const;
    int rank() const;  // rank of 2T over Q

    HalfIntegralMatrix operator+(const HalfIntegralMatrix& o) const;

    /// tr(2T * S0) as an exact integer.
    long long trace_pair(const HalfIntegralMatrix& s0) const;

    /// T = T0 mod R: entries of 2T agree mod R off the diagonal and the
    /// diagonal of T agrees mod R (the kernel of the sieve character sum).
    bool congruent_mod(const HalfIntegralMatrix& t0, long R) const;

    std::strong_ordering operator<=>(const HalfIntegralMatrix& o) const;
    bool operator==(const HalfIntegralMatrix& o) const = default;

  private:
    int n_;
    std::vector<long long> twice_;
};

/// All positive-semidefinite T with every diagonal entry of T <= bound,
/// canonically sorted. Degrees 1..3.
std::vector<HalfIntegralMatrix> enumerate_psd(int degree, long bound, Exec policy = Exec::parallel);

/// Truncated Fourier expansion of fixed degree with coefficients in
/// Q(mu_{p-1}). Complete: every in-range T has a defined coefficient, with
/// zeros stored implicitly.
class FourierExpansion {
  public:
    FourierExpansion(long p, int degree, long bound);

    static FourierExpansion constant(long p, int degree, long bound, const CyclotomicNumber& c);

    long p() const { return p_; }
    int degree() const { return degree_; }
    long bound() const { return bound_; }

    const std::map<HalfIntegralMatrix, CyclotomicNumber>& coeffs() const { return coeffs_; }

    CyclotomicNumber coeff(const HalfIntegralMatrix& t) const;
    void set_coeff(const HalfIntegralMatrix& t, const CyclotomicNumber& c);

    // degree-1 conveniences (coefficient of q^t)
    CyclotomicNumber coeff1(long long t) const;
    void set_coeff1(long long t, const CyclotomicNumber& c);

    FourierExpansion truncated(long new_bound) const;

    FourierExpansion operator+(const FourierExpansion& o) const;
    FourierExpansion operator-(const FourierExpansion& o) const;
    FourierExpansion mul(const FourierExpansion& o, Exec policy = Exec::parallel) const;
    FourierExpansion pow(long e, Exec policy = Exec::parallel) const;
    FourierExpansion scaled(const CyclotomicNumber& c) const;

    bool operator==(const FourierExpansion& o) const;

  private:
    long p_;
    int degree_;
    long bound_;
    std::map<HalfIntegralMatrix, CyclotomicNumber> coeffs_;  // nonzero only
};

/// Coefficientwise complex conjugation.
FourierExpansion conj(const FourierExpansion& f);

/// min valuation over the stored coefficients (a truncation-level statement);
/// nullopt = +infinity (all coefficients zero).
std::optional<long> nu(const FourierExpansion& f, const IdealBranch& b);

/// nu(F - G) >= r on the common bound.
bool congruent(const FourierExpansion& f, const FourierExpansion& g, const IdealBranch& b, long r);

/// Keep exactly the coefficients with T = T0 mod R.
FourierExpansion sieve(const FourierExpansion& f, long R, const HalfIntegralMatrix& t0);

/// Restriction to degree 1 indexed by t = tr(2T * S0): b(t) = sum of a(T)
/// over T with that pairing. S0 must be positive definite.
FourierExpansion specialize(const FourierExpansion& f, const HalfIntegralMatrix& s0);

struct SingularProfile {
    long r = 1;
    /// Minimum valuation among stored T of each rank 0..n; nullopt = +infinity.
    std::vector<std::optional<long>> min_valuation;
    /// min_valuation >= r (vacuously true at +infinity).
    std::vector<bool> vanishes_mod_r;
};

SingularProfile singular_profile(const FourierExpansion& f, const IdealBranch& b, long r);

}  // namespace scl
