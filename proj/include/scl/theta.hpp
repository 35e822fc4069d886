#pragma once

#include "scl/qexpansion.hpp"

namespace scl {

/// Even positive-definite quadratic form S of even size m, stored as the
/// integer matrix 2S (symmetric, even diagonal).
class GramMatrix {
  public:
    static GramMatrix from_twice(int m, std::vector<long long> two_s);

    int m() const { return m_; }
    const std::vector<long long>& two_s() const { return two_s_; }
    long long two_s_at(int i, int j) const { return two_s_[static_cast<std::size_t>(i * m_ + j)]; }

    /// max_i S_ii (integer diagonal of S itself).
    long long max_diag() const;

  private:
    GramMatrix(int m, std::vector<long long> two_s) : m_(m), two_s_(std::move(two_s)) {}
    int m_;
    std::vector<long long> two_s_;
};

/// theta_S^n truncated at `bound`: the coefficient of T counts the X in
/// Z^{m,n} with S[X] = T. p_tag fixes the coefficient field of the result.
FourierExpansion theta_series(const GramMatrix& s, int degree, long bound, long p_tag,
                              Exec policy = Exec::parallel);

/// Order of the integral automorphism group {U in GL_m(Z) : U^t S U = S}.
Int aut_count(const GramMatrix& s);

struct LevelChar {
    long long level = 0;  // smallest L with L (2S)^{-1} even integral
    Int discriminant;     // (-1)^{m/2} det(2S); chi_S = Kronecker symbol of it
};

LevelChar level_and_char(const GramMatrix& s);

/// chi_S(n) as the Kronecker symbol (disc / n).
int kronecker_chi(const Int& disc, long n);

/// Automorphism-weighted sum sum_S (1/eps(S)) theta_S^n over the given
/// representatives; rational coefficients.
FourierExpansion genus_theta(const std::vector<GramMatrix>& reps, int degree, long bound,
                             long p_tag, Exec policy = Exec::parallel);

}  // namespace scl
