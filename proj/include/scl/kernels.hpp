#pragma once

#include <map>
#include <utility>
#include <vector>

#include "scl/qexpansion.hpp"

namespace scl {

/// Data-parallel inner loops. Each kernel has a serial reference path and an
/// OpenMP path selected by Exec; outputs are bit-identical (exact arithmetic,
/// deterministic merges in canonical order).
namespace kernels {

std::vector<HalfIntegralMatrix> enumerate_psd(int degree, long bound, Exec policy);

/// Cauchy product of sparse coefficient lists, truncated to `bound`.
std::map<HalfIntegralMatrix, CyclotomicNumber> convolve(
    long p,
    const std::vector<std::pair<HalfIntegralMatrix, CyclotomicNumber>>& a,
    const std::vector<std::pair<HalfIntegralMatrix, CyclotomicNumber>>& b,
    long bound, Exec policy);

/// Lattice points x in Z^m with x^t (2S) x <= 2*bound, canonically ordered.
std::vector<std::vector<long long>> ellipsoid_points(int m, const std::vector<long long>& two_s,
                                                     long bound);

/// Representation counts: for each T, #{X in Z^{m,n} : S[X] = T} with
/// diagonal of T bounded by `bound`. Keys store 2T.
std::map<HalfIntegralMatrix, long long> theta_counts(int m, const std::vector<long long>& two_s,
                                                     int degree, long bound, Exec policy);

}  // namespace kernels
}  // namespace scl
