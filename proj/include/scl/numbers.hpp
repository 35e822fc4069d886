#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace scl {

using Int = mpz_class;
using Rat = mpq_class;

/// Thrown when a p-adic image vanishes to the full working precision while
/// the operand is not symbolically zero; callers escalate the precision.
struct PrecisionExhausted : std::runtime_error {
    explicit PrecisionExhausted(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when precision doubling reaches the configured cap.
struct PrecisionCapExceeded : std::runtime_error {
    explicit PrecisionCapExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown for L-value requests at a pole of the (p-adic) L-function.
struct PoleError : std::domain_error {
    explicit PoleError(const std::string& what) : std::domain_error(what) {}
};

bool is_prime(long n);
bool is_odd_prime(long n);

/// Distinct prime factors of n > 1, ascending.
std::vector<long> prime_factors(long n);

long euler_phi(long n);

/// Smallest positive primitive root mod an odd prime p.
long smallest_primitive_root(long p);

Int pow_int(const Int& base, unsigned long e);
Int pow_mod(const Int& base, const Int& e, const Int& mod);
Int mod_inverse(const Int& a, const Int& mod);

/// Exact p-adic valuation of a nonzero integer.
long int_valuation(const Int& v, long p);

/// Exact p-adic valuation of a nonzero rational.
long rat_valuation(const Rat& v, long p);

/// Nonnegative residue in [0, mod).
Int nonneg_mod(const Int& a, const Int& mod);

std::string int_to_string(const Int& v);

}  // namespace scl
