#include "scl/numbers.hpp"

namespace scl {

bool is_prime(long n) {
    if (n < 2) return false;
    Int v(n);
    return mpz_probab_prime_p(v.get_mpz_t(), 40) != 0;
}

bool is_odd_prime(long n) { return n > 2 && is_prime(n); }

std::vector<long> prime_factors(long n) {
    std::vector<long> out;
    if (n <= 1) return out;
    for (long q = 2; q * q <= n; ++q) {
        if (n % q == 0) {
            out.push_back(q);
            while (n % q == 0) n /= q;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

long euler_phi(long n) {
    long result = n;
    for (long q : prime_factors(n)) result = result / q * (q - 1);
    return result;
}

long smallest_primitive_root(long p) {
    if (!is_odd_prime(p)) throw std::invalid_argument("smallest_primitive_root: p must be an odd prime");
    const std::vector<long> qs = prime_factors(p - 1);
    for (long g = 2; g < p; ++g) {
        bool ok = true;
        for (long q : qs) {
            Int r = pow_mod(Int(g), Int((p - 1) / q), Int(p));
            if (r == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    throw std::logic_error("smallest_primitive_root: none found");
}

Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Int pow_mod(const Int& base, const Int& e, const Int& mod) {
    Int r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), mod.get_mpz_t());
    return r;
}

Int mod_inverse(const Int& a, const Int& mod) {
    Int r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), mod.get_mpz_t()) == 0)
        throw std::invalid_argument("mod_inverse: not invertible");
    return r;
}

long int_valuation(const Int& v, long p) {
    if (v == 0) throw std::invalid_argument("int_valuation: zero has infinite valuation");
    Int r = v, q;
    long count = 0;
    while (mpz_divisible_ui_p(r.get_mpz_t(), static_cast<unsigned long>(p))) {
        mpz_divexact_ui(q.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(p));
        mpz_swap(q.get_mpz_t(), r.get_mpz_t());
        ++count;
    }
    return count;
}

long rat_valuation(const Rat& v, long p) {
    if (v == 0) throw std::invalid_argument("rat_valuation: zero has infinite valuation");
    return int_valuation(v.get_num(), p) - int_valuation(v.get_den(), p);
}

Int nonneg_mod(const Int& a, const Int& mod) {
    Int r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), mod.get_mpz_t());
    return r;
}

std::string int_to_string(const Int& v) { return v.get_str(); }

}  // namespace scl
