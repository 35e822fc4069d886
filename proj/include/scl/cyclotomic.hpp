#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "scl/numbers.hpp"

namespace scl {

/// Immutable arithmetic context for Q(mu_{p-1}): the cyclotomic polynomial
/// of order p-1 and a table of reduced powers of the generator zeta.
class CycloField {
  public:
    long p;       // odd prime fixing the field
    long order;   // p - 1
    long degree;  // phi(p - 1)

    /// Monic minimal polynomial of zeta_{p-1}, coefficients low to high.
    std::vector<Int> phi;

    /// zeta^k reduced mod phi, for k in [0, max(order-1, 2*degree-2)].
    std::vector<std::vector<Int>> zeta_pow;

    /// Shared per-p instance; thread-safe.
    static std::shared_ptr<const CycloField> get(long p);

  private:
    explicit CycloField(long p_);
};

/// Element of Q(mu_{p-1}) in the power basis 1, zeta, ..., zeta^{phi(p-1)-1}
/// with a common positive denominator; always normalized so that the gcd of
/// the numerator entries and the denominator is 1.
class CyclotomicNumber {
  public:
    explicit CyclotomicNumber(long p);  // zero
    CyclotomicNumber(long p, const Rat& value);
    CyclotomicNumber(long p, long value);

    /// zeta_{p-1}^k (k arbitrary, reduced mod p-1).
    static CyclotomicNumber zeta(long p, long k = 1);

    /// From raw parts; reduces powers >= degree and normalizes.
    static CyclotomicNumber from_parts(long p, std::vector<Int> num, Int den);

    long p() const { return field_->p; }
    const std::vector<Int>& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_zero() const;
    bool is_rational() const;
    Rat rational_value() const;  // throws if not rational

    CyclotomicNumber operator-() const;
    CyclotomicNumber operator+(const CyclotomicNumber& o) const;
    CyclotomicNumber operator-(const CyclotomicNumber& o) const;
    CyclotomicNumber operator*(const CyclotomicNumber& o) const;
    CyclotomicNumber operator/(const CyclotomicNumber& o) const;
    CyclotomicNumber operator*(const Rat& r) const;
    CyclotomicNumber& operator+=(const CyclotomicNumber& o);

    bool operator==(const CyclotomicNumber& o) const;
    bool operator!=(const CyclotomicNumber& o) const { return !(*this == o); }

    /// Field inverse; throws std::domain_error on zero.
    CyclotomicNumber inverse() const;

    std::string str() const;  // human-readable, e.g. "(-3 + z)/5"

  private:
    CyclotomicNumber(std::shared_ptr<const CycloField> f, std::vector<Int> num, Int den);
    void normalize();

    std::shared_ptr<const CycloField> field_;
    std::vector<Int> num_;  // length = field_->degree
    Int den_;               // > 0
};

/// Complex conjugation, zeta -> zeta^{-1}. Involution fixing the rationals.
CyclotomicNumber conj(const CyclotomicNumber& x);

/// One prime ideal (zeta_{p-1} - d, p) above p, identified by the root d.
struct IdealBranch {
    long p = 0;
    long d = 0;
    bool operator==(const IdealBranch& o) const { return p == o.p && d == o.d; }
};

/// The complete splitting of p in Z[mu_{p-1}], one branch per root of the
/// cyclotomic polynomial of order p-1 mod p, sorted by ascending d.
struct SplitPrime {
    long p = 0;
    std::vector<IdealBranch> branches;
};

SplitPrime split_prime(long p);

/// The branch whose root is congruent to the inverse of d mod p; conjugation
/// swaps a branch with this one.
IdealBranch conjugate_branch(const IdealBranch& b);

/// Teichmuller lift of d mod p^precision: the unique (p-1)-th root of unity
/// congruent to d mod p. Computed by iterating x -> x^p until stable.
Int teichmuller_lift(long d, long p, long precision);

/// Approximation of an element of Q_p: p^valuation * unit with the unit known
/// mod p^precision (so the number is known mod p^{valuation+precision}).
/// Exact zero is the distinguished infinite-valuation value.
class PadicValue {
  public:
    static PadicValue zero(long p);
    PadicValue(long p, long valuation, Int unit, long precision);

    long p() const { return p_; }
    bool is_zero() const { return infinite_; }
    long valuation() const;  // throws on exact zero
    const Int& unit() const;
    long precision() const;

    PadicValue operator+(const PadicValue& o) const;
    PadicValue operator-(const PadicValue& o) const;
    PadicValue operator*(const PadicValue& o) const;
    PadicValue inverse() const;
    PadicValue operator-() const;

    /// Agreement of the two approximations over their shared precision.
    static bool agree(const PadicValue& a, const PadicValue& b);

    std::string str() const;

  private:
    long p_;
    bool infinite_;
    long valuation_;
    Int unit_;
    long precision_;
};

/// Image of x under the embedding determined by zeta -> omega(d), computed
/// mod p^precision. Throws PrecisionExhausted when the numerator image
/// vanishes at this precision while x is not symbolically zero.
PadicValue embed(const CyclotomicNumber& x, const IdealBranch& b, long precision);

/// Exact valuation of x at the branch ideal; nullopt encodes +infinity
/// (exactly for x = 0, decided symbolically). Escalates precision by
/// doubling from 8 up to the configured cap.
std::optional<long> valuation(const CyclotomicNumber& x, const IdealBranch& b);

/// sigma(x) mod p^precision for x with denominator prime to p.
Int branch_residue(const CyclotomicNumber& x, const IdealBranch& b, long precision);

long precision_cap();
void set_precision_cap(long cap);

}  // namespace scl
