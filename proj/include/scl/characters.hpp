#pragma once

#include <vector>

#include "scl/cyclotomic.hpp"

namespace scl {

/// Dirichlet character mod p, stored as a power of the distinguished
/// character psi of a branch. psi is defined by psi(m) * m = 1 mod the
/// branch ideal for all m in [1, p-1]; every character mod p is psi^a.
class DirichletCharacter {
  public:
    DirichletCharacter(const IdealBranch& branch, long exponent);

    long p() const { return branch_.p; }
    const IdealBranch& branch() const { return branch_; }
    long exponent() const { return exp_; }

    /// Smallest positive primitive root mod p (deterministic across runs).
    long generator() const { return generator_; }

    /// chi(m) as an element of Z[mu_{p-1}]; zero when p | m.
    CyclotomicNumber value(long m) const;

    /// chi(-1) as +1/-1.
    int parity() const;

    bool is_trivial() const { return exp_ == 0; }
    /// Conductor: 1 for the trivial character, p otherwise.
    long conductor() const { return is_trivial() ? 1 : p(); }

    bool operator==(const DirichletCharacter& o) const;

  private:
    IdealBranch branch_;
    long exp_;  // character = psi^exp_, reduced mod p-1
    long generator_;
    std::vector<long> dlog_;  // discrete log base d: d^{dlog_[m]} = m (mod p)
};

/// The character corresponding to the branch ideal: psi(m) m = 1 mod it.
DirichletCharacter psi_for_branch(const IdealBranch& b);

DirichletCharacter char_mul(const DirichletCharacter& a, const DirichletCharacter& b);
DirichletCharacter char_pow(const DirichletCharacter& chi, long t);

/// True iff chi^2 is trivial (exponent 0 or (p-1)/2).
bool is_quadratic(const DirichletCharacter& chi);

/// The unique nontrivial quadratic character mod p, as psi^{(p-1)/2}.
DirichletCharacter quadratic_char(long p, const IdealBranch& b);

/// The alpha in [0, p-2] with chi^sigma = omega^alpha at the chi's branch;
/// equivalently chi = psi^{-alpha}.
long omega_exponent(const DirichletCharacter& chi);

/// The character with omega-exponent alpha at this branch, i.e. psi^{-alpha}.
DirichletCharacter character_from_omega_exponent(const IdealBranch& b, long alpha);

}  // namespace scl
