#include "scl/characters.hpp"

namespace scl {

DirichletCharacter::DirichletCharacter(const IdealBranch& branch, long exponent)
    : branch_(branch), generator_(smallest_primitive_root(branch.p)) {
    const long n = branch_.p - 1;
    exp_ = ((exponent % n) + n) % n;
    // d is a root of the cyclotomic polynomial of order p-1 mod p, hence a
    // primitive root; its power table inverts into a discrete-log table.
    dlog_.assign(static_cast<std::size_t>(branch_.p), -1);
    Int pw(1);
    for (long e = 0; e < n; ++e) {
        dlog_[static_cast<std::size_t>(pw.get_si())] = e;
        pw = (pw * branch_.d) % branch_.p;
    }
    for (long m = 1; m < branch_.p; ++m)
        if (dlog_[static_cast<std::size_t>(m)] < 0)
            throw std::invalid_argument("DirichletCharacter: branch root is not primitive");
}

CyclotomicNumber DirichletCharacter::value(long m) const {
    const long p = branch_.p;
    long mm = ((m % p) + p) % p;
    if (mm == 0) return CyclotomicNumber(p);
    // psi(m) = zeta^{-dlog(m)}, so psi^a(m) = zeta^{-a dlog(m)}
    return CyclotomicNumber::zeta(p, -exp_ * dlog_[static_cast<std::size_t>(mm)]);
}

int DirichletCharacter::parity() const { return exp_ % 2 == 0 ? 1 : -1; }

bool DirichletCharacter::operator==(const DirichletCharacter& o) const {
    return branch_ == o.branch_ && exp_ == o.exp_;
}

DirichletCharacter psi_for_branch(const IdealBranch& b) { return DirichletCharacter(b, 1); }

DirichletCharacter char_mul(const DirichletCharacter& a, const DirichletCharacter& b) {
    if (!(a.branch() == b.branch())) throw std::invalid_argument("char_mul: branch mismatch");
    return DirichletCharacter(a.branch(), a.exponent() + b.exponent());
}

DirichletCharacter char_pow(const DirichletCharacter& chi, long t) {
    // exponent arithmetic handles negative t mod p-1
    long n = chi.p() - 1;
    long e = ((chi.exponent() % n) * (t % n)) % n;
    return DirichletCharacter(chi.branch(), e);
}

bool is_quadratic(const DirichletCharacter& chi) {
    const long half = (chi.p() - 1) / 2;
    return chi.exponent() == 0 || chi.exponent() == half;
}

DirichletCharacter quadratic_char(long p, const IdealBranch& b) {
    if (b.p != p) throw std::invalid_argument("quadratic_char: branch prime mismatch");
    return DirichletCharacter(b, (p - 1) / 2);
}

long omega_exponent(const DirichletCharacter& chi) {
    const long n = chi.p() - 1;
    return ((-chi.exponent()) % n + n) % n;
}

DirichletCharacter character_from_omega_exponent(const IdealBranch& b, long alpha) {
    return DirichletCharacter(b, -alpha);
}

}  // namespace scl
