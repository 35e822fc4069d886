#include "scl/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace scl {

namespace {

using Poly = std::vector<Int>;  // coefficients low to high, trimmed

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly x_power_minus_one(long d) {
    Poly f(static_cast<std::size_t>(d) + 1, Int(0));
    f[0] = -1;
    f[static_cast<std::size_t>(d)] = 1;
    return f;
}

// Exact division of integer polynomials, divisor monic.
Poly exact_div(Poly num, const Poly& den) {
    Poly q(num.size() - den.size() + 1, Int(0));
    for (long i = static_cast<long>(q.size()) - 1; i >= 0; --i) {
        Int c = num[static_cast<std::size_t>(i) + den.size() - 1];
        if (c == 0) continue;
        q[static_cast<std::size_t>(i)] = c;
        for (std::size_t j = 0; j < den.size(); ++j)
            num[static_cast<std::size_t>(i) + j] -= c * den[j];
    }
    trim(num);
    if (!num.empty()) throw std::logic_error("exact_div: nonzero remainder");
    return q;
}

// Cyclotomic polynomial of order n via successive exact divisions of X^d - 1.
Poly cyclotomic_polynomial(long n) {
    std::vector<long> divisors;
    for (long d = 1; d <= n; ++d)
        if (n % d == 0) divisors.push_back(d);
    std::map<long, Poly> cache;
    for (long d : divisors) {
        Poly f = x_power_minus_one(d);
        for (long e : divisors) {
            if (e >= d || d % e != 0) continue;
            f = exact_div(std::move(f), cache[e]);
        }
        cache[d] = std::move(f);
    }
    return cache[n];
}

}  // namespace

CycloField::CycloField(long p_) : p(p_) {
    if (!is_odd_prime(p)) throw std::invalid_argument("CycloField: p must be an odd prime");
    order = p - 1;
    phi = cyclotomic_polynomial(order);
    degree = static_cast<long>(phi.size()) - 1;
    if (degree != euler_phi(order)) throw std::logic_error("CycloField: degree mismatch");

    zeta_pow.resize(static_cast<std::size_t>(order));
    zeta_pow[0] = std::vector<Int>(static_cast<std::size_t>(degree), Int(0));
    zeta_pow[0][0] = 1;
    for (long k = 1; k < order; ++k) {
        std::vector<Int> next(static_cast<std::size_t>(degree), Int(0));
        const auto& prev = zeta_pow[static_cast<std::size_t>(k - 1)];
        // multiply by X, then reduce the overflow coefficient against phi
        Int lead = prev[static_cast<std::size_t>(degree - 1)];
        for (long i = degree - 1; i >= 1; --i) next[static_cast<std::size_t>(i)] = prev[static_cast<std::size_t>(i - 1)];
        next[0] = 0;
        if (lead != 0)
            for (long i = 0; i < degree; ++i) next[static_cast<std::size_t>(i)] -= lead * phi[static_cast<std::size_t>(i)];
        zeta_pow[static_cast<std::size_t>(k)] = std::move(next);
    }
}

std::shared_ptr<const CycloField> CycloField::get(long p) {
    static std::mutex mu;
    static std::map<long, std::shared_ptr<const CycloField>> registry;
    std::lock_guard<std::mutex> lock(mu);
    auto it = registry.find(p);
    if (it != registry.end()) return it->second;
    auto f = std::shared_ptr<const CycloField>(new CycloField(p));
    registry.emplace(p, f);
    return f;
}

CyclotomicNumber::CyclotomicNumber(std::shared_ptr<const CycloField> f, std::vector<Int> num, Int den)
    : field_(std::move(f)), num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

CyclotomicNumber::CyclotomicNumber(long p)
    : CyclotomicNumber(CycloField::get(p), std::vector<Int>(static_cast<std::size_t>(CycloField::get(p)->degree), Int(0)), Int(1)) {}

CyclotomicNumber::CyclotomicNumber(long p, const Rat& value) : CyclotomicNumber(p) {
    num_[0] = value.get_num();
    den_ = value.get_den();
    normalize();
}

CyclotomicNumber::CyclotomicNumber(long p, long value) : CyclotomicNumber(p, Rat(value)) {}

CyclotomicNumber CyclotomicNumber::zeta(long p, long k) {
    auto f = CycloField::get(p);
    long kk = ((k % f->order) + f->order) % f->order;
    return CyclotomicNumber(f, f->zeta_pow[static_cast<std::size_t>(kk)], Int(1));
}

CyclotomicNumber CyclotomicNumber::from_parts(long p, std::vector<Int> num, Int den) {
    auto f = CycloField::get(p);
    std::vector<Int> reduced(static_cast<std::size_t>(f->degree), Int(0));
    for (std::size_t k = 0; k < num.size(); ++k) {
        if (num[k] == 0) continue;
        const auto& zp = f->zeta_pow[k % static_cast<std::size_t>(f->order)];
        for (long i = 0; i < f->degree; ++i) reduced[static_cast<std::size_t>(i)] += num[k] * zp[static_cast<std::size_t>(i)];
    }
    return CyclotomicNumber(f, std::move(reduced), std::move(den));
}

void CyclotomicNumber::normalize() {
    if (den_ == 0) throw std::invalid_argument("CyclotomicNumber: zero denominator");
    if (den_ < 0) {
        den_ = -den_;
        for (auto& c : num_) c = -c;
    }
    Int g = den_;
    for (const auto& c : num_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    if (g > 1) {
        mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
        for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    }
    bool zero = true;
    for (const auto& c : num_)
        if (c != 0) {
            zero = false;
            break;
        }
    if (zero) den_ = 1;
}

bool CyclotomicNumber::is_zero() const {
    for (const auto& c : num_)
        if (c != 0) return false;
    return true;
}

bool CyclotomicNumber::is_rational() const {
    for (std::size_t i = 1; i < num_.size(); ++i)
        if (num_[i] != 0) return false;
    return true;
}

Rat CyclotomicNumber::rational_value() const {
    if (!is_rational()) throw std::domain_error("CyclotomicNumber: not rational");
    Rat r(num_[0], den_);
    r.canonicalize();
    return r;
}

CyclotomicNumber CyclotomicNumber::operator-() const {
    std::vector<Int> n = num_;
    for (auto& c : n) c = -c;
    return CyclotomicNumber(field_, std::move(n), den_);
}

CyclotomicNumber CyclotomicNumber::operator+(const CyclotomicNumber& o) const {
    if (field_->p != o.field_->p) throw std::invalid_argument("CyclotomicNumber: field mismatch");
    std::vector<Int> n(num_.size());
    for (std::size_t i = 0; i < n.size(); ++i) n[i] = num_[i] * o.den_ + o.num_[i] * den_;
    return CyclotomicNumber(field_, std::move(n), den_ * o.den_);
}

CyclotomicNumber CyclotomicNumber::operator-(const CyclotomicNumber& o) const { return *this + (-o); }

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& o) {
    *this = *this + o;
    return *this;
}

CyclotomicNumber CyclotomicNumber::operator*(const CyclotomicNumber& o) const {
    if (field_->p != o.field_->p) throw std::invalid_argument("CyclotomicNumber: field mismatch");
    const long deg = field_->degree;
    std::vector<Int> conv(static_cast<std::size_t>(2 * deg - 1), Int(0));
    for (long i = 0; i < deg; ++i) {
        if (num_[static_cast<std::size_t>(i)] == 0) continue;
        for (long j = 0; j < deg; ++j) {
            if (o.num_[static_cast<std::size_t>(j)] == 0) continue;
            conv[static_cast<std::size_t>(i + j)] += num_[static_cast<std::size_t>(i)] * o.num_[static_cast<std::size_t>(j)];
        }
    }
    std::vector<Int> reduced(static_cast<std::size_t>(deg), Int(0));
    for (std::size_t k = 0; k < conv.size(); ++k) {
        if (conv[k] == 0) continue;
        if (k < static_cast<std::size_t>(deg)) {
            reduced[k] += conv[k];
        } else {
            const auto& zp = field_->zeta_pow[k];
            for (long i = 0; i < deg; ++i) reduced[static_cast<std::size_t>(i)] += conv[k] * zp[static_cast<std::size_t>(i)];
        }
    }
    return CyclotomicNumber(field_, std::move(reduced), den_ * o.den_);
}

CyclotomicNumber CyclotomicNumber::operator*(const Rat& r) const {
    std::vector<Int> n(num_.size());
    for (std::size_t i = 0; i < n.size(); ++i) n[i] = num_[i] * r.get_num();
    return CyclotomicNumber(field_, std::move(n), den_ * r.get_den());
}

bool CyclotomicNumber::operator==(const CyclotomicNumber& o) const {
    return field_->p == o.field_->p && den_ == o.den_ && num_ == o.num_;
}

namespace {

using QPoly = std::vector<Rat>;

void qtrim(QPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

QPoly qmod(QPoly a, const QPoly& b) {
    while (a.size() >= b.size()) {
        Rat c = a.back() / b.back();
        for (std::size_t j = 0; j < b.size(); ++j) a[a.size() - b.size() + j] -= c * b[j];
        a.pop_back();
        qtrim(a);
        if (a.empty()) break;
    }
    return a;
}

QPoly qquot(QPoly a, const QPoly& b) {
    if (a.size() < b.size()) return {};
    QPoly q(a.size() - b.size() + 1, Rat(0));
    for (long i = static_cast<long>(q.size()) - 1; i >= 0; --i) {
        if (a.size() < b.size() + static_cast<std::size_t>(i)) continue;
        Rat c = a[static_cast<std::size_t>(i) + b.size() - 1] / b.back();
        q[static_cast<std::size_t>(i)] = c;
        for (std::size_t j = 0; j < b.size(); ++j) a[static_cast<std::size_t>(i) + j] -= c * b[j];
        qtrim(a);
    }
    return q;
}

QPoly qsub_mul(const QPoly& a, const QPoly& q, const QPoly& b) {
    // a - q*b
    QPoly prod;
    if (!q.empty() && !b.empty()) {
        prod.assign(q.size() + b.size() - 1, Rat(0));
        for (std::size_t i = 0; i < q.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] += q[i] * b[j];
    }
    QPoly out(std::max(a.size(), prod.size()), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < prod.size(); ++i) out[i] -= prod[i];
    qtrim(out);
    return out;
}

}  // namespace

CyclotomicNumber CyclotomicNumber::inverse() const {
    if (is_zero()) throw std::domain_error("CyclotomicNumber: inverse of zero");
    // Extended Euclid in Q[X] against the (irreducible) minimal polynomial.
    QPoly r0(field_->phi.size());
    for (std::size_t i = 0; i < r0.size(); ++i) r0[i] = Rat(field_->phi[i]);
    QPoly r1(num_.size());
    for (std::size_t i = 0; i < r1.size(); ++i) r1[i] = Rat(num_[i]);
    qtrim(r1);
    QPoly s0 = {}, s1 = {Rat(1)};
    while (r1.size() > 1) {
        QPoly q = qquot(r0, r1);
        QPoly r2 = qmod(r0, r1);
        QPoly s2 = qsub_mul(s0, q, s1);
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
        if (r1.empty()) throw std::logic_error("CyclotomicNumber::inverse: gcd not constant");
    }
    const Rat c = r1[0];
    std::vector<Int> out_num(static_cast<std::size_t>(field_->degree), Int(0));
    Int lcm_den(1);
    for (const auto& v : s1) {
        Rat w = v / c;
        Int d = w.get_den();
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), d.get_mpz_t());
    }
    for (std::size_t i = 0; i < s1.size(); ++i) {
        Rat w = s1[i] / c;
        out_num[i] = w.get_num() * (lcm_den / w.get_den());
    }
    // x = num/den  =>  x^{-1} = den * num_poly^{-1}
    for (auto& v : out_num) v *= den_;
    return CyclotomicNumber(field_, std::move(out_num), lcm_den);
}

CyclotomicNumber CyclotomicNumber::operator/(const CyclotomicNumber& o) const { return *this * o.inverse(); }

std::string CyclotomicNumber::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < num_.size(); ++i) {
        if (num_[i] == 0) continue;
        if (!first) os << (num_[i] > 0 ? " + " : " - ");
        else if (num_[i] < 0)
            os << "-";
        Int a = abs(num_[i]);
        if (a != 1 || i == 0) os << a.get_str();
        if (i >= 1) {
            if (a != 1) os << "*";
            os << "z";
            if (i >= 2) os << "^" << i;
        }
        first = false;
    }
    if (first) return "0";
    std::string body = os.str();
    if (den_ == 1) return body;
    return "(" + body + ")/" + den_.get_str();
}

CyclotomicNumber conj(const CyclotomicNumber& x) {
    auto f = CycloField::get(x.p());
    std::vector<Int> mapped(static_cast<std::size_t>(f->order), Int(0));
    for (long k = 0; k < f->degree; ++k) {
        const Int& c = x.num()[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        long kk = (k * (f->order - 1)) % f->order;
        mapped[static_cast<std::size_t>(kk)] += c;
    }
    return CyclotomicNumber::from_parts(x.p(), std::move(mapped), x.den());
}

SplitPrime split_prime(long p) {
    if (!is_odd_prime(p)) throw std::invalid_argument("split_prime: p must be an odd prime");
    auto f = CycloField::get(p);
    SplitPrime out;
    out.p = p;
    for (long d = 1; d < p; ++d) {
        Int v(0);
        for (long i = f->degree; i >= 0; --i) v = (v * d + f->phi[static_cast<std::size_t>(i)]) % p;
        if (v % p == 0) out.branches.push_back({p, d});
    }
    if (static_cast<long>(out.branches.size()) != f->degree)
        throw std::logic_error("split_prime: root count != phi(p-1)");
    return out;
}

IdealBranch conjugate_branch(const IdealBranch& b) {
    Int inv = mod_inverse(Int(b.d), Int(b.p));
    return {b.p, static_cast<long>(inv.get_si())};
}

Int teichmuller_lift(long d, long p, long precision) {
    if (!is_odd_prime(p)) throw std::invalid_argument("teichmuller_lift: p must be an odd prime");
    if (precision < 1) throw std::invalid_argument("teichmuller_lift: precision must be >= 1");
    if (d % p == 0) throw std::invalid_argument("teichmuller_lift: p divides d");
    const Int modulus = pow_int(Int(p), static_cast<unsigned long>(precision));
    Int x = nonneg_mod(Int(d), modulus);
    for (long it = 0; it < 2 * precision + 8; ++it) {
        Int y = pow_mod(x, Int(p), modulus);
        if (y == x) return x;
        x = y;
    }
    throw std::logic_error("teichmuller_lift: iteration did not stabilize");
}

PadicValue PadicValue::zero(long p) {
    PadicValue v(p, 0, Int(1), 1);
    v.infinite_ = true;
    return v;
}

PadicValue::PadicValue(long p, long valuation, Int unit, long precision)
    : p_(p), infinite_(false), valuation_(valuation), unit_(std::move(unit)), precision_(precision) {
    if (precision_ < 1) throw std::invalid_argument("PadicValue: precision must be >= 1");
    const Int modulus = pow_int(Int(p_), static_cast<unsigned long>(precision_));
    unit_ = nonneg_mod(unit_, modulus);
    if (unit_ == 0 || unit_ % p_ == 0) throw std::invalid_argument("PadicValue: unit not coprime to p");
}

long PadicValue::valuation() const {
    if (infinite_) throw std::domain_error("PadicValue: exact zero has infinite valuation");
    return valuation_;
}

const Int& PadicValue::unit() const {
    if (infinite_) throw std::domain_error("PadicValue: exact zero has no unit part");
    return unit_;
}

long PadicValue::precision() const {
    if (infinite_) throw std::domain_error("PadicValue: exact zero has no precision");
    return precision_;
}

PadicValue PadicValue::operator*(const PadicValue& o) const {
    if (p_ != o.p_) throw std::invalid_argument("PadicValue: prime mismatch");
    if (infinite_ || o.infinite_) return zero(p_);
    long prec = std::min(precision_, o.precision_);
    return PadicValue(p_, valuation_ + o.valuation_, unit_ * o.unit_, prec);
}

PadicValue PadicValue::operator+(const PadicValue& o) const {
    if (p_ != o.p_) throw std::invalid_argument("PadicValue: prime mismatch");
    if (infinite_) return o;
    if (o.infinite_) return *this;
    const PadicValue& lo = (valuation_ <= o.valuation_) ? *this : o;
    const PadicValue& hi = (valuation_ <= o.valuation_) ? o : *this;
    const long delta = hi.valuation_ - lo.valuation_;
    if (delta >= lo.precision_) return lo;
    const long know = std::min(lo.precision_, delta + hi.precision_);
    const Int modulus = pow_int(Int(p_), static_cast<unsigned long>(know));
    Int w = nonneg_mod(lo.unit_ + hi.unit_ * pow_int(Int(p_), static_cast<unsigned long>(delta)), modulus);
    if (w == 0) throw PrecisionExhausted("PadicValue: sum cancels to working precision");
    long t = int_valuation(w, p_);
    Int unit = w / pow_int(Int(p_), static_cast<unsigned long>(t));
    return PadicValue(p_, lo.valuation_ + t, std::move(unit), know - t);
}

PadicValue PadicValue::operator-() const {
    if (infinite_) return *this;
    const Int modulus = pow_int(Int(p_), static_cast<unsigned long>(precision_));
    return PadicValue(p_, valuation_, modulus - unit_, precision_);
}

PadicValue PadicValue::operator-(const PadicValue& o) const { return *this + (-o); }

PadicValue PadicValue::inverse() const {
    if (infinite_) throw std::domain_error("PadicValue: inverse of zero");
    const Int modulus = pow_int(Int(p_), static_cast<unsigned long>(precision_));
    return PadicValue(p_, -valuation_, mod_inverse(unit_, modulus), precision_);
}

bool PadicValue::agree(const PadicValue& a, const PadicValue& b) {
    if (a.p_ != b.p_) return false;
    if (a.infinite_ && b.infinite_) return true;
    if (a.infinite_ || b.infinite_) return false;
    if (a.valuation_ != b.valuation_) return false;
    const long prec = std::min(a.precision_, b.precision_);
    const Int modulus = pow_int(Int(a.p_), static_cast<unsigned long>(prec));
    return nonneg_mod(a.unit_ - b.unit_, modulus) == 0;
}

std::string PadicValue::str() const {
    if (infinite_) return "0";
    std::ostringstream os;
    os << p_ << "^" << valuation_ << " * (" << unit_.get_str() << " mod " << p_ << "^" << precision_ << ")";
    return os.str();
}

PadicValue embed(const CyclotomicNumber& x, const IdealBranch& b, long precision) {
    if (x.p() != b.p) throw std::invalid_argument("embed: prime mismatch");
    if (precision < 1) throw std::invalid_argument("embed: precision must be >= 1");
    if (x.is_zero()) return PadicValue::zero(b.p);

    const Int modulus = pow_int(Int(b.p), static_cast<unsigned long>(precision));
    const Int t = teichmuller_lift(b.d, b.p, precision);
    Int image(0);
    for (long i = static_cast<long>(x.num().size()) - 1; i >= 0; --i)
        image = nonneg_mod(image * t + x.num()[static_cast<std::size_t>(i)], modulus);
    if (image == 0)
        throw PrecisionExhausted("embed: numerator image vanishes mod p^" + std::to_string(precision));

    const long num_val = int_valuation(image, b.p);
    const long prec = precision - num_val;
    Int unit = image / pow_int(Int(b.p), static_cast<unsigned long>(num_val));

    const long den_val = int_valuation(x.den(), b.p);
    Int den_unit = x.den() / pow_int(Int(b.p), static_cast<unsigned long>(den_val));
    const Int small = pow_int(Int(b.p), static_cast<unsigned long>(prec));
    unit = nonneg_mod(unit * mod_inverse(den_unit, small), small);
    return PadicValue(b.p, num_val - den_val, std::move(unit), prec);
}

namespace {
long g_precision_cap = 256;
}

long precision_cap() { return g_precision_cap; }

void set_precision_cap(long cap) {
    if (cap < 8) throw std::invalid_argument("set_precision_cap: cap must be >= 8");
    g_precision_cap = cap;
}

Int branch_residue(const CyclotomicNumber& x, const IdealBranch& b, long precision) {
    if (x.p() != b.p) throw std::invalid_argument("branch_residue: prime mismatch");
    if (x.den() % b.p == 0) throw std::invalid_argument("branch_residue: denominator not prime to p");
    const Int modulus = pow_int(Int(b.p), static_cast<unsigned long>(precision));
    const Int t = teichmuller_lift(b.d, b.p, precision);
    Int image(0);
    for (long i = static_cast<long>(x.num().size()) - 1; i >= 0; --i)
        image = nonneg_mod(image * t + x.num()[static_cast<std::size_t>(i)], modulus);
    return nonneg_mod(image * mod_inverse(x.den(), modulus), modulus);
}

std::optional<long> valuation(const CyclotomicNumber& x, const IdealBranch& b) {
    if (x.is_zero()) return std::nullopt;
    const long cap = precision_cap();
    for (long m = 8;; m *= 2) {
        if (m > cap) m = cap;
        try {
            return embed(x, b, m).valuation();
        } catch (const PrecisionExhausted&) {
            if (m >= cap)
                throw PrecisionCapExceeded("valuation: precision cap " + std::to_string(cap) + " exceeded");
        }
    }
}

}  // namespace scl
