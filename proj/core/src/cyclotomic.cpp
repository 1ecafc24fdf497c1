#include "qweyl/cyclotomic.hpp"

#include <algorithm>

namespace qweyl {

namespace {

// Dense polynomial helpers over Rat, constant coefficient first.
using Poly = std::vector<Rat>;

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Quotient of a by monic b; a becomes the remainder.
Poly divmod_monic(Poly& a, const Poly& b) {
    Poly q;
    trim(a);
    const long db = static_cast<long>(b.size()) - 1;
    if (static_cast<long>(a.size()) - 1 >= db) q.resize(a.size() - db);
    while (static_cast<long>(a.size()) - 1 >= db) {
        const long da = static_cast<long>(a.size()) - 1;
        Rat c = a.back();
        q[da - db] = c;
        for (long i = 0; i <= db; ++i) a[da - db + i] -= c * b[i];
        trim(a);
    }
    return q;
}

Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

Poly cyclotomic(long l) {
    // t^l - 1 divided by the product of Phi_d over proper divisors d of l.
    Poly num(l + 1, Rat(0));
    num[0] = -1;
    num[l] = 1;
    Poly den{Rat(1)};
    for (long d = 1; d < l; ++d) {
        if (l % d == 0) den = mul(den, cyclotomic(d));
    }
    Poly q = divmod_monic(num, den);
    return q;
}

}  // namespace

FieldPtr FieldCtx::make(long l) {
    if (l < 2) throw DomainError("make_field: l must be >= 2 (q^2 is a primitive l(>1)-th root of unity)");
    Poly phi = cyclotomic(l);
    auto raw = new FieldCtx(l, std::move(phi));
    FieldPtr ctx(raw);
    // fill the residue tables: zeta^k, then [k]_q = 1 + zeta + ... + zeta^(k-1)
    CycNum z = CycNum::one(ctx), acc = CycNum::zero(ctx);
    std::vector<Rat> tcoef(2, Rat(0));
    tcoef[1] = 1;
    CycNum t = CycNum::from_poly(ctx, tcoef);
    for (long k = 0; k < l; ++k) {
        raw->zpow_.push_back(z.coeffs());
        raw->qint_.push_back(acc.coeffs());
        acc += z;
        z *= t;
    }
    return ctx;
}

void CycNum::require_same(const CycNum& o) const {
    if (!ctx_ || !o.ctx_) throw FieldMismatch("operation on a null CycNum");
    if (ctx_ != o.ctx_ && ctx_->order() != o.ctx_->order())
        throw FieldMismatch("CycNum operands belong to different fields");
}

CycNum CycNum::zero(const FieldPtr& ctx) {
    return CycNum(ctx, std::vector<Rat>(ctx->degree(), Rat(0)));
}

CycNum CycNum::one(const FieldPtr& ctx) { return from_rat(ctx, Rat(1)); }

CycNum CycNum::from_rat(const FieldPtr& ctx, const Rat& r) {
    std::vector<Rat> c(ctx->degree(), Rat(0));
    c[0] = r;
    return CycNum(ctx, std::move(c));
}

CycNum CycNum::from_int(const FieldPtr& ctx, long v) { return from_rat(ctx, Rat(v)); }

CycNum CycNum::from_poly(const FieldPtr& ctx, std::vector<Rat> coeffs) {
    divmod_monic(coeffs, ctx->modulus());
    coeffs.resize(ctx->degree(), Rat(0));
    return CycNum(ctx, std::move(coeffs));
}

bool CycNum::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rat& r) { return r == 0; });
}

CycNum CycNum::operator+(const CycNum& o) const {
    require_same(o);
    std::vector<Rat> r(c_);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += o.c_[i];
    return CycNum(ctx_, std::move(r));
}

CycNum CycNum::operator-(const CycNum& o) const { return *this + (-o); }

CycNum& CycNum::operator+=(const CycNum& o) {
    require_same(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) {
    require_same(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

CycNum CycNum::operator-() const {
    std::vector<Rat> r(c_);
    for (auto& x : r) x = -x;
    return CycNum(ctx_, std::move(r));
}

CycNum CycNum::operator*(const CycNum& o) const {
    require_same(o);
    std::vector<Rat> prod(2 * c_.size(), Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) prod[i + j] += c_[i] * o.c_[j];
    }
    return from_poly(ctx_, std::move(prod));
}

CycNum CycNum::operator/(const CycNum& o) const { return *this * o.inv(); }

bool CycNum::operator==(const CycNum& o) const {
    require_same(o);
    return c_ == o.c_;
}

CycNum CycNum::inv() const {
    if (!ctx_) throw FieldMismatch("inv of a null CycNum");
    if (is_zero()) throw DivisionByZero("inv(0) in Q(zeta_l)");
    // Extended Euclid in Q[t]: u*a + v*Phi = gcd = nonzero constant.
    Poly r0 = ctx_->modulus();
    Poly r1 = c_;
    trim(r1);
    Poly s0{}, s1{Rat(1)};  // coefficients of a
    while (!r1.empty()) {
        // Make r1 monic for divmod, fold the scale into the quotient.
        Rat lead = r1.back();
        Poly r1m = r1;
        for (auto& x : r1m) x /= lead;
        Poly q = divmod_monic(r0, r1m);  // r0 := remainder
        for (auto& x : q) x /= lead;
        // s0 := s0 - q*s1
        Poly qs = mul(q, s1);
        if (s0.size() < qs.size()) s0.resize(qs.size(), Rat(0));
        for (std::size_t i = 0; i < qs.size(); ++i) s0[i] -= qs[i];
        trim(s0);
        std::swap(r0, r1);
        std::swap(s0, s1);
    }
    // r0 = gcd(a, Phi) = constant (Phi_l is irreducible over Q).
    Rat g = r0.empty() ? Rat(0) : r0[0];
    if (r0.size() != 1 || g == 0) throw Error("inv: gcd with Phi_l is not a unit");
    for (auto& x : s0) x /= g;
    return from_poly(ctx_, std::move(s0));
}

CycNum CycNum::pow(long k) const {
    if (!ctx_) throw FieldMismatch("pow of a null CycNum");
    if (k < 0) return inv().pow(-k);
    CycNum base = *this;
    CycNum acc = one(ctx_);
    while (k > 0) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

CycNum q2pow(const FieldPtr& ctx, long k) {
    long l = ctx->order();
    return CycNum::from_poly(ctx, std::vector<Rat>(ctx->zpow_[((k % l) + l) % l]));
}

CycNum qint(const FieldPtr& ctx, long a) {
    long l = ctx->order();
    return CycNum::from_poly(ctx, std::vector<Rat>(ctx->qint_[((a % l) + l) % l]));
}

}  // namespace qweyl
