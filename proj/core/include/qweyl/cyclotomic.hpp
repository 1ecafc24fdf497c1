#pragma once

#include <memory>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qweyl/errors.hpp"

namespace qweyl {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

class FieldCtx;
class CycNum;
using FieldPtr = std::shared_ptr<const FieldCtx>;

CycNum q2pow(const FieldPtr& ctx, long k);
CycNum qint(const FieldPtr& ctx, long a);

/// The field Q(zeta_l), zeta_l a primitive l-th root of unity standing for
/// q^2. Elements are residues mod the l-th cyclotomic polynomial Phi_l.
class FieldCtx {
  public:
    /// Computes Phi_l by dividing t^l - 1 by the product of Phi_d over
    /// proper divisors d of l. Requires l >= 2.
    static FieldPtr make(long l);

    long order() const { return l_; }
    long degree() const { return static_cast<long>(phi_.size()) - 1; }
    /// Monic modulus, coefficient list of length degree()+1, constant first.
    const std::vector<Rat>& modulus() const { return phi_; }

  private:
    explicit FieldCtx(long l, std::vector<Rat> phi) : l_(l), phi_(std::move(phi)) {}
    long l_;
    std::vector<Rat> phi_;
    // residue tables filled once by make(): zeta^k and [k]_q for k = 0..l-1
    std::vector<std::vector<Rat>> zpow_, qint_;
    friend CycNum q2pow(const FieldPtr&, long);
    friend CycNum qint(const FieldPtr&, long);
};

/// An element of Q(zeta_l): canonical residue mod Phi_l, stored as a dense
/// coefficient list of length phi(l), lowest order first.
class CycNum {
  public:
    CycNum() = default;  // null element; usable only as a placeholder

    static CycNum zero(const FieldPtr& ctx);
    static CycNum one(const FieldPtr& ctx);
    static CycNum from_rat(const FieldPtr& ctx, const Rat& r);
    static CycNum from_int(const FieldPtr& ctx, long v);
    /// From an arbitrary polynomial in zeta (any length), reduced mod Phi_l.
    static CycNum from_poly(const FieldPtr& ctx, std::vector<Rat> coeffs);

    const FieldPtr& ctx() const { return ctx_; }
    const std::vector<Rat>& coeffs() const { return c_; }
    bool is_zero() const;

    CycNum operator+(const CycNum& o) const;
    CycNum operator-(const CycNum& o) const;
    CycNum operator*(const CycNum& o) const;
    CycNum operator/(const CycNum& o) const;
    CycNum operator-() const;
    CycNum& operator+=(const CycNum& o);
    CycNum& operator-=(const CycNum& o);
    CycNum& operator*=(const CycNum& o) { return *this = *this * o; }

    bool operator==(const CycNum& o) const;
    bool operator!=(const CycNum& o) const { return !(*this == o); }

    /// Multiplicative inverse via extended Euclid against Phi_l.
    CycNum inv() const;
    /// Integer power, negative exponents allowed for nonzero base.
    CycNum pow(long k) const;

  private:
    CycNum(FieldPtr ctx, std::vector<Rat> c) : ctx_(std::move(ctx)), c_(std::move(c)) {}
    void require_same(const CycNum& o) const;

    FieldPtr ctx_;
    std::vector<Rat> c_;
};

/// zeta^(k mod l), i.e. q^(2k).
CycNum q2pow(const FieldPtr& ctx, long k);

/// Quantum integer (1 - q^(2a)) / (1 - q^2); equals 1 + zeta + ... + zeta^(a-1)
/// for a >= 0. Defined for every integer a.
CycNum qint(const FieldPtr& ctx, long a);

}  // namespace qweyl
