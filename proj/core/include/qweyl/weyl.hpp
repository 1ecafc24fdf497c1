#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qweyl/cyclotomic.hpp"

namespace qweyl {

/// Parameters of the 3-cyclic quantum Weyl algebra A(alpha,beta,gamma) over
/// Q(zeta_l), with defining relations
///   xy = q^2 yx + alpha,  xz = q^-2 zx + beta,  yz = q^2 zy + gamma.
struct Params {
    FieldPtr ctx;
    CycNum alpha, beta, gamma;

    static Params make(const FieldPtr& ctx, CycNum a, CycNum b, CycNum g);
};

/// PBW monomial x^a y^b z^c.
struct Mono {
    int a = 0, b = 0, c = 0;
    auto operator<=>(const Mono&) const = default;
    int total_degree() const { return a + b + c; }
};

/// An element of A(alpha,beta,gamma) in PBW normal form: finite coefficient
/// map over monomials x^a y^b z^c, no zero coefficients stored.
class AlgElem {
  public:
    AlgElem() = default;
    explicit AlgElem(FieldPtr ctx) : ctx_(std::move(ctx)) {}

    static AlgElem zero(const FieldPtr& ctx) { return AlgElem(ctx); }
    static AlgElem scalar(const FieldPtr& ctx, const CycNum& c);
    static AlgElem monomial(const FieldPtr& ctx, Mono m, const CycNum& c);
    static AlgElem gen_x(const FieldPtr& ctx, int a = 1);
    static AlgElem gen_y(const FieldPtr& ctx, int b = 1);
    static AlgElem gen_z(const FieldPtr& ctx, int c = 1);

    const FieldPtr& ctx() const { return ctx_; }
    const std::map<Mono, CycNum>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    CycNum coeff(Mono m) const;

    void add_term(Mono m, const CycNum& c);

    AlgElem operator+(const AlgElem& o) const;
    AlgElem operator-(const AlgElem& o) const;
    AlgElem scaled(const CycNum& c) const;
    bool operator==(const AlgElem& o) const { return terms_ == o.terms_; }

    int total_degree() const;  // -1 for zero

  private:
    FieldPtr ctx_;
    std::map<Mono, CycNum> terms_;
};

/// Normal form of the product of two PBW monomials, by the closed-form
/// reordering identities (z^c past x, then y^b past x; y past z^c).
AlgElem mono_mul(Mono m1, Mono m2, const Params& p);

/// Same contract as mono_mul, computed by single-step rewriting of adjacent
/// generator pairs (zx -> q^2 xz - q^2 beta, etc.) until normal. Kept as an
/// independent oracle for mono_mul.
AlgElem rewrite_oracle_mul(Mono m1, Mono m2, const Params& p);

AlgElem elem_mul(const AlgElem& u, const AlgElem& v, const Params& p);
AlgElem elem_add(const AlgElem& u, const AlgElem& v);
AlgElem elem_scale(const CycNum& c, const AlgElem& u);
AlgElem commutator(const AlgElem& u, const AlgElem& v, const Params& p);
AlgElem elem_pow(const AlgElem& u, long n, const Params& p);

/// Omega = yxz + q^-2 gamma/(q^2-1) x - q^2 beta/(q^2-1) y + alpha/(q^2-1) z,
/// in normal form.
AlgElem omega(const Params& p);
AlgElem d_elem(const Params& p);  // yx + alpha/(q^2-1)
AlgElem e_elem(const Params& p);  // xz - q^2 beta/(q^2-1)
AlgElem f_elem(const Params& p);  // yz + gamma/(q^2-1)
AlgElem g_elem(const Params& p);  // xy - yx

/// True iff the commutator with each of x, y, z is exactly zero.
bool is_central(const AlgElem& u, const Params& p);

struct IdentityCheck {
    std::string identity;
    bool pass = false;
    std::optional<AlgElem> witness;  // nonzero difference on failure
};

struct IdentityReport {
    std::vector<IdentityCheck> checks;
    bool all_pass = true;
};

/// Verifies, as exact equalities of normal forms for a = 1..a_max:
/// the six reordering identities, centrality of x^l, y^l, z^l, Omega,
/// the zd-expression of Omega, the Omega^n leading terms (n = 1,2,3),
/// the e/f/z commutation relations, and the g relations.
IdentityReport verify_identity_suite(const Params& p, int a_max);

}  // namespace qweyl
