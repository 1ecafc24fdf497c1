#pragma once

#include <random>

#include "qweyl/modules.hpp"

namespace qweyl::testing {

using Rng = std::mt19937;

/// Small random field element: polynomial in zeta with coefficients in
/// {-3..3}/{1,2}.
inline CycNum random_cyc(const FieldPtr& ctx, Rng& rng) {
    std::uniform_int_distribution<int> num(-3, 3), den(1, 2);
    std::vector<Rat> c(ctx->degree());
    for (auto& x : c) x = Rat(num(rng), den(rng));
    return CycNum::from_poly(ctx, std::move(c));
}

inline CycNum random_nonzero(const FieldPtr& ctx, Rng& rng) {
    for (;;) {
        CycNum c = random_cyc(ctx, rng);
        if (!c.is_zero()) return c;
    }
}

inline Params random_params(const FieldPtr& ctx, Rng& rng) {
    return Params::make(ctx, random_cyc(ctx, rng), random_cyc(ctx, rng), random_cyc(ctx, rng));
}

inline Mat random_invertible(const FieldPtr& ctx, long d, Rng& rng) {
    for (;;) {
        Mat p(ctx, d, d);
        for (long i = 0; i < d; ++i)
            for (long j = 0; j < d; ++j) p.at(i, j) = random_cyc(ctx, rng);
        try {
            inverse(p);
            return p;
        } catch (const Error&) {
        }
    }
}

/// A random parameter point inside the stated domain of the family. The
/// algebra parameters (alpha, beta, gamma) are part of the point, since some
/// families constrain them.
inline std::pair<FamilySpec, Params> random_family_point(Family f, const FieldPtr& ctx, Rng& rng) {
    FamilySpec spec;
    spec.tag = f;
    CycNum zero = CycNum::zero(ctx);
    switch (f) {
        case Family::M0:
            spec.params = {{"a", random_nonzero(ctx, rng)}};
            return {spec, Params::make(ctx, random_nonzero(ctx, rng), zero, zero)};
        case Family::M1:
            spec.params = {{"mu1", random_nonzero(ctx, rng)},
                           {"mu2", random_nonzero(ctx, rng)},
                           {"mu3", random_cyc(ctx, rng)}};
            return {spec, random_params(ctx, rng)};
        case Family::M2:
            spec.params = {{"mu1", random_nonzero(ctx, rng)}, {"mu2", random_nonzero(ctx, rng)}};
            return {spec, random_params(ctx, rng)};
        case Family::M3:
            spec.params = {{"mu", random_nonzero(ctx, rng)}};
            return {spec, random_params(ctx, rng)};
        case Family::M4:
            spec.params = {{"mu1", random_cyc(ctx, rng)}, {"mu2", random_cyc(ctx, rng)}};
            return {spec, Params::make(ctx, random_cyc(ctx, rng), random_nonzero(ctx, rng),
                                       random_cyc(ctx, rng))};
        case Family::M5:
            spec.params = {{"mu1", random_cyc(ctx, rng)}, {"mu2", random_cyc(ctx, rng)}};
            return {spec, Params::make(ctx, random_cyc(ctx, rng), zero, random_nonzero(ctx, rng))};
        case Family::M6:
            spec.params = {{"mu1", random_nonzero(ctx, rng)}, {"mu2", random_nonzero(ctx, rng)}};
            return {spec, Params::make(ctx, random_nonzero(ctx, rng), zero, zero)};
        case Family::M7:
            spec.params = {{"mu", random_cyc(ctx, rng)}};
            return {spec, Params::make(ctx, random_nonzero(ctx, rng), zero, zero)};
    }
    throw Error("random_family_point: bad tag");
}

/// Z-eigenvalue hints sufficient for the invertible classify branch of the
/// given source spec: the full zeta-orbit of the relevant mu.
inline Hints hints_for(const FamilySpec& spec, const Params& p) {
    Hints h;
    const long l = p.ctx->order();
    auto orbit = [&](const CycNum& mu) {
        for (long k = 0; k < l; ++k) h.z_eigenvalues.push_back(q2pow(p.ctx, k) * mu);
    };
    if (spec.tag == Family::M1 || spec.tag == Family::M2) orbit(spec.param("mu2"));
    if (spec.tag == Family::M3) orbit(spec.param("mu"));
    return h;
}

}  // namespace qweyl::testing
