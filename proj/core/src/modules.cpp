#include "qweyl/modules.hpp"

#include <algorithm>
#include <deque>

namespace qweyl {

namespace {

// 1/(q^2 - 1)
CycNum uq(const FieldPtr& ctx) {
    return (q2pow(ctx, 1) - CycNum::one(ctx)).inv();
}

// (1 - q^{-2n}) / (1 - q^{-2}) = q^{2(1-n)} [n]_q
CycNum qneg(const FieldPtr& ctx, long n) {
    return q2pow(ctx, 1 - n) * qint(ctx, n);
}

void require(bool ok, const std::string& constraint) {
    if (!ok) throw DomainError("parameter out of domain: " + constraint);
}

void validate_spec(const FamilySpec& spec, const Params& p) {
    const bool beta0 = p.beta.is_zero(), gamma0 = p.gamma.is_zero(), alpha0 = p.alpha.is_zero();
    switch (spec.tag) {
        case Family::M0:
            require(beta0 && gamma0 && !alpha0, "M0 requires beta = gamma = 0 and alpha != 0");
            require(!spec.param("a").is_zero(), "M0 requires a != 0");
            break;
        case Family::M1:
            require(!spec.param("mu1").is_zero() && !spec.param("mu2").is_zero(),
                    "M1 requires mu1, mu2 != 0");
            break;
        case Family::M2:
            require(!spec.param("mu1").is_zero() && !spec.param("mu2").is_zero(),
                    "M2 requires mu1, mu2 != 0");
            break;
        case Family::M3:
            require(!spec.param("mu").is_zero(), "M3 requires mu != 0");
            break;
        case Family::M4:
            require(!beta0, "M4 requires beta != 0");
            break;
        case Family::M5:
            require(beta0 && !gamma0, "M5 requires beta = 0 and gamma != 0");
            break;
        case Family::M6:
            require(beta0 && gamma0 && !alpha0, "M6 requires beta = gamma = 0 and alpha != 0");
            require(!spec.param("mu1").is_zero() && !spec.param("mu2").is_zero(),
                    "M6 requires mu1, mu2 != 0");
            break;
        case Family::M7:
            require(beta0 && gamma0 && !alpha0, "M7 requires beta = gamma = 0 and alpha != 0");
            break;
    }
}

// F_{alpha,beta,gamma}(k, mu) = alpha q^{-2k} mu^2 - beta gamma / (q^2 - 1)
CycNum f_poly(const Params& p, long k, const CycNum& mu) {
    return p.alpha * q2pow(p.ctx, -k) * mu * mu - p.beta * p.gamma * uq(p.ctx);
}

}  // namespace

std::string family_name(Family f) {
    switch (f) {
        case Family::M0: return "M0";
        case Family::M1: return "M1";
        case Family::M2: return "M2";
        case Family::M3: return "M3";
        case Family::M4: return "M4";
        case Family::M5: return "M5";
        case Family::M6: return "M6";
        case Family::M7: return "M7";
    }
    throw Error("family_name: bad tag");
}

Family family_from_name(const std::string& s) {
    for (Family f : {Family::M0, Family::M1, Family::M2, Family::M3, Family::M4, Family::M5,
                     Family::M6, Family::M7})
        if (family_name(f) == s) return f;
    throw DomainError("unknown family tag: " + s);
}

const CycNum& FamilySpec::param(const std::string& name) const {
    auto it = params.find(name);
    if (it == params.end())
        throw DomainError("family " + family_name(tag) + " is missing parameter " + name);
    return it->second;
}

long s_value(const Params& p, const CycNum& mu) {
    if (mu.is_zero()) throw DomainError("s_value: mu must be nonzero");
    const long l = p.ctx->order();
    if (p.alpha.is_zero() && (p.beta * p.gamma).is_zero()) return 1;
    if (!p.alpha.is_zero() && !p.beta.is_zero() && !p.gamma.is_zero()) {
        // at most one k can be a root: the values q^{-2k} are pairwise distinct
        for (long k = 1; k <= l; ++k)
            if (f_poly(p, k, mu).is_zero()) return k;
    }
    return l;
}

Rep build_family(const FamilySpec& spec, const Params& p) {
    validate_spec(spec, p);
    const FieldPtr& ctx = p.ctx;
    const long l = ctx->order();
    const CycNum one = CycNum::one(ctx), u = uq(ctx);
    auto zp = [&](long k) { return q2pow(ctx, k); };

    Rep r;
    r.p = p;

    switch (spec.tag) {
        case Family::M0: {
            const CycNum& a = spec.param("a");
            r.dim = 1;
            r.X = Mat(ctx, 1, 1);
            r.Y = Mat(ctx, 1, 1);
            r.Z = Mat(ctx, 1, 1);
            r.X.at(0, 0) = a;
            r.Y.at(0, 0) = -(p.alpha * u / a);
            return r;
        }
        case Family::M1: {
            const CycNum &m1 = spec.param("mu1"), &m2 = spec.param("mu2"), &m3 = spec.param("mu3");
            r.dim = l;
            r.X = Mat(ctx, l, l);
            r.Y = Mat(ctx, l, l);
            r.Z = Mat(ctx, l, l);
            const CycNum m1i = m1.inv(), m2i = m2.inv();
            for (long k = 0; k < l; ++k) {
                CycNum ck = zp(k) * m3 -
                            (zp(k) - one) * u * (zp(k - 1) * p.alpha * m2 * m2 -
                                                 p.beta * p.gamma * zp(1) * u);
                r.X.at(k, (k - 1 + l) % l) += m1i * m2i * zp(-(k - 1)) * ck;
                r.X.at(k, k) += m2i * p.beta * zp(1) * u * zp(-k);
                r.Y.at(k, (k + 1) % l) += m1 * m2i * zp(-(k + 1));
                r.Y.at(k, k) += -(m2i * p.gamma * u * zp(-k));
                r.Z.at(k, k) = zp(k) * m2;
            }
            return r;
        }
        case Family::M2: {
            const CycNum &m1 = spec.param("mu1"), &m2 = spec.param("mu2");
            r.dim = l;
            r.X = Mat(ctx, l, l);
            r.Y = Mat(ctx, l, l);
            r.Z = Mat(ctx, l, l);
            const CycNum m1i = m1.inv(), m2i = m2.inv();
            for (long k = 0; k < l; ++k) {
                r.X.at(k, (k + 1) % l) += m1 * m2i * zp(k + 1);
                r.X.at(k, k) += p.beta * m2i * zp(k + 1) * u;
                if (k != 0)
                    r.Y.at(k, k - 1) += m1i * m2i * zp(k - 1) * qneg(ctx, k) *
                                        (p.alpha * m2 * m2 * zp(-k) - p.beta * p.gamma * u);
                r.Y.at(k, k) += -(p.gamma * m2i * u * zp(k));
                r.Z.at(k, k) = zp(-k) * m2;
            }
            return r;
        }
        case Family::M3: {
            const CycNum& mu = spec.param("mu");
            const long s = s_value(p, mu);
            r.dim = s;
            r.X = Mat(ctx, s, s);
            r.Y = Mat(ctx, s, s);
            r.Z = Mat(ctx, s, s);
            const CycNum mi = mu.inv();
            for (long k = 0; k < s; ++k) {
                if (k != s - 1) r.X.at(k, k + 1) += mi * zp(k + 1);
                r.X.at(k, k) += p.beta * mi * zp(k + 1) * u;
                if (k != 0)
                    r.Y.at(k, k - 1) += mi * zp(k - 1) * qneg(ctx, k) *
                                        (p.alpha * mu * mu * zp(-k) - p.beta * p.gamma * u);
                r.Y.at(k, k) += -(p.gamma * mi * u * zp(k));
                r.Z.at(k, k) = zp(-k) * mu;
            }
            return r;
        }
        case Family::M4: {
            const CycNum &m1 = spec.param("mu1"), &m2 = spec.param("mu2");
            r.dim = l;
            r.X = Mat(ctx, l, l);
            r.Y = Mat(ctx, l, l);
            r.Z = Mat(ctx, l, l);
            const CycNum bi = p.beta.inv();
            for (long k = 0; k < l; ++k) {
                if (k != l - 1)
                    r.X.at(k, k + 1) = one;
                else
                    r.X.at(k, 0) = m1;
                CycNum raise = p.gamma * bi * zp(k);
                if (k != l - 1)
                    r.Y.at(k, k + 1) += raise;
                else
                    r.Y.at(k, 0) += raise * m1;
                r.Y.at(k, k) += -(m2 * bi * zp(k) * (zp(1) - one));
                if (k != 0) r.Y.at(k, k - 1) += qint(ctx, k) * p.alpha;
                if (k != 0) r.Z.at(k, k - 1) = p.beta * qneg(ctx, k);
            }
            return r;
        }
        case Family::M5: {
            const CycNum &m1 = spec.param("mu1"), &m2 = spec.param("mu2");
            r.dim = l;
            r.X = Mat(ctx, l, l);
            r.Y = Mat(ctx, l, l);
            r.Z = Mat(ctx, l, l);
            const CycNum gi = p.gamma.inv();
            for (long k = 0; k < l; ++k) {
                r.X.at(k, k) += m2 * gi * zp(-k) * (zp(1) - one);
                if (k != 0) r.X.at(k, k - 1) += -(zp(-1) * p.alpha * qneg(ctx, k));
                if (k != l - 1)
                    r.Y.at(k, k + 1) = one;
                else
                    r.Y.at(k, 0) = m1;
                if (k != 0) r.Z.at(k, k - 1) = p.gamma * qint(ctx, k);
            }
            return r;
        }
        case Family::M6: {
            const CycNum &m1 = spec.param("mu1"), &m2 = spec.param("mu2");
            r.dim = l;
            r.X = Mat(ctx, l, l);
            r.Y = Mat(ctx, l, l);
            r.Z = Mat(ctx, l, l);
            const CycNum m1i = m1.inv();
            for (long k = 0; k < l; ++k) {
                r.X.at(k, (k + 1) % l) = m1;
                r.Y.at(k, (k - 1 + l) % l) = m1i * (zp(k) * m2 - p.alpha) * u;
            }
            return r;
        }
        case Family::M7: {
            const CycNum& mu = spec.param("mu");
            r.dim = l;
            r.X = Mat(ctx, l, l);
            r.Y = Mat(ctx, l, l);
            r.Z = Mat(ctx, l, l);
            for (long k = 0; k < l; ++k) {
                if (k != 0) r.X.at(k, k - 1) = -(zp(-1) * p.alpha * qneg(ctx, k));
                if (k != l - 1)
                    r.Y.at(k, k + 1) = CycNum::one(ctx);
                else
                    r.Y.at(k, 0) = mu;
            }
            return r;
        }
    }
    throw Error("build_family: bad tag");
}

bool check_relations(const Rep& r) {
    const FieldPtr& ctx = r.p.ctx;
    const Mat I = Mat::identity(ctx, r.dim);
    const Mat xy = r.X * r.Y, yx = r.Y * r.X;
    const Mat xz = r.X * r.Z, zx = r.Z * r.X;
    const Mat yz = r.Y * r.Z, zy = r.Z * r.Y;
    return xy == yx.scaled(q2pow(ctx, 1)) + I.scaled(r.p.alpha) &&
           xz == zx.scaled(q2pow(ctx, -1)) + I.scaled(r.p.beta) &&
           yz == zy.scaled(q2pow(ctx, 1)) + I.scaled(r.p.gamma);
}

DerivedOps derived_operators(const Rep& r) {
    const FieldPtr& ctx = r.p.ctx;
    const CycNum u = uq(ctx);
    const Mat I = Mat::identity(ctx, r.dim);
    DerivedOps d;
    d.E = r.X * r.Z - I.scaled(q2pow(ctx, 1) * r.p.beta * u);
    d.F = r.Y * r.Z + I.scaled(r.p.gamma * u);
    d.D = r.Y * r.X + I.scaled(r.p.alpha * u);
    d.G = r.X * r.Y - r.Y * r.X;
    d.Omega = r.Z * d.D + r.X.scaled(r.p.gamma * u) - r.Y.scaled(r.p.beta * u);
    return d;
}

CentralScalars central_scalars(const Rep& r) {
    const long l = r.p.ctx->order();
    auto read = [&](const Mat& m, const char* what) {
        auto c = is_scalar(m);
        if (!c) throw NotSchurScalar(std::string("not Schur-scalar: ") + what);
        return *c;
    };
    CentralScalars cs;
    cs.xl = read(r.X.pow(l), "x^l");
    cs.yl = read(r.Y.pow(l), "y^l");
    cs.zl = read(r.Z.pow(l), "z^l");
    cs.omega = read(derived_operators(r).Omega, "Omega");
    return cs;
}

bool is_simple_burnside(const Rep& r) {
    const long d = r.dim;
    RowSpace space;
    std::deque<Mat> work;
    for (const Mat& m : {Mat::identity(r.p.ctx, d), r.X, r.Y, r.Z})
        if (space.add(m.entries())) work.push_back(m);
    while (!work.empty() && space.dim() < d * d) {
        Mat m = std::move(work.front());
        work.pop_front();
        for (const Mat* g : {&r.X, &r.Y, &r.Z}) {
            Mat prod = m * (*g);
            if (space.add(prod.entries())) work.push_back(std::move(prod));
        }
    }
    return space.dim() == d * d;
}

std::pair<long, std::vector<Mat>> intertwiner_space(const Rep& r1, const Rep& r2) {
    const FieldPtr& ctx = r1.p.ctx;
    if (r1.p.alpha != r2.p.alpha || r1.p.beta != r2.p.beta || r1.p.gamma != r2.p.gamma ||
        r1.p.ctx->order() != r2.p.ctx->order())
        throw DomainError("intertwiner_space: modules over different parameters");
    const long d1 = r1.dim, d2 = r2.dim;
    // unknown P is d1 x d2; one stacked system X1 P - P X2 = 0 (and Y, Z)
    Mat sys(ctx, d1 * d2, 3 * d1 * d2);
    const Mat* left[3] = {&r1.X, &r1.Y, &r1.Z};
    const Mat* right[3] = {&r2.X, &r2.Y, &r2.Z};
    for (long i = 0; i < d1; ++i)
        for (long j = 0; j < d2; ++j) {
            const long row = i * d2 + j;
            for (int t = 0; t < 3; ++t) {
                const long off = t * d1 * d2;
                for (long rr = 0; rr < d1; ++rr)
                    sys.at(row, off + rr * d2 + j) += left[t]->at(rr, i);
                for (long cc = 0; cc < d2; ++cc)
                    sys.at(row, off + i * d2 + cc) -= right[t]->at(j, cc);
            }
        }
    std::vector<RowVec> ker = left_kernel(sys);
    std::vector<Mat> basis;
    for (const auto& v : ker) {
        Mat P(ctx, d1, d2);
        for (long i = 0; i < d1; ++i)
            for (long j = 0; j < d2; ++j) P.at(i, j) = v[i * d2 + j];
        basis.push_back(std::move(P));
    }
    return {static_cast<long>(basis.size()), basis};
}

namespace {

// J = mu3 + beta gamma q^2/(q^2-1)^2 + q^{-2} alpha mu2^2/(q^2-1); transforms
// as J -> q^{2i} J under the M1 reparameterization, so J/mu2 is an orbit
// invariant and (mu1^l, mu2^l, J/mu2) is exactly the M1 iso-class data.
CycNum m1_j(const Params& p, const CycNum& mu2, const CycNum& mu3) {
    const CycNum u = uq(p.ctx);
    return mu3 + p.beta * p.gamma * q2pow(p.ctx, 1) * u * u +
           q2pow(p.ctx, -1) * p.alpha * mu2 * mu2 * u;
}

}  // namespace

std::map<std::string, CycNum> canonical_invariants(const FamilySpec& spec, const Params& p) {
    validate_spec(spec, p);
    const long l = p.ctx->order();
    switch (spec.tag) {
        case Family::M0:
            return {{"a", spec.param("a")}};
        case Family::M1: {
            const CycNum &m2 = spec.param("mu2");
            return {{"mu1_l", spec.param("mu1").pow(l)},
                    {"mu2_l", m2.pow(l)},
                    {"jratio", m1_j(p, m2, spec.param("mu3")) / m2}};
        }
        case Family::M2:
            return {{"mu1_l", spec.param("mu1").pow(l)}, {"mu2", spec.param("mu2")}};
        case Family::M3:
            return {{"mu", spec.param("mu")}};
        case Family::M4:
        case Family::M5:
            return {{"mu1", spec.param("mu1")}, {"mu2", spec.param("mu2")}};
        case Family::M6:
            return {{"mu1_l", spec.param("mu1").pow(l)}, {"mu2_l", spec.param("mu2").pow(l)}};
        case Family::M7:
            return {{"mu", spec.param("mu")}};
    }
    throw Error("canonical_invariants: bad tag");
}

bool iso_by_criterion(const FamilySpec& s1, const FamilySpec& s2, const Params& p) {
    if (s1.tag != s2.tag) return false;  // distinct families are never isomorphic
    validate_spec(s1, p);
    validate_spec(s2, p);
    const FieldPtr& ctx = p.ctx;
    const long l = ctx->order();
    const CycNum one = CycNum::one(ctx), u = uq(ctx);
    switch (s1.tag) {
        case Family::M0:
            return s1.param("a") == s2.param("a");
        case Family::M1: {
            if (s1.param("mu1").pow(l) != s2.param("mu1").pow(l)) return false;
            const CycNum &m2 = s1.param("mu2"), &m3 = s1.param("mu3");
            const CycNum &n2 = s2.param("mu2"), &n3 = s2.param("mu3");
            for (long i = 0; i < l; ++i) {
                const CycNum qi = q2pow(ctx, i);
                if (m2 != qi * n2) continue;
                CycNum rhs = qi * n3 + (qi - one) * u *
                                           (p.beta * p.gamma * q2pow(ctx, 1) * u -
                                            q2pow(ctx, i - 1) * p.alpha * n2 * n2);
                if (m3 == rhs) return true;
            }
            return false;
        }
        case Family::M2:
            return s1.param("mu1").pow(l) == s2.param("mu1").pow(l) &&
                   s1.param("mu2") == s2.param("mu2");
        case Family::M3:
            return s1.param("mu") == s2.param("mu");
        case Family::M4:
        case Family::M5:
            return s1.param("mu1") == s2.param("mu1") && s1.param("mu2") == s2.param("mu2");
        case Family::M6: {
            if (s1.param("mu1").pow(l) != s2.param("mu1").pow(l)) return false;
            for (long i = 0; i < l; ++i)
                if (s1.param("mu2") == q2pow(ctx, i) * s2.param("mu2")) return true;
            return false;
        }
        case Family::M7:
            return s1.param("mu") == s2.param("mu");
    }
    throw Error("iso_by_criterion: bad tag");
}

namespace {

// Scalar by which m acts on the line through v; checks exactness.
CycNum line_scalar(const RowVec& v, const Mat& m, const char* what) {
    RowVec w = qweyl::apply(v, m);
    long j = -1;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) { j = static_cast<long>(i); break; }
    if (j < 0) throw Error("line_scalar: zero vector");
    CycNum c = w[j] / v[j];
    for (std::size_t i = 0; i < v.size(); ++i)
        if (w[i] != c * v[i])
            throw NotSchurScalar(std::string("line not preserved by ") + what);
    return c;
}

bool row_is_zero(const RowVec& v) {
    return std::all_of(v.begin(), v.end(), [](const CycNum& c) { return c.is_zero(); });
}

std::map<std::string, CycNum> scalar_map(const CentralScalars& cs) {
    return {{"xl", cs.xl}, {"yl", cs.yl}, {"zl", cs.zl}, {"omega", cs.omega}};
}

}  // namespace

ClassifyResult classify(const Rep& r, const Hints& hints) {
    const FieldPtr& ctx = r.p.ctx;
    const long l = ctx->order();
    if (!check_relations(r)) throw DomainError("classify: defining relations fail");
    if (!is_simple_burnside(r)) throw DomainError("classify: module is not simple");
    const CentralScalars cs = central_scalars(r);
    const DerivedOps ops = derived_operators(r);

    ClassifyResult res;
    res.scalars = scalar_map(cs);

    if (cs.zl.is_zero()) {
        // nilpotent z
        if (!r.p.beta.is_zero()) {
            res.tag = Family::M4;
            res.canonical = {{"mu1", cs.xl}, {"mu2", cs.omega}};
            return res;
        }
        if (!r.p.gamma.is_zero()) {
            res.tag = Family::M5;
            res.canonical = {{"mu1", cs.yl}, {"mu2", cs.omega}};
            return res;
        }
        if (r.p.alpha.is_zero())
            throw DomainError("classify: A(0,0,0) modules are out of scope");
        if (ops.G.pow(r.dim).is_zero()) {
            // g nilpotent: module over K[x,y]/<(q^2-1)yx+alpha>, one-dimensional
            if (r.dim != 1)
                throw NotSchurScalar("classify: nilpotent g on a module of dimension > 1");
            res.tag = Family::M0;
            res.canonical = {{"a", r.X.at(0, 0)}};
            return res;
        }
        if (!cs.xl.is_zero()) {
            auto g_l = is_scalar(ops.G.pow(l));
            if (!g_l) throw NotSchurScalar("not Schur-scalar: g^l");
            res.tag = Family::M6;
            res.canonical = {{"mu1_l", cs.xl}, {"mu2_l", *g_l}};
            return res;
        }
        res.tag = Family::M7;
        res.canonical = {{"mu", cs.yl}};
        return res;
    }

    // invertible z: find an eigenline of Z from the hints
    RowVec v;
    bool found = false;
    for (const CycNum& lam : hints.z_eigenvalues) {
        Mat shifted = r.Z - Mat::identity(ctx, r.dim).scaled(lam);
        auto ker = left_kernel(shifted);
        if (!ker.empty()) { v = ker.front(); found = true; break; }
    }
    if (!found)
        throw HintNeeded("classify: eigenvalue not in ground field; supply hint");

    const Mat Fl = ops.F.pow(l);
    const CycNum eta1 = line_scalar(v, Fl, "f^l");
    if (!eta1.is_zero()) {
        const CycNum eta4 = line_scalar(v, r.Z, "z");
        const CycNum eta3 = line_scalar(v, ops.E * ops.F, "ef");
        res.tag = Family::M1;
        res.canonical = {{"mu1_l", eta1},
                         {"mu2_l", eta4.pow(l)},
                         {"jratio", m1_j(r.p, eta4, eta3) / eta4}};
        return res;
    }

    // walk to the end of the f-chain
    RowVec u = v;
    for (long steps = 0;; ++steps) {
        if (steps > l) throw Error("classify: f-chain longer than l");
        RowVec w = qweyl::apply(u, ops.F);
        if (row_is_zero(w)) break;
        u = std::move(w);
    }
    const CycNum mu = line_scalar(u, r.Z, "z");
    const CycNum eta2 = line_scalar(u, ops.E.pow(l), "e^l");
    if (!eta2.is_zero()) {
        res.tag = Family::M2;
        res.canonical = {{"mu1_l", eta2}, {"mu2", mu}};
        return res;
    }
    long s = 1;
    for (RowVec w = qweyl::apply(u, ops.E); !row_is_zero(w); w = qweyl::apply(w, ops.E)) {
        if (++s > l) throw Error("classify: e-chain longer than l");
    }
    res.tag = Family::M3;
    res.canonical = {{"mu", mu}};
    res.s = s;
    return res;
}

Rep conjugate(const Rep& r, const Mat& P) {
    if (P.rows() != r.dim || P.cols() != r.dim)
        throw DimensionError("conjugate: wrong shape for P");
    Mat Pi = inverse(P);  // throws for singular P
    Rep out;
    out.dim = r.dim;
    out.p = r.p;
    out.X = Pi * r.X * P;
    out.Y = Pi * r.Y * P;
    out.Z = Pi * r.Z * P;
    return out;
}

}  // namespace qweyl
