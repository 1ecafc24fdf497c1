#include "qweyl/pidegree.hpp"

#include <cmath>
#include <cstdlib>
#include <numeric>

namespace qweyl {

namespace {

constexpr long kMaxEnumL = 64;  // l^3 residue table cap

long long mod_nonneg(long long v, long l) {
    long long r = v % l;
    return r < 0 ? r + l : r;
}

IntMat identity_mat(long n) {
    IntMat m{n, std::vector<long long>(n * n, 0)};
    for (long i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

}  // namespace

bool IntMat::is_skew_symmetric() const {
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j)
            if (at(i, j) != -at(j, i)) return false;
    return true;
}

IntMat weyl_exponent_matrix() {
    return IntMat{3, {0, 1, -1, -1, 0, 1, 1, -1, 0}};
}

std::set<std::vector<long>> kernel_residues(const IntMat& h, long l) {
    if (l < 2) throw DomainError("kernel_residues: l must be >= 2");
    if (l > kMaxEnumL) throw DomainError("kernel_residues: enumeration capped at l <= 64");
    const long n = h.n;
    std::set<std::vector<long>> ker;
    std::vector<long> t(n, 0);
    while (true) {
        bool in_ker = true;
        for (long i = 0; i < n && in_ker; ++i) {
            long long s = 0;
            for (long j = 0; j < n; ++j) s += h.at(i, j) * t[j];
            if (mod_nonneg(s, l) != 0) in_ker = false;
        }
        if (in_ker) ker.insert(t);
        long k = n - 1;
        while (k >= 0 && ++t[k] == l) t[k--] = 0;
        if (k < 0) break;
    }
    return ker;
}

namespace {

long long image_cardinality(const IntMat& h, long l) {
    if (l < 2) throw DomainError("pideg_bruteforce: l must be >= 2");
    if (l > kMaxEnumL) throw DomainError("pideg_bruteforce: enumeration capped at l <= 64");
    const long n = h.n;
    std::set<std::vector<long>> image;
    std::vector<long> t(n, 0);
    while (true) {
        std::vector<long> im(n);
        for (long i = 0; i < n; ++i) {
            long long s = 0;
            for (long j = 0; j < n; ++j) s += h.at(i, j) * t[j];
            im[i] = static_cast<long>(mod_nonneg(s, l));
        }
        image.insert(std::move(im));
        long k = n - 1;
        while (k >= 0 && ++t[k] == l) t[k--] = 0;
        if (k < 0) break;
    }
    return static_cast<long long>(image.size());
}

}  // namespace

long pideg_bruteforce(const IntMat& h, long l) {
    const long long hsize = image_cardinality(h, l);
    const long root = static_cast<long>(std::llround(std::sqrt(static_cast<double>(hsize))));
    if (root * static_cast<long long>(root) != hsize)
        throw Error("pideg_bruteforce: image cardinality is not a perfect square");
    return root;
}

SmithResult smith_normal_form(const IntMat& h) {
    const long n = h.n;
    SmithResult r{std::vector<long long>(n, 0), identity_mat(n), identity_mat(n)};
    IntMat a = h;

    auto swap_rows = [&](long i, long j) {
        for (long k = 0; k < n; ++k) {
            std::swap(a.at(i, k), a.at(j, k));
            std::swap(r.u.at(i, k), r.u.at(j, k));
        }
    };
    auto swap_cols = [&](long i, long j) {
        for (long k = 0; k < n; ++k) {
            std::swap(a.at(k, i), a.at(k, j));
            std::swap(r.v.at(k, i), r.v.at(k, j));
        }
    };
    auto addmul_row = [&](long dst, long src, long long f) {
        for (long k = 0; k < n; ++k) {
            a.at(dst, k) += f * a.at(src, k);
            r.u.at(dst, k) += f * r.u.at(src, k);
        }
    };
    auto addmul_col = [&](long dst, long src, long long f) {
        for (long k = 0; k < n; ++k) {
            a.at(k, dst) += f * a.at(k, src);
            r.v.at(k, dst) += f * r.v.at(k, src);
        }
    };
    auto negate_row = [&](long i) { addmul_row(i, i, -2); };

    for (long t = 0; t < n; ++t) {
        while (true) {
            // pick a pivot of minimal nonzero magnitude
            long pi = -1, pj = -1;
            for (long i = t; i < n; ++i)
                for (long j = t; j < n; ++j)
                    if (a.at(i, j) != 0 &&
                        (pi < 0 || std::llabs(a.at(i, j)) < std::llabs(a.at(pi, pj)))) {
                        pi = i; pj = j;
                    }
            if (pi < 0) { r.diag[t] = 0; break; }
            if (pi != t) swap_rows(t, pi);
            if (pj != t) swap_cols(t, pj);
            bool clean = true;
            for (long i = t + 1; i < n; ++i)
                if (a.at(i, t) != 0) {
                    addmul_row(i, t, -(a.at(i, t) / a.at(t, t)));
                    if (a.at(i, t) != 0) clean = false;
                }
            for (long j = t + 1; j < n; ++j)
                if (a.at(t, j) != 0) {
                    addmul_col(j, t, -(a.at(t, j) / a.at(t, t)));
                    if (a.at(t, j) != 0) clean = false;
                }
            if (!clean) continue;
            // enforce divisibility into later entries
            bool fixed = true;
            for (long i = t + 1; i < n && fixed; ++i)
                for (long j = t + 1; j < n && fixed; ++j)
                    if (a.at(i, j) % a.at(t, t) != 0) {
                        addmul_row(t, i, 1);
                        fixed = false;
                    }
            if (!fixed) continue;
            if (a.at(t, t) < 0) negate_row(t);
            r.diag[t] = a.at(t, t);
            break;
        }
    }
    return r;
}

std::vector<long long> smith_invariant_factors(const IntMat& h) {
    SmithResult s = smith_normal_form(h);
    std::vector<long long> nonzero;
    for (long long d : s.diag)
        if (d != 0) nonzero.push_back(d);
    // skew-symmetric => even rank with invariant factors in equal pairs
    std::vector<long long> paired;
    for (std::size_t i = 0; i + 1 < nonzero.size(); i += 2) {
        if (nonzero[i] != nonzero[i + 1])
            throw Error("smith_invariant_factors: factors of a skew-symmetric matrix must pair up");
        paired.push_back(nonzero[i]);
    }
    if (nonzero.size() % 2 != 0)
        throw Error("smith_invariant_factors: odd rank for a skew-symmetric matrix");
    return paired;
}

long long pideg_invariant_factors(const IntMat& h, long m) {
    if (m < 2) throw DomainError("pideg_invariant_factors: m must be >= 2");
    long long deg = 1;
    for (long long hi : smith_invariant_factors(h)) deg *= m / std::gcd(hi, static_cast<long long>(m));
    return deg;
}

bool semigroup_generators_check(long l, long bound) {
    if (bound < l) throw DomainError("semigroup_generators_check: bound must be >= l");
    for (long a = 0; a <= bound; ++a)
        for (long b = 0; b <= bound; ++b)
            for (long c = 0; c <= bound; ++c) {
                if ((a - b) % l != 0 || (b - c) % l != 0) continue;
                bool representable = false;
                const long m = std::min({a, b, c});
                for (long s = 0; s <= m && !representable; ++s) {
                    if ((a - s) % l == 0 && (b - s) % l == 0 && (c - s) % l == 0)
                        representable = true;
                }
                if (!representable) return false;
            }
    return true;
}

PIReport pi_report(long l) {
    PIReport r;
    r.l = l;
    const IntMat h = weyl_exponent_matrix();
    auto ker = kernel_residues(h, l);
    // expected kernel: the diagonal residue classes {(a,a,a)}
    bool diag_ok = static_cast<long>(ker.size()) == l;
    for (const auto& t : ker)
        if (!(t[0] == t[1] && t[1] == t[2])) diag_ok = false;
    r.kernel_matches_diagonal = diag_ok;
    r.pideg_bruteforce = pideg_bruteforce(h, l);
    r.h_image = image_cardinality(h, l);
    r.invariant_factors = smith_invariant_factors(h);
    r.pideg_factors = pideg_invariant_factors(h, l);
    r.pideg_claimed = l;
    return r;
}

}  // namespace qweyl
