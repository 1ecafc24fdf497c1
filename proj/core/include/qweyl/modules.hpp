#pragma once

#include <map>
#include <string>
#include <vector>

#include "qweyl/matrix.hpp"
#include "qweyl/weyl.hpp"

namespace qweyl {

/// A finite-dimensional right A(alpha,beta,gamma)-module: exact matrices for
/// the actions of x, y, z on row vectors.
struct Rep {
    long dim = 0;
    Mat X, Y, Z;
    Params p;
};

enum class Family { M0, M1, M2, M3, M4, M5, M6, M7 };

std::string family_name(Family f);
Family family_from_name(const std::string& s);

/// Tagged parameter record for one simple-module family.
///   M0: a (in K*);  M1: mu1,mu2 (K*), mu3 (K);  M2: mu1,mu2 (K*);
///   M3: mu (K*);    M4,M5: mu1,mu2 (K);         M6: mu1,mu2 (K*);  M7: mu (K)
struct FamilySpec {
    Family tag = Family::M1;
    std::map<std::string, CycNum> params;

    const CycNum& param(const std::string& name) const;
};

/// Optional replacements for algebraic closure: candidate Z-eigenvalues for
/// the invertible branch of classify.
struct Hints {
    std::vector<CycNum> z_eigenvalues;
};

struct ClassifyResult {
    Family tag = Family::M1;
    /// Exactly the data the iso theorems depend on; comparable across a
    /// build -> conjugate -> classify round trip.
    std::map<std::string, CycNum> canonical;
    long s = 0;  // M3 only
    /// Schur scalars of X^l, Y^l, Z^l, Omega.
    std::map<std::string, CycNum> scalars;
};

/// Dimension s of M3(mu, s): 1 if alpha = beta*gamma = 0; the unique
/// k in 1..l with F(k, mu) = 0 when alpha, beta, gamma are all nonzero and
/// such a k exists; l otherwise. F(k, mu) = alpha q^{-2k} mu^2 - beta*gamma/(q^2-1).
long s_value(const Params& p, const CycNum& mu);

/// Exact matrices transcribing the basis actions of the requested family.
/// Throws DomainError naming the violated constraint when parameters are out
/// of domain.
Rep build_family(const FamilySpec& spec, const Params& p);

/// The three defining relations as exact matrix identities.
bool check_relations(const Rep& r);

struct DerivedOps {
    Mat E, F, D, G, Omega;
};

/// E = XZ - q^2 b/(q^2-1) I, F = YZ + g/(q^2-1) I, D = YX + a/(q^2-1) I,
/// G = XY - YX, Omega = ZD + g/(q^2-1) X - b/(q^2-1) Y.
DerivedOps derived_operators(const Rep& r);

struct CentralScalars {
    CycNum xl, yl, zl, omega;
};

/// Schur scalars of the four central elements; throws NotSchurScalar if any
/// acts non-scalarly (non-simple input, or field too small).
CentralScalars central_scalars(const Rep& r);

/// True iff the algebra generated by {I, X, Y, Z} is the full matrix algebra.
bool is_simple_burnside(const Rep& r);

/// Basis of {P : X1 P = P X2, Y1 P = P Y2, Z1 P = P Z2}.
std::pair<long, std::vector<Mat>> intertwiner_space(const Rep& r1, const Rep& r2);

/// The paper's parameter criteria, family by family. Mismatched tags are
/// never isomorphic.
bool iso_by_criterion(const FamilySpec& s1, const FamilySpec& s2, const Params& p);

/// Canonical invariants of a family spec, matching what classify reports:
///   M0: a;  M1: mu1_l, mu2_l, jratio;  M2: mu1_l, mu2;  M3: mu (plus s);
///   M4/M5: mu1, mu2;  M6: mu1_l, mu2_l;  M7: mu.
std::map<std::string, CycNum> canonical_invariants(const FamilySpec& spec, const Params& p);

/// Replays the paper's classification procedure on an exact matrix module.
ClassifyResult classify(const Rep& r, const Hints& hints);

/// Basis change X -> P^-1 X P (etc.); requires invertible P.
Rep conjugate(const Rep& r, const Mat& P);

}  // namespace qweyl
