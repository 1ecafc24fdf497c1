#pragma once

#include <array>
#include <set>
#include <vector>

#include "qweyl/errors.hpp"

namespace qweyl {

/// Small dense integer matrix (the exponent matrix of the associated
/// quasipolynomial algebra and friends).
struct IntMat {
    long n = 0;
    std::vector<long long> e;  // row-major, n*n

    long long at(long i, long j) const { return e[i * n + j]; }
    long long& at(long i, long j) { return e[i * n + j]; }

    bool is_skew_symmetric() const;
};

/// The skew-symmetric exponent matrix of the quasipolynomial algebra
/// attached to A(alpha,beta,gamma) with generator order x < y < z:
///   [[0,1,-1],[-1,0,1],[1,-1,0]].
IntMat weyl_exponent_matrix();

/// Brute-force kernel of the induced map (Z/l)^n -> (Z/l)^n.
std::set<std::vector<long>> kernel_residues(const IntMat& h, long l);

/// PI degree as sqrt(|image|) of the induced map, by enumeration.
/// Throws if |image| is not a perfect square.
long pideg_bruteforce(const IntMat& h, long l);

struct SmithResult {
    std::vector<long long> diag;        // full diagonal, divisibility chain
    IntMat u, v;                        // unimodular, u*h*v = diag
};

/// Smith normal form with the unimodular transforms recorded.
SmithResult smith_normal_form(const IntMat& h);

/// Nonzero invariant factors h_1 | h_2 | ...; for skew-symmetric input they
/// come in equal pairs and one representative per pair is returned.
std::vector<long long> smith_invariant_factors(const IntMat& h);

/// prod m / gcd(h_i, m) over the paired invariant factors.
long long pideg_invariant_factors(const IntMat& h, long m);

/// Every triple with a = b = c (mod l) in [0,bound]^3 is a non-negative
/// integer combination of (l,0,0), (0,l,0), (0,0,l), (1,1,1).
bool semigroup_generators_check(long l, long bound);

struct PIReport {
    long l = 0;
    long long h_image = 0;
    long pideg_bruteforce = 0;
    std::vector<long long> invariant_factors;
    long long pideg_factors = 0;
    long pideg_claimed = 0;  // = l
    bool kernel_matches_diagonal = false;
    bool consistent() const {
        return pideg_bruteforce == pideg_factors && pideg_factors == pideg_claimed &&
               kernel_matches_diagonal;
    }
};

PIReport pi_report(long l);

}  // namespace qweyl
