#include <doctest.h>

#include "qweyl/pidegree.hpp"

using namespace qweyl;

namespace {

long long det3(const IntMat& m) {
    return m.at(0, 0) * (m.at(1, 1) * m.at(2, 2) - m.at(1, 2) * m.at(2, 1)) -
           m.at(0, 1) * (m.at(1, 0) * m.at(2, 2) - m.at(1, 2) * m.at(2, 0)) +
           m.at(0, 2) * (m.at(1, 0) * m.at(2, 1) - m.at(1, 1) * m.at(2, 0));
}

IntMat mul(const IntMat& a, const IntMat& b) {
    IntMat r{a.n, std::vector<long long>(a.n * a.n, 0)};
    for (long i = 0; i < a.n; ++i)
        for (long k = 0; k < a.n; ++k)
            for (long j = 0; j < a.n; ++j) r.at(i, j) += a.at(i, k) * b.at(k, j);
    return r;
}

}  // namespace

TEST_SUITE_BEGIN("centerpi");

TEST_CASE("exponent matrix") {
    IntMat h = weyl_exponent_matrix();
    CHECK(h.is_skew_symmetric());
    CHECK(h.at(0, 1) == 1);
    CHECK(h.at(0, 2) == -1);
    CHECK(h.at(1, 2) == 1);
}

TEST_CASE("kernel residues are the diagonal classes") {
    IntMat h = weyl_exponent_matrix();
    auto k2 = kernel_residues(h, 2);
    CHECK(k2 == std::set<std::vector<long>>{{0, 0, 0}, {1, 1, 1}});
    CHECK(kernel_residues(h, 3).size() == 3);
    CHECK(k2.count({1, 0, 0}) == 0);  // H(1,0,0) = (0,-1,1) != 0
    for (long l : {2, 3, 4, 5, 6, 7, 8}) {
        auto ker = kernel_residues(h, l);
        CHECK(static_cast<long>(ker.size()) == l);
        for (const auto& t : ker) {
            CHECK(t[0] == t[1]);
            CHECK(t[1] == t[2]);
        }
    }
}

TEST_CASE("PI degree by enumeration") {
    IntMat h = weyl_exponent_matrix();
    CHECK(pideg_bruteforce(h, 3) == 3);  // image size 9
    CHECK(pideg_bruteforce(h, 2) == 2);  // image size 4
    CHECK(pideg_bruteforce(h, 6) == 6);  // image size 36
}

TEST_CASE("kernel size times image size is l^3") {
    IntMat h = weyl_exponent_matrix();
    for (long l : {2, 3, 4, 5, 6, 7, 8}) {
        long long ker = static_cast<long long>(kernel_residues(h, l).size());
        long long im = static_cast<long long>(pideg_bruteforce(h, l)) * pideg_bruteforce(h, l);
        CHECK(ker * im == static_cast<long long>(l) * l * l);
    }
}

TEST_CASE("smith invariant factors") {
    CHECK(smith_invariant_factors(weyl_exponent_matrix()) == std::vector<long long>{1});
    CHECK(smith_invariant_factors(IntMat{2, {0, 0, 0, 0}}).empty());
    CHECK(smith_invariant_factors(IntMat{2, {0, 2, -2, 0}}) == std::vector<long long>{2});
}

TEST_CASE("smith transforms are unimodular and diagonalize") {
    IntMat h = weyl_exponent_matrix();
    SmithResult s = smith_normal_form(h);
    CHECK(std::llabs(det3(s.u)) == 1);
    CHECK(std::llabs(det3(s.v)) == 1);
    IntMat d = mul(mul(s.u, h), s.v);
    for (long i = 0; i < 3; ++i)
        for (long j = 0; j < 3; ++j) CHECK(d.at(i, j) == (i == j ? s.diag[i] : 0));
    for (std::size_t i = 0; i + 1 < s.diag.size(); ++i)
        if (s.diag[i + 1] != 0) CHECK(s.diag[i + 1] % s.diag[i] == 0);
}

TEST_CASE("PI degree from invariant factors") {
    IntMat h = weyl_exponent_matrix();
    for (long l : {2, 3, 4, 5, 6, 7, 8}) CHECK(pideg_invariant_factors(h, l) == l);
    CHECK(pideg_invariant_factors(IntMat{2, {0, 2, -2, 0}}, 2) == 1);  // h=[2], m=2
    CHECK(pideg_invariant_factors(IntMat{2, {0, 1, -1, 0}}, 5) == 5);  // h=[1], m=5
}

TEST_CASE("semigroup generation") {
    for (long l : {2, 3, 4, 5}) CHECK(semigroup_generators_check(l, 3 * l));
    CHECK(semigroup_generators_check(2, 4));
    CHECK_THROWS_AS(semigroup_generators_check(3, 2), DomainError);
}

TEST_CASE("pi_report is consistent") {
    for (long l : {2, 3, 4, 5, 6, 7, 8}) {
        PIReport r = pi_report(l);
        CHECK(r.consistent());
        CHECK(r.pideg_claimed == l);
        CHECK(r.h_image == static_cast<long long>(l) * l);
    }
}

TEST_SUITE_END();
