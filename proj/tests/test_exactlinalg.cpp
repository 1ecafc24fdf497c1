#include <doctest.h>

#include "helpers.hpp"
#include "qweyl/matrix.hpp"

using namespace qweyl;
using qweyl::testing::Rng;

namespace {

Mat unit(const FieldPtr& ctx, long d, long i, long j) {
    Mat m(ctx, d, d);
    m.at(i, j) = CycNum::one(ctx);
    return m;
}

Mat random_mat(const FieldPtr& ctx, long r, long c, Rng& rng) {
    Mat m(ctx, r, c);
    for (long i = 0; i < r; ++i)
        for (long j = 0; j < c; ++j) m.at(i, j) = testing::random_cyc(ctx, rng);
    return m;
}

}  // namespace

TEST_SUITE_BEGIN("exactlinalg");

TEST_CASE("products and powers") {
    auto ctx = FieldCtx::make(4);
    Rng rng(1);
    Mat m = random_mat(ctx, 2, 2, rng);
    CHECK(Mat::identity(ctx, 2) * m == m);
    CHECK(Mat::diag(ctx, {q2pow(ctx, 1), q2pow(ctx, 2)}).pow(4) == Mat::identity(ctx, 2));
    Mat nil(ctx, 2, 2);
    nil.at(0, 1) = testing::random_nonzero(ctx, rng);
    CHECK(nil.pow(2).is_zero());
    CHECK_THROWS_AS(random_mat(ctx, 2, 3, rng) * random_mat(ctx, 2, 2, rng), DimensionError);
}

TEST_CASE("left kernels") {
    auto ctx = FieldCtx::make(3);
    CHECK(left_kernel(Mat::identity(ctx, 3)).empty());
    CHECK(left_kernel(Mat(ctx, 4, 4)).size() == 4);
    // eigenspace of eigenvalue 1 of diag(1,-1)
    Mat d = Mat::diag(ctx, {CycNum::one(ctx), -CycNum::one(ctx)});
    auto ker = left_kernel(d - Mat::identity(ctx, 2));
    REQUIRE(ker.size() == 1);
    CHECK(!ker[0][0].is_zero());
    CHECK(ker[0][1].is_zero());
}

TEST_CASE("kernel vectors annihilate exactly, rank-nullity") {
    Rng rng(99);
    for (long l : {2, 5}) {
        auto ctx = FieldCtx::make(l);
        for (int t = 0; t < 10; ++t) {
            Mat a = random_mat(ctx, 4, 3, rng);
            if (t % 3 == 0) {  // force dependent rows
                for (long j = 0; j < 3; ++j) a.at(3, j) = a.at(0, j) + a.at(1, j);
            }
            auto ker = left_kernel(a);
            for (const auto& v : ker) {
                RowVec w = qweyl::apply(v, a);
                for (const auto& x : w) CHECK(x.is_zero());
            }
            CHECK(rank(a) + static_cast<long>(ker.size()) == a.rows());
        }
    }
}

TEST_CASE("inverse") {
    auto ctx = FieldCtx::make(5);
    Rng rng(17);
    Mat p = testing::random_invertible(ctx, 3, rng);
    CHECK(p * inverse(p) == Mat::identity(ctx, 3));
    CHECK(inverse(p) * p == Mat::identity(ctx, 3));
    Mat sing(ctx, 2, 2);
    sing.at(0, 0) = CycNum::one(ctx);
    CHECK_THROWS_AS(inverse(sing), Error);
}

TEST_CASE("is_scalar") {
    auto ctx = FieldCtx::make(2);
    CycNum two = CycNum::from_int(ctx, 2);
    CHECK(is_scalar(Mat::identity(ctx, 3).scaled(two)) == two);
    CHECK(!is_scalar(Mat::diag(ctx, {CycNum::one(ctx), -CycNum::one(ctx)})).has_value());
    CHECK(is_scalar(Mat(ctx, 3, 3)) == CycNum::zero(ctx));
}

TEST_CASE("span_dim") {
    auto ctx = FieldCtx::make(3);
    Mat I = Mat::identity(ctx, 2);
    CHECK(span_dim({I}) == 1);
    CHECK(span_dim({I, unit(ctx, 2, 0, 1), unit(ctx, 2, 1, 0), unit(ctx, 2, 0, 0)}) == 4);
    CHECK(span_dim({I, I.scaled(CycNum::from_int(ctx, 2))}) == 1);
}

TEST_CASE("span_dim is invariant under reordering and rescaling") {
    auto ctx = FieldCtx::make(4);
    Rng rng(5);
    std::vector<Mat> mats;
    for (int i = 0; i < 5; ++i) mats.push_back(random_mat(ctx, 3, 3, rng));
    long d = span_dim(mats);
    std::vector<Mat> shuffled;
    for (int i = 4; i >= 0; --i) shuffled.push_back(mats[i].scaled(testing::random_nonzero(ctx, rng)));
    CHECK(span_dim(shuffled) == d);
}

TEST_SUITE_END();
