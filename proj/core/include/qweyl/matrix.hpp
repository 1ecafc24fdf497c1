#pragma once

#include <optional>
#include <vector>

#include "qweyl/cyclotomic.hpp"

namespace qweyl {

/// Dense matrix over Q(zeta_l). Vectors are rows and operators act on the
/// right throughout (modules in this project are right modules).
class Mat {
  public:
    Mat() = default;
    Mat(FieldPtr ctx, long rows, long cols);

    static Mat identity(const FieldPtr& ctx, long d);
    static Mat zero(const FieldPtr& ctx, long rows, long cols);
    static Mat diag(const FieldPtr& ctx, const std::vector<CycNum>& d);

    long rows() const { return rows_; }
    long cols() const { return cols_; }
    const FieldPtr& ctx() const { return ctx_; }

    CycNum& at(long i, long j) { return e_[i * cols_ + j]; }
    const CycNum& at(long i, long j) const { return e_[i * cols_ + j]; }

    Mat operator*(const Mat& o) const;
    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat scaled(const CycNum& c) const;
    /// Repeated squaring; requires square matrix and k >= 0.
    Mat pow(long k) const;

    bool operator==(const Mat& o) const;
    bool is_zero() const;

    /// entries as one flat row-major vector (length rows*cols)
    const std::vector<CycNum>& entries() const { return e_; }

  private:
    FieldPtr ctx_;
    long rows_ = 0, cols_ = 0;
    std::vector<CycNum> e_;
};

using RowVec = std::vector<CycNum>;

/// v * a for a row vector v.
RowVec apply(const RowVec& v, const Mat& a);

/// Basis of the left null space {v : v*a = 0}, by exact Gaussian elimination.
std::vector<RowVec> left_kernel(const Mat& a);

long rank(const Mat& a);

/// Exact inverse; throws DimensionError for non-square, Error for singular.
Mat inverse(const Mat& a);

/// The scalar c with a = c*I, if a is exactly scalar.
std::optional<CycNum> is_scalar(const Mat& a);

/// Dimension of the linear span of the given equal-sized square matrices,
/// each treated as a vector of length d^2.
long span_dim(const std::vector<Mat>& mats);

/// Incremental row space over Q(zeta_l); used by span_dim and the Burnside
/// closure. add() returns true iff the vector enlarged the span.
class RowSpace {
  public:
    bool add(RowVec v);
    long dim() const { return static_cast<long>(basis_.size()); }

  private:
    std::vector<RowVec> basis_;   // reduced, each with pivot 1
    std::vector<long> pivots_;
};

}  // namespace qweyl
