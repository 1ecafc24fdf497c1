#include "qweyl/matrix.hpp"

namespace qweyl {

Mat::Mat(FieldPtr ctx, long rows, long cols)
    : ctx_(std::move(ctx)), rows_(rows), cols_(cols), e_(rows * cols, CycNum::zero(ctx_)) {
    if (rows < 0 || cols < 0) throw DimensionError("negative matrix dimension");
}

Mat Mat::identity(const FieldPtr& ctx, long d) {
    Mat m(ctx, d, d);
    for (long i = 0; i < d; ++i) m.at(i, i) = CycNum::one(ctx);
    return m;
}

Mat Mat::zero(const FieldPtr& ctx, long rows, long cols) { return Mat(ctx, rows, cols); }

Mat Mat::diag(const FieldPtr& ctx, const std::vector<CycNum>& d) {
    Mat m(ctx, static_cast<long>(d.size()), static_cast<long>(d.size()));
    for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
    return m;
}

Mat Mat::operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw DimensionError("mat_mul: inner dimensions differ");
    Mat r(ctx_, rows_, o.cols_);
    for (long i = 0; i < rows_; ++i)
        for (long k = 0; k < cols_; ++k) {
            const CycNum& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (long j = 0; j < o.cols_; ++j) {
                if (o.at(k, j).is_zero()) continue;
                r.at(i, j) += aik * o.at(k, j);
            }
        }
    return r;
}

Mat Mat::operator+(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("mat_add: shape mismatch");
    Mat r = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
    return r;
}

Mat Mat::operator-(const Mat& o) const { return *this + o.scaled(-CycNum::one(ctx_)); }

Mat Mat::scaled(const CycNum& c) const {
    Mat r = *this;
    for (auto& x : r.e_) x *= c;
    return r;
}

Mat Mat::pow(long k) const {
    if (rows_ != cols_) throw DimensionError("mat_pow: matrix not square");
    if (k < 0) throw DimensionError("mat_pow: negative exponent");
    Mat acc = identity(ctx_, rows_);
    Mat base = *this;
    while (k > 0) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

bool Mat::operator==(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] != o.e_[i]) return false;
    return true;
}

bool Mat::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

RowVec apply(const RowVec& v, const Mat& a) {
    if (static_cast<long>(v.size()) != a.rows()) throw DimensionError("apply: row length != rows");
    RowVec r(a.cols(), CycNum::zero(a.ctx()));
    for (long i = 0; i < a.rows(); ++i) {
        if (v[i].is_zero()) continue;
        for (long j = 0; j < a.cols(); ++j) {
            if (a.at(i, j).is_zero()) continue;
            r[j] += v[i] * a.at(i, j);
        }
    }
    return r;
}

std::vector<RowVec> left_kernel(const Mat& a) {
    // Row-reduce [a | I]; rows whose a-part vanishes carry kernel vectors.
    const long n = a.rows(), m = a.cols();
    const FieldPtr& ctx = a.ctx();
    std::vector<RowVec> work(n);
    for (long i = 0; i < n; ++i) {
        work[i].reserve(m + n);
        for (long j = 0; j < m; ++j) work[i].push_back(a.at(i, j));
        for (long j = 0; j < n; ++j)
            work[i].push_back(i == j ? CycNum::one(ctx) : CycNum::zero(ctx));
    }
    long row = 0;
    for (long col = 0; col < m && row < n; ++col) {
        long piv = -1;
        for (long i = row; i < n; ++i)
            if (!work[i][col].is_zero()) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(work[row], work[piv]);
        CycNum invp = work[row][col].inv();
        for (auto& x : work[row]) x *= invp;
        for (long i = 0; i < n; ++i) {
            if (i == row || work[i][col].is_zero()) continue;
            CycNum f = work[i][col];
            for (long j = 0; j < m + n; ++j) work[i][j] -= f * work[row][j];
        }
        ++row;
    }
    std::vector<RowVec> ker;
    for (long i = row; i < n; ++i)
        ker.emplace_back(work[i].begin() + m, work[i].end());
    return ker;
}

long rank(const Mat& a) { return a.rows() - static_cast<long>(left_kernel(a).size()); }

Mat inverse(const Mat& a) {
    if (a.rows() != a.cols()) throw DimensionError("inverse: matrix not square");
    const long n = a.rows();
    const FieldPtr& ctx = a.ctx();
    std::vector<RowVec> work(n);
    for (long i = 0; i < n; ++i) {
        for (long j = 0; j < n; ++j) work[i].push_back(a.at(i, j));
        for (long j = 0; j < n; ++j)
            work[i].push_back(i == j ? CycNum::one(ctx) : CycNum::zero(ctx));
    }
    for (long col = 0; col < n; ++col) {
        long piv = -1;
        for (long i = col; i < n; ++i)
            if (!work[i][col].is_zero()) { piv = i; break; }
        if (piv < 0) throw Error("inverse: singular matrix");
        std::swap(work[col], work[piv]);
        CycNum invp = work[col][col].inv();
        for (auto& x : work[col]) x *= invp;
        for (long i = 0; i < n; ++i) {
            if (i == col || work[i][col].is_zero()) continue;
            CycNum f = work[i][col];
            for (long j = 0; j < 2 * n; ++j) work[i][j] -= f * work[col][j];
        }
    }
    Mat r(ctx, n, n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) r.at(i, j) = work[i][n + j];
    return r;
}

std::optional<CycNum> is_scalar(const Mat& a) {
    if (a.rows() != a.cols()) throw DimensionError("is_scalar: matrix not square");
    if (a.rows() == 0) return CycNum::zero(a.ctx());
    CycNum c = a.at(0, 0);
    for (long i = 0; i < a.rows(); ++i)
        for (long j = 0; j < a.cols(); ++j) {
            if (i == j ? (a.at(i, j) != c) : !a.at(i, j).is_zero()) return std::nullopt;
        }
    return c;
}

bool RowSpace::add(RowVec v) {
    for (std::size_t b = 0; b < basis_.size(); ++b) {
        const CycNum& c = v[pivots_[b]];
        if (c.is_zero()) continue;
        CycNum f = c;
        for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * basis_[b][j];
    }
    long piv = -1;
    for (std::size_t j = 0; j < v.size(); ++j)
        if (!v[j].is_zero()) { piv = static_cast<long>(j); break; }
    if (piv < 0) return false;
    CycNum invp = v[piv].inv();
    for (auto& x : v) x *= invp;
    basis_.push_back(std::move(v));
    pivots_.push_back(piv);
    return true;
}

long span_dim(const std::vector<Mat>& mats) {
    RowSpace space;
    for (const auto& m : mats) {
        if (m.rows() != m.cols()) throw DimensionError("span_dim: matrices must be square");
        if (!mats.empty() && (m.rows() != mats.front().rows()))
            throw DimensionError("span_dim: matrices of unequal dimension");
        space.add(m.entries());
    }
    return space.dim();
}

}  // namespace qweyl
