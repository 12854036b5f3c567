// Dense exact linear algebra over a Field.
#pragma once

#include <optional>
#include <vector>

#include "qci/ffield.hpp"

namespace qci {

/// Row-major dense matrix with entries in a fixed field.
struct Mat {
    FieldPtr F;
    int rows = 0;
    int cols = 0;
    std::vector<FqElem> a;

    Mat() = default;
    Mat(FieldPtr field, int r, int c) : F(std::move(field)), rows(r), cols(c), a(size_t(r) * c) {}

    FqElem& at(int r, int c) { return a[size_t(r) * cols + c]; }
    FqElem at(int r, int c) const { return a[size_t(r) * cols + c]; }

    static Mat identity(const FieldPtr& F, int n);

    Mat operator*(const Mat& o) const;
    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }

    Mat scaled(FqElem s) const;
    Mat transpose() const;
    Mat hstack(const Mat& o) const;
    Mat vstack(const Mat& o) const;
    Mat selectColumns(const std::vector<int>& idx) const;
    Mat selectRows(const std::vector<int>& idx) const;
    Mat block(int r0, int c0, int r, int c) const;
    Mat column(int c) const;
    bool isZero() const;
};

/// Pivot scan order inside a column; LastRow exists to demonstrate that
/// results advertised as pivot-independent really are.
enum class PivotRule { FirstRow, LastRow };

/// Reduced row echelon form R = T * A with the transform kept for
/// repeated solves against the same A.
class RowReducer {
public:
    explicit RowReducer(const Mat& A, PivotRule rule = PivotRule::FirstRow);

    int rank() const { return rank_; }
    const std::vector<int>& pivotCols() const { return pivots_; }
    const Mat& rref() const { return R_; }

    /// Columns form the canonical free-variable basis of ker A.
    Mat nullspaceBasis() const;
    /// Particular solution of A X = B (free variables zero), or nullopt.
    std::optional<Mat> solve(const Mat& B) const;

private:
    Mat R_, T_;
    std::vector<int> pivots_;
    int rank_ = 0;
};

int rankOf(const Mat& A);
int kernelDim(const Mat& A);
Mat matPow(const Mat& A, uint64_t n);

}  // namespace qci
