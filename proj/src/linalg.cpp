#include "qci/linalg.hpp"

namespace qci {

Mat Mat::identity(const FieldPtr& F, int n) {
    Mat m(F, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = F->one();
    return m;
}

Mat Mat::operator*(const Mat& o) const {
    if (cols != o.rows) throw Error("DegreeMismatch", "matrix product shape mismatch");
    Mat r(F, rows, o.cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            FqElem x = at(i, k);
            if (F->isZero(x)) continue;
            const FqElem* src = &o.a[size_t(k) * o.cols];
            FqElem* dst = &r.a[size_t(i) * o.cols];
            for (int j = 0; j < o.cols; ++j)
                if (src[j].v) dst[j] = F->add(dst[j], F->mul(x, src[j]));
        }
    return r;
}

Mat Mat::operator+(const Mat& o) const {
    Mat r(F, rows, cols);
    for (size_t i = 0; i < a.size(); ++i) r.a[i] = F->add(a[i], o.a[i]);
    return r;
}

Mat Mat::operator-(const Mat& o) const {
    Mat r(F, rows, cols);
    for (size_t i = 0; i < a.size(); ++i) r.a[i] = F->sub(a[i], o.a[i]);
    return r;
}

Mat Mat::scaled(FqElem s) const {
    Mat r(F, rows, cols);
    for (size_t i = 0; i < a.size(); ++i) r.a[i] = F->mul(a[i], s);
    return r;
}

Mat Mat::transpose() const {
    Mat r(F, cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
    return r;
}

Mat Mat::hstack(const Mat& o) const {
    if (rows != o.rows) throw Error("DegreeMismatch", "hstack row mismatch");
    Mat r(F, rows, cols + o.cols);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) r.at(i, j) = at(i, j);
        for (int j = 0; j < o.cols; ++j) r.at(i, cols + j) = o.at(i, j);
    }
    return r;
}

Mat Mat::vstack(const Mat& o) const {
    if (cols != o.cols) throw Error("DegreeMismatch", "vstack column mismatch");
    Mat r(F, rows + o.rows, cols);
    std::copy(a.begin(), a.end(), r.a.begin());
    std::copy(o.a.begin(), o.a.end(), r.a.begin() + a.size());
    return r;
}

Mat Mat::selectColumns(const std::vector<int>& idx) const {
    Mat r(F, rows, static_cast<int>(idx.size()));
    for (int i = 0; i < rows; ++i)
        for (size_t j = 0; j < idx.size(); ++j) r.at(i, static_cast<int>(j)) = at(i, idx[j]);
    return r;
}

Mat Mat::selectRows(const std::vector<int>& idx) const {
    Mat r(F, static_cast<int>(idx.size()), cols);
    for (size_t i = 0; i < idx.size(); ++i)
        for (int j = 0; j < cols; ++j) r.at(static_cast<int>(i), j) = at(idx[i], j);
    return r;
}

Mat Mat::block(int r0, int c0, int r, int c) const {
    Mat out(F, r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) out.at(i, j) = at(r0 + i, c0 + j);
    return out;
}

Mat Mat::column(int c) const { return block(0, c, rows, 1); }

bool Mat::isZero() const {
    for (FqElem x : a)
        if (x.v) return false;
    return true;
}

RowReducer::RowReducer(const Mat& A, PivotRule rule) : R_(A), T_(Mat::identity(A.F, A.rows)) {
    const Field& F = *A.F;
    int r = 0;
    for (int c = 0; c < R_.cols && r < R_.rows; ++c) {
        int piv = -1;
        if (rule == PivotRule::FirstRow) {
            for (int i = r; i < R_.rows; ++i)
                if (R_.at(i, c).v) {
                    piv = i;
                    break;
                }
        } else {
            for (int i = R_.rows - 1; i >= r; --i)
                if (R_.at(i, c).v) {
                    piv = i;
                    break;
                }
        }
        if (piv < 0) continue;
        if (piv != r) {
            for (int j = 0; j < R_.cols; ++j) std::swap(R_.at(piv, j), R_.at(r, j));
            for (int j = 0; j < T_.cols; ++j) std::swap(T_.at(piv, j), T_.at(r, j));
        }
        FqElem s = F.inv(R_.at(r, c));
        if (s != F.one()) {
            for (int j = c; j < R_.cols; ++j) R_.at(r, j) = F.mul(s, R_.at(r, j));
            for (int j = 0; j < T_.cols; ++j) T_.at(r, j) = F.mul(s, T_.at(r, j));
        }
        for (int i = 0; i < R_.rows; ++i) {
            if (i == r) continue;
            FqElem f = R_.at(i, c);
            if (!f.v) continue;
            FqElem nf = F.neg(f);
            const FqElem* srcR = &R_.a[size_t(r) * R_.cols];
            FqElem* dstR = &R_.a[size_t(i) * R_.cols];
            for (int j = c; j < R_.cols; ++j)
                if (srcR[j].v) dstR[j] = F.add(dstR[j], F.mul(nf, srcR[j]));
            const FqElem* srcT = &T_.a[size_t(r) * T_.cols];
            FqElem* dstT = &T_.a[size_t(i) * T_.cols];
            for (int j = 0; j < T_.cols; ++j)
                if (srcT[j].v) dstT[j] = F.add(dstT[j], F.mul(nf, srcT[j]));
        }
        pivots_.push_back(c);
        ++r;
    }
    rank_ = r;
}

Mat RowReducer::nullspaceBasis() const {
    const Field& F = *R_.F;
    std::vector<int> freeCols;
    {
        size_t k = 0;
        for (int c = 0; c < R_.cols; ++c) {
            if (k < pivots_.size() && pivots_[k] == c)
                ++k;
            else
                freeCols.push_back(c);
        }
    }
    Mat N(R_.F, R_.cols, static_cast<int>(freeCols.size()));
    for (size_t j = 0; j < freeCols.size(); ++j) {
        N.at(freeCols[j], static_cast<int>(j)) = F.one();
        for (int i = 0; i < rank_; ++i)
            N.at(pivots_[i], static_cast<int>(j)) = F.neg(R_.at(i, freeCols[j]));
    }
    return N;
}

std::optional<Mat> RowReducer::solve(const Mat& B) const {
    if (B.rows != T_.cols) throw Error("DegreeMismatch", "solve shape mismatch");
    Mat C = T_ * B;
    for (int i = rank_; i < C.rows; ++i)
        for (int j = 0; j < C.cols; ++j)
            if (C.at(i, j).v) return std::nullopt;
    Mat X(R_.F, R_.cols, B.cols);
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < B.cols; ++j) X.at(pivots_[i], j) = C.at(i, j);
    return X;
}

int rankOf(const Mat& A) { return RowReducer(A).rank(); }

int kernelDim(const Mat& A) { return A.cols - rankOf(A); }

Mat matPow(const Mat& A, uint64_t n) {
    Mat r = Mat::identity(A.F, A.rows);
    Mat b = A;
    while (n) {
        if (n & 1) r = r * b;
        b = b * b;
        n >>= 1;
    }
    return r;
}

}  // namespace qci
