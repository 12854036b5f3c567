#include "qci/modrep.hpp"

#include <algorithm>

namespace qci {

namespace {

void requireSameAlgebra(const ModuleRep& M, const ModuleRep& N) {
    if (!M.algebra->sameAs(*N.algebra))
        throw Error("AlgebraMismatch", "modules live over different algebras");
}

// Echelon-basis columns of the column space of A.
Mat columnSpaceBasis(const Mat& A) {
    RowReducer rr(A.transpose());
    const Mat& R = rr.rref();
    std::vector<int> rows(rr.rank());
    for (int i = 0; i < rr.rank(); ++i) rows[i] = i;
    return R.selectRows(rows).transpose();
}

// Action of every PBW monomial on a start vector, by peeling generators.
std::vector<Mat> monomialOrbit(const ModuleRep& M, const Mat& start) {
    const AlgebraSpec& A = *M.algebra;
    std::vector<Mat> img(A.dim());
    img[0] = start;
    for (int idx = 1; idx < A.dim(); ++idx) {
        auto exps = A.exponents(idx);
        uint32_t k = 0;
        while (exps[k] == 0) ++k;
        --exps[k];
        img[idx] = M.X[k] * img[A.indexOf(exps)];
    }
    return img;
}

// Block-diagonal action of x_{i+1} on A^t applied to a matrix of column
// vectors in (generator, monomial) coordinates.
Mat freeAction(const AlgebraPtr& A, int t, uint32_t i, const Mat& V) {
    const Mat& L = A->leftMult(i);
    int d = A->dim();
    Mat out(V.F, V.rows, V.cols);
    for (int b = 0; b < t; ++b) {
        Mat chunk = L * V.block(b * d, 0, d, V.cols);
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < V.cols; ++c) out.at(b * d + r, c) = chunk.at(r, c);
    }
    return out;
}

ModuleRep restrictToSubspace(const AlgebraPtr& A, int t, const Mat& basis) {
    ModuleRep S{A, basis.cols, {}};
    RowReducer rr(basis);
    for (uint32_t i = 0; i < A->c(); ++i) {
        auto X = rr.solve(freeAction(A, t, i, basis));
        if (!X) throw Error("LiftingFailure", "subspace is not closed under the action");
        S.X.push_back(std::move(*X));
    }
    return S;
}

}  // namespace

std::vector<std::string> validateModule(const ModuleRep& M) {
    std::vector<std::string> issues;
    const AlgebraSpec& A = *M.algebra;
    if (M.X.size() != A.c()) {
        issues.push_back("expected " + std::to_string(A.c()) + " action matrices");
        return issues;
    }
    for (uint32_t i = 0; i < A.c(); ++i)
        if (M.X[i].rows != M.dim || M.X[i].cols != M.dim) {
            issues.push_back("X" + std::to_string(i + 1) + " is not " + std::to_string(M.dim) +
                             "x" + std::to_string(M.dim));
            return issues;
        }
    for (uint32_t i = 0; i < A.c(); ++i)
        if (!matPow(M.X[i], A.a()).isZero())
            issues.push_back("X" + std::to_string(i + 1) + "^" + std::to_string(A.a()) + " != 0");
    for (uint32_t i = 0; i < A.c(); ++i)
        for (uint32_t j = i + 1; j < A.c(); ++j)
            if (!(M.X[i] * M.X[j] - (M.X[j] * M.X[i]).scaled(A.q())).isZero())
                issues.push_back("X" + std::to_string(i + 1) + " X" + std::to_string(j + 1) +
                                 " != q X" + std::to_string(j + 1) + " X" + std::to_string(i + 1));
    return issues;
}

ModuleRep simpleModule(const AlgebraPtr& A) {
    ModuleRep M{A, 1, {}};
    for (uint32_t i = 0; i < A->c(); ++i) M.X.emplace_back(A->field(), 1, 1);
    return M;
}

ModuleRep regularModule(const AlgebraPtr& A) {
    ModuleRep M{A, A->dim(), {}};
    for (uint32_t i = 0; i < A->c(); ++i) M.X.push_back(A->leftMult(i));
    return M;
}

ModuleRep zeroModule(const AlgebraPtr& A) {
    ModuleRep M{A, 0, {}};
    for (uint32_t i = 0; i < A->c(); ++i) M.X.emplace_back(A->field(), 0, 0);
    return M;
}

ModuleRep directSum(const ModuleRep& M, const ModuleRep& N) {
    requireSameAlgebra(M, N);
    ModuleRep S{M.algebra, M.dim + N.dim, {}};
    for (uint32_t i = 0; i < M.algebra->c(); ++i) {
        Mat X(M.algebra->field(), S.dim, S.dim);
        for (int r = 0; r < M.dim; ++r)
            for (int c = 0; c < M.dim; ++c) X.at(r, c) = M.X[i].at(r, c);
        for (int r = 0; r < N.dim; ++r)
            for (int c = 0; c < N.dim; ++c) X.at(M.dim + r, M.dim + c) = N.X[i].at(r, c);
        S.X.push_back(std::move(X));
    }
    return S;
}

ModuleRep liftModule(const ModuleRep& M, const LiftedAlgebra& lift) {
    ModuleRep L{lift.algebra, M.dim, {}};
    for (uint32_t i = 0; i < M.algebra->c(); ++i) {
        Mat X(lift.algebra->field(), M.dim, M.dim);
        for (size_t k = 0; k < X.a.size(); ++k) X.a[k] = lift.embedding.map(M.X[i].a[k]);
        L.X.push_back(std::move(X));
    }
    return L;
}

LeftIdealResult leftIdealModule(const AlgebraPtr& A, const AlgElement& u) {
    if (A->isZero(u)) throw Error("ZeroElement", "left ideal of the zero element");
    Mat incl = columnSpaceBasis(A->rightMultMatrix(u));
    ModuleRep M{A, incl.cols, {}};
    RowReducer rr(incl);
    for (uint32_t i = 0; i < A->c(); ++i) {
        auto X = rr.solve(A->leftMult(i) * incl);
        if (!X) throw Error("LiftingFailure", "left ideal not closed under the action");
        M.X.push_back(std::move(*X));
    }
    return {std::move(M), std::move(incl)};
}

Mat actionMatrix(const ModuleRep& M, const AlgElement& u) {
    const AlgebraSpec& A = *M.algebra;
    auto orbit = monomialOrbit(M, Mat::identity(A.field(), M.dim));
    Mat out(A.field(), M.dim, M.dim);
    for (int w = 0; w < A.dim(); ++w)
        if (u.coeffs[w].v) out = out + orbit[w].scaled(u.coeffs[w]);
    return out;
}

Mat actionMatrixLinear(const ModuleRep& M, std::span<const FqElem> lambda) {
    Mat out(M.algebra->field(), M.dim, M.dim);
    for (uint32_t i = 0; i < M.algebra->c(); ++i)
        if (lambda[i].v) out = out + M.X[i].scaled(lambda[i]);
    return out;
}

HomSpace homBasis(const ModuleRep& M, const ModuleRep& N) {
    requireSameAlgebra(M, N);
    const FieldPtr& F = M.algebra->field();
    uint32_t c = M.algebra->c();
    int dm = M.dim, dn = N.dim;
    if (dm == 0 || dn == 0) return {};
    // Unknown f is dn x dm, vectorized row-major; rows impose
    // (f X^M_i - X^N_i f)[r][s] = 0.
    Mat sys(F, static_cast<int>(c) * dn * dm, dn * dm);
    int row = 0;
    for (uint32_t i = 0; i < c; ++i) {
        for (int r = 0; r < dn; ++r)
            for (int s = 0; s < dm; ++s) {
                for (int k = 0; k < dm; ++k)
                    sys.at(row, r * dm + k) = F->add(sys.at(row, r * dm + k), M.X[i].at(k, s));
                for (int k = 0; k < dn; ++k)
                    sys.at(row, k * dm + s) = F->sub(sys.at(row, k * dm + s), N.X[i].at(r, k));
                ++row;
            }
    }
    Mat ns = RowReducer(sys).nullspaceBasis();
    HomSpace H;
    for (int j = 0; j < ns.cols; ++j) {
        Mat f(F, dn, dm);
        for (int r = 0; r < dn; ++r)
            for (int s = 0; s < dm; ++s) f.at(r, s) = ns.at(r * dm + s, j);
        H.basis.push_back(std::move(f));
    }
    return H;
}

int stableHomDim(const ModuleRep& M, const ModuleRep& N) {
    requireSameAlgebra(M, N);
    HomSpace H = homBasis(M, N);
    int h = static_cast<int>(H.basis.size());
    if (h == 0) return 0;
    ProjectiveCover cover = projectiveCover(N);
    HomSpace toFree = homBasis(M, regularModule(M.algebra));
    int d = M.algebra->dim();
    // Maps factoring through a projective factor through the cover epi;
    // their span is generated by (epi restricted to summand s) . b.
    Mat span(M.algebra->field(), cover.rank * static_cast<int>(toFree.basis.size()),
             N.dim * M.dim);
    int row = 0;
    for (int s = 0; s < cover.rank; ++s) {
        Mat ps = cover.epi.block(0, s * d, N.dim, d);
        for (const Mat& b : toFree.basis) {
            Mat g = ps * b;
            for (int r = 0; r < g.rows; ++r)
                for (int cc = 0; cc < g.cols; ++cc) span.at(row, r * g.cols + cc) = g.at(r, cc);
            ++row;
        }
    }
    return h - rankOf(span);
}

ProjectiveCover projectiveCover(const ModuleRep& M) {
    const AlgebraPtr& A = M.algebra;
    const FieldPtr& F = A->field();
    ProjectiveCover out;
    if (M.dim == 0) {
        out.epi = Mat(F, 0, 0);
        return out;
    }
    // rad M = sum of the images of the X_i; complement coordinates of its
    // echelon pivots generate the top.
    Mat stacked(F, M.dim, static_cast<int>(A->c()) * M.dim);
    for (uint32_t i = 0; i < A->c(); ++i)
        for (int r = 0; r < M.dim; ++r)
            for (int c = 0; c < M.dim; ++c) stacked.at(r, int(i) * M.dim + c) = M.X[i].at(r, c);
    RowReducer rr(stacked.transpose());
    const auto& pivots = rr.pivotCols();
    size_t k = 0;
    for (int j = 0; j < M.dim; ++j) {
        if (k < pivots.size() && pivots[k] == j)
            ++k;
        else
            out.generatorCoords.push_back(j);
    }
    out.rank = static_cast<int>(out.generatorCoords.size());
    int d = A->dim();
    out.epi = Mat(F, M.dim, out.rank * d);
    for (int j = 0; j < out.rank; ++j) {
        Mat start(F, M.dim, 1);
        start.at(out.generatorCoords[j], 0) = F->one();
        auto orbit = monomialOrbit(M, start);
        for (int w = 0; w < d; ++w)
            for (int r = 0; r < M.dim; ++r) out.epi.at(r, j * d + w) = orbit[w].at(r, 0);
    }
    return out;
}

SyzygyResult syzygy(const ModuleRep& M) {
    const AlgebraPtr& A = M.algebra;
    SyzygyResult out;
    out.cover = projectiveCover(M);
    if (out.cover.rank == 0) {
        out.module = zeroModule(A);
        out.inclusion = Mat(A->field(), 0, 0);
        return out;
    }
    RowReducer rr(out.cover.epi);
    if (rr.rank() != M.dim) throw Error("LiftingFailure", "projective cover is not surjective");
    out.inclusion = rr.nullspaceBasis();
    out.module = restrictToSubspace(A, out.cover.rank, out.inclusion);
    return out;
}

Resolution minimalResolution(const ModuleRep& M, int steps) {
    if (steps < 0) throw Error("DegreeMismatch", "steps must be >= 0");
    const AlgebraPtr& A = M.algebra;
    int d = A->dim();
    Resolution res;
    res.module = M;

    SyzygyResult step = syzygy(M);
    res.betti.push_back(step.cover.rank);
    res.augmentation = step.cover.epi;
    for (int n = 1; n <= steps; ++n) {
        if (step.module.dim == 0) {
            res.betti.push_back(0);
            res.differentials.emplace_back();
            continue;
        }
        int prevRank = step.cover.rank;
        SyzygyResult next = syzygy(step.module);
        const Mat& incl = step.inclusion;  // ambient A^{b_{n-1}} coordinates
        std::vector<AlgElement> diff(size_t(prevRank) * next.cover.rank, A->zeroElement());
        for (int j = 0; j < next.cover.rank; ++j) {
            int col = next.cover.generatorCoords[j];
            for (int i = 0; i < prevRank; ++i) {
                AlgElement& entry = diff[size_t(i) * next.cover.rank + j];
                for (int w = 0; w < d; ++w) entry.coeffs[w] = incl.at(i * d + w, col);
            }
        }
        res.betti.push_back(next.cover.rank);
        res.differentials.push_back(std::move(diff));
        // Pull the new kernel back to A^{b_n} coordinates: the next cover was
        // computed inside the current syzygy's own basis, so its kernel is
        // already expressed over A^{b_n}.
        step = std::move(next);
    }
    return res;
}

Mat expandDifferential(const AlgebraSpec& A, const std::vector<AlgElement>& entries, int rows,
                       int cols) {
    int d = A.dim();
    Mat out(A.field(), rows * d, cols * d);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            Mat R = A.rightMultMatrix(entries[size_t(i) * cols + j]);
            for (int r = 0; r < d; ++r)
                for (int c = 0; c < d; ++c) out.at(i * d + r, j * d + c) = R.at(r, c);
        }
    return out;
}

int complexityEstimate(const std::vector<int>& betti) {
    size_t len = betti.size();
    if (len < 8) throw Error("TooShort", "need at least 8 Betti numbers");
    if (betti.back() == 0) return 0;
    size_t n0 = (len - 1) / 2, n1 = len - 1;
    bool constantTail = true;
    for (size_t n = n0; n <= n1; ++n)
        if (betti[n] != betti[n0]) constantTail = false;
    if (constantTail) return 1;
    // Integer rounding of log(b1/b0)/log(n1/n0): smallest s with the ratio
    // below (n1/n0)^(s+1/2), compared exactly via squared integers.
    unsigned __int128 b0 = betti[n0] > 0 ? betti[n0] : 1;
    unsigned __int128 b1 = betti[n1];
    unsigned __int128 lhs = b1 * b1 * n0, rhs = b0 * b0 * n1;
    int s = 0;
    while (lhs >= rhs) {
        ++s;
        if (s > 16) throw Error("TooShort", "Betti growth outside the supported range");
        lhs *= n0 * n0;
        rhs *= n1 * n1;
    }
    return s + 1;
}

CosyzygyResult cosyzygyOfSimple(const AlgebraPtr& A) {
    const FieldPtr& F = A->field();
    int d = A->dim();
    CosyzygyResult out;
    out.quotientMap = Mat(F, d - 1, d);
    for (int i = 0; i < d - 1; ++i) out.quotientMap.at(i, i) = F->one();
    out.module = ModuleRep{A, d - 1, {}};
    for (uint32_t i = 0; i < A->c(); ++i) out.module.X.push_back(A->leftMult(i).block(0, 0, d - 1, d - 1));
    return out;
}

IsoVerdict isIsomorphic(const ModuleRep& M, const ModuleRep& N, uint64_t seed) {
    requireSameAlgebra(M, N);
    if (M.dim != N.dim) return IsoVerdict::No;
    if (M.dim == 0) return IsoVerdict::Yes;
    if (minimalResolution(M, 3).betti != minimalResolution(N, 3).betti) return IsoVerdict::No;
    HomSpace H = homBasis(M, N);
    size_t h = H.basis.size();
    if (h == 0) return IsoVerdict::No;
    const FieldPtr& F = M.algebra->field();
    uint64_t q = F->order();

    auto tryCombo = [&](const std::vector<FqElem>& ts) {
        Mat f(F, M.dim, M.dim);
        for (size_t i = 0; i < h; ++i)
            if (ts[i].v) f = f + H.basis[i].scaled(ts[i]);
        return rankOf(f) == M.dim;
    };

    // Exhaustive when the coefficient space is small, randomized otherwise.
    bool exhaustive = true;
    uint64_t total = 1;
    for (size_t i = 0; i < h; ++i) {
        total *= q;
        if (total > (uint64_t(1) << 16)) {
            exhaustive = false;
            break;
        }
    }
    std::vector<FqElem> ts(h, F->zero());
    if (exhaustive) {
        for (uint64_t n = 1; n < total; ++n) {
            uint64_t t = n;
            for (size_t i = 0; i < h; ++i) {
                ts[i] = F->elementAt(t % q);
                t /= q;
            }
            if (tryCombo(ts)) return IsoVerdict::Yes;
        }
        return IsoVerdict::No;
    }
    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < 1000; ++trial) {
        for (size_t i = 0; i < h; ++i) ts[i] = F->elementAt(rng() % q);
        if (tryCombo(ts)) return IsoVerdict::Yes;
    }
    return IsoVerdict::Inconclusive;
}

}  // namespace qci
