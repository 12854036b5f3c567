#include "qci/rankvar.hpp"

#include <algorithm>

#include "qci/parallel.hpp"

namespace qci {

int threadWidth(int fallback) {
    if (const char* env = std::getenv("QCI_THREADS")) {
        int w = std::atoi(env);
        if (w >= 1) return w;
    }
    return fallback;
}

uint64_t projectiveSpaceSize(uint64_t q, uint32_t c) {
    uint64_t total = 0, power = 1;
    for (uint32_t i = 0; i < c; ++i) {
        total += power;
        power *= q;
    }
    return total;
}

std::vector<std::vector<FqElem>> enumerateProjectivePoints(const FieldPtr& F, uint32_t c) {
    std::vector<std::vector<FqElem>> pts;
    pts.reserve(projectiveSpaceSize(F->order(), c));
    uint64_t q = F->order();
    for (uint32_t pivot = 0; pivot < c; ++pivot) {
        uint32_t freeCount = c - pivot - 1;
        uint64_t combos = 1;
        for (uint32_t i = 0; i < freeCount; ++i) combos *= q;
        for (uint64_t n = 0; n < combos; ++n) {
            std::vector<FqElem> pt(c, F->zero());
            pt[pivot] = F->one();
            uint64_t t = n;
            for (uint32_t i = c; i-- > pivot + 1;) {
                pt[i] = F->elementAt(t % q);
                t /= q;
            }
            pts.push_back(std::move(pt));
        }
    }
    return pts;
}

std::vector<FqElem> normalizePoint(const FieldPtr& F, std::vector<FqElem> pt) {
    for (FqElem x : pt)
        if (x.v) {
            FqElem s = F->inv(x);
            for (FqElem& y : pt) y = F->mul(s, y);
            return pt;
        }
    throw Error("ZeroPoint", "cannot normalize the zero point");
}

namespace {

bool isZeroPoint(std::span<const FqElem> lambda) {
    for (FqElem x : lambda)
        if (x.v) return false;
    return true;
}

bool nonProjectiveByKernels(const ModuleRep& M, std::span<const FqElem> lambda) {
    Mat U = actionMatrixLinear(M, lambda);
    int k1 = kernelDim(U);
    int k2 = M.algebra->a() == 2 ? k1 : kernelDim(matPow(U, M.algebra->a() - 1));
    return k1 + k2 > M.dim;
}

}  // namespace

bool isNonProjectivePoint(const ModuleRep& M, std::span<const FqElem> lambda) {
    if (isZeroPoint(lambda)) throw Error("ZeroPoint", "lambda must be nonzero");
    return nonProjectiveByKernels(M, lambda);
}

bool rankFormAgrees(const ModuleRep& M, std::span<const FqElem> lambda) {
    if (isZeroPoint(lambda)) throw Error("ZeroPoint", "lambda must be nonzero");
    uint32_t a = M.algebra->a();
    if (nonProjectiveByKernels(M, lambda)) return true;
    if (M.dim % a != 0) return false;
    return rankOf(actionMatrixLinear(M, lambda)) == M.dim / int(a) * int(a - 1);
}

ProjectivePointSet rankVariety(const ModuleRep& M, uint32_t extDegree, int threads) {
    LiftedAlgebra lift = liftAlgebra(M.algebra, extDegree);
    ModuleRep L = extDegree == 1 ? M : liftModule(M, lift);
    auto pts = enumerateProjectivePoints(lift.algebra->field(), M.algebra->c());
    std::vector<char> keep(pts.size(), 0);
    parallelFor(pts.size(), threads, [&](size_t i) {
        keep[i] = nonProjectiveByKernels(L, pts[i]) ? 1 : 0;
    });
    ProjectivePointSet S{lift.algebra->field(), extDegree, M.algebra->c(), {}, pts.size()};
    for (size_t i = 0; i < pts.size(); ++i)
        if (keep[i]) S.points.push_back(std::move(pts[i]));
    return S;
}

std::vector<FqElem> applyF(const FieldPtr& F, uint32_t a, std::span<const FqElem> pt) {
    std::vector<FqElem> out(pt.size());
    for (size_t i = 0; i < pt.size(); ++i) out[i] = F->pow(pt[i], a);
    return normalizePoint(F, std::move(out));
}

ProjectivePointSet applyF(const ProjectivePointSet& S, uint32_t a) {
    ProjectivePointSet out{S.field, S.extDegree, S.c, {}, S.enumerated};
    for (const auto& pt : S.points) out.points.push_back(applyF(S.field, a, pt));
    std::sort(out.points.begin(), out.points.end());
    out.points.erase(std::unique(out.points.begin(), out.points.end()), out.points.end());
    return out;
}

std::vector<std::vector<FqElem>> sortedPoints(const ProjectivePointSet& S) {
    auto pts = S.points;
    std::sort(pts.begin(), pts.end());
    return pts;
}

bool samePointSet(const ProjectivePointSet& A, const ProjectivePointSet& B) {
    return A.c == B.c && A.extDegree == B.extDegree && sortedPoints(A) == sortedPoints(B);
}

bool subsetOf(const ProjectivePointSet& A, const ProjectivePointSet& B) {
    auto a = sortedPoints(A), b = sortedPoints(B);
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

int dimensionEstimate(const FieldPtr& baseField, const std::vector<uint64_t>& counts) {
    size_t m = counts.size();
    if (m < 2) throw Error("TooFewLevels", "need counts from at least two extension degrees");
    uint64_t lo = *std::min_element(counts.begin(), counts.end());
    uint64_t hi = *std::max_element(counts.begin(), counts.end());
    if (hi == 0) return 0;
    if (lo == hi) return 1;
    size_t j = m / 2;  // largest j with 2j <= m, degrees are 1-based
    uint64_t n1 = counts[j - 1], n2 = counts[2 * j - 1];
    uint64_t Q = 1;
    for (uint32_t i = 0; i < baseField->e() * j; ++i) Q *= baseField->p();
    // Smallest s with n2/n1 below Q^(s+1/2), compared via squares.
    unsigned __int128 lhs = (unsigned __int128)(n2) * n2 * Q;
    unsigned __int128 base = n1 > 0 ? n1 : 1;
    unsigned __int128 rhs = base * base * Q * Q;
    int s = 0;
    while (lhs >= rhs) {
        ++s;
        if (s > 16) throw Error("TooFewLevels", "count growth outside the supported range");
        rhs *= Q * Q;
    }
    return 1 + s;
}

StableMapCheckResult stableMapCheck(const ModuleRep& M, std::span<const FqElem> lambda) {
    if (isZeroPoint(lambda)) throw Error("ZeroPoint", "lambda must be nonzero");
    const AlgebraPtr& A = M.algebra;
    StableMapCheckResult r;
    r.inVr = nonProjectiveByKernels(M, lambda);
    AlgElement u = A->uLambda(lambda);
    r.stableHomAu = stableHomDim(leftIdealModule(A, u).module, M) != 0;
    AlgElement upow = A->power(u, A->a() - 1);
    r.stableHomAuPow = stableHomDim(leftIdealModule(A, upow).module, M) != 0;
    return r;
}

}  // namespace qci
