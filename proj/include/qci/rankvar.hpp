// Rank varieties as explicit point sets over P^{c-1}(F_{p^{e e'}}),
// the coordinatewise power map F, and cone-dimension estimation.
#pragma once

#include "qci/modrep.hpp"

namespace qci {

/// Normalized points (first nonzero coordinate = 1) of a cone variety,
/// collected at one extension degree.
struct ProjectivePointSet {
    FieldPtr field;  // the field the coordinates live in
    uint32_t extDegree = 1;
    uint32_t c = 0;
    std::vector<std::vector<FqElem>> points;
    uint64_t enumerated = 0;  // size of the full P^{c-1} at this level
};

/// All normalized points of P^{c-1}(F), ordered by pivot position and
/// then by the packing of the free coordinates (rightmost fastest).
std::vector<std::vector<FqElem>> enumerateProjectivePoints(const FieldPtr& F, uint32_t c);
uint64_t projectiveSpaceSize(uint64_t q, uint32_t c);

std::vector<FqElem> normalizePoint(const FieldPtr& F, std::vector<FqElem> pt);

/// Kernel-sum criterion: dim Ker(U) + dim Ker(U^{a-1}) > dim M for
/// U = actionMatrix(M, u_lambda); true iff M is not free over k[u_lambda].
bool isNonProjectivePoint(const ModuleRep& M, std::span<const FqElem> lambda);

/// Cross-check form of the same test: when not in the variety and a | d,
/// rank(U) equals d(a-1)/a exactly.
bool rankFormAgrees(const ModuleRep& M, std::span<const FqElem> lambda);

/// Lifts M to F_{p^{e e'}} and keeps the points failing freeness.
ProjectivePointSet rankVariety(const ModuleRep& M, uint32_t extDegree, int threads = 1);

std::vector<FqElem> applyF(const FieldPtr& F, uint32_t a, std::span<const FqElem> pt);
/// Image point set under F with duplicates merged (sorted order).
ProjectivePointSet applyF(const ProjectivePointSet& S, uint32_t a);

bool samePointSet(const ProjectivePointSet& A, const ProjectivePointSet& B);
bool subsetOf(const ProjectivePointSet& A, const ProjectivePointSet& B);
std::vector<std::vector<FqElem>> sortedPoints(const ProjectivePointSet& S);

/// Cone dimension from point counts at extension degrees 1..m: 0 when
/// empty everywhere, 1 for bounded counts, otherwise one plus the rounded
/// log ratio n(Q^2)/n(Q) at the largest available (j, 2j) pair.
int dimensionEstimate(const FieldPtr& baseField, const std::vector<uint64_t>& countsPerDegree);

struct StableMapCheckResult {
    bool inVr = false;
    bool stableHomAu = false;
    bool stableHomAuPow = false;
    bool agree() const { return inVr == stableHomAu && inVr == stableHomAuPow; }
};
/// The three equivalent predicates: membership of lambda in V^r(M),
/// nonvanishing of stable Hom from Au_lambda and from Au_lambda^{a-1}.
StableMapCheckResult stableMapCheck(const ModuleRep& M, std::span<const FqElem> lambda);

}  // namespace qci
