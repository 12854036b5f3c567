// Support varieties through the action of R = k[z_1..z_c] inside
// Ext*(k,k) on Ext*(M,k): the explicit three-term resolution prefix of k,
// chain-map lifting for the z_i action, annihilator ideals and their zero
// sets, the K_zeta (x) k pullback and the explicit monomorphism from
// Au_lambda into it.
#pragma once

#include "qci/rankvar.hpp"

namespace qci {

/// P2 -> P1 -> P0 ->> k with P0 = A, P1 = A^c (eps_i -> x_i) and P2 free
/// on the generators {x_i^{a-1} eps_i}_i followed by
/// {q x_j eps_i - x_i eps_j}_{i<j}. The functional f_{z_i} on P2 reads the
/// augmentation of the i-th coordinate.
struct SimpleResolutionPrefix {
    AlgebraPtr algebra;
    int b1 = 0, b2 = 0;
    std::vector<AlgElement> d1;  // 1 x b1
    std::vector<AlgElement> d2;  // b1 x b2, row-major
    Mat d1Expanded, d2Expanded;
    std::vector<std::pair<uint32_t, uint32_t>> pairOrder;  // mixed generators (i,j), i<j
};
SimpleResolutionPrefix simpleResolutionPrefix(const AlgebraPtr& A);

/// Graded Ext*(M,k) data: Betti numbers of M and, for each i and degree n,
/// the matrix of z_i: Ext^n(M,k) -> Ext^{n+2}(M,k) in the dual-generator
/// bases of the minimal resolution.
struct ExtModuleData {
    ModuleRep module;
    int maxDeg = 0;
    std::vector<int> betti;
    std::vector<std::vector<Mat>> zAction;  // zAction[i][n]: b_{n+2} x b_n
};
ExtModuleData zActionMatrices(const ModuleRep& M, int maxDeg,
                              PivotRule rule = PivotRule::FirstRow);

/// Homogeneous polynomial in z_1..z_c (deg z_i = 2).
struct ZPolynomial {
    struct Term {
        std::vector<uint32_t> exps;
        FqElem coeff;
    };
    std::vector<Term> terms;
    int degree = 0;  // 2 * total z-exponent
};

struct AnnihilatorIdeal {
    AlgebraPtr algebra;
    int degreeBound = 0;
    std::vector<ZPolynomial> generators;
    std::vector<int> generatorDegrees;  // degrees of the detected Ext generators
    bool stabilized = false;
};

/// Detects Ext-module generators as cokernels of the incoming z action,
/// then returns every homogeneous f of degree <= D with f(Z) g = 0 for all
/// detected generators (checked on products staying inside the window).
AnnihilatorIdeal annihilatorIdeal(const ExtModuleData& E, int degreeBound);

/// Zero set of the ideal inside P^{c-1}(F_{p^{e e'}}).
ProjectivePointSet supportVarietyPoints(const AnnihilatorIdeal& I, uint32_t extDegree);

FqElem evalZPolynomial(const FieldPtr& F, const FieldEmbedding& emb, const ZPolynomial& f,
                       std::span<const FqElem> alpha);

/// K_zeta (x) k for zeta = sum mu_i z_i, realized as the pullback
/// submodule of A + rad A along pi and the induced map of Omega^1(k);
/// dim = a^c. basis columns live in A + rad A coordinates.
struct KZetaResult {
    ModuleRep module;
    Mat basis;
    CosyzygyResult cosyzygy;
    Mat inducedMap;  // rad A -> Omega^{-1}(k)
};
KZetaResult kZetaTensorSimple(const AlgebraPtr& A, std::span<const FqElem> mu);

/// The A-linear map Au_lambda -> K_zeta (x) k sending u_lambda to
/// (sum mu_i g_i(u_lambda), -u_lambda); requires sum mu_i lambda_i^a = 0.
/// Returns its matrix in the echelon bases; verified well defined and of
/// full column rank.
Mat explicitMonomorphism(const AlgebraPtr& A, std::span<const FqElem> lambda,
                         std::span<const FqElem> mu);

}  // namespace qci
