// Finite-dimensional left A-modules as action-matrix tuples, with Hom and
// stable Hom spaces, projective covers, syzygies, minimal resolutions,
// Betti numbers and complexity estimation.
#pragma once

#include <random>
#include <string>

#include "qci/qalgebra.hpp"

namespace qci {

/// d-dimensional left module: X[i] is the action of x_{i+1} on column
/// vectors (v -> X_i v), so X_i X_j = q X_j X_i for i < j and X_i^a = 0.
struct ModuleRep {
    AlgebraPtr algebra;
    int dim = 0;
    std::vector<Mat> X;
};

/// One line per violated relation; empty iff the module is valid.
std::vector<std::string> validateModule(const ModuleRep& M);

ModuleRep simpleModule(const AlgebraPtr& A);
ModuleRep regularModule(const AlgebraPtr& A);
ModuleRep zeroModule(const AlgebraPtr& A);
ModuleRep directSum(const ModuleRep& M, const ModuleRep& N);
ModuleRep liftModule(const ModuleRep& M, const LiftedAlgebra& lift);

/// The left ideal Au as a submodule of the regular module; embedding
/// columns are the reduced row-echelon basis of span{b u : b basis of A}.
struct LeftIdealResult {
    ModuleRep module;
    Mat embedding;  // a^c x dim
};
LeftIdealResult leftIdealModule(const AlgebraPtr& A, const AlgElement& u);

/// Matrix of v -> u v on M; for linear forms this is sum lambda_i X_i.
Mat actionMatrix(const ModuleRep& M, const AlgElement& u);
Mat actionMatrixLinear(const ModuleRep& M, std::span<const FqElem> lambda);

struct HomSpace {
    std::vector<Mat> basis;  // independent intertwiners f: f X^M_i = X^N_i f
    int stableDim = -1;      // filled by stableHomDim paths
};
HomSpace homBasis(const ModuleRep& M, const ModuleRep& N);
/// dim Hom(M,N) minus the dimension of maps factoring through the
/// projective cover epi of N (equivalently through any projective).
int stableHomDim(const ModuleRep& M, const ModuleRep& N);

/// Minimal surjection A^rank ->> M; generator j maps to the preimage of
/// the j-th complement basis vector of M/rad M (echelon choice). epi is
/// the d x (rank * a^c) matrix of the full A-linear map.
struct ProjectiveCover {
    int rank = 0;
    Mat epi;
    std::vector<int> generatorCoords;  // coordinates of the chosen top basis
};
ProjectiveCover projectiveCover(const ModuleRep& M);

struct SyzygyResult {
    ModuleRep module;
    Mat inclusion;  // (rank * a^c) x dim, echelon kernel basis of the epi
    ProjectiveCover cover;
};
SyzygyResult syzygy(const ModuleRep& M);

/// Minimal projective resolution prefix A^{b_N} -> ... -> A^{b_0} ->> M.
struct Resolution {
    ModuleRep module;
    std::vector<int> betti;  // b_0 .. b_N
    /// differentials[n-1]: row-major b_{n-1} x b_n matrix of A-entries for
    /// A^{b_n} -> A^{b_{n-1}}; entry (i,j) acts by right multiplication.
    std::vector<std::vector<AlgElement>> differentials;
    Mat augmentation;  // d x (b_0 * a^c)
};
Resolution minimalResolution(const ModuleRep& M, int steps);

/// Field-linear expansion of an AlgElement matrix (blocks = right
/// multiplication matrices), as a (rows*a^c) x (cols*a^c) matrix.
Mat expandDifferential(const AlgebraSpec& A, const std::vector<AlgElement>& entries, int rows,
                       int cols);

/// Least t with b_n bounded by a constant times n^{t-1}, read off the
/// integer-rounded log-log slope over the tail half of the sequence.
int complexityEstimate(const std::vector<int>& betti);

/// Omega^{-1}(k) = A / socle with the canonical quotient map.
struct CosyzygyResult {
    ModuleRep module;
    Mat quotientMap;  // (a^c - 1) x a^c
};
CosyzygyResult cosyzygyOfSimple(const AlgebraPtr& A);

enum class IsoVerdict { Yes, No, Inconclusive };
/// Bounded isomorphism search: dimension and Betti-prefix screening, then
/// exhaustive or randomized hunt for an invertible intertwiner.
IsoVerdict isIsomorphic(const ModuleRep& M, const ModuleRep& N, uint64_t seed = 0x9c1a5e6b);

}  // namespace qci
