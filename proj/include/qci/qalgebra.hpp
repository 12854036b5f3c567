// The algebra A^c_q = k<x_1..x_c>/({x_i^a}, {x_i x_j - q x_j x_i}_{i<j})
// with arithmetic in the PBW monomial basis.
#pragma once

#include <span>
#include <utility>

#include "qci/linalg.hpp"

namespace qci {

class AlgebraSpec;
using AlgebraPtr = std::shared_ptr<const AlgebraSpec>;

/// Element as a coefficient vector over the PBW monomials
/// x_1^{e_1} ... x_c^{e_c}, exponent tuples ordered lexicographically
/// with x_1 slowest (index = sum e_i a^{c-i}).
struct AlgElement {
    std::vector<FqElem> coeffs;
};

class AlgebraSpec : public std::enable_shared_from_this<AlgebraSpec> {
public:
    /// Requires q of exact multiplicative order aPrime = computeAPrime(a, p).
    static AlgebraPtr make(FieldPtr field, uint32_t a, uint32_t c, FqElem q);

    const FieldPtr& field() const { return field_; }
    uint32_t a() const { return a_; }
    uint32_t c() const { return c_; }
    FqElem q() const { return q_; }
    int dim() const { return dim_; }

    std::vector<uint32_t> exponents(int idx) const;
    int indexOf(const std::vector<uint32_t>& exps) const;
    /// PBW index of the generator x_{i+1}, i in [0, c).
    int generatorIndex(uint32_t i) const;
    /// PBW index of the socle monomial prod x_i^{a-1}.
    int socleIndex() const { return dim_ - 1; }

    AlgElement zeroElement() const { return {std::vector<FqElem>(dim_)}; }
    AlgElement one() const;
    AlgElement monomial(int idx, FqElem coeff) const;
    AlgElement generator(uint32_t i) const { return monomial(generatorIndex(i), field_->one()); }
    bool isZero(const AlgElement& u) const;
    AlgElement add(const AlgElement& u, const AlgElement& v) const;
    AlgElement scale(FqElem s, const AlgElement& u) const;
    AlgElement multiply(const AlgElement& u, const AlgElement& v) const;
    AlgElement power(const AlgElement& u, uint32_t n) const;
    AlgElement uLambda(std::span<const FqElem> lambda) const;
    /// Coefficient of the monomial 1 (the augmentation).
    FqElem augmentation(const AlgElement& u) const { return u.coeffs[0]; }

    /// Normal form of a product of two basis monomials: target index and
    /// the accumulated q power, or {-1, 0} when a power hits x_i^a = 0.
    std::pair<int, FqElem> monomialProduct(int wi, int wj) const;

    /// Matrix of u |-> x_i u on PBW coordinates (cached).
    const Mat& leftMult(uint32_t i) const { return leftMult_[i]; }
    Mat leftMultMatrix(const AlgElement& u) const;
    Mat rightMultMatrix(const AlgElement& u) const;

    bool sameAs(const AlgebraSpec& other) const;

    AlgebraSpec(FieldPtr field, uint32_t a, uint32_t c, FqElem q);

private:
    FieldPtr field_;
    uint32_t a_, c_;
    FqElem q_, qInv_;
    int dim_;
    std::vector<Mat> leftMult_;
};

/// The same algebra over F_{p^(e*extDegree)}; q maps along the embedding,
/// which preserves its multiplicative order.
struct LiftedAlgebra {
    AlgebraPtr algebra;
    FieldEmbedding embedding;
};
LiftedAlgebra liftAlgebra(const AlgebraPtr& A, uint32_t extDegree);

}  // namespace qci
