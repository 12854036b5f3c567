#include "qci/qalgebra.hpp"

namespace qci {

AlgebraSpec::AlgebraSpec(FieldPtr field, uint32_t a, uint32_t c, FqElem q)
    : field_(std::move(field)), a_(a), c_(c), q_(q) {
    uint64_t d = 1;
    for (uint32_t i = 0; i < c_; ++i) {
        d *= a_;
        if (d > (uint64_t(1) << 20)) throw Error("FieldTooLarge", "a^c exceeds the supported bound");
    }
    dim_ = static_cast<int>(d);
    qInv_ = field_->inv(q_);
    leftMult_.reserve(c_);
    for (uint32_t i = 0; i < c_; ++i) {
        Mat L(field_, dim_, dim_);
        int gi = generatorIndex(i);
        for (int w = 0; w < dim_; ++w) {
            auto [t, s] = monomialProduct(gi, w);
            if (t >= 0) L.at(t, w) = s;
        }
        leftMult_.push_back(std::move(L));
    }
}

AlgebraPtr AlgebraSpec::make(FieldPtr field, uint32_t a, uint32_t c, FqElem q) {
    if (a < 2) throw Error("DegreeMismatch", "a must be >= 2");
    if (c < 1) throw Error("DegreeMismatch", "c must be >= 1");
    uint64_t aPrime = computeAPrime(a, field->p()).aPrime;
    if (field->isZero(q) || field->multOrder(q) != aPrime)
        throw Error("WrongRootOrder",
                    "q must have exact multiplicative order " + std::to_string(aPrime));
    return std::make_shared<AlgebraSpec>(std::move(field), a, c, q);
}

std::vector<uint32_t> AlgebraSpec::exponents(int idx) const {
    std::vector<uint32_t> e(c_);
    for (int i = static_cast<int>(c_) - 1; i >= 0; --i) {
        e[i] = idx % a_;
        idx /= a_;
    }
    return e;
}

int AlgebraSpec::indexOf(const std::vector<uint32_t>& exps) const {
    int idx = 0;
    for (uint32_t i = 0; i < c_; ++i) idx = idx * a_ + static_cast<int>(exps[i]);
    return idx;
}

int AlgebraSpec::generatorIndex(uint32_t i) const {
    int idx = 1;
    for (uint32_t k = i + 1; k < c_; ++k) idx *= a_;
    return idx;
}

AlgElement AlgebraSpec::one() const {
    AlgElement u = zeroElement();
    u.coeffs[0] = field_->one();
    return u;
}

AlgElement AlgebraSpec::monomial(int idx, FqElem coeff) const {
    AlgElement u = zeroElement();
    u.coeffs[idx] = coeff;
    return u;
}

bool AlgebraSpec::isZero(const AlgElement& u) const {
    for (FqElem x : u.coeffs)
        if (x.v) return false;
    return true;
}

AlgElement AlgebraSpec::add(const AlgElement& u, const AlgElement& v) const {
    AlgElement w = zeroElement();
    for (int i = 0; i < dim_; ++i) w.coeffs[i] = field_->add(u.coeffs[i], v.coeffs[i]);
    return w;
}

AlgElement AlgebraSpec::scale(FqElem s, const AlgElement& u) const {
    AlgElement w = zeroElement();
    for (int i = 0; i < dim_; ++i) w.coeffs[i] = field_->mul(s, u.coeffs[i]);
    return w;
}

std::pair<int, FqElem> AlgebraSpec::monomialProduct(int wi, int wj) const {
    auto di = exponents(wi);
    auto dj = exponents(wj);
    // Every x from the right factor bubbles left past the higher-indexed
    // generators of the left factor; each transposition contributes q^{-1}.
    uint64_t swaps = 0;
    int idx = 0;
    for (uint32_t k = 0; k < c_; ++k) {
        uint32_t s = di[k] + dj[k];
        if (s >= a_) return {-1, field_->zero()};
        idx = idx * a_ + static_cast<int>(s);
        uint64_t higher = 0;
        for (uint32_t l = k + 1; l < c_; ++l) higher += di[l];
        swaps += higher * dj[k];
    }
    return {idx, field_->pow(qInv_, swaps)};
}

AlgElement AlgebraSpec::multiply(const AlgElement& u, const AlgElement& v) const {
    AlgElement w = zeroElement();
    for (int i = 0; i < dim_; ++i) {
        if (!u.coeffs[i].v) continue;
        for (int j = 0; j < dim_; ++j) {
            if (!v.coeffs[j].v) continue;
            auto [t, s] = monomialProduct(i, j);
            if (t < 0) continue;
            FqElem term = field_->mul(field_->mul(u.coeffs[i], v.coeffs[j]), s);
            w.coeffs[t] = field_->add(w.coeffs[t], term);
        }
    }
    return w;
}

AlgElement AlgebraSpec::power(const AlgElement& u, uint32_t n) const {
    AlgElement r = one();
    for (uint32_t k = 0; k < n; ++k) r = multiply(r, u);
    return r;
}

AlgElement AlgebraSpec::uLambda(std::span<const FqElem> lambda) const {
    if (lambda.size() != c_) throw Error("DegreeMismatch", "lambda must have c coordinates");
    AlgElement u = zeroElement();
    for (uint32_t i = 0; i < c_; ++i) u.coeffs[generatorIndex(i)] = lambda[i];
    return u;
}

Mat AlgebraSpec::leftMultMatrix(const AlgElement& u) const {
    Mat L(field_, dim_, dim_);
    for (int i = 0; i < dim_; ++i) {
        if (!u.coeffs[i].v) continue;
        for (int w = 0; w < dim_; ++w) {
            auto [t, s] = monomialProduct(i, w);
            if (t < 0) continue;
            L.at(t, w) = field_->add(L.at(t, w), field_->mul(u.coeffs[i], s));
        }
    }
    return L;
}

Mat AlgebraSpec::rightMultMatrix(const AlgElement& u) const {
    Mat R(field_, dim_, dim_);
    for (int j = 0; j < dim_; ++j) {
        if (!u.coeffs[j].v) continue;
        for (int w = 0; w < dim_; ++w) {
            auto [t, s] = monomialProduct(w, j);
            if (t < 0) continue;
            R.at(t, w) = field_->add(R.at(t, w), field_->mul(u.coeffs[j], s));
        }
    }
    return R;
}

bool AlgebraSpec::sameAs(const AlgebraSpec& other) const {
    return a_ == other.a_ && c_ == other.c_ && q_ == other.q_ && field_->sameAs(*other.field_);
}

LiftedAlgebra liftAlgebra(const AlgebraPtr& A, uint32_t extDegree) {
    if (extDegree < 1) throw Error("DegreeMismatch", "extension degree must be >= 1");
    const FieldPtr& base = A->field();
    FieldPtr big = extDegree == 1
                       ? base
                       : Field::make(base->p(), base->e() * extDegree);
    FieldEmbedding emb(base, big);
    AlgebraPtr lifted = AlgebraSpec::make(big, A->a(), A->c(), emb.map(A->q()));
    return {std::move(lifted), std::move(emb)};
}

}  // namespace qci
