// Exact arithmetic in F_{p^e} with an explicit modulus polynomial.
#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace qci {

/// Error with a stable machine-readable code next to the human message.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

/// Element of F_{p^e}, stored as the base-p packing of its coefficient
/// vector: v = sum c_i p^i with c_0 the constant coefficient. The packing
/// doubles as the position of the element in the canonical enumeration.
struct FqElem {
    uint32_t v = 0;
    friend bool operator==(FqElem a, FqElem b) { return a.v == b.v; }
    friend bool operator!=(FqElem a, FqElem b) { return a.v != b.v; }
    friend bool operator<(FqElem a, FqElem b) { return a.v < b.v; }
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// F_{p^e} = F_p[t]/(modulus). Multiplication and inversion run on
/// discrete-log tables built at construction, addition digitwise mod p.
/// Immutable after construction; elements are plain values.
class Field {
public:
    /// modulus: e+1 coefficients in [0,p), constant term first, monic.
    static FieldPtr make(uint32_t p, uint32_t e, std::vector<uint32_t> modulus);
    /// Uses defaultModulus(p, e).
    static FieldPtr make(uint32_t p, uint32_t e);

    uint32_t p() const { return p_; }
    uint32_t e() const { return e_; }
    uint64_t order() const { return q_; }
    const std::vector<uint32_t>& modulus() const { return modulus_; }

    FqElem zero() const { return {0}; }
    FqElem one() const { return {1}; }
    /// Image of the integer n under Z -> F_p -> F_{p^e}.
    FqElem fromInt(int64_t n) const;
    FqElem fromCoeffs(const std::vector<uint32_t>& coeffs) const;
    std::vector<uint32_t> coeffs(FqElem x) const;
    FqElem elementAt(uint64_t index) const;

    bool isZero(FqElem x) const { return x.v == 0; }
    FqElem add(FqElem a, FqElem b) const;
    FqElem sub(FqElem a, FqElem b) const;
    FqElem neg(FqElem a) const;
    FqElem mul(FqElem a, FqElem b) const;
    FqElem inv(FqElem a) const;
    FqElem pow(FqElem a, uint64_t n) const;

    /// Multiplicative order; throws on zero.
    uint64_t multOrder(FqElem x) const;
    /// First element, in enumeration order, of exact multiplicative order n.
    FqElem primitiveRootOfUnity(uint64_t n) const;

    bool sameAs(const Field& other) const;

    /// e = 1: x. Otherwise the first monic irreducible of degree e in the
    /// canonical enumeration of coefficient vectors. Covers p^e <= 2^20.
    static std::vector<uint32_t> defaultModulus(uint32_t p, uint32_t e);
    static bool isPrime(uint64_t n);

    Field(uint32_t p, uint32_t e, std::vector<uint32_t> modulus, bool validated);

private:
    void buildTables();

    uint32_t p_, e_;
    uint64_t q_;
    std::vector<uint32_t> modulus_;
    std::vector<uint32_t> expTable_;  // expTable_[k] = packing of g^k, k in [0, q-1)
    std::vector<uint32_t> logTable_;  // logTable_[x.v] for x != 0
};

/// Maps F_{p^e} into F_{p^(e*e')} by sending t to the first root of the
/// source modulus in the target field.
class FieldEmbedding {
public:
    FieldEmbedding(FieldPtr src, FieldPtr dst);
    FqElem map(FqElem x) const;
    const FieldPtr& src() const { return src_; }
    const FieldPtr& dst() const { return dst_; }

private:
    FieldPtr src_, dst_;
    std::vector<FqElem> rootPowers_;  // r^0 .. r^(e-1) in dst
};

/// a together with its p'-part. literalFormulaDiffers marks configurations
/// where a/gcd(a,p) is not coprime to p (p^2 divides a), so no primitive
/// root of that literal order exists in characteristic p.
struct UnityOrder {
    uint64_t a = 0;
    uint64_t aPrime = 0;
    bool literalFormulaDiffers = false;
};

/// p > 0: the maximal divisor of a coprime to p. p = 0: a itself.
UnityOrder computeAPrime(uint64_t a, uint64_t p);

}  // namespace qci
