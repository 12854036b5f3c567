#include "qci/ffield.hpp"

#include <algorithm>
#include <numeric>

namespace qci {

namespace {

constexpr uint64_t kMaxFieldOrder = uint64_t(1) << 22;

// Dense polynomials over F_p, constant term first, no trailing-zero trim
// required by callers.
using Poly = std::vector<uint32_t>;

int polyDeg(const Poly& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
        if (f[i] != 0) return i;
    return -1;
}

Poly polyMul(const Poly& f, const Poly& g, uint32_t p) {
    Poly h(f.size() + g.size() - 1, 0);
    for (size_t i = 0; i < f.size(); ++i) {
        if (f[i] == 0) continue;
        for (size_t j = 0; j < g.size(); ++j)
            h[i + j] = static_cast<uint32_t>((h[i + j] + uint64_t(f[i]) * g[j]) % p);
    }
    return h;
}

uint32_t invMod(uint32_t a, uint32_t p) {
    // p prime, a != 0: Fermat.
    uint64_t r = 1, b = a % p;
    for (uint32_t n = p - 2; n; n >>= 1) {
        if (n & 1) r = r * b % p;
        b = b * b % p;
    }
    return static_cast<uint32_t>(r);
}

// f mod g, g monic up to a unit.
Poly polyMod(Poly f, const Poly& g, uint32_t p) {
    int dg = polyDeg(g);
    uint32_t leadInv = invMod(g[dg], p);
    for (int df = polyDeg(f); df >= dg; df = polyDeg(f)) {
        uint64_t factor = uint64_t(f[df]) * leadInv % p;
        for (int i = 0; i <= dg; ++i) {
            uint64_t s = uint64_t(factor) * g[i] % p;
            int k = df - dg + i;
            f[k] = static_cast<uint32_t>((f[k] + p - s) % p);
        }
    }
    return f;
}

bool irreducibleOverFp(const Poly& f, uint32_t p) {
    int d = polyDeg(f);
    if (d <= 0) return false;
    if (d == 1) return true;
    // Trial division by every monic polynomial of degree 1..d/2.
    for (int dd = 1; 2 * dd <= d; ++dd) {
        uint64_t count = 1;
        for (int i = 0; i < dd; ++i) count *= p;
        for (uint64_t idx = 0; idx < count; ++idx) {
            Poly g(dd + 1, 0);
            uint64_t t = idx;
            for (int i = 0; i < dd; ++i) {
                g[i] = static_cast<uint32_t>(t % p);
                t /= p;
            }
            g[dd] = 1;
            if (polyDeg(polyMod(f, g, p)) < 0) return false;
        }
    }
    return true;
}

std::vector<uint64_t> primeFactors(uint64_t n) {
    std::vector<uint64_t> fs;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) fs.push_back(n);
    return fs;
}

}  // namespace

bool Field::isPrime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<uint32_t> Field::defaultModulus(uint32_t p, uint32_t e) {
    if (e == 1) return {0, 1};
    uint64_t count = 1;
    for (uint32_t i = 0; i < e; ++i) count *= p;
    for (uint64_t idx = 0; idx < count; ++idx) {
        Poly f(e + 1, 0);
        uint64_t t = idx;
        for (uint32_t i = 0; i < e; ++i) {
            f[i] = static_cast<uint32_t>(t % p);
            t /= p;
        }
        f[e] = 1;
        if (irreducibleOverFp(f, p)) return f;
    }
    throw Error("ReducibleModulus", "no irreducible polynomial found");  // unreachable
}

Field::Field(uint32_t p, uint32_t e, std::vector<uint32_t> modulus, bool)
    : p_(p), e_(e), modulus_(std::move(modulus)) {
    q_ = 1;
    for (uint32_t i = 0; i < e_; ++i) q_ *= p_;
    buildTables();
}

FieldPtr Field::make(uint32_t p, uint32_t e, std::vector<uint32_t> modulus) {
    if (!isPrime(p)) throw Error("NonPrime", "p = " + std::to_string(p) + " is not prime");
    if (e < 1) throw Error("DegreeMismatch", "extension degree must be >= 1");
    if (modulus.size() != size_t(e) + 1)
        throw Error("DegreeMismatch", "modulus must have e+1 coefficients");
    for (uint32_t c : modulus)
        if (c >= p) throw Error("DegreeMismatch", "modulus coefficient not reduced mod p");
    if (modulus[e] != 1) throw Error("DegreeMismatch", "modulus must be monic");
    uint64_t q = 1;
    for (uint32_t i = 0; i < e; ++i) {
        q *= p;
        if (q > kMaxFieldOrder) throw Error("FieldTooLarge", "p^e exceeds the supported bound");
    }
    if (!irreducibleOverFp(modulus, p))
        throw Error("ReducibleModulus", "modulus is reducible over F_p");
    return std::make_shared<Field>(p, e, std::move(modulus), true);
}

FieldPtr Field::make(uint32_t p, uint32_t e) {
    if (!isPrime(p)) throw Error("NonPrime", "p = " + std::to_string(p) + " is not prime");
    uint64_t q = 1;
    for (uint32_t i = 0; i < e; ++i) {
        q *= p;
        if (q > kMaxFieldOrder) throw Error("FieldTooLarge", "p^e exceeds the supported bound");
    }
    return make(p, e, defaultModulus(p, e));
}

FqElem Field::fromInt(int64_t n) const {
    int64_t r = n % int64_t(p_);
    if (r < 0) r += p_;
    return {static_cast<uint32_t>(r)};
}

FqElem Field::fromCoeffs(const std::vector<uint32_t>& coeffs) const {
    if (coeffs.size() != e_) throw Error("DegreeMismatch", "element needs exactly e coefficients");
    uint64_t v = 0, w = 1;
    for (uint32_t i = 0; i < e_; ++i) {
        if (coeffs[i] >= p_) throw Error("DegreeMismatch", "coefficient not reduced mod p");
        v += uint64_t(coeffs[i]) * w;
        w *= p_;
    }
    return {static_cast<uint32_t>(v)};
}

std::vector<uint32_t> Field::coeffs(FqElem x) const {
    std::vector<uint32_t> c(e_);
    uint32_t v = x.v;
    for (uint32_t i = 0; i < e_; ++i) {
        c[i] = v % p_;
        v /= p_;
    }
    return c;
}

FqElem Field::elementAt(uint64_t index) const {
    if (index >= q_) throw Error("DegreeMismatch", "element index out of range");
    return {static_cast<uint32_t>(index)};
}

FqElem Field::add(FqElem a, FqElem b) const {
    if (e_ == 1) {
        uint32_t s = a.v + b.v;
        return {s >= p_ ? s - p_ : s};
    }
    uint32_t out = 0, w = 1, av = a.v, bv = b.v;
    for (uint32_t i = 0; i < e_; ++i) {
        uint32_t s = av % p_ + bv % p_;
        if (s >= p_) s -= p_;
        out += s * w;
        av /= p_;
        bv /= p_;
        w *= p_;
    }
    return {out};
}

FqElem Field::neg(FqElem a) const {
    if (e_ == 1) return {a.v == 0 ? 0 : p_ - a.v};
    uint32_t out = 0, w = 1, av = a.v;
    for (uint32_t i = 0; i < e_; ++i) {
        uint32_t d = av % p_;
        out += (d == 0 ? 0 : p_ - d) * w;
        av /= p_;
        w *= p_;
    }
    return {out};
}

FqElem Field::sub(FqElem a, FqElem b) const { return add(a, neg(b)); }

FqElem Field::mul(FqElem a, FqElem b) const {
    if (a.v == 0 || b.v == 0) return {0};
    uint64_t k = uint64_t(logTable_[a.v]) + logTable_[b.v];
    if (k >= q_ - 1) k -= q_ - 1;
    return {expTable_[k]};
}

FqElem Field::inv(FqElem a) const {
    if (a.v == 0) throw Error("ZeroDivision", "inverse of zero");
    uint64_t k = logTable_[a.v];
    return {expTable_[k == 0 ? 0 : q_ - 1 - k]};
}

FqElem Field::pow(FqElem a, uint64_t n) const {
    if (a.v == 0) return n == 0 ? one() : zero();
    uint64_t k = (uint64_t(logTable_[a.v]) % (q_ - 1)) * (n % (q_ - 1)) % (q_ - 1);
    return {expTable_[k]};
}

uint64_t Field::multOrder(FqElem x) const {
    if (x.v == 0) throw Error("ZeroDivision", "zero has no multiplicative order");
    return (q_ - 1) / std::gcd(q_ - 1, uint64_t(logTable_[x.v]));
}

FqElem Field::primitiveRootOfUnity(uint64_t n) const {
    if (n == 0 || (q_ - 1) % n != 0)
        throw Error("NoSuchRoot",
                    "no element of order " + std::to_string(n) + " in F_" + std::to_string(q_));
    for (uint64_t v = 1; v < q_; ++v)
        if (multOrder({static_cast<uint32_t>(v)}) == n) return {static_cast<uint32_t>(v)};
    throw Error("NoSuchRoot", "order search exhausted");  // unreachable: the unit group is cyclic
}

bool Field::sameAs(const Field& other) const {
    return p_ == other.p_ && e_ == other.e_ && modulus_ == other.modulus_;
}

void Field::buildTables() {
    // Bootstrap arithmetic on coefficient vectors, then freeze discrete logs.
    auto toPoly = [&](uint32_t v) {
        Poly f(e_, 0);
        for (uint32_t i = 0; i < e_; ++i) {
            f[i] = v % p_;
            v /= p_;
        }
        return f;
    };
    auto toPack = [&](const Poly& f) {
        uint32_t v = 0, w = 1;
        for (uint32_t i = 0; i < e_; ++i) {
            v += (i < f.size() ? f[i] : 0) * w;
            w *= p_;
        }
        return v;
    };
    auto mulRaw = [&](uint32_t a, uint32_t b) {
        return toPack(polyMod(polyMul(toPoly(a), toPoly(b), p_), modulus_, p_));
    };
    auto powRaw = [&](uint32_t a, uint64_t n) {
        uint32_t r = 1, b = a;
        while (n) {
            if (n & 1) r = mulRaw(r, b);
            b = mulRaw(b, b);
            n >>= 1;
        }
        return r;
    };

    uint64_t m = q_ - 1;
    auto factors = primeFactors(m);
    uint32_t gen = 1;
    for (uint64_t v = 1; v < q_; ++v) {
        bool primitive = true;
        for (uint64_t f : factors)
            if (powRaw(static_cast<uint32_t>(v), m / f) == 1) {
                primitive = false;
                break;
            }
        if (primitive) {
            gen = static_cast<uint32_t>(v);
            break;
        }
    }

    expTable_.resize(m == 0 ? 1 : m);
    logTable_.assign(q_, 0);
    uint32_t x = 1;
    for (uint64_t k = 0; k < std::max<uint64_t>(m, 1); ++k) {
        expTable_[k] = x;
        logTable_[x] = static_cast<uint32_t>(k);
        x = mulRaw(x, gen);
    }
}

FieldEmbedding::FieldEmbedding(FieldPtr src, FieldPtr dst) : src_(std::move(src)), dst_(std::move(dst)) {
    if (src_->p() != dst_->p() || dst_->e() % src_->e() != 0)
        throw Error("ExtensionUnavailable", "target field is not an extension of the source");
    if (src_->sameAs(*dst_)) {
        rootPowers_.assign(src_->e(), dst_->zero());
        for (uint32_t i = 0; i < src_->e(); ++i)
            rootPowers_[i] = dst_->fromCoeffs([&] {
                std::vector<uint32_t> c(dst_->e(), 0);
                c[i] = 1;
                return c;
            }());
        return;
    }
    // First root, in enumeration order, of the source modulus inside dst.
    const auto& m = src_->modulus();
    FqElem root = dst_->zero();
    bool found = false;
    for (uint64_t v = 0; v < dst_->order(); ++v) {
        FqElem x = dst_->elementAt(v);
        FqElem acc = dst_->zero(), xp = dst_->one();
        for (uint32_t i = 0; i < m.size(); ++i) {
            acc = dst_->add(acc, dst_->mul(dst_->fromInt(m[i]), xp));
            xp = dst_->mul(xp, x);
        }
        if (dst_->isZero(acc)) {
            root = x;
            found = true;
            break;
        }
    }
    if (!found) throw Error("ExtensionUnavailable", "source modulus has no root in the target field");
    rootPowers_.resize(src_->e());
    FqElem rp = dst_->one();
    for (uint32_t i = 0; i < src_->e(); ++i) {
        rootPowers_[i] = rp;
        rp = dst_->mul(rp, root);
    }
}

FqElem FieldEmbedding::map(FqElem x) const {
    auto c = src_->coeffs(x);
    FqElem acc = dst_->zero();
    for (uint32_t i = 0; i < c.size(); ++i)
        acc = dst_->add(acc, dst_->mul(dst_->fromInt(c[i]), rootPowers_[i]));
    return acc;
}

UnityOrder computeAPrime(uint64_t a, uint64_t p) {
    if (a < 2) throw Error("DegreeMismatch", "a must be >= 2");
    UnityOrder out;
    out.a = a;
    if (p == 0) {
        out.aPrime = a;
        return out;
    }
    uint64_t ap = a;
    while (ap % p == 0) ap /= p;
    out.aPrime = ap;
    uint64_t literal = a / std::gcd(a, p);
    out.literalFormulaDiffers = literal != ap;
    return out;
}

}  // namespace qci
