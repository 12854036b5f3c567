#include "qci/suppvar.hpp"

#include <algorithm>

namespace qci {

namespace {

bool isZeroTuple(std::span<const FqElem> t) {
    for (FqElem x : t)
        if (x.v) return false;
    return true;
}

// Monomial prod_{n != skip} x_n^{a-1}; the full socle monomial when skip < 0.
int productExceptIndex(const AlgebraSpec& A, int skip) {
    std::vector<uint32_t> exps(A.c(), A.a() - 1);
    if (skip >= 0) exps[skip] = 0;
    return A.indexOf(exps);
}

// Standard basis vectors completing the column space of A to the full
// space, by echelon pivots.
std::vector<int> cokernelCoords(const Mat& A, int ambient) {
    std::vector<int> out;
    RowReducer rr(A.transpose());
    const auto& piv = rr.pivotCols();
    size_t k = 0;
    for (int j = 0; j < ambient; ++j) {
        if (k < piv.size() && piv[k] == j)
            ++k;
        else
            out.push_back(j);
    }
    return out;
}

std::vector<std::vector<uint32_t>> monomialExponents(uint32_t c, uint32_t total) {
    std::vector<std::vector<uint32_t>> out;
    std::vector<uint32_t> cur(c, 0);
    // Lexicographic with the first coordinate slowest.
    auto rec = [&](auto&& self, uint32_t pos, uint32_t left) -> void {
        if (pos + 1 == c) {
            cur[pos] = left;
            out.push_back(cur);
            return;
        }
        for (uint32_t v = left + 1; v-- > 0;) {
            cur[pos] = v;
            self(self, pos + 1, left - v);
        }
    };
    rec(rec, 0, total);
    return out;
}

}  // namespace

SimpleResolutionPrefix simpleResolutionPrefix(const AlgebraPtr& A) {
    const FieldPtr& F = A->field();
    uint32_t c = A->c(), a = A->a();
    SimpleResolutionPrefix P;
    P.algebra = A;
    P.b1 = static_cast<int>(c);
    P.b2 = static_cast<int>(c + c * (c - 1) / 2);

    P.d1.reserve(c);
    for (uint32_t i = 0; i < c; ++i) P.d1.push_back(A->generator(i));

    P.d2.assign(size_t(P.b1) * P.b2, A->zeroElement());
    for (uint32_t i = 0; i < c; ++i) {
        std::vector<uint32_t> exps(c, 0);
        exps[i] = a - 1;
        P.d2[size_t(i) * P.b2 + i] = A->monomial(A->indexOf(exps), F->one());
    }
    int col = static_cast<int>(c);
    for (uint32_t i = 0; i < c; ++i)
        for (uint32_t j = i + 1; j < c; ++j) {
            P.d2[size_t(i) * P.b2 + col] = A->monomial(A->generatorIndex(j), A->q());
            P.d2[size_t(j) * P.b2 + col] = A->monomial(A->generatorIndex(i), F->neg(F->one()));
            P.pairOrder.emplace_back(i, j);
            ++col;
        }

    P.d1Expanded = expandDifferential(*A, P.d1, 1, P.b1);
    P.d2Expanded = expandDifferential(*A, P.d2, P.b1, P.b2);

    // The prefix must agree with the generic machinery on k.
    if (!(P.d1Expanded * P.d2Expanded).isZero())
        throw Error("LiftingFailure", "prefix differentials do not compose to zero");
    Resolution ref = minimalResolution(simpleModule(A), 2);
    if (ref.betti != std::vector<int>{1, P.b1, P.b2})
        throw Error("LiftingFailure", "prefix Betti numbers disagree with the resolution of k");
    int radDim = A->dim() - 1;
    if (rankOf(P.d1Expanded) != radDim ||
        rankOf(P.d2Expanded) != static_cast<int>(c) * A->dim() - radDim)
        throw Error("LiftingFailure", "prefix is not exact");
    return P;
}

ExtModuleData zActionMatrices(const ModuleRep& M, int maxDeg, PivotRule rule) {
    if (maxDeg < 2) throw Error("DegreeMismatch", "maxDeg must be >= 2");
    const AlgebraPtr& A = M.algebra;
    const FieldPtr& F = A->field();
    int d = A->dim(), c = static_cast<int>(A->c());

    Resolution res = minimalResolution(M, maxDeg);
    SimpleResolutionPrefix P = simpleResolutionPrefix(A);
    RowReducer S1(P.d1Expanded, rule), S2(P.d2Expanded, rule);

    ExtModuleData E;
    E.module = M;
    E.maxDeg = maxDeg;
    E.betti = res.betti;
    E.zAction.assign(c, {});

    for (int n = 0; n + 2 <= maxDeg; ++n) {
        int bn = res.betti[n], bn1 = res.betti[n + 1], bn2 = res.betti[n + 2];
        std::vector<Mat> Z(c, Mat(F, bn2, bn));
        if (bn > 0 && bn2 > 0) {
            const auto& diff1 = res.differentials[n];      // bn x bn1 entries
            const auto& diff2 = res.differentials[n + 1];  // bn1 x bn2 entries
            // Left-multiplication matrices of the inner differential, shared
            // across the bn lifted classes.
            std::vector<Mat> beta(size_t(bn1) * bn2);
            for (int g = 0; g < bn1; ++g)
                for (int h = 0; h < bn2; ++h)
                    beta[size_t(g) * bn2 + h] = A->leftMultMatrix(diff2[size_t(g) * bn2 + h]);

            for (int m = 0; m < bn; ++m) {
                // theta_hat_0 sends eps_j to delta_{jm} 1; its composite with
                // the next differential reads off row m of the entries.
                Mat rhs1(F, d, bn1);
                for (int g = 0; g < bn1; ++g) {
                    const AlgElement& entry = diff1[size_t(m) * bn1 + g];
                    for (int w = 0; w < d; ++w) rhs1.at(w, g) = entry.coeffs[w];
                }
                auto th1 = S1.solve(rhs1);
                if (!th1) throw Error("LiftingFailure", "first lifting step has no solution");

                Mat rhs2(F, c * d, bn2);
                for (int h = 0; h < bn2; ++h)
                    for (int g = 0; g < bn1; ++g) {
                        const Mat& B = beta[size_t(g) * bn2 + h];
                        if (B.isZero()) continue;
                        for (int blk = 0; blk < c; ++blk)
                            for (int r = 0; r < d; ++r) {
                                FqElem acc = rhs2.at(blk * d + r, h);
                                for (int s = 0; s < d; ++s) {
                                    FqElem x = B.at(r, s);
                                    if (x.v && th1->at(blk * d + s, g).v)
                                        acc = F->add(acc, F->mul(x, th1->at(blk * d + s, g)));
                                }
                                rhs2.at(blk * d + r, h) = acc;
                            }
                    }
                auto th2 = S2.solve(rhs2);
                if (!th2) throw Error("LiftingFailure", "second lifting step has no solution");
                for (int i = 0; i < c; ++i)
                    for (int h = 0; h < bn2; ++h) Z[i].at(h, m) = th2->at(i * d, h);
            }
        }
        for (int i = 0; i < c; ++i) E.zAction[i].push_back(std::move(Z[i]));
    }
    return E;
}

AnnihilatorIdeal annihilatorIdeal(const ExtModuleData& E, int degreeBound) {
    const AlgebraPtr& A = E.module.algebra;
    const FieldPtr& F = A->field();
    int c = static_cast<int>(A->c());
    int N = E.maxDeg;
    if (degreeBound < 2 || degreeBound % 2 != 0 || degreeBound > N - 2)
        throw Error("WindowTooSmall", "degree bound must be even and at most maxDeg - 2");

    AnnihilatorIdeal I;
    I.algebra = A;
    I.degreeBound = degreeBound;

    // Ext-module generators: cokernel of the incoming z action per degree.
    struct Generator {
        int degree;
        Mat vec;  // b_degree x 1
    };
    std::vector<Generator> gens;
    for (int n = 0; n <= N; ++n) {
        int bn = E.betti[n];
        if (bn == 0) continue;
        std::vector<int> coords;
        if (n < 2 || E.betti[n - 2] == 0) {
            coords.resize(bn);
            for (int j = 0; j < bn; ++j) coords[j] = j;
        } else {
            Mat image(F, bn, c * E.betti[n - 2]);
            for (int i = 0; i < c; ++i) {
                const Mat& Zi = E.zAction[i][n - 2];
                for (int r = 0; r < bn; ++r)
                    for (int s = 0; s < E.betti[n - 2]; ++s)
                        image.at(r, i * E.betti[n - 2] + s) = Zi.at(r, s);
            }
            coords = cokernelCoords(image, bn);
        }
        for (int j : coords) {
            Mat v(F, bn, 1);
            v.at(j, 0) = F->one();
            gens.push_back({n, std::move(v)});
            I.generatorDegrees.push_back(n);
        }
    }
    int topThird = N - (N + 2) / 3;
    I.stabilized = std::none_of(I.generatorDegrees.begin(), I.generatorDegrees.end(),
                                [&](int n) { return n > topThird; });

    for (int m = 1; 2 * m <= degreeBound; ++m) {
        auto monos = monomialExponents(A->c(), static_cast<uint32_t>(m));
        int rows = 0;
        for (const auto& g : gens)
            if (g.degree + 2 * m <= N) rows += E.betti[g.degree + 2 * m];
        Mat sys(F, rows, static_cast<int>(monos.size()));
        for (size_t b = 0; b < monos.size(); ++b) {
            int row = 0;
            for (const auto& g : gens) {
                if (g.degree + 2 * m > N) continue;
                Mat v = g.vec;
                int deg = g.degree;
                for (int i = 0; i < c; ++i)
                    for (uint32_t rep = 0; rep < monos[b][i]; ++rep) {
                        v = E.zAction[i][deg] * v;
                        deg += 2;
                    }
                for (int r = 0; r < v.rows; ++r) sys.at(row + r, static_cast<int>(b)) = v.at(r, 0);
                row += v.rows;
            }
        }
        Mat ns = RowReducer(sys).nullspaceBasis();
        for (int j = 0; j < ns.cols; ++j) {
            ZPolynomial f;
            f.degree = 2 * m;
            for (size_t b = 0; b < monos.size(); ++b)
                if (ns.at(static_cast<int>(b), j).v)
                    f.terms.push_back({monos[b], ns.at(static_cast<int>(b), j)});
            I.generators.push_back(std::move(f));
        }
    }
    return I;
}

FqElem evalZPolynomial(const FieldPtr& F, const FieldEmbedding& emb, const ZPolynomial& f,
                       std::span<const FqElem> alpha) {
    FqElem acc = F->zero();
    for (const auto& t : f.terms) {
        FqElem prod = emb.map(t.coeff);
        for (size_t i = 0; i < alpha.size(); ++i)
            if (t.exps[i]) prod = F->mul(prod, F->pow(alpha[i], t.exps[i]));
        acc = F->add(acc, prod);
    }
    return acc;
}

ProjectivePointSet supportVarietyPoints(const AnnihilatorIdeal& I, uint32_t extDegree) {
    LiftedAlgebra lift = liftAlgebra(I.algebra, extDegree);
    const FieldPtr& F = lift.algebra->field();
    auto pts = enumerateProjectivePoints(F, I.algebra->c());
    ProjectivePointSet S{F, extDegree, I.algebra->c(), {}, pts.size()};
    for (auto& pt : pts) {
        bool vanishes = true;
        for (const auto& f : I.generators)
            if (!F->isZero(evalZPolynomial(F, lift.embedding, f, pt))) {
                vanishes = false;
                break;
            }
        if (vanishes) S.points.push_back(std::move(pt));
    }
    return S;
}

KZetaResult kZetaTensorSimple(const AlgebraPtr& A, std::span<const FqElem> mu) {
    if (mu.size() != A->c()) throw Error("DegreeMismatch", "mu must have c coordinates");
    if (isZeroTuple(mu)) throw Error("ZeroPoint", "mu must be nonzero");
    const FieldPtr& F = A->field();
    int d = A->dim();
    uint32_t c = A->c();

    KZetaResult K;
    K.cosyzygy = cosyzygyOfSimple(A);
    const Mat& pi = K.cosyzygy.quotientMap;

    // rad A on the monomial coordinates 1..d-1.
    std::vector<Mat> radAction(c);
    for (uint32_t i = 0; i < c; ++i) radAction[i] = A->leftMult(i).block(1, 1, d - 1, d - 1);

    // Induced map rad A -> Omega^{-1}(k): w = u x_j (j the last generator
    // in w) goes to pi(u mu_j q^{j-1} prod_{n != j} x_n^{a-1}).
    K.inducedMap = Mat(F, d - 1, d - 1);
    for (int r = 0; r < d - 1; ++r) {
        int w = r + 1;
        auto exps = A->exponents(w);
        int j = static_cast<int>(c) - 1;
        while (exps[j] == 0) --j;
        --exps[j];
        int uIdx = A->indexOf(exps);
        if (!mu[j].v) continue;
        FqElem scale = F->mul(mu[j], F->pow(A->q(), static_cast<uint64_t>(j)));
        auto [t, s] = A->monomialProduct(uIdx, productExceptIndex(*A, j));
        if (t < 0 || t == A->socleIndex()) continue;
        K.inducedMap.at(t, r) = F->mul(scale, s);
    }
    for (uint32_t i = 0; i < c; ++i)
        if (!(K.inducedMap * radAction[i] == K.cosyzygy.module.X[i] * K.inducedMap))
            throw Error("GeneratorExtensionFailure",
                        "generator values do not extend A-linearly on rad A");

    // Pullback (kernel of the summed comparison map, so the textbook
    // monomorphism u -> (sum mu_i g_i(u), -u) lands inside verbatim).
    Mat B = pi.hstack(K.inducedMap);
    Mat basis = RowReducer(B).nullspaceBasis();
    if (basis.cols != d)
        throw Error("GeneratorExtensionFailure", "pullback dimension is not a^c");
    K.basis = basis;

    RowReducer rr(basis);
    K.module = ModuleRep{A, d, {}};
    for (uint32_t i = 0; i < c; ++i) {
        Mat act(F, 2 * d - 1, basis.cols);
        Mat top = A->leftMult(i) * basis.block(0, 0, d, basis.cols);
        Mat bot = radAction[i] * basis.block(d, 0, d - 1, basis.cols);
        for (int r = 0; r < d; ++r)
            for (int col = 0; col < basis.cols; ++col) act.at(r, col) = top.at(r, col);
        for (int r = 0; r < d - 1; ++r)
            for (int col = 0; col < basis.cols; ++col) act.at(d + r, col) = bot.at(r, col);
        auto X = rr.solve(act);
        if (!X) throw Error("GeneratorExtensionFailure", "pullback is not action stable");
        K.module.X.push_back(std::move(*X));
    }
    return K;
}

Mat explicitMonomorphism(const AlgebraPtr& A, std::span<const FqElem> lambda,
                         std::span<const FqElem> mu) {
    const FieldPtr& F = A->field();
    if (lambda.size() != A->c() || mu.size() != A->c())
        throw Error("DegreeMismatch", "lambda and mu must have c coordinates");
    if (isZeroTuple(lambda) || isZeroTuple(mu)) throw Error("ZeroPoint", "points must be nonzero");
    FqElem perp = F->zero();
    for (uint32_t i = 0; i < A->c(); ++i)
        perp = F->add(perp, F->mul(mu[i], F->pow(lambda[i], A->a())));
    if (!F->isZero(perp))
        throw Error("PerpViolation", "sum of mu_i lambda_i^a must vanish");

    KZetaResult K = kZetaTensorSimple(A, mu);
    int d = A->dim();

    AlgElement u = A->uLambda(lambda);
    LeftIdealResult Au = leftIdealModule(A, u);
    RowReducer ru(A->rightMultMatrix(u));

    // Target of the generator: (sum mu_i lambda_i q^{i-1} prod_{n!=i}
    // x_n^{a-1}, -u_lambda) inside A + rad A.
    Mat T(F, 2 * d - 1, 1);
    for (uint32_t i = 0; i < A->c(); ++i) {
        if (!mu[i].v || !lambda[i].v) continue;
        FqElem coefficient =
            F->mul(F->mul(mu[i], lambda[i]), F->pow(A->q(), static_cast<uint64_t>(i)));
        int idx = productExceptIndex(*A, static_cast<int>(i));
        T.at(idx, 0) = F->add(T.at(idx, 0), coefficient);
    }
    for (int w = 1; w < d; ++w) T.at(d + w - 1, 0) = F->neg(u.coeffs[w]);

    auto blockApply = [&](const AlgElement& v, const Mat& vec) {
        Mat L = A->leftMultMatrix(v);
        Mat out(F, 2 * d - 1, 1);
        Mat top = L * vec.block(0, 0, d, 1);
        Mat bot = L.block(1, 1, d - 1, d - 1) * vec.block(d, 0, d - 1, 1);
        for (int r = 0; r < d; ++r) out.at(r, 0) = top.at(r, 0);
        for (int r = 0; r < d - 1; ++r) out.at(d + r, 0) = bot.at(r, 0);
        return out;
    };

    // Well defined: every annihilator of u_lambda must kill the target.
    Mat ann = ru.nullspaceBasis();
    for (int j = 0; j < ann.cols; ++j) {
        AlgElement v = A->zeroElement();
        for (int w = 0; w < d; ++w) v.coeffs[w] = ann.at(w, j);
        if (!blockApply(v, T).isZero())
            throw Error("NotInjective", "the map is not well defined on Au_lambda");
    }

    // Image of each echelon basis vector b = v . u_lambda is v . T.
    auto V = ru.solve(Au.embedding);
    if (!V) throw Error("LiftingFailure", "left ideal basis has no u_lambda preimage");
    Mat images(F, 2 * d - 1, Au.module.dim);
    for (int m = 0; m < Au.module.dim; ++m) {
        AlgElement v = A->zeroElement();
        for (int w = 0; w < d; ++w) v.coeffs[w] = V->at(w, m);
        Mat img = blockApply(v, T);
        for (int r = 0; r < 2 * d - 1; ++r) images.at(r, m) = img.at(r, 0);
    }
    auto X = RowReducer(K.basis).solve(images);
    if (!X) throw Error("LiftingFailure", "image does not land in the pullback");
    if (rankOf(*X) != Au.module.dim)
        throw Error("NotInjective", "the map fails to be injective");
    return *X;
}

}  // namespace qci
