#include "qci/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace qci {

namespace {

uint32_t asUint(const json& j, const char* what) {
    if (!j.is_number_unsigned())
        throw Error("ParseError", std::string(what) + " must be a nonnegative integer");
    return j.get<uint32_t>();
}

std::vector<uint32_t> asUintVector(const json& j, const char* what) {
    if (!j.is_array()) throw Error("ParseError", std::string(what) + " must be an array");
    std::vector<uint32_t> out;
    for (const auto& x : j) out.push_back(asUint(x, what));
    return out;
}

}  // namespace

json toJson(const Field& F) {
    return json{{"p", F.p()}, {"e", F.e()}, {"modulus", F.modulus()}};
}

FieldPtr fieldFromJson(const json& j) {
    if (!j.is_object() || !j.contains("p") || !j.contains("e"))
        throw Error("ParseError", "field object needs p and e");
    uint32_t p = asUint(j.at("p"), "p"), e = asUint(j.at("e"), "e");
    if (j.contains("modulus")) return Field::make(p, e, asUintVector(j.at("modulus"), "modulus"));
    return Field::make(p, e);
}

json toJson(const FieldPtr& F, FqElem x) { return json(F->coeffs(x)); }

FqElem elementFromJson(const FieldPtr& F, const json& j) {
    return F->fromCoeffs(asUintVector(j, "field element"));
}

json toJson(const AlgebraSpec& A) {
    return json{{"field", toJson(*A.field())},
                {"a", A.a()},
                {"c", A.c()},
                {"q", toJson(A.field(), A.q())}};
}

AlgebraPtr algebraFromJson(const json& j) {
    if (!j.is_object() || !j.contains("field") || !j.contains("a") || !j.contains("c") ||
        !j.contains("q"))
        throw Error("ParseError", "algebra object needs field, a, c, q");
    FieldPtr F = fieldFromJson(j.at("field"));
    FqElem q = elementFromJson(F, j.at("q"));
    return AlgebraSpec::make(F, asUint(j.at("a"), "a"), asUint(j.at("c"), "c"), q);
}

json toJson(const AlgebraSpec& A, const AlgElement& u) {
    json arr = json::array();
    for (FqElem x : u.coeffs) arr.push_back(toJson(A.field(), x));
    return arr;
}

AlgElement algElementFromJson(const AlgebraSpec& A, const json& j) {
    if (!j.is_array() || j.size() != size_t(A.dim()))
        throw Error("ParseError", "algebra element needs a^c coefficients");
    AlgElement u = A.zeroElement();
    for (int i = 0; i < A.dim(); ++i) u.coeffs[i] = elementFromJson(A.field(), j.at(i));
    return u;
}

json toJson(const ModuleRep& M) {
    json mats = json::array();
    for (const Mat& X : M.X) {
        json m = json::array();
        for (FqElem x : X.a) m.push_back(toJson(M.algebra->field(), x));
        mats.push_back(std::move(m));
    }
    return json{{"algebra", toJson(*M.algebra)}, {"dim", M.dim}, {"matrices", std::move(mats)}};
}

ModuleRep moduleFromJson(const json& j) {
    if (!j.is_object() || !j.contains("algebra") || !j.contains("dim") || !j.contains("matrices"))
        throw Error("ParseError", "module object needs algebra, dim, matrices");
    AlgebraPtr A = algebraFromJson(j.at("algebra"));
    int d = static_cast<int>(asUint(j.at("dim"), "dim"));
    const json& mats = j.at("matrices");
    if (!mats.is_array() || mats.size() != A->c())
        throw Error("ParseError", "expected c action matrices");
    ModuleRep M{A, d, {}};
    for (uint32_t i = 0; i < A->c(); ++i) {
        const json& m = mats.at(i);
        if (!m.is_array() || m.size() != size_t(d) * d)
            throw Error("ParseError", "matrix " + std::to_string(i + 1) + " needs dim*dim entries");
        Mat X(A->field(), d, d);
        for (size_t k = 0; k < m.size(); ++k) X.a[k] = elementFromJson(A->field(), m.at(k));
        M.X.push_back(std::move(X));
    }
    auto issues = validateModule(M);
    if (!issues.empty()) {
        std::string msg = "module violates the defining relations:";
        for (const auto& s : issues) msg += " [" + s + "]";
        throw Error("ValidationError", msg);
    }
    return M;
}

json toJson(const ProjectivePointSet& S) {
    json pts = json::array();
    for (const auto& pt : S.points) {
        json p = json::array();
        for (FqElem x : pt) p.push_back(toJson(S.field, x));
        pts.push_back(std::move(p));
    }
    return json{{"extDegree", S.extDegree},
                {"c", S.c},
                {"points", std::move(pts)},
                {"enumerated", S.enumerated}};
}

json toJson(const AnnihilatorIdeal& I) {
    json gens = json::array();
    for (const auto& f : I.generators) {
        json terms = json::array();
        for (const auto& t : f.terms)
            terms.push_back(json{{"exps", t.exps}, {"coeff", toJson(I.algebra->field(), t.coeff)}});
        gens.push_back(json{{"monomials", std::move(terms)}});
    }
    return json{{"degreeBound", I.degreeBound},
                {"stabilized", I.stabilized},
                {"generators", std::move(gens)}};
}

json toJson(const Resolution& R) {
    const AlgebraSpec& A = *R.module.algebra;
    json diffs = json::array();
    for (size_t n = 0; n < R.differentials.size(); ++n) {
        json matrix = json::array();
        for (const AlgElement& entry : R.differentials[n]) matrix.push_back(toJson(A, entry));
        diffs.push_back(std::move(matrix));
    }
    json aug = json::array();
    for (FqElem x : R.augmentation.a) aug.push_back(toJson(A.field(), x));
    return json{{"module", toJson(R.module)},
                {"betti", R.betti},
                {"differentials", std::move(diffs)},
                {"augmentation", std::move(aug)}};
}

json parseJsonText(const std::string& text, const std::string& origin) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error("ParseError", origin + ": " + e.what());
    }
}

json readJsonFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("ParseError", "cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parseJsonText(ss.str(), path);
}

std::string canonicalDump(const json& j) { return j.dump(2) + "\n"; }

void writeJsonFile(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw Error("ParseError", "cannot write " + path);
    out << canonicalDump(j);
}

ModuleRep loadModule(const std::string& path) { return moduleFromJson(readJsonFile(path)); }

void saveModule(const ModuleRep& M, const std::string& path) { writeJsonFile(path, toJson(M)); }

RunConfig runConfigFromJson(const json& j, const std::string& baseDir) {
    if (!j.is_object()) throw Error("InvalidConfig", "config must be an object");
    static const std::vector<std::string> known{
        "algebra",      "algebraPath",   "modulePaths", "extDegrees",
        "resolutionSteps", "degreeBound", "outputPath",  "threads",
        "seed",         "lambdaSamples", "lineSamples", "muSamples",
        "randomModules", "periodBound"};
    for (auto it = j.begin(); it != j.end(); ++it)
        if (std::find(known.begin(), known.end(), it.key()) == known.end())
            throw Error("InvalidConfig", "unknown config key: " + it.key());

    RunConfig cfg;
    auto resolve = [&](const std::string& p) {
        std::filesystem::path fp(p);
        if (fp.is_relative() && !baseDir.empty()) fp = std::filesystem::path(baseDir) / fp;
        return fp.string();
    };
    if (j.contains("algebra"))
        cfg.algebra = algebraFromJson(j.at("algebra"));
    else if (j.contains("algebraPath"))
        cfg.algebra = algebraFromJson(readJsonFile(resolve(j.at("algebraPath"))));
    else
        throw Error("InvalidConfig", "config needs algebra or algebraPath");
    if (j.contains("modulePaths"))
        for (const auto& p : j.at("modulePaths")) cfg.modulePaths.push_back(resolve(p));
    if (j.contains("extDegrees")) {
        cfg.extDegrees.clear();
        for (const auto& d : j.at("extDegrees")) {
            uint32_t v = asUint(d, "extDegrees entry");
            if (v < 1) throw Error("InvalidConfig", "extension degrees must be >= 1");
            cfg.extDegrees.push_back(v);
        }
        if (cfg.extDegrees.empty()) throw Error("InvalidConfig", "extDegrees must be nonempty");
    }
    if (j.contains("resolutionSteps")) cfg.resolutionSteps = asUint(j.at("resolutionSteps"), "resolutionSteps");
    if (j.contains("degreeBound")) {
        cfg.degreeBound = asUint(j.at("degreeBound"), "degreeBound");
        if (cfg.degreeBound % 2 != 0) throw Error("InvalidConfig", "degreeBound must be even");
    }
    if (j.contains("outputPath")) cfg.outputPath = resolve(j.at("outputPath"));
    if (j.contains("threads")) cfg.threads = std::max(1u, asUint(j.at("threads"), "threads"));
    if (j.contains("seed")) cfg.seed = j.at("seed").get<uint64_t>();
    if (j.contains("lambdaSamples")) cfg.lambdaSamples = asUint(j.at("lambdaSamples"), "lambdaSamples");
    if (j.contains("lineSamples")) cfg.lineSamples = asUint(j.at("lineSamples"), "lineSamples");
    if (j.contains("muSamples")) cfg.muSamples = asUint(j.at("muSamples"), "muSamples");
    if (j.contains("randomModules")) cfg.randomModules = asUint(j.at("randomModules"), "randomModules");
    if (j.contains("periodBound")) cfg.periodBound = asUint(j.at("periodBound"), "periodBound");
    if (cfg.resolutionSteps < cfg.degreeBound + 4)
        throw Error("InvalidConfig", "resolutionSteps must be at least degreeBound + 4");
    for (const auto& p : cfg.modulePaths)
        if (!std::filesystem::exists(p)) throw Error("InvalidConfig", "module file missing: " + p);
    return cfg;
}

json toJson(const RunConfig& cfg) {
    return json{{"algebra", toJson(*cfg.algebra)},
                {"modulePaths", cfg.modulePaths},
                {"extDegrees", cfg.extDegrees},
                {"resolutionSteps", cfg.resolutionSteps},
                {"degreeBound", cfg.degreeBound},
                {"threads", cfg.threads},
                {"seed", cfg.seed},
                {"lambdaSamples", cfg.lambdaSamples},
                {"lineSamples", cfg.lineSamples},
                {"muSamples", cfg.muSamples},
                {"randomModules", cfg.randomModules},
                {"periodBound", cfg.periodBound}};
}

}  // namespace qci
