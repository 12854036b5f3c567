// JSON encodings for every file format plus run configuration.
#pragma once

#include <json.hpp>

#include "qci/suppvar.hpp"

namespace qci {

using nlohmann::json;

json toJson(const Field& F);
FieldPtr fieldFromJson(const json& j);

json toJson(const FieldPtr& F, FqElem x);  // array of e ints, constant first
FqElem elementFromJson(const FieldPtr& F, const json& j);

json toJson(const AlgebraSpec& A);
AlgebraPtr algebraFromJson(const json& j);

json toJson(const AlgebraSpec& A, const AlgElement& u);
AlgElement algElementFromJson(const AlgebraSpec& A, const json& j);

json toJson(const ModuleRep& M);
/// Validates relations; throws ValidationError naming the violations.
ModuleRep moduleFromJson(const json& j);

json toJson(const ProjectivePointSet& S);
json toJson(const AnnihilatorIdeal& I);
json toJson(const Resolution& R);

/// Parses with position info on failure (ParseError).
json parseJsonText(const std::string& text, const std::string& origin);
json readJsonFile(const std::string& path);
void writeJsonFile(const std::string& path, const json& j);
/// Canonical text form: two-space indent, sorted keys, trailing newline.
std::string canonicalDump(const json& j);

ModuleRep loadModule(const std::string& path);
void saveModule(const ModuleRep& M, const std::string& path);

/// Suite configuration; unknown keys are rejected.
struct RunConfig {
    AlgebraPtr algebra;
    std::vector<std::string> modulePaths;
    std::vector<uint32_t> extDegrees{1, 2};
    int resolutionSteps = 12;
    int degreeBound = 8;
    std::string outputPath;
    int threads = 1;
    uint64_t seed = 20260809;
    int lambdaSamples = 3;
    int lineSamples = 5;
    int muSamples = 2;
    int randomModules = 5;
    int periodBound = 12;
};
RunConfig runConfigFromJson(const json& j, const std::string& baseDir);
json toJson(const RunConfig& cfg);

}  // namespace qci
