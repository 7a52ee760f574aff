#pragma once

#include <string>

#include <json.hpp>

#include "nccube/opsys.hpp"

namespace nccube {

using Json = nlohmann::ordered_json;

/// Serialise with all floats at 17 significant digits so emitted files
/// round-trip doubles exactly and repeated runs are byte-identical.
std::string dumpJson(const Json& j, int indent = 2);

std::string formatDouble(double v);

Json matrixToJson(const ComplexMatrix& m);
ComplexMatrix matrixFromJson(const Json& j);

/// ElementFile schema: {format, system, n, k, coeffs{label: matrix}}.
/// Hermitian blocks are symmetrised on load; asymmetry beyond 1e-8 is an
/// error, as is any unknown label or shape mismatch.
Json elementToJson(const TensorElement& x);
TensorElement elementFromJson(const Json& j);
TensorElement loadElementFile(const std::string& path);

void writeTextFile(const std::string& path, const std::string& content);
std::string readTextFile(const std::string& path);

}  // namespace nccube
