#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "cjacobi/types.hpp"

namespace cjacobi {

// Wire formats (doubles serialized with shortest round-trip precision):
//   ComplexJacobi: {"a": [[re, im], ...], "b": [[re, im], ...],
//                   "arg_spec": [theta, ...] | null}
//   SpectralData:  {"points": [s, ...], "weights": [w, ...],
//                   "psi": [[re, im], ...]}
//   MomentSequence: {"omega": [[re, im], ...]}

nlohmann::json to_json(const ComplexJacobi& jac);
nlohmann::json to_json(const SpectralData& data);
nlohmann::json to_json(const MomentSequence& seq);

ComplexJacobi jacobi_from_json(const nlohmann::json& j, const Tolerances& tol = {});
SpectralData spectral_from_json(const nlohmann::json& j, const Tolerances& tol = {});
MomentSequence moments_from_json(const nlohmann::json& j);

nlohmann::json read_json_file(const std::filesystem::path& path);

// Serializes and writes via a temporary file + rename.
void write_file_atomic(const std::filesystem::path& path, const std::string& contents);
void write_json_file(const std::filesystem::path& path, const nlohmann::json& j);

}  // namespace cjacobi
