#include "cjacobi/json_io.hpp"

#include <fstream>

namespace cjacobi {

namespace {

nlohmann::json complex_list(const std::vector<Complex>& values) {
  nlohmann::json out = nlohmann::json::array();
  for (const Complex& v : values) out.push_back({v.real(), v.imag()});
  return out;
}

std::vector<Complex> parse_complex_list(const nlohmann::json& j, const char* what) {
  if (!j.is_array()) fail(errc::io_error, std::string(what) + " must be an array of [re, im] pairs");
  std::vector<Complex> out;
  out.reserve(j.size());
  for (const auto& item : j) {
    if (!item.is_array() || item.size() != 2)
      fail(errc::io_error, std::string(what) + " entries must be [re, im] pairs");
    out.emplace_back(item[0].get<double>(), item[1].get<double>());
  }
  return out;
}

}  // namespace

nlohmann::json to_json(const ComplexJacobi& jac) {
  nlohmann::json j;
  j["a"] = complex_list(jac.a);
  j["b"] = complex_list(jac.b);
  j["arg_spec"] = jac.arg_spec ? nlohmann::json(*jac.arg_spec) : nlohmann::json(nullptr);
  return j;
}

nlohmann::json to_json(const SpectralData& data) {
  nlohmann::json j;
  j["points"] = data.measure.points;
  j["weights"] = data.measure.weights;
  j["psi"] = complex_list(data.psi);
  return j;
}

nlohmann::json to_json(const MomentSequence& seq) {
  nlohmann::json j;
  j["omega"] = complex_list(seq.omega);
  return j;
}

ComplexJacobi jacobi_from_json(const nlohmann::json& j, const Tolerances& tol) {
  if (!j.contains("a") || !j.contains("b")) fail(errc::io_error, "jacobi JSON needs fields 'a' and 'b'");
  std::optional<std::vector<double>> arg_spec;
  if (j.contains("arg_spec") && !j["arg_spec"].is_null())
    arg_spec = j["arg_spec"].get<std::vector<double>>();
  return validate(parse_complex_list(j["a"], "a"), parse_complex_list(j["b"], "b"), arg_spec, tol);
}

SpectralData spectral_from_json(const nlohmann::json& j, const Tolerances& tol) {
  if (!j.contains("points") || !j.contains("weights") || !j.contains("psi"))
    fail(errc::io_error, "spectral JSON needs fields 'points', 'weights' and 'psi'");
  SpectralData data;
  data.measure.points = j["points"].get<std::vector<double>>();
  data.measure.weights = j["weights"].get<std::vector<double>>();
  data.psi = parse_complex_list(j["psi"], "psi");
  if (data.measure.points.size() != data.measure.weights.size() ||
      data.measure.points.size() != data.psi.size())
    fail(errc::shape_error, "points, weights and psi must have equal length");
  for (std::size_t k = 0; k + 1 < data.measure.points.size(); ++k)
    if (!(data.measure.points[k] < data.measure.points[k + 1]))
      fail(errc::shape_error, "points must be strictly increasing");
  for (double s : data.measure.points)
    if (s < 0.0) fail(errc::shape_error, "points must be nonnegative");
  for (double w : data.measure.weights)
    if (!(w > 0.0)) fail(errc::shape_error, "weights must be positive");
  if (std::abs(data.measure.total_mass() - 1.0) > tol.mass)
    fail(errc::shape_error, "weights must sum to 1 within tol_mass");
  for (const Complex& p : data.psi)
    if (std::abs(p) > 1.0 + tol.phase)
      fail(errc::phase_out_of_range, "|psi| exceeds 1 + tol_phase");
  if (!data.measure.points.empty() && data.measure.points.front() == 0.0 &&
      data.psi.front() != Complex(1.0, 0.0))
    fail(errc::shape_error, "psi at the zero atom must be exactly 1");
  return data;
}

MomentSequence moments_from_json(const nlohmann::json& j) {
  if (!j.contains("omega")) fail(errc::io_error, "moment JSON needs field 'omega'");
  return MomentSequence{parse_complex_list(j["omega"], "omega")};
}

nlohmann::json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(errc::io_error, "cannot open " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    fail(errc::io_error, "cannot parse " + path.string() + ": " + e.what());
  }
  return j;
}

void write_file_atomic(const std::filesystem::path& path, const std::string& contents) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) fail(errc::io_error, "cannot open " + tmp.string() + " for writing");
    out << contents;
    if (!out) fail(errc::io_error, "write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) fail(errc::io_error, "cannot move " + tmp.string() + " to " + path.string());
}

void write_json_file(const std::filesystem::path& path, const nlohmann::json& j) {
  write_file_atomic(path, j.dump(2) + "\n");
}

}  // namespace cjacobi
