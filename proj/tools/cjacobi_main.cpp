// Command-line front end: JSON/CSV I/O around the spectral maps.
//
//   direct     J -> (nu, psi)
//   inverse    (nu, psi) -> J
//   roundtrip  direct then inverse, with an error report
//   moments    omega list and the path-oracle cross-check
//   ortho      Gram deviation summary for the antilinear polynomials
//   example    closed-form constant-diagonal family: CSV samples + moments

#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cjacobi/constant_diagonal.hpp"
#include "cjacobi/direct.hpp"
#include "cjacobi/inverse.hpp"
#include "cjacobi/json_io.hpp"
#include "cjacobi/motzkin.hpp"
#include "cjacobi/qpolys.hpp"
#include "cjacobi/random.hpp"

namespace {

using namespace cjacobi;
using nlohmann::json;

struct RunConfig {
  std::string input;
  std::string output;
  std::string moments_output;
  std::string args_path;
  std::string omega_text;
  int n = 8;
  int moments = -1;
  int paths = -1;
  int samples = 0;
  std::uint64_t seed = 0;
  Tolerances tol;
};

void emit(const RunConfig& cfg, const json& payload) {
  if (cfg.output.empty()) {
    std::cout << payload.dump(2) << "\n";
  } else {
    write_json_file(cfg.output, payload);
  }
}

Complex parse_omega(const std::string& text) {
  double re = 0.0, im = 0.0;
  char comma = 0;
  std::istringstream in(text);
  in >> re;
  if (in >> comma) {
    if (comma != ',') fail(errc::shape_error, "--omega expects re,im");
    in >> im;
  }
  if (in.fail()) fail(errc::shape_error, "--omega expects re,im");
  return Complex(re, im);
}

ComplexJacobi load_jacobi(const RunConfig& cfg) {
  if (cfg.input.empty()) fail(errc::io_error, "--input is required");
  return jacobi_from_json(read_json_file(cfg.input), cfg.tol);
}

std::optional<std::vector<double>> load_args(const RunConfig& cfg) {
  if (cfg.args_path.empty()) return std::nullopt;
  const json j = read_json_file(cfg.args_path);
  if (!j.is_array()) fail(errc::io_error, "angle file must be a JSON array");
  return j.get<std::vector<double>>();
}

int run_direct(const RunConfig& cfg) {
  const ComplexJacobi jac = load_jacobi(cfg);
  const SpectralData data = phase_function(jac, cfg.tol);
  emit(cfg, to_json(data));
  if (cfg.moments >= 0) {
    const json mj = to_json(moment_sequence(jac, cfg.moments));
    if (cfg.moments_output.empty()) {
      std::cout << mj.dump(2) << "\n";
    } else {
      write_json_file(cfg.moments_output, mj);
    }
  }
  return 0;
}

int run_inverse(const RunConfig& cfg) {
  if (cfg.input.empty()) fail(errc::io_error, "--input is required");
  const SpectralData data = spectral_from_json(read_json_file(cfg.input), cfg.tol);
  const ComplexJacobi jac = reconstruct(data, load_args(cfg), cfg.tol);
  emit(cfg, to_json(jac));
  return 0;
}

int run_roundtrip(const RunConfig& cfg) {
  ComplexJacobi jac = cfg.input.empty() ? random_jacobi(cfg.seed, cfg.n) : load_jacobi(cfg);
  const SpectralData data = phase_function(jac, cfg.tol);
  const ComplexJacobi back = reconstruct(data, jac.arg_spec, cfg.tol);

  double max_abs = 0.0, max_rel = 0.0;
  const int depth = back.size();
  auto account = [&](Complex got, Complex want) {
    const double abs_err = std::abs(got - want);
    max_abs = std::max(max_abs, abs_err);
    max_rel = std::max(max_rel, abs_err / std::max(1.0, std::abs(want)));
  };
  for (int j = 0; j < std::min(depth, jac.size()); ++j) account(back.b[j], jac.b[j]);
  for (int j = 0; j + 1 < std::min(depth, jac.size()); ++j) account(back.a[j], jac.a[j]);

  json report;
  report["n"] = jac.size();
  report["depth"] = depth;
  report["complete"] = depth == jac.size();
  report["max_abs_error"] = max_abs;
  report["max_rel_error"] = max_rel;
  if (cfg.input.empty()) report["seed"] = cfg.seed;
  emit(cfg, report);
  return 0;
}

int run_moments(const RunConfig& cfg) {
  const ComplexJacobi jac = load_jacobi(cfg);
  const int order = cfg.moments >= 0 ? cfg.moments : 8;
  const MomentSequence seq = moment_sequence(jac, order);
  const BlockJacobi blocks = block_embed(jac);

  json report;
  report["omega"] = to_json(seq)["omega"];

  // cross-check against the path oracle where the blocks are deep enough
  double max_dev = 0.0;
  int checked = 0;
  for (int m = 1; m <= std::min({order, 2 * jac.size() - 2, 13}); ++m) {
    const PathMoment pm = path_moment(blocks, m);
    Matrix2c expected;
    if (m % 2 == 0) {
      expected << seq.omega[m], 0.0, 0.0, std::conj(seq.omega[m]);
    } else {
      expected << 0.0, seq.omega[m], std::conj(seq.omega[m]), 0.0;
    }
    max_dev = std::max(max_dev, (pm.total - expected).cwiseAbs().maxCoeff());
    ++checked;
  }
  report["path_check"] = {{"orders_checked", checked}, {"max_deviation", max_dev}};

  if (cfg.paths >= 0) {
    const PathMoment pm = path_moment(blocks, cfg.paths);
    auto mat = [](const Matrix2c& m) {
      return json::array({{m(0, 0).real(), m(0, 0).imag()}, {m(0, 1).real(), m(0, 1).imag()},
                          {m(1, 0).real(), m(1, 0).imag()}, {m(1, 1).real(), m(1, 1).imag()}});
    };
    report["paths"] = {{"m", cfg.paths},
                       {"count", motzkin_number(cfg.paths)},
                       {"total", mat(pm.total)},
                       {"extremal", mat(pm.extremal)},
                       {"remainder", mat(pm.remainder)}};
  }
  emit(cfg, report);
  return 0;
}

int run_ortho(const RunConfig& cfg) {
  const ComplexJacobi jac = load_jacobi(cfg);
  const SpectralData data = phase_function(jac, cfg.tol);
  const int capacity = gram_capacity(data, cfg.tol);
  const int count = std::min(capacity, jac.size());
  const std::vector<QPolynomial> qs = q_polynomials(jac, count);

  const MatrixXc g1 = orthogonality_gram(qs, data, GramForm::vector_form, cfg.tol);
  const MatrixXc g2 = orthogonality_gram(qs, data, GramForm::even_odd, cfg.tol);
  const MatrixXc eye = MatrixXc::Identity(count, count);

  json report;
  report["count"] = count;
  report["capacity"] = capacity;
  report["max_gram_deviation"] = (g1 - eye).cwiseAbs().maxCoeff();
  report["form_agreement"] = (g1 - g2).cwiseAbs().maxCoeff();
  emit(cfg, report);
  return 0;
}

int run_example(const RunConfig& cfg) {
  if (cfg.omega_text.empty()) fail(errc::shape_error, "--omega re,im is required");
  const Complex omega = parse_omega(cfg.omega_text);
  const DensityModel model = closed_form_spectral(omega);

  if (cfg.samples > 0) {
    std::ostringstream csv;
    csv.precision(17);
    csv << "s,density,psi_re,psi_im\n";
    const double lo = model.support_lo();
    const double hi = model.support_hi();
    for (int k = 0; k < cfg.samples; ++k) {
      // interior samples; the lower endpoint can carry a density singularity
      const double s = lo + (hi - lo) * (k + 0.5) / cfg.samples;
      const Complex psi = model.phase(s);
      csv << s << "," << model.density(s) << "," << psi.real() << "," << psi.imag() << "\n";
    }
    if (cfg.output.empty()) {
      std::cout << csv.str();
    } else {
      write_file_atomic(cfg.output, csv.str());
    }
  }

  const int order = cfg.moments >= 0 ? cfg.moments : 10;
  const MomentSequence closed = closed_form_moments(omega, order);
  const int n = std::max(cfg.n, order + 4);
  const MomentSequence trunc = moment_sequence(constant_jacobi(omega, n), order);
  double max_dev = 0.0;
  for (int m = 0; m <= order; ++m)
    max_dev = std::max(max_dev, std::abs(closed.omega[m] - trunc.omega[m]));

  json report;
  report["omega"] = {omega.real(), omega.imag()};
  report["support"] = {model.support_lo(), model.support_hi()};
  report["mass"] = closed.omega[0].real();
  report["moments"] = to_json(closed)["omega"];
  report["truncation_n"] = n;
  report["max_moment_deviation"] = max_dev;
  if (cfg.moments_output.empty()) {
    std::cout << report.dump(2) << "\n";
  } else {
    write_json_file(cfg.moments_output, report);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral toolkit for complex symmetric Jacobi matrices"};
  app.require_subcommand(1);

  RunConfig cfg;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--input", cfg.input, "input JSON file");
    sub->add_option("--output", cfg.output, "output file (stdout when absent)");
    sub->add_option("--tol-mass", cfg.tol.mass);
    sub->add_option("--tol-phase", cfg.tol.phase);
    sub->add_option("--tol-herm", cfg.tol.herm);
    sub->add_option("--tol-breakdown", cfg.tol.breakdown);
    sub->add_option("--tol-cluster", cfg.tol.cluster);
    sub->add_option("--tol-gauge", cfg.tol.gauge);
  };

  CLI::App* direct = app.add_subcommand("direct", "spectral data of a Jacobi matrix");
  add_common(direct);
  direct->add_option("--moments", cfg.moments, "also emit omega_0..omega_M");
  direct->add_option("--moments-output", cfg.moments_output, "file for the moment JSON");

  CLI::App* inverse = app.add_subcommand("inverse", "reconstruct a Jacobi matrix from spectral data");
  add_common(inverse);
  inverse->add_option("--args", cfg.args_path, "JSON array of prescribed arguments theta_j");

  CLI::App* roundtrip = app.add_subcommand("roundtrip", "direct then inverse with an error report");
  add_common(roundtrip);
  roundtrip->add_option("--seed", cfg.seed, "seed for a random instance");
  roundtrip->add_option("--n", cfg.n, "size of the random instance");

  CLI::App* moments = app.add_subcommand("moments", "moment list and path-oracle cross-check");
  add_common(moments);
  moments->add_option("--moments", cfg.moments, "highest order (default 8)");
  moments->add_option("--paths", cfg.paths, "dump the path split at this order");

  CLI::App* ortho = app.add_subcommand("ortho", "orthogonality Gram summary");
  add_common(ortho);

  CLI::App* example = app.add_subcommand("example", "closed-form constant-diagonal family");
  add_common(example);
  example->add_option("--omega", cfg.omega_text, "parameter as re,im")->required();
  example->add_option("--samples", cfg.samples, "CSV sample count");
  example->add_option("--moments", cfg.moments, "moment order for the report (default 10)");
  example->add_option("--n", cfg.n, "truncation size for the moment match");
  example->add_option("--report", cfg.moments_output, "file for the JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    nlohmann::json err = {{"error", "UsageError"}, {"detail", e.what()}};
    std::cerr << err.dump() << "\n";
    return 1;
  }

  try {
    if (direct->parsed()) return run_direct(cfg);
    if (inverse->parsed()) return run_inverse(cfg);
    if (roundtrip->parsed()) return run_roundtrip(cfg);
    if (moments->parsed()) return run_moments(cfg);
    if (ortho->parsed()) return run_ortho(cfg);
    if (example->parsed()) return run_example(cfg);
  } catch (const Error& e) {
    nlohmann::json err = {{"error", to_string(e.code())}, {"detail", e.detail()}};
    std::cerr << err.dump() << "\n";
    return is_validation_error(e.code()) ? 1 : 2;
  } catch (const std::exception& e) {
    nlohmann::json err = {{"error", "InternalError"}, {"detail", e.what()}};
    std::cerr << err.dump() << "\n";
    return 2;
  }
  return 0;
}
