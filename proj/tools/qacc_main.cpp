#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "qacc/io.hpp"

namespace fs = std::filesystem;
using namespace qacc;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitInternal = 3;

struct CommonOpts {
  std::string manifest;
  std::string circuit, noise, noise_b, out;
  double theta = -1, alpha = -1, k = -1;
  std::string protocol;
  int64_t seed = -1;
  int runs = -1;
  int jobs = -1;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--manifest", o.manifest, "run manifest (json)");
  cmd->add_option("--circuit", o.circuit, "circuit file");
  cmd->add_option("--noise", o.noise, "noise file");
  cmd->add_option("--theta", o.theta, "minimum-looseness numerator, in (0,1]");
  cmd->add_option("--alpha", o.alpha, "confidence, in (0,1)");
  cmd->add_option("--k", o.k, "per-trap detection constant");
  cmd->add_option("--protocol", o.protocol, "tau | xy | xy-strong");
  cmd->add_option("--seed", o.seed, "random seed");
  cmd->add_option("--out", o.out, "output directory");
  cmd->add_option("--jobs", o.jobs, "parallel harness width");
}

RunManifest resolve_manifest(const CommonOpts& o) {
  RunManifest m;
  if (!o.manifest.empty()) m = load_manifest(o.manifest);
  if (!o.circuit.empty()) m.circuit = o.circuit;
  if (!o.noise.empty()) m.noise = o.noise;
  if (!o.noise_b.empty()) m.noise_b = o.noise_b;
  if (o.theta >= 0) m.config.theta = o.theta;
  if (o.alpha >= 0) m.config.alpha = o.alpha;
  if (o.k >= 0) m.config.k = o.k;
  if (!o.protocol.empty()) m.config.protocol = protocol_from_name(o.protocol);
  if (o.seed >= 0) m.config.seed = uint64_t(o.seed);
  if (!o.out.empty()) m.out = o.out;
  if (o.runs >= 0) m.runs = o.runs;
  if (o.jobs >= 0) m.config.jobs = o.jobs;
  if (m.circuit.empty()) throw std::invalid_argument("no circuit given (use --circuit or a manifest)");
  return m;
}

NoiseModel load_noise_or_none(const fs::path& p) { return p.empty() ? NoiseModel::none() : load_noise(p); }

int cmd_accredit(const CommonOpts& o) {
  RunManifest m = resolve_manifest(o);
  Circuit c = load_circuit(m.circuit);
  NoiseModel nm = load_noise_or_none(m.noise);
  AccreditationReport rep = run_accreditation(c, nm, m.config);
  fs::create_directories(m.out);
  write_text_file(m.out / "report.json", report_to_json(rep).dump(2) + "\n");
  write_text_file(m.out / "traps.csv", report_csv(rep));
  std::cout << "target sample: " << rep.target_sample << "\n"
            << "bound:         " << rep.bound << "\n"
            << "traps:         " << rep.trap_failures << "/" << rep.n_traps << " failed\n"
            << "wrote " << (m.out / "report.json").string() << ", " << (m.out / "traps.csv").string()
            << "\n";
  return kExitOk;
}

int cmd_verify(const CommonOpts& o) {
  RunManifest m = resolve_manifest(o);
  Circuit c = load_circuit(m.circuit);
  NoiseModel nm = load_noise_or_none(m.noise);
  fs::create_directories(m.out);
  if (!m.noise_b.empty()) {
    NoiseModel nmb = load_noise(m.noise_b);
    RobustnessCheck r = verify_robustness(c, nm, nmb, 8, m.config.seed + 1);
    write_text_file(m.out / "robustness.json", robustness_to_json(r).dump(2) + "\n");
    std::cout << "output tvd:  " << r.lhs << "\nsite bound:  " << r.rhs << " (" << r.noisy_sites
              << " noisy sites)\n";
    if (!r.ok) {
      std::cout << "inconclusive: bound estimate below observed distance\n";
      return kExitInconclusive;
    }
    return kExitOk;
  }
  SoundnessVerdict v = verify_soundness(c, nm, m.config, m.runs, m.config.seed);
  write_text_file(m.out / "verdict.json", verdict_to_json(v).dump(2) + "\n");
  write_text_file(m.out / "runs.csv", verdict_csv(v));
  std::cout << "runs:       " << v.runs << "\nviolations: " << v.violations << "\ntrue nu:    " << v.true_nu
            << "\nmean bound: " << v.mean_bound << "\n";
  return kExitOk;
}

int cmd_search(const std::string& gate_arg, double tolerance, int64_t seed) {
  Mat g;
  if (fs::exists(gate_arg)) {
    Circuit c = load_circuit(gate_arg);
    auto two = c.two_qubit_ops();
    if (two.empty()) throw std::invalid_argument("gate file has no two-qubit gate");
    g = c.ops[two[0]].matrix;
  } else {
    g = named_gate_matrix(gate_arg);
    if (g.rows() != 4) throw std::invalid_argument("named gate is not two-qubit: " + gate_arg);
  }
  DecompositionSearchResult res = search_tau_decomposition(g, tolerance, uint64_t(seed));
  std::cout << "candidates scanned: " << res.candidates << "\n";
  if (res.dec) {
    std::cout << "decomposition found (residual " << res.best_residual << ", " << res.hosting_count
              << " hosting Cliffords)\n";
    auto dump = [](const char* name, const Mat& m) {
      std::cout << name << ":\n";
      for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
          cxd v = m(r, c);
          std::cout << "  (" << v.real() << (v.imag() < 0 ? "" : "+") << v.imag() << "i)";
        }
        std::cout << "\n";
      }
    };
    dump("tau1", res.dec->tau1);
    dump("tau2", res.dec->tau2);
    dump("m", res.dec->m);
  } else {
    std::cout << "none: no decomposition at tolerance " << tolerance << " (best residual "
              << res.best_residual << ")\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum accreditation toolkit"};
  app.require_subcommand(1);

  CommonOpts acc_opts, ver_opts;
  CLI::App* acc = app.add_subcommand("accredit", "run the accreditation protocol on a circuit");
  add_common(acc, acc_opts);

  CLI::App* ver = app.add_subcommand("verify", "soundness harness, or robustness when --noise-b is given");
  add_common(ver, ver_opts);
  ver->add_option("--runs", ver_opts.runs, "number of protocol runs");
  ver->add_option("--noise-b", ver_opts.noise_b, "second noise file (robustness comparison)");

  std::string gate_arg;
  double tolerance = 1e-6;
  int64_t search_seed = 1;
  CLI::App* sea = app.add_subcommand("search-decomposition", "search a two-qubit gate decomposition");
  sea->add_option("gate", gate_arg, "named gate (cnot, cz, sqrt_iswap, ...) or a circuit file")->required();
  sea->add_option("--tolerance", tolerance, "acceptance residual");
  sea->add_option("--seed", search_seed, "search seed");

  try {
    app.parse(argc, argv);
    if (acc->parsed()) return cmd_accredit(acc_opts);
    if (ver->parsed()) return cmd_verify(ver_opts);
    if (sea->parsed()) return cmd_search(gate_arg, tolerance, search_seed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInternal;
}
