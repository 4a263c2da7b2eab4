#include "qacc/io.hpp"

#include <fstream>
#include <sstream>

namespace qacc {

namespace {

json matrix_to_json(const Mat& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(json::array({m(r, c).real(), m(r, c).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

Mat matrix_from_json(const json& j) {
  size_t rows = j.size();
  if (rows == 0) throw std::invalid_argument("matrix: empty");
  size_t cols = j.at(0).size();
  Mat m{Eigen::Index(rows), Eigen::Index(cols)};
  for (size_t r = 0; r < rows; ++r)
    for (size_t c = 0; c < cols; ++c) {
      const json& e = j.at(r).at(c);
      m(Eigen::Index(r), Eigen::Index(c)) = cxd(e.at(0).get<double>(), e.at(1).get<double>());
    }
  return m;
}

json op_to_json(const PlacedGate& g) {
  json j;
  j["kind"] = g.kind;
  j["qubits"] = g.qubits;
  if (!g.params.empty()) j["params"] = g.params;
  if (g.kind == "u2" || g.kind == "u4") j["matrix"] = matrix_to_json(g.matrix);
  if (g.prov != Prov::input) j["prov"] = prov_name(g.prov);
  return j;
}

PlacedGate op_from_json(const json& j) {
  std::string kind = j.at("kind").get<std::string>();
  std::vector<int> qubits = j.at("qubits").get<std::vector<int>>();
  Prov prov = j.contains("prov") ? prov_from_name(j.at("prov").get<std::string>()) : Prov::input;
  if (kind == "u2") return PlacedGate::custom1(matrix_from_json(j.at("matrix")), qubits.at(0), prov);
  if (kind == "u4") return PlacedGate::custom2(matrix_from_json(j.at("matrix")), qubits, prov);
  if (kind == "xy") {
    auto params = j.at("params").get<std::vector<double>>();
    double s1 = params.size() > 1 ? params[1] : 1.0;
    double s2 = params.size() > 2 ? params[2] : 1.0;
    return PlacedGate::xy(params.at(0), qubits, prov, s1, s2);
  }
  return PlacedGate::named(kind, qubits, prov);
}

}  // namespace

json circuit_to_json(const Circuit& c) {
  json j;
  j["qubits"] = c.qubits;
  json preps = json::array();
  for (const Prep& p : c.preps) {
    if (p.label == "u")
      preps.push_back(json{{"u", matrix_to_json(p.u)}});
    else
      preps.push_back(p.label);
  }
  j["preps"] = std::move(preps);
  json ops = json::array();
  for (const PlacedGate& g : c.ops) ops.push_back(op_to_json(g));
  j["ops"] = std::move(ops);
  json meas = json::array();
  for (const MeasBasis& m : c.measurements) {
    if (m.label == "u")
      meas.push_back(json{{"u", matrix_to_json(m.b)}});
    else
      meas.push_back("Z");
  }
  j["measurements"] = std::move(meas);
  return j;
}

Circuit circuit_from_json(const json& j) {
  Circuit c;
  try {
    c.qubits = j.at("qubits").get<int>();
    for (const json& p : j.at("preps")) {
      if (p.is_string())
        c.preps.push_back(Prep::basis(p.get<std::string>()));
      else
        c.preps.push_back(Prep::rotated(matrix_from_json(p.at("u"))));
    }
    for (const json& o : j.at("ops")) c.ops.push_back(op_from_json(o));
    for (const json& m : j.at("measurements")) {
      if (m.is_string()) {
        std::string s = m.get<std::string>();
        if (s != "Z" && s != "z") throw std::invalid_argument("measurement label must be Z or a basis matrix");
        c.measurements.push_back(MeasBasis::z());
      } else {
        c.measurements.push_back(MeasBasis::rotated(matrix_from_json(m.at("u"))));
      }
    }
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("circuit file: ") + e.what());
  }
  c.validate();
  return c;
}

json noise_to_json(const NoiseModel& nm) {
  json j;
  json sites = json::array();
  for (const NoiseRule& r : nm.rules) {
    json s;
    s["kind"] = site_kind_name(r.kind);
    if (r.ordinal) s["index"] = *r.ordinal;
    if (r.qubits) s["qubits"] = *r.qubits;
    json ch;
    ch["name"] = r.channel.name;
    if (!r.channel.params.empty()) ch["params"] = r.channel.params;
    if (!r.channel.matrices.empty()) {
      json ms = json::array();
      for (const Mat& m : r.channel.matrices) ms.push_back(matrix_to_json(m));
      ch["matrices"] = std::move(ms);
    }
    if (r.channel.ancillas) ch["ancillas"] = r.channel.ancillas;
    s["channel"] = std::move(ch);
    sites.push_back(std::move(s));
  }
  j["sites"] = std::move(sites);
  if (nm.n3_declared) j["n3"] = true;
  if (!nm.n3_groups.empty()) j["n3_groups"] = nm.n3_groups;
  return j;
}

NoiseModel noise_from_json(const json& j) {
  NoiseModel nm;
  try {
    size_t idx = 0;
    for (const json& s : j.value("sites", json::array())) {
      NoiseRule r;
      r.kind = site_kind_from_name(s.at("kind").get<std::string>());
      if (s.contains("index")) r.ordinal = s.at("index").get<int>();
      if (s.contains("qubits")) r.qubits = s.at("qubits").get<std::vector<int>>();
      const json& ch = s.at("channel");
      r.channel.name = ch.at("name").get<std::string>();
      if (ch.contains("params")) r.channel.params = ch.at("params").get<std::vector<double>>();
      if (ch.contains("matrices"))
        for (const json& m : ch.at("matrices")) r.channel.matrices.push_back(matrix_from_json(m));
      r.channel.ancillas = ch.value("ancillas", 0);
      nm.rules.push_back(std::move(r));
      ++idx;
    }
    (void)idx;
    nm.n3_declared = j.value("n3", false);
    if (j.contains("n3_groups")) {
      nm.n3_groups = j.at("n3_groups").get<std::vector<std::vector<int>>>();
      nm.n3_declared = true;
    }
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("noise file: ") + e.what());
  }
  return nm;
}

namespace {

json parse_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw std::invalid_argument(path.string() + ": " + e.what());
  }
  return j;
}

}  // namespace

Circuit load_circuit(const std::filesystem::path& path) { return circuit_from_json(parse_file(path)); }

NoiseModel load_noise(const std::filesystem::path& path) { return noise_from_json(parse_file(path)); }

RunManifest manifest_from_json(const json& j, const std::filesystem::path& base_dir) {
  RunManifest m;
  try {
    auto resolve = [&](const std::string& p) { return p.empty() ? std::filesystem::path() : base_dir / p; };
    m.circuit = resolve(j.value("circuit", ""));
    m.noise = resolve(j.value("noise", ""));
    m.noise_b = resolve(j.value("noise_b", ""));
    m.config.theta = j.value("theta", 0.2);
    m.config.alpha = j.value("alpha", 0.95);
    m.config.k = j.value("k", 0.5);
    m.config.protocol = protocol_from_name(j.value("protocol", "tau"));
    m.config.seed = j.value("seed", uint64_t(0));
    m.config.jobs = j.value("jobs", 1);
    m.out = resolve(j.value("out", "."));
    m.runs = j.value("runs", 100);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("manifest: ") + e.what());
  }
  return m;
}

RunManifest load_manifest(const std::filesystem::path& path) {
  return manifest_from_json(parse_file(path), path.parent_path());
}

namespace {

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

json report_to_json(const AccreditationReport& rep) {
  json j;
  j["target_sample"] = rep.target_sample;
  j["bound"] = rep.bound;
  j["trap_result"] = rep.trap_result;
  j["n_traps"] = rep.n_traps;
  j["trap_failures"] = rep.trap_failures;
  j["theta"] = rep.config.theta;
  j["alpha"] = rep.config.alpha;
  j["k"] = rep.config.k;
  j["protocol"] = protocol_name(rep.config.protocol);
  j["seed"] = rep.config.seed;
  return j;
}

std::string report_csv(const AccreditationReport& rep) {
  std::ostringstream out;
  out << "index,order_position,outcome,expected,pass\n";
  for (const TrapRecord& t : rep.traps)
    out << t.index << "," << t.order_pos << "," << t.outcome << "," << t.expected << ","
        << (t.pass ? 1 : 0) << "\n";
  return out.str();
}

json verdict_to_json(const SoundnessVerdict& v) {
  json j;
  j["runs"] = v.runs;
  j["violations"] = v.violations;
  j["true_nu"] = v.true_nu;
  j["mean_bound"] = v.mean_bound;
  j["alpha"] = v.alpha;
  return j;
}

std::string verdict_csv(const SoundnessVerdict& v) {
  std::ostringstream out;
  out << "run,bound,true_nu\n";
  for (size_t i = 0; i < v.records.size(); ++i)
    out << i << "," << fmt_double(v.records[i].first) << "," << fmt_double(v.records[i].second) << "\n";
  return out.str();
}

json robustness_to_json(const RobustnessCheck& r) {
  json j;
  j["lhs_tvd"] = r.lhs;
  j["rhs_bound"] = r.rhs;
  j["ok"] = r.ok;
  j["noisy_sites"] = r.noisy_sites;
  j["max_site_distance"] = r.max_site_distance;
  if (!r.ok) j["note"] = "inconclusive: the bound side is a lower-bound estimate";
  return j;
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path.string());
  out << text;
}

}  // namespace qacc
