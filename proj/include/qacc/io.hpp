#pragma once

#include <filesystem>

#include "qacc/accredit.hpp"
#include "qacc/noise.hpp"
#include "qacc/oracle.hpp"

#include <json.hpp>

namespace qacc {

using json = nlohmann::json;

json circuit_to_json(const Circuit& c);
Circuit circuit_from_json(const json& j);

json noise_to_json(const NoiseModel& nm);
NoiseModel noise_from_json(const json& j);

Circuit load_circuit(const std::filesystem::path& path);
NoiseModel load_noise(const std::filesystem::path& path);

// Run manifest consumed by the command line tools; flags override fields.
struct RunManifest {
  std::filesystem::path circuit;
  std::filesystem::path noise;       // empty = noiseless
  std::filesystem::path noise_b;     // second model, for robustness checks
  AccreditationConfig config;
  std::filesystem::path out = ".";
  int runs = 100;
};

RunManifest manifest_from_json(const json& j, const std::filesystem::path& base_dir);
RunManifest load_manifest(const std::filesystem::path& path);

json report_to_json(const AccreditationReport& rep);
std::string report_csv(const AccreditationReport& rep);

json verdict_to_json(const SoundnessVerdict& v);
std::string verdict_csv(const SoundnessVerdict& v);

json robustness_to_json(const RobustnessCheck& r);

void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace qacc
