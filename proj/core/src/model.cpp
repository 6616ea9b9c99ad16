#include "hetcache/model.hpp"

#include <sstream>
#include <stdexcept>

#include "hetcache/rng.hpp"

namespace hetcache {

namespace {
constexpr std::uint64_t kLibraryStream = 0x11b7a37;
}

std::vector<std::string> validate_config(const SystemConfig& config) {
  std::vector<std::string> errors;
  if (config.num_files < 1) errors.push_back("N must be positive");
  if (config.file_size_bits < 1) errors.push_back("F must be positive");
  if (config.num_users < 1) errors.push_back("K must be positive");
  if (config.cache_capacities.size() != static_cast<std::size_t>(config.num_users)) {
    errors.push_back("mu must list exactly K capacities (got " +
                     std::to_string(config.cache_capacities.size()) + ", K=" +
                     std::to_string(config.num_users) + ")");
  }
  for (std::size_t k = 0; k < config.cache_capacities.size(); ++k) {
    const Rational& m = config.cache_capacities[k];
    if (m < 0)
      errors.push_back("M_" + std::to_string(k + 1) + " is negative");
    else if (m > config.num_files)
      errors.push_back("M_" + std::to_string(k + 1) + " exceeds N");
  }
  return errors;
}

SystemConfig require_valid(SystemConfig config) {
  auto errors = validate_config(config);
  if (!errors.empty()) {
    std::string joined = "invalid config:";
    for (const auto& e : errors) joined += " " + e + ";";
    throw std::invalid_argument(joined);
  }
  return config;
}

std::vector<std::string> validate_demand(const SystemConfig& config, const Demand& demand) {
  std::vector<std::string> errors;
  if (demand.requests.size() != static_cast<std::size_t>(config.num_users))
    errors.push_back("demand must list exactly K requests");
  for (std::size_t k = 0; k < demand.requests.size(); ++k) {
    if (demand.requests[k] < 0 || demand.requests[k] >= config.num_files)
      errors.push_back("d_" + std::to_string(k + 1) + " outside [1:N]");
  }
  return errors;
}

Demand parse_demand(std::string_view text) {
  Demand d;
  std::string item;
  std::stringstream ss{std::string(text)};
  while (std::getline(ss, item, ',')) {
    int v = std::stoi(item);
    if (v < 1) throw std::invalid_argument("demand entries are 1-based file indices");
    d.requests.push_back(v - 1);
  }
  return d;
}

std::string format_demand(const Demand& demand) {
  std::string out;
  for (std::size_t k = 0; k < demand.requests.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(demand.requests[k] + 1);
  }
  return out;
}

std::string format_label(const SubfileLabel& label) {
  std::string out = std::to_string(label.file + 1) + ":{";
  bool first = true;
  for (int k = 0; k < 32; ++k) {
    if (label.cached_by & (1u << k)) {
      if (!first) out += ',';
      out += std::to_string(k + 1);
      first = false;
    }
  }
  out += "}";
  return out;
}

Library generate_library(const SystemConfig& config, std::uint64_t seed) {
  Library lib;
  lib.files.reserve(config.num_files);
  for (int i = 0; i < config.num_files; ++i) {
    std::mt19937_64 rng(derive_seed(seed, kLibraryStream, static_cast<std::uint64_t>(i)));
    lib.files.push_back(BitVec::random(static_cast<std::size_t>(config.file_size_bits), rng));
  }
  return lib;
}

std::string serialize_config(const SystemConfig& config) {
  std::string out;
  out += "N=" + std::to_string(config.num_files) + "\n";
  out += "F=" + std::to_string(config.file_size_bits) + "\n";
  out += "K=" + std::to_string(config.num_users) + "\n";
  out += "mu=" + format_rational_list(config.cache_capacities) + "\n";
  return out;
}

SystemConfig parse_config(std::string_view text) {
  SystemConfig config;
  bool saw_n = false, saw_f = false, saw_k = false, saw_mu = false;
  std::stringstream ss{std::string(text)};
  std::string line;
  while (std::getline(ss, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config line without '=': " + line);
    std::string key = line.substr(0, eq);
    std::string value = line.substr(eq + 1);
    if (key == "N") {
      config.num_files = std::stoi(value);
      saw_n = true;
    } else if (key == "F") {
      config.file_size_bits = std::stoll(value);
      saw_f = true;
    } else if (key == "K") {
      config.num_users = std::stoi(value);
      saw_k = true;
    } else if (key == "mu") {
      config.cache_capacities = parse_rational_list(value);
      saw_mu = true;
    } else {
      throw std::invalid_argument("unknown config key: " + key);
    }
  }
  if (!(saw_n && saw_f && saw_k && saw_mu))
    throw std::invalid_argument("config requires N=, F=, K=, mu=");
  return config;
}

}  // namespace hetcache
