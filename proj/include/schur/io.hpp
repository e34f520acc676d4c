#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "schur/compare.hpp"
#include "schur/weyl.hpp"

namespace schur {

inline constexpr const char* kVersion = "0.1.0";

inline nlohmann::json to_json(const DecompositionTable& t) {
  nlohmann::json j;
  j["version"] = kVersion;
  j["p"] = t.p;
  j["n"] = t.n;
  j["r"] = t.r;
  nlohmann::json labels = nlohmann::json::array();
  for (const Partition& la : t.labels) labels.push_back(la.padded(t.n));
  j["labels"] = std::move(labels);
  j["matrix"] = t.entries;
  return j;
}

inline DecompositionTable table_from_json(const nlohmann::json& j) {
  DecompositionTable t;
  t.p = j.at("p").get<std::uint32_t>();
  t.n = j.at("n").get<int>();
  t.r = j.at("r").get<int>();
  for (const auto& parts : j.at("labels")) t.labels.emplace_back(parts.get<std::vector<int>>());
  t.entries = j.at("matrix").get<std::vector<std::vector<long long>>>();
  if (t.labels.size() != t.entries.size()) throw std::invalid_argument("label/matrix size mismatch");
  for (const auto& row : t.entries)
    if (row.size() != t.labels.size()) throw std::invalid_argument("ragged matrix row");
  return t;
}

inline nlohmann::json to_json(const Report& rep) {
  nlohmann::json j;
  j["version"] = kVersion;
  j["check"] = rep.check;
  j["parameters"] = rep.parameters;
  j["cells_tested"] = rep.cells_tested;
  j["mismatches"] = rep.mismatches;
  return j;
}

inline std::string to_csv(const DecompositionTable& t) {
  std::ostringstream os;
  os << "label";
  for (const Partition& mu : t.labels) os << ",\"" << mu.to_string(t.n) << "\"";
  os << "\n";
  for (size_t i = 0; i < t.labels.size(); ++i) {
    os << "\"" << t.labels[i].to_string(t.n) << "\"";
    for (long long e : t.entries[i]) os << "," << e;
    os << "\n";
  }
  return os.str();
}

/// Matrix with dots for zeros and row labels, matching the layout used for
/// the frozen reference tables.
inline std::string render_pretty(const DecompositionTable& t) {
  std::ostringstream os;
  size_t width = 0;
  for (const Partition& la : t.labels) width = std::max(width, la.to_string(t.n).size());
  for (size_t i = 0; i < t.labels.size(); ++i) {
    std::string label = t.labels[i].to_string(t.n);
    os << label << std::string(width - label.size() + 2, ' ');
    for (size_t k = 0; k < t.entries[i].size(); ++k) {
      if (k) os << ' ';
      if (t.entries[i][k] == 0)
        os << '.';
      else
        os << t.entries[i][k];
    }
    os << "\n";
  }
  return os.str();
}

/// Cache directory precedence: explicit argument, then SCHUR_CACHE_DIR, then
/// a dot directory under the working directory.
inline std::filesystem::path cache_directory(const std::string& flag = "") {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("SCHUR_CACHE_DIR"); env && *env) return env;
  return ".schur-cache";
}

inline std::filesystem::path cache_path(const std::filesystem::path& dir, std::uint32_t p, int n,
                                        int r) {
  std::ostringstream name;
  name << "decomp-v" << kVersion << "-p" << p << "-n" << n << "-r" << r << ".json";
  return dir / name.str();
}

/// Disk-backed decomposition matrix: reuses a cached table when the key
/// (version, p, n, r) matches, otherwise computes and stores it.  Corrupt or
/// mismatched cache entries are recomputed and overwritten.
inline DecompositionTable cached_decomposition_matrix(std::uint32_t p, int n, int r,
                                                      const std::string& dir_flag = "",
                                                      int jobs = 1) {
  std::filesystem::path dir = cache_directory(dir_flag);
  std::filesystem::path path = cache_path(dir, p, n, r);
  if (std::filesystem::exists(path)) {
    try {
      std::ifstream in(path);
      nlohmann::json j = nlohmann::json::parse(in);
      if (j.at("version").get<std::string>() == kVersion) {
        DecompositionTable t = table_from_json(j);
        if (t.p == p && t.n == n && t.r == r) return t;
      }
    } catch (const std::exception&) {
      // fall through to recompute
    }
  }
  DecompositionTable t = compute_decomposition_matrix(p, n, r, jobs);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (!ec) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    std::ofstream out(tmp);
    out << to_json(t).dump(2) << "\n";
    out.close();
    if (out) std::filesystem::rename(tmp, path, ec);
  }
  return t;
}

}  // namespace schur
