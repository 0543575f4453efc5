#include "binfact/baseline.hpp"

#include <fstream>

#include "binfact/error.hpp"
#include "json.hpp"

namespace binfact {

Baselines Baselines::load(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot open baseline " + path.string());
  Baselines out;
  try {
    const auto doc = nlohmann::json::parse(f);
    for (const auto& [label, points] : doc.items()) {
      Points pts;
      for (const auto& p : points) pts.emplace_back(p.at(0).get<std::uint64_t>(), p.at(1).get<double>());
      out.series_[label] = std::move(pts);
    }
  } catch (const nlohmann::json::exception& e) {
    throw IoError("malformed baseline " + path.string() + ": " + e.what());
  }
  return out;
}

void Baselines::save(const std::filesystem::path& path) const {
  nlohmann::json doc = nlohmann::json::object();
  for (const auto& [label, points] : series_) {
    auto arr = nlohmann::json::array();
    for (const auto& [n, v] : points) arr.push_back({n, v});
    doc[label] = std::move(arr);
  }
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  std::ofstream f(path, std::ios::trunc);
  if (!f) throw IoError("cannot write baseline " + path.string());
  f << doc.dump(2) << '\n';
}

const Baselines::Points& Baselines::get(const std::string& label) const {
  const auto it = series_.find(label);
  if (it == series_.end()) throw IoError("baseline has no series '" + label + "'");
  return it->second;
}

std::optional<std::uint64_t> find_regression(const Baselines::Points& recorded, const Baselines::Points& measured,
                                             double rel_tol) {
  for (const auto& [n, value] : measured) {
    bool found = false;
    for (const auto& [rn, rv] : recorded) {
      if (rn != n) continue;
      found = true;
      if (value > rv * (1.0 + rel_tol) + 1e-300) return n;
    }
    if (!found) return n;
  }
  return std::nullopt;
}

}  // namespace binfact
