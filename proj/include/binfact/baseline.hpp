#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace binfact {

// baselines.json: { "<label>": [[n, normalized], ...], ... }
class Baselines {
 public:
  using Points = std::vector<std::pair<std::uint64_t, double>>;

  static Baselines load(const std::filesystem::path& path);  // throws IoError
  void save(const std::filesystem::path& path) const;

  bool contains(const std::string& label) const { return series_.count(label) != 0; }
  const Points& get(const std::string& label) const;
  void set(const std::string& label, Points points) { series_[label] = std::move(points); }
  const std::map<std::string, Points>& all() const noexcept { return series_; }

 private:
  std::map<std::string, Points> series_;
};

// Measured value may not exceed the recorded one by more than rel_tol
// (relative). Returns the first offending n, if any.
std::optional<std::uint64_t> find_regression(const Baselines::Points& recorded, const Baselines::Points& measured,
                                             double rel_tol);

}  // namespace binfact
