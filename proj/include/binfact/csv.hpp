#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "binfact/experiments.hpp"
#include "binfact/limits.hpp"

namespace binfact {

// Shortest decimal that round-trips to the same double.
std::string format_double(double v);

void emit_csv(const std::vector<SweepRow>& rows, const std::filesystem::path& path);
void emit_csv(const std::vector<CurveSample>& samples, const std::filesystem::path& path);
void emit_csv(const ResidualSeries& series, const std::filesystem::path& path);
void emit_csv(const std::vector<BcSweepRow>& rows, const std::filesystem::path& path);

std::string sweep_filename(std::uint64_t n);     // sweep_n<N>.csv
std::string bc_sweep_filename(std::uint64_t n);  // bc_sweep_n<N>.csv
std::string series_filename(const std::string& label);  // series_<label>.csv

}  // namespace binfact
