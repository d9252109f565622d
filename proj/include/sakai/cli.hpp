#pragma once

#include "sakai/numeric.hpp"

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace sakai::cli {

enum class Format { json, csv };

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
  /// Weight parameters as decimal strings; unset means "the default sets".
  std::optional<std::string> alpha;
  std::optional<std::string> beta;
  std::optional<std::string> s;
  int n_max = 20;
  unsigned digits = 60;
  std::uint64_t seed = 7;
  std::size_t trials = 100;
  Format format = Format::json;
  std::string surface = "standard";
  /// Initial data for orbit-std: "a0,a1,a2,a3", t, f, g.
  std::optional<std::string> a;
  std::optional<std::string> t;
  std::optional<std::string> f;
  std::optional<std::string> g;
};

/// A rectangular table of strings, emitted by compute and describe.
struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

std::string to_json(const Table& table, int indent = 2);
std::string to_csv(const Table& table);

/// verify {lattice, weyl, ladder, equivalence, basepoints, all}.
int run_suite(const std::string& name, const RunConfig& config, std::ostream& out, std::ostream& err);
/// compute {coeffs, ladder, orbit-std, orbit-rec}.
int compute(const std::string& kind, const RunConfig& config, std::ostream& out, std::ostream& err);
/// describe {roots, basepoints, words, rootvars}.
int describe(const std::string& topic, const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches. Honors --out by writing there instead of `out`.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sakai::cli
