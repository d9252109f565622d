#pragma once

#include "sakai/numeric.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace sakai {

struct ReportItem {
  std::string name;
  bool passed = true;
  std::string residual = "0";
  std::string note;
};

/// Outcome of one named verification. `passed` holds iff every item passed;
/// exact items carry residual "0" when they pass.
class VerificationReport {
 public:
  VerificationReport() = default;
  explicit VerificationReport(std::string check, std::optional<std::uint64_t> seed = {});

  /// Exact check; `discrepancy` is zero iff it passes.
  void add_exact(std::string name, const Rational& discrepancy, std::string note = {});
  void add_exact(std::string name, bool ok, std::string note = {});
  /// Toleranced check: passes iff residual <= threshold.
  void add_residual(std::string name, const Real& residual, const Real& threshold,
                    std::string note = {});
  /// Folds another report in as items prefixed by its check name.
  void merge(const VerificationReport& other);
  void add_samples(std::size_t n) { samples_ += n; }

  const std::string& check() const { return check_; }
  bool passed() const { return passed_; }
  const std::string& max_residual() const { return max_residual_; }
  std::size_t samples() const { return samples_; }
  std::optional<std::uint64_t> seed() const { return seed_; }
  const std::vector<ReportItem>& details() const { return details_; }

  /// Largest residual as a double (for tests; may underflow to 0).
  double max_residual_value() const;
  const std::optional<Real>& worst_residual() const { return worst_; }

 private:
  void note_residual(const std::string& text, const Real& value);

  std::string check_;
  bool passed_ = true;
  std::string max_residual_ = "0";
  std::optional<Real> worst_;
  std::size_t samples_ = 0;
  std::optional<std::uint64_t> seed_;
  std::vector<ReportItem> details_;
};

std::string to_json(const VerificationReport& report, int indent = 2);
std::string to_json(const std::vector<VerificationReport>& reports, int indent = 2);
/// Header "check,item,passed,residual,note", one row per item.
std::string to_csv(const std::vector<VerificationReport>& reports);

}  // namespace sakai
