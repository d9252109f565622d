#include "sakai/report.hpp"

#include <json.hpp>

#include <sstream>

namespace sakai {

VerificationReport::VerificationReport(std::string check, std::optional<std::uint64_t> seed)
    : check_(std::move(check)), seed_(seed) {}

void VerificationReport::note_residual(const std::string& text, const Real& value) {
  Real magnitude = abs(value);
  if (!worst_ || magnitude > *worst_) {
    worst_ = magnitude;
    max_residual_ = text;
  }
}

void VerificationReport::add_exact(std::string name, const Rational& discrepancy,
                                   std::string note) {
  Rational magnitude = abs(discrepancy);
  ReportItem item{std::move(name), magnitude == 0, "0", std::move(note)};
  if (magnitude != 0) {
    item.residual = to_decimal(to_real(magnitude));
    passed_ = false;
  }
  note_residual(item.residual, to_real(magnitude));
  details_.push_back(std::move(item));
}

void VerificationReport::add_exact(std::string name, bool ok, std::string note) {
  add_exact(std::move(name), ok ? Rational(0) : Rational(1), std::move(note));
}

void VerificationReport::add_residual(std::string name, const Real& residual,
                                      const Real& threshold, std::string note) {
  bool ok = abs(residual) <= threshold;
  ReportItem item{std::move(name), ok, to_decimal(abs(residual)), std::move(note)};
  if (!ok) passed_ = false;
  note_residual(item.residual, residual);
  details_.push_back(std::move(item));
}

void VerificationReport::merge(const VerificationReport& other) {
  for (const auto& item : other.details_) {
    ReportItem copy = item;
    copy.name = other.check_ + ": " + item.name;
    details_.push_back(std::move(copy));
  }
  if (other.worst_) note_residual(other.max_residual_, *other.worst_);
  passed_ = passed_ && other.passed_;
  samples_ += other.samples_;
}

double VerificationReport::max_residual_value() const {
  return worst_ ? worst_->convert_to<double>() : 0.0;
}

namespace {

nlohmann::ordered_json report_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["check"] = r.check();
  j["passed"] = r.passed();
  j["max_residual"] = r.max_residual();
  if (r.seed())
    j["seed"] = *r.seed();
  else
    j["seed"] = nullptr;
  j["samples"] = r.samples();
  auto details = nlohmann::ordered_json::array();
  for (const auto& item : r.details()) {
    nlohmann::ordered_json d;
    d["item"] = item.name;
    d["passed"] = item.passed;
    d["residual"] = item.residual;
    if (!item.note.empty()) d["note"] = item.note;
    details.push_back(std::move(d));
  }
  j["details"] = std::move(details);
  return j;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_json(const VerificationReport& report, int indent) {
  return report_json(report).dump(indent);
}

std::string to_json(const std::vector<VerificationReport>& reports, int indent) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) arr.push_back(report_json(r));
  return arr.dump(indent);
}

std::string to_csv(const std::vector<VerificationReport>& reports) {
  std::ostringstream os;
  os << "check,item,passed,residual,note\n";
  for (const auto& r : reports)
    for (const auto& item : r.details())
      os << csv_field(r.check()) << ',' << csv_field(item.name) << ','
         << (item.passed ? "true" : "false") << ',' << csv_field(item.residual) << ','
         << csv_field(item.note) << '\n';
  return os.str();
}

}  // namespace sakai
