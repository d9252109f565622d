#include "sakai/cli.hpp"

#include "sakai/basepoints.hpp"
#include "sakai/error.hpp"
#include "sakai/lattice.hpp"
#include "sakai/opcore.hpp"
#include "sakai/painleve.hpp"
#include "sakai/report.hpp"
#include "sakai/weyl_maps.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <sstream>

namespace sakai::cli {

namespace {

// Raised for bad flag values; maps to exit code 2.
struct UsageError : Error {
  using Error::Error;
};

Rational parse_flag(const std::optional<std::string>& text, const char* fallback, const char* flag) {
  try {
    return parse_rational(text ? *text : fallback);
  } catch (const ParseError& e) {
    throw UsageError(std::string("--") + flag + ": " + e.what());
  }
}

std::vector<opcore::WeightParams> parameter_sets(const RunConfig& c) {
  if (!c.alpha && !c.beta && !c.s) return opcore::acceptance_parameter_sets(c.digits);
  return {{parse_flag(c.alpha, "1.5", "alpha"), parse_flag(c.beta, "0.5", "beta"), parse_flag(c.s, "1", "s"),
           c.digits}};
}

opcore::WeightParams single_set(const RunConfig& c) {
  return {parse_flag(c.alpha, "1.5", "alpha"), parse_flag(c.beta, "0.5", "beta"), parse_flag(c.s, "1", "s"),
          c.digits};
}

void check_weight(const opcore::WeightParams& p, bool ladder) {
  try {
    p.validate();
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  if (ladder && (p.alpha <= 0 || p.s <= 0))
    throw UsageError("this command needs alpha > 0 and s > 0");
}

void check_common(const RunConfig& c) {
  if (c.n_max < 1) throw UsageError("--nmax must be at least 1");
  if (c.digits < 10) throw UsageError("--prec must be at least 10");
  if (c.trials < 1) throw UsageError("--trials must be at least 1");
}

VerificationReport combined(const std::string& name, std::optional<std::uint64_t> seed,
                            const std::vector<VerificationReport>& parts) {
  VerificationReport r(name, seed);
  for (const auto& p : parts) r.merge(p);
  return r;
}

VerificationReport lattice_report(const RunConfig&) { return lattice::lattice_suite(); }

VerificationReport weyl_report(const RunConfig& c) { return weyl::check_relations(c.seed, c.trials); }

VerificationReport ladder_suite_report(const RunConfig& c) {
  std::vector<VerificationReport> parts;
  for (const auto& p : parameter_sets(c)) {
    check_weight(p, true);
    parts.push_back(opcore::ladder_report(p, c.n_max));
    parts.push_back(opcore::precision_scaling(p, c.n_max, c.digits, c.digits + 20));
  }
  return combined("ladder", std::nullopt, parts);
}

VerificationReport equivalence_report(const RunConfig& c) {
  std::vector<VerificationReport> parts;
  for (const auto& p : parameter_sets(c)) {
    check_weight(p, true);
    parts.push_back(painleve::verify_equivalence(p.alpha, p.beta, p.s, c.n_max, c.digits));
  }
  parts.push_back(painleve::check_coordinate_round_trip(c.seed, c.trials));
  parts.push_back(painleve::check_standard_step(c.seed, c.trials));
  return combined("equivalence", c.seed, parts);
}

VerificationReport basepoints_report(const RunConfig&) {
  return combined("basepoints", std::nullopt,
                  {painleve::verify_base_points(painleve::default_standard_params()),
                   painleve::verify_base_points(painleve::default_recurrence_params())});
}

void emit(const std::vector<VerificationReport>& reports, bool single, const RunConfig& c, std::ostream& out) {
  if (c.format == Format::csv)
    out << to_csv(reports);
  else
    out << (single ? to_json(reports.front()) : to_json(reports)) << "\n";
}

void emit(const Table& t, const RunConfig& c, std::ostream& out) {
  if (c.format == Format::csv)
    out << to_csv(t);
  else
    out << to_json(t) << "\n";
}

// Runs `body`, translating exceptions into exit codes.
int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SingularStep& e) {
    err << "singular step at index " << e.index() << ": " << e.what() << "\n";
    return kExitFail;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFail;
  }
}

// The last few digits carry roundoff.
std::string real_cell(const Real& x, unsigned digits) { return to_decimal_full(x, static_cast<int>(digits) - 3); }

std::array<Rational, 4> parse_a(const std::string& text) {
  std::array<Rational, 4> a;
  std::stringstream ss(text);
  std::string item;
  std::size_t i = 0;
  while (std::getline(ss, item, ',')) {
    if (i == 4) throw UsageError("--a needs exactly four comma-separated values");
    a[i++] = parse_flag(item, "", "a");
  }
  if (i != 4) throw UsageError("--a needs exactly four comma-separated values");
  return a;
}

Table coeffs_table(const RunConfig& c) {
  opcore::WeightParams p = single_set(c);
  check_weight(p, false);
  opcore::RecurrenceData rec = opcore::recurrence_coefficients(p, c.n_max);
  PrecisionScope scope(c.digits);
  Table t{"coeffs", {"n", "h", "alpha", "beta", "p"}, {}};
  for (int n = 0; n <= c.n_max; ++n)
    t.rows.push_back({std::to_string(n), real_cell(rec.h[n], c.digits), real_cell(rec.alpha[n], c.digits),
                      real_cell(rec.beta[n], c.digits), real_cell(rec.p[n], c.digits)});
  return t;
}

Table ladder_table(const RunConfig& c) {
  opcore::WeightParams p = single_set(c);
  check_weight(p, true);
  opcore::LadderData lad = opcore::ladder_quantities(p, c.n_max);
  opcore::XYSequence seq = opcore::xy_sequence(p, lad, c.n_max);
  PrecisionScope scope(c.digits);
  Table t{"ladder", {"n", "R", "r", "x", "y"}, {}};
  for (int n = 0; n <= c.n_max; ++n)
    t.rows.push_back({std::to_string(n), real_cell(lad.R[n], c.digits), real_cell(lad.r[n], c.digits),
                      n == 0 ? "" : real_cell(seq.x[n], c.digits), real_cell(seq.y[n], c.digits)});
  return t;
}

Table orbit_rec_table(const RunConfig& c) {
  opcore::WeightParams p = single_set(c);
  check_weight(p, true);
  opcore::XYSequence seq = opcore::xy_sequence(p, c.n_max);
  PrecisionScope scope(c.digits);
  const Real s = to_real(p.s);
  Table t{"orbit-rec", {"n", "x", "y", "f", "g", "t", "a0", "a1", "a2", "a3"}, {}};
  for (long n = 1; n <= c.n_max; ++n) {
    auto fg = painleve::to_fg<Real>(seq.x[n], seq.y[n], n, s);
    auto a = painleve::recurrence_root_variables<Rational>(n, p.alpha, p.beta);
    t.rows.push_back({std::to_string(n), real_cell(seq.x[n], c.digits), real_cell(seq.y[n], c.digits),
                      real_cell(fg.f, c.digits), real_cell(fg.g, c.digits), to_string(-p.s), to_string(a[0]),
                      to_string(a[1]), to_string(a[2]), to_string(a[3])});
  }
  return t;
}

Table orbit_std_table(const RunConfig& c) {
  if (!c.a || !c.t || !c.f || !c.g) throw UsageError("orbit-std needs --a, --t, --f and --g");
  painleve::StdOrbitState<Rational> st{parse_a(*c.a), parse_flag(c.t, "", "t"), parse_flag(c.f, "", "f"),
                                       parse_flag(c.g, "", "g"), 0};
  Table t{"orbit-std", {"n", "a0", "a1", "a2", "a3", "t", "f", "g"}, {}};
  auto row = [&](const painleve::StdOrbitState<Rational>& s) {
    t.rows.push_back({std::to_string(s.step_index), to_string(s.a[0]), to_string(s.a[1]), to_string(s.a[2]),
                      to_string(s.a[3]), to_string(s.t), to_string(s.f), to_string(s.g)});
  };
  row(st);
  for (int k = 0; k < c.n_max; ++k) {
    st = painleve::std_step_forward(st);
    row(st);
  }
  return t;
}

bool recurrence_surface(const RunConfig& c) {
  if (c.surface == "standard") return false;
  if (c.surface == "recurrence") return true;
  throw UsageError("--surface must be standard or recurrence");
}

Table roots_table(const RunConfig& c) {
  const bool rec = recurrence_surface(c);
  lattice::RootSystemData data = rec ? lattice::recurrence_roots() : lattice::standard_roots();
  Table t{rec ? "roots recurrence" : "roots standard", {"kind", "label", "class"}, {}};
  for (std::size_t i = 0; i < data.surface.size(); ++i)
    t.rows.push_back({"surface", "delta" + std::to_string(i), data.surface[i].str()});
  for (std::size_t i = 0; i < data.symmetry.size(); ++i)
    t.rows.push_back({"symmetry", "alpha" + std::to_string(i), data.symmetry[i].str()});
  if (rec) {
    auto pre = lattice::recurrence_preliminary_symmetry_roots();
    for (std::size_t i = 0; i < pre.size(); ++i)
      t.rows.push_back({"symmetry (preliminary)", "alpha" + std::to_string(i), pre[i].str()});
  }
  t.rows.push_back({"anticanonical", "-K", lattice::anticanonical(data.basis).str()});
  return t;
}

std::string chart_name(painleve::AffineChart chart) {
  switch (chart) {
    case painleve::AffineChart::xy:
      return "xy";
    case painleve::AffineChart::Xy:
      return "Xy";
    case painleve::AffineChart::xY:
      return "xY";
    case painleve::AffineChart::XY:
      return "XY";
  }
  return "?";
}

Table basepoints_table(const RunConfig& c) {
  const bool rec = recurrence_surface(c);
  std::vector<painleve::BasePointSpec> specs;
  if (rec) {
    painleve::RecurrenceParams p = painleve::default_recurrence_params();
    if (c.alpha) p.alpha = parse_flag(c.alpha, "", "alpha");
    if (c.beta) p.beta = parse_flag(c.beta, "", "beta");
    if (c.s) p.s = parse_flag(c.s, "", "s");
    specs = painleve::recurrence_base_points(p);
  } else {
    painleve::StandardParams p = painleve::default_standard_params();
    if (c.a) p.a = parse_a(*c.a);
    if (c.t) p.t = parse_flag(c.t, "", "t");
    specs = painleve::standard_base_points(p);
  }
  Table t{rec ? "basepoints recurrence" : "basepoints standard",
          {"label", "predecessor", "chart", "blowups", "coordinates", "half_map"}, {}};
  for (const auto& s : specs)
    t.rows.push_back({s.label, s.predecessor, chart_name(s.chart), std::to_string(s.cascade.size()), s.description,
                      std::to_string(s.half_map)});
  return t;
}

std::string vector_cell(const std::optional<std::array<std::int64_t, 4>>& v) {
  if (!v) return "not a translation";
  std::string out = "<";
  for (std::size_t i = 0; i < 4; ++i) out += (i ? "," : "") + std::to_string((*v)[i]);
  return out + ">";
}

Table words_table(const RunConfig&) {
  Table t{"words", {"name", "word", "order", "root_variable_shift", "symmetry_root_translation"}, {}};
  const auto std_roots = lattice::standard_roots().symmetry;
  const std::span<const lattice::DivisorClass, 4> roots(std_roots);
  GeneratorWord sw = standard_step_word(), rw = recurrence_step_word();
  t.rows.push_back({"standard step", sw.str(), "rightmost first", "(1,-1,1,-1)",
                    vector_cell(lattice::translation_vector(lattice::word_map(sw), roots))});
  t.rows.push_back({"recurrence step", rw.str(), "rightmost first", "(0,1,0,-1)",
                    vector_cell(lattice::translation_vector(lattice::word_map(rw), roots))});
  const auto fin = lattice::recurrence_roots().symmetry;
  const auto pre = lattice::recurrence_preliminary_symmetry_roots();
  t.rows.push_back({"forward map on Pic, final roots", "phi*", "", "",
                    vector_cell(lattice::translation_vector(lattice::phi_star(),
                                                            std::span<const lattice::DivisorClass, 4>(fin)))});
  t.rows.push_back({"forward map on Pic, preliminary roots", "phi*", "", "",
                    vector_cell(lattice::translation_vector(lattice::phi_star(),
                                                            std::span<const lattice::DivisorClass, 4>(pre)))});
  return t;
}

Table rootvars_table(const RunConfig&) {
  return {"rootvars",
          {"surface", "a0", "a1", "a2", "a3", "t", "step"},
          {{"standard", "a0", "a1", "a2", "a3", "t", "a + (1,-1,1,-1)"},
           {"recurrence", "n+beta", "-n", "n+alpha", "1-n-alpha-beta", "-s", "n -> n+1"}}};
}

}  // namespace

std::string to_json(const Table& table, int indent) {
  nlohmann::ordered_json j;
  j["table"] = table.name;
  j["columns"] = table.columns;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json r;
    for (std::size_t i = 0; i < table.columns.size(); ++i) r[table.columns[i]] = i < row.size() ? row[i] : "";
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  return j.dump(indent);
}

std::string to_csv(const Table& table) {
  auto quote = [](const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return q + "\"";
  };
  std::ostringstream os;
  for (std::size_t i = 0; i < table.columns.size(); ++i) os << (i ? "," : "") << quote(table.columns[i]);
  os << "\n";
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << quote(row[i]);
    os << "\n";
  }
  return os.str();
}

int run_suite(const std::string& name, const RunConfig& config, std::ostream& out, std::ostream& err) {
  using Suite = std::function<VerificationReport(const RunConfig&)>;
  const std::vector<std::pair<std::string, Suite>> suites{{"lattice", lattice_report},
                                                          {"weyl", weyl_report},
                                                          {"ladder", ladder_suite_report},
                                                          {"equivalence", equivalence_report},
                                                          {"basepoints", basepoints_report}};
  return guarded(err, [&] {
    check_common(config);
    std::vector<VerificationReport> reports;
    for (const auto& [suite_name, suite] : suites)
      if (name == "all" || name == suite_name) reports.push_back(suite(config));
    if (reports.empty()) throw UsageError("unknown suite '" + name + "'");
    emit(reports, name != "all", config, out);
    for (const auto& r : reports)
      if (!r.passed()) return kExitFail;
    return kExitPass;
  });
}

int compute(const std::string& kind, const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    check_common(config);
    Table t;
    if (kind == "coeffs")
      t = coeffs_table(config);
    else if (kind == "ladder")
      t = ladder_table(config);
    else if (kind == "orbit-rec")
      t = orbit_rec_table(config);
    else if (kind == "orbit-std")
      t = orbit_std_table(config);
    else
      throw UsageError("unknown table '" + kind + "'");
    emit(t, config, out);
    return kExitPass;
  });
}

int describe(const std::string& topic, const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    Table t;
    if (topic == "roots")
      t = roots_table(config);
    else if (topic == "basepoints")
      t = basepoints_table(config);
    else if (topic == "words")
      t = words_table(config);
    else if (topic == "rootvars")
      t = rootvars_table(config);
    else
      throw UsageError("unknown topic '" + topic + "'");
    emit(t, config, out);
    return kExitPass;
  });
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sakai surface geometry, discrete Painleve dynamics and Jacobi-type orthogonal polynomials"};
  app.require_subcommand(1);
  RunConfig config;
  std::string target, format = "json", out_path;
  std::string alpha, beta, s, a, t, f, g;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--alpha", alpha, "weight exponent at 0 (decimal or p/q)");
    sub->add_option("--beta", beta, "weight exponent at 1");
    sub->add_option("--s", s, "time parameter");
    sub->add_option("--nmax", config.n_max, "largest index")->capture_default_str();
    sub->add_option("--prec", config.digits, "working precision in decimal digits")->capture_default_str();
    sub->add_option("--seed", config.seed, "random seed")->capture_default_str();
    sub->add_option("--trials", config.trials, "random samples per relation")->capture_default_str();
    sub->add_option("--out", out_path, "write output to this file");
    sub->add_option("--format", format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    sub->add_option("--surface", config.surface, "standard or recurrence")
        ->check(CLI::IsMember({"standard", "recurrence"}))
        ->capture_default_str();
    sub->add_option("--a", a, "root variables a0,a1,a2,a3");
    sub->add_option("--t", t, "time t of the standard equation");
    sub->add_option("--f", f, "initial f");
    sub->add_option("--g", g, "initial g");
  };

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", target, "lattice, weyl, ladder, equivalence, basepoints or all")
      ->required()
      ->check(CLI::IsMember({"lattice", "weyl", "ladder", "equivalence", "basepoints", "all"}));
  add_common(verify);
  CLI::App* comp = app.add_subcommand("compute", "emit a table of computed values");
  comp->add_option("kind", target, "coeffs, ladder, orbit-std or orbit-rec")
      ->required()
      ->check(CLI::IsMember({"coeffs", "ladder", "orbit-std", "orbit-rec"}));
  add_common(comp);
  CLI::App* desc = app.add_subcommand("describe", "print transcribed data");
  desc->add_option("topic", target, "roots, basepoints, words or rootvars")
      ->required()
      ->check(CLI::IsMember({"roots", "basepoints", "words", "rootvars"}));
  add_common(desc);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  for (CLI::App* sub : {verify, comp, desc}) {
    auto set = [&](const char* flag, const std::string& value, std::optional<std::string>& slot) {
      if (sub->count(flag) > 0) slot = value;
    };
    set("--alpha", alpha, config.alpha);
    set("--beta", beta, config.beta);
    set("--s", s, config.s);
    set("--a", a, config.a);
    set("--t", t, config.t);
    set("--f", f, config.f);
    set("--g", g, config.g);
  }
  config.format = format == "csv" ? Format::csv : Format::json;

  std::ofstream file;
  std::ostream* sink = &out;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) {
      err << "usage error: cannot open " << out_path << "\n";
      return kExitUsage;
    }
    sink = &file;
  }
  if (verify->parsed()) return run_suite(target, config, *sink, err);
  if (comp->parsed()) return compute(target, config, *sink, err);
  return describe(target, config, *sink, err);
}

}  // namespace sakai::cli
