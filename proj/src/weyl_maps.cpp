#include "sakai/weyl_maps.hpp"

#include "sakai/painleve.hpp"

#include <algorithm>
#include <optional>

namespace sakai::weyl {

ParamPointState random_state(std::mt19937_64& rng) {
  ParamPointState s;
  s.a[0] = random_rational(rng);
  s.a[1] = random_rational(rng);
  s.a[2] = random_rational(rng);
  s.a[3] = 1 - s.a[0] - s.a[1] - s.a[2];
  s.t = random_rational(rng);
  s.f = random_rational(rng);
  s.g = random_rational(rng);
  return s;
}

namespace {

constexpr std::size_t kMaxRejectionsPerTrial = 100;

Rational discrepancy(const ParamPointState& x, const ParamPointState& y) {
  Rational d = 0;
  auto upd = [&](const Rational& p, const Rational& q) { d = std::max<Rational>(d, abs(p - q)); };
  for (std::size_t i = 0; i < 4; ++i) upd(x.a[i], y.a[i]);
  upd(x.t, y.t);
  upd(x.f, y.f);
  upd(x.g, y.g);
  return d;
}

using Side = std::function<ParamPointState(const ParamPointState&)>;

struct Relation {
  std::string name;
  Side lhs;
  Side rhs;
};

class RelationRunner {
 public:
  RelationRunner(std::uint64_t seed, std::size_t trials, GeneratorAction<Rational> action)
      : rng_(seed), trials_(trials), action_(std::move(action)) {}

  Side word(std::string_view text) const {
    GeneratorWord w = GeneratorWord::parse(text);
    return [w, this](const ParamPointState& s) { return apply_word(w, s, action_); };
  }

  Side identity() const {
    return [](const ParamPointState& s) { return s; };
  }

  void run(VerificationReport& report, const Relation& rel) {
    Rational worst = 0;
    std::size_t done = 0, rejected = 0;
    while (done < trials_) {
      ParamPointState s = random_state(rng_);
      std::optional<ParamPointState> l, r;
      try {
        l = rel.lhs(s);
        r = rel.rhs(s);
      } catch (const IndeterminatePoint&) {
        if (++rejected > kMaxRejectionsPerTrial * trials_)
          throw SamplingExhausted("relation '" + rel.name + "': too many indeterminate samples");
        continue;
      } catch (const SingularStep&) {
        if (++rejected > kMaxRejectionsPerTrial * trials_)
          throw SamplingExhausted("relation '" + rel.name + "': too many singular samples");
        continue;
      }
      worst = std::max<Rational>(worst, discrepancy(*l, *r));
      ++done;
    }
    max_rejections_ = std::max(max_rejections_, rejected);
    report.add_exact(rel.name, worst, "rejected " + std::to_string(rejected));
    report.add_samples(done);
  }

  std::size_t max_rejections() const { return max_rejections_; }

 private:
  std::mt19937_64 rng_;
  std::size_t trials_;
  GeneratorAction<Rational> action_;
  std::size_t max_rejections_ = 0;
};

std::string w(int j) { return "w" + std::to_string(j); }

}  // namespace

VerificationReport check_relations(std::uint64_t seed, std::size_t trials,
                                   const GeneratorAction<Rational>& action) {
  if (trials == 0) throw IndexRange("check_relations needs at least one trial");
  VerificationReport report("weyl", seed);
  RelationRunner runner(seed, trials, action);

  for (int j = 0; j < 4; ++j)
    runner.run(report, {w(j) + "^2 = e", runner.word(w(j) + " " + w(j)), runner.identity()});

  // Square diagram 0-1-2-3-0.
  for (int j = 0; j < 4; ++j) {
    int k = (j + 1) % 4;
    std::string jk = w(j) + " " + w(k);
    runner.run(report, {"braid " + w(j) + w(k) + w(j) + " = " + w(k) + w(j) + w(k),
                        runner.word(jk + " " + w(j)), runner.word(w(k) + " " + w(j) + " " + w(k))});
  }
  for (auto [j, k] : {std::pair{0, 2}, std::pair{1, 3}})
    runner.run(report, {"commute " + w(j) + w(k) + " = " + w(k) + w(j),
                        runner.word(w(j) + " " + w(k)), runner.word(w(k) + " " + w(j))});

  for (const char* s : {"s1", "s2", "s3"})
    runner.run(report, {std::string(s) + "^2 = e", runner.word(std::string(s) + " " + s),
                        runner.identity()});
  runner.run(report, {"(s1 s2)^4 = e", runner.word("s1 s2 s1 s2 s1 s2 s1 s2"), runner.identity()});
  runner.run(report, {"(s1 s3)^4 = e", runner.word("s1 s3 s1 s3 s1 s3 s1 s3"), runner.identity()});
  runner.run(report, {"(s2 s3)^2 = e", runner.word("s2 s3 s2 s3"), runner.identity()});

  // Automorphisms permute the reflections: s w_j s = w_{pi(j)}.
  const std::pair<const char*, std::array<int, 4>> perms[] = {
      {"s1", {3, 2, 1, 0}}, {"s2", {2, 1, 0, 3}}, {"s3", {0, 3, 2, 1}}};
  for (const auto& [s, pi] : perms)
    for (int j = 0; j < 4; ++j)
      runner.run(report, {std::string(s) + " " + w(j) + " " + s + " = " + w(pi[j]),
                          runner.word(std::string(s) + " " + w(j) + " " + s), runner.word(w(pi[j]))});

  runner.run(report, {"w1 s3 s2 = s3 s2 w3", runner.word("w1 s3 s2"), runner.word("s3 s2 w3")});

  auto direct = [](const ParamPointState& s) {
    painleve::StdOrbitState<Rational> st{s.a, s.t, s.f, s.g, 0};
    auto next = painleve::std_step_forward(st);
    return ParamPointState{next.a, next.t, next.f, next.g};
  };
  runner.run(report, {"s3 s2 w3 w1 w2 w0 = direct dP step",
                      runner.word(standard_step_word().str()), direct});
  Side w1 = runner.word("w1");
  runner.run(report, {"s3 s2 w1 w2 w0 w1 = w1 (direct dP step) w1",
                      runner.word(recurrence_step_word().str()),
                      [&](const ParamPointState& s) { return w1(direct(w1(s))); }});

  // Normalization and the parameter translations of both words.
  auto a_shift = [](std::array<Rational, 4> d) {
    return [d](const ParamPointState& s) {
      ParamPointState out = s;
      for (std::size_t i = 0; i < 4; ++i) out.a[i] += d[i];
      return out;
    };
  };
  auto params_only = [](Side side) {
    return [side](const ParamPointState& s) {
      ParamPointState out = side(s);
      out.f = s.f;
      out.g = s.g;
      return out;
    };
  };
  runner.run(report, {"standard word translates a by (1,-1,1,-1), keeps t",
                      params_only(runner.word(standard_step_word().str())), a_shift({1, -1, 1, -1})});
  runner.run(report, {"recurrence word translates a by (0,1,0,-1), keeps t",
                      params_only(runner.word(recurrence_step_word().str())), a_shift({0, 1, 0, -1})});
  for (const char* g : {"w0", "w1", "w2", "w3", "s1", "s2", "s3"}) {
    Side side = runner.word(g);
    runner.run(report, {std::string(g) + " preserves a0+a1+a2+a3 = 1",
                        [side](const ParamPointState& s) {
                          ParamPointState out = side(s);
                          return ParamPointState{{out.a[0] + out.a[1] + out.a[2] + out.a[3], 0, 0, 0}, 0, 0, 0};
                        },
                        [](const ParamPointState&) { return ParamPointState{{1, 0, 0, 0}, 0, 0, 0}; }});
  }

  report.add_exact("denominator rejections recorded", true,
                   "worst rejection count " + std::to_string(runner.max_rejections()));
  return report;
}

}  // namespace sakai::weyl
