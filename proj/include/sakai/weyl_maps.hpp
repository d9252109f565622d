#pragma once

// Birational action of the extended affine Weyl group on
// (a0, a1, a2, a3; t; f, g), with a0 + a1 + a2 + a3 = 1.

#include "sakai/error.hpp"
#include "sakai/generators.hpp"
#include "sakai/numeric.hpp"
#include "sakai/report.hpp"

#include <array>
#include <cstdint>
#include <functional>

namespace sakai::weyl {

template <class T>
struct BasicParamPointState {
  std::array<T, 4> a;
  T t;
  T f;
  T g;

  friend bool operator==(const BasicParamPointState&, const BasicParamPointState&) = default;
};

using ParamPointState = BasicParamPointState<Rational>;

namespace detail {

template <class T>
const T& nonzero(const T& d, const char* denominator, Generator gen) {
  if (is_zero(d)) throw IndeterminatePoint(denominator, std::string(name(gen)));
  return d;
}

}  // namespace detail

/// Image of `s` under one generator. Throws IndeterminatePoint naming the
/// vanishing denominator (g+t for w0, f for w1, g for w2, f-1 for w3, t for s1).
template <class T>
BasicParamPointState<T> apply_generator(Generator gen, const BasicParamPointState<T>& s) {
  using detail::nonzero;
  const auto& [a0, a1, a2, a3] = s.a;
  switch (gen) {
    case Generator::w0:
      return {{-a0, a0 + a1, a2, a0 + a3}, s.t, s.f + a0 / nonzero<T>(s.g + s.t, "g+t", gen), s.g};
    case Generator::w1:
      return {{a0 + a1, -a1, a1 + a2, a3}, s.t, s.f, s.g - a1 / nonzero(s.f, "f", gen)};
    case Generator::w2:
      return {{a0, a1 + a2, -a2, a2 + a3}, s.t, s.f + a2 / nonzero(s.g, "g", gen), s.g};
    case Generator::w3:
      return {{a0 + a3, a1, a2 + a3, -a3}, s.t, s.f, s.g - a3 / nonzero<T>(s.f - 1, "f-1", gen)};
    case Generator::s1:
      return {{a3, a2, a1, a0}, -s.t, -s.g / nonzero(s.t, "t", gen), s.f * s.t};
    case Generator::s2:
      return {{a2, a1, a0, a3}, -s.t, s.f, s.g + s.t};
    case Generator::s3:
      return {{a0, a3, a2, a1}, -s.t, 1 - s.f, -s.g};
  }
  throw ParseError("unknown generator");
}

template <class T>
using GeneratorAction =
    std::function<BasicParamPointState<T>(Generator, const BasicParamPointState<T>&)>;

/// Folds the word over `s` in its declared order. An indeterminacy is rethrown
/// with the prefix that had already been applied.
template <class T>
BasicParamPointState<T> apply_word(const GeneratorWord& word, BasicParamPointState<T> s,
                                   const GeneratorAction<T>& action = {}) {
  std::string applied;
  for (Generator g : word.application_sequence()) {
    try {
      s = action ? action(g, s) : apply_generator(g, s);
    } catch (const IndeterminatePoint& e) {
      throw IndeterminatePoint(e.denominator(), "word '" + word.str() + "' after applying [" +
                                                    applied + "], at " + std::string(name(g)));
    }
    if (!applied.empty()) applied += ' ';
    applied += name(g);
  }
  return s;
}

/// The word s3 s2 w3 w1 w2 w0.
template <class T>
BasicParamPointState<T> composed_standard_step(const BasicParamPointState<T>& s) {
  return apply_word(standard_step_word(), s);
}

/// The word s3 s2 w1 w2 w0 w1.
template <class T>
BasicParamPointState<T> composed_recurrence_step(const BasicParamPointState<T>& s) {
  return apply_word(recurrence_step_word(), s);
}

/// Random state with a0..a2, t, f, g having numerators in [-1000, 1000] and
/// denominators in [1, 1000]; a3 completes the normalization.
ParamPointState random_state(std::mt19937_64& rng);

/// Randomized identity test of the group relations and of the two word
/// decompositions. Each relation is checked at `trials` non-degenerate states;
/// states where either side is indeterminate are resampled up to a cap.
/// `action` replaces the generator table (used for mutation testing).
VerificationReport check_relations(std::uint64_t seed, std::size_t trials,
                                   const GeneratorAction<Rational>& action = {});

}  // namespace sakai::weyl
