#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace sakai {

/// Generators of the extended affine Weyl group of type A3(1):
/// reflections w0..w3 and diagram automorphisms s1..s3.
enum class Generator { w0, w1, w2, w3, s1, s2, s3 };

std::string_view name(Generator g);
/// Accepts "w0".."w3", "s1".."s3" (also "sigma1".."sigma3").
Generator parse_generator(std::string_view text);

/// How a written word acts. RightmostFirst: the word "a b c" means a(b(c(x))),
/// so c acts first. This is the order under which the written decompositions
/// reproduce the dynamics.
enum class WordOrder { RightmostFirst, LeftmostFirst };

/// Non-empty sequence of generators, stored in written order.
class GeneratorWord {
 public:
  GeneratorWord(std::vector<Generator> letters, WordOrder order = WordOrder::RightmostFirst);
  /// Whitespace-separated letters, e.g. "s3 s2 w3 w1 w2 w0".
  static GeneratorWord parse(std::string_view text, WordOrder order = WordOrder::RightmostFirst);

  const std::vector<Generator>& letters() const { return letters_; }
  WordOrder order() const { return order_; }
  /// Letters in the order they act.
  std::vector<Generator> application_sequence() const;
  std::string str() const;

 private:
  std::vector<Generator> letters_;
  WordOrder order_;
};

/// The standard dP step, s3 s2 w3 w1 w2 w0.
GeneratorWord standard_step_word();
/// The orthogonal-polynomial recurrence step, s3 s2 w1 w2 w0 w1.
GeneratorWord recurrence_step_word();

}  // namespace sakai
