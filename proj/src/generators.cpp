#include "sakai/generators.hpp"

#include "sakai/error.hpp"

#include <algorithm>
#include <sstream>

namespace sakai {

std::string_view name(Generator g) {
  switch (g) {
    case Generator::w0: return "w0";
    case Generator::w1: return "w1";
    case Generator::w2: return "w2";
    case Generator::w3: return "w3";
    case Generator::s1: return "s1";
    case Generator::s2: return "s2";
    case Generator::s3: return "s3";
  }
  return "?";
}

Generator parse_generator(std::string_view text) {
  static constexpr Generator all[] = {Generator::w0, Generator::w1, Generator::w2, Generator::w3,
                                      Generator::s1, Generator::s2, Generator::s3};
  std::string s(text);
  if (s.rfind("sigma", 0) == 0) s = "s" + s.substr(5);
  for (Generator g : all)
    if (name(g) == s) return g;
  throw ParseError("unknown generator '" + std::string(text) + "'");
}

GeneratorWord::GeneratorWord(std::vector<Generator> letters, WordOrder order)
    : letters_(std::move(letters)), order_(order) {
  if (letters_.empty()) throw ParseError("generator word must be non-empty");
}

GeneratorWord GeneratorWord::parse(std::string_view text, WordOrder order) {
  std::istringstream in{std::string(text)};
  std::vector<Generator> letters;
  for (std::string token; in >> token;) letters.push_back(parse_generator(token));
  return GeneratorWord(std::move(letters), order);
}

std::vector<Generator> GeneratorWord::application_sequence() const {
  std::vector<Generator> seq = letters_;
  if (order_ == WordOrder::RightmostFirst) std::reverse(seq.begin(), seq.end());
  return seq;
}

std::string GeneratorWord::str() const {
  std::string out;
  for (Generator g : letters_) {
    if (!out.empty()) out += ' ';
    out += name(g);
  }
  return out;
}

GeneratorWord standard_step_word() { return GeneratorWord::parse("s3 s2 w3 w1 w2 w0"); }

GeneratorWord recurrence_step_word() { return GeneratorWord::parse("s3 s2 w1 w2 w0 w1"); }

}  // namespace sakai
