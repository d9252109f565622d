#include "sakai/lattice.hpp"

#include "sakai/error.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <limits>
#include <utility>

namespace sakai::lattice {

std::string_view basis_name(Basis b) { return b == Basis::XY ? "XY" : "FG"; }

namespace {

constexpr std::string_view kSymbols[2][3] = {{"Hx", "Hy", "F"}, {"Hf", "Hg", "E"}};

std::size_t basis_row(Basis b) { return b == Basis::XY ? 0 : 1; }

void require_same(Basis a, Basis b, const char* where) {
  if (a != b)
    throw BasisMismatch(std::string(where) + ": " + std::string(basis_name(a)) + " vs " +
                        std::string(basis_name(b)));
}

// Intersection form on basis vectors.
constexpr std::int64_t gram(std::size_t i, std::size_t j) {
  if (i < 2 && j < 2) return i == j ? 0 : 1;
  if (i < 2 || j < 2) return 0;
  return i == j ? -1 : 0;
}

}  // namespace

DivisorClass DivisorClass::zero(Basis basis) { return DivisorClass(basis, Coeffs{}); }

DivisorClass DivisorClass::unit(Basis basis, std::size_t index) {
  if (index >= kRank) throw IndexRange("basis index " + std::to_string(index) + " out of range");
  Coeffs c{};
  c[index] = 1;
  return DivisorClass(basis, c);
}

DivisorClass DivisorClass::parse(std::string_view text) {
  Coeffs c{};
  std::optional<Basis> basis;
  auto set_basis = [&](Basis b) {
    if (basis && *basis != b)
      throw BasisMismatch("mixed XY and FG symbols in '" + std::string(text) + "'");
    basis = b;
  };

  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  bool first = true;
  skip_ws();
  if (text.substr(i) == "0") return zero(Basis::XY);
  while (i < text.size()) {
    std::int64_t sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip_ws();
    } else if (!first) {
      throw ParseError("expected '+' or '-' in '" + std::string(text) + "'");
    }
    first = false;
    std::int64_t k = 1;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      k = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        k = 10 * k + (text[i++] - '0');
    }
    if (i >= text.size()) throw ParseError("dangling coefficient in '" + std::string(text) + "'");
    char head = text[i++];
    if (head == 'H') {
      if (i >= text.size()) throw ParseError("incomplete symbol in '" + std::string(text) + "'");
      char which = text[i++];
      switch (which) {
        case 'x': set_basis(Basis::XY); c[0] += sign * k; break;
        case 'y': set_basis(Basis::XY); c[1] += sign * k; break;
        case 'f': set_basis(Basis::FG); c[0] += sign * k; break;
        case 'g': set_basis(Basis::FG); c[1] += sign * k; break;
        default: throw ParseError("unknown line class in '" + std::string(text) + "'");
      }
    } else if (head == 'F' || head == 'E') {
      set_basis(head == 'F' ? Basis::XY : Basis::FG);
      // "F135" is shorthand for F1 + F3 + F5.
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        int idx = text[i++] - '0';
        if (idx < 1 || idx > 8)
          throw ParseError("exceptional index out of range in '" + std::string(text) + "'");
        c[1 + idx] += sign * k;
      }
      if (i == start) throw ParseError("missing index in '" + std::string(text) + "'");
    } else {
      throw ParseError("unexpected character in '" + std::string(text) + "'");
    }
    skip_ws();
  }
  if (!basis) throw ParseError("no symbols in '" + std::string(text) + "'");
  return DivisorClass(*basis, c);
}

std::string DivisorClass::str() const {
  std::string out;
  const auto& sym = kSymbols[basis_row(basis_)];
  for (std::size_t i = 0; i < kRank; ++i) {
    std::int64_t k = coeffs_[i];
    if (k == 0) continue;
    if (out.empty())
      out += k < 0 ? "-" : "";
    else
      out += k < 0 ? " - " : " + ";
    if (std::llabs(k) != 1) out += std::to_string(std::llabs(k));
    out += i < 2 ? std::string(sym[i]) : std::string(sym[2]) + std::to_string(i - 1);
  }
  return out.empty() ? "0" : out;
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& other) {
  require_same(basis_, other.basis_, "add");
  for (std::size_t i = 0; i < kRank; ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& other) {
  require_same(basis_, other.basis_, "subtract");
  for (std::size_t i = 0; i < kRank; ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

DivisorClass operator*(std::int64_t k, DivisorClass a) {
  for (auto& x : a.coeffs_) x *= k;
  return a;
}

std::int64_t intersect(const DivisorClass& a, const DivisorClass& b) {
  require_same(a.basis(), b.basis(), "intersect");
  std::int64_t sum = a[0] * b[1] + a[1] * b[0];
  for (std::size_t i = 2; i < kRank; ++i) sum -= a[i] * b[i];
  return sum;
}

DivisorClass reflect(const DivisorClass& alpha, const DivisorClass& c) {
  if (intersect(alpha, alpha) != -2)
    throw InvalidRoot("reflection root " + alpha.str() + " has self-intersection " +
                      std::to_string(intersect(alpha, alpha)));
  return c + intersect(c, alpha) * alpha;
}

DivisorClass anticanonical(Basis basis) {
  Coeffs c;
  c.fill(-1);
  c[0] = c[1] = 2;
  return DivisorClass(basis, c);
}

// ---------------------------------------------------------------------------

LatticeMap::LatticeMap(Basis source, Basis target, const Matrix& m)
    : source_(source), target_(target), m_(m) {}

LatticeMap LatticeMap::identity(Basis basis) {
  Matrix m{};
  for (std::size_t i = 0; i < kRank; ++i) m[i][i] = 1;
  return LatticeMap(basis, basis, m);
}

LatticeMap LatticeMap::from_images(Basis source, std::span<const DivisorClass> images) {
  if (images.size() != kRank) throw IndexRange("need exactly ten basis images");
  Basis target = images.front().basis();
  Matrix m{};
  for (std::size_t j = 0; j < kRank; ++j) {
    require_same(target, images[j].basis(), "from_images");
    for (std::size_t i = 0; i < kRank; ++i) m[i][j] = images[j][i];
  }
  return LatticeMap(source, target, m);
}

DivisorClass LatticeMap::operator()(const DivisorClass& c) const {
  require_same(source_, c.basis(), "apply");
  Coeffs out{};
  for (std::size_t i = 0; i < kRank; ++i)
    for (std::size_t j = 0; j < kRank; ++j) out[i] += m_[i][j] * c[j];
  return DivisorClass(target_, out);
}

DivisorClass LatticeMap::image_of_basis_vector(std::size_t j) const {
  return (*this)(DivisorClass::unit(source_, j));
}

bool LatticeMap::is_isometry() const {
  for (std::size_t i = 0; i < kRank; ++i)
    for (std::size_t j = i; j < kRank; ++j)
      if (intersect(image_of_basis_vector(i), image_of_basis_vector(j)) != gram(i, j)) return false;
  return true;
}

LatticeMap LatticeMap::isometry_inverse() const {
  if (!is_isometry()) throw InvalidRoot("isometry_inverse called on a non-isometry");
  Matrix inv{};
  for (std::size_t i = 0; i < kRank; ++i)
    for (std::size_t j = 0; j < kRank; ++j) {
      std::int64_t s = 0;
      for (std::size_t k = 0; k < kRank; ++k)
        for (std::size_t l = 0; l < kRank; ++l) s += gram(i, k) * m_[l][k] * gram(l, j);
      inv[i][j] = s;
    }
  return LatticeMap(target_, source_, inv);
}

std::int64_t LatticeMap::distance(const LatticeMap& other) const {
  if (source_ != other.source_ || target_ != other.target_)
    return std::numeric_limits<std::int64_t>::max();
  std::int64_t d = 0;
  for (std::size_t i = 0; i < kRank; ++i)
    for (std::size_t j = 0; j < kRank; ++j) d = std::max<std::int64_t>(d, std::llabs(m_[i][j] - other.m_[i][j]));
  return d;
}

LatticeMap operator*(const LatticeMap& a, const LatticeMap& b) {
  require_same(a.source(), b.target(), "compose");
  LatticeMap::Matrix m{};
  for (std::size_t i = 0; i < kRank; ++i)
    for (std::size_t k = 0; k < kRank; ++k) {
      std::int64_t aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < kRank; ++j) m[i][j] += aik * b(k, j);
    }
  return LatticeMap(b.source(), a.target(), m);
}

LatticeMap reflection_map(const DivisorClass& alpha) {
  std::vector<DivisorClass> images;
  images.reserve(kRank);
  for (std::size_t j = 0; j < kRank; ++j)
    images.push_back(reflect(alpha, DivisorClass::unit(alpha.basis(), j)));
  return LatticeMap::from_images(alpha.basis(), images);
}

LatticeMap compose(std::span<const LatticeMap> maps, WordOrder order) {
  if (maps.empty()) throw BasisMismatch("compose: empty word");
  if (order == WordOrder::RightmostFirst) {
    LatticeMap acc = maps.back();
    for (std::size_t i = maps.size() - 1; i-- > 0;) acc = maps[i] * acc;
    return acc;
  }
  LatticeMap acc = maps.front();
  for (std::size_t i = 1; i < maps.size(); ++i) acc = maps[i] * acc;
  return acc;
}

// ---------------------------------------------------------------------------
// Transcribed root data.

namespace {

DivisorClass P(std::string_view s) { return DivisorClass::parse(s); }

template <std::size_t N>
std::array<DivisorClass, N> parse_all(const std::array<std::string_view, N>& texts) {
  return [&]<std::size_t... I>(std::index_sequence<I...>) {
    return std::array<DivisorClass, N>{P(texts[I])...};
  }(std::make_index_sequence<N>{});
}

LatticeMap map_from_table(Basis source, const std::array<std::string_view, kRank>& images) {
  auto parsed = parse_all(images);
  return LatticeMap::from_images(source, parsed);
}

}  // namespace

RootSystemData standard_roots() {
  return {Basis::FG,
          parse_all<6>({"E1 - E2", "E3 - E4", "Hf - E1 - E3", "Hg - E5 - E7", "E5 - E6",
                        "E7 - E8"}),
          parse_all<4>({"Hg - E1 - E2", "Hf - E5 - E6", "Hg - E3 - E4", "Hf - E7 - E8"})};
}

RootSystemData recurrence_roots() {
  return {Basis::XY,
          parse_all<6>({"Hx - F1 - F2", "Hx - F3 - F4", "Hy - F5 - F6", "F6 - F7", "F5 - F6",
                        "F7 - F8"}),
          parse_all<4>({"Hy - F23", "F13 - Hy", "Hy - F14", "2Hx + Hy - F135678"})};
}

std::array<DivisorClass, 4> recurrence_preliminary_symmetry_roots() {
  return parse_all<4>({"F1 - F2", "Hy - F13", "F3 - F4", "2Hx + Hy - F135678"});
}

std::vector<std::pair<int, int>> d5_affine_edges() { return {{0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}}; }

std::array<std::array<int, 4>, 4> a3_affine_cartan() {
  return {{{2, -1, 0, -1}, {-1, 2, -1, 0}, {0, -1, 2, -1}, {-1, 0, -1, 2}}};
}

std::vector<std::vector<int>> cartan_matrix(std::span<const DivisorClass> roots) {
  std::vector<std::vector<int>> a(roots.size(), std::vector<int>(roots.size()));
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = 0; j < roots.size(); ++j) {
      auto jj = intersect(roots[j], roots[j]);
      if (jj == 0) throw InvalidRoot("isotropic root in Cartan matrix");
      a[i][j] = static_cast<int>(2 * intersect(roots[i], roots[j]) / jj);
    }
  return a;
}

std::vector<std::pair<int, int>> adjacency(std::span<const DivisorClass> roots) {
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j)
      if (intersect(roots[i], roots[j]) == 1)
        edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
  return edges;
}

LatticeMap generator_map(Generator g) {
  const auto roots = standard_roots();
  auto refl = [](std::string_view s) { return reflection_map(P(s)); };
  switch (g) {
    case Generator::w0: return reflection_map(roots.symmetry[0]);
    case Generator::w1: return reflection_map(roots.symmetry[1]);
    case Generator::w2: return reflection_map(roots.symmetry[2]);
    case Generator::w3: return reflection_map(roots.symmetry[3]);
    case Generator::s1: {
      const LatticeMap parts[] = {refl("E1 - E7"), refl("E2 - E8"), refl("E3 - E5"),
                                  refl("E4 - E6"), refl("Hf - Hg")};
      return compose(parts);
    }
    case Generator::s2: {
      const LatticeMap parts[] = {refl("E1 - E3"), refl("E2 - E4")};
      return compose(parts);
    }
    case Generator::s3: {
      const LatticeMap parts[] = {refl("E5 - E7"), refl("E6 - E8")};
      return compose(parts);
    }
  }
  throw ParseError("unknown generator");
}

LatticeMap word_map(const GeneratorWord& word) {
  std::vector<LatticeMap> maps;
  for (Generator g : word.letters()) maps.push_back(generator_map(g));
  return compose(maps, word.order());
}

std::optional<std::array<std::int64_t, 4>> translation_vector(
    const LatticeMap& m, std::span<const DivisorClass, 4> roots) {
  const DivisorClass delta = anticanonical(roots[0].basis());
  std::array<std::int64_t, 4> k{};
  for (std::size_t r = 0; r < 4; ++r) {
    DivisorClass d = m(roots[r]) - roots[r];
    // delta has coefficient 2 on the first line class.
    if (d[0] % 2 != 0) return std::nullopt;
    k[r] = d[0] / 2;
    if (d != k[r] * delta) return std::nullopt;
  }
  return k;
}

LatticeMap phi_star() {
  return map_from_table(Basis::XY, {
                                       "5Hx + 2Hy - F1234 - 2F5678",  // Hx
                                       "2Hx + Hy - F5678",            // Hy
                                       "2Hx + Hy - F25678",           // F1
                                       "2Hx + Hy - F15678",           // F2
                                       "2Hx + Hy - F45678",           // F3
                                       "2Hx + Hy - F35678",           // F4
                                       "Hx - F8",                     // F5
                                       "Hx - F7",                     // F6
                                       "Hx - F6",                     // F7
                                       "Hx - F5",                     // F8
                                   });
}

LatticeMap basis_change_final() {
  return map_from_table(Basis::XY, {
                                       "Hf + Hg - E5 - E6",
                                       "Hf + 2Hg - E1 - E3 - E5 - E6",
                                       "Hf + Hg - E1 - E5 - E6",
                                       "E2",
                                       "Hf + Hg - E3 - E5 - E6",
                                       "E4",
                                       "Hg - E6",
                                       "Hg - E5",
                                       "E7",
                                       "E8",
                                   });
}

LatticeMap basis_change_final_inverse() {
  return map_from_table(Basis::FG, {
                                       "2Hx + Hy - F1 - F3 - F5 - F6",
                                       "Hx + Hy - F1 - F3",
                                       "Hx - F1",
                                       "F2",
                                       "Hx - F3",
                                       "F4",
                                       "Hx + Hy - F1 - F3 - F6",
                                       "Hx + Hy - F1 - F3 - F5",
                                       "F7",
                                       "F8",
                                   });
}

LatticeMap basis_change_preliminary_inverse() {
  return map_from_table(Basis::FG, {
                                       "2Hx + Hy - F1356",
                                       "Hx",
                                       "Hx - F1",
                                       "F2",
                                       "Hx - F3",
                                       "F4",
                                       "Hx - F6",
                                       "Hx - F5",
                                       "F7",
                                       "F8",
                                   });
}

std::array<int, 6> induced_permutation(const LatticeMap& m, std::span<const DivisorClass, 6> from,
                                       std::span<const DivisorClass, 6> to) {
  std::array<int, 6> perm;
  for (std::size_t i = 0; i < 6; ++i) {
    DivisorClass img = m(from[i]);
    auto it = std::find(to.begin(), to.end(), img);
    perm[i] = it == to.end() ? -1 : static_cast<int>(it - to.begin());
  }
  return perm;
}

// ---------------------------------------------------------------------------

namespace {

std::string perm_str(const std::array<int, 6>& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + "]";
}

std::string vec_str(const std::optional<std::array<std::int64_t, 4>>& k) {
  if (!k) return "not a translation";
  return "<" + std::to_string((*k)[0]) + "," + std::to_string((*k)[1]) + "," +
         std::to_string((*k)[2]) + "," + std::to_string((*k)[3]) + ">";
}

void add_map_equality(VerificationReport& r, std::string name, const LatticeMap& a,
                      const LatticeMap& b) {
  r.add_exact(std::move(name), Rational(a.distance(b)));
}

void add_translation(VerificationReport& r, std::string name, const LatticeMap& m,
                     std::span<const DivisorClass, 4> roots, std::array<std::int64_t, 4> expected) {
  auto k = translation_vector(m, roots);
  r.add_exact(std::move(name), k == expected, vec_str(k));
}

}  // namespace

VerificationReport conjugation_identity_check() {
  VerificationReport r("lattice conjugation");
  const LatticeMap phi = phi_star();
  const LatticeMap fin = basis_change_final();
  const LatticeMap fin_inv = basis_change_final_inverse();
  const LatticeMap pre_inv = basis_change_preliminary_inverse();
  const LatticeMap pre = pre_inv.isometry_inverse();
  const LatticeMap w1 = generator_map(Generator::w1);
  const LatticeMap standard = word_map(standard_step_word());
  const LatticeMap recurrence = word_map(recurrence_step_word());

  add_map_equality(r, "final basis: B phi* B^-1 = s3 s2 w3 w1 w2 w0", fin * phi * fin_inv,
                   standard);
  add_map_equality(r, "preliminary basis: B0 phi* B0^-1 = s3 s2 w1 w2 w0 w1", pre * phi * pre_inv,
                   recurrence);
  add_map_equality(r, "w1 (s3 s2 w3 w1 w2 w0) w1 = B0 phi* B0^-1", w1 * standard * w1,
                   pre * phi * pre_inv);
  add_map_equality(r, "final basis change = w1 * preliminary basis change", fin, w1 * pre);
  add_map_equality(r, "w1 s3 s2 = s3 s2 w3", word_map(GeneratorWord::parse("w1 s3 s2")),
                   word_map(GeneratorWord::parse("s3 s2 w3")));

  const auto std_roots = standard_roots();
  add_translation(r, "recurrence word on standard symmetry roots", recurrence, std_roots.symmetry,
                  {0, -1, 0, 1});
  auto prelim = recurrence_preliminary_symmetry_roots();
  add_translation(r, "phi* on preliminary symmetry roots", phi, prelim, {0, -1, 0, 1});
  return r;
}

VerificationReport lattice_suite() {
  VerificationReport r("lattice");

  const RootSystemData standard = standard_roots();
  const RootSystemData rec = recurrence_roots();
  for (const RootSystemData* sys : {&standard, &rec}) {
    const std::string tag = std::string(basis_name(sys->basis)) + " ";
    const DivisorClass minus_k = anticanonical(sys->basis);
    r.add_exact(tag + "-K.-K = 0", Rational(intersect(minus_k, minus_k)));

    DivisorClass weighted = sys->surface[0] + sys->surface[1] + 2 * sys->surface[2] +
                            2 * sys->surface[3] + sys->surface[4] + sys->surface[5];
    r.add_exact(tag + "d0+d1+2d2+2d3+d4+d5 = -K", weighted == minus_k, weighted.str());
    DivisorClass sym_sum = DivisorClass::zero(sys->basis);
    for (const auto& a : sys->symmetry) sym_sum += a;
    r.add_exact(tag + "a0+a1+a2+a3 = -K", sym_sum == minus_k, sym_sum.str());

    for (std::size_t i = 0; i < 6; ++i) {
      r.add_exact(tag + "d" + std::to_string(i) + ".d" + std::to_string(i) + " = -2",
                  Rational(intersect(sys->surface[i], sys->surface[i]) + 2));
      r.add_exact(tag + "-K.d" + std::to_string(i) + " = 0",
                  Rational(intersect(minus_k, sys->surface[i])));
      for (std::size_t j = 0; j < 4; ++j)
        r.add_exact(tag + "d" + std::to_string(i) + ".a" + std::to_string(j) + " = 0",
                    Rational(intersect(sys->surface[i], sys->symmetry[j])));
    }
    r.add_exact(tag + "surface roots form the affine D5 diagram",
                adjacency(sys->surface) == d5_affine_edges());

    auto cartan = cartan_matrix(sys->symmetry);
    auto expected = a3_affine_cartan();
    bool cartan_ok = true;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) cartan_ok = cartan_ok && cartan[i][j] == expected[i][j];
    r.add_exact(tag + "symmetry Cartan matrix is affine A3", cartan_ok);

    for (std::size_t j = 0; j < 4; ++j) {
      LatticeMap w = reflection_map(sys->symmetry[j]);
      const std::string name = tag + "w_a" + std::to_string(j);
      add_map_equality(r, name + " is an involution", w * w, LatticeMap::identity(sys->basis));
      r.add_exact(name + " is an isometry", w.is_isometry());
      r.add_exact(name + " fixes delta", w(minus_k) == minus_k);
      r.add_exact(name + " negates its root", w(sys->symmetry[j]) == -sys->symmetry[j]);
    }
  }

  // Diagram automorphisms realized by reflections permute the standard roots.
  struct Expected {
    Generator g;
    std::array<int, 4> alpha;
    std::array<int, 6> delta;
  };
  const Expected autos[] = {
      {Generator::s1, {3, 2, 1, 0}, {5, 4, 3, 2, 1, 0}},
      {Generator::s2, {2, 1, 0, 3}, {1, 0, 2, 3, 4, 5}},
      {Generator::s3, {0, 3, 2, 1}, {0, 1, 2, 3, 5, 4}},
  };
  for (const auto& e : autos) {
    LatticeMap m = generator_map(e.g);
    bool ok = m.is_isometry() && m * m == LatticeMap::identity(Basis::FG);
    for (std::size_t i = 0; i < 4; ++i) ok = ok && m(standard.symmetry[i]) == standard.symmetry[e.alpha[i]];
    for (std::size_t i = 0; i < 6; ++i) ok = ok && m(standard.surface[i]) == standard.surface[e.delta[i]];
    r.add_exact(std::string(name(e.g)) + " permutes roots as stated", ok);
  }

  // Translations.
  const LatticeMap standard_word = word_map(standard_step_word());
  add_translation(r, "standard word translates by <-1,1,-1,1>", standard_word, standard.symmetry,
                  {-1, 1, -1, 1});
  r.add_exact("standard word fixes delta",
              standard_word(anticanonical(Basis::FG)) == anticanonical(Basis::FG));

  const LatticeMap phi = phi_star();
  r.add_exact("phi* is an isometry", phi.is_isometry());
  r.add_exact("phi* fixes delta", phi(anticanonical(Basis::XY)) == anticanonical(Basis::XY));
  auto prelim = recurrence_preliminary_symmetry_roots();
  add_translation(r, "phi* translates preliminary symmetry roots by <0,-1,0,1>", phi, prelim,
                  {0, -1, 0, 1});
  add_translation(r, "phi* translates final symmetry roots by <-1,1,-1,1>", phi, rec.symmetry,
                  {-1, 1, -1, 1});
  r.add_exact("phi* permutes recurrence surface roots",
              perm_str(induced_permutation(phi, rec.surface, rec.surface)) == "[1,0,2,3,5,4]",
              perm_str(induced_permutation(phi, rec.surface, rec.surface)));

  // Basis changes.
  const LatticeMap fin = basis_change_final();
  const LatticeMap fin_inv = basis_change_final_inverse();
  r.add_exact("final basis change is an isometry", fin.is_isometry() && fin_inv.is_isometry());
  add_map_equality(r, "final basis change: forward * inverse = id", fin * fin_inv,
                   LatticeMap::identity(Basis::FG));
  add_map_equality(r, "final basis change: inverse * forward = id", fin_inv * fin,
                   LatticeMap::identity(Basis::XY));
  auto perm = induced_permutation(fin, rec.surface, standard.surface);
  r.add_exact("final basis change maps surface roots onto standard surface roots",
              std::find(perm.begin(), perm.end(), -1) == perm.end(), "induced " + perm_str(perm));
  bool sym_ok = true;
  for (std::size_t i = 0; i < 4; ++i) sym_ok = sym_ok && fin(rec.symmetry[i]) == standard.symmetry[i];
  r.add_exact("final basis change maps symmetry roots label by label", sym_ok);
  const LatticeMap pre = basis_change_preliminary_inverse().isometry_inverse();
  bool pre_ok = true;
  for (std::size_t i = 0; i < 4; ++i) pre_ok = pre_ok && pre(prelim[i]) == standard.symmetry[i];
  r.add_exact("preliminary basis change maps symmetry roots label by label", pre_ok);

  r.merge(conjugation_identity_check());
  r.add_samples(r.details().size());
  return r;
}

}  // namespace sakai::lattice
