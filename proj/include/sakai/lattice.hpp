#pragma once

// Picard lattice of the D5(1) Sakai surface, rank 10.
//
// Coefficient order is fixed for both bases as (line class 1, line class 2,
// exceptional classes 1..8):
//   XY basis (recurrence surface):  Hx, Hy, F1, ..., F8
//   FG basis (standard surface):    Hf, Hg, E1, ..., E8
// with Hx.Hy = 1, Hx.Hx = Hy.Hy = 0, H.Fi = 0, Fi.Fj = -delta_ij (same in FG).

#include "sakai/generators.hpp"
#include "sakai/report.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sakai::lattice {

inline constexpr std::size_t kRank = 10;

enum class Basis { XY, FG };
std::string_view basis_name(Basis b);

using Coeffs = std::array<std::int64_t, kRank>;

class DivisorClass {
 public:
  DivisorClass(Basis basis, Coeffs coeffs) : basis_(basis), coeffs_(coeffs) {}

  static DivisorClass zero(Basis basis);
  /// Basis vector by index 0..9 in the documented order.
  static DivisorClass unit(Basis basis, std::size_t index);
  /// Parses expressions such as "2Hx + Hy - F1 - F3" or "Hf+Hg-E5-E6".
  /// The basis is inferred from the symbols.
  static DivisorClass parse(std::string_view text);

  Basis basis() const { return basis_; }
  const Coeffs& coeffs() const { return coeffs_; }
  std::int64_t operator[](std::size_t i) const { return coeffs_[i]; }

  std::string str() const;

  DivisorClass& operator+=(const DivisorClass& other);
  DivisorClass& operator-=(const DivisorClass& other);
  friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
  friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
  friend DivisorClass operator*(std::int64_t k, DivisorClass a);
  DivisorClass operator-() const { return -1 * *this; }
  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;

 private:
  Basis basis_;
  Coeffs coeffs_;
};

/// Intersection product. Throws BasisMismatch.
std::int64_t intersect(const DivisorClass& a, const DivisorClass& b);

/// c + (c.alpha) alpha. Throws InvalidRoot unless alpha.alpha = -2.
DivisorClass reflect(const DivisorClass& alpha, const DivisorClass& c);

/// -K = 2H1 + 2H2 - sum of the eight exceptional classes.
DivisorClass anticanonical(Basis basis);

/// Integer matrix acting on coefficient vectors; column j is the image of
/// basis vector j, expressed in the target basis.
class LatticeMap {
 public:
  using Matrix = std::array<std::array<std::int64_t, kRank>, kRank>;  // [row][col]

  LatticeMap(Basis source, Basis target, const Matrix& m);
  static LatticeMap identity(Basis basis);
  /// Builds the map from the images of the ten basis vectors of `source`.
  static LatticeMap from_images(Basis source, std::span<const DivisorClass> images);

  Basis source() const { return source_; }
  Basis target() const { return target_; }
  const Matrix& matrix() const { return m_; }
  std::int64_t operator()(std::size_t row, std::size_t col) const { return m_[row][col]; }

  DivisorClass operator()(const DivisorClass& c) const;
  DivisorClass image_of_basis_vector(std::size_t j) const;

  /// Preserves the intersection form on all generator pairs.
  bool is_isometry() const;
  /// For an isometry the inverse is G M^T G. Throws InvalidRoot otherwise.
  LatticeMap isometry_inverse() const;

  /// Largest absolute entry difference (0 iff equal and tags agree).
  std::int64_t distance(const LatticeMap& other) const;
  friend bool operator==(const LatticeMap&, const LatticeMap&) = default;

 private:
  Basis source_;
  Basis target_;
  Matrix m_;
};

/// Matrix product a*b: b acts first. Throws BasisMismatch.
LatticeMap operator*(const LatticeMap& a, const LatticeMap& b);

LatticeMap reflection_map(const DivisorClass& alpha);

/// Composes maps written left to right; under RightmostFirst the last map acts
/// first. Throws BasisMismatch on incompatible tags or an empty list.
LatticeMap compose(std::span<const LatticeMap> maps, WordOrder order = WordOrder::RightmostFirst);

/// Symmetry/surface root data for one surface.
struct RootSystemData {
  Basis basis;
  std::array<DivisorClass, 6> surface;   // delta_0..delta_5
  std::array<DivisorClass, 4> symmetry;  // alpha_0..alpha_3
};

/// FG basis: D5(1) surface roots and A3(1) symmetry roots of the standard equation.
RootSystemData standard_roots();
/// XY basis: surface roots of the recurrence surface with the final symmetry roots.
RootSystemData recurrence_roots();
/// XY basis: symmetry roots induced by the preliminary identification.
std::array<DivisorClass, 4> recurrence_preliminary_symmetry_roots();

/// Edges of the affine D5 diagram on delta_0..delta_5 (pairs i<j).
std::vector<std::pair<int, int>> d5_affine_edges();
/// Affine A3 Cartan matrix (the square 0-1-2-3-0).
std::array<std::array<int, 4>, 4> a3_affine_cartan();

/// 2 (ai.aj)/(aj.aj) for -2 roots.
std::vector<std::vector<int>> cartan_matrix(std::span<const DivisorClass> roots);
/// Pairs (i<j) with ri.rj = 1.
std::vector<std::pair<int, int>> adjacency(std::span<const DivisorClass> roots);

/// Lattice action of a generator on the FG basis. w_j reflect in alpha_j;
/// s_i are the stated products of reflections in -2 classes.
LatticeMap generator_map(Generator g);
LatticeMap word_map(const GeneratorWord& word);

/// Returns k with M(r_i) = r_i + k_i * delta for each root, or nothing if M is
/// not a translation on these roots.
std::optional<std::array<std::int64_t, 4>> translation_vector(
    const LatticeMap& m, std::span<const DivisorClass, 4> roots);

/// Action of the forward recurrence map on Pic, XY -> XY.
LatticeMap phi_star();

/// Rewrites XY coordinates in the FG basis, final identification.
LatticeMap basis_change_final();
/// FG -> XY, transcribed from the opposite table (not computed).
LatticeMap basis_change_final_inverse();
/// FG -> XY, the preliminary identification.
LatticeMap basis_change_preliminary_inverse();

/// perm[i] = j when M(from[i]) = to[j]; -1 if the image is not in `to`.
std::array<int, 6> induced_permutation(const LatticeMap& m, std::span<const DivisorClass, 6> from,
                                       std::span<const DivisorClass, 6> to);

/// Verifies that the recurrence dynamics conjugates to the standard word.
VerificationReport conjugation_identity_check();

/// Full exact lattice suite.
VerificationReport lattice_suite();

}  // namespace sakai::lattice
