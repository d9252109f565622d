#include "sakai/error.hpp"
#include "sakai/lattice.hpp"

#include <doctest.h>

using namespace sakai;
using namespace sakai::lattice;

namespace {

// Intersection form diag-free oracle: H1.H2 = 1, Ei.Ei = -1.
std::int64_t form(const Coeffs& a, const Coeffs& b) {
  std::int64_t v = a[0] * b[1] + a[1] * b[0];
  for (std::size_t i = 2; i < kRank; ++i) v -= a[i] * b[i];
  return v;
}

}  // namespace

TEST_CASE("parsing and printing classes") {
  DivisorClass c = DivisorClass::parse("2Hx + Hy - F135678");
  CHECK(c.basis() == Basis::XY);
  CHECK(c == DivisorClass::parse("2Hx+Hy-F1-F3-F5-F6-F7-F8"));
  CHECK(DivisorClass::parse("Hf - E1 - E2").str() == "Hf - E1 - E2");
  CHECK(DivisorClass::parse(c.str()) == c);
  CHECK_THROWS(DivisorClass::parse("Hx + E1"));
}

TEST_CASE("reflection in alpha0 on Hf") {
  DivisorClass a0 = DivisorClass::parse("Hg - E1 - E2");
  DivisorClass hf = DivisorClass::parse("Hf");
  // c + (c.a) a computed with the oracle form.
  std::int64_t k = form(hf.coeffs(), a0.coeffs());
  DivisorClass expected = hf + k * a0;
  CHECK(reflect(a0, hf) == expected);
  CHECK(reflect(a0, hf) == DivisorClass::parse("Hf + Hg - E1 - E2"));
}

TEST_CASE("reflections are involutive isometries fixing the anticanonical class") {
  for (const auto& root : standard_roots().symmetry) {
    LatticeMap r = reflection_map(root);
    CHECK(r.is_isometry());
    CHECK(r * r == LatticeMap::identity(Basis::FG));
    CHECK(r(anticanonical(Basis::FG)) == anticanonical(Basis::FG));
  }
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(reflect(DivisorClass::parse("Hf"), DivisorClass::parse("Hg")), InvalidRoot);
  CHECK_THROWS_AS(intersect(DivisorClass::parse("Hf"), DivisorClass::parse("Hx")), BasisMismatch);
  CHECK_THROWS_AS(phi_star() * LatticeMap::identity(Basis::FG), BasisMismatch);
}

TEST_CASE("surface roots sum to the anticanonical class with D5 multiplicities") {
  for (const auto& data : {standard_roots(), recurrence_roots()}) {
    const auto& d = data.surface;
    CHECK(d[0] + d[1] + 2 * d[2] + 2 * d[3] + d[4] + d[5] == anticanonical(data.basis));
    for (const auto& r : d) CHECK(form(r.coeffs(), r.coeffs()) == -2);
    std::vector<std::pair<int, int>> edges = adjacency(d);
    CHECK(edges == d5_affine_edges());
  }
}

TEST_CASE("symmetry roots form the affine A3 diagram orthogonal to the surface roots") {
  for (const auto& data : {standard_roots(), recurrence_roots()}) {
    auto cm = cartan_matrix(data.symmetry);
    auto expected = a3_affine_cartan();
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) CHECK(cm[i][j] == expected[i][j]);
    for (const auto& a : data.symmetry)
      for (const auto& d : data.surface) CHECK(intersect(a, d) == 0);
    DivisorClass sum = data.symmetry[0] + data.symmetry[1] + data.symmetry[2] + data.symmetry[3];
    CHECK(sum == anticanonical(data.basis));
  }
}

TEST_CASE("translations") {
  auto std_roots = standard_roots().symmetry;
  auto t = translation_vector(word_map(standard_step_word()), std::span<const DivisorClass, 4>(std_roots));
  REQUIRE(t);
  CHECK(*t == std::array<std::int64_t, 4>{-1, 1, -1, 1});
  auto tr = translation_vector(word_map(recurrence_step_word()), std::span<const DivisorClass, 4>(std_roots));
  REQUIRE(tr);
  CHECK(*tr == std::array<std::int64_t, 4>{0, -1, 0, 1});

  LatticeMap phi = phi_star();
  CHECK(phi.is_isometry());
  CHECK(phi(anticanonical(Basis::XY)) == anticanonical(Basis::XY));
  auto pre = recurrence_preliminary_symmetry_roots();
  auto tp = translation_vector(phi, std::span<const DivisorClass, 4>(pre));
  REQUIRE(tp);
  CHECK(*tp == std::array<std::int64_t, 4>{0, -1, 0, 1});
}

TEST_CASE("the two tables of the final identification are inverse isometries") {
  LatticeMap b = basis_change_final();
  LatticeMap bi = basis_change_final_inverse();
  CHECK(b.is_isometry());
  CHECK(bi.is_isometry());
  CHECK(b * bi == LatticeMap::identity(Basis::FG));
  CHECK(bi * b == LatticeMap::identity(Basis::XY));
  CHECK(b.isometry_inverse() == bi);
  // Surface roots go to surface roots label by label.
  auto rec = recurrence_roots().surface;
  auto std_surface = standard_roots().surface;
  auto perm = induced_permutation(b, std::span<const DivisorClass, 6>(rec),
                                  std::span<const DivisorClass, 6>(std_surface));
  CHECK(perm == std::array<int, 6>{0, 1, 2, 3, 4, 5});
}

TEST_CASE("conjugated dynamics is the standard word") {
  LatticeMap b = basis_change_final();
  CHECK(b * phi_star() * b.isometry_inverse() == word_map(standard_step_word()));
  CHECK(conjugation_identity_check().passed());
}

TEST_CASE("full lattice suite") {
  VerificationReport r = lattice_suite();
  CHECK(r.passed());
  CHECK(r.max_residual() == "0");
}
