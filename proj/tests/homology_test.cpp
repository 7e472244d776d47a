#include <string>
#include <utility>
#include <vector>

#include "bar_oracle.hpp"
#include "diaghom/homology.hpp"
#include "doctest.h"

using namespace diaghom;

namespace {

template <typename F>
Errc code_of(F&& f) {
  try {
    f();
  } catch (const Error& err) {
    return err.code();
  }
  FAIL("expected an Error");
  return Errc::Malformed;
}

AlgebraSpec spec_for(const FamilySpec& fam, const RingSpec& ring, long dv, long ev, long gv) {
  const Ring r(ring);
  AlgebraParams p;
  if (fam.uses_delta()) p.delta = r.from_int(dv);
  if (fam.uses_epsilon()) p.epsilon = r.from_int(ev);
  if (fam.uses_gamma()) p.gamma = r.from_int(gv);
  return AlgebraSpec::make(fam, ring, p);
}

AugmentedAlgebra group_aug(const GroupSpec& g, const RingSpec& ring) {
  return AugmentedAlgebra::make(BasedAlgebra::group_algebra(g, ring));
}

AugmentedAlgebra diagram_aug(const AlgebraSpec& spec) {
  return AugmentedAlgebra::make(BasedAlgebra::diagram_algebra(spec));
}

AbelianInvariants ab(long free_rank, std::vector<long> torsion = {}) {
  AbelianInvariants inv;
  inv.free_rank = free_rank;
  for (long t : torsion) inv.torsion.push_back(Int(t));
  return inv;
}

void check_degrees(const GradedInvariants& got, const std::vector<AbelianInvariants>& want) {
  REQUIRE(got.degrees.size() == want.size());
  for (std::size_t k = 0; k < want.size(); ++k) {
    CHECK(got.degrees[k] == want[k]);
    CHECK(got.reliable[k]);
  }
}

void check_oracle(const GradedInvariants& got, const std::vector<oracle::ZInvariants>& want) {
  REQUIRE(got.degrees.size() == want.size());
  for (std::size_t k = 0; k < want.size(); ++k) {
    CHECK(got.degrees[k].free_rank == want[k].free_rank);
    CHECK(got.degrees[k].torsion == want[k].torsion);
  }
}

}  // namespace

TEST_CASE("augmented algebra splits the unit off the basis") {
  // Temperley-Lieb at delta = 1: the non-unit basis element augments to 0,
  // so the reduced basis is the element itself and v*v = v.
  const AugmentedAlgebra tl =
      diagram_aug(spec_for(FamilySpec::make(Family::TemperleyLieb, 2), RingSpec::integers(), 1, 0, 0));
  CHECK(tl.dim() == 2);
  CHECK(tl.reduced_dim() == 1);
  const Ring& zr = tl.ring();
  REQUIRE(tl.reduced_product(0, 0).size() == 1);
  CHECK(tl.reduced_product(0, 0)[0] == std::pair<int, Scalar>(0, zr.from_int(1)));

  // Group algebra of order two: v = s - 1, v*v = -2v.
  const AugmentedAlgebra c2 = group_aug(GroupSpec::symmetric(2), RingSpec::integers());
  CHECK(c2.reduced_dim() == 1);
  REQUIRE(c2.reduced_product(0, 0).size() == 1);
  CHECK(c2.reduced_product(0, 0)[0] == std::pair<int, Scalar>(0, zr.from_int(-2)));

  CHECK(diagram_aug(spec_for(FamilySpec::make(Family::Brauer, 2), RingSpec::integers(), 2, 0, 0))
            .reduced_dim() == 2);

  // The dilute unit is a 4-term sum; the distinguished slot is the full
  // identity diagram (the only basis element of augmentation 1).
  const AugmentedAlgebra dil =
      diagram_aug(spec_for(FamilySpec::make(Family::DiluteTL, 2), RingSpec::integers(), 2, 0, 0));
  CHECK(dil.unit_index() == dil.algebra().index_of(Diagram::identity(2)));
  for (int i = 0; i < dil.reduced_dim(); ++i) CHECK(dil.full_index(i) != dil.unit_index());
}

TEST_CASE("bar complex shapes, signs, and budget") {
  // Trivial algebra: no positive-degree chains at all.
  const ChainComplex trivial = bar_complex(group_aug(GroupSpec::trivial(), RingSpec::integers()), 3);
  CHECK(trivial.dims == std::vector<long long>{1, 0, 0, 0, 0});

  // Order two: d alternates 0, *2 (the sign convention fixes the +).
  const AugmentedAlgebra c2 = group_aug(GroupSpec::symmetric(2), RingSpec::integers());
  const ChainComplex bar = bar_complex(c2, 4);
  CHECK(bar.dims == std::vector<long long>{1, 1, 1, 1, 1, 1});
  const Ring zr(RingSpec::integers());
  CHECK(bar.boundary[1].is_zero());
  CHECK(bar.boundary[2].entry(0, 0) == zr.from_int(2));
  CHECK(bar.boundary[3].is_zero());
  CHECK(bar.boundary[4].entry(0, 0) == zr.from_int(2));
  CHECK(bar.boundary[5].is_zero());

  // A diagram algebra spot check on d compose d = 0 (also asserted inside).
  const AugmentedAlgebra br =
      diagram_aug(spec_for(FamilySpec::make(Family::Brauer, 2), RingSpec::integers(), 2, 0, 0));
  const ChainComplex bc = bar_complex(br, 2);
  CHECK(bc.boundary[2].multiply(bc.boundary[3], zr).is_zero());

  CHECK(code_of([&] { bar_complex(group_aug(GroupSpec::symmetric(3), RingSpec::integers()), 5, 100); }) ==
        Errc::BudgetExceeded);
}

TEST_CASE("group algebra Tor matches the independent bar oracle") {
  const RingSpec z = RingSpec::integers();
  check_oracle(tor(group_aug(GroupSpec::trivial(), z), 3, z),
               oracle::group_bar_homology(oracle::trivial_table(), 3));
  check_oracle(tor(group_aug(GroupSpec::symmetric(2), z), 4, z),
               oracle::group_bar_homology(oracle::symmetric_table(2), 4));
  check_oracle(tor(group_aug(GroupSpec::cyclic(3), z), 3, z),
               oracle::group_bar_homology(oracle::cyclic_table(3), 3));
  check_oracle(tor(group_aug(GroupSpec::cyclic(4), z), 3, z),
               oracle::group_bar_homology(oracle::cyclic_table(4), 3));
  check_oracle(tor(group_aug(GroupSpec::symmetric(3), z), 3, z),
               oracle::group_bar_homology(oracle::symmetric_table(3), 3));
}

TEST_CASE("group algebra Tor and Ext match the classical literals") {
  const RingSpec z = RingSpec::integers();
  check_degrees(tor(group_aug(GroupSpec::symmetric(2), z), 3, z),
                {ab(1), ab(0, {2}), ab(0), ab(0, {2})});
  check_degrees(tor(group_aug(GroupSpec::cyclic(3), z), 3, z),
                {ab(1), ab(0, {3}), ab(0), ab(0, {3})});
  check_degrees(tor(group_aug(GroupSpec::symmetric(3), z), 3, z),
                {ab(1), ab(0, {2}), ab(0), ab(0, {6})});
  check_degrees(ext(group_aug(GroupSpec::symmetric(2), z), 4, z),
                {ab(1), ab(0), ab(0, {2}), ab(0), ab(0, {2})});
  check_degrees(ext(group_aug(GroupSpec::cyclic(3), z), 3, z),
                {ab(1), ab(0), ab(0, {3}), ab(0)});
  // Product of symmetric groups with one trivial factor collapses to C2.
  check_degrees(tor(group_aug(GroupSpec::product_symmetric(1, 2), z), 3, z),
                {ab(1), ab(0, {2}), ab(0), ab(0, {2})});
}

TEST_CASE("coefficient change re-reads an integer complex in the target ring") {
  const RingSpec z = RingSpec::integers();
  const AugmentedAlgebra c2 = group_aug(GroupSpec::symmetric(2), z);

  // Over Z/2 every differential dies, so every degree is one-dimensional.
  check_degrees(tor(c2, 3, RingSpec::integers_mod(2)),
                {ab(1), ab(1), ab(1), ab(1)});
  // Over Q multiplication by 2 is invertible: positive degrees vanish.
  check_degrees(tor(c2, 3, RingSpec::rationals()), {ab(1), ab(0), ab(0), ab(0)});
  check_degrees(ext(c2, 3, RingSpec::rationals()), {ab(1), ab(0), ab(0), ab(0)});

  // Maschke vanishing over Q for several finite groups.
  for (const GroupSpec& g : {GroupSpec::cyclic(3), GroupSpec::cyclic(4), GroupSpec::symmetric(3)}) {
    const GradedInvariants t = tor(group_aug(g, z), 3, RingSpec::rationals());
    CHECK(t.degrees[0] == ab(1));
    for (int k = 1; k <= 3; ++k) CHECK(t.degrees[static_cast<std::size_t>(k)].is_zero());
  }

  // Only integer-based algebras may change coefficients.
  const AugmentedAlgebra cq = group_aug(GroupSpec::symmetric(2), RingSpec::rationals());
  CHECK(code_of([&] { tor(cq, 2, RingSpec::integers_mod(3)); }) == Errc::BadArgument);
}

TEST_CASE("Temperley-Lieb Tor vanishes at invertible parameter") {
  const AlgebraSpec tl3q =
      spec_for(FamilySpec::make(Family::TemperleyLieb, 3), RingSpec::rationals(), 1, 0, 0);
  check_degrees(tor(diagram_aug(tl3q), 3, RingSpec::rationals()),
                {ab(1), ab(0), ab(0), ab(0)});

  const AlgebraSpec tl3z =
      spec_for(FamilySpec::make(Family::TemperleyLieb, 3), RingSpec::integers(), 1, 0, 0);
  check_degrees(tor(diagram_aug(tl3z), 3, RingSpec::integers()),
                {ab(1), ab(0), ab(0), ab(0)});
  check_degrees(ext(diagram_aug(tl3z), 3, RingSpec::integers()),
                {ab(1), ab(0), ab(0), ab(0)});
}

TEST_CASE("quotient Tor descends the augmentation") {
  const RingSpec z = RingSpec::integers();

  // Quotient by the zero ideal is the algebra itself.
  const AlgebraSpec tl2 =
      spec_for(FamilySpec::make(Family::TemperleyLieb, 2), RingSpec::integers(), 1, 0, 0);
  const GradedInvariants whole = tor(diagram_aug(tl2), 3, z);
  const GradedInvariants modzero = tor_of_quotient({tl2, -1}, 3, z);
  REQUIRE(whole.degrees.size() == modzero.degrees.size());
  for (std::size_t k = 0; k < whole.degrees.size(); ++k)
    CHECK(whole.degrees[k] == modzero.degrees[k]);

  // Rook-Brauer mod the one-propagating-edge ideal is the group algebra of
  // the symmetric group; the engine must agree with its own group run.
  const AlgebraSpec rb2 =
      spec_for(FamilySpec::make(Family::RookBrauer, 2), RingSpec::integers(), 2, 3, 0);
  const GradedInvariants qt = tor_of_quotient({rb2, 1}, 3, z);
  const GradedInvariants gt = tor(group_aug(GroupSpec::symmetric(2), z), 3, z);
  for (std::size_t k = 0; k < qt.degrees.size(); ++k) CHECK(qt.degrees[k] == gt.degrees[k]);

  // Blob algebra modulo its propagating-free ideal, at gamma = 1, delta = 0.
  const AlgebraSpec bl4 =
      spec_for(FamilySpec::make(Family::Blob, 4), RingSpec::integers_mod(2), 0, 0, 1);
  check_degrees(tor_of_quotient({bl4, 0}, 2, RingSpec::integers_mod(2)), {ab(1), ab(0), ab(0)});
}

TEST_CASE("Tor and Ext dimensions agree over a field") {
  for (int n = 1; n <= 2; ++n) {
    std::vector<FamilySpec> fams;
    for (Family f :
         {Family::RookBrauer, Family::Motzkin, Family::Rook, Family::PlanarRook, Family::Brauer,
          Family::TemperleyLieb, Family::Blob, Family::DiluteTL})
      fams.push_back(FamilySpec::make(f, n));
    for (int r = 0; r <= n; ++r) fams.push_back(FamilySpec::walled(r, n - r));
    for (const FamilySpec& fam : fams) {
      const AlgebraSpec spec = spec_for(fam, RingSpec::rationals(), 2, 3, 5);
      const AugmentedAlgebra a = diagram_aug(spec);
      const GradedInvariants t = tor(a, 2, RingSpec::rationals());
      const GradedInvariants e = ext(a, 2, RingSpec::rationals());
      CHECK(t.degrees[0] == ab(1));
      for (int k = 0; k <= 2; ++k) {
        CHECK(t.degrees[static_cast<std::size_t>(k)].free_rank ==
              e.degrees[static_cast<std::size_t>(k)].free_rank);
        CHECK(t.degrees[static_cast<std::size_t>(k)].torsion.empty());
        CHECK(e.degrees[static_cast<std::size_t>(k)].torsion.empty());
      }
    }
  }
}

TEST_CASE("G-centred comparison") {
  const RingSpec z = RingSpec::integers();

  // Rook at invertible epsilon is centred on the symmetric group.
  const AugmentedAlgebra rook2 =
      diagram_aug(spec_for(FamilySpec::make(Family::Rook, 2), RingSpec::integers(), 0, 1, 0));
  const GCentredReport rook_report =
      g_centred_check(rook2, GroupSpec::symmetric(2), 3, {z});
  CHECK(rook_report.agrees);
  CHECK(rook_report.first_disagreement.empty());
  REQUIRE(rook_report.entries.size() == 1);
  check_degrees(rook_report.entries[0].algebra_tor, {ab(1), ab(0, {2}), ab(0), ab(0, {2})});

  // Planar rook at invertible epsilon is 1-centred (trivial group), checked
  // here at a reduced truncation; the full-depth run lives in the acceptance
  // suite.
  const AugmentedAlgebra pr3 =
      diagram_aug(spec_for(FamilySpec::make(Family::PlanarRook, 3), RingSpec::rationals(), 0, 1, 0));
  CHECK(g_centred_check(pr3, GroupSpec::trivial(), 2, {RingSpec::rationals()}).agrees);

  // Trivial algebra against the trivial group.
  CHECK(g_centred_check(group_aug(GroupSpec::trivial(), z), GroupSpec::trivial(), 3, {z}).agrees);

  // Temperley-Lieb at delta = 1 is 1-centred, hence NOT Sigma_2-centred.
  const AugmentedAlgebra tl2 =
      diagram_aug(spec_for(FamilySpec::make(Family::TemperleyLieb, 2), RingSpec::integers(), 1, 0, 0));
  const GCentredReport bad = g_centred_check(tl2, GroupSpec::symmetric(2), 2, {z});
  CHECK_FALSE(bad.agrees);
  CHECK(bad.first_disagreement.find("degree 1") != std::string::npos);

  // Multi-ring agreement: rook vs Sigma_2 over Z, Z/2, and Q at once.
  const GCentredReport multi = g_centred_check(
      rook2, GroupSpec::symmetric(2), 2, {z, RingSpec::integers_mod(2), RingSpec::rationals()});
  CHECK(multi.agrees);
  CHECK(multi.entries.size() == 3);
}

TEST_CASE("graded invariants render compactly") {
  const RingSpec z = RingSpec::integers();
  const GradedInvariants t = tor(group_aug(GroupSpec::symmetric(2), z), 2, z);
  CHECK(t.to_string() == "0: Z, 1: Z/2, 2: 0");
}
