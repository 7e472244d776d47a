#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>
#include <vector>

#include "diaghom/linkstate.hpp"
#include "oracles.hpp"

using namespace diaghom;

namespace {

std::vector<FamilySpec> all_family_specs(int n) {
  std::vector<FamilySpec> out = {
      FamilySpec::make(Family::RookBrauer, n),   FamilySpec::make(Family::Motzkin, n),
      FamilySpec::make(Family::Rook, n),         FamilySpec::make(Family::PlanarRook, n),
      FamilySpec::make(Family::Brauer, n),       FamilySpec::make(Family::TemperleyLieb, n),
      FamilySpec::make(Family::Blob, n),         FamilySpec::make(Family::DiluteTL, n),
  };
  for (int r = 0; r <= n; ++r) out.push_back(FamilySpec::walled(r, n - r));
  return out;
}

template <typename F>
Errc code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return Errc::Malformed;
}

// Propagating edges of d as (left vertex, right vertex), both 1-based.
std::vector<std::pair<int, int>> prop_matching(const Diagram& d) {
  std::vector<std::pair<int, int>> out;
  for (int v = 0; v < d.n(); ++v) {
    const int w = d.partner(v);
    if (w >= d.n()) out.push_back({v + 1, w - d.n() + 1});
  }
  return out;
}

std::set<std::vector<int32_t>> state_keys(const std::vector<LinkState>& states) {
  std::set<std::vector<int32_t>> keys;
  for (const LinkState& p : states) keys.insert(p.canonical_key());
  return keys;
}

using DiagramKey = std::vector<int32_t>;

std::set<DiagramKey> diagram_keys(const std::vector<Diagram>& ds) {
  std::set<DiagramKey> keys;
  for (const Diagram& d : ds) keys.insert(d.canonical_key());
  return keys;
}

bool has_blobbed_prop(const Diagram& d) {
  for (const auto& e : d.edge_list())
    if (e.blobbed && e.a < d.n() && e.b >= d.n()) return true;
  return false;
}

}  // namespace

TEST_CASE("link state construction and accessors") {
  const LinkState p = LinkState::make(5, {{1, 4}, {2, 3}}, {5});
  CHECK(p.n() == 5);
  CHECK(p.arc_count() == 2);
  CHECK(p.defect_count() == 0);
  CHECK(p.isolated_count() == 1);
  CHECK(p.is_arc_end(1));
  CHECK(p.arc_partner(1) == 4);
  CHECK(p.arc_partner(3) == 2);
  CHECK(p.is_isolated(5));
  CHECK_FALSE(p.is_defect(2));
  CHECK(p.top_defect() == 0);

  const LinkState q = LinkState::all_defects(3);
  CHECK(q.defect_count() == 3);
  CHECK(q.top_defect() == 1);
  CHECK(q.arcs().empty());
  CHECK(q.defects() == std::vector<int>{1, 2, 3});

  const LinkState b = LinkState::make(3, {{1, 2}}).with_arc_blob(1, 2).with_defect_blob(3);
  CHECK(b.blob_count() == 2);
  CHECK(b.blobbed_at(1));
  CHECK(b.blobbed_at(2));
  CHECK(b.blobbed_at(3));

  CHECK_THROWS_AS(LinkState::make(2, {{1, 1}}), Error);           // degenerate arc
  CHECK_THROWS_AS(LinkState::make(2, {{1, 2}, {2, 1}}), Error);   // reuse
  CHECK_THROWS_AS(LinkState::make(2, {{1, 3}}), Error);           // out of range
  CHECK_THROWS_AS(LinkState::make(2, {{1, 2}}, {2}), Error);      // arc end marked isolated
  CHECK_THROWS_AS(LinkState::make(2, {}).with_arc_blob(1, 2), Error);
  CHECK_THROWS_AS(LinkState::make(2, {{1, 2}}).with_defect_blob(1), Error);
}

TEST_CASE("slicing diagrams into column states") {
  const LinkState id3 = right_link_state(Diagram::identity(3));
  CHECK(id3.defect_count() == 3);
  CHECK(left_link_state(Diagram::identity(3)).defect_count() == 3);

  const LinkState empty3 = right_link_state(Diagram(3));
  CHECK(empty3.isolated_count() == 3);
  CHECK(empty3.defect_count() == 0);

  // Two walled propagating edges, one arc per column.
  const Diagram w = Diagram::from_edges(4, {{4, -3}, {1, -2}, {3, 2}, {-4, -1}});
  const LinkState wr = right_link_state(w);
  CHECK(wr.arcs().size() == 1);
  CHECK(wr.arc_partner(1) == 4);
  CHECK(wr.defects() == std::vector<int>{2, 3});
  const LinkState wl = left_link_state(w);
  CHECK(wl.arc_partner(2) == 3);
  CHECK(wl.defects() == std::vector<int>{1, 4});

  // Blobs split with the edge: a blobbed propagating edge marks both defects,
  // a blobbed arc stays in its own column.
  const Diagram b = Diagram::from_edges(3, {{3, -3}, {-1, -2}}, {{1, 2}});
  const Diagram bp = Diagram::from_edges(2, {{2, -2}}, {{1, -1}});
  CHECK(left_link_state(b).blobbed_at(2));
  CHECK_FALSE(right_link_state(b).blobbed_at(1));
  CHECK_FALSE(right_link_state(b).blobbed_at(3));
  CHECK(right_link_state(bp).blobbed_at(1));
  CHECK(left_link_state(bp).blobbed_at(1));
  CHECK_FALSE(right_link_state(bp).blobbed_at(2));
}

TEST_CASE("slicing round-trips through reglue") {
  for (int n = 1; n <= 3; ++n) {
    for (const FamilySpec& fam : all_family_specs(n)) {
      for (const Diagram& d : enumerate_family(fam)) {
        const LinkState left = left_link_state(d);
        const LinkState right = right_link_state(d);
        CHECK(is_state_member(left, fam));
        CHECK(is_state_member(right, fam));
        CHECK(reglue(left, right, prop_matching(d)) == d);
      }
    }
  }
  CHECK_THROWS_AS(reglue(LinkState::all_defects(2), LinkState::all_defects(3), {}), Error);
  CHECK_THROWS_AS(reglue(LinkState::all_defects(2), LinkState::all_defects(2), {{1, 1}}), Error);
}

TEST_CASE("state membership per family") {
  const auto tl3 = FamilySpec::make(Family::TemperleyLieb, 3);
  const auto brauer3 = FamilySpec::make(Family::Brauer, 3);
  const auto rook2 = FamilySpec::make(Family::Rook, 2);
  const auto blob4 = FamilySpec::make(Family::Blob, 4);

  // An arc over a defect crosses its hanging edge in any planar family.
  const LinkState over = LinkState::make(3, {{1, 3}});
  CHECK_FALSE(is_state_member(over, tl3));
  CHECK(is_state_member(over, brauer3));
  CHECK(state_violation(over, tl3) == "non-propagating edge encloses a defect");

  const LinkState crossing = LinkState::make(4, {{1, 3}, {2, 4}});
  CHECK_FALSE(is_state_member(crossing, FamilySpec::make(Family::Motzkin, 4)));
  CHECK(is_state_member(crossing, FamilySpec::make(Family::RookBrauer, 4)));
  CHECK(is_state_member(crossing, FamilySpec::make(Family::Brauer, 4)));

  CHECK_FALSE(is_state_member(LinkState::make(2, {{1, 2}}), rook2));
  CHECK(is_state_member(LinkState::make(2, {}, {1, 2}), rook2));
  CHECK_FALSE(is_state_member(LinkState::make(3, {}, {2}), brauer3));

  // Walled arcs must cross the wall.
  CHECK(is_state_member(LinkState::make(4, {{2, 3}}), FamilySpec::walled(2, 2)));
  CHECK_FALSE(is_state_member(LinkState::make(4, {{1, 2}}), FamilySpec::walled(2, 2)));
  CHECK(state_violation(LinkState::make(4, {{3, 4}}), FamilySpec::walled(2, 2)) ==
        "non-propagating edge does not cross the wall");

  // Blob placement: top-most defect only; arcs only above the top defect and
  // never nested inside another arc.
  CHECK(is_state_member(LinkState::all_defects(4).with_defect_blob(1), blob4));
  CHECK_FALSE(is_state_member(LinkState::all_defects(4).with_defect_blob(2), blob4));
  CHECK(is_state_member(LinkState::make(4, {{1, 2}}).with_arc_blob(1, 2), blob4));
  CHECK_FALSE(is_state_member(LinkState::make(4, {{2, 3}}).with_arc_blob(2, 3), blob4));
  CHECK_FALSE(
      is_state_member(LinkState::make(4, {{1, 4}, {2, 3}}).with_arc_blob(2, 3), blob4));
  CHECK(is_state_member(LinkState::make(4, {{1, 4}, {2, 3}}).with_arc_blob(1, 4), blob4));
  CHECK_FALSE(is_state_member(LinkState::make(2, {{1, 2}}).with_arc_blob(1, 2),
                              FamilySpec::make(Family::TemperleyLieb, 2)));

  // Size mismatch precedes all other checks.
  CHECK(state_violation(LinkState::all_defects(2), tl3) == "size differs from the family");
  CHECK_THROWS_AS(require_state_member(over, tl3), Error);
}

TEST_CASE("every sliced state is realisable and deduplicated") {
  CHECK(all_right_link_states(FamilySpec::make(Family::TemperleyLieb, 2)).size() == 2);
  CHECK(all_right_link_states(FamilySpec::make(Family::TemperleyLieb, 3)).size() == 3);
  CHECK(all_right_link_states(FamilySpec::make(Family::RookBrauer, 2)).size() == 5);
  CHECK(all_right_link_states(FamilySpec::make(Family::RookBrauer, 3)).size() == 14);
  CHECK(all_right_link_states(FamilySpec::make(Family::Motzkin, 3)).size() == 13);
  CHECK(all_right_link_states(FamilySpec::make(Family::DiluteTL, 3)).size() == 13);
  CHECK(all_right_link_states(FamilySpec::make(Family::Brauer, 3)).size() == 4);
  CHECK(all_right_link_states(FamilySpec::make(Family::Rook, 3)).size() == 8);
  CHECK(all_right_link_states(FamilySpec::make(Family::Blob, 2)).size() == 4);
  CHECK(all_right_link_states(FamilySpec::make(Family::Blob, 3)).size() == 8);
  CHECK(all_right_link_states(FamilySpec::walled(2, 1)).size() == 3);

  for (const FamilySpec& fam : all_family_specs(3)) {
    const auto states = all_right_link_states(fam);
    CHECK(state_keys(states).size() == states.size());
    for (const LinkState& p : states) CHECK(is_state_member(p, fam));
  }
}

TEST_CASE("splice rules") {
  const auto tl3 = FamilySpec::make(Family::TemperleyLieb, 3);
  const LinkState ddd = LinkState::all_defects(3);

  const LinkState s12 = splice(ddd, 1, 2, tl3);
  CHECK(s12.arc_partner(1) == 2);
  CHECK(s12.defects() == std::vector<int>{3});
  CHECK(splice(ddd, 3, 2, tl3).defects() == std::vector<int>{1});
  CHECK(code_of([&] { splice(ddd, 1, 3, tl3); }) == Errc::IllegalMove);

  // The same splice is fine without planarity.
  const LinkState b13 = splice(ddd, 1, 3, FamilySpec::make(Family::Brauer, 3));
  CHECK(b13.arc_partner(1) == 3);

  // Walled splices must pair defects across the wall.
  const auto w22 = FamilySpec::walled(2, 2);
  const LinkState wp = LinkState::make(4, {{1, 4}});
  const LinkState wspliced = splice(wp, 2, 3, w22);
  CHECK(wspliced.defect_count() == 0);
  CHECK(wspliced.arc_partner(2) == 3);
  CHECK(code_of([&] { splice(LinkState::all_defects(4), 1, 2, w22); }) == Errc::IllegalMove);

  // A blobbed defect makes a blobbed arc; two plain defects never do.
  const auto blob3 = FamilySpec::make(Family::Blob, 3);
  const LinkState q = LinkState::all_defects(3).with_defect_blob(1);
  const LinkState qs = splice(q, 1, 2, blob3);
  CHECK(qs.blobbed_at(1));
  CHECK(qs.arc_partner(1) == 2);
  CHECK_FALSE(qs.blobbed_at(3));
  const LinkState qs2 = splice(q, 2, 3, blob3);
  CHECK(qs2.blobbed_at(1));
  CHECK(qs2.is_defect(1));
  CHECK_FALSE(qs2.arcs()[0].blobbed);
  CHECK_FALSE(splice(LinkState::all_defects(3), 1, 2, blob3).arcs()[0].blobbed);

  CHECK(code_of([&] { splice(ddd, 2, 2, tl3); }) == Errc::IllegalMove);
  CHECK(code_of([&] { splice(s12, 1, 3, tl3); }) == Errc::IllegalMove);  // arc end
}

TEST_CASE("defect deletion rules") {
  const LinkState ddd = LinkState::all_defects(3);
  for (Family f : {Family::RookBrauer, Family::Motzkin, Family::Rook, Family::PlanarRook}) {
    const LinkState del = delete_defect(ddd, 2, FamilySpec::make(f, 3));
    CHECK(del.is_isolated(2));
    CHECK(del.defects() == std::vector<int>{1, 3});
  }
  for (Family f : {Family::Brauer, Family::TemperleyLieb, Family::Blob, Family::DiluteTL})
    CHECK(code_of([&] { delete_defect(ddd, 2, FamilySpec::make(f, 3)); }) == Errc::IllegalMove);
  CHECK(code_of([&] { delete_defect(LinkState::all_defects(4), 1, FamilySpec::walled(2, 2)); }) ==
        Errc::IllegalMove);
  const auto rb3 = FamilySpec::make(Family::RookBrauer, 3);
  CHECK(code_of([&] { delete_defect(LinkState::make(3, {{1, 2}}), 1, rb3); }) ==
        Errc::IllegalMove);
}

TEST_CASE("blobbing the top defect") {
  const LinkState q = blob_move(LinkState::all_defects(2));
  CHECK(q.blobbed_at(1));
  CHECK_FALSE(q.blobbed_at(2));
  CHECK(code_of([&] { blob_move(q); }) == Errc::IllegalMove);
  CHECK(code_of([&] { blob_move(LinkState::make(2, {{1, 2}})); }) == Errc::IllegalMove);

  // The top-most defect is the one with the smallest label, arcs above it.
  const LinkState r = blob_move(LinkState::make(4, {{1, 2}}));
  CHECK(r.blobbed_at(3));
}

TEST_CASE("move closures") {
  auto closure_size = [](const LinkState& p, const FamilySpec& fam) {
    return move_closure(p, fam).size();
  };
  CHECK(closure_size(LinkState::all_defects(2), FamilySpec::make(Family::TemperleyLieb, 2)) == 2);
  CHECK(closure_size(LinkState::all_defects(3), FamilySpec::make(Family::TemperleyLieb, 3)) == 3);
  CHECK(closure_size(LinkState::all_defects(3), FamilySpec::make(Family::Brauer, 3)) == 4);
  CHECK(closure_size(LinkState::all_defects(1), FamilySpec::make(Family::Rook, 1)) == 2);
  // Splices and deletions together reach every rook-Brauer state.
  CHECK(closure_size(LinkState::all_defects(2), FamilySpec::make(Family::RookBrauer, 2)) == 5);
  // Blobbing branches the closure; a blob already placed cuts it down.
  CHECK(closure_size(LinkState::all_defects(2), FamilySpec::make(Family::Blob, 2)) == 4);
  CHECK(closure_size(LinkState::all_defects(2).with_defect_blob(1),
                     FamilySpec::make(Family::Blob, 2)) == 2);
  // No defects, no moves.
  CHECK(closure_size(LinkState::make(2, {{1, 2}}), FamilySpec::make(Family::TemperleyLieb, 2)) ==
        1);
  CHECK_THROWS_AS(move_closure(LinkState::make(2, {{1, 2}}), FamilySpec::make(Family::Rook, 2)),
                  Error);
}

TEST_CASE("reachable ideal bases") {
  const auto tl2 = FamilySpec::make(Family::TemperleyLieb, 2);
  const auto basis = reachable_ideal_basis(LinkState::all_defects(2), tl2);
  CHECK(basis.size() == 2);
  CHECK(reachable_ideal_basis(LinkState::all_defects(2), tl2) == basis);  // deterministic

  CHECK(reachable_ideal_basis(LinkState::all_defects(1), FamilySpec::make(Family::Rook, 1))
            .size() == 2);
  CHECK(reachable_ideal_basis(LinkState::make(2, {{1, 2}}), tl2).size() == 1);
  CHECK(reachable_ideal_basis(LinkState::all_defects(3),
                              FamilySpec::make(Family::TemperleyLieb, 3))
            .size() == 5);
}

TEST_CASE("defect count sets") {
  CHECK(link_state_set(FamilySpec::make(Family::Brauer, 2), StateSet::Defects, 0).size() == 1);
  CHECK(link_state_set(FamilySpec::make(Family::Brauer, 3), StateSet::Defects, 2).empty());
  CHECK(link_state_set(FamilySpec::make(Family::RookBrauer, 2), StateSet::Defects, 1).size() ==
        2);

  for (int n = 1; n <= 3; ++n) {
    for (const FamilySpec& fam : all_family_specs(n)) {
      if (fam.family == Family::Blob) continue;
      const auto top = link_state_set(fam, StateSet::Defects, n);
      REQUIRE(top.size() == 1);
      CHECK(top[0] == LinkState::all_defects(n));
    }
  }
  CHECK_THROWS_AS(link_state_set(FamilySpec::make(Family::TemperleyLieb, 2), StateSet::BlobTower, 1),
                  Error);
  CHECK_THROWS_AS(link_state_set(FamilySpec::make(Family::Blob, 2), StateSet::Defects, 5), Error);
}

TEST_CASE("blob tower sets") {
  const auto bl2 = FamilySpec::make(Family::Blob, 2);
  const auto bl3 = FamilySpec::make(Family::Blob, 3);

  CHECK(link_state_set(bl2, StateSet::BlobTower, 1).empty());  // parity: R1 = Q1 with blob
  const auto r2 = link_state_set(bl2, StateSet::BlobTower, 2);
  REQUIRE(r2.size() == 1);
  CHECK(r2[0] == LinkState::all_defects(2).with_defect_blob(1));
  CHECK(link_state_set(bl2, StateSet::BlobTower, 0).size() == 2);

  CHECK(link_state_set(bl3, StateSet::BlobPlain, 1).size() == 3);
  CHECK(link_state_set(bl3, StateSet::BlobMarked, 1).size() == 3);
  CHECK(link_state_set(bl3, StateSet::BlobTower, 0).empty());
  CHECK(link_state_set(bl3, StateSet::BlobTower, 1).size() == 3);
  CHECK(link_state_set(bl3, StateSet::BlobTower, 2).size() == 3);
  CHECK(link_state_set(bl3, StateSet::BlobTower, 3).size() == 1);

  // The identity state lies in no tower level.
  std::set<std::vector<int32_t>> tower;
  for (int i = 0; i <= 3; ++i)
    for (const LinkState& p : link_state_set(bl3, StateSet::BlobTower, i))
      tower.insert(p.canonical_key());
  CHECK(tower.size() == 7);
  CHECK(tower.count(LinkState::all_defects(3).canonical_key()) == 0);
}

TEST_CASE("composition only moves right states along the closure") {
  for (int n = 1; n <= 3; ++n) {
    for (const FamilySpec& fam : all_family_specs(n)) {
      const auto diagrams = enumerate_family(fam);
      std::map<std::vector<int32_t>, std::set<std::vector<int32_t>>> closures;
      for (const Diagram& y : diagrams) {
        const LinkState p = right_link_state(y);
        auto [it, fresh] = closures.try_emplace(p.canonical_key());
        if (fresh)
          for (const LinkState& q : move_closure(p, fam)) it->second.insert(q.canonical_key());
        for (const Diagram& x : diagrams) {
          const CompositionResult r = compose(x, y, fam);
          if (r.is_zero) continue;
          CHECK(it->second.count(right_link_state(r.diagram).canonical_key()) == 1);
        }
      }
    }
  }
}

TEST_CASE("distinct states at one level only share lower diagrams") {
  for (int n = 1; n <= 3; ++n) {
    for (const FamilySpec& fam : all_family_specs(n)) {
      if (fam.family == Family::Blob) continue;  // handled by the tower test
      for (int i = 0; i <= n; ++i) {
        const auto states = link_state_set(fam, StateSet::Defects, i);
        std::vector<std::set<DiagramKey>> bases;
        for (const LinkState& p : states)
          bases.push_back(diagram_keys(reachable_ideal_basis(p, fam)));
        std::map<DiagramKey, int> props;
        for (const Diagram& d : enumerate_family(fam))
          props[d.canonical_key()] = d.propagating_count();
        for (std::size_t a = 0; a < states.size(); ++a)
          for (std::size_t b = a + 1; b < states.size(); ++b)
            for (const DiagramKey& key : bases[a])
              if (bases[b].count(key)) CHECK(props[key] <= i - 1);
      }
    }
  }
}

TEST_CASE("defect count sets span the propagating filtration") {
  for (int n = 1; n <= 3; ++n) {
    for (const FamilySpec& fam : all_family_specs(n)) {
      if (fam.family == Family::Blob) continue;
      const auto diagrams = enumerate_family(fam);
      for (int i = 0; i <= n; ++i) {
        std::set<DiagramKey> level;
        for (const Diagram& d : diagrams)
          if (d.propagating_count() == i) level.insert(d.canonical_key());
        std::set<DiagramKey> covered;
        for (const LinkState& p : link_state_set(fam, StateSet::Defects, i))
          for (const Diagram& d : reachable_ideal_basis(p, fam))
            if (d.propagating_count() == i) covered.insert(d.canonical_key());
        CHECK(covered == level);
      }
    }
  }
}

TEST_CASE("blob tower spans the blob filtration") {
  for (int n = 1; n <= 3; ++n) {
    const auto fam = FamilySpec::make(Family::Blob, n);
    const auto diagrams = enumerate_family(fam);
    // Level i holds everything with fewer propagating edges, plus the
    // diagrams with exactly i propagating edges whose top one is blobbed.
    auto in_level = [](const Diagram& d, int i) {
      if (i < 0) return false;
      if (i == 0) return d.propagating_count() == 0;
      return d.propagating_count() <= i - 1 ||
             (d.propagating_count() == i && has_blobbed_prop(d));
    };
    std::set<DiagramKey> seen;
    for (int i = 0; i <= n; ++i) {
      std::set<DiagramKey> quotient;
      for (const Diagram& d : diagrams)
        if (in_level(d, i) && !in_level(d, i - 1)) quotient.insert(d.canonical_key());
      std::set<DiagramKey> covered;
      for (const LinkState& q : link_state_set(fam, StateSet::BlobTower, i))
        for (const Diagram& d : reachable_ideal_basis(q, fam))
          if (!in_level(d, i - 1)) covered.insert(d.canonical_key());
      CHECK(covered == quotient);
      for (const DiagramKey& key : quotient) seen.insert(key);
    }
    // Only the undecorated identity escapes the tower.
    CHECK(seen.size() + 1 == diagrams.size());
    CHECK(seen.count(Diagram::identity(n).canonical_key()) == 0);
  }
}

TEST_CASE("juxtaposition closes arcs into loops") {
  const LinkState single = LinkState::make(2, {{1, 2}});
  const Components self = juxtapose(single, single);
  CHECK(self.size() == 1);
  CHECK(self.loop_count() == 1);
  CHECK(self.blobbed_loop_count() == 0);

  // A six-vertex meander: one blobbed state against a plain one closes into a
  // single blobbed loop.
  const LinkState q = LinkState::make(6, {{1, 4}, {2, 3}, {5, 6}}).with_arc_blob(1, 4);
  const LinkState qp = LinkState::make(6, {{1, 2}, {4, 5}, {3, 6}});
  CHECK(is_state_member(q, FamilySpec::make(Family::Blob, 6)));
  const Components meander = juxtapose(q, qp);
  CHECK(meander.size() == 1);
  CHECK(meander.loop_count() == 1);
  CHECK(meander.blobbed_loop_count() == 1);

  CHECK_THROWS_AS(juxtapose(single, LinkState::make(3, {{1, 2}})), Error);
}

TEST_CASE("double diagrams agree with composition scalars") {
  const Diagram cupcap = Diagram::from_edges(2, {{1, 2}, {-1, -2}});
  const Components dd = double_diagram(cupcap, cupcap);
  CHECK(dd.loop_count() == 1);
  CHECK(dd.node_count == 6);
  CHECK(dd.connected(0, 1));
  CHECK(dd.connected(4, 5));
  CHECK_FALSE(dd.connected(0, 4));

  for (const FamilySpec& fam :
       {FamilySpec::make(Family::Brauer, 3), FamilySpec::make(Family::Blob, 2),
        FamilySpec::make(Family::TemperleyLieb, 3)}) {
    for (const Diagram& x : enumerate_family(fam)) {
      for (const Diagram& y : enumerate_family(fam)) {
        const CompositionResult r = compose(x, y, fam);
        const Components parts = double_diagram(x, y);
        CHECK(parts.loop_count() == r.loop_count + r.blobbed_loop_count);
        CHECK(parts.blobbed_loop_count() == r.blobbed_loop_count);
      }
    }
  }

  // Rook-Brauer middle paths and isolated middles are the epsilon count.
  const auto rb = FamilySpec::make(Family::RookBrauer, 2);
  for (const Diagram& x : enumerate_family(rb)) {
    for (const Diagram& y : enumerate_family(rb)) {
      const CompositionResult r = compose(x, y, rb);
      const Components parts = double_diagram(x, y);
      int middle_only = 0;
      for (int c = 0; c < parts.size(); ++c) {
        bool inside = true;
        for (int v : parts.members[static_cast<std::size_t>(c)])
          inside = inside && v >= 2 && v < 4;
        if (inside && !parts.is_loop[static_cast<std::size_t>(c)]) ++middle_only;
      }
      CHECK(middle_only == r.isolated_middle_count);
      CHECK(parts.loop_count() == r.loop_count);
    }
  }

  CHECK_THROWS_AS(double_diagram(cupcap, Diagram::identity(3)), Error);
}

TEST_CASE("sesqui diagrams glue a state onto a diagram") {
  // Walled (2+2): state = wall-crossing arc {1,4} with two defects; diagram
  // threads both columns. Three components, no loops, and the defect vertices
  // reach the right column.
  const LinkState p = LinkState::make(4, {{1, 4}});
  const Diagram d = Diagram::from_edges(4, {{1, -1}, {4, -4}, {2, 3}, {-2, -3}});
  const SesquiDiagram s = sesqui(p, d);
  CHECK(s.parts.size() == 3);
  CHECK(s.parts.loop_count() == 0);
  CHECK(s.parts.connected(0, 3));  // the state arc
  CHECK(s.parts.connected(0, 4));  // through the top propagating edge
  CHECK(s.parts.connected(3, 7));
  CHECK(s.parts.connected(1, 2));
  CHECK(s.parts.connected(5, 6));
  CHECK_FALSE(s.parts.connected(0, 1));
  CHECK_FALSE(s.parts.connected(1, 5));

  const SesquiDiagram sid = sesqui(LinkState::all_defects(2), Diagram::identity(2));
  CHECK(sid.parts.size() == 2);
  CHECK(sid.parts.connected(0, 2));
  CHECK(sid.parts.connected(1, 3));

  // State arc against a cup: the identified column closes into a loop.
  const Diagram cupcap = Diagram::from_edges(2, {{1, 2}, {-1, -2}});
  const SesquiDiagram sloop = sesqui(LinkState::make(2, {{1, 2}}), cupcap);
  CHECK(sloop.parts.size() == 2);
  CHECK(sloop.parts.loop_count() == 1);
  CHECK(sloop.parts.blobbed_loop_count() == 0);

  const Diagram bcup = Diagram::from_edges(2, {{-1, -2}}, {{1, 2}});
  const SesquiDiagram bs = sesqui(LinkState::make(2, {{1, 2}}).with_arc_blob(1, 2), bcup);
  CHECK(bs.parts.blobbed_loop_count() == 1);

  CHECK_THROWS_AS(sesqui(LinkState::all_defects(3), cupcap), Error);
}
