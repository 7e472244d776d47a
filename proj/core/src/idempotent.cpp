#include "diaghom/idempotent.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "diaghom/snf.hpp"

namespace diaghom {

Diagram mirror_dp(const LinkState& p, const FamilySpec& fam) {
  require_state_member(p, fam);
  Diagram d(p.n());
  for (const auto& arc : p.arcs()) {
    d.connect(arc.a, arc.b, arc.blobbed);
    d.connect(-arc.a, -arc.b, arc.blobbed);
  }
  for (int v : p.defects()) d.connect(v, -v, p.blobbed_at(v));
  require_member(d, fam);
  return d;
}

AbsorptionReport check_absorption(const LinkState& p, const Diagram& e,
                                  const AlgebraSpec& spec) {
  const FamilySpec& fam = spec.family();
  require_state_member(p, fam);
  require_member(e, fam);

  AbsorptionReport rep;
  bool first = true;
  int loops = 0, iso = 0, bloops = 0;
  for (const Diagram& y : reachable_ideal_basis(p, fam)) {
    const CompositionResult r = compose(y, e, fam);
    const bool same = !r.is_zero && r.diagram == y;
    if (same && first) {
      loops = r.loop_count;
      iso = r.isolated_middle_count;
      bloops = r.blobbed_loop_count;
      first = false;
    } else if (!same || r.loop_count != loops || r.isolated_middle_count != iso ||
               r.blobbed_loop_count != bloops) {
      rep.witness = y;
      return rep;
    }
  }
  rep.holds = true;
  rep.alpha = loops;
  // Isolated middle vertices scale only where epsilon is a parameter; dilute
  // composition tolerates them without a scalar.
  rep.beta = fam.uses_gamma() ? bloops : (fam.uses_epsilon() ? iso : 0);
  return rep;
}

AbsorptionReport check_absorption(const LinkState& p, const AlgebraElement& e,
                                  const AlgebraSpec& spec) {
  require(e.spec() == spec, Errc::SizeMismatch,
          "element belongs to a different algebra than the given spec");
  require_state_member(p, spec.family());

  AbsorptionReport rep;
  for (const Diagram& y : reachable_ideal_basis(p, spec.family())) {
    const AlgebraElement ye = multiply(AlgebraElement::basis(spec, y), e);
    if (ye != AlgebraElement::basis(spec, y)) {
      rep.witness = y;
      return rep;
    }
  }
  rep.holds = true;
  return rep;
}

AlgebraElement normalized_idempotent(const LinkState& p, const AlgebraSpec& spec) {
  const FamilySpec& fam = spec.family();
  const Diagram d = mirror_dp(p, fam);
  const CompositionResult sq = compose(d, d, fam);
  require(!sq.is_zero && sq.diagram == d, Errc::Malformed,
          "mirror diagram does not absorb itself");

  const Ring ring(spec.ring());
  Scalar coeff = ring.one();
  auto divide_out = [&](const char* name, const Scalar& value, int count) {
    if (count == 0) return;
    const std::optional<Scalar> inv = ring.invert(value);
    require(inv.has_value(), Errc::NotInvertible,
            std::string(name) + " = " + value.to_string() + " is not invertible in " +
                spec.ring().to_string());
    coeff = ring.mul(coeff, ring.pow(*inv, count));
  };
  if (fam.uses_delta()) divide_out("delta", spec.delta(), sq.loop_count);
  if (fam.uses_epsilon()) divide_out("epsilon", spec.epsilon(), sq.isolated_middle_count);
  if (fam.uses_gamma()) divide_out("gamma", spec.gamma(), sq.blobbed_loop_count);

  AlgebraElement e(spec);
  e.add_term(d, coeff);
  return e;
}

Diagram walled_ep(const LinkState& p, int r, int s) {
  const FamilySpec fam = FamilySpec::walled(r, s);
  require_state_member(p, fam);
  const std::vector<int> defects = p.defects();
  require(!defects.empty(), Errc::NoDefects, "walled threading needs at least one defect");

  Diagram e(p.n());
  for (const auto& arc : p.arcs()) e.connect(-arc.a, -arc.b);
  const int a = defects.back();
  for (int v : defects)
    if (v != a) e.connect(v, -v);

  // Each arc has its upper endpoint before the wall and its lower endpoint
  // after it; thread in increasing order of upper endpoints.
  std::vector<std::pair<int, int>> arcs;
  for (const auto& arc : p.arcs()) arcs.push_back({arc.a, arc.b});
  std::sort(arcs.begin(), arcs.end());
  const int x = static_cast<int>(arcs.size());
  if (x == 0) {
    e.connect(a, -a);
  } else if (a > r) {
    e.connect(arcs[0].second, -a);
    for (int i = 0; i + 1 < x; ++i) e.connect(arcs[i].first, arcs[i + 1].second);
    e.connect(arcs[x - 1].first, a);
  } else {
    e.connect(arcs[0].first, -a);
    for (int i = 0; i + 1 < x; ++i) e.connect(arcs[i].second, arcs[i + 1].first);
    e.connect(arcs[x - 1].second, a);
  }
  require_member(e, fam);

  const CompositionResult sq = compose(e, e, fam);
  require(sq.diagram == e && sq.loop_count == 0, Errc::Malformed,
          "walled threading failed to produce a loop-free idempotent");
  return e;
}

std::vector<VertexInterval> vertex_split(const LinkState& q) {
  const int n = q.n();
  require_state_member(q, FamilySpec::make(Family::Blob, n));
  const std::vector<int> defects = q.defects();
  require(!defects.empty(), Errc::NoDefects, "vertex split needs at least one defect");

  bool has_blobbed_arc = false;
  for (const auto& arc : q.arcs()) has_blobbed_arc = has_blobbed_arc || arc.blobbed;

  std::vector<VertexInterval> out;
  int start = 1;
  if (has_blobbed_arc) {
    out.push_back({1, defects.front() - 1});
    start = defects.front();
  }
  for (std::size_t i = 0; i + 1 < defects.size(); ++i) {
    const int d = defects[i], next = defects[i + 1];
    // The gap between consecutive defects is tiled by outermost arcs; each
    // block joins the nearer defect (the lower one on a tie). Distances grow
    // downward, so the blocks joining upward form a prefix of the gap.
    int split_after = d;
    int v = d + 1;
    while (v < next) {
      const int end = q.arc_partner(v);
      if (v - d >= next - end) break;
      split_after = end;
      v = end + 1;
    }
    out.push_back({start, split_after});
    start = split_after + 1;
  }
  out.push_back({start, n});
  return out;
}

namespace {

// Serpentine for one interval: the right-copy defect enters at the far end
// of the interval and zigzags through every arc, alternating interval arcs
// with fresh left-column arcs, finishing at the left-copy defect. Arcs above
// the defect are traversed top-down first, then arcs below bottom-up.
void thread_interval(Diagram& e, const LinkState& q, int lo, int hi, int d) {
  const bool above = d > lo, below = d < hi;
  if (!above && !below) {
    e.connect(d, -d, q.blobbed_at(d));
    return;
  }
  const int entry = above ? lo : hi;
  e.connect(entry, -d, q.blobbed_at(d));
  std::vector<bool> visited(hi + 1, false);
  visited[entry] = true;
  bool in_above = above;
  int cur = entry;
  while (true) {
    const int nxt = q.arc_partner(cur);
    visited[nxt] = true;
    int hop = 0;
    if (in_above) {
      for (int v = nxt - 1; v >= lo && hop == 0; --v)
        if (!visited[v]) hop = v;
      for (int v = nxt + 1; v < d && hop == 0; ++v)
        if (!visited[v]) hop = v;
      if (hop == 0 && below) {
        e.connect(nxt, hi);
        visited[hi] = true;
        cur = hi;
        in_above = false;
        continue;
      }
    } else {
      for (int v = nxt + 1; v <= hi && hop == 0; ++v)
        if (!visited[v]) hop = v;
      for (int v = nxt - 1; v > d && hop == 0; --v)
        if (!visited[v]) hop = v;
    }
    if (hop == 0) {
      e.connect(nxt, d);
      return;
    }
    e.connect(nxt, hop);
    visited[hop] = true;
    cur = hop;
  }
}

// All non-crossing perfect matchings of lo..hi, in the order that always
// pairs the first free vertex with the nearest legal partner first.
std::vector<std::vector<std::pair<int, int>>> planar_matchings(int lo, int hi) {
  std::vector<std::vector<std::pair<int, int>>> out;
  if (lo > hi) {
    out.push_back({});
    return out;
  }
  for (int j = lo + 1; j <= hi; j += 2) {
    const auto inside = planar_matchings(lo + 1, j - 1);
    const auto after = planar_matchings(j + 1, hi);
    for (const auto& in : inside)
      for (const auto& post : after) {
        std::vector<std::pair<int, int>> m;
        m.reserve(1 + in.size() + post.size());
        m.push_back({lo, j});
        m.insert(m.end(), in.begin(), in.end());
        m.insert(m.end(), post.begin(), post.end());
        out.push_back(m);
      }
  }
  return out;
}

bool single_blobbed_loop(const LinkState& q, const LinkState& qp) {
  const Components c = juxtapose(q, qp);
  return c.size() == 1 && c.loop_count() == 1 && c.blobbed_loop_count() == 1;
}

}  // namespace

LinkState blobbed_loop_completion(const LinkState& q) {
  const int n = q.n();
  require_state_member(q, FamilySpec::make(Family::Blob, n));
  require(q.defect_count() == 0, Errc::BadArgument,
          "loop completion needs a defect-free state");
  bool has_blobbed_arc = false;
  for (const auto& arc : q.arcs()) has_blobbed_arc = has_blobbed_arc || arc.blobbed;
  require(has_blobbed_arc, Errc::BadArgument, "loop completion needs a blobbed arc");

  // Cyclic shift by one: the two images of every arc interleave, so the
  // juxtaposition traverses all arcs in one loop.
  auto shift = [n](int v) { return v == 1 ? n : v - 1; };
  std::vector<std::pair<int, int>> arcs;
  for (const auto& arc : q.arcs()) {
    const int u = shift(arc.a), v = shift(arc.b);
    arcs.push_back({std::min(u, v), std::max(u, v)});
  }
  const LinkState shifted = LinkState::make(n, arcs);
  if (is_state_member(shifted, FamilySpec::make(Family::TemperleyLieb, n)) &&
      single_blobbed_loop(q, shifted))
    return shifted;

  for (const auto& m : planar_matchings(1, n)) {
    const LinkState cand = LinkState::make(n, m);
    if (single_blobbed_loop(q, cand)) return cand;
  }
  fail(Errc::Malformed, "no single-loop completion exists for " + q.to_string());
}

Diagram blob_eq(const LinkState& q, int n) {
  const FamilySpec fam = FamilySpec::make(Family::Blob, n);
  require(q.n() == n, Errc::SizeMismatch, "link state size differs from n");
  require_state_member(q, fam);
  require(q.defect_count() > 0, Errc::NoDefects, "blob threading needs at least one defect");

  Diagram e(n);
  for (const auto& arc : q.arcs()) e.connect(-arc.a, -arc.b, arc.blobbed);
  for (const VertexInterval& iv : vertex_split(q)) {
    int d = 0;
    for (int v = iv.lo; v <= iv.hi && d == 0; ++v)
      if (q.is_defect(v)) d = v;
    if (d != 0) {
      thread_interval(e, q, iv.lo, iv.hi, d);
      continue;
    }
    // Leading defect-free interval: close its arcs into one blobbed loop.
    std::vector<std::pair<int, int>> local;
    std::vector<std::pair<int, int>> local_blobbed;
    for (const auto& arc : q.arcs())
      if (arc.a >= iv.lo && arc.b <= iv.hi) {
        local.push_back({arc.a - iv.lo + 1, arc.b - iv.lo + 1});
        if (arc.blobbed) local_blobbed.push_back(local.back());
      }
    LinkState sub = LinkState::make(iv.hi - iv.lo + 1, local);
    for (const auto& [u, v] : local_blobbed) sub = sub.with_arc_blob(u, v);
    const LinkState completion = blobbed_loop_completion(sub);
    for (const auto& arc : completion.arcs()) e.connect(arc.a + iv.lo - 1, arc.b + iv.lo - 1);
  }
  require_member(e, fam);
  return e;
}

bool check_ideal_generation(const AlgebraElement& e, const LinkState& p,
                            const AlgebraSpec& spec) {
  require(e.spec() == spec, Errc::SizeMismatch,
          "element belongs to a different algebra than the given spec");
  const FamilySpec& fam = spec.family();
  require_state_member(p, fam);

  const std::vector<Diagram> ideal = reachable_ideal_basis(p, fam);
  std::map<Diagram, int> index;
  for (std::size_t i = 0; i < ideal.size(); ++i) index.emplace(ideal[i], static_cast<int>(i));
  for (const auto& [d, c] : e.terms())
    require(index.count(d) > 0, Errc::BadArgument,
            "element has support outside the ideal of the link state");

  const Ring ring(spec.ring());
  const int m = static_cast<int>(ideal.size());
  std::vector<std::tuple<int, int, Scalar>> trips;
  int col = 0;
  for (const Diagram& x : enumerate_family(fam)) {
    const AlgebraElement xe = multiply(AlgebraElement::basis(spec, x), e);
    for (const auto& [d, c] : xe.terms()) {
      const auto it = index.find(d);
      require(it != index.end(), Errc::Malformed, "product escaped the left ideal");
      trips.emplace_back(it->second, col, c);
    }
    ++col;
  }
  const SparseMatrix gens = SparseMatrix::from_triplets(m, col, trips, ring);

  std::vector<std::tuple<int, int, Scalar>> unit;
  for (int i = 0; i < m; ++i) unit.emplace_back(i, i, ring.one());
  const SparseMatrix full = SparseMatrix::from_triplets(m, m, unit, ring);
  return column_span_equal(gens, full, spec.ring());
}

bool check_commuting_idempotents(const std::vector<AlgebraElement>& es) {
  if (es.empty()) return true;
  for (const AlgebraElement& e : es)
    require(e.spec() == es.front().spec(), Errc::SizeMismatch,
            "elements belong to different algebras");
  for (const AlgebraElement& e : es)
    if (multiply(e, e) != e) return false;
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = i + 1; j < es.size(); ++j)
      if (multiply(es[i], es[j]) != multiply(es[j], es[i])) return false;
  return true;
}

}  // namespace diaghom
