#include "diaghom/linkstate.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace diaghom {

namespace {

void check_vertex(int v, int n) {
  require(v >= 1 && v <= n, Errc::BadArgument, "link state vertex out of range");
}

}  // namespace

LinkState LinkState::all_defects(int n) {
  require(n >= 0, Errc::BadArgument, "negative size");
  LinkState p;
  p.n_ = n;
  p.partner_.assign(static_cast<std::size_t>(n), kDefect);
  p.blob_.assign(static_cast<std::size_t>(n), false);
  return p;
}

LinkState LinkState::make(int n, const std::vector<std::pair<int, int>>& arcs,
                          const std::vector<int>& isolated) {
  LinkState p = all_defects(n);
  for (const auto& [a, b] : arcs) {
    check_vertex(a, n);
    check_vertex(b, n);
    require(a != b, Errc::Malformed, "arc endpoints coincide");
    require(p.partner_[a - 1] == kDefect && p.partner_[b - 1] == kDefect, Errc::Malformed,
            "vertex used twice");
    p.partner_[a - 1] = b - 1;
    p.partner_[b - 1] = a - 1;
  }
  for (int v : isolated) {
    check_vertex(v, n);
    require(p.partner_[v - 1] == kDefect, Errc::Malformed, "vertex used twice");
    p.partner_[v - 1] = kIsolated;
  }
  return p;
}

LinkState LinkState::with_arc_blob(int a, int b) const {
  check_vertex(a, n_);
  check_vertex(b, n_);
  require(arc_partner(a) == b, Errc::BadArgument, "no such arc");
  LinkState out = *this;
  out.blob_[a - 1] = out.blob_[b - 1] = true;
  return out;
}

LinkState LinkState::with_defect_blob(int d) const {
  check_vertex(d, n_);
  require(is_defect(d), Errc::BadArgument, "not a defect");
  LinkState out = *this;
  out.blob_[d - 1] = true;
  return out;
}

bool LinkState::is_defect(int v) const {
  check_vertex(v, n_);
  return partner_[v - 1] == kDefect;
}

bool LinkState::is_isolated(int v) const {
  check_vertex(v, n_);
  return partner_[v - 1] == kIsolated;
}

bool LinkState::is_arc_end(int v) const {
  check_vertex(v, n_);
  return partner_[v - 1] >= 0;
}

int LinkState::arc_partner(int v) const {
  check_vertex(v, n_);
  return partner_[v - 1] >= 0 ? partner_[v - 1] + 1 : 0;
}

bool LinkState::blobbed_at(int v) const {
  check_vertex(v, n_);
  return blob_[v - 1];
}

std::vector<LinkState::Arc> LinkState::arcs() const {
  std::vector<Arc> out;
  for (int v = 0; v < n_; ++v)
    if (partner_[v] > v) out.push_back({v + 1, partner_[v] + 1, blob_[v]});
  return out;
}

std::vector<int> LinkState::defects() const {
  std::vector<int> out;
  for (int v = 0; v < n_; ++v)
    if (partner_[v] == kDefect) out.push_back(v + 1);
  return out;
}

std::vector<int> LinkState::isolated_vertices() const {
  std::vector<int> out;
  for (int v = 0; v < n_; ++v)
    if (partner_[v] == kIsolated) out.push_back(v + 1);
  return out;
}

int LinkState::defect_count() const {
  return static_cast<int>(std::count(partner_.begin(), partner_.end(), kDefect));
}

int LinkState::arc_count() const {
  return static_cast<int>(std::count_if(partner_.begin(), partner_.end(),
                                        [](int p) { return p >= 0; })) /
         2;
}

int LinkState::isolated_count() const {
  return static_cast<int>(std::count(partner_.begin(), partner_.end(), kIsolated));
}

int LinkState::blob_count() const {
  int c = 0;
  for (int v = 0; v < n_; ++v)
    if (blob_[v] && (partner_[v] == kDefect || partner_[v] > v)) ++c;
  return c;
}

int LinkState::top_defect() const {
  for (int v = 0; v < n_; ++v)
    if (partner_[v] == kDefect) return v + 1;
  return 0;
}

std::vector<int32_t> LinkState::canonical_key() const {
  std::vector<int32_t> key;
  key.reserve(2 * static_cast<std::size_t>(n_));
  for (int v = 0; v < n_; ++v) {
    if (partner_[v] == kDefect)
      key.push_back(n_);
    else if (partner_[v] == kIsolated)
      key.push_back(n_ + 1);
    else
      key.push_back(partner_[v]);
  }
  for (int v = 0; v < n_; ++v) key.push_back(blob_[v] ? 1 : 0);
  return key;
}

std::string LinkState::to_string() const {
  std::ostringstream os;
  bool first = true;
  auto sep = [&] {
    if (!first) os << ' ';
    first = false;
  };
  for (const auto& arc : arcs()) {
    sep();
    os << '(' << arc.a << ' ' << arc.b << ')';
    if (arc.blobbed) os << '*';
  }
  for (int d : defects()) {
    sep();
    os << 'd' << d;
    if (blob_[d - 1]) os << '*';
  }
  const auto iso = isolated_vertices();
  if (!iso.empty()) {
    sep();
    os << "iso";
    for (std::size_t i = 0; i < iso.size(); ++i) os << (i ? "," : " ") << iso[i];
  }
  if (first) os << "empty";
  return os.str();
}

std::string state_violation(const LinkState& p, const FamilySpec& fam) {
  if (p.n() != fam.n) return "size differs from the family";
  const auto arcs = p.arcs();
  if (!fam.allows_isolated() && p.isolated_count() > 0) return "isolated vertex not allowed";
  if (!fam.allows_arcs() && !arcs.empty()) return "non-propagating edge not allowed";

  if (fam.family == Family::WalledBrauer) {
    for (const auto& arc : arcs)
      if ((arc.a <= fam.r) == (arc.b <= fam.r))
        return "non-propagating edge does not cross the wall";
  }

  if (fam.planar()) {
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      for (std::size_t j = i + 1; j < arcs.size(); ++j) {
        const bool a_in = arcs[j].a > arcs[i].a && arcs[j].a < arcs[i].b;
        const bool b_in = arcs[j].b > arcs[i].a && arcs[j].b < arcs[i].b;
        if (a_in != b_in) return "crossing non-propagating edges";
      }
      // A defect's hanging edge runs to the boundary; an arc over it crosses.
      for (int d : p.defects())
        if (d > arcs[i].a && d < arcs[i].b) return "non-propagating edge encloses a defect";
    }
  }

  if (!fam.allows_blobs()) {
    if (p.blob_count() > 0) return "blob not allowed";
    return "";
  }

  // Blob conventions: only the top-most defect may be blobbed; a blobbed arc
  // must sit entirely above the top-most defect and be nested in no arc.
  const int top = p.top_defect();
  for (int d : p.defects())
    if (p.blobbed_at(d) && d != top) return "blob on a defect that is not top-most";
  for (const auto& arc : arcs) {
    if (!arc.blobbed) continue;
    if (top != 0 && arc.b > top) return "blobbed edge below the top-most defect";
    for (const auto& other : arcs)
      if (other.a < arc.a && arc.b < other.b) return "blobbed edge nested inside another";
  }
  return "";
}

bool is_state_member(const LinkState& p, const FamilySpec& fam) {
  return state_violation(p, fam).empty();
}

void require_state_member(const LinkState& p, const FamilySpec& fam) {
  const std::string why = state_violation(p, fam);
  require(why.empty(), Errc::FamilyViolation,
          "link state not in " + fam.to_string() + ": " + why);
}

LinkState state_of_column(const Diagram& d, bool right) {
  const int n = d.n();
  const int base = right ? n : 0;
  LinkState p = LinkState::all_defects(n);
  for (int v = 0; v < n; ++v) {
    const int partner = d.partner(base + v);
    if (partner < 0) {
      p.partner_[v] = LinkState::kIsolated;
    } else if (partner >= base && partner < base + n) {
      p.partner_[v] = partner - base;
      p.blob_[v] = d.blob(base + v);
    } else {
      p.partner_[v] = LinkState::kDefect;  // propagating edge splits here
      p.blob_[v] = d.blob(base + v);
    }
  }
  return p;
}

LinkState right_link_state(const Diagram& d) { return state_of_column(d, true); }
LinkState left_link_state(const Diagram& d) { return state_of_column(d, false); }

Diagram reglue(const LinkState& left, const LinkState& right,
               const std::vector<std::pair<int, int>>& defect_matching) {
  require(left.n() == right.n(), Errc::SizeMismatch, "link state sizes differ");
  require(static_cast<int>(defect_matching.size()) == left.defect_count() &&
              left.defect_count() == right.defect_count(),
          Errc::SizeMismatch, "defect matching does not cover the defects");
  const int n = left.n();
  Diagram d(n);
  for (const auto& arc : left.arcs()) d.connect(arc.a, arc.b, arc.blobbed);
  for (const auto& arc : right.arcs()) d.connect(-arc.a, -arc.b, arc.blobbed);
  for (const auto& [l, r] : defect_matching) {
    require(left.is_defect(l) && right.is_defect(r), Errc::BadArgument,
            "matching entry is not a defect pair");
    d.connect(l, -r, left.blobbed_at(l) && right.blobbed_at(r));
  }
  return d;
}

namespace {

LinkState validated_move(LinkState candidate, const FamilySpec& fam) {
  const std::string why = state_violation(candidate, fam);
  require(why.empty(), Errc::IllegalMove, "move produces an illegal state: " + why);
  return candidate;
}

}  // namespace

LinkState splice(const LinkState& p, int i, int j, const FamilySpec& fam) {
  require(i != j, Errc::IllegalMove, "splice needs two distinct defects");
  require(p.is_defect(i) && p.is_defect(j), Errc::IllegalMove, "splice endpoints must be defects");
  const bool blob = p.blobbed_at(i) || p.blobbed_at(j);
  std::vector<std::pair<int, int>> arcs;
  std::vector<std::pair<int, int>> blob_arcs;
  for (const auto& arc : p.arcs()) {
    arcs.push_back({arc.a, arc.b});
    if (arc.blobbed) blob_arcs.push_back({arc.a, arc.b});
  }
  arcs.push_back({std::min(i, j), std::max(i, j)});
  if (blob) blob_arcs.push_back({std::min(i, j), std::max(i, j)});
  LinkState out = LinkState::make(p.n(), arcs, p.isolated_vertices());
  for (const auto& [a, b] : blob_arcs) out = out.with_arc_blob(a, b);
  for (int d : p.defects())
    if (d != i && d != j && p.blobbed_at(d)) out = out.with_defect_blob(d);
  return validated_move(std::move(out), fam);
}

LinkState delete_defect(const LinkState& p, int i, const FamilySpec& fam) {
  require(fam.deletion_allowed(), Errc::IllegalMove,
          "deletions are not allowed in " + family_name(fam.family));
  require(p.is_defect(i), Errc::IllegalMove, "deletion target must be a defect");
  std::vector<std::pair<int, int>> arcs;
  for (const auto& arc : p.arcs()) arcs.push_back({arc.a, arc.b});
  auto isolated = p.isolated_vertices();
  isolated.push_back(i);
  return validated_move(LinkState::make(p.n(), arcs, isolated), fam);
}

LinkState blob_move(const LinkState& q) {
  const int top = q.top_defect();
  require(top != 0, Errc::IllegalMove, "blobbing needs a defect");
  require(!q.blobbed_at(top), Errc::IllegalMove, "top-most defect already blobbed");
  return validated_move(q.with_defect_blob(top), FamilySpec::make(Family::Blob, q.n()));
}

std::vector<LinkState> move_closure(const LinkState& p, const FamilySpec& fam) {
  require_state_member(p, fam);
  std::map<std::vector<int32_t>, LinkState> seen;
  std::vector<LinkState> frontier = {p};
  seen.emplace(p.canonical_key(), p);
  while (!frontier.empty()) {
    std::vector<LinkState> next;
    auto visit = [&](LinkState&& q) {
      auto [it, fresh] = seen.emplace(q.canonical_key(), std::move(q));
      if (fresh) next.push_back(it->second);
    };
    for (const LinkState& q : frontier) {
      const auto defects = q.defects();
      for (std::size_t a = 0; a < defects.size(); ++a)
        for (std::size_t b = a + 1; b < defects.size(); ++b) {
          try {
            visit(splice(q, defects[a], defects[b], fam));
          } catch (const Error&) {
          }
        }
      if (fam.deletion_allowed())
        for (int d : defects) visit(delete_defect(q, d, fam));
      if (fam.allows_blobs() && !defects.empty() && !q.blobbed_at(defects.front()))
        visit(blob_move(q));
    }
    frontier = std::move(next);
  }
  std::vector<LinkState> out;
  out.reserve(seen.size());
  for (auto& [key, state] : seen) out.push_back(std::move(state));
  return out;
}

std::vector<Diagram> reachable_ideal_basis(const LinkState& p, const FamilySpec& fam) {
  std::set<std::vector<int32_t>> closure;
  for (const LinkState& q : move_closure(p, fam)) closure.insert(q.canonical_key());
  std::vector<Diagram> out;
  for (const Diagram& d : enumerate_family(fam))
    if (closure.count(right_link_state(d).canonical_key())) out.push_back(d);
  return out;
}

std::vector<LinkState> all_right_link_states(const FamilySpec& fam) {
  std::map<std::vector<int32_t>, LinkState> seen;
  for (const Diagram& d : enumerate_family(fam)) {
    LinkState p = right_link_state(d);
    seen.emplace(p.canonical_key(), std::move(p));
  }
  std::vector<LinkState> out;
  out.reserve(seen.size());
  for (auto& [key, state] : seen) out.push_back(std::move(state));
  return out;
}

std::vector<LinkState> link_state_set(const FamilySpec& fam, StateSet kind, int i) {
  require(i >= 0 && i <= fam.n, Errc::BadArgument, "defect count out of range");
  if (kind != StateSet::Defects)
    require(fam.family == Family::Blob, Errc::BadArgument,
            "Q and R sets are specific to the blob family");
  auto with_defects = [&](int k, bool top_blobbed) {
    std::vector<LinkState> out;
    for (const LinkState& p : all_right_link_states(fam)) {
      if (p.defect_count() != k) continue;
      const int top = p.top_defect();
      const bool marked = top != 0 && p.blobbed_at(top);
      if (kind == StateSet::Defects || marked == top_blobbed) out.push_back(p);
    }
    return out;
  };
  switch (kind) {
    case StateSet::Defects:
      return with_defects(i, false);
    case StateSet::BlobPlain:
      return with_defects(i, false);
    case StateSet::BlobMarked:
      return with_defects(i, true);
    case StateSet::BlobTower: {
      if (i == 0) return with_defects(0, false);
      std::vector<LinkState> out;
      if (i >= 2) out = with_defects(i - 1, false);
      for (LinkState& p : with_defects(i, true)) out.push_back(std::move(p));
      return out;
    }
  }
  fail(Errc::BadArgument, "unknown state set");
}

int Components::loop_count() const {
  return static_cast<int>(std::count(is_loop.begin(), is_loop.end(), true));
}

int Components::blobbed_loop_count() const {
  int c = 0;
  for (std::size_t i = 0; i < is_loop.size(); ++i)
    if (is_loop[i] && blobbed[i]) ++c;
  return c;
}

namespace {

// Path/loop decomposition of a multigraph with all degrees <= 2.
Components decompose(int nodes, const std::vector<std::tuple<int, int, bool>>& edges) {
  Components out;
  out.node_count = nodes;
  out.component_of.assign(static_cast<std::size_t>(nodes), -1);
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(nodes));
  for (std::size_t e = 0; e < edges.size(); ++e) {
    adj[static_cast<std::size_t>(std::get<0>(edges[e]))].push_back(static_cast<int>(e));
    adj[static_cast<std::size_t>(std::get<1>(edges[e]))].push_back(static_cast<int>(e));
  }
  for (const auto& a : adj)
    require(a.size() <= 2, Errc::Malformed, "vertex of degree three in a diagram graph");

  std::vector<bool> edge_seen(edges.size(), false);
  auto start_component = [&](int node, bool loop_candidate) {
    const int id = out.size();
    out.members.push_back({node});
    out.is_loop.push_back(false);
    out.blobbed.push_back(false);
    out.component_of[static_cast<std::size_t>(node)] = id;
    int at = node;
    while (true) {
      int next_edge = -1;
      for (int e : adj[static_cast<std::size_t>(at)])
        if (!edge_seen[static_cast<std::size_t>(e)]) next_edge = e;
      if (next_edge < 0) break;
      edge_seen[static_cast<std::size_t>(next_edge)] = true;
      const auto& [u, v, blob] = edges[static_cast<std::size_t>(next_edge)];
      if (blob) out.blobbed[id] = true;
      at = (u == at) ? v : u;
      if (at == node) {
        out.is_loop[id] = loop_candidate;
        break;
      }
      out.component_of[static_cast<std::size_t>(at)] = id;
      out.members[static_cast<std::size_t>(id)].push_back(at);
    }
    std::sort(out.members[static_cast<std::size_t>(id)].begin(),
              out.members[static_cast<std::size_t>(id)].end());
  };

  for (int v = 0; v < nodes; ++v)
    if (out.component_of[static_cast<std::size_t>(v)] < 0 && adj[static_cast<std::size_t>(v)].size() <= 1)
      start_component(v, false);
  for (int v = 0; v < nodes; ++v)
    if (out.component_of[static_cast<std::size_t>(v)] < 0) start_component(v, true);
  return out;
}

}  // namespace

Components double_diagram(const Diagram& d1, const Diagram& d2) {
  require(d1.n() == d2.n(), Errc::SizeMismatch, "diagram sizes differ");
  const int n = d1.n();
  std::vector<std::tuple<int, int, bool>> edges;
  for (const auto& e : d1.edge_list()) edges.emplace_back(e.a, e.b, e.blobbed);
  for (const auto& e : d2.edge_list()) edges.emplace_back(e.a + n, e.b + n, e.blobbed);
  return decompose(3 * n, edges);
}

SesquiDiagram sesqui(const LinkState& p, const Diagram& d) {
  require(p.n() == d.n(), Errc::SizeMismatch, "link state and diagram sizes differ");
  std::vector<std::tuple<int, int, bool>> edges;
  for (const auto& arc : p.arcs()) edges.emplace_back(arc.a - 1, arc.b - 1, arc.blobbed);
  for (const auto& e : d.edge_list()) edges.emplace_back(e.a, e.b, e.blobbed);
  return SesquiDiagram{p, d, decompose(2 * p.n(), edges)};
}

Components juxtapose(const LinkState& q, const LinkState& qprime) {
  require(q.n() == qprime.n(), Errc::SizeMismatch, "link state sizes differ");
  std::vector<std::tuple<int, int, bool>> edges;
  for (const auto& arc : q.arcs()) edges.emplace_back(arc.a - 1, arc.b - 1, arc.blobbed);
  for (const auto& arc : qprime.arcs()) edges.emplace_back(arc.a - 1, arc.b - 1, arc.blobbed);
  return decompose(q.n(), edges);
}

}  // namespace diaghom
