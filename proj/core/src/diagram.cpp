#include "diaghom/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace diaghom {

namespace {

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::RookBrauer: return "rook_brauer";
    case Family::Motzkin: return "motzkin";
    case Family::Rook: return "rook";
    case Family::PlanarRook: return "planar_rook";
    case Family::Brauer: return "brauer";
    case Family::WalledBrauer: return "walled_brauer";
    case Family::TemperleyLieb: return "temperley_lieb";
    case Family::Blob: return "blob";
    case Family::DiluteTL: return "dilute_tl";
  }
  fail(Errc::UnknownFamily, "unreachable family tag");
}

Family family_from_name(const std::string& name) {
  std::string key;
  for (char c : lower(name))
    if (c != '-' && c != '_' && c != ' ') key += c;
  if (key == "rookbrauer" || key == "rb") return Family::RookBrauer;
  if (key == "motzkin") return Family::Motzkin;
  if (key == "rook") return Family::Rook;
  if (key == "planarrook" || key == "pr") return Family::PlanarRook;
  if (key == "brauer") return Family::Brauer;
  if (key == "walledbrauer" || key == "walled" || key == "wb") return Family::WalledBrauer;
  if (key == "temperleylieb" || key == "tl") return Family::TemperleyLieb;
  if (key == "blob") return Family::Blob;
  if (key == "dilutetl" || key == "dilute" || key == "dtl" || key == "dilutetemperleylieb")
    return Family::DiluteTL;
  fail(Errc::UnknownFamily, "unknown diagram family: " + name);
}

FamilySpec FamilySpec::make(Family f, int n) {
  require(n >= 0, Errc::BadArgument, "diagram size must be nonnegative");
  require(f != Family::WalledBrauer, Errc::BadArgument,
          "walled Brauer needs the (r, s) split; use FamilySpec::walled");
  FamilySpec spec;
  spec.family = f;
  spec.n = n;
  return spec;
}

FamilySpec FamilySpec::walled(int r, int s) {
  require(r >= 0 && s >= 0, Errc::BadArgument, "walled split must be nonnegative");
  FamilySpec spec;
  spec.family = Family::WalledBrauer;
  spec.n = r + s;
  spec.r = r;
  spec.s = s;
  return spec;
}

bool FamilySpec::planar() const {
  return family == Family::Motzkin || family == Family::PlanarRook ||
         family == Family::TemperleyLieb || family == Family::Blob || family == Family::DiluteTL;
}

bool FamilySpec::allows_isolated() const {
  return family == Family::RookBrauer || family == Family::Motzkin || family == Family::Rook ||
         family == Family::PlanarRook || family == Family::DiluteTL;
}

bool FamilySpec::allows_arcs() const {
  return family != Family::Rook && family != Family::PlanarRook;
}

bool FamilySpec::allows_blobs() const { return family == Family::Blob; }

bool FamilySpec::uses_delta() const {
  return family != Family::Rook && family != Family::PlanarRook;
}

bool FamilySpec::uses_epsilon() const {
  return family == Family::RookBrauer || family == Family::Motzkin || family == Family::Rook ||
         family == Family::PlanarRook;
}

bool FamilySpec::uses_gamma() const { return family == Family::Blob; }

bool FamilySpec::deletion_allowed() const {
  return family == Family::RookBrauer || family == Family::Motzkin || family == Family::Rook ||
         family == Family::PlanarRook;
}

std::string FamilySpec::to_string() const {
  if (family == Family::WalledBrauer)
    return family_name(family) + "(" + std::to_string(r) + "," + std::to_string(s) + ")";
  return family_name(family) + "(" + std::to_string(n) + ")";
}

Diagram::Diagram(int n) : n_(n), partner_(2 * n, -1), blob_(2 * n, 0) {
  require(n >= 0, Errc::BadArgument, "diagram size must be nonnegative");
}

Diagram Diagram::identity(int n) {
  Diagram d(n);
  for (int i = 0; i < n; ++i) {
    d.partner_[i] = n + i;
    d.partner_[n + i] = i;
  }
  return d;
}

Diagram Diagram::from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                            const std::vector<std::pair<int, int>>& blobbed) {
  Diagram d(n);
  for (const auto& [u, v] : edges) d.connect(u, v, false);
  for (const auto& [u, v] : blobbed) d.connect(u, v, true);
  return d;
}

int Diagram::slot_of_vertex(int code, int n) {
  require(code != 0 && code >= -n && code <= n, Errc::BadArgument, "vertex code out of range");
  return code > 0 ? code - 1 : n - code - 1;
}

int Diagram::vertex_of_slot(int slot, int n) {
  return slot < n ? slot + 1 : -(slot - n + 1);
}

void Diagram::connect(int u_code, int v_code, bool blobbed) {
  const int u = slot_of_vertex(u_code, n_), v = slot_of_vertex(v_code, n_);
  require(u != v, Errc::Malformed, "self-loop edge");
  require(partner_[u] < 0 && partner_[v] < 0, Errc::Malformed, "vertex already used by an edge");
  partner_[u] = v;
  partner_[v] = u;
  blob_[u] = blob_[v] = blobbed ? 1 : 0;
}

std::vector<Diagram::Edge> Diagram::edge_list() const {
  std::vector<Edge> out;
  for (int s = 0; s < slots(); ++s)
    if (partner_[s] > s) out.push_back({s, partner_[s], blob_[s] != 0});
  return out;
}

int Diagram::propagating_count() const {
  int count = 0;
  for (int s = 0; s < n_; ++s)
    if (partner_[s] >= n_) ++count;
  return count;
}

int Diagram::blob_count() const {
  int count = 0;
  for (int s = 0; s < slots(); ++s)
    if (blob_[s] && partner_[s] > s) ++count;
  return count;
}

bool Diagram::is_identity() const {
  for (int i = 0; i < n_; ++i)
    if (partner_[i] != n_ + i || blob_[i]) return false;
  return true;
}

std::vector<int32_t> Diagram::canonical_key() const {
  std::vector<int32_t> key;
  key.reserve(4 * n_);
  for (int s = 0; s < slots(); ++s) {
    const int p = partner_[s];
    if (p < 0) {
      key.push_back(2 * n_);
    } else if ((s < n_) != (p < n_)) {
      key.push_back(p < n_ ? p : p - n_);  // propagating: other column index
    } else {
      key.push_back(n_ + (p < n_ ? p : p - n_));  // same-column arc
    }
  }
  for (int s = 0; s < slots(); ++s) key.push_back(blob_[s]);
  return key;
}

std::string Diagram::to_string() const {
  std::string out;
  for (const Edge& e : edge_list()) {
    if (!out.empty()) out += ' ';
    const int a = vertex_of_slot(e.a, n_), b = vertex_of_slot(e.b, n_);
    auto name = [](int code) {
      return code > 0 ? std::to_string(code) : std::to_string(-code) + "'";
    };
    out += '(' + name(a) + ' ' + name(b) + ')';
    if (e.blobbed) out += '*';
  }
  std::string iso;
  for (int s = 0; s < slots(); ++s)
    if (partner_[s] < 0) {
      if (!iso.empty()) iso += ',';
      const int c = vertex_of_slot(s, n_);
      iso += c > 0 ? std::to_string(c) : std::to_string(-c) + "'";
    }
  if (!iso.empty()) out += (out.empty() ? "iso " : " iso ") + iso;
  if (out.empty()) out = "(empty)";
  return out;
}

bool Diagram::operator<(const Diagram& other) const {
  require(n_ == other.n_, Errc::SizeMismatch, "comparing diagrams of different size");
  return canonical_key() < other.canonical_key();
}

namespace {

// Position on the disc boundary: left column top to bottom, then right
// column bottom to top. Non-crossing in this order is exactly planarity.
int boundary_pos(int slot, int n) { return slot < n ? slot : 3 * n - 1 - slot; }

bool edges_interleave(const Diagram::Edge& e, const Diagram::Edge& f, int n) {
  int a = boundary_pos(e.a, n), b = boundary_pos(e.b, n);
  if (a > b) std::swap(a, b);
  const bool c_in = a < boundary_pos(f.a, n) && boundary_pos(f.a, n) < b;
  const bool d_in = a < boundary_pos(f.b, n) && boundary_pos(f.b, n) < b;
  return c_in != d_in;
}

bool is_planar(const std::vector<Diagram::Edge>& edges, int n) {
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j)
      if (edges_interleave(edges[i], edges[j], n)) return false;
  return true;
}

bool is_propagating(const Diagram::Edge& e, int n) { return e.a < n && e.b >= n; }

// First failed family rule, or empty when d is a member.
std::string member_violation(const Diagram& d, const FamilySpec& fam) {
  if (d.n() != fam.n) return "size differs from family size";
  const auto edges = d.edge_list();
  const int n = fam.n;

  if (!fam.allows_isolated()) {
    for (int s = 0; s < d.slots(); ++s)
      if (d.is_isolated(s)) return "isolated vertex not allowed in this family";
  }
  if (!fam.allows_arcs()) {
    for (const auto& e : edges)
      if (!is_propagating(e, n)) return "non-propagating edge not allowed in this family";
  }
  if (fam.planar() && !is_planar(edges, n)) return "edges cross";
  if (fam.family == Family::WalledBrauer) {
    auto first_block = [&](int slot) { return (slot < n ? slot : slot - n) < fam.r; };
    for (const auto& e : edges) {
      if (is_propagating(e, n)) {
        if (first_block(e.a) != first_block(e.b)) return "propagating edge crosses the wall";
      } else {
        if (first_block(e.a) == first_block(e.b)) return "non-propagating edge must cross the wall";
      }
    }
  }
  if (!fam.allows_blobs()) {
    if (d.blob_count() > 0) return "blob decoration not allowed in this family";
    return "";
  }

  // Blob legality. The top-most propagating edge is the one with minimal
  // endpoint on each side; a blobbed arc must be outermost and sit entirely
  // above every propagating edge on its column.
  int min_prop_left = -1, min_prop_right = -1;
  for (const auto& e : edges)
    if (is_propagating(e, n)) {
      if (min_prop_left < 0 || e.a < min_prop_left) min_prop_left = e.a;
      if (min_prop_right < 0 || e.b < min_prop_right) min_prop_right = e.b;
    }
  for (const auto& e : edges) {
    if (!e.blobbed) continue;
    if (is_propagating(e, n)) {
      if (e.a != min_prop_left || e.b != min_prop_right)
        return "blob on a propagating edge that is not top-most";
    } else {
      for (const auto& f : edges) {
        if ((f.a == e.a && f.b == e.b) || is_propagating(f, n)) continue;
        if ((f.a < n) != (e.a < n)) continue;  // other column
        if (f.a < e.a && e.b < f.b) return "blob on a nested arc";
      }
      const int top_prop = e.a < n ? min_prop_left : min_prop_right;
      if (top_prop >= 0 && !(e.a < top_prop && e.b < top_prop))
        return "blobbed arc not strictly above the top-most propagating edge";
    }
  }
  return "";
}

}  // namespace

bool is_member(const Diagram& d, const FamilySpec& fam) {
  return member_violation(d, fam).empty();
}

void require_member(const Diagram& d, const FamilySpec& fam) {
  const std::string why = member_violation(d, fam);
  require(why.empty(), Errc::FamilyViolation,
          fam.to_string() + " rejects diagram [" + d.to_string() + "]: " + why);
}

namespace {

// Blob-decoratable edges of a Temperley-Lieb diagram: the top-most
// propagating edge plus every outermost arc lying above all propagating
// edges on its column. Decorations are independent edge by edge.
std::vector<std::size_t> blobbable_edges(const std::vector<Diagram::Edge>& edges, int n) {
  int min_prop_left = -1, min_prop_right = -1;
  for (const auto& e : edges)
    if (is_propagating(e, n)) {
      if (min_prop_left < 0 || e.a < min_prop_left) min_prop_left = e.a;
      if (min_prop_right < 0 || e.b < min_prop_right) min_prop_right = e.b;
    }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& e = edges[i];
    if (is_propagating(e, n)) {
      if (e.a == min_prop_left && e.b == min_prop_right) out.push_back(i);
      continue;
    }
    bool nested = false;
    for (const auto& f : edges)
      if (!is_propagating(f, n) && (f.a < n) == (e.a < n) && f.a < e.a && e.b < f.b) nested = true;
    if (nested) continue;
    const int top_prop = e.a < n ? min_prop_left : min_prop_right;
    if (top_prop >= 0 && !(e.a < top_prop && e.b < top_prop)) continue;
    out.push_back(i);
  }
  return out;
}

}  // namespace

std::vector<Diagram> enumerate_family(const FamilySpec& fam, std::size_t max_count) {
  require(fam.n <= 16, Errc::SizeTooLarge, "diagram size above the enumeration limit");
  const int n = fam.n;
  const FamilySpec base =
      fam.family == Family::Blob ? FamilySpec::make(Family::TemperleyLieb, n) : fam;

  std::vector<Diagram> out;
  std::vector<Diagram::Edge> edges;
  std::vector<int> partner(static_cast<std::size_t>(2 * n), -1);

  auto legal_new_edge = [&](int u, int v) {
    Diagram::Edge e{u, v, false};
    if (!base.allows_arcs() && !is_propagating(e, n)) return false;
    if (base.family == Family::WalledBrauer) {
      auto first_block = [&](int slot) { return (slot < n ? slot : slot - n) < base.r; };
      if (is_propagating(e, n) ? first_block(u) != first_block(v)
                               : first_block(u) == first_block(v))
        return false;
    }
    if (base.planar())
      for (const auto& f : edges)
        if (edges_interleave(e, f, n)) return false;
    return true;
  };

  auto build = [&](const std::vector<bool>& blobbed) {
    Diagram d(n);
    for (std::size_t i = 0; i < edges.size(); ++i)
      d.connect(Diagram::vertex_of_slot(edges[i].a, n), Diagram::vertex_of_slot(edges[i].b, n),
                blobbed.empty() ? false : blobbed[i]);
    require(out.size() < max_count, Errc::SizeTooLarge,
            "enumeration exceeds the configured cap for " + fam.to_string());
    out.push_back(std::move(d));
  };

  const std::function<void(int)> rec = [&](int s) {
    while (s < 2 * n && partner[static_cast<std::size_t>(s)] >= 0) ++s;
    if (s == 2 * n) {
      if (fam.family == Family::Blob) {
        const auto sites = blobbable_edges(edges, n);
        for (std::size_t mask = 0; mask < (std::size_t{1} << sites.size()); ++mask) {
          std::vector<bool> blobbed(edges.size(), false);
          for (std::size_t bit = 0; bit < sites.size(); ++bit)
            if (mask & (std::size_t{1} << bit)) blobbed[sites[bit]] = true;
          build(blobbed);
        }
      } else {
        build({});
      }
      return;
    }
    if (base.allows_isolated()) rec(s + 1);
    for (int t = s + 1; t < 2 * n; ++t) {
      if (partner[static_cast<std::size_t>(t)] >= 0 || !legal_new_edge(s, t)) continue;
      partner[static_cast<std::size_t>(s)] = t;
      partner[static_cast<std::size_t>(t)] = s;
      edges.push_back({s, t, false});
      rec(s + 1);
      edges.pop_back();
      partner[static_cast<std::size_t>(s)] = -1;
      partner[static_cast<std::size_t>(t)] = -1;
    }
  };
  rec(0);

  for (const auto& d : out) require_member(d, fam);
  std::sort(out.begin(), out.end(),
            [](const Diagram& a, const Diagram& b) { return a.canonical_key() < b.canonical_key(); });
  return out;
}

CompositionResult compose(const Diagram& d1, const Diagram& d2, const FamilySpec& fam) {
  require(d1.n() == d2.n(), Errc::SizeMismatch, "composing diagrams of different size");
  require_member(d1, fam);
  require_member(d2, fam);
  const int n = fam.n;

  // Double diagram on 3n nodes: left outer 0..n-1, middle n..2n-1, right
  // outer 2n..3n-1. d1 keeps its slots, d2 shifts by n.
  struct CEdge {
    int u, v;
    bool blobbed;
  };
  std::vector<CEdge> cedges;
  for (const auto& e : d1.edge_list()) cedges.push_back({e.a, e.b, e.blobbed});
  for (const auto& e : d2.edge_list()) cedges.push_back({e.a + n, e.b + n, e.blobbed});

  std::vector<std::vector<int>> adj(3 * n);
  for (std::size_t i = 0; i < cedges.size(); ++i) {
    adj[cedges[i].u].push_back(static_cast<int>(i));
    adj[cedges[i].v].push_back(static_cast<int>(i));
  }
  auto is_middle = [&](int node) { return node >= n && node < 2 * n; };

  CompositionResult res;
  res.diagram = Diagram(n);
  std::vector<bool> edge_seen(cedges.size(), false), node_seen(3 * n, false);

  auto walk = [&](int start, int first_edge) {
    // Follows the path from start through first_edge to its far end.
    int node = start, eid = first_edge;
    bool blobbed = false;
    while (true) {
      edge_seen[eid] = true;
      blobbed = blobbed || cedges[eid].blobbed;
      node = cedges[eid].u == node ? cedges[eid].v : cedges[eid].u;
      node_seen[node] = true;
      int next = -1;
      for (int cand : adj[node])
        if (!edge_seen[cand]) next = cand;
      if (next < 0) return std::make_pair(node, blobbed);
      eid = next;
    }
  };

  bool dead_end_in_middle = false;
  // Path components, launched from the degree <= 1 nodes.
  for (int start = 0; start < 3 * n; ++start) {
    if (node_seen[start] || adj[start].size() != 1) continue;
    node_seen[start] = true;
    auto [end, blobbed] = walk(start, adj[start].front());
    if (is_middle(start) || is_middle(end)) {
      // A strand stops inside the middle column.
      dead_end_in_middle = true;
      if (is_middle(start) && is_middle(end)) ++res.isolated_middle_count;
      continue;
    }
    // Outer node -> result slot: left nodes coincide, right node 2n+j -> n+j.
    const int a = start < 2 * n ? start : start - n;
    const int b = end < 2 * n ? end : end - n;
    res.diagram.connect(Diagram::vertex_of_slot(std::min(a, b), n),
                        Diagram::vertex_of_slot(std::max(a, b), n), blobbed);
  }
  // Everything unvisited now has degree 0 or sits on a middle loop.
  for (int node = 0; node < 3 * n; ++node) {
    if (node_seen[node] || !adj[node].empty()) continue;
    node_seen[node] = true;
    if (is_middle(node)) ++res.isolated_middle_count;
  }
  for (int node = 0; node < 3 * n; ++node) {
    if (node_seen[node]) continue;
    node_seen[node] = true;
    auto [end, blobbed] = walk(node, adj[node].front());
    require(end == node, Errc::Malformed, "loop walk did not close");
    if (blobbed)
      ++res.blobbed_loop_count;
    else
      ++res.loop_count;
  }

  if (fam.family == Family::DiluteTL && dead_end_in_middle) {
    CompositionResult zero;
    zero.diagram = Diagram(n);
    zero.is_zero = true;
    return zero;
  }
  require_member(res.diagram, fam);
  return res;
}

Diagram permutation_diagram(const std::vector<int>& image) {
  const int n = static_cast<int>(image.size());
  Diagram d(n);
  for (int i = 1; i <= n; ++i) d.connect(i, -image[static_cast<std::size_t>(i) - 1]);
  return d;
}

bool is_permutation_diagram(const Diagram& d) {
  return d.propagating_count() == d.n() && d.blob_count() == 0;
}

std::optional<std::vector<int>> permutation_of_diagram(const Diagram& d) {
  if (!is_permutation_diagram(d)) return std::nullopt;
  std::vector<int> image(static_cast<std::size_t>(d.n()));
  for (int i = 0; i < d.n(); ++i) image[static_cast<std::size_t>(i)] = d.partner(i) - d.n() + 1;
  return image;
}

}  // namespace diaghom
