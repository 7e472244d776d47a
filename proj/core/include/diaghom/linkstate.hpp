#pragma once

#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "diaghom/diagram.hpp"

namespace diaghom {

// One column of n vertices obtained by slicing a diagram down the middle.
// Every vertex is a defect (half of a propagating edge), an endpoint of a
// non-propagating arc, or isolated. Vertices are 1-based, 1 at the top.
class LinkState {
 public:
  struct Arc {
    int a, b;  // a < b, 1-based
    bool blobbed;
    friend bool operator==(const Arc&, const Arc&) = default;
  };

  LinkState() = default;

  // All n vertices are defects.
  static LinkState all_defects(int n);
  // Vertices in arcs and isolated as given; every remaining vertex a defect.
  static LinkState make(int n, const std::vector<std::pair<int, int>>& arcs,
                        const std::vector<int>& isolated = {});

  LinkState with_arc_blob(int a, int b) const;
  LinkState with_defect_blob(int d) const;

  int n() const { return n_; }
  bool is_defect(int v) const;
  bool is_isolated(int v) const;
  bool is_arc_end(int v) const;
  int arc_partner(int v) const;  // 0 when v is not an arc endpoint
  bool blobbed_at(int v) const;

  std::vector<Arc> arcs() const;
  std::vector<int> defects() const;   // ascending
  std::vector<int> isolated_vertices() const;
  int defect_count() const;
  int arc_count() const;
  int isolated_count() const;
  int blob_count() const;  // blobbed arcs plus blobbed defects
  int top_defect() const;  // smallest defect index, 0 when none

  std::vector<int32_t> canonical_key() const;
  std::string to_string() const;

  friend bool operator==(const LinkState& x, const LinkState& y) {
    return x.n_ == y.n_ && x.partner_ == y.partner_ && x.blob_ == y.blob_;
  }
  friend bool operator<(const LinkState& x, const LinkState& y) {
    return x.canonical_key() < y.canonical_key();
  }

 private:
  static constexpr int kDefect = -1;
  static constexpr int kIsolated = -2;
  int n_ = 0;
  std::vector<int> partner_;  // 0-based slot -> partner slot, kDefect, kIsolated
  std::vector<bool> blob_;    // arc blobs stored on both endpoints

  friend LinkState state_of_column(const Diagram& d, bool right);
};

// Family legality of a single-column state (planarity, wall rule, blob
// conventions). Empty string means legal.
std::string state_violation(const LinkState& p, const FamilySpec& fam);
bool is_state_member(const LinkState& p, const FamilySpec& fam);
void require_state_member(const LinkState& p, const FamilySpec& fam);

// Slicing. Propagating edges become defects at their endpoint in the kept
// column; a blobbed propagating edge yields a blobbed defect on both sides.
LinkState right_link_state(const Diagram& d);
LinkState left_link_state(const Diagram& d);

// Inverse of slicing: rebuilds the diagram from its two link states and the
// pairing of left defects with right defects induced by propagating edges.
// A propagating edge is blobbed exactly when its two defect halves are.
Diagram reglue(const LinkState& left, const LinkState& right,
               const std::vector<std::pair<int, int>>& defect_matching);

// Moves. Each constructs the candidate state and validates it for fam;
// violations surface as IllegalMove with the reason.
LinkState splice(const LinkState& p, int i, int j, const FamilySpec& fam);
LinkState delete_defect(const LinkState& p, int i, const FamilySpec& fam);
LinkState blob_move(const LinkState& q);

// All states reachable from p by legal moves (p included), sorted.
std::vector<LinkState> move_closure(const LinkState& p, const FamilySpec& fam);

// Basis of the left ideal J_p / K_q / J'_p: the member diagrams whose right
// link state lies in the move closure of p, in canonical diagram order.
std::vector<Diagram> reachable_ideal_basis(const LinkState& p, const FamilySpec& fam);

// Indexing sets of link states. Defects realizes P_i (precisely i defects).
// For the blob family: BlobPlain = Q_i (top-most defect unblobbed),
// BlobMarked = Q_i-bullet (top-most defect blobbed), BlobTower = R_i with
// R_0 = Q_0, R_1 = Q_1-bullet, R_i = Q_{i-1} with Q_i-bullet appended.
enum class StateSet { Defects, BlobPlain, BlobMarked, BlobTower };

std::vector<LinkState> all_right_link_states(const FamilySpec& fam);
std::vector<LinkState> link_state_set(const FamilySpec& fam, StateSet kind, int i);

// Connected components of a degree-at-most-two graph: paths (possibly single
// vertices) and loops, each carrying the or of its edges' blob flags.
struct Components {
  int node_count = 0;
  std::vector<int> component_of;           // node -> component id
  std::vector<std::vector<int>> members;   // component id -> sorted nodes
  std::vector<bool> is_loop;
  std::vector<bool> blobbed;

  bool connected(int a, int b) const { return component_of[a] == component_of[b]; }
  int size() const { return static_cast<int>(members.size()); }
  int loop_count() const;
  int blobbed_loop_count() const;
};

// Three-column graph of a composite. Nodes 0..n-1 left, n..2n-1 middle,
// 2n..3n-1 right; d1 spans left/middle, d2 spans middle/right.
Components double_diagram(const Diagram& d1, const Diagram& d2);

// Link state glued onto the left column of a diagram. Nodes 0..n-1 are the
// identified column (carrying p's arcs and d's left edges), n..2n-1 the right
// column; p's defects stay as free half-edges.
struct SesquiDiagram {
  LinkState state;
  Diagram diagram;
  Components parts;
};
SesquiDiagram sesqui(const LinkState& p, const Diagram& d);

// Two link states drawn on one column of n vertices, q to the left and
// qprime to the right; components of the union of their arcs.
Components juxtapose(const LinkState& q, const LinkState& qprime);

}  // namespace diaghom
