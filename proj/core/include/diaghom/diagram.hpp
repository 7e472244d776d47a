#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "diaghom/error.hpp"

namespace diaghom {

enum class Family {
  RookBrauer,
  Motzkin,
  Rook,
  PlanarRook,
  Brauer,
  WalledBrauer,
  TemperleyLieb,
  Blob,
  DiluteTL,
};

std::string family_name(Family f);
Family family_from_name(const std::string& name);  // throws UnknownFamily

struct FamilySpec {
  Family family = Family::RookBrauer;
  int n = 0;
  int r = 0, s = 0;  // walled Brauer split, r + s == n, wall sits after vertex r

  static FamilySpec make(Family f, int n);
  static FamilySpec walled(int r, int s);

  bool planar() const;           // Motzkin, PlanarRook, TemperleyLieb, Blob, DiluteTL
  bool allows_isolated() const;  // RookBrauer, Motzkin, Rook, PlanarRook, DiluteTL
  bool allows_arcs() const;      // everything except Rook, PlanarRook
  bool allows_blobs() const;     // Blob
  bool uses_delta() const;       // everything except Rook, PlanarRook
  bool uses_epsilon() const;     // RookBrauer, Motzkin, Rook, PlanarRook
  bool uses_gamma() const;       // Blob
  bool deletion_allowed() const;  // families whose link states admit defect deletion

  std::string to_string() const;
  bool operator==(const FamilySpec&) const = default;
};

// Two columns of n vertices. Slot layout: slots 0..n-1 are left vertices
// 1..n top to bottom, slots n..2n-1 are right vertices 1..n (the barred
// column). Vertex codes in the public API are 1-based and signed: +i is the
// left vertex i, -i is the right vertex i-bar.
class Diagram {
 public:
  Diagram() = default;
  explicit Diagram(int n);  // all vertices isolated
  static Diagram identity(int n);
  static Diagram from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                            const std::vector<std::pair<int, int>>& blobbed = {});

  int n() const { return n_; }
  int slots() const { return 2 * n_; }

  static int slot_of_vertex(int code, int n);
  static int vertex_of_slot(int slot, int n);

  int partner(int slot) const { return partner_[slot]; }
  bool is_isolated(int slot) const { return partner_[slot] < 0; }
  bool blob(int slot) const { return blob_[slot] != 0; }

  // Adds edge {u, v} (vertex codes); both endpoints must be unused.
  void connect(int u_code, int v_code, bool blobbed = false);

  struct Edge {
    int a, b;  // slots, a < b
    bool blobbed;
  };
  std::vector<Edge> edge_list() const;

  int propagating_count() const;
  int blob_count() const;
  bool is_identity() const;

  // Total order: propagating partners sort before same-column partners,
  // isolated last; identity is the global minimum. Key determines the
  // diagram uniquely.
  std::vector<int32_t> canonical_key() const;

  std::string to_string() const;
  bool operator==(const Diagram&) const = default;
  bool operator<(const Diagram& other) const;

 private:
  int n_ = 0;
  std::vector<int32_t> partner_;  // -1 = isolated
  std::vector<uint8_t> blob_;    // set on both endpoints of a blobbed edge
};

bool is_member(const Diagram& d, const FamilySpec& fam);
// Throws FamilyViolation with the failed rule spelled out.
void require_member(const Diagram& d, const FamilySpec& fam);

// All member diagrams in canonical order; throws SizeTooLarge past the cap.
std::vector<Diagram> enumerate_family(const FamilySpec& fam, std::size_t max_count = 2000000);

struct CompositionResult {
  Diagram diagram;
  int loop_count = 0;             // middle loops without a blob
  int isolated_middle_count = 0;  // middle-only non-loop components
  int blobbed_loop_count = 0;     // middle loops carrying a blob
  bool is_zero = false;           // dilute annihilation
};

// Glue d1's right column to d2's left column and trace components.
CompositionResult compose(const Diagram& d1, const Diagram& d2, const FamilySpec& fam);

// image is 1-based: left vertex i joins right vertex image[i-1].
Diagram permutation_diagram(const std::vector<int>& image);
bool is_permutation_diagram(const Diagram& d);
// The image vector when d is a permutation diagram.
std::optional<std::vector<int>> permutation_of_diagram(const Diagram& d);

}  // namespace diaghom
