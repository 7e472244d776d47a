#pragma once

#include <optional>
#include <vector>

#include "diaghom/algebra.hpp"
#include "diaghom/linkstate.hpp"

namespace diaghom {

// Outcome of sweeping y -> y*e over the ideal basis of a link state. Either
// every product returns y scaled by the same parameter monomial, whose
// exponents are reported, or the first diagram breaking the pattern is the
// witness. holds implies witness is absent.
struct AbsorptionReport {
  bool holds = false;
  int alpha = 0;  // delta exponent: plain middle loops
  int beta = 0;   // epsilon exponent (isolated middles), or gamma exponent
                  // (blobbed loops) in the blob family
  std::optional<Diagram> witness;
};

// The diagram whose right link state is p and whose left link state is the
// mirror image of p: each arc of p is doubled onto the left column (blobs
// copied), each defect becomes a horizontal propagating edge (blobbed when
// the defect is), and isolated vertices stay isolated on both sides.
Diagram mirror_dp(const LinkState& p, const FamilySpec& fam);

// Structural sweep: composes every ideal-basis diagram y of p with e and
// demands the bare diagram y back with uniform scalar counts.
AbsorptionReport check_absorption(const LinkState& p, const Diagram& e,
                                  const AlgebraSpec& spec);
// Ring-level sweep for an already-normalized element: demands y*e == y
// exactly, so the reported exponents are zero.
AbsorptionReport check_absorption(const LinkState& p, const AlgebraElement& e,
                                  const AlgebraSpec& spec);

// mirror_dp(p) scaled by the inverse of its self-absorption scalar, making
// an idempotent that generates the left ideal of p. Raises NotInvertible
// naming the parameter whose inverse is missing in the ring.
AlgebraElement normalized_idempotent(const LinkState& p, const AlgebraSpec& spec);

// Walled-Brauer threading. Every defect except the bottom-most is extended
// to a horizontal propagating edge; the bottom-most defect is routed through
// all x arcs of p (ordered by upper endpoint), alternating across the wall,
// so that composing any ideal member with the result creates no loops. The
// output is idempotent for every value of delta.
Diagram walled_ep(const LinkState& p, int r, int s);

// Blob threading. The vertices are split into intervals (vertex_split); in
// each defect interval the right-copy defect is routed through every arc of
// the interval, entering at the interval's far end; a leading defect-free
// interval is closed into a single blobbed loop via blobbed_loop_completion.
// Composing y in the ideal of q with the result gives y back, times gamma
// when q has blobbed arcs.
Diagram blob_eq(const LinkState& q, int n);

// 1-based inclusive vertex range.
struct VertexInterval {
  int lo = 0;
  int hi = 0;
  friend bool operator==(const VertexInterval&, const VertexInterval&) = default;
};

// Consecutive intervals covering 1..n, one defect per interval with whole
// arcs attached to the nearer defect, except that when q has blobbed arcs
// the leading interval holds everything above the first defect and no
// defect.
std::vector<VertexInterval> vertex_split(const LinkState& q);

// For a defect-free state with at least one blobbed arc: a state q' such
// that the juxtaposition of q and q' is a single loop, necessarily blobbed.
// Cyclic shift of q by one vertex, with an exhaustive search fallback.
LinkState blobbed_loop_completion(const LinkState& q);

// True iff {x*e : x in the diagram basis} spans exactly the ideal of p as a
// k-submodule of the algebra.
bool check_ideal_generation(const AlgebraElement& e, const LinkState& p,
                            const AlgebraSpec& spec);

// True iff every listed element squares to itself and all pairs commute.
bool check_commuting_idempotents(const std::vector<AlgebraElement>& es);

}  // namespace diaghom
