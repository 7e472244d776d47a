#pragma once

#include <map>
#include <string>

#include "diaghom/homology.hpp"

namespace diaghom {

// Multiplication by |G| on the rank-one trivial module, read in the target
// ring.  Degree-0 homology and cohomology of the reduced bar complex are both
// literally the ground ring via the augmentation, and under those
// identifications the norm element sum_{g in G} g acts as the scalar |G|.
Scalar norm_map(const GroupSpec& g, const RingSpec& ring);

// Integer-graded splice of Ext (positive degrees), the kernel and cokernel of
// the norm (degrees -1 and 0), and shifted Tor (degrees <= -2), over the
// window [-D-1, D].
struct TateTable {
  RingSpec ring;
  int lo = 0;
  int hi = -1;
  std::map<int, AbelianInvariants> degrees;
  Scalar norm_description;

  bool is_zero() const;
  // Two-row chart: degree labels above, invariants below.
  std::string to_string() const;
};

bool operator==(const TateTable& a, const TateTable& b);

// Refuses with NotGCentred (naming the first disagreeing degree) unless the
// algebra's Tor and Ext agree with the group's through degree D.
TateTable tate_table(const AugmentedAlgebra& a, const GroupSpec& g, int D, const RingSpec& ring,
                     long long budget = kDefaultChainBudget);

// The same splice applied to the group algebra itself; the comparison column.
TateTable tate_group(const GroupSpec& g, int D, const RingSpec& ring,
                     long long budget = kDefaultChainBudget);

}  // namespace diaghom
