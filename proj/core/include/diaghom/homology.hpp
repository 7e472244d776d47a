#pragma once

// Reduced bar complexes for augmented algebras (diagram algebras, quotients,
// group algebras) and their Tor/Ext with trivial coefficients up to a
// truncation degree.

#include <string>
#include <utility>
#include <vector>

#include "diaghom/algebra.hpp"
#include "diaghom/snf.hpp"

namespace diaghom {

// Cap on the rank of any chain group materialized by bar_complex.
inline constexpr long long kDefaultChainBudget = 2'000'000;

// A based algebra with its unit split off. The reduced basis consists of
// b - tau(b) 1 over every basis slot except a distinguished one carrying the
// unit (unimodular change of basis, so the complement is free over Z too).
// Products of reduced elements are re-expanded in the reduced basis; this is
// well defined because tau is multiplicative, which is verified both on a
// sample at construction and on every product actually expanded.
class AugmentedAlgebra {
 public:
  static AugmentedAlgebra make(const BasedAlgebra& a);

  const BasedAlgebra& algebra() const { return base_; }
  const Ring& ring() const { return base_.ring(); }
  int dim() const { return base_.dim(); }
  int reduced_dim() const { return base_.dim() - 1; }

  // Distinguished basis slot absorbed into the unit.
  int unit_index() const { return unit_index_; }
  int full_index(int reduced) const { return reduced < unit_index_ ? reduced : reduced + 1; }

  // v_i v_j expanded over the reduced basis, sorted by index. Cached.
  const std::vector<std::pair<int, Scalar>>& reduced_product(int i, int j) const;
  std::string label(int reduced) const;

 private:
  AugmentedAlgebra(BasedAlgebra base, int unit_index, std::vector<Scalar> tau);

  BasedAlgebra base_;
  int unit_index_ = 0;
  std::vector<Scalar> tau_;  // per full basis index
  mutable std::vector<std::vector<std::pair<int, Scalar>>> cache_;
  mutable std::vector<char> cached_;
};

struct ChainComplex {
  std::vector<long long> dims;         // dims[k] = rank of C_k, k = 0..K
  std::vector<SparseMatrix> boundary;  // boundary[k]: C_k -> C_{k-1}; boundary[0] has 0 rows
};

// Reduced bar complex with C_k = (reduced basis)^{tensor k}, built through
// degree D+1 so homology in degrees <= D is exact. Differential is the sum of
// inner faces with signs (-1)^i, i = 1..k-1; d_1 = 0; d compose d = 0 is
// asserted on every built complex. Throws BudgetExceeded naming the first
// chain rank over budget.
ChainComplex bar_complex(const AugmentedAlgebra& a, int D,
                         long long budget = kDefaultChainBudget);

struct GradedInvariants {
  RingSpec ring;
  int truncation = 0;
  std::vector<AbelianInvariants> degrees;  // 0..truncation
  // Degree k is reported only after d_{k+1} was materialized; bar_complex
  // always builds through D+1, so these are all true on success.
  std::vector<bool> reliable;

  std::string to_string() const;
};

// Homology of the reduced bar complex in degrees 0..D. The coefficient ring
// must be the algebra's own ring, or any ring when the algebra is defined
// over the integers (entries are then re-read in the target ring).
GradedInvariants tor(const AugmentedAlgebra& a, int D, const RingSpec& ring,
                     long long budget = kDefaultChainBudget);

// Cohomology of the entrywise-transposed complex over the same ring.
GradedInvariants ext(const AugmentedAlgebra& a, int D, const RingSpec& ring,
                     long long budget = kDefaultChainBudget);

struct QuotientSpec {
  AlgebraSpec algebra;
  int ideal_level = -1;  // -1 is the zero ideal, so the quotient is the algebra
};

// Tor of the quotient of a diagram algebra by its two-sided ideal at the
// given level; the augmentation descends because the ideal augments to zero.
GradedInvariants tor_of_quotient(const QuotientSpec& q, int D, const RingSpec& ring,
                                 long long budget = kDefaultChainBudget);

struct GCentredEntry {
  RingSpec ring;
  GradedInvariants algebra_tor;
  GradedInvariants group_tor;
  GradedInvariants algebra_ext;
  GradedInvariants group_ext;
};

struct GCentredReport {
  bool agrees = true;
  std::string first_disagreement;  // empty when agrees
  std::vector<GCentredEntry> entries;
};

// Compares the algebra's Tor/Ext against the group algebra's over each listed
// ring, degree by degree, as abstract invariants (no induced map is built).
GCentredReport g_centred_check(const AugmentedAlgebra& a, const GroupSpec& g, int D,
                               const std::vector<RingSpec>& rings,
                               long long budget = kDefaultChainBudget);

}  // namespace diaghom
