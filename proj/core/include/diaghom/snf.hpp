#pragma once

#include <string>
#include <vector>

#include "diaghom/sparse.hpp"

namespace diaghom {

// Finitely generated abelian group (or R-module) up to isomorphism:
// free part plus torsion in divisibility order (each factor >= 2).
struct AbelianInvariants {
  long free_rank = 0;
  std::vector<Int> torsion;

  bool is_zero() const { return free_rank == 0 && torsion.empty(); }
  bool operator==(const AbelianInvariants& o) const {
    return free_rank == o.free_rank && torsion == o.torsion;
  }
  bool operator!=(const AbelianInvariants& o) const { return !(*this == o); }
  // e.g. "0", "Z", "Z^2 + Z/2 + Z/4"; free summands render as the ring symbol.
  std::string render(const RingSpec& ring) const;
};

struct SmithResult {
  std::vector<Int> factors;  // positive nonzero invariant factors, divisibility chain
  int rank() const { return static_cast<int>(factors.size()); }
};

// Smith normal form over Z. Entries must be integers (den == 1).
SmithResult smith_normal_form(const SparseMatrix& m);

// Rank over Q or Z/p (p prime).
int rank_over_field(const SparseMatrix& m, const Ring& ring);

// Basis of the integer kernel {x : m x = 0}, as columns in echelon form
// (strictly increasing pivot rows). The kernel lattice is saturated, so this
// basis spans every integer kernel vector.
SparseMatrix kernel_basis_z(const SparseMatrix& m);

// Canonical column Hermite normal form of the lattice spanned by the columns:
// zero columns dropped, pivot rows strictly increasing, pivots positive,
// entries left of each pivot reduced into [0, pivot). Lattice invariant.
SparseMatrix hermite_normal_form(const SparseMatrix& m);

// Equality of column spans over the ring (lattice HNF over Z; ranks over
// fields; Z/m handled by appending m*identity and comparing lattices).
bool column_span_equal(const SparseMatrix& a, const SparseMatrix& b, const RingSpec& ring);

// Membership of v in the column span of gens over the ring.
bool in_column_span(const SparseMatrix& gens, const SparseVec& v, const RingSpec& ring);

// Homology at C_k of ... -> C_{k+1} --d_in--> C_k --d_out--> C_{k-1} -> ...
// Requires d_out * d_in == 0 over the ring. Over Z: invariant factors of the
// boundary expressed in an integer kernel basis. Over fields: dimension
// count. Over composite Z/m: lattice quotient {x : d_out x = 0 mod m} /
// (im d_in + m Z^dim), reported as pure torsion.
AbelianInvariants homology_at(const SparseMatrix& d_out, const SparseMatrix& d_in,
                              const RingSpec& ring);

}  // namespace diaghom
