#pragma once

#include <string>
#include <vector>

#include "diaghom/algebra.hpp"
#include "diaghom/homology.hpp"
#include "diaghom/idempotent.hpp"
#include "diaghom/linkstate.hpp"
#include "diaghom/tate.hpp"

namespace diaghom {

// Every emitter below returns finished JSON text with insertion-ordered keys
// and no incidental whitespace, so equal inputs serialize byte-identically.

// {"n":…, "partner":[…], "blobs":[[a,b],…]} with 1-based slots, left column
// first, 0 marking an isolated vertex.
std::string diagram_json(const Diagram& d);

// {"n":…, "arcs":[[a,b],…], "defects":[…], "isolated":[…], "blobbed":[…]};
// blobbed lists decorated arcs as pairs, then decorated defects as integers.
std::string link_state_json(const LinkState& p);

// {"family":…, "n":…, "count":…, "diagrams":[…]}
std::string enumeration_json(const FamilySpec& fam, const std::vector<Diagram>& basis);
// {"family":…, "n":…, "count":…, "states":[…]}
std::string state_enumeration_json(const FamilySpec& fam, const std::vector<LinkState>& states);

// {"algebra":…, "basis":[…], "table":[[[coeff,index],…],…]} with decimal
// string coefficients; table[i][j] expands the product basis_i * basis_j.
std::string table_json(const BasedAlgebra& a);

// {"free_rank":…, "torsion":[…]}
std::string invariants_json(const AbelianInvariants& inv);

// {"algebra":…, "ring":…, "D":…, "tor":[…], "ext":[…]}
std::string homology_json(const AlgebraSpec& spec, const RingSpec& ring, int D,
                          const GradedInvariants& tor_inv, const GradedInvariants& ext_inv);
// Same document shape for a group algebra: {"algebra":{"group":…}, …}.
std::string homology_group_json(const GroupSpec& g, const RingSpec& ring, int D,
                                const GradedInvariants& tor_inv, const GradedInvariants& ext_inv);
// Same content as a degree-per-row CSV: degree,tor,ext with rendered groups.
std::string homology_csv(const RingSpec& ring, int D, const GradedInvariants& tor_inv,
                         const GradedInvariants& ext_inv);

// {"range":[lo,hi], "ring":…, "norm":…, "groups":{"-2":{…},…}}
std::string tate_json(const TateTable& t);

// One verification row of the idempotent sweep, emitted as a JSON line.
struct IdempotentReport {
  LinkState state;
  int alpha = 0;      // delta exponent of the mirror self-product
  int beta = 0;       // epsilon resp. gamma exponent
  bool normalized = false;  // parameters invertible, e_p constructed
  bool square = false;      // e*e == e
  bool absorbs = false;     // y*e == y across the ideal basis
  bool generates = false;   // left products of e span the ideal
  std::string note;         // failure detail when a stage is refused
};
std::string idempotent_report_json(const IdempotentReport& r);

}  // namespace diaghom
