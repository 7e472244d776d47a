#include "diaghom/tate.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "diaghom/error.hpp"
#include "diaghom/snf.hpp"

namespace diaghom {

namespace {

SparseMatrix scalar_matrix(const Scalar& s, const Ring& ring) {
  SparseMatrix m(1, 1);
  if (!ring.is_zero(s)) m.set_column(0, {Entry{0, s}});
  return m;
}

// Kernel and cokernel of multiplication by the norm on the rank-one trivial
// module, computed through the same engine as every other homology group so
// that ring semantics stay uniform.
AbelianInvariants norm_cokernel(const Scalar& nm, const RingSpec& ring) {
  const Ring r(ring);
  return homology_at(SparseMatrix(0, 1), scalar_matrix(nm, r), ring);
}

AbelianInvariants norm_kernel(const Scalar& nm, const RingSpec& ring) {
  const Ring r(ring);
  return homology_at(scalar_matrix(nm, r), SparseMatrix(1, 0), ring);
}

TateTable splice(const GradedInvariants& tor_inv, const GradedInvariants& ext_inv,
                 const GroupSpec& g, int D, const RingSpec& ring) {
  TateTable table;
  table.ring = ring;
  table.lo = -D - 1;
  table.hi = D;
  table.norm_description = norm_map(g, ring);
  for (int p = 1; p <= D; ++p)
    table.degrees[p] = ext_inv.degrees[static_cast<std::size_t>(p)];
  table.degrees[0] = norm_cokernel(table.norm_description, ring);
  if (D >= 0) table.degrees[-1] = norm_kernel(table.norm_description, ring);
  for (int p = -2; p >= -D - 1; --p)
    table.degrees[p] = tor_inv.degrees[static_cast<std::size_t>(-p - 1)];
  return table;
}

}  // namespace

Scalar norm_map(const GroupSpec& g, const RingSpec& ring) {
  return Ring(ring).from_integer(Int(static_cast<unsigned long>(g.order())));
}

bool TateTable::is_zero() const {
  return std::all_of(degrees.begin(), degrees.end(),
                     [](const auto& kv) { return kv.second.is_zero(); });
}

std::string TateTable::to_string() const {
  std::vector<std::string> heads, cells;
  for (const auto& [p, inv] : degrees) {
    heads.push_back(std::to_string(p));
    cells.push_back(inv.render(ring));
  }
  std::ostringstream top, bottom;
  top << "degree:";
  bottom << "value: ";
  for (std::size_t i = 0; i < heads.size(); ++i) {
    const std::size_t width = std::max(heads[i].size(), cells[i].size()) + 2;
    top << std::string(width - heads[i].size(), ' ') << heads[i];
    bottom << std::string(width - cells[i].size(), ' ') << cells[i];
  }
  return top.str() + "\n" + bottom.str();
}

bool operator==(const TateTable& a, const TateTable& b) {
  return a.ring == b.ring && a.lo == b.lo && a.hi == b.hi &&
         a.norm_description == b.norm_description && a.degrees == b.degrees;
}

TateTable tate_table(const AugmentedAlgebra& a, const GroupSpec& g, int D, const RingSpec& ring,
                     long long budget) {
  const GCentredReport report = g_centred_check(a, g, D, {ring}, budget);
  if (!report.agrees)
    throw Error(Errc::NotGCentred,
                a.algebra().describe() + " is not centred on " + g.to_string() + ": " +
                    report.first_disagreement);
  return splice(report.entries[0].algebra_tor, report.entries[0].algebra_ext, g, D, ring);
}

TateTable tate_group(const GroupSpec& g, int D, const RingSpec& ring, long long budget) {
  const AugmentedAlgebra a = AugmentedAlgebra::make(BasedAlgebra::group_algebra(g, ring));
  return splice(tor(a, D, ring, budget), ext(a, D, ring, budget), g, D, ring);
}

}  // namespace diaghom
