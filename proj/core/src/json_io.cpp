#include "diaghom/json_io.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace diaghom {

namespace {

using ordered_json = nlohmann::ordered_json;

// Torsion factors are arbitrary-precision; keep them as JSON numbers while
// they fit and fall back to decimal strings beyond that.
ordered_json int_value(const Int& v) {
  if (v.fits_slong_p()) return ordered_json(v.get_si());
  return ordered_json(v.get_str());
}

ordered_json diagram_value(const Diagram& d) {
  ordered_json j;
  j["n"] = d.n();
  ordered_json partner = ordered_json::array();
  for (int s = 0; s < d.slots(); ++s)
    partner.push_back(d.is_isolated(s) ? 0 : d.partner(s) + 1);
  j["partner"] = std::move(partner);
  ordered_json blobs = ordered_json::array();
  for (const Diagram::Edge& e : d.edge_list())
    if (e.blobbed) blobs.push_back(ordered_json::array({e.a + 1, e.b + 1}));
  j["blobs"] = std::move(blobs);
  return j;
}

ordered_json link_state_value(const LinkState& p) {
  ordered_json j;
  j["n"] = p.n();
  ordered_json arcs = ordered_json::array();
  ordered_json blobbed = ordered_json::array();
  for (const LinkState::Arc& a : p.arcs()) {
    arcs.push_back(ordered_json::array({a.a, a.b}));
    if (a.blobbed) blobbed.push_back(ordered_json::array({a.a, a.b}));
  }
  j["arcs"] = std::move(arcs);
  j["defects"] = p.defects();
  j["isolated"] = p.isolated_vertices();
  for (int v : p.defects())
    if (p.blobbed_at(v)) blobbed.push_back(v);
  j["blobbed"] = std::move(blobbed);
  return j;
}

ordered_json family_value(const FamilySpec& fam) {
  ordered_json j;
  j["family"] = family_name(fam.family);
  j["n"] = fam.n;
  if (fam.family == Family::WalledBrauer) {
    j["r"] = fam.r;
    j["s"] = fam.s;
  }
  return j;
}

ordered_json algebra_value(const AlgebraSpec& spec) {
  ordered_json j = family_value(spec.family());
  j["ring"] = spec.ring().to_string();
  if (spec.family().uses_delta()) j["delta"] = spec.delta().to_string();
  if (spec.family().uses_epsilon()) j["epsilon"] = spec.epsilon().to_string();
  if (spec.family().uses_gamma()) j["gamma"] = spec.gamma().to_string();
  return j;
}

ordered_json invariants_value(const AbelianInvariants& inv) {
  ordered_json j;
  j["free_rank"] = inv.free_rank;
  ordered_json torsion = ordered_json::array();
  for (const Int& t : inv.torsion) torsion.push_back(int_value(t));
  j["torsion"] = std::move(torsion);
  return j;
}

ordered_json graded_value(const GradedInvariants& g) {
  ordered_json arr = ordered_json::array();
  for (const AbelianInvariants& inv : g.degrees) arr.push_back(invariants_value(inv));
  return arr;
}

}  // namespace

std::string diagram_json(const Diagram& d) { return diagram_value(d).dump(); }

std::string link_state_json(const LinkState& p) { return link_state_value(p).dump(); }

std::string enumeration_json(const FamilySpec& fam, const std::vector<Diagram>& basis) {
  ordered_json j = family_value(fam);
  j["count"] = basis.size();
  ordered_json diagrams = ordered_json::array();
  for (const Diagram& d : basis) diagrams.push_back(diagram_value(d));
  j["diagrams"] = std::move(diagrams);
  return j.dump();
}

std::string state_enumeration_json(const FamilySpec& fam, const std::vector<LinkState>& states) {
  ordered_json j = family_value(fam);
  j["count"] = states.size();
  ordered_json list = ordered_json::array();
  for (const LinkState& p : states) list.push_back(link_state_value(p));
  j["states"] = std::move(list);
  return j.dump();
}

std::string table_json(const BasedAlgebra& a) {
  ordered_json j;
  j["algebra"] = a.describe();
  ordered_json basis = ordered_json::array();
  const std::vector<Diagram>* db = a.diagram_basis();
  for (int i = 0; i < a.dim(); ++i) {
    if (db)
      basis.push_back(diagram_value((*db)[static_cast<std::size_t>(i)]));
    else
      basis.push_back(a.label(i));
  }
  j["basis"] = std::move(basis);
  ordered_json table = ordered_json::array();
  for (int i = 0; i < a.dim(); ++i) {
    ordered_json row = ordered_json::array();
    for (int k = 0; k < a.dim(); ++k) {
      ordered_json cell = ordered_json::array();
      for (const auto& [index, coeff] : a.product(i, k))
        cell.push_back(ordered_json::array({coeff.to_string(), index}));
      row.push_back(std::move(cell));
    }
    table.push_back(std::move(row));
  }
  j["table"] = std::move(table);
  return j.dump();
}

std::string invariants_json(const AbelianInvariants& inv) {
  return invariants_value(inv).dump();
}

std::string homology_json(const AlgebraSpec& spec, const RingSpec& ring, int D,
                          const GradedInvariants& tor_inv, const GradedInvariants& ext_inv) {
  ordered_json j;
  j["algebra"] = algebra_value(spec);
  j["ring"] = ring.to_string();
  j["D"] = D;
  j["tor"] = graded_value(tor_inv);
  j["ext"] = graded_value(ext_inv);
  return j.dump();
}

std::string homology_group_json(const GroupSpec& g, const RingSpec& ring, int D,
                                const GradedInvariants& tor_inv, const GradedInvariants& ext_inv) {
  ordered_json j;
  j["algebra"] = ordered_json{{"group", g.to_string()}};
  j["ring"] = ring.to_string();
  j["D"] = D;
  j["tor"] = graded_value(tor_inv);
  j["ext"] = graded_value(ext_inv);
  return j.dump();
}

std::string homology_csv(const RingSpec& ring, int D, const GradedInvariants& tor_inv,
                         const GradedInvariants& ext_inv) {
  std::ostringstream os;
  os << "degree,tor,ext\n";
  for (int k = 0; k <= D; ++k) {
    os << k << ',' << tor_inv.degrees[static_cast<std::size_t>(k)].render(ring) << ','
       << ext_inv.degrees[static_cast<std::size_t>(k)].render(ring) << '\n';
  }
  return os.str();
}

std::string tate_json(const TateTable& t) {
  ordered_json j;
  j["range"] = ordered_json::array({t.lo, t.hi});
  j["ring"] = t.ring.to_string();
  j["norm"] = t.norm_description.to_string();
  ordered_json groups = ordered_json::object();
  for (const auto& [p, inv] : t.degrees) groups[std::to_string(p)] = invariants_value(inv);
  j["groups"] = std::move(groups);
  return j.dump();
}

std::string idempotent_report_json(const IdempotentReport& r) {
  ordered_json j;
  j["state"] = link_state_value(r.state);
  j["alpha"] = r.alpha;
  j["beta"] = r.beta;
  j["normalized"] = r.normalized;
  j["square"] = r.square;
  j["absorbs"] = r.absorbs;
  j["generates"] = r.generates;
  if (!r.note.empty()) j["note"] = r.note;
  return j.dump();
}

}  // namespace diaghom
