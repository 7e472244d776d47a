// Command line front end: enumerate bases and link states, export
// multiplication tables, sweep idempotent constructions, compute Tor/Ext and
// Tate tables, and re-run the registered theorem checks.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or config error.

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "diaghom/idempotent.hpp"
#include "diaghom/json_io.hpp"
#include "diaghom/tate.hpp"
#include "json.hpp"

using namespace diaghom;

namespace {

struct Cfg {
  std::string family_txt, group_txt;
  std::string ring_txt;  // empty = unset, resolved to "z" or a registry default
  std::string format = "json";
  std::string out_path;
  std::string delta_txt, epsilon_txt, gamma_txt;
  int n = -1, r = -1, s = -1;
  int D = -1;  // unset, resolved to 3
  long long budget = kDefaultChainBudget;
  int threads = 1;
  bool states = false;
};

[[noreturn]] void usage_error(const std::string& msg) { throw Error(Errc::BadArgument, msg); }

RingSpec ring_of(const Cfg& c) { return RingSpec::parse(c.ring_txt.empty() ? "z" : c.ring_txt); }

int depth_of(const Cfg& c) {
  const int D = c.D < 0 ? 3 : c.D;
  if (c.D != -1 && c.D < 0) usage_error("--D must be >= 0");
  return D;
}

FamilySpec family_of(const Cfg& c) {
  if (c.family_txt.empty()) usage_error("--family is required for this command");
  const Family f = family_from_name(c.family_txt);
  if (f == Family::WalledBrauer) {
    if (c.r < 0 || c.s < 0) usage_error("the walled family needs --r and --s");
    return FamilySpec::walled(c.r, c.s);
  }
  if (c.n < 0) usage_error("--n is required for " + family_name(f));
  return FamilySpec::make(f, c.n);
}

AlgebraSpec algebra_of(const Cfg& c) {
  const FamilySpec fam = family_of(c);
  const RingSpec ring = ring_of(c);
  const Ring r(ring);
  AlgebraParams p;
  if (!c.delta_txt.empty()) p.delta = r.parse(c.delta_txt);
  if (!c.epsilon_txt.empty()) p.epsilon = r.parse(c.epsilon_txt);
  if (!c.gamma_txt.empty()) p.gamma = r.parse(c.gamma_txt);
  return AlgebraSpec::make(fam, ring, p);
}

AugmentedAlgebra augmented_of(const Cfg& c) {
  return AugmentedAlgebra::make(BasedAlgebra::diagram_algebra(algebra_of(c)));
}

void emit(const Cfg& c, const std::string& text) {
  if (c.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(c.out_path, std::ios::binary);
  if (!out) usage_error("cannot open --out path " + c.out_path);
  out << text;
}

int cmd_enumerate(const Cfg& c) {
  const FamilySpec fam = family_of(c);
  if (c.states) {
    const std::vector<LinkState> states = all_right_link_states(fam);
    if (c.format == "json") {
      emit(c, state_enumeration_json(fam, states) + "\n");
    } else if (c.format == "pretty") {
      std::ostringstream os;
      os << fam.to_string() << ": " << states.size() << " right link states\n";
      for (const LinkState& p : states) os << "  " << p.to_string() << "\n";
      emit(c, os.str());
    } else {
      usage_error("enumerate supports --format json or pretty");
    }
    return 0;
  }
  const std::vector<Diagram> basis =
      enumerate_family(fam, static_cast<std::size_t>(c.budget));
  if (c.format == "json") {
    emit(c, enumeration_json(fam, basis) + "\n");
  } else if (c.format == "pretty") {
    std::ostringstream os;
    os << fam.to_string() << ": " << basis.size() << " diagrams\n";
    for (const Diagram& d : basis) os << "  " << d.to_string() << "\n";
    emit(c, os.str());
  } else {
    usage_error("enumerate supports --format json or pretty");
  }
  return 0;
}

int cmd_table(const Cfg& c) {
  const BasedAlgebra a = BasedAlgebra::diagram_algebra(algebra_of(c));
  if (c.format != "json") usage_error("table supports --format json only");
  emit(c, table_json(a) + "\n");
  return 0;
}

int cmd_idempotents(const Cfg& c) {
  const AlgebraSpec spec = algebra_of(c);
  const FamilySpec& fam = spec.family();
  std::ostringstream os;
  bool all_ok = true;
  for (const LinkState& p : all_right_link_states(fam)) {
    IdempotentReport rep;
    rep.state = p;
    const AbsorptionReport structural = check_absorption(p, mirror_dp(p, fam), spec);
    rep.alpha = structural.alpha;
    rep.beta = structural.beta;
    bool ok = structural.holds;
    if (!ok) rep.note = "mirror self-absorption failed";
    try {
      const AlgebraElement e = normalized_idempotent(p, spec);
      rep.normalized = true;
      rep.square = multiply(e, e) == e;
      rep.absorbs = check_absorption(p, e, spec).holds;
      rep.generates = check_ideal_generation(e, p, spec);
      ok = ok && rep.square && rep.absorbs && rep.generates;
    } catch (const Error& err) {
      // Non-invertible parameters refuse the construction; that is a report
      // line, not a failure of the sweep.
      rep.note = err.what();
    }
    all_ok = all_ok && ok;
    if (c.format == "json") {
      os << idempotent_report_json(rep) << "\n";
    } else if (c.format == "pretty") {
      os << p.to_string() << ": alpha=" << rep.alpha << " beta=" << rep.beta << " "
         << (rep.normalized ? (ok ? "ok" : "FAILED") : "skipped: " + rep.note) << "\n";
    } else {
      usage_error("idempotents supports --format json or pretty");
    }
  }
  emit(c, os.str());
  return all_ok ? 0 : 1;
}

int cmd_homology(const Cfg& c) {
  const RingSpec ring = ring_of(c);
  const int D = depth_of(c);
  if (!c.group_txt.empty() && !c.family_txt.empty())
    usage_error("give either --family or --group, not both");
  std::string json_text, pretty_head;
  GradedInvariants tor_inv, ext_inv;
  if (!c.group_txt.empty()) {
    const GroupSpec g = GroupSpec::parse(c.group_txt);
    const AugmentedAlgebra a = AugmentedAlgebra::make(BasedAlgebra::group_algebra(g, ring));
    tor_inv = tor(a, D, ring, c.budget);
    ext_inv = ext(a, D, ring, c.budget);
    json_text = homology_group_json(g, ring, D, tor_inv, ext_inv);
    pretty_head = "group algebra of " + g.to_string() + " over " + ring.to_string();
  } else {
    const AlgebraSpec spec = algebra_of(c);
    const AugmentedAlgebra a = augmented_of(c);
    tor_inv = tor(a, D, ring, c.budget);
    ext_inv = ext(a, D, ring, c.budget);
    json_text = homology_json(spec, ring, D, tor_inv, ext_inv);
    pretty_head = spec.to_string();
  }
  if (c.format == "json") {
    emit(c, json_text + "\n");
  } else if (c.format == "csv") {
    emit(c, homology_csv(ring, D, tor_inv, ext_inv));
  } else if (c.format == "pretty") {
    emit(c, pretty_head + ", D=" + std::to_string(D) + "\ntor: " + tor_inv.to_string() +
                "\next: " + ext_inv.to_string() + "\n");
  } else {
    usage_error("homology supports --format json, csv, or pretty");
  }
  return 0;
}

int cmd_tate(const Cfg& c) {
  const RingSpec ring = ring_of(c);
  const int D = depth_of(c);
  if (c.group_txt.empty()) usage_error("tate needs --group (the centring group)");
  const GroupSpec g = GroupSpec::parse(c.group_txt);
  const TateTable table = c.family_txt.empty()
                              ? tate_group(g, D, ring, c.budget)
                              : tate_table(augmented_of(c), g, D, ring, c.budget);
  if (c.format == "json") {
    emit(c, tate_json(table) + "\n");
  } else if (c.format == "pretty") {
    emit(c, table.to_string() + "\n");
  } else {
    usage_error("tate supports --format json or pretty");
  }
  return 0;
}

// ---- theorem registry ----

struct VerifyOutcome {
  bool pass = false;
  std::string detail;
};

struct TheoremEntry {
  const char* id;
  const char* claim;
  std::function<VerifyOutcome(Cfg)> run;
};

// Fill registry defaults for flags the user left unset.
Cfg defaults(Cfg c, const char* family, int n, int r, int s, const char* delta,
             const char* epsilon, const char* gamma, const char* ring) {
  if (c.family_txt.empty() && family) c.family_txt = family;
  if (c.n < 0) c.n = n;
  if (c.r < 0) c.r = r;
  if (c.s < 0) c.s = s;
  if (c.delta_txt.empty() && delta) c.delta_txt = delta;
  if (c.epsilon_txt.empty() && epsilon) c.epsilon_txt = epsilon;
  if (c.gamma_txt.empty() && gamma) c.gamma_txt = gamma;
  if (c.ring_txt.empty() && ring) c.ring_txt = ring;
  return c;
}

// Tor and Ext of the diagram algebra against the group algebra, degree by
// degree through D, over the configured ring.
VerifyOutcome match_group(const Cfg& c, const GroupSpec& g) {
  const AlgebraSpec spec = algebra_of(c);
  const int D = depth_of(c);
  const GCentredReport rep =
      g_centred_check(augmented_of(c), g, D, {ring_of(c)}, c.budget);
  if (rep.agrees)
    return {true, spec.to_string() + " matches k[" + g.to_string() + "] through degree " +
                      std::to_string(D)};
  return {false, rep.first_disagreement};
}

VerifyOutcome run_rb_remark(const Cfg& cfg) {
  const Cfg c = defaults(cfg, "rook_brauer", 2, -1, -1, "2", "3", nullptr, "z");
  const AlgebraSpec spec = algebra_of(c);
  const int n = spec.family().n;
  if (n < 2) return {false, "the identity needs n >= 2"};
  // e1: arcs {1,2} and {1bar,2bar}; rho1: vertices 1, 1bar isolated. All
  // other strands run straight through.
  std::vector<std::pair<int, int>> e1_edges = {{1, 2}, {-1, -2}};
  std::vector<std::pair<int, int>> rho1_edges;
  for (int j = 3; j <= n; ++j) e1_edges.push_back({j, -j});
  for (int j = 2; j <= n; ++j) rho1_edges.push_back({j, -j});
  const AlgebraElement e1 = AlgebraElement::basis(spec, Diagram::from_edges(n, e1_edges));
  const AlgebraElement rho1 = AlgebraElement::basis(spec, Diagram::from_edges(n, rho1_edges));
  const AlgebraElement lhs = multiply(multiply(e1, rho1), e1);
  const AlgebraElement rhs = scale(spec.epsilon(), e1);
  if (lhs == rhs)
    return {true, "e1 rho1 e1 = epsilon e1 holds exactly in " + spec.to_string()};
  return {false, "e1 rho1 e1 = " + lhs.to_string() + " but epsilon e1 = " + rhs.to_string()};
}

VerifyOutcome run_tate_rook(const Cfg& cfg) {
  const Cfg c = defaults(cfg, "rook", 2, -1, -1, nullptr, "1", nullptr, "z");
  const GroupSpec g = GroupSpec::symmetric(family_of(c).n);
  const TateTable lhs = tate_table(augmented_of(c), g, depth_of(c), ring_of(c), c.budget);
  const TateTable rhs = tate_group(g, depth_of(c), ring_of(c), c.budget);
  if (lhs == rhs)
    return {true, "Tate table of " + algebra_of(c).to_string() + " equals the " +
                      g.to_string() + " table on [" + std::to_string(lhs.lo) + ", " +
                      std::to_string(lhs.hi) + "]"};
  return {false, "tables differ:\n" + lhs.to_string() + "\nvs\n" + rhs.to_string()};
}

VerifyOutcome run_tate_tl(const Cfg& cfg) {
  const Cfg c = defaults(cfg, "temperley_lieb", 3, -1, -1, "0", nullptr, nullptr, "z");
  const TateTable t =
      tate_table(augmented_of(c), GroupSpec::trivial(), depth_of(c), ring_of(c), c.budget);
  if (t.is_zero()) return {true, "Tate table vanishes identically on the window"};
  return {false, "nonzero entries:\n" + t.to_string()};
}

VerifyOutcome run_idempotent_suite(const Cfg& cfg) {
  // Exhaustive hypothesis sweep: every family at small size, both over Q with
  // generic invertible parameters and over Z with all parameters 1.
  std::vector<FamilySpec> fams;
  if (!cfg.family_txt.empty()) {
    fams.push_back(family_of(cfg));
  } else {
    for (Family f : {Family::RookBrauer, Family::Motzkin, Family::Rook, Family::PlanarRook,
                     Family::Brauer, Family::TemperleyLieb, Family::DiluteTL})
      for (int n = 1; n <= 3; ++n) fams.push_back(FamilySpec::make(f, n));
    for (int n = 1; n <= 4; ++n) fams.push_back(FamilySpec::make(Family::Blob, n));
    for (int total = 1; total <= 4; ++total)
      for (int r = 0; r <= total; ++r) fams.push_back(FamilySpec::walled(r, total - r));
  }
  long states_checked = 0;
  for (const FamilySpec& fam : fams) {
    struct Setting {
      RingSpec ring;
      long dv, ev, gv;
    };
    for (const Setting& st : {Setting{RingSpec::rationals(), 2, 3, 5},
                              Setting{RingSpec::integers(), 1, 1, 1}}) {
      const Ring r(st.ring);
      AlgebraParams p;
      if (fam.uses_delta()) p.delta = r.from_int(st.dv);
      if (fam.uses_epsilon()) p.epsilon = r.from_int(st.ev);
      if (fam.uses_gamma()) p.gamma = r.from_int(st.gv);
      const AlgebraSpec spec = AlgebraSpec::make(fam, st.ring, p);
      for (const LinkState& q : all_right_link_states(fam)) {
        const AlgebraElement e = normalized_idempotent(q, spec);
        if (multiply(e, e) != e)
          return {false, fam.to_string() + " state " + q.to_string() + ": e*e != e"};
        if (!check_absorption(q, e, spec).holds)
          return {false, fam.to_string() + " state " + q.to_string() + ": absorption fails"};
        if (!check_ideal_generation(e, q, spec))
          return {false, fam.to_string() + " state " + q.to_string() + ": e does not generate"};
        ++states_checked;
      }
    }
  }
  return {true, std::to_string(states_checked) + " link-state idempotents verified"};
}

const std::vector<TheoremEntry>& registry() {
  static const std::vector<TheoremEntry> entries = {
      {"thm-rb-invertible",
       "rook-Brauer with invertible delta, epsilon has the homology of the symmetric group",
       [](Cfg c) {
         c = defaults(c, "rook_brauer", 2, -1, -1, "1", "1", nullptr, "z");
         return match_group(c, GroupSpec::symmetric(family_of(c).n));
       }},
      {"thm-motzkin-vanishing",
       "Motzkin with invertible delta, epsilon has vanishing positive homology",
       [](Cfg c) {
         c = defaults(c, "motzkin", 2, -1, -1, "1", "1", nullptr, "z");
         return match_group(c, GroupSpec::trivial());
       }},
      {"thm-tl-odd", "Temperley-Lieb at delta = 0, n odd, has vanishing positive homology",
       [](Cfg c) {
         c = defaults(c, "temperley_lieb", 3, -1, -1, "0", nullptr, nullptr, "z");
         return match_group(c, GroupSpec::trivial());
       }},
      {"thm-brauer-odd", "Brauer at delta = 0, n odd, has the homology of the symmetric group",
       [](Cfg c) {
         c = defaults(c, "brauer", 3, -1, -1, "0", nullptr, nullptr, "z");
         return match_group(c, GroupSpec::symmetric(family_of(c).n));
       }},
      {"thm-brauer-invertible",
       "Brauer with invertible delta has the homology of the symmetric group",
       [](Cfg c) {
         c = defaults(c, "brauer", 2, -1, -1, "1", nullptr, nullptr, "z");
         return match_group(c, GroupSpec::symmetric(family_of(c).n));
       }},
      {"thm-rook-invertible",
       "rook with invertible epsilon has the homology of the symmetric group",
       [](Cfg c) {
         c = defaults(c, "rook", 2, -1, -1, nullptr, "1", nullptr, "z");
         return match_group(c, GroupSpec::symmetric(family_of(c).n));
       }},
      {"thm-planar-rook",
       "planar rook with invertible epsilon has vanishing positive homology",
       [](Cfg c) {
         c = defaults(c, "planar_rook", 3, -1, -1, nullptr, "1", nullptr, "z");
         return match_group(c, GroupSpec::trivial());
       }},
      {"thm-walled-invertible",
       "walled Brauer with invertible delta has the homology of Sigma_r x Sigma_s",
       [](Cfg c) {
         c = defaults(c, "walled_brauer", -1, 1, 1, "1", nullptr, nullptr, "z");
         const FamilySpec fam = family_of(c);
         return match_group(c, GroupSpec::product_symmetric(fam.r, fam.s));
       }},
      {"thm-walled-odd",
       "walled Brauer at delta = 0, r+s odd, has the homology of Sigma_r x Sigma_s",
       [](Cfg c) {
         c = defaults(c, "walled_brauer", -1, 1, 2, "0", nullptr, nullptr, "z");
         const FamilySpec fam = family_of(c);
         return match_group(c, GroupSpec::product_symmetric(fam.r, fam.s));
       }},
      {"blob-invertible",
       "blob with invertible delta, gamma has vanishing positive homology",
       [](Cfg c) {
         c = defaults(c, "blob", 2, -1, -1, "1", nullptr, "1", "z");
         return match_group(c, GroupSpec::trivial());
       }},
      {"blob-odd", "blob at delta = 0, n odd, invertible gamma, has vanishing positive homology",
       [](Cfg c) {
         c = defaults(c, "blob", 3, -1, -1, "0", nullptr, "1", "z2");
         return match_group(c, GroupSpec::trivial());
       }},
      {"dilute-vanishing",
       "dilute Temperley-Lieb with invertible delta has vanishing positive homology",
       [](Cfg c) {
         c = defaults(c, "dilute_tl", 2, -1, -1, "1", nullptr, nullptr, "q");
         return match_group(c, GroupSpec::trivial());
       }},
      {"rb-remark", "in the rook-Brauer algebra, e1 rho1 e1 = epsilon e1", run_rb_remark},
      {"tate-rook", "Tate table of rook at invertible epsilon equals the symmetric group table",
       run_tate_rook},
      {"tate-tl-trivial", "Tate table of 1-centred Temperley-Lieb vanishes identically",
       run_tate_tl},
      {"idempotent-suite",
       "normalized link-state idempotents square, absorb, and generate at desk scale",
       run_idempotent_suite},
  };
  return entries;
}

int cmd_verify(const Cfg& c, const std::string& id) {
  if (id.empty()) {
    std::ostringstream os;
    for (const TheoremEntry& e : registry()) os << e.id << ": " << e.claim << "\n";
    emit(c, os.str());
    return 0;
  }
  for (const TheoremEntry& e : registry()) {
    if (id != e.id) continue;
    const VerifyOutcome outcome = e.run(c);
    if (c.format == "json") {
      nlohmann::ordered_json j;
      j["id"] = e.id;
      j["claim"] = e.claim;
      j["pass"] = outcome.pass;
      j["detail"] = outcome.detail;
      emit(c, j.dump() + "\n");
    } else {
      emit(c, std::string(e.id) + ": " + (outcome.pass ? "PASS" : "FAIL") + " - " +
                  outcome.detail + "\n");
    }
    return outcome.pass ? 0 : 1;
  }
  usage_error("unknown theorem id '" + id + "'; run verify with no id for the list");
}

}  // namespace

int main(int argc, char** argv) {
  Cfg cfg;
  std::string theorem_id;

  CLI::App app{"exact homology engine for diagram algebras"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--family", cfg.family_txt, "diagram family name")
        ->envname("DIAGHOM_FAMILY");
    sub->add_option("--group", cfg.group_txt, "group spec: trivial, s<n>, c<n>, s<r>xs<s>")
        ->envname("DIAGHOM_GROUP");
    sub->add_option("--n", cfg.n, "number of vertices per column")->envname("DIAGHOM_N");
    sub->add_option("--r", cfg.r, "walled left block")->envname("DIAGHOM_R");
    sub->add_option("--s", cfg.s, "walled right block")->envname("DIAGHOM_S");
    sub->add_option("--delta", cfg.delta_txt, "loop parameter (decimal or p/q)")
        ->envname("DIAGHOM_DELTA");
    sub->add_option("--epsilon", cfg.epsilon_txt, "isolated-strand parameter")
        ->envname("DIAGHOM_EPSILON");
    sub->add_option("--gamma", cfg.gamma_txt, "blobbed-loop parameter")
        ->envname("DIAGHOM_GAMMA");
    sub->add_option("--ring", cfg.ring_txt, "coefficient ring: z, q, z<m>")
        ->envname("DIAGHOM_RING");
    sub->add_option("--D", cfg.D, "homological truncation degree (default 3)")
        ->envname("DIAGHOM_D");
    sub->add_option("--format", cfg.format, "output format: json, csv, pretty")
        ->envname("DIAGHOM_FORMAT");
    sub->add_option("--out", cfg.out_path, "write output to this file instead of stdout")
        ->envname("DIAGHOM_OUT");
    sub->add_option("--budget", cfg.budget,
                    "largest admissible basis / chain rank before refusing")
        ->envname("DIAGHOM_BUDGET");
    sub->add_option("--threads", cfg.threads,
                    "thread cap (the engine currently runs single-threaded)")
        ->check(CLI::PositiveNumber)
        ->envname("DIAGHOM_THREADS");
  };

  CLI::App* enumerate = app.add_subcommand("enumerate", "list the diagram basis of a family");
  enumerate->add_flag("--states", cfg.states, "list right link states instead of diagrams");
  add_common(enumerate);
  CLI::App* table = app.add_subcommand("table", "export the multiplication table");
  add_common(table);
  CLI::App* idempotents =
      app.add_subcommand("idempotents", "sweep link-state idempotent constructions");
  add_common(idempotents);
  CLI::App* homology =
      app.add_subcommand("homology", "Tor and Ext of an algebra with trivial coefficients");
  add_common(homology);
  CLI::App* tate = app.add_subcommand("tate", "integer-graded Tate table");
  add_common(tate);
  CLI::App* verify = app.add_subcommand("verify", "re-run a registered theorem check");
  verify->add_option("id", theorem_id, "theorem id; omit to list the registry");
  add_common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (enumerate->parsed()) return cmd_enumerate(cfg);
    if (table->parsed()) return cmd_table(cfg);
    if (idempotents->parsed()) return cmd_idempotents(cfg);
    if (homology->parsed()) return cmd_homology(cfg);
    if (tate->parsed()) return cmd_tate(cfg);
    if (verify->parsed()) return cmd_verify(cfg, theorem_id);
  } catch (const Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    // A failed centredness precondition is a verification failure, not a
    // configuration problem.
    return err.code() == Errc::NotGCentred ? 1 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
