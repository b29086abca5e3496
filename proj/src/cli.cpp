#include "idealext/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "idealext/backslash.hpp"
#include "idealext/error.hpp"
#include "idealext/factor.hpp"
#include "idealext/harness.hpp"
#include "idealext/invariants.hpp"
#include "idealext/spec_io.hpp"

namespace idealext::cli {

namespace {

/// A command's payload plus the exit code it asks for (0 or 2).
struct Outcome {
  Json result;
  int code = 0;
};

struct Options {
  std::string monoid_path;
  std::string elem;
  std::string box;
  bool table = false;
  bool json = false;
  bool timing = false;
  unsigned threads = 1;
};

Json axes_json(const std::vector<std::size_t>& axes) {
  Json a = Json::array();
  for (std::size_t i : axes) a.push_back(i + 1);
  return a;
}

Json extnats_json(const std::vector<ExtNat>& v) {
  Json a = Json::array();
  for (const ExtNat& n : v) a.push_back(extnat_json(n));
  return a;
}

Json dense_json(const std::vector<Factorization>& zs, std::size_t n) {
  Json a = Json::array();
  for (const auto& z : zs) a.push_back(z.dense(n));
  return a;
}

class Session {
 public:
  explicit Session(const Options& o) : o_(o) {}

  const Monoid& monoid() {
    if (!spec_) {
      if (o_.monoid_path.empty()) throw Error(ErrorCode::InvalidSpec, "--monoid is required");
      spec_ = load_spec(o_.monoid_path);
    }
    return *spec_->monoid;
  }
  const MonoidSpec& spec() {
    monoid();
    return *spec_;
  }

  Vec elem() {
    if (o_.elem.empty()) throw Error(ErrorCode::InvalidSpec, "an element is required");
    Vec v = parse_vec(o_.elem);
    monoid().require_dim(v);
    return v;
  }
  std::optional<Vec> opt_elem() { return o_.elem.empty() ? std::nullopt : std::optional<Vec>(elem()); }

  std::optional<Box> box() {
    if (o_.box.empty()) return std::nullopt;
    Vec hi = parse_vec(o_.box);
    monoid().require_dim(hi);
    return Box::below(hi);
  }

  /// The monoid as an ideal extension, when it is one in a form we can use.
  const IdealExtension& ideal(const char* what) {
    const auto& sp = spec();
    if (auto* s = sp.ideal()) return *s;
    if (auto* b = sp.backslash()) {
      if (!converted_) converted_ = b->as_ideal_extension();
      if (converted_) return *converted_;
      throw Error(ErrorCode::FormulaOutOfScope, std::string(what) + " needs an ideal extension; T is not ordinary");
    }
    throw Error(ErrorCode::Unsupported, std::string(what) + " is only available for ideal extensions");
  }

  /// Full atom list when finite, otherwise the atoms below x.
  AtomBasis basis_for(const Vec& x) {
    if (auto atoms = monoid().finite_atoms()) return AtomBasis(*atoms);
    return basis_below(monoid(), x);
  }

  unsigned threads() const { return o_.threads; }

 private:
  const Options& o_;
  std::optional<MonoidSpec> spec_;
  std::optional<IdealExtension> converted_;
};

Outcome cmd_info(Session& s) {
  const Monoid& m = s.monoid();
  Json r;
  r["kind"] = m.kind();
  r["dim"] = m.dim();
  if (auto* ie = s.spec().ideal()) {
    r["minimals"] = vecs_json(ie->minimals());
    const auto& g = ie->gaps();
    r["gaps_finite"] = g.finite();
    r["thresholds"] = extnats_json(g.thresholds);
    r["infinite_axes"] = axes_json(g.infinite_axes);
    if (g.finite()) {
      r["gap_count"] = g.gaps.size();
      r["atom_count"] = ie->atoms().size();
    }
    r["extreme_rays"] = vecs_json(ie->extreme_rays());
  } else if (auto* b = s.spec().backslash()) {
    r["J"] = axes_json(b->axes());
    const auto& t = b->semigroup();
    r["T"] = {{"multiplicity", t.multiplicity()}, {"gaps", t.gaps()}, {"atoms", t.atoms()}};
    BsSummaryOptions opt;
    if (auto bx = s.box()) opt.box = bx->hi();
    opt.threads = s.threads();
    auto sum = bs_invariant_summary(*b, opt);
    auto field = [](const auto& f, auto conv) {
      Json j;
      j["value"] = f.value ? conv(*f.value) : Json(nullptr);
      j["status"] = f.status;
      j["note"] = f.note;
      return j;
    };
    r["summary"] = {{"elasticity", field(sum.elasticity, rational_json)},
                    {"length_density", field(sum.length_density, rational_json)},
                    {"catenary", field(sum.catenary, extnat_json)},
                    {"omega", field(sum.omega, extnat_json)},
                    {"gap_absorbing", sum.gap_absorbing}};
  } else if (auto* a = s.spec().atoms()) {
    r["atoms"] = vecs_json(a->basis().atoms());
  }
  return {r};
}

Outcome cmd_member(Session& s) {
  Vec x = s.elem();
  return {{{"element", vec_json(x)}, {"member", s.monoid().contains(x)}, {"atom", s.monoid().is_atom(x)}}};
}

Outcome cmd_gaps(Session& s) {
  const Monoid& m = s.monoid();
  Json r;
  if (auto bx = s.box()) {
    std::vector<Vec> gaps;
    for (const Vec& x : *bx)
      if (!m.contains(x)) gaps.push_back(x);
    r["gaps"] = vecs_json(gaps);
    r["count"] = gaps.size();
    r["provenance"] = "box-relative";
    return {r};
  }
  if (auto* ie = s.spec().ideal()) {
    const auto& g = ie->gaps();
    r["finite"] = g.finite();
    r["thresholds"] = extnats_json(g.thresholds);
    r["infinite_axes"] = axes_json(g.infinite_axes);
    if (g.finite()) {
      r["gaps"] = vecs_json(g.gaps);
      r["count"] = g.gaps.size();
    }
  } else if (auto* b = s.spec().backslash()) {
    auto gaps = b->finite_gaps();
    r["finite"] = gaps.has_value();
    std::vector<std::size_t> free;
    for (std::size_t i = 0; i < b->dim(); ++i)
      if (!std::binary_search(b->axes().begin(), b->axes().end(), i)) free.push_back(i);
    r["infinite_axes"] = axes_json(free);
    if (gaps) {
      r["gaps"] = vecs_json(*gaps);
      r["count"] = gaps->size();
    }
  } else {
    throw Error(ErrorCode::NeedsBoundedMode, "gaps of a generated monoid need --box");
  }
  r["provenance"] = "exact";
  return {r};
}

Outcome cmd_atoms(Session& s) {
  const Monoid& m = s.monoid();
  Json r;
  if (auto bx = s.box()) {
    auto atoms = m.atoms_in_box(*bx);
    r["atoms"] = vecs_json(atoms);
    r["count"] = atoms.size();
    r["provenance"] = "box-relative";
    return {r};
  }
  auto atoms = m.finite_atoms();
  if (!atoms) throw Error(ErrorCode::InfinitelyManyAtoms, "infinitely many atoms; give --box");
  r["atoms"] = vecs_json(*atoms);
  r["count"] = atoms->size();
  r["provenance"] = "exact";
  return {r};
}

Outcome cmd_minimals(Session& s) {
  Json r;
  if (auto* ie = s.spec().ideal()) {
    r["minimals"] = vecs_json(ie->minimals());
  } else if (auto* b = s.spec().backslash()) {
    auto mins = bs_minimals(*b);
    r["minimals"] = vecs_json(mins.vectors);
    r["proven"] = mins.proven;
    if (!mins.note.empty()) r["note"] = mins.note;
  } else {
    auto atoms = *s.monoid().finite_atoms();
    r["minimals"] = vecs_json(minimals_of(atoms));
  }
  return {r};
}

Outcome cmd_core(Session& s) {
  const IdealExtension& ie = s.ideal("core");
  auto c = ie.core();
  Json r;
  r["L"] = axes_json(c.unit_axes);
  r["core_axes"] = axes_json(c.core_axes);
  r["core_minimals"] = c.core ? vecs_json(c.core->minimals()) : Json::array();
  try {
    auto p = betti_core_decomposition(ie);
    r["betti_pieces"] = {{"B1", vecs_json(p.b1)},
                         {"B2", vecs_json(p.b2)},
                         {"B3", vecs_json(p.b3)},
                         {"B4", vecs_json(p.b4)},
                         {"core_betti", vecs_json(p.core_betti)},
                         {"all", vecs_json(p.all)}};
  } catch (const Error& e) {
    r["betti_pieces"] = nullptr;
    r["note"] = e.what();
  }
  return {r};
}

Outcome cmd_factorize(Session& s) {
  Vec x = s.elem();
  AtomBasis basis = s.basis_for(x);
  auto zs = factorizations(basis, x);
  return {{{"element", vec_json(x)},
           {"basis", vecs_json(basis.atoms())},
           {"factorizations", dense_json(zs, basis.size())},
           {"count", zs.size()}}};
}

Outcome cmd_lengths(Session& s, const std::string& what) {
  Vec x = s.elem();
  AtomBasis basis = s.basis_for(x);
  Json r;
  r["element"] = vec_json(x);
  if (what == "lengths") r["lengths"] = lengths(basis, x);
  if (what == "ell") r["ell"] = ell(basis, x);
  if (what == "delta") r["delta"] = delta_elem(basis, x);
  if (what == "elasticity") r["elasticity"] = rational_json(elasticity_elem(basis, x));
  return {r};
}

BettiResult betti_for(Session& s) {
  if (auto bx = s.box()) return betti_in_box(s.monoid(), *bx, s.threads());
  if (s.spec().atoms()) throw Error(ErrorCode::NeedsBoundedMode, "Betti elements of a generated monoid need --box");
  return betti_elements(s.ideal("betti"));
}

Outcome cmd_betti(Session& s) {
  auto b = betti_for(s);
  return {{{"elements", vecs_json(b.elements)},
           {"count", b.elements.size()},
           {"provenance", to_string(b.provenance)},
           {"justification", b.justification}}};
}

Outcome cmd_catenary(Session& s) {
  Json r;
  if (auto x = s.opt_elem()) {
    AtomBasis basis = s.basis_for(*x);
    auto zs = factorizations(basis, *x);
    if (zs.empty()) throw Error(ErrorCode::NoFactorization, to_string(*x) + " has no factorization");
    r["element"] = vec_json(*x);
    r["value"] = catenary_of(zs);
    r["factorizations"] = zs.size();
    r["r_classes"] = r_classes(zs).size();
    r["rclass_formula"] = r_classes(zs).size() >= 2 ? Json(catenary_rclass_formula(zs)) : Json(nullptr);
    return {r};
  }
  auto b = betti_for(s);
  auto c = catenary_over(s.monoid(), b.elements, b.provenance);
  r["value"] = c.value;
  r["attained_at"] = c.attained_at ? vec_json(*c.attained_at) : Json(nullptr);
  r["provenance"] = to_string(c.provenance);
  return {r};
}

Json omega_json(const OmegaResult& w) {
  Json r;
  r["value"] = extnat_json(w.value);
  r["lower_bound"] = extnat_json(w.lower_bound);
  r["upper_bound"] = extnat_json(w.upper_bound);
  r["attained_at"] = w.attained_at ? vec_json(*w.attained_at) : Json(nullptr);
  if (w.infinite_axis) r["infinite_axis"] = *w.infinite_axis + 1;
  r["basis"] = vecs_json(w.basis);
  r["witnesses"] = w.witnesses;
  r["provenance"] = "exact";
  return r;
}

Outcome cmd_omega(Session& s, std::optional<std::uint64_t> cap) {
  const IdealExtension& ie = s.ideal("omega");
  OmegaOptions opt;
  opt.cap = cap;
  if (auto x = s.opt_elem()) return {omega_json(omega_elem(ie, *x, opt))};
  return {omega_json(omega_monoid(ie, opt))};
}

Outcome cmd_check(Session& s, const std::string& rule) {
  const Monoid& m = s.monoid();
  auto bx = s.box();
  Json r;
  r["rule"] = rule;
  bool holds = true;
  if (rule == "ga") {
    auto g = bx ? is_gap_absorbing_in_box(m, *bx) : is_gap_absorbing(m);
    holds = g.holds;
    if (!holds) r["violation"] = {{"rule", g.rule}, {"lhs", vec_json(g.lhs)}, {"rhs", vec_json(g.rhs)}};
  } else if (rule == "2a-intervals") {
    auto iv = bx ? check_2A_interval_closed_in_box(m, *bx) : check_2A_interval_closed(m);
    holds = iv.holds;
    if (!holds) r["violation"] = {{"u", vec_json(iv.u)}, {"w", vec_json(iv.w)}, {"v", vec_json(iv.v)}};
  } else {
    Vec hi(m.dim());
    if (bx) {
      hi = bx->hi();
    } else if (auto atoms = m.finite_atoms()) {
      for (const Vec& a : *atoms) hi = join(hi, a);
      hi = scale(hi, 2);
    } else {
      throw Error(ErrorCode::NeedsBoundedMode, "this check needs --box here");
    }
    Vec top = hi + Vec(std::vector<Coord>(m.dim(), 1));
    LengthTable table(AtomBasis(m.atoms_in_box(Box::below(top))), top);
    for (const Vec& x : Box::below(hi)) {
      auto l = table.lengths(x);
      if (l.empty()) continue;
      if (rule == "lengths-intervals") {
        if (l.back() - l.front() + 1 != l.size()) {
          holds = false;
          r["violation"] = {{"element", vec_json(x)}, {"lengths", l}};
          break;
        }
      } else {
        if (x.is_zero()) continue;
        for (std::size_t i = 0; i < m.dim() && holds; ++i) {
          Vec y = x + Vec::unit(m.dim(), i);
          auto ly = table.min_length(y);
          if (ly && (*ly < l.front() || *ly > l.front() + 1)) {
            holds = false;
            r["violation"] = {{"element", vec_json(x)}, {"ell", l.front()}, {"next", vec_json(y)}, {"next_ell", *ly}};
          }
        }
        if (!holds) break;
      }
    }
  }
  r["holds"] = holds;
  r["provenance"] = bx || (rule != "ga" && rule != "2a-intervals") ? "box-relative" : "exact";
  return {r, holds ? 0 : 2};
}

Outcome cmd_pi(Session& s, std::size_t axis, std::optional<std::uint64_t> vmax) {
  const IdealExtension& ie = s.ideal("pi-profile");
  if (ie.dim() != 2) throw Error(ErrorCode::WrongDimension, "pi-profile needs dimension 2");
  if (axis < 1 || axis > 2) throw Error(ErrorCode::WrongDimension, "--axis must be 1 or 2");
  if (!vmax) {
    std::uint64_t v = 0;
    for (const Vec& mm : ie.minimals()) v = std::max(v, mm[2 - axis]);
    vmax = 2 * v + 2;
  }
  auto p = pi_profile(ie, axis - 1, *vmax);
  Json cols = Json::array();
  for (std::uint64_t z = 0; z <= *vmax; ++z)
    if (auto c = two_atom_column(p, z)) cols.push_back({{"z", z}, {"lo", c->lo}, {"hi", extnat_json(c->hi)}});
  return {{{"axis", axis},
           {"vmax", *vmax},
           {"pi1", extnats_json(p.pi1())},
           {"pi2", extnats_json(p.pi2())},
           {"a_min", p.a_min()},
           {"a_max", extnat_json(p.a_max())},
           {"two_atom_columns", cols}}};
}

void render_table(const Json& j, const std::string& prefix, std::ostream& out) {
  auto scalar = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  std::size_t width = 0;
  for (const auto& [k, v] : j.items()) width = std::max(width, prefix.size() + k.size());
  for (const auto& [k, v] : j.items()) {
    std::string key = prefix + k;
    if (v.is_object()) {
      render_table(v, key + ".", out);
    } else if (v.is_array() && !v.empty() && (v.front().is_array() || v.front().is_object())) {
      out << key << " (" << v.size() << ")\n";
      for (const auto& e : v) out << "  " << e.dump() << "\n";
    } else {
      out << key << std::string(width + 2 - key.size(), ' ') << scalar(v) << "\n";
    }
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariants of ideal extensions of N^d and backslash monoids", "idealext"};
  app.fallthrough();
  app.require_subcommand(1);
  Options o;
  app.add_option("--monoid", o.monoid_path, "Monoid spec JSON file");
  app.add_flag("--json", o.json, "JSON output (default)");
  app.add_flag("--table", o.table, "Aligned text output");
  app.add_flag("--timing", o.timing, "Report wall time");
  app.add_option("--threads", o.threads, "Worker threads for scans")->check(CLI::Range(1u, 256u));

  std::string result_name;
  std::function<Outcome(Session&)> action;
  auto elem_opt = [&](CLI::App* sc, bool required) {
    auto* opt = sc->add_option("elem,--elem", o.elem, "Element, comma-separated coordinates");
    if (required) opt->required();
  };
  auto box_opt = [&](CLI::App* sc) { sc->add_option("--box", o.box, "Upper corner of the box [0, v]"); };
  auto simple = [&](const char* name, const char* help, auto fn) {
    auto* sc = app.add_subcommand(name, help);
    sc->callback([&, name, fn] {
      result_name = name;
      action = fn;
    });
    return sc;
  };

  box_opt(simple("info", "Summary of the monoid", cmd_info));
  elem_opt(simple("member", "Membership and atom test", cmd_member), true);
  box_opt(simple("gaps", "Gap set", cmd_gaps));
  box_opt(simple("atoms", "Atoms", cmd_atoms));
  simple("minimals", "Minimal nonzero elements", cmd_minimals);
  simple("core", "Core and Betti pieces", cmd_core);
  elem_opt(simple("factorize", "All factorizations", cmd_factorize), true);
  const std::pair<const char*, const char*> length_cmds[]{{"lengths", "Set of lengths of an element"},
                                                          {"delta", "Delta set of an element"},
                                                          {"ell", "Minimal factorization length"},
                                                          {"elasticity", "Elasticity of an element"}};
  for (auto [w, desc] : length_cmds) {
    std::string what = w;
    elem_opt(simple(w, desc, [what](Session& s) { return cmd_lengths(s, what); }), true);
  }
  auto* betti = simple("betti", "Betti elements", cmd_betti);
  box_opt(betti);
  auto* cat = simple("catenary", "Catenary degree of an element or the monoid", cmd_catenary);
  elem_opt(cat, false);
  box_opt(cat);

  std::optional<std::uint64_t> cap;
  auto* omega = simple("omega", "Omega-primality of an element or the monoid", [&](Session& s) { return cmd_omega(s, cap); });
  elem_opt(omega, false);
  omega->add_option("--cap", cap, "Length cap for the cover search");

  std::string rule;
  auto* check = simple("check", "Check a structural property", [&](Session& s) { return cmd_check(s, rule); });
  check->add_option("rule", rule, "ga | 2a-intervals | length-monotone | lengths-intervals")
      ->required()
      ->check(CLI::IsMember({"ga", "2a-intervals", "length-monotone", "lengths-intervals"}));
  box_opt(check);

  std::size_t axis = 2;
  std::optional<std::uint64_t> vmax;
  auto* pi = simple("pi-profile", "Column profile of a plane ideal extension", [&](Session& s) { return cmd_pi(s, axis, vmax); });
  pi->add_option("--axis", axis, "Height axis, 1 or 2");
  pi->add_option("--vmax", vmax, "Last column");

  FuzzConfig fc;
  std::string dims = "2", checks, out_dir;
  std::uint64_t budget_ms = 10'000;
  auto* fuzz_sc = simple("fuzz", "Randomized theorem and conjecture battery", [&](Session& s) {
    auto dash = dims.find('-');
    try {
      fc.dim_min = std::stoul(dims.substr(0, dash));
      fc.dim_max = dash == std::string::npos ? fc.dim_min : std::stoul(dims.substr(dash + 1));
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidSpec, "--dim expects d or a-b");
    }
    if (!checks.empty()) {
      fc.checks.clear();
      std::size_t pos = 0;
      while (pos <= checks.size()) {
        std::size_t end = std::min(checks.find(',', pos), checks.size());
        auto c = check_from_string(checks.substr(pos, end - pos));
        if (!c) throw Error(ErrorCode::InvalidSpec, "unknown check \"" + checks.substr(pos, end - pos) + "\"");
        fc.checks.insert(*c);
        pos = end + 1;
      }
    }
    fc.budget = std::chrono::milliseconds(budget_ms);
    fc.threads = s.threads();
    if (!out_dir.empty()) fc.out_dir = out_dir;
    auto sum = fuzz(fc);
    return Outcome{summary_json(sum), sum.ok() ? 0 : 2};
  });
  fuzz_sc->add_option("--trials", fc.trials)->required();
  fuzz_sc->add_option("--dim", dims, "Dimension d or range a-b");
  fuzz_sc->add_option("--max-coord", fc.max_coord)->check(CLI::PositiveNumber);
  fuzz_sc->add_option("--seed", fc.seed);
  fuzz_sc->add_option("--checks", checks, "Comma-separated subset of checks");
  fuzz_sc->add_option("--budget-ms", budget_ms, "Per-trial time budget");
  fuzz_sc->add_option("--finite-prob", fc.finite_probability)->check(CLI::Range(0.0, 1.0));
  fuzz_sc->add_option("--omega-atoms", fc.omega_atoms);
  fuzz_sc->add_option("--out-dir", out_dir, "Directory for counterexample specs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  if (o.json && o.table) {
    err << "error: --json and --table are exclusive\n";
    return 1;
  }

  auto start = std::chrono::steady_clock::now();
  Session session(o);
  Outcome outcome;
  try {
    outcome = action(session);
  } catch (const CapExceededError& e) {
    err << "error: " << e.what() << " (partial lower bound " << e.partial_lower_bound() << ")\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  Json report;
  report["command"] = result_name;
  if (result_name != "fuzz") report["monoid"] = spec_to_json(session.monoid());
  report["result"] = outcome.result;
  if (o.timing)
    report["wall_time_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  if (o.table)
    render_table(report, "", out);
  else
    out << report.dump() << "\n";
  return outcome.code;
}

}  // namespace idealext::cli
