#include "qiso/cli.hpp"

#include "qiso/dirac_heat.hpp"
#include "qiso/laplacian.hpp"
#include "qiso/qiso_models.hpp"
#include "qiso/real_structure.hpp"
#include "qiso/relation_engine.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdio>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <sstream>

namespace qiso {

namespace {

using json = nlohmann::ordered_json;

double round15(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return std::strtod(buf, nullptr);
}

json matrix_json(const Matrix& m) { return m.to_strings(); }

json relations_json(const CheckReport& r) {
  json rel = json::array();
  for (const auto& x : r.relations)
    rel.push_back({{"relation", x.text}, {"pass", x.pass}, {"residual_norm_sq", x.residual_norm_sq.to_string()}});
  return rel;
}

json corep_json(const CheckReport& r) {
  json c = {{"present", r.has_corep}};
  if (r.has_corep) {
    c["unitary"] = r.corep_unitary;
    if (!r.corep_detail.empty()) c["detail"] = r.corep_detail;
  }
  return c;
}

json coproduct_json(const CoproductReport& r) {
  json pos = json::object();
  for (const auto& [label, p] : r.positions) pos[label] = {p.first, p.second};
  json grid = json::array();
  for (const auto& e : r.grid) grid.push_back({{"row", e.row}, {"col", e.col}, {"pass", e.pass}});
  return {{"positions", pos},
          {"problems", r.problems},
          {"relations", relations_json(r.relations)},
          {"grid", grid},
          {"ok", r.ok()}};
}

struct Ctx {
  std::vector<std::string> args;
  std::string format = "json";
};

json header(const Ctx& c) {
  return {{"command", c.args}, {"version", kVersion}};
}

void require_json(const Ctx& c) {
  if (c.format != "json") throw CLI::ValidationError("--format", "csv output is only available for spheres and laplacian");
}

struct Output {
  std::string text;
  int status = 0;
};

Output emit(const json& j, int status) { return {j.dump(2) + "\n", status}; }

// ---------------------------------------------------------------------------

Output cmd_spheres(const Ctx& c, const std::string& spec, int max_n, bool elements) {
  Group g = Group::from_spec(spec);
  if (max_n < 0) throw std::invalid_argument("--max-n must be non-negative");
  if (c.format == "csv") {
    std::ostringstream os;
    os << "n,size\n";
    for (int n = 0; n <= max_n; ++n) os << n << "," << g.sphere(n).size() << "\n";
    return {os.str(), 0};
  }
  json j = header(c);
  j["group"] = g.name();
  json rows = json::array();
  for (int n = 0; n <= max_n; ++n) {
    json r = {{"n", n}, {"size", g.sphere(n).size()}};
    if (elements) {
      json names = json::array();
      for (const auto& x : g.sphere(n)) names.push_back(g.element_name(x));
      r["elements"] = names;
    }
    rows.push_back(r);
  }
  j["spheres"] = rows;
  return emit(j, 0);
}

Output cmd_heat(const Ctx& c, const std::string& spec, double t, int max_n) {
  require_json(c);
  Group g = Group::from_spec(spec);
  HeatTrace h = heat_trace(g, t, max_n);
  json j = header(c);
  j["group"] = g.name();
  j["t"] = round15(t);
  j["max_n"] = max_n;
  j["value"] = round15(h.value);
  j["tail_bound"] = round15(h.tail_bound);
  j["bracket"] = {round15(h.value), round15(h.value + h.tail_bound)};
  json terms = json::array();
  for (double x : h.terms) terms.push_back(round15(x));
  j["terms"] = terms;
  return emit(j, 0);
}

Output cmd_laplacian_finite(const Ctx& c, const std::string& spec, std::optional<int> max_length) {
  Group g = Group::from_spec(spec);
  if (!g.is_finite()) throw std::invalid_argument("laplacian finite needs a finite group");
  LaplacianReport r = admissibility_report(g, max_length.value_or(g.diameter()));
  const int status = r.ok() ? 0 : 1;
  if (c.format == "csv") {
    std::ostringstream os;
    os << "length,coefficient,representatives,constant\n";
    for (const auto& cl : r.classes)
      os << cl.length << "," << cl.coefficient.to_string() << "," << cl.representatives << ","
         << (cl.constant ? "true" : "false") << "\n";
    return {os.str(), status};
  }
  json j = header(c);
  j["group"] = r.group;
  json classes = json::array();
  for (const auto& cl : r.classes)
    classes.push_back({{"length", cl.length},
                       {"coefficient", cl.coefficient.to_string()},
                       {"representatives", cl.representatives},
                       {"constant", cl.constant}});
  j["classes"] = classes;
  j["constant_on_spheres"] = r.constant_on_spheres;
  j["injective_across_lengths"] = r.injective_across_lengths;
  j["kernel_dim_one"] = r.kernel_dim_one;
  j["increasing"] = r.increasing;
  j["within_bounds"] = r.within_bounds;
  j["ok"] = r.ok();
  return emit(j, status);
}

Output cmd_laplacian_free(const Ctx& c, int rank, int max_len, std::optional<int> probe_depth) {
  if (max_len < 1) throw std::invalid_argument("--max-len must be at least 1");
  const int depth = probe_depth.value_or(max_len + 4);
  if (depth < max_len) throw std::invalid_argument("--probe-depth must be at least --max-len");
  std::vector<FreeRReport> reps;
  for (int m = 1; m <= max_len; ++m) reps.push_back(free_R(rank, m, depth));
  bool good = true;
  for (const auto& r : reps)
    good = good && r.reduced_stable && r.formal_stable && r.representative_independent && r.reduced_in_bounds &&
           r.formal_in_bounds;
  const int status = good ? 0 : 1;
  if (c.format == "csv") {
    std::ostringstream os;
    os << "m,reduced,formal,reduced_stable,formal_stable,reduced_in_bounds,formal_in_bounds,readings_agree\n";
    auto b = [](bool x) { return x ? "true" : "false"; };
    for (const auto& r : reps)
      os << r.m << "," << r.reduced.to_string() << "," << r.formal.to_string() << "," << b(r.reduced_stable) << ","
         << b(r.formal_stable) << "," << b(r.reduced_in_bounds) << "," << b(r.formal_in_bounds) << ","
         << b(r.reduced == r.formal) << "\n";
    return {os.str(), status};
  }
  json j = header(c);
  j["group"] = "free:" + std::to_string(rank);
  json rows = json::array();
  for (const auto& r : reps) {
    auto strs = [](const std::vector<Rational>& v) {
      json a = json::array();
      for (const auto& x : v) a.push_back(x.to_string());
      return a;
    };
    Rational m2(long(r.m) * r.m);
    json row = {{"m", r.m},
                {"probe", {r.m, r.probe_depth}},
                {"reduced", r.reduced.to_string()},
                {"formal", r.formal.to_string()},
                {"reduced_by_n", strs(r.reduced_by_n)},
                {"formal_by_n", strs(r.formal_by_n)},
                {"representatives", r.representatives},
                {"reduced_stable", r.reduced_stable},
                {"formal_stable", r.formal_stable},
                {"representative_independent", r.representative_independent},
                {"lower_bound", (Rational(2L * rank - 1, 2L * rank) * m2).to_string()},
                {"upper_bound", m2.to_string()},
                {"reduced_in_bounds", r.reduced_in_bounds},
                {"formal_in_bounds", r.formal_in_bounds},
                {"readings_agree", r.reduced == r.formal}};
    if (r.failure) row["failure"] = *r.failure;
    rows.push_back(row);
  }
  j["ratios"] = rows;
  j["ok"] = good;
  return emit(j, status);
}

Output cmd_verify(const Ctx& c, const std::string& pres_path, const std::string& model_path, bool coproduct) {
  require_json(c);
  Presentation p = load_presentation(pres_path);
  MatrixModel m = load_model(model_path);
  CheckReport r = check(p, m);
  json j = header(c);
  j["presentation"] = p.name;
  j["model"] = m.name;
  j["dim"] = m.dim;
  j["relations"] = relations_json(r);
  j["corep"] = corep_json(r);
  bool ok = r.ok();
  if (coproduct) {
    CoproductReport cr = coproduct_check(p, m);
    j["coproduct"] = coproduct_json(cr);
    ok = ok && cr.ok();
  }
  json failed = json::array();
  for (const auto& x : r.relations)
    if (!x.pass) failed.push_back(x.text);
  j["failed_relations"] = failed;
  j["ok"] = ok;
  return emit(j, ok ? 0 : 1);
}

std::string preset_spec(const std::string& name, const std::vector<std::string>& params) {
  std::string s = name;
  for (const auto& p : params) s += ":" + p;
  return s;
}

Output cmd_verify_preset(const Ctx& c, const std::string& spec) {
  require_json(c);
  Preset p = make_preset(spec);
  PresetVerification v = verify_preset(p);
  json j = header(c);
  j["preset"] = p.name;
  j["group"] = p.group.name();
  j["dim"] = p.model.dim;
  j["root_order"] = p.model.root_order;
  if (!p.note.empty()) j["note"] = p.note;
  j["scope"] = "the relations admit this realisation; universality is not checked";
  j["relations"] = relations_json(v.relations);
  j["corep"] = corep_json(v.relations);
  j["coproduct"] = coproduct_json(v.coproduct);
  if (v.magic) j["magic_unitary"] = {{"ok", v.magic->ok}, {"first_failure", v.magic->first_failure}};
  if (v.noncommutative) {
    j["noncommutative"] = *v.noncommutative;
    j["commutator"] = matrix_json(evaluate(parse_polynomial("A B - B A"), p.model));
  }
  if (p.name == "s3_transpositions" || p.name == "s3_dihedral") {
    CoproductDivergence d = coproduct_divergence();
    bool dihedral = p.name == "s3_dihedral";
    j["lambda_s_sum"] = {{"element", dihedral ? "L" : "A + C"},
                         {"grouplike", dihedral ? d.dihedral_grouplike : d.transposition_grouplike}};
  }
  j["ok"] = v.ok();
  return emit(j, v.ok() ? 0 : 1);
}

Output cmd_action_check(const Ctx& c, const std::string& spec, std::optional<int> radius, bool rows) {
  require_json(c);
  Preset p = make_preset(spec);
  const int r = radius.value_or(default_action_radius(p.group));
  ActionTable t = build_action(p.group, evaluate_grid(p.grid, p.model), r);
  ActionReport rep = check_action(t);
  json j = header(c);
  j["preset"] = p.name;
  j["group"] = p.group.name();
  j["radius"] = r;
  j["rows"] = t.rows.size();
  json checks = json::array();
  for (const auto& s : rep.checks) {
    json x = {{"name", s.name}, {"applicable", s.applicable}, {"pass", s.pass}, {"checked", s.checked}};
    if (!s.counterexample.empty()) x["counterexample"] = s.counterexample;
    checks.push_back(x);
  }
  bool derived = true;
  for (const auto& [w, row] : t.rows) {
    ActionRow d = derive_word_coefficients(t, w);
    bool same = d.size() == row.size();
    for (const auto& [k, m] : row) same = same && d.count(k) && d.at(k) == m;
    derived = derived && same;
  }
  checks.push_back({{"name", "derivation"}, {"applicable", true}, {"pass", derived}, {"checked", t.rows.size()}});
  j["checks"] = checks;
  bool ok = rep.ok() && derived;
  if (p.name.rfind("zn:", 0) == 0) {
    bool closed = matches_zn_closed_form(t, p.model.at("A"), p.model.at("B"));
    j["zn_closed_form"] = closed;
    ok = ok && closed;
  }
  if (rows) {
    json rj = json::array();
    for (const auto& w : p.group.ball(r)) {
      json entries = json::array();
      for (const auto& [gp, m] : t.row(w)) entries.push_back({{"gamma", p.group.format(gp)}, {"q", matrix_json(m)}});
      rj.push_back({{"w", p.group.format(w)}, {"entries", entries}});
    }
    j["table"] = rj;
  }
  j["ok"] = ok;
  return emit(j, ok ? 0 : 1);
}

json certificate_json(const Group& g, const SupportCertificate& s) {
  json sup = json::array();
  for (const auto& x : s.support)
    sup.push_back({{"a", g.format(x.a)}, {"target", g.format(x.target)}, {"coefficient", x.coefficient}});
  return {{"g", g.format(s.g)}, {"h", g.format(s.h)},       {"r0", s.r0},
          {"r", s.r},           {"probed", s.probed},       {"support", sup},
          {"stable", s.stable}, {"within_bound", s.within_bound}};
}

Output cmd_t_operator(const Ctx& c, const std::string& spec, std::optional<std::string> gs, std::optional<std::string> hs,
                      std::optional<int> r0, std::optional<int> r, std::optional<int> sweep, int extra) {
  require_json(c);
  Group g = Group::from_spec(spec);
  json j = header(c);
  j["group"] = g.name();
  if (sweep) {
    if (gs || hs || r0 || r) throw CLI::ValidationError("--sweep", "cannot be combined with --g/--h/--r0/--r");
    TSweep s = t_sweep(g, *sweep, extra);
    j["sweep"] = {{"max_len", s.max_len}, {"extra", s.extra}, {"pairs", s.pairs},
                  {"unstable", s.unstable}, {"out_of_bound", s.out_of_bound}};
    if (!s.failures.empty()) j["first_failure"] = certificate_json(g, s.failures.front());
    j["ok"] = s.ok();
    return emit(j, s.ok() ? 0 : 1);
  }
  if (!gs || !hs) throw CLI::ValidationError("--g/--h", "both are required without --sweep");
  Element ge = g.parse_element(*gs), he = g.parse_element(*hs);
  int lo = r0.value_or(g.length(ge) + g.length(he));
  SupportCertificate s = support_certificate(g, ge, he, lo, r.value_or(lo + 4));
  j["certificate"] = certificate_json(g, s);
  j["ok"] = s.stable && s.within_bound;
  return emit(j, s.stable && s.within_bound ? 0 : 1);
}

Output cmd_real_check(const Ctx& c, std::optional<std::string> preset, std::optional<std::string> spec,
                      std::optional<int> radius, int max_len) {
  require_json(c);
  if (!preset && !spec) throw CLI::ValidationError("--preset/--group", "one of them is required");
  json j = header(c);
  bool ok = true;
  if (preset) {
    Preset p = make_preset(*preset);
    json ext = json::array();
    for (bool trivial : {false, true}) {
      RealExtensionReport r = check_real_extension(p, trivial);
      json x = {{"q", trivial ? "I" : "I (+) -I"},
                {"q_self_adjoint", r.q_self_adjoint},
                {"q_unitary", r.q_unitary},
                {"q_commutes_with_generators", r.q_commutes_with_generators},
                {"q_commutes_with_action", r.q_commutes_with_action},
                {"action_entries", r.action_entries},
                {"relations", relations_json(r.relations)},
                {"corep", corep_json(r.relations)},
                {"ok", r.ok()}};
      if (!r.first_failure.empty()) x["first_failure"] = r.first_failure;
      ext.push_back(x);
      ok = ok && r.ok();
    }
    j["preset"] = p.name;
    j["extensions"] = ext;
  }
  if (spec) {
    Group g = Group::from_spec(*spec);
    const int rad = radius.value_or(g.is_finite() ? g.diameter() : 6);
    std::size_t basis = 0, j2 = 0, jd = 0;
    for (const auto& x : g.ball(rad)) {
      ++basis;
      BallVector d = BallVector::delta(g, rad, x);
      if (j_apply(j_apply(d)) == d) ++j2;
      if (j_apply(dirac_apply(d)) == dirac_apply(j_apply(d))) ++jd;
    }
    auto pairs_from = g.is_finite() ? g.elements() : g.ball(max_len);
    std::size_t pairs = 0, zero = 0;
    std::string first;
    for (const auto& a : pairs_from)
      for (const auto& b : pairs_from) {
        ++pairs;
        CommutantReport r = commutant_check(g, a, b, g.is_finite() ? g.diameter() : 5);
        if (r.zero) ++zero;
        else if (first.empty()) first = g.format(a) + ", " + g.format(b) + ": " + r.counterexample;
      }
    j["group"] = g.name();
    j["j_checks"] = {{"radius", rad}, {"basis_vectors", basis}, {"j_squared_identity", j2 == basis},
                     {"j_commutes_with_d", jd == basis}};
    j["commutant"] = {{"pairs", pairs}, {"zero", zero == pairs}};
    if (!first.empty()) j["commutant"]["counterexample"] = first;
    ok = ok && j2 == basis && jd == basis && zero == pairs;
  }
  j["ok"] = ok;
  return emit(j, ok ? 0 : 1);
}

Output cmd_presets(const Ctx& c) {
  require_json(c);
  json j = header(c);
  json list = json::array();
  for (const auto& p : preset_catalog())
    list.push_back({{"name", p.name}, {"parameters", p.parameters}, {"description", p.description}});
  j["presets"] = list;
  return emit(j, 0);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Ctx ctx;
  ctx.args = args;
  CLI::App app{"Verification workbench for quantum isometry groups of group C*-algebras", "qiso"};
  app.require_subcommand(1);
  app.add_option("--format", ctx.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.set_version_flag("--version", kVersion);

  std::function<Output()> action;

  std::string group;
  int max_n = 0;
  bool elements = false;
  auto* sph = app.add_subcommand("spheres", "sphere sizes of a group")->fallthrough();
  sph->add_option("--group", group, "group spec")->required();
  sph->add_option("--max-n", max_n, "largest radius")->required();
  sph->add_flag("--elements", elements, "list the elements of every sphere");
  sph->callback([&] { action = [&] { return cmd_spheres(ctx, group, max_n, elements); }; });

  double t = 0;
  int heat_n = 10;
  auto* heat = app.add_subcommand("heat-trace", "truncated Tr exp(-t D^2) with a tail bound")->fallthrough();
  heat->add_option("--group", group, "group spec")->required();
  heat->add_option("--t", t, "time parameter")->required();
  heat->add_option("--max-n", heat_n, "truncation radius");
  heat->callback([&] { action = [&] { return cmd_heat(ctx, group, t, heat_n); }; });

  auto* lap = app.add_subcommand("laplacian", "Laplacian coefficients")->fallthrough()->require_subcommand(1);
  std::optional<int> max_length;
  auto* lfin = lap->add_subcommand("finite", "coefficient table of a finite group")->fallthrough();
  lfin->add_option("--group", group, "group spec")->required();
  lfin->add_option("--max-length", max_length, "largest length (default: diameter)");
  lfin->callback([&] { action = [&] { return cmd_laplacian_finite(ctx, group, max_length); }; });
  int rank = 2, max_len = 0;
  std::optional<int> probe_depth;
  auto* lfree = lap->add_subcommand("free", "stabilised ratios R_m of a free group")->fallthrough();
  lfree->add_option("--rank", rank, "rank of the free group");
  lfree->add_option("--max-len", max_len, "largest m")->required();
  lfree->add_option("--probe-depth", probe_depth, "probe n in [m, depth] (default max-len + 4)");
  lfree->callback([&] { action = [&] { return cmd_laplacian_free(ctx, rank, max_len, probe_depth); }; });

  std::string pres_path, model_path;
  bool with_coproduct = false;
  auto* ver = app.add_subcommand("verify", "check a presentation file against a model file")->fallthrough();
  ver->add_option("--presentation", pres_path, "presentation file")->required();
  ver->add_option("--model", model_path, "model JSON file")->required();
  ver->add_flag("--coproduct", with_coproduct, "also run the coproduct check");
  ver->callback([&] { action = [&] { return cmd_verify(ctx, pres_path, model_path, with_coproduct); }; });

  std::string preset_name;
  std::vector<std::string> preset_params;
  auto* vp = app.add_subcommand("verify-preset", "check a compiled-in preset")->fallthrough();
  vp->add_option("name", preset_name, "preset name, optionally with :params")->required();
  vp->add_option("params", preset_params, "preset parameters");
  vp->callback([&] { action = [&] { return cmd_verify_preset(ctx, preset_spec(preset_name, preset_params)); }; });

  std::optional<int> radius;
  bool dump_rows = false;
  auto* ac = app.add_subcommand("action-check", "build and check the induced action")->fallthrough();
  ac->add_option("--preset", preset_name, "preset name with :params")->required();
  ac->add_option("--radius", radius, "ball radius (default: diameter, 3 for F_2, 8 for Z)");
  ac->add_flag("--rows", dump_rows, "include the coefficient table");
  ac->callback([&] { action = [&] { return cmd_action_check(ctx, preset_name, radius, dump_rows); }; });

  std::optional<std::string> gword, hword;
  std::optional<int> r0, r1, sweep;
  int sweep_extra = 4;
  auto* to = app.add_subcommand("t-operator", "support certificate of T_{g,h}")->fallthrough();
  to->set_help_flag("--help", "Print this help message and exit");
  to->add_option("--group", group, "group spec")->required();
  to->add_option("--g", gword, "element g");
  to->add_option("--h", hword, "element h");
  to->add_option("--r0", r0, "inner radius (default l(g) + l(h))");
  to->add_option("--r", r1, "probe radius (default r0 + 4)");
  to->add_option("--sweep", sweep, "certify all g, h in this ball instead");
  to->add_option("--extra", sweep_extra, "probe window of the sweep");
  to->callback([&] { action = [&] { return cmd_t_operator(ctx, group, gword, hword, r0, r1, sweep, sweep_extra); }; });

  std::optional<std::string> rc_preset, rc_group;
  int rc_max_len = 3;
  auto* rc = app.add_subcommand("real-check", "real structure checks")->fallthrough();
  rc->add_option("--preset", rc_preset, "preset for the q-extension check");
  rc->add_option("--group", rc_group, "group for the J and commutant checks");
  rc->add_option("--radius", radius, "radius for the J checks (default 6, or the diameter)");
  rc->add_option("--max-len", rc_max_len, "commutant pairs from this ball (infinite groups)");
  rc->callback([&] { action = [&] { return cmd_real_check(ctx, rc_preset, rc_group, radius, rc_max_len); }; });

  auto* pr = app.add_subcommand("presets", "list the compiled-in presets")->fallthrough();
  pr->callback([&] { action = [&] { return cmd_presets(ctx); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }
  try {
    Output o = action();
    out << o.text;
    out.flush();
    return o.status;
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace qiso
