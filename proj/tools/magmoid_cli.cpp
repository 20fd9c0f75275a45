// Batch verifier front end: loads an instance file, runs the requested
// checker or theorem, and prints a deterministic report.
//
// Exit codes: 0 everything verified, 1 a check failed (the report names the
// witness), 2 inconclusive within the configured budgets, 3 input error.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <magmoid/checks.hpp>
#include <magmoid/comb/join.hpp>
#include <magmoid/instance_io.hpp>
#include <magmoid/quotient.hpp>
#include <magmoid/theorems.hpp>
#include <magmoid/uniform.hpp>

using namespace magmoid;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int exit_verified = 0;
constexpr int exit_failed = 1;
constexpr int exit_inconclusive = 2;
constexpr int exit_input = 3;

struct Options {
  std::string format = "text";
  std::string probe_set = "all";
  Budget budget;
};

struct Output {
  bool structured = false;
  ordered_json doc = ordered_json::object();
  std::string text;

  void line(const std::string& s) { text += s + "\n"; }
  void flush() {
    if (structured)
      std::cout << doc.dump(2) << "\n";
    else
      std::cout << text;
  }
};

void emit_report(Output& out, const CheckReport& r) {
  out.line(format_report(r));
  ordered_json j;
  j["check"] = r.check;
  j["cases"] = r.cases;
  j["passed"] = r.passed();
  auto& v = j["violations"] = ordered_json::array();
  for (const auto& viol : r.violations) v.push_back({{"law", viol.law}, {"detail", viol.detail}});
  out.doc["reports"].push_back(std::move(j));
}

Mor named_morphism(const BuiltInstance& inst, const std::string& name) {
  auto it = inst.morphisms.find(name);
  if (it == inst.morphisms.end())
    throw InputError("the instance file defines no morphism named '" + name + "'");
  return it->second;
}

std::vector<Obj> probe_objects(const BuiltInstance& inst, const Options& opt) {
  if (opt.probe_set == "all") return inst.category->objects();
  const std::string prefix = "list:";
  if (opt.probe_set.rfind(prefix, 0) != 0)
    throw InputError("--probe-set takes 'all' or 'list:<name>,<name>,...'");
  std::vector<Obj> out;
  std::string rest = opt.probe_set.substr(prefix.size());
  std::size_t start = 0;
  while (start <= rest.size()) {
    std::size_t comma = rest.find(',', start);
    std::string name = rest.substr(start, comma == std::string::npos ? comma : comma - start);
    if (!name.empty()) out.push_back(resolve_object_expr(inst, name));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

InternalHomWitness certified_hom_for(const BuiltInstance& inst, const Obj& X, const Obj& Y,
                                     const std::vector<Obj>& probes, const Budget& budget) {
  for (const auto& c : inst.hom_candidates)
    if (c.X == X && c.Y == Y)
      return check_internal_hom(*inst.category, X, Y, c.hom_obj, c.ev, probes, budget);
  auto builtin = internal_hom_candidate(*inst.category, X, Y);
  if (!builtin)
    throw InputError("no internal hom candidate for " + Y.name + "^" + X.name +
                     ": none in the file and no recipe for variant '" +
                     inst.category->variant() + "'");
  return check_internal_hom(*inst.category, X, Y, builtin->first, builtin->second, probes,
                            budget);
}

// ------------------------------------------------------------- commands ---

int cmd_check(const BuiltInstance& inst, const Options& opt, Output& out) {
  const Category& cat = *inst.category;
  out.doc["command"] = "check";
  out.doc["variant"] = cat.variant();
  out.doc["reports"] = ordered_json::array();
  for (const std::string& n : cat.notes()) out.line("note: " + n);

  bool failed = false;
  CheckReport bif = check_bifunctoriality(cat, opt.budget);
  emit_report(out, bif);
  failed |= !bif.passed();

  CheckReport nat = check_diagonal_naturality(cat, opt.budget);
  emit_report(out, nat);
  failed |= !nat.passed();

  bool has_proj = !cat.objects().empty() &&
                  cat.proj2(cat.objects().front(), cat.objects().front()).has_value();
  if (has_proj) {
    CheckReport proj = check_right_projection(cat, opt.budget);
    emit_report(out, proj);
    failed |= !proj.passed();
  } else {
    out.line("right projection: skipped (no projection tables)");
    out.doc["right_projection"] = "absent";
  }

  if (inst.flat) {
    CheckReport cop = check_copointed(cat, *inst.flat, opt.budget);
    emit_report(out, cop);
    failed |= !cop.passed();
    if (inst.flat->has_comul()) {
      CheckReport com = check_idempotent_comonad(cat, *inst.flat, opt.budget);
      emit_report(out, com);
      failed |= !com.passed();
    }
  }

  out.line(failed ? "result: FAILED" : "result: VERIFIED");
  out.doc["verified"] = !failed;
  return failed ? exit_failed : exit_verified;
}

int cmd_points(const BuiltInstance& inst, const Options& opt, Output& out,
               const std::string& object_expr) {
  Obj a = resolve_object_expr(inst, object_expr);
  auto points = inst.category->t_points(a, opt.budget);
  out.doc["command"] = "points";
  out.doc["object"] = a.name;
  out.doc["count"] = points.size();
  out.doc["points"] = ordered_json::array();
  out.line("t-points of " + a.name + ": " + std::to_string(points.size()));
  for (const Mor& p : points) {
    out.line("  " + describe(p.fn));
    out.doc["points"].push_back(describe(p.fn));
  }
  return exit_verified;
}

int cmd_quotient(const BuiltInstance& inst, const Options& opt, Output& out) {
  QuotientCategory q = concrete_quotient(inst.category, opt.budget);
  out.doc["command"] = "quotient";
  out.doc["homs"] = ordered_json::array();
  for (const auto& h : q.homs()) {
    std::size_t members = 0;
    for (const auto& c : h.classes) members += c.members.size();
    out.line(h.dom + " -> " + h.cod + ": " + std::to_string(members) + " morphisms in " +
             std::to_string(h.classes.size()) + " classes");
    out.doc["homs"].push_back({{"dom", h.dom}, {"cod", h.cod},
                               {"morphisms", members}, {"classes", h.classes.size()}});
  }
  emit_report(out, q.verification());
  out.line(q.verification().passed() ? "result: VERIFIED" : "result: FAILED");
  out.doc["verified"] = q.verification().passed();
  return q.verification().passed() ? exit_verified : exit_failed;
}

int cmd_diagonal(const BuiltInstance& inst, const Options& opt, Output& out,
                 const std::string& A_expr, const std::string& C_expr,
                 const std::string& F_name, const std::string& sigma_name, bool section,
                 const std::string& p_name, const std::string& s_name) {
  const Category& cat = *inst.category;
  Mor F = named_morphism(inst, F_name);
  Mor sigma = named_morphism(inst, sigma_name);
  DiagonalReport r;
  if (section) {
    Mor p = named_morphism(inst, p_name);
    Mor s = named_morphism(inst, s_name);
    r = diagonal_argument_section(cat, p, s, F, sigma, opt.budget);
  } else {
    Obj A = resolve_object_expr(inst, A_expr);
    Obj C = resolve_object_expr(inst, C_expr);
    r = diagonal_argument(cat, A, C, F, sigma, opt.budget);
  }
  out.doc["command"] = "diagonal";
  out.doc["theorem"] = r.theorem;
  out.doc["f"] = describe(r.f);
  out.doc["witnesses"] = r.witnesses.size();
  out.doc["verified"] = r.verified;
  out.line(format_report(r));
  return r.verified ? exit_verified : exit_failed;
}

int cmd_fixpoint(const BuiltInstance& inst, const Options& opt, Output& out,
                 const std::string& A_expr, const std::string& C_expr,
                 const std::string& F_name, const std::string& sigma_name,
                 const std::string& a0_name, bool search, bool section,
                 const std::string& p_name) {
  const Category& cat = *inst.category;
  Mor F = named_morphism(inst, F_name);
  Mor sigma = named_morphism(inst, sigma_name);
  out.doc["command"] = "fixpoint";
  if (section) {
    Mor p = named_morphism(inst, p_name);
    Mor a = named_morphism(inst, a0_name);
    FixedPointReport r = fixed_point_section(cat, p, F, sigma, a, opt.budget);
    out.line(format_report(r));
    out.doc["theorem"] = r.theorem;
    out.doc["c"] = describe(r.c.fn);
    out.doc["verified"] = r.conclusion_ok;
    return r.conclusion_ok ? exit_verified : exit_failed;
  }
  Obj A = resolve_object_expr(inst, A_expr);
  Obj C = resolve_object_expr(inst, C_expr);
  if (search) {
    auto r = fixed_point_search(cat, A, C, F, sigma, opt.budget);
    if (!r) {
      out.line("no index point satisfies the hypothesis: NotFound");
      out.doc["result"] = "NotFound";
      return exit_failed;
    }
    out.line(format_report(*r));
    out.doc["theorem"] = r->theorem;
    out.doc["a0"] = describe(r->a0.fn);
    out.doc["c"] = describe(r->c.fn);
    out.doc["verified"] = r->conclusion_ok;
    return r->conclusion_ok ? exit_verified : exit_failed;
  }
  Mor a0 = named_morphism(inst, a0_name);
  FixedPointReport r = fixed_point(cat, A, C, F, sigma, a0, opt.budget);
  out.line(format_report(r));
  out.doc["theorem"] = r.theorem;
  out.doc["a0"] = describe(r.a0.fn);
  out.doc["c"] = describe(r.c.fn);
  out.doc["verified"] = r.conclusion_ok;
  return r.conclusion_ok ? exit_verified : exit_failed;
}

int cmd_fixpoint_regular(const BuiltInstance& inst, const Options& opt, Output& out,
                         const std::string& A_expr, const std::string& C_expr,
                         const std::string& F_name, const std::string& sigma_name,
                         const std::string& tprime_expr, const std::string& a0_name) {
  const Category& cat = *inst.category;
  Obj A = resolve_object_expr(inst, A_expr);
  Obj C = resolve_object_expr(inst, C_expr);
  Obj tprime = resolve_object_expr(inst, tprime_expr);
  Mor F = named_morphism(inst, F_name);
  Mor sigma = named_morphism(inst, sigma_name);
  Mor a0 = named_morphism(inst, a0_name);
  FixedPointReport r = fixed_point_regular(cat, A, C, F, sigma, tprime, a0, opt.budget);
  out.line(format_report(r));
  out.doc["command"] = "fixpoint-regular";
  out.doc["theorem"] = r.theorem;
  out.doc["c"] = describe(r.c.fn);
  out.doc["verified"] = r.hypothesis_ok && r.conclusion_ok;
  return (r.hypothesis_ok && r.conclusion_ok) ? exit_verified : exit_failed;
}

int cmd_hom_check(const BuiltInstance& inst, const Options& opt, Output& out,
                  const std::string& X_expr, const std::string& Y_expr) {
  Obj X = resolve_object_expr(inst, X_expr);
  Obj Y = resolve_object_expr(inst, Y_expr);
  InternalHomWitness w =
      certified_hom_for(inst, X, Y, probe_objects(inst, opt), opt.budget);
  out.doc["command"] = "hom-check";
  out.doc["hom_object"] = w.hom_obj.name;
  out.doc["carrier_size"] = w.hom_obj.carrier.size();
  out.doc["probes"] = ordered_json::array();
  out.line("internal hom " + Y.name + "^" + X.name + " = " + w.hom_obj.name + " (" +
           std::to_string(w.hom_obj.carrier.size()) + " elements)");
  for (const auto& p : w.certificate) {
    out.line("  probe " + p.probe.name + ": " + std::to_string(p.maps_in) + " maps, bijective");
    out.doc["probes"].push_back({{"probe", p.probe.name},
                                 {"maps", p.maps_in},
                                 {"bijective", p.bijective}});
  }
  out.line("result: VERIFIED");
  out.doc["verified"] = true;
  return exit_verified;
}

int cmd_uniform_fix(const BuiltInstance& inst, const Options& opt, Output& out,
                    const std::string& p_name, const std::string& s_name,
                    const std::string& F_name, const std::string& idx_name,
                    const std::string& crisp) {
  const Category& cat = *inst.category;
  Mor p = named_morphism(inst, p_name);
  Mor s = named_morphism(inst, s_name);
  Mor F = named_morphism(inst, F_name);
  Mor idx = named_morphism(inst, idx_name);
  const Obj C = F.cod;
  InternalHomWitness E_hom =
      certified_hom_for(inst, C, C, probe_objects(inst, opt), opt.budget);
  FlatFunctor flat = inst.flat ? *inst.flat : make_flat_identity();
  UniformFixReport r;
  if (crisp.empty())
    r = uniform_fix(cat, flat, E_hom, p, s, F, idx, opt.budget);
  else if (crisp == "section")
    r = uniform_fix_crisp(cat, flat, E_hom, p, s, F, idx, CrispVariant::crisp_section,
                          opt.budget);
  else if (crisp == "index")
    r = uniform_fix_crisp(cat, flat, E_hom, p, s, F, idx, CrispVariant::crisp_index,
                          opt.budget);
  else
    throw InputError("--crisp takes 'section' or 'index'");
  out.line(format_report(r));
  out.doc["command"] = "uniform-fix";
  out.doc["theorem"] = r.theorem;
  out.doc["fix"] = describe(r.fix.fn);
  out.doc["verified"] = r.hypothesis_ok && r.conclusion_ok;
  return (r.hypothesis_ok && r.conclusion_ok) ? exit_verified : exit_failed;
}

int cmd_fix_split_epi(const BuiltInstance& inst, const Options& opt, Output& out,
                      const std::string& A_expr, const std::string& C_expr,
                      const std::string& alpha_name, const std::string& ell_name,
                      bool reflexive) {
  const Category& cat = *inst.category;
  Obj C = resolve_object_expr(inst, C_expr);
  Mor alpha = named_morphism(inst, alpha_name);
  Mor ell = named_morphism(inst, ell_name);
  auto probes = probe_objects(inst, opt);
  InternalHomWitness CC_hom = certified_hom_for(inst, C, C, probes, opt.budget);
  SplitEpiReport r;
  if (reflexive) {
    r = fix_reflexive(cat, C, CC_hom, alpha, ell, opt.budget);
  } else {
    if (A_expr.empty()) throw InputError("fix-split-epi needs --A (or --reflexive)");
    Obj A = resolve_object_expr(inst, A_expr);
    InternalHomWitness CA_hom = certified_hom_for(inst, A, C, probes, opt.budget);
    r = fix_from_split_epi(cat, A, C, CA_hom, CC_hom, alpha, ell, opt.budget);
  }
  out.line(format_report(r));
  out.doc["command"] = "fix-split-epi";
  out.doc["theorem"] = r.theorem;
  out.doc["fix"] = describe(r.fix.fn);
  out.doc["verified"] = r.ok();
  return r.ok() ? exit_verified : exit_failed;
}

int cmd_comb_reduce(const Options& opt, Output& out, const std::string& text) {
  using namespace magmoid::comb;
  ReductionTrace t = normalize(parse(text), opt.budget.fuel);
  out.text += format_trace(t);
  out.doc["command"] = "comb reduce";
  out.doc["start"] = print(t.start);
  out.doc["steps"] = t.steps.size();
  out.doc["normal_form"] = t.normal_form;
  out.doc["result"] = print(t.steps.empty() ? t.start : t.steps.back().result);
  return t.normal_form ? exit_verified : exit_inconclusive;
}

int cmd_comb_join(const Options& opt, Output& out, const std::string& t1,
                  const std::string& t2) {
  using namespace magmoid::comb;
  JoinResult r = joinable(parse(t1), parse(t2), opt.budget.fuel, opt.budget.width,
                          opt.budget.term_nodes);
  out.doc["command"] = "comb join";
  out.doc["joinable"] = r.joinable;
  out.doc["explored"] = r.explored;
  if (r.joinable) {
    out.line("Joinable");
    out.line("common reduct: " + print(r.common));
    out.line("path lengths: " + std::to_string(r.path_a.size() - 1) + " and " +
             std::to_string(r.path_b.size() - 1) + " steps");
    out.doc["common"] = print(r.common);
    out.doc["path_a_steps"] = r.path_a.size() - 1;
    out.doc["path_b_steps"] = r.path_b.size() - 1;
    return exit_verified;
  }
  out.line("NotWithinBudget (explored " + std::to_string(r.explored) + " terms)");
  return exit_inconclusive;
}

int cmd_comb_fpc(const Options& opt, Output& out, const std::string& text) {
  using namespace magmoid::comb;
  FpcResult r = check_fpc(parse(text), opt.budget.fuel, opt.budget.width);
  out.doc["command"] = "comb fpc";
  out.doc["fresh_atom"] = r.fresh_atom;
  if (r.verdict == FpcVerdict::verified) {
    out.line("Verified");
    out.line("common reduct of " + r.fresh_atom + "-instances: " + print(r.join.common));
    out.doc["verdict"] = "Verified";
    out.doc["common"] = print(r.join.common);
    return exit_verified;
  }
  out.line("NotWithinBudget");
  out.doc["verdict"] = "NotWithinBudget";
  return exit_inconclusive;
}

int cmd_comb_basis(Output& out, const std::string& text) {
  using namespace magmoid::comb;
  BasisInfo b = basis_of(parse(text));
  std::string cs;
  for (char c : b.constants) cs += c;
  out.line("constants: {" + cs + "}");
  out.line("logic: " + b.logic);
  out.doc["command"] = "comb basis";
  out.doc["constants"] = cs;
  out.doc["logic"] = b.logic;
  return exit_verified;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"magmoid: executable checks for magmoidal fixed-point theorems,\n"
               "diagonal arguments, and the BW combinator calculus"};
  app.require_subcommand(1);

  Options opt;
  std::uint64_t budget_flag = 0;
  app.add_option("--format", opt.format, "output format: text|structured");
  app.add_option("--budget", budget_flag, "enumeration/check budget override");
  app.add_option("--fuel", opt.budget.fuel, "reduction step budget");
  app.add_option("--width", opt.budget.width, "joinability frontier cap");
  app.add_option("--probe-set", opt.probe_set, "all | list:<name>,<name>,...");

  std::string file, object_expr, A_expr, C_expr, tprime_expr, X_expr, Y_expr;
  std::string F_name, sigma_name, a0_name, p_name, s_name, idx_name, alpha_name, ell_name;
  std::string crisp, term1, term2;
  bool search = false, section = false, reflexive = false;

  auto* check = app.add_subcommand("check", "run the axiom suite for an instance");
  check->add_option("file", file)->required();

  auto* points = app.add_subcommand("points", "list the t-points of an object");
  points->add_option("file", file)->required();
  points->add_option("--object", object_expr)->required();

  auto* quotient = app.add_subcommand("quotient", "build and verify the extensional quotient");
  quotient->add_option("file", file)->required();

  auto* diagonal = app.add_subcommand("diagonal", "run the diagonal argument");
  diagonal->add_option("file", file)->required();
  diagonal->add_option("--A", A_expr);
  diagonal->add_option("--C", C_expr);
  diagonal->add_option("--F", F_name)->required();
  diagonal->add_option("--sigma", sigma_name)->required();
  diagonal->add_flag("--section", section);
  diagonal->add_option("--p", p_name);
  diagonal->add_option("--s", s_name);

  auto* fixpoint = app.add_subcommand("fixpoint", "construct and verify a fixed point");
  fixpoint->add_option("file", file)->required();
  fixpoint->add_option("--A", A_expr);
  fixpoint->add_option("--C", C_expr);
  fixpoint->add_option("--F", F_name)->required();
  fixpoint->add_option("--sigma", sigma_name)->required();
  fixpoint->add_option("--a0", a0_name);
  fixpoint->add_flag("--search", search);
  fixpoint->add_flag("--section", section);
  fixpoint->add_option("--p", p_name);

  auto* regular = app.add_subcommand("fixpoint-regular", "the right-projection form");
  regular->add_option("file", file)->required();
  regular->add_option("--A", A_expr)->required();
  regular->add_option("--C", C_expr)->required();
  regular->add_option("--F", F_name)->required();
  regular->add_option("--sigma", sigma_name)->required();
  regular->add_option("--tprime", tprime_expr)->required();
  regular->add_option("--a0", a0_name)->required();

  auto* homcheck = app.add_subcommand("hom-check", "certify an internal hom candidate");
  homcheck->add_option("file", file)->required();
  homcheck->add_option("--X", X_expr)->required();
  homcheck->add_option("--Y", Y_expr)->required();

  auto* ufix = app.add_subcommand("uniform-fix", "the higher-order fixed point");
  ufix->add_option("file", file)->required();
  ufix->add_option("--p", p_name)->required();
  ufix->add_option("--s", s_name)->required();
  ufix->add_option("--F", F_name)->required();
  ufix->add_option("--idx", idx_name)->required();
  ufix->add_option("--crisp", crisp);

  auto* split = app.add_subcommand("fix-split-epi", "fix from a split epi onto C^A");
  split->add_option("file", file)->required();
  split->add_option("--A", A_expr);
  split->add_option("--C", C_expr)->required();
  split->add_option("--alpha", alpha_name)->required();
  split->add_option("--ell", ell_name)->required();
  split->add_flag("--reflexive", reflexive);

  auto* comb = app.add_subcommand("comb", "combinator calculus");
  comb->require_subcommand(1);
  auto* creduce = comb->add_subcommand("reduce", "normalize a term");
  creduce->add_option("term", term1)->required();
  auto* cjoin = comb->add_subcommand("join", "bounded joinability of two terms");
  cjoin->add_option("term1", term1)->required();
  cjoin->add_option("term2", term2)->required();
  auto* cfpc = comb->add_subcommand("fpc", "verify a fixed-point combinator");
  cfpc->add_option("term", term1)->required();
  auto* cbasis = comb->add_subcommand("basis", "combinator basis and its logic");
  cbasis->add_option("term", term1)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : exit_input;
  }

  if (budget_flag > 0) {
    opt.budget.enumeration = budget_flag;
    opt.budget.checks = budget_flag;
  }
  if (opt.format != "text" && opt.format != "structured") {
    std::cerr << "error: --format takes text or structured\n";
    return exit_input;
  }

  Output out;
  out.structured = opt.format == "structured";
  int code = exit_input;
  try {
    if (comb->parsed()) {
      if (creduce->parsed()) code = cmd_comb_reduce(opt, out, term1);
      else if (cjoin->parsed()) code = cmd_comb_join(opt, out, term1, term2);
      else if (cfpc->parsed()) code = cmd_comb_fpc(opt, out, term1);
      else code = cmd_comb_basis(out, term1);
    } else {
      BuiltInstance inst = load_instance(file);
      if (check->parsed()) code = cmd_check(inst, opt, out);
      else if (points->parsed()) code = cmd_points(inst, opt, out, object_expr);
      else if (quotient->parsed()) code = cmd_quotient(inst, opt, out);
      else if (diagonal->parsed())
        code = cmd_diagonal(inst, opt, out, A_expr, C_expr, F_name, sigma_name, section,
                            p_name, s_name);
      else if (fixpoint->parsed())
        code = cmd_fixpoint(inst, opt, out, A_expr, C_expr, F_name, sigma_name, a0_name,
                            search, section, p_name);
      else if (regular->parsed())
        code = cmd_fixpoint_regular(inst, opt, out, A_expr, C_expr, F_name, sigma_name,
                                    tprime_expr, a0_name);
      else if (homcheck->parsed()) code = cmd_hom_check(inst, opt, out, X_expr, Y_expr);
      else if (ufix->parsed())
        code = cmd_uniform_fix(inst, opt, out, p_name, s_name, F_name, idx_name, crisp);
      else if (split->parsed())
        code = cmd_fix_split_epi(inst, opt, out, A_expr, C_expr, alpha_name, ell_name,
                                 reflexive);
    }
  } catch (const SizeLimitExceeded& e) {
    out.line(std::string("inconclusive: ") + e.what());
    out.doc["error"] = e.what();
    out.flush();
    return exit_inconclusive;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return exit_input;
  } catch (const InvalidSpec& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return exit_input;
  } catch (const SyntaxError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return exit_input;
  } catch (const CompositionMismatch& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return exit_input;
  } catch (const Error& e) {
    // a named precondition or check failure: the witness is in the message
    out.line(std::string("check failed: ") + e.what());
    out.doc["error"] = e.what();
    out.flush();
    return exit_failed;
  }
  out.flush();
  return code;
}
