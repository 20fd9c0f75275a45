#include "magmoid/instance_io.hpp"

#include <cctype>
#include <fstream>

#include <json.hpp>

namespace magmoid {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& what) { throw InputError(what); }

std::vector<std::string> string_list(const json& j, const std::string& who) {
  if (!j.is_array()) bad(who + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) bad(who + " must contain only strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

ObjectSpec parse_object(const json& j) {
  if (!j.is_object() || !j.contains("name") || !j.contains("elements"))
    bad("each object needs a name and an elements array");
  ObjectSpec spec;
  spec.name = j.at("name").get<std::string>();
  spec.elements = string_list(j.at("elements"), "elements of '" + spec.name + "'");
  if (j.contains("basepoint")) spec.basepoint = j.at("basepoint").get<std::string>();
  if (j.contains("to_base"))
    for (const auto& [k, v] : j.at("to_base").items())
      spec.to_base.emplace_back(k, v.get<std::string>());
  if (j.contains("comul"))
    for (const auto& [k, v] : j.at("comul").items()) {
      auto lr = string_list(v, "comul of '" + spec.name + "'");
      if (lr.size() != 2) bad("comul entries are [left, right] pairs");
      spec.comul.emplace_back(k, std::make_pair(lr[0], lr[1]));
    }
  return spec;
}

InstanceSpec parse_spec(const json& j) {
  InstanceSpec spec;
  if (!j.contains("variant")) bad("instance needs a variant");
  auto v = variant_from_name(j.at("variant").get<std::string>());
  if (!v) bad("unknown variant '" + j.at("variant").get<std::string>() + "'");
  spec.variant = *v;
  if (j.contains("t")) spec.t = j.at("t").get<std::string>();
  if (j.contains("objects"))
    for (const auto& o : j.at("objects")) spec.objects.push_back(parse_object(o));
  const json params = j.contains("params") ? j.at("params") : json::object();
  if (spec.variant == Variant::slice) {
    if (!params.contains("base")) bad("slice instance needs params.base");
    const json& b = params.at("base");
    spec.slice_base = FiniteSet(b.at("name").get<std::string>(),
                                string_list(b.at("elements"), "base elements"));
  }
  if (spec.variant == Variant::ordered_magma) {
    spec.magma.elements = string_list(params.at("elements"), "elements");
    if (params.contains("le"))
      for (const auto& p : params.at("le")) {
        auto pair = string_list(p, "le entry");
        if (pair.size() != 2) bad("le entries are [a, b] pairs");
        spec.magma.le.emplace_back(pair[0], pair[1]);
      }
    for (const auto& [a, row] : params.at("op").items())
      for (const auto& [b, c] : row.items())
        spec.magma.op[{a, b}] = c.get<std::string>();
  }
  return spec;
}

struct ExprParser {
  const BuiltInstance& inst;
  std::string_view text;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& what) {
    bad("object expression '" + std::string(text) + "': " + what);
  }

  void skip() {
    while (pos < text.size() && text[pos] == ' ') ++pos;
  }

  bool eat(char c) {
    skip();
    if (pos < text.size() && text[pos] == c) { ++pos; return true; }
    return false;
  }

  std::string ident() {
    skip();
    std::size_t start = pos;
    while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                 text[pos] == '_' || text[pos] == '*' || text[pos] == '\''))
      ++pos;
    if (start == pos) fail("expected a name");
    return std::string(text.substr(start, pos - start));
  }

  Obj primary() {
    skip();
    if (eat('(')) {
      Obj o = expr();
      if (!eat(')')) fail("expected ')'");
      return o;
    }
    std::string name = ident();
    skip();
    if (pos < text.size() && text[pos] == '(') {
      ++pos;
      if (name == "hom") {
        Obj x = expr();
        if (!eat(',')) fail("hom(X,Y) expects two arguments");
        Obj y = expr();
        if (!eat(')')) fail("expected ')'");
        return resolve_hom(x, y);
      }
      if (name == "flat") {
        Obj x = expr();
        if (!eat(')')) fail("expected ')'");
        if (!inst.flat) fail("instance declares no flat endofunctor");
        return inst.flat->on_obj(x);
      }
      fail("unknown constructor '" + name + "'");
    }
    auto o = inst.category->find_object(name);
    if (!o) fail("unknown object '" + name + "'");
    return *o;
  }

  Obj resolve_hom(const Obj& x, const Obj& y) {
    for (const auto& c : inst.hom_candidates)
      if (c.X == x && c.Y == y) return c.hom_obj;
    auto builtin = internal_hom_candidate(*inst.category, x, y);
    if (!builtin) fail("no internal hom available for this variant");
    return builtin->first;
  }

  Obj expr() {
    Obj left = primary();
    skip();
    if (pos < text.size() && text[pos] == '#') {
      ++pos;
      Obj right = primary();
      skip();
      if (pos < text.size() && text[pos] == '#')
        fail("the product is not associative; parenthesise nested products");
      return inst.category->tensor_obj(left, right);
    }
    return left;
  }
};

Mor parse_morphism(const BuiltInstance& inst, const std::string& name, const json& j) {
  if (!j.contains("dom") || !j.contains("cod") || !j.contains("map"))
    bad("morphism '" + name + "' needs dom, cod and map");
  Obj dom = resolve_object_expr(inst, j.at("dom").get<std::string>());
  Obj cod = resolve_object_expr(inst, j.at("cod").get<std::string>());
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& [k, v] : j.at("map").items()) pairs.emplace_back(k, v.get<std::string>());
  FiniteFunction fn;
  try {
    fn = FiniteFunction::from_pairs(dom.carrier, cod.carrier, pairs);
  } catch (const Error& e) {
    bad("morphism '" + name + "': " + e.what());
  }
  Mor m{std::move(dom), std::move(cod), std::move(fn)};
  if (!inst.category->is_morphism(m))
    bad("morphism '" + name + "' is rejected by the hom predicate");
  return m;
}

} // namespace

Obj resolve_object_expr(const BuiltInstance& inst, std::string_view expr) {
  ExprParser p{inst, expr};
  Obj o = p.expr();
  p.skip();
  if (p.pos != expr.size()) p.fail("trailing input");
  return o;
}

BuiltInstance parse_instance_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    bad(std::string("not valid JSON: ") + e.what());
  }
  if (!j.is_object()) bad("the instance document must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (key != "variant" && key != "t" && key != "objects" && key != "params" &&
        key != "morphisms" && key != "hom_candidates" && key != "flat")
      bad("unknown key '" + key + "'");
  }

  BuiltInstance inst;
  inst.spec = parse_spec(j);
  inst.category = build_category(inst.spec);

  if (j.contains("flat")) {
    std::string fv = j.at("flat").at("variant").get<std::string>();
    if (fv == "identity") inst.flat = make_flat_identity();
    else if (fv == "trivializing") inst.flat = make_flat_trivializing();
    else bad("unknown flat variant '" + fv + "'");
  }

  if (j.contains("hom_candidates"))
    for (const auto& c : j.at("hom_candidates")) {
      HomCandidate cand;
      cand.X = resolve_object_expr(inst, c.at("X").get<std::string>());
      cand.Y = resolve_object_expr(inst, c.at("Y").get<std::string>());
      ObjectSpec os = parse_object(c.at("object"));
      FiniteSet carrier(os.name, os.elements);
      ObjData data = std::monostate{};
      if (!os.basepoint.empty()) data = PointedData{os.basepoint};
      if (!os.to_base.empty()) {
        if (inst.spec.variant != Variant::slice) bad("to_base only makes sense for slices");
        data = SliceData{FiniteFunction::from_pairs(carrier, *inst.spec.slice_base, os.to_base)};
      }
      cand.hom_obj = Obj{os.name, std::move(carrier), std::move(data)};
      Obj ev_dom = inst.category->tensor_obj(cand.hom_obj, cand.X);
      std::vector<std::pair<std::string, std::string>> pairs;
      for (const auto& [k, v] : c.at("ev").at("map").items())
        pairs.emplace_back(k, v.get<std::string>());
      FiniteFunction fn = FiniteFunction::from_pairs(ev_dom.carrier, cand.Y.carrier, pairs);
      cand.ev = Mor{std::move(ev_dom), cand.Y, std::move(fn)};
      inst.hom_candidates.push_back(std::move(cand));
    }

  if (j.contains("morphisms"))
    for (const auto& [name, m] : j.at("morphisms").items())
      inst.morphisms.emplace(name, parse_morphism(inst, name, m));

  return inst;
}

BuiltInstance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open '" + path + "'");
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_instance_text(text);
}

} // namespace magmoid
