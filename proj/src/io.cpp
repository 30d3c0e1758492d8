#include "catlens/io.hpp"

#include <fstream>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <system_error>
#include <unistd.h>

namespace catlens::io {

namespace fs = std::filesystem;

bool PullbackDoc::operator==(const PullbackDoc& o) const {
  return f == o.f && g == o.g && same_category(apex, o.apex) && left == o.left && right == o.right;
}

bool CommaDoc::operator==(const CommaDoc& o) const {
  return f == o.f && same_category(apex, o.apex) && left == o.left && right == o.right;
}

namespace {

// JSON pointer escaping.
std::string escape(std::string_view key) {
  std::string s;
  for (char ch : key) {
    if (ch == '~') s += "~0";
    else if (ch == '/') s += "~1";
    else s += ch;
  }
  return s;
}

struct Ctx {
  std::string file;
  fs::path base;
  std::string pointer;

  Ctx at(std::string_view key) const { return {file, base, pointer + "/" + escape(key)}; }
  Ctx at(std::size_t i) const { return {file, base, pointer + "/" + std::to_string(i)}; }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(file + ":" + (pointer.empty() ? "/" : pointer) + ": " + msg);
  }
};

class Reader {
 public:
  Document document(const Json& j, const Ctx& ctx);

  CategoryPtr category(const Json& ref, const Ctx& ctx);
  FinFunctor functor(const Json& ref, const Ctx& ctx);
  FinCofunctor cofunctor(const Json& ref, const Ctx& ctx);
  FinLens lens(const Json& ref, const Ctx& ctx);
  StateLens state_lens(const Json& j, const Ctx& ctx);
  FinDoubleCategory double_category(const Json& j, const Ctx& ctx);
  CofunctorSpan span(const Json& j, const Ctx& ctx);
  LensTriangle triangle(const Json& j, const Ctx& ctx);
  PullbackDoc pullback(const Json& j, const Ctx& ctx);
  CommaDoc comma(const Json& j, const Ctx& ctx);
  CLensDoc clens(const Json& j, const Ctx& ctx);
  SplitOpfibDoc split_opfib(const Json& j, const Ctx& ctx);

  const Json& load(const fs::path& file);

 private:
  // Resolves a reference to the JSON it denotes and the context to read it in.
  std::pair<const Json*, Ctx> resolve(const Json& ref, const Ctx& ctx);

  std::map<std::string, Json> files_;
  std::map<std::string, CategoryPtr> categories_;
};

const Json& field(const Json& j, std::string_view key, const Ctx& ctx) {
  if (!j.is_object()) ctx.fail("expected an object");
  auto it = j.find(key);
  if (it == j.end()) ctx.fail("missing key \"" + std::string(key) + "\"");
  return *it;
}

std::string str(const Json& j, const Ctx& ctx) {
  if (!j.is_string()) ctx.fail("expected a string");
  return j.get<std::string>();
}

const Json& object_of(const Json& j, const Ctx& ctx) {
  if (!j.is_object()) ctx.fail("expected an object");
  return j;
}

const Json& array_of(const Json& j, const Ctx& ctx) {
  if (!j.is_array()) ctx.fail("expected an array");
  return j;
}

void check_kind(const Json& j, std::string_view kind, const Ctx& ctx, bool required) {
  if (!j.is_object()) ctx.fail("expected an object");
  auto it = j.find("kind");
  if (it == j.end()) {
    if (required) ctx.fail("missing key \"kind\"");
    return;
  }
  std::string k = str(*it, ctx.at("kind"));
  if (k != kind) ctx.at("kind").fail("expected kind \"" + std::string(kind) + "\", found \"" + k + "\"");
}

template <class F>
auto wrap(const Ctx& ctx, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const StructuralError& e) {
    ctx.fail(e.what());
  }
}

Index object_named(const FinCategory& c, const Json& j, const Ctx& ctx) {
  auto id = str(j, ctx);
  auto o = c.find_object(id);
  if (!o) ctx.fail("unknown object '" + id + "'");
  return *o;
}

Index morphism_named(const FinCategory& c, const Json& j, const Ctx& ctx) {
  auto id = str(j, ctx);
  auto m = c.find_morphism(id);
  if (!m) ctx.fail("unknown morphism '" + id + "'");
  return *m;
}

// An object keyed by source identifiers, read into a total index map.
template <class KeyLookup, class ValueLookup>
std::vector<Index> total_map(const Json& j, const Ctx& ctx, std::size_t size, KeyLookup key_of, ValueLookup value_of,
                             const std::function<std::string(std::size_t)>& name_of) {
  std::vector<Index> out(size, kNone);
  for (const auto& [key, value] : object_of(j, ctx).items()) {
    Ctx here = ctx.at(key);
    Index k = key_of(key, here);
    if (out[static_cast<std::size_t>(k)] != kNone) here.fail("duplicate entry");
    out[static_cast<std::size_t>(k)] = value_of(value, here);
  }
  for (std::size_t i = 0; i < size; ++i) {
    if (out[i] == kNone) ctx.fail("no entry for '" + name_of(i) + "'");
  }
  return out;
}

std::vector<Index> object_map(const Json& j, const Ctx& ctx, const FinCategory& a, const FinCategory& b) {
  return total_map(
      j, ctx, a.object_count(),
      [&](const std::string& key, const Ctx& here) {
        auto o = a.find_object(key);
        if (!o) here.fail("unknown object '" + key + "'");
        return *o;
      },
      [&](const Json& v, const Ctx& here) { return object_named(b, v, here); },
      [&](std::size_t i) { return a.object_id(static_cast<Index>(i)); });
}

std::vector<Index> morphism_map(const Json& j, const Ctx& ctx, const FinCategory& a, const FinCategory& b) {
  return total_map(
      j, ctx, a.morphism_count(),
      [&](const std::string& key, const Ctx& here) {
        auto m = a.find_morphism(key);
        if (!m) here.fail("unknown morphism '" + key + "'");
        return *m;
      },
      [&](const Json& v, const Ctx& here) { return morphism_named(b, v, here); },
      [&](std::size_t i) { return a.morphism_id(static_cast<Index>(i)); });
}

FinFunctor maps(const Json& j, const Ctx& ctx, const CategoryPtr& a, const CategoryPtr& b) {
  auto f0 = object_map(field(j, "f0", ctx), ctx.at("f0"), *a, *b);
  auto f1 = morphism_map(field(j, "f1", ctx), ctx.at("f1"), *a, *b);
  return wrap(ctx, [&] { return FinFunctor(a, b, std::move(f0), std::move(f1)); });
}

// Anchored-update tokens "a|u" resolved against the actual pairs, so
// identifiers containing '|' stay unambiguous whenever they can be.
std::map<std::string, std::size_t> anchored_slots(const FinCategory& a, const FinCategory& b,
                                                  const AnchoredPairs& pairs, const Ctx& ctx) {
  std::map<std::string, std::size_t> slots;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    auto token = anchored_token(a.object_id(pairs[k].first), b.morphism_id(pairs[k].second));
    if (!slots.emplace(token, k).second) ctx.fail("anchored update token '" + token + "' is ambiguous");
  }
  return slots;
}

template <class ValueLookup>
std::vector<Index> anchored_map(const Json& j, const Ctx& ctx, const FinCategory& a, const FinCategory& b,
                                const AnchoredPairs& pairs, ValueLookup value_of) {
  auto slots = anchored_slots(a, b, pairs, ctx);
  return total_map(
      j, ctx, pairs.size(),
      [&](const std::string& key, const Ctx& here) {
        auto it = slots.find(key);
        if (it == slots.end()) here.fail("'" + key + "' is not an anchored update");
        return static_cast<Index>(it->second);
      },
      value_of,
      [&](std::size_t k) { return anchored_token(a.object_id(pairs[k].first), b.morphism_id(pairs[k].second)); });
}

FinCategory parse_category(const Json& j, const Ctx& ctx) {
  check_kind(j, "category", ctx, false);
  std::vector<ObjId> objects;
  const auto& jo = array_of(field(j, "objects", ctx), ctx.at("objects"));
  for (std::size_t i = 0; i < jo.size(); ++i) objects.push_back(str(jo[i], ctx.at("objects").at(i)));
  std::vector<MorphismDecl> morphisms;
  const auto& jm = array_of(field(j, "morphisms", ctx), ctx.at("morphisms"));
  for (std::size_t i = 0; i < jm.size(); ++i) {
    Ctx here = ctx.at("morphisms").at(i);
    morphisms.push_back({str(field(jm[i], "id", here), here.at("id")), str(field(jm[i], "dom", here), here.at("dom")),
                         str(field(jm[i], "cod", here), here.at("cod"))});
  }
  std::map<ObjId, MorId> identities;
  Ctx ic = ctx.at("identities");
  for (const auto& [o, m] : object_of(field(j, "identities", ctx), ic).items()) identities[o] = str(m, ic.at(o));
  std::vector<CompositionEntry> compose;
  const auto& jc = array_of(field(j, "compose", ctx), ctx.at("compose"));
  for (std::size_t i = 0; i < jc.size(); ++i) {
    Ctx here = ctx.at("compose").at(i);
    compose.push_back({str(field(jc[i], "first", here), here.at("first")),
                       str(field(jc[i], "second", here), here.at("second")),
                       str(field(jc[i], "result", here), here.at("result"))});
  }
  // Dangling references are reported at their own position.
  std::set<std::string> obj_ids(objects.begin(), objects.end()), mor_ids;
  for (std::size_t i = 0; i < morphisms.size(); ++i) {
    Ctx here = ctx.at("morphisms").at(i);
    mor_ids.insert(morphisms[i].id);
    if (!obj_ids.count(morphisms[i].dom)) here.at("dom").fail("undeclared object '" + morphisms[i].dom + "'");
    if (!obj_ids.count(morphisms[i].cod)) here.at("cod").fail("undeclared object '" + morphisms[i].cod + "'");
  }
  for (const auto& [o, m] : identities) {
    if (!obj_ids.count(o)) ic.at(o).fail("undeclared object '" + o + "'");
    if (!mor_ids.count(m)) ic.at(o).fail("undeclared morphism '" + m + "'");
  }
  for (std::size_t i = 0; i < compose.size(); ++i) {
    Ctx here = ctx.at("compose").at(i);
    for (auto [key, id] : {std::pair{"first", &compose[i].first}, std::pair{"second", &compose[i].second},
                           std::pair{"result", &compose[i].result}}) {
      if (!mor_ids.count(*id)) here.at(key).fail("undeclared morphism '" + *id + "'");
    }
  }
  return wrap(ctx, [&] { return FinCategory::from_tables(objects, morphisms, identities, compose); });
}

const Json& Reader::load(const fs::path& file) {
  std::error_code ec;
  auto key = fs::weakly_canonical(file, ec).string();
  if (ec) key = file.string();
  auto it = files_.find(key);
  if (it != files_.end()) return it->second;
  std::ifstream in(file, std::ios::binary);
  if (!in) throw ParseError(file.string() + ":/: cannot open file");
  try {
    return files_.emplace(key, Json::parse(in)).first->second;
  } catch (const Json::parse_error& e) {
    throw ParseError(file.string() + ":/: " + e.what());
  }
}

std::pair<const Json*, Ctx> Reader::resolve(const Json& ref, const Ctx& ctx) {
  if (ref.is_object()) return {&ref, ctx};
  if (!ref.is_string()) ctx.fail("expected a path or an inline object");
  fs::path p = ref.get<std::string>();
  if (p.is_relative()) p = ctx.base / p;
  const Json& j = load(p);
  return {&j, Ctx{p.string(), p.parent_path(), ""}};
}

CategoryPtr Reader::category(const Json& ref, const Ctx& ctx) {
  auto [j, here] = resolve(ref, ctx);
  if (ref.is_string()) {
    auto it = categories_.find(here.file);
    if (it != categories_.end()) return it->second;
    return categories_[here.file] = share(parse_category(*j, here));
  }
  return share(parse_category(*j, here));
}

FinFunctor Reader::functor(const Json& ref, const Ctx& ctx) {
  auto [j, here] = resolve(ref, ctx);
  check_kind(*j, "functor", here, false);
  auto a = category(field(*j, "source", here), here.at("source"));
  auto b = category(field(*j, "target", here), here.at("target"));
  return maps(*j, here, a, b);
}

FinCofunctor Reader::cofunctor(const Json& ref, const Ctx& ctx) {
  auto [jp, here] = resolve(ref, ctx);
  const Json& j = *jp;
  check_kind(j, "cofunctor", here, false);
  auto a = category(field(j, "source", here), here.at("source"));
  auto b = category(field(j, "target", here), here.at("target"));
  auto phi0 = object_map(field(j, "phi0", here), here.at("phi0"), *a, *b);
  AnchoredPairs pairs(*a, *b, phi0);
  auto lift = anchored_map(field(j, "phi1", here), here.at("phi1"), *a, *b, pairs,
                           [&](const Json& v, const Ctx& c) { return morphism_named(*a, v, c); });
  std::vector<Index> p0;
  if (j.contains("p0")) {
    p0 = anchored_map(j["p0"], here.at("p0"), *a, *b, pairs,
                      [&](const Json& v, const Ctx& c) { return object_named(*a, v, c); });
  } else {
    p0 = infer_p0(*a, lift);
  }
  return wrap(here, [&] { return FinCofunctor(a, b, phi0, lift, p0); });
}

FinLens Reader::lens(const Json& ref, const Ctx& ctx) {
  auto [j, here] = resolve(ref, ctx);
  check_kind(*j, "lens", here, false);
  auto get = functor(field(*j, "get", here), here.at("get"));
  auto put = cofunctor(field(*j, "put", here), here.at("put"));
  return wrap(here, [&] { return FinLens(get, put); });
}

StateLens Reader::state_lens(const Json& j, const Ctx& ctx) {
  check_kind(j, "state-lens", ctx, false);
  auto strings = [&](std::string_view key) {
    std::vector<std::string> out;
    const auto& arr = array_of(field(j, key, ctx), ctx.at(key));
    for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(str(arr[i], ctx.at(key).at(i)));
    return out;
  };
  auto source = strings("source");
  auto view = strings("view");
  std::map<std::string, std::string> get;
  Ctx gc = ctx.at("get");
  for (const auto& [k, v] : object_of(field(j, "get", ctx), gc).items()) get[k] = str(v, gc.at(k));
  std::map<std::string, std::pair<std::string, std::string>> tokens;
  for (const auto& a : source) {
    for (const auto& b : view) {
      if (!tokens.emplace(a + "|" + b, std::pair{a, b}).second) ctx.at("put").fail("token '" + a + "|" + b + "' is ambiguous");
    }
  }
  std::map<std::pair<std::string, std::string>, std::string> put;
  Ctx pc = ctx.at("put");
  for (const auto& [k, v] : object_of(field(j, "put", ctx), pc).items()) {
    auto it = tokens.find(k);
    if (it == tokens.end()) pc.at(k).fail("'" + k + "' is not a (source|view) pair");
    put[it->second] = str(v, pc.at(k));
  }
  return wrap(ctx, [&] { return StateLens::from_names(source, view, get, put); });
}

FinDoubleCategory Reader::double_category(const Json& j, const Ctx& ctx) {
  check_kind(j, "double-category", ctx, false);
  auto obj = category(field(j, "objects", ctx), ctx.at("objects"));
  auto mor = category(field(j, "morphisms", ctx), ctx.at("morphisms"));
  auto ddom = maps(field(j, "dom", ctx), ctx.at("dom"), mor, obj);
  auto dcod = maps(field(j, "cod", ctx), ctx.at("cod"), mor, obj);
  auto did = maps(field(j, "identity", ctx), ctx.at("identity"), obj, mor);
  Ctx cc = ctx.at("compose");
  const auto& jc = field(j, "compose", ctx);
  auto table = [&](std::string_view key, bool objects) {
    std::map<std::pair<Index, Index>, Index> out;
    Ctx here = cc.at(key);
    const auto& arr = array_of(field(jc, key, cc), here);
    auto named = [&](const Json& v, const Ctx& c) { return objects ? object_named(*mor, v, c) : morphism_named(*mor, v, c); };
    for (std::size_t i = 0; i < arr.size(); ++i) {
      Ctx e = here.at(i);
      auto x = named(field(arr[i], "first", e), e.at("first"));
      auto y = named(field(arr[i], "second", e), e.at("second"));
      if (!out.emplace(std::pair{x, y}, named(field(arr[i], "result", e), e.at("result"))).second) e.fail("duplicate entry");
    }
    return out;
  };
  auto on_obj = table("objects", true);
  auto on_mor = table("morphisms", false);
  auto lookup = [](const std::map<std::pair<Index, Index>, Index>& t) {
    return [&t](Index x, Index y) {
      auto it = t.find({x, y});
      return it == t.end() ? kNone : it->second;
    };
  };
  return wrap(cc, [&] { return assemble_double_category(ddom, dcod, did, lookup(on_obj), lookup(on_mor)); });
}

CofunctorSpan Reader::span(const Json& j, const Ctx& ctx) {
  check_kind(j, "cofunctor-span", ctx, false);
  auto a = category(field(j, "source", ctx), ctx.at("source"));
  auto b = category(field(j, "target", ctx), ctx.at("target"));
  auto apex = category(field(j, "apex", ctx), ctx.at("apex"));
  return CofunctorSpan{apex, maps(field(j, "left", ctx), ctx.at("left"), apex, b),
                       maps(field(j, "right", ctx), ctx.at("right"), apex, a)};
}

LensTriangle Reader::triangle(const Json& j, const Ctx& ctx) {
  check_kind(j, "lens-triangle", ctx, false);
  auto a = category(field(j, "source", ctx), ctx.at("source"));
  auto b = category(field(j, "target", ctx), ctx.at("target"));
  auto apex = category(field(j, "apex", ctx), ctx.at("apex"));
  return LensTriangle{apex, maps(field(j, "left", ctx), ctx.at("left"), apex, a),
                      maps(field(j, "right", ctx), ctx.at("right"), apex, b),
                      maps(field(j, "get", ctx), ctx.at("get"), a, b)};
}

PullbackDoc Reader::pullback(const Json& j, const Ctx& ctx) {
  check_kind(j, "pullback", ctx, false);
  auto f = functor(field(j, "f", ctx), ctx.at("f"));
  auto g = functor(field(j, "g", ctx), ctx.at("g"));
  auto apex = category(field(j, "apex", ctx), ctx.at("apex"));
  return PullbackDoc{f, g, apex, maps(field(j, "left", ctx), ctx.at("left"), apex, f.source_ptr()),
                     maps(field(j, "right", ctx), ctx.at("right"), apex, g.source_ptr())};
}

CommaDoc Reader::comma(const Json& j, const Ctx& ctx) {
  check_kind(j, "comma", ctx, false);
  auto f = functor(field(j, "f", ctx), ctx.at("f"));
  auto apex = category(field(j, "apex", ctx), ctx.at("apex"));
  return CommaDoc{f, apex, maps(field(j, "left", ctx), ctx.at("left"), apex, f.source_ptr()),
                  maps(field(j, "right", ctx), ctx.at("right"), apex, f.target_ptr())};
}

LiftTable lift_table(const Json& j, const Ctx& ctx, const FinFunctor& f) {
  AnchoredPairs pairs(f.source(), f.target(), f.object_map());
  return anchored_map(j, ctx, f.source(), f.target(), pairs,
                      [&](const Json& v, const Ctx& c) { return morphism_named(f.source(), v, c); });
}

CLensDoc Reader::clens(const Json& j, const Ctx& ctx) {
  check_kind(j, "c-lens", ctx, false);
  CLensDoc doc{functor(field(j, "get", ctx), ctx.at("get")), std::nullopt, std::nullopt};
  bool has_put = j.contains("put"), has_lifts = j.contains("lifts");
  if (has_put == has_lifts) ctx.fail("exactly one of \"put\" and \"lifts\" is required");
  if (has_put) doc.put = functor(j["put"], ctx.at("put"));
  if (has_lifts) doc.lifts = lift_table(j["lifts"], ctx.at("lifts"), doc.get);
  return doc;
}

SplitOpfibDoc Reader::split_opfib(const Json& j, const Ctx& ctx) {
  check_kind(j, "split-opfibration", ctx, false);
  auto f = functor(field(j, "functor", ctx), ctx.at("functor"));
  auto lifts = lift_table(field(j, "lifts", ctx), ctx.at("lifts"), f);
  return SplitOpfibDoc{f, lifts};
}

Document Reader::document(const Json& j, const Ctx& ctx) {
  if (!j.is_object()) ctx.fail("expected an object");
  if (!j.contains("kind")) ctx.fail("missing key \"kind\"");
  auto kind = str(j["kind"], ctx.at("kind"));
  if (kind == "category") return share(parse_category(j, ctx));
  if (kind == "functor") return functor(j, ctx);
  if (kind == "cofunctor") return cofunctor(j, ctx);
  if (kind == "lens") return lens(j, ctx);
  if (kind == "state-lens") return state_lens(j, ctx);
  if (kind == "double-category") return double_category(j, ctx);
  if (kind == "cofunctor-span") return span(j, ctx);
  if (kind == "lens-triangle") return triangle(j, ctx);
  if (kind == "pullback") return pullback(j, ctx);
  if (kind == "comma") return comma(j, ctx);
  if (kind == "c-lens") return clens(j, ctx);
  if (kind == "split-opfibration") return split_opfib(j, ctx);
  ctx.at("kind").fail("unknown kind \"" + kind + "\"");
}

template <class T>
T read_as(const fs::path& file, std::string_view kind) {
  Reader r;
  auto doc = r.document(r.load(file), Ctx{file.string(), file.parent_path(), ""});
  if (auto* v = std::get_if<T>(&doc)) return std::move(*v);
  throw ParseError(file.string() + ":/kind: expected kind \"" + std::string(kind) + "\", found \"" + kind_of(doc) + "\"");
}

// --- writing --------------------------------------------------------------

Json maps_json(const FinFunctor& f) {
  Json j = Json::object();
  Json f0 = Json::object(), f1 = Json::object();
  const auto& a = f.source();
  const auto& b = f.target();
  for (Index o = 0; o < static_cast<Index>(a.object_count()); ++o) f0[a.object_id(o)] = b.object_id(f.on_object(o));
  for (Index m = 0; m < static_cast<Index>(a.morphism_count()); ++m) f1[a.morphism_id(m)] = b.morphism_id(f.on_morphism(m));
  j["f0"] = std::move(f0);
  j["f1"] = std::move(f1);
  return j;
}

Json with_kind(std::string_view kind) {
  Json j = Json::object();
  j["kind"] = kind;
  return j;
}

Json anchored_json(const FinCategory& a, const FinCategory& b, const std::vector<Index>& phi0,
                   const std::function<std::string(std::size_t)>& value) {
  AnchoredPairs pairs(a, b, phi0);
  Json j = Json::object();
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    j[anchored_token(a.object_id(pairs[k].first), b.morphism_id(pairs[k].second))] = value(k);
  }
  return j;
}

}  // namespace

std::string kind_of(const Document& d) {
  static const char* const names[] = {"category",       "functor",        "cofunctor", "lens",
                                      "state-lens",     "double-category", "cofunctor-span",
                                      "lens-triangle",  "pullback",       "comma",     "c-lens",
                                      "split-opfibration"};
  return names[d.index()];
}

Document read_document(const fs::path& file) {
  Reader r;
  return r.document(r.load(file), Ctx{file.string(), file.parent_path(), ""});
}

Document parse_document(const std::string& text, const fs::path& base) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("<input>:/: ") + e.what());
  }
  Reader r;
  return r.document(j, Ctx{"<input>", base, ""});
}

CategoryPtr read_category(const fs::path& file) { return read_as<CategoryPtr>(file, "category"); }
FinFunctor read_functor(const fs::path& file) { return read_as<FinFunctor>(file, "functor"); }
FinCofunctor read_cofunctor(const fs::path& file) { return read_as<FinCofunctor>(file, "cofunctor"); }
FinLens read_lens(const fs::path& file) { return read_as<FinLens>(file, "lens"); }
StateLens read_state_lens(const fs::path& file) { return read_as<StateLens>(file, "state-lens"); }

Json to_json(const FinCategory& c) {
  Json j = with_kind("category");
  Json objects = Json::array(), morphisms = Json::array(), identities = Json::object(), compose = Json::array();
  for (const auto& o : c.objects()) objects.push_back(o);
  for (Index m = 0; m < static_cast<Index>(c.morphism_count()); ++m) {
    Json e = Json::object();
    e["id"] = c.morphism_id(m);
    e["dom"] = c.object_id(c.dom(m));
    e["cod"] = c.object_id(c.cod(m));
    morphisms.push_back(std::move(e));
  }
  for (Index o = 0; o < static_cast<Index>(c.object_count()); ++o) identities[c.object_id(o)] = c.morphism_id(c.identity(o));
  for (Index g = 0; g < static_cast<Index>(c.morphism_count()); ++g) {
    for (Index h : c.out(c.cod(g))) {
      Json e = Json::object();
      e["first"] = c.morphism_id(g);
      e["second"] = c.morphism_id(h);
      e["result"] = c.morphism_id(c.compose(g, h));
      compose.push_back(std::move(e));
    }
  }
  j["objects"] = std::move(objects);
  j["morphisms"] = std::move(morphisms);
  j["identities"] = std::move(identities);
  j["compose"] = std::move(compose);
  return j;
}

Json to_json(const FinFunctor& f) {
  Json j = with_kind("functor");
  j["source"] = to_json(f.source());
  j["target"] = to_json(f.target());
  j.update(maps_json(f));
  return j;
}

Json to_json(const FinCofunctor& phi) {
  const auto& a = phi.source();
  const auto& b = phi.target();
  Json j = with_kind("cofunctor");
  j["source"] = to_json(a);
  j["target"] = to_json(b);
  Json phi0 = Json::object();
  for (Index o = 0; o < static_cast<Index>(a.object_count()); ++o) phi0[a.object_id(o)] = b.object_id(phi.on_object(o));
  j["phi0"] = std::move(phi0);
  j["phi1"] = anchored_json(a, b, phi.object_map(), [&](std::size_t k) { return a.morphism_id(phi.lifts()[k]); });
  j["p0"] = anchored_json(a, b, phi.object_map(), [&](std::size_t k) { return a.object_id(phi.landing()[k]); });
  return j;
}

Json to_json(const FinLens& l) {
  Json j = with_kind("lens");
  j["get"] = to_json(l.get());
  j["put"] = to_json(l.put());
  return j;
}

Json to_json(const StateLens& s) {
  Json j = with_kind("state-lens");
  j["source"] = s.source();
  j["view"] = s.view();
  Json get = Json::object(), put = Json::object();
  for (std::size_t a = 0; a < s.source().size(); ++a) {
    get[s.source()[a]] = s.view()[static_cast<std::size_t>(s.get(static_cast<Index>(a)))];
    for (std::size_t b = 0; b < s.view().size(); ++b) {
      put[s.source()[a] + "|" + s.view()[b]] =
          s.source()[static_cast<std::size_t>(s.put(static_cast<Index>(a), static_cast<Index>(b)))];
    }
  }
  j["get"] = std::move(get);
  j["put"] = std::move(put);
  return j;
}

Json to_json(const FinDoubleCategory& d) {
  Json j = with_kind("double-category");
  j["objects"] = to_json(*d.obj_cat);
  j["morphisms"] = to_json(*d.mor_cat);
  j["dom"] = maps_json(d.ddom);
  j["cod"] = maps_json(d.dcod);
  j["identity"] = maps_json(d.did);
  const auto& m = *d.mor_cat;
  const auto& p = *d.pairs.apex;
  Json objects = Json::array(), morphisms = Json::array();
  for (Index o = 0; o < static_cast<Index>(p.object_count()); ++o) {
    Json e = Json::object();
    e["first"] = m.object_id(d.pairs.left.on_object(o));
    e["second"] = m.object_id(d.pairs.right.on_object(o));
    e["result"] = m.object_id(d.dcomp.on_object(o));
    objects.push_back(std::move(e));
  }
  for (Index g = 0; g < static_cast<Index>(p.morphism_count()); ++g) {
    Json e = Json::object();
    e["first"] = m.morphism_id(d.pairs.left.on_morphism(g));
    e["second"] = m.morphism_id(d.pairs.right.on_morphism(g));
    e["result"] = m.morphism_id(d.dcomp.on_morphism(g));
    morphisms.push_back(std::move(e));
  }
  Json compose = Json::object();
  compose["objects"] = std::move(objects);
  compose["morphisms"] = std::move(morphisms);
  j["compose"] = std::move(compose);
  return j;
}

Json to_json(const CofunctorSpan& s) {
  Json j = with_kind("cofunctor-span");
  j["source"] = to_json(s.right.target());
  j["target"] = to_json(s.left.target());
  j["apex"] = to_json(*s.apex);
  j["left"] = maps_json(s.left);
  j["right"] = maps_json(s.right);
  return j;
}

Json to_json(const LensTriangle& t) {
  Json j = with_kind("lens-triangle");
  j["source"] = to_json(t.base.source());
  j["target"] = to_json(t.base.target());
  j["apex"] = to_json(*t.apex);
  j["left"] = maps_json(t.left);
  j["right"] = maps_json(t.right);
  j["get"] = maps_json(t.base);
  return j;
}

Json to_json(const PullbackDoc& p) {
  Json j = with_kind("pullback");
  j["f"] = to_json(p.f);
  j["g"] = to_json(p.g);
  j["apex"] = to_json(*p.apex);
  j["left"] = maps_json(p.left);
  j["right"] = maps_json(p.right);
  return j;
}

Json to_json(const CommaDoc& c) {
  Json j = with_kind("comma");
  j["f"] = to_json(c.f);
  j["apex"] = to_json(*c.apex);
  j["left"] = maps_json(c.left);
  j["right"] = maps_json(c.right);
  return j;
}

Json to_json(const CLensDoc& c) {
  Json j = with_kind("c-lens");
  j["get"] = to_json(c.get);
  if (c.lifts) {
    const auto& a = c.get.source();
    j["lifts"] = anchored_json(a, c.get.target(), c.get.object_map(),
                               [&](std::size_t k) { return a.morphism_id((*c.lifts)[k]); });
  } else if (c.put) {
    j["put"] = to_json(*c.put);
  }
  return j;
}

Json to_json(const SplitOpfibDoc& s) {
  Json j = with_kind("split-opfibration");
  j["functor"] = to_json(s.functor);
  const auto& a = s.functor.source();
  j["lifts"] = anchored_json(a, s.functor.target(), s.functor.object_map(),
                             [&](std::size_t k) { return a.morphism_id(s.lifts[k]); });
  return j;
}

Json to_json(const Document& d) {
  return std::visit(
      [](const auto& v) -> Json {
        if constexpr (std::is_same_v<std::decay_t<decltype(v)>, CategoryPtr>) {
          return to_json(*v);
        } else {
          return to_json(v);
        }
      },
      d);
}

Json report_json(const ValidationReport& r) {
  Json j = Json::object();
  j["verdict"] = r.valid() ? "valid" : "invalid";
  Json vs = Json::array();
  for (const auto& v : r.violations()) {
    Json e = Json::object();
    e["law"] = v.law;
    e["witness"] = v.witness;
    vs.push_back(std::move(e));
  }
  j["violations"] = std::move(vs);
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void write_atomic(const fs::path& file, const std::string& contents) {
  fs::path dir = file.parent_path();
  if (dir.empty()) dir = ".";
  fs::path tmp = dir / ("." + file.filename().string() + ".tmp" + std::to_string(::getpid()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ParseError(file.string() + ":/: cannot open for writing");
    out << contents;
    out.flush();
    if (!out) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw ParseError(file.string() + ":/: write failed");
    }
  }
  std::error_code ec;
  fs::rename(tmp, file, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw ParseError(file.string() + ":/: cannot replace file");
  }
}

}  // namespace catlens::io
