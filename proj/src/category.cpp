#include "catlens/category.hpp"

#include <algorithm>
#include <numeric>

#include "catlens/errors.hpp"

namespace catlens {

namespace {

std::vector<Index> sort_order(const std::vector<std::string>& names, const char* what) {
  std::vector<Index> order(names.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](Index a, Index b) { return names[a] < names[b]; });
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto& name = names[static_cast<std::size_t>(order[i])];
    if (name.empty()) throw StructuralError(std::string("empty ") + what + " identifier");
    if (i > 0 && names[static_cast<std::size_t>(order[i - 1])] == name) {
      throw StructuralError(std::string("duplicate ") + what + " identifier '" + name + "'");
    }
  }
  return order;
}

}  // namespace

std::string tuple_token(std::initializer_list<std::string_view> parts) {
  std::string out = "(";
  bool first = true;
  for (auto p : parts) {
    if (!first) out += ',';
    out += p;
    first = false;
  }
  out += ')';
  return out;
}

// ---------------------------------------------------------------------------
// FinCategory

Index FinCategory::compose(Index first, Index second) const {
  if (cod(first) != dom(second)) return kNone;
  return comp_[comp_offset_[static_cast<std::size_t>(first)] +
               static_cast<std::size_t>(out_position(second))];
}

std::vector<Index> FinCategory::hom(Index a, Index b) const {
  std::vector<Index> result;
  for (Index m : out(a)) {
    if (cod(m) == b) result.push_back(m);
  }
  return result;
}

std::optional<Index> FinCategory::find_object(std::string_view id) const {
  auto it = object_lookup_.find(std::string(id));
  if (it == object_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<Index> FinCategory::find_morphism(std::string_view id) const {
  auto it = morphism_lookup_.find(std::string(id));
  if (it == morphism_lookup_.end()) return std::nullopt;
  return it->second;
}

Index FinCategory::object_index(std::string_view id) const {
  if (auto i = find_object(id)) return *i;
  throw StructuralError("undeclared object '" + std::string(id) + "'");
}

Index FinCategory::morphism_index(std::string_view id) const {
  if (auto i = find_morphism(id)) return *i;
  throw StructuralError("undeclared morphism '" + std::string(id) + "'");
}

bool FinCategory::operator==(const FinCategory& other) const {
  return objects_ == other.objects_ && morphisms_ == other.morphisms_ && dom_ == other.dom_ &&
         cod_ == other.cod_ && ident_ == other.ident_ && comp_ == other.comp_;
}

bool same_category(const FinCategory& a, const FinCategory& b) { return &a == &b || a == b; }

bool same_category(const CategoryPtr& a, const CategoryPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

FinCategory FinCategory::from_tables(std::vector<ObjId> objects, std::vector<MorphismDecl> morphisms,
                                     const std::map<ObjId, MorId>& identities,
                                     const std::vector<CompositionEntry>& compose) {
  CategoryBuilder b;
  std::unordered_map<std::string, Index> obj, mor;
  for (auto& o : objects) {
    auto id = o;
    Index i = b.add_object(std::move(o));
    if (!obj.emplace(id, i).second) throw StructuralError("duplicate object identifier '" + id + "'");
  }
  auto lookup = [](const auto& table, const std::string& id, const char* what) {
    auto it = table.find(id);
    if (it == table.end()) throw StructuralError(std::string("undeclared ") + what + " '" + id + "'");
    return it->second;
  };
  for (auto& m : morphisms) {
    Index d = lookup(obj, m.dom, "object");
    Index c = lookup(obj, m.cod, "object");
    auto id = m.id;
    Index i = b.add_morphism(std::move(m.id), d, c);
    if (!mor.emplace(id, i).second) throw StructuralError("duplicate morphism identifier '" + id + "'");
  }
  for (const auto& [o, m] : identities) {
    b.set_identity(lookup(obj, o, "object"), lookup(mor, m, "morphism"));
  }
  for (const auto& e : compose) {
    b.set_composite(lookup(mor, e.first, "morphism"), lookup(mor, e.second, "morphism"),
                    lookup(mor, e.result, "morphism"));
  }
  return std::move(b).build();
}

// ---------------------------------------------------------------------------
// CategoryBuilder

Index CategoryBuilder::add_object(ObjId id) {
  objects_.push_back(std::move(id));
  return static_cast<Index>(objects_.size() - 1);
}

Index CategoryBuilder::add_morphism(MorId id, Index dom, Index cod) {
  morphisms_.push_back(std::move(id));
  dom_.push_back(dom);
  cod_.push_back(cod);
  return static_cast<Index>(morphisms_.size() - 1);
}

void CategoryBuilder::set_identity(Index object, Index morphism) {
  identities_.emplace_back(object, morphism);
}

void CategoryBuilder::set_composite(Index first, Index second, Index result) {
  composites_.push_back({first, second, result});
}

FinCategory CategoryBuilder::build(std::vector<Index>* object_map,
                                   std::vector<Index>* morphism_map) && {
  const auto obj_order = sort_order(objects_, "object");
  const auto mor_order = sort_order(morphisms_, "morphism");
  const std::size_t n_obj = objects_.size();
  const std::size_t n_mor = morphisms_.size();

  std::vector<Index> obj_new(n_obj), mor_new(n_mor);
  for (std::size_t i = 0; i < n_obj; ++i) obj_new[static_cast<std::size_t>(obj_order[i])] = static_cast<Index>(i);
  for (std::size_t i = 0; i < n_mor; ++i) mor_new[static_cast<std::size_t>(mor_order[i])] = static_cast<Index>(i);

  FinCategory c;
  c.objects_.reserve(n_obj);
  for (Index old : obj_order) c.objects_.push_back(std::move(objects_[static_cast<std::size_t>(old)]));
  c.morphisms_.reserve(n_mor);
  c.dom_.resize(n_mor);
  c.cod_.resize(n_mor);
  for (std::size_t i = 0; i < n_mor; ++i) {
    auto old = static_cast<std::size_t>(mor_order[i]);
    c.morphisms_.push_back(std::move(morphisms_[old]));
    for (Index end : {dom_[old], cod_[old]}) {
      if (end < 0 || static_cast<std::size_t>(end) >= n_obj) {
        throw StructuralError("morphism '" + c.morphisms_.back() + "' has an undeclared endpoint");
      }
    }
    c.dom_[i] = obj_new[static_cast<std::size_t>(dom_[old])];
    c.cod_[i] = obj_new[static_cast<std::size_t>(cod_[old])];
  }

  auto valid_mor = [&](Index m) { return m >= 0 && static_cast<std::size_t>(m) < n_mor; };

  c.ident_.assign(n_obj, kNone);
  for (auto [o, m] : identities_) {
    if (o < 0 || static_cast<std::size_t>(o) >= n_obj || !valid_mor(m)) {
      throw StructuralError("identity entry references an undeclared identifier");
    }
    auto& slot = c.ident_[static_cast<std::size_t>(obj_new[static_cast<std::size_t>(o)])];
    if (slot != kNone) {
      throw StructuralError("object '" + c.objects_[static_cast<std::size_t>(obj_new[static_cast<std::size_t>(o)])] +
                            "' has more than one identity");
    }
    slot = mor_new[static_cast<std::size_t>(m)];
  }
  for (std::size_t o = 0; o < n_obj; ++o) {
    if (c.ident_[o] == kNone) throw StructuralError("object '" + c.objects_[o] + "' has no identity");
  }

  c.out_.assign(n_obj, {});
  c.out_pos_.resize(n_mor);
  for (std::size_t m = 0; m < n_mor; ++m) {
    auto& bucket = c.out_[static_cast<std::size_t>(c.dom_[m])];
    c.out_pos_[m] = static_cast<Index>(bucket.size());
    bucket.push_back(static_cast<Index>(m));
  }
  c.comp_offset_.resize(n_mor);
  std::size_t total = 0;
  for (std::size_t m = 0; m < n_mor; ++m) {
    c.comp_offset_[m] = total;
    total += c.out_[static_cast<std::size_t>(c.cod_[m])].size();
  }
  c.comp_.assign(total, kNone);
  for (const auto& e : composites_) {
    if (!valid_mor(e.first) || !valid_mor(e.second) || !valid_mor(e.result)) {
      throw StructuralError("composition entry references an undeclared morphism");
    }
    Index g = mor_new[static_cast<std::size_t>(e.first)];
    Index h = mor_new[static_cast<std::size_t>(e.second)];
    if (c.cod(g) != c.dom(h)) {
      throw StructuralError("composition entry (" + c.morphism_id(g) + ", " + c.morphism_id(h) +
                            ") is not a composable pair");
    }
    auto& slot = c.comp_[c.comp_offset_[static_cast<std::size_t>(g)] + static_cast<std::size_t>(c.out_position(h))];
    if (slot != kNone) {
      throw StructuralError("composition entry (" + c.morphism_id(g) + ", " + c.morphism_id(h) +
                            ") is given twice");
    }
    slot = mor_new[static_cast<std::size_t>(e.result)];
  }
  for (std::size_t g = 0; g < n_mor; ++g) {
    for (Index h : c.out_[static_cast<std::size_t>(c.cod_[g])]) {
      if (c.comp_[c.comp_offset_[g] + static_cast<std::size_t>(c.out_position(h))] == kNone) {
        throw StructuralError("composition table has no entry for (" + c.morphisms_[g] + ", " +
                              c.morphism_id(h) + ")");
      }
    }
  }

  c.object_lookup_.reserve(n_obj);
  for (std::size_t o = 0; o < n_obj; ++o) c.object_lookup_.emplace(c.objects_[o], static_cast<Index>(o));
  c.morphism_lookup_.reserve(n_mor);
  for (std::size_t m = 0; m < n_mor; ++m) c.morphism_lookup_.emplace(c.morphisms_[m], static_cast<Index>(m));

  if (object_map) *object_map = std::move(obj_new);
  if (morphism_map) *morphism_map = std::move(mor_new);
  return c;
}

Relabeled relabel(const FinCategory& c, const std::vector<ObjId>& object_names,
                  const std::vector<MorId>& morphism_names) {
  if (object_names.size() != c.object_count() || morphism_names.size() != c.morphism_count()) {
    throw StructuralError("relabelling must name every object and morphism");
  }
  CategoryBuilder b;
  for (const auto& n : object_names) b.add_object(n);
  for (std::size_t m = 0; m < c.morphism_count(); ++m) {
    b.add_morphism(morphism_names[m], c.dom(static_cast<Index>(m)), c.cod(static_cast<Index>(m)));
  }
  for (std::size_t o = 0; o < c.object_count(); ++o) b.set_identity(static_cast<Index>(o), c.identity(static_cast<Index>(o)));
  for (std::size_t g = 0; g < c.morphism_count(); ++g) {
    for (Index h : c.out(c.cod(static_cast<Index>(g)))) {
      b.set_composite(static_cast<Index>(g), h, c.compose(static_cast<Index>(g), h));
    }
  }
  Relabeled r;
  r.category = std::move(b).build(&r.object_map, &r.morphism_map);
  return r;
}

// ---------------------------------------------------------------------------
// Laws

ValidationReport validate_category(const FinCategory& c) {
  ValidationReport report;
  const auto n_obj = static_cast<Index>(c.object_count());
  const auto n_mor = static_cast<Index>(c.morphism_count());
  const auto& mid = [&](Index m) { return c.morphism_id(m); };

  for (Index a = 0; a < n_obj; ++a) {
    Index i = c.identity(a);
    if (c.dom(i) != a || c.cod(i) != a) report.add("identity-boundary", {c.object_id(a), mid(i)});
  }
  for (Index g = 0; g < n_mor; ++g) {
    for (Index h : c.out(c.cod(g))) {
      Index r = c.compose(g, h);
      if (c.dom(r) != c.dom(g) || c.cod(r) != c.cod(h)) {
        report.add("composite-boundary", {mid(g), mid(h), mid(r)});
      }
    }
  }
  for (Index g = 0; g < n_mor; ++g) {
    Index after = c.identity(c.cod(g));
    if (c.compose(g, after) != g) report.add("left-unit", {mid(g), mid(after)});
    Index before = c.identity(c.dom(g));
    if (c.compose(before, g) != g) report.add("right-unit", {mid(before), mid(g)});
  }
  for (Index g = 0; g < n_mor; ++g) {
    for (Index h : c.out(c.cod(g))) {
      Index hg = c.compose(g, h);
      for (Index k : c.out(c.cod(h))) {
        Index kh = c.compose(h, k);
        Index left = c.compose(hg, k);
        Index right = c.compose(g, kh);
        if (left == kNone || right == kNone || left != right) {
          report.add("associativity", {mid(g), mid(h), mid(k)});
        }
      }
    }
  }
  return report;
}

std::vector<std::pair<MorId, MorId>> composable_pairs(const FinCategory& c) {
  std::vector<std::pair<MorId, MorId>> result;
  for (Index g = 0; g < static_cast<Index>(c.morphism_count()); ++g) {
    for (Index h : c.out(c.cod(g))) result.emplace_back(c.morphism_id(g), c.morphism_id(h));
  }
  return result;
}

std::vector<std::tuple<MorId, MorId, MorId>> composable_triples(const FinCategory& c) {
  std::vector<std::tuple<MorId, MorId, MorId>> result;
  for (Index g = 0; g < static_cast<Index>(c.morphism_count()); ++g) {
    for (Index h : c.out(c.cod(g))) {
      for (Index k : c.out(c.cod(h))) {
        result.emplace_back(c.morphism_id(g), c.morphism_id(h), c.morphism_id(k));
      }
    }
  }
  return result;
}

std::size_t composable_pair_count(const FinCategory& c) {
  std::size_t n = 0;
  for (Index g = 0; g < static_cast<Index>(c.morphism_count()); ++g) n += c.out(c.cod(g)).size();
  return n;
}

// ---------------------------------------------------------------------------
// Constructors

std::vector<ObjId> numbered(std::size_t n) {
  std::vector<ObjId> ids;
  for (std::size_t i = 0; i < n; ++i) ids.push_back(std::to_string(i));
  return ids;
}

FinCategory codiscrete(std::vector<ObjId> objects) {
  CategoryBuilder b;
  const auto n = static_cast<Index>(objects.size());
  for (const auto& o : objects) b.add_object(o);
  // morphism (x,y) sits at provisional index x*n + y
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) b.add_morphism(objects[x] + "*" + objects[y], x, y);
  }
  for (Index x = 0; x < n; ++x) b.set_identity(x, x * n + x);
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      for (Index z = 0; z < n; ++z) b.set_composite(x * n + y, y * n + z, x * n + z);
    }
  }
  return std::move(b).build();
}

FinCategory discrete(std::vector<ObjId> objects) {
  CategoryBuilder b;
  for (const auto& o : objects) {
    Index i = b.add_object(o);
    Index m = b.add_morphism("id_" + o, i, i);
    b.set_identity(i, m);
    b.set_composite(m, m, m);
  }
  return std::move(b).build();
}

FinCategory interval(std::size_t n) {
  CategoryBuilder b;
  const auto top = static_cast<Index>(n);
  for (Index i = 0; i <= top; ++i) b.add_object(std::to_string(i));
  std::vector<std::vector<Index>> arrow(n + 1, std::vector<Index>(n + 1, kNone));
  for (Index i = 0; i <= top; ++i) {
    for (Index j = i; j <= top; ++j) arrow[i][j] = b.add_morphism(std::to_string(i) + "->" + std::to_string(j), i, j);
  }
  for (Index i = 0; i <= top; ++i) b.set_identity(i, arrow[i][i]);
  for (Index i = 0; i <= top; ++i) {
    for (Index j = i; j <= top; ++j) {
      for (Index k = j; k <= top; ++k) b.set_composite(arrow[i][j], arrow[j][k], arrow[i][k]);
    }
  }
  return std::move(b).build();
}

FinCategory arrow_category(const FinCategory& c) {
  if (auto report = validate_category(c); !report.valid()) {
    throw InvalidInput("arrow category needs a lawful base category", std::move(report));
  }
  CategoryBuilder b;
  const auto n_mor = static_cast<Index>(c.morphism_count());
  for (Index f = 0; f < n_mor; ++f) b.add_object(c.morphism_id(f));

  struct Square {
    Index f, u, v, g;
  };
  std::vector<Square> squares;
  // squares[k] sits at provisional index k
  std::vector<std::vector<Index>> squares_from(static_cast<std::size_t>(n_mor));
  for (Index f = 0; f < n_mor; ++f) {
    for (Index u : c.out(c.dom(f))) {
      for (Index v : c.out(c.cod(f))) {
        Index vf = c.compose(f, v);
        for (Index g : c.out(c.cod(u))) {
          if (c.cod(g) != c.cod(v) || c.compose(u, g) != vf) continue;
          Index k = b.add_morphism(tuple_token({c.morphism_id(f), c.morphism_id(u), c.morphism_id(v), c.morphism_id(g)}), f, g);
          squares.push_back({f, u, v, g});
          squares_from[static_cast<std::size_t>(f)].push_back(k);
        }
      }
    }
  }
  auto find_square = [&](Index f, Index u, Index v, Index g) {
    for (Index k : squares_from[static_cast<std::size_t>(f)]) {
      const auto& s = squares[static_cast<std::size_t>(k)];
      if (s.u == u && s.v == v && s.g == g) return k;
    }
    return kNone;
  };
  for (Index f = 0; f < n_mor; ++f) {
    b.set_identity(f, find_square(f, c.identity(c.dom(f)), c.identity(c.cod(f)), f));
  }
  for (const auto& s : squares) {
    Index first = find_square(s.f, s.u, s.v, s.g);
    for (Index k : squares_from[static_cast<std::size_t>(s.g)]) {
      const auto& t = squares[static_cast<std::size_t>(k)];
      b.set_composite(first, k, find_square(s.f, c.compose(s.u, t.u), c.compose(s.v, t.v), t.g));
    }
  }
  return std::move(b).build();
}

}  // namespace catlens
