#include "catlens/functor.hpp"

#include <algorithm>

#include "catlens/errors.hpp"

namespace catlens {

namespace {

void require_lawful(const FinFunctor& f, const char* what) {
  ValidationReport report;
  report.merge(validate_category(f.source()), "source/");
  report.merge(validate_category(f.target()), "target/");
  report.merge(validate_functor(f));
  if (!report.valid()) throw InvalidInput(std::string(what) + " needs a lawful functor", std::move(report));
}

// Calls fn(f, u, v, g) for every commutative square of `base`, in the order
// arrow_category() generates them.
template <typename Fn>
void for_each_square(const FinCategory& base, Fn&& fn) {
  for (Index f = 0; f < static_cast<Index>(base.morphism_count()); ++f) {
    for (Index u : base.out(base.dom(f))) {
      for (Index v : base.out(base.cod(f))) {
        Index vf = base.compose(f, v);
        for (Index g : base.out(base.cod(u))) {
          if (base.cod(g) == base.cod(v) && base.compose(u, g) == vf) fn(f, u, v, g);
        }
      }
    }
  }
}

Index square_index(const FinCategory& arrows, const FinCategory& base, Index f, Index u, Index v, Index g) {
  auto name = tuple_token({base.morphism_id(f), base.morphism_id(u), base.morphism_id(v), base.morphism_id(g)});
  auto i = arrows.find_morphism(name);
  if (!i) throw StructuralError("arrow category has no square " + name);
  return *i;
}

void check_arrows_over(const FinCategory& arrows, const FinCategory& base) {
  if (arrows.object_count() != base.morphism_count()) {
    throw StructuralError("category is not the arrow category of the given base");
  }
  for (std::size_t i = 0; i < base.morphism_count(); ++i) {
    if (arrows.object_id(static_cast<Index>(i)) != base.morphism_id(static_cast<Index>(i))) {
      throw StructuralError("category is not the arrow category of the given base");
    }
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// FinFunctor

FinFunctor::FinFunctor(CategoryPtr source, CategoryPtr target, std::vector<Index> on_objects,
                       std::vector<Index> on_morphisms)
    : source_(std::move(source)), target_(std::move(target)), f0_(std::move(on_objects)), f1_(std::move(on_morphisms)) {
  if (!source_ || !target_) throw StructuralError("functor needs a source and a target category");
  if (f0_.size() != source_->object_count() || f1_.size() != source_->morphism_count()) {
    throw StructuralError("functor maps must be total on the source category");
  }
  for (Index o : f0_) {
    if (o < 0 || static_cast<std::size_t>(o) >= target_->object_count()) {
      throw StructuralError("functor sends an object outside the target category");
    }
  }
  for (Index m : f1_) {
    if (m < 0 || static_cast<std::size_t>(m) >= target_->morphism_count()) {
      throw StructuralError("functor sends a morphism outside the target category");
    }
  }
}

FinFunctor FinFunctor::from_names(CategoryPtr source, CategoryPtr target,
                                  const std::map<ObjId, ObjId>& on_objects,
                                  const std::map<MorId, MorId>& on_morphisms) {
  std::vector<Index> f0(source->object_count(), kNone), f1(source->morphism_count(), kNone);
  for (const auto& [a, b] : on_objects) f0[static_cast<std::size_t>(source->object_index(a))] = target->object_index(b);
  for (const auto& [g, h] : on_morphisms) f1[static_cast<std::size_t>(source->morphism_index(g))] = target->morphism_index(h);
  for (std::size_t i = 0; i < f0.size(); ++i) {
    if (f0[i] == kNone) throw StructuralError("object map has no entry for '" + source->object_id(static_cast<Index>(i)) + "'");
  }
  for (std::size_t i = 0; i < f1.size(); ++i) {
    if (f1[i] == kNone) throw StructuralError("morphism map has no entry for '" + source->morphism_id(static_cast<Index>(i)) + "'");
  }
  return FinFunctor(std::move(source), std::move(target), std::move(f0), std::move(f1));
}

bool FinFunctor::operator==(const FinFunctor& other) const {
  return f0_ == other.f0_ && f1_ == other.f1_ && same_category(source_, other.source_) &&
         same_category(target_, other.target_);
}

ValidationReport validate_functor(const FinFunctor& f) {
  ValidationReport report;
  const auto& a = f.source();
  const auto& b = f.target();
  for (Index g = 0; g < static_cast<Index>(a.morphism_count()); ++g) {
    Index fg = f.on_morphism(g);
    if (f.on_object(a.dom(g)) != b.dom(fg) || f.on_object(a.cod(g)) != b.cod(fg)) {
      report.add("functor-boundary", {a.morphism_id(g), b.morphism_id(fg)});
    }
  }
  for (Index o = 0; o < static_cast<Index>(a.object_count()); ++o) {
    if (f.on_morphism(a.identity(o)) != b.identity(f.on_object(o))) {
      report.add("functor-identity", {a.object_id(o)});
    }
  }
  for (Index g = 0; g < static_cast<Index>(a.morphism_count()); ++g) {
    for (Index h : a.out(a.cod(g))) {
      Index image = f.on_morphism(a.compose(g, h));
      Index composite = b.compose(f.on_morphism(g), f.on_morphism(h));
      if (composite == kNone || composite != image) {
        report.add("functor-composition", {a.morphism_id(g), a.morphism_id(h)});
      }
    }
  }
  return report;
}

FinFunctor identity_functor(const CategoryPtr& c) {
  std::vector<Index> f0(c->object_count()), f1(c->morphism_count());
  for (std::size_t i = 0; i < f0.size(); ++i) f0[i] = static_cast<Index>(i);
  for (std::size_t i = 0; i < f1.size(); ++i) f1[i] = static_cast<Index>(i);
  return FinFunctor(c, c, std::move(f0), std::move(f1));
}

FinFunctor compose_functors(const FinFunctor& first, const FinFunctor& second) {
  if (!same_category(first.target_ptr(), second.source_ptr())) {
    throw BoundaryMismatch("functor composition: target of the first functor is not the source of the second");
  }
  std::vector<Index> f0(first.source().object_count()), f1(first.source().morphism_count());
  for (std::size_t i = 0; i < f0.size(); ++i) f0[i] = second.on_object(first.on_object(static_cast<Index>(i)));
  for (std::size_t i = 0; i < f1.size(); ++i) f1[i] = second.on_morphism(first.on_morphism(static_cast<Index>(i)));
  return FinFunctor(first.source_ptr(), second.target_ptr(), std::move(f0), std::move(f1));
}

ValidationReport discrete_opfibration_report(const FinFunctor& f) {
  ValidationReport report;
  const auto& a = f.source();
  const auto& b = f.target();
  for (Index x = 0; x < static_cast<Index>(a.object_count()); ++x) {
    for (Index u : b.out(f.on_object(x))) {
      auto lifts = std::count_if(a.out(x).begin(), a.out(x).end(), [&](Index g) { return f.on_morphism(g) == u; });
      if (lifts != 1) report.add("unique-lift", {a.object_id(x), b.morphism_id(u), std::to_string(lifts)});
    }
  }
  return report;
}

bool is_discrete_opfibration(const FinFunctor& f) { return discrete_opfibration_report(f).valid(); }

bool is_identity_on_objects(const FinFunctor& f) {
  const auto& a = f.source();
  const auto& b = f.target();
  if (a.object_count() != b.object_count()) return false;
  for (Index o = 0; o < static_cast<Index>(a.object_count()); ++o) {
    if (a.object_id(o) != b.object_id(o) || f.on_object(o) != o) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Pullbacks

Index Pullback::object_over(Index a, Index c) const {
  auto it = object_lookup.find(pair_key(a, c));
  return it == object_lookup.end() ? kNone : it->second;
}

Index Pullback::morphism_over(Index g, Index h) const {
  auto it = morphism_lookup.find(pair_key(g, h));
  return it == morphism_lookup.end() ? kNone : it->second;
}

Pullback pullback_category(const FinFunctor& f, const FinFunctor& g) {
  if (!same_category(f.target_ptr(), g.target_ptr())) {
    throw BoundaryMismatch("pullback: the two functors have different targets");
  }
  require_lawful(f, "pullback");
  require_lawful(g, "pullback");
  const auto& a = f.source();
  const auto& c = g.source();
  CategoryBuilder b;
  std::vector<std::pair<Index, Index>> objs;
  std::unordered_map<std::uint64_t, Index> obj_at;
  for (Index x = 0; x < static_cast<Index>(a.object_count()); ++x) {
    for (Index y = 0; y < static_cast<Index>(c.object_count()); ++y) {
      if (f.on_object(x) != g.on_object(y)) continue;
      obj_at.emplace(pair_key(x, y), b.add_object(tuple_token({a.object_id(x), c.object_id(y)})));
      objs.emplace_back(x, y);
    }
  }
  // Group C's morphisms by their image so the fibre product is linear in its size.
  std::vector<std::vector<Index>> c_over(f.target().morphism_count());
  for (Index h = 0; h < static_cast<Index>(c.morphism_count()); ++h) {
    c_over[static_cast<std::size_t>(g.on_morphism(h))].push_back(h);
  }
  std::vector<std::pair<Index, Index>> mors;
  std::unordered_map<std::uint64_t, Index> mor_at;
  for (Index x = 0; x < static_cast<Index>(a.morphism_count()); ++x) {
    for (Index y : c_over[static_cast<std::size_t>(f.on_morphism(x))]) {
      Index m = b.add_morphism(tuple_token({a.morphism_id(x), c.morphism_id(y)}), obj_at.at(pair_key(a.dom(x), c.dom(y))),
                               obj_at.at(pair_key(a.cod(x), c.cod(y))));
      mor_at.emplace(pair_key(x, y), m);
      mors.emplace_back(x, y);
    }
  }
  for (std::size_t i = 0; i < objs.size(); ++i) {
    auto [x, y] = objs[i];
    b.set_identity(static_cast<Index>(i), mor_at.at(pair_key(a.identity(x), c.identity(y))));
  }
  // Outgoing provisional morphisms per provisional object.
  std::vector<std::vector<Index>> out(objs.size());
  for (std::size_t i = 0; i < mors.size(); ++i) {
    auto [x, y] = mors[i];
    out[static_cast<std::size_t>(obj_at.at(pair_key(a.dom(x), c.dom(y))))].push_back(static_cast<Index>(i));
  }
  for (std::size_t i = 0; i < mors.size(); ++i) {
    auto [x, y] = mors[i];
    for (Index j : out[static_cast<std::size_t>(obj_at.at(pair_key(a.cod(x), c.cod(y))))]) {
      auto [x2, y2] = mors[static_cast<std::size_t>(j)];
      b.set_composite(static_cast<Index>(i), j, mor_at.at(pair_key(a.compose(x, x2), c.compose(y, y2))));
    }
  }
  std::vector<Index> obj_map, mor_map;
  auto apex = share(std::move(b).build(&obj_map, &mor_map));

  std::vector<Index> l0(objs.size()), r0(objs.size()), l1(mors.size()), r1(mors.size());
  std::unordered_map<std::uint64_t, Index> object_lookup, morphism_lookup;
  for (std::size_t i = 0; i < objs.size(); ++i) {
    auto fin = static_cast<std::size_t>(obj_map[i]);
    l0[fin] = objs[i].first;
    r0[fin] = objs[i].second;
    object_lookup.emplace(pair_key(objs[i].first, objs[i].second), obj_map[i]);
  }
  for (std::size_t i = 0; i < mors.size(); ++i) {
    auto fin = static_cast<std::size_t>(mor_map[i]);
    l1[fin] = mors[i].first;
    r1[fin] = mors[i].second;
    morphism_lookup.emplace(pair_key(mors[i].first, mors[i].second), mor_map[i]);
  }
  return Pullback{apex,
                  FinFunctor(apex, f.source_ptr(), std::move(l0), std::move(l1)),
                  FinFunctor(apex, g.source_ptr(), std::move(r0), std::move(r1)),
                  std::move(object_lookup),
                  std::move(morphism_lookup)};
}

FinFunctor pullback_pairing(const Pullback& pb, const FinFunctor& to_left, const FinFunctor& to_right) {
  if (!same_category(to_left.source_ptr(), to_right.source_ptr()) ||
      !same_category(to_left.target_ptr(), pb.left.target_ptr()) ||
      !same_category(to_right.target_ptr(), pb.right.target_ptr())) {
    throw BoundaryMismatch("pullback pairing: functors do not form a cone over the pullback");
  }
  const auto& x = to_left.source();
  std::vector<Index> f0(x.object_count()), f1(x.morphism_count());
  for (Index o = 0; o < static_cast<Index>(x.object_count()); ++o) {
    f0[static_cast<std::size_t>(o)] = pb.object_over(to_left.on_object(o), to_right.on_object(o));
    if (f0[static_cast<std::size_t>(o)] == kNone) {
      throw BoundaryMismatch("pullback pairing: cone legs disagree over the base at object " + x.object_id(o));
    }
  }
  for (Index m = 0; m < static_cast<Index>(x.morphism_count()); ++m) {
    f1[static_cast<std::size_t>(m)] = pb.morphism_over(to_left.on_morphism(m), to_right.on_morphism(m));
    if (f1[static_cast<std::size_t>(m)] == kNone) {
      throw BoundaryMismatch("pullback pairing: cone legs disagree over the base at morphism " + x.morphism_id(m));
    }
  }
  return FinFunctor(to_left.source_ptr(), pb.apex, std::move(f0), std::move(f1));
}

// ---------------------------------------------------------------------------
// Arrow categories

FinFunctor arrow_domain_functor(const CategoryPtr& arrows, const CategoryPtr& base) {
  check_arrows_over(*arrows, *base);
  std::vector<Index> f0(arrows->object_count()), f1(arrows->morphism_count(), kNone);
  for (Index f = 0; f < static_cast<Index>(base->morphism_count()); ++f) f0[static_cast<std::size_t>(f)] = base->dom(f);
  for_each_square(*base, [&](Index f, Index u, Index v, Index g) {
    f1[static_cast<std::size_t>(square_index(*arrows, *base, f, u, v, g))] = u;
  });
  return FinFunctor(arrows, base, std::move(f0), std::move(f1));
}

FinFunctor arrow_codomain_functor(const CategoryPtr& arrows, const CategoryPtr& base) {
  check_arrows_over(*arrows, *base);
  std::vector<Index> f0(arrows->object_count()), f1(arrows->morphism_count(), kNone);
  for (Index f = 0; f < static_cast<Index>(base->morphism_count()); ++f) f0[static_cast<std::size_t>(f)] = base->cod(f);
  for_each_square(*base, [&](Index f, Index u, Index v, Index g) {
    f1[static_cast<std::size_t>(square_index(*arrows, *base, f, u, v, g))] = v;
  });
  return FinFunctor(arrows, base, std::move(f0), std::move(f1));
}

FinFunctor arrow_functor(const FinFunctor& fun, const CategoryPtr& source_arrows, const CategoryPtr& target_arrows) {
  const auto& a = fun.source();
  const auto& b = fun.target();
  check_arrows_over(*source_arrows, a);
  check_arrows_over(*target_arrows, b);
  std::vector<Index> f0(source_arrows->object_count()), f1(source_arrows->morphism_count(), kNone);
  for (Index f = 0; f < static_cast<Index>(a.morphism_count()); ++f) f0[static_cast<std::size_t>(f)] = fun.on_morphism(f);
  for_each_square(a, [&](Index f, Index u, Index v, Index g) {
    f1[static_cast<std::size_t>(square_index(*source_arrows, a, f, u, v, g))] =
        square_index(*target_arrows, b, fun.on_morphism(f), fun.on_morphism(u), fun.on_morphism(v), fun.on_morphism(g));
  });
  return FinFunctor(source_arrows, target_arrows, std::move(f0), std::move(f1));
}

// ---------------------------------------------------------------------------
// Comma categories

Index Comma::object_over(Index a, Index u) const {
  auto it = object_lookup.find(pair_key(a, u));
  return it == object_lookup.end() ? kNone : it->second;
}

Index Comma::morphism_over(Index g, Index square) const {
  auto it = morphism_lookup.find(pair_key(g, square));
  return it == morphism_lookup.end() ? kNone : it->second;
}

Comma comma_category(const FinFunctor& f) {
  require_lawful(f, "comma category");
  const auto& a = f.source();
  const auto& b = f.target();
  auto arrows = share(arrow_category(b));

  CategoryBuilder builder;
  struct Obj {
    Index a, u;
  };
  struct Mor {
    Index g, square, v, dom, cod;
  };
  std::vector<Obj> objs;
  std::unordered_map<std::uint64_t, Index> obj_at;
  for (Index x = 0; x < static_cast<Index>(a.object_count()); ++x) {
    for (Index u : b.out(f.on_object(x))) {
      obj_at.emplace(pair_key(x, u), builder.add_object(tuple_token({a.object_id(x), b.morphism_id(u)})));
      objs.push_back({x, u});
    }
  }
  std::vector<Mor> mors;
  std::unordered_map<std::uint64_t, Index> mor_at;
  std::vector<std::vector<Index>> out(objs.size());
  for (std::size_t i = 0; i < objs.size(); ++i) {
    const auto [x, u] = objs[i];
    for (std::size_t j = 0; j < objs.size(); ++j) {
      const auto [y, w] = objs[j];
      for (Index g : a.hom(x, y)) {
        Index fg = f.on_morphism(g);
        Index top = b.compose(fg, w);
        for (Index v : b.hom(b.cod(u), b.cod(w))) {
          if (b.compose(u, v) != top) continue;
          auto square_name = tuple_token({b.morphism_id(u), b.morphism_id(fg), b.morphism_id(v), b.morphism_id(w)});
          Index square = arrows->morphism_index(square_name);
          Index m = builder.add_morphism(tuple_token({a.morphism_id(g), square_name}), static_cast<Index>(i),
                                         static_cast<Index>(j));
          mor_at.emplace(pair_key(g, square), m);
          mors.push_back({g, square, v, static_cast<Index>(i), static_cast<Index>(j)});
          out[i].push_back(m);
        }
      }
    }
  }
  for (std::size_t i = 0; i < objs.size(); ++i) {
    const auto [x, u] = objs[i];
    builder.set_identity(static_cast<Index>(i), mor_at.at(pair_key(a.identity(x), arrows->identity(u))));
  }
  for (std::size_t i = 0; i < mors.size(); ++i) {
    const auto& m = mors[i];
    for (Index j : out[static_cast<std::size_t>(m.cod)]) {
      const auto& n = mors[static_cast<std::size_t>(j)];
      builder.set_composite(static_cast<Index>(i), j,
                            mor_at.at(pair_key(a.compose(m.g, n.g), arrows->compose(m.square, n.square))));
    }
  }
  std::vector<Index> obj_map, mor_map;
  auto apex = share(std::move(builder).build(&obj_map, &mor_map));

  std::vector<Index> l0(objs.size()), r0(objs.size()), s0(objs.size());
  std::vector<Index> l1(mors.size()), r1(mors.size()), s1(mors.size());
  Comma result{apex, arrows, identity_functor(apex), identity_functor(apex), identity_functor(apex), {}, {}};
  for (std::size_t i = 0; i < objs.size(); ++i) {
    auto fin = static_cast<std::size_t>(obj_map[i]);
    l0[fin] = objs[i].a;
    r0[fin] = b.cod(objs[i].u);
    s0[fin] = objs[i].u;
    result.object_lookup.emplace(pair_key(objs[i].a, objs[i].u), obj_map[i]);
  }
  for (std::size_t i = 0; i < mors.size(); ++i) {
    auto fin = static_cast<std::size_t>(mor_map[i]);
    l1[fin] = mors[i].g;
    r1[fin] = mors[i].v;
    s1[fin] = mors[i].square;
    result.morphism_lookup.emplace(pair_key(mors[i].g, mors[i].square), mor_map[i]);
  }
  result.left = FinFunctor(apex, f.source_ptr(), std::move(l0), std::move(l1));
  result.right = FinFunctor(apex, f.target_ptr(), std::move(r0), std::move(r1));
  result.to_arrows = FinFunctor(apex, arrows, std::move(s0), std::move(s1));
  return result;
}

}  // namespace catlens
