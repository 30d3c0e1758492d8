#include "catlens/double_category.hpp"

#include <algorithm>

#include "catlens/errors.hpp"

namespace catlens {

namespace {

Index square(const FinCategory& arrows, const FinCategory& base, Index f, Index u, Index v, Index g) {
  auto found = arrows.find_morphism(
      tuple_token({base.morphism_id(f), base.morphism_id(u), base.morphism_id(v), base.morphism_id(g)}));
  return found ? *found : kNone;
}

// One level (objects or morphisms) of the component categories, so the
// elementwise laws can be written once.
struct Level {
  bool morphisms;

  std::size_t size(const FinCategory& c) const { return morphisms ? c.morphism_count() : c.object_count(); }
  const std::string& name(const FinCategory& c, Index i) const {
    return morphisms ? c.morphism_id(i) : c.object_id(i);
  }
  Index apply(const FinFunctor& f, Index i) const { return morphisms ? f.on_morphism(i) : f.on_object(i); }
  Index over(const Pullback& pb, Index x, Index y) const {
    return morphisms ? pb.morphism_over(x, y) : pb.object_over(x, y);
  }
  std::string tag(std::string law) const { return law + (morphisms ? "/morphisms" : "/objects"); }
};

constexpr Level kLevels[] = {{false}, {true}};

Index compose_at(const FinDoubleCategory& d, const Level& lv, Index x, Index y) {
  Index p = lv.over(d.pairs, x, y);
  return p == kNone ? kNone : lv.apply(d.dcomp, p);
}

void check_shape(const FinDoubleCategory& d) {
  auto fits = [](const FinFunctor& f, const CategoryPtr& s, const CategoryPtr& t) {
    return same_category(f.source_ptr(), s) && same_category(f.target_ptr(), t);
  };
  if (!fits(d.ddom, d.mor_cat, d.obj_cat) || !fits(d.dcod, d.mor_cat, d.obj_cat) ||
      !fits(d.did, d.obj_cat, d.mor_cat) || !fits(d.dcomp, d.pairs.apex, d.mor_cat) ||
      !fits(d.pairs.left, d.pairs.apex, d.mor_cat) || !fits(d.pairs.right, d.pairs.apex, d.mor_cat)) {
    throw StructuralError("double category components do not fit together");
  }
}

FinFunctor eta_of(const FinFunctor& f, const Comma& comma) {
  const auto& a = f.source();
  const auto& b = f.target();
  std::vector<Index> f0(a.object_count()), f1(a.morphism_count());
  for (Index x = 0; x < static_cast<Index>(a.object_count()); ++x) {
    f0[static_cast<std::size_t>(x)] = comma.object_over(x, b.identity(f.on_object(x)));
  }
  for (Index g = 0; g < static_cast<Index>(a.morphism_count()); ++g) {
    Index fg = f.on_morphism(g);
    Index s = square(*comma.arrows, b, b.identity(b.dom(fg)), fg, fg, b.identity(b.cod(fg)));
    f1[static_cast<std::size_t>(g)] = comma.morphism_over(g, s);
  }
  return FinFunctor(f.source_ptr(), comma.apex, std::move(f0), std::move(f1));
}

}  // namespace

Index FinDoubleCategory::compose_objects(Index x, Index y) const { return compose_at(*this, kLevels[0], x, y); }
Index FinDoubleCategory::compose_morphisms(Index x, Index y) const { return compose_at(*this, kLevels[1], x, y); }

FinDoubleCategory assemble_double_category(FinFunctor ddom, FinFunctor dcod, FinFunctor did,
                                           const std::function<Index(Index, Index)>& compose_objects,
                                           const std::function<Index(Index, Index)>& compose_morphisms) {
  auto pairs = pullback_category(dcod, ddom);
  const auto& apex = *pairs.apex;
  const auto& mor = dcod.source();
  std::vector<Index> f0(apex.object_count()), f1(apex.morphism_count());
  for (Index p = 0; p < static_cast<Index>(apex.object_count()); ++p) {
    Index r = compose_objects(pairs.left.on_object(p), pairs.right.on_object(p));
    if (r < 0 || static_cast<std::size_t>(r) >= mor.object_count()) {
      throw StructuralError("no composite for the pair " + apex.object_id(p));
    }
    f0[static_cast<std::size_t>(p)] = r;
  }
  for (Index p = 0; p < static_cast<Index>(apex.morphism_count()); ++p) {
    Index r = compose_morphisms(pairs.left.on_morphism(p), pairs.right.on_morphism(p));
    if (r < 0 || static_cast<std::size_t>(r) >= mor.morphism_count()) {
      throw StructuralError("no composite for the pair " + apex.morphism_id(p));
    }
    f1[static_cast<std::size_t>(p)] = r;
  }
  FinFunctor dcomp(pairs.apex, dcod.source_ptr(), std::move(f0), std::move(f1));
  auto obj = ddom.target_ptr();
  auto mor_ptr = ddom.source_ptr();
  return FinDoubleCategory{obj, mor_ptr, std::move(ddom), std::move(dcod), std::move(did), std::move(pairs),
                           std::move(dcomp)};
}

ValidationReport validate_double_category(const FinDoubleCategory& d) {
  check_shape(d);
  ValidationReport report;
  report.merge(validate_category(*d.obj_cat), "objects/");
  report.merge(validate_category(*d.mor_cat), "morphisms/");
  report.merge(validate_functor(d.ddom), "dom/");
  report.merge(validate_functor(d.dcod), "cod/");
  report.merge(validate_functor(d.did), "identity/");
  report.merge(validate_functor(d.dcomp), "compose/");
  if (!report.valid()) return report;

  const auto& obj = *d.obj_cat;
  const auto& mor = *d.mor_cat;
  const auto& apex = *d.pairs.apex;
  for (const auto& lv : kLevels) {
    for (Index o = 0; o < static_cast<Index>(lv.size(obj)); ++o) {
      Index i = lv.apply(d.did, o);
      if (lv.apply(d.ddom, i) != o || lv.apply(d.dcod, i) != o) report.add(lv.tag("identity-boundary"), {lv.name(obj, o)});
    }
    for (Index p = 0; p < static_cast<Index>(lv.size(apex)); ++p) {
      Index x = lv.apply(d.pairs.left, p);
      Index y = lv.apply(d.pairs.right, p);
      Index r = lv.apply(d.dcomp, p);
      if (lv.apply(d.ddom, r) != lv.apply(d.ddom, x) || lv.apply(d.dcod, r) != lv.apply(d.dcod, y)) {
        report.add(lv.tag("composite-boundary"), {lv.name(mor, x), lv.name(mor, y), lv.name(mor, r)});
      }
    }
    for (Index x = 0; x < static_cast<Index>(lv.size(mor)); ++x) {
      Index left = lv.apply(d.did, lv.apply(d.ddom, x));
      Index right = lv.apply(d.did, lv.apply(d.dcod, x));
      if (compose_at(d, lv, left, x) != x) report.add(lv.tag("left-unit"), {lv.name(mor, left), lv.name(mor, x)});
      if (compose_at(d, lv, x, right) != x) report.add(lv.tag("right-unit"), {lv.name(mor, x), lv.name(mor, right)});
    }
    // Associativity instance by instance; the category of composable triples
    // is never built.
    std::vector<std::vector<Index>> starting_at(lv.size(obj));
    for (Index x = 0; x < static_cast<Index>(lv.size(mor)); ++x) {
      starting_at[static_cast<std::size_t>(lv.apply(d.ddom, x))].push_back(x);
    }
    for (Index x = 0; x < static_cast<Index>(lv.size(mor)); ++x) {
      for (Index y : starting_at[static_cast<std::size_t>(lv.apply(d.dcod, x))]) {
        Index xy = compose_at(d, lv, x, y);
        for (Index z : starting_at[static_cast<std::size_t>(lv.apply(d.dcod, y))]) {
          Index yz = compose_at(d, lv, y, z);
          Index l = xy == kNone ? kNone : compose_at(d, lv, xy, z);
          Index r = yz == kNone ? kNone : compose_at(d, lv, x, yz);
          if (l != r || l == kNone) {
            report.add(lv.tag("associativity"), {lv.name(mor, x), lv.name(mor, y), lv.name(mor, z)});
          }
        }
      }
    }
  }
  return report;
}

ValidationReport validate_double_functor(const DoubleFunctor& f) {
  const auto& s = *f.source;
  const auto& t = *f.target;
  if (!same_category(f.on_obj.source_ptr(), s.obj_cat) || !same_category(f.on_obj.target_ptr(), t.obj_cat) ||
      !same_category(f.on_mor.source_ptr(), s.mor_cat) || !same_category(f.on_mor.target_ptr(), t.mor_cat)) {
    throw StructuralError("double functor components do not match its boundary double categories");
  }
  ValidationReport report;
  report.merge(validate_functor(f.on_obj), "objects/");
  report.merge(validate_functor(f.on_mor), "morphisms/");
  if (!report.valid()) return report;

  for (const auto& lv : kLevels) {
    for (Index x = 0; x < static_cast<Index>(lv.size(*s.mor_cat)); ++x) {
      Index y = lv.apply(f.on_mor, x);
      if (lv.apply(t.ddom, y) != lv.apply(f.on_obj, lv.apply(s.ddom, x))) {
        report.add(lv.tag("preserves-dom"), {lv.name(*s.mor_cat, x)});
      }
      if (lv.apply(t.dcod, y) != lv.apply(f.on_obj, lv.apply(s.dcod, x))) {
        report.add(lv.tag("preserves-cod"), {lv.name(*s.mor_cat, x)});
      }
    }
    for (Index o = 0; o < static_cast<Index>(lv.size(*s.obj_cat)); ++o) {
      if (lv.apply(f.on_mor, lv.apply(s.did, o)) != lv.apply(t.did, lv.apply(f.on_obj, o))) {
        report.add(lv.tag("preserves-identity"), {lv.name(*s.obj_cat, o)});
      }
    }
    for (Index p = 0; p < static_cast<Index>(lv.size(*s.pairs.apex)); ++p) {
      Index x = lv.apply(s.pairs.left, p);
      Index y = lv.apply(s.pairs.right, p);
      Index image = lv.apply(f.on_mor, lv.apply(s.dcomp, p));
      if (compose_at(t, lv, lv.apply(f.on_mor, x), lv.apply(f.on_mor, y)) != image) {
        report.add(lv.tag("preserves-composition"), {lv.name(*s.mor_cat, x), lv.name(*s.mor_cat, y)});
      }
    }
  }
  return report;
}

DoubleFunctor compose_double_functors(const DoubleFunctor& first, const DoubleFunctor& second) {
  return DoubleFunctor{first.source, second.target, compose_functors(first.on_obj, second.on_obj),
                       compose_functors(first.on_mor, second.on_mor)};
}

bool operator==(const DoubleFunctor& x, const DoubleFunctor& y) {
  return x.on_obj == y.on_obj && x.on_mor == y.on_mor;
}

FinDoubleCategory squares_double_category(const CategoryPtr& b) {
  auto arrows = share(arrow_category(*b));
  const auto& base = *b;
  const auto& arr = *arrows;
  auto ddom = arrow_domain_functor(arrows, b);
  auto dcod = arrow_codomain_functor(arrows, b);
  std::vector<Index> i0(base.object_count()), i1(base.morphism_count());
  for (Index o = 0; o < static_cast<Index>(base.object_count()); ++o) i0[static_cast<std::size_t>(o)] = base.identity(o);
  for (Index g = 0; g < static_cast<Index>(base.morphism_count()); ++g) {
    i1[static_cast<std::size_t>(g)] = square(arr, base, base.identity(base.dom(g)), g, g, base.identity(base.cod(g)));
  }
  FinFunctor did(b, arrows, std::move(i0), std::move(i1));
  auto objects = [&](Index x, Index y) { return base.compose(x, y); };
  auto morphisms = [&](Index s, Index t) {
    return square(arr, base, base.compose(arr.dom(s), arr.dom(t)), ddom.on_morphism(s), dcod.on_morphism(t),
                  base.compose(arr.cod(s), arr.cod(t)));
  };
  FinFunctor ddom_copy = ddom, dcod_copy = dcod;
  return assemble_double_category(std::move(ddom_copy), std::move(dcod_copy), std::move(did), objects, morphisms);
}

DoubleFunctor squares_functor(const FinFunctor& f, const DoubleCategoryPtr& source, const DoubleCategoryPtr& target) {
  return DoubleFunctor{source, target, f, arrow_functor(f, source->mor_cat, target->mor_cat)};
}

ValidationReport internal_dopf_report(const DoubleFunctor& f) {
  const auto& s = *f.source;
  auto pb = pullback_category(f.on_obj, f.target->ddom);
  ValidationReport report;
  for (const auto& lv : kLevels) {
    std::vector<int> hits(lv.size(*pb.apex), 0);
    for (Index x = 0; x < static_cast<Index>(lv.size(*s.mor_cat)); ++x) {
      Index p = lv.over(pb, lv.apply(s.ddom, x), lv.apply(f.on_mor, x));
      if (p == kNone) {
        report.add(lv.tag("internal-dopf"), {lv.name(*s.mor_cat, x), "off-pullback"});
      } else {
        ++hits[static_cast<std::size_t>(p)];
      }
    }
    for (Index p = 0; p < static_cast<Index>(hits.size()); ++p) {
      if (hits[static_cast<std::size_t>(p)] != 1) {
        report.add(lv.tag("internal-dopf"), {lv.name(*pb.apex, p), std::to_string(hits[static_cast<std::size_t>(p)])});
      }
    }
  }
  return report;
}

ValidationReport split_opfibration_report(const FinFunctor& f, const LiftTable& lifts) {
  const auto& a = f.source();
  const auto& b = f.target();
  AnchoredPairs pairs(a, b, f.object_map());
  if (lifts.size() != pairs.size()) throw StructuralError("lift table must have one entry per anchored update");
  for (Index g : lifts) {
    if (g < 0 || static_cast<std::size_t>(g) >= a.morphism_count()) throw StructuralError("lift outside the source category");
  }
  ValidationReport report;
  std::vector<bool> sound(pairs.size());
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    auto [x, u] = pairs[k];
    sound[k] = a.dom(lifts[k]) == x && f.on_morphism(lifts[k]) == u;
    if (!sound[k]) report.add("lift-boundary", {a.object_id(x), b.morphism_id(u)});
  }
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    auto [x, u] = pairs[k];
    if (u == b.identity(f.on_object(x)) && lifts[k] != a.identity(x)) {
      report.add("lift-identity", {a.object_id(x)});
    }
  }
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (!sound[k]) continue;
    auto [x, u] = pairs[k];
    Index l = lifts[k];
    Index y = a.cod(l);
    for (Index v : b.out(b.cod(u))) {
      auto k2 = static_cast<std::size_t>(pairs.index(y, v));
      auto k3 = static_cast<std::size_t>(pairs.index(x, b.compose(u, v)));
      if (a.compose(l, lifts[k2]) != lifts[k3]) {
        report.add("split", {a.object_id(x), b.morphism_id(u), b.morphism_id(v)});
      }
    }
    for (Index g : a.out(x)) {
      for (Index v : b.out(b.cod(u))) {
        if (b.compose(u, v) != f.on_morphism(g)) continue;
        int fills = 0;
        for (Index h : a.out(y)) {
          if (f.on_morphism(h) == v && a.compose(l, h) == g) ++fills;
        }
        if (fills != 1) {
          report.add("opcartesian", {a.object_id(x), b.morphism_id(u), a.morphism_id(g), b.morphism_id(v),
                                     std::to_string(fills)});
        }
      }
    }
  }
  return report;
}

LiftTable lifts_of_put(const FinFunctor& f, const Comma& comma, const FinFunctor& put) {
  if (!same_category(put.source_ptr(), comma.apex)) throw BoundaryMismatch("put is not defined on the comma category");
  const auto& b = f.target();
  AnchoredPairs pairs(f.source(), b, f.object_map());
  LiftTable lifts(pairs.size());
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    auto [x, u] = pairs[k];
    Index id = b.identity(b.dom(u));
    Index m = comma.morphism_over(f.source().identity(x), square(*comma.arrows, b, id, id, u, u));
    lifts[k] = put.on_morphism(m);
  }
  return lifts;
}

FinFunctor put_from_lift_table(const FinFunctor& f, const Comma& comma, const LiftTable& lifts) {
  const auto& a = f.source();
  const auto& c = *comma.apex;
  AnchoredPairs pairs(a, f.target(), f.object_map());
  if (lifts.size() != pairs.size()) throw StructuralError("lift table must have one entry per anchored update");
  auto lift_at = [&](Index obj) {
    return lifts[static_cast<std::size_t>(pairs.index(comma.left.on_object(obj), comma.to_arrows.on_object(obj)))];
  };
  std::vector<Index> p0(c.object_count()), p1(c.morphism_count(), kNone);
  for (Index o = 0; o < static_cast<Index>(c.object_count()); ++o) p0[static_cast<std::size_t>(o)] = a.cod(lift_at(o));
  ValidationReport missing;
  for (Index m = 0; m < static_cast<Index>(c.morphism_count()); ++m) {
    Index l = lift_at(c.dom(m));
    Index l2 = lift_at(c.cod(m));
    Index target = a.compose(comma.left.on_morphism(m), l2);
    for (Index h : a.hom(a.cod(l), a.cod(l2))) {
      if (f.on_morphism(h) == comma.right.on_morphism(m) && a.compose(l, h) == target) {
        p1[static_cast<std::size_t>(m)] = h;
        break;
      }
    }
    if (p1[static_cast<std::size_t>(m)] == kNone) missing.add("put-fill", {c.morphism_id(m)});
  }
  if (!missing.valid()) throw InvalidInput("lift table admits no put functor", std::move(missing));
  return FinFunctor(comma.apex, f.source_ptr(), std::move(p0), std::move(p1));
}

std::uint64_t count_double_functors(const DoubleCategoryPtr& source, const DoubleCategoryPtr& target,
                                    const FinFunctor& on_obj, std::uint64_t max_candidates) {
  const auto& s = *source;
  const auto& t = *target;
  FunctorConstraints constraints;
  constraints.object_candidates.resize(s.mor_cat->object_count());
  for (Index x = 0; x < static_cast<Index>(s.mor_cat->object_count()); ++x) {
    Index want_dom = on_obj.on_object(s.ddom.on_object(x));
    Index want_cod = on_obj.on_object(s.dcod.on_object(x));
    for (Index y = 0; y < static_cast<Index>(t.mor_cat->object_count()); ++y) {
      if (t.ddom.on_object(y) == want_dom && t.dcod.on_object(y) == want_cod) {
        constraints.object_candidates[static_cast<std::size_t>(x)].push_back(y);
      }
    }
  }
  // Boundary preservation only; identity and composition are checked per candidate.
  constraints.morphism_filter = [&](Index m, Index image) {
    return t.ddom.on_morphism(image) == on_obj.on_morphism(s.ddom.on_morphism(m)) &&
           t.dcod.on_morphism(image) == on_obj.on_morphism(s.dcod.on_morphism(m));
  };
  std::uint64_t count = 0;
  for_each_functor(s.mor_cat, t.mor_cat, constraints, [&](const FinFunctor& on_mor) {
    if (validate_double_functor(DoubleFunctor{source, target, on_obj, on_mor}).valid()) ++count;
    return true;
  }, max_candidates);
  return count;
}

CLensTriangle clens_to_internal_lens(const FinFunctor& f, const FinFunctor& put, std::uint64_t max_candidates) {
  {
    ValidationReport report;
    report.merge(validate_category(f.source()), "source/");
    report.merge(validate_category(f.target()), "target/");
    report.merge(validate_functor(f), "get/");
    if (!report.valid()) throw InvalidInput("c-lens needs a lawful get functor", std::move(report));
  }
  auto comma = comma_category(f);
  if (!same_category(put.source_ptr(), comma.apex) || !same_category(put.target_ptr(), f.source_ptr())) {
    throw BoundaryMismatch("put must run from the comma category of get to the source of get");
  }
  const auto& a = f.source();
  const auto& c = *comma.apex;
  auto a_ptr = f.source_ptr();
  FinFunctor p(comma.apex, a_ptr, put.object_map(), put.morphism_map());

  auto lifts = lifts_of_put(f, comma, p);
  if (auto report = split_opfibration_report(f, lifts); !report.valid()) {
    throw InvalidInput("put does not describe a split opfibration", std::move(report));
  }
  if (auto report = validate_functor(p); !report.valid()) {
    throw InvalidInput("put is not a functor", std::move(report));
  }
  auto eta = eta_of(f, comma);
  {
    ValidationReport report;
    for (Index x = 0; x < static_cast<Index>(a.object_count()); ++x) {
      if (p.on_object(eta.on_object(x)) != x) report.add("put-unit", {a.object_id(x)});
    }
    for (Index g = 0; g < static_cast<Index>(a.morphism_count()); ++g) {
      if (p.on_morphism(eta.on_morphism(g)) != g) report.add("put-unit", {a.morphism_id(g)});
    }
    auto over = compose_functors(p, f);
    for (Index x = 0; x < static_cast<Index>(c.object_count()); ++x) {
      if (over.on_object(x) != comma.right.on_object(x)) report.add("put-over-codomain", {c.object_id(x)});
    }
    for (Index m = 0; m < static_cast<Index>(c.morphism_count()); ++m) {
      if (over.on_morphism(m) != comma.right.on_morphism(m)) report.add("put-over-codomain", {c.morphism_id(m)});
    }
    if (!report.valid()) throw InvalidInput("put is not a c-lens put", std::move(report));
  }

  auto squares_a = std::make_shared<const FinDoubleCategory>(squares_double_category(a_ptr));
  auto squares_b = std::make_shared<const FinDoubleCategory>(squares_double_category(f.target_ptr()));
  const auto& sb = *squares_b;
  const auto& arrows_a = *squares_a->mor_cat;

  auto objects = [&](Index x, Index y) {
    Index u = sb.compose_objects(comma.to_arrows.on_object(x), comma.to_arrows.on_object(y));
    return u == kNone ? kNone : comma.object_over(comma.left.on_object(x), u);
  };
  auto morphisms = [&](Index m, Index n) {
    Index s = sb.compose_morphisms(comma.to_arrows.on_morphism(m), comma.to_arrows.on_morphism(n));
    return s == kNone ? kNone : comma.morphism_over(comma.left.on_morphism(m), s);
  };
  auto lambda = std::make_shared<const FinDoubleCategory>(
      assemble_double_category(comma.left, p, eta, objects, morphisms));

  AnchoredPairs pairs(a, f.target(), f.object_map());
  auto lift_at = [&](Index obj) {
    return lifts[static_cast<std::size_t>(pairs.index(comma.left.on_object(obj), comma.to_arrows.on_object(obj)))];
  };
  std::vector<Index> m0(c.object_count()), m1(c.morphism_count());
  for (Index x = 0; x < static_cast<Index>(c.object_count()); ++x) m0[static_cast<std::size_t>(x)] = lift_at(x);
  for (Index m = 0; m < static_cast<Index>(c.morphism_count()); ++m) {
    Index s = square(arrows_a, a, lift_at(c.dom(m)), comma.left.on_morphism(m), p.on_morphism(m), lift_at(c.cod(m)));
    if (s == kNone) throw InternalError("c-lens: a lift square does not commute at " + c.morphism_id(m));
    m1[static_cast<std::size_t>(m)] = s;
  }
  CLensTriangle out{squares_a,
                    squares_b,
                    lambda,
                    squares_functor(f, squares_a, squares_b),
                    DoubleFunctor{lambda, squares_a, identity_functor(a_ptr),
                                  FinFunctor(comma.apex, squares_a->mor_cat, std::move(m0), std::move(m1))},
                    DoubleFunctor{lambda, squares_b, f,
                                  FinFunctor(comma.apex, sb.mor_cat, comma.to_arrows.object_map(),
                                             comma.to_arrows.morphism_map())}};

  auto require = [](const ValidationReport& report, const std::string& what) {
    if (!report.valid()) throw InternalError("c-lens: " + what + " failed\n" + report.to_text());
  };
  require(validate_double_category(*out.squares_a), "squares of the source");
  require(validate_double_category(*out.squares_b), "squares of the target");
  require(validate_double_category(*out.lambda), "apex double category");
  require(validate_double_functor(out.get), "get double functor");
  require(validate_double_functor(out.phi), "phi");
  require(validate_double_functor(out.phibar), "phibar");
  if (!(compose_double_functors(out.phi, out.get) == out.phibar)) {
    throw InternalError("c-lens: triangle of double functors does not commute");
  }
  require(internal_dopf_report(out.phibar), "phibar discrete opfibration");

  out.phi_count = count_double_functors(out.lambda, out.squares_a, out.phi.on_obj, max_candidates);
  out.phibar_count = count_double_functors(out.lambda, out.squares_b, out.phibar.on_obj, max_candidates);
  return out;
}

}  // namespace catlens
