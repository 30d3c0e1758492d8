#include "catlens/cofunctor.hpp"

#include <algorithm>

#include "catlens/errors.hpp"

namespace catlens {

namespace {

void require_lawful(const FinCofunctor& phi, const char* what) {
  ValidationReport report;
  report.merge(validate_category(phi.source()), "source/");
  report.merge(validate_category(phi.target()), "target/");
  report.merge(validate_cofunctor(phi));
  if (!report.valid()) throw InvalidInput(std::string(what) + " needs a lawful cofunctor", std::move(report));
}

struct LambdaBuild {
  FinCategory category;
  std::vector<Index> morphism_map;  // anchored index -> apex morphism index
};

LambdaBuild build_lambda(const FinCofunctor& phi) {
  const auto& a = phi.source();
  const auto& b = phi.target();
  const auto& pairs = phi.anchored();
  CategoryBuilder builder;
  for (auto id : a.objects()) builder.add_object(id);
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    auto [x, u] = pairs[k];
    builder.add_morphism(anchored_token(a.object_id(x), b.morphism_id(u)), x, phi.landing()[k]);
  }
  for (Index x = 0; x < static_cast<Index>(a.object_count()); ++x) {
    builder.set_identity(x, pairs.index(x, b.identity(phi.on_object(x))));
  }
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    auto [x, u] = pairs[k];
    Index y = phi.landing()[k];
    for (Index v : b.out(b.cod(u))) {
      builder.set_composite(static_cast<Index>(k), pairs.index(y, v), pairs.index(x, b.compose(u, v)));
    }
  }
  LambdaBuild out;
  out.category = std::move(builder).build(nullptr, &out.morphism_map);
  return out;
}

}  // namespace

std::string anchored_token(std::string_view a, std::string_view u) {
  std::string s(a);
  s += '|';
  s += u;
  return s;
}

// ---------------------------------------------------------------------------
// AnchoredPairs

AnchoredPairs::AnchoredPairs(const FinCategory& a, const FinCategory& b, const std::vector<Index>& phi0)
    : anchor_(phi0) {
  if (phi0.size() != a.object_count()) throw StructuralError("object map must be total on the source category");
  offset_.resize(phi0.size());
  for (Index x = 0; x < static_cast<Index>(phi0.size()); ++x) {
    Index bx = phi0[static_cast<std::size_t>(x)];
    if (bx < 0 || static_cast<std::size_t>(bx) >= b.object_count()) {
      throw StructuralError("object map sends '" + a.object_id(x) + "' outside the target category");
    }
    offset_[static_cast<std::size_t>(x)] = static_cast<Index>(pairs_.size());
    for (Index u : b.out(bx)) pairs_.emplace_back(x, u);
  }
  out_pos_.resize(b.morphism_count());
  dom_.resize(b.morphism_count());
  for (Index u = 0; u < static_cast<Index>(b.morphism_count()); ++u) {
    out_pos_[static_cast<std::size_t>(u)] = b.out_position(u);
    dom_[static_cast<std::size_t>(u)] = b.dom(u);
  }
}

Index AnchoredPairs::index(Index a, Index u) const {
  if (a < 0 || static_cast<std::size_t>(a) >= anchor_.size() || u < 0 ||
      static_cast<std::size_t>(u) >= dom_.size()) {
    return kNone;
  }
  if (dom_[static_cast<std::size_t>(u)] != anchor_[static_cast<std::size_t>(a)]) return kNone;
  return offset_[static_cast<std::size_t>(a)] + out_pos_[static_cast<std::size_t>(u)];
}

// ---------------------------------------------------------------------------
// FinCofunctor

FinCofunctor::FinCofunctor(CategoryPtr source, CategoryPtr target, std::vector<Index> phi0, std::vector<Index> lift,
                           std::vector<Index> p0)
    : source_(std::move(source)), target_(std::move(target)), phi0_(std::move(phi0)), lift_(std::move(lift)),
      p0_(std::move(p0)) {
  if (!source_ || !target_) throw StructuralError("cofunctor needs a source and a target category");
  anchored_ = AnchoredPairs(*source_, *target_, phi0_);
  if (lift_.size() != anchored_.size() || p0_.size() != anchored_.size()) {
    throw StructuralError("lift and landing maps must be keyed exactly by the anchored updates");
  }
  for (Index m : lift_) {
    if (m < 0 || static_cast<std::size_t>(m) >= source_->morphism_count()) {
      throw StructuralError("a lift lies outside the source category");
    }
  }
  for (Index o : p0_) {
    if (o < 0 || static_cast<std::size_t>(o) >= source_->object_count()) {
      throw StructuralError("a landing object lies outside the source category");
    }
  }
}

FinCofunctor FinCofunctor::from_names(CategoryPtr source, CategoryPtr target, const std::map<ObjId, ObjId>& phi0,
                                      const std::map<std::pair<ObjId, MorId>, MorId>& lift,
                                      const std::map<std::pair<ObjId, MorId>, ObjId>& p0) {
  std::vector<Index> f0(source->object_count(), kNone);
  for (const auto& [a, b] : phi0) f0[static_cast<std::size_t>(source->object_index(a))] = target->object_index(b);
  for (std::size_t i = 0; i < f0.size(); ++i) {
    if (f0[i] == kNone) throw StructuralError("object map has no entry for '" + source->object_id(static_cast<Index>(i)) + "'");
  }
  AnchoredPairs pairs(*source, *target, f0);
  auto slot_of = [&](const std::pair<ObjId, MorId>& key) {
    Index k = pairs.index(source->object_index(key.first), target->morphism_index(key.second));
    if (k == kNone) {
      throw StructuralError("'" + anchored_token(key.first, key.second) + "' is not an anchored update");
    }
    return static_cast<std::size_t>(k);
  };
  std::vector<Index> l(pairs.size(), kNone);
  for (const auto& [key, m] : lift) l[slot_of(key)] = source->morphism_index(m);
  for (std::size_t k = 0; k < l.size(); ++k) {
    if (l[k] == kNone) {
      auto [x, u] = pairs[k];
      throw StructuralError("lift map has no entry for '" +
                            anchored_token(source->object_id(x), target->morphism_id(u)) + "'");
    }
  }
  std::vector<Index> land;
  if (p0.empty()) {
    land = infer_p0(*source, l);
  } else {
    land.assign(pairs.size(), kNone);
    for (const auto& [key, o] : p0) land[slot_of(key)] = source->object_index(o);
    for (std::size_t k = 0; k < land.size(); ++k) {
      if (land[k] == kNone) {
        auto [x, u] = pairs[k];
        throw StructuralError("landing map has no entry for '" +
                              anchored_token(source->object_id(x), target->morphism_id(u)) + "'");
      }
    }
  }
  return FinCofunctor(std::move(source), std::move(target), std::move(f0), std::move(l), std::move(land));
}

Index FinCofunctor::lift(Index a, Index u) const {
  Index k = anchored_.index(a, u);
  return k == kNone ? kNone : lift_[static_cast<std::size_t>(k)];
}

Index FinCofunctor::land(Index a, Index u) const {
  Index k = anchored_.index(a, u);
  return k == kNone ? kNone : p0_[static_cast<std::size_t>(k)];
}

bool FinCofunctor::operator==(const FinCofunctor& other) const {
  return phi0_ == other.phi0_ && lift_ == other.lift_ && p0_ == other.p0_ && same_category(source_, other.source_) &&
         same_category(target_, other.target_);
}

std::vector<Index> infer_p0(const FinCategory& source, const std::vector<Index>& lift) {
  std::vector<Index> p0(lift.size());
  for (std::size_t k = 0; k < lift.size(); ++k) p0[k] = source.cod(lift[k]);
  return p0;
}

ValidationReport validate_cofunctor(const FinCofunctor& phi) {
  ValidationReport report;
  const auto& a = phi.source();
  const auto& b = phi.target();
  const auto& pairs = phi.anchored();
  auto witness = [&](Index x, Index u) { return std::vector<std::string>{a.object_id(x), b.morphism_id(u)}; };

  for (std::size_t k = 0; k < pairs.size(); ++k) {
    auto [x, u] = pairs[k];
    Index g = phi.lifts()[k];
    Index y = phi.landing()[k];
    if (phi.on_object(y) != b.cod(u)) report.add("compatibility", witness(x, u));
    if (a.dom(g) != x) report.add("lift-domain", witness(x, u));
    if (a.cod(g) != y) report.add("lift-codomain", witness(x, u));
  }
  for (Index x = 0; x < static_cast<Index>(a.object_count()); ++x) {
    Index id = b.identity(phi.on_object(x));
    if (phi.lift(x, id) != a.identity(x)) report.add("identity", {a.object_id(x)});
  }
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    auto [x, u] = pairs[k];
    Index g = phi.lifts()[k];
    Index y = phi.landing()[k];
    for (Index v : b.out(b.cod(u))) {
      Index second = phi.lift(y, v);
      Index whole = phi.lift(x, b.compose(u, v));
      Index composite = second == kNone ? kNone : a.compose(g, second);
      if (composite == kNone || composite != whole) {
        report.add("composition", {a.object_id(x), b.morphism_id(u), b.morphism_id(v)});
      }
    }
  }
  return report;
}

FinCofunctor identity_cofunctor(const CategoryPtr& c) {
  std::vector<Index> phi0(c->object_count());
  for (std::size_t i = 0; i < phi0.size(); ++i) phi0[i] = static_cast<Index>(i);
  AnchoredPairs pairs(*c, *c, phi0);
  std::vector<Index> lift(pairs.size()), p0(pairs.size());
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    lift[k] = pairs[k].second;
    p0[k] = c->cod(pairs[k].second);
  }
  return FinCofunctor(c, c, std::move(phi0), std::move(lift), std::move(p0));
}

FinCofunctor compose_cofunctors(const FinCofunctor& outer, const FinCofunctor& inner) {
  if (!same_category(outer.target_ptr(), inner.source_ptr())) {
    throw BoundaryMismatch("cofunctor composition: the middle categories differ");
  }
  const auto& a = outer.source();
  std::vector<Index> phi0(a.object_count());
  for (std::size_t x = 0; x < phi0.size(); ++x) phi0[x] = inner.on_object(outer.on_object(static_cast<Index>(x)));
  AnchoredPairs pairs(a, inner.target(), phi0);
  std::vector<Index> lift(pairs.size()), p0(pairs.size());
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    auto [x, w] = pairs[k];
    Index v = inner.lift(outer.on_object(x), w);
    Index g = v == kNone ? kNone : outer.lift(x, v);
    if (g == kNone) {
      throw InvalidInput("cofunctor composition needs lawful cofunctors",
                         [&] {
                           ValidationReport r;
                           r.add("lift-domain", {a.object_id(x), inner.target().morphism_id(w)});
                           return r;
                         }());
    }
    lift[k] = g;
    p0[k] = outer.land(x, v);
  }
  return FinCofunctor(outer.source_ptr(), inner.target_ptr(), std::move(phi0), std::move(lift), std::move(p0));
}

FinCategory lambda_category(const FinCofunctor& phi) {
  require_lawful(phi, "lambda category");
  return build_lambda(phi).category;
}

CofunctorSpan span_of_cofunctor(const FinCofunctor& phi) {
  require_lawful(phi, "span representation");
  auto built = build_lambda(phi);
  auto apex = share(std::move(built.category));
  const auto& pairs = phi.anchored();
  std::vector<Index> left1(pairs.size()), right1(pairs.size());
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    auto m = static_cast<std::size_t>(built.morphism_map[k]);
    left1[m] = pairs[k].second;
    right1[m] = phi.lifts()[k];
  }
  std::vector<Index> right0(phi.source().object_count());
  for (std::size_t x = 0; x < right0.size(); ++x) right0[x] = static_cast<Index>(x);
  return CofunctorSpan{apex, FinFunctor(apex, phi.target_ptr(), phi.object_map(), std::move(left1)),
                       FinFunctor(apex, phi.source_ptr(), std::move(right0), std::move(right1))};
}

FinCofunctor cofunctor_from_span(const CofunctorSpan& span) {
  if (!same_category(span.left.source_ptr(), span.apex) || !same_category(span.right.source_ptr(), span.apex)) {
    throw BoundaryMismatch("span legs must start at the apex");
  }
  ValidationReport report;
  report.merge(validate_functor(span.left), "left/");
  report.merge(validate_functor(span.right), "right/");
  report.merge(discrete_opfibration_report(span.left), "left/");
  if (!is_identity_on_objects(span.right)) report.add("right/identity-on-objects", {});
  if (!report.valid()) throw InvalidInput("span is not a cofunctor span", std::move(report));

  const auto& apex = *span.apex;
  const auto& b = span.left.target();
  std::vector<Index> phi0 = span.left.object_map();
  AnchoredPairs pairs(span.right.target(), b, phi0);
  std::vector<Index> lift(pairs.size()), p0(pairs.size());
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    auto [x, u] = pairs[k];
    auto out = apex.out(x);
    auto it = std::find_if(out.begin(), out.end(), [&](Index g) { return span.left.on_morphism(g) == u; });
    lift[k] = span.right.on_morphism(*it);
    p0[k] = span.right.target().cod(lift[k]);
  }
  return FinCofunctor(span.right.target_ptr(), span.left.target_ptr(), std::move(phi0), std::move(lift),
                      std::move(p0));
}

CofunctorSpan canonical_span(const CofunctorSpan& span) {
  const auto& apex = *span.apex;
  const auto& b = span.left.target();
  std::vector<ObjId> objs(apex.objects().begin(), apex.objects().end());
  std::vector<MorId> mors;
  for (Index g = 0; g < static_cast<Index>(apex.morphism_count()); ++g) {
    mors.push_back(anchored_token(apex.object_id(apex.dom(g)), b.morphism_id(span.left.on_morphism(g))));
  }
  auto r = relabel(apex, objs, mors);
  auto new_apex = share(std::move(r.category));
  auto reindex = [&](const FinFunctor& f) {
    std::vector<Index> f0(f.object_map().size()), f1(f.morphism_map().size());
    for (std::size_t o = 0; o < f0.size(); ++o) f0[static_cast<std::size_t>(r.object_map[o])] = f.object_map()[o];
    for (std::size_t m = 0; m < f1.size(); ++m) f1[static_cast<std::size_t>(r.morphism_map[m])] = f.morphism_map()[m];
    return FinFunctor(new_apex, f.target_ptr(), std::move(f0), std::move(f1));
  };
  return CofunctorSpan{new_apex, reindex(span.left), reindex(span.right)};
}

}  // namespace catlens
