#include "catlens/lens.hpp"

#include <algorithm>

#include "catlens/errors.hpp"

namespace catlens {

namespace {

void require_lawful(const FinLens& lens, const char* what) {
  ValidationReport report;
  report.merge(validate_category(lens.source()), "source/");
  report.merge(validate_category(lens.target()), "target/");
  report.merge(validate_lens(lens));
  if (!report.valid()) throw InvalidInput(std::string(what) + " needs a lawful lens", std::move(report));
}

}  // namespace

FinLens::FinLens(FinFunctor get, FinCofunctor put) : get_(std::move(get)), put_(std::move(put)) {
  if (!same_category(get_.source_ptr(), put_.source_ptr()) || !same_category(get_.target_ptr(), put_.target_ptr())) {
    throw StructuralError("get and put connect different categories");
  }
}

ValidationReport validate_lens(const FinLens& lens) {
  ValidationReport report;
  report.merge(validate_functor(lens.get()), "get/");
  report.merge(validate_cofunctor(lens.put()), "put/");
  const auto& a = lens.source();
  const auto& b = lens.target();
  const auto& f = lens.get();
  const auto& phi = lens.put();
  for (Index x = 0; x < static_cast<Index>(a.object_count()); ++x) {
    if (f.on_object(x) != phi.on_object(x)) report.add("object-map-agreement", {a.object_id(x)});
  }
  const auto& pairs = phi.anchored();
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    auto [x, u] = pairs[k];
    Index g = phi.lifts()[k];
    if (a.dom(g) != x || f.on_morphism(g) != u) report.add("put-get", {a.object_id(x), b.morphism_id(u)});
  }
  return report;
}

LensTriangle lens_triangle(const FinLens& lens) {
  require_lawful(lens, "lens triangle");
  auto span = span_of_cofunctor(lens.put());
  LensTriangle t{span.apex, span.right, span.left, lens.get()};
  if (!(compose_functors(t.left, t.base) == t.right)) {
    throw InternalError("lens triangle does not commute");
  }
  return t;
}

FinLens identity_lens(const CategoryPtr& c) { return FinLens(identity_functor(c), identity_cofunctor(c)); }

FinCofunctor compose_puts_via_pullback(const FinLens& first, const FinLens& second) {
  auto t1 = lens_triangle(first);   // Lambda over A and B
  auto t2 = lens_triangle(second);  // Omega over B and C
  auto pb = pullback_category(t1.right, t2.left);
  const auto& apex = *pb.apex;

  // Apex objects are pairs (a, phi0 a); rename them to a so the leg into A
  // becomes identity-on-objects.
  std::vector<ObjId> objs(apex.object_count());
  for (Index o = 0; o < static_cast<Index>(apex.object_count()); ++o) {
    objs[static_cast<std::size_t>(o)] = first.source().object_id(pb.left.on_object(o));
  }
  std::vector<MorId> mors(apex.morphisms().begin(), apex.morphisms().end());
  auto r = relabel(apex, objs, mors);
  auto renamed = share(std::move(r.category));

  auto to_a = compose_functors(pb.left, t1.left);
  auto to_c = compose_functors(pb.right, t2.right);
  auto reindex = [&](const FinFunctor& f) {
    std::vector<Index> f0(f.object_map().size()), f1(f.morphism_map().size());
    for (std::size_t o = 0; o < f0.size(); ++o) f0[static_cast<std::size_t>(r.object_map[o])] = f.object_map()[o];
    for (std::size_t m = 0; m < f1.size(); ++m) f1[static_cast<std::size_t>(r.morphism_map[m])] = f.morphism_map()[m];
    return FinFunctor(renamed, f.target_ptr(), std::move(f0), std::move(f1));
  };
  CofunctorSpan span{renamed, reindex(to_c), reindex(to_a)};
  if (!(compose_functors(span.right, compose_functors(first.get(), second.get())) == span.left)) {
    throw InternalError("composite lens triangle does not commute");
  }
  return cofunctor_from_span(span);
}

FinLens compose_lenses(const FinLens& first, const FinLens& second) {
  if (!same_category(first.target_ptr(), second.source_ptr())) {
    throw BoundaryMismatch("lens composition: target of the first lens is not the source of the second");
  }
  require_lawful(first, "lens composition");
  require_lawful(second, "lens composition");
  FinLens result(compose_functors(first.get(), second.get()), compose_cofunctors(first.put(), second.put()));
  if (!(compose_puts_via_pullback(first, second) == result.put())) {
    throw InternalError("lens composition: componentwise and pullback routes disagree");
  }
  return result;
}

FinLens dopf_to_lens(const FinFunctor& f) {
  ValidationReport report = validate_functor(f);
  report.merge(discrete_opfibration_report(f));
  if (!report.valid()) throw InvalidInput("functor is not a discrete opfibration", std::move(report));
  const auto& a = f.source();
  AnchoredPairs pairs(a, f.target(), f.object_map());
  std::vector<Index> lift(pairs.size()), p0(pairs.size());
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    auto [x, u] = pairs[k];
    auto out = a.out(x);
    lift[k] = *std::find_if(out.begin(), out.end(), [&](Index g) { return f.on_morphism(g) == u; });
    p0[k] = a.cod(lift[k]);
  }
  return FinLens(f, FinCofunctor(f.source_ptr(), f.target_ptr(), f.object_map(), std::move(lift), std::move(p0)));
}

}  // namespace catlens
