#pragma once

#include "catlens/cofunctor.hpp"
#include "catlens/functor.hpp"

namespace catlens {

/// A lens A <=> B: a Get functor A -> B and a Put cofunctor B -/-> A over the
/// same object map, where pushing a lift forward returns the original update.
class FinLens {
 public:
  /// Throws StructuralError when get and put do not connect the same categories.
  FinLens(FinFunctor get, FinCofunctor put);

  const FinFunctor& get() const noexcept { return get_; }
  const FinCofunctor& put() const noexcept { return put_; }
  const FinCategory& source() const noexcept { return get_.source(); }
  const FinCategory& target() const noexcept { return get_.target(); }
  const CategoryPtr& source_ptr() const noexcept { return get_.source_ptr(); }
  const CategoryPtr& target_ptr() const noexcept { return get_.target_ptr(); }
  /// The shared object map.
  const std::vector<Index>& object_map() const noexcept { return get_.object_map(); }

  bool operator==(const FinLens& other) const { return get_ == other.get_ && put_ == other.put_; }

 private:
  FinFunctor get_;
  FinCofunctor put_;
};

/// Get and Put individually (prefixed "get/", "put/"), agreement of the object
/// maps, and the lens axiom: every lift starts at its anchor and is sent back
/// to its update by Get ("put-get").
ValidationReport validate_lens(const FinLens& lens);

/// Lens as a commuting triangle apex -> A -> B over apex -> B.
struct LensTriangle {
  CategoryPtr apex;
  FinFunctor left;   // apex -> A, identity-on-objects
  FinFunctor right;  // apex -> B, discrete opfibration
  FinFunctor base;   // A -> B, the Get functor
};

LensTriangle lens_triangle(const FinLens& lens);

FinLens identity_lens(const CategoryPtr& c);

/// `first` then `second` (A <=> B, B <=> C). The result is computed
/// componentwise; it is cross-checked against the composite obtained from the
/// pullback of the two triangles over B and an InternalError is thrown when
/// the two disagree.
FinLens compose_lenses(const FinLens& first, const FinLens& second);

/// The composite cofunctor read off the pullback of the two triangles, before
/// comparison with the componentwise route.
FinCofunctor compose_puts_via_pullback(const FinLens& first, const FinLens& second);

/// Put of a discrete opfibration: the unique lifts. Throws InvalidInput with the
/// unique-lift witnesses when `f` is not a discrete opfibration.
FinLens dopf_to_lens(const FinFunctor& f);

}  // namespace catlens
