#pragma once

#include <cstdint>
#include <map>
#include <unordered_map>
#include <vector>

#include "catlens/category.hpp"
#include "catlens/report.hpp"

namespace catlens {

/// A pair of maps (objects, morphisms) between finite categories. Structural
/// totality is enforced on construction; the functor laws are checked by
/// validate_functor().
class FinFunctor {
 public:
  FinFunctor(CategoryPtr source, CategoryPtr target, std::vector<Index> on_objects,
             std::vector<Index> on_morphisms);

  static FinFunctor from_names(CategoryPtr source, CategoryPtr target,
                               const std::map<ObjId, ObjId>& on_objects,
                               const std::map<MorId, MorId>& on_morphisms);

  const FinCategory& source() const noexcept { return *source_; }
  const FinCategory& target() const noexcept { return *target_; }
  const CategoryPtr& source_ptr() const noexcept { return source_; }
  const CategoryPtr& target_ptr() const noexcept { return target_; }

  Index on_object(Index o) const { return f0_[static_cast<std::size_t>(o)]; }
  Index on_morphism(Index m) const { return f1_[static_cast<std::size_t>(m)]; }
  const std::vector<Index>& object_map() const noexcept { return f0_; }
  const std::vector<Index>& morphism_map() const noexcept { return f1_; }

  /// Strict equality: equal boundary categories and equal component maps.
  bool operator==(const FinFunctor& other) const;

 private:
  CategoryPtr source_;
  CategoryPtr target_;
  std::vector<Index> f0_;
  std::vector<Index> f1_;
};

ValidationReport validate_functor(const FinFunctor& f);

FinFunctor identity_functor(const CategoryPtr& c);
/// `second` after `first`. Throws BoundaryMismatch unless first.target == second.source.
FinFunctor compose_functors(const FinFunctor& first, const FinFunctor& second);

/// Unique-lift test: for every object a of the source and every target
/// morphism u out of f(a) there must be exactly one g out of a with f(g) = u.
/// Violations are reported as "unique-lift" with witness (a, u, #lifts).
ValidationReport discrete_opfibration_report(const FinFunctor& f);
bool is_discrete_opfibration(const FinFunctor& f);

/// Same object set and f0 the identity.
bool is_identity_on_objects(const FinFunctor& f);

/// Pullback A x_B C of two functors with a common target, with its projections.
/// Objects are named "(a,c)" and morphisms "(g,h)".
struct Pullback {
  CategoryPtr apex;
  FinFunctor left;   // to A
  FinFunctor right;  // to C

  /// Index of the apex object over (a, c), or kNone when f(a) != g(c).
  Index object_over(Index a, Index c) const;
  Index morphism_over(Index g, Index h) const;

  std::unordered_map<std::uint64_t, Index> object_lookup;
  std::unordered_map<std::uint64_t, Index> morphism_lookup;
};

Pullback pullback_category(const FinFunctor& f, const FinFunctor& g);

/// The functor into a pullback induced by two functors that agree over the base.
/// Throws BoundaryMismatch when they do not.
FinFunctor pullback_pairing(const Pullback& pb, const FinFunctor& to_left, const FinFunctor& to_right);

/// Domain and codomain projections of the arrow category, and the action of a
/// functor on arrow categories.
FinFunctor arrow_domain_functor(const CategoryPtr& arrows, const CategoryPtr& base);
FinFunctor arrow_codomain_functor(const CategoryPtr& arrows, const CategoryPtr& base);
FinFunctor arrow_functor(const FinFunctor& f, const CategoryPtr& source_arrows,
                         const CategoryPtr& target_arrows);

/// Comma category f/B: objects (a, u: f(a) -> b), morphisms (g, v) with
/// u' . f(g) = v . u. Built directly; identifiers coincide with those of
/// pullback_category(f, arrow_domain_functor(B)).
struct Comma {
  CategoryPtr apex;
  CategoryPtr arrows;     // arrow category of B
  FinFunctor left;        // l: f/B -> A
  FinFunctor right;       // r: f/B -> B
  FinFunctor to_arrows;   // f/B -> arrow category of B

  /// Apex object (a, u), or kNone when dom(u) != f(a).
  Index object_over(Index a, Index u) const;
  /// Apex morphism (g, square), square given as an index into `arrows`.
  Index morphism_over(Index g, Index square) const;

  std::unordered_map<std::uint64_t, Index> object_lookup;
  std::unordered_map<std::uint64_t, Index> morphism_lookup;
};

/// Throws InvalidInput when `f` (or its categories) fails validation.
Comma comma_category(const FinFunctor& f);

inline std::uint64_t pair_key(Index a, Index b) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
         static_cast<std::uint32_t>(b);
}

}  // namespace catlens
