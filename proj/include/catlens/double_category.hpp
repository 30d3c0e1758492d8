#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "catlens/cofunctor.hpp"
#include "catlens/enumerate.hpp"
#include "catlens/functor.hpp"

namespace catlens {

/// A category internal to Cat, held as its component categories and functors.
/// `pairs` is the pullback of dcod and ddom (first square on the left), and
/// dcomp is defined on its apex.
struct FinDoubleCategory {
  CategoryPtr obj_cat;
  CategoryPtr mor_cat;
  FinFunctor ddom;
  FinFunctor dcod;
  FinFunctor did;
  Pullback pairs;
  FinFunctor dcomp;

  /// Composite of two horizontally composable objects (resp. morphisms) of
  /// mor_cat, or kNone when they are not composable.
  Index compose_objects(Index x, Index y) const;
  Index compose_morphisms(Index x, Index y) const;
};

using DoubleCategoryPtr = std::shared_ptr<const FinDoubleCategory>;

/// Builds the pullback of dcod and ddom and fills dcomp from the two callbacks
/// (objects, morphisms of mor_cat). Throws StructuralError when a callback
/// returns an index outside mor_cat.
FinDoubleCategory assemble_double_category(FinFunctor ddom, FinFunctor dcod, FinFunctor did,
                                           const std::function<Index(Index, Index)>& compose_objects,
                                           const std::function<Index(Index, Index)>& compose_morphisms);

/// Component categories and functors, then: identity boundary, composite
/// boundary, left and right unit and associativity, each checked on objects
/// and on morphisms of mor_cat.
ValidationReport validate_double_category(const FinDoubleCategory& d);

struct DoubleFunctor {
  DoubleCategoryPtr source;
  DoubleCategoryPtr target;
  FinFunctor on_obj;
  FinFunctor on_mor;
};

/// The two components as functors, then commutation with ddom, dcod, did and
/// dcomp.
ValidationReport validate_double_functor(const DoubleFunctor& f);

/// `second` after `first`.
DoubleFunctor compose_double_functors(const DoubleFunctor& first, const DoubleFunctor& second);
bool operator==(const DoubleFunctor& x, const DoubleFunctor& y);

/// Object category B, morphism category the arrow category of B, boundaries
/// the domain and codomain projections, identities the identity arrows and
/// squares with identity sides, horizontal composition by pasting.
FinDoubleCategory squares_double_category(const CategoryPtr& b);

/// The double functor induced by f on squares.
DoubleFunctor squares_functor(const FinFunctor& f, const DoubleCategoryPtr& source, const DoubleCategoryPtr& target);

/// Internal discrete opfibration in Cat: the comparison functor from the
/// source morphism category to the pullback of on_obj and the target ddom is
/// bijective on objects and morphisms. Violations are "internal-dopf".
ValidationReport internal_dopf_report(const DoubleFunctor& f);

/// Chosen lifts of F, indexed like AnchoredPairs(A, B, F.object_map()).
using LiftTable = std::vector<Index>;

/// Lift boundary, identity, split and opcartesian laws. Throws
/// StructuralError when the table has the wrong size or leaves A.
ValidationReport split_opfibration_report(const FinFunctor& f, const LiftTable& lifts);

/// Lift of (a, u) read off a put functor on the comma category: the image of
/// (id_a, square(id, id, u, u)).
LiftTable lifts_of_put(const FinFunctor& f, const Comma& comma, const FinFunctor& put);

/// A put functor on the comma category from a lift table: (g, square) from
/// (a, u) to (a', u') goes to the first h over the square's bottom edge with
/// h . lift(a, u) = lift(a', u') . g. Throws InvalidInput when none exists.
FinFunctor put_from_lift_table(const FinFunctor& f, const Comma& comma, const LiftTable& lifts);

/// The triangle of double functors induced by a c-lens (get f, put p).
struct CLensTriangle {
  DoubleCategoryPtr squares_a;
  DoubleCategoryPtr squares_b;
  DoubleCategoryPtr lambda;
  DoubleFunctor get;     // squares_a -> squares_b
  DoubleFunctor phi;     // lambda -> squares_a
  DoubleFunctor phibar;  // lambda -> squares_b
  /// Number of double functors with the same object component as phi
  /// (resp. phibar), found by exhaustive search.
  std::uint64_t phi_count = 0;
  std::uint64_t phibar_count = 0;
};

/// Checks the c-lens conditions on (f, put) in order: put is defined on the
/// comma category of f, the extracted lifts form a split opfibration, put is
/// a lawful functor, put is unital along the identity section and f . put is
/// the codomain projection. Throws InvalidInput with the failing report.
/// Constructs the triangle, validates every piece (InternalError if any
/// fails) and counts competing double functors within `max_candidates`.
CLensTriangle clens_to_internal_lens(const FinFunctor& f, const FinFunctor& put,
                                     std::uint64_t max_candidates = kDefaultMaxCandidates);

/// Counts double functors source -> target whose object component equals
/// `on_obj`, by exhaustive search on the morphism component.
std::uint64_t count_double_functors(const DoubleCategoryPtr& source, const DoubleCategoryPtr& target,
                                    const FinFunctor& on_obj, std::uint64_t max_candidates = kDefaultMaxCandidates);

}  // namespace catlens
