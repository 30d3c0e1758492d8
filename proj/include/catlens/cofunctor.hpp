#pragma once

#include <map>
#include <utility>
#include <vector>

#include "catlens/category.hpp"
#include "catlens/functor.hpp"
#include "catlens/report.hpp"

namespace catlens {

/// The anchored updates of an object map phi0: A0 -> B0, i.e. the pairs
/// (a, u) with u a morphism of B out of phi0(a). Ordered by a, then by u.
class AnchoredPairs {
 public:
  AnchoredPairs() = default;
  AnchoredPairs(const FinCategory& a, const FinCategory& b, const std::vector<Index>& phi0);

  std::size_t size() const noexcept { return pairs_.size(); }
  const std::pair<Index, Index>& operator[](std::size_t i) const { return pairs_[i]; }
  const std::vector<std::pair<Index, Index>>& pairs() const noexcept { return pairs_; }

  /// Position of (a, u), or kNone when dom(u) != phi0(a).
  Index index(Index a, Index u) const;

  bool operator==(const AnchoredPairs&) const = default;

 private:
  std::vector<std::pair<Index, Index>> pairs_;
  std::vector<Index> offset_;
  std::vector<Index> anchor_;  // phi0
  std::vector<Index> out_pos_;  // of B
  std::vector<Index> dom_;      // of B
};

/// "a|u": the identifier of an anchored update.
std::string anchored_token(std::string_view a, std::string_view u);

/// A cofunctor B -/-> A. Notation runs backwards; the data runs forwards:
///  - phi0 sends objects of the source A to objects of the target B,
///  - lift (phi1) sends each anchored update (a, u) to a morphism of A out of a,
///  - p0 records where that lift lands.
class FinCofunctor {
 public:
  FinCofunctor(CategoryPtr source, CategoryPtr target, std::vector<Index> phi0, std::vector<Index> lift,
               std::vector<Index> p0);

  /// Maps keyed by (a, u) identifier pairs. When `p0` is empty it is inferred
  /// as the codomain of each lift.
  static FinCofunctor from_names(CategoryPtr source, CategoryPtr target, const std::map<ObjId, ObjId>& phi0,
                                 const std::map<std::pair<ObjId, MorId>, MorId>& lift,
                                 const std::map<std::pair<ObjId, MorId>, ObjId>& p0 = {});

  const FinCategory& source() const noexcept { return *source_; }
  const FinCategory& target() const noexcept { return *target_; }
  const CategoryPtr& source_ptr() const noexcept { return source_; }
  const CategoryPtr& target_ptr() const noexcept { return target_; }

  const AnchoredPairs& anchored() const noexcept { return anchored_; }
  const std::vector<Index>& object_map() const noexcept { return phi0_; }
  const std::vector<Index>& lifts() const noexcept { return lift_; }
  const std::vector<Index>& landing() const noexcept { return p0_; }

  Index on_object(Index a) const { return phi0_[static_cast<std::size_t>(a)]; }
  /// Lift of (a, u); kNone when (a, u) is not anchored.
  Index lift(Index a, Index u) const;
  Index land(Index a, Index u) const;

  bool operator==(const FinCofunctor& other) const;

 private:
  CategoryPtr source_;
  CategoryPtr target_;
  std::vector<Index> phi0_;
  AnchoredPairs anchored_;
  std::vector<Index> lift_;
  std::vector<Index> p0_;
};

/// Compatibility, lift boundary (domain and landing), identity and composition
/// laws, all instances reported.
ValidationReport validate_cofunctor(const FinCofunctor& phi);

/// p0 as the codomain of every lift.
std::vector<Index> infer_p0(const FinCategory& source, const std::vector<Index>& lift);

FinCofunctor identity_cofunctor(const CategoryPtr& c);

/// `outer` after `inner` for outer: B -/-> A and inner: C -/-> B; the result is
/// C -/-> A. Each (a, w) is lifted through `inner` at phi0(a) and the result
/// is lifted through `outer` at a.
FinCofunctor compose_cofunctors(const FinCofunctor& outer, const FinCofunctor& inner);

/// The category of anchored updates: objects of A, morphisms "a|u" from a to p0(a, u).
FinCategory lambda_category(const FinCofunctor& phi);

/// A cofunctor as a span B <- apex -> A with a discrete opfibration on the left
/// and an identity-on-objects functor on the right.
struct CofunctorSpan {
  CategoryPtr apex;
  FinFunctor left;   // apex -> B
  FinFunctor right;  // apex -> A

  bool operator==(const CofunctorSpan& other) const {
    return same_category(apex, other.apex) && left == other.left && right == other.right;
  }
};

CofunctorSpan span_of_cofunctor(const FinCofunctor& phi);
/// Inverse of span_of_cofunctor. Throws InvalidInput when the left leg is not a
/// discrete opfibration or the right leg is not identity-on-objects.
FinCofunctor cofunctor_from_span(const CofunctorSpan& span);
/// Renames the apex morphisms to "a|u" (a = domain, u = left-leg image).
CofunctorSpan canonical_span(const CofunctorSpan& span);

}  // namespace catlens
