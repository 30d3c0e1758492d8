#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "catlens/cofunctor.hpp"
#include "catlens/functor.hpp"
#include "catlens/lens.hpp"

namespace catlens {

inline constexpr std::uint64_t kDefaultMaxCandidates = 1'000'000;

/// Restrictions on a functor search. Empty members mean "no restriction".
struct FunctorConstraints {
  /// Allowed images per source object.
  std::vector<std::vector<Index>> object_candidates;
  /// Accepts or rejects `image` as the image of source morphism `m`.
  std::function<bool(Index m, Index image)> morphism_filter;
};

/// Visits every functor a -> b satisfying the constraints, in canonical order
/// (object maps lexicographic, then morphism maps lexicographic). The visitor
/// returns false to stop. The candidate count (assignments surviving the
/// per-element filters) is computed first; GuardExceeded is thrown when it
/// is larger than `max_candidates`. Returns the number of functors visited.
std::uint64_t for_each_functor(const CategoryPtr& a, const CategoryPtr& b, const FunctorConstraints& constraints,
                               const std::function<bool(const FinFunctor&)>& visit,
                               std::uint64_t max_candidates = kDefaultMaxCandidates);

std::vector<FinFunctor> enumerate_functors(const CategoryPtr& a, const CategoryPtr& b,
                                           std::uint64_t max_candidates = kDefaultMaxCandidates,
                                           const FunctorConstraints& constraints = {});

std::vector<FinFunctor> enumerate_dopfs(const CategoryPtr& a, const CategoryPtr& b,
                                        std::uint64_t max_candidates = kDefaultMaxCandidates);

/// Every lawful cofunctor b -/-> a with source `a`, ordered by object map and
/// then by lifts.
std::vector<FinCofunctor> enumerate_cofunctors(const CategoryPtr& a, const CategoryPtr& b,
                                               std::uint64_t max_candidates = kDefaultMaxCandidates);

/// Every lawful lens a <=> b. Gets are enumerated first; each lift of (x, u)
/// is drawn from the morphisms out of x sent to u, identities forced.
std::vector<FinLens> enumerate_lenses(const CategoryPtr& a, const CategoryPtr& b,
                                      std::uint64_t max_candidates = kDefaultMaxCandidates);

/// A lawful cofunctor b -/-> a drawn by randomized depth-first search, or
/// nullopt when none was found within `attempts` object maps.
std::optional<FinCofunctor> random_cofunctor(const CategoryPtr& a, const CategoryPtr& b, std::mt19937_64& rng,
                                             int attempts = 64);

}  // namespace catlens
