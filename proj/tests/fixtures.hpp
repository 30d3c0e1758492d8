#pragma once

#include <string>
#include <vector>

#include "catlens/category.hpp"
#include "catlens/cofunctor.hpp"
#include "catlens/double_category.hpp"
#include "catlens/functor.hpp"
#include "catlens/state_lens.hpp"

namespace fixtures {

using catlens::CategoryPtr;
using catlens::FinCategory;
using catlens::FinFunctor;

struct Named {
  std::string name;
  CategoryPtr category;
};

/// One-object category from a multiplication table over elements[0] = identity;
/// table[i][j] is the index of "j after i".
FinCategory monoid(const std::vector<std::string>& elements, const std::vector<std::vector<int>>& table);

FinCategory cyclic_group(int n);
/// {e, p} with p.p = p.
FinCategory idempotent_monoid();
/// Klein four-group.
FinCategory klein_group();
/// Two objects, two parallel morphisms 0 -> 1.
FinCategory parallel_pair();
/// 0 -> 1 with an idempotent loop e at 0 and f.e = f.
FinCategory interval_with_loop();
/// Z/2 acting on {x, y} by swapping: the action groupoid.
FinCategory swap_groupoid();
/// 0 -> 1 => 2 where both parallel morphisms agree after the first.
FinCategory coequalized_fork();

/// Every category with at most 2 objects and 4 morphisms used by the exhaustive checks.
std::vector<Named> small_corpus();
/// Slightly larger categories for seeded random runs.
std::vector<Named> larger_pool();

/// The unique functor to the terminal category.
FinFunctor to_terminal(const CategoryPtr& c, const CategoryPtr& terminal);
/// Projection x × y -> x, built as a pullback over the terminal category.
FinFunctor product_projection(const CategoryPtr& x, const CategoryPtr& y);

/// The projection X × Fib -> X (as the pullback over the terminal category)
/// with the split lifts (u, id).
struct ProductOpfibration {
  catlens::Pullback pb;
  catlens::LiftTable lifts;
};
ProductOpfibration product_split_opfibration(const CategoryPtr& x, const CategoryPtr& fib);

/// State lens X×Y -> X with put((x,y),x') = (x',y); elements named "x.y".
catlens::StateLens projection_state_lens(const std::vector<std::string>& xs, const std::vector<std::string>& ys);

/// Every state lens with source and view of the given sizes (elements "e0", "e1", ...).
std::vector<catlens::StateLens> all_state_lenses(int source_size, int view_size);

/// The span with every apex morphism renamed to an opaque token.
catlens::CofunctorSpan scramble(const catlens::CofunctorSpan& span);

}  // namespace fixtures
