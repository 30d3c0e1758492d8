#include "catlens/enumerate.hpp"

#include <algorithm>
#include <numeric>

#include "catlens/errors.hpp"

namespace catlens {

namespace {

// Saturating arithmetic for candidate counts.
std::uint64_t sat_add(std::uint64_t x, std::uint64_t y) { return x > UINT64_MAX - y ? UINT64_MAX : x + y; }
std::uint64_t sat_mul(std::uint64_t x, std::uint64_t y) {
  if (x == 0 || y == 0) return 0;
  return x > UINT64_MAX / y ? UINT64_MAX : x * y;
}

// Odometer over object maps: digit i ranges over choices[i].
class Odometer {
 public:
  explicit Odometer(std::vector<std::vector<Index>> choices) : choices_(std::move(choices)), pos_(choices_.size(), 0) {
    for (const auto& c : choices_) {
      if (c.empty()) done_ = true;
    }
  }
  bool done() const { return done_; }
  std::vector<Index> current() const {
    std::vector<Index> out(choices_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = choices_[i][pos_[i]];
    return out;
  }
  void next() {
    for (std::size_t i = choices_.size(); i-- > 0;) {
      if (++pos_[i] < choices_[i].size()) return;
      pos_[i] = 0;
    }
    done_ = true;
  }

 private:
  std::vector<std::vector<Index>> choices_;
  std::vector<std::size_t> pos_;
  bool done_ = false;
};

std::vector<std::vector<Index>> all_objects(std::size_t n, std::size_t m) {
  std::vector<Index> every(m);
  std::iota(every.begin(), every.end(), 0);
  return std::vector<std::vector<Index>>(n, every);
}

void guard(std::uint64_t needed, std::uint64_t bound) {
  if (needed > bound) throw GuardExceeded(needed, bound);
}

// ---------------------------------------------------------------------------
// Functor search

class FunctorSearch {
 public:
  FunctorSearch(const CategoryPtr& a, const CategoryPtr& b, const FunctorConstraints& c) : a_(a), b_(b), c_(c) {
    const auto& src = *a_;
    const auto& tgt = *b_;
    hom_.resize(tgt.object_count() * tgt.object_count());
    for (Index m = 0; m < static_cast<Index>(tgt.morphism_count()); ++m) {
      hom_[static_cast<std::size_t>(tgt.dom(m)) * tgt.object_count() + static_cast<std::size_t>(tgt.cod(m))].push_back(m);
    }
    checks_.resize(src.morphism_count());
    for (Index g = 0; g < static_cast<Index>(src.morphism_count()); ++g) {
      for (Index h : src.out(src.cod(g))) {
        Index r = src.compose(g, h);
        checks_[static_cast<std::size_t>(std::max({g, h, r}))].push_back({g, h, r});
      }
    }
    is_identity_.assign(src.morphism_count(), false);
    for (Index o = 0; o < static_cast<Index>(src.object_count()); ++o) {
      is_identity_[static_cast<std::size_t>(src.identity(o))] = true;
    }
  }

  std::vector<std::vector<Index>> object_choices() const {
    if (!c_.object_candidates.empty()) {
      if (c_.object_candidates.size() != a_->object_count()) {
        throw StructuralError("object candidates must list every source object");
      }
      return c_.object_candidates;
    }
    return all_objects(a_->object_count(), b_->object_count());
  }

  std::vector<Index> candidates(const std::vector<Index>& f0, Index m) const {
    const auto& src = *a_;
    const auto& tgt = *b_;
    std::vector<Index> out;
    if (is_identity_[static_cast<std::size_t>(m)]) {
      out.push_back(tgt.identity(f0[static_cast<std::size_t>(src.dom(m))]));
    } else {
      out = hom_[static_cast<std::size_t>(f0[static_cast<std::size_t>(src.dom(m))]) * tgt.object_count() +
                 static_cast<std::size_t>(f0[static_cast<std::size_t>(src.cod(m))])];
    }
    if (c_.morphism_filter) {
      std::erase_if(out, [&](Index x) { return !c_.morphism_filter(m, x); });
    }
    return out;
  }

  std::uint64_t count(std::uint64_t bound) const {
    std::uint64_t total = 0;
    for (Odometer od(object_choices()); !od.done(); od.next()) {
      auto f0 = od.current();
      std::uint64_t prod = 1;
      for (Index m = 0; m < static_cast<Index>(a_->morphism_count()) && prod > 0; ++m) {
        prod = sat_mul(prod, candidates(f0, m).size());
      }
      // Each object map is itself a candidate even when no morphism map survives.
      total = sat_add(total, std::max<std::uint64_t>(prod, 1));
      guard(total, bound);
    }
    return total;
  }

  std::uint64_t run(const std::function<bool(const FinFunctor&)>& visit) {
    std::uint64_t visited = 0;
    bool stop = false;
    for (Odometer od(object_choices()); !od.done() && !stop; od.next()) {
      auto f0 = od.current();
      std::vector<std::vector<Index>> cands(a_->morphism_count());
      bool empty = false;
      for (Index m = 0; m < static_cast<Index>(a_->morphism_count()); ++m) {
        cands[static_cast<std::size_t>(m)] = candidates(f0, m);
        if (cands[static_cast<std::size_t>(m)].empty()) empty = true;
      }
      if (empty) continue;
      std::vector<Index> f1(a_->morphism_count(), kNone);
      std::function<void(std::size_t)> rec = [&](std::size_t m) {
        if (stop) return;
        if (m == f1.size()) {
          ++visited;
          if (!visit(FinFunctor(a_, b_, f0, f1))) stop = true;
          return;
        }
        for (Index x : cands[m]) {
          f1[m] = x;
          bool ok = true;
          for (const auto& [g, h, r] : checks_[m]) {
            if (b_->compose(f1[static_cast<std::size_t>(g)], f1[static_cast<std::size_t>(h)]) !=
                f1[static_cast<std::size_t>(r)]) {
              ok = false;
              break;
            }
          }
          if (ok) rec(m + 1);
          if (stop) return;
        }
        f1[m] = kNone;
      };
      rec(0);
    }
    return visited;
  }

 private:
  struct Check {
    Index g, h, r;
  };
  CategoryPtr a_, b_;
  const FunctorConstraints& c_;
  std::vector<std::vector<Index>> hom_;
  std::vector<std::vector<Check>> checks_;
  std::vector<bool> is_identity_;
};

// ---------------------------------------------------------------------------
// Cofunctor search over a fixed object map

class LiftSearch {
 public:
  using Filter = std::function<bool(Index a, Index u, Index g)>;

  LiftSearch(const CategoryPtr& a, const CategoryPtr& b, std::vector<Index> phi0, const Filter& filter)
      : a_(a), b_(b), phi0_(std::move(phi0)), pairs_(*a, *b, phi0_) {
    const auto& src = *a_;
    const auto& tgt = *b_;
    cands_.resize(pairs_.size());
    for (std::size_t k = 0; k < pairs_.size(); ++k) {
      auto [x, u] = pairs_[k];
      if (u == tgt.identity(phi0_[static_cast<std::size_t>(x)])) {
        cands_[k] = {src.identity(x)};
        continue;
      }
      for (Index g : src.out(x)) {
        if (phi0_[static_cast<std::size_t>(src.cod(g))] != tgt.cod(u)) continue;
        if (filter && !filter(x, u, g)) continue;
        cands_[k].push_back(g);
      }
    }
  }

  std::uint64_t count() const {
    std::uint64_t prod = 1;
    for (const auto& c : cands_) prod = sat_mul(prod, c.size());
    return prod;
  }

  /// Depth-first over lifts; `rng` shuffles candidate order when given.
  void run(const std::function<bool(const FinCofunctor&)>& visit, std::mt19937_64* rng = nullptr) {
    lift_.assign(pairs_.size(), kNone);
    stop_ = false;
    order_ = cands_;
    if (rng) {
      for (auto& c : order_) std::shuffle(c.begin(), c.end(), *rng);
    }
    rec(0, visit);
  }

 private:
  bool consistent(std::size_t k) const {
    // Composition instances touching pair k whose three lifts are all assigned.
    const auto& src = *a_;
    const auto& tgt = *b_;
    for (std::size_t i = 0; i <= k; ++i) {
      auto [x, u] = pairs_[i];
      Index l1 = lift_[i];
      Index y = src.cod(l1);
      for (Index v : tgt.out(tgt.cod(u))) {
        auto j = static_cast<std::size_t>(pairs_.index(y, v));
        auto c = static_cast<std::size_t>(pairs_.index(x, tgt.compose(u, v)));
        if (i != k && j != k && c != k) continue;
        if (j > k || c > k) continue;
        if (src.compose(l1, lift_[j]) != lift_[c]) return false;
      }
    }
    return true;
  }

  void rec(std::size_t k, const std::function<bool(const FinCofunctor&)>& visit) {
    if (stop_) return;
    if (k == pairs_.size()) {
      FinCofunctor phi(a_, b_, phi0_, lift_, infer_p0(*a_, lift_));
      if (!visit(phi)) stop_ = true;
      return;
    }
    for (Index g : order_[k]) {
      lift_[k] = g;
      if (consistent(k)) rec(k + 1, visit);
      if (stop_) return;
    }
    lift_[k] = kNone;
  }

  CategoryPtr a_, b_;
  std::vector<Index> phi0_;
  AnchoredPairs pairs_;
  std::vector<std::vector<Index>> cands_, order_;
  std::vector<Index> lift_;
  bool stop_ = false;
};

}  // namespace

std::uint64_t for_each_functor(const CategoryPtr& a, const CategoryPtr& b, const FunctorConstraints& constraints,
                               const std::function<bool(const FinFunctor&)>& visit, std::uint64_t max_candidates) {
  FunctorSearch search(a, b, constraints);
  search.count(max_candidates);
  return search.run(visit);
}

std::vector<FinFunctor> enumerate_functors(const CategoryPtr& a, const CategoryPtr& b, std::uint64_t max_candidates,
                                           const FunctorConstraints& constraints) {
  std::vector<FinFunctor> out;
  for_each_functor(a, b, constraints, [&](const FinFunctor& f) {
    out.push_back(f);
    return true;
  }, max_candidates);
  return out;
}

std::vector<FinFunctor> enumerate_dopfs(const CategoryPtr& a, const CategoryPtr& b, std::uint64_t max_candidates) {
  std::vector<FinFunctor> out;
  for_each_functor(a, b, {}, [&](const FinFunctor& f) {
    if (is_discrete_opfibration(f)) out.push_back(f);
    return true;
  }, max_candidates);
  return out;
}

std::vector<FinCofunctor> enumerate_cofunctors(const CategoryPtr& a, const CategoryPtr& b,
                                               std::uint64_t max_candidates) {
  auto choices = all_objects(a->object_count(), b->object_count());
  std::uint64_t total = 0;
  for (Odometer od(choices); !od.done(); od.next()) {
    total = sat_add(total, std::max<std::uint64_t>(LiftSearch(a, b, od.current(), {}).count(), 1));
    guard(total, max_candidates);
  }
  std::vector<FinCofunctor> out;
  for (Odometer od(choices); !od.done(); od.next()) {
    LiftSearch(a, b, od.current(), {}).run([&](const FinCofunctor& phi) {
      out.push_back(phi);
      return true;
    });
  }
  return out;
}

std::vector<FinLens> enumerate_lenses(const CategoryPtr& a, const CategoryPtr& b, std::uint64_t max_candidates) {
  auto gets = enumerate_functors(a, b, max_candidates);
  auto filter_for = [](const FinFunctor& f) {
    return [&f](Index, Index u, Index g) { return f.on_morphism(g) == u; };
  };
  std::uint64_t total = 0;
  for (const auto& f : gets) {
    total = sat_add(total, std::max<std::uint64_t>(LiftSearch(a, b, f.object_map(), filter_for(f)).count(), 1));
    guard(total, max_candidates);
  }
  std::vector<FinLens> out;
  for (const auto& f : gets) {
    LiftSearch(a, b, f.object_map(), filter_for(f)).run([&](const FinCofunctor& phi) {
      FinLens lens(f, phi);
      if (validate_lens(lens).valid()) out.push_back(std::move(lens));
      return true;
    });
  }
  return out;
}

std::optional<FinCofunctor> random_cofunctor(const CategoryPtr& a, const CategoryPtr& b, std::mt19937_64& rng,
                                             int attempts) {
  if (b->object_count() == 0 && a->object_count() > 0) return std::nullopt;
  std::uniform_int_distribution<Index> pick(0, std::max<Index>(0, static_cast<Index>(b->object_count()) - 1));
  for (int t = 0; t < attempts; ++t) {
    std::vector<Index> phi0(a->object_count());
    for (auto& x : phi0) x = pick(rng);
    std::optional<FinCofunctor> found;
    LiftSearch(a, b, phi0, {}).run([&](const FinCofunctor& phi) {
      found = phi;
      return false;
    }, &rng);
    if (found) return found;
  }
  return std::nullopt;
}

}  // namespace catlens
