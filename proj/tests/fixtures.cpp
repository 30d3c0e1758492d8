#include "fixtures.hpp"

#include <functional>
#include <map>

namespace fixtures {

using namespace catlens;

FinCategory monoid(const std::vector<std::string>& elements, const std::vector<std::vector<int>>& table) {
  std::vector<MorphismDecl> mors;
  for (const auto& e : elements) mors.push_back({e, "*", "*"});
  std::vector<CompositionEntry> comp;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = 0; j < elements.size(); ++j) {
      comp.push_back({elements[i], elements[j], elements[static_cast<std::size_t>(table[i][j])]});
    }
  }
  return FinCategory::from_tables({"*"}, mors, {{"*", elements[0]}}, comp);
}

FinCategory cyclic_group(int n) {
  std::vector<std::string> els;
  std::vector<std::vector<int>> table(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) {
    els.push_back(i == 0 ? "e" : "r" + std::to_string(i));
    for (int j = 0; j < n; ++j) table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (i + j) % n;
  }
  return monoid(els, table);
}

FinCategory idempotent_monoid() { return monoid({"e", "p"}, {{0, 1}, {1, 1}}); }

FinCategory klein_group() {
  return monoid({"e", "a", "b", "c"}, {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}});
}

FinCategory parallel_pair() {
  return FinCategory::from_tables({"0", "1"}, {{"id0", "0", "0"}, {"id1", "1", "1"}, {"s", "0", "1"}, {"t", "0", "1"}},
                                  {{"0", "id0"}, {"1", "id1"}},
                                  {{"id0", "id0", "id0"},
                                   {"id0", "s", "s"},
                                   {"id0", "t", "t"},
                                   {"s", "id1", "s"},
                                   {"t", "id1", "t"},
                                   {"id1", "id1", "id1"}});
}

FinCategory interval_with_loop() {
  return FinCategory::from_tables({"0", "1"}, {{"id0", "0", "0"}, {"id1", "1", "1"}, {"e", "0", "0"}, {"f", "0", "1"}},
                                  {{"0", "id0"}, {"1", "id1"}},
                                  {{"id0", "id0", "id0"},
                                   {"id0", "e", "e"},
                                   {"e", "id0", "e"},
                                   {"e", "e", "e"},
                                   {"id0", "f", "f"},
                                   {"e", "f", "f"},
                                   {"f", "id1", "f"},
                                   {"id1", "id1", "id1"}});
}

FinCategory swap_groupoid() {
  return FinCategory::from_tables({"x", "y"},
                                  {{"idx", "x", "x"}, {"idy", "y", "y"}, {"sx", "x", "y"}, {"sy", "y", "x"}},
                                  {{"x", "idx"}, {"y", "idy"}},
                                  {{"idx", "idx", "idx"},
                                   {"idx", "sx", "sx"},
                                   {"sx", "idy", "sx"},
                                   {"sx", "sy", "idx"},
                                   {"idy", "idy", "idy"},
                                   {"idy", "sy", "sy"},
                                   {"sy", "idx", "sy"},
                                   {"sy", "sx", "idy"}});
}

FinCategory coequalized_fork() {
  return FinCategory::from_tables(
      {"0", "1", "2"},
      {{"id0", "0", "0"}, {"id1", "1", "1"}, {"id2", "2", "2"}, {"l", "0", "1"}, {"h1", "1", "2"}, {"h2", "1", "2"},
       {"k", "0", "2"}},
      {{"0", "id0"}, {"1", "id1"}, {"2", "id2"}},
      {{"id0", "id0", "id0"}, {"id0", "l", "l"},   {"id0", "k", "k"},   {"l", "id1", "l"},   {"l", "h1", "k"},
       {"l", "h2", "k"},      {"k", "id2", "k"},   {"id1", "id1", "id1"}, {"id1", "h1", "h1"}, {"id1", "h2", "h2"},
       {"h1", "id2", "h1"},   {"h2", "id2", "h2"}, {"id2", "id2", "id2"}});
}

std::vector<Named> small_corpus() {
  return {
      {"empty", share(codiscrete({}))},
      {"terminal", share(codiscrete({"x"}))},
      {"discrete2", share(discrete({"x", "y"}))},
      {"interval1", share(interval(1))},
      {"codiscrete2", share(codiscrete({"x", "y"}))},
      {"z2", share(cyclic_group(2))},
      {"idempotent", share(idempotent_monoid())},
      {"z3", share(cyclic_group(3))},
      {"parallel", share(parallel_pair())},
      {"loop-interval", share(interval_with_loop())},
      {"swap", share(swap_groupoid())},
      {"klein", share(klein_group())},
  };
}

std::vector<Named> larger_pool() {
  auto terminal = share(codiscrete({"x"}));
  auto i1 = share(interval(1));
  auto c2 = share(codiscrete({"x", "y"}));
  auto pb = pullback_category(to_terminal(i1, terminal), to_terminal(c2, terminal));
  return {
      {"codiscrete3", share(codiscrete({"x", "y", "z"}))},
      {"interval2", share(interval(2))},
      {"arrow-interval1", share(arrow_category(interval(1)))},
      {"discrete3", share(discrete({"x", "y", "z"}))},
      {"interval1xcodiscrete2", pb.apex},
      {"z4", share(cyclic_group(4))},
      {"fork", share(coequalized_fork())},
  };
}

FinFunctor to_terminal(const CategoryPtr& c, const CategoryPtr& terminal) {
  return FinFunctor(c, terminal, std::vector<Index>(c->object_count(), 0), std::vector<Index>(c->morphism_count(), 0));
}

FinFunctor product_projection(const CategoryPtr& x, const CategoryPtr& y) {
  auto terminal = share(codiscrete({"pt"}));
  auto pb = pullback_category(to_terminal(x, terminal), to_terminal(y, terminal));
  return pb.left;
}

ProductOpfibration product_split_opfibration(const CategoryPtr& x, const CategoryPtr& fib) {
  auto t = share(codiscrete({"pt"}));
  auto pb = pullback_category(to_terminal(x, t), to_terminal(fib, t));
  AnchoredPairs pairs(*pb.apex, *x, pb.left.object_map());
  LiftTable lifts(pairs.size(), kNone);
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    auto [obj, u] = pairs[k];
    lifts[k] = pb.morphism_over(u, fib->identity(pb.right.on_object(obj)));
  }
  return {pb, lifts};
}

StateLens projection_state_lens(const std::vector<std::string>& xs, const std::vector<std::string>& ys) {
  std::vector<std::string> source;
  std::map<std::string, std::string> get;
  std::map<std::pair<std::string, std::string>, std::string> put;
  for (const auto& x : xs) {
    for (const auto& y : ys) {
      source.push_back(x + "." + y);
      get[x + "." + y] = x;
      for (const auto& x2 : xs) put[{x + "." + y, x2}] = x2 + "." + y;
    }
  }
  return StateLens::from_names(source, xs, get, put);
}

std::vector<StateLens> all_state_lenses(int source_size, int view_size) {
  std::vector<std::string> as, bs;
  for (int i = 0; i < source_size; ++i) as.push_back("e" + std::to_string(i));
  for (int i = 0; i < view_size; ++i) bs.push_back("e" + std::to_string(i));
  const auto na = static_cast<std::size_t>(source_size);
  const auto nb = static_cast<std::size_t>(view_size);
  std::vector<StateLens> out;
  std::vector<Index> get(na), put(na * nb);
  // Odometer over gets, then every put table, keeping only lawful pairs.
  std::function<void(std::size_t)> over_put = [&](std::size_t slot) {
    if (slot == put.size()) {
      for (std::size_t a = 0; a < na; ++a) {
        for (std::size_t b = 0; b < nb; ++b) {
          auto ab = static_cast<std::size_t>(put[a * nb + b]);
          if (static_cast<std::size_t>(get[ab]) != b) return;
          for (std::size_t b2 = 0; b2 < nb; ++b2) {
            if (put[ab * nb + b2] != put[a * nb + b2]) return;
          }
        }
        if (static_cast<std::size_t>(put[a * nb + static_cast<std::size_t>(get[a])]) != a) return;
      }
      out.emplace_back(as, bs, get, put);
      return;
    }
    for (std::size_t a2 = 0; a2 < na; ++a2) {
      put[slot] = static_cast<Index>(a2);
      over_put(slot + 1);
    }
  };
  std::function<void(std::size_t)> over_get = [&](std::size_t a) {
    if (a == na) {
      over_put(0);
      return;
    }
    for (std::size_t b = 0; b < nb; ++b) {
      get[a] = static_cast<Index>(b);
      over_get(a + 1);
    }
  };
  over_get(0);
  return out;
}

// Rename every apex morphism to an opaque token so the round trip has to work
// for arbitrary spans, not only canonically named ones.
CofunctorSpan scramble(const CofunctorSpan& span) {
  const auto& apex = *span.apex;
  std::vector<ObjId> objs(apex.objects().begin(), apex.objects().end());
  std::vector<MorId> mors;
  for (Index g = 0; g < static_cast<Index>(apex.morphism_count()); ++g) {
    mors.push_back("m" + std::to_string(apex.morphism_count() - static_cast<std::size_t>(g)));
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

}  // namespace fixtures
