#include "catlens/state_lens.hpp"

#include <algorithm>

#include "catlens/errors.hpp"

namespace catlens {

namespace {

void check_elements(const std::vector<std::string>& set, const char* which) {
  if (!std::is_sorted(set.begin(), set.end()) || std::adjacent_find(set.begin(), set.end()) != set.end()) {
    throw StructuralError(std::string(which) + " set must be sorted and free of duplicates");
  }
}

Index position(const std::vector<std::string>& set, const std::string& x) {
  auto it = std::lower_bound(set.begin(), set.end(), x);
  if (it == set.end() || *it != x) throw StructuralError("undeclared element '" + x + "'");
  return static_cast<Index>(it - set.begin());
}

std::vector<std::string> sorted_unique(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  if (std::adjacent_find(v.begin(), v.end()) != v.end()) throw StructuralError("duplicate element in a state set");
  return v;
}

}  // namespace

StateLens::StateLens(std::vector<std::string> source, std::vector<std::string> view, std::vector<Index> get,
                     std::vector<Index> put)
    : source_(std::move(source)), view_(std::move(view)), get_(std::move(get)), put_(std::move(put)) {
  check_elements(source_, "source");
  check_elements(view_, "view");
  if (get_.size() != source_.size() || put_.size() != source_.size() * view_.size()) {
    throw StructuralError("get and put must be total");
  }
  for (Index b : get_) {
    if (b < 0 || static_cast<std::size_t>(b) >= view_.size()) throw StructuralError("get leaves the view set");
  }
  for (Index a : put_) {
    if (a < 0 || static_cast<std::size_t>(a) >= source_.size()) throw StructuralError("put leaves the source set");
  }
}

StateLens StateLens::from_names(std::vector<std::string> source, std::vector<std::string> view,
                                const std::map<std::string, std::string>& get,
                                const std::map<std::pair<std::string, std::string>, std::string>& put) {
  source = sorted_unique(std::move(source));
  view = sorted_unique(std::move(view));
  std::vector<Index> g(source.size(), kNone), p(source.size() * view.size(), kNone);
  for (const auto& [a, b] : get) g[static_cast<std::size_t>(position(source, a))] = position(view, b);
  for (const auto& [key, a2] : put) {
    auto slot = static_cast<std::size_t>(position(source, key.first)) * view.size() +
                static_cast<std::size_t>(position(view, key.second));
    p[slot] = position(source, a2);
  }
  if (std::find(g.begin(), g.end(), kNone) != g.end()) throw StructuralError("get is not total");
  if (std::find(p.begin(), p.end(), kNone) != p.end()) throw StructuralError("put is not total");
  return StateLens(std::move(source), std::move(view), std::move(g), std::move(p));
}

ValidationReport validate_state_lens(const StateLens& s) {
  ValidationReport report;
  const auto& as = s.source();
  const auto& bs = s.view();
  const auto na = static_cast<Index>(as.size());
  const auto nb = static_cast<Index>(bs.size());
  for (Index a = 0; a < na; ++a) {
    for (Index b = 0; b < nb; ++b) {
      if (s.get(s.put(a, b)) != b) report.add("put-get", {as[a], bs[b]});
    }
  }
  for (Index a = 0; a < na; ++a) {
    if (s.put(a, s.get(a)) != a) report.add("get-put", {as[a]});
  }
  for (Index a = 0; a < na; ++a) {
    for (Index b = 0; b < nb; ++b) {
      for (Index b2 = 0; b2 < nb; ++b2) {
        if (s.put(s.put(a, b), b2) != s.put(a, b2)) report.add("put-put", {as[a], bs[b], bs[b2]});
      }
    }
  }
  return report;
}

StateLens identity_state_lens(std::vector<std::string> elements) {
  elements = sorted_unique(std::move(elements));
  const std::size_t n = elements.size();
  std::vector<Index> get(n), put(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    get[a] = static_cast<Index>(a);
    for (std::size_t b = 0; b < n; ++b) put[a * n + b] = static_cast<Index>(b);
  }
  return StateLens(elements, elements, std::move(get), std::move(put));
}

StateLens compose_state_lenses(const StateLens& first, const StateLens& second) {
  if (first.view() != second.source()) {
    throw BoundaryMismatch("state lens composition: the middle sets differ");
  }
  const std::size_t na = first.source().size();
  const std::size_t nc = second.view().size();
  std::vector<Index> get(na), put(na * nc);
  for (std::size_t a = 0; a < na; ++a) {
    auto x = static_cast<Index>(a);
    get[a] = second.get(first.get(x));
    for (std::size_t c = 0; c < nc; ++c) {
      put[a * nc + c] = first.put(x, second.put(first.get(x), static_cast<Index>(c)));
    }
  }
  return StateLens(first.source(), second.view(), std::move(get), std::move(put));
}

FinLens state_lens_to_internal(const StateLens& s) {
  if (auto report = validate_state_lens(s); !report.valid()) {
    throw InvalidInput("state lens breaks a lens law", std::move(report));
  }
  auto a = share(codiscrete(s.source()));
  auto b = share(codiscrete(s.view()));
  const auto na = static_cast<Index>(s.source().size());
  const auto nb = static_cast<Index>(s.view().size());
  // codiscrete(X) with sorted X keeps the pair (x,y) at index x*|X|+y only if
  // the "x*y" tokens sort like the pairs, so look morphisms up by name.
  auto pair_index = [](const FinCategory& c, const std::vector<std::string>& set, Index x, Index y) {
    return c.morphism_index(set[static_cast<std::size_t>(x)] + "*" + set[static_cast<std::size_t>(y)]);
  };
  std::vector<Index> f0(s.get_table());
  std::vector<Index> f1(a->morphism_count());
  for (Index x = 0; x < na; ++x) {
    for (Index y = 0; y < na; ++y) {
      f1[static_cast<std::size_t>(pair_index(*a, s.source(), x, y))] = pair_index(*b, s.view(), s.get(x), s.get(y));
    }
  }
  FinFunctor get(a, b, f0, std::move(f1));

  std::vector<Index> phi0(s.get_table());
  AnchoredPairs pairs(*a, *b, phi0);
  std::vector<Index> lift(pairs.size()), p0(pairs.size());
  for (Index x = 0; x < na; ++x) {
    for (Index y = 0; y < nb; ++y) {
      Index u = pair_index(*b, s.view(), s.get(x), y);
      auto k = static_cast<std::size_t>(pairs.index(x, u));
      lift[k] = pair_index(*a, s.source(), x, s.put(x, y));
      p0[k] = s.put(x, y);
    }
  }
  return FinLens(std::move(get), FinCofunctor(a, b, std::move(phi0), std::move(lift), std::move(p0)));
}

}  // namespace catlens
