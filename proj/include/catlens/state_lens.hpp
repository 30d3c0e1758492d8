#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "catlens/lens.hpp"

namespace catlens {

/// A set-based lens: get: A -> B and put: A x B -> A, stored by index into
/// the sorted element lists.
class StateLens {
 public:
  StateLens(std::vector<std::string> source, std::vector<std::string> view, std::vector<Index> get,
            std::vector<Index> put);

  static StateLens from_names(std::vector<std::string> source, std::vector<std::string> view,
                              const std::map<std::string, std::string>& get,
                              const std::map<std::pair<std::string, std::string>, std::string>& put);

  const std::vector<std::string>& source() const noexcept { return source_; }
  const std::vector<std::string>& view() const noexcept { return view_; }
  Index get(Index a) const { return get_[static_cast<std::size_t>(a)]; }
  Index put(Index a, Index b) const { return put_[static_cast<std::size_t>(a) * view_.size() + static_cast<std::size_t>(b)]; }
  const std::vector<Index>& get_table() const noexcept { return get_; }
  const std::vector<Index>& put_table() const noexcept { return put_; }

  bool operator==(const StateLens&) const = default;

 private:
  std::vector<std::string> source_;
  std::vector<std::string> view_;
  std::vector<Index> get_;
  std::vector<Index> put_;  // row-major over (a, b)
};

/// PutGet, GetPut and PutPut over every element (pair, triple).
ValidationReport validate_state_lens(const StateLens& s);

StateLens identity_state_lens(std::vector<std::string> elements);

/// get = g.f and put(a, c) = p(a, q(f a, c)). Throws BoundaryMismatch when the
/// middle sets differ.
StateLens compose_state_lenses(const StateLens& first, const StateLens& second);

/// The lens between codiscrete categories induced by a state lens: Get acts as
/// get on both ends of each pair, and (a, get(a)*b) lifts to a*put(a, b).
/// Throws InvalidInput when the state lens breaks a law.
FinLens state_lens_to_internal(const StateLens& s);

}  // namespace catlens
