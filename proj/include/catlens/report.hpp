#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace catlens {

/// One failed instance of a law, with the identifiers that exhibit it.
struct Violation {
  std::string law;
  std::vector<std::string> witness;

  bool operator==(const Violation&) const = default;
};

/// Outcome of a law check. The verdict is valid iff no violation was recorded.
class ValidationReport {
 public:
  bool valid() const noexcept { return violations_.empty(); }
  const std::vector<Violation>& violations() const noexcept { return violations_; }

  void add(std::string law, std::vector<std::string> witness);

  /// Appends every violation of `other`, prefixing law names with `prefix`.
  void merge(const ValidationReport& other, std::string_view prefix = {});

  /// Number of violations recorded under `law`.
  std::size_t count(std::string_view law) const;

  std::string to_text() const;

 private:
  std::vector<Violation> violations_;
};

}  // namespace catlens
