#include "catlens/report.hpp"

#include <algorithm>
#include <sstream>

namespace catlens {

void ValidationReport::add(std::string law, std::vector<std::string> witness) {
  violations_.push_back({std::move(law), std::move(witness)});
}

void ValidationReport::merge(const ValidationReport& other, std::string_view prefix) {
  for (const auto& v : other.violations_) {
    violations_.push_back({std::string(prefix) + v.law, v.witness});
  }
}

std::size_t ValidationReport::count(std::string_view law) const {
  return static_cast<std::size_t>(std::count_if(
      violations_.begin(), violations_.end(), [&](const Violation& v) { return v.law == law; }));
}

std::string ValidationReport::to_text() const {
  std::ostringstream out;
  out << "verdict: " << (valid() ? "valid" : "invalid") << '\n';
  for (const auto& v : violations_) {
    out << "  " << v.law << ':';
    for (const auto& w : v.witness) out << ' ' << w;
    out << '\n';
  }
  return out.str();
}

}  // namespace catlens
