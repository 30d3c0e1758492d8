#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace clisupport {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args);

/// A fresh empty directory under the system temp directory.
fs::path scratch_dir(const std::string& name);

std::string slurp(const fs::path& file);
void spit(const fs::path& file, const std::string& text);

/// Input files used by the build and compose fixtures:
/// c1, c2, c3 (codiscrete), i2 (two-object interval), t (terminal),
/// swap (functor c2 -> c2), bang (i2 -> t), idf (identity on c2),
/// swapl (lens), swapc (its put), idc (identity cofunctor on c2),
/// span (span of swapc), xyz and xy (state-lens projections chaining
/// X×Y×Z -> X×Y -> X), sl (projection of {a,b}×{p,q} onto {a,b}).
void write_inputs(const fs::path& dir);

/// Every build and compose invocation exercised for determinism; each
/// writes its result with --out into `dir`.
std::vector<std::vector<std::string>> artifact_commands(const fs::path& dir);

}  // namespace clisupport
