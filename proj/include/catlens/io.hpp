#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <variant>

#include <json.hpp>

#include "catlens/double_category.hpp"
#include "catlens/errors.hpp"
#include "catlens/lens.hpp"
#include "catlens/state_lens.hpp"

namespace catlens::io {

using Json = nlohmann::ordered_json;

/// Unreadable or schema-violating input. The message starts with
/// "<file>:<json pointer>:".
class ParseError : public StructuralError {
 public:
  using StructuralError::StructuralError;
};

struct PullbackDoc {
  FinFunctor f;
  FinFunctor g;
  CategoryPtr apex;
  FinFunctor left;
  FinFunctor right;
  bool operator==(const PullbackDoc& o) const;
};

struct CommaDoc {
  FinFunctor f;
  CategoryPtr apex;
  FinFunctor left;
  FinFunctor right;
  bool operator==(const CommaDoc& o) const;
};

/// Put given either as a functor on the comma category or as a lift table.
struct CLensDoc {
  FinFunctor get;
  std::optional<FinFunctor> put;
  std::optional<LiftTable> lifts;
};

struct SplitOpfibDoc {
  FinFunctor functor;
  LiftTable lifts;
};

using Document = std::variant<CategoryPtr, FinFunctor, FinCofunctor, FinLens, StateLens, FinDoubleCategory,
                              CofunctorSpan, LensTriangle, PullbackDoc, CommaDoc, CLensDoc, SplitOpfibDoc>;

/// The "kind" tag written for a document.
std::string kind_of(const Document& d);

/// Reads any document kind. References to other structures may be a path
/// (relative to the referring file) or an inline object.
Document read_document(const std::filesystem::path& file);
/// Parses a document held in memory; relative references resolve against `base`.
Document parse_document(const std::string& text, const std::filesystem::path& base = ".");

CategoryPtr read_category(const std::filesystem::path& file);
FinFunctor read_functor(const std::filesystem::path& file);
FinCofunctor read_cofunctor(const std::filesystem::path& file);
FinLens read_lens(const std::filesystem::path& file);
StateLens read_state_lens(const std::filesystem::path& file);

Json to_json(const FinCategory& c);
Json to_json(const FinFunctor& f);
Json to_json(const FinCofunctor& phi);
Json to_json(const FinLens& l);
Json to_json(const StateLens& s);
Json to_json(const FinDoubleCategory& d);
Json to_json(const CofunctorSpan& s);
Json to_json(const LensTriangle& t);
Json to_json(const PullbackDoc& p);
Json to_json(const CommaDoc& c);
Json to_json(const CLensDoc& c);
Json to_json(const SplitOpfibDoc& s);
Json to_json(const Document& d);

/// {"verdict": "valid"|"invalid", "violations": [{"law", "witness"}]}.
Json report_json(const ValidationReport& r);

/// Two-space indented JSON with a trailing newline.
std::string dump(const Json& j);

/// Writes through a temporary file in the same directory, then renames.
void write_atomic(const std::filesystem::path& file, const std::string& contents);

}  // namespace catlens::io
