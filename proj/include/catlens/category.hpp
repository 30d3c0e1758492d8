#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "catlens/report.hpp"

namespace catlens {

using ObjId = std::string;
using MorId = std::string;

/// Position of an object or morphism in the canonical (lexicographic) order of
/// its category.
using Index = std::int32_t;
inline constexpr Index kNone = -1;

/// "(x,y,...)". Constructors use it to name derived objects and morphisms.
std::string tuple_token(std::initializer_list<std::string_view> parts);

struct MorphismDecl {
  MorId id;
  ObjId dom;
  ObjId cod;
};

/// One row of a composition table: `result` is `second` after `first`.
struct CompositionEntry {
  MorId first;
  MorId second;
  MorId result;
};

/// A finite category: objects, morphisms with domain and codomain, an identity
/// per object and a total composition table on composable pairs.
///
/// Objects and morphisms are kept sorted by identifier, so two categories with
/// the same data compare equal and serialize identically. A FinCategory is
/// structurally well formed by construction; whether it satisfies the unit and
/// associativity laws is decided by validate_category().
class FinCategory {
 public:
  FinCategory() = default;

  /// Builds from identifier tables. Throws StructuralError on duplicate or
  /// undeclared identifiers, a missing identity, or a composition table whose
  /// keys are not exactly the composable pairs.
  static FinCategory from_tables(std::vector<ObjId> objects, std::vector<MorphismDecl> morphisms,
                                 const std::map<ObjId, MorId>& identities,
                                 const std::vector<CompositionEntry>& compose);

  std::size_t object_count() const noexcept { return objects_.size(); }
  std::size_t morphism_count() const noexcept { return morphisms_.size(); }

  const ObjId& object_id(Index o) const { return objects_[static_cast<std::size_t>(o)]; }
  const MorId& morphism_id(Index m) const { return morphisms_[static_cast<std::size_t>(m)]; }
  std::span<const ObjId> objects() const noexcept { return objects_; }
  std::span<const MorId> morphisms() const noexcept { return morphisms_; }

  Index dom(Index m) const { return dom_[static_cast<std::size_t>(m)]; }
  Index cod(Index m) const { return cod_[static_cast<std::size_t>(m)]; }
  Index identity(Index o) const { return ident_[static_cast<std::size_t>(o)]; }

  /// `second` after `first`, or kNone when cod(first) != dom(second).
  Index compose(Index first, Index second) const;

  /// Morphisms with domain `o`, in canonical order.
  std::span<const Index> out(Index o) const { return out_[static_cast<std::size_t>(o)]; }
  /// Position of `m` inside out(dom(m)).
  Index out_position(Index m) const { return out_pos_[static_cast<std::size_t>(m)]; }
  std::vector<Index> hom(Index a, Index b) const;

  std::optional<Index> find_object(std::string_view id) const;
  std::optional<Index> find_morphism(std::string_view id) const;
  /// Like find_*, but throws StructuralError naming the missing identifier.
  Index object_index(std::string_view id) const;
  Index morphism_index(std::string_view id) const;

  bool operator==(const FinCategory& other) const;

 private:
  friend class CategoryBuilder;

  std::vector<ObjId> objects_;
  std::vector<MorId> morphisms_;
  std::vector<Index> dom_, cod_, ident_;
  std::vector<std::vector<Index>> out_;
  std::vector<Index> out_pos_;
  std::vector<std::size_t> comp_offset_;
  std::vector<Index> comp_;
  std::unordered_map<std::string, Index> object_lookup_, morphism_lookup_;
};

using CategoryPtr = std::shared_ptr<const FinCategory>;

inline CategoryPtr share(FinCategory c) { return std::make_shared<const FinCategory>(std::move(c)); }

/// True when both pointers denote equal categories (pointer identity is a fast path).
bool same_category(const CategoryPtr& a, const CategoryPtr& b);
bool same_category(const FinCategory& a, const FinCategory& b);

/// Incremental construction with provisional indices; build() sorts identifiers
/// into canonical order and checks structural well-formedness.
class CategoryBuilder {
 public:
  Index add_object(ObjId id);
  Index add_morphism(MorId id, Index dom, Index cod);
  void set_identity(Index object, Index morphism);
  void set_composite(Index first, Index second, Index result);

  std::size_t object_count() const noexcept { return objects_.size(); }
  std::size_t morphism_count() const noexcept { return morphisms_.size(); }

  /// Optionally reports where each provisional index ended up.
  FinCategory build(std::vector<Index>* object_map = nullptr,
                    std::vector<Index>* morphism_map = nullptr) &&;

 private:
  std::vector<ObjId> objects_;
  std::vector<MorId> morphisms_;
  std::vector<Index> dom_, cod_;
  std::vector<std::pair<Index, Index>> identities_;
  struct Composite {
    Index first, second, result;
  };
  std::vector<Composite> composites_;
};

/// A category relabelled under new identifiers, with the index translation.
struct Relabeled {
  FinCategory category;
  std::vector<Index> object_map;    // old index -> new index
  std::vector<Index> morphism_map;  // old index -> new index
};

/// Renames every object and morphism; the new names must be pairwise distinct.
Relabeled relabel(const FinCategory& c, const std::vector<ObjId>& object_names,
                  const std::vector<MorId>& morphism_names);

// ---------------------------------------------------------------------------
// Law checking

/// Checks the identity boundary, composite boundary, unit and associativity
/// laws exhaustively and reports every failing instance.
ValidationReport validate_category(const FinCategory& c);

std::vector<std::pair<MorId, MorId>> composable_pairs(const FinCategory& c);
std::vector<std::tuple<MorId, MorId, MorId>> composable_triples(const FinCategory& c);
std::size_t composable_pair_count(const FinCategory& c);

// ---------------------------------------------------------------------------
// Constructors

/// One morphism "a*b" for every ordered pair of objects.
FinCategory codiscrete(std::vector<ObjId> objects);
/// Only identities, named "id_a".
FinCategory discrete(std::vector<ObjId> objects);
/// The total order 0 -> 1 -> ... -> n with morphisms "i->j" for i <= j.
FinCategory interval(std::size_t n);
/// Identifiers "0".."n-1".
std::vector<ObjId> numbered(std::size_t n);

/// Objects are the morphisms of `c`; a morphism f -> g is a commutative square
/// named "(f,u,v,g)" with u: dom f -> dom g, v: cod f -> cod g and g.u = v.f.
/// Throws InvalidInput when `c` is not a lawful category.
FinCategory arrow_category(const FinCategory& c);

}  // namespace catlens
