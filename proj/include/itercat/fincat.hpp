#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "itercat/report.hpp"

namespace itercat {

using ObjId = std::uint32_t;
using MorId = std::uint32_t;

inline constexpr ObjId kNoObj = static_cast<ObjId>(-1);
inline constexpr MorId kNoMor = static_cast<MorId>(-1);

struct Morphism {
  std::string name;
  ObjId dom;
  ObjId cod;
};

/// A finite strict category given by explicit tables. Objects and morphisms
/// are numbered in declaration order. comp(f, g) is f after g, i.e. the
/// composite of A -g-> B -f-> C.
class FinCat {
 public:
  FinCat() = default;
  explicit FinCat(std::string name) : name_(std::move(name)) {}

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  ObjId add_object(std::string name);
  MorId add_morphism(std::string name, ObjId dom, ObjId cod);
  void set_identity(ObjId a, MorId f);
  /// Records f∘g = h. Throws NonComposable when cod(g) != dom(f).
  void set_comp(MorId f, MorId g, MorId h);
  /// Removes a table entry; used to build malformed fixtures.
  void erase_comp(MorId f, MorId g);
  /// Overwrites a table entry without type checks; used to build malformed fixtures.
  void force_comp(MorId f, MorId g, MorId h);

  std::size_t num_objects() const { return objects_.size(); }
  std::size_t num_morphisms() const { return morphisms_.size(); }

  /// "?" for ids outside the category, so messages can name unset entries.
  const std::string& object_name(ObjId a) const { return a < objects_.size() ? objects_[a] : unknown_; }
  const std::string& mor_name(MorId f) const { return f < morphisms_.size() ? morphisms_[f].name : unknown_; }
  ObjId dom(MorId f) const { return morphisms_.at(f).dom; }
  ObjId cod(MorId f) const { return morphisms_.at(f).cod; }

  std::optional<ObjId> find_object(const std::string& name) const;
  std::optional<MorId> find_morphism(const std::string& name) const;

  /// kNoMor when the identity has not been declared.
  MorId identity(ObjId a) const { return identities_.at(a); }

  std::optional<MorId> lookup_comp(MorId f, MorId g) const;

  /// Morphisms a -> b in declaration order.
  const std::vector<MorId>& hom(ObjId a, ObjId b) const;

  /// At most one morphism per ordered pair of objects.
  bool is_thin() const;

  /// Number of entries in the composition table.
  std::size_t comp_entries() const { return comp_.size(); }

  friend bool operator==(const FinCat& a, const FinCat& b);

 private:
  inline static const std::string unknown_ = "?";
  static std::uint64_t key(MorId f, MorId g) { return (std::uint64_t{f} << 32) | g; }

  std::string name_;
  std::vector<std::string> objects_;
  std::vector<Morphism> morphisms_;
  std::vector<MorId> identities_;
  std::unordered_map<std::string, ObjId> object_index_;
  std::unordered_map<std::string, MorId> morphism_index_;
  std::unordered_map<std::uint64_t, MorId> comp_;
  std::vector<std::vector<std::vector<MorId>>> homs_;
};

using FinCatPtr = std::shared_ptr<const FinCat>;

/// Table lookup for f∘g. Throws NonComposable or MissingEntry.
MorId compose(const FinCat& c, MorId f, MorId g);

/// Composite of a path written in applicative order: path[0] ∘ path[1] ∘ ...
MorId compose_path(const FinCat& c, std::span<const MorId> path);

/// True iff both composites are the same morphism. Throws NonComposable
/// if a path does not compose or the endpoints differ.
bool paths_equal(const FinCat& c, std::span<const MorId> p1, std::span<const MorId> p2);

CheckReport check_category_axioms(const FinCat& c, const CheckOptions& opts = {});

/// The unique morphism a -> b of a thin category, if any.
std::optional<MorId> thin_morphism(const FinCat& c, ObjId a, ObjId b);

/// Builds a thin category from a relation, taking the reflexive-transitive
/// closure. Identities are named "1_a", other morphisms "a->b".
FinCat make_preorder(std::string name, const std::vector<std::string>& objects,
                     const std::vector<std::pair<std::string, std::string>>& le);

struct StrictFunctor {
  FinCatPtr source;
  FinCatPtr target;
  std::vector<ObjId> obj_map;
  std::vector<MorId> mor_map;
};

StrictFunctor identity_functor(FinCatPtr c);
CheckReport check_functor(const StrictFunctor& f);

struct NatTransData {
  StrictFunctor source;
  StrictFunctor target;
  std::vector<MorId> components;
};

/// Throws ShapeMismatch when the functors are not parallel or the
/// component family is indexed by the wrong object set.
CheckReport check_nat_trans(const NatTransData& t);

/// Objects "(a,b)", morphisms "(f,g)", componentwise composition.
FinCat product(const FinCat& a, const FinCat& b);

/// Object and morphism names must agree too.
bool same_tables(const FinCat& a, const FinCat& b);

}  // namespace itercat
