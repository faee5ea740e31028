#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "itercat/fincat.hpp"

namespace itercat {

/// One product ⊗_i as explicit object and morphism tables.
class TensorTable {
 public:
  TensorTable() = default;
  explicit TensorTable(std::size_t num_objects)
      : n_(num_objects), on_objects_(num_objects * num_objects, kNoObj) {}

  std::optional<ObjId> obj(ObjId a, ObjId b) const {
    ObjId r = on_objects_[a * n_ + b];
    if (r == kNoObj) return std::nullopt;
    return r;
  }
  std::optional<MorId> mor(MorId f, MorId g) const {
    auto it = on_morphisms_.find(key(f, g));
    if (it == on_morphisms_.end()) return std::nullopt;
    return it->second;
  }
  void set_obj(ObjId a, ObjId b, ObjId r) { on_objects_[a * n_ + b] = r; }
  void set_mor(MorId f, MorId g, MorId r) { on_morphisms_[key(f, g)] = r; }
  void erase_mor(MorId f, MorId g) { on_morphisms_.erase(key(f, g)); }

  std::size_t num_objects() const { return n_; }
  /// Defined morphism entries (f, g, f⊗g), sorted.
  std::vector<std::array<MorId, 3>> morphism_entries() const;

  friend bool operator==(const TensorTable&, const TensorTable&) = default;

 private:
  static std::uint64_t key(MorId f, MorId g) { return (std::uint64_t{f} << 32) | g; }
  std::size_t n_ = 0;
  std::vector<ObjId> on_objects_;
  std::unordered_map<std::uint64_t, MorId> on_morphisms_;
};

/// α^i components, (U⊗V)⊗W -> U⊗(V⊗W), keyed by (U, V, W).
using AssociatorFamily = std::map<std::array<ObjId, 3>, MorId>;
/// η^{ij} components, (A⊗_j B)⊗_i(C⊗_j D) -> (A⊗_i C)⊗_j(B⊗_i D), keyed by (A, B, C, D).
using InterchangeFamily = std::map<std::array<ObjId, 4>, MorId>;
/// c components, B⊗C -> C⊗B, keyed by (B, C).
using SymmetryFamily = std::map<std::array<ObjId, 2>, MorId>;

/// A finite k-fold monoidal category with a strict unit. Product indices are
/// 1-based, matching ⊗_1 ... ⊗_k.
struct IteratedMonoidalCat {
  std::string name;
  FinCatPtr base;
  ObjId unit = kNoObj;
  int fold = 0;
  /// Object products may be undefined (truncated examples); axiom instances
  /// touching an undefined product are skipped instead of reported.
  bool partial = false;
  std::vector<TensorTable> products;
  std::vector<AssociatorFamily> associators;
  std::map<std::pair<int, int>, InterchangeFamily> interchanges;

  const FinCat& cat() const { return *base; }
  const TensorTable& product(int i) const;
  std::optional<ObjId> find_tensor(int i, ObjId a, ObjId b) const;
  std::optional<MorId> find_tensor_mor(int i, MorId f, MorId g) const;
  std::optional<MorId> find_alpha(int i, ObjId u, ObjId v, ObjId w) const;
  std::optional<MorId> find_eta(int i, int j, ObjId a, ObjId b, ObjId c, ObjId d) const;
};

/// Table lookups. Throw IndexOutOfRange for a bad product index and
/// MissingEntry for an undefined entry.
ObjId tensor_obj(const IteratedMonoidalCat& v, int i, ObjId a, ObjId b);
MorId tensor_mor(const IteratedMonoidalCat& v, int i, MorId f, MorId g);

/// Full axiom suite: base category, bifunctoriality, strict unit, pentagon,
/// associator naturality and invertibility, interchange naturality and
/// conditions (a)-(e).
CheckReport check_kfold_axioms(const IteratedMonoidalCat& v, const CheckOptions& opts = {});

/// Naturality, involution and hexagon of a symmetry on the first product.
CheckReport check_symmetry(const IteratedMonoidalCat& v, const SymmetryFamily& sym);

/// Two-sided inverse in the morphism table, if any.
std::optional<MorId> find_inverse(const FinCat& c, MorId f);

/// Copies ⊗_1 and α^1 of `v` into k products and builds every η^{ij} as
/// α⁻¹ ∘ (1⊗α) ∘ (1⊗(c⊗1)) ∘ (1⊗α⁻¹) ∘ α. Throws InvalidSymmetry if `sym`
/// fails check_symmetry, MissingEntry if a composite is not in the tables.
IteratedMonoidalCat from_symmetric(const IteratedMonoidalCat& v, const SymmetryFamily& sym,
                                   int k);

/// For thin bases: fills morphism tensors, associators and interchanges with
/// the unique morphisms between the right objects, where they exist.
void derive_thin_structure(IteratedMonoidalCat& v);

/// Label used in reports for an interchange component, e.g. "eta^{1,2}_{T,F,T,F}".
std::string eta_label(const IteratedMonoidalCat& v, int i, int j, ObjId a, ObjId b, ObjId c,
                      ObjId d);
std::string alpha_label(const IteratedMonoidalCat& v, int i, ObjId u, ObjId w, ObjId x);

// Bundled examples.

/// {F <= T}, every product is ∧, unit T. Structure derived from thinness.
IteratedMonoidalCat boolean_poset(int k);
/// Symmetry of the Boolean poset: identities, since ∧ is commutative.
SymmetryFamily boolean_symmetry(const IteratedMonoidalCat& v);
/// Boolean poset with one product, lifted to k products via from_symmetric.
IteratedMonoidalCat boolean_symmetric(int k);

/// {0..top} with a -> b iff a >= b, ⊗_1 truncated addition, ⊗_2 max, unit 0.
IteratedMonoidalCat tropical_chain(int top = 3);

/// Skeleton of finite sets, one object per listed size, with the pairing
/// product (x, y) -> x·|B| + y, defined when the product size is listed.
/// Morphisms are the bijections generated by the symmetries and the swap on a
/// 2-element set, closed under composition and product. `functions[f]` is the
/// explicit map of morphism f.
struct FinSetSkeleton {
  IteratedMonoidalCat monoidal;
  SymmetryFamily symmetry;
  std::vector<std::vector<unsigned>> functions;
  std::vector<unsigned> sizes;  // indexed by ObjId
  unsigned size(ObjId a) const { return sizes[a]; }
};
/// The default keeps the sizes 1..4 and the powers of two up to 16, so
/// that (2,2,2,2) interchanges exist while automorphism groups stay small.
/// With size 0 some interchanges would need an undefined intermediate product.
FinSetSkeleton finset_skeleton(std::vector<unsigned> sizes = {1, 2, 3, 4, 8, 16});

}  // namespace itercat
