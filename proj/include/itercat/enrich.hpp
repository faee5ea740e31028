#pragma once

#include <memory>
#include <string>
#include <vector>

#include "itercat/monoidal.hpp"

namespace itercat {

using MonoidalPtr = std::shared_ptr<const IteratedMonoidalCat>;

/// A category enriched in the first product of a k-fold monoidal base.
/// Objects are indexed 0..n-1; tables are flattened row-major.
struct VCat {
  std::string name;
  MonoidalPtr base;
  std::vector<std::string> objects;
  std::vector<ObjId> homs;    // hom(a, b) at a*n + b
  std::vector<MorId> comps;   // M_{abc}: hom(b,c) ⊗_1 hom(a,b) -> hom(a,c) at (a*n + b)*n + c
  std::vector<MorId> units;   // j_a: I -> hom(a, a)

  std::size_t size() const { return objects.size(); }
  ObjId hom(std::size_t a, std::size_t b) const { return homs[a * size() + b]; }
  MorId comp(std::size_t a, std::size_t b, std::size_t c) const {
    return comps[(a * size() + b) * size() + c];
  }
  MorId unit(std::size_t a) const { return units[a]; }
  std::optional<std::size_t> find(const std::string& label) const;

  /// Allocates tables for the given labels; homs and morphisms unset.
  static VCat empty(std::string name, MonoidalPtr base, std::vector<std::string> objects);
  void set_hom(std::size_t a, std::size_t b, ObjId h) { homs[a * size() + b] = h; }
  void set_comp(std::size_t a, std::size_t b, std::size_t c, MorId m) {
    comps[(a * size() + b) * size() + c] = m;
  }
  void set_unit(std::size_t a, MorId j) { units[a] = j; }

  /// Same base (by identity) and identical tables; names are ignored.
  friend bool operator==(const VCat& x, const VCat& y) {
    return x.base == y.base && x.objects == y.objects && x.homs == y.homs && x.comps == y.comps &&
           x.units == y.units;
  }
};
using VCatPtr = std::shared_ptr<const VCat>;

struct VFunctor {
  VCatPtr source;
  VCatPtr target;
  std::vector<std::size_t> obj_map;
  std::vector<MorId> hom_map;  // T_{ab}: hom(a,b) -> hom(Ta,Tb) at a*n + b

  MorId component(std::size_t a, std::size_t b) const {
    return hom_map[a * source->size() + b];
  }
};

/// Components α_a: I -> hom_target(Ta, Sa) for T = source, S = target.
struct VNatTrans {
  VFunctor source;
  VFunctor target;
  std::vector<MorId> components;
};

/// Pentagon and unit triangles, after type checks on every M and j.
CheckReport check_vcat(const VCat& a, const CheckOptions& opts = {});
/// M-square and j-triangle.
CheckReport check_vfunctor(const VFunctor& t, const CheckOptions& opts = {});
/// Naturality hexagon. Throws ShapeMismatch for non-parallel functors or
/// mistyped components.
CheckReport check_vnat(const VNatTrans& n, const CheckOptions& opts = {});

/// Fills comps and units with the unique morphisms of a thin base, where
/// they exist; missing ones stay kNoMor.
VCat thin_vcat(std::string name, MonoidalPtr base, std::vector<std::string> objects,
               const std::vector<ObjId>& homs);
/// Over a thin base: T_{ab} is the unique morphism when it exists.
VFunctor thin_vfunctor(VCatPtr source, VCatPtr target, std::vector<std::size_t> obj_map);

VCat vcat_unit(MonoidalPtr v);
VFunctor identity_vfunctor(VCatPtr a);
/// s after t. Throws ShapeMismatch unless target(t) == source(s).
VFunctor compose_vfunctors(const VFunctor& s, const VFunctor& t);
/// Structural equality: equal endpoint tables, object maps and components.
bool same_vfunctor(const VFunctor& s, const VFunctor& t);

/// ⊗^(1)_i: objects "(a,b)" at index a*|B| + b, homs in ⊗_{i+1}, composition
/// through η^{1,i+1} then M ⊗_{i+1} M. Throws FoldExceeded when i+1 > fold,
/// MissingEntry when a required product or composite is not in the tables.
VCat tensor_vcat(const VCat& a, const VCat& b, int i);
/// Componentwise ⊗_{i+1} of hom maps between the tensored categories.
VFunctor tensor_vfunctor(const VFunctor& t, const VFunctor& s, int i);
/// ((a,b),c) -> (a,(b,c)) with hom components α^{i+1}.
VFunctor vcat_associator(const VCat& a, const VCat& b, const VCat& c, int i);
/// ((a,b),(c,d)) -> ((a,c),(b,d)) between (A⊗_j B)⊗_i(C⊗_j D) and
/// (A⊗_i C)⊗_j(B⊗_i D), with hom components η^{i+1,j+1}. BadIndices unless i < j.
VFunctor vcat_interchange(const VCat& a, const VCat& b, const VCat& c, const VCat& d, int i,
                          int j);

}  // namespace itercat
