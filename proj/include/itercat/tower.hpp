#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "itercat/enrich.hpp"

namespace itercat {

struct EnrichedCat;
struct EnrichedFunctor;
using EnCatPtr = std::shared_ptr<const EnrichedCat>;
using EnFunPtr = std::shared_ptr<const EnrichedFunctor>;

/// A strict V-n-category. Level 0 is an object of the base; level n has
/// hom-categories of level n-1, composition functors
/// M_{abc}: hom(b,c) ⊗^(n-1)_1 hom(a,b) -> hom(a,c) and units J_a: I^(n-1) -> hom(a,a).
struct EnrichedCat {
  int level = 0;
  MonoidalPtr base;
  std::string name;
  ObjId obj = kNoObj;
  std::vector<std::string> objects;
  std::vector<EnCatPtr> homs;   // a*n + b
  std::vector<EnFunPtr> comps;  // (a*n + b)*n + c
  std::vector<EnFunPtr> units;

  std::size_t size() const { return objects.size(); }
  const EnrichedCat& hom(std::size_t a, std::size_t b) const { return *homs[a * size() + b]; }
  const EnCatPtr& hom_ptr(std::size_t a, std::size_t b) const { return homs[a * size() + b]; }
  const EnrichedFunctor& comp(std::size_t a, std::size_t b, std::size_t c) const {
    return *comps[(a * size() + b) * size() + c];
  }
  const EnrichedFunctor& unit(std::size_t a) const { return *units[a]; }
  std::optional<std::size_t> find(const std::string& label) const;
};

/// A V-n-functor. Level 0 is a base morphism.
struct EnrichedFunctor {
  int level = 0;
  MorId mor = kNoMor;
  EnCatPtr source;
  EnCatPtr target;
  std::vector<std::size_t> obj_map;
  std::vector<EnFunPtr> homs;  // over source objects, a*n + b

  const EnrichedFunctor& hom(std::size_t a, std::size_t b) const {
    return *homs[a * source->size() + b];
  }
};

EnCatPtr base_object(MonoidalPtr v, ObjId a);
EnFunPtr base_morphism(MonoidalPtr v, MorId f);

/// I^(n): one object "0", hom I^(n-1), M_000 and J_0 identities.
EnCatPtr unit_tower(MonoidalPtr v, int n);

/// Level-1 conversions; tables are shared one-to-one.
EnCatPtr encat_from_vcat(const VCat& a);
VCat vcat_from_encat(const EnrichedCat& a);
EnFunPtr enfunctor_from_vfunctor(const VFunctor& t);
/// Level-1 functor over a thin base, hom components the unique morphisms.
/// Throws MissingEntry when one does not exist.
EnFunPtr thin_enfunctor(EnCatPtr source, EnCatPtr target, std::vector<std::size_t> obj_map);

/// Level-2 category over a thin base. Homs are level-1 categories; M_{xyz}
/// and J_x are given by object maps (M over the objects of
/// hom(y,z) ⊗ hom(x,y), index p*|hom(x,y)| + q) and filled in with the
/// unique morphisms. Throws MissingEntry when a map is not monotone.
EnCatPtr thin_2cat(std::string name, MonoidalPtr v, std::vector<std::string> objects,
                   std::vector<EnCatPtr> homs, const std::vector<std::vector<std::size_t>>& comp_maps,
                   const std::vector<std::size_t>& unit_objects);
/// Level-2 functor over a thin base from an object map and one object map
/// per hom component.
EnFunPtr thin_2functor(EnCatPtr source, EnCatPtr target, std::vector<std::size_t> obj_map,
                       const std::vector<std::vector<std::size_t>>& hom_maps);

/// Structural equality. Labels are ignored: strict-unit identifications such
/// as I ⊗ X = X then hold on the nose.
bool same_cat(const EnrichedCat& a, const EnrichedCat& b);
bool same_functor(const EnrichedFunctor& f, const EnrichedFunctor& g);
/// Path to the first difference, e.g. "hom(f,f') / hom(0,0): a->b vs 1_b".
std::optional<std::string> functor_difference(const EnrichedFunctor& f, const EnrichedFunctor& g);

EnFunPtr identity_functor(EnCatPtr a);
/// s after t. Throws ShapeMismatch when target(t) and source(s) differ in
/// level or size; level 0 composes in the base.
EnFunPtr compose_functors(const EnrichedFunctor& s, const EnrichedFunctor& t);

/// ⊗^(n)_i. Objects "(a,b)", homs ⊗^(n-1)_{i+1}, composition through the
/// interchange one level down. FoldExceeded unless fold >= n + i.
EnCatPtr tensor_tower(const EnCatPtr& a, const EnCatPtr& b, int i);
EnFunPtr tensor_functors(const EnrichedFunctor& f, const EnrichedFunctor& g, int i);
/// ((a,b),c) -> (a,(b,c)), hom components one level down with index i+1.
EnFunPtr associator_functor(const EnCatPtr& a, const EnCatPtr& b, const EnCatPtr& c, int i);
/// (A ⊗_j B) ⊗_i (C ⊗_j D) -> (A ⊗_i C) ⊗_j (B ⊗_i D). BadIndices unless i < j.
EnFunPtr interchange_functor(const EnCatPtr& a, const EnCatPtr& b, const EnCatPtr& c,
                             const EnCatPtr& d, int i, int j);

/// Associativity and unit axioms, recursively. Level 1 delegates to
/// check_vcat. FoldExceeded when the base fold is below the level.
CheckReport check_enriched_cat(const EnrichedCat& a, const CheckOptions& opts = {});
/// Typing, M-square and J-triangle, recursively.
CheckReport check_enriched_functor(const EnrichedFunctor& f, const CheckOptions& opts = {});

/// Consequences of functoriality of composition in a level-2 category:
/// interchange of the two compositions, the unit triangle j_g ⊗ j_f, and
/// J_{a,00} = j_{1_a}.
CheckReport check_functoriality_consequences(const EnrichedCat& a);

// Points and k-cells.

/// A functor I^(m) -> target. For m >= 1 it is fixed by the object chosen
/// at each level; level 0 is a base morphism out of I.
struct Point {
  int level = 0;
  std::vector<std::size_t> chain;  // top object first, `level` entries
  MorId bottom = kNoMor;

  std::size_t object() const { return chain.front(); }
  Point inner() const;
  friend bool operator==(const Point&, const Point&) = default;
};

Point point_from_functor(const EnrichedFunctor& f);
EnFunPtr expand_point(const Point& p, const EnCatPtr& target);
/// f ∘ p.
Point apply_functor(const EnrichedFunctor& f, const Point& p);
/// The point whose expansion is J_a.
Point unit_point(const EnrichedCat& a, std::size_t obj);
/// "x/y/mor": chain labels of the successive categories, then the bottom
/// morphism.
std::string point_text(const EnrichedCat& c, const Point& p);
/// Inverse of point_text. Throws ParseError.
Point parse_point(const EnrichedCat& c, const std::string& text);
/// Empty when p is a valid functor into `target`.
CheckReport check_point(const Point& p, const EnCatPtr& target);

struct KCell;
using KCellPtr = std::shared_ptr<const KCell>;

/// A k-cell of V-n-Cat (2 <= k <= n+1) between (k-1)-cells. For k = 2 the
/// boundary is the functors F, G; above, it is the cells `source` and
/// `target`, which must share their own boundary. Components are indexed by
/// objects of the domain and have level n-k+1.
struct KCell {
  int dim = 2;
  EnFunPtr F;
  EnFunPtr G;
  KCellPtr source;
  KCellPtr target;
  std::vector<Point> components;

  int level() const { return F->source->level; }
  const EnrichedCat& domain() const { return *F->source; }
  const EnCatPtr& codomain() const { return F->target; }
};

/// Throws BoundaryMismatch for ill-formed boundaries or component counts.
KCellPtr make_2cell(EnFunPtr f, EnFunPtr g, std::vector<Point> components);
KCellPtr make_kcell(KCellPtr source, KCellPtr target, std::vector<Point> components);

/// The j-dimensional source / target cell in the boundary, 2 <= j < dim.
const KCell& boundary_source(const KCell& c, int j);
const KCell& boundary_target(const KCell& c, int j);
/// Category that holds the components at u: W(FU,GU)(ψ²_U0,φ²_U0)...
EnCatPtr component_category(const KCell& c, std::size_t u);

CheckReport check_kcell(const KCell& c, const CheckOptions& opts = {});
bool same_kcell(const KCell& a, const KCell& b);

KCellPtr unit_kcell(const EnFunPtr& f);
KCellPtr unit_kcell(const KCellPtr& c);

/// Composite along a common m-cell. Cells of lower dimension are first
/// raised with unit cells. m = 0 whiskers and then composes along the
/// middle functor. Throws BoundaryMismatch when the cells do not meet.
KCellPtr compose_kcells(const KCellPtr& beta, const KCellPtr& alpha, int m);
/// Both 0-cell composites, (Kα)∘(βF) and (βG)∘(Hα).
std::pair<KCellPtr, KCellPtr> zero_composites(const KCellPtr& beta, const KCellPtr& alpha);
/// (Kα)_U = K_{FU,GU} ∘ α_U.
KCellPtr whisker_right(const EnFunPtr& k, const KCellPtr& alpha);
/// (αH)_V = α_{HV}.
KCellPtr whisker_left(const KCellPtr& alpha, const EnFunPtr& h);

/// A 2-cell between level-1 functors with the transformation's components.
KCellPtr kcell_from_vnat(const VNatTrans& n);

}  // namespace itercat
