#pragma once

#include <map>
#include <vector>

#include "itercat/tower.hpp"

namespace itercat {

/// (F, λ^1..λ^n) between k-fold monoidal bases, with
/// λ^i_{AB}: F(A) ⊗_i F(B) -> F(A ⊗_i B) keyed by (A, B).
struct NFoldMonoidalFunctor {
  MonoidalPtr source;
  MonoidalPtr target;
  StrictFunctor f;
  std::vector<std::map<std::array<ObjId, 2>, MorId>> lambdas;

  int fold() const { return static_cast<int>(lambdas.size()); }
  ObjId obj(ObjId a) const { return f.obj_map[a]; }
  MorId mor(MorId m) const { return f.mor_map[m]; }
  std::optional<MorId> lambda(int i, ObjId a, ObjId b) const;
};

/// Identity functor with identity λ^i for every product of `v`.
NFoldMonoidalFunctor identity_nfold(MonoidalPtr v);
/// Over a thin target: morphisms and λ^i are the unique ones with the right
/// endpoints. Throws MissingEntry when one does not exist.
NFoldMonoidalFunctor thin_nfold(MonoidalPtr source, MonoidalPtr target, std::vector<ObjId> obj_map,
                                int fold);

/// Functoriality, F(I) = J, typing and naturality of λ^i, internal
/// associativity and unit conditions, and the interchange hexagon for i < j.
CheckReport check_nfold_functor(const NFoldMonoidalFunctor& f, const CheckOptions& opts = {});

/// g after f, with ξ^i_{AB} = G(λ^i_{AB}) ∘ ζ^i_{FA,FB}. ShapeMismatch unless
/// target(f) is source(g).
NFoldMonoidalFunctor compose_nfold(const NFoldMonoidalFunctor& g, const NFoldMonoidalFunctor& f);
bool same_nfold(const NFoldMonoidalFunctor& f, const NFoldMonoidalFunctor& g);

/// F^(1)(A): same objects, homs F(A(x,y)), composition F(M) ∘ λ^1, units F(j).
VCat induce(const NFoldMonoidalFunctor& f, const VCat& a);
/// F^(1)(T): same object map, components F(T_xy).
VFunctor induce_on_functor(const NFoldMonoidalFunctor& f, const VFunctor& t);
/// λ^(1)i: F^(1)(A) ⊗_i F^(1)(B) -> F^(1)(A ⊗_i B), identity on objects,
/// components λ^(i+1).
VFunctor induced_lambda(const NFoldMonoidalFunctor& f, const VCat& a, const VCat& b, int i);

/// Hom(I, -) into finite sets: each object goes to its morphisms out of I,
/// f acts by composition and λ^i(f, g) = f ⊗_i g. The unit {0} of sets is
/// matched with 1_I, so unit conditions hold up to that identification.
struct HomSetFunctor {
  MonoidalPtr base;
  std::vector<std::vector<MorId>> sets;

  const std::vector<MorId>& at(ObjId a) const { return sets[a]; }
  MorId act(MorId f, MorId h) const { return compose(base->cat(), f, h); }
  MorId lambda(int i, MorId f, MorId g) const { return tensor_mor(*base, i, f, g); }
};

HomSetFunctor hom_functor(MonoidalPtr v);
CheckReport check_hom_functor(const HomSetFunctor& h, const CheckOptions& opts = {});

/// A_0: objects of A, morphisms x -> y the base morphisms I -> A(x,y)
/// named "x->y:<morphism>", composition M ∘ (g ⊗_1 f), identities j_x.
FinCat underlying_category(const VCat& a);
/// The same category built from V-functors I -> A and V-natural
/// transformations between them, each enumerated by brute force.
FinCat representable_category(const VCat& a);

/// Objects and 1-cells of Hom(I^(n), U): morphisms x -> y are the points of
/// U(x,y). The first steps-1 levels descend through the units, which the
/// unit laws force; the rest is enumerated and checked. The result does not
/// depend on `steps` (1 <= steps <= level); morphism names are
/// "x->y:" followed by the chain labels and the bottom morphism.
FinCat underlying_tower(const EnrichedCat& u, int steps);

}  // namespace itercat
