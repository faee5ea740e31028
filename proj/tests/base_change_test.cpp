#include <gtest/gtest.h>

#include <random>

#include "itercat/base_change.hpp"
#include "itercat/error.hpp"

using namespace itercat;

namespace {

constexpr ObjId F = 0, T = 1;

MonoidalPtr boolean(int k) { return std::make_shared<IteratedMonoidalCat>(boolean_poset(k)); }
MonoidalPtr tropical() { return std::make_shared<IteratedMonoidalCat>(tropical_chain(3)); }
MonoidalPtr finset() {
  auto s = finset_skeleton({1, 2, 3, 4});
  return std::make_shared<IteratedMonoidalCat>(from_symmetric(s.monoidal, s.symmetry, 2));
}

bool has_axiom(const CheckReport& r, const std::string& axiom) {
  for (const auto& f : r.findings())
    if (f.axiom == axiom) return true;
  return false;
}

VCatPtr random_preorder(const MonoidalPtr& v, std::mt19937& rng, std::size_t n) {
  std::vector<bool> rel(n * n);
  for (std::size_t p = 0; p < n * n; ++p) rel[p] = rng() % 3 == 0;
  for (std::size_t a = 0; a < n; ++a) rel[a * n + a] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (rel[a * n + k] && rel[k * n + b]) rel[a * n + b] = true;
  std::vector<ObjId> homs;
  std::vector<std::string> objs;
  for (std::size_t a = 0; a < n; ++a) objs.push_back(std::string(1, static_cast<char>('a' + a)));
  for (bool r : rel) homs.push_back(r ? T : F);
  return std::make_shared<VCat>(thin_vcat("P", v, objs, homs));
}

// Distances in {0..3} satisfying d(x,x) = 0 and the triangle inequality
// (truncated), by repeated relaxation.
VCatPtr random_metric(const MonoidalPtr& v, std::mt19937& rng, std::size_t n) {
  std::vector<unsigned> d(n * n);
  for (std::size_t p = 0; p < n * n; ++p) d[p] = rng() % 4;
  for (std::size_t a = 0; a < n; ++a) d[a * n + a] = 0;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) d[a * n + b] = std::min(d[a * n + b], d[a * n + k] + d[k * n + b]);
  std::vector<ObjId> homs(d.begin(), d.end());
  std::vector<std::string> objs;
  for (std::size_t a = 0; a < n; ++a) objs.push_back("p" + std::to_string(a));
  return std::make_shared<VCat>(thin_vcat("M", v, objs, homs));
}

bool terminal(const FinCat& c) { return c.num_objects() == 1 && c.num_morphisms() == 1; }

}  // namespace

TEST(NFoldFunctor, IdentitiesPass) {
  std::vector<MonoidalPtr> bases{boolean(3), tropical(),
                                 std::make_shared<IteratedMonoidalCat>(boolean_symmetric(3))};
  for (const auto& v : bases) {
    EXPECT_TRUE(check_nfold_functor(identity_nfold(v)).ok()) << v->name;
  }
}

TEST(NFoldFunctor, FinsetIdentityPassesAndRetargetedLambdaFails) {
  auto v = finset();
  auto id = identity_nfold(v);
  EXPECT_TRUE(check_nfold_functor(id).ok());
  // λ^1_{2,1} becomes the swap of 2, still typed 2 -> 2.
  const FinCat& c = v->cat();
  ObjId two = *c.find_object("2"), one = *c.find_object("1");
  MorId swap = kNoMor;
  for (MorId m : c.hom(two, two))
    if (m != c.identity(two)) swap = m;
  ASSERT_NE(swap, kNoMor);
  id.lambdas[0][{two, one}] = swap;
  auto r = check_nfold_functor(id);
  EXPECT_TRUE(has_axiom(r, "lambda.unit")) << r.to_text();
  bool named = false;
  for (const auto& f : r.findings())
    if (f.axiom == "lambda.unit" && f.locator == std::vector<std::string>{"1", "2", "1"}) named = true;
  EXPECT_TRUE(named);
}

TEST(NFoldFunctor, CollapsePasses) {
  auto v = boolean(3);
  auto collapse = thin_nfold(v, v, {T, T}, 3);
  EXPECT_TRUE(check_nfold_functor(collapse).ok());
  auto to_trop = thin_nfold(boolean(2), tropical(), {2, 0}, 2);
  EXPECT_TRUE(check_nfold_functor(to_trop).ok());
  // Mistyped: λ^1_{F,F} pointed at the identity of F.
  collapse.lambdas[0][{F, F}] = v->cat().identity(F);
  EXPECT_TRUE(has_axiom(check_nfold_functor(collapse), "lambda.type"));
}

TEST(NFoldFunctor, NonMonotoneMapHasNoThinFunctor) {
  auto v = boolean(2);
  EXPECT_THROW(thin_nfold(v, v, {T, F}, 2), Error);
}

namespace {

// Thin functors among {Boolean, tropical}, all with two products.
struct Zoo {
  MonoidalPtr b = boolean(2), t = tropical();
  std::vector<NFoldMonoidalFunctor> bb, bt, tb;
  Zoo() {
    bb = {identity_nfold(b), thin_nfold(b, b, {T, T}, 2)};
    for (ObjId k = 0; k <= 3; ++k) bt.push_back(thin_nfold(b, t, {k, 0}, 2));
    // "is zero" and the constant T.
    tb.push_back(thin_nfold(t, b, {T, F, F, F}, 2));
    tb.push_back(thin_nfold(t, b, {T, T, T, T}, 2));
  }
};

}  // namespace

TEST(NFoldFunctor, CompositionIsAssociativeAndUnital) {
  Zoo z;
  for (const auto& f : z.bt) {
    EXPECT_TRUE(check_nfold_functor(f).ok());
    EXPECT_TRUE(same_nfold(compose_nfold(identity_nfold(z.t), f), f));
    EXPECT_TRUE(same_nfold(compose_nfold(f, identity_nfold(z.b)), f));
    for (const auto& g : z.tb) {
      auto gf = compose_nfold(g, f);
      EXPECT_TRUE(check_nfold_functor(gf).ok());
      for (const auto& h : z.bb) {
        EXPECT_TRUE(same_nfold(compose_nfold(h, gf), compose_nfold(compose_nfold(h, g), f)));
      }
    }
  }
  EXPECT_THROW(compose_nfold(z.bt[0], z.bt[0]), Error);
}

TEST(ChangeOfBase, IdentityAndCollapse) {
  auto v = boolean(3);
  std::mt19937 rng(5);
  auto collapse = thin_nfold(v, v, {T, T}, 3);
  for (int trial = 0; trial < 20; ++trial) {
    auto a = random_preorder(v, rng, 1 + rng() % 5);
    EXPECT_EQ(induce(identity_nfold(v), *a), *a);
    VCat c = induce(collapse, *a);
    EXPECT_EQ(c.size(), a->size());
    EXPECT_TRUE(check_vcat(c).ok());
    for (ObjId h : c.homs) EXPECT_EQ(h, T);
  }
}

TEST(ChangeOfBase, RespectsComposition) {
  Zoo z;
  std::mt19937 rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    auto a = random_preorder(z.b, rng, 1 + rng() % 4);
    for (const auto& f : z.bt)
      for (const auto& g : z.tb) {
        VCat fa = induce(f, *a);
        EXPECT_TRUE(check_vcat(fa).ok());
        EXPECT_EQ(induce(compose_nfold(g, f), *a), induce(g, fa));
      }
    auto m = random_metric(z.t, rng, 1 + rng() % 4);
    ASSERT_TRUE(check_vcat(*m).ok());
    for (const auto& g : z.tb) EXPECT_TRUE(check_vcat(induce(g, *m)).ok());
  }
}

TEST(ChangeOfBase, FunctorsAndLambda) {
  auto v = boolean(3);
  std::mt19937 rng(13);
  auto collapse = thin_nfold(v, v, {T, T}, 3);
  for (int trial = 0; trial < 10; ++trial) {
    auto a = random_preorder(v, rng, 1 + rng() % 3);
    auto b = random_preorder(v, rng, 1 + rng() % 3);
    for (const auto& f : {identity_nfold(v), collapse}) {
      auto id = identity_vfunctor(a);
      auto fid = induce_on_functor(f, id);
      EXPECT_TRUE(same_vfunctor(fid, identity_vfunctor(fid.source)));
      EXPECT_TRUE(check_vfunctor(fid).ok());
      for (int i = 1; i <= 2; ++i) {
        auto lam = induced_lambda(f, *a, *b, i);
        EXPECT_TRUE(check_vfunctor(lam).ok()) << i;
        EXPECT_EQ(lam.source->size(), a->size() * b->size());
      }
    }
    // A monotone map into the codiscrete preorder and its image.
    std::vector<std::size_t> to_first(a->size(), 0);
    std::vector<ObjId> all(b->size() * b->size(), T);
    auto top = std::make_shared<VCat>(thin_vcat("top", v, b->objects, all));
    std::vector<std::size_t> om(a->size());
    for (auto& o : om) o = rng() % b->size();
    auto t = thin_vfunctor(a, top, om);
    auto u = thin_vfunctor(top, top, std::vector<std::size_t>(b->size(), 0));
    auto lhs = induce_on_functor(collapse, compose_vfunctors(u, t));
    auto rhs = compose_vfunctors(induce_on_functor(collapse, u), induce_on_functor(collapse, t));
    EXPECT_TRUE(same_vfunctor(lhs, rhs));
  }
  EXPECT_THROW(induced_lambda(collapse, *random_preorder(v, rng, 2), *random_preorder(v, rng, 2), 3), Error);
}

TEST(HomFunctor, SetsAndLambdas) {
  auto v = boolean(3);
  auto h = hom_functor(v);
  EXPECT_TRUE(h.at(F).empty());
  ASSERT_EQ(h.at(T).size(), 1u);
  EXPECT_EQ(h.at(T)[0], v->cat().identity(T));
  EXPECT_EQ(h.lambda(2, h.at(T)[0], h.at(T)[0]), tensor_mor(*v, 2, h.at(T)[0], h.at(T)[0]));
  EXPECT_TRUE(check_hom_functor(h).ok());
  EXPECT_TRUE(check_hom_functor(hom_functor(tropical())).ok());
  auto fs = finset();
  auto hf = hom_functor(fs);
  ObjId one = *fs->cat().find_object("1");
  EXPECT_EQ(hf.at(one), std::vector<MorId>{fs->cat().identity(one)});
  EXPECT_TRUE(check_hom_functor(hf).ok());
}

TEST(Underlying, UnitAndPreorders) {
  auto v = boolean(3);
  EXPECT_TRUE(terminal(underlying_category(vcat_unit(v))));
  std::mt19937 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    auto a = random_preorder(v, rng, 1 + rng() % 5);
    FinCat u = underlying_category(*a);
    EXPECT_TRUE(check_category_axioms(u).ok());
    EXPECT_TRUE(u.is_thin());
    for (ObjId x = 0; x < a->size(); ++x)
      for (ObjId y = 0; y < a->size(); ++y) EXPECT_EQ(u.hom(x, y).size(), a->hom(x, y) == T ? 1u : 0u);
    EXPECT_TRUE(same_tables(u, representable_category(*a)));
    EXPECT_TRUE(same_tables(u, underlying_tower(*encat_from_vcat(*a), 1)));
  }
}

TEST(Underlying, MetricSpacesMatchRepresentable) {
  auto v = tropical();
  std::mt19937 rng(19);
  for (int trial = 0; trial < 10; ++trial) {
    auto m = random_metric(v, rng, 1 + rng() % 4);
    FinCat u = underlying_category(*m);
    EXPECT_TRUE(check_category_axioms(u).ok());
    EXPECT_TRUE(same_tables(u, representable_category(*m)));
  }
}

TEST(Underlying, TensorIsTheProduct) {
  auto v = boolean(3);
  std::mt19937 rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    auto a = random_preorder(v, rng, 1 + rng() % 3), b = random_preorder(v, rng, 1 + rng() % 3);
    FinCat ab = underlying_category(tensor_vcat(*a, *b, 1));
    FinCat prod = product(underlying_category(*a), underlying_category(*b));
    ASSERT_EQ(ab.num_objects(), prod.num_objects());
    for (ObjId p = 0; p < ab.num_objects(); ++p)
      for (ObjId q = 0; q < ab.num_objects(); ++q) EXPECT_EQ(ab.hom(p, q).size(), prod.hom(p, q).size());
  }
}

TEST(Underlying, TowersOfUnits) {
  auto v = boolean(3);
  for (int n = 1; n <= 3; ++n)
    for (int s = 1; s <= n; ++s) EXPECT_TRUE(terminal(underlying_tower(*unit_tower(v, n), s))) << n << s;
  EXPECT_THROW(underlying_tower(*unit_tower(v, 2), 3), Error);
}

TEST(Underlying, TwoPreorderDoesNotDependOnSteps) {
  auto v = boolean(3);
  auto chain = [&](std::vector<std::string> objs) {
    std::size_t n = objs.size();
    std::vector<ObjId> homs;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) homs.push_back(i <= j ? T : F);
    return encat_from_vcat(thin_vcat("chain", v, std::move(objs), homs));
  };
  auto one = chain({"1"}), none = chain({});
  std::vector<EnCatPtr> homs{one, chain({"f", "f'"}), chain({"h0", "h1", "h2"}), none, one, chain({"g", "g'"}),
                             none, none, one};
  std::vector<std::vector<std::size_t>> maps;
  for (std::size_t x = 0; x < 3; ++x)
    for (std::size_t y = 0; y < 3; ++y)
      for (std::size_t z = 0; z < 3; ++z) {
        std::vector<std::size_t> m;
        for (std::size_t p = 0; p < homs[y * 3 + z]->size(); ++p)
          for (std::size_t q = 0; q < homs[x * 3 + y]->size(); ++q) m.push_back(p + q);
        maps.push_back(m);
      }
  auto P = thin_2cat("P", v, {"a", "b", "c"}, homs, maps, {0, 0, 0});
  FinCat u1 = underlying_tower(*P, 1), u2 = underlying_tower(*P, 2);
  EXPECT_TRUE(same_tables(u1, u2));
  EXPECT_TRUE(check_category_axioms(u1).ok());
  ObjId a = 0, c = 2;
  EXPECT_EQ(u1.hom(a, c).size(), 3u);
  MorId f = *u1.find_morphism("a->b:f/1_T"), g = *u1.find_morphism("b->c:g/1_T");
  EXPECT_EQ(u1.mor_name(compose(u1, g, f)), "a->c:h0/1_T");
}
