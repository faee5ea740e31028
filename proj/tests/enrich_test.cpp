#include <gtest/gtest.h>

#include <random>

#include "itercat/enrich.hpp"
#include "itercat/error.hpp"

using namespace itercat;

namespace {

constexpr ObjId F = 0, T = 1;

MonoidalPtr boolean(int k) { return std::make_shared<IteratedMonoidalCat>(boolean_poset(k)); }

std::vector<std::string> labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::string(1, static_cast<char>('a' + i)));
  return out;
}

VCatPtr preorder(MonoidalPtr v, std::size_t n, const std::vector<bool>& rel) {
  std::vector<ObjId> homs;
  for (bool r : rel) homs.push_back(r ? T : F);
  return std::make_shared<VCat>(thin_vcat("P", v, labels(n), homs));
}

bool reflexive_transitive(std::size_t n, const std::vector<bool>& rel) {
  for (std::size_t a = 0; a < n; ++a) {
    if (!rel[a * n + a]) return false;
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (rel[a * n + b] && rel[b * n + c] && !rel[a * n + c]) return false;
  }
  return true;
}

std::vector<bool> closure(std::size_t n, std::vector<bool> rel) {
  for (std::size_t a = 0; a < n; ++a) rel[a * n + a] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (rel[a * n + k] && rel[k * n + b]) rel[a * n + b] = true;
  return rel;
}

std::vector<bool> random_relation(std::mt19937& rng, std::size_t n, unsigned density) {
  std::vector<bool> rel(n * n);
  for (std::size_t p = 0; p < n * n; ++p) rel[p] = rng() % 10 < density;
  return rel;
}

}  // namespace

TEST(VCat, UnitCategoryPasses) {
  auto v = boolean(2);
  auto u = vcat_unit(v);
  EXPECT_EQ(u.size(), 1u);
  EXPECT_EQ(u.hom(0, 0), v->unit);
  EXPECT_EQ(u.comp(0, 0, 0), v->cat().identity(v->unit));
  EXPECT_TRUE(check_vcat(u).ok());
}

TEST(VCat, BooleanPreordersMatchRelationalOracle) {
  auto v = boolean(3);
  std::mt19937 rng(11);
  int passing = 0;
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 1 + rng() % 5;
    auto rel = random_relation(rng, n, 6);
    if (trial % 2 == 0) rel = closure(n, rel);
    auto a = preorder(v, n, rel);
    bool expected = reflexive_transitive(n, rel);
    auto r = check_vcat(*a);
    EXPECT_EQ(r.ok(), expected) << r.to_text();
    passing += expected;
  }
  EXPECT_GT(passing, 20);
}

TEST(VCat, NonTransitiveRelationReportsMissingComposite) {
  auto v = boolean(2);
  auto a = preorder(v, 3, {true, true, false, false, true, true, false, false, true});
  auto r = check_vcat(*a);
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.findings().front().axiom, "comp.missing");
  EXPECT_NE(r.to_text().find("M_{a,b,c}"), std::string::npos);
}

TEST(VCat, TropicalTriangleInequality) {
  // Over the tropical chain a VCat is a distance table truncated at 3 obeying
  // d(a,a) = 0 and d(a,c) <= d(a,b) + d(b,c).
  auto v = std::make_shared<IteratedMonoidalCat>(tropical_chain());
  std::mt19937 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 1 + rng() % 4;
    std::vector<ObjId> d(n * n);
    for (std::size_t p = 0; p < n * n; ++p) d[p] = rng() % 4;
    if (trial % 2) {
      for (std::size_t a = 0; a < n; ++a) d[a * n + a] = 0;
    }
    bool metric = true;
    for (std::size_t a = 0; a < n; ++a) {
      metric = metric && d[a * n + a] == 0;
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          metric = metric && d[a * n + c] <= std::min<ObjId>(3, d[a * n + b] + d[b * n + c]);
    }
    auto a = thin_vcat("D", v, labels(n), d);
    EXPECT_EQ(check_vcat(a).ok(), metric);
  }
}

TEST(TensorVCat, BooleanProductIsProductPreorder) {
  auto v = boolean(3);
  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t na = 1 + rng() % 3, nb = 1 + rng() % 3;
    auto ra = closure(na, random_relation(rng, na, 3));
    auto rb = closure(nb, random_relation(rng, nb, 3));
    auto a = preorder(v, na, ra), b = preorder(v, nb, rb);
    for (int i = 1; i <= 2; ++i) {
      auto p = tensor_vcat(*a, *b, i);
      ASSERT_TRUE(check_vcat(p).ok());
      for (std::size_t x = 0; x < na * nb; ++x)
        for (std::size_t y = 0; y < na * nb; ++y) {
          bool both = ra[(x / nb) * na + y / nb] && rb[(x % nb) * nb + y % nb];
          EXPECT_EQ(p.hom(x, y), both ? T : F);
        }
    }
    EXPECT_EQ(tensor_vcat(*a, *b, 1).objects[0], "(a,a)");
  }
}

TEST(TensorVCat, TropicalProductUsesMaxDistance) {
  auto v = std::make_shared<IteratedMonoidalCat>(tropical_chain());
  auto a = thin_vcat("A", v, {"p", "q"}, {0, 2, 1, 0});
  auto b = thin_vcat("B", v, {"r", "s"}, {0, 3, 3, 0});
  ASSERT_TRUE(check_vcat(a).ok());
  auto p = tensor_vcat(a, b, 1);
  EXPECT_TRUE(check_vcat(p).ok());
  EXPECT_EQ(p.hom(0, 3), 3u);
  EXPECT_EQ(p.hom(0, 2), 2u);
  EXPECT_THROW(tensor_vcat(a, b, 2), Error);
}

TEST(TensorVCat, UnitIsStrict) {
  auto v = boolean(2);
  auto a = preorder(v, 3, closure(3, {false, true, false, false, false, true, false, false, false}));
  auto p = tensor_vcat(*a, vcat_unit(v), 1);
  ASSERT_EQ(p.size(), 3u);
  EXPECT_EQ(p.homs, a->homs);
  EXPECT_EQ(p.comps, a->comps);
  EXPECT_EQ(p.objects[1], "(b,0)");
}

TEST(VFunctor, MonotoneMapsPassOthersFail) {
  auto v = boolean(2);
  auto chain = preorder(v, 3, closure(3, {false, true, false, false, false, true, false, false, false}));
  // a <= b <= c. Constant and order-preserving maps pass; reversal fails.
  EXPECT_TRUE(check_vfunctor(thin_vfunctor(chain, chain, {0, 0, 2})).ok());
  EXPECT_TRUE(check_vfunctor(thin_vfunctor(chain, chain, {1, 1, 1})).ok());
  EXPECT_TRUE(check_vfunctor(identity_vfunctor(chain)).ok());
  auto rev = check_vfunctor(thin_vfunctor(chain, chain, {2, 1, 0}));
  ASSERT_FALSE(rev.ok());
  EXPECT_EQ(rev.findings().front().axiom, "functor.hom.missing");
}

TEST(VFunctor, CompositionOfMonotoneMaps) {
  auto v = boolean(2);
  auto chain = preorder(v, 3, closure(3, {false, true, false, false, false, true, false, false, false}));
  auto s = thin_vfunctor(chain, chain, {0, 2, 2});
  auto t = thin_vfunctor(chain, chain, {1, 1, 2});
  auto st = compose_vfunctors(s, t);
  EXPECT_EQ(st.obj_map, (std::vector<std::size_t>{2, 2, 2}));
  EXPECT_TRUE(check_vfunctor(st).ok());
  EXPECT_TRUE(same_vfunctor(compose_vfunctors(identity_vfunctor(chain), t), t));
}

TEST(VNat, PointwiseOrderIsNatural) {
  auto v = boolean(2);
  auto chain = preorder(v, 3, closure(3, {false, true, false, false, false, true, false, false, false}));
  auto lo = thin_vfunctor(chain, chain, {0, 1, 1});
  auto hi = thin_vfunctor(chain, chain, {1, 2, 2});
  MorId jT = v->cat().identity(T);
  EXPECT_TRUE(check_vnat({lo, hi, {jT, jT, jT}}).ok());
  // hi => lo has no component at a (b is not below a): mistyped.
  EXPECT_THROW(check_vnat({hi, lo, {jT, jT, jT}}), Error);
  // Identity transformation with components j.
  EXPECT_TRUE(check_vnat({lo, lo, {chain->unit(0), chain->unit(1), chain->unit(1)}}).ok());
}

TEST(VNat, NonParallelFunctorsRejected) {
  auto v = boolean(2);
  auto one = preorder(v, 1, {true});
  auto two = preorder(v, 2, {true, true, false, true});
  auto t = thin_vfunctor(one, two, {0});
  auto s = thin_vfunctor(one, one, {0});
  try {
    check_vnat({t, s, {v->cat().identity(T)}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ShapeMismatch);
  }
}

TEST(Structure, AssociatorAndInterchangeAreFunctors) {
  auto v = boolean(3);
  std::mt19937 rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<VCatPtr> cats;
    for (int q = 0; q < 4; ++q) {
      std::size_t n = 1 + rng() % 2;
      cats.push_back(preorder(v, n, closure(n, random_relation(rng, n, 4))));
    }
    for (int i = 1; i <= 2; ++i) {
      auto assoc = vcat_associator(*cats[0], *cats[1], *cats[2], i);
      EXPECT_TRUE(check_vcat(*assoc.source).ok());
      EXPECT_TRUE(check_vfunctor(assoc).ok());
    }
    auto eta = vcat_interchange(*cats[0], *cats[1], *cats[2], *cats[3], 1, 2);
    EXPECT_TRUE(check_vfunctor(eta).ok());
  }
  auto u = vcat_unit(v);
  EXPECT_THROW(vcat_interchange(u, u, u, u, 2, 1), Error);
  EXPECT_THROW(vcat_interchange(u, u, u, u, 2, 3), Error);
}

TEST(Structure, AssociatorObjectMapRebrackets) {
  auto v = boolean(2);
  auto a = preorder(v, 2, {true, true, false, true});
  auto s = vcat_associator(*a, *a, *a, 1);
  for (std::size_t p = 0; p < s.source->size(); ++p) {
    std::string src = s.source->objects[p], tgt = s.target->objects[s.obj_map[p]];
    // ((x,y),z) -> (x,(y,z)): same letters in the same order.
    std::string ls, lt;
    for (char ch : src) if (ch >= 'a' && ch <= 'z') ls += ch;
    for (char ch : tgt) if (ch >= 'a' && ch <= 'z') lt += ch;
    EXPECT_EQ(ls, lt);
    EXPECT_EQ(src.substr(0, 2), "((");
    EXPECT_EQ(tgt.substr(tgt.size() - 2), "))");
  }
}

TEST(Structure, TensorOfFunctorsIsFunctor) {
  auto v = boolean(2);
  auto chain = preorder(v, 3, closure(3, {false, true, false, false, false, true, false, false, false}));
  auto t = thin_vfunctor(chain, chain, {0, 2, 2});
  auto s = thin_vfunctor(chain, chain, {1, 1, 2});
  auto ts = tensor_vfunctor(t, s, 1);
  EXPECT_TRUE(check_vfunctor(ts).ok());
}

TEST(Structure, SymmetricFinSetInterchangeComponent) {
  // With the lifted skeleton as base, vcat_interchange picks η^{2,3}; on unit
  // categories every component is the identity of I.
  auto s = finset_skeleton();
  auto v = std::make_shared<IteratedMonoidalCat>(from_symmetric(s.monoidal, s.symmetry, 3));
  auto u = vcat_unit(v);
  auto eta = vcat_interchange(u, u, u, u, 1, 2);
  EXPECT_EQ(eta.hom_map, std::vector<MorId>{v->cat().identity(v->unit)});
  EXPECT_TRUE(check_vfunctor(eta).ok());
}

TEST(VCat, ParallelReportsMatch) {
  auto v = boolean(2);
  std::mt19937 rng(2);
  auto a = preorder(v, 5, random_relation(rng, 5, 5));
  CheckOptions par;
  par.jobs = 8;
  EXPECT_EQ(check_vcat(*a).to_text(), check_vcat(*a, par).to_text());
}
