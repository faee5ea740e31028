#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "itercat/corpus.hpp"
#include "itercat/error.hpp"

using namespace itercat;

namespace {

constexpr ObjId F = 0, T = 1;

std::string read(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string data(const std::string& name) { return std::string(ITERCAT_DATA_DIR) + "/" + name + ".cat"; }

bool same_monoidal(const IteratedMonoidalCat& a, const IteratedMonoidalCat& b) {
  return same_tables(a.cat(), b.cat()) && a.unit == b.unit && a.fold == b.fold && a.partial == b.partial &&
         a.products == b.products && a.associators == b.associators && a.interchanges == b.interchanges;
}

bool same_vcat_tables(const VCat& a, const VCat& b) {
  return a.objects == b.objects && a.homs == b.homs && a.comps == b.comps && a.units == b.units;
}

// Runs `text` through load_text and returns the error it raises.
std::optional<Error> load_error(const std::string& text, Workspace ws = {}) {
  try {
    load_text(ws, text, "mem");
  } catch (const Error& e) {
    return e;
  }
  return std::nullopt;
}

const char* kBooleanBase = R"(monoidal boolean
object F T
le F T
unit T
product 1
obj F F = F
obj F T = F
obj T F = F
obj T T = T
thin
end
)";

}  // namespace

TEST(Format, BundledFilesAreCanonical) {
  for (const auto& name : bundled_files()) {
    std::string text = read(data(name));
    ASSERT_FALSE(text.empty()) << name;
    EXPECT_EQ(export_workspace(bundled(name)), text) << name << " is out of date with its builders";
    Workspace ws;
    load_file(ws, data(name));
    EXPECT_EQ(export_workspace(ws), text) << name;
    EXPECT_EQ(ws.bindings().size(), bundled(name).bindings().size());
  }
}

TEST(Format, SingleBindingFiles) {
  Workspace b;
  load_file(b, data("boolean"));
  ASSERT_EQ(b.bindings().size(), 1u);
  EXPECT_EQ(kind_of(b.bindings()[0].value), "monoidal");
  EXPECT_EQ(b.monoidal("boolean")->fold, 3);

  Workspace t;
  load_file(t, data("tropical"));
  ASSERT_EQ(t.bindings().size(), 1u);
  EXPECT_EQ(t.monoidal("tropical")->fold, 2);
  EXPECT_TRUE(same_monoidal(*t.monoidal("tropical"), tropical_chain(3)));
}

TEST(Format, LoadedValuesMatchTheBuilders) {
  Workspace ws;
  load_file(ws, data("twopreorder"));
  Workspace ref = bundled("twopreorder");
  for (const auto& b : ref.bindings()) {
    const Binding& l = ws.at(b.name);
    ASSERT_EQ(kind_of(l.value), kind_of(b.value)) << b.name;
    if (auto* k = std::get_if<KCellPtr>(&b.value)) {
      EXPECT_TRUE(same_kcell(**k, *ws.kcell(b.name))) << b.name;
    } else if (std::holds_alternative<EnFunPtr>(b.value)) {
      EXPECT_TRUE(same_functor(*ref.enfunctor(b.name), *ws.enfunctor(b.name))) << b.name;
    } else if (!std::holds_alternative<MonoidalValue>(b.value)) {
      EXPECT_TRUE(same_cat(*ref.encat(b.name), *ws.encat(b.name))) << b.name;
    }
  }
  EXPECT_TRUE(check_enriched_cat(*ws.encat("P")).ok());
  EXPECT_TRUE(check_kcell(*ws.kcell("m_f")).ok());
  // Shared hom categories stay shared.
  EXPECT_EQ(ws.encat("P")->hom_ptr(0, 0), ws.encat("one"));
}

TEST(Format, ExportIsSelfContained) {
  Workspace ws;
  load_file(ws, data("twopreorder"));
  std::string text = export_binding(ws, "m_f");
  Workspace fresh;
  auto names = load_text(fresh, text, "m_f");
  EXPECT_EQ(names.back(), "m_f");
  EXPECT_TRUE(same_kcell(*fresh.kcell("m_f"), *ws.kcell("m_f")));
  EXPECT_EQ(export_binding(fresh, "m_f"), text);
  EXPECT_EQ(names.front(), "boolean");
}

TEST(Format, UnboundDependenciesGetDerivedNames) {
  Workspace ws;
  load_file(ws, data("twopreorder"));
  auto t = tensor_tower(ws.encat("P"), ws.encat("D"), 1);
  ws.bind("PD", t);
  std::string text = export_binding(ws, "PD");
  EXPECT_EQ(text.rfind("monoidal boolean", 0), 0u);
  EXPECT_NE(text.find("encat PD.vcat"), std::string::npos);
  EXPECT_NE(text.find("encat PD level 2 over boolean"), std::string::npos);
  Workspace fresh;
  load_text(fresh, text, "PD");
  EXPECT_TRUE(same_cat(*fresh.encat("PD"), *t));
  EXPECT_EQ(export_binding(fresh, "PD"), text);
}

TEST(Format, HigherLevelsAreNotWritten) {
  Workspace ws;
  load_file(ws, data("boolean"));
  ws.bind("I3", unit_tower(ws.monoidal("boolean"), 3));
  try {
    export_binding(ws, "I3");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ShapeMismatch);
  }
}

TEST(Format, ErrorsCarryLineNumbers) {
  auto e = load_error(std::string(kBooleanBase) + "vcat A over boolean\nobject a\nhom a b = T\nend\n");
  ASSERT_TRUE(e);
  EXPECT_EQ(e->kind(), ErrorKind::DanglingReference);
  EXPECT_NE(std::string(e->what()).find("mem:14"), std::string::npos) << e->what();

  e = load_error("vcat A over nowhere\nend\n");
  ASSERT_TRUE(e);
  EXPECT_EQ(e->kind(), ErrorKind::DanglingReference);
  EXPECT_NE(std::string(e->what()).find("mem:1"), std::string::npos);

  e = load_error("category C\nobject a\nmorphism f : a -> b\nend\n");
  ASSERT_TRUE(e);
  EXPECT_EQ(e->kind(), ErrorKind::DanglingReference);
  EXPECT_NE(std::string(e->what()).find("mem:3"), std::string::npos);

  e = load_error("category C\nobject a\n");
  ASSERT_TRUE(e);
  EXPECT_EQ(e->kind(), ErrorKind::ParseError);

  e = load_error("category C\nobject a\nmorphism f a a\nend\n");
  ASSERT_TRUE(e);
  EXPECT_EQ(e->kind(), ErrorKind::ParseError);
  EXPECT_NE(std::string(e->what()).find("mem:3"), std::string::npos);

  e = load_error("widget W\nend\n");
  ASSERT_TRUE(e);
  EXPECT_EQ(e->kind(), ErrorKind::ParseError);
}

TEST(Format, DuplicateNames) {
  auto e = load_error("category C\nobject a\nidentity a = 1\nend\n");
  ASSERT_TRUE(e);
  EXPECT_EQ(e->kind(), ErrorKind::DanglingReference);

  e = load_error("category C\nobject a a\nend\n");
  ASSERT_TRUE(e);
  EXPECT_EQ(e->kind(), ErrorKind::DuplicateName);

  e = load_error("category C\npreorder\nobject a\nend\ncategory C\npreorder\nend\n");
  ASSERT_TRUE(e);
  EXPECT_EQ(e->kind(), ErrorKind::DuplicateName);
  EXPECT_NE(std::string(e->what()).find("mem:5"), std::string::npos);

  Workspace ws;
  load_file(ws, data("boolean"));
  e = load_error(read(data("boolean")), ws);
  ASSERT_TRUE(e);
  EXPECT_EQ(e->kind(), ErrorKind::DuplicateName);
}

TEST(Format, CompositionRowsPutTheOuterMorphismFirst) {
  Workspace ws;
  load_text(ws,
            "category C\nobject a b c\nmorphism 1a : a -> a\nmorphism 1b : b -> b\nmorphism 1c : c -> c\n"
            "morphism f : a -> b\nmorphism g : b -> c\nmorphism h : a -> c\n"
            "identity a = 1a\nidentity b = 1b\nidentity c = 1c\n"
            "g ; f = h\nf ; 1a = f\n1b ; f = f\ng ; 1b = g\n1c ; g = g\nh ; 1a = h\n1c ; h = h\n"
            "1a ; 1a = 1a\n1b ; 1b = 1b\n1c ; 1c = 1c\nend\n",
            "mem");
  const Binding& b = ws.at("C");
  const FinCat& c = *std::get<FinCatPtr>(b.value);
  EXPECT_EQ(compose(c, *c.find_morphism("g"), *c.find_morphism("f")), *c.find_morphism("h"));
  EXPECT_TRUE(check_category_axioms(c).ok());
  // f ; g does not typecheck in that order.
  auto e = load_error("category C\nobject a b c\nmorphism f : a -> b\nmorphism g : b -> c\nmorphism h : a -> c\n"
                      "f ; g = h\nend\n");
  ASSERT_TRUE(e);
  EXPECT_EQ(e->kind(), ErrorKind::NonComposable);
}

TEST(Format, MonoidalShorthands) {
  Workspace ws;
  load_text(ws, kBooleanBase, "mem");
  const IteratedMonoidalCat& one = *ws.monoidal("boolean");
  EXPECT_TRUE(same_monoidal(one, boolean_poset(1)));

  // The identity associator and the symmetric lift reproduce the builder.
  std::string lifted = R"(monoidal lifted
object F T
le F T
unit T
product 1
obj F F = F
obj F T = F
obj T F = F
obj T T = T
mor 1_F 1_F = 1_F
mor 1_F F->T = 1_F
mor 1_F 1_T = 1_F
mor F->T 1_F = 1_F
mor F->T F->T = F->T
mor F->T 1_T = F->T
mor 1_T 1_F = 1_F
mor 1_T F->T = F->T
mor 1_T 1_T = 1_T
associator 1 identity
symmetry
at F F = 1_F
at F T = 1_F
at T F = 1_F
at T T = 1_T
from_symmetric 3
end
)";
  load_text(ws, lifted, "mem");
  EXPECT_TRUE(same_monoidal(*ws.monoidal("lifted"), boolean_symmetric(3)));
  EXPECT_TRUE(check_kfold_axioms(*ws.monoidal("lifted")).ok());

  auto e = load_error("monoidal M\nobject F T\nle F T\nunit T\nproduct 1\nobj F F = F\nobj F T = T\nobj T F = T\n"
                      "obj T T = T\nassociator 1 identity\nsymmetry\nfrom_symmetric 2\nend\n");
  ASSERT_TRUE(e);
  EXPECT_EQ(e->kind(), ErrorKind::InvalidSymmetry) << e->what();
}

TEST(Format, StrictUnitsAreEnforcedOnLoad) {
  // ∨ with unit T is not unital.
  std::string text = "monoidal M\nobject F T\nle F T\nunit T\nproduct 1\nobj F F = F\nobj F T = T\nobj T F = T\n"
                     "obj T T = T\nthin\nend\n";
  auto e = load_error(text);
  ASSERT_TRUE(e);
  EXPECT_EQ(e->kind(), ErrorKind::MissingEntry);
  EXPECT_NE(std::string(e->what()).find("unit row"), std::string::npos);
  Workspace ws;
  LoadOptions lax;
  lax.validate = false;
  EXPECT_NO_THROW(load_text(ws, text, "mem", lax));
  EXPECT_FALSE(check_kfold_axioms(*ws.monoidal("M")).ok());
}

TEST(Format, ThinShorthandsMatchExplicitTables) {
  Workspace ws;
  load_file(ws, data("twopreorder"));
  std::string text = R"(encat Q level 2 over boolean
object a b c
hom a a = one
hom a b = ab
hom a c = ac
hom b a = empty
hom b b = one
hom b c = bc
hom c a = empty
hom c b = empty
hom c c = one
comp a a a obj 1 1 = 1
comp a a b obj f 1 = f
comp a a b obj f' 1 = f'
comp a a c obj h0 1 = h0
comp a a c obj h1 1 = h1
comp a a c obj h2 1 = h2
comp a b b obj 1 f = f
comp a b b obj 1 f' = f'
comp a b c obj g f = h0
comp a b c obj g f' = h1
comp a b c obj g' f = h1
comp a b c obj g' f' = h2
comp a c c obj 1 h0 = h0
comp a c c obj 1 h1 = h1
comp a c c obj 1 h2 = h2
comp b b b obj 1 1 = 1
comp b b c obj g 1 = g
comp b b c obj g' 1 = g'
comp b c c obj 1 g = g
comp b c c obj 1 g' = g'
comp c c c obj 1 1 = 1
unit a obj = 1
unit b obj = 1
unit c obj = 1
thin
end
)";
  load_text(ws, text, "mem");
  EXPECT_TRUE(same_cat(*ws.encat("Q"), *ws.encat("P")));

  load_text(ws, "enfunctor to_a2 : P -> P\nobj a = a\nobj b = a\nobj c = a\nthin\n"
                "hom a b obj f = 1\nhom a b obj f' = 1\nhom a c obj h0 = 1\nhom a c obj h1 = 1\n"
                "hom a c obj h2 = 1\nhom b c obj g = 1\nhom b c obj g' = 1\nhom a a obj 1 = 1\n"
                "hom b b obj 1 = 1\nhom c c obj 1 = 1\nend\n",
            "mem");
  EXPECT_TRUE(same_functor(*ws.enfunctor("to_a2"), *ws.enfunctor("to_a")));

  auto e = load_error("encat R level 2 over boolean\nobject a\nhom a a = one\nend\n", std::move(ws));
  ASSERT_TRUE(e);
  EXPECT_EQ(e->kind(), ErrorKind::MissingEntry);
}

TEST(Format, KCellComponentsAreResolvedInTheirCategory) {
  Workspace ws;
  load_file(ws, data("twopreorder"));
  load_text(ws, "kcell t_h : pa => pc\nat 0 = h1/1_T\nend\n", "mem");
  EXPECT_TRUE(check_kcell(*ws.kcell("t_h")).ok());
  EXPECT_EQ(ws.kcell("t_h")->components[0].chain, std::vector<std::size_t>{1});
  auto e = load_error("kcell bad : pa => pc\nat 0 = f/1_T\nend\n", ws);
  ASSERT_TRUE(e);
  EXPECT_EQ(e->kind(), ErrorKind::DanglingReference);
  EXPECT_NE(std::string(e->what()).find("mem:2"), std::string::npos);
  e = load_error("kcell bad : pa => pc\nend\n", ws);
  ASSERT_TRUE(e);
  EXPECT_EQ(e->kind(), ErrorKind::MissingEntry);
  e = load_error("kcell bad : t_f => t_g\nat 0 = 1_T\nend\n", ws);
  ASSERT_TRUE(e);
  EXPECT_EQ(e->kind(), ErrorKind::BoundaryMismatch);
}

TEST(Format, MonoidalFunctorBlocks) {
  Workspace ws;
  load_file(ws, data("change"));
  load_text(ws, "monoidal-functor embed2 : boolean -> tropical\nobj F = 2\nobj T = 0\nthin 2\nend\n", "mem");
  EXPECT_TRUE(same_nfold(*ws.mfunctor("embed2"), *ws.mfunctor("embed")));
  EXPECT_TRUE(check_nfold_functor(*ws.mfunctor("embed")).ok());
  auto e = load_error("monoidal-functor bad : boolean -> tropical\nobj F = 2\nobj T = 0\nlambda 3 T T = 1_0\nend\n", ws);
  ASSERT_TRUE(e);
  EXPECT_EQ(e->kind(), ErrorKind::IndexOutOfRange);
}

TEST(Format, RandomPreordersRoundTrip) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    Workspace ws;
    load_file(ws, data("boolean"));
    auto v = ws.monoidal("boolean");
    std::size_t n = rng() % 5;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("o" + std::to_string(i));
    std::vector<ObjId> homs;
    for (std::size_t i = 0; i < n * n; ++i) homs.push_back(rng() % 2 ? T : F);
    auto a = std::make_shared<const VCat>(thin_vcat("R", v, labels, homs));
    ws.bind("R", a);
    std::string text = export_binding(ws, "R");
    Workspace fresh;
    load_text(fresh, text, "R");
    EXPECT_TRUE(same_vcat_tables(*fresh.vcat("R"), *a));
    EXPECT_EQ(check_vcat(*fresh.vcat("R")).to_lines(), check_vcat(*a).to_lines());
    EXPECT_EQ(export_binding(fresh, "R"), text);
  }
}
