#include "itercat/corpus.hpp"

#include "itercat/error.hpp"

namespace itercat {

namespace {

constexpr ObjId F = 0, T = 1;

MonoidalValue boolean_value() {
  auto v = std::make_shared<IteratedMonoidalCat>(boolean_symmetric(3));
  v->name = "boolean";
  return {v, boolean_symmetry(*v)};
}

MonoidalPtr bind_boolean(Workspace& ws) {
  auto b = boolean_value();
  ws.bind("boolean", b);
  return b.v;
}

MonoidalPtr bind_tropical(Workspace& ws) {
  auto t = std::make_shared<const IteratedMonoidalCat>(tropical_chain(3));
  ws.bind("tropical", MonoidalValue{t, std::nullopt});
  return t;
}

VCatPtr bind_vcat(Workspace& ws, const std::string& name, VCat a) {
  a.name = name;
  auto p = std::make_shared<const VCat>(std::move(a));
  ws.bind(name, p);
  return p;
}

// Tropical hom objects from a distance table.
VCat metric(const MonoidalPtr& v, std::vector<std::string> labels, const std::vector<ObjId>& d) {
  return thin_vcat("metric", v, std::move(labels), d);
}

void preorders(Workspace& ws) {
  auto v = bind_boolean(ws);
  auto chain3 = bind_vcat(ws, "chain3", boolean_chain(v, {"a", "b", "c"}));
  bind_vcat(ws, "discrete2", thin_vcat("", v, {"p", "q"}, {T, F, F, T}));
  bind_vcat(ws, "codiscrete2", thin_vcat("", v, {"p", "q"}, {T, T, T, T}));
  // bottom <= left, right <= top
  bind_vcat(ws, "diamond", thin_vcat("", v, {"bot", "l", "r", "top"},
                                     {T, T, T, T,  //
                                      F, T, F, T,  //
                                      F, F, T, T,  //
                                      F, F, F, T}));
  auto low = std::make_shared<const VFunctor>(thin_vfunctor(chain3, chain3, {0, 0, 0}));
  auto id = std::make_shared<const VFunctor>(identity_vfunctor(chain3));
  ws.bind("low", low);
  ws.bind("id3", id);
  auto el = ws.enfunctor("low"), ei = ws.enfunctor("id3");
  MorId yes = v->cat().identity(T);
  ws.bind("low_to_id", make_2cell(el, ei, {Point{0, {}, yes}, Point{0, {}, yes}, Point{0, {}, yes}}));
}

void metrics(Workspace& ws) {
  auto v = bind_tropical(ws);
  // p - q - r at distance 1, p - r at distance 2.
  bind_vcat(ws, "line3", metric(v, {"p", "q", "r"}, {0, 1, 2, 1, 0, 1, 2, 1, 0}));
  // Asymmetric: 3 one way, 1 back.
  bind_vcat(ws, "hill", metric(v, {"u", "w"}, {0, 3, 1, 0}));
  bind_vcat(ws, "far", metric(v, {"s", "t"}, {0, 3, 3, 0}));
}

void change(Workspace& ws) {
  auto b = bind_boolean(ws);
  auto t = bind_tropical(ws);
  auto mf = [&](const std::string& name, NFoldMonoidalFunctor f) {
    ws.bind(name, std::make_shared<const NFoldMonoidalFunctor>(std::move(f)));
  };
  mf("id_boolean", identity_nfold(b));
  mf("collapse", thin_nfold(b, b, {T, T}, 3));
  mf("embed", thin_nfold(b, t, {2, 0}, 2));
  mf("detect", thin_nfold(t, b, {T, F, F, F}, 2));
  auto chain2 = bind_vcat(ws, "chain2", boolean_chain(b, {"a", "b"}));
  bind_vcat(ws, "line3", metric(t, {"p", "q", "r"}, {0, 1, 2, 1, 0, 1, 2, 1, 0}));
  ws.bind("to_b", std::make_shared<const VFunctor>(thin_vfunctor(chain2, chain2, {1, 1})));
}

void two_preorder(Workspace& ws) {
  auto v = bind_boolean(ws);
  auto level1 = [&](const std::string& name, std::vector<std::string> labels) {
    bind_vcat(ws, name, boolean_chain(v, std::move(labels)));
    return ws.encat(name);
  };
  auto one = level1("one", {"1"});
  auto empty = level1("empty", {});
  auto ab = level1("ab", {"f", "f'"});
  auto bc = level1("bc", {"g", "g'"});
  auto ac = level1("ac", {"h0", "h1", "h2"});
  auto xy = level1("xy", {"u"});
  auto P = additive_2cat("P", v, {"a", "b", "c"}, {one, ab, ac, empty, one, bc, empty, empty, one});
  auto D = additive_2cat("D", v, {"x", "y"}, {one, xy, empty, one});
  ws.bind("P", P);
  ws.bind("D", D);
  auto I2 = unit_tower(v, 2);
  ws.bind("I1", I2->homs[0]);
  ws.bind("I2", I2);

  ws.bind("id", identity_functor(P));
  ws.bind("to_a", thin_2functor(P, P, {0, 0, 0}, {{0}, {0, 0}, {0, 0, 0}, {}, {0}, {0, 0}, {}, {}, {0}}));
  for (std::size_t p = 0; p < 3; ++p) ws.bind("p" + P->objects[p], thin_2functor(I2, P, {p}, {{0}}));
  ws.bind("fx", thin_2functor(D, P, {0, 1}, {{0}, {0}, {}, {0}}));
  ws.bind("fx1", thin_2functor(D, P, {0, 1}, {{0}, {1}, {}, {0}}));
  ws.bind("gx", thin_2functor(D, P, {0, 2}, {{0}, {0}, {}, {0}}));
  ws.bind("pick_y", thin_2functor(I2, D, {1}, {{0}}));

  MorId yes = v->cat().identity(T);
  auto pt = [&](std::size_t w) { return Point{1, {w}, yes}; };
  auto two = [&](const std::string& name, const std::string& s, const std::string& t,
                 std::vector<Point> comps) {
    ws.bind(name, make_2cell(ws.enfunctor(s), ws.enfunctor(t), std::move(comps)));
  };
  two("t_f", "pa", "pb", {pt(0)});
  two("t_f1", "pa", "pb", {pt(1)});
  two("t_g", "pb", "pc", {pt(0)});
  two("t_g1", "pb", "pc", {pt(1)});
  two("alpha", "fx", "gx", {pt(0), pt(0)});
  auto three = [&](const std::string& name, const std::string& s, const std::string& t) {
    ws.bind(name, make_kcell(ws.kcell(s), ws.kcell(t), {Point{0, {}, yes}}));
  };
  three("m_f", "t_f", "t_f1");
  three("m_g", "t_g", "t_g1");
  three("m_g_id", "t_g", "t_g");
}

}  // namespace

VCat boolean_chain(const MonoidalPtr& v, std::vector<std::string> labels) {
  std::size_t n = labels.size();
  std::vector<ObjId> homs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) homs.push_back(i <= j ? T : F);
  return thin_vcat("chain", v, std::move(labels), homs);
}

EnCatPtr additive_2cat(std::string name, const MonoidalPtr& v, std::vector<std::string> objects,
                       std::vector<EnCatPtr> homs) {
  std::size_t n = objects.size();
  std::vector<std::vector<std::size_t>> maps;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        std::size_t nq = homs[x * n + y]->size(), np = homs[y * n + z]->size();
        std::vector<std::size_t> m;
        for (std::size_t p = 0; p < np; ++p)
          for (std::size_t q = 0; q < nq; ++q) m.push_back(p + q);
        maps.push_back(m);
      }
  return thin_2cat(std::move(name), v, std::move(objects), std::move(homs), maps, std::vector<std::size_t>(n, 0));
}

std::vector<std::string> bundled_files() {
  return {"boolean", "tropical", "finset", "preorders", "metric", "change", "twopreorder"};
}

Workspace bundled(const std::string& file) {
  Workspace ws;
  if (file == "boolean") {
    bind_boolean(ws);
  } else if (file == "tropical") {
    bind_tropical(ws);
  } else if (file == "finset") {
    auto s = finset_skeleton({1, 2, 3, 4});
    ws.bind("finset", MonoidalValue{std::make_shared<const IteratedMonoidalCat>(s.monoidal), s.symmetry});
  } else if (file == "preorders") {
    preorders(ws);
  } else if (file == "metric") {
    metrics(ws);
  } else if (file == "change") {
    change(ws);
  } else if (file == "twopreorder") {
    two_preorder(ws);
  } else {
    throw Error(ErrorKind::DanglingReference, "no bundled file " + file);
  }
  return ws;
}

std::string export_workspace(const Workspace& ws) {
  std::vector<std::string> names;
  for (const auto& b : ws.bindings()) names.push_back(b.name);
  return export_bindings(ws, names);
}

}  // namespace itercat
