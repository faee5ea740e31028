#include <chrono>
#include <functional>
#include <optional>
#include <set>

#include "criteria.hpp"
#include "itercat/monoidal.hpp"

namespace acceptance {

using namespace itercat;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string line_of(const Finding& f) { return f.axiom + " " + f.locator_string() + " " + f.expected + " " + f.found; }

struct Sweep {
  std::size_t mutants = 0;
  std::size_t named = 0;
  std::size_t detected = 0;
  std::string first_problem;

  void note(const std::string& what) {
    if (first_problem.empty()) first_problem = what;
  }
};

// Deletes and retypes one component at a time; every finding must name it.
template <typename Family, typename Key>
void sweep_component(IteratedMonoidalCat& v, Family& family, const Key& key, const std::string& label, Sweep& s) {
  MorId original = family.at(key);
  std::vector<std::optional<MorId>> substitutes{std::nullopt};
  for (MorId m = 0; m < v.cat().num_morphisms(); ++m)
    if (m != original) substitutes.push_back(m);
  for (const auto& sub : substitutes) {
    if (sub) {
      family[key] = *sub;
    } else {
      family.erase(key);
    }
    CheckReport r = check_kfold_axioms(v);
    family[key] = original;
    ++s.mutants;
    bool all_named = !r.ok();
    for (const auto& f : r.findings())
      if (line_of(f).find(label) == std::string::npos) {
        all_named = false;
        s.note(label + " -> " + (sub ? v.cat().mor_name(*sub) : "deleted") + ": " + line_of(f));
        break;
      }
    if (r.ok()) s.note(label + " -> " + (sub ? v.cat().mor_name(*sub) : "deleted") + ": no findings");
    if (all_named) ++s.named;
  }
}

Sweep sweep_components(IteratedMonoidalCat v) {
  Sweep s;
  for (int i = 1; i <= v.fold; ++i) {
    auto keys = v.associators[i - 1];
    for (const auto& [k, m] : keys) sweep_component(v, v.associators[i - 1], k, alpha_label(v, i, k[0], k[1], k[2]), s);
  }
  auto families = v.interchanges;
  for (const auto& [ij, family] : families)
    for (const auto& [k, m] : family) {
      sweep_component(v, v.interchanges[ij], k, eta_label(v, ij.first, ij.second, k[0], k[1], k[2], k[3]), s);
    }
  return s;
}

// Table entries are retyped too; the findings then name the tensor terms
// that contain the entry, so only detection is required.
Sweep sweep_tables(IteratedMonoidalCat v) {
  Sweep s;
  const FinCat& c = v.cat();
  for (int i = 1; i <= v.fold; ++i)
    for (auto [f, g, fg] : v.products[i - 1].morphism_entries())
      for (MorId m = 0; m < c.num_morphisms(); ++m) {
        if (m == fg) continue;
        v.products[i - 1].set_mor(f, g, m);
        bool found = !check_kfold_axioms(v).ok();
        v.products[i - 1].set_mor(f, g, fg);
        ++s.mutants;
        if (found) ++s.detected;
        else s.note(c.mor_name(f) + " (x)_" + std::to_string(i) + " " + c.mor_name(g) + " -> " + c.mor_name(m));
      }
  return s;
}

}  // namespace

Outcome kfold_suite() {
  struct Fixture {
    std::string name;
    IteratedMonoidalCat v;
  };
  std::vector<Fixture> fixtures = {{"boolean k=3", boolean_symmetric(3)}, {"tropical m=3", tropical_chain(3)}};
  Outcome out{true, ""};
  for (auto& [name, v] : fixtures) {
    auto t0 = std::chrono::steady_clock::now();
    CheckReport r = check_kfold_axioms(v);
    double secs = seconds_since(t0);
    Sweep comp = sweep_components(v);
    Sweep table = sweep_tables(v);
    bool ok = r.ok() && secs < 5.0 && comp.named == comp.mutants && table.detected == table.mutants;
    out.pass = out.pass && ok;
    if (!out.detail.empty()) out.detail += "; ";
    out.detail += name + (r.ok() ? " passes" : " FAILS") + " in " + std::to_string(secs) + "s, " +
                  std::to_string(comp.named) + "/" + std::to_string(comp.mutants) +
                  " component mutants named exactly, " + std::to_string(table.detected) + "/" +
                  std::to_string(table.mutants) + " table mutants detected";
    if (!comp.first_problem.empty()) out.detail += " [" + comp.first_problem + "]";
    if (!table.first_problem.empty()) out.detail += " [undetected " + table.first_problem + "]";
  }
  return out;
}

// Skeleton oracle.

namespace {

using Fn = std::vector<unsigned>;

// A leg value as an explicit map between sizes; nullopt when a product is
// outside the skeleton.
struct Map {
  unsigned dom = 0, cod = 0;
  Fn f;
  bool broken = false;
};
using Leg = std::optional<Map>;

class Oracle {
 public:
  Oracle(const FinSetSkeleton& s, const IteratedMonoidalCat& v) : s_(s), v_(v) {
    for (unsigned x : s.sizes) has_.insert(x);
  }

  const FinCat& cat() const { return v_.cat(); }
  unsigned size(ObjId a) const { return s_.size(a); }
  std::optional<ObjId> object(unsigned n) const {
    for (ObjId a = 0; a < s_.sizes.size(); ++a)
      if (s_.sizes[a] == n) return a;
    return std::nullopt;
  }
  std::optional<ObjId> prod(ObjId a, ObjId b) const { return object(size(a) * size(b)); }

  Leg mor(MorId f) const { return Map{size(cat().dom(f)), size(cat().cod(f)), s_.functions[f]}; }
  Leg id(ObjId a) const {
    Fn f(size(a));
    for (unsigned x = 0; x < f.size(); ++x) f[x] = x;
    return Map{size(a), size(a), f};
  }
  Leg entry(std::optional<MorId> m) const {
    if (!m) return Map{0, 0, {}, true};
    return mor(*m);
  }
  Leg alpha(int i, ObjId u, ObjId w, ObjId x) const {
    if (!has(size(u) * size(w)) || !has(size(w) * size(x)) || !has(size(u) * size(w) * size(x))) return {};
    return entry(v_.find_alpha(i, u, w, x));
  }
  Leg eta(int i, int j, ObjId a, ObjId b, ObjId c, ObjId d) const {
    unsigned A = size(a), B = size(b), C = size(c), D = size(d);
    if (!has(A * B) || !has(C * D) || !has(A * C) || !has(B * D) || !has(A * B * C * D)) return {};
    return entry(v_.find_eta(i, j, a, b, c, d));
  }
  // Pairing of explicit maps: (x, y) -> f(x)·|cod g| + g(y).
  Leg tensor(const Leg& f, const Leg& g) const {
    if (!f || !g) return {};
    if (!has(f->dom * g->dom) || !has(f->cod * g->cod)) return {};
    if (f->broken || g->broken) return Map{0, 0, {}, true};
    Fn r(f->dom * g->dom);
    for (unsigned x = 0; x < f->dom; ++x)
      for (unsigned y = 0; y < g->dom; ++y) r[x * g->dom + y] = f->f[x] * g->cod + g->f[y];
    return Map{f->dom * g->dom, f->cod * g->cod, r};
  }
  Leg then(const Leg& first, const Leg& second) const {
    if (!first || !second) return {};
    if (first->broken || second->broken || first->cod != second->dom) return Map{0, 0, {}, true};
    Fn r(first->dom);
    for (unsigned x = 0; x < first->dom; ++x) r[x] = second->f[first->f[x]];
    return Map{first->dom, second->cod, r};
  }
  template <typename... Rest>
  Leg then(const Leg& a, const Leg& b, const Rest&... rest) const {
    return then(then(a, b), rest...);
  }

  bool has(unsigned n) const { return has_.count(n) > 0; }

 private:
  const FinSetSkeleton& s_;
  const IteratedMonoidalCat& v_;
  std::set<unsigned> has_;
};

struct Tally {
  std::size_t instances = 0;
  std::set<std::string> failing;
};

void instance(Tally& t, const std::string& axiom, const std::vector<std::string>& loc, const Leg& a, const Leg& b) {
  if (!a || !b) return;
  ++t.instances;
  bool equal = !a->broken && !b->broken && a->f == b->f && a->cod == b->cod;
  if (!equal) {
    Finding f{axiom, loc, "", ""};
    t.failing.insert(axiom + " " + f.locator_string());
  }
}

// Every diagram instance of a 2-fold structure whose products are copies of
// the pairing.
Tally oracle_verdicts(const Oracle& o) {
  Tally t;
  const FinCat& c = o.cat();
  std::size_t n = c.num_objects(), m = c.num_morphisms();
  auto on = [&](ObjId a) { return c.object_name(a); };
  auto mn = [&](MorId f) { return c.mor_name(f); };
  auto defined = [&](MorId f, MorId g) { return o.prod(c.dom(f), c.dom(g)) && o.prod(c.cod(f), c.cod(g)); };
  ObjId I = *o.object(1);

  for (int i = 1; i <= 2; ++i) {
    std::string si = std::to_string(i);
    for (MorId f = 0; f < m; ++f)
      for (MorId g = 0; g < m; ++g) {
        if (!defined(f, g)) continue;
        for (MorId f2 = 0; f2 < m; ++f2)
          for (MorId g2 = 0; g2 < m; ++g2) {
            if (c.cod(f2) != c.dom(f) || c.cod(g2) != c.dom(g)) continue;
            if (!o.prod(c.dom(f2), c.dom(g2))) continue;
            instance(t, "tensor.comp", {si, mn(f), mn(g), mn(f2), mn(g2)},
                     o.then(o.tensor(o.mor(f2), o.mor(g2)), o.tensor(o.mor(f), o.mor(g))),
                     o.tensor(o.then(o.mor(f2), o.mor(f)), o.then(o.mor(g2), o.mor(g))));
          }
        for (MorId h = 0; h < m; ++h) {
          auto fg = o.prod(c.dom(f), c.dom(g));
          if (!o.prod(*fg, c.dom(h))) continue;
          instance(t, "alpha.natural", {si, mn(f), mn(g), mn(h)},
                   o.then(o.tensor(o.tensor(o.mor(f), o.mor(g)), o.mor(h)), o.alpha(i, c.cod(f), c.cod(g), c.cod(h))),
                   o.then(o.alpha(i, c.dom(f), c.dom(g), c.dom(h)), o.tensor(o.mor(f), o.tensor(o.mor(g), o.mor(h)))));
        }
      }
    for (ObjId u = 0; u < n; ++u)
      for (ObjId w = 0; w < n; ++w)
        for (ObjId y = 0; y < n; ++y)
          for (ObjId z = 0; z < n; ++z) {
            auto uw = o.prod(u, w), wy = o.prod(w, y), yz = o.prod(y, z);
            if (!uw || !wy || !yz) continue;
            instance(t, "pentagon", {si, on(u), on(w), on(y), on(z)},
                     o.then(o.tensor(o.alpha(i, u, w, y), o.id(z)), o.alpha(i, u, *wy, z),
                            o.tensor(o.id(u), o.alpha(i, w, y, z))),
                     o.then(o.alpha(i, *uw, y, z), o.alpha(i, u, w, *yz)));
          }
  }

  const int i = 1, j = 2;
  const std::string si = "1", sj = "2";
  for (MorId f = 0; f < m; ++f)
    for (MorId g = 0; g < m; ++g)
      for (MorId h = 0; h < m; ++h)
        for (MorId l = 0; l < m; ++l) {
          if (!defined(f, g) || !defined(h, l)) continue;
          auto d1 = o.prod(c.dom(f), c.dom(g)), d2 = o.prod(c.dom(h), c.dom(l));
          if (!o.prod(*d1, *d2)) continue;
          instance(t, "eta.natural", {si, sj, mn(f), mn(g), mn(h), mn(l)},
                   o.then(o.tensor(o.tensor(o.mor(f), o.mor(g)), o.tensor(o.mor(h), o.mor(l))),
                          o.eta(i, j, c.cod(f), c.cod(g), c.cod(h), c.cod(l))),
                   o.then(o.eta(i, j, c.dom(f), c.dom(g), c.dom(h), c.dom(l)),
                          o.tensor(o.tensor(o.mor(f), o.mor(h)), o.tensor(o.mor(g), o.mor(l)))));
        }
  for (ObjId a = 0; a < n; ++a)
    for (ObjId b = 0; b < n; ++b) {
      auto ab = o.prod(a, b);
      if (!ab) continue;
      instance(t, "eta.internal_unit", {si, sj, on(a), on(b), "I", "I"}, o.eta(i, j, a, b, I, I), o.id(*ab));
      instance(t, "eta.internal_unit", {si, sj, "I", "I", on(a), on(b)}, o.eta(i, j, I, I, a, b), o.id(*ab));
      instance(t, "eta.external_unit", {si, sj, on(a), "I", on(b), "I"}, o.eta(i, j, a, I, b, I), o.id(*ab));
      instance(t, "eta.external_unit", {si, sj, "I", on(a), "I", on(b)}, o.eta(i, j, I, a, I, b), o.id(*ab));
    }
  std::vector<ObjId> objs(n);
  for (ObjId a = 0; a < n; ++a) objs[a] = a;
  for (ObjId U : objs)
    for (ObjId V : objs)
      for (ObjId W : objs)
        for (ObjId X : objs)
          for (ObjId Y : objs)
            for (ObjId Z : objs) {
              std::vector<std::string> loc{si, sj, on(U), on(V), on(W), on(X), on(Y), on(Z)};
              auto uv = o.prod(U, V), wx = o.prod(W, X), yz = o.prod(Y, Z);
              auto uw = o.prod(U, W), vx = o.prod(V, X), wy = o.prod(W, Y), xz = o.prod(X, Z);
              if (uv && wx && yz && uw && vx && wy && xz) {
                instance(t, "eta.internal_assoc", loc,
                         o.then(o.tensor(o.eta(i, j, U, V, W, X), o.id(*yz)), o.eta(i, j, *uw, *vx, Y, Z),
                                o.tensor(o.alpha(i, U, W, Y), o.alpha(i, V, X, Z))),
                         o.then(o.alpha(i, *uv, *wx, *yz), o.tensor(o.id(*uv), o.eta(i, j, W, X, Y, Z)),
                                o.eta(i, j, U, V, *wy, *xz)));
              }
              auto vw = o.prod(V, W), xy = o.prod(X, Y);
              auto ux = o.prod(U, X), vy = o.prod(V, Y), wz = o.prod(W, Z);
              if (uv && vw && xy && yz && ux && vy && wz) {
                instance(t, "eta.external_assoc", loc,
                         o.then(o.eta(i, j, *uv, W, *xy, Z), o.tensor(o.eta(i, j, U, V, X, Y), o.id(*wz)),
                                o.alpha(j, *ux, *vy, *wz)),
                         o.then(o.tensor(o.alpha(j, U, V, W), o.alpha(j, X, Y, Z)), o.eta(i, j, U, *vw, X, *yz),
                                o.tensor(o.id(*ux), o.eta(i, j, V, W, Y, Z))));
              }
            }
  return t;
}

const std::set<std::string> kDiagramAxioms = {"tensor.comp",       "alpha.natural",     "pentagon",
                                              "eta.natural",       "eta.internal_unit", "eta.external_unit",
                                              "eta.internal_assoc", "eta.external_assoc"};

std::set<std::string> checker_verdicts(const CheckReport& r) {
  std::set<std::string> out;
  for (const auto& f : r.findings())
    if (kDiagramAxioms.count(f.axiom)) out.insert(f.axiom + " " + f.locator_string());
  return out;
}

}  // namespace

Outcome symmetric_lift_oracle() {
  auto t0 = std::chrono::steady_clock::now();
  FinSetSkeleton s = finset_skeleton({1, 2, 3, 4});
  IteratedMonoidalCat lifted = from_symmetric(s.monoidal, s.symmetry, 2);
  const FinCat& c = lifted.cat();

  // The clean lift, then every well-typed substitution of one α or η component.
  std::vector<IteratedMonoidalCat> variants{lifted};
  auto retype = [&](auto get_family) {
    auto keys = get_family(lifted);
    for (const auto& [key, m] : keys)
      for (MorId alt : c.hom(c.dom(m), c.cod(m)))
        if (alt != m) {
          IteratedMonoidalCat w = lifted;
          get_family(w)[key] = alt;
          variants.push_back(std::move(w));
        }
  };
  for (int i = 0; i < 2; ++i) retype([i](IteratedMonoidalCat& w) -> AssociatorFamily& { return w.associators[i]; });
  retype([](IteratedMonoidalCat& w) -> InterchangeFamily& { return w.interchanges.at({1, 2}); });

  std::size_t agree = 0, instances = 0, failing_variants = 0;
  std::string first_disagreement;
  bool clean_passes = false;
  for (std::size_t k = 0; k < variants.size(); ++k) {
    CheckReport r = check_kfold_axioms(variants[k]);
    Tally t = oracle_verdicts(Oracle(s, variants[k]));
    instances += t.instances;
    std::set<std::string> checker = checker_verdicts(r);
    bool same = checker == t.failing && r.ok() == t.failing.empty();
    if (k == 0) clean_passes = r.ok() && t.failing.empty();
    if (!t.failing.empty()) ++failing_variants;
    if (same) {
      ++agree;
    } else if (first_disagreement.empty()) {
      first_disagreement = "variant " + std::to_string(k) + ": checker " + std::to_string(checker.size()) +
                           " failing instances, oracle " + std::to_string(t.failing.size());
    }
  }
  double secs = seconds_since(t0);
  Outcome o;
  o.pass = clean_passes && agree == variants.size() && secs < 120.0;
  o.detail = "finset {1,2,3,4} k=2 " + std::string(clean_passes ? "passes" : "FAILS") + "; " +
             std::to_string(agree) + "/" + std::to_string(variants.size()) + " fixtures (" +
             std::to_string(failing_variants) + " mutated) agree on " + std::to_string(instances) +
             " instances in " + std::to_string(secs) + "s";
  if (!first_disagreement.empty()) o.detail += " [" + first_disagreement + "]";
  return o;
}

}  // namespace acceptance
