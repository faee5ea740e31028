#include "itercat/fincat.hpp"

#include <algorithm>

#include "itercat/error.hpp"

namespace itercat {

namespace {
const std::vector<MorId> kEmptyHom;
}

ObjId FinCat::add_object(std::string name) {
  if (object_index_.count(name)) throw Error(ErrorKind::DuplicateName, "object " + name);
  ObjId id = static_cast<ObjId>(objects_.size());
  object_index_.emplace(name, id);
  objects_.push_back(std::move(name));
  identities_.push_back(kNoMor);
  for (auto& row : homs_) row.emplace_back();
  homs_.emplace_back(objects_.size());
  return id;
}

MorId FinCat::add_morphism(std::string name, ObjId dom, ObjId cod) {
  if (dom >= objects_.size() || cod >= objects_.size()) {
    throw Error(ErrorKind::DanglingReference, "morphism " + name + " has unknown endpoint");
  }
  if (morphism_index_.count(name)) throw Error(ErrorKind::DuplicateName, "morphism " + name);
  MorId id = static_cast<MorId>(morphisms_.size());
  morphism_index_.emplace(name, id);
  morphisms_.push_back({std::move(name), dom, cod});
  homs_[dom][cod].push_back(id);
  return id;
}

void FinCat::set_identity(ObjId a, MorId f) { identities_.at(a) = f; }

void FinCat::set_comp(MorId f, MorId g, MorId h) {
  if (cod(g) != dom(f)) {
    throw Error(ErrorKind::NonComposable, mor_name(f) + " after " + mor_name(g));
  }
  comp_[key(f, g)] = h;
}

void FinCat::erase_comp(MorId f, MorId g) { comp_.erase(key(f, g)); }

void FinCat::force_comp(MorId f, MorId g, MorId h) { comp_[key(f, g)] = h; }

std::optional<ObjId> FinCat::find_object(const std::string& name) const {
  auto it = object_index_.find(name);
  if (it == object_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<MorId> FinCat::find_morphism(const std::string& name) const {
  auto it = morphism_index_.find(name);
  if (it == morphism_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<MorId> FinCat::lookup_comp(MorId f, MorId g) const {
  auto it = comp_.find(key(f, g));
  if (it == comp_.end()) return std::nullopt;
  return it->second;
}

const std::vector<MorId>& FinCat::hom(ObjId a, ObjId b) const {
  if (a >= homs_.size() || b >= homs_.size()) return kEmptyHom;
  return homs_[a][b];
}

bool FinCat::is_thin() const {
  for (const auto& row : homs_) {
    for (const auto& h : row) {
      if (h.size() > 1) return false;
    }
  }
  return true;
}

bool operator==(const FinCat& a, const FinCat& b) { return same_tables(a, b); }

bool same_tables(const FinCat& a, const FinCat& b) {
  if (a.num_objects() != b.num_objects() || a.num_morphisms() != b.num_morphisms()) return false;
  for (ObjId o = 0; o < a.num_objects(); ++o) {
    if (a.object_name(o) != b.object_name(o) || a.identity(o) != b.identity(o)) return false;
  }
  for (MorId f = 0; f < a.num_morphisms(); ++f) {
    if (a.mor_name(f) != b.mor_name(f) || a.dom(f) != b.dom(f) || a.cod(f) != b.cod(f)) {
      return false;
    }
  }
  if (a.comp_entries() != b.comp_entries()) return false;
  for (MorId f = 0; f < a.num_morphisms(); ++f) {
    for (ObjId x = 0; x < a.num_objects(); ++x) {
      for (MorId g : a.hom(x, a.dom(f))) {
        if (a.lookup_comp(f, g) != b.lookup_comp(f, g)) return false;
      }
    }
  }
  return true;
}

MorId compose(const FinCat& c, MorId f, MorId g) {
  if (f >= c.num_morphisms() || g >= c.num_morphisms()) {
    throw Error(ErrorKind::MissingEntry, "composite with an unset morphism");
  }
  if (c.cod(g) != c.dom(f)) {
    throw Error(ErrorKind::NonComposable,
                c.mor_name(f) + " after " + c.mor_name(g) + " (" + c.object_name(c.cod(g)) +
                    " != " + c.object_name(c.dom(f)) + ")");
  }
  auto h = c.lookup_comp(f, g);
  if (!h) throw Error(ErrorKind::MissingEntry, c.mor_name(f) + " after " + c.mor_name(g));
  return *h;
}

MorId compose_path(const FinCat& c, std::span<const MorId> path) {
  if (path.empty()) throw Error(ErrorKind::NonComposable, "empty path");
  MorId acc = path.back();
  for (std::size_t k = path.size() - 1; k-- > 0;) acc = compose(c, path[k], acc);
  return acc;
}

bool paths_equal(const FinCat& c, std::span<const MorId> p1, std::span<const MorId> p2) {
  MorId a = compose_path(c, p1);
  MorId b = compose_path(c, p2);
  if (c.dom(a) != c.dom(b) || c.cod(a) != c.cod(b)) {
    throw Error(ErrorKind::NonComposable, "paths do not share endpoints");
  }
  return a == b;
}

CheckReport check_category_axioms(const FinCat& c, const CheckOptions& opts) {
  CheckReport report;
  const auto on = [&](ObjId a) { return c.object_name(a); };
  const auto mn = [&](MorId f) { return c.mor_name(f); };

  for (ObjId a = 0; a < c.num_objects(); ++a) {
    MorId i = c.identity(a);
    if (i == kNoMor) {
      report.add("identity.missing", {on(a)}, "identity declared", "none");
    } else if (c.dom(i) != a || c.cod(i) != a) {
      report.add("identity.type", {on(a)}, on(a) + " -> " + on(a),
                 on(c.dom(i)) + " -> " + on(c.cod(i)));
    }
  }

  // Composition table: totality and typing on composable pairs.
  for (MorId f = 0; f < c.num_morphisms(); ++f) {
    for (ObjId x = 0; x < c.num_objects(); ++x) {
      for (MorId g : c.hom(x, c.dom(f))) {
        auto h = c.lookup_comp(f, g);
        if (!h) {
          report.add("comp.missing", {mn(f), mn(g)}, "table entry", "none");
        } else if (c.dom(*h) != c.dom(g) || c.cod(*h) != c.cod(f)) {
          report.add("comp.type", {mn(f), mn(g)}, on(c.dom(g)) + " -> " + on(c.cod(f)),
                     mn(*h) + ": " + on(c.dom(*h)) + " -> " + on(c.cod(*h)));
        }
      }
    }
  }

  for (MorId f = 0; f < c.num_morphisms(); ++f) {
    MorId ib = c.identity(c.cod(f));
    MorId ia = c.identity(c.dom(f));
    if (ib != kNoMor) {
      auto l = c.lookup_comp(ib, f);
      if (l && *l != f) report.add("unit.left", {mn(f)}, mn(f), mn(*l));
    }
    if (ia != kNoMor) {
      auto r = c.lookup_comp(f, ia);
      if (r && *r != f) report.add("unit.right", {mn(f)}, mn(f), mn(*r));
    }
  }

  std::size_t n = c.num_morphisms();
  guard_budget(opts, n * n, "associativity of " + c.name());
  CheckReport assoc = run_partitioned(n, opts, [&](std::size_t fi, CheckReport& out) {
    MorId f = static_cast<MorId>(fi);
    for (ObjId y = 0; y < c.num_objects(); ++y) {
      for (MorId g : c.hom(y, c.dom(f))) {
        auto fg = c.lookup_comp(f, g);
        for (ObjId x = 0; x < c.num_objects(); ++x) {
          for (MorId h : c.hom(x, y)) {
            auto gh = c.lookup_comp(g, h);
            if (!fg || !gh) continue;
            if (c.cod(*fg) != c.cod(f) || c.dom(*fg) != y) continue;
            if (c.dom(*gh) != x || c.cod(*gh) != c.dom(f)) continue;
            auto l = c.lookup_comp(*fg, h);
            auto r = c.lookup_comp(f, *gh);
            if (!l || !r) continue;
            if (*l != *r) {
              out.add("assoc", {mn(f), mn(g), mn(h)}, mn(*r), mn(*l));
            }
          }
        }
      }
    }
  });
  report.merge(assoc);
  report.normalize();
  return report;
}

std::optional<MorId> thin_morphism(const FinCat& c, ObjId a, ObjId b) {
  const auto& h = c.hom(a, b);
  if (h.size() != 1) return std::nullopt;
  return h.front();
}

FinCat make_preorder(std::string name, const std::vector<std::string>& objects,
                     const std::vector<std::pair<std::string, std::string>>& le) {
  std::size_t n = objects.size();
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
  FinCat c(std::move(name));
  for (const auto& o : objects) c.add_object(o);
  for (std::size_t i = 0; i < n; ++i) rel[i][i] = true;
  for (const auto& [a, b] : le) {
    auto ia = c.find_object(a);
    auto ib = c.find_object(b);
    if (!ia || !ib) throw Error(ErrorKind::DanglingReference, "relation " + a + "<=" + b);
    rel[*ia][*ib] = true;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (rel[i][k] && rel[k][j]) rel[i][j] = true;
  for (ObjId i = 0; i < n; ++i) {
    for (ObjId j = 0; j < n; ++j) {
      if (!rel[i][j]) continue;
      std::string mname = i == j ? "1_" + objects[i] : objects[i] + "->" + objects[j];
      MorId f = c.add_morphism(mname, i, j);
      if (i == j) c.set_identity(i, f);
    }
  }
  for (ObjId i = 0; i < n; ++i)
    for (ObjId j = 0; j < n; ++j)
      for (ObjId k = 0; k < n; ++k)
        if (rel[i][j] && rel[j][k]) {
          c.set_comp(c.hom(j, k).front(), c.hom(i, j).front(), c.hom(i, k).front());
        }
  return c;
}

StrictFunctor identity_functor(FinCatPtr c) {
  StrictFunctor f{c, c, {}, {}};
  for (ObjId a = 0; a < c->num_objects(); ++a) f.obj_map.push_back(a);
  for (MorId m = 0; m < c->num_morphisms(); ++m) f.mor_map.push_back(m);
  return f;
}

CheckReport check_functor(const StrictFunctor& f) {
  CheckReport report;
  const FinCat& s = *f.source;
  const FinCat& t = *f.target;
  if (f.obj_map.size() != s.num_objects() || f.mor_map.size() != s.num_morphisms()) {
    report.add("functor.shape", {}, std::to_string(s.num_objects()) + " objects, " +
                                        std::to_string(s.num_morphisms()) + " morphisms",
               std::to_string(f.obj_map.size()) + ", " + std::to_string(f.mor_map.size()));
    return report;
  }
  for (ObjId a = 0; a < s.num_objects(); ++a) {
    if (f.obj_map[a] >= t.num_objects()) {
      report.add("functor.object", {s.object_name(a)}, "target object", "out of range");
    }
  }
  if (!report.ok()) return report;
  for (MorId m = 0; m < s.num_morphisms(); ++m) {
    MorId fm = f.mor_map[m];
    if (fm == kNoMor || fm >= t.num_morphisms()) {
      report.add("functor.missing", {s.mor_name(m)}, "image", "none");
      continue;
    }
    if (t.dom(fm) != f.obj_map[s.dom(m)] || t.cod(fm) != f.obj_map[s.cod(m)]) {
      report.add("functor.type", {s.mor_name(m)},
                 t.object_name(f.obj_map[s.dom(m)]) + " -> " + t.object_name(f.obj_map[s.cod(m)]),
                 t.mor_name(fm));
    }
  }
  for (ObjId a = 0; a < s.num_objects(); ++a) {
    MorId ia = s.identity(a);
    if (ia == kNoMor) continue;
    MorId image = f.mor_map[ia];
    MorId expected = t.identity(f.obj_map[a]);
    if (image != expected) {
      report.add("functor.identity", {s.object_name(a)},
                 expected == kNoMor ? "identity" : t.mor_name(expected),
                 image == kNoMor ? "none" : t.mor_name(image));
    }
  }
  for (MorId m = 0; m < s.num_morphisms(); ++m) {
    for (ObjId x = 0; x < s.num_objects(); ++x) {
      for (MorId g : s.hom(x, s.dom(m))) {
        auto mg = s.lookup_comp(m, g);
        if (!mg) continue;
        MorId a = f.mor_map[m], b = f.mor_map[g], c = f.mor_map[*mg];
        if (a == kNoMor || b == kNoMor || c == kNoMor) continue;
        auto ab = t.cod(b) == t.dom(a) ? t.lookup_comp(a, b) : std::nullopt;
        if (!ab || *ab != c) {
          report.add("functor.comp", {s.mor_name(m), s.mor_name(g)}, t.mor_name(c),
                     ab ? t.mor_name(*ab) : "undefined");
        }
      }
    }
  }
  report.normalize();
  return report;
}

CheckReport check_nat_trans(const NatTransData& t) {
  const auto& F = t.source;
  const auto& G = t.target;
  if (F.source.get() != G.source.get() && !same_tables(*F.source, *G.source)) {
    throw Error(ErrorKind::ShapeMismatch, "functors have different sources");
  }
  if (F.target.get() != G.target.get() && !same_tables(*F.target, *G.target)) {
    throw Error(ErrorKind::ShapeMismatch, "functors have different targets");
  }
  const FinCat& s = *F.source;
  const FinCat& c = *F.target;
  if (t.components.size() != s.num_objects()) {
    throw Error(ErrorKind::ShapeMismatch, "component family has " +
                                              std::to_string(t.components.size()) +
                                              " entries for " + std::to_string(s.num_objects()) +
                                              " objects");
  }
  CheckReport report;
  for (ObjId a = 0; a < s.num_objects(); ++a) {
    MorId k = t.components[a];
    if (k == kNoMor) {
      report.add("nat.missing", {s.object_name(a)}, "component", "none");
    } else if (c.dom(k) != F.obj_map[a] || c.cod(k) != G.obj_map[a]) {
      report.add("nat.type", {s.object_name(a)},
                 c.object_name(F.obj_map[a]) + " -> " + c.object_name(G.obj_map[a]),
                 c.mor_name(k));
    }
  }
  if (!report.ok()) return report;
  for (MorId m = 0; m < s.num_morphisms(); ++m) {
    ObjId a = s.dom(m), b = s.cod(m);
    MorId fm = F.mor_map[m], gm = G.mor_map[m];
    auto left = c.lookup_comp(t.components[b], fm);
    auto right = c.lookup_comp(gm, t.components[a]);
    if (!left || !right || *left != *right) {
      report.add("nat.square", {s.mor_name(m)}, right ? c.mor_name(*right) : "undefined",
                 left ? c.mor_name(*left) : "undefined");
    }
  }
  report.normalize();
  return report;
}

FinCat product(const FinCat& a, const FinCat& b) {
  FinCat p("(" + a.name() + "," + b.name() + ")");
  std::size_t nb = b.num_objects();
  for (ObjId x = 0; x < a.num_objects(); ++x)
    for (ObjId y = 0; y < nb; ++y) p.add_object("(" + a.object_name(x) + "," + b.object_name(y) + ")");
  std::size_t mb = b.num_morphisms();
  for (MorId f = 0; f < a.num_morphisms(); ++f)
    for (MorId g = 0; g < mb; ++g)
      p.add_morphism("(" + a.mor_name(f) + "," + b.mor_name(g) + ")",
                     static_cast<ObjId>(a.dom(f) * nb + b.dom(g)),
                     static_cast<ObjId>(a.cod(f) * nb + b.cod(g)));
  for (ObjId x = 0; x < a.num_objects(); ++x)
    for (ObjId y = 0; y < nb; ++y)
      if (a.identity(x) != kNoMor && b.identity(y) != kNoMor)
        p.set_identity(static_cast<ObjId>(x * nb + y),
                       static_cast<MorId>(a.identity(x) * mb + b.identity(y)));
  for (MorId f = 0; f < a.num_morphisms(); ++f)
    for (MorId g = 0; g < mb; ++g)
      for (ObjId x = 0; x < a.num_objects(); ++x)
        for (MorId f2 : a.hom(x, a.dom(f)))
          for (ObjId y = 0; y < nb; ++y)
            for (MorId g2 : b.hom(y, b.dom(g))) {
              auto l = a.lookup_comp(f, f2);
              auto r = b.lookup_comp(g, g2);
              if (l && r) {
                p.set_comp(static_cast<MorId>(f * mb + g), static_cast<MorId>(f2 * mb + g2),
                           static_cast<MorId>(*l * mb + *r));
              }
            }
  return p;
}

}  // namespace itercat
