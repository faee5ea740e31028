#include "itercat/tower.hpp"

#include "itercat/diagram.hpp"
#include "itercat/error.hpp"

namespace itercat {

std::optional<std::size_t> EnrichedCat::find(const std::string& label) const {
  for (std::size_t a = 0; a < objects.size(); ++a)
    if (objects[a] == label) return a;
  return std::nullopt;
}

EnCatPtr base_object(MonoidalPtr v, ObjId a) {
  auto c = std::make_shared<EnrichedCat>();
  c->level = 0;
  c->name = a < v->cat().num_objects() ? v->cat().object_name(a) : "?";
  c->base = std::move(v);
  c->obj = a;
  return c;
}

EnFunPtr base_morphism(MonoidalPtr v, MorId f) {
  auto m = std::make_shared<EnrichedFunctor>();
  m->level = 0;
  m->mor = f;
  if (f != kNoMor && f < v->cat().num_morphisms()) {
    m->source = base_object(v, v->cat().dom(f));
    m->target = base_object(v, v->cat().cod(f));
  }
  return m;
}

EnCatPtr unit_tower(MonoidalPtr v, int n) {
  if (n < 0) throw Error(ErrorKind::IndexOutOfRange, "negative level");
  if (n == 0) return base_object(v, v->unit);
  EnCatPtr h = unit_tower(v, n - 1);
  auto c = std::make_shared<EnrichedCat>();
  c->level = n;
  c->base = v;
  c->name = "I" + std::to_string(n);
  c->objects = {"0"};
  c->homs = {h};
  // I ⊗ I is I on the nose, so composition and unit are identities.
  c->comps = {identity_functor(h)};
  c->units = {identity_functor(h)};
  return c;
}

EnCatPtr encat_from_vcat(const VCat& a) {
  auto c = std::make_shared<EnrichedCat>();
  c->level = 1;
  c->base = a.base;
  c->name = a.name;
  c->objects = a.objects;
  for (ObjId h : a.homs) c->homs.push_back(base_object(a.base, h));
  for (MorId m : a.comps) c->comps.push_back(base_morphism(a.base, m));
  for (MorId j : a.units) c->units.push_back(base_morphism(a.base, j));
  return c;
}

VCat vcat_from_encat(const EnrichedCat& a) {
  if (a.level != 1) throw Error(ErrorKind::ShapeMismatch, a.name + " is not of level 1");
  VCat r = VCat::empty(a.name, a.base, a.objects);
  for (std::size_t p = 0; p < a.homs.size(); ++p) r.homs[p] = a.homs[p]->obj;
  for (std::size_t p = 0; p < a.comps.size(); ++p) r.comps[p] = a.comps[p]->mor;
  for (std::size_t p = 0; p < a.units.size(); ++p) r.units[p] = a.units[p]->mor;
  return r;
}

EnFunPtr enfunctor_from_vfunctor(const VFunctor& t) {
  auto f = std::make_shared<EnrichedFunctor>();
  f->level = 1;
  f->source = encat_from_vcat(*t.source);
  f->target = encat_from_vcat(*t.target);
  f->obj_map = t.obj_map;
  for (MorId m : t.hom_map) f->homs.push_back(base_morphism(t.source->base, m));
  return f;
}

EnFunPtr thin_enfunctor(EnCatPtr source, EnCatPtr target, std::vector<std::size_t> obj_map) {
  if (source->level != 1 || target->level != 1) {
    throw Error(ErrorKind::ShapeMismatch, "thin functors are built at level 1");
  }
  const IteratedMonoidalCat& v = *source->base;
  auto f = std::make_shared<EnrichedFunctor>();
  f->level = 1;
  f->obj_map = std::move(obj_map);
  std::size_t n = source->size();
  if (f->obj_map.size() != n) throw Error(ErrorKind::ShapeMismatch, "object map does not cover " + source->name);
  for (std::size_t t : f->obj_map)
    if (t >= target->size()) throw Error(ErrorKind::IndexOutOfRange, "object map leaves " + target->name);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      ObjId d = source->hom(x, y).obj;
      ObjId e = target->hom(f->obj_map[x], f->obj_map[y]).obj;
      auto m = thin_morphism(v.cat(), d, e);
      if (!m) {
        throw Error(ErrorKind::MissingEntry, "no morphism " + v.cat().object_name(d) + " -> " +
                                                 v.cat().object_name(e) + " for hom(" +
                                                 source->objects[x] + "," + source->objects[y] + ")");
      }
      f->homs.push_back(base_morphism(source->base, *m));
    }
  f->source = std::move(source);
  f->target = std::move(target);
  return f;
}

EnCatPtr thin_2cat(std::string name, MonoidalPtr v, std::vector<std::string> objects,
                   std::vector<EnCatPtr> homs, const std::vector<std::vector<std::size_t>>& comp_maps,
                   const std::vector<std::size_t>& unit_objects) {
  std::size_t n = objects.size();
  if (homs.size() != n * n || comp_maps.size() != n * n * n || unit_objects.size() != n) {
    throw Error(ErrorKind::ShapeMismatch, "tables of " + name + " do not match its object count");
  }
  auto c = std::make_shared<EnrichedCat>();
  c->level = 2;
  c->base = v;
  c->name = std::move(name);
  c->objects = std::move(objects);
  c->homs = std::move(homs);
  auto unit = unit_tower(v, 1);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        auto src = tensor_tower(c->hom_ptr(y, z), c->hom_ptr(x, y), 1);
        c->comps.push_back(thin_enfunctor(src, c->hom_ptr(x, z), comp_maps[(x * n + y) * n + z]));
      }
  for (std::size_t x = 0; x < n; ++x) c->units.push_back(thin_enfunctor(unit, c->hom_ptr(x, x), {unit_objects[x]}));
  return c;
}

EnFunPtr thin_2functor(EnCatPtr source, EnCatPtr target, std::vector<std::size_t> obj_map,
                       const std::vector<std::vector<std::size_t>>& hom_maps) {
  std::size_t n = source->size();
  if (source->level != 2 || target->level != 2 || obj_map.size() != n || hom_maps.size() != n * n) {
    throw Error(ErrorKind::ShapeMismatch, "level-2 functor tables do not match " + source->name);
  }
  auto f = std::make_shared<EnrichedFunctor>();
  f->level = 2;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (obj_map[x] >= target->size() || obj_map[y] >= target->size()) {
        throw Error(ErrorKind::IndexOutOfRange, "object map leaves " + target->name);
      }
      f->homs.push_back(thin_enfunctor(source->hom_ptr(x, y), target->hom_ptr(obj_map[x], obj_map[y]),
                                       hom_maps[x * n + y]));
    }
  f->obj_map = std::move(obj_map);
  f->source = std::move(source);
  f->target = std::move(target);
  return f;
}

bool same_functor(const EnrichedFunctor& f, const EnrichedFunctor& g) {
  if (&f == &g) return true;
  if (f.level != g.level) return false;
  if (f.level == 0) return f.mor == g.mor;
  if (f.obj_map != g.obj_map || f.homs.size() != g.homs.size()) return false;
  for (std::size_t p = 0; p < f.homs.size(); ++p)
    if (!same_functor(*f.homs[p], *g.homs[p])) return false;
  return true;
}

bool same_cat(const EnrichedCat& a, const EnrichedCat& b) {
  if (&a == &b) return true;
  if (a.level != b.level) return false;
  if (a.level == 0) return a.obj == b.obj;
  if (a.size() != b.size()) return false;
  for (std::size_t p = 0; p < a.homs.size(); ++p)
    if (!same_cat(*a.homs[p], *b.homs[p])) return false;
  for (std::size_t p = 0; p < a.comps.size(); ++p)
    if (!same_functor(*a.comps[p], *b.comps[p])) return false;
  for (std::size_t p = 0; p < a.units.size(); ++p)
    if (!same_functor(*a.units[p], *b.units[p])) return false;
  return true;
}

namespace {

std::string mor_text(const EnrichedFunctor& f) {
  if (f.mor == kNoMor) return "none";
  if (f.source) return f.source->base->cat().mor_name(f.mor);
  return "#" + std::to_string(f.mor);
}

std::string object_text(const EnCatPtr& c, std::size_t x) {
  if (c && x < c->size()) return c->objects[x];
  return "#" + std::to_string(x);
}

}  // namespace

std::optional<std::string> functor_difference(const EnrichedFunctor& f, const EnrichedFunctor& g) {
  if (f.level != g.level) return "levels " + std::to_string(f.level) + " vs " + std::to_string(g.level);
  if (f.level == 0) {
    if (f.mor == g.mor) return std::nullopt;
    return mor_text(f) + " vs " + mor_text(g);
  }
  if (f.obj_map.size() != g.obj_map.size()) return std::string("object counts differ");
  for (std::size_t x = 0; x < f.obj_map.size(); ++x)
    if (f.obj_map[x] != g.obj_map[x]) {
      return "object " + object_text(f.source, x) + ": " + object_text(f.target, f.obj_map[x]) +
             " vs " + object_text(g.target, g.obj_map[x]);
    }
  std::size_t n = f.obj_map.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      auto d = functor_difference(f.hom(x, y), g.hom(x, y));
      if (d) return "hom(" + object_text(f.source, x) + "," + object_text(f.source, y) + ") / " + *d;
    }
  return std::nullopt;
}

EnFunPtr identity_functor(EnCatPtr a) {
  if (a->level == 0) return base_morphism(a->base, a->base->cat().identity(a->obj));
  auto f = std::make_shared<EnrichedFunctor>();
  f->level = a->level;
  std::size_t n = a->size();
  for (std::size_t x = 0; x < n; ++x) f->obj_map.push_back(x);
  for (const auto& h : a->homs) f->homs.push_back(identity_functor(h));
  f->source = a;
  f->target = std::move(a);
  return f;
}

EnFunPtr compose_functors(const EnrichedFunctor& s, const EnrichedFunctor& t) {
  if (s.level != t.level) throw Error(ErrorKind::ShapeMismatch, "composite across levels");
  if (s.level == 0) {
    if (!s.source || !t.source) throw Error(ErrorKind::MissingEntry, "composite with a missing morphism");
    return base_morphism(s.source->base, compose(s.source->base->cat(), s.mor, t.mor));
  }
  if (!s.source || !t.target || s.source->size() != t.target->size()) {
    throw Error(ErrorKind::ShapeMismatch, "composite of functors with unmatched endpoints");
  }
  auto r = std::make_shared<EnrichedFunctor>();
  r->level = s.level;
  r->source = t.source;
  r->target = s.target;
  std::size_t n = t.source->size();
  for (std::size_t x = 0; x < n; ++x) r->obj_map.push_back(s.obj_map[t.obj_map[x]]);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      r->homs.push_back(compose_functors(s.hom(t.obj_map[x], t.obj_map[y]), t.hom(x, y)));
    }
  return r;
}

namespace {

void require_fold(const EnrichedCat& a, int index, const std::string& what) {
  int needed = a.level + index;
  if (needed > a.base->fold) {
    throw Error(ErrorKind::FoldExceeded, what + " at level " + std::to_string(a.level) +
                                             " needs fold " + std::to_string(needed) +
                                             ", base has " + std::to_string(a.base->fold));
  }
}

void require_same_level(const EnrichedCat& a, const EnrichedCat& b) {
  if (a.level != b.level) throw Error(ErrorKind::ShapeMismatch, "product across levels");
  if (a.base != b.base) throw Error(ErrorKind::ShapeMismatch, "product across bases");
}

std::string pair_label(const std::string& a, const std::string& b) { return "(" + a + "," + b + ")"; }

}  // namespace

EnCatPtr tensor_tower(const EnCatPtr& a, const EnCatPtr& b, int i) {
  require_same_level(*a, *b);
  if (i < 1) throw Error(ErrorKind::IndexOutOfRange, "product index must be at least 1");
  require_fold(*a, i, "product " + std::to_string(i));
  const MonoidalPtr& v = a->base;
  if (a->level == 0) return base_object(v, tensor_obj(*v, i, a->obj, b->obj));

  auto r = std::make_shared<EnrichedCat>();
  r->level = a->level;
  r->base = v;
  r->name = "(" + a->name + " (x)_" + std::to_string(i) + " " + b->name + ")";
  std::size_t na = a->size(), nb = b->size();
  for (std::size_t x = 0; x < na; ++x)
    for (std::size_t y = 0; y < nb; ++y) r->objects.push_back(pair_label(a->objects[x], b->objects[y]));
  std::size_t n = r->size();
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      r->homs.push_back(tensor_tower(a->hom_ptr(p / nb, q / nb), b->hom_ptr(p % nb, q % nb), i + 1));
    }
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t s = 0; s < n; ++s) {
        std::size_t x = p / nb, x1 = q / nb, x2 = s / nb;
        std::size_t y = p % nb, y1 = q % nb, y2 = s % nb;
        auto eta = interchange_functor(a->hom_ptr(x1, x2), b->hom_ptr(y1, y2), a->hom_ptr(x, x1),
                                       b->hom_ptr(y, y1), 1, i + 1);
        auto mm = tensor_functors(a->comp(x, x1, x2), b->comp(y, y1, y2), i + 1);
        r->comps.push_back(compose_functors(*mm, *eta));
      }
  for (std::size_t p = 0; p < n; ++p) {
    r->units.push_back(tensor_functors(a->unit(p / nb), b->unit(p % nb), i + 1));
  }
  return r;
}

EnFunPtr tensor_functors(const EnrichedFunctor& f, const EnrichedFunctor& g, int i) {
  if (f.level != g.level) throw Error(ErrorKind::ShapeMismatch, "product of functors across levels");
  if (!f.source || !g.source) throw Error(ErrorKind::MissingEntry, "product with a missing morphism");
  const MonoidalPtr& v = f.source->base;
  if (f.level == 0) return base_morphism(v, tensor_mor(*v, i, f.mor, g.mor));
  auto r = std::make_shared<EnrichedFunctor>();
  r->level = f.level;
  r->source = tensor_tower(f.source, g.source, i);
  r->target = tensor_tower(f.target, g.target, i);
  std::size_t nb = g.source->size(), mb = g.target->size();
  std::size_t n = r->source->size();
  for (std::size_t p = 0; p < n; ++p) r->obj_map.push_back(f.obj_map[p / nb] * mb + g.obj_map[p % nb]);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      r->homs.push_back(tensor_functors(f.hom(p / nb, q / nb), g.hom(p % nb, q % nb), i + 1));
    }
  return r;
}

EnFunPtr associator_functor(const EnCatPtr& a, const EnCatPtr& b, const EnCatPtr& c, int i) {
  require_same_level(*a, *b);
  require_same_level(*a, *c);
  require_fold(*a, i, "associator " + std::to_string(i));
  const MonoidalPtr& v = a->base;
  if (a->level == 0) {
    auto m = v->find_alpha(i, a->obj, b->obj, c->obj);
    if (!m) throw Error(ErrorKind::MissingEntry, alpha_label(*v, i, a->obj, b->obj, c->obj));
    return base_morphism(v, *m);
  }
  auto r = std::make_shared<EnrichedFunctor>();
  r->level = a->level;
  r->source = tensor_tower(tensor_tower(a, b, i), c, i);
  r->target = tensor_tower(a, tensor_tower(b, c, i), i);
  std::size_t nb = b->size(), nc = c->size();
  std::size_t n = r->source->size();
  for (std::size_t p = 0; p < n; ++p) r->obj_map.push_back(p);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      r->homs.push_back(associator_functor(a->hom_ptr(p / (nb * nc), q / (nb * nc)),
                                           b->hom_ptr((p / nc) % nb, (q / nc) % nb),
                                           c->hom_ptr(p % nc, q % nc), i + 1));
    }
  return r;
}

EnFunPtr interchange_functor(const EnCatPtr& a, const EnCatPtr& b, const EnCatPtr& c,
                             const EnCatPtr& d, int i, int j) {
  if (i < 1 || i >= j) {
    throw Error(ErrorKind::BadIndices, "interchange needs 1 <= i < j, got " + std::to_string(i) +
                                           "," + std::to_string(j));
  }
  require_same_level(*a, *b);
  require_same_level(*a, *c);
  require_same_level(*a, *d);
  require_fold(*a, j, "interchange " + std::to_string(i) + "," + std::to_string(j));
  const MonoidalPtr& v = a->base;
  if (a->level == 0) {
    auto m = v->find_eta(i, j, a->obj, b->obj, c->obj, d->obj);
    if (!m) throw Error(ErrorKind::MissingEntry, eta_label(*v, i, j, a->obj, b->obj, c->obj, d->obj));
    return base_morphism(v, *m);
  }
  auto r = std::make_shared<EnrichedFunctor>();
  r->level = a->level;
  r->source = tensor_tower(tensor_tower(a, b, j), tensor_tower(c, d, j), i);
  r->target = tensor_tower(tensor_tower(a, c, i), tensor_tower(b, d, i), j);
  std::size_t nb = b->size(), nc = c->size(), nd = d->size();
  std::size_t n = r->source->size();
  auto split = [&](std::size_t p) {
    return std::array<std::size_t, 4>{p / (nb * nc * nd), (p / (nc * nd)) % nb, (p / nd) % nc,
                                      p % nd};
  };
  for (std::size_t p = 0; p < n; ++p) {
    auto [x, y, z, w] = split(p);
    r->obj_map.push_back(((x * nc + z) * nb + y) * nd + w);
  }
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      auto [x, y, z, w] = split(p);
      auto [x1, y1, z1, w1] = split(q);
      r->homs.push_back(interchange_functor(a->hom_ptr(x, x1), b->hom_ptr(y, y1), c->hom_ptr(z, z1),
                                            d->hom_ptr(w, w1), i + 1, j + 1));
    }
  return r;
}

namespace {

void require_cat_shape(const EnrichedCat& a) {
  if (a.level == 0) return;
  std::size_t n = a.size();
  if (a.homs.size() != n * n || a.comps.size() != n * n * n || a.units.size() != n) {
    throw Error(ErrorKind::ShapeMismatch, "tables of " + a.name + " do not match its object count");
  }
  for (const auto& h : a.homs)
    if (!h || h->level != a.level - 1) {
      throw Error(ErrorKind::ShapeMismatch, "hom-category of " + a.name + " at the wrong level");
    }
  for (const auto& m : a.comps)
    if (!m) throw Error(ErrorKind::ShapeMismatch, "missing composition functor in " + a.name);
  for (const auto& j : a.units)
    if (!j) throw Error(ErrorKind::ShapeMismatch, "missing unit functor in " + a.name);
}

// Compares two legs built by `legs`; errors while building count as broken.
template <typename Legs>
void compare(CheckReport& out, const std::string& axiom, std::vector<std::string> loc,
             const std::string& left_name, const std::string& right_name, Legs&& legs) {
  try {
    auto [l, r] = legs();
    if (auto d = functor_difference(*l, *r)) {
      out.add(axiom, std::move(loc), left_name, right_name + " differs at " + *d);
    }
  } catch (const Error& e) {
    out.add(axiom, std::move(loc), left_name + " = " + right_name, std::string("broken: ") + e.what());
  }
}

std::string hom_name(const EnrichedCat& a, std::size_t x, std::size_t y) {
  return "hom(" + a.objects[x] + "," + a.objects[y] + ")";
}

}  // namespace

CheckReport check_enriched_cat(const EnrichedCat& a, const CheckOptions& opts) {
  CheckReport report;
  if (a.level == 0) {
    if (a.obj >= a.base->cat().num_objects()) report.add("hom.missing", {}, "object of the base", "none");
    return report;
  }
  require_fold(a, 0, "enriched category");
  if (a.level == 1) return check_vcat(vcat_from_encat(a), opts);
  require_cat_shape(a);
  std::size_t n = a.size();
  const MonoidalPtr& v = a.base;
  auto lbl = [&](std::size_t x) { return a.objects[x]; };

  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) report.merge(check_enriched_cat(a.hom(x, y), opts), {hom_name(a, x, y)});
  if (!report.ok()) {
    report.normalize();
    return report;
  }

  EnCatPtr unit = unit_tower(v, a.level - 1);
  for (std::size_t x = 0; x < n; ++x) {
    const EnrichedFunctor& J = a.unit(x);
    std::string jname = "J_" + lbl(x);
    if (J.level != a.level - 1 || !J.source || !same_cat(*J.source, *unit) ||
        !same_cat(*J.target, a.hom(x, x))) {
      report.add("unit.type", {lbl(x)}, jname + ": I -> " + hom_name(a, x, x), "wrong endpoints");
    } else {
      report.merge(check_enriched_functor(J, opts), {jname});
    }
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        const EnrichedFunctor& M = a.comp(x, y, z);
        std::string mname = "M_{" + lbl(x) + "," + lbl(y) + "," + lbl(z) + "}";
        auto src = tensor_tower(a.hom_ptr(y, z), a.hom_ptr(x, y), 1);
        if (M.level != a.level - 1 || !M.source || !same_cat(*M.source, *src) ||
            !same_cat(*M.target, a.hom(x, z))) {
          report.add("comp.type", {lbl(x), lbl(y), lbl(z)},
                     mname + ": " + hom_name(a, y, z) + " (x)_1 " + hom_name(a, x, y) + " -> " +
                         hom_name(a, x, z),
                     "wrong endpoints");
        } else {
          report.merge(check_enriched_functor(M, opts), {mname});
        }
      }
  }
  if (!report.ok()) {
    report.normalize();
    return report;
  }

  guard_budget(opts, n * n * n * n, "composition pentagon of " + a.name);
  CheckReport diagrams = run_partitioned(n, opts, [&](std::size_t x, CheckReport& out) {
    for (std::size_t y = 0; y < n; ++y) {
      compare(out, "encat.unit.left", {lbl(x), lbl(y)}, "M_{x,y,y} . (J_y (x)_1 1)", "1", [&] {
        auto t = tensor_functors(a.unit(y), *identity_functor(a.hom_ptr(x, y)), 1);
        return std::pair{compose_functors(a.comp(x, y, y), *t), identity_functor(a.hom_ptr(x, y))};
      });
      compare(out, "encat.unit.right", {lbl(x), lbl(y)}, "M_{x,x,y} . (1 (x)_1 J_x)", "1", [&] {
        auto t = tensor_functors(*identity_functor(a.hom_ptr(x, y)), a.unit(x), 1);
        return std::pair{compose_functors(a.comp(x, x, y), *t), identity_functor(a.hom_ptr(x, y))};
      });
      for (std::size_t z = 0; z < n; ++z)
        for (std::size_t w = 0; w < n; ++w) {
          compare(out, "encat.assoc", {lbl(x), lbl(y), lbl(z), lbl(w)},
                  "M_{x,y,w} . (M_{y,z,w} (x)_1 1)", "M_{x,z,w} . (1 (x)_1 M_{x,y,z}) . alpha", [&] {
                    auto l = compose_functors(
                        a.comp(x, y, w),
                        *tensor_functors(a.comp(y, z, w), *identity_functor(a.hom_ptr(x, y)), 1));
                    auto r1 = compose_functors(
                        a.comp(x, z, w),
                        *tensor_functors(*identity_functor(a.hom_ptr(z, w)), a.comp(x, y, z), 1));
                    auto assoc = associator_functor(a.hom_ptr(z, w), a.hom_ptr(y, z), a.hom_ptr(x, y), 1);
                    return std::pair{l, compose_functors(*r1, *assoc)};
                  });
        }
    }
  });
  report.merge(diagrams);
  report.normalize();
  return report;
}

CheckReport check_enriched_functor(const EnrichedFunctor& f, const CheckOptions& opts) {
  CheckReport report;
  if (!f.source || !f.target) {
    report.add("functor.missing", {}, "functor", "none");
    return report;
  }
  if (f.source->level != f.level || f.target->level != f.level) {
    throw Error(ErrorKind::ShapeMismatch, "functor endpoints at the wrong level");
  }
  const EnrichedCat& A = *f.source;
  const EnrichedCat& B = *f.target;
  if (f.level == 0) {
    const FinCat& c = A.base->cat();
    if (f.mor >= c.num_morphisms() || c.dom(f.mor) != A.obj || c.cod(f.mor) != B.obj) {
      report.add("functor.type", {}, c.object_name(A.obj) + " -> " + c.object_name(B.obj),
                 mor_text(f));
    }
    return report;
  }
  std::size_t n = A.size();
  if (f.obj_map.size() != n || f.homs.size() != n * n) {
    throw Error(ErrorKind::ShapeMismatch, "functor tables do not match " + A.name);
  }
  for (std::size_t x = 0; x < n; ++x)
    if (f.obj_map[x] >= B.size()) {
      report.add("functor.object", {A.objects[x]}, "object of " + B.name, std::to_string(f.obj_map[x]));
    }
  if (!report.ok()) return report;

  if (f.level == 1) {
    VFunctor t;
    t.source = std::make_shared<VCat>(vcat_from_encat(A));
    t.target = std::make_shared<VCat>(vcat_from_encat(B));
    t.obj_map = f.obj_map;
    for (const auto& h : f.homs) t.hom_map.push_back(h->mor);
    return check_vfunctor(t, opts);
  }
  require_cat_shape(A);
  require_cat_shape(B);
  auto lbl = [&](std::size_t x) { return A.objects[x]; };
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const EnrichedFunctor& h = f.hom(x, y);
      std::string name = "F_{" + lbl(x) + "," + lbl(y) + "}";
      if (h.level != f.level - 1 || !h.source || !same_cat(*h.source, A.hom(x, y)) ||
          !same_cat(*h.target, B.hom(f.obj_map[x], f.obj_map[y]))) {
        report.add("functor.hom.type", {lbl(x), lbl(y)},
                   name + ": " + hom_name(A, x, y) + " -> " + hom_name(B, f.obj_map[x], f.obj_map[y]),
                   "wrong endpoints");
      } else {
        report.merge(check_enriched_functor(h, opts), {name});
      }
    }
  if (!report.ok()) {
    report.normalize();
    return report;
  }
  guard_budget(opts, n * n * n, "functor squares");
  CheckReport diagrams = run_partitioned(n, opts, [&](std::size_t x, CheckReport& out) {
    std::size_t fx = f.obj_map[x];
    compare(out, "enfunctor.unit", {lbl(x)}, "F_{x,x} . J_x", "J_{Fx}", [&] {
      return std::pair{compose_functors(f.hom(x, x), A.unit(x)), B.units[fx]};
    });
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        compare(out, "enfunctor.comp", {lbl(x), lbl(y), lbl(z)}, "F_{x,z} . M_{x,y,z}",
                "M_{Fx,Fy,Fz} . (F_{y,z} (x)_1 F_{x,y})", [&] {
                  auto l = compose_functors(f.hom(x, z), A.comp(x, y, z));
                  auto t = tensor_functors(f.hom(y, z), f.hom(x, y), 1);
                  auto r = compose_functors(B.comp(fx, f.obj_map[y], f.obj_map[z]), *t);
                  return std::pair{l, r};
                });
      }
  });
  report.merge(diagrams);
  report.normalize();
  return report;
}

CheckReport check_functoriality_consequences(const EnrichedCat& a) {
  if (a.level != 2) throw Error(ErrorKind::ShapeMismatch, "consequences are stated at level 2");
  require_cat_shape(a);
  const IteratedMonoidalCat& v = *a.base;
  CheckReport report;
  std::size_t n = a.size();
  for (std::size_t x = 0; x < n; ++x) {
    // J_{x,00} = j_{1_x}: the unit of hom(x,x) at the object picked by J_x.
    const EnrichedFunctor& J = a.unit(x);
    const EnrichedCat& H = a.hom(x, x);
    std::size_t one = J.obj_map.at(0);
    check_instance(v, report, "consequence.identity", {a.objects[x]}, [&](const DiagramEval& ev) {
      return std::pair{ev.entry(J.hom(0, 0).mor, ev.verbose() ? "J_{" + a.objects[x] + ",00}" : ""),
                       ev.entry(H.unit(one).mor, ev.verbose() ? "j_" + H.objects[one] : "")};
    });
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        const EnrichedCat& A = a.hom(x, y);
        const EnrichedCat& B = a.hom(y, z);
        const EnrichedCat& C = a.hom(x, z);
        const EnrichedFunctor& M = a.comp(x, y, z);
        std::size_t na = A.size();
        auto obj = [&](std::size_t g, std::size_t f) { return M.obj_map.at(g * na + f); };
        auto Mh = [&](const DiagramEval& ev, std::size_t g, std::size_t f, std::size_t g1,
                      std::size_t f1) {
          return ev.entry(M.hom(g * na + f, g1 * na + f1).mor,
                          ev.verbose() ? "M(" + B.objects[g] + A.objects[f] + "," + B.objects[g1] +
                                             A.objects[f1] + ")"
                                       : "");
        };
        auto comp = [&](const DiagramEval& ev, const EnrichedCat& K, std::size_t p, std::size_t q,
                        std::size_t r) {
          return ev.entry(K.comp(p, q, r).mor, ev.verbose() ? "M^{" + K.name + "}_{" + K.objects[p] +
                                                                  "," + K.objects[q] + "," +
                                                                  K.objects[r] + "}"
                                                            : "");
        };
        std::vector<std::string> base_loc{a.objects[x], a.objects[y], a.objects[z]};
        for (std::size_t g = 0; g < B.size(); ++g)
          for (std::size_t f = 0; f < na; ++f) {
            auto loc = base_loc;
            loc.push_back(B.objects[g]);
            loc.push_back(A.objects[f]);
            check_instance(v, report, "consequence.unit", loc, [&](const DiagramEval& ev) {
              Term jj = ev.tensor(2, ev.entry(B.unit(g).mor, ev.verbose() ? "j_" + B.objects[g] : ""),
                                  ev.entry(A.unit(f).mor, ev.verbose() ? "j_" + A.objects[f] : ""));
              Term l = ev.then(jj, Mh(ev, g, f, g, f));
              std::size_t m = obj(g, f);
              return std::pair{l, ev.entry(C.unit(m).mor, ev.verbose() ? "j_" + C.objects[m] : "")};
            });
            for (std::size_t g1 = 0; g1 < B.size(); ++g1)
              for (std::size_t f1 = 0; f1 < na; ++f1)
                for (std::size_t g2 = 0; g2 < B.size(); ++g2)
                  for (std::size_t f2 = 0; f2 < na; ++f2) {
                    auto l2 = loc;
                    l2.insert(l2.end(), {B.objects[g1], A.objects[f1], B.objects[g2], A.objects[f2]});
                    check_instance(v, report, "consequence.interchange", l2, [&](const DiagramEval& ev) {
                      Term left = ev.then(ev.tensor(1, Mh(ev, g1, f1, g2, f2), Mh(ev, g, f, g1, f1)),
                                          comp(ev, C, obj(g, f), obj(g1, f1), obj(g2, f2)));
                      Term right = ev.then(
                          ev.eta(1, 2, B.hom(g1, g2).obj, A.hom(f1, f2).obj, B.hom(g, g1).obj,
                                 A.hom(f, f1).obj),
                          ev.tensor(2, comp(ev, B, g, g1, g2), comp(ev, A, f, f1, f2)),
                          Mh(ev, g, f, g2, f2));
                      return std::pair{left, right};
                    });
                  }
          }
      }
  report.normalize();
  return report;
}

}  // namespace itercat
