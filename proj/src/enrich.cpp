#include "itercat/enrich.hpp"

#include "itercat/diagram.hpp"
#include "itercat/error.hpp"

namespace itercat {

std::optional<std::size_t> VCat::find(const std::string& label) const {
  for (std::size_t a = 0; a < objects.size(); ++a)
    if (objects[a] == label) return a;
  return std::nullopt;
}

VCat VCat::empty(std::string name, MonoidalPtr base, std::vector<std::string> objects) {
  VCat a;
  a.name = std::move(name);
  a.base = std::move(base);
  a.objects = std::move(objects);
  std::size_t n = a.objects.size();
  a.homs.assign(n * n, kNoObj);
  a.comps.assign(n * n * n, kNoMor);
  a.units.assign(n, kNoMor);
  return a;
}

namespace {

std::string comp_label(const VCat& a, std::size_t x, std::size_t y, std::size_t z) {
  return "M_{" + a.objects[x] + "," + a.objects[y] + "," + a.objects[z] + "}";
}

std::string arrow(const FinCat& c, std::optional<ObjId> d, ObjId e) {
  return (d ? c.object_name(*d) : std::string("undefined")) + " -> " + c.object_name(e);
}

std::string typed(const FinCat& c, MorId f) {
  return c.mor_name(f) + ": " + c.object_name(c.dom(f)) + " -> " + c.object_name(c.cod(f));
}

void require_shape(const VCat& a) {
  std::size_t n = a.size();
  if (!a.base || a.homs.size() != n * n || a.comps.size() != n * n * n || a.units.size() != n) {
    throw Error(ErrorKind::ShapeMismatch, "tables of " + a.name + " do not match its object count");
  }
}

// Type of a morphism slot; adds a finding and returns false when wrong.
bool check_slot(CheckReport& out, const FinCat& c, const std::string& axiom,
                const std::vector<std::string>& loc, const std::string& label, MorId f,
                std::optional<ObjId> dom, ObjId cod) {
  if (f == kNoMor || f >= c.num_morphisms()) {
    out.add(axiom + ".missing", loc, label + ": " + arrow(c, dom, cod), "none");
    return false;
  }
  if (!dom || c.dom(f) != *dom || c.cod(f) != cod) {
    out.add(axiom + ".type", loc, label + ": " + arrow(c, dom, cod), typed(c, f));
    return false;
  }
  return true;
}

}  // namespace

CheckReport check_vcat(const VCat& a, const CheckOptions& opts) {
  require_shape(a);
  const IteratedMonoidalCat& v = *a.base;
  const FinCat& c = v.cat();
  std::size_t n = a.size();
  CheckReport report;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (a.hom(x, y) >= c.num_objects()) {
        report.add("hom.missing", {a.objects[x], a.objects[y]}, "object of the base", "none");
      }
  if (!report.ok()) return report;

  for (std::size_t x = 0; x < n; ++x) {
    check_slot(report, c, "unit", {a.objects[x]}, "j_" + a.objects[x], a.unit(x), v.unit,
               a.hom(x, x));
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        check_slot(report, c, "comp", {a.objects[x], a.objects[y], a.objects[z]},
                   comp_label(a, x, y, z), a.comp(x, y, z),
                   v.find_tensor(1, a.hom(y, z), a.hom(x, y)), a.hom(x, z));
      }
  }
  if (!report.ok()) return report;

  auto M = [&](const DiagramEval& ev, std::size_t x, std::size_t y, std::size_t z) {
    return ev.entry(a.comp(x, y, z), ev.verbose() ? comp_label(a, x, y, z) : std::string());
  };
  auto j = [&](const DiagramEval& ev, std::size_t x) {
    return ev.entry(a.unit(x), ev.verbose() ? "j_" + a.objects[x] : std::string());
  };
  guard_budget(opts, n * n * n * n, "composition pentagon of " + a.name);
  CheckReport diagrams = run_partitioned(n, opts, [&](std::size_t x, CheckReport& out) {
    for (std::size_t y = 0; y < n; ++y) {
      const std::vector<std::string> pair{a.objects[x], a.objects[y]};
      check_instance(v, out, "vcat.unit.left", pair, [&](const DiagramEval& ev) {
        Term leg = ev.then(ev.tensor(1, j(ev, y), ev.id(a.hom(x, y))), M(ev, x, y, y));
        return std::pair{leg, ev.id(a.hom(x, y))};
      });
      check_instance(v, out, "vcat.unit.right", pair, [&](const DiagramEval& ev) {
        Term leg = ev.then(ev.tensor(1, ev.id(a.hom(x, y)), j(ev, x)), M(ev, x, x, y));
        return std::pair{leg, ev.id(a.hom(x, y))};
      });
      for (std::size_t z = 0; z < n; ++z)
        for (std::size_t w = 0; w < n; ++w) {
          check_instance(
              v, out, "vcat.assoc", {a.objects[x], a.objects[y], a.objects[z], a.objects[w]},
              [&](const DiagramEval& ev) {
                Term left = ev.then(ev.tensor(1, M(ev, y, z, w), ev.id(a.hom(x, y))), M(ev, x, y, w));
                Term right = ev.then(ev.alpha(1, a.hom(z, w), a.hom(y, z), a.hom(x, y)),
                                     ev.tensor(1, ev.id(a.hom(z, w)), M(ev, x, y, z)),
                                     M(ev, x, z, w));
                return std::pair{left, right};
              });
        }
    }
  });
  report.merge(diagrams);
  report.normalize();
  return report;
}

namespace {

void require_functor_shape(const VFunctor& t) {
  if (!t.source || !t.target) throw Error(ErrorKind::ShapeMismatch, "functor without endpoints");
  require_shape(*t.source);
  require_shape(*t.target);
  std::size_t n = t.source->size();
  if (t.obj_map.size() != n || t.hom_map.size() != n * n) {
    throw Error(ErrorKind::ShapeMismatch, "functor tables do not match " + t.source->name);
  }
  for (std::size_t x : t.obj_map)
    if (x >= t.target->size()) {
      throw Error(ErrorKind::ShapeMismatch, "object map leaves " + t.target->name);
    }
  if (t.source->base != t.target->base) {
    throw Error(ErrorKind::ShapeMismatch, "functor endpoints have different bases");
  }
}

}  // namespace

CheckReport check_vfunctor(const VFunctor& t, const CheckOptions& opts) {
  require_functor_shape(t);
  const VCat& A = *t.source;
  const VCat& B = *t.target;
  const IteratedMonoidalCat& v = *A.base;
  const FinCat& c = v.cat();
  std::size_t n = A.size();
  auto F = [&](std::size_t x) { return t.obj_map[x]; };
  auto T_label = [&](std::size_t x, std::size_t y) {
    return "T_{" + A.objects[x] + "," + A.objects[y] + "}";
  };

  CheckReport report;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      check_slot(report, c, "functor.hom", {A.objects[x], A.objects[y]}, T_label(x, y),
                 t.component(x, y), A.hom(x, y), B.hom(F(x), F(y)));
    }
  if (!report.ok()) return report;

  auto T = [&](const DiagramEval& ev, std::size_t x, std::size_t y) {
    return ev.entry(t.component(x, y), ev.verbose() ? T_label(x, y) : std::string());
  };
  auto MA = [&](const DiagramEval& ev, std::size_t x, std::size_t y, std::size_t z) {
    return ev.entry(A.comp(x, y, z), ev.verbose() ? comp_label(A, x, y, z) : std::string());
  };
  auto MB = [&](const DiagramEval& ev, std::size_t x, std::size_t y, std::size_t z) {
    return ev.entry(B.comp(x, y, z), ev.verbose() ? comp_label(B, x, y, z) : std::string());
  };
  guard_budget(opts, n * n * n, "functor squares");
  CheckReport diagrams = run_partitioned(n, opts, [&](std::size_t x, CheckReport& out) {
    check_instance(v, out, "vfunctor.unit", {A.objects[x]}, [&](const DiagramEval& ev) {
      Term leg = ev.then(ev.entry(A.unit(x), ev.verbose() ? "j_" + A.objects[x] : ""), T(ev, x, x));
      return std::pair{leg, ev.entry(B.unit(F(x)), ev.verbose() ? "j_" + B.objects[F(x)] : "")};
    });
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        check_instance(v, out, "vfunctor.comp", {A.objects[x], A.objects[y], A.objects[z]},
                       [&](const DiagramEval& ev) {
                         Term left = ev.then(MA(ev, x, y, z), T(ev, x, z));
                         Term right = ev.then(ev.tensor(1, T(ev, y, z), T(ev, x, y)),
                                              MB(ev, F(x), F(y), F(z)));
                         return std::pair{left, right};
                       });
      }
  });
  report.merge(diagrams);
  report.normalize();
  return report;
}

CheckReport check_vnat(const VNatTrans& nt, const CheckOptions& opts) {
  const VFunctor& T = nt.source;
  const VFunctor& S = nt.target;
  require_functor_shape(T);
  require_functor_shape(S);
  if (!(*T.source == *S.source) || !(*T.target == *S.target)) {
    throw Error(ErrorKind::ShapeMismatch, "transformation between non-parallel functors");
  }
  const VCat& A = *T.source;
  const VCat& B = *T.target;
  const IteratedMonoidalCat& v = *A.base;
  const FinCat& c = v.cat();
  std::size_t n = A.size();
  if (nt.components.size() != n) {
    throw Error(ErrorKind::ShapeMismatch, "component family has the wrong size");
  }
  for (std::size_t x = 0; x < n; ++x) {
    MorId f = nt.components[x];
    ObjId want = B.hom(T.obj_map[x], S.obj_map[x]);
    if (f == kNoMor || f >= c.num_morphisms() || c.dom(f) != v.unit || c.cod(f) != want) {
      throw Error(ErrorKind::ShapeMismatch,
                  "component at " + A.objects[x] + " must be I -> " + c.object_name(want));
    }
  }
  auto alpha = [&](const DiagramEval& ev, std::size_t x) {
    return ev.entry(nt.components[x], ev.verbose() ? "alpha_" + A.objects[x] : std::string());
  };
  auto comp = [&](const DiagramEval& ev, std::size_t x, std::size_t y, std::size_t z) {
    return ev.entry(B.comp(x, y, z), ev.verbose() ? comp_label(B, x, y, z) : std::string());
  };
  auto hom = [&](const DiagramEval& ev, const VFunctor& F, const char* name, std::size_t x,
                 std::size_t y) {
    return ev.entry(F.component(x, y), ev.verbose() ? std::string(name) + "_{" + A.objects[x] +
                                                          "," + A.objects[y] + "}"
                                                    : std::string());
  };
  guard_budget(opts, n * n, "naturality hexagons");
  CheckReport report = run_partitioned(n, opts, [&](std::size_t x, CheckReport& out) {
    for (std::size_t y = 0; y < n; ++y) {
      check_instance(v, out, "vnat.hexagon", {A.objects[x], A.objects[y]},
                     [&](const DiagramEval& ev) {
                       std::size_t Tx = T.obj_map[x], Ty = T.obj_map[y];
                       std::size_t Sx = S.obj_map[x], Sy = S.obj_map[y];
                       Term left = ev.then(ev.tensor(1, alpha(ev, y), hom(ev, T, "T", x, y)),
                                           comp(ev, Tx, Ty, Sy));
                       Term right = ev.then(ev.tensor(1, hom(ev, S, "S", x, y), alpha(ev, x)),
                                            comp(ev, Tx, Sx, Sy));
                       return std::pair{left, right};
                     });
    }
  });
  report.normalize();
  return report;
}

VCat thin_vcat(std::string name, MonoidalPtr base, std::vector<std::string> objects,
               const std::vector<ObjId>& homs) {
  VCat a = VCat::empty(std::move(name), std::move(base), std::move(objects));
  if (homs.size() != a.homs.size()) throw Error(ErrorKind::ShapeMismatch, "hom table size");
  a.homs = homs;
  const IteratedMonoidalCat& v = *a.base;
  std::size_t n = a.size();
  for (std::size_t x = 0; x < n; ++x) {
    if (auto j = thin_morphism(v.cat(), v.unit, a.hom(x, x))) a.set_unit(x, *j);
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        auto d = v.find_tensor(1, a.hom(y, z), a.hom(x, y));
        if (!d) continue;
        if (auto m = thin_morphism(v.cat(), *d, a.hom(x, z))) a.set_comp(x, y, z, *m);
      }
  }
  return a;
}

VFunctor thin_vfunctor(VCatPtr source, VCatPtr target, std::vector<std::size_t> obj_map) {
  VFunctor t;
  t.source = std::move(source);
  t.target = std::move(target);
  t.obj_map = std::move(obj_map);
  std::size_t n = t.source->size();
  t.hom_map.assign(n * n, kNoMor);
  const FinCat& c = t.source->base->cat();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      auto m = thin_morphism(c, t.source->hom(x, y), t.target->hom(t.obj_map[x], t.obj_map[y]));
      if (m) t.hom_map[x * n + y] = *m;
    }
  return t;
}

VCat vcat_unit(MonoidalPtr v) {
  VCat a = VCat::empty("I", v, {"0"});
  MorId one = v->cat().identity(v->unit);
  a.set_hom(0, 0, v->unit);
  a.set_comp(0, 0, 0, one);
  a.set_unit(0, one);
  return a;
}

VFunctor identity_vfunctor(VCatPtr a) {
  VFunctor t;
  t.source = a;
  t.target = a;
  std::size_t n = a->size();
  const FinCat& c = a->base->cat();
  for (std::size_t x = 0; x < n; ++x) t.obj_map.push_back(x);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) t.hom_map.push_back(c.identity(a->hom(x, y)));
  return t;
}

VFunctor compose_vfunctors(const VFunctor& s, const VFunctor& t) {
  if (!(*t.target == *s.source)) {
    throw Error(ErrorKind::ShapeMismatch, "composite of functors with unmatched endpoints");
  }
  const FinCat& c = t.source->base->cat();
  VFunctor r;
  r.source = t.source;
  r.target = s.target;
  std::size_t n = t.source->size();
  for (std::size_t x = 0; x < n; ++x) r.obj_map.push_back(s.obj_map[t.obj_map[x]]);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      r.hom_map.push_back(
          compose(c, s.component(t.obj_map[x], t.obj_map[y]), t.component(x, y)));
    }
  return r;
}

bool same_vfunctor(const VFunctor& s, const VFunctor& t) {
  return *s.source == *t.source && *s.target == *t.target && s.obj_map == t.obj_map &&
         s.hom_map == t.hom_map;
}

namespace {

void require_fold(const IteratedMonoidalCat& v, int needed, const std::string& what) {
  if (needed > v.fold) {
    throw Error(ErrorKind::FoldExceeded, what + " needs fold " + std::to_string(needed) +
                                             ", base has " + std::to_string(v.fold));
  }
}

}  // namespace

VCat tensor_vcat(const VCat& a, const VCat& b, int i) {
  if (a.base != b.base) throw Error(ErrorKind::ShapeMismatch, "tensor of VCats over different bases");
  if (i < 1) throw Error(ErrorKind::IndexOutOfRange, "product index must be at least 1");
  const IteratedMonoidalCat& v = *a.base;
  require_fold(v, i + 1, "product " + std::to_string(i) + " of V-categories");
  const FinCat& c = v.cat();
  std::size_t na = a.size(), nb = b.size();
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < na; ++x)
    for (std::size_t y = 0; y < nb; ++y) labels.push_back("(" + a.objects[x] + "," + b.objects[y] + ")");
  VCat r = VCat::empty("(" + a.name + " (x)_" + std::to_string(i) + " " + b.name + ")", a.base,
                       std::move(labels));
  const int k = i + 1;
  std::size_t n = r.size();
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      r.set_hom(p, q, tensor_obj(v, k, a.hom(p / nb, q / nb), b.hom(p % nb, q % nb)));
    }
  for (std::size_t p = 0; p < n; ++p) {
    r.set_unit(p, tensor_mor(v, k, a.unit(p / nb), b.unit(p % nb)));
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t s = 0; s < n; ++s) {
        std::size_t x = p / nb, x1 = q / nb, x2 = s / nb;
        std::size_t y = p % nb, y1 = q % nb, y2 = s % nb;
        auto eta = v.find_eta(1, k, a.hom(x1, x2), b.hom(y1, y2), a.hom(x, x1), b.hom(y, y1));
        if (!eta) {
          throw Error(ErrorKind::MissingEntry,
                      eta_label(v, 1, k, a.hom(x1, x2), b.hom(y1, y2), a.hom(x, x1), b.hom(y, y1)));
        }
        MorId mm = tensor_mor(v, k, a.comp(x, x1, x2), b.comp(y, y1, y2));
        r.set_comp(p, q, s, compose(c, mm, *eta));
      }
  }
  return r;
}

VFunctor tensor_vfunctor(const VFunctor& t, const VFunctor& s, int i) {
  VFunctor r;
  r.source = std::make_shared<VCat>(tensor_vcat(*t.source, *s.source, i));
  r.target = std::make_shared<VCat>(tensor_vcat(*t.target, *s.target, i));
  const IteratedMonoidalCat& v = *t.source->base;
  std::size_t nb = s.source->size(), mb = s.target->size();
  std::size_t n = r.source->size();
  for (std::size_t p = 0; p < n; ++p) r.obj_map.push_back(t.obj_map[p / nb] * mb + s.obj_map[p % nb]);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      r.hom_map.push_back(
          tensor_mor(v, i + 1, t.component(p / nb, q / nb), s.component(p % nb, q % nb)));
    }
  return r;
}

VFunctor vcat_associator(const VCat& a, const VCat& b, const VCat& c, int i) {
  const IteratedMonoidalCat& v = *a.base;
  require_fold(v, i + 1, "associator of V-categories");
  VFunctor r;
  r.source = std::make_shared<VCat>(tensor_vcat(tensor_vcat(a, b, i), c, i));
  r.target = std::make_shared<VCat>(tensor_vcat(a, tensor_vcat(b, c, i), i));
  std::size_t nb = b.size(), nc = c.size();
  std::size_t n = r.source->size();
  // ((x,y),z) and (x,(y,z)) share the index (x·|B| + y)·|C| + z.
  for (std::size_t p = 0; p < n; ++p) r.obj_map.push_back(p);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      std::size_t x = p / (nb * nc), y = (p / nc) % nb, z = p % nc;
      std::size_t x1 = q / (nb * nc), y1 = (q / nc) % nb, z1 = q % nc;
      auto m = v.find_alpha(i + 1, a.hom(x, x1), b.hom(y, y1), c.hom(z, z1));
      if (!m) {
        throw Error(ErrorKind::MissingEntry,
                    alpha_label(v, i + 1, a.hom(x, x1), b.hom(y, y1), c.hom(z, z1)));
      }
      r.hom_map.push_back(*m);
    }
  return r;
}

VFunctor vcat_interchange(const VCat& a, const VCat& b, const VCat& c, const VCat& d, int i,
                          int j) {
  if (i < 1 || i >= j) {
    throw Error(ErrorKind::BadIndices, "interchange needs 1 <= i < j, got " + std::to_string(i) +
                                           "," + std::to_string(j));
  }
  const IteratedMonoidalCat& v = *a.base;
  require_fold(v, j + 1, "interchange of V-categories");
  VFunctor r;
  r.source = std::make_shared<VCat>(tensor_vcat(tensor_vcat(a, b, j), tensor_vcat(c, d, j), i));
  r.target = std::make_shared<VCat>(tensor_vcat(tensor_vcat(a, c, i), tensor_vcat(b, d, i), j));
  std::size_t nb = b.size(), nc = c.size(), nd = d.size();
  std::size_t n = r.source->size();
  auto split = [&](std::size_t p) {
    return std::array<std::size_t, 4>{p / (nb * nc * nd), (p / (nc * nd)) % nb, (p / nd) % nc,
                                      p % nd};
  };
  for (std::size_t p = 0; p < n; ++p) {
    auto [x, y, z, w] = split(p);
    r.obj_map.push_back(((x * nc + z) * nb + y) * nd + w);
  }
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      auto [x, y, z, w] = split(p);
      auto [x1, y1, z1, w1] = split(q);
      ObjId A = a.hom(x, x1), B = b.hom(y, y1), C = c.hom(z, z1), D = d.hom(w, w1);
      auto m = v.find_eta(i + 1, j + 1, A, B, C, D);
      if (!m) throw Error(ErrorKind::MissingEntry, eta_label(v, i + 1, j + 1, A, B, C, D));
      r.hom_map.push_back(*m);
    }
  return r;
}

}  // namespace itercat
