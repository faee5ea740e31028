#include "itercat/base_change.hpp"

#include <functional>

#include "itercat/diagram.hpp"
#include "itercat/error.hpp"

namespace itercat {

std::optional<MorId> NFoldMonoidalFunctor::lambda(int i, ObjId a, ObjId b) const {
  if (i < 1 || i > fold()) return std::nullopt;
  const auto& fam = lambdas[static_cast<std::size_t>(i - 1)];
  auto it = fam.find({a, b});
  if (it == fam.end()) return std::nullopt;
  return it->second;
}

namespace {

bool same_base(const MonoidalPtr& a, const MonoidalPtr& b) {
  return a == b || (a && b && a->base == b->base);
}

bool same_base(const FinCatPtr& a, const MonoidalPtr& b) { return b && (a == b->base || same_tables(*a, b->cat())); }

std::string lambda_label(const NFoldMonoidalFunctor& f, int i, ObjId a, ObjId b) {
  const FinCat& c = f.source->cat();
  return "lambda^" + std::to_string(i) + "_{" + c.object_name(a) + "," + c.object_name(b) + "}";
}

// Pairs (A, B) of source objects with A ⊗_i B defined.
template <typename Fn>
void each_pair(const IteratedMonoidalCat& v, int i, Fn&& fn) {
  ObjId n = static_cast<ObjId>(v.cat().num_objects());
  for (ObjId a = 0; a < n; ++a)
    for (ObjId b = 0; b < n; ++b)
      if (auto ab = v.find_tensor(i, a, b)) fn(a, b, *ab);
}

}  // namespace

NFoldMonoidalFunctor identity_nfold(MonoidalPtr v) {
  NFoldMonoidalFunctor f;
  f.source = v;
  f.target = v;
  f.f = identity_functor(v->base);
  for (int i = 1; i <= v->fold; ++i) {
    auto& fam = f.lambdas.emplace_back();
    each_pair(*v, i, [&](ObjId a, ObjId b, ObjId ab) { fam[{a, b}] = v->cat().identity(ab); });
  }
  return f;
}

NFoldMonoidalFunctor thin_nfold(MonoidalPtr source, MonoidalPtr target, std::vector<ObjId> obj_map,
                                int fold) {
  const FinCat& s = source->cat();
  const FinCat& t = target->cat();
  if (obj_map.size() != s.num_objects()) throw Error(ErrorKind::ShapeMismatch, "object map does not cover the source");
  if (fold > source->fold || fold > target->fold) {
    throw Error(ErrorKind::FoldExceeded, "functor with " + std::to_string(fold) + " products");
  }
  NFoldMonoidalFunctor f;
  f.source = source;
  f.target = target;
  f.f = StrictFunctor{source->base, target->base, obj_map, {}};
  auto unique = [&](ObjId a, ObjId b, const std::string& what) {
    auto m = thin_morphism(t, a, b);
    if (!m) {
      throw Error(ErrorKind::MissingEntry,
                  "no morphism " + t.object_name(a) + " -> " + t.object_name(b) + " for " + what);
    }
    return *m;
  };
  for (MorId m = 0; m < s.num_morphisms(); ++m) {
    f.f.mor_map.push_back(unique(obj_map[s.dom(m)], obj_map[s.cod(m)], s.mor_name(m)));
  }
  for (int i = 1; i <= fold; ++i) {
    auto& fam = f.lambdas.emplace_back();
    each_pair(*source, i, [&](ObjId a, ObjId b, ObjId ab) {
      ObjId d = tensor_obj(*target, i, obj_map[a], obj_map[b]);
      fam[{a, b}] = unique(d, obj_map[ab], lambda_label(f, i, a, b));
    });
  }
  return f;
}

CheckReport check_nfold_functor(const NFoldMonoidalFunctor& f, const CheckOptions& opts) {
  if (!f.source || !f.target || !f.f.source || !f.f.target || !same_base(f.f.source, f.source) ||
      !same_base(f.f.target, f.target)) {
    throw Error(ErrorKind::ShapeMismatch, "underlying functor does not join the two bases");
  }
  const int n = f.fold();
  if (n > f.source->fold || n > f.target->fold) {
    throw Error(ErrorKind::FoldExceeded, "functor with " + std::to_string(n) + " products");
  }
  const IteratedMonoidalCat& S = *f.source;
  const IteratedMonoidalCat& T = *f.target;
  const FinCat& s = S.cat();
  const FinCat& t = T.cat();
  CheckReport report;
  report.merge(check_functor(f.f), {"functor"});
  if (!report.ok()) {
    report.normalize();
    return report;
  }
  if (f.obj(S.unit) != T.unit) report.add("mfunctor.unit", {}, t.object_name(T.unit), t.object_name(f.obj(S.unit)));

  for (int i = 1; i <= n; ++i) {
    each_pair(S, i, [&](ObjId a, ObjId b, ObjId ab) {
      std::vector<std::string> loc{std::to_string(i), s.object_name(a), s.object_name(b)};
      auto lam = f.lambda(i, a, b);
      if (!lam) {
        report.add("lambda.missing", loc, lambda_label(f, i, a, b), "none");
        return;
      }
      auto d = T.find_tensor(i, f.obj(a), f.obj(b));
      ObjId want_cod = f.obj(ab);
      std::string want = (d ? t.object_name(*d) : "undefined") + " -> " + t.object_name(want_cod);
      if (*lam >= t.num_morphisms()) {
        report.add("lambda.type", loc, want, "none");
      } else if (!d || t.dom(*lam) != *d || t.cod(*lam) != want_cod) {
        report.add("lambda.type", loc, want, t.object_name(t.dom(*lam)) + " -> " + t.object_name(t.cod(*lam)));
      }
    });
  }
  if (!report.ok()) {
    report.normalize();
    return report;
  }

  auto lam = [&](const DiagramEval& ev, int i, ObjId a, ObjId b) {
    return ev.entry(f.lambda(i, a, b).value_or(kNoMor), ev.verbose() ? lambda_label(f, i, a, b) : "");
  };
  auto image = [&](const DiagramEval& ev, MorId m, const std::string& label) {
    return ev.entry(m == kNoMor ? kNoMor : f.mor(m), ev.verbose() ? "F(" + label + ")" : "");
  };
  std::size_t nobj = s.num_objects(), nmor = s.num_morphisms();
  guard_budget(opts, static_cast<std::size_t>(n) * (nmor * nmor + nobj * nobj * nobj), "lambda conditions");

  CheckReport body = run_partitioned(nmor, opts, [&](std::size_t m1, CheckReport& out) {
    MorId g1 = static_cast<MorId>(m1);
    for (int i = 1; i <= n; ++i)
      for (MorId g2 = 0; g2 < nmor; ++g2) {
        check_instance(T, out, "lambda.natural", {std::to_string(i), s.mor_name(g1), s.mor_name(g2)},
                       [&](const DiagramEval& ev) {
                         auto ab = S.find_tensor(i, s.dom(g1), s.dom(g2));
                         auto ab1 = S.find_tensor(i, s.cod(g1), s.cod(g2));
                         if (!ab || !ab1) return skipped();
                         auto prod = S.find_tensor_mor(i, g1, g2);
                         Term l = ev.then(ev.tensor(i, image(ev, g1, s.mor_name(g1)), image(ev, g2, s.mor_name(g2))),
                                          lam(ev, i, s.cod(g1), s.cod(g2)));
                         Term r = ev.then(lam(ev, i, s.dom(g1), s.dom(g2)),
                                          image(ev, prod.value_or(kNoMor),
                                                "(" + s.mor_name(g1) + " (x)_" + std::to_string(i) + " " +
                                                    s.mor_name(g2) + ")"));
                         return std::pair{l, r};
                       });
      }
  });
  report.merge(body);

  CheckReport objs = run_partitioned(nobj, opts, [&](std::size_t ai, CheckReport& out) {
    ObjId a = static_cast<ObjId>(ai);
    for (int i = 1; i <= n; ++i) {
      std::string is = std::to_string(i);
      check_instance(T, out, "lambda.unit", {is, s.object_name(a), s.object_name(S.unit)},
                     [&](const DiagramEval& ev) { return std::pair{lam(ev, i, a, S.unit), ev.id(f.obj(a))}; });
      check_instance(T, out, "lambda.unit", {is, s.object_name(S.unit), s.object_name(a)},
                     [&](const DiagramEval& ev) { return std::pair{lam(ev, i, S.unit, a), ev.id(f.obj(a))}; });
      for (ObjId b = 0; b < nobj; ++b)
        for (ObjId c = 0; c < nobj; ++c) {
          check_instance(
              T, out, "lambda.assoc", {is, s.object_name(a), s.object_name(b), s.object_name(c)},
              [&](const DiagramEval& ev) {
                auto ab = S.find_tensor(i, a, b), bc = S.find_tensor(i, b, c);
                if (!ab || !bc || !S.find_tensor(i, *ab, c) || !S.find_tensor(i, a, *bc)) return skipped();
                auto al = S.find_alpha(i, a, b, c);
                Term l = ev.then(ev.tensor(i, lam(ev, i, a, b), ev.id(f.obj(c))), lam(ev, i, *ab, c),
                                 image(ev, al.value_or(kNoMor), alpha_label(S, i, a, b, c)));
                Term r = ev.then(ev.alpha(i, f.obj(a), f.obj(b), f.obj(c)),
                                 ev.tensor(i, ev.id(f.obj(a)), lam(ev, i, b, c)), lam(ev, i, a, *bc));
                return std::pair{l, r};
              });
        }
    }
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        for (ObjId b = 0; b < nobj; ++b)
          for (ObjId c = 0; c < nobj; ++c)
            for (ObjId d = 0; d < nobj; ++d) {
              std::vector<std::string> loc{std::to_string(i), std::to_string(j), s.object_name(a),
                                           s.object_name(b), s.object_name(c), s.object_name(d)};
              check_instance(T, out, "lambda.hexagon", loc, [&](const DiagramEval& ev) {
                auto ab = S.find_tensor(j, a, b), cd = S.find_tensor(j, c, d);
                auto ac = S.find_tensor(i, a, c), bd = S.find_tensor(i, b, d);
                if (!ab || !cd || !ac || !bd) return skipped();
                if (!S.find_tensor(i, *ab, *cd) || !S.find_tensor(j, *ac, *bd)) return skipped();
                auto eta = S.find_eta(i, j, a, b, c, d);
                Term l = ev.then(ev.eta(i, j, f.obj(a), f.obj(b), f.obj(c), f.obj(d)),
                                 ev.tensor(j, lam(ev, i, a, c), lam(ev, i, b, d)), lam(ev, j, *ac, *bd));
                Term r = ev.then(ev.tensor(i, lam(ev, j, a, b), lam(ev, j, c, d)), lam(ev, i, *ab, *cd),
                                 image(ev, eta.value_or(kNoMor), eta_label(S, i, j, a, b, c, d)));
                return std::pair{l, r};
              });
            }
  });
  report.merge(objs);
  report.normalize();
  return report;
}

NFoldMonoidalFunctor compose_nfold(const NFoldMonoidalFunctor& g, const NFoldMonoidalFunctor& f) {
  if (!same_base(f.target, g.source)) throw Error(ErrorKind::ShapeMismatch, "functors do not compose");
  const FinCat& e = g.target->cat();
  NFoldMonoidalFunctor r;
  r.source = f.source;
  r.target = g.target;
  r.f = StrictFunctor{f.f.source, g.f.target, {}, {}};
  for (ObjId a : f.f.obj_map) r.f.obj_map.push_back(g.obj(a));
  for (MorId m : f.f.mor_map) r.f.mor_map.push_back(m == kNoMor ? kNoMor : g.mor(m));
  int n = std::min(f.fold(), g.fold());
  for (int i = 1; i <= n; ++i) {
    auto& fam = r.lambdas.emplace_back();
    for (const auto& [key, lf] : f.lambdas[static_cast<std::size_t>(i - 1)]) {
      auto lg = g.lambda(i, f.obj(key[0]), f.obj(key[1]));
      if (!lg) continue;
      fam[key] = compose(e, g.mor(lf), *lg);
    }
  }
  return r;
}

bool same_nfold(const NFoldMonoidalFunctor& f, const NFoldMonoidalFunctor& g) {
  return same_base(f.source, g.source) && same_base(f.target, g.target) && f.f.obj_map == g.f.obj_map &&
         f.f.mor_map == g.f.mor_map && f.lambdas == g.lambdas;
}

VCat induce(const NFoldMonoidalFunctor& f, const VCat& a) {
  if (!same_base(a.base, f.source)) throw Error(ErrorKind::ShapeMismatch, a.name + " is not over the functor's source");
  if (f.fold() < 1) throw Error(ErrorKind::FoldExceeded, "change of base needs lambda^1");
  const FinCat& t = f.target->cat();
  VCat r = VCat::empty(a.name, f.target, a.objects);
  std::size_t n = a.size();
  for (std::size_t p = 0; p < n * n; ++p) r.homs[p] = f.obj(a.homs[p]);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        MorId m = a.comp(x, y, z);
        if (m == kNoMor) continue;
        auto lam = f.lambda(1, a.hom(y, z), a.hom(x, y));
        if (!lam) throw Error(ErrorKind::MissingEntry, lambda_label(f, 1, a.hom(y, z), a.hom(x, y)));
        r.set_comp(x, y, z, compose(t, f.mor(m), *lam));
      }
  for (std::size_t x = 0; x < n; ++x)
    if (a.unit(x) != kNoMor) r.set_unit(x, f.mor(a.unit(x)));
  return r;
}

VFunctor induce_on_functor(const NFoldMonoidalFunctor& f, const VFunctor& t) {
  VFunctor r;
  r.source = std::make_shared<VCat>(induce(f, *t.source));
  r.target = std::make_shared<VCat>(induce(f, *t.target));
  r.obj_map = t.obj_map;
  for (MorId m : t.hom_map) r.hom_map.push_back(m == kNoMor ? kNoMor : f.mor(m));
  return r;
}

VFunctor induced_lambda(const NFoldMonoidalFunctor& f, const VCat& a, const VCat& b, int i) {
  if (i < 1 || i + 1 > f.fold()) {
    throw Error(ErrorKind::FoldExceeded, "lambda^(1)" + std::to_string(i) + " needs lambda^" + std::to_string(i + 1));
  }
  auto fa = induce(f, a), fb = induce(f, b);
  VFunctor r;
  r.source = std::make_shared<VCat>(tensor_vcat(fa, fb, i));
  r.target = std::make_shared<VCat>(induce(f, tensor_vcat(a, b, i)));
  std::size_t nb = b.size(), n = r.source->size();
  for (std::size_t p = 0; p < n; ++p) r.obj_map.push_back(p);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      ObjId ha = a.hom(p / nb, q / nb), hb = b.hom(p % nb, q % nb);
      auto lam = f.lambda(i + 1, ha, hb);
      if (!lam) throw Error(ErrorKind::MissingEntry, lambda_label(f, i + 1, ha, hb));
      r.hom_map.push_back(*lam);
    }
  return r;
}

HomSetFunctor hom_functor(MonoidalPtr v) {
  HomSetFunctor h;
  const FinCat& c = v->cat();
  for (ObjId a = 0; a < c.num_objects(); ++a) h.sets.push_back(c.hom(v->unit, a));
  h.base = std::move(v);
  return h;
}

CheckReport check_hom_functor(const HomSetFunctor& h, const CheckOptions& opts) {
  const IteratedMonoidalCat& v = *h.base;
  const FinCat& c = v.cat();
  const ObjId I = v.unit;
  const MorId one = c.identity(I);
  ObjId nobj = static_cast<ObjId>(c.num_objects());
  CheckReport report;
  for (int i = 1; i <= v.fold; ++i)
    each_pair(v, i, [&](ObjId a, ObjId b, ObjId ab) {
      for (MorId f : h.at(a))
        for (MorId g : h.at(b)) {
          auto m = v.find_tensor_mor(i, f, g);
          if (!m || c.dom(*m) != I || c.cod(*m) != ab) {
            report.add("homset.lambda.type", {std::to_string(i), c.mor_name(f), c.mor_name(g)},
                       c.object_name(I) + " -> " + c.object_name(ab), m ? c.mor_name(*m) : "none");
          }
        }
    });
  if (!report.ok()) {
    report.normalize();
    return report;
  }
  auto el = [&](const DiagramEval& ev, MorId f) { return ev.entry(f, ev.verbose() ? c.mor_name(f) : ""); };

  CheckReport nat = run_partitioned(c.num_morphisms(), opts, [&](std::size_t ki, CheckReport& out) {
    MorId k = static_cast<MorId>(ki);
    for (int i = 1; i <= v.fold; ++i)
      for (MorId l = 0; l < c.num_morphisms(); ++l)
        for (MorId f : h.at(c.dom(k)))
          for (MorId g : h.at(c.dom(l))) {
            std::vector<std::string> loc{std::to_string(i), c.mor_name(k), c.mor_name(l), c.mor_name(f), c.mor_name(g)};
            check_instance(v, out, "homset.lambda.natural", loc, [&](const DiagramEval& ev) {
              return std::pair{ev.then(ev.tensor(i, el(ev, f), el(ev, g)), ev.tensor(i, el(ev, k), el(ev, l))),
                               ev.tensor(i, ev.then(el(ev, f), el(ev, k)), ev.then(el(ev, g), el(ev, l)))};
            });
          }
  });
  report.merge(nat);

  CheckReport rest = run_partitioned(nobj, opts, [&](std::size_t ai, CheckReport& out) {
    ObjId a = static_cast<ObjId>(ai);
    for (int i = 1; i <= v.fold; ++i) {
      std::string is = std::to_string(i);
      for (MorId f : h.at(a)) {
        check_instance(v, out, "homset.lambda.unit", {is, c.mor_name(f), c.mor_name(one)},
                       [&](const DiagramEval& ev) { return std::pair{ev.tensor(i, el(ev, f), el(ev, one)), el(ev, f)}; });
        check_instance(v, out, "homset.lambda.unit", {is, c.mor_name(one), c.mor_name(f)},
                       [&](const DiagramEval& ev) { return std::pair{ev.tensor(i, el(ev, one), el(ev, f)), el(ev, f)}; });
      }
      for (ObjId b = 0; b < nobj; ++b)
        for (ObjId d = 0; d < nobj; ++d)
          for (MorId f : h.at(a))
            for (MorId g : h.at(b))
              for (MorId k : h.at(d)) {
                check_instance(v, out, "homset.lambda.assoc", {is, c.mor_name(f), c.mor_name(g), c.mor_name(k)},
                               [&](const DiagramEval& ev) {
                                 auto ab = v.find_tensor(i, a, b), bd = v.find_tensor(i, b, d);
                                 if (!ab || !bd) return skipped();
                                 Term l = ev.then(ev.tensor(i, ev.tensor(i, el(ev, f), el(ev, g)), el(ev, k)),
                                                  ev.alpha(i, a, b, d));
                                 return std::pair{l, ev.tensor(i, el(ev, f), ev.tensor(i, el(ev, g), el(ev, k)))};
                               });
              }
    }
    for (int i = 1; i <= v.fold; ++i)
      for (int j = i + 1; j <= v.fold; ++j)
        for (ObjId b = 0; b < nobj; ++b)
          for (ObjId cc = 0; cc < nobj; ++cc)
            for (ObjId d = 0; d < nobj; ++d)
              for (MorId f : h.at(a))
                for (MorId g : h.at(b))
                  for (MorId k : h.at(cc))
                    for (MorId l : h.at(d)) {
                      std::vector<std::string> loc{std::to_string(i), std::to_string(j), c.mor_name(f),
                                                   c.mor_name(g), c.mor_name(k), c.mor_name(l)};
                      check_instance(v, out, "homset.lambda.hexagon", loc, [&](const DiagramEval& ev) {
                        Term l1 = ev.then(ev.tensor(i, ev.tensor(j, el(ev, f), el(ev, g)),
                                                    ev.tensor(j, el(ev, k), el(ev, l))),
                                          ev.eta(i, j, a, b, cc, d));
                        Term r1 = ev.tensor(j, ev.tensor(i, el(ev, f), el(ev, k)), ev.tensor(i, el(ev, g), el(ev, l)));
                        return std::pair{l1, r1};
                      });
                    }
  });
  report.merge(rest);
  report.normalize();
  return report;
}

namespace {

struct Builder {
  FinCat cat;
  // (x, y) -> entries in order, each with the data it was built from.
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::pair<Point, MorId>>> homs;

  MorId find(std::size_t x, std::size_t y, const Point& p) const {
    auto it = homs.find({x, y});
    if (it != homs.end())
      for (const auto& [q, id] : it->second)
        if (q == p) return id;
    throw Error(ErrorKind::MissingEntry, "composite is not among the enumerated morphisms");
  }
};

}  // namespace

FinCat underlying_category(const VCat& a) {
  const IteratedMonoidalCat& v = *a.base;
  const FinCat& c = v.cat();
  Builder b;
  b.cat.set_name(a.name + "_0");
  std::size_t n = a.size();
  for (const auto& o : a.objects) b.cat.add_object(o);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (MorId m : c.hom(v.unit, a.hom(x, y))) {
        MorId id = b.cat.add_morphism(a.objects[x] + "->" + a.objects[y] + ":" + c.mor_name(m),
                                      static_cast<ObjId>(x), static_cast<ObjId>(y));
        b.homs[{x, y}].push_back({Point{0, {}, m}, id});
      }
  for (std::size_t x = 0; x < n; ++x) b.cat.set_identity(static_cast<ObjId>(x), b.find(x, x, Point{0, {}, a.unit(x)}));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        for (const auto& [f, fid] : b.homs[{x, y}])
          for (const auto& [g, gid] : b.homs[{y, z}]) {
            MorId h = compose(c, a.comp(x, y, z), tensor_mor(v, 1, g.bottom, f.bottom));
            b.cat.set_comp(gid, fid, b.find(x, z, Point{0, {}, h}));
          }
  return b.cat;
}

FinCat representable_category(const VCat& a) {
  const IteratedMonoidalCat& v = *a.base;
  const FinCat& c = v.cat();
  auto e = encat_from_vcat(a);
  Builder b;
  b.cat.set_name(a.name + "_0");
  // Objects: V-functors I -> A, i.e. points of level 1.
  std::vector<Point> points;
  std::vector<std::size_t> where;
  for (std::size_t x = 0; x < a.size(); ++x)
    for (MorId m : c.hom(v.unit, a.hom(x, x))) {
      Point p{1, {x}, m};
      if (!check_point(p, e).ok()) continue;
      std::string name = a.objects[x];
      if (b.cat.find_object(name)) name += "#" + c.mor_name(m);
      b.cat.add_object(name);
      points.push_back(p);
      where.push_back(x);
    }
  std::vector<EnFunPtr> functors;
  for (const Point& p : points) functors.push_back(expand_point(p, e));
  std::map<std::pair<std::size_t, std::size_t>, std::vector<KCellPtr>> cells;
  // Morphisms: V-natural transformations, components I -> A(x,y).
  for (std::size_t p = 0; p < points.size(); ++p)
    for (std::size_t q = 0; q < points.size(); ++q)
      for (MorId m : c.hom(v.unit, a.hom(where[p], where[q]))) {
        auto cell = make_2cell(functors[p], functors[q], {Point{0, {}, m}});
        if (!check_kcell(*cell).ok()) continue;
        MorId id = b.cat.add_morphism(a.objects[where[p]] + "->" + a.objects[where[q]] + ":" + c.mor_name(m),
                                      static_cast<ObjId>(p), static_cast<ObjId>(q));
        b.homs[{p, q}].push_back({cell->components[0], id});
        cells[{p, q}].push_back(cell);
      }
  for (std::size_t p = 0; p < points.size(); ++p) {
    b.cat.set_identity(static_cast<ObjId>(p), b.find(p, p, unit_kcell(functors[p])->components[0]));
  }
  for (std::size_t p = 0; p < points.size(); ++p)
    for (std::size_t q = 0; q < points.size(); ++q)
      for (std::size_t r = 0; r < points.size(); ++r) {
        const auto& pq = cells[{p, q}];
        const auto& qr = cells[{q, r}];
        for (std::size_t s = 0; s < pq.size(); ++s)
          for (std::size_t t = 0; t < qr.size(); ++t) {
            auto composite = compose_kcells(qr[t], pq[s], 1);
            b.cat.set_comp(b.homs[{q, r}][t].second, b.homs[{p, q}][s].second,
                           b.find(p, r, composite->components[0]));
          }
      }
  return b.cat;
}

namespace {

// Every chain of objects and bottom morphism out of I, in lexicographic order.
void enumerate_points(const EnCatPtr& c, std::vector<Point>& out) {
  const IteratedMonoidalCat& v = *c->base;
  if (c->level == 0) {
    for (MorId m : v.cat().hom(v.unit, c->obj)) out.push_back(Point{0, {}, m});
    return;
  }
  for (std::size_t w = 0; w < c->size(); ++w) {
    std::vector<Point> inner;
    enumerate_points(c->hom_ptr(w, w), inner);
    for (Point p : inner) {
      p.level = c->level;
      p.chain.insert(p.chain.begin(), w);
      out.push_back(std::move(p));
    }
  }
}

// Valid points of c. The top `forced` levels recurse through valid points of
// c(w,w); below that candidates are enumerated wholesale.
std::vector<Point> points_of(const EnCatPtr& c, int forced) {
  std::vector<Point> candidates;
  if (forced > 0 && c->level > 0) {
    for (std::size_t w = 0; w < c->size(); ++w)
      for (Point p : points_of(c->hom_ptr(w, w), forced - 1)) {
        p.level = c->level;
        p.chain.insert(p.chain.begin(), w);
        candidates.push_back(std::move(p));
      }
  } else {
    enumerate_points(c, candidates);
  }
  std::vector<Point> out;
  for (auto& p : candidates)
    if (c->level == 0 || check_point(p, c).ok()) out.push_back(std::move(p));
  return out;
}

}  // namespace

FinCat underlying_tower(const EnrichedCat& u, int steps) {
  if (u.level < 1) throw Error(ErrorKind::ShapeMismatch, "underlying category of a base object");
  if (steps < 1 || steps > u.level) {
    throw Error(ErrorKind::IndexOutOfRange, "steps must lie in 1.." + std::to_string(u.level));
  }
  std::size_t n = u.size();
  Builder b;
  b.cat.set_name(u.name + "_0");
  for (const auto& o : u.objects) b.cat.add_object(o);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (Point& p : points_of(u.hom_ptr(x, y), steps - 1)) {
        MorId id = b.cat.add_morphism(u.objects[x] + "->" + u.objects[y] + ":" + point_text(u.hom(x, y), p),
                                      static_cast<ObjId>(x), static_cast<ObjId>(y));
        b.homs[{x, y}].push_back({std::move(p), id});
      }
  for (std::size_t x = 0; x < n; ++x) {
    b.cat.set_identity(static_cast<ObjId>(x), b.find(x, x, point_from_functor(u.unit(x))));
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        for (const auto& [f, fid] : b.homs[{x, y}])
          for (const auto& [g, gid] : b.homs[{y, z}]) {
            auto t = tensor_functors(*expand_point(g, u.hom_ptr(y, z)), *expand_point(f, u.hom_ptr(x, y)), 1);
            Point h = point_from_functor(*compose_functors(u.comp(x, y, z), *t));
            b.cat.set_comp(gid, fid, b.find(x, z, h));
          }
  return b.cat;
}

}  // namespace itercat
