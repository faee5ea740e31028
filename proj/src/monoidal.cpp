#include "itercat/monoidal.hpp"

#include <algorithm>

#include "itercat/diagram.hpp"
#include "itercat/error.hpp"

namespace itercat {

std::vector<std::array<MorId, 3>> TensorTable::morphism_entries() const {
  std::vector<std::array<MorId, 3>> out;
  out.reserve(on_morphisms_.size());
  for (const auto& [k, r] : on_morphisms_) {
    out.push_back({static_cast<MorId>(k >> 32), static_cast<MorId>(k & 0xffffffffu), r});
  }
  std::sort(out.begin(), out.end());
  return out;
}

const TensorTable& IteratedMonoidalCat::product(int i) const {
  if (i < 1 || i > fold || static_cast<std::size_t>(i) > products.size()) {
    throw Error(ErrorKind::IndexOutOfRange,
                "product index " + std::to_string(i) + " outside 1.." + std::to_string(fold));
  }
  return products[static_cast<std::size_t>(i - 1)];
}

std::optional<ObjId> IteratedMonoidalCat::find_tensor(int i, ObjId a, ObjId b) const {
  return product(i).obj(a, b);
}

std::optional<MorId> IteratedMonoidalCat::find_tensor_mor(int i, MorId f, MorId g) const {
  return product(i).mor(f, g);
}

std::optional<MorId> IteratedMonoidalCat::find_alpha(int i, ObjId u, ObjId v, ObjId w) const {
  if (i < 1 || static_cast<std::size_t>(i) > associators.size()) return std::nullopt;
  const auto& fam = associators[static_cast<std::size_t>(i - 1)];
  auto it = fam.find({u, v, w});
  if (it == fam.end()) return std::nullopt;
  return it->second;
}

std::optional<MorId> IteratedMonoidalCat::find_eta(int i, int j, ObjId a, ObjId b, ObjId c,
                                                   ObjId d) const {
  auto fam = interchanges.find({i, j});
  if (fam == interchanges.end()) return std::nullopt;
  auto it = fam->second.find({a, b, c, d});
  if (it == fam->second.end()) return std::nullopt;
  return it->second;
}

ObjId tensor_obj(const IteratedMonoidalCat& v, int i, ObjId a, ObjId b) {
  auto r = v.find_tensor(i, a, b);
  if (!r) {
    throw Error(ErrorKind::MissingEntry, "product " + std::to_string(i) + " of " +
                                             v.cat().object_name(a) + " and " +
                                             v.cat().object_name(b));
  }
  return *r;
}

MorId tensor_mor(const IteratedMonoidalCat& v, int i, MorId f, MorId g) {
  auto r = v.product(i).mor(f, g);
  if (!r) {
    throw Error(ErrorKind::MissingEntry, "product " + std::to_string(i) + " of " +
                                             v.cat().mor_name(f) + " and " + v.cat().mor_name(g));
  }
  return *r;
}

std::string alpha_label(const IteratedMonoidalCat& v, int i, ObjId u, ObjId w, ObjId x) {
  const FinCat& c = v.cat();
  return "alpha^" + std::to_string(i) + "_{" + c.object_name(u) + "," + c.object_name(w) + "," +
         c.object_name(x) + "}";
}

std::string eta_label(const IteratedMonoidalCat& v, int i, int j, ObjId a, ObjId b, ObjId c,
                      ObjId d) {
  const FinCat& k = v.cat();
  return "eta^{" + std::to_string(i) + "," + std::to_string(j) + "}_{" + k.object_name(a) + "," +
         k.object_name(b) + "," + k.object_name(c) + "," + k.object_name(d) + "}";
}

std::optional<MorId> find_inverse(const FinCat& c, MorId f) {
  MorId ia = c.identity(c.dom(f));
  MorId ib = c.identity(c.cod(f));
  for (MorId g : c.hom(c.cod(f), c.dom(f))) {
    if (c.lookup_comp(g, f) == ia && c.lookup_comp(f, g) == ib) return g;
  }
  return std::nullopt;
}

namespace {

using Locator = std::vector<std::string>;

struct Ctx {
  const IteratedMonoidalCat& v;
  const FinCat& c;
  std::size_t n;
  std::string on(ObjId a) const { return c.object_name(a); }
  std::string mn(MorId f) const { return c.mor_name(f); }
  std::optional<ObjId> t(int i, ObjId a, ObjId b) const { return v.find_tensor(i, a, b); }
};

void check_tensor_tables(const Ctx& x, int i, CheckReport& report, const CheckOptions& opts) {
  const auto& v = x.v;
  const auto& c = x.c;
  const std::string si = std::to_string(i);
  for (ObjId a = 0; a < x.n; ++a) {
    for (ObjId b = 0; b < x.n; ++b) {
      if (!x.t(i, a, b) && !v.partial) {
        report.add("tensor.obj.missing", {si, x.on(a), x.on(b)}, "table entry", "none");
      }
    }
    auto l = x.t(i, v.unit, a);
    auto r = x.t(i, a, v.unit);
    if (l != a || r != a) {
      report.add("unit.strict.obj", {si, x.on(a)}, x.on(a),
                 (l ? x.on(*l) : "none") + " / " + (r ? x.on(*r) : "none"));
    }
  }
  std::size_t m = c.num_morphisms();
  CheckReport table = run_partitioned(m, opts, [&](std::size_t fi, CheckReport& out) {
    MorId f = static_cast<MorId>(fi);
    for (MorId g = 0; g < m; ++g) {
      auto d = x.t(i, c.dom(f), c.dom(g));
      auto e = x.t(i, c.cod(f), c.cod(g));
      if (!d || !e) continue;
      auto r = v.find_tensor_mor(i, f, g);
      if (!r) {
        out.add("tensor.mor.missing", {si, x.mn(f), x.mn(g)}, x.on(*d) + " -> " + x.on(*e), "none");
      } else if (c.dom(*r) != *d || c.cod(*r) != *e) {
        out.add("tensor.mor.type", {si, x.mn(f), x.mn(g)}, x.on(*d) + " -> " + x.on(*e),
                x.mn(*r));
      }
    }
  });
  report.merge(table);

  MorId iu = c.identity(v.unit);
  for (MorId f = 0; f < m; ++f) {
    auto l = v.find_tensor_mor(i, iu, f);
    auto r = v.find_tensor_mor(i, f, iu);
    if (l != f || r != f) {
      report.add("unit.strict.mor", {si, x.mn(f)}, x.mn(f),
                 (l ? x.mn(*l) : "none") + " / " + (r ? x.mn(*r) : "none"));
    }
  }
  for (ObjId a = 0; a < x.n; ++a) {
    for (ObjId b = 0; b < x.n; ++b) {
      auto ab = x.t(i, a, b);
      if (!ab) continue;
      auto r = v.find_tensor_mor(i, c.identity(a), c.identity(b));
      if (r != c.identity(*ab)) {
        report.add("tensor.identity", {si, x.on(a), x.on(b)}, x.mn(c.identity(*ab)),
                   r ? x.mn(*r) : "none");
      }
    }
  }

  auto entries = v.product(i).morphism_entries();
  guard_budget(opts, entries.size() * m, "bifunctoriality of product " + si);
  CheckReport comp = run_partitioned(entries.size(), opts, [&](std::size_t k, CheckReport& out) {
    auto [f, g, fg] = entries[k];
    (void)fg;
    for (ObjId a = 0; a < x.n; ++a) {
      for (MorId f2 : c.hom(a, c.dom(f))) {
        for (ObjId b = 0; b < x.n; ++b) {
          if (!x.t(i, a, b)) continue;
          for (MorId g2 : c.hom(b, c.dom(g))) {
            check_instance(v, out, "tensor.comp", {si, x.mn(f), x.mn(g), x.mn(f2), x.mn(g2)},
                           [&](const DiagramEval& ev) {
                             Term lhs = ev.then(ev.tensor(i, ev.mor(f2), ev.mor(g2)),
                                                ev.tensor(i, ev.mor(f), ev.mor(g)));
                             Term rhs = ev.tensor(i, ev.then(ev.mor(f2), ev.mor(f)),
                                                  ev.then(ev.mor(g2), ev.mor(g)));
                             return std::pair{lhs, rhs};
                           });
          }
        }
      }
    }
  });
  report.merge(comp);
}

void check_associator(const Ctx& x, int i, CheckReport& report, const CheckOptions& opts) {
  const auto& v = x.v;
  const auto& c = x.c;
  const std::string si = std::to_string(i);
  if (static_cast<std::size_t>(i) > v.associators.size()) {
    report.add("alpha.family.missing", {si}, "associator family", "none");
    return;
  }
  for (ObjId u = 0; u < x.n; ++u)
    for (ObjId w = 0; w < x.n; ++w)
      for (ObjId y = 0; y < x.n; ++y) {
        auto uw = x.t(i, u, w), wy = x.t(i, w, y);
        if (!uw || !wy) continue;
        auto src = x.t(i, *uw, y), tgt = x.t(i, u, *wy);
        if (!src || !tgt) continue;
        Locator loc{si, x.on(u), x.on(w), x.on(y)};
        std::string label = alpha_label(v, i, u, w, y);
        auto a = v.find_alpha(i, u, w, y);
        if (!a) {
          report.add("alpha.missing", loc, label + ": " + x.on(*src) + " -> " + x.on(*tgt), "none");
          continue;
        }
        if (c.dom(*a) != *src || c.cod(*a) != *tgt) {
          report.add("alpha.type", loc, label + ": " + x.on(*src) + " -> " + x.on(*tgt),
                     x.mn(*a) + ": " + x.on(c.dom(*a)) + " -> " + x.on(c.cod(*a)));
          continue;
        }
        if (!find_inverse(c, *a)) {
          report.add("alpha.inverse", loc, "two-sided inverse of " + label, "none");
        }
      }

  auto entries = v.product(i).morphism_entries();
  guard_budget(opts, entries.size() * c.num_morphisms(), "associator naturality " + si);
  CheckReport nat = run_partitioned(entries.size(), opts, [&](std::size_t k, CheckReport& out) {
    auto [f, g, fg] = entries[k];
    (void)fg;
    for (MorId h = 0; h < c.num_morphisms(); ++h) {
      if (!x.t(i, c.dom(*v.find_tensor_mor(i, f, g)), c.dom(h))) continue;
      check_instance(v, out, "alpha.natural", {si, x.mn(f), x.mn(g), x.mn(h)},
                     [&](const DiagramEval& ev) {
                       Term lhs = ev.then(ev.tensor(i, ev.tensor(i, ev.mor(f), ev.mor(g)), ev.mor(h)),
                                          ev.alpha(i, c.cod(f), c.cod(g), c.cod(h)));
                       Term rhs = ev.then(ev.alpha(i, c.dom(f), c.dom(g), c.dom(h)),
                                          ev.tensor(i, ev.mor(f), ev.tensor(i, ev.mor(g), ev.mor(h))));
                       return std::pair{lhs, rhs};
                     });
    }
  });
  report.merge(nat);

  CheckReport pent = run_partitioned(x.n, opts, [&](std::size_t ui, CheckReport& out) {
    ObjId u = static_cast<ObjId>(ui);
    for (ObjId w = 0; w < x.n; ++w) {
      auto uw = x.t(i, u, w);
      if (!uw) continue;
      for (ObjId y = 0; y < x.n; ++y) {
        auto uwy = x.t(i, *uw, y);
        if (!uwy) continue;
        for (ObjId z = 0; z < x.n; ++z) {
          if (!x.t(i, *uwy, z)) continue;
          check_instance(v, out, "pentagon", {si, x.on(u), x.on(w), x.on(y), x.on(z)},
                         [&](const DiagramEval& ev) {
                           auto wy = ev.obj(i, w, y);
                           auto yz = ev.obj(i, y, z);
                           if (!wy || !yz) return skipped();
                           Term top = ev.then(ev.tensor(i, ev.alpha(i, u, w, y), ev.id(z)),
                                              ev.alpha(i, u, *wy, z),
                                              ev.tensor(i, ev.id(u), ev.alpha(i, w, y, z)));
                           Term bottom = ev.then(ev.alpha(i, *uw, y, z), ev.alpha(i, u, w, *yz));
                           return std::pair{top, bottom};
                         });
        }
      }
    }
  });
  report.merge(pent);
}

void check_interchange(const Ctx& x, int i, int j, CheckReport& report, const CheckOptions& opts) {
  const auto& v = x.v;
  const auto& c = x.c;
  const std::string si = std::to_string(i), sj = std::to_string(j);
  if (!v.interchanges.count({i, j})) {
    report.add("eta.family.missing", {si, sj}, "interchange family", "none");
    return;
  }
  const ObjId I = v.unit;

  for (ObjId a = 0; a < x.n; ++a)
    for (ObjId b = 0; b < x.n; ++b)
      for (ObjId cc = 0; cc < x.n; ++cc)
        for (ObjId d = 0; d < x.n; ++d) {
          auto ab = x.t(j, a, b), cd = x.t(j, cc, d), ac = x.t(i, a, cc), bd = x.t(i, b, d);
          if (!ab || !cd || !ac || !bd) continue;
          auto src = x.t(i, *ab, *cd), tgt = x.t(j, *ac, *bd);
          if (!src || !tgt) continue;
          Locator loc{si, sj, x.on(a), x.on(b), x.on(cc), x.on(d)};
          std::string label = eta_label(v, i, j, a, b, cc, d);
          auto e = v.find_eta(i, j, a, b, cc, d);
          if (!e) {
            report.add("eta.missing", loc, label + ": " + x.on(*src) + " -> " + x.on(*tgt), "none");
          } else if (c.dom(*e) != *src || c.cod(*e) != *tgt) {
            report.add("eta.type", loc, label + ": " + x.on(*src) + " -> " + x.on(*tgt),
                       x.mn(*e) + ": " + x.on(c.dom(*e)) + " -> " + x.on(c.cod(*e)));
          }
        }

  // Naturality in all four arguments.
  auto entries = v.product(j).morphism_entries();
  guard_budget(opts, entries.size() * entries.size(), "interchange naturality " + si + "," + sj);
  CheckReport nat = run_partitioned(entries.size(), opts, [&](std::size_t k, CheckReport& out) {
    auto [f, g, fg] = entries[k];
    for (const auto& [h, l, hl] : entries) {
      if (!x.t(i, c.dom(fg), c.dom(hl)) || !x.t(i, c.cod(fg), c.cod(hl))) continue;
      check_instance(v, out, "eta.natural", {si, sj, x.mn(f), x.mn(g), x.mn(h), x.mn(l)},
                     [&](const DiagramEval& ev) {
                       Term lhs = ev.then(ev.tensor(i, ev.tensor(j, ev.mor(f), ev.mor(g)),
                                                    ev.tensor(j, ev.mor(h), ev.mor(l))),
                                          ev.eta(i, j, c.cod(f), c.cod(g), c.cod(h), c.cod(l)));
                       Term rhs = ev.then(ev.eta(i, j, c.dom(f), c.dom(g), c.dom(h), c.dom(l)),
                                          ev.tensor(j, ev.tensor(i, ev.mor(f), ev.mor(h)),
                                                    ev.tensor(i, ev.mor(g), ev.mor(l))));
                       return std::pair{lhs, rhs};
                     });
    }
  });
  report.merge(nat);

  // (a) internal and (b) external unit conditions.
  for (ObjId a = 0; a < x.n; ++a) {
    for (ObjId b = 0; b < x.n; ++b) {
      if (auto ab = x.t(j, a, b)) {
        check_instance(v, report, "eta.internal_unit", {si, sj, x.on(a), x.on(b), "I", "I"},
                       [&](const DiagramEval& ev) {
                         return std::pair{ev.eta(i, j, a, b, I, I), ev.id(*ab)};
                       });
        check_instance(v, report, "eta.internal_unit", {si, sj, "I", "I", x.on(a), x.on(b)},
                       [&](const DiagramEval& ev) {
                         return std::pair{ev.eta(i, j, I, I, a, b), ev.id(*ab)};
                       });
      }
      if (auto ab = x.t(i, a, b)) {
        check_instance(v, report, "eta.external_unit", {si, sj, x.on(a), "I", x.on(b), "I"},
                       [&](const DiagramEval& ev) {
                         return std::pair{ev.eta(i, j, a, I, b, I), ev.id(*ab)};
                       });
        check_instance(v, report, "eta.external_unit", {si, sj, "I", x.on(a), "I", x.on(b)},
                       [&](const DiagramEval& ev) {
                         return std::pair{ev.eta(i, j, I, a, I, b), ev.id(*ab)};
                       });
      }
    }
  }

  std::size_t n = x.n;
  guard_budget(opts, n * n * n * n * n * n, "interchange associativity " + si + "," + sj);
  // (c) internal associativity.
  CheckReport internal = run_partitioned(n, opts, [&](std::size_t ui, CheckReport& out) {
    ObjId U = static_cast<ObjId>(ui);
    for (ObjId V = 0; V < n; ++V) {
      auto uv = x.t(j, U, V);
      if (!uv) continue;
      for (ObjId W = 0; W < n; ++W)
        for (ObjId X = 0; X < n; ++X) {
          auto wx = x.t(j, W, X);
          if (!wx) continue;
          auto p = x.t(i, *uv, *wx);
          if (!p) continue;
          for (ObjId Y = 0; Y < n; ++Y)
            for (ObjId Z = 0; Z < n; ++Z) {
              auto yz = x.t(j, Y, Z);
              if (!yz || !x.t(i, *p, *yz)) continue;
              check_instance(
                  v, out, "eta.internal_assoc",
                  {si, sj, x.on(U), x.on(V), x.on(W), x.on(X), x.on(Y), x.on(Z)},
                  [&](const DiagramEval& ev) {
                    auto uw = ev.obj(i, U, W), vx = ev.obj(i, V, X);
                    auto wy = ev.obj(i, W, Y), xz = ev.obj(i, X, Z);
                    if (!uw || !vx || !wy || !xz) {
                      return skipped();
                    }
                    Term top = ev.then(ev.tensor(i, ev.eta(i, j, U, V, W, X), ev.id(*yz)),
                                       ev.eta(i, j, *uw, *vx, Y, Z),
                                       ev.tensor(j, ev.alpha(i, U, W, Y), ev.alpha(i, V, X, Z)));
                    Term bottom = ev.then(ev.alpha(i, *uv, *wx, *yz),
                                          ev.tensor(i, ev.id(*uv), ev.eta(i, j, W, X, Y, Z)),
                                          ev.eta(i, j, U, V, *wy, *xz));
                    return std::pair{top, bottom};
                  });
            }
        }
    }
  });
  report.merge(internal);

  // (d) external associativity.
  CheckReport external = run_partitioned(n, opts, [&](std::size_t ui, CheckReport& out) {
    ObjId U = static_cast<ObjId>(ui);
    for (ObjId V = 0; V < n; ++V) {
      auto uv = x.t(j, U, V);
      if (!uv) continue;
      for (ObjId W = 0; W < n; ++W) {
        auto uvw = x.t(j, *uv, W);
        if (!uvw) continue;
        for (ObjId X = 0; X < n; ++X)
          for (ObjId Y = 0; Y < n; ++Y) {
            auto xy = x.t(j, X, Y);
            if (!xy) continue;
            for (ObjId Z = 0; Z < n; ++Z) {
              auto xyz = x.t(j, *xy, Z);
              if (!xyz || !x.t(i, *uvw, *xyz)) continue;
              check_instance(
                  v, out, "eta.external_assoc",
                  {si, sj, x.on(U), x.on(V), x.on(W), x.on(X), x.on(Y), x.on(Z)},
                  [&](const DiagramEval& ev) {
                    auto ux = ev.obj(i, U, X), vy = ev.obj(i, V, Y), wz = ev.obj(i, W, Z);
                    auto vw = ev.obj(j, V, W), yz = ev.obj(j, Y, Z);
                    if (!ux || !vy || !wz || !vw || !yz) {
                      return skipped();
                    }
                    Term right = ev.then(ev.eta(i, j, *uv, W, *xy, Z),
                                         ev.tensor(j, ev.eta(i, j, U, V, X, Y), ev.id(*wz)),
                                         ev.alpha(j, *ux, *vy, *wz));
                    Term left = ev.then(ev.tensor(i, ev.alpha(j, U, V, W), ev.alpha(j, X, Y, Z)),
                                        ev.eta(i, j, U, *vw, X, *yz),
                                        ev.tensor(j, ev.id(*ux), ev.eta(i, j, V, W, Y, Z)));
                    return std::pair{right, left};
                  });
            }
          }
      }
    }
  });
  report.merge(external);
}

void check_hexagon(const Ctx& x, int i, int j, int k, CheckReport& report,
                   const CheckOptions& opts) {
  const auto& v = x.v;
  std::size_t n = x.n;
  const std::string si = std::to_string(i), sj = std::to_string(j), sk = std::to_string(k);
  std::size_t n4 = n * n * n * n;
  guard_budget(opts, n4 * n4, "giant hexagon " + si + "," + sj + "," + sk);
  CheckReport hex = run_partitioned(n4, opts, [&](std::size_t q, CheckReport& out) {
    ObjId A = static_cast<ObjId>(q / (n * n * n)), A2 = static_cast<ObjId>((q / (n * n)) % n);
    ObjId B = static_cast<ObjId>((q / n) % n), B2 = static_cast<ObjId>(q % n);
    auto aa = x.t(k, A, A2), bb = x.t(k, B, B2);
    if (!aa || !bb) return;
    auto top_left = x.t(j, *aa, *bb);
    if (!top_left) return;
    for (ObjId C = 0; C < n; ++C)
      for (ObjId C2 = 0; C2 < n; ++C2) {
        auto cc = x.t(k, C, C2);
        if (!cc) continue;
        for (ObjId D = 0; D < n; ++D)
          for (ObjId D2 = 0; D2 < n; ++D2) {
            auto dd = x.t(k, D, D2);
            if (!dd) continue;
            auto top_right = x.t(j, *cc, *dd);
            if (!top_right || !x.t(i, *top_left, *top_right)) continue;
            check_instance(
                v, out, "eta.hexagon",
                {si, sj, sk, x.on(A), x.on(A2), x.on(B), x.on(B2), x.on(C), x.on(C2), x.on(D),
                 x.on(D2)},
                [&](const DiagramEval& ev) {
                  auto ab = ev.obj(j, A, B), ab2 = ev.obj(j, A2, B2);
                  auto cd = ev.obj(j, C, D), cd2 = ev.obj(j, C2, D2);
                  auto ac = ev.obj(i, A, C), ac2 = ev.obj(i, A2, C2);
                  auto bd = ev.obj(i, B, D), bd2 = ev.obj(i, B2, D2);
                  if (!ab || !ab2 || !cd || !cd2 || !ac || !ac2 || !bd || !bd2) {
                    return skipped();
                  }
                  Term left = ev.then(
                      ev.tensor(i, ev.eta(j, k, A, A2, B, B2), ev.eta(j, k, C, C2, D, D2)),
                      ev.eta(i, k, *ab, *ab2, *cd, *cd2),
                      ev.tensor(k, ev.eta(i, j, A, B, C, D), ev.eta(i, j, A2, B2, C2, D2)));
                  Term right = ev.then(
                      ev.eta(i, j, *aa, *bb, *cc, *dd),
                      ev.tensor(j, ev.eta(i, k, A, A2, C, C2), ev.eta(i, k, B, B2, D, D2)),
                      ev.eta(j, k, *ac, *ac2, *bd, *bd2));
                  return std::pair{left, right};
                });
          }
      }
  });
  report.merge(hex);
}

}  // namespace

CheckReport check_kfold_axioms(const IteratedMonoidalCat& v, const CheckOptions& opts) {
  CheckReport report;
  report.merge(check_category_axioms(v.cat(), opts));
  Ctx x{v, v.cat(), v.cat().num_objects()};
  if (v.unit >= x.n) {
    report.add("unit.missing", {}, "unit object", "none");
    return report;
  }
  if (v.products.size() != static_cast<std::size_t>(v.fold)) {
    report.add("fold.shape", {}, std::to_string(v.fold) + " products",
               std::to_string(v.products.size()));
    return report;
  }
  for (int i = 1; i <= v.fold; ++i) {
    check_tensor_tables(x, i, report, opts);
    check_associator(x, i, report, opts);
  }
  for (int i = 1; i <= v.fold; ++i)
    for (int j = i + 1; j <= v.fold; ++j) check_interchange(x, i, j, report, opts);
  for (int i = 1; i <= v.fold; ++i)
    for (int j = i + 1; j <= v.fold; ++j)
      for (int k = j + 1; k <= v.fold; ++k) check_hexagon(x, i, j, k, report, opts);
  report.normalize();
  return report;
}

namespace {

std::string sym_label(const FinCat& c, ObjId b, ObjId d) {
  return "c_{" + c.object_name(b) + "," + c.object_name(d) + "}";
}

Term sym_term(const DiagramEval& ev, const SymmetryFamily& sym, ObjId b, ObjId d) {
  auto it = sym.find({b, d});
  return ev.entry(it == sym.end() ? kNoMor : it->second,
                  ev.verbose() ? sym_label(ev.base().cat(), b, d) : std::string());
}

}  // namespace

CheckReport check_symmetry(const IteratedMonoidalCat& v, const SymmetryFamily& sym) {
  CheckReport report;
  const FinCat& c = v.cat();
  std::size_t n = c.num_objects();
  for (ObjId b = 0; b < n; ++b)
    for (ObjId d = 0; d < n; ++d) {
      auto bd = v.find_tensor(1, b, d), db = v.find_tensor(1, d, b);
      if (!bd || !db) continue;
      auto it = sym.find({b, d});
      Locator loc{c.object_name(b), c.object_name(d)};
      if (it == sym.end()) {
        report.add("sym.missing", loc, sym_label(c, b, d), "none");
      } else if (c.dom(it->second) != *bd || c.cod(it->second) != *db) {
        report.add("sym.type", loc, c.object_name(*bd) + " -> " + c.object_name(*db),
                   c.mor_name(it->second));
      } else {
        check_instance(v, report, "sym.involution", loc, [&](const DiagramEval& ev) {
          return std::pair{ev.then(sym_term(ev, sym, b, d), sym_term(ev, sym, d, b)), ev.id(*bd)};
        });
      }
    }
  if (!report.ok()) return report;
  for (const auto& [f, g, fg] : v.product(1).morphism_entries()) {
    (void)fg;
    check_instance(v, report, "sym.natural", {c.mor_name(f), c.mor_name(g)},
                   [&](const DiagramEval& ev) {
                     Term lhs = ev.then(ev.tensor(1, ev.mor(f), ev.mor(g)),
                                        sym_term(ev, sym, c.cod(f), c.cod(g)));
                     Term rhs = ev.then(sym_term(ev, sym, c.dom(f), c.dom(g)),
                                        ev.tensor(1, ev.mor(g), ev.mor(f)));
                     return std::pair{lhs, rhs};
                   });
  }
  for (ObjId a = 0; a < n; ++a)
    for (ObjId b = 0; b < n; ++b)
      for (ObjId d = 0; d < n; ++d) {
        check_instance(
            v, report, "sym.hexagon", {c.object_name(a), c.object_name(b), c.object_name(d)},
            [&](const DiagramEval& ev) {
              auto bd = ev.obj(1, b, d), ab = ev.obj(1, a, b);
              if (!bd || !ab) return skipped();
              Term lhs = ev.then(ev.alpha(1, a, b, d), sym_term(ev, sym, a, *bd), ev.alpha(1, b, d, a));
              Term rhs = ev.then(ev.tensor(1, sym_term(ev, sym, a, b), ev.id(d)), ev.alpha(1, b, a, d),
                                 ev.tensor(1, ev.id(b), sym_term(ev, sym, a, d)));
              return std::pair{lhs, rhs};
            });
      }
  report.normalize();
  return report;
}

IteratedMonoidalCat from_symmetric(const IteratedMonoidalCat& v, const SymmetryFamily& sym,
                                   int k) {
  if (k < 1) throw Error(ErrorKind::IndexOutOfRange, "fold must be at least 1");
  auto sr = check_symmetry(v, sym);
  if (!sr.ok()) throw Error(ErrorKind::InvalidSymmetry, sr.to_text());
  IteratedMonoidalCat out;
  out.name = v.name;
  out.base = v.base;
  out.unit = v.unit;
  out.fold = k;
  out.partial = v.partial;
  out.products.assign(static_cast<std::size_t>(k), v.product(1));
  out.associators.assign(static_cast<std::size_t>(k), v.associators.at(0));
  if (k == 1) return out;

  const FinCat& c = v.cat();
  std::size_t n = c.num_objects();
  InterchangeFamily eta;
  DiagramEval ev(v, false);
  auto inverse = [&](Term t) {
    if (!t.ok()) return t;
    auto inv = find_inverse(c, t.mor);
    if (!inv) throw Error(ErrorKind::MissingEntry, "inverse of " + c.mor_name(t.mor));
    return ev.mor(*inv);
  };
  for (ObjId a = 0; a < n; ++a)
    for (ObjId b = 0; b < n; ++b)
      for (ObjId cc = 0; cc < n; ++cc)
        for (ObjId d = 0; d < n; ++d) {
          auto ab = v.find_tensor(1, a, b), cd = v.find_tensor(1, cc, d);
          auto bd = v.find_tensor(1, b, d), bc = v.find_tensor(1, b, cc);
          if (!ab || !cd || !bd || !bc || !v.find_tensor(1, *ab, *cd)) continue;
          Term t = ev.then(ev.alpha(1, a, b, *cd),
                           ev.tensor(1, ev.id(a), inverse(ev.alpha(1, b, cc, d))),
                           ev.tensor(1, ev.id(a), ev.tensor(1, sym_term(ev, sym, b, cc), ev.id(d))),
                           ev.tensor(1, ev.id(a), ev.alpha(1, cc, b, d)),
                           inverse(ev.alpha(1, a, cc, *bd)));
          if (t.state == Term::Undefined) continue;
          if (!t.ok()) {
            throw Error(ErrorKind::MissingEntry, "interchange " + eta_label(v, 1, 2, a, b, cc, d) +
                                                     " could not be composed from the tables");
          }
          eta[{a, b, cc, d}] = t.mor;
        }
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) out.interchanges[{i, j}] = eta;
  return out;
}

void derive_thin_structure(IteratedMonoidalCat& v) {
  const FinCat& c = v.cat();
  std::size_t n = c.num_objects();
  auto unique = [&](std::optional<ObjId> a, std::optional<ObjId> b) -> std::optional<MorId> {
    if (!a || !b) return std::nullopt;
    return thin_morphism(c, *a, *b);
  };
  v.associators.assign(static_cast<std::size_t>(v.fold), {});
  v.interchanges.clear();
  for (int i = 1; i <= v.fold; ++i) {
    auto& table = v.products[static_cast<std::size_t>(i - 1)];
    for (MorId f = 0; f < c.num_morphisms(); ++f)
      for (MorId g = 0; g < c.num_morphisms(); ++g) {
        if (auto m = unique(table.obj(c.dom(f), c.dom(g)), table.obj(c.cod(f), c.cod(g)))) {
          table.set_mor(f, g, *m);
        }
      }
    auto& fam = v.associators[static_cast<std::size_t>(i - 1)];
    for (ObjId u = 0; u < n; ++u)
      for (ObjId w = 0; w < n; ++w)
        for (ObjId x = 0; x < n; ++x) {
          auto uw = table.obj(u, w), wx = table.obj(w, x);
          if (!uw || !wx) continue;
          if (auto m = unique(table.obj(*uw, x), table.obj(u, *wx))) fam[{u, w, x}] = *m;
        }
  }
  for (int i = 1; i <= v.fold; ++i)
    for (int j = i + 1; j <= v.fold; ++j) {
      auto& fam = v.interchanges[{i, j}];
      for (ObjId a = 0; a < n; ++a)
        for (ObjId b = 0; b < n; ++b)
          for (ObjId cc = 0; cc < n; ++cc)
            for (ObjId d = 0; d < n; ++d) {
              auto ab = v.find_tensor(j, a, b), cd = v.find_tensor(j, cc, d);
              auto ac = v.find_tensor(i, a, cc), bd = v.find_tensor(i, b, d);
              if (!ab || !cd || !ac || !bd) continue;
              if (auto m = unique(v.find_tensor(i, *ab, *cd), v.find_tensor(j, *ac, *bd))) {
                fam[{a, b, cc, d}] = *m;
              }
            }
    }
}

IteratedMonoidalCat boolean_poset(int k) {
  IteratedMonoidalCat v;
  v.name = "boolean";
  auto base = std::make_shared<FinCat>(make_preorder("boolean", {"F", "T"}, {{"F", "T"}}));
  v.base = base;
  v.unit = *base->find_object("T");
  v.fold = k;
  for (int i = 0; i < k; ++i) {
    TensorTable t(2);
    for (ObjId a = 0; a < 2; ++a)
      for (ObjId b = 0; b < 2; ++b) t.set_obj(a, b, std::min(a, b));  // F=0, T=1: ∧ is min
    v.products.push_back(std::move(t));
  }
  derive_thin_structure(v);
  return v;
}

SymmetryFamily boolean_symmetry(const IteratedMonoidalCat& v) {
  SymmetryFamily sym;
  const FinCat& c = v.cat();
  for (ObjId a = 0; a < c.num_objects(); ++a)
    for (ObjId b = 0; b < c.num_objects(); ++b) {
      auto ab = v.find_tensor(1, a, b);
      if (ab) sym[{a, b}] = c.identity(*ab);
    }
  return sym;
}

IteratedMonoidalCat boolean_symmetric(int k) {
  auto one = boolean_poset(1);
  return from_symmetric(one, boolean_symmetry(one), k);
}

IteratedMonoidalCat tropical_chain(int top) {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> le;
  for (int a = 0; a <= top; ++a) names.push_back(std::to_string(a));
  for (int a = 0; a <= top; ++a)
    for (int b = 0; b < a; ++b) le.emplace_back(std::to_string(a), std::to_string(b));
  auto base = std::make_shared<FinCat>(make_preorder("tropical", names, le));
  IteratedMonoidalCat v;
  v.name = "tropical";
  v.base = base;
  v.unit = 0;
  v.fold = 2;
  std::size_t n = names.size();
  TensorTable plus(n), mx(n);
  for (ObjId a = 0; a < n; ++a)
    for (ObjId b = 0; b < n; ++b) {
      plus.set_obj(a, b, std::min<ObjId>(a + b, static_cast<ObjId>(top)));
      mx.set_obj(a, b, std::max(a, b));
    }
  v.products = {std::move(plus), std::move(mx)};
  derive_thin_structure(v);
  return v;
}

FinSetSkeleton finset_skeleton(std::vector<unsigned> sizes) {
  using Fn = std::vector<unsigned>;
  std::sort(sizes.begin(), sizes.end());
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
  auto base = std::make_shared<FinCat>("finset");
  std::map<unsigned, ObjId> object_of;
  for (unsigned s : sizes) object_of[s] = base->add_object(std::to_string(s));
  auto has = [&](unsigned s) { return object_of.count(s) > 0; };

  FinSetSkeleton out;
  out.sizes = sizes;
  std::map<unsigned, std::map<Fn, MorId>> interned;
  std::map<unsigned, unsigned> counter;
  auto intern = [&](Fn fn, const std::string& hint) -> MorId {
    unsigned size = static_cast<unsigned>(fn.size());
    auto& table = interned[size];
    auto it = table.find(fn);
    if (it != table.end()) return it->second;
    std::string name =
        hint.empty() ? "p" + std::to_string(size) + "_" + std::to_string(counter[size]++) : hint;
    MorId id = base->add_morphism(name, object_of.at(size), object_of.at(size));
    table.emplace(fn, id);
    out.functions.push_back(std::move(fn));
    return id;
  };
  for (unsigned s : sizes) {
    Fn idf(s);
    for (unsigned x = 0; x < s; ++x) idf[x] = x;
    base->set_identity(object_of[s], intern(idf, "1_" + std::to_string(s)));
  }
  SymmetryFamily sym;
  for (unsigned a : sizes)
    for (unsigned b : sizes) {
      if (!has(a * b)) continue;
      Fn f(a * b);
      for (unsigned x = 0; x < a; ++x)
        for (unsigned y = 0; y < b; ++y) f[x * b + y] = y * a + x;
      sym[{object_of[a], object_of[b]}] =
          intern(f, "c_{" + std::to_string(a) + "," + std::to_string(b) + "}");
    }
  if (has(2)) intern(Fn{1, 0}, "s");

  auto tensor_fn = [](const Fn& f, const Fn& g) {
    unsigned nb = static_cast<unsigned>(g.size());
    Fn r(f.size() * g.size());
    for (unsigned x = 0; x < f.size(); ++x)
      for (unsigned y = 0; y < nb; ++y) r[x * nb + y] = f[x] * nb + g[y];
    return r;
  };
  auto compose_fn = [](const Fn& f, const Fn& g) {  // f after g
    Fn r(g.size());
    for (unsigned x = 0; x < g.size(); ++x) r[x] = f[g[x]];
    return r;
  };
  // Closure under composition and product.
  for (std::size_t p = 0; p < out.functions.size(); ++p) {
    for (std::size_t q = 0; q <= p; ++q) {
      Fn f = out.functions[p], g = out.functions[q];
      if (f.size() == g.size()) {
        intern(compose_fn(f, g), "");
        intern(compose_fn(g, f), "");
      }
      if (has(static_cast<unsigned>(f.size() * g.size()))) {
        intern(tensor_fn(f, g), "");
        intern(tensor_fn(g, f), "");
      }
    }
  }
  const FinCat& c = *base;
  std::size_t m = c.num_morphisms();
  TensorTable table(sizes.size());
  for (unsigned a : sizes)
    for (unsigned b : sizes)
      if (has(a * b)) table.set_obj(object_of[a], object_of[b], object_of[a * b]);
  for (MorId f = 0; f < m; ++f)
    for (MorId g = 0; g < m; ++g) {
      const Fn& ff = out.functions[f];
      const Fn& gf = out.functions[g];
      if (ff.size() == gf.size()) base->set_comp(f, g, interned[ff.size()].at(compose_fn(ff, gf)));
      unsigned prod = static_cast<unsigned>(ff.size() * gf.size());
      if (has(prod)) table.set_mor(f, g, interned[prod].at(tensor_fn(ff, gf)));
    }
  IteratedMonoidalCat v;
  v.name = "finset";
  v.base = base;
  v.unit = object_of.at(1);
  v.fold = 1;
  v.partial = true;
  v.products.push_back(std::move(table));
  // The pairing is strictly associative: ((x·b)+y)·d+z = x·(b·d)+(y·d+z).
  AssociatorFamily assoc;
  for (unsigned a : sizes)
    for (unsigned b : sizes)
      for (unsigned d : sizes)
        if (has(a * b) && has(b * d) && has(a * b * d)) {
          assoc[{object_of[a], object_of[b], object_of[d]}] = c.identity(object_of[a * b * d]);
        }
  v.associators.push_back(std::move(assoc));
  out.monoidal = std::move(v);
  out.symmetry = std::move(sym);
  return out;
}

}  // namespace itercat
