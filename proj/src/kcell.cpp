#include "itercat/error.hpp"
#include "itercat/tower.hpp"

namespace itercat {

Point Point::inner() const {
  Point p;
  p.level = level - 1;
  p.chain.assign(chain.begin() + 1, chain.end());
  p.bottom = bottom;
  return p;
}

Point point_from_functor(const EnrichedFunctor& f) {
  Point p;
  p.level = f.level;
  const EnrichedFunctor* cur = &f;
  while (cur->level > 0) {
    p.chain.push_back(cur->obj_map.at(0));
    cur = cur->homs.at(0).get();
  }
  p.bottom = cur->mor;
  return p;
}

EnFunPtr expand_point(const Point& p, const EnCatPtr& target) {
  if (p.level != target->level || p.chain.size() != static_cast<std::size_t>(p.level)) {
    throw Error(ErrorKind::ShapeMismatch, "point of level " + std::to_string(p.level) +
                                              " into a category of level " +
                                              std::to_string(target->level));
  }
  if (p.level == 0) {
    // Endpoints come from the target, so a mistyped morphism is caught by the check.
    auto m = std::make_shared<EnrichedFunctor>();
    m->mor = p.bottom;
    m->source = base_object(target->base, target->base->unit);
    m->target = target;
    return m;
  }
  std::size_t w = p.object();
  if (w >= target->size()) throw Error(ErrorKind::ShapeMismatch, "point object outside " + target->name);
  auto f = std::make_shared<EnrichedFunctor>();
  f->level = p.level;
  f->source = unit_tower(target->base, p.level);
  f->target = target;
  f->obj_map = {w};
  f->homs = {expand_point(p.inner(), target->hom_ptr(w, w))};
  return f;
}

Point apply_functor(const EnrichedFunctor& f, const Point& p) {
  if (f.level != p.level) throw Error(ErrorKind::ShapeMismatch, "point and functor at different levels");
  if (p.level == 0) {
    Point r;
    r.bottom = compose(f.source->base->cat(), f.mor, p.bottom);
    return r;
  }
  std::size_t w = p.object();
  if (w >= f.obj_map.size()) throw Error(ErrorKind::ShapeMismatch, "point object outside the functor's source");
  Point r = apply_functor(f.hom(w, w), p.inner());
  r.level = p.level;
  r.chain.insert(r.chain.begin(), f.obj_map[w]);
  return r;
}

std::string point_text(const EnrichedCat& c, const Point& p) {
  if (p.level == 0) return c.base->cat().mor_name(p.bottom);
  return c.objects.at(p.object()) + "/" + point_text(c.hom(p.object(), p.object()), p.inner());
}

Point parse_point(const EnrichedCat& c, const std::string& text) {
  Point p;
  p.level = c.level;
  const EnrichedCat* cur = &c;
  std::size_t pos = 0;
  while (cur->level > 0) {
    std::size_t slash = text.find('/', pos);
    if (slash == std::string::npos) throw Error(ErrorKind::ParseError, "point " + text + " is too short for " + c.name);
    auto w = cur->find(text.substr(pos, slash - pos));
    if (!w) throw Error(ErrorKind::DanglingReference, "no object " + text.substr(pos, slash - pos) + " in " + cur->name);
    p.chain.push_back(*w);
    cur = &cur->hom(*w, *w);
    pos = slash + 1;
  }
  auto m = c.base->cat().find_morphism(text.substr(pos));
  if (!m) throw Error(ErrorKind::DanglingReference, "no morphism " + text.substr(pos) + " in the base");
  p.bottom = *m;
  return p;
}

Point unit_point(const EnrichedCat& a, std::size_t obj) { return point_from_functor(a.unit(obj)); }

CheckReport check_point(const Point& p, const EnCatPtr& target) {
  CheckReport report;
  EnFunPtr f;
  try {
    f = expand_point(p, target);
  } catch (const Error& e) {
    report.add("point.shape", {}, "point of " + target->name, e.what());
    return report;
  }
  report.merge(check_enriched_functor(*f));
  return report;
}

namespace {

void mismatch(const std::string& what) { throw Error(ErrorKind::BoundaryMismatch, what); }

std::string label(const KCell& c, std::size_t u) { return c.domain().objects[u]; }

std::size_t top(const KCell& c, std::size_t u) { return c.components.at(u).object(); }

// Hom component of a functor whose source is a binary product, at the
// object pairs (a,b) -> (a1,b1); nb is the size of the second factor.
const EnrichedFunctor& pair_hom(const EnrichedFunctor& m, std::size_t nb, std::size_t a, std::size_t b,
                                std::size_t a1, std::size_t b1) {
  std::size_t p = a * nb + b, q = a1 * nb + b1;
  if (b >= nb || b1 >= nb || p >= m.source->size() || q >= m.source->size()) {
    mismatch("object outside the product category");
  }
  return m.hom(p, q);
}

const EnrichedFunctor& checked_hom(const EnrichedFunctor& f, std::size_t x, std::size_t y) {
  if (x >= f.source->size() || y >= f.source->size()) mismatch("object outside " + f.source->name);
  return f.hom(x, y);
}

const EnCatPtr& checked_cat_hom(const EnrichedCat& c, std::size_t x, std::size_t y) {
  if (x >= c.size() || y >= c.size()) mismatch("object outside " + c.name);
  return c.hom_ptr(x, y);
}

}  // namespace

const KCell& boundary_source(const KCell& c, int j) {
  if (j < 2 || j >= c.dim) mismatch("no boundary cell of dimension " + std::to_string(j));
  return j == c.dim - 1 ? *c.source : boundary_source(*c.source, j);
}

const KCell& boundary_target(const KCell& c, int j) {
  if (j < 2 || j >= c.dim) mismatch("no boundary cell of dimension " + std::to_string(j));
  return j == c.dim - 1 ? *c.target : boundary_target(*c.source, j);
}

EnCatPtr component_category(const KCell& c, std::size_t u) {
  const EnrichedCat& W = *c.codomain();
  EnCatPtr d = checked_cat_hom(W, c.F->obj_map.at(u), c.G->obj_map.at(u));
  for (int j = 2; j < c.dim; ++j) {
    d = checked_cat_hom(*d, top(boundary_source(c, j), u), top(boundary_target(c, j), u));
  }
  return d;
}

bool same_kcell(const KCell& a, const KCell& b) {
  if (&a == &b) return true;
  if (a.dim != b.dim || a.components != b.components) return false;
  if (!same_functor(*a.F, *b.F) || !same_functor(*a.G, *b.G)) return false;
  if (a.dim == 2) return true;
  return same_kcell(*a.source, *b.source) && same_kcell(*a.target, *b.target);
}

namespace {

void require_components(const KCell& c) {
  int n = c.level();
  if (c.dim < 2 || c.dim > n + 1) {
    mismatch("a " + std::to_string(c.dim) + "-cell needs level at least " + std::to_string(c.dim - 1));
  }
  if (c.components.size() != c.domain().size()) mismatch("one component per object of the domain");
  for (const Point& p : c.components)
    if (p.level != n - c.dim + 1) {
      mismatch("components of a " + std::to_string(c.dim) + "-cell have level " +
               std::to_string(n - c.dim + 1));
    }
}

}  // namespace

KCellPtr make_2cell(EnFunPtr f, EnFunPtr g, std::vector<Point> components) {
  if (!f || !g || f->level < 1 || f->level != g->level) mismatch("2-cells join functors of one level >= 1");
  if (!same_cat(*f->source, *g->source) || !same_cat(*f->target, *g->target)) {
    mismatch("2-cell between non-parallel functors");
  }
  auto c = std::make_shared<KCell>();
  c->dim = 2;
  c->F = std::move(f);
  c->G = std::move(g);
  c->components = std::move(components);
  require_components(*c);
  return c;
}

KCellPtr make_kcell(KCellPtr source, KCellPtr target, std::vector<Point> components) {
  if (!source || !target || source->dim != target->dim) mismatch("boundary cells of different dimension");
  if (!same_functor(*source->F, *target->F) || !same_functor(*source->G, *target->G) ||
      !same_cat(source->domain(), target->domain())) {
    mismatch("boundary cells over different functors");
  }
  if (source->dim > 2 &&
      (!same_kcell(*source->source, *target->source) || !same_kcell(*source->target, *target->target))) {
    mismatch("boundary cells are not parallel");
  }
  auto c = std::make_shared<KCell>();
  c->dim = source->dim + 1;
  c->F = source->F;
  c->G = source->G;
  c->source = std::move(source);
  c->target = std::move(target);
  c->components = std::move(components);
  require_components(*c);
  return c;
}

CheckReport check_kcell(const KCell& c, const CheckOptions& opts) {
  require_components(c);
  CheckReport report;
  const EnrichedCat& U = c.domain();
  const EnrichedCat& W = *c.codomain();
  std::size_t n = U.size();
  const int k = c.dim;
  std::vector<EnCatPtr> cats(n);
  for (std::size_t u = 0; u < n; ++u) {
    try {
      cats[u] = component_category(c, u);
      report.merge(check_point(c.components[u], cats[u]), {"component " + label(c, u)});
    } catch (const Error& e) {
      report.add("kcell.component", {label(c, u)}, "point into the component category", e.what());
    }
  }
  if (!report.ok()) {
    report.normalize();
    return report;
  }
  std::vector<const KCell*> src(k), tgt(k);
  for (int j = 2; j < k; ++j) {
    src[j] = &boundary_source(c, j);
    tgt[j] = &boundary_target(c, j);
  }

  CheckReport coherence = run_partitioned(n, opts, [&](std::size_t u, CheckReport& out) {
    for (std::size_t u1 = 0; u1 < n; ++u1) {
      std::size_t Fu = c.F->obj_map[u], Fu1 = c.F->obj_map[u1];
      std::size_t Gu = c.G->obj_map[u], Gu1 = c.G->obj_map[u1];
      struct Frame {
        const EnrichedFunctor* ml;
        const EnrichedCat* sl;
        const EnrichedFunctor* fd;
        const EnrichedFunctor* mr;
        const EnrichedCat* sr;
        const EnrichedFunctor* gd;
        std::vector<std::string> loc;
      };
      // Walks the pairs (x_j, y_j) down to depth k-2, descending both
      // composition functors in step with F and G.
      auto walk = [&](auto&& self, int j, Frame fr) -> void {
        if (j == k) {
          try {
            auto a1 = expand_point(c.components[u1], cats[u1]);
            auto a0 = expand_point(c.components[u], cats[u]);
            auto l = compose_functors(*fr.ml, *tensor_functors(*a1, *fr.fd, k - 1));
            auto r = compose_functors(*fr.mr, *tensor_functors(*fr.gd, *a0, k - 1));
            if (auto d = functor_difference(*l, *r)) {
              out.add("kcell.coherence", fr.loc, "M . (alpha_{U'} (x) F)",
                      "M . (G (x) alpha_U) differs at " + *d);
            }
          } catch (const Error& e) {
            out.add("kcell.coherence", fr.loc, "M . (alpha_{U'} (x) F) = M . (G (x) alpha_U)",
                    std::string("broken: ") + e.what());
          }
          return;
        }
        const EnrichedCat& D = *fr.fd->source;
        for (std::size_t x = 0; x < D.size(); ++x)
          for (std::size_t y = 0; y < D.size(); ++y) {
            try {
              Frame next = fr;
              std::size_t fx = fr.fd->obj_map[x], fy = fr.fd->obj_map[y];
              std::size_t gx = fr.gd->obj_map[x], gy = fr.gd->obj_map[y];
              std::size_t s1 = top(*src[j], u1), t1 = top(*tgt[j], u1);
              std::size_t s0 = top(*src[j], u), t0 = top(*tgt[j], u);
              next.ml = &pair_hom(*fr.ml, fr.sl->size(), s1, fx, t1, fy);
              next.sl = checked_cat_hom(*fr.sl, fx, fy).get();
              next.fd = &checked_hom(*fr.fd, x, y);
              next.mr = &pair_hom(*fr.mr, fr.sr->size(), gx, s0, gy, t0);
              next.sr = checked_cat_hom(*fr.sr, s0, t0).get();
              next.gd = &checked_hom(*fr.gd, x, y);
              next.loc.push_back("(" + D.objects[x] + "," + D.objects[y] + ")");
              self(self, j + 1, std::move(next));
            } catch (const Error& e) {
              out.add("kcell.coherence", fr.loc, "boundary objects in range", e.what());
            }
          }
      };
      Frame start{&W.comp(Fu, Fu1, Gu1), &W.hom(Fu, Fu1), &c.F->hom(u, u1),
                  &W.comp(Fu, Gu, Gu1),  &W.hom(Fu, Gu),  &c.G->hom(u, u1),
                  {label(c, u), label(c, u1)}};
      walk(walk, 2, std::move(start));
    }
  });
  report.merge(coherence);
  report.normalize();
  return report;
}

KCellPtr unit_kcell(const EnFunPtr& f) {
  std::vector<Point> comps;
  for (std::size_t u = 0; u < f->source->size(); ++u) {
    comps.push_back(unit_point(*f->target, f->obj_map[u]));
  }
  return make_2cell(f, f, std::move(comps));
}

KCellPtr unit_kcell(const KCellPtr& c) {
  std::vector<Point> comps;
  for (std::size_t u = 0; u < c->domain().size(); ++u) {
    if (c->components[u].level < 1) mismatch("no unit cell above the top dimension");
    comps.push_back(unit_point(*component_category(*c, u), top(*c, u)));
  }
  return make_kcell(c, c, std::move(comps));
}

namespace {

KCellPtr raise(KCellPtr c, int dim) {
  while (c->dim < dim) c = unit_kcell(c);
  return c;
}

}  // namespace

KCellPtr compose_kcells(const KCellPtr& beta_in, const KCellPtr& alpha_in, int m) {
  int k = std::max(beta_in->dim, alpha_in->dim);
  KCellPtr beta = raise(beta_in, k), alpha = raise(alpha_in, k);
  if (m < 0 || m >= k) mismatch("composition along a " + std::to_string(m) + "-cell of " + std::to_string(k) + "-cells");
  if (m == 0) return zero_composites(beta, alpha).first;
  if (!same_cat(alpha->domain(), beta->domain()) || !same_cat(*alpha->codomain(), *beta->codomain())) {
    mismatch("cells over different categories");
  }
  if (m == 1) {
    if (!same_functor(*alpha->G, *beta->F)) mismatch("cells do not share the middle functor");
  } else {
    if (!same_functor(*alpha->F, *beta->F) || !same_functor(*alpha->G, *beta->G)) {
      mismatch("cells over different functors");
    }
    for (int j = 2; j < m; ++j) {
      if (!same_kcell(boundary_source(*alpha, j), boundary_source(*beta, j)) ||
          !same_kcell(boundary_target(*alpha, j), boundary_target(*beta, j))) {
        mismatch("cells differ below the common cell");
      }
    }
    if (!same_kcell(boundary_target(*alpha, m), boundary_source(*beta, m))) {
      mismatch("cells do not share the common " + std::to_string(m) + "-cell");
    }
  }
  const int i = k - m;
  const EnrichedCat& W = *alpha->codomain();
  std::vector<Point> comps;
  for (std::size_t u = 0; u < alpha->domain().size(); ++u) {
    EnCatPtr C;
    std::size_t g0, g1, g2;
    if (m == 1) {
      C = beta->codomain();
      g0 = alpha->F->obj_map[u];
      g1 = alpha->G->obj_map[u];
      g2 = beta->G->obj_map[u];
    } else {
      C = checked_cat_hom(W, alpha->F->obj_map[u], alpha->G->obj_map[u]);
      for (int j = 2; j < m; ++j) {
        C = checked_cat_hom(*C, top(boundary_source(*alpha, j), u), top(boundary_target(*alpha, j), u));
      }
      g0 = top(boundary_source(*alpha, m), u);
      g1 = top(boundary_target(*alpha, m), u);
      g2 = top(boundary_target(*beta, m), u);
    }
    if (g0 >= C->size() || g1 >= C->size() || g2 >= C->size()) mismatch("boundary objects out of range");
    const EnrichedFunctor* md = &C->comp(g0, g1, g2);
    const EnrichedCat* side = &C->hom(g0, g1);
    for (int j = m + 1; j < k; ++j) {
      std::size_t a = top(boundary_source(*beta, j), u), b = top(boundary_source(*alpha, j), u);
      std::size_t a1 = top(boundary_target(*beta, j), u), b1 = top(boundary_target(*alpha, j), u);
      md = &pair_hom(*md, side->size(), a, b, a1, b1);
      side = checked_cat_hom(*side, b, b1).get();
    }
    auto b = expand_point(beta->components[u], component_category(*beta, u));
    auto a = expand_point(alpha->components[u], component_category(*alpha, u));
    comps.push_back(point_from_functor(*compose_functors(*md, *tensor_functors(*b, *a, i))));
  }
  if (k == 2) return make_2cell(alpha->F, beta->G, std::move(comps));
  if (m == k - 1) return make_kcell(alpha->source, beta->target, std::move(comps));
  return make_kcell(compose_kcells(beta->source, alpha->source, m),
                    compose_kcells(beta->target, alpha->target, m), std::move(comps));
}

KCellPtr whisker_right(const EnFunPtr& kf, const KCellPtr& alpha) {
  if (!same_cat(*kf->source, *alpha->codomain())) mismatch("whiskering functor does not start at the codomain");
  std::vector<Point> comps;
  for (std::size_t u = 0; u < alpha->domain().size(); ++u) {
    const EnrichedFunctor* kd = &checked_hom(*kf, alpha->F->obj_map[u], alpha->G->obj_map[u]);
    for (int j = 2; j < alpha->dim; ++j) {
      kd = &checked_hom(*kd, top(boundary_source(*alpha, j), u), top(boundary_target(*alpha, j), u));
    }
    comps.push_back(apply_functor(*kd, alpha->components[u]));
  }
  if (alpha->dim == 2) {
    return make_2cell(compose_functors(*kf, *alpha->F), compose_functors(*kf, *alpha->G), std::move(comps));
  }
  return make_kcell(whisker_right(kf, alpha->source), whisker_right(kf, alpha->target), std::move(comps));
}

KCellPtr whisker_left(const KCellPtr& alpha, const EnFunPtr& h) {
  if (!same_cat(*h->target, alpha->domain())) mismatch("whiskering functor does not end at the domain");
  std::vector<Point> comps;
  for (std::size_t v = 0; v < h->source->size(); ++v) comps.push_back(alpha->components.at(h->obj_map[v]));
  if (alpha->dim == 2) {
    return make_2cell(compose_functors(*alpha->F, *h), compose_functors(*alpha->G, *h), std::move(comps));
  }
  return make_kcell(whisker_left(alpha->source, h), whisker_left(alpha->target, h), std::move(comps));
}

std::pair<KCellPtr, KCellPtr> zero_composites(const KCellPtr& beta_in, const KCellPtr& alpha_in) {
  int k = std::max(beta_in->dim, alpha_in->dim);
  KCellPtr beta = raise(beta_in, k), alpha = raise(alpha_in, k);
  if (!same_cat(*alpha->codomain(), beta->domain())) mismatch("cells do not meet at a 0-cell");
  auto first = compose_kcells(whisker_right(beta->G, alpha), whisker_left(beta, alpha->F), 1);
  auto second = compose_kcells(whisker_left(beta, alpha->G), whisker_right(beta->F, alpha), 1);
  return {first, second};
}

KCellPtr kcell_from_vnat(const VNatTrans& n) {
  std::vector<Point> comps;
  for (MorId m : n.components) {
    Point p;
    p.bottom = m;
    comps.push_back(p);
  }
  return make_2cell(enfunctor_from_vfunctor(n.source), enfunctor_from_vfunctor(n.target), std::move(comps));
}

}  // namespace itercat
