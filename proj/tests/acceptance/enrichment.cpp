#include <random>

#include "criteria.hpp"
#include "itercat/corpus.hpp"
#include "itercat/error.hpp"

namespace acceptance {

using namespace itercat;

namespace {

constexpr ObjId F = 0, T = 1;

using Relation = std::vector<bool>;

std::vector<std::string> letters(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(1, static_cast<char>('a' + i));
  return out;
}

bool reflexive_transitive(std::size_t n, const Relation& r) {
  for (std::size_t a = 0; a < n; ++a) {
    if (!r[a * n + a]) return false;
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (r[a * n + b] && r[b * n + c] && !r[a * n + c]) return false;
  }
  return true;
}

Relation closure(std::size_t n, Relation r) {
  for (std::size_t a = 0; a < n; ++a) r[a * n + a] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (r[a * n + k] && r[k * n + b]) r[a * n + b] = true;
  return r;
}

Relation random_relation(std::mt19937& rng, std::size_t n) {
  Relation r(n * n);
  for (std::size_t p = 0; p < n * n; ++p) r[p] = rng() % 10 < 5;
  return r;
}

VCatPtr preorder_vcat(const MonoidalPtr& v, std::size_t n, const Relation& r, const std::string& name) {
  std::vector<ObjId> homs;
  for (bool b : r) homs.push_back(b ? T : F);
  return std::make_shared<const VCat>(thin_vcat(name, v, letters(n), homs));
}

std::string count(std::size_t good, std::size_t total) { return std::to_string(good) + "/" + std::to_string(total); }

}  // namespace

Outcome enrichment_soundness() {
  auto v = std::make_shared<const IteratedMonoidalCat>(boolean_symmetric(3));
  std::mt19937 rng(2024);
  std::size_t agree = 0, preorders = 0;
  std::vector<VCatPtr> passing;
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t n = 1 + rng() % 5;
    Relation r = random_relation(rng, n);
    if (trial % 2 == 0) r = closure(n, r);
    auto a = preorder_vcat(v, n, r, "R" + std::to_string(trial));
    bool oracle = reflexive_transitive(n, r);
    bool checker = check_vcat(*a).ok();
    agree += oracle == checker;
    preorders += oracle;
    if (checker) passing.push_back(a);
  }

  std::size_t tensors = 0, tensors_ok = 0, structure = 0, structure_ok = 0;
  for (std::size_t x = 0; x < passing.size(); ++x)
    for (std::size_t y = 0; y < passing.size(); ++y)
      for (int i = 1; i < v->fold; ++i) {
        ++tensors;
        tensors_ok += check_vcat(tensor_vcat(*passing[x], *passing[y], i)).ok();
      }
  // Triples and quadruples of consecutive preorders, kept to at most 64 objects.
  auto small = [&](std::size_t first, std::size_t k) {
    std::size_t objects = 1;
    for (std::size_t q = 0; q < k; ++q) objects *= passing[(first + q) % passing.size()]->size();
    return objects <= 64;
  };
  for (std::size_t x = 0; x < passing.size(); ++x) {
    const VCat& a = *passing[x];
    const VCat& b = *passing[(x + 1) % passing.size()];
    const VCat& c = *passing[(x + 2) % passing.size()];
    const VCat& d = *passing[(x + 3) % passing.size()];
    if (small(x, 3))
      for (int i = 1; i < v->fold; ++i) {
        ++structure;
        structure_ok += check_vfunctor(vcat_associator(a, b, c, i)).ok();
      }
    if (small(x, 4))
      for (int i = 1; i < v->fold; ++i)
        for (int j = i + 1; j < v->fold; ++j) {
          ++structure;
          structure_ok += check_vfunctor(vcat_interchange(a, b, c, d, i, j)).ok();
        }
  }
  Outcome o;
  o.pass = agree == 20 && tensors_ok == tensors && structure_ok == structure && structure > 0 && preorders > 0 &&
           preorders < 20;
  o.detail = count(agree, 20) + " relations agree with the relational oracle (" + std::to_string(preorders) +
             " preorders); " + count(tensors_ok, tensors) + " tensors pass check_vcat; " +
             count(structure_ok, structure) + " associators and interchanges pass check_vfunctor";
  return o;
}

// Level-2 Boolean fixtures.

namespace {

// Objects 0..n-1; hom(x,y) has sizes[x*n+y] elements ordered by rel; the
// composite of p in hom(y,z) after q in hom(x,y) is maps[(x*n+y)*n+z][p*|xy|+q].
struct TwoPreorderData {
  std::size_t n = 0;
  std::vector<std::size_t> sizes;
  std::vector<Relation> rel;
  std::vector<std::vector<std::size_t>> maps;
  std::vector<std::size_t> units;

  std::size_t size(std::size_t x, std::size_t y) const { return sizes[x * n + y]; }
  bool le(std::size_t x, std::size_t y, std::size_t p, std::size_t q) const {
    return rel[x * n + y][p * size(x, y) + q];
  }
  std::size_t comp(std::size_t x, std::size_t y, std::size_t z, std::size_t p, std::size_t q) const {
    return maps[(x * n + y) * n + z][p * size(x, y) + q];
  }
};

enum class Verdict { Valid, NotMonotone, Invalid };

// Direct check of the 2-preorder laws.
Verdict oracle(const TwoPreorderData& d) {
  std::size_t n = d.n;
  // Monotonicity is judged against the closed relations the composition is built over.
  TwoPreorderData closed = d;
  for (std::size_t h = 0; h < n * n; ++h) closed.rel[h] = closure(d.sizes[h], d.rel[h]);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        for (std::size_t p = 0; p < d.size(y, z); ++p)
          for (std::size_t p2 = 0; p2 < d.size(y, z); ++p2)
            for (std::size_t q = 0; q < d.size(x, y); ++q)
              for (std::size_t q2 = 0; q2 < d.size(x, y); ++q2)
                if (closed.le(y, z, p, p2) && closed.le(x, y, q, q2) &&
                    !closed.le(x, z, d.comp(x, y, z, p, q), d.comp(x, y, z, p2, q2))) {
                  return Verdict::NotMonotone;
                }
  bool ok = true;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) ok = ok && reflexive_transitive(d.size(x, y), d.rel[x * n + y]);
  for (std::size_t w = 0; w < n; ++w)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z)
          for (std::size_t r = 0; r < d.size(y, z); ++r)
            for (std::size_t q = 0; q < d.size(x, y); ++q)
              for (std::size_t p = 0; p < d.size(w, x); ++p) {
                ok = ok && d.comp(w, y, z, r, d.comp(w, x, y, q, p)) == d.comp(w, x, z, d.comp(x, y, z, r, q), p);
              }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t p = 0; p < d.size(x, y); ++p) {
        ok = ok && d.comp(x, x, y, p, d.units[x]) == p && d.comp(x, y, y, d.units[y], p) == p;
      }
  return ok ? Verdict::Valid : Verdict::Invalid;
}

EnCatPtr hom_category(const MonoidalPtr& v, std::size_t k, const Relation& r) {
  std::vector<std::string> labels;
  for (std::size_t p = 0; p < k; ++p) labels.push_back("e" + std::to_string(p));
  std::vector<ObjId> h;
  for (bool b : r) h.push_back(b ? T : F);
  return encat_from_vcat(thin_vcat("hom", v, labels, h));
}

// Composition is built over the closed hom relations, since tensoring needs
// lawful homs; a hom whose relation is not closed is swapped in afterwards.
EnCatPtr build(const MonoidalPtr& v, const TwoPreorderData& d) {
  std::vector<EnCatPtr> closed;
  for (std::size_t x = 0; x < d.n; ++x)
    for (std::size_t y = 0; y < d.n; ++y) {
      closed.push_back(hom_category(v, d.size(x, y), closure(d.size(x, y), d.rel[x * d.n + y])));
    }
  EnCatPtr c = thin_2cat("Q", v, letters(d.n), closed, d.maps, d.units);
  auto out = std::make_shared<EnrichedCat>(*c);
  for (std::size_t x = 0; x < d.n; ++x)
    for (std::size_t y = 0; y < d.n; ++y) {
      const Relation& r = d.rel[x * d.n + y];
      if (r != closure(d.size(x, y), r)) out->homs[x * d.n + y] = hom_category(v, d.size(x, y), r);
    }
  return out;
}

// Objects ordered 0 < 1 < ...; chain homs upwards whose composite adds
// positions, so every fixture starts out valid.
TwoPreorderData random_additive(std::mt19937& rng) {
  TwoPreorderData d;
  d.n = 1 + rng() % 3;
  std::size_t n = d.n;
  d.sizes.assign(n * n, 0);
  for (std::size_t x = 0; x < n; ++x) d.sizes[x * n + x] = 1;
  for (std::size_t gap = 1; gap < n; ++gap)
    for (std::size_t x = 0; x + gap < n; ++x) {
      std::size_t z = x + gap, need = 1 + rng() % 2;
      for (std::size_t y = x + 1; y < z; ++y) need = std::max(need, d.size(x, y) + d.size(y, z) - 1);
      d.sizes[x * n + z] = need + rng() % 2;
    }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      std::size_t k = d.size(x, y);
      Relation r(k * k);
      for (std::size_t p = 0; p < k; ++p)
        for (std::size_t q = 0; q < k; ++q) r[p * k + q] = p <= q;
      d.rel.push_back(r);
    }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        std::vector<std::size_t> m;
        for (std::size_t p = 0; p < d.size(y, z); ++p)
          for (std::size_t q = 0; q < d.size(x, y); ++q) m.push_back(p + q);
        d.maps.push_back(m);
      }
  d.units.assign(n, 0);
  return d;
}

// One random entry changed: a composite, an order relation or a unit.
bool mutate(std::mt19937& rng, TwoPreorderData& d) {
  switch (rng() % 3) {
    case 0: {
      std::size_t at = rng() % d.maps.size();
      std::size_t k = d.size(at / (d.n * d.n), at % d.n);
      if (d.maps[at].empty() || k < 2) return false;
      std::size_t e = rng() % d.maps[at].size();
      d.maps[at][e] = (d.maps[at][e] + 1 + rng() % (k - 1)) % k;
      return true;
    }
    case 1: {
      std::size_t at = rng() % d.rel.size();
      if (d.rel[at].empty()) return false;
      std::size_t e = rng() % d.rel[at].size();
      d.rel[at][e] = !d.rel[at][e];
      return true;
    }
    default: {
      std::size_t x = rng() % d.n;
      if (d.size(x, x) < 2) return false;
      d.units[x] = 1;
      return true;
    }
  }
}

}  // namespace

Outcome tower_recursion() {
  struct Base {
    std::string name;
    MonoidalPtr v;
  };
  auto finset = finset_skeleton({1, 2, 3, 4});
  std::vector<Base> bases = {
      {"boolean", std::make_shared<const IteratedMonoidalCat>(boolean_symmetric(3))},
      {"tropical", std::make_shared<const IteratedMonoidalCat>(tropical_chain(3))},
      {"finset", std::make_shared<const IteratedMonoidalCat>(from_symmetric(finset.monoidal, finset.symmetry, 2))},
  };
  std::size_t towers = 0, towers_ok = 0;
  for (const auto& b : bases)
    for (int n = 0; n <= b.v->fold; ++n) {
      ++towers;
      towers_ok += check_enriched_cat(*unit_tower(b.v, n)).ok();
    }

  // Boolean level-2 fixtures: the bundled ones, random additive ones and
  // single-entry mutants of those.
  auto v = bases[0].v;
  std::mt19937 rng(17);
  std::vector<TwoPreorderData> fixtures;
  for (int k = 0; k < 40; ++k) {
    TwoPreorderData d = random_additive(rng);
    fixtures.push_back(d);
    for (int m = 0; m < 4; ++m) {
      TwoPreorderData e = d;
      if (mutate(rng, e)) fixtures.push_back(e);
    }
  }
  std::size_t agree = 0, valid = 0, invalid = 0, rejected = 0, consequences = 0;
  std::string first_problem;
  for (std::size_t k = 0; k < fixtures.size(); ++k) {
    Verdict expected = oracle(fixtures[k]);
    EnCatPtr c;
    try {
      c = build(v, fixtures[k]);
    } catch (const Error& e) {
      if (expected == Verdict::NotMonotone && e.kind() == ErrorKind::MissingEntry) {
        ++agree;
        ++rejected;
      } else if (first_problem.empty()) {
        first_problem = "fixture " + std::to_string(k) + " threw " + e.what();
      }
      continue;
    }
    CheckReport r = check_enriched_cat(*c);
    bool same = r.ok() == (expected == Verdict::Valid) && expected != Verdict::NotMonotone;
    if (same) ++agree;
    else if (first_problem.empty()) first_problem = "fixture " + std::to_string(k) + " disagrees";
    if (r.ok()) {
      ++valid;
      consequences += check_functoriality_consequences(*c).ok();
    } else {
      ++invalid;
    }
  }
  Workspace tp = bundled("twopreorder");
  for (const char* name : {"P", "D", "I2"}) {
    ++valid;
    EnCatPtr c = tp.encat(name);
    bool ok = check_enriched_cat(*c).ok();
    agree += ok;
    consequences += ok && check_functoriality_consequences(*c).ok();
  }
  std::size_t total = fixtures.size() + 3;
  Outcome o;
  o.pass = towers_ok == towers && agree == total && consequences == valid && invalid > 0;
  o.detail = count(towers_ok, towers) + " unit towers pass; " + count(agree, total) +
             " level-2 fixtures agree with the 2-preorder oracle (" + std::to_string(valid) + " valid, " +
             std::to_string(invalid) + " invalid, " + std::to_string(rejected) + " non-monotone rejected); " +
             count(consequences, valid) + " pass the functoriality consequences";
  if (!first_problem.empty()) o.detail += " [" + first_problem + "]";
  return o;
}

}  // namespace acceptance
