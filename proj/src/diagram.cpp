#include "itercat/diagram.hpp"

namespace itercat {

namespace {

Term broken(Term::State s, std::string label) {
  Term t;
  t.state = s;
  t.label = std::move(label);
  return t;
}

Term::State worst(Term::State a, Term::State b) {
  if (a == Term::Undefined || b == Term::Undefined) return Term::Undefined;
  if (a == Term::Missing || b == Term::Missing) return Term::Missing;
  return Term::Ok;
}

}  // namespace

std::string DiagramEval::name(MorId f) const {
  if (f == kNoMor) return "none";
  return v_.cat().mor_name(f);
}

Term DiagramEval::mor(MorId f) const {
  Term t;
  t.mor = f;
  if (verbose_) t.label = name(f);
  return t;
}

Term DiagramEval::id(ObjId a) const {
  MorId f = v_.cat().identity(a);
  if (f == kNoMor) return broken(Term::Missing, verbose_ ? "missing identity" : "");
  return mor(f);
}

Term DiagramEval::entry(MorId f, const std::string& label) const {
  if (f == kNoMor) return broken(Term::Missing, verbose_ ? "missing " + label : "");
  Term t;
  t.mor = f;
  if (verbose_) t.label = label;
  return t;
}

Term DiagramEval::alpha(int i, ObjId u, ObjId w, ObjId x) const {
  if (!v_.find_tensor(i, u, w) || !v_.find_tensor(i, w, x)) {
    return broken(v_.partial ? Term::Undefined : Term::Missing,
                  verbose_ ? "undefined product for " + alpha_label(v_, i, u, w, x) : "");
  }
  auto f = v_.find_alpha(i, u, w, x);
  return entry(f ? *f : kNoMor, verbose_ ? alpha_label(v_, i, u, w, x) : std::string());
}

Term DiagramEval::eta(int i, int j, ObjId a, ObjId b, ObjId c, ObjId d) const {
  auto ab = v_.find_tensor(j, a, b);
  auto cd = v_.find_tensor(j, c, d);
  auto ac = v_.find_tensor(i, a, c);
  auto bd = v_.find_tensor(i, b, d);
  if (!ab || !cd || !ac || !bd || !v_.find_tensor(i, *ab, *cd) || !v_.find_tensor(j, *ac, *bd)) {
    return broken(v_.partial ? Term::Undefined : Term::Missing,
                  verbose_ ? "undefined product for " + eta_label(v_, i, j, a, b, c, d) : "");
  }
  auto f = v_.find_eta(i, j, a, b, c, d);
  return entry(f ? *f : kNoMor, verbose_ ? eta_label(v_, i, j, a, b, c, d) : std::string());
}

Term DiagramEval::tensor(int i, const Term& f, const Term& g) const {
  std::string label;
  if (verbose_) label = "(" + f.label + " (x)_" + std::to_string(i) + " " + g.label + ")";
  if (!f.ok() || !g.ok()) return broken(worst(f.state, g.state), label);
  const FinCat& c = v_.cat();
  auto d = v_.find_tensor(i, c.dom(f.mor), c.dom(g.mor));
  auto e = v_.find_tensor(i, c.cod(f.mor), c.cod(g.mor));
  if (!d || !e) {
    return broken(v_.partial ? Term::Undefined : Term::Missing,
                  verbose_ ? "undefined product in " + label : "");
  }
  auto r = v_.find_tensor_mor(i, f.mor, g.mor);
  if (!r) return broken(Term::Missing, verbose_ ? "missing tensor entry " + label : "");
  Term t;
  t.mor = *r;
  t.label = std::move(label);
  return t;
}

Term DiagramEval::then(const Term& first, const Term& second) const {
  std::string label;
  if (verbose_) label = first.label + " ; " + second.label;
  if (!first.ok() || !second.ok()) return broken(worst(first.state, second.state), label);
  const FinCat& c = v_.cat();
  if (c.cod(first.mor) != c.dom(second.mor)) {
    return broken(Term::Missing,
                  verbose_ ? "non-composable [" + first.label + " : " + name(first.mor) + "] then [" +
                                 second.label + " : " + name(second.mor) + "]"
                           : "");
  }
  auto r = c.lookup_comp(second.mor, first.mor);
  if (!r) return broken(Term::Missing, verbose_ ? "missing composite " + label : "");
  Term t;
  t.mor = *r;
  t.label = std::move(label);
  return t;
}

std::string DiagramEval::describe(const Term& t) const {
  switch (t.state) {
    case Term::Ok: return name(t.mor) + " = " + t.label;
    case Term::Missing: return "broken: " + t.label;
    case Term::Undefined: return "undefined: " + t.label;
  }
  return t.label;
}

LegVerdict compare_legs(const Term& a, const Term& b) {
  if (a.state == Term::Undefined || b.state == Term::Undefined) return LegVerdict::Skip;
  if (!a.ok() || !b.ok()) return LegVerdict::Broken;
  return a.mor == b.mor ? LegVerdict::Equal : LegVerdict::Different;
}

}  // namespace itercat
