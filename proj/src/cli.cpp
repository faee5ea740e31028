#include "itercat/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <functional>
#include <set>

#include "itercat/error.hpp"

#ifndef ITERCAT_DEFAULT_CORPUS
#define ITERCAT_DEFAULT_CORPUS "data"
#endif

namespace itercat {

namespace {

using Check = std::function<std::optional<CheckReport>(const Binding&, const CheckOptions&)>;

template <typename T>
const T* as(const Binding& b) {
  return std::get_if<T>(&b.value);
}

CheckReport encat_checks(const EnrichedCat& e, const CheckOptions& opts) {
  CheckReport r = check_enriched_cat(e, opts);
  if (e.level == 2 && r.ok()) r.merge(check_functoriality_consequences(e));
  return r;
}

// The underlying category three ways.
CheckReport underlying_checks(const Binding& b) {
  CheckReport r;
  if (auto* a = as<VCatPtr>(b)) {
    FinCat u = underlying_category(**a);
    if (!same_tables(u, representable_category(**a))) {
      r.add("underlying.representable", {}, "tables of the representable category", "different tables");
    }
    if (!same_tables(u, underlying_tower(*b.as_encat, 1))) {
      r.add("underlying.tower", {}, "tables of the underlying tower", "different tables");
    }
    return r;
  }
  const EnrichedCat& e = **as<EnCatPtr>(b);
  FinCat first = underlying_tower(e, 1);
  for (int s = 2; s <= e.level; ++s)
    if (!same_tables(first, underlying_tower(e, s))) {
      r.add("underlying.steps", {std::to_string(s)}, "tables at steps 1", "different tables");
    }
  return r;
}

struct Suite {
  std::string name;
  Check check;
};

const std::vector<Suite>& suites() {
  static const std::vector<Suite> all = {
      {"category",
       [](const Binding& b, const CheckOptions& o) -> std::optional<CheckReport> {
         if (auto* c = as<FinCatPtr>(b)) return check_category_axioms(**c, o);
         return std::nullopt;
       }},
      {"kfold",
       [](const Binding& b, const CheckOptions& o) -> std::optional<CheckReport> {
         if (auto* m = as<MonoidalValue>(b)) return check_kfold_axioms(*m->v, o);
         return std::nullopt;
       }},
      {"symmetry",
       [](const Binding& b, const CheckOptions&) -> std::optional<CheckReport> {
         if (auto* m = as<MonoidalValue>(b); m && m->symmetry) return check_symmetry(*m->v, *m->symmetry);
         return std::nullopt;
       }},
      {"homset",
       [](const Binding& b, const CheckOptions& o) -> std::optional<CheckReport> {
         if (auto* m = as<MonoidalValue>(b)) return check_hom_functor(hom_functor(m->v), o);
         return std::nullopt;
       }},
      {"check-vcat",
       [](const Binding& b, const CheckOptions& o) -> std::optional<CheckReport> {
         if (auto* a = as<VCatPtr>(b)) return check_vcat(**a, o);
         return std::nullopt;
       }},
      {"check-vfunctor",
       [](const Binding& b, const CheckOptions& o) -> std::optional<CheckReport> {
         if (auto* t = as<VFunPtr>(b)) return check_vfunctor(**t, o);
         return std::nullopt;
       }},
      {"check-encat",
       [](const Binding& b, const CheckOptions& o) -> std::optional<CheckReport> {
         if (auto* e = as<EnCatPtr>(b)) return encat_checks(**e, o);
         return std::nullopt;
       }},
      {"check-enfunctor",
       [](const Binding& b, const CheckOptions& o) -> std::optional<CheckReport> {
         if (auto* f = as<EnFunPtr>(b)) return check_enriched_functor(**f, o);
         return std::nullopt;
       }},
      {"check-kcell",
       [](const Binding& b, const CheckOptions& o) -> std::optional<CheckReport> {
         if (auto* k = as<KCellPtr>(b)) return check_kcell(**k, o);
         return std::nullopt;
       }},
      {"check-mfunctor",
       [](const Binding& b, const CheckOptions& o) -> std::optional<CheckReport> {
         if (auto* f = as<MFunPtr>(b)) return check_nfold_functor(**f, o);
         return std::nullopt;
       }},
      {"underlying",
       [](const Binding& b, const CheckOptions&) -> std::optional<CheckReport> {
         if (as<VCatPtr>(b) || as<EnCatPtr>(b)) return underlying_checks(b);
         return std::nullopt;
       }},
      {"kcell-closure", nullptr},
  };
  return all;
}

int parse_int(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw Error(ErrorKind::ParseError, what + " must be an integer, got '" + s + "'");
}

CheckReport run_one(const Workspace& ws, const Suite& suite, const std::map<std::string, std::string>& params,
                    const CheckOptions& opts) {
  if (suite.name == "kcell-closure") {
    int level = 0;
    if (auto it = params.find("n"); it != params.end()) level = parse_int(it->second, "n");
    return kcell_closure(ws, level, opts);
  }
  CheckReport out;
  for (const Binding& b : ws.bindings()) {
    std::optional<CheckReport> r;
    try {
      r = suite.check(b, opts);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::BudgetExceeded) throw;
      r.emplace();
      r->add(suite.name + ".error", {}, "no error", e.what());
    }
    if (r) out.merge(*r, {b.name});
  }
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& s : suites()) n.push_back(s.name);
    n.push_back("all");
    return n;
  }();
  return names;
}

CheckReport run_suite(const Workspace& ws, const std::string& suite,
                      const std::map<std::string, std::string>& params, const CheckOptions& opts) {
  for (const auto& [key, value] : params)
    if (key != "n" || (suite != "kcell-closure" && suite != "all")) {
      throw Error(ErrorKind::ParseError, "suite " + suite + " takes no parameter " + key);
    }
  if (suite == "all") {
    CheckReport out;
    for (const auto& s : suites()) out.merge(run_one(ws, s, params, opts));
    return out;
  }
  for (const auto& s : suites())
    if (s.name == suite) return run_one(ws, s, params, opts);
  throw Error(ErrorKind::UnknownSuite, suite);
}

// Closure of the bound cells.

CheckReport kcell_closure(const Workspace& ws, int level, const CheckOptions& opts) {
  std::vector<std::pair<std::string, KCellPtr>> cells;
  std::vector<std::pair<std::string, EnFunPtr>> functors;
  for (const Binding& b : ws.bindings()) {
    if (auto* k = as<KCellPtr>(b); k && (level == 0 || (*k)->level() == level)) cells.emplace_back(b.name, *k);
    if (b.as_enfun && (level == 0 || b.as_enfun->level == level)) functors.emplace_back(b.name, b.as_enfun);
    if (auto* f = as<EnFunPtr>(b); f && (*f)->level > 0 && (level == 0 || (*f)->level == level)) {
      functors.emplace_back(b.name, *f);
    }
  }
  guard_budget(opts, cells.size() * cells.size() * 4 + cells.size() * functors.size() * 2, "kcell-closure");

  CheckReport out;
  auto checked = [&](std::vector<std::string> where, const std::function<KCellPtr()>& make) -> KCellPtr {
    KCellPtr c;
    try {
      c = make();
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::BoundaryMismatch) return nullptr;
      out.add("closure.error", where, "a cell", e.what());
      return nullptr;
    }
    out.merge(check_kcell(*c, opts), where);
    return c;
  };

  for (const auto& [name, f] : functors) checked({"unit", name}, [&, f = f] { return unit_kcell(f); });
  for (const auto& [name, c] : cells) {
    checked({"unit", name}, [&, c = c] { return unit_kcell(c); });
    // Units on both sides along the top boundary.
    try {
      KCellPtr lower = c->dim == 2 ? unit_kcell(c->F) : unit_kcell(c->source);
      KCellPtr upper = c->dim == 2 ? unit_kcell(c->G) : unit_kcell(c->target);
      if (!same_kcell(*compose_kcells(c, lower, c->dim - 1), *c)) {
        out.add("closure.unit.right", {name}, "c composed with the unit on its source is c", "a different cell");
      }
      if (!same_kcell(*compose_kcells(upper, c, c->dim - 1), *c)) {
        out.add("closure.unit.left", {name}, "the unit on its target composed with c is c", "a different cell");
      }
    } catch (const Error& e) {
      out.add("closure.error", {"unit", name}, "a cell", e.what());
    }
  }
  for (const auto& [bn, beta] : cells)
    for (const auto& [an, alpha] : cells) {
      int k = std::max(beta->dim, alpha->dim);
      for (int m = 0; m < k; ++m) {
        KCellPtr c = checked({"compose", bn, an, std::to_string(m)},
                             [&, b = beta, a = alpha] { return compose_kcells(b, a, m); });
        if (c && m == 0) {
          auto [first, second] = zero_composites(beta, alpha);
          if (!same_kcell(*first, *second)) {
            out.add("closure.zero_orders", {bn, an}, "(K a)(b F) = (b G)(H a)", "different cells");
          }
        }
      }
    }
  for (const auto& [cn, c] : cells)
    for (const auto& [fn, f] : functors) {
      if (same_cat(*f->source, *c->codomain())) {
        checked({"whisker", fn, cn}, [&, f = f, c = c] { return whisker_right(f, c); });
      }
      if (same_cat(*f->target, c->domain())) {
        checked({"whisker", cn, fn}, [&, f = f, c = c] { return whisker_left(c, f); });
      }
    }
  return out;
}

// Constructions.

ConstructArgs ConstructArgs::parse(const std::vector<std::string>& args) {
  ConstructArgs a;
  for (const auto& s : args) {
    auto eq = s.find('=');
    if (eq != std::string::npos && eq > 0) {
      a.named[s.substr(0, eq)] = s.substr(eq + 1);
    } else {
      a.positional.push_back(s);
    }
  }
  return a;
}

namespace {

class ArgReader {
 public:
  ArgReader(const ConstructArgs& a, std::string verb) : a_(a), verb_(std::move(verb)) {}

  int integer(const std::string& key, std::optional<int> fallback = {}) {
    if (auto it = a_.named.find(key); it != a_.named.end()) {
      used_.insert(key);
      return parse_int(it->second, key);
    }
    if (next_ < a_.positional.size()) return parse_int(a_.positional[next_++], key);
    if (fallback) return *fallback;
    throw Error(ErrorKind::ParseError, verb_ + ": missing argument " + key);
  }

  const std::string& name(const std::string& what) {
    if (next_ < a_.positional.size()) return a_.positional[next_++];
    throw Error(ErrorKind::ParseError, verb_ + ": missing argument " + what);
  }

  void done() const {
    if (next_ < a_.positional.size()) {
      throw Error(ErrorKind::ParseError, verb_ + ": unexpected argument " + a_.positional[next_]);
    }
    for (const auto& [key, value] : a_.named)
      if (!used_.count(key)) throw Error(ErrorKind::ParseError, verb_ + ": unknown parameter " + key);
  }

 private:
  const ConstructArgs& a_;
  std::string verb_;
  std::size_t next_ = 0;
  std::set<std::string> used_;
};

bool is_kind(const Workspace& ws, const std::string& name, const char* kind) {
  return kind_of(ws.at(name).value) == kind;
}

bool is_cell(const Workspace& ws, const std::string& name) { return is_kind(ws, name, "kcell"); }

struct Verb {
  std::string name;
  std::string usage;
  std::function<Value(Workspace&, ArgReader&)> run;
};

const std::vector<Verb>& verbs() {
  static const std::vector<Verb> all = {
      {"tensor", "tensor <i> <A> <B>: vcats, encats, vfunctors or enfunctors",
       [](Workspace& ws, ArgReader& r) -> Value {
         int i = r.integer("i");
         std::string a = r.name("A"), b = r.name("B");
         r.done();
         if (is_kind(ws, a, "vcat") && is_kind(ws, b, "vcat")) {
           return std::make_shared<const VCat>(tensor_vcat(*ws.vcat(a), *ws.vcat(b), i));
         }
         if (is_kind(ws, a, "vfunctor") && is_kind(ws, b, "vfunctor")) {
           auto s = std::get<VFunPtr>(ws.at(a).value), t = std::get<VFunPtr>(ws.at(b).value);
           return std::make_shared<const VFunctor>(tensor_vfunctor(*s, *t, i));
         }
         if (is_kind(ws, a, "vfunctor") || is_kind(ws, a, "enfunctor")) {
           return tensor_functors(*ws.enfunctor(a), *ws.enfunctor(b), i);
         }
         return tensor_tower(ws.encat(a), ws.encat(b), i);
       }},
      {"unit-vcat", "unit-vcat <V>",
       [](Workspace& ws, ArgReader& r) -> Value {
         auto v = ws.monoidal(r.name("V"));
         r.done();
         return std::make_shared<const VCat>(vcat_unit(v));
       }},
      {"unit-tower", "unit-tower <V> <n>",
       [](Workspace& ws, ArgReader& r) -> Value {
         auto v = ws.monoidal(r.name("V"));
         int n = r.integer("n");
         r.done();
         return unit_tower(v, n);
       }},
      {"from-symmetric", "from-symmetric <M> <k>: M needs a symmetry",
       [](Workspace& ws, ArgReader& r) -> Value {
         std::string m = r.name("M");
         int k = r.integer("k");
         r.done();
         const auto& mv = std::get<MonoidalValue>(ws.at(m).value);
         if (!mv.symmetry) throw Error(ErrorKind::InvalidSymmetry, m + " declares no symmetry");
         auto lifted = std::make_shared<IteratedMonoidalCat>(from_symmetric(*mv.v, *mv.symmetry, k));
         return MonoidalValue{lifted, mv.symmetry};
       }},
      {"induce", "induce <F> <X>: F a monoidal functor, X a vcat or vfunctor",
       [](Workspace& ws, ArgReader& r) -> Value {
         auto f = ws.mfunctor(r.name("F"));
         std::string x = r.name("X");
         r.done();
         if (is_kind(ws, x, "vfunctor")) {
           return std::make_shared<const VFunctor>(induce_on_functor(*f, *std::get<VFunPtr>(ws.at(x).value)));
         }
         return std::make_shared<const VCat>(induce(*f, *ws.vcat(x)));
       }},
      {"compose-mfunctor", "compose-mfunctor <G> <F>: G after F",
       [](Workspace& ws, ArgReader& r) -> Value {
         auto g = ws.mfunctor(r.name("G"));
         auto f = ws.mfunctor(r.name("F"));
         r.done();
         return std::make_shared<const NFoldMonoidalFunctor>(compose_nfold(*g, *f));
       }},
      {"underlying", "underlying <A> [steps]: a vcat or an encat",
       [](Workspace& ws, ArgReader& r) -> Value {
         std::string a = r.name("A");
         int steps = r.integer("steps", 1);
         r.done();
         if (is_kind(ws, a, "vcat")) return std::make_shared<const FinCat>(underlying_category(*ws.vcat(a)));
         return std::make_shared<const FinCat>(underlying_tower(*ws.encat(a), steps));
       }},
      {"representable", "representable <A>: the underlying category by brute force",
       [](Workspace& ws, ArgReader& r) -> Value {
         auto a = ws.vcat(r.name("A"));
         r.done();
         return std::make_shared<const FinCat>(representable_category(*a));
       }},
      {"compose-functors", "compose-functors <G> <F>: G after F",
       [](Workspace& ws, ArgReader& r) -> Value {
         std::string g = r.name("G"), f = r.name("F");
         r.done();
         if (is_kind(ws, g, "vfunctor") && is_kind(ws, f, "vfunctor")) {
           return std::make_shared<const VFunctor>(compose_vfunctors(*std::get<VFunPtr>(ws.at(g).value),
                                                                     *std::get<VFunPtr>(ws.at(f).value)));
         }
         return compose_functors(*ws.enfunctor(g), *ws.enfunctor(f));
       }},
      {"associator", "associator <i> <A> <B> <C>",
       [](Workspace& ws, ArgReader& r) -> Value {
         int i = r.integer("i");
         std::string a = r.name("A"), b = r.name("B"), c = r.name("C");
         r.done();
         if (is_kind(ws, a, "vcat") && is_kind(ws, b, "vcat") && is_kind(ws, c, "vcat")) {
           return std::make_shared<const VFunctor>(vcat_associator(*ws.vcat(a), *ws.vcat(b), *ws.vcat(c), i));
         }
         return associator_functor(ws.encat(a), ws.encat(b), ws.encat(c), i);
       }},
      {"interchange", "interchange <i> <j> <A> <B> <C> <D>",
       [](Workspace& ws, ArgReader& r) -> Value {
         int i = r.integer("i"), j = r.integer("j");
         std::string a = r.name("A"), b = r.name("B"), c = r.name("C"), d = r.name("D");
         r.done();
         if (is_kind(ws, a, "vcat") && is_kind(ws, b, "vcat") && is_kind(ws, c, "vcat") && is_kind(ws, d, "vcat")) {
           return std::make_shared<const VFunctor>(
               vcat_interchange(*ws.vcat(a), *ws.vcat(b), *ws.vcat(c), *ws.vcat(d), i, j));
         }
         return interchange_functor(ws.encat(a), ws.encat(b), ws.encat(c), ws.encat(d), i, j);
       }},
      {"compose-kcells", "compose-kcells <beta> <alpha> <m>: along a common m-cell",
       [](Workspace& ws, ArgReader& r) -> Value {
         auto b = ws.kcell(r.name("beta"));
         auto a = ws.kcell(r.name("alpha"));
         int m = r.integer("m");
         r.done();
         return compose_kcells(b, a, m);
       }},
      {"whisker", "whisker <K> <alpha> | whisker <alpha> <H>",
       [](Workspace& ws, ArgReader& r) -> Value {
         std::string x = r.name("first"), y = r.name("second");
         r.done();
         if (is_cell(ws, x)) return whisker_left(ws.kcell(x), ws.enfunctor(y));
         return whisker_right(ws.enfunctor(x), ws.kcell(y));
       }},
      {"unit-kcell", "unit-kcell <X>: X a functor or a cell",
       [](Workspace& ws, ArgReader& r) -> Value {
         std::string x = r.name("X");
         r.done();
         if (is_cell(ws, x)) return unit_kcell(ws.kcell(x));
         return unit_kcell(ws.enfunctor(x));
       }},
  };
  return all;
}

}  // namespace

const std::vector<std::string>& construct_verbs() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& v : verbs()) n.push_back(v.name);
    return n;
  }();
  return names;
}

std::string construct_usage() {
  std::string s;
  for (const auto& v : verbs()) s += "  " + v.usage + "\n";
  return s;
}

std::string construct(Workspace& ws, const std::string& verb, const ConstructArgs& args, const std::string& as) {
  for (const auto& v : verbs()) {
    if (v.name != verb) continue;
    ArgReader reader(args, verb);
    Value value = v.run(ws, reader);
    std::string name = as.empty() ? ws.fresh_name("result") : as;
    ws.bind(name, std::move(value), "construct " + verb);
    return name;
  }
  throw Error(ErrorKind::UnknownSuite, "no construct verb " + verb);
}

// Files.

std::vector<std::string> corpus_dirs() {
  std::vector<std::string> dirs;
  if (const char* env = std::getenv("ITERCAT_CORPUS"); env && *env) dirs.emplace_back(env);
  dirs.emplace_back(ITERCAT_DEFAULT_CORPUS);
  return dirs;
}

std::string locate_file(const std::string& path) {
  namespace fs = std::filesystem;
  if (fs::exists(path)) return path;
  if (fs::path(path).is_relative()) {
    for (const auto& d : corpus_dirs()) {
      fs::path p = fs::path(d) / path;
      if (fs::exists(p)) return p.string();
    }
  }
  throw Error(ErrorKind::DanglingReference, "cannot find " + path);
}

std::string resolve_argument(Workspace& ws, const std::string& arg, const LoadOptions& opts) {
  if (ws.find(arg)) return arg;
  bool looks_like_file = arg.size() > 4 && arg.substr(arg.size() - 4) == ".cat";
  if (!looks_like_file && !std::filesystem::exists(arg)) return arg;
  std::string path = locate_file(arg);
  std::string last;
  for (const auto& b : ws.bindings())
    if (b.origin.rfind(path + ":", 0) == 0) last = b.name;
  if (!last.empty()) return last;
  auto names = load_file(ws, path, opts);
  if (names.empty()) throw Error(ErrorKind::DanglingReference, path + " binds nothing");
  return names.back();
}

}  // namespace itercat
