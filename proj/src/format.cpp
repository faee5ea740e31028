#include "itercat/format.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "itercat/error.hpp"

namespace itercat {

std::string kind_of(const Value& v) {
  static const char* names[] = {"category", "monoidal", "vcat", "vfunctor",
                                "encat", "enfunctor", "kcell", "monoidal-functor"};
  return names[v.index()];
}

// Workspace

namespace {

const void* pointer_of(const Value& v) {
  return std::visit(
      [](const auto& x) -> const void* {
        if constexpr (std::is_same_v<std::decay_t<decltype(x)>, MonoidalValue>) {
          return x.v.get();
        } else {
          return x.get();
        }
      },
      v);
}

}  // namespace

const Binding& Workspace::bind(std::string name, Value value, std::string origin) {
  if (index_.count(name)) {
    throw Error(ErrorKind::DuplicateName, name + " is already bound (" + bindings_[index_[name]].origin + ")");
  }
  Binding b{name, std::move(value), std::move(origin), nullptr, nullptr};
  if (auto* a = std::get_if<VCatPtr>(&b.value)) b.as_encat = encat_from_vcat(**a);
  if (auto* t = std::get_if<VFunPtr>(&b.value)) b.as_enfun = enfunctor_from_vfunctor(**t);
  by_pointer_.emplace(pointer_of(b.value), name);
  if (b.as_encat) by_pointer_.emplace(b.as_encat.get(), name);
  if (b.as_enfun) by_pointer_.emplace(b.as_enfun.get(), name);
  index_[name] = bindings_.size();
  bindings_.push_back(std::move(b));
  return bindings_.back();
}

const Binding* Workspace::find(const std::string& name) const {
  auto it = index_.find(name);
  return it == index_.end() ? nullptr : &bindings_[it->second];
}

const Binding& Workspace::at(const std::string& name, const std::string& where) const {
  if (const Binding* b = find(name)) return *b;
  throw Error(ErrorKind::DanglingReference, (where.empty() ? "" : where + ": ") + "no binding named " + name);
}

namespace {

[[noreturn]] void wrong_kind(const Binding& b, const std::string& want, const std::string& where) {
  throw Error(ErrorKind::DanglingReference, (where.empty() ? "" : where + ": ") + b.name + " is a " +
                                                kind_of(b.value) + ", not a " + want);
}

}  // namespace

MonoidalPtr Workspace::monoidal(const std::string& name, const std::string& where) const {
  const Binding& b = at(name, where);
  if (auto* m = std::get_if<MonoidalValue>(&b.value)) return m->v;
  wrong_kind(b, "monoidal", where);
}

VCatPtr Workspace::vcat(const std::string& name, const std::string& where) const {
  const Binding& b = at(name, where);
  if (auto* a = std::get_if<VCatPtr>(&b.value)) return *a;
  if (auto* e = std::get_if<EnCatPtr>(&b.value); e && (*e)->level == 1) {
    return std::make_shared<const VCat>(vcat_from_encat(**e));
  }
  wrong_kind(b, "vcat", where);
}

EnCatPtr Workspace::encat(const std::string& name, const std::string& where) const {
  const Binding& b = at(name, where);
  if (b.as_encat) return b.as_encat;
  if (auto* e = std::get_if<EnCatPtr>(&b.value)) return *e;
  wrong_kind(b, "encat", where);
}

EnFunPtr Workspace::enfunctor(const std::string& name, const std::string& where) const {
  const Binding& b = at(name, where);
  if (b.as_enfun) return b.as_enfun;
  if (auto* e = std::get_if<EnFunPtr>(&b.value)) return *e;
  wrong_kind(b, "enfunctor", where);
}

KCellPtr Workspace::kcell(const std::string& name, const std::string& where) const {
  const Binding& b = at(name, where);
  if (auto* k = std::get_if<KCellPtr>(&b.value)) return *k;
  wrong_kind(b, "kcell", where);
}

MFunPtr Workspace::mfunctor(const std::string& name, const std::string& where) const {
  const Binding& b = at(name, where);
  if (auto* f = std::get_if<MFunPtr>(&b.value)) return *f;
  wrong_kind(b, "monoidal-functor", where);
}

std::optional<std::string> Workspace::name_of(const void* p) const {
  auto it = by_pointer_.find(p);
  if (it == by_pointer_.end()) return std::nullopt;
  return it->second;
}

std::string Workspace::fresh_name(const std::string& stem) const {
  if (!find(stem)) return stem;
  for (int k = 2;; ++k) {
    std::string s = stem + "." + std::to_string(k);
    if (!find(s)) return s;
  }
}

// Parsing

namespace {

struct Line {
  int no = 0;
  std::vector<std::string> tok;
};

struct Block {
  Line header;
  std::vector<Line> body;
};

class Parser {
 public:
  Parser(Workspace& ws, std::string source) : ws_(ws), source_(std::move(source)) {}

  std::string where(int line) const { return source_ + ":" + std::to_string(line); }

  [[noreturn]] void fail(ErrorKind kind, const Line& l, const std::string& msg) const {
    throw Error(kind, where(l.no) + ": " + msg);
  }
  [[noreturn]] void syntax(const Line& l, const std::string& expected) const {
    std::string text;
    for (const auto& t : l.tok) text += (text.empty() ? "" : " ") + t;
    fail(ErrorKind::ParseError, l, "expected " + expected + ", got '" + text + "'");
  }

  void expect(const Line& l, std::size_t n, const std::string& form) const {
    if (l.tok.size() != n) syntax(l, form);
  }
  void expect_token(const Line& l, std::size_t i, const std::string& t, const std::string& form) const {
    if (i >= l.tok.size() || l.tok[i] != t) syntax(l, form);
  }

  int integer(const Line& l, const std::string& s) const {
    try {
      std::size_t used = 0;
      int v = std::stoi(s, &used);
      if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
    fail(ErrorKind::ParseError, l, "expected an integer, got '" + s + "'");
  }

  ObjId obj(const Line& l, const FinCat& c, const std::string& name) const {
    if (auto a = c.find_object(name)) return *a;
    fail(ErrorKind::DanglingReference, l, "undefined object " + name);
  }
  MorId mor(const Line& l, const FinCat& c, const std::string& name) const {
    if (auto m = c.find_morphism(name)) return *m;
    fail(ErrorKind::DanglingReference, l, "undefined morphism " + name);
  }
  std::size_t label(const Line& l, const EnrichedCat& c, const std::string& name) const {
    if (auto a = c.find(name)) return *a;
    fail(ErrorKind::DanglingReference, l, "undefined object " + name + " of " + c.name);
  }

  std::vector<Block> split(const std::string& text) const;
  std::vector<std::string> run(const std::string& text, const LoadOptions& opts);

 private:
  Value parse_block(const Block& b);
  FinCatPtr category_block(const Block& b);
  MonoidalValue monoidal_block(const Block& b);
  VCatPtr vcat_block(const Block& b, MonoidalPtr base, const std::string& name);
  VFunPtr vfunctor_block(const Block& b);
  EnCatPtr encat_block(const Block& b);
  EnFunPtr enfunctor_block(const Block& b);
  KCellPtr kcell_block(const Block& b);
  MFunPtr mfunctor_block(const Block& b);

  Workspace& ws_;
  std::string source_;
};

std::vector<Block> Parser::split(const std::string& text) const {
  std::vector<Block> blocks;
  std::istringstream in(text);
  std::string raw;
  int no = 0;
  Block* open = nullptr;
  while (std::getline(in, raw)) {
    ++no;
    Line l;
    l.no = no;
    std::istringstream words(raw);
    std::string w;
    while (words >> w) {
      if (w[0] == '#') break;
      l.tok.push_back(w);
    }
    if (l.tok.empty()) continue;
    if (!open) {
      blocks.push_back(Block{l, {}});
      open = &blocks.back();
    } else if (l.tok.size() == 1 && l.tok[0] == "end") {
      open = nullptr;
    } else {
      open->body.push_back(l);
    }
  }
  if (open) fail(ErrorKind::ParseError, open->header, "block is not closed with 'end'");
  return blocks;
}

// Category lines, shared by "category" and "monoidal" blocks. read() is false
// for a line that is not a category line.
class CategoryReader {
 public:
  CategoryReader(const Parser& p, std::string name) : p_(p), cat_(std::move(name)) {}

  bool read(const Line& l) {
    const auto& t = l.tok;
    if (t[0] == "object") {
      if (t.size() < 2) p_.syntax(l, "object <name>...");
      for (std::size_t i = 1; i < t.size(); ++i) {
        if (cat_.find_object(t[i])) p_.fail(ErrorKind::DuplicateName, l, "object " + t[i] + " declared twice");
        cat_.add_object(t[i]);
        objects_.push_back(t[i]);
      }
    } else if (t[0] == "morphism") {
      p_.expect(l, 6, "morphism <name> : <dom> -> <cod>");
      p_.expect_token(l, 2, ":", "morphism <name> : <dom> -> <cod>");
      p_.expect_token(l, 4, "->", "morphism <name> : <dom> -> <cod>");
      if (cat_.find_morphism(t[1])) p_.fail(ErrorKind::DuplicateName, l, "morphism " + t[1] + " declared twice");
      cat_.add_morphism(t[1], p_.obj(l, cat_, t[3]), p_.obj(l, cat_, t[5]));
      explicit_ = true;
    } else if (t[0] == "identity") {
      p_.expect(l, 4, "identity <object> = <morphism>");
      p_.expect_token(l, 2, "=", "identity <object> = <morphism>");
      ObjId a = p_.obj(l, cat_, t[1]);
      MorId f = p_.mor(l, cat_, t[3]);
      if (cat_.dom(f) != a || cat_.cod(f) != a) {
        p_.fail(ErrorKind::ParseError, l, t[3] + " is not an endomorphism of " + t[1]);
      }
      cat_.set_identity(a, f);
      explicit_ = true;
    } else if (t.size() == 5 && t[1] == ";" && t[3] == "=") {
      MorId g = p_.mor(l, cat_, t[0]);
      MorId f = p_.mor(l, cat_, t[2]);
      MorId h = p_.mor(l, cat_, t[4]);
      if (cat_.lookup_comp(g, f)) p_.fail(ErrorKind::DuplicateName, l, "composite " + t[0] + " ; " + t[2] + " given twice");
      try {
        cat_.set_comp(g, f, h);
      } catch (const Error& e) {
        p_.fail(e.kind(), l, e.what());
      }
      explicit_ = true;
    } else if (t[0] == "le") {
      p_.expect(l, 3, "le <object> <object>");
      p_.obj(l, cat_, t[1]);
      p_.obj(l, cat_, t[2]);
      le_.emplace_back(t[1], t[2]);
      preorder_ = true;
    } else if (t[0] == "preorder") {
      p_.expect(l, 1, "preorder");
      preorder_ = true;
    } else {
      return false;
    }
    if (preorder_ && explicit_) p_.fail(ErrorKind::ParseError, l, "preorder shorthand mixed with explicit tables");
    return true;
  }

  FinCatPtr finish() {
    if (preorder_) return std::make_shared<const FinCat>(make_preorder(cat_.name(), objects_, le_));
    return std::make_shared<const FinCat>(std::move(cat_));
  }

 private:
  const Parser& p_;
  FinCat cat_;
  std::vector<std::string> objects_;
  std::vector<std::pair<std::string, std::string>> le_;
  bool preorder_ = false;
  bool explicit_ = false;
};

FinCatPtr Parser::category_block(const Block& b) {
  expect(b.header, 2, "category <name>");
  CategoryReader r(*this, b.header.tok[1]);
  for (const Line& l : b.body)
    if (!r.read(l)) syntax(l, "a category line");
  return r.finish();
}

MonoidalValue Parser::monoidal_block(const Block& b) {
  expect(b.header, 2, "monoidal <name>");
  const std::string& name = b.header.tok[1];
  CategoryReader r(*this, name);
  std::size_t i = 0;
  while (i < b.body.size() && r.read(b.body[i])) ++i;
  auto v = std::make_shared<IteratedMonoidalCat>();
  v->name = name;
  v->base = r.finish();
  const FinCat& c = *v->base;
  std::size_t n = c.num_objects();

  enum class Section { None, Product, Associator, Interchange, Symmetry } section = Section::None;
  int si = 0, sj = 0;
  std::set<int> identity_associators;
  std::optional<SymmetryFamily> sym;
  std::optional<int> lift;
  bool thin = false;
  for (; i < b.body.size(); ++i) {
    const Line& l = b.body[i];
    const auto& t = l.tok;
    if (t[0] == "unit") {
      expect(l, 2, "unit <object>");
      v->unit = obj(l, c, t[1]);
    } else if (t[0] == "partial") {
      expect(l, 1, "partial");
      v->partial = true;
    } else if (t[0] == "thin") {
      expect(l, 1, "thin");
      thin = true;
    } else if (t[0] == "from_symmetric") {
      expect(l, 2, "from_symmetric <k>");
      lift = integer(l, t[1]);
    } else if (t[0] == "product") {
      expect(l, 2, "product <i>");
      si = integer(l, t[1]);
      if (si != static_cast<int>(v->products.size()) + 1) {
        fail(ErrorKind::ParseError, l, "products must be numbered 1, 2, ... in order");
      }
      v->products.emplace_back(n);
      section = Section::Product;
    } else if (t[0] == "associator") {
      if (t.size() != 2 && !(t.size() == 3 && t[2] == "identity")) syntax(l, "associator <i> [identity]");
      si = integer(l, t[1]);
      if (si < 1) fail(ErrorKind::ParseError, l, "product indices start at 1");
      if (v->associators.size() < static_cast<std::size_t>(si)) v->associators.resize(si);
      if (t.size() == 3) identity_associators.insert(si);
      section = Section::Associator;
    } else if (t[0] == "interchange") {
      expect(l, 3, "interchange <i> <j>");
      si = integer(l, t[1]);
      sj = integer(l, t[2]);
      if (si < 1 || si >= sj) fail(ErrorKind::ParseError, l, "interchange needs 1 <= i < j");
      v->interchanges[{si, sj}];
      section = Section::Interchange;
    } else if (t[0] == "symmetry") {
      expect(l, 1, "symmetry");
      sym.emplace();
      section = Section::Symmetry;
    } else if (t[0] == "obj" && section == Section::Product) {
      expect(l, 5, "obj <A> <B> = <object>");
      expect_token(l, 3, "=", "obj <A> <B> = <object>");
      v->products.back().set_obj(obj(l, c, t[1]), obj(l, c, t[2]), obj(l, c, t[4]));
    } else if (t[0] == "mor" && section == Section::Product) {
      expect(l, 5, "mor <f> <g> = <morphism>");
      expect_token(l, 3, "=", "mor <f> <g> = <morphism>");
      v->products.back().set_mor(mor(l, c, t[1]), mor(l, c, t[2]), mor(l, c, t[4]));
    } else if (t[0] == "at" && section == Section::Associator) {
      expect(l, 6, "at <U> <V> <W> = <morphism>");
      expect_token(l, 4, "=", "at <U> <V> <W> = <morphism>");
      v->associators[si - 1][{obj(l, c, t[1]), obj(l, c, t[2]), obj(l, c, t[3])}] = mor(l, c, t[5]);
    } else if (t[0] == "at" && section == Section::Interchange) {
      expect(l, 7, "at <A> <B> <C> <D> = <morphism>");
      expect_token(l, 5, "=", "at <A> <B> <C> <D> = <morphism>");
      v->interchanges[{si, sj}][{obj(l, c, t[1]), obj(l, c, t[2]), obj(l, c, t[3]), obj(l, c, t[4])}] =
          mor(l, c, t[6]);
    } else if (t[0] == "at" && section == Section::Symmetry) {
      expect(l, 5, "at <B> <C> = <morphism>");
      expect_token(l, 3, "=", "at <B> <C> = <morphism>");
      (*sym)[{obj(l, c, t[1]), obj(l, c, t[2])}] = mor(l, c, t[4]);
    } else {
      syntax(l, "a monoidal line");
    }
  }
  v->fold = static_cast<int>(v->products.size());
  if (v->associators.size() > v->products.size()) {
    fail(ErrorKind::DanglingReference, b.header, "associator for an undeclared product");
  }
  v->associators.resize(v->products.size());
  for (const auto& [ij, fam] : v->interchanges)
    if (ij.second > v->fold) fail(ErrorKind::DanglingReference, b.header, "interchange for an undeclared product");
  for (int a : identity_associators) {
    const TensorTable& t = v->products[a - 1];
    for (ObjId x = 0; x < n; ++x)
      for (ObjId y = 0; y < n; ++y)
        for (ObjId z = 0; z < n; ++z) {
          auto xy = t.obj(x, y), yz = t.obj(y, z);
          if (!xy || !yz) continue;
          auto l = t.obj(*xy, z), r = t.obj(x, *yz);
          if (!l || !r) continue;
          if (*l != *r) {
            fail(ErrorKind::ParseError, b.header,
                 "associator " + std::to_string(a) + " is not the identity at (" + c.object_name(x) + "," +
                     c.object_name(y) + "," + c.object_name(z) + ")");
          }
          MorId id = c.identity(*l);
          if (id == kNoMor) fail(ErrorKind::MissingEntry, b.header, "no identity on " + c.object_name(*l));
          v->associators[a - 1][{x, y, z}] = id;
        }
  }
  if (thin) derive_thin_structure(*v);
  MonoidalValue out{v, sym};
  if (lift) {
    if (!sym) fail(ErrorKind::ParseError, b.header, "from_symmetric needs a symmetry section");
    if (v->unit == kNoObj) fail(ErrorKind::MissingEntry, b.header, "from_symmetric needs a unit");
    try {
      auto lifted = std::make_shared<IteratedMonoidalCat>(from_symmetric(*v, *sym, *lift));
      lifted->name = name;
      out.v = lifted;
    } catch (const Error& e) {
      fail(e.kind(), b.header, e.what());
    }
  }
  return out;
}

VCatPtr Parser::vcat_block(const Block& b, MonoidalPtr base, const std::string& name) {
  const FinCat& c = base->cat();
  std::vector<std::string> objects;
  bool thin = false;
  for (const Line& l : b.body) {
    if (l.tok[0] == "object") {
      if (l.tok.size() < 2) syntax(l, "object <name>...");
      for (std::size_t i = 1; i < l.tok.size(); ++i) {
        if (std::find(objects.begin(), objects.end(), l.tok[i]) != objects.end()) {
          fail(ErrorKind::DuplicateName, l, "object " + l.tok[i] + " declared twice");
        }
        objects.push_back(l.tok[i]);
      }
    } else if (l.tok[0] == "thin") {
      expect(l, 1, "thin");
      thin = true;
    }
  }
  VCat a = VCat::empty(name, base, objects);
  auto at = [&](const Line& l, const std::string& s) {
    if (auto x = a.find(s)) return *x;
    fail(ErrorKind::DanglingReference, l, "undefined object " + s + " of " + name);
  };
  std::vector<const Line*> morphism_lines;
  for (const Line& l : b.body) {
    const auto& t = l.tok;
    if (t[0] == "object" || t[0] == "thin") continue;
    if (t[0] == "hom") {
      expect(l, 5, "hom <a> <b> = <object>");
      expect_token(l, 3, "=", "hom <a> <b> = <object>");
      a.set_hom(at(l, t[1]), at(l, t[2]), obj(l, c, t[4]));
    } else if (t[0] == "comp" || t[0] == "unit") {
      morphism_lines.push_back(&l);
    } else {
      syntax(l, "a vcat line");
    }
  }
  if (thin) {
    for (ObjId h : a.homs)
      if (h == kNoObj) fail(ErrorKind::MissingEntry, b.header, "thin vcat with an unset hom");
    a = thin_vcat(name, base, objects, a.homs);
  }
  for (const Line* lp : morphism_lines) {
    const Line& l = *lp;
    const auto& t = l.tok;
    if (t[0] == "comp") {
      expect(l, 6, "comp <a> <b> <c> = <morphism>");
      expect_token(l, 4, "=", "comp <a> <b> <c> = <morphism>");
      a.set_comp(at(l, t[1]), at(l, t[2]), at(l, t[3]), mor(l, c, t[5]));
    } else {
      expect(l, 4, "unit <a> = <morphism>");
      expect_token(l, 2, "=", "unit <a> = <morphism>");
      a.set_unit(at(l, t[1]), mor(l, c, t[3]));
    }
  }
  return std::make_shared<const VCat>(std::move(a));
}

VFunPtr Parser::vfunctor_block(const Block& b) {
  const auto& h = b.header.tok;
  if (h.size() != 6 || h[2] != ":" || h[4] != "->") syntax(b.header, "vfunctor <name> : <vcat> -> <vcat>");
  VCatPtr s = ws_.vcat(h[3], where(b.header.no));
  VCatPtr d = ws_.vcat(h[5], where(b.header.no));
  if (s->base != d->base) fail(ErrorKind::ShapeMismatch, b.header, "vcats over different bases");
  const FinCat& c = s->base->cat();
  std::size_t n = s->size();
  std::vector<std::size_t> obj_map(n, static_cast<std::size_t>(-1));
  bool thin = false;
  for (const Line& l : b.body) {
    if (l.tok[0] == "obj") {
      expect(l, 4, "obj <a> = <b>");
      expect_token(l, 2, "=", "obj <a> = <b>");
      auto x = s->find(l.tok[1]);
      auto y = d->find(l.tok[3]);
      if (!x || !y) fail(ErrorKind::DanglingReference, l, "undefined object in " + l.tok[1] + " = " + l.tok[3]);
      obj_map[*x] = *y;
    } else if (l.tok[0] == "thin") {
      expect(l, 1, "thin");
      thin = true;
    }
  }
  for (std::size_t x = 0; x < n; ++x)
    if (obj_map[x] == static_cast<std::size_t>(-1)) {
      fail(ErrorKind::MissingEntry, b.header, "no image for object " + s->objects[x]);
    }
  VFunctor t;
  if (thin) {
    try {
      t = thin_vfunctor(s, d, obj_map);
    } catch (const Error& e) {
      fail(e.kind(), b.header, e.what());
    }
  } else {
    t = VFunctor{s, d, obj_map, std::vector<MorId>(n * n, kNoMor)};
  }
  for (const Line& l : b.body) {
    if (l.tok[0] == "obj" || l.tok[0] == "thin") continue;
    if (l.tok[0] != "hom") syntax(l, "a vfunctor line");
    expect(l, 5, "hom <a> <b> = <morphism>");
    expect_token(l, 3, "=", "hom <a> <b> = <morphism>");
    auto x = s->find(l.tok[1]);
    auto y = s->find(l.tok[2]);
    if (!x || !y) fail(ErrorKind::DanglingReference, l, "undefined object of " + h[3]);
    t.hom_map[*x * n + *y] = mor(l, c, l.tok[4]);
  }
  return std::make_shared<const VFunctor>(std::move(t));
}

// A level-1 functor given by an object map and base morphisms on homs,
// keyed by pairs of source objects. Unset components are filled over a thin
// base when `thin` is set.
struct Level1Spec {
  std::vector<std::size_t> obj_map;
  std::map<std::pair<std::size_t, std::size_t>, MorId> homs;
};

EnFunPtr build_level1(const EnCatPtr& source, const EnCatPtr& target, const Level1Spec& spec, bool thin,
                      const std::string& what) {
  const IteratedMonoidalCat& v = *source->base;
  std::size_t n = source->size();
  if (spec.obj_map.size() != n) throw Error(ErrorKind::MissingEntry, what + ": object map is not total");
  auto f = std::make_shared<EnrichedFunctor>();
  f->level = 1;
  f->obj_map = spec.obj_map;
  for (std::size_t t : f->obj_map)
    if (t >= target->size()) throw Error(ErrorKind::MissingEntry, what + ": object map is not total");
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      MorId m = kNoMor;
      if (auto it = spec.homs.find({x, y}); it != spec.homs.end()) {
        m = it->second;
      } else if (thin) {
        auto u = thin_morphism(v.cat(), source->hom(x, y).obj, target->hom(f->obj_map[x], f->obj_map[y]).obj);
        if (u) m = *u;
      }
      if (m == kNoMor) {
        throw Error(ErrorKind::MissingEntry, what + ": no component at (" + source->objects[x] + "," +
                                                 source->objects[y] + ")");
      }
      f->homs.push_back(base_morphism(source->base, m));
    }
  f->source = source;
  f->target = target;
  return f;
}

EnCatPtr Parser::encat_block(const Block& b) {
  const auto& h = b.header.tok;
  if (h.size() != 6 || h[2] != "level" || h[4] != "over") syntax(b.header, "encat <name> level <n> over <base>");
  int level = integer(b.header, h[3]);
  MonoidalPtr base = ws_.monoidal(h[5], where(b.header.no));
  if (level == 1) return encat_from_vcat(*vcat_block(b, base, h[1]));
  if (level != 2) fail(ErrorKind::ParseError, b.header, "encat blocks cover levels 1 and 2");
  const FinCat& c = base->cat();

  auto e = std::make_shared<EnrichedCat>();
  e->level = 2;
  e->base = base;
  e->name = h[1];
  bool thin = false;
  for (const Line& l : b.body) {
    if (l.tok[0] == "object") {
      for (std::size_t i = 1; i < l.tok.size(); ++i) {
        if (e->find(l.tok[i])) fail(ErrorKind::DuplicateName, l, "object " + l.tok[i] + " declared twice");
        e->objects.push_back(l.tok[i]);
      }
    } else if (l.tok[0] == "thin") {
      thin = true;
    }
  }
  std::size_t n = e->size();
  e->homs.assign(n * n, nullptr);
  std::vector<Level1Spec> comps(n * n * n), units(n);
  auto at = [&](const Line& l, const std::string& s) { return label(l, *e, s); };
  // Hom lines first, so component lines can resolve labels in any order.
  for (const Line& l : b.body) {
    if (l.tok[0] != "hom") continue;
    expect(l, 5, "hom <a> <b> = <category>");
    expect_token(l, 3, "=", "hom <a> <b> = <category>");
    EnCatPtr hc = ws_.encat(l.tok[4], where(l.no));
    if (hc->level != 1 || hc->base != base) fail(ErrorKind::ShapeMismatch, l, l.tok[4] + " is not a level-1 category over " + h[5]);
    e->homs[at(l, l.tok[1]) * n + at(l, l.tok[2])] = hc;
  }
  for (std::size_t p = 0; p < n * n; ++p)
    if (!e->homs[p]) fail(ErrorKind::MissingEntry, b.header, "hom(" + e->objects[p / n] + "," + e->objects[p % n] + ") is unset");
  std::vector<EnCatPtr> sources(n * n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        std::size_t k = (x * n + y) * n + z;
        sources[k] = tensor_tower(e->hom_ptr(y, z), e->hom_ptr(x, y), 1);
        comps[k].obj_map.assign(sources[k]->size(), static_cast<std::size_t>(-1));
      }
  for (auto& u : units) u.obj_map = {static_cast<std::size_t>(-1)};

  for (const Line& l : b.body) {
    const auto& t = l.tok;
    if (t[0] == "object" || t[0] == "thin" || t[0] == "hom") continue;
    if (t[0] == "comp") {
      if (t.size() < 5) syntax(l, "comp <a> <b> <c> obj|hom ...");
      std::size_t x = at(l, t[1]), y = at(l, t[2]), z = at(l, t[3]);
      const EnrichedCat& bc = e->hom(y, z);
      const EnrichedCat& ab = e->hom(x, y);
      std::size_t k = (x * n + y) * n + z;
      auto pair = [&](const std::string& p, const std::string& q) {
        return label(l, bc, p) * ab.size() + label(l, ab, q);
      };
      if (t[4] == "obj") {
        expect(l, 9, "comp <a> <b> <c> obj <P> <Q> = <R>");
        expect_token(l, 7, "=", "comp <a> <b> <c> obj <P> <Q> = <R>");
        comps[k].obj_map[pair(t[5], t[6])] = label(l, e->hom(x, z), t[8]);
      } else if (t[4] == "hom") {
        expect(l, 11, "comp <a> <b> <c> hom <P> <Q> <P'> <Q'> = <morphism>");
        expect_token(l, 9, "=", "comp <a> <b> <c> hom <P> <Q> <P'> <Q'> = <morphism>");
        comps[k].homs[{pair(t[5], t[6]), pair(t[7], t[8])}] = mor(l, c, t[10]);
      } else {
        syntax(l, "comp <a> <b> <c> obj|hom ...");
      }
    } else if (t[0] == "unit") {
      if (t.size() < 3) syntax(l, "unit <a> obj|hom = ...");
      std::size_t x = at(l, t[1]);
      if (t[2] == "obj") {
        expect(l, 5, "unit <a> obj = <R>");
        expect_token(l, 3, "=", "unit <a> obj = <R>");
        units[x].obj_map[0] = label(l, e->hom(x, x), t[4]);
      } else if (t[2] == "hom") {
        expect(l, 5, "unit <a> hom = <morphism>");
        expect_token(l, 3, "=", "unit <a> hom = <morphism>");
        units[x].homs[{0, 0}] = mor(l, c, t[4]);
      } else {
        syntax(l, "unit <a> obj|hom = ...");
      }
    } else {
      syntax(l, "an encat line");
    }
  }
  try {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z) {
          std::size_t k = (x * n + y) * n + z;
          e->comps.push_back(build_level1(sources[k], e->hom_ptr(x, z), comps[k], thin,
                                          "M(" + e->objects[x] + "," + e->objects[y] + "," + e->objects[z] + ")"));
        }
    auto unit = unit_tower(base, 1);
    for (std::size_t x = 0; x < n; ++x) {
      e->units.push_back(build_level1(unit, e->hom_ptr(x, x), units[x], thin, "J(" + e->objects[x] + ")"));
    }
  } catch (const Error& err) {
    fail(err.kind(), b.header, err.what());
  }
  return e;
}

EnFunPtr Parser::enfunctor_block(const Block& b) {
  const auto& h = b.header.tok;
  if (h.size() != 6 || h[2] != ":" || h[4] != "->") syntax(b.header, "enfunctor <name> : <encat> -> <encat>");
  EnCatPtr s = ws_.encat(h[3], where(b.header.no));
  EnCatPtr d = ws_.encat(h[5], where(b.header.no));
  if (s->level != d->level || s->base != d->base) {
    fail(ErrorKind::ShapeMismatch, b.header, "categories of different levels or bases");
  }
  if (s->level != 1 && s->level != 2) fail(ErrorKind::ParseError, b.header, "enfunctor blocks cover levels 1 and 2");
  const FinCat& c = s->base->cat();
  std::size_t n = s->size();
  Level1Spec top;
  top.obj_map.assign(n, static_cast<std::size_t>(-1));
  bool thin = false;
  for (const Line& l : b.body) {
    if (l.tok[0] == "obj") {
      expect(l, 4, "obj <a> = <b>");
      expect_token(l, 2, "=", "obj <a> = <b>");
      top.obj_map[label(l, *s, l.tok[1])] = label(l, *d, l.tok[3]);
    } else if (l.tok[0] == "thin") {
      thin = true;
    }
  }
  for (std::size_t x = 0; x < n; ++x)
    if (top.obj_map[x] >= d->size()) fail(ErrorKind::MissingEntry, b.header, "no image for object " + s->objects[x]);
  std::vector<Level1Spec> homs(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      homs[x * n + y].obj_map.assign(s->level == 2 ? s->hom(x, y).size() : 0, static_cast<std::size_t>(-1));
    }
  for (const Line& l : b.body) {
    const auto& t = l.tok;
    if (t[0] == "obj" || t[0] == "thin") continue;
    if (t[0] != "hom" || t.size() < 4) syntax(l, "an enfunctor line");
    std::size_t x = label(l, *s, t[1]), y = label(l, *s, t[2]);
    if (s->level == 1) {
      expect(l, 5, "hom <a> <b> = <morphism>");
      expect_token(l, 3, "=", "hom <a> <b> = <morphism>");
      top.homs[{x, y}] = mor(l, c, t[4]);
    } else if (t[3] == "obj") {
      expect(l, 7, "hom <a> <b> obj <P> = <Q>");
      expect_token(l, 5, "=", "hom <a> <b> obj <P> = <Q>");
      homs[x * n + y].obj_map[label(l, s->hom(x, y), t[4])] =
          label(l, d->hom(top.obj_map[x], top.obj_map[y]), t[6]);
    } else if (t[3] == "hom") {
      expect(l, 8, "hom <a> <b> hom <P> <P'> = <morphism>");
      expect_token(l, 6, "=", "hom <a> <b> hom <P> <P'> = <morphism>");
      homs[x * n + y].homs[{label(l, s->hom(x, y), t[4]), label(l, s->hom(x, y), t[5])}] = mor(l, c, t[7]);
    } else {
      syntax(l, "hom <a> <b> obj|hom ...");
    }
  }
  try {
    if (s->level == 1) return build_level1(s, d, top, thin, h[1]);
    auto f = std::make_shared<EnrichedFunctor>();
    f->level = 2;
    f->source = s;
    f->target = d;
    f->obj_map = top.obj_map;
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        f->homs.push_back(build_level1(s->hom_ptr(x, y), d->hom_ptr(top.obj_map[x], top.obj_map[y]),
                                       homs[x * n + y], thin,
                                       h[1] + " on hom(" + s->objects[x] + "," + s->objects[y] + ")"));
      }
    return f;
  } catch (const Error& err) {
    fail(err.kind(), b.header, err.what());
  }
}

KCellPtr Parser::kcell_block(const Block& b) {
  const auto& h = b.header.tok;
  if (h.size() != 6 || h[2] != ":" || h[4] != "=>") syntax(b.header, "kcell <name> : <source> => <target>");
  const Binding& sb = ws_.at(h[3], where(b.header.no));
  KCell shape;
  if (std::holds_alternative<KCellPtr>(sb.value)) {
    shape.source = ws_.kcell(h[3], where(b.header.no));
    shape.target = ws_.kcell(h[5], where(b.header.no));
    shape.dim = shape.source->dim + 1;
    shape.F = shape.source->F;
    shape.G = shape.source->G;
  } else {
    shape.F = ws_.enfunctor(h[3], where(b.header.no));
    shape.G = ws_.enfunctor(h[5], where(b.header.no));
  }
  std::size_t n = shape.domain().size();
  std::vector<std::optional<Point>> comps(n);
  for (const Line& l : b.body) {
    if (l.tok[0] != "at") syntax(l, "at <object> = <point>");
    expect(l, 4, "at <object> = <point>");
    expect_token(l, 2, "=", "at <object> = <point>");
    std::size_t u = label(l, shape.domain(), l.tok[1]);
    try {
      comps[u] = parse_point(*component_category(shape, u), l.tok[3]);
    } catch (const Error& e) {
      fail(e.kind(), l, e.what());
    }
  }
  std::vector<Point> points;
  for (std::size_t u = 0; u < n; ++u) {
    if (!comps[u]) fail(ErrorKind::MissingEntry, b.header, "no component at " + shape.domain().objects[u]);
    points.push_back(*comps[u]);
  }
  try {
    if (shape.dim == 2) return make_2cell(shape.F, shape.G, std::move(points));
    return make_kcell(shape.source, shape.target, std::move(points));
  } catch (const Error& e) {
    fail(e.kind(), b.header, e.what());
  }
}

MFunPtr Parser::mfunctor_block(const Block& b) {
  const auto& h = b.header.tok;
  if (h.size() != 6 || h[2] != ":" || h[4] != "->") syntax(b.header, "monoidal-functor <name> : <base> -> <base>");
  MonoidalPtr s = ws_.monoidal(h[3], where(b.header.no));
  MonoidalPtr d = ws_.monoidal(h[5], where(b.header.no));
  const FinCat& sc = s->cat();
  const FinCat& dc = d->cat();
  std::vector<ObjId> obj_map(sc.num_objects(), kNoObj);
  std::optional<int> thin;
  for (const Line& l : b.body) {
    if (l.tok[0] == "obj") {
      expect(l, 4, "obj <A> = <B>");
      expect_token(l, 2, "=", "obj <A> = <B>");
      obj_map[obj(l, sc, l.tok[1])] = obj(l, dc, l.tok[3]);
    } else if (l.tok[0] == "thin") {
      expect(l, 2, "thin <fold>");
      thin = integer(l, l.tok[1]);
    }
  }
  for (ObjId a = 0; a < obj_map.size(); ++a)
    if (obj_map[a] == kNoObj) fail(ErrorKind::MissingEntry, b.header, "no image for object " + sc.object_name(a));
  if (thin) {
    for (const Line& l : b.body)
      if (l.tok[0] != "obj" && l.tok[0] != "thin") fail(ErrorKind::ParseError, l, "thin functors take object lines only");
    try {
      return std::make_shared<const NFoldMonoidalFunctor>(thin_nfold(s, d, obj_map, *thin));
    } catch (const Error& e) {
      fail(e.kind(), b.header, e.what());
    }
  }
  NFoldMonoidalFunctor f;
  f.source = s;
  f.target = d;
  f.f = StrictFunctor{s->base, d->base, obj_map, std::vector<MorId>(sc.num_morphisms(), kNoMor)};
  for (const Line& l : b.body) {
    const auto& t = l.tok;
    if (t[0] == "obj") continue;
    if (t[0] == "mor") {
      expect(l, 4, "mor <f> = <g>");
      expect_token(l, 2, "=", "mor <f> = <g>");
      f.f.mor_map[mor(l, sc, t[1])] = mor(l, dc, t[3]);
    } else if (t[0] == "lambda") {
      expect(l, 6, "lambda <i> <A> <B> = <morphism>");
      expect_token(l, 4, "=", "lambda <i> <A> <B> = <morphism>");
      int i = integer(l, t[1]);
      if (i < 1 || i > s->fold || i > d->fold) fail(ErrorKind::IndexOutOfRange, l, "lambda index outside both folds");
      if (f.lambdas.size() < static_cast<std::size_t>(i)) f.lambdas.resize(i);
      f.lambdas[i - 1][{obj(l, sc, t[2]), obj(l, sc, t[3])}] = mor(l, dc, t[5]);
    } else {
      syntax(l, "a monoidal-functor line");
    }
  }
  for (MorId m = 0; m < f.f.mor_map.size(); ++m)
    if (f.f.mor_map[m] == kNoMor) fail(ErrorKind::MissingEntry, b.header, "no image for morphism " + sc.mor_name(m));
  return std::make_shared<const NFoldMonoidalFunctor>(std::move(f));
}

Value Parser::parse_block(const Block& b) {
  const std::string& kind = b.header.tok[0];
  if (b.header.tok.size() < 2) syntax(b.header, "<kind> <name> ...");
  if (kind == "category") return category_block(b);
  if (kind == "monoidal") return monoidal_block(b);
  if (kind == "vcat") {
    const auto& h = b.header.tok;
    if (h.size() != 4 || h[2] != "over") syntax(b.header, "vcat <name> over <base>");
    return vcat_block(b, ws_.monoidal(h[3], where(b.header.no)), h[1]);
  }
  if (kind == "vfunctor") return vfunctor_block(b);
  if (kind == "encat") return encat_block(b);
  if (kind == "enfunctor") return enfunctor_block(b);
  if (kind == "kcell") return kcell_block(b);
  if (kind == "monoidal-functor") return mfunctor_block(b);
  syntax(b.header, "a block header");
}

std::vector<std::string> Parser::run(const std::string& text, const LoadOptions& opts) {
  std::vector<std::string> names;
  for (const Block& b : split(text)) {
    if (b.header.tok.size() < 2) syntax(b.header, "<kind> <name> ...");
    const std::string& name = b.header.tok[1];
    if (ws_.find(name)) fail(ErrorKind::DuplicateName, b.header, name + " is already bound");
    Value v;
    try {
      v = parse_block(b);
    } catch (const Error& e) {
      std::string what = e.what();
      if (what.find(source_ + ":") != std::string::npos) throw;
      fail(e.kind(), b.header, what);
    }
    const Binding& bound = ws_.bind(name, std::move(v), where(b.header.no));
    if (opts.validate) {
      try {
        validate_binding(ws_, bound);
      } catch (const Error& e) {
        fail(e.kind(), b.header, e.what());
      }
    }
    names.push_back(name);
  }
  return names;
}

}  // namespace

std::vector<std::string> load_text(Workspace& ws, const std::string& text, const std::string& source,
                                   const LoadOptions& opts) {
  return Parser(ws, source).run(text, opts);
}

std::vector<std::string> load_file(Workspace& ws, const std::string& path, const LoadOptions& opts) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::DanglingReference, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return load_text(ws, buf.str(), path, opts);
}

// Validation

namespace {

void require(bool ok, ErrorKind kind, const std::string& msg) {
  if (!ok) throw Error(kind, msg);
}

void validate_category(const FinCat& c) {
  for (ObjId a = 0; a < c.num_objects(); ++a) {
    require(c.identity(a) != kNoMor, ErrorKind::MissingEntry, "no identity on " + c.object_name(a));
  }
}

void validate_monoidal(const IteratedMonoidalCat& v) {
  const FinCat& c = v.cat();
  validate_category(c);
  require(v.unit != kNoObj, ErrorKind::MissingEntry, v.name + " has no unit");
  require(v.fold >= 1, ErrorKind::MissingEntry, v.name + " has no product");
  MorId one = c.identity(v.unit);
  for (int i = 1; i <= v.fold; ++i) {
    const TensorTable& t = v.product(i);
    std::string p = "product " + std::to_string(i) + ": ";
    for (ObjId a = 0; a < c.num_objects(); ++a) {
      require(t.obj(v.unit, a) == a && t.obj(a, v.unit) == a, ErrorKind::MissingEntry,
              p + "unit row is not strict at " + c.object_name(a));
    }
    for (MorId f = 0; f < c.num_morphisms(); ++f) {
      auto l = t.mor(one, f), r = t.mor(f, one);
      require((!l || *l == f) && (!r || *r == f), ErrorKind::MissingEntry,
              p + "unit row is not strict at " + c.mor_name(f));
      require(v.partial || (l && r), ErrorKind::MissingEntry, p + "unit row is missing " + c.mor_name(f));
    }
  }
}

void validate_vcat(const VCat& a) {
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = 0; y < a.size(); ++y) {
      require(a.hom(x, y) != kNoObj, ErrorKind::MissingEntry,
              "hom(" + a.objects[x] + "," + a.objects[y] + ") is unset");
    }
}

void validate_encat(const EnrichedCat& e) {
  if (e.level == 1) return validate_vcat(vcat_from_encat(e));
  for (const auto& h : e.homs) validate_encat(*h);
}

}  // namespace

void validate_binding(const Workspace&, const Binding& b) {
  std::visit(
      [](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, FinCatPtr>) {
          validate_category(*x);
        } else if constexpr (std::is_same_v<T, MonoidalValue>) {
          validate_monoidal(*x.v);
        } else if constexpr (std::is_same_v<T, VCatPtr>) {
          validate_vcat(*x);
        } else if constexpr (std::is_same_v<T, VFunPtr>) {
          require(x->hom_map.size() == x->source->size() * x->source->size(), ErrorKind::ShapeMismatch,
                  "hom map does not cover the source");
          for (MorId m : x->hom_map) require(m != kNoMor, ErrorKind::MissingEntry, "unset hom component");
        } else if constexpr (std::is_same_v<T, EnCatPtr>) {
          validate_encat(*x);
        } else if constexpr (std::is_same_v<T, MFunPtr>) {
          require(x->fold() <= x->source->fold && x->fold() <= x->target->fold, ErrorKind::ShapeMismatch,
                  "more lambdas than products");
        }
      },
      b.value);
}

// Export

namespace {

void check_token(const std::string& s) {
  bool ok = !s.empty() && s[0] != '#' && s != ";" && s != "=" && s != "end";
  for (char ch : s) ok = ok && !std::isspace(static_cast<unsigned char>(ch));
  if (!ok) throw Error(ErrorKind::ParseError, "name '" + s + "' cannot be written to a file");
}

class Exporter {
 public:
  explicit Exporter(const Workspace& ws) : ws_(ws) {}

  void set_stem(std::string stem) { stem_ = std::move(stem); }

  std::string text() const { return out_.str(); }

  std::string monoidal(const MonoidalPtr& v) {
    std::optional<SymmetryFamily> sym;
    if (auto n = ws_.name_of(v.get())) {
      if (auto* m = std::get_if<MonoidalValue>(&ws_.at(*n).value)) sym = m->symmetry;
    }
    return monoidal(v, sym);
  }

  std::string monoidal(const MonoidalPtr& v, const std::optional<SymmetryFamily>& sym) {
    auto [name, fresh] = claim(v.get(), "base");
    if (!fresh) return name;
    const FinCat& c = v->cat();
    out_ << "monoidal " << name << "\n";
    category_body(c);
    out_ << "unit " << c.object_name(v->unit) << "\n";
    if (v->partial) out_ << "partial\n";
    for (int i = 1; i <= v->fold; ++i) {
      out_ << "product " << i << "\n";
      const TensorTable& t = v->product(i);
      for (ObjId a = 0; a < c.num_objects(); ++a)
        for (ObjId b = 0; b < c.num_objects(); ++b)
          if (auto r = t.obj(a, b)) out_ << "obj " << c.object_name(a) << " " << c.object_name(b) << " = " << c.object_name(*r) << "\n";
      for (const auto& [f, g, h] : t.morphism_entries())
        out_ << "mor " << c.mor_name(f) << " " << c.mor_name(g) << " = " << c.mor_name(h) << "\n";
    }
    for (int i = 1; i <= v->fold; ++i) {
      out_ << "associator " << i << "\n";
      for (const auto& [k, m] : v->associators[i - 1])
        out_ << "at " << c.object_name(k[0]) << " " << c.object_name(k[1]) << " " << c.object_name(k[2]) << " = "
             << c.mor_name(m) << "\n";
    }
    for (const auto& [ij, fam] : v->interchanges) {
      out_ << "interchange " << ij.first << " " << ij.second << "\n";
      for (const auto& [k, m] : fam)
        out_ << "at " << c.object_name(k[0]) << " " << c.object_name(k[1]) << " " << c.object_name(k[2]) << " "
             << c.object_name(k[3]) << " = " << c.mor_name(m) << "\n";
    }
    if (sym) {
      out_ << "symmetry\n";
      for (const auto& [k, m] : *sym)
        out_ << "at " << c.object_name(k[0]) << " " << c.object_name(k[1]) << " = " << c.mor_name(m) << "\n";
    }
    out_ << "end\n\n";
    return name;
  }

  std::string category(const FinCatPtr& c) {
    auto [name, fresh] = claim(c.get(), "category");
    if (!fresh) return name;
    out_ << "category " << name << "\n";
    category_body(*c);
    out_ << "end\n\n";
    return name;
  }

  std::string vcat(const VCat& a, const void* key, const char* kind) {
    std::string base = monoidal(a.base);
    auto [name, fresh] = claim(key, "vcat");
    if (!fresh) return name;
    const FinCat& c = a.base->cat();
    if (std::string(kind) == "vcat") {
      out_ << "vcat " << name << " over " << base << "\n";
    } else {
      out_ << "encat " << name << " level 1 over " << base << "\n";
    }
    objects(a.objects);
    std::size_t n = a.size();
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        out_ << "hom " << a.objects[x] << " " << a.objects[y] << " = " << c.object_name(a.hom(x, y)) << "\n";
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z)
          if (a.comp(x, y, z) != kNoMor) {
            out_ << "comp " << a.objects[x] << " " << a.objects[y] << " " << a.objects[z] << " = "
                 << c.mor_name(a.comp(x, y, z)) << "\n";
          }
    for (std::size_t x = 0; x < n; ++x)
      if (a.unit(x) != kNoMor) out_ << "unit " << a.objects[x] << " = " << c.mor_name(a.unit(x)) << "\n";
    out_ << "end\n\n";
    return name;
  }

  std::string encat(const EnCatPtr& e) {
    if (auto n = ws_.name_of(e.get())) {
      const Binding& b = ws_.at(*n);
      if (auto* a = std::get_if<VCatPtr>(&b.value)) return vcat_ref(*a);
    }
    if (e->level == 1) return vcat(vcat_from_encat(*e), e.get(), "encat");
    if (e->level != 2) throw Error(ErrorKind::ShapeMismatch, "files hold categories of level 1 and 2 only");
    std::string base = monoidal(e->base);
    std::size_t n = e->size();
    std::vector<std::string> homs;
    for (std::size_t p = 0; p < n * n; ++p) homs.push_back(encat(e->homs[p]));
    auto [name, fresh] = claim(e.get(), "encat");
    if (!fresh) return name;
    const FinCat& c = e->base->cat();
    out_ << "encat " << name << " level 2 over " << base << "\n";
    objects(e->objects);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        out_ << "hom " << e->objects[x] << " " << e->objects[y] << " = " << homs[x * n + y] << "\n";
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z) {
          const EnrichedFunctor& m = e->comp(x, y, z);
          const EnrichedCat& bc = e->hom(y, z);
          const EnrichedCat& ab = e->hom(x, y);
          std::string head = "comp " + e->objects[x] + " " + e->objects[y] + " " + e->objects[z];
          auto pair = [&](std::size_t s) { return bc.objects[s / ab.size()] + " " + ab.objects[s % ab.size()]; };
          std::size_t k = m.source->size();
          for (std::size_t s = 0; s < k; ++s)
            out_ << head << " obj " << pair(s) << " = " << e->hom(x, z).objects[m.obj_map[s]] << "\n";
          for (std::size_t s = 0; s < k; ++s)
            for (std::size_t t = 0; t < k; ++t)
              out_ << head << " hom " << pair(s) << " " << pair(t) << " = " << c.mor_name(m.hom(s, t).mor) << "\n";
        }
    for (std::size_t x = 0; x < n; ++x) {
      const EnrichedFunctor& j = e->unit(x);
      out_ << "unit " << e->objects[x] << " obj = " << e->hom(x, x).objects[j.obj_map[0]] << "\n";
      out_ << "unit " << e->objects[x] << " hom = " << c.mor_name(j.hom(0, 0).mor) << "\n";
    }
    out_ << "end\n\n";
    return name;
  }

  std::string enfunctor(const EnFunPtr& f) {
    if (auto n = ws_.name_of(f.get())) {
      const Binding& b = ws_.at(*n);
      if (auto* t = std::get_if<VFunPtr>(&b.value)) return vfunctor(*t, f.get());
    }
    if (f->level != 1 && f->level != 2) throw Error(ErrorKind::ShapeMismatch, "files hold functors of level 1 and 2 only");
    std::string s = encat(f->source), d = encat(f->target);
    auto [name, fresh] = claim(f.get(), "functor");
    if (!fresh) return name;
    const FinCat& c = f->source->base->cat();
    const EnrichedCat& S = *f->source;
    const EnrichedCat& D = *f->target;
    out_ << "enfunctor " << name << " : " << s << " -> " << d << "\n";
    std::size_t n = S.size();
    for (std::size_t x = 0; x < n; ++x) out_ << "obj " << S.objects[x] << " = " << D.objects[f->obj_map[x]] << "\n";
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        std::string head = "hom " + S.objects[x] + " " + S.objects[y];
        const EnrichedFunctor& h = f->hom(x, y);
        if (f->level == 1) {
          out_ << head << " = " << c.mor_name(h.mor) << "\n";
          continue;
        }
        const EnrichedCat& hs = S.hom(x, y);
        const EnrichedCat& hd = D.hom(f->obj_map[x], f->obj_map[y]);
        for (std::size_t p = 0; p < hs.size(); ++p)
          out_ << head << " obj " << hs.objects[p] << " = " << hd.objects[h.obj_map[p]] << "\n";
        for (std::size_t p = 0; p < hs.size(); ++p)
          for (std::size_t q = 0; q < hs.size(); ++q)
            out_ << head << " hom " << hs.objects[p] << " " << hs.objects[q] << " = " << c.mor_name(h.hom(p, q).mor) << "\n";
      }
    out_ << "end\n\n";
    return name;
  }

  std::string vfunctor(const VFunPtr& t, const void* alias = nullptr) {
    std::string s = vcat_ref(t->source), d = vcat_ref(t->target);
    auto [name, fresh] = claim(t.get(), "vfunctor");
    if (alias) names_[alias] = name;
    if (!fresh) return name;
    const FinCat& c = t->source->base->cat();
    const VCat& S = *t->source;
    out_ << "vfunctor " << name << " : " << s << " -> " << d << "\n";
    std::size_t n = S.size();
    for (std::size_t x = 0; x < n; ++x) out_ << "obj " << S.objects[x] << " = " << t->target->objects[t->obj_map[x]] << "\n";
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        out_ << "hom " << S.objects[x] << " " << S.objects[y] << " = " << c.mor_name(t->component(x, y)) << "\n";
    out_ << "end\n\n";
    return name;
  }

  std::string vcat_ref(const VCatPtr& a) { return vcat(*a, a.get(), "vcat"); }

  std::string kcell(const KCellPtr& k) {
    std::string s, t;
    if (k->dim == 2) {
      s = enfunctor(k->F);
      t = enfunctor(k->G);
    } else {
      s = kcell(k->source);
      t = kcell(k->target);
    }
    auto [name, fresh] = claim(k.get(), "cell");
    if (!fresh) return name;
    out_ << "kcell " << name << " : " << s << " => " << t << "\n";
    for (std::size_t u = 0; u < k->components.size(); ++u) {
      out_ << "at " << k->domain().objects[u] << " = " << point_text(*component_category(*k, u), k->components[u])
           << "\n";
    }
    out_ << "end\n\n";
    return name;
  }

  std::string mfunctor(const MFunPtr& f) {
    std::string s = monoidal(f->source), d = monoidal(f->target);
    auto [name, fresh] = claim(f.get(), "mfunctor");
    if (!fresh) return name;
    const FinCat& sc = f->source->cat();
    const FinCat& dc = f->target->cat();
    out_ << "monoidal-functor " << name << " : " << s << " -> " << d << "\n";
    for (ObjId a = 0; a < sc.num_objects(); ++a) out_ << "obj " << sc.object_name(a) << " = " << dc.object_name(f->obj(a)) << "\n";
    for (MorId m = 0; m < sc.num_morphisms(); ++m) out_ << "mor " << sc.mor_name(m) << " = " << dc.mor_name(f->mor(m)) << "\n";
    for (int i = 1; i <= f->fold(); ++i)
      for (const auto& [k, m] : f->lambdas[i - 1])
        out_ << "lambda " << i << " " << sc.object_name(k[0]) << " " << sc.object_name(k[1]) << " = " << dc.mor_name(m) << "\n";
    out_ << "end\n\n";
    return name;
  }

 private:
  // Name for a value and whether its block still has to be written.
  std::pair<std::string, bool> claim(const void* key, const std::string& role) {
    if (auto it = names_.find(key); it != names_.end()) return {it->second, false};
    std::string name;
    if (auto n = ws_.name_of(key)) {
      name = *n;
    } else {
      std::string stem = stem_ + "." + role;
      name = stem;
      for (int k = 2; ws_.find(name) || taken_.count(name); ++k) name = stem + "." + std::to_string(k);
    }
    check_token(name);
    taken_.insert(name);
    names_[key] = name;
    return {name, true};
  }

  void objects(const std::vector<std::string>& labels) {
    for (const auto& o : labels) {
      check_token(o);
      out_ << "object " << o << "\n";
    }
  }

  void category_body(const FinCat& c) {
    for (ObjId a = 0; a < c.num_objects(); ++a) {
      check_token(c.object_name(a));
      out_ << "object " << c.object_name(a) << "\n";
    }
    for (MorId f = 0; f < c.num_morphisms(); ++f) {
      check_token(c.mor_name(f));
      out_ << "morphism " << c.mor_name(f) << " : " << c.object_name(c.dom(f)) << " -> " << c.object_name(c.cod(f)) << "\n";
    }
    for (ObjId a = 0; a < c.num_objects(); ++a)
      if (c.identity(a) != kNoMor) out_ << "identity " << c.object_name(a) << " = " << c.mor_name(c.identity(a)) << "\n";
    for (MorId g = 0; g < c.num_morphisms(); ++g)
      for (MorId f = 0; f < c.num_morphisms(); ++f)
        if (auto h = c.lookup_comp(g, f)) out_ << c.mor_name(g) << " ; " << c.mor_name(f) << " = " << c.mor_name(*h) << "\n";
  }

  const Workspace& ws_;
  std::string stem_;
  std::ostringstream out_;
  std::map<const void*, std::string> names_;
  std::set<std::string> taken_;
};

}  // namespace

std::string export_binding(const Workspace& ws, const std::string& name) { return export_bindings(ws, {name}); }

std::string export_bindings(const Workspace& ws, const std::vector<std::string>& names) {
  Exporter ex(ws);
  for (const auto& name : names) {
    const Binding& b = ws.at(name);
    ex.set_stem(name);
    std::visit(
        [&](const auto& x) {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, FinCatPtr>) {
            ex.category(x);
          } else if constexpr (std::is_same_v<T, MonoidalValue>) {
            ex.monoidal(x.v, x.symmetry);
          } else if constexpr (std::is_same_v<T, VCatPtr>) {
            ex.vcat_ref(x);
          } else if constexpr (std::is_same_v<T, VFunPtr>) {
            ex.vfunctor(x);
          } else if constexpr (std::is_same_v<T, EnCatPtr>) {
            ex.encat(x);
          } else if constexpr (std::is_same_v<T, EnFunPtr>) {
            ex.enfunctor(x);
          } else if constexpr (std::is_same_v<T, KCellPtr>) {
            ex.kcell(x);
          } else {
            ex.mfunctor(x);
          }
        },
        b.value);
  }
  std::string s = ex.text();
  if (s.size() >= 2 && s.substr(s.size() - 2) == "\n\n") s.pop_back();
  return s;
}

}  // namespace itercat
