#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "itercat/base_change.hpp"

namespace itercat {

using VFunPtr = std::shared_ptr<const VFunctor>;
using MFunPtr = std::shared_ptr<const NFoldMonoidalFunctor>;

/// A monoidal binding, with the symmetry when the file declares one.
struct MonoidalValue {
  MonoidalPtr v;
  std::optional<SymmetryFamily> symmetry;
};

using Value = std::variant<FinCatPtr, MonoidalValue, VCatPtr, VFunPtr, EnCatPtr, EnFunPtr, KCellPtr,
                           MFunPtr>;

/// "category", "monoidal", "vcat", "vfunctor", "encat", "enfunctor",
/// "kcell" or "monoidal-functor".
std::string kind_of(const Value& v);

struct Binding {
  std::string name;
  Value value;
  std::string origin;  // "file:line" of the block header, or "construct"
  EnCatPtr as_encat;   // vcat bindings, also as level-1 categories
  EnFunPtr as_enfun;   // vfunctor bindings, also as level-1 functors
};

/// Named values in binding order.
class Workspace {
 public:
  /// Throws DuplicateName.
  const Binding& bind(std::string name, Value value, std::string origin = "construct");
  const Binding* find(const std::string& name) const;
  /// Throws DanglingReference naming `where`.
  const Binding& at(const std::string& name, const std::string& where = {}) const;
  const std::vector<Binding>& bindings() const { return bindings_; }

  MonoidalPtr monoidal(const std::string& name, const std::string& where = {}) const;
  VCatPtr vcat(const std::string& name, const std::string& where = {}) const;
  /// vcat bindings and encat bindings alike.
  EnCatPtr encat(const std::string& name, const std::string& where = {}) const;
  /// vfunctor bindings and enfunctor bindings alike.
  EnFunPtr enfunctor(const std::string& name, const std::string& where = {}) const;
  KCellPtr kcell(const std::string& name, const std::string& where = {}) const;
  MFunPtr mfunctor(const std::string& name, const std::string& where = {}) const;

  /// Binding name of a shared value, if it is bound.
  std::optional<std::string> name_of(const void* p) const;

  /// A name not yet bound: `stem`, or `stem` with a numeric suffix.
  std::string fresh_name(const std::string& stem) const;

 private:
  std::vector<Binding> bindings_;
  std::map<std::string, std::size_t> index_;
  std::map<const void*, std::string> by_pointer_;
};

struct LoadOptions {
  /// Structural validation of each binding: strict unit rows, total tables,
  /// well-typed components. Axioms are left to the check suites.
  bool validate = true;
};

/// Parses `text` and binds every block. Errors carry "source:line".
/// Returns the names bound, in order.
std::vector<std::string> load_text(Workspace& ws, const std::string& text, const std::string& source,
                                   const LoadOptions& opts = {});
std::vector<std::string> load_file(Workspace& ws, const std::string& path, const LoadOptions& opts = {});

/// Throws DanglingReference with the first problem, if any.
void validate_binding(const Workspace& ws, const Binding& b);

/// Canonical text of a binding and everything it refers to, dependencies
/// first. Unbound dependencies get names derived from `name`.
std::string export_binding(const Workspace& ws, const std::string& name);
/// Several bindings in one text; shared dependencies are written once.
std::string export_bindings(const Workspace& ws, const std::vector<std::string>& names);

}  // namespace itercat
