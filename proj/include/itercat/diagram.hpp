#pragma once

#include <string>

#include "itercat/monoidal.hpp"

namespace itercat {

/// A morphism expression being evaluated in a monoidal base. `state` is
/// Undefined when an object product outside a partial table was needed.
struct Term {
  enum State { Ok, Missing, Undefined };
  State state = Ok;
  MorId mor = kNoMor;
  std::string label;

  bool ok() const { return state == Ok; }
};

/// Evaluates diagram legs in a k-fold monoidal base. Labels are only built
/// in verbose mode, so checks run quietly and re-run a failing instance
/// verbosely to produce the finding text.
class DiagramEval {
 public:
  DiagramEval(const IteratedMonoidalCat& v, bool verbose) : v_(v), verbose_(verbose) {}

  bool verbose() const { return verbose_; }
  const IteratedMonoidalCat& base() const { return v_; }

  Term mor(MorId f) const;
  Term id(ObjId a) const;
  Term alpha(int i, ObjId u, ObjId w, ObjId x) const;
  Term eta(int i, int j, ObjId a, ObjId b, ObjId c, ObjId d) const;
  /// A named morphism from a table that may lack the entry (kNoMor).
  Term entry(MorId f, const std::string& label) const;
  Term tensor(int i, const Term& f, const Term& g) const;
  /// `second` after `first`.
  Term then(const Term& first, const Term& second) const;
  template <typename... Rest>
  Term then(const Term& first, const Term& second, const Rest&... rest) const {
    return then(then(first, second), rest...);
  }

  /// Object product; nullopt when undefined.
  std::optional<ObjId> obj(int i, ObjId a, ObjId b) const { return v_.find_tensor(i, a, b); }

  /// Human-readable name of a morphism (or "none").
  std::string name(MorId f) const;
  std::string describe(const Term& t) const;

 private:
  const IteratedMonoidalCat& v_;
  bool verbose_;
};

/// Legs for an instance that needs an undefined product.
inline std::pair<Term, Term> skipped() {
  Term t;
  t.state = Term::Undefined;
  return {t, t};
}

/// Outcome of comparing two legs of a diagram.
enum class LegVerdict { Equal, Different, Broken, Skip };

LegVerdict compare_legs(const Term& a, const Term& b);

/// Runs `instance(ev)` quietly; when the verdict is Different or Broken, re-runs
/// it verbosely and records a finding under (axiom, locator).
template <typename Instance>
void check_instance(const IteratedMonoidalCat& v, CheckReport& out, const std::string& axiom,
                    const std::vector<std::string>& locator, Instance&& instance) {
  DiagramEval quiet(v, false);
  auto [a, b] = instance(quiet);
  LegVerdict verdict = compare_legs(a, b);
  if (verdict == LegVerdict::Equal || verdict == LegVerdict::Skip) return;
  DiagramEval loud(v, true);
  auto [la, lb] = instance(loud);
  out.add(axiom, locator, loud.describe(la), loud.describe(lb));
}

}  // namespace itercat
