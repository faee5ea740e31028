#pragma once

#include <map>
#include <string>
#include <vector>

#include "itercat/format.hpp"

namespace itercat {

/// Suites by name, in the order "all" runs them.
const std::vector<std::string>& suite_names();

/// Runs a suite over every binding of the kinds it covers, in binding order.
/// Findings are prefixed with the binding name. Errors raised by a check
/// become "<suite>.error" findings; BudgetExceeded propagates.
/// `params` holds key=value suite arguments, e.g. {"n", "2"} for
/// kcell-closure. Throws UnknownSuite.
CheckReport run_suite(const Workspace& ws, const std::string& suite,
                      const std::map<std::string, std::string>& params = {}, const CheckOptions& opts = {});

/// Every composite, whisker and unit padding the cells of level `level`
/// (0 for all) admit, each checked; unit laws and the two 0-cell orders are
/// compared.
CheckReport kcell_closure(const Workspace& ws, int level, const CheckOptions& opts = {});

/// Positional and key=value arguments of a construct verb.
struct ConstructArgs {
  std::vector<std::string> positional;
  std::map<std::string, std::string> named;

  /// "key=value" goes to `named`, anything else to `positional`.
  static ConstructArgs parse(const std::vector<std::string>& args);
};

/// Verbs accepted by construct.
const std::vector<std::string>& construct_verbs();
/// "tensor <i> <A> <B>" and so on, one line per verb.
std::string construct_usage();

/// Applies a construction to bound values. Integer parameters are taken
/// from `named` when present and otherwise from the next positional
/// argument; see construct_usage for the order. The result is bound as
/// `as`, or a fresh "result" name when empty. Returns the name bound.
std::string construct(Workspace& ws, const std::string& verb, const ConstructArgs& args,
                      const std::string& as = {});

/// Directories searched for files that are not found as given: the value of
/// ITERCAT_CORPUS, then the bundled data directory.
std::vector<std::string> corpus_dirs();
std::string locate_file(const std::string& path);

/// An argument naming a file (".cat" suffix or an existing path) is loaded
/// into the workspace, once, and replaced by the name of its last binding.
std::string resolve_argument(Workspace& ws, const std::string& arg, const LoadOptions& opts = {});

}  // namespace itercat
