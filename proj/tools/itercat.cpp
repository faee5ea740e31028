// itercat: check, construct and export enriched structures stored in .cat files.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "itercat/cli.hpp"
#include "itercat/error.hpp"

namespace {

using namespace itercat;

struct Common {
  std::string format = "text";
  int jobs = 1;
  std::size_t max_tuples = 0;
  bool no_check = false;

  CheckOptions check() const { return {jobs, max_tuples}; }
  LoadOptions load() const { return {!no_check}; }
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--format", c.format, "Report format")->check(CLI::IsMember({"text", "lines"}));
  cmd->add_option("--jobs,-j", c.jobs, "Worker threads")->check(CLI::PositiveNumber);
  cmd->add_option("--max-tuples", c.max_tuples, "Refuse checks above this many tuples (0: no limit)");
  cmd->add_flag("--no-check", c.no_check, "Skip structural validation when loading");
}

int report(const CheckReport& r, const Common& c) {
  std::cout << (c.format == "lines" ? r.to_lines() : r.to_text());
  return r.ok() ? 0 : 1;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::DanglingReference, "cannot write " + path);
  out << text;
}

int run_check(const std::string& suite, const std::vector<std::string>& args, const Common& c) {
  Workspace ws;
  std::map<std::string, std::string> params;
  for (const auto& a : args) {
    auto eq = a.find('=');
    if (eq != std::string::npos && eq > 0 && a.find('/') == std::string::npos) {
      params[a.substr(0, eq)] = a.substr(eq + 1);
    } else {
      load_file(ws, locate_file(a), c.load());
    }
  }
  CheckReport r = run_suite(ws, suite, params, c.check());
  r.normalize();
  return report(r, c);
}

int run_construct(const std::string& verb, std::vector<std::string> args, const std::vector<std::string>& files,
                  const std::string& as, const std::string& export_path, const std::string& suite,
                  const Common& c) {
  Workspace ws;
  for (const auto& f : files) load_file(ws, locate_file(f), c.load());
  for (auto& a : args)
    if (a.find('=') == std::string::npos) a = resolve_argument(ws, a, c.load());
  std::string name = construct(ws, verb, ConstructArgs::parse(args), as);
  write_text(export_path, export_binding(ws, name));
  if (suite.empty()) return 0;
  // Check the result alone.
  Workspace only;
  load_text(only, export_binding(ws, name), name, c.load());
  CheckReport r = run_suite(only, suite, {}, c.check());
  r.normalize();
  std::ostream& out = export_path.empty() || export_path == "-" ? std::cerr : std::cout;
  out << (c.format == "lines" ? r.to_lines() : r.to_text());
  return r.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite iterated monoidal categories and enriched towers"};
  app.require_subcommand(1);
  Common common;

  std::string suite;
  std::vector<std::string> check_args;
  auto* check = app.add_subcommand("check", "Run a check suite over every binding of the files");
  check->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
  check->add_option("args", check_args, "Files, and key=value suite parameters")->required();
  add_common(check, common);

  std::string verb, as, export_path, post_check;
  std::vector<std::string> verb_args, files;
  auto* cons = app.add_subcommand("construct", "Apply a construction and print the result");
  cons->footer("Verbs:\n" + construct_usage());
  cons->add_option("verb", verb, "Construction")->required()->check(CLI::IsMember(construct_verbs()));
  cons->add_option("args", verb_args, "Names, files, integers or key=value");
  cons->add_option("-f,--file", files, "Files to load first");
  cons->add_option("--as", as, "Name of the result");
  cons->add_option("--export,-o", export_path, "Write the result here instead of stdout");
  cons->add_option("--check", post_check, "Run a suite on the result")->check(CLI::IsMember(suite_names()));
  add_common(cons, common);

  std::string name, out_path;
  std::vector<std::string> export_files;
  auto* exp = app.add_subcommand("export", "Write a binding and its dependencies");
  exp->add_option("name", name, "Binding to export")->required();
  exp->add_option("path", out_path, "Output file (default stdout)");
  exp->add_option("-f,--file", export_files, "Files to load")->required();
  add_common(exp, common);

  std::vector<std::string> list_files;
  auto* list = app.add_subcommand("list", "List the bindings of files");
  list->add_option("files", list_files, "Files")->required();
  add_common(list, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*check) return run_check(suite, check_args, common);
    if (*cons) return run_construct(verb, verb_args, files, as, export_path, post_check, common);
    if (*exp) {
      Workspace ws;
      for (const auto& f : export_files) load_file(ws, locate_file(f), common.load());
      write_text(out_path, export_binding(ws, name));
      return 0;
    }
    Workspace ws;
    for (const auto& f : list_files) load_file(ws, locate_file(f), common.load());
    for (const auto& b : ws.bindings()) std::cout << b.name << '\t' << kind_of(b.value) << '\t' << b.origin << '\n';
    return 0;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
