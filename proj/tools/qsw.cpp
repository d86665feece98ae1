// qsw: run verification suites, reduce expressions, export contractions.
//
// Exit codes: 0 all pass (findings allowed), 1 a failing check or pipeline
// error, 2 usage or parse error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "qsw/catalog.hpp"
#include "qsw/contraction.hpp"
#include "qsw/expr.hpp"
#include "qsw/suites.hpp"

namespace {

constexpr int exit_usage = 2;

int cmd_verify(const std::string& suite, const qsw::SuiteOptions& opt, const std::string& format) {
  if (!qsw::is_suite(suite)) {
    std::cerr << "unknown suite '" << suite << "' (expected all";
    for (const auto& n : qsw::suite_names()) std::cerr << ", " << n;
    std::cerr << ")\n";
    return exit_usage;
  }
  std::vector<qsw::CheckResult> results;
  try {
    results = qsw::run_suite(suite, opt);
  } catch (const qsw::CatalogError& e) {
    std::cerr << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  bool json = format == "json";
  for (const auto& r : results) std::cout << (json ? qsw::to_json_line(r) : qsw::to_text_line(r)) << "\n";
  auto s = qsw::summarize(results);
  std::cout << (json ? qsw::to_json_line(s) : qsw::to_text_line(s)) << "\n";
  return s.fail == 0 ? 0 : 1;
}

int cmd_reduce(const std::filesystem::path& catalog, const std::string& name, const std::string& text) {
  try {
    auto cat = qsw::Catalog::load(catalog);
    if (!cat.has_presentation(name)) {
      std::cerr << "no presentation '" << name << "' in " << catalog << "\n";
      return exit_usage;
    }
    auto p = cat.presentation(name);
    std::cout << p->format(p->parse(text)) << "\n";
    return 0;
  } catch (const qsw::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return exit_usage;
  } catch (const qsw::UndeclaredSymbol& e) {
    std::cerr << e.what() << "\n";
    return exit_usage;
  } catch (const qsw::CatalogError& e) {
    std::cerr << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

int cmd_contract(const std::filesystem::path& catalog, const std::string& name, const std::string& out) {
  try {
    auto cat = qsw::Catalog::load(catalog);
    if (!cat.has_presentation(name)) {
      std::cerr << "no presentation '" << name << "' in " << catalog << "\n";
      return exit_usage;
    }
    auto src = cat.presentation(name);
    auto cm = qsw::registered_contraction(*src);
    if (!cm) {
      std::cerr << "no contraction registered for '" << name << "'\n";
      return exit_usage;
    }
    auto h = qsw::contract_presentation(*src, *cm);
    std::string text = qsw::presentation_to_text(*h);
    if (out.empty() || out == "-") {
      std::cout << text;
    } else {
      std::ofstream f(out);
      if (!(f << text)) {
        std::cerr << "cannot write " << out << "\n";
        return 1;
      }
    }
    return 0;
  } catch (const qsw::PoleError& e) {
    std::cerr << "pole: " << e.what() << "\n";
    return 1;
  } catch (const qsw::CatalogError& e) {
    std::cerr << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of graded quantum algebras"};
  app.require_subcommand(1);
  std::string catalog = qsw::Catalog::default_path().string();
  app.add_option("--catalog", catalog, "Catalog directory (default: $QSW_CATALOG or the bundled catalog)");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::string suite_pos, suite_opt, format = "json";
  std::vector<std::string> filters;
  std::size_t degree = 0;
  bool timing = false;
  verify->add_option("name", suite_pos, "all, presentations, hopf, star, rmatrix, calculus or contraction");
  verify->add_option("--suite", suite_opt, "Same as the positional suite");
  verify->add_option("--filter", filters, "Check id glob; repeatable")->take_all();
  verify->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  verify->add_option("--degree", degree, "Cap on the confluence oracle depth")->check(CLI::PositiveNumber);
  verify->add_flag("--timing", timing, "Fill elapsed_ms (reports are no longer byte-stable)");
  verify->add_option("--catalog", catalog, "Catalog directory");

  auto* reduce = app.add_subcommand("reduce", "Print the normal form of an expression");
  std::string rname, rexpr;
  reduce->add_option("presentation", rname)->required();
  reduce->add_option("expr", rexpr)->required();
  reduce->add_option("--catalog", catalog, "Catalog directory");

  auto* contract = app.add_subcommand("contract", "Write the q -> 1 contraction of a presentation");
  std::string cname, cout_path;
  contract->add_option("source", cname)->required();
  contract->add_option("out", cout_path, "Output file (stdout when omitted)");
  contract->add_option("-o,--output", cout_path, "Output file");
  contract->add_option("--catalog", catalog, "Catalog directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : exit_usage;
  }

  if (*verify) {
    if (!suite_pos.empty() && !suite_opt.empty() && suite_pos != suite_opt) {
      std::cerr << "conflicting suites '" << suite_pos << "' and '" << suite_opt << "'\n";
      return exit_usage;
    }
    std::string suite = !suite_opt.empty() ? suite_opt : !suite_pos.empty() ? suite_pos : "all";
    qsw::SuiteOptions opt;
    opt.catalog = catalog;
    opt.filters = filters;
    if (degree) opt.degree_cap = degree;
    opt.timing = timing;
    return cmd_verify(suite, opt, format);
  }
  if (*reduce) return cmd_reduce(catalog, rname, rexpr);
  return cmd_contract(catalog, cname, cout_path);
}
