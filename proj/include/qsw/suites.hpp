#pragma once

// Named verification suites and the report they produce.

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace qsw {

enum class Status { pass, fail, skipped, finding };
std::string to_string(Status s);

struct CheckResult {
  std::string check_id;
  Status status = Status::pass;
  std::string lhs, rhs;
  std::string residue;  // empty on pass
  long long elapsed_ms = 0;
};

struct SuiteOptions {
  std::filesystem::path catalog;
  std::vector<std::string> filters;  // globs over check ids; empty runs everything
  std::optional<std::size_t> degree_cap;
  bool timing = false;  // elapsed_ms stays 0 otherwise, keeping reports byte-stable
};

const std::vector<std::string>& suite_names();  // without "all"
bool is_suite(const std::string& name);

/// Runs one suite (or "all"); results sorted by check_id. A check that
/// throws is reported as a fail carrying the exception text.
std::vector<CheckResult> run_suite(const std::string& suite, const SuiteOptions& opt);

/// True when the id matches one of the globs, either whole or with its
/// leading "<suite>." stripped.
bool matches_filters(const std::string& check_id, const std::vector<std::string>& filters);

struct Summary {
  std::size_t total = 0, pass = 0, fail = 0, finding = 0, skipped = 0;
};
Summary summarize(const std::vector<CheckResult>& results);

std::string to_json_line(const CheckResult& r);
std::string to_json_line(const Summary& s);
std::string to_text_line(const CheckResult& r);
std::string to_text_line(const Summary& s);

}  // namespace qsw
