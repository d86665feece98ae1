// Acceptance run: one line per criterion, decided from exact check results.
//
//   acceptance [--expect-blocked FILE]
//
// Without the option the exit code is 0 only when every criterion passes.
// With it, the exit code is 0 when the failing criteria are exactly the
// numbers listed in FILE; the FAIL lines are still printed.

#include <array>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "qsw/catalog.hpp"
#include "qsw/suites.hpp"

using namespace qsw;

namespace {

struct Verdict {
  bool ok = true;
  std::size_t checked = 0;
  std::vector<std::string> notes;

  void need(bool cond, const std::string& what) {
    ++checked;
    if (!cond) {
      ok = false;
      notes.push_back(what);
    }
  }
};

class Results {
public:
  explicit Results(std::vector<CheckResult> r) : all_(std::move(r)) {}

  std::vector<const CheckResult*> select(const std::vector<std::string>& globs) const {
    std::vector<const CheckResult*> out;
    for (const auto& r : all_)
      if (matches_filters(r.check_id, globs)) out.push_back(&r);
    return out;
  }

  // Every selected check must pass; the selection must not be empty.
  void all_pass(Verdict& v, const std::vector<std::string>& globs) const {
    auto sel = select(globs);
    v.need(!sel.empty(), "no checks for " + globs.front());
    for (auto* r : sel) v.need(r->status == Status::pass, r->check_id + " is " + to_string(r->status));
  }

  // Mismatches may be reported as findings, never as failures.
  void none_fail(Verdict& v, const std::vector<std::string>& globs) const {
    auto sel = select(globs);
    v.need(!sel.empty(), "no checks for " + globs.front());
    for (auto* r : sel) v.need(r->status != Status::fail, r->check_id + " failed");
  }

private:
  std::vector<CheckResult> all_;
};

Verdict presentations(const Results& r) {
  Verdict v;
  for (const char* p : {"spq12", "lambda-q", "ospq12", "weyl-q", "sph12", "lambda-h"}) {
    std::string base = std::string("presentations.") + p;
    auto dims = r.select({base + ".hilbert.*"});
    v.need(dims.size() == (std::string(p) == "ospq12" || std::string(p) == "weyl-q" ? 5u : 7u),
           base + " hilbert depth");
    r.all_pass(v, {base + ".hilbert.*"});
    r.all_pass(v, {base + ".overlaps"});
  }
  return v;
}

Verdict representations(const Results& r) {
  Verdict v;
  for (const char* fam : {"2x2", "3x3"}) {
    std::string g = std::string("presentations.representation.") + fam + ".*";
    v.need(r.select({g}).size() == 5, g + " covers five relations");
    r.all_pass(v, {g});
  }
  return v;
}

Verdict covariance(const Results& r) {
  Verdict v;
  v.need(r.select({"hopf.covariance.member:*"}).size() == 17, "one membership check per group relation");
  r.all_pass(v, {"hopf.covariance.member:*"});
  r.all_pass(v, {"hopf.covariance.classical.*"});
  return v;
}

Verdict centrality(const Results& r) {
  Verdict v;
  r.all_pass(v, {"hopf.central.supersphere.*"});
  r.all_pass(v, {"hopf.central.superdeterminant.two-expressions"});
  r.all_pass(v, {"hopf.central.superdeterminant.[[]D,*"});
  r.all_pass(v, {"hopf.central.coinvariance.left.*"});
  r.all_pass(v, {"contraction.supersphere.*"});
  return v;
}

Verdict stars(const Results& r) {
  Verdict v;
  r.all_pass(v, {"star.structure.uosp.*"});
  r.all_pass(v, {"star.structure.weyl-q-unit.relation:*"});
  r.all_pass(v, {"star.structure.weyl-h-unit.relation:*"});
  r.all_pass(v, {"star.examples.uosp.double-star.*"});
  v.need(r.select({"star.unitary.relation:*"}).size() == 11, "eleven unitarity relations");
  r.all_pass(v, {"star.unitary.relation:*"});
  r.all_pass(v, {"star.unitary.q-oscillator.identity"});
  r.all_pass(v, {"star.comodule.*"});
  return v;
}

Verdict rmatrix(const Results& r) {
  Verdict v;
  r.all_pass(v, {"rmatrix.annihilating.cubic"});
  r.all_pass(v, {"rmatrix.projector.printed.*"});
  r.all_pass(v, {"rmatrix.relations.image-minus-equals-kernel"});
  r.all_pass(v, {"rmatrix.relations.image-minus-equals-relation-span"});
  r.all_pass(v, {"rmatrix.relations.rank-minus"});
  auto entries = r.select({"rmatrix.entries.B^*"});
  std::size_t match = 0;
  for (auto* e : entries) match += e->status == Status::pass;
  v.need(match >= 12, std::to_string(match) + " listed entries match");
  r.none_fail(v, {"rmatrix.entries.*"});
  return v;
}

Verdict calculus(const Results& r) {
  Verdict v;
  r.all_pass(v, {"calculus.gamma-plus.d-relation:*"});
  r.all_pass(v, {"calculus.gamma-plus.d2:*"});
  r.all_pass(v, {"calculus.strategies.weyl-q.*"});
  r.all_pass(v, {"calculus.supersphere.d(*"});
  r.all_pass(v, {"calculus.supersphere.weyl-q.*"});
  r.all_pass(v, {"calculus.gamma-minus.d-relation:*", "calculus.gamma-minus.d-form-relation:*",
                 "calculus.gamma-minus.d2:*"});
  return v;
}

Verdict contraction(const Results& r) {
  Verdict v;
  r.all_pass(v, {"contraction.presentation.spq12.equals-bundled"});
  r.all_pass(v, {"contraction.metric.C_h"});
  r.all_pass(v, {"contraction.projector.*"});
  r.none_fail(v, {"contraction.compact-form.q.*"});
  v.need(r.select({"contraction.heisenberg.*"}).size() >= 20, "every Heisenberg relation is checked");
  for (auto* h : r.select({"contraction.heisenberg.*"}))
    v.need(h->status == Status::pass || (h->status == Status::finding && !h->residue.empty()),
           h->check_id + " neither verified nor reported with a residue");
  for (const char* src : {"spq12", "lambda-q", "weyl-q"})
    r.all_pass(v, {std::string("contraction.commutes.") + src + ".*"});
  return v;
}

struct Run {
  int code = -1;
  std::string out;
};

Run run_cli(const std::string& cmd) {
  Run r;
  FILE* f = popen(cmd.c_str(), "r");
  if (!f) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), f)) > 0) r.out.append(buf.data(), n);
  int st = pclose(f);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

Verdict cli_contract() {
  Verdict v;
  std::string cmd = std::string("\"") + QSW_CLI_PATH + "\" verify all --catalog \"" +
                    Catalog::default_path().string() + "\"";
  Run a = run_cli(cmd), b = run_cli(cmd);
  v.need(a.code == 0, "first run exit " + std::to_string(a.code));
  v.need(b.code == 0, "second run exit " + std::to_string(b.code));
  v.need(!a.out.empty() && a.out == b.out, "report streams differ");
  return v;
}

std::set<int> read_blocked(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::set<int> out;
  std::string line;
  while (std::getline(in, line)) {
    line = line.substr(0, line.find('#'));
    std::istringstream ss(line);
    int n;
    while (ss >> n) out.insert(n);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  std::optional<std::set<int>> expected;
  for (int k = 1; k < argc; ++k) {
    std::string a = argv[k];
    if (a == "--expect-blocked" && k + 1 < argc) {
      expected = read_blocked(argv[++k]);
    } else {
      std::cerr << "usage: acceptance [--expect-blocked FILE]\n";
      return 2;
    }
  }

  SuiteOptions opt;
  opt.catalog = Catalog::default_path();
  Results res(run_suite("all", opt));

  struct Criterion {
    int n;
    const char* title;
    Verdict v;
  };
  std::vector<Criterion> cs = {
      {1, "presentation certificates", presentations(res)},
      {2, "representations satisfy the superspace relations", representations(res)},
      {3, "covariance span contains the group relations", covariance(res)},
      {4, "centrality and coinvariance", centrality(res)},
      {5, "star structures", stars(res)},
      {6, "R-matrix and projectors", rmatrix(res)},
      {7, "differential calculus", calculus(res)},
      {8, "contraction", contraction(res)},
      {9, "CLI exit code and deterministic report", cli_contract()},
  };

  std::set<int> failing;
  for (const auto& c : cs) {
    std::cout << "criterion " << c.n << ": " << (c.v.ok ? "PASS" : "FAIL") << "  " << c.title << " ("
              << c.v.checked << " conditions";
    if (!c.v.ok) {
      std::cout << "; " << c.v.notes.size() << " unmet:";
      std::size_t shown = 0;
      for (const auto& note : c.v.notes) {
        if (shown++ == 4) {
          std::cout << " ...";
          break;
        }
        std::cout << " [" << note << "]";
      }
      failing.insert(c.n);
    }
    std::cout << ")\n";
  }

  if (!expected) return failing.empty() ? 0 : 1;
  if (failing == *expected) {
    std::cout << "failing criteria match the expected blocked set\n";
    return 0;
  }
  std::cout << "failing criteria differ from the expected blocked set\n";
  return 1;
}
