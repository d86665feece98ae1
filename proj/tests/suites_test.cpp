#include <doctest.h>

#include <json.hpp>

#include "qsw/catalog.hpp"
#include "qsw/suites.hpp"

using namespace qsw;

TEST_CASE("filter globs") {
  CHECK(matches_filters("rmatrix.projector.spectral.sum", {}));
  CHECK(matches_filters("rmatrix.projector.spectral.sum", {"projector*"}));
  CHECK(matches_filters("rmatrix.projector.spectral.sum", {"rmatrix.*.sum"}));
  CHECK(matches_filters("rmatrix.projector.spectral.sum", {"nothing", "*spectral*"}));
  CHECK_FALSE(matches_filters("rmatrix.projector.spectral.sum", {"hopf*"}));
  CHECK_FALSE(matches_filters("rmatrix.projector.spectral.sum", {"spectral*"}));
  CHECK(matches_filters("star.unitary.relation:a*a^*", {"*a^[*]"}));
}

TEST_CASE("json lines") {
  CheckResult r{"x.y", Status::finding, "a", "b", "a - b", 0};
  auto j = nlohmann::json::parse(to_json_line(r));
  CHECK(j["check_id"] == "x.y");
  CHECK(j["status"] == "finding");
  CHECK(j["residue"] == "a - b");
  CHECK(j["elapsed_ms"] == 0);
  CHECK(to_json_line(r).find('\n') == std::string::npos);
  CHECK(to_json_line(r).rfind("{\"check_id\"", 0) == 0);
  Summary s = summarize({r, CheckResult{"x.z", Status::pass, "", "", "", 0}});
  auto js = nlohmann::json::parse(to_json_line(s));
  CHECK(js["total"] == 2);
  CHECK(js["finding"] == 1);
  CHECK(js["pass"] == 1);
}

TEST_CASE("filtered suite run is sorted, deterministic and fail-free") {
  SuiteOptions opt;
  opt.catalog = Catalog::default_path();
  opt.filters = {"projector*"};
  auto a = run_suite("rmatrix", opt), b = run_suite("rmatrix", opt);
  REQUIRE_FALSE(a.empty());
  for (std::size_t k = 0; k < a.size(); ++k) {
    CHECK(to_json_line(a[k]) == to_json_line(b[k]));
    CHECK(a[k].status != Status::fail);
    CHECK(a[k].check_id.rfind("rmatrix.projector", 0) == 0);
    if (k) CHECK(a[k - 1].check_id < a[k].check_id);
  }
  CHECK_THROWS(run_suite("nonsense", opt));
}
