#include <doctest.h>

#include <fstream>
#include <sstream>

#include "qsw/calculus.hpp"
#include "qsw/catalog.hpp"
#include "qsw/contraction.hpp"
#include "qsw/rmatrix.hpp"
#include "support.hpp"

using namespace qsw;
using qsw::test::pres;

namespace {

std::string file_without_comments(const std::string& name) {
  std::ifstream in(Catalog::default_path() / (name + ".qsw"));
  REQUIRE(in);
  std::string line, out;
  while (std::getline(in, line))
    if (line.empty() || line[0] != '#') out += line + "\n";
  return out;
}

}  // namespace

TEST_CASE("text round trip") {
  for (const auto& [name, p] : test::catalog().presentations()) {
    CAPTURE(name);
    auto again = parse_presentation_text(presentation_to_text(*p));
    CHECK(presentation_to_text(*again) == presentation_to_text(*p));
    CHECK(again->rules().size() == p->rules().size());
  }
}

TEST_CASE("generated files match regeneration") {
  CHECK(file_without_comments("gamma-minus") == presentation_to_text(*build_gamma_minus(*pres("gamma-plus"))));
  auto B = build_B(*pres("gamma-plus"));
  CHECK(file_without_comments("weyl-q-derived") ==
        presentation_to_text(*weyl_from_matrix(*pres("weyl-q"), B, "weyl-q-derived")));
  auto wd = pres("weyl-q-derived");
  auto h = contract_presentation(*wd, *registered_contraction(*wd));
  CHECK(file_without_comments("weyl-h") == presentation_to_text(*h));
}

TEST_CASE("malformed files are rejected") {
  CHECK_THROWS_AS(parse_presentation_text("gen x even 0\n"), CatalogError);
  CHECK_THROWS(parse_presentation_text("presentation p\ngen x even 0\nrule y*x = x\n"));
  CHECK_THROWS(parse_presentation_text("presentation p\ngen x sideways 0\n"));
}
