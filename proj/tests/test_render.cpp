#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "fibgen/render.hpp"
#include "xml_check.hpp"

using namespace fibgen;
using sweep::GridRect;

TEST_CASE("format_decimal_floor rounds toward minus infinity") {
  CHECK(render::format_decimal_floor(1.9999999, 6) == "1.999999");
  CHECK(render::format_decimal_floor(-0.4729537233, 6) == "-0.472954");
  CHECK(render::format_decimal_floor(2.0, 6) == "2.000000");
  CHECK(render::format_decimal_floor(-0.25, 6) == "-0.250000");
  // double(-0.2) sits just below -0.2, and the floor is strict
  CHECK(render::format_decimal_floor(-0.2, 6) == "-0.200001");
  CHECK(render::format_decimal_floor(0.0, 6) == "0.000000");
  CHECK(render::format_decimal_floor(1.3570226039551584, 6) == "1.357022");
}

TEST_CASE("table_csv golden output") {
  const std::string expected =
      "fibgen_ge,prime,asymptotic_ratio,exact_threshold\n"
      "1,3,3/4,3*ceil((n+3)/4)\n"
      "2,5,5/6,5*ceil((n+3)/6)\n"
      "3,7,7/8,7*ceil((n+3)/8)\n"
      "5,11,11/12,11*ceil((n+4)/12)\n"
      "6,13,13/14,13*ceil((n+5)/14)\n"
      "8,17,17/18,17*ceil((n+6)/18)\n"
      "9,19,19/20,19*ceil((n+6)/20)\n";
  CHECK(render::table_csv(sweep::intro_table()) == expected);
}

TEST_CASE("grid_csv golden row") {
  const auto cells = sweep::grid(GridRect{3, 3, 5, 5});
  CHECK(render::grid_csv(cells) ==
        "n,d,best_lower,best_kind,upper_genus,closed_form\n"
        "3,5,2,DegenerationMin,6,-0.472954\n");
}

TEST_CASE("report json schema and round trip") {
  const auto rep = combined_bound(Hypersurface(3, 5));
  const auto j = render::report_json(rep);
  CHECK(j["n"] == 3);
  CHECK(j["d"] == 5);
  CHECK(j["best_lower"] == 2);
  CHECK(j["upper_genus"] == 6);
  CHECK(j["upper_gonality"] == 4);
  CHECK(j["certificates"].is_array());
  bool saw_deg = false;
  for (const auto& c : j["certificates"]) {
    if (c["kind"] == "DegenerationMin") {
      saw_deg = true;
      CHECK(c["value"] == "3/2");
      CHECK(c["integer_value"] == 2);
      CHECK(c["witness"]["p"] == 5);
      CHECK(c["witness"]["e"] == 1);
      CHECK(c["witness"]["gamma"] == 2);
      CHECK(c["hypothesis"] == "very general");
    }
  }
  CHECK(saw_deg);
  // parse + re-serialize is idempotent
  const std::string once = j.dump();
  CHECK(render::json::parse(once).dump() == once);
}

TEST_CASE("grid json uses down-rounded decimals") {
  const auto cells = sweep::grid(GridRect{3, 3, 5, 5});
  const auto j = render::grid_json(GridRect{3, 3, 5, 5}, cells);
  CHECK(j["cells"].size() == 1);
  CHECK(j["cells"][0]["best_lower"] == 2);
  CHECK(j["cells"][0]["closed_form"] == -0.472954);
  const std::string once = j.dump();
  CHECK(render::json::parse(once).dump() == once);
}

TEST_CASE("grid svg structure") {
  const GridRect rect{3, 4, 1, 2};
  const auto cells = sweep::grid(rect);
  const auto svg = render::grid_svg(rect, cells);
  CHECK(svg.rfind("<?xml", 0) == 0);
  std::string err;
  CHECK_MESSAGE(xml_well_formed(svg, &err), err);
  CHECK(count_occurrences(svg, "<rect class=\"cell\"") == 4);
  CHECK(count_occurrences(svg, "<rect class=\"swatch\"") == 13);
  // byte-identical across invocations
  CHECK(render::grid_svg(rect, cells) == svg);
}

TEST_CASE("report human output mentions the verdict") {
  const auto rep = combined_bound(Hypersurface(3, 10));
  const auto text = render::report_human(rep);
  CHECK(text.find("best unconditional lower bound: 11 via GeneralTypeCovGon") !=
        std::string::npos);
  CHECK(text.find("upper bound on fibering genus: 36") != std::string::npos);
}
