#include <doctest.h>

#include "pdc/error.hpp"
#include "pdc/io.hpp"
#include "support.hpp"

using namespace pdc;
using namespace pdc::testing;

namespace {

const char* kInterval = R"({
  "dimension": 1,
  "C": {"ineq": [{"a": ["-1"], "b": "2"}, {"a": ["1"], "b": "3"}]},
  "g": {"pieces": [{"u": ["0"], "alpha": "0"}], "domain": null},
  "h": {"pieces": [{"u": ["-1"], "alpha": "-1"}, {"u": ["0"], "alpha": 0}, {"u": ["1"], "alpha": "-1"}]}
})";

}  // namespace

TEST_CASE("parse a problem") {
  const DcProblem p = parse_problem(kInterval);
  CHECK(p.dimension() == 1);
  CHECK(p.h.pieces.size() == 3);
  CHECK(p.h.pieces[2].alpha == -1);
  CHECK(eval(p.h, v1("-3/2")) == ExtendedRational(Rational(1, 2)));
  CHECK(p.C.inequalities.size() == 2);
}

TEST_CASE("problem round trip") {
  const DcProblem p = parse_problem(kInterval);
  const std::string once = render(problem_to_json(p));
  const DcProblem q = parse_problem(once);
  CHECK(render(problem_to_json(q)) == once);

  MaxAffine g{{{v2("1/2", "-3"), Rational(7, 3)}}, box({0, 0}, {1, 2})};
  g.domain.equalities.push_back({v2("1", "1"), Rational(1)});
  const DcProblem r = make_problem(g, zero_function(2), box({-1, -1}, {1, 1}));
  const DcProblem back = parse_problem(render(problem_to_json(r)));
  CHECK(back.g.pieces[0].u == r.g.pieces[0].u);
  CHECK(back.g.pieces[0].alpha == r.g.pieces[0].alpha);
  CHECK(back.g.domain.equalities.size() == 1);
}

TEST_CASE("syntax errors carry a line and column") {
  try {
    parse_problem("{\n  \"dimension\": 1,\n  \"C\": {]\n}");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 9);
  }
}

TEST_CASE("semantic errors carry a JSON pointer") {
  auto pointer_of = [](const std::string& text) {
    try {
      parse_problem(text);
    } catch (const ParseError& e) {
      return e.pointer();
    }
    return std::string("none");
  };
  std::string bad = kInterval;
  bad.replace(bad.find("\"alpha\": 0"), 10, "\"alpha\": \"x/2\"");
  CHECK(pointer_of(bad) == "/h/pieces/1/alpha");
  std::string short_row = kInterval;
  short_row.replace(short_row.find("[\"1\"], \"b\""), 5, "[\"1\", \"2\"]");
  CHECK(pointer_of(short_row) == "/C/ineq/1/a");
  CHECK(pointer_of(R"({"dimension": 0})") == "/dimension");
  CHECK(pointer_of(R"({"dimension": 1, "C": {}, "g": {"pieces": []}, "h": {"pieces": [{"u": ["0"], "alpha": "0"}]}})") ==
        "/g/pieces");
}

TEST_CASE("standing assumption is enforced on input") {
  const char* text = R"({"dimension": 1, "C": {"ineq": [{"a": ["1"], "b": "-1"}]},
    "g": {"pieces": [{"u": ["0"], "alpha": "0"}], "domain": {"ineq": [{"a": ["-1"], "b": "0"}]}},
    "h": {"pieces": [{"u": ["0"], "alpha": "0"}]}})";
  CHECK_THROWS_WITH_AS(parse_problem(text), doctest::Contains("standing assumption"), PreconditionError);
}

TEST_CASE("tables, scripts and traces") {
  const ActiveSetTable t = parse_table(R"({"table": [{"active": [1, 2], "choose": 2}]})");
  CHECK(t.choice.at(IndexSet{1, 2}) == 2);
  CHECK_THROWS_AS(parse_table(R"({"table": [{"active": [1], "choose": 2}, {"active": [1], "choose": 1}]})"),
                  ParseError);
  const Scripted s = parse_script(R"({"subgradients": [["-3/2"], [4]]})", 1);
  CHECK(s.subgradients[0] == v1("-3/2"));
  CHECK(s.subgradients[1] == v1("4"));
  CHECK_THROWS_AS(parse_script(R"({"subgradients": [["1", "2"]]})", 1), ParseError);
  const auto [xs, xis] = parse_trace(R"({"points": [["0"], ["1"]], "subgradients": [["1"]]})", 1);
  CHECK(xs.size() == 2);
  CHECK(xis.size() == 1);
}

TEST_CASE("reports are deterministic") {
  const DcProblem p = interval_kink();
  const std::string a = render(structure_report(p, analyze_structure(p)));
  const std::string b = render(structure_report(p, analyze_structure(p)));
  CHECK(a == b);
  const Json c = classification_report(p, v1("1"), classify(p, v1("1"), true));
  CHECK(c["critical"] == true);
  CHECK(c["stationary"] == false);
  CHECK(c["local"] == "no");
  CHECK(c["active_h"] == Json::array({1, 2}));
  const Json d = dca_report(run_dca(p, v1("2"), MinIndexActive{}, 10), MinIndexActive{});
  CHECK(d["termination"]["kind"] == "fixed-point");
  CHECK(d["iterates"][1]["x"] == Json::array({"3"}));
}
