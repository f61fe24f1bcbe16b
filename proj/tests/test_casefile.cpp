#include "isohom/casefile.hpp"

#include <doctest.h>

#include <string>

using namespace isohom;

TEST_CASE("case file round trip") {
  for (const auto& fc : builtin_cases()) {
    const auto file = to_case_file(fc);
    const auto text = serialize_case_file(file);
    CHECK(parse_case_file(text) == file);
    CHECK(serialize_case_file(parse_case_file(text)) == text);
    const auto back = to_family_case(parse_case_file(text));
    CHECK(back.action == fc.action);
    CHECK(back.label == fc.label);
  }
}

TEST_CASE("case file without label") {
  const auto file = parse_case_file(R"({"group_orders":[3,3],"phi":[[1,0],[0,1],[2,0],[0,2]],
                                       "psi":[[1,1],[1,2],[2,2],[2,1]]})");
  CHECK_FALSE(file.label.has_value());
  const auto fc = to_family_case(file);
  CHECK(fc.label == "unnamed case");
  CHECK(fc.action == builtin_case(3).action);
}

TEST_CASE("case file errors") {
  auto message = [](const std::string& text) {
    try {
      parse_case_file(text);
    } catch (const CaseFileError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(message(R"({"group_orders":[2,2],"phi":[[1,0],[0]],"psi":[]})") ==
        "phi[1]: expected 2 entries (one per group order), got 1");
  CHECK(message(R"({"group_orders":[2],"phi":[],"psi":[],"extra":1})") ==
        "case file: unknown key \"extra\"");
  CHECK(message(R"({"group_orders":[2],"phi":[]})") == "case file: missing key \"psi\"");
  CHECK(message(R"({"group_orders":[1],"phi":[],"psi":[]})") ==
        "group_orders[0]: cyclic orders must be >= 2");
  CHECK(message(R"({"group_orders":[2],"phi":[[0.5]],"psi":[]})") ==
        "phi[0][0]: expected an integer");
  CHECK(message("[1, 2]") == "case file: top level must be a JSON object");
  CHECK(message("{\"group_orders\": [2,").find("case file: ") == 0);
}

TEST_CASE("empty generating system fails validation") {
  const auto fc = to_family_case(parse_case_file(R"({"group_orders":[2,2],"phi":[],
                                                    "psi":[[1,0],[0,1],[1,1]]})"));
  const auto failures = fc.action.validate();
  REQUIRE_FALSE(failures.empty());
  CHECK(failures.front() == "phi: empty generating system");
}

TEST_CASE("compute report json") {
  const InvariantFactors f{3, 3, 3, 3, 3};
  CHECK(compute_report_json("x", f, f) ==
        "{\"label\":\"x\",\"paper\":{\"free_rank\":0,\"torsion\":[3,3,3,3,3]},"
        "\"oracle\":{\"free_rank\":0,\"torsion\":[3,3,3,3,3]},\"match\":true}\n");
  CHECK(compute_report_json("y", std::nullopt, InvariantFactors{}) ==
        "{\"label\":\"y\",\"oracle\":{\"free_rank\":0,\"torsion\":[]}}\n");
  CHECK(format_factors(InvariantFactors{4, 4}) == "Z/4 ⊕ Z/4");
}
