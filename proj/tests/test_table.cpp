#include <doctest.h>

#include <clocale>
#include <cstdint>
#include <sstream>
#include <string>

#include <json.hpp>

#include "gmrfd/table.hpp"

using namespace gmrfd;

TEST_CASE("doubles round-trip through their text form") {
  for (double v : {0.1, 1.0 / 3.0, 2.5e-300, 123456789.123456789, -0.0965735902799727}) {
    CHECK(std::stod(format_double(v)) == v);
  }
  CHECK(format_double(1.0 / 0.0) == "inf");
}

TEST_CASE("CSV and JSON carry the same records") {
  Table t({"name", "x", "n", "ok", "missing"});
  t.add_row({std::string("a,b"), 0.30000000000000004, std::int64_t{7}, true, Cell{}});
  t.add_row({std::string("plain"), 1e-17, std::int64_t{-2}, false, 4.5});
  CHECK_THROWS_AS(t.add_row({1.0}), std::invalid_argument);

  std::ostringstream csv;
  t.write_csv(csv);
  CHECK(csv.str() ==
        "name,x,n,ok,missing\n"
        "\"a,b\",0.30000000000000004,7,true,\n"
        "plain,1e-17,-2,false,4.5\n");

  std::ostringstream js;
  t.write_json(js);
  const auto parsed = nlohmann::json::parse(js.str());
  REQUIRE(parsed.is_array());
  REQUIRE(parsed.size() == 2);
  CHECK(parsed[0]["name"] == "a,b");
  CHECK(parsed[0]["x"].get<double>() == 0.30000000000000004);
  CHECK(parsed[0]["missing"].is_null());
  CHECK(parsed[1]["n"] == -2);
  CHECK(parsed[1]["ok"] == false);
}

TEST_CASE("number formatting ignores the C locale") {
  const char* previous = std::setlocale(LC_NUMERIC, nullptr);
  const std::string saved = previous ? previous : "C";
  if (std::setlocale(LC_NUMERIC, "de_DE.UTF-8") != nullptr) {
    CHECK(format_double(1.5) == "1.5");
  }
  std::setlocale(LC_NUMERIC, saved.c_str());
  CHECK(format_double(1.5) == "1.5");
}
