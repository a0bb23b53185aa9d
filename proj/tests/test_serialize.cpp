#include <doctest.h>

#include <sstream>

#include "test_util.hpp"
#include "vexcap/bruneau.hpp"
#include "vexcap/generators.hpp"
#include "vexcap/serialize.hpp"

using namespace vexcap;

TEST_CASE("path JSON round-trip is bit exact") {
    auto w = paths::generate_brownian(257, 1.0, 1.0, 2001);
    auto text = io::path_to_json(w).dump();
    auto back = io::path_from_json(nlohmann::json::parse(text));
    REQUIRE(back.size() == w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        CHECK(back.times[i] == w.times[i]);
        CHECK(back.values[i] == w.values[i]);
    }
    CHECK(back.generator == "brownian");
    CHECK(back.seed == 2001);
}

TEST_CASE("path CSV has the t,x header") {
    auto p = testutil::path_of({0, 1}, {0, 0.5});
    std::ostringstream os;
    io::write_path_csv(p, os);
    CHECK(os.str().rfind("t,x\n", 0) == 0);
}

TEST_CASE("variation report serializes the infinity state explicitly") {
    auto zig = testutil::path_values({0, 1, 0});
    auto fin = io::variation_to_json(analysis::var_p(zig, 2.0));
    CHECK(fin["infinite"] == false);
    CHECK(fin["value"] == doctest::Approx(2.0));
    auto inf = io::variation_to_json(analysis::var_p(zig, 0.5));
    CHECK(inf["infinite"] == true);
}

TEST_CASE("bruneau CSV table") {
    auto ramp = testutil::path_of({0, 1}, {0, 1});
    auto rep = analysis::bruneau_constant(ramp, 2.0, 1.0, 1.0, 3);
    std::ostringstream os;
    io::write_bruneau_csv(rep, os);
    CHECK(os.str().rfind("k,mesh,M,weighted\n", 0) == 0);
    // header + one row per level
    int lines = 0;
    for (char c : os.str())
        if (c == '\n') ++lines;
    CHECK(lines == 4);
}
