#include <doctest.h>

#include <sstream>

#include "cyclic/fixtures.hpp"
#include "cyclic/io.hpp"
#include "cyclic/ntuple.hpp"

using namespace cyclic;

TEST_CASE("witness JSON has the documented shape") {
    const auto j = io::witness_to_json(fixtures::moon_moser_dice());
    CHECK(j.at("n") == 3);
    REQUIRE(j.at("dists").size() == 3);
    const auto& first = j.at("dists")[0][0];
    CHECK(first.at("point") == "1/1");
    CHECK(first.at("weight") == "1/3");
}

TEST_CASE("witness JSON round-trips losslessly") {
    for (std::uint64_t k = 0; k < 50; ++k) {
        const int n = 4 + static_cast<int>(k % 7);
        const ExactTuple t = fixtures::random_up_down_tuple(11, k, n);
        const auto w = ntuple::build_witness(t, *ntuple::find_up_down_index(t));
        const auto text = io::dump(io::witness_to_json(w));
        const auto back = io::witness_from_json(io::Json::parse(text));
        CHECK(back == w);
        CHECK(ntuple::verify_witness(back, t));
    }
}

TEST_CASE("malformed witness JSON is rejected") {
    CHECK_THROWS(io::witness_from_json(io::Json::parse(R"({"n": 3})")));
    CHECK_THROWS(io::witness_from_json(io::Json::parse(R"({"dists": [[{"point": "1", "weight": "1/2"}]]})")));
    // overlapping supports
    CHECK_THROWS(io::witness_from_json(io::Json::parse(
        R"({"dists": [[{"point":"1","weight":"1"}],[{"point":"1","weight":"1"}],[{"point":"2","weight":"1"}]]})")));
    // n disagrees with the list
    CHECK_THROWS(io::witness_from_json(io::Json::parse(
        R"({"n": 4, "dists": [[{"point":"1","weight":"1"}],[{"point":"2","weight":"1"}],[{"point":"3","weight":"1"}]]})")));
}

TEST_CASE("floats are written with 17 significant digits") {
    CHECK(io::format_double(0.1) == "0.10000000000000001");
    CHECK(io::format_double(0.5) == "0.5");
    const auto text = io::dump(io::Json{{"x", 2.0 / 3.0}, {"k", 3}});
    CHECK(text.find("0.66666666666666663") != std::string::npos);
    CHECK(text.find("\"k\": 3") != std::string::npos);
}

TEST_CASE("estimate JSON carries the documented fields") {
    MCEstimate e{"p3", 0.6, 0.001, 1000, 42, 4, 600};
    const auto j = io::estimate_to_json(e);
    for (const char* key : {"target", "estimate", "stderr", "samples", "seed"}) CHECK(j.contains(key));
    CHECK(j.at("seed") == 42);
}

TEST_CASE("density CSV header and grid") {
    std::ostringstream all;
    io::write_density_csv(all, 4);
    CHECK(all.str().rfind("x,f1,f2,f3\n0,", 0) == 0);
    std::ostringstream one;
    io::write_density_csv(one, 10, DensityKind::F2);
    std::string line;
    std::istringstream in(one.str());
    int lines = 0;
    std::getline(in, line);
    CHECK(line == "x,f2");
    while (std::getline(in, line)) ++lines;
    CHECK(lines == 11);
}
