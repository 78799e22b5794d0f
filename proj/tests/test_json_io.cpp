#include <doctest.h>

#include <nlohmann/json.hpp>

#include "fragmenta/json_io.hpp"

using namespace fragmenta;

TEST_CASE("operator round trip through the JSON schema") {
    ModelId id{ModelKind::TJZ_QF, 3, 3, Boundary::open, {}, {}, {}};
    ExactOperator H = build_model(id);
    nlohmann::json j = operator_to_json(H);
    CHECK(j["dim"] == 27);
    for (const auto& e : j["entries"]) CHECK(e.size() == 6);
    ExactOperator back = operator_from_json(j);
    CHECK(operator_equal(H, back));
}

TEST_CASE("vector round trip keeps Gaussian-rational entries") {
    ExactVector v(8);
    v.set(1, ExactScalar(make_rational(2, 3), make_rational(-1, 7)));
    v.set(5, ExactScalar::unit_i());
    ExactVector back = vector_from_json(vector_to_json(v));
    CHECK(back == v);
}

TEST_CASE("model config parsing") {
    nlohmann::json j = {{"model", "TL"},    {"N", 3},
                        {"L", 6},           {"boundary", "open"},
                        {"J", {1, 1, 1, 1, 1}}};
    ModelId id = model_from_json(j);
    CHECK(id.kind == ModelKind::TL);
    CHECK(id.N == 3);
    CHECK(id.L == 6);
    CHECK(id.J.size() == 5);
    nlohmann::json back = model_to_json(id);
    CHECK(back["model"] == "TL");
    CHECK(back["J"].size() == 5);

    nlohmann::json rationals = {{"model", "TFIM_QF"}, {"N", 2}, {"L", 3}, {"J", {{1, 2}, {3, 4}}}};
    ModelId id2 = model_from_json(rationals);
    CHECK(id2.J[0] == make_rational(1, 2));
    CHECK(id2.J[1] == make_rational(3, 4));

    nlohmann::json bad = {{"model", "TL"}, {"L", 3}, {"boundary", "twisted"}};
    CHECK_THROWS_AS(model_from_json(bad), Error);
}

TEST_CASE("sector label schema") {
    SectorLabel label;
    label.segments.push_back(entangled_segment("10", {0, 1}, 4));
    label.dimer_count = 2;
    nlohmann::json j = sector_label_to_json(label);
    CHECK(j["dimers"] == 2);
    CHECK(j["segments"][0]["s"] == "10");
    CHECK(j["segments"][0]["l"] == 4);
    SectorLabel back = sector_label_from_json(j);
    CHECK(back.dimer_count == 2);
    REQUIRE(back.segments.size() == 1);
    CHECK(back.segments[0].label.str() == "10");
    CHECK(back.segments[0].colors == std::vector<int>{0, 1});
}
