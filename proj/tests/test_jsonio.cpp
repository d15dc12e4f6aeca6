#include <doctest.h>

#include "hermspace/errors.hpp"
#include "hermspace/jsonio.hpp"

using namespace hws;

TEST_CASE("space spec parsing") {
    SUBCASE("each family") {
        const auto anova = parse_space_spec(
            R"({"family":"anova","alpha":2,"weights":{"kind":"constant","g":0.5},"s":3})");
        CHECK(anova.fw.family() == FourierFamily::GaussianAnova);
        CHECK(anova.fw.alpha() == 2.0);
        CHECK(anova.s == 3);
        CHECK(anova.fw.weights().at(2) == 0.5);

        const auto korobov = parse_space_spec(
            R"({"family":"korobov","alpha":1.5,"weights":{"kind":"poly","a":2},"s":1})");
        CHECK(korobov.fw.alpha() == 1.5);

        const auto sobolev = parse_space_spec(
            R"({"family":"sobolev","alpha":3,"weights":{"kind":"geometric","c":0.7},"s":2})");
        CHECK(sobolev.fw.family() == FourierFamily::SobolevVariant);

        const auto expf = parse_space_spec(
            R"({"family":"exponential","omega":0.5,
                "weights":{"kind":"explicit","prefix":[0.9,0.4],"tail":0.1},"s":4})");
        CHECK(expf.fw.omega() == 0.5);
        CHECK(expf.fw.weights().at(9) == doctest::Approx(0.1));
    }
    SUBCASE("round trip is the identity") {
        const std::vector<std::string> docs{
            R"({"family":"anova","alpha":2,"weights":{"kind":"constant","g":0.5},"s":3})",
            R"({"family":"korobov","alpha":1.5,"weights":{"kind":"poly","a":2},"s":1})",
            R"({"family":"exponential","omega":0.25,
                "weights":{"kind":"explicit","prefix":[1.0,0.5],"tail":0},"s":2})",
            R"({"family":"sobolev","alpha":1,"weights":{"kind":"geometric","c":0.9},"s":7})"};
        for (const auto& doc : docs) {
            const auto first = parse_space_spec(doc);
            const auto second = parse_space_spec(space_spec_to_json(first));
            CHECK(first.fw.family() == second.fw.family());
            CHECK(first.fw.alpha() == second.fw.alpha());
            CHECK(first.fw.omega() == second.fw.omega());
            CHECK(first.s == second.s);
            CHECK(first.fw.weights() == second.fw.weights());
        }
    }
    SUBCASE("rejection of malformed documents") {
        // unknown field
        CHECK_THROWS_AS(parse_space_spec(
                            R"({"family":"anova","alpha":2,"extra":1,
                                "weights":{"kind":"constant","g":0.5},"s":3})"),
                        schema_error);
        // missing weights
        CHECK_THROWS_AS(parse_space_spec(R"({"family":"anova","alpha":2,"s":3})"), schema_error);
        // omega on a non-exponential family
        CHECK_THROWS_AS(parse_space_spec(
                            R"({"family":"anova","alpha":2,"omega":0.5,
                                "weights":{"kind":"constant","g":0.5},"s":3})"),
                        schema_error);
        // missing omega on the exponential family
        CHECK_THROWS_AS(parse_space_spec(
                            R"({"family":"exponential",
                                "weights":{"kind":"constant","g":0.5},"s":3})"),
                        schema_error);
        // non-integer alpha where factorials are needed
        CHECK_THROWS_AS(parse_space_spec(
                            R"({"family":"anova","alpha":2.5,
                                "weights":{"kind":"constant","g":0.5},"s":3})"),
                        schema_error);
        // weight parameters of the wrong kind
        CHECK_THROWS_AS(parse_space_spec(
                            R"({"family":"anova","alpha":2,
                                "weights":{"kind":"poly","g":0.5},"s":3})"),
                        schema_error);
        // out-of-range weight parameter
        CHECK_THROWS_AS(parse_space_spec(
                            R"({"family":"anova","alpha":2,
                                "weights":{"kind":"constant","g":1.5},"s":3})"),
                        schema_error);
        // bad dimension
        CHECK_THROWS_AS(parse_space_spec(
                            R"({"family":"anova","alpha":2,
                                "weights":{"kind":"constant","g":0.5},"s":0})"),
                        schema_error);
        CHECK_THROWS_AS(parse_space_spec("not json at all"), schema_error);
        CHECK_THROWS_AS(parse_space_spec("[1,2,3]"), schema_error);
    }
}

TEST_CASE("report serialization") {
    const auto rep = tractability_report(WeightSequence::poly_decay(2.0), 2.0,
                                         FourierFamily::GaussianAnova, InfoClass::All,
                                         ProblemKind::Approximation, SigmaTauRequest{0.5, 1.0});
    const std::string json = report_to_json(rep);
    CHECK(json.find("\"SPT\"") != std::string::npos);
    CHECK(json.find("\"holds\"") != std::string::npos);
    CHECK(json.find("\"sigma\"") != std::string::npos);
    CHECK(json.find("Theorem 2") != std::string::npos);

    WceReport wce;
    wce.wce = 0.5;
    wce.nonneg = true;
    wce.has_lower_bound = true;
    wce.lower_bound = 0.25;
    wce.nodes = 3;
    const std::string wjson = wce_report_to_json(wce);
    CHECK(wjson.find("\"lower_bound\"") != std::string::npos);
    CHECK(wjson.find("\"nonneg\": true") != std::string::npos);
}
