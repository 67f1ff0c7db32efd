#include <doctest.h>

#include "selberg/record.hpp"

using namespace selberg;

TEST_CASE("record fields and checks") {
    MomentRequest req{1, rat(1), rat(2), rat(2), 2};
    OutputRecord rec = make_output_record(moment_polynomial(req));
    REQUIRE(rec.coeffs.size() == 3);  // n*mu + 1
    CHECK(rec.coeffs[0] == rat(3, 10));
    CHECK(rec.coeffs[1] == rat(-1));
    CHECK(rec.coeffs[2] == rat(1));
    CHECK(rec.endpoint0_ok);
    CHECK(rec.endpoint1_ok);
    CHECK(rec.monic_ok);
}

TEST_CASE("json round trip is byte identical") {
    MomentRequest req{2, rat(3, 2), rat(5, 2), rat(2), 2};
    OutputRecord rec = make_output_record(moment_polynomial(req));
    std::string first = to_json(rec);
    OutputRecord parsed = record_from_json(first);
    std::string second = to_json(parsed);
    CHECK(first == second);
    CHECK(parsed.coeffs == rec.coeffs);
    CHECK(parsed.tau == rec.tau);
}

TEST_CASE("json shape") {
    MomentRequest req{1, rat(1), rat(1), rat(1), 1};
    OutputRecord rec = make_output_record(moment_polynomial(req));
    std::string text = to_json(rec);
    CHECK(text.find("\"n\":1") != std::string::npos);
    CHECK(text.find("\"tau\":\"1/1\"") != std::string::npos);
    CHECK(text.find("\"num\":\"-1\",\"den\":\"2\"") != std::string::npos);
    CHECK(text.find("\"monic\":\"pass\"") != std::string::npos);
    // last coefficient is 1/1
    CHECK(text.rfind("{\"num\":\"1\",\"den\":\"1\"}") != std::string::npos);
}

TEST_CASE("plain format lines") {
    MomentRequest req{1, rat(1), rat(1), rat(1), 1};
    OutputRecord rec = make_output_record(moment_polynomial(req));
    CHECK(to_plain(rec) == "0 -1/2\n1 1/1\n");
}
