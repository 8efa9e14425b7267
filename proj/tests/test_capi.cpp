#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "json.hpp"
#include "selfdualcyclic.h"

namespace {

std::string take(char* s) {
    REQUIRE(s != nullptr);
    std::string out(s);
    sdc_free_string(s);
    return out;
}

struct Sys {
    sdc_system* h = nullptr;
    Sys(uint32_t m, uint32_t n, uint32_t s, uint64_t mod = 0) {
        REQUIRE(sdc_system_open(m, n, s, mod, &h) == SDC_OK);
    }
    ~Sys() { sdc_system_close(h); }
};

}  // namespace

TEST_CASE("open errors map to status codes") {
    sdc_system* h = nullptr;
    CHECK(sdc_system_open(0, 3, 2, 0, &h) == SDC_ERR_UNSUPPORTED_DEGREE);
    CHECK(sdc_system_open(17, 3, 2, 0, &h) == SDC_ERR_UNSUPPORTED_DEGREE);
    CHECK(sdc_system_open(1, 6, 2, 0, &h) == SDC_ERR_EVEN_LENGTH);
    CHECK(sdc_system_open(1, 3, 0, 0, &h) == SDC_ERR_BAD_ARGUMENT);
    CHECK(sdc_system_open(3, 3, 2, 0b1010, &h) == SDC_ERR_BAD_ARGUMENT);
    CHECK(sdc_system_open(3, 3, 2, 0b1111, &h) == SDC_ERR_MODULUS_NOT_IRREDUCIBLE);
    CHECK(std::string(sdc_last_error()).find("ModulusNotIrreducible") != std::string::npos);
    CHECK(std::string(sdc_status_name(SDC_ERR_COUNT_MISMATCH)) == "CountMismatch");
}

TEST_CASE("factor report JSON matches the documented shape") {
    Sys sys(1, 3, 3);
    char* out = nullptr;
    REQUIRE(sdc_factor_json(sys.h, &out) == SDC_OK);
    auto j = nlohmann::json::parse(take(out));
    CHECK(j["m"] == 1);
    CHECK(j["n"] == 3);
    CHECK(j["s"] == 3);
    CHECK(j["rho"] == 2);
    CHECK(j["epsilon"] == 0);
    REQUIRE(j["factors"].size() == 2);
    CHECK(j["factors"][0]["poly"] == "1+x");
    CHECK(j["factors"][1]["poly"] == "1+x+x^2");
    CHECK(j["idempotents"][0] == "1+x^8+x^16");
    CHECK(j["idempotents"][1] == "x^8+x^16");
}

TEST_CASE("count modes and mismatch handling") {
    Sys sys(1, 3, 3);
    char* out = nullptr;
    REQUIRE(sdc_count_decimal(sys.h, SDC_COUNT_CLOSED_FORM, &out) == SDC_OK);
    CHECK(take(out) == "589");
    REQUIRE(sdc_count_decimal(sys.h, SDC_COUNT_ENUMERATE, &out) == SDC_OK);
    CHECK(take(out) == "589");
    REQUIRE(sdc_count_decimal(sys.h, SDC_COUNT_BOTH, &out) == SDC_OK);
    CHECK(take(out) == "589");
    CHECK(sdc_count_decimal(sys.h, 99, &out) == SDC_ERR_BAD_ARGUMENT);

    Sys s1(1, 3, 1);
    CHECK(sdc_count_decimal(s1.h, SDC_COUNT_CLOSED_FORM, &out) ==
          SDC_ERR_CLOSED_FORM_UNAVAILABLE);
    REQUIRE(sdc_count_decimal(s1.h, SDC_COUNT_ENUMERATE, &out) == SDC_OK);
    CHECK(take(out) == "9");

    REQUIRE(sdc_total_decimal(sys.h, &out) == SDC_OK);
    CHECK(take(out) == "589");
}

TEST_CASE("omega endpoints") {
    Sys sys(1, 3, 3);
    char* out = nullptr;
    REQUIRE(sdc_omega_text(sys.h, 2, 1, &out) == SDC_OK);
    const std::string text = take(out);
    CHECK(text.find("{0, 1+x}") != std::string::npos);
    REQUIRE(sdc_omega_json(sys.h, 2, 4, &out) == SDC_OK);
    auto j = nlohmann::json::parse(take(out));
    CHECK(j["cardinality"] == 16);
    CHECK(j["elements"].size() == 16);
    CHECK(j["elements"][0]["digits"].size() == 4);

    CHECK(sdc_omega_text(sys.h, 1, 1, &out) == SDC_ERR_NOT_SELF_RECIPROCAL);
    CHECK(sdc_omega_text(sys.h, 2, 5, &out) == SDC_ERR_BAD_ARGUMENT);
    CHECK(sdc_omega_text(sys.h, 3, 1, &out) == SDC_ERR_NOT_SELF_RECIPROCAL);
}

TEST_CASE("stream: full pass, resumption, and partition concatenation") {
    Sys sys(1, 3, 2);
    auto collect = [&](uint64_t start, uint64_t limit) {
        std::vector<std::string> lines;
        sdc_stream* st = nullptr;
        REQUIRE(sdc_stream_open(sys.h, start, &st) == SDC_OK);
        char* out = nullptr;
        while (lines.size() < limit) {
            const sdc_status rc = sdc_stream_next_json(st, &out);
            if (rc == SDC_ERR_END_OF_STREAM) break;
            REQUIRE(rc == SDC_OK);
            lines.push_back(take(out));
        }
        sdc_stream_close(st);
        return lines;
    };
    auto all = collect(0, UINT64_MAX);
    REQUIRE(all.size() == 49);
    // indices are stable and self-describing
    for (std::size_t i = 0; i < all.size(); ++i) {
        auto j = nlohmann::json::parse(all[i]);
        CHECK(j["index"] == i);
        CHECK(j["choices"].size() == 2);
        CHECK(j["generators"].size() >= 1);
    }
    // concatenation over a partition equals the full stream
    auto part1 = collect(0, 20), part2 = collect(20, 15), part3 = collect(35, UINT64_MAX);
    std::vector<std::string> glued;
    for (auto* part : {&part1, &part2, &part3})
        glued.insert(glued.end(), part->begin(), part->end());
    CHECK(glued == all);
    // byte-identical across runs
    CHECK(collect(0, UINT64_MAX) == all);

    sdc_stream* st = nullptr;
    CHECK(sdc_stream_open(sys.h, 50, &st) == SDC_ERR_INDEX_OUT_OF_RANGE);
}

TEST_CASE("verify endpoint") {
    Sys sys(1, 3, 2);
    char* out = nullptr;
    REQUIRE(sdc_verify_json(sys.h, -1, 2, &out) == SDC_OK);
    auto rep = nlohmann::json::parse(take(out));
    CHECK(rep["total"] == "49");
    CHECK(rep["checked"] == 49);
    CHECK(rep["confirmed"] == 49);
    CHECK(rep["failures"].empty());

    REQUIRE(sdc_verify_json(sys.h, 10, 1, &out) == SDC_OK);
    auto sampled = nlohmann::json::parse(take(out));
    CHECK(sampled["checked"] == 10);
    CHECK(sampled["confirmed"] == 10);
}

TEST_CASE("gray and weights endpoints") {
    Sys sys(1, 3, 2);
    char* out = nullptr;
    REQUIRE(sdc_gray_text(sys.h, 0, &out) == SDC_OK);
    const std::string matrix = take(out);
    // 12 rows of 24 binary symbols
    std::size_t rows = 0, pos = 0;
    while ((pos = matrix.find('\n', pos)) != std::string::npos) {
        ++rows;
        ++pos;
    }
    CHECK(rows == 12);
    CHECK(matrix.find('\n') == 24);

    REQUIRE(sdc_weights_json(sys.h, 0, 24, &out) == SDC_OK);
    auto rep = nlohmann::json::parse(take(out));
    CHECK(rep["matches_gray_hamming"] == true);
    std::uint64_t sum = 0;
    for (auto& [k, v] : rep["lee_histogram"].items()) sum += v.get<std::uint64_t>();
    CHECK(sum == 4096);

    CHECK(sdc_weights_json(sys.h, 0, 4, &out) == SDC_ERR_TOO_LARGE);
    CHECK(sdc_gray_text(sys.h, 49, &out) == SDC_ERR_INDEX_OUT_OF_RANGE);
}

TEST_CASE("deterministic reports across calls") {
    Sys a(2, 3, 2), b(2, 3, 2);
    char* out = nullptr;
    REQUIRE(sdc_factor_json(a.h, &out) == SDC_OK);
    const std::string fa = take(out);
    REQUIRE(sdc_factor_json(b.h, &out) == SDC_OK);
    CHECK(fa == take(out));
    REQUIRE(sdc_verify_json(a.h, 25, 3, &out) == SDC_OK);
    const std::string va = take(out);
    REQUIRE(sdc_verify_json(b.h, 25, 1, &out) == SDC_OK);
    CHECK(va == take(out));  // thread count never changes the bytes
}
