#include "doctest.h"

#include "binomid/catalog.hpp"
#include "binomid/report.hpp"

using namespace binomid;

namespace {

std::vector<VerificationResult> sample_results() {
    const CatalogEntry& e = lookup("knuth");
    SweepRanges r{{"n", {Rational(0), Rational(1), Rational(2), Rational(3)}}};
    auto out = sweep(e.identity, r, {}, 1);
    const CatalogEntry& rv = lookup("rvlh5im");  // produces a Skipped row
    auto extra = sweep(rv.identity,
                       SweepRanges{{"n", {Rational(0), Rational(1)}},
                                   {"v", {Rational(0)}}},
                       {}, 1);
    out.insert(out.end(), extra.begin(), extra.end());
    return out;
}

}  // namespace

TEST_CASE("summary is a partition of the result list") {
    auto results = sample_results();
    Summary s = summarize(results);
    CHECK(s.total == results.size());
    CHECK(s.exact + s.numeric + s.mismatch + s.skipped == s.total);
    CHECK(s.skipped == 1);
    CHECK(s.mismatch == 0);
}

TEST_CASE("embedded summary matches a recomputation from the results") {
    auto results = sample_results();
    nlohmann::json j = report_json({{"command", "test"}}, results, true);
    REQUIRE(j.contains("meta"));
    REQUIRE(j.contains("results"));
    REQUIRE(j.contains("summary"));
    std::size_t exact = 0, numeric = 0, mismatch = 0, skipped = 0;
    for (const auto& r : j["results"]) {
        std::string st = r["status"];
        if (st == "ExactEqual") ++exact;
        if (st == "NumericEqual") ++numeric;
        if (st == "Mismatch") ++mismatch;
        if (st == "Skipped") ++skipped;
    }
    CHECK(j["summary"]["total"] == j["results"].size());
    CHECK(j["summary"]["exact"] == exact);
    CHECK(j["summary"]["numeric"] == numeric);
    CHECK(j["summary"]["mismatch"] == mismatch);
    CHECK(j["summary"]["skipped"] == skipped);
}

TEST_CASE("deterministic reports omit the timestamp") {
    auto results = sample_results();
    nlohmann::json det = report_json({}, results, true);
    nlohmann::json stamped = report_json({}, results, false);
    CHECK(!det["meta"].contains("timestamp"));
    CHECK(stamped["meta"].contains("timestamp"));
    // and two deterministic renderings are byte-identical
    CHECK(report_json({}, results, true).dump() == det.dump());
}

TEST_CASE("markdown output groups rows by identity") {
    auto results = sample_results();
    std::string md = report_markdown(results);
    auto knuth_at = md.find("## knuth");
    auto other_at = md.find("## rvlh5im");
    CHECK(knuth_at != std::string::npos);
    CHECK(other_at != std::string::npos);
    CHECK(knuth_at < other_at);
    CHECK(md.find("outside validity domain") != std::string::npos);
}

TEST_CASE("file io errors are reported") {
    CHECK_THROWS_AS(write_text_file("/nonexistent-dir/x.json", "{}"), IoError);
    CHECK_THROWS_AS(read_text_file("/nonexistent-dir/x.json"), IoError);
}
