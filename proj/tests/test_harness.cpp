#include <cstdlib>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "lensurg/harness.hpp"

using namespace lensurg;

TEST_CASE("classification record of (22,5)") {
    ClassificationRecord r = classify(22, 17);
    CHECK(r.k1 == 5);
    CHECK(r.genus == 11);
    CHECK(r.passes_ky);
    CHECK(r.passes_alternating);
    CHECK_FALSE(r.passes_pos);
    CHECK(r.has_anomaly("A2-point"));
    CHECK(r.has_anomaly("poincare-only-pos-fail"));
    CHECK(r.stable());
    CHECK(r.relation == QuadraticRelation{2, -1, -1, 2});
}

TEST_CASE("unknot and small moduli") {
    ClassificationRecord r = classify(5, 1);
    CHECK(r.has_anomaly("unknot-branch"));
    CHECK_FALSE(r.relation.has_value());
    CHECK(classify(2, 1).k1 == 1);
    CHECK_THROWS_AS(classify(1, 0), DomainError);
    CHECK_THROWS_AS(classify(10, 4), DomainError);
}

TEST_CASE("enumeration covers every class once") {
    auto records = enumerate(60, Filters{}, 1);
    i64 expected = 0;
    for (i64 p = 2; p <= 60; ++p) expected += static_cast<i64>(class_minima(p).size());
    CHECK(static_cast<i64>(records.size()) == expected);
    for (std::size_t i = 1; i < records.size(); ++i) {
        const auto& a = records[i - 1];
        const auto& b = records[i];
        CHECK((a.p < b.p || (a.p == b.p && a.k1 < b.k1)));
    }
}

TEST_CASE("output does not depend on the worker count") {
    Filters f = parse_filters("stable,alternating");
    std::string one = export_records(enumerate(150, f, 1), ExportFormat::JsonLines);
    std::string four = export_records(enumerate(150, f, 4), ExportFormat::JsonLines);
    CHECK(one == four);
    CHECK_THROWS_AS(parse_filters("stable,bogus"), DomainError);
}

TEST_CASE("exports round trip") {
    auto records = enumerate(80, Filters{}, 2);
    for (ExportFormat fmt : {ExportFormat::JsonLines, ExportFormat::Csv}) {
        std::string text = export_records(records, fmt);
        CHECK(import_records(text, fmt) == records);
        CHECK(export_records(import_records(text, fmt), fmt) == text);
    }
    CHECK(csv_header() ==
          "p,k1,dual_class,genus,delta_digest,passes_ky,passes_alternating,passes_pos,a,eps1,eps2,n,tau,gamma_prime,"
          "stable,matches,anomalies");
    CHECK_THROWS_AS(parse_format("xml"), DomainError);
    CHECK(parse_format("json-lines") == ExportFormat::JsonLines);
}

TEST_CASE("JSON record fields") {
    nlohmann::json j = record_to_json(classify(43, 12));
    for (const char* key : {"p", "k1", "dual_class", "genus", "delta_digest", "passes_ky", "passes_alternating",
                            "passes_pos", "relation", "decomposition", "matches", "anomalies"})
        CHECK_MESSAGE(j.contains(key), key);
    CHECK(record_from_json(j) == classify(43, 12));
}

TEST_CASE("verification report on a small range") {
    VerificationReport rep = verify_main_theorem(200, 2);
    CHECK(rep.holds());
    CHECK(rep.v_only.empty());
    CHECK(rep.tested > 0);
    CHECK(format_report(rep).find("theorem holds on range") != std::string::npos);
    CHECK(verify_main_theorem(2, 1).holds());
}

TEST_CASE("shipped tables match a fresh rendering") {
    for (const char* which : {"berge", "poincare", "assoc", "tau1"}) {
        std::ifstream in(std::string(LENSURG_DATA_DIR) + "/" + which + ".csv");
        REQUIRE(in);
        std::stringstream ss;
        ss << in.rdbuf();
        CHECK_MESSAGE(ss.str() == table_csv(which, 5), which);
    }
    CHECK_THROWS_AS(table_csv("nope", 5), DomainError);
}

TEST_CASE("worker count from the environment") {
    setenv("LENSURG_THREADS", "3", 1);
    CHECK(default_threads() == 3);
    setenv("LENSURG_THREADS", "zero", 1);
    CHECK(default_threads() >= 1);
    unsetenv("LENSURG_THREADS");
}
