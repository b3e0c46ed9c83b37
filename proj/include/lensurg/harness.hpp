#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "lensurg/dinvariant.hpp"
#include "lensurg/families.hpp"
#include "lensurg/globalview.hpp"

namespace lensurg {

struct DecompositionSummary {
    i64 tau = 0;
    i64 gamma_prime = 0;
    i64 n = 0;
    i64 a = 0;
    bool stable = false;

    bool operator==(const DecompositionSummary&) const = default;
};

struct ClassificationRecord {
    i64 p = 0;
    i64 k1 = 0;
    std::array<i64, 4> dual_class{};
    i64 genus = 0;
    std::string delta_digest;
    bool passes_ky = false;
    bool passes_alternating = false;
    bool passes_pos = false;
    std::optional<QuadraticRelation> relation;
    std::optional<DecompositionSummary> decomposition;
    std::vector<FamilyMatch> matches;
    std::vector<std::string> anomalies;

    bool stable() const { return decomposition && decomposition->stable; }
    bool matched() const { return !matches.empty(); }
    bool matched_main() const;
    bool has_anomaly(const std::string& tag) const;

    bool operator==(const ClassificationRecord&) const = default;
};

ClassificationRecord classify(i64 p, i64 k);

struct Filters {
    bool stable = false;
    bool alternating = false;
    bool pos = false;
    bool matched = false;

    bool accepts(const ClassificationRecord& r) const;
};

// Parses a comma-separated list drawn from {stable, alternating, pos, matched}.
Filters parse_filters(const std::string& spec);

// Worker count from LENSURG_THREADS, else the hardware concurrency.
unsigned default_threads();

// Calls `sink` once per dual class with p in [2, p_max], ordered by (p, k1).
// Work is split by p across `threads` workers; the order of calls does not
// depend on the thread count.
void enumerate_stream(i64 p_max, const Filters& filters, unsigned threads,
                      const std::function<void(const ClassificationRecord&)>& sink);
std::vector<ClassificationRecord> enumerate(i64 p_max, const Filters& filters, unsigned threads = 1);

// Minimal dual-class representatives k in [1, p) for one p, ascending.
std::vector<i64> class_minima(i64 p);

struct VerificationReport {
    i64 p_max = 0;
    i64 classes = 0;
    i64 stable = 0;
    i64 tested = 0;  // stable, KY and alternating
    std::vector<ClassificationRecord> exceptions;
    std::vector<ClassificationRecord> v_only;  // matched only by families outside the list, all V+-
    std::map<std::string, i64> type_counts;    // tested classes matched by each listed type
    bool holds() const { return exceptions.empty(); }
};

VerificationReport verify_main_theorem(i64 p_max, unsigned threads = 1);
std::string format_report(const VerificationReport& report);

enum class ExportFormat { JsonLines, Csv };
ExportFormat parse_format(const std::string& name);

nlohmann::json record_to_json(const ClassificationRecord& r);
ClassificationRecord record_from_json(const nlohmann::json& j);

const std::string& csv_header();
std::string record_to_csv(const ClassificationRecord& r);
ClassificationRecord record_from_csv(const std::string& line);

std::string export_records(const std::vector<ClassificationRecord>& records, ExportFormat format);
std::vector<ClassificationRecord> import_records(const std::string& text, ExportFormat format);

// CSV renderings of the reproduced tables, as shipped under data/.
std::string table_csv(const std::string& which, i64 j_max);

}  // namespace lensurg
