#include "lensurg/harness.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

namespace lensurg {

bool ClassificationRecord::matched_main() const {
    return std::any_of(matches.begin(), matches.end(), [](const FamilyMatch& m) { return is_main_theorem_type(m.family); });
}

bool ClassificationRecord::has_anomaly(const std::string& tag) const {
    return std::find(anomalies.begin(), anomalies.end(), tag) != anomalies.end();
}

ClassificationRecord classify(i64 p, i64 k) {
    if (p < 2) throw DomainError("p must be at least 2");
    DualClass dc = dual_class(p, k);
    ClassificationRecord rec;
    rec.p = p;
    rec.k1 = dc.min_rep;
    rec.dual_class = dc.reps;

    SymmetricPoly poly = delta_via_phi(p, rec.k1);
    rec.genus = poly.genus();
    rec.delta_digest = poly_digest(poly);

    Verdict ky = check_ky_form(p, rec.k1, poly);
    rec.passes_ky = ky.pass;
    if (ky.pass && ky.reason == "no-torus-representative") rec.anomalies.push_back("no-torus-representative");
    rec.passes_alternating = check_alternating(poly).pass;
    rec.passes_pos = check_pos(p, rec.k1).pass;
    if (!poly.integral()) rec.anomalies.push_back("non-integral");

    std::optional<TauDecomposition> dec;
    if (rec.k1 == 1) {
        rec.anomalies.push_back("unknot-branch");
    } else {
        QuadraticRelation rel = associated_relation(p, rec.k1);
        dec = tau_decompose(p, rec.k1, rel);
        rec.relation = rel;
        rec.decomposition = DecompositionSummary{dec->tau, dec->gamma_prime, dec->n, dec->a, is_stable(*dec)};
        if (rel.a == 1) rec.anomalies.push_back("a1-branch");
        if (gcd(rel.a, rel.n) != 1) rec.anomalies.push_back("branch-unavailable");
    }

    rec.matches = match_all(p, rec.k1);

    if (poly.integral() && has_a2_point(cyclic_lift(poly, rec.k1))) rec.anomalies.push_back("A2-point");

    bool berge = std::any_of(rec.matches.begin(), rec.matches.end(), [](const FamilyMatch& m) { return is_berge(m.family); });
    bool poincare = std::any_of(rec.matches.begin(), rec.matches.end(), [](const FamilyMatch& m) { return !is_berge(m.family); });
    if (poincare && !berge && !rec.passes_pos) rec.anomalies.push_back("poincare-only-pos-fail");
    if (rec.matched() && rec.stable() && rec.relation) {
        i64 g = gcd(rec.relation->a, rec.relation->n);
        if (g != 1 && g != 2) rec.anomalies.push_back("gcd-violation");
    }
    if (rec.stable() && rec.passes_ky && rec.passes_alternating && !rec.matched_main())
        rec.anomalies.push_back("main-theorem-exception");
    return rec;
}

bool Filters::accepts(const ClassificationRecord& r) const {
    if (stable && !r.stable()) return false;
    if (alternating && !r.passes_alternating) return false;
    if (pos && !r.passes_pos) return false;
    if (matched && !r.matched()) return false;
    return true;
}

Filters parse_filters(const std::string& spec) {
    Filters f;
    std::istringstream is(spec);
    std::string item;
    while (std::getline(is, item, ',')) {
        if (item.empty()) continue;
        if (item == "stable") f.stable = true;
        else if (item == "alternating") f.alternating = true;
        else if (item == "pos") f.pos = true;
        else if (item == "matched") f.matched = true;
        else throw DomainError("unknown filter '" + item + "'");
    }
    return f;
}

unsigned default_threads() {
    if (const char* env = std::getenv("LENSURG_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

std::vector<i64> class_minima(i64 p) {
    std::vector<i64> out;
    for (i64 k = 1; k < p; ++k) {
        if (gcd(k, p) != 1) continue;
        if (dual_class(p, k).min_rep == k) out.push_back(k);
    }
    return out;
}

namespace {

std::vector<ClassificationRecord> classify_all_for(i64 p) {
    std::vector<ClassificationRecord> out;
    for (i64 k : class_minima(p)) out.push_back(classify(p, k));
    return out;
}

}  // namespace

void enumerate_stream(i64 p_max, const Filters& filters, unsigned threads,
                      const std::function<void(const ClassificationRecord&)>& sink) {
    if (p_max < 2) return;
    const std::size_t count = static_cast<std::size_t>(p_max - 1);
    auto emit = [&](const std::vector<ClassificationRecord>& recs) {
        for (const auto& r : recs)
            if (filters.accepts(r)) sink(r);
    };
    if (threads <= 1) {
        for (i64 p = 2; p <= p_max; ++p) emit(classify_all_for(p));
        return;
    }

    std::vector<std::vector<ClassificationRecord>> slots(count);
    std::vector<char> ready(count, 0);
    std::atomic<std::size_t> next{0};
    std::atomic<bool> stop{false};
    std::mutex mu;
    std::condition_variable cv;
    std::exception_ptr failure;

    auto worker = [&] {
        while (!stop.load()) {
            std::size_t idx = next.fetch_add(1);
            if (idx >= count) return;
            try {
                auto recs = classify_all_for(static_cast<i64>(idx) + 2);
                std::lock_guard<std::mutex> lock(mu);
                slots[idx] = std::move(recs);
                ready[idx] = 1;
            } catch (...) {
                std::lock_guard<std::mutex> lock(mu);
                if (!failure) failure = std::current_exception();
                stop.store(true);
            }
            cv.notify_all();
        }
    };

    std::vector<std::thread> pool;
    unsigned n = std::min<unsigned>(threads, static_cast<unsigned>(count));
    pool.reserve(n);
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);

    std::exception_ptr sink_failure;
    for (std::size_t idx = 0; idx < count; ++idx) {
        std::vector<ClassificationRecord> recs;
        {
            std::unique_lock<std::mutex> lock(mu);
            cv.wait(lock, [&] { return ready[idx] || failure; });
            if (failure) break;
            recs = std::move(slots[idx]);
            slots[idx].clear();
        }
        try {
            emit(recs);
        } catch (...) {
            sink_failure = std::current_exception();
            stop.store(true);
            break;
        }
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    if (sink_failure) std::rethrow_exception(sink_failure);
}

std::vector<ClassificationRecord> enumerate(i64 p_max, const Filters& filters, unsigned threads) {
    std::vector<ClassificationRecord> out;
    enumerate_stream(p_max, filters, threads, [&](const ClassificationRecord& r) { out.push_back(r); });
    return out;
}

VerificationReport verify_main_theorem(i64 p_max, unsigned threads) {
    VerificationReport rep;
    rep.p_max = p_max;
    for (Family f : main_theorem_types()) rep.type_counts[std::string(family_name(f))] = 0;
    enumerate_stream(p_max, Filters{}, threads, [&](const ClassificationRecord& r) {
        ++rep.classes;
        if (!r.stable()) return;
        ++rep.stable;
        if (!r.passes_ky || !r.passes_alternating) return;
        ++rep.tested;
        std::set<Family> seen;
        for (const auto& m : r.matches)
            if (is_main_theorem_type(m.family)) seen.insert(m.family);
        for (Family f : seen) ++rep.type_counts[std::string(family_name(f))];
        if (!seen.empty()) return;
        bool has_v = std::any_of(r.matches.begin(), r.matches.end(),
                                 [](const FamilyMatch& m) { return m.family == Family::Vp || m.family == Family::Vm; });
        (has_v ? rep.v_only : rep.exceptions).push_back(r);
    });
    return rep;
}

std::string format_report(const VerificationReport& report) {
    std::ostringstream os;
    os << "p_max " << report.p_max << "\n";
    os << "classes " << report.classes << "\n";
    os << "stable " << report.stable << "\n";
    os << "stable+ky+alternating " << report.tested << "\n";
    os << "type counts:";
    for (auto& [name, n] : report.type_counts) os << " " << name << "=" << n;
    os << "\n";
    os << "V-only " << report.v_only.size() << "\n";
    for (const auto& r : report.v_only) os << "  (" << r.p << "," << r.k1 << ")\n";
    os << "exceptions " << report.exceptions.size() << "\n";
    for (const auto& r : report.exceptions) {
        os << "  (" << r.p << "," << r.k1 << ")";
        if (r.relation) os << " " << to_string(*r.relation);
        os << "\n";
    }
    os << (report.holds() ? "theorem holds on range" : "exceptions found") << "\n";
    return os.str();
}

ExportFormat parse_format(const std::string& name) {
    if (name == "jsonl" || name == "json-lines") return ExportFormat::JsonLines;
    if (name == "csv") return ExportFormat::Csv;
    throw DomainError("unknown export format '" + name + "'");
}

nlohmann::json record_to_json(const ClassificationRecord& r) {
    nlohmann::json j;
    j["p"] = r.p;
    j["k1"] = r.k1;
    j["dual_class"] = r.dual_class;
    j["genus"] = r.genus;
    j["delta_digest"] = r.delta_digest;
    j["passes_ky"] = r.passes_ky;
    j["passes_alternating"] = r.passes_alternating;
    j["passes_pos"] = r.passes_pos;
    if (r.relation)
        j["relation"] = {{"a", r.relation->a}, {"eps1", r.relation->eps1}, {"eps2", r.relation->eps2}, {"n", r.relation->n}};
    else
        j["relation"] = nullptr;
    if (r.decomposition)
        j["decomposition"] = {{"tau", r.decomposition->tau},
                              {"gamma_prime", r.decomposition->gamma_prime},
                              {"n", r.decomposition->n},
                              {"a", r.decomposition->a},
                              {"stable", r.decomposition->stable}};
    else
        j["decomposition"] = nullptr;
    nlohmann::json ms = nlohmann::json::array();
    for (const auto& m : r.matches)
        ms.push_back({{"family", std::string(family_name(m.family))},
                      {"parameter", m.parameter},
                      {"sign", m.sign},
                      {"representative", m.representative}});
    j["matches"] = ms;
    j["anomalies"] = r.anomalies;
    return j;
}

ClassificationRecord record_from_json(const nlohmann::json& j) {
    ClassificationRecord r;
    r.p = j.at("p").get<i64>();
    r.k1 = j.at("k1").get<i64>();
    r.dual_class = j.at("dual_class").get<std::array<i64, 4>>();
    r.genus = j.at("genus").get<i64>();
    r.delta_digest = j.at("delta_digest").get<std::string>();
    r.passes_ky = j.at("passes_ky").get<bool>();
    r.passes_alternating = j.at("passes_alternating").get<bool>();
    r.passes_pos = j.at("passes_pos").get<bool>();
    if (!j.at("relation").is_null()) {
        const auto& x = j.at("relation");
        r.relation = QuadraticRelation{x.at("a").get<i64>(), x.at("eps1").get<int>(), x.at("eps2").get<int>(),
                                       x.at("n").get<i64>()};
    }
    if (!j.at("decomposition").is_null()) {
        const auto& x = j.at("decomposition");
        r.decomposition = DecompositionSummary{x.at("tau").get<i64>(), x.at("gamma_prime").get<i64>(),
                                               x.at("n").get<i64>(), x.at("a").get<i64>(), x.at("stable").get<bool>()};
    }
    for (const auto& m : j.at("matches")) {
        auto fam = family_from_name(m.at("family").get<std::string>());
        if (!fam) throw DomainError("unknown family in record");
        r.matches.push_back({*fam, m.at("parameter").get<i64>(), m.at("sign").get<int>(), m.at("representative").get<i64>()});
    }
    r.anomalies = j.at("anomalies").get<std::vector<std::string>>();
    return r;
}

const std::string& csv_header() {
    static const std::string header =
        "p,k1,dual_class,genus,delta_digest,passes_ky,passes_alternating,passes_pos,"
        "a,eps1,eps2,n,tau,gamma_prime,stable,matches,anomalies";
    return header;
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

std::string record_to_csv(const ClassificationRecord& r) {
    std::ostringstream os;
    os << r.p << "," << r.k1 << ",";
    for (std::size_t i = 0; i < r.dual_class.size(); ++i) os << (i ? ";" : "") << r.dual_class[i];
    os << "," << r.genus << "," << r.delta_digest << "," << r.passes_ky << "," << r.passes_alternating << ","
       << r.passes_pos << ",";
    if (r.relation)
        os << r.relation->a << "," << r.relation->eps1 << "," << r.relation->eps2 << "," << r.relation->n << ",";
    else
        os << ",,,,";
    if (r.decomposition)
        os << r.decomposition->tau << "," << r.decomposition->gamma_prime << "," << r.decomposition->stable << ",";
    else
        os << ",,,";
    for (std::size_t i = 0; i < r.matches.size(); ++i) {
        const auto& m = r.matches[i];
        os << (i ? ";" : "") << family_name(m.family) << ":" << m.parameter << ":" << m.sign << ":" << m.representative;
    }
    os << ",";
    for (std::size_t i = 0; i < r.anomalies.size(); ++i) os << (i ? ";" : "") << r.anomalies[i];
    return os.str();
}

ClassificationRecord record_from_csv(const std::string& line) {
    std::vector<std::string> f = split(line, ',');
    if (f.size() != 17) throw DomainError("expected 17 CSV fields, got " + std::to_string(f.size()));
    ClassificationRecord r;
    r.p = std::stoll(f[0]);
    r.k1 = std::stoll(f[1]);
    auto dc = split(f[2], ';');
    if (dc.size() != 4) throw DomainError("dual_class needs four entries");
    for (std::size_t i = 0; i < 4; ++i) r.dual_class[i] = std::stoll(dc[i]);
    r.genus = std::stoll(f[3]);
    r.delta_digest = f[4];
    r.passes_ky = f[5] == "1";
    r.passes_alternating = f[6] == "1";
    r.passes_pos = f[7] == "1";
    if (!f[8].empty())
        r.relation = QuadraticRelation{std::stoll(f[8]), std::stoi(f[9]), std::stoi(f[10]), std::stoll(f[11])};
    if (!f[12].empty()) {
        if (!r.relation) throw DomainError("decomposition without relation");
        r.decomposition = DecompositionSummary{std::stoll(f[12]), std::stoll(f[13]), r.relation->n, r.relation->a, f[14] == "1"};
    }
    if (!f[15].empty()) {
        for (const auto& item : split(f[15], ';')) {
            auto parts = split(item, ':');
            if (parts.size() != 4) throw DomainError("bad match entry '" + item + "'");
            auto fam = family_from_name(parts[0]);
            if (!fam) throw DomainError("unknown family '" + parts[0] + "'");
            r.matches.push_back({*fam, std::stoll(parts[1]), std::stoi(parts[2]), std::stoll(parts[3])});
        }
    }
    if (!f[16].empty()) r.anomalies = split(f[16], ';');
    return r;
}

std::string export_records(const std::vector<ClassificationRecord>& records, ExportFormat format) {
    std::ostringstream os;
    if (format == ExportFormat::Csv) os << csv_header() << "\n";
    for (const auto& r : records) {
        if (format == ExportFormat::Csv) os << record_to_csv(r) << "\n";
        else os << record_to_json(r).dump() << "\n";
    }
    return os.str();
}

std::vector<ClassificationRecord> import_records(const std::string& text, ExportFormat format) {
    std::vector<ClassificationRecord> out;
    std::istringstream is(text);
    std::string line;
    bool first = true;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (format == ExportFormat::Csv) {
            if (first) {
                first = false;
                if (line != csv_header()) throw DomainError("unexpected CSV header");
                continue;
            }
            out.push_back(record_from_csv(line));
        } else {
            out.push_back(record_from_json(nlohmann::json::parse(line)));
        }
    }
    return out;
}

namespace {

bool recovers(const GeneratedPair& g) {
    bool signed_family = g.family == Family::I || g.family == Family::II || g.family == Family::VII ||
                         g.family == Family::VIII;
    for (const auto& m : match_all(g.p, g.k)) {
        if (m.family != g.family || m.parameter != g.parameter) continue;
        if (signed_family && m.sign != g.sign) continue;
        return true;
    }
    return false;
}

std::string family_rows(bool berge, i64 j_max) {
    std::ostringstream os;
    os << "family,J,sign,p,k,k1,recovered\n";
    for (Family f : kAllFamilies) {
        if (is_berge(f) != berge) continue;
        for (i64 J = -j_max; J <= j_max; ++J)
            for (const auto& g : generate_family(f, J))
                os << family_name(f) << "," << J << "," << g.sign << "," << g.p << "," << g.k << ","
                   << dual_class(g.p, g.k).min_rep << "," << (recovers(g) ? "yes" : "no") << "\n";
    }
    return os.str();
}

std::string relation_cell(const QuadraticRelation& r, bool either) {
    std::ostringstream os;
    os << r.a << "k^2" << (either ? "+-" : (r.eps1 > 0 ? "+" : "-")) << "k" << (r.eps2 > 0 ? "+" : "-") << "1";
    return os.str();
}

}  // namespace

std::string table_csv(const std::string& which, i64 j_max) {
    if (which == "berge") return family_rows(true, j_max);
    if (which == "poincare") return family_rows(false, j_max);
    std::ostringstream os;
    if (which == "assoc") {
        os << "family,J,p,k1,a,eps1,eps2,n,tau,expected,expected_n,status\n";
        std::vector<Family> fams = assoc_sampled_families();
        for (Family f : assoc_reported_families()) fams.push_back(f);
        for (Family f : fams)
            for (const auto& row : reproduce_assoc_table(f, -j_max, j_max))
                os << family_name(f) << "," << row.J << "," << row.p << "," << row.k1 << "," << row.computed.a << ","
                   << row.computed.eps1 << "," << row.computed.eps2 << "," << row.computed.n << "," << row.tau << ","
                   << relation_cell(row.expected, row.either_eps1) << "," << row.expected.n << ","
                   << (row.matches ? "ok" : "mismatch") << "\n";
        return os.str();
    }
    if (which == "tau1") {
        os << "p,k1,types,a,eps1,eps2,n,tau,relation_ok,tau_ok,types_ok\n";
        for (const auto& row : reproduce_tau1_table())
            os << row.p << "," << row.k1 << "," << row.listed_types << "," << row.computed.a << "," << row.computed.eps1
               << "," << row.computed.eps2 << "," << row.computed.n << "," << row.tau << ","
               << (row.relation_ok ? "yes" : "no") << "," << (row.tau_ok ? "yes" : "no") << ","
               << (row.types_ok ? "yes" : "no") << "\n";
        return os.str();
    }
    throw DomainError("unknown table '" + which + "'");
}

}  // namespace lensurg
