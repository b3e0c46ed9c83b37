// Command line front end: classify, enumerate, verify, tables, grid.
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "lensurg/harness.hpp"

using namespace lensurg;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFindings = 2;

void print_record(const ClassificationRecord& r, std::ostream& os) {
    os << "(p, k1)        = (" << r.p << ", " << r.k1 << ")\n";
    os << "dual class     = {" << r.dual_class[0] << ", " << r.dual_class[1] << ", " << r.dual_class[2] << ", "
       << r.dual_class[3] << "}\n";
    os << "genus          = " << r.genus << "\n";
    os << "delta digest   = " << r.delta_digest << "\n";
    os << "ky form        = " << (r.passes_ky ? "pass" : "fail") << "\n";
    os << "alternating    = " << (r.passes_alternating ? "pass" : "fail") << "\n";
    os << "torsion t_i>=0 = " << (r.passes_pos ? "pass" : "fail") << "\n";
    if (r.relation) os << "relation       = " << to_string(*r.relation) << "\n";
    if (r.decomposition)
        os << "decomposition  = tau " << r.decomposition->tau << ", gamma' " << r.decomposition->gamma_prime
           << (r.decomposition->stable ? ", stable" : ", not stable") << "\n";
    os << "matches        =";
    for (const auto& m : r.matches) os << " " << to_string(m);
    os << "\n";
    os << "anomalies      =";
    for (const auto& a : r.anomalies) os << " " << a;
    os << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lens space surgery data: Alexander polynomial obstructions and family classification"};
    app.require_subcommand(1);

    i64 cp = 0, ck = 0;
    bool as_json = false;
    auto* classify_cmd = app.add_subcommand("classify", "Classify one pair (p, k)");
    classify_cmd->add_option("p", cp, "modulus")->required();
    classify_cmd->add_option("k", ck, "residue coprime to p")->required();
    classify_cmd->add_flag("--json", as_json, "emit one JSON object");

    i64 pmax = 0;
    std::string filter_spec, format_name = "jsonl", out_path;
    auto* enum_cmd = app.add_subcommand("enumerate", "Classify every dual class with p <= pmax");
    enum_cmd->add_option("--pmax", pmax, "largest modulus")->required()->check(CLI::Range(2, 10000000));
    enum_cmd->add_option("--filter", filter_spec, "comma list of stable,alternating,pos,matched");
    enum_cmd->add_option("--format", format_name, "csv or jsonl")->check(CLI::IsMember({"csv", "jsonl"}));
    enum_cmd->add_option("--out", out_path, "output file (default stdout)");

    i64 vmax = 0;
    auto* verify_cmd = app.add_subcommand("verify", "Check the classification theorem on p <= pmax");
    verify_cmd->add_option("--pmax", vmax, "largest modulus")->required()->check(CLI::Range(2, 10000000));

    std::string which;
    i64 jmax = 5;
    auto* tables_cmd = app.add_subcommand("tables", "Re-derive a reference table as CSV");
    tables_cmd->add_option("--which", which, "berge, poincare, assoc or tau1")
        ->required()
        ->check(CLI::IsMember({"berge", "poincare", "assoc", "tau1"}));
    tables_cmd->add_option("--jmax", jmax, "largest |J|")->check(CLI::Range(1, 1000));

    i64 gp = 0, gk = 0, imax = 0, jlo = 0, jhi = 0;
    bool ascii = false, csv = false;
    auto* grid_cmd = app.add_subcommand("grid", "Print A(i + j k1) on a window of the i-j plane");
    grid_cmd->add_option("p", gp, "modulus")->required();
    grid_cmd->add_option("k", gk, "residue coprime to p")->required();
    grid_cmd->add_option("--imax", imax, "largest i")->required()->check(CLI::NonNegativeNumber);
    grid_cmd->add_option("--jmin", jlo, "smallest j")->required();
    grid_cmd->add_option("--jmax", jhi, "largest j")->required();
    auto* ascii_flag = grid_cmd->add_flag("--ascii", ascii, "signs as + - 0 (default)");
    grid_cmd->add_flag("--csv", csv, "comma separated values")->excludes(ascii_flag);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*classify_cmd) {
            ClassificationRecord r = classify(cp, ck);
            if (as_json) std::cout << record_to_json(r).dump() << "\n";
            else print_record(r, std::cout);
            return kExitOk;
        }
        if (*enum_cmd) {
            Filters filters = parse_filters(filter_spec);
            ExportFormat format = parse_format(format_name);
            std::unique_ptr<std::ofstream> file;
            std::ostream* os = &std::cout;
            if (!out_path.empty()) {
                file = std::make_unique<std::ofstream>(out_path);
                if (!*file) {
                    std::cerr << "cannot open " << out_path << "\n";
                    return kExitUsage;
                }
                os = file.get();
            }
            if (format == ExportFormat::Csv) *os << csv_header() << "\n";
            enumerate_stream(pmax, filters, default_threads(), [&](const ClassificationRecord& r) {
                if (format == ExportFormat::Csv) *os << record_to_csv(r) << "\n";
                else *os << record_to_json(r).dump() << "\n";
            });
            os->flush();
            return kExitOk;
        }
        if (*verify_cmd) {
            VerificationReport report = verify_main_theorem(vmax, default_threads());
            std::cout << format_report(report);
            return report.holds() ? kExitOk : kExitFindings;
        }
        if (*tables_cmd) {
            std::string text = table_csv(which, jmax);
            std::cout << text;
            bool clean = text.find(",mismatch") == std::string::npos && text.find(",no\n") == std::string::npos &&
                         text.find(",no,") == std::string::npos;
            return clean ? kExitOk : kExitFindings;
        }
        if (*grid_cmd) {
            if (jhi < jlo) {
                std::cerr << "--jmax must be at least --jmin\n";
                return kExitUsage;
            }
            DualClass dc = dual_class(gp, gk);
            TauDecomposition dec = view_decomposition(gp, dc.min_rep);
            SymmetricPoly poly = delta_via_phi(gp, dc.min_rep);
            CyclicCoeffs cc = cyclic_lift(poly, dc.min_rep);
            Grid g = grid(cc, dec, imax, jlo, jhi);
            std::cout << (csv ? g.csv() : g.ascii());
            return kExitOk;
        }
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
