#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lensurg/harness.hpp"

namespace py = pybind11;
using namespace lensurg;

namespace {

nlohmann::json decomposition_json(const TauDecomposition& d) {
    return {{"p", d.p},         {"k1", d.k1},   {"a", d.a},       {"eps1", d.eps1},
            {"eps2", d.eps2},   {"n", d.n},     {"X", to_string(d.X)}, {"tau", d.tau},
            {"gamma", d.gamma}, {"gamma_prime", d.gamma_prime}, {"k2", d.k2},
            {"q1", d.q1},       {"q2", d.q2},   {"stable", is_stable(d)}};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Lens space surgery classification core";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

    m.def("dual_class", [](i64 p, i64 k) { return dual_class(p, k).reps; }, py::arg("p"), py::arg("k"));
    m.def("_delta_json", [](i64 p, i64 k) { return poly_to_json(delta_via_phi(p, k)).dump(); });
    m.def("_delta_torus_json", [](i64 p, i64 k) { return poly_to_json(delta_via_torus(p, k)).dump(); });
    m.def("check_alternating", [](i64 p, i64 k) { return check_alternating(delta_via_phi(p, k)).pass; });
    m.def("check_pos", [](i64 p, i64 k) { return check_pos(p, k).pass; });
    m.def("genus", &genus);
    m.def("torsion_sequence", [](i64 p, i64 k) {
        TorsionSequence t = torsion_sequence(p, k);
        std::vector<std::pair<i64, i64>> out;
        for (const Rational& v : t.values) out.emplace_back(v.numerator(), v.denominator());
        return out;
    });
    m.def("d_lens", [](i64 p, i64 q, i64 i) {
        Rational v = d_lens(p, q, i);
        return std::make_pair(v.numerator(), v.denominator());
    });
    m.def("associated_relation", [](i64 p, i64 k1) {
        QuadraticRelation r = associated_relation(p, k1);
        return py::make_tuple(r.a, r.eps1, r.eps2, r.n);
    });
    m.def("_decompose_json", [](i64 p, i64 k1) {
        return decomposition_json(tau_decompose(p, k1, associated_relation(p, k1))).dump();
    });
    m.def("underline_involution", [](i64 p, i64 k1) {
        return underline_involution(tau_decompose(p, k1, associated_relation(p, k1)));
    });
    m.def("match_all", [](i64 p, i64 k) {
        std::vector<std::string> out;
        for (const auto& x : match_all(p, k)) out.push_back(to_string(x));
        return out;
    });
    m.def("_classify_json", [](i64 p, i64 k) { return record_to_json(classify(p, k)).dump(); });
    m.def(
        "_enumerate_jsonl",
        [](i64 p_max, const std::string& filters, unsigned threads) {
            py::gil_scoped_release release;
            return export_records(enumerate(p_max, parse_filters(filters), threads == 0 ? default_threads() : threads),
                                  ExportFormat::JsonLines);
        },
        py::arg("p_max"), py::arg("filters") = "", py::arg("threads") = 0);
    m.def(
        "verify",
        [](i64 p_max, unsigned threads) {
            VerificationReport rep;
            {
                py::gil_scoped_release release;
                rep = verify_main_theorem(p_max, threads == 0 ? default_threads() : threads);
            }
            py::dict out;
            out["p_max"] = rep.p_max;
            out["classes"] = rep.classes;
            out["stable"] = rep.stable;
            out["tested"] = rep.tested;
            std::vector<std::pair<i64, i64>> exc, vonly;
            for (const auto& r : rep.exceptions) exc.emplace_back(r.p, r.k1);
            for (const auto& r : rep.v_only) vonly.emplace_back(r.p, r.k1);
            out["exceptions"] = exc;
            out["v_only"] = vonly;
            out["type_counts"] = rep.type_counts;
            out["holds"] = rep.holds();
            return out;
        },
        py::arg("p_max"), py::arg("threads") = 0);
    m.def("table_csv", &table_csv, py::arg("which"), py::arg("j_max") = 5);
    m.def("grid_ascii", [](i64 p, i64 k, i64 imax, i64 jmin, i64 jmax) {
        DualClass dc = dual_class(p, k);
        TauDecomposition dec = view_decomposition(p, dc.min_rep);
        CyclicCoeffs cc = cyclic_lift(delta_via_phi(p, dc.min_rep), dc.min_rep);
        return grid(cc, dec, imax, jmin, jmax).ascii();
    });
}
