#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "superschur/chars.hpp"
#include "superschur/schuralg.hpp"
#include "superschur/schurfun.hpp"
#include "superschur/shapes.hpp"
#include "superschur/supercore.hpp"
#include "superschur/verify.hpp"

namespace py = pybind11;

using exactalg::Field;
using shapes::Partition;
using shapes::SkewShape;
using supercore::SuperBasis;

namespace {

Field make_field(int p) { return p == 0 ? Field::Q() : Field::Fp(p); }

py::dict poly_dict(const chars::MultiPoly& p) {
    py::dict out;
    for (const auto& [e, c] : p.terms) out[py::tuple(py::cast(e))] = c;
    return out;
}

}  // namespace

PYBIND11_MODULE(_superschur, m) {
    m.doc() = "exact Schur superfunctor computations";

    // --- module dimensions and bases ---------------------------------------
    m.def(
        "schur_dim",
        [](const Partition& lambda, const Partition& mu, int ev, int od) {
            return schurfun::schur_complex_dim({lambda, mu}, ev, od);
        },
        py::arg("lambda_"), py::arg("mu"), py::arg("m"), py::arg("n"),
        "dimension of the Schur supermodule of a skew shape over k^{m|n}");

    m.def(
        "dim_triple",
        [](const Partition& lambda, const Partition& mu, int ev, int od, int p) {
            SkewShape sh{lambda, mu};
            Field f = make_field(p);
            SuperBasis b = SuperBasis::standard(ev, od);
            auto T = schurfun::build_theta_hat(shapes::conjugate(sh), b);
            size_t rank = schurfun::rank_of(T.matrix, f);
            size_t cost = shapes::enumerate(sh, b, shapes::Pred::Costandard).size();
            size_t dia = schurfun::rank_of(schurfun::build_diamond(sh, b), f);
            return std::make_tuple(T.matrix.col_labels.size() - dia, rank, cost);
        },
        py::arg("lambda_"), py::arg("mu"), py::arg("m"), py::arg("n"), py::arg("p") = 0,
        "(domain minus relations, defining-map rank, costandard count)");

    m.def(
        "basis_labels",
        [](const Partition& lambda, const Partition& mu, int ev, int od) {
            auto sb = schurfun::schur_basis({lambda, mu}, SuperBasis::standard(ev, od));
            std::vector<std::string> out;
            for (const auto& t : sb.tableaux) out.push_back(shapes::tableau_label(t));
            return out;
        },
        py::arg("lambda_"), py::arg("mu"), py::arg("m"), py::arg("n"),
        "tableau labels of the module basis");

    // --- superalgebra -------------------------------------------------------
    m.def(
        "algebra_basis",
        [](int ev, int od, int d) {
            std::vector<std::string> out;
            for (const auto& r : schuralg::s_basis(ev, od, d))
                out.push_back(schuralg::pair_label(r.i, r.j));
            return out;
        },
        py::arg("m"), py::arg("n"), py::arg("d"),
        "labels of the canonical basis of the degree-d Schur superalgebra");

    m.def(
        "algebra_mult",
        [](int ev, int od, const std::string& a, const std::string& b) {
            SuperBasis sp = SuperBasis::standard(ev, od);
            auto ra = schuralg::parse_pair_label(a);
            auto rb = schuralg::parse_pair_label(b);
            return schuralg::s_mult(sp, ra, rb);
        },
        py::arg("m"), py::arg("n"), py::arg("a"), py::arg("b"),
        "structure constants of the product of two basis elements");

    m.def(
        "act_tensor",
        [](int ev, int od, const std::string& a, const std::vector<int>& word, bool twisted) {
            SuperBasis sp = SuperBasis::standard(ev, od);
            return schuralg::act_tensor(sp, schuralg::parse_pair_label(a), word, twisted);
        },
        py::arg("m"), py::arg("n"), py::arg("a"), py::arg("word"), py::arg("twisted") = false,
        "action of a basis element on a tensor word");

    // --- characters ---------------------------------------------------------
    m.def(
        "module_character",
        [](const Partition& lambda, int ev, int od) {
            return poly_dict(chars::module_character(lambda, ev, od));
        },
        py::arg("lambda_"), py::arg("m"), py::arg("n"));
    m.def(
        "hook_schur",
        [](const Partition& lambda, int ev, int od) {
            return poly_dict(chars::hook_schur(lambda, ev, od));
        },
        py::arg("lambda_"), py::arg("m"), py::arg("n"));
    m.def(
        "schur_poly",
        [](const Partition& lambda, int ev) { return poly_dict(chars::schur_poly(lambda, ev)); },
        py::arg("lambda_"), py::arg("m"));
    m.def(
        "hall_littlewood",
        [](const Partition& lambda, int nn) {
            return poly_dict(chars::hall_littlewood(lambda, nn));
        },
        py::arg("lambda_"), py::arg("n"));
    m.def("verify_char_type1", &chars::verify_char_typeI, py::arg("lambda_"), py::arg("m"),
          py::arg("n"));
    m.def("verify_char_type2", &chars::verify_char_typeII, py::arg("lambda_"), py::arg("n"));

    // --- verification suites -------------------------------------------------
    m.def(
        "run_suite",
        [](const std::string& name, int max_deg, int ev, int od, int p, unsigned long seed) {
            verify::Caps caps;
            caps.max_deg = max_deg;
            caps.m = ev;
            caps.n = od;
            caps.field = make_field(p);
            caps.seed = seed;
            verify::Report rep = verify::run_suite(name, caps);
            py::list cases;
            for (const auto& c : rep.cases) {
                py::dict d;
                d["suite"] = c.suite;
                d["label"] = c.label;
                d["pass"] = c.pass;
                d["detail"] = c.detail;
                cases.append(d);
            }
            return cases;
        },
        py::arg("suite"), py::arg("max_deg") = 3, py::arg("m") = 2, py::arg("n") = 2,
        py::arg("p") = 0, py::arg("seed") = 0,
        "run a named verification suite; returns one dict per case");
}
