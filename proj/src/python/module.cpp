#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "snakechar/cartan.hpp"
#include "snakechar/lattice.hpp"
#include "snakechar/paths.hpp"
#include "snakechar/qchar.hpp"
#include "snakechar/snakes.hpp"
#include "snakechar/tableaux.hpp"

namespace py = pybind11;
using namespace snakechar;

namespace {

CartanData cd_of(const std::string& type, int rank) {
    if (type != "A" && type != "B")
        throw std::invalid_argument("type must be 'A' or 'B', got '" + type + "'");
    return cartan_data(LieType{type == "A" ? Kind::A : Kind::B, rank});
}

using PyMono = std::vector<std::tuple<int, int, int>>;  // [(i, k, e), ...]

PyMono mono_out(const YMonomial& m) {
    PyMono fs;
    fs.reserve(m.factors().size());
    for (const auto& f : m.factors()) fs.emplace_back(f.i, f.k, f.e);
    return fs;
}

std::vector<std::pair<PyMono, int>> terms_out(const QCharacter& ch) {
    std::vector<std::pair<PyMono, int>> out;
    out.reserve(ch.terms.size());
    for (const auto& [m, mult] : ch.terms) out.emplace_back(mono_out(m), mult);
    return out;
}

SkewDiagram diagram_of(const CartanData& cd, const std::vector<std::tuple<int, int, int>>& cols) {
    std::vector<DiagramColumn> dc;
    dc.reserve(cols.size());
    for (const auto& [col, top, height] : cols) dc.push_back({col, top, height});
    return make_diagram(cd, std::move(dc));
}

}  // namespace

PYBIND11_MODULE(snakechar, mod) {
    mod.doc() = "exact q-characters of snake modules in types A and B";

    mod.def(
        "qchar",
        [](const std::string& type, int rank, const std::vector<std::pair<int, int>>& snake) {
            const CartanData cd = cd_of(type, rank);
            return terms_out(snake_qchar(cd, make_snake(cd, snake)));
        },
        py::arg("type"), py::arg("rank"), py::arg("snake"),
        "q-character as a list of (monomial, multiplicity); a monomial is [(i,k,e),...]");

    mod.def(
        "paths",
        [](const std::string& type, int rank, int i, int k) {
            const CartanData cd = cd_of(type, rank);
            std::vector<PyMono> out;
            for (const auto& p : gen_paths(cd, i, k)) out.push_back(mono_out(path_monomial(p)));
            return out;
        },
        py::arg("type"), py::arg("rank"), py::arg("i"), py::arg("k"),
        "monomials of the non-overlapping paths of one point of X");

    mod.def(
        "classify",
        [](const std::string& type, int rank, const std::vector<std::pair<int, int>>& snake) {
            const CartanData cd = cd_of(type, rank);
            const SnakeClass sc = classify_snake(cd, snake);
            py::dict d;
            d["is_snake"] = sc.is_snake;
            d["is_minimal"] = sc.is_minimal;
            d["is_minimal_affinization"] = sc.is_minimal_affinization;
            return d;
        },
        py::arg("type"), py::arg("rank"), py::arg("snake"));

    mod.def(
        "verify",
        [](const std::string& type, int rank, const std::vector<std::pair<int, int>>& snake) {
            const CartanData cd = cd_of(type, rank);
            const TheoremAReport rep = verify_theorem_a(cd, snake_qchar(cd, make_snake(cd, snake)));
            py::dict d;
            d["cond_i"] = rep.cond_i;
            d["cond_ii"] = rep.cond_ii;
            d["cond_iii"] = rep.cond_iii;
            d["ok"] = rep.ok();
            return d;
        },
        py::arg("type"), py::arg("rank"), py::arg("snake"));

    mod.def(
        "tableaux",
        [](const std::string& type, int rank,
           const std::vector<std::tuple<int, int, int>>& diagram) {
            const CartanData cd = cd_of(type, rank);
            return terms_out(tableaux_qchar(cd, diagram_of(cd, diagram)));
        },
        py::arg("type"), py::arg("rank"), py::arg("diagram"),
        "tableau-side q-character; diagram columns are (col, top_row, height)");

    mod.def(
        "compare",
        [](const std::string& type, int rank,
           const std::vector<std::tuple<int, int, int>>& diagram) {
            const CartanData cd = cd_of(type, rank);
            const KosReport rep = kos_check(cd, diagram_of(cd, diagram));
            py::dict d;
            d["equal"] = rep.equal;
            d["per_column_bijection"] = rep.per_column_bijection;
            d["adjacency_preserved"] = rep.adjacency_preserved;
            d["tableau_count"] = rep.tableau_count;
            d["tuple_count"] = rep.tuple_count;
            d["direct"] = rep.direct;
            d["direct_equal"] = rep.direct_equal;
            d["detail"] = rep.detail;
            return d;
        },
        py::arg("type"), py::arg("rank"), py::arg("diagram"));

    mod.def(
        "diagram_of_snake",
        [](const std::string& type, int rank, const std::vector<std::pair<int, int>>& snake) {
            const CartanData cd = cd_of(type, rank);
            const SkewDiagram d = diagram_from_snake(cd, make_snake(cd, snake));
            std::vector<std::tuple<int, int, int>> out;
            for (const auto& c : d.cols) out.emplace_back(c.col, c.top, c.height);
            return out;
        },
        py::arg("type"), py::arg("rank"), py::arg("snake"));

    mod.def(
        "restrict",
        [](const std::string& type, int rank, const std::vector<std::pair<int, int>>& snake) {
            const CartanData cd = cd_of(type, rank);
            const RestrictedCharacter rc =
                restricted_character(cd, snake_qchar(cd, make_snake(cd, snake)));
            py::dict d;
            std::vector<std::pair<std::vector<int>, int>> ws;
            ws.reserve(rc.weights.size());
            for (const auto& [w, mult] : rc.weights) ws.emplace_back(w.coords, mult);
            d["weights"] = ws;
            d["weyl_invariant"] = rc.weyl_invariant;
            return d;
        },
        py::arg("type"), py::arg("rank"), py::arg("snake"));
}
