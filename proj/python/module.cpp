// Python bindings: a thin veneer over the exact core.  Rationals cross the
// boundary as decimal strings (or as the exported Rat wrapper); everything
// heavy stays in C++.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "uturn/colors.hpp"
#include "uturn/identities.hpp"
#include "uturn/lattice.hpp"
#include "uturn/params.hpp"
#include "uturn/rational.hpp"

namespace py = pybind11;
using namespace uturn;

namespace {

ParamPoint make_point(const std::string& r, const std::string& s, const std::string& nu,
                      const std::string& t, const std::vector<std::string>& x) {
    std::vector<Rat> xs;
    xs.reserve(x.size());
    for (const auto& e : x) xs.push_back(Rat::parse(e));
    return ParamPoint(Rat::parse(r), Rat::parse(s), Rat::parse(nu), Rat::parse(t), std::move(xs));
}

ModelSpec make_spec(int n, int L, const std::string& sigma, const std::vector<int>& mu,
                    const ParamPoint& p) {
    return ModelSpec(n, L, sigma.empty() ? SignedPerm::identity(n) : SignedPerm::parse(sigma, n),
                     mu, p);
}

}  // namespace

PYBIND11_MODULE(_uturn, m) {
    m.doc() = "exact computation and verification for the U-turn lattice model";

    py::register_exception<PoleError>(m, "PoleError", PyExc_ArithmeticError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

    py::class_<Rat>(m, "Rat")
        .def(py::init([](const std::string& text) { return Rat::parse(text); }))
        .def("__str__", &Rat::str)
        .def("__repr__", [](const Rat& v) { return "Rat('" + v.str() + "')"; })
        .def("__float__", &Rat::to_double)
        .def(
            "__eq__", [](const Rat& a, const Rat& b) { return a == b; }, py::is_operator())
        .def_property_readonly("num", &Rat::num_str)
        .def_property_readonly("den", &Rat::den_str);

    py::class_<ParamPoint>(m, "ParamPoint")
        .def(py::init(&make_point), py::arg("r"), py::arg("s"), py::arg("nu"), py::arg("t"),
             py::arg("x"))
        .def_property_readonly("q", [](const ParamPoint& p) { return p.q; });

    m.def(
        "pf",
        [](int n, int L, const std::string& sigma, const std::vector<int>& mu, const ParamPoint& p,
           const std::string& mode) {
            ModelSpec spec = make_spec(n, L, sigma, mu, p);
            return partition_function(spec,
                                      mode == "memoized" ? PfMode::Memoized : PfMode::DFS);
        },
        py::arg("n"), py::arg("L"), py::arg("sigma"), py::arg("mu"), py::arg("point"),
        py::arg("mode") = "dfs", "partition function of one boundary instance");

    m.def(
        "state_count",
        [](int n, int L, const std::string& sigma, const std::vector<int>& mu,
           const ParamPoint& p) { return count_states(make_spec(n, L, sigma, mu, p)); },
        py::arg("n"), py::arg("L"), py::arg("sigma"), py::arg("mu"), py::arg("point"),
        "number of admissible lattice states");

    m.def(
        "closed_form",
        [](int n, int L, const std::vector<int>& mu, const ParamPoint& p) {
            return closed_form_value(make_spec(n, L, "", mu, p));
        },
        py::arg("n"), py::arg("L"), py::arg("mu"), py::arg("point"),
        "product formula in the frozen regime (identity sigma, barred sorted mu)");

    m.def(
        "total_mass",
        [](int n, int L, const std::string& sigma, const ParamPoint& p) {
            MassReport rep = total_mass(
                n, L, sigma.empty() ? SignedPerm::identity(n) : SignedPerm::parse(sigma, n), p);
            std::vector<std::pair<std::string, Rat>> out;
            out.emplace_back("total", rep.total);
            for (const auto& [o, mass] : rep.outcomes) out.emplace_back(o.key(), mass);
            return out;
        },
        py::arg("n"), py::arg("L"), py::arg("sigma"), py::arg("point"),
        "exact outcome masses of the forward process; first entry is the grand total");

    m.def(
        "sample",
        [](int n, int L, const std::string& sigma, const ParamPoint& p, uint64_t seed) {
            SampleResult res = sample_state(
                n, L, sigma.empty() ? SignedPerm::identity(n) : SignedPerm::parse(sigma, n), p,
                seed);
            py::dict d;
            d["rejected"] = res.rejected;
            d["reject_pair"] = res.reject_pair;
            d["mu"] = res.mu ? py::cast(*res.mu) : py::none();
            d["steps"] = res.trace.size();
            return d;
        },
        py::arg("n"), py::arg("L"), py::arg("sigma"), py::arg("point"), py::arg("seed"),
        "one draw of the forward process");

    m.def(
        "check_exchange",
        [](int n, int L, const std::string& sigma, const std::vector<int>& mu, const ParamPoint& p,
           int i) {
            auto rep = check_exchange(make_spec(n, L, sigma, mu, p), i);
            return py::make_tuple(rep.left, rep.right, rep.pass());
        },
        py::arg("n"), py::arg("L"), py::arg("sigma"), py::arg("mu"), py::arg("point"),
        py::arg("i"), "exchange relation at adjacent rows; returns (left, right, pass)");
}
