#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "hallkit/cli.hpp"
#include "hallkit/json_io.hpp"
#include "hallkit/verify.hpp"

namespace py = pybind11;
using namespace hallkit;

namespace {

// Structured values cross the boundary as plain Python data via the JSON forms.
Json to_json(const py::handle& obj) {
    const auto dumps = py::module_::import("json").attr("dumps");
    return parse_json(dumps(obj).cast<std::string>(), "argument");
}

py::object from_json(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

py::object reports(const std::vector<CheckReport>& rs) {
    Json out = Json::array();
    for (const auto& r : rs) out.push_back(report_to_json(r));
    return from_json(out);
}

Field field_arg(int q) { return field_of_order(q); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Hall numbers and Hall polynomials of quiver representations over finite fields";

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<BudgetError>(m, "BudgetError", PyExc_RuntimeError);
    py::register_exception<VerificationError>(m, "VerificationError", PyExc_AssertionError);

    m.def("classify", [](const std::string& quiver, int q, const DimVec& dims) {
        return from_json(table_to_json(iso_classes(share(Quiver::preset(quiver)), dims, field_arg(q))));
    }, py::arg("quiver"), py::arg("q"), py::arg("dims"));

    m.def("hall_number", [](const py::object& mq, const py::object& nq, const py::object& xq) {
        const Rep m = rep_from_json(to_json(mq)), n = rep_from_json(to_json(nq)), x = rep_from_json(to_json(xq));
        return py::int_(py::str(hall_number(m, n, x).get_str()));
    }, py::arg("m"), py::arg("n"), py::arg("x"), "F_{MN}^X for representations in JSON form (N sub, M quotient).");

    m.def("grassmannian", [](const py::object& x, const DimVec& e) {
        return py::int_(py::str(grassmannian_count(rep_from_json(to_json(x)), e).get_str()));
    }, py::arg("x"), py::arg("e"));

    m.def("kronecker_module", [](const std::string& kind, int r, int q) {
        KroneckerKind k;
        if (kind == "P")
            k = KroneckerKind::Preprojective;
        else if (kind == "I")
            k = KroneckerKind::Preinjective;
        else
            throw InputError("kind must be \"P\" or \"I\"");
        return from_json(rep_to_json(kronecker_preset(k, r, field_arg(q))));
    }, py::arg("kind"), py::arg("r"), py::arg("q"));

    m.def("classical_hall_poly", [](const Partition& l, const Partition& mu, const Partition& nu) {
        return from_json(ratpoly_to_json(classical_hall_poly(make_partition(l), make_partition(mu), make_partition(nu))));
    }, py::arg("lam"), py::arg("mu"), py::arg("nu"));

    m.def("universal_hall_poly", [](const py::object& mu, const py::object& nu, const py::object& xi) {
        return from_json(ratpoly_to_json(universal_hall_poly(discrete_from_json(to_json(mu)), discrete_from_json(to_json(nu)),
                                                             discrete_from_json(to_json(xi)))));
    }, py::arg("mu"), py::arg("nu"), py::arg("xi"));

    m.def("segre_hall_poly", [](const py::object& rho, const py::object& sigma, const py::object& tau) {
        return from_json(ratpoly_to_json(
            segre_hall_poly(segre_from_json(to_json(rho)), segre_from_json(to_json(sigma)), segre_from_json(to_json(tau)))));
    }, py::arg("rho"), py::arg("sigma"), py::arg("tau"));

    m.def("n_sigma_poly", [](const py::object& s) { return from_json(ratpoly_to_json(n_sigma_poly(segre_from_json(to_json(s))))); });
    m.def("a_sigma_poly", [](const py::object& s) { return from_json(ratpoly_to_json(a_sigma_poly(segre_from_json(to_json(s))))); });

    m.def("decomp_hall_poly", [](const py::object& a, const py::object& b, const py::object& c) {
        return from_json(ratpoly_to_json(
            decomp_hall_poly(decomp_from_json(to_json(a)), decomp_from_json(to_json(b)), decomp_from_json(to_json(c)))));
    }, py::arg("alpha"), py::arg("beta"), py::arg("gamma"));

    m.def("verify", [](const std::string& identity, const std::string& quiver, int q, const DimVec& bound) {
        const QuiverPtr qp = share(Quiver::preset(quiver));
        ClassUniverse u(qp, field_arg(q), bound, qp->is_oriented_cycle());
        if (identity == "green") return reports(green_check(u));
        if (identity == "assoc") return reports(assoc_check(u));
        if (identity == "riedtmann") return reports(riedtmann_check(u));
        if (identity == "tables") return reports(table_check(u));
        if (identity == "defect") return reports(defect_check(u));
        throw InputError("unknown identity " + identity);
    }, py::arg("identity"), py::arg("quiver"), py::arg("q"), py::arg("bound"));

    m.def("example", [](int q) { return reports(example_reproduce(field_arg(q))); }, py::arg("q"));

    m.def("run_cli", [](const std::vector<std::string>& args, const std::string& input) {
        std::istringstream in(input);
        std::ostringstream out, err;
        const int code = run(args, in, out, err);
        return py::make_tuple(code, out.str(), err.str());
    }, py::arg("args"), py::arg("input") = "", "Runs the command-line tool; returns (exit code, stdout, stderr).");
}
