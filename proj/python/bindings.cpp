#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include <iwacalc/errors.hpp>
#include <iwacalc/frobenius.hpp>
#include <iwacalc/integer.hpp>
#include <iwacalc/iwasawa.hpp>
#include <iwacalc/json_io.hpp>
#include <iwacalc/logmatrix.hpp>
#include <iwacalc/series.hpp>

namespace py = pybind11;
using namespace iwacalc;

namespace
{

mpz_class to_mpz(const py::int_ &x)
{
    const std::string text = py::str(py::handle(x));
    return mpz_class(text, 10);
}

py::int_ to_py(const mpz_class &x)
{
    return py::int_(py::module_::import("builtins").attr("int")(py::str(x.get_str())));
}

// Reports cross the boundary as JSON text; the Python package decodes them.
std::string dump(const json &j)
{
    return canonical_dump(j);
}

Side parse_side(const std::string &side)
{
    if (side == "primal") {
        return Side::primal;
    }
    if (side == "dual") {
        return Side::dual;
    }
    throw UsageError("side must be 'primal' or 'dual'");
}

TruncatedSeries make_series(unsigned long p, const std::vector<py::int_> &coeffs, long n, long s)
{
    if (coeffs.empty()) {
        throw UsageError("a series needs at least one coefficient");
    }
    std::vector<mpz_class> c;
    c.reserve(coeffs.size());
    for (const auto &x : coeffs) {
        c.push_back(to_mpz(x));
    }
    return TruncatedSeries(p, std::move(c), n, s);
}

} // namespace

PYBIND11_MODULE(_iwacalc, m)
{
    m.doc() = "Exact p-adic series, logarithmic matrices and Iwasawa invariants";

    auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<UsageError>(m, "UsageError", base.ptr());
    py::register_exception<ValidationError>(m, "ValidationError", base.ptr());
    py::register_exception<DomainError>(m, "DomainError", base.ptr());
    py::register_exception<SchemaError>(m, "SchemaError", base.ptr());
    py::register_exception<PrecisionError>(m, "PrecisionError", base.ptr());

    py::class_<TruncatedSeries>(m, "Series")
        .def(py::init(&make_series), py::arg("p"), py::arg("coeffs"), py::arg("N"), py::arg("s") = 0)
        .def_property_readonly("p", &TruncatedSeries::prime)
        .def_property_readonly("s", &TruncatedSeries::denominator_exp)
        .def_property_readonly("N", &TruncatedSeries::p_precision)
        .def_property_readonly("D", &TruncatedSeries::x_precision)
        .def_property_readonly("absolute_precision", &TruncatedSeries::absolute_precision)
        .def_property_readonly("coeffs",
                               [](const TruncatedSeries &f) {
                                   py::list out;
                                   for (const auto &c : f.numerators()) {
                                       out.append(to_py(c));
                                   }
                                   return out;
                               })
        .def("is_zero", &TruncatedSeries::is_zero)
        .def("valuation", &TruncatedSeries::valuation)
        .def("inverse", &TruncatedSeries::inverse)
        .def("truncate", &TruncatedSeries::truncate)
        .def("scaled_by_p", &TruncatedSeries::scaled_by_p)
        .def("iota", [](const TruncatedSeries &f) { return involution_iota(f); })
        .def("equal_at_precision", [](const TruncatedSeries &a, const TruncatedSeries &b) { return equal_at_precision(a, b); })
        .def("to_json", [](const TruncatedSeries &f) { return dump(to_json(f)); })
        .def_static("from_json", [](const std::string &text) { return series_from_json(parse_json(text)); })
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def("__repr__", &TruncatedSeries::to_string);

    py::class_<FrobeniusData>(m, "FrobeniusData")
        .def_property_readonly("p", &FrobeniusData::prime)
        .def_property_readonly("g_minus", &FrobeniusData::g_minus)
        .def_property_readonly("g_plus", &FrobeniusData::g_plus)
        .def_property_readonly("N", &FrobeniusData::precision)
        .def("dual", [](const FrobeniusData &fd) { return dual_frobenius(fd); })
        .def("to_json", [](const FrobeniusData &fd) { return dump(to_json(fd)); })
        .def_static("from_json", [](const std::string &text, long precision) {
            return frobenius_from_json(parse_json(text), precision);
        }, py::arg("text"), py::arg("N") = LogMatrixDefaults::p_precision())
        .def(py::self == py::self);

    m.def(
        "build_frobenius",
        [](const std::vector<std::vector<py::int_>> &c, std::size_t g_minus, std::size_t g_plus, unsigned long p,
           long precision) {
            std::vector<std::vector<mpz_class>> rows;
            for (const auto &row : c) {
                std::vector<mpz_class> r;
                for (const auto &x : row) {
                    r.push_back(to_mpz(x));
                }
                rows.push_back(std::move(r));
            }
            return build_frobenius(rows, g_minus, g_plus, p, precision);
        },
        py::arg("C"), py::arg("g_minus"), py::arg("g_plus"), py::arg("p"),
        py::arg("N") = LogMatrixDefaults::p_precision());
    m.def(
        "frobenius_from_ap",
        [](const py::int_ &ap, unsigned long p, long precision) {
            return build_frobenius_from_ap(PadicScalar::from_integer(p, to_mpz(ap), precision), precision);
        },
        py::arg("ap"), py::arg("p"), py::arg("N") = LogMatrixDefaults::p_precision());

    m.def("cyclotomic_shifted", &cyclotomic_shifted, py::arg("p"), py::arg("n"), py::arg("D"), py::arg("N"));
    m.def("cyclotomic_product", &cyclotomic_product, py::arg("p"), py::arg("n"), py::arg("D"), py::arg("N"));
    m.def("log_over_px", &log_over_px, py::arg("p"), py::arg("D"), py::arg("N"));

    m.def(
        "logarithmic_matrix",
        [](const FrobeniusData &fd, unsigned n, const std::string &side, std::size_t d, long precision) {
            return dump(to_json(logarithmic_matrix(fd, n, parse_side(side), d, precision)));
        },
        py::arg("fd"), py::arg("n"), py::arg("side"), py::arg("D"), py::arg("N"));
    m.def(
        "verify_orthogonality",
        [](const FrobeniusData &fd, unsigned n, std::size_t d, long precision) {
            return dump(to_json(verify_orthogonality(fd, n, d, precision)));
        },
        py::arg("fd"), py::arg("n"), py::arg("D"), py::arg("N"));
    m.def(
        "determinant_identity_check",
        [](const FrobeniusData &fd, unsigned n, std::size_t d, long precision) {
            return dump(to_json(determinant_identity_check(fd, n, d, precision)));
        },
        py::arg("fd"), py::arg("n"), py::arg("D"), py::arg("N"));
    m.def(
        "convergence_run",
        [](const FrobeniusData &fd, unsigned n_max, std::size_t d, long precision) {
            return dump(to_json(convergence_run(fd, n_max, d, precision)));
        },
        py::arg("fd"), py::arg("n_max"), py::arg("D"), py::arg("N"));

    m.def("weierstrass", [](const TruncatedSeries &f) { return dump(to_json(weierstrass(f))); }, py::arg("f"));
    m.def(
        "functional_equation_compare",
        [](const TruncatedSeries &fx, const TruncatedSeries &fy) {
            return dump(to_json(functional_equation_compare(fx, fy)));
        },
        py::arg("fX"), py::arg("fY"));
    m.def(
        "euler_characteristic_exponent",
        [](unsigned long p, unsigned long mm, unsigned long e, unsigned long deg_f, unsigned long n_level,
           unsigned long g, unsigned long g_minus) {
            const auto r = euler_characteristic_exponent(p, mm, e, deg_f, n_level, g, g_minus);
            return py::make_tuple(to_py(r.global), to_py(r.local));
        },
        py::arg("p"), py::arg("m"), py::arg("e"), py::arg("deg_f"), py::arg("n_level"), py::arg("g"),
        py::arg("g_minus"));
}
