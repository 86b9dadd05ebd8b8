#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cli.hpp"
#include "pcm/counting.hpp"
#include "pcm/transforms.hpp"

#include <sstream>

namespace py = pybind11;

namespace {

// Python ints travel as decimal strings so size never matters.
pcm::Integer to_integer(const py::int_& n) { return pcm::parse_integer(py::str(n).cast<std::string>()); }

py::int_ to_py(const pcm::Integer& n) {
    return py::reinterpret_steal<py::int_>(PyLong_FromString(n.get_str().c_str(), nullptr, 10));
}

py::tuple run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = pcm::cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "p-adic forms, quaternion orders and CM point counts";

    py::register_exception<pcm::PrecisionError>(m, "PrecisionError", PyExc_ArithmeticError);

    m.def("run", &run, py::arg("args"), "Run a CLI command in-process; returns (exit code, JSON text, summary).");

    m.def("legendre", [](const py::int_& a, const py::int_& p) { return pcm::legendre(to_integer(a), to_integer(p)); });
    m.def("class_number", [](const py::int_& disc) { return to_py(pcm::class_number(to_integer(disc))); });
    m.def(
        "hilbert_symbol",
        [](const std::string& a, const std::string& b, const py::object& place) {
            pcm::Place v = place.is_none() ? pcm::Place::infinity() : pcm::Place::finite(to_integer(place));
            return pcm::hilbert_symbol(pcm::parse_rational(a), pcm::parse_rational(b), v);
        },
        py::arg("a"), py::arg("b"), py::arg("place") = py::none(),
        "Hilbert symbol (a, b)_v for rationals given as strings; place None is infinity.");
    m.def(
        "hensel_sqrt_digits",
        [](const std::string& a, const py::int_& p, long precision) {
            pcm::PAdic r = pcm::hensel_sqrt(pcm::PAdic::from_rational(pcm::parse_rational(a), to_integer(p), precision));
            py::list digits;
            for (const pcm::Integer& d : r.unit_digits()) digits.append(to_py(d));
            return py::make_tuple(r.valuation(), digits, r.render());
        },
        py::arg("a"), py::arg("p"), py::arg("precision") = pcm::kDefaultPrecision);
    m.def(
        "classify",
        [](const std::vector<std::string>& entries, const py::int_& p, long precision) {
            if (entries.size() != 4) throw std::invalid_argument("a matrix needs 4 entries");
            std::array<pcm::Rational, 4> e;
            for (std::size_t i = 0; i < 4; ++i) e[i] = pcm::parse_rational(entries[i]);
            return pcm::to_string(pcm::classify(pcm::Matrix2P::from_rationals(e, to_integer(p), precision)));
        },
        py::arg("entries"), py::arg("p"), py::arg("precision") = pcm::kDefaultPrecision);

    auto input = [](const py::int_& D, const py::int_& N, const py::int_& d, const py::int_& mm, const py::int_& p) {
        return pcm::CountingInput{to_integer(D), to_integer(N), to_integer(d), to_integer(mm), to_integer(p)};
    };
    m.def(
        "cm_p", [input](const py::int_& D, const py::int_& N, const py::int_& d, const py::int_& mm,
                        const py::int_& p) { return to_py(pcm::cm_p(input(D, N, d, mm, p))); },
        py::arg("D"), py::arg("N"), py::arg("d"), py::arg("m"), py::arg("p"));
    m.def(
        "cm_inf", [input](const py::int_& D, const py::int_& N, const py::int_& d, const py::int_& mm,
                          const py::int_& p) { return to_py(pcm::cm_inf(input(D, N, d, mm, p))); },
        py::arg("D"), py::arg("N"), py::arg("d"), py::arg("m"), py::arg("p"));
}
