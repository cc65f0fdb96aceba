#include "skewpbw/commands.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace skewpbw;

namespace {

CommandOptions make_options(const std::string& side, int r, int max, const std::string& delta_a,
                            const std::string& format) {
    CommandOptions opt;
    opt.side = side == "right" ? Side::right : Side::left;
    opt.r = r;
    opt.max = max;
    opt.conv = delta_a == "empty" ? DeltaAConvention::empty : DeltaAConvention::paper;
    opt.format = format == "text" ? Format::text : Format::json;
    return opt;
}

} // namespace

PYBIND11_MODULE(_skewpbw, m) {
    m.doc() = "Groebner bases, syzygies and Tor/Ext presentations over bijective skew PBW "
              "extensions of Q";

    py::register_exception<SkewError>(m, "SkewError");

    py::class_<Session>(m, "Session")
        .def(py::init([](const std::string& text) { return parse_session(text); }),
             py::arg("text"), "Parse a session (vars/rel/order/module/matrix statements).")
        .def(
            "run",
            [](const Session& s, const std::string& command, const std::vector<std::string>& args,
               const std::string& side, int r, int max, const std::string& delta_a,
               const std::string& format) {
                return run_command(s, command, args,
                                   make_options(side, r, max, delta_a, format));
            },
            py::arg("command"), py::arg("args") = std::vector<std::string>{},
            py::arg("side") = "left", py::arg("r") = 0, py::arg("max") = -1,
            py::arg("delta_a") = "paper", py::arg("format") = "json",
            "Run a subcommand (groebner, syzygy, presentation, resolution, tensor, tor, hom, "
            "ext, dual, grade, transpose, torsion, stably-free, torsion-free, torsion-module, "
            "reflexive) and return the rendered document.")
        .def(
            "multiply",
            [](const Session& s, const std::string& f, const std::string& g) {
                Poly p = multiply(*s.algebra, parse_poly_text(s.algebra, f),
                                  parse_poly_text(s.algebra, g));
                return render_poly(*s.algebra, p);
            },
            py::arg("f"), py::arg("g"), "Product of two polynomials in PBW normal form.")
        .def(
            "is_central",
            [](const Session& s, const std::string& f) {
                return is_central(*s.algebra, parse_poly_text(s.algebra, f));
            },
            py::arg("f"));

    m.attr("__version__") = "1.0.0";
}
