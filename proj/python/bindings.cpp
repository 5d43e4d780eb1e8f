#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "commands.hpp"
#include "spectre/extremal.hpp"
#include "spectre/oracle.hpp"
#include "spectre/serialize.hpp"
#include "spectre/spectral_pairs.hpp"

namespace py = pybind11;
using namespace spectre;

namespace {

// Inputs arrive as JSON text: a diagram, a polygon or a chain string.
Diagram read(const std::string& text) { return diagram_from_any(json::parse(text)); }

std::vector<std::pair<std::string, long>> rows(const SpecBag& b)
{
    std::vector<std::pair<std::string, long>> out;
    for (const auto& [a, c] : b)
        out.emplace_back(a.str(), c);
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "exact spectra of plane curve singularities";

    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<InconsistencyError>(m, "InconsistencyError", PyExc_RuntimeError);

    m.def("spectrum", [](const std::string& s) { return rows(spectrum(read(s))); });
    m.def("spectral_pairs", [](const std::string& s) {
        std::vector<std::tuple<std::string, int, long>> out;
        for (const auto& [k, c] : spectral_pairs(read(s)))
            out.emplace_back(k.alpha.str(), k.weight, c);
        return out;
    });
    m.def("milnor_number", [](const std::string& s) { return milnor_number(read(s)); });
    m.def("max_spectral", [](const std::string& s) {
        MaxSpectral x = max_spectral(read(s));
        return std::make_pair(x.alpha.str(), x.name);
    });
    m.def("global_defect", [](const std::string& s) { return to_json(global_defect(read(s))).dump(); });
    m.def("hertling", [](const std::string& s) { return to_json(hertling_verdict(read(s))).dump(); });
    m.def("decompose", [](const std::string& s) { return to_json(decompose(read(s))).dump(); });
    m.def("naive_defect", [](const std::string& s) { return naive_defect(read(s)).str(); });
    m.def("brieskorn_spectrum", [](Int p, Int q) { return rows(brieskorn_spectrum(p, q)); });
    m.def("lattice_spectrum", [](const std::string& s) { return rows(lattice_spectrum(polygon_from_json(json::parse(s)))); });
    m.def("to_diagram", [](const std::string& s) { return to_json(to_diagram(polygon_from_json(json::parse(s)))).dump(); });
    m.def("random_diagram", [](std::uint64_t seed, int depth) { return to_json(random_diagram(seed, depth)).dump(); });
    m.def("random_polygon", [](std::uint64_t seed, int max_faces, Int max_entry) {
        return to_json(random_polygon(seed, max_faces, max_entry)).dump();
    });

    // The command line, in process.  Returns (exit code, stdout, stderr).
    m.def("cli", [](std::vector<std::string> args) {
        args.insert(args.begin(), "spectre");
        std::vector<char*> argv;
        for (auto& a : args)
            argv.push_back(a.data());
        std::ostringstream out, err;
        int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
        return py::make_tuple(code, out.str(), err.str());
    });
}
