#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mindenom/cone_search.hpp"
#include "mindenom/errors.hpp"
#include "mindenom/experiments.hpp"
#include "mindenom/haar.hpp"
#include "mindenom/minimal_denominator.hpp"
#include "mindenom/origami.hpp"
#include "mindenom/run.hpp"
#include "mindenom/surface_experiment.hpp"

namespace py = pybind11;
using namespace mindenom;

namespace {

// Rationals cross the boundary as text ("p/q", integers, decimals) so that str(Fraction) works.
Rational rational(const py::handle& value) { return Rational::parse(py::str(value).cast<std::string>()); }

py::int_ to_py(const Integer& v) { return py::int_(py::str(v.get_str())); }

std::vector<std::pair<std::string, double>> to_py(const std::vector<Sample>& samples) {
    std::vector<std::pair<std::string, double>> out;
    out.reserve(samples.size());
    for (const auto& s : samples) out.emplace_back(s.input, s.statistic);
    return out;
}

SurfaceCone parse_cone(const std::string& name) {
    if (name == "symmetric") return SurfaceCone::Symmetric;
    if (name == "printed") return SurfaceCone::Printed;
    throw std::invalid_argument("cone must be \"symmetric\" or \"printed\"");
}

} // namespace

PYBIND11_MODULE(mindenom, m) {
    m.doc() = "Exact minimal denominators, lattice cone minima and saddle-connection statistics";
    m.attr("__version__") = code_version;

    py::register_exception<NotFoundError>(m, "NotFoundError", PyExc_RuntimeError);
    py::register_exception<EmptyConeError>(m, "EmptyConeError", PyExc_RuntimeError);

    m.def(
        "qmin",
        [](const py::object& x, const py::object& delta) {
            const auto hit = qmin(rational(x), rational(delta));
            return py::make_tuple(to_py(hit.q), to_py(hit.p));
        },
        py::arg("x"), py::arg("delta"), "(q, p) with p/q of least denominator in (x - delta, x + delta)");
    m.def(
        "qmin_bruteforce",
        [](const py::object& x, const py::object& delta) {
            const auto hit = qmin_bruteforce(rational(x), rational(delta));
            return py::make_tuple(to_py(hit.q), to_py(hit.p));
        },
        py::arg("x"), py::arg("delta"));
    m.def(
        "q_m",
        [](const std::vector<py::object>& x, const py::object& delta, std::uint64_t max_q) {
            RationalVector v;
            for (const auto& xi : x) v.push_back(rational(xi));
            return q_m(v, rational(delta), QmOptions{max_q});
        },
        py::arg("x"), py::arg("delta"), py::arg("max_q") = QmOptions{}.max_q);
    m.def(
        "q_mn",
        [](const std::vector<std::vector<py::object>>& rows, const py::object& delta, std::int64_t max_shell) {
            if (rows.empty() || rows.front().empty()) throw std::invalid_argument("X must be a nonempty matrix");
            std::vector<Rational> entries;
            for (const auto& row : rows) {
                if (row.size() != rows.front().size()) throw std::invalid_argument("X rows differ in length");
                for (const auto& e : row) entries.push_back(rational(e));
            }
            const auto r = q_mn(RationalMatrix(rows.size(), rows.front().size(), entries), rational(delta),
                                QmnOptions{max_shell});
            return py::make_tuple(r.qnorm, r.q);
        },
        py::arg("x"), py::arg("delta"), py::arg("max_shell") = QmnOptions{}.max_shell);

    m.def(
        "f_cone",
        [](const std::vector<std::vector<double>>& basis, std::size_t n, double delta, bool one_sided, double cap) {
            const std::size_t d = basis.size();
            std::vector<double> entries;
            for (const auto& row : basis) {
                if (row.size() != d) throw std::invalid_argument("basis must be square");
                entries.insert(entries.end(), row.begin(), row.end());
            }
            ConeSpec<double> cone;
            cone.n = n;
            cone.m = d - std::min(n, d);
            cone.delta = delta;
            cone.side = one_sided ? ConeSide::OneSided : ConeSide::TwoSided;
            const auto hit = f_cone(LatticeD(MatrixD(d, d, entries)), cone, cap);
            py::dict out;
            out["unorm"] = hit.unorm;
            out["vector"] = hit.vector;
            out["coords"] = hit.coords;
            return out;
        },
        py::arg("basis"), py::arg("n") = 1, py::arg("delta") = 1.0, py::arg("one_sided") = false,
        py::arg("cap") = 1e15,
        "Least |u| over nonzero lattice points (u, v) with |v| < delta |u|; rows of basis are coordinates");

    m.def("ks_distance", [](std::vector<double> a, std::vector<double> b) {
        return ks_distance(EmpiricalCDF(std::move(a)), EmpiricalCDF(std::move(b)));
    });

    m.def(
        "lhs_qmin_samples",
        [](const py::object& delta, std::size_t n, std::uint64_t seed) {
            return to_py(lhs_qmin_samples(rational(delta), n, seed));
        },
        py::arg("delta"), py::arg("n"), py::arg("seed"));
    m.def(
        "rhs_haar_samples", [](std::size_t n, std::uint64_t seed) { return to_py(rhs_haar_samples(n, seed)); },
        py::arg("n"), py::arg("seed"));
    m.def(
        "horocycle_orbit_samples", [](double delta, std::size_t n) { return to_py(horocycle_orbit_samples(delta, n)); },
        py::arg("delta"), py::arg("n"));
    m.def(
        "lhs_qm_samples",
        [](std::size_t dim, const py::object& delta, std::size_t n, std::uint64_t seed) {
            return to_py(lhs_qm_samples(dim, rational(delta), n, seed));
        },
        py::arg("m"), py::arg("delta"), py::arg("n"), py::arg("seed"));
    m.def(
        "lhs_qmn_samples",
        [](std::size_t rows, std::size_t cols, const py::object& delta, std::size_t n, std::uint64_t seed) {
            return to_py(lhs_qmn_samples(rows, cols, rational(delta), n, seed));
        },
        py::arg("m"), py::arg("n_dim"), py::arg("delta"), py::arg("n"), py::arg("seed"));
    m.def(
        "siegel_mean_count",
        [](std::uint64_t seed, std::vector<double> box, std::size_t n) {
            if (box.size() != 4) throw std::invalid_argument("box is [x0, x1, y0, y1]");
            return siegel_mean_count(seed, Box{box[0], box[1], box[2], box[3]}, n);
        },
        py::arg("seed"), py::arg("box"), py::arg("n"));

    py::class_<Origami>(m, "Origami")
        .def(py::init([](const std::string& text) { return Origami::parse(text); }), py::arg("text"))
        .def_static("torus", &Origami::torus)
        .def_property_readonly("degree", &Origami::degree)
        .def("cone_points", &Origami::cone_points)
        .def("minimal_alpha", [](const Origami& o) { return minimal_alpha(o); })
        .def("veech_h_alpha_check", [](const Origami& o, long alpha) { return veech_h_alpha_check(o, alpha); })
        .def("__str__", &Origami::format)
        .def("__eq__", [](const Origami& a, const Origami& b) { return a == b; });
    m.def(
        "sc_samples",
        [](const Origami& o, long alpha, const py::object& delta, std::size_t n, std::uint64_t seed,
           const std::string& cone) { return to_py(sc_samples(o, alpha, rational(delta), n, seed, parse_cone(cone))); },
        py::arg("origami"), py::arg("alpha"), py::arg("delta"), py::arg("n"), py::arg("seed"),
        py::arg("cone") = "symmetric");

    m.def(
        "run",
        [](const std::string& experiment, const std::vector<std::string>& delta, std::size_t n, std::uint64_t seed,
           const std::string& output, std::size_t dim_m, std::size_t dim_n, const std::string& cone,
           const std::string& origami, long alpha) {
            RunConfig c;
            c.experiment = parse_experiment(experiment);
            c.deltas = delta;
            c.samples = n;
            c.seed = seed;
            c.output = output;
            c.m = dim_m;
            c.n_dim = dim_n;
            c.cone = parse_cone(cone);
            c.origami = origami;
            c.alpha = alpha;
            std::ostringstream log;
            const int code = run(c, log);
            return py::make_tuple(code, log.str());
        },
        py::arg("experiment"), py::arg("delta") = RunConfig{}.deltas, py::arg("n") = RunConfig{}.samples,
        py::arg("seed") = 0, py::arg("output") = ".", py::arg("m") = 1, py::arg("dim_n") = 1,
        py::arg("cone") = "symmetric", py::arg("origami") = RunConfig{}.origami, py::arg("alpha") = 0,
        "Runs an experiment like the lab tool; returns (exit code, log text)");
}
