#include "mindenom/run.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <functional>
#include <numbers>
#include <stdexcept>

#include <json.hpp>

#include "mindenom/cone_search.hpp"
#include "mindenom/errors.hpp"
#include "mindenom/experiments.hpp"
#include "mindenom/haar.hpp"
#include "mindenom/io.hpp"
#include "mindenom/lattice.hpp"
#include "mindenom/minimal_denominator.hpp"
#include "mindenom/origami.hpp"
#include "mindenom/parallel.hpp"
#include "mindenom/rng.hpp"
#include "mindenom/surface_experiment.hpp"

namespace mindenom {

using json = nlohmann::ordered_json;

namespace {

struct Outcome {
    std::vector<Series> series;
    json summary = json::object();
    std::size_t mismatches = 0;
};

// Independent seed for the reference series, so that both sides of a comparison never share streams.
std::uint64_t reference_seed(std::uint64_t seed) { return seed + 1; }

std::string cone_name(SurfaceCone c) { return c == SurfaceCone::Symmetric ? "symmetric" : "printed"; }

double mean_of(const std::vector<Sample>& s) { return mean_estimate(EmpiricalCDF(statistics(s))); }

double ks_of(const std::vector<Sample>& a, const std::vector<Sample>& b) {
    return ks_distance(EmpiricalCDF(statistics(a)), EmpiricalCDF(statistics(b)));
}

Outcome theorem_1_2(const RunConfig& c) {
    Outcome out;
    auto haar = rhs_haar_samples(c.samples, reference_seed(c.seed));
    json per_delta = json::array();
    for (std::size_t k = 0; k < c.deltas.size(); ++k) {
        const Rational delta = Rational::parse(c.deltas[k]);
        auto lhs = lhs_qmin_samples(delta, c.samples, c.seed);
        auto orbit = horocycle_orbit_samples(delta.to_double(), c.samples);
        per_delta.push_back({{"delta", c.deltas[k]},
                             {"n", c.samples},
                             {"mean", mean_of(lhs)},
                             {"mean_horocycle", mean_of(orbit)},
                             {"ks_vs_haar", ks_of(lhs, haar)},
                             {"ks_horocycle_vs_haar", ks_of(orbit, haar)}});
        out.series.push_back({"lhs delta=" + c.deltas[k], std::move(lhs)});
        out.series.push_back({"horocycle delta=" + c.deltas[k], std::move(orbit)});
    }
    out.summary["per_delta"] = std::move(per_delta);
    out.summary["haar"] = {{"seed", reference_seed(c.seed)}, {"n", c.samples}, {"mean", mean_of(haar)}};
    out.summary["theorem_constant"] = 16.0 / (std::numbers::pi * std::numbers::pi);
    out.series.push_back({"haar", std::move(haar)});
    return out;
}

Outcome stabilization(const RunConfig& c, bool linear_forms) {
    Outcome out;
    json per_delta = json::array();
    const std::vector<Sample>* previous = nullptr;
    for (std::size_t k = 0; k < c.deltas.size(); ++k) {
        const Rational delta = Rational::parse(c.deltas[k]);
        auto lhs = linear_forms ? lhs_qmn_samples(c.m, c.n_dim, delta, c.samples, c.seed, c.max_shell)
                                : lhs_qm_samples(c.m, delta, c.samples, c.seed, c.max_q);
        json row = {{"delta", c.deltas[k]}, {"n", c.samples}, {"mean", mean_of(lhs)}};
        if (previous) row["ks_vs_previous_delta"] = ks_of(lhs, *previous);
        per_delta.push_back(std::move(row));
        out.series.push_back({"lhs delta=" + c.deltas[k], std::move(lhs)});
        previous = &out.series.back().samples;
    }
    out.summary["per_delta"] = std::move(per_delta);
    return out;
}

Origami load_origami(const std::string& text) {
    std::string normalized = text;
    for (char& ch : normalized)
        if (ch == ';') ch = '\n';
    return Origami::parse(normalized);
}

Outcome theorem_1_5(const RunConfig& c) {
    Outcome out;
    const Origami o = load_origami(c.origami);
    const long alpha = c.alpha > 0 ? c.alpha : minimal_alpha(o);
    if (!veech_h_alpha_check(o, alpha))
        throw std::invalid_argument("h_" + std::to_string(alpha) + " is not in the Veech group of the surface");
    const SurfaceCone other = c.cone == SurfaceCone::Symmetric ? SurfaceCone::Printed : SurfaceCone::Symmetric;
    const bool torus = o.degree() == 1;
    std::vector<Sample> primitive;
    if (torus) primitive = rhs_haar_primitive_samples(c.samples, reference_seed(c.seed));

    json per_delta = json::array();
    for (std::size_t k = 0; k < c.deltas.size(); ++k) {
        const Rational delta = Rational::parse(c.deltas[k]);
        auto exp = sc_experiment(o, alpha, delta, c.samples, c.seed, c.cone);
        const auto alt = sc_samples(o, alpha, delta, c.samples, c.seed, other);
        json row = {{"delta", c.deltas[k]},
                    {"n", c.samples},
                    {"mean", mean_of(exp.lhs)},
                    {"mean_delta_over_16", mean_of(exp.rhs_proxy)},
                    {"ks_vs_delta_over_16", ks_of(exp.lhs, exp.rhs_proxy)},
                    {"other_cone", {{"cone", cone_name(other)}, {"mean", mean_of(alt)}}}};
        if (torus) row["ks_vs_haar_primitive"] = ks_of(exp.lhs, primitive);
        per_delta.push_back(std::move(row));
        out.series.push_back({"lhs delta=" + c.deltas[k], std::move(exp.lhs)});
        out.series.push_back({"lhs delta=" + c.deltas[k] + "/16", std::move(exp.rhs_proxy)});
    }
    out.summary["surface"] = o.format();
    out.summary["alpha"] = alpha;
    out.summary["cone"] = cone_name(c.cone);
    out.summary["per_delta"] = std::move(per_delta);
    if (torus) {
        out.summary["haar_primitive"] = {{"seed", reference_seed(c.seed)}, {"n", c.samples}, {"mean", mean_of(primitive)}};
        out.series.push_back({"haar primitive", std::move(primitive)});
    }
    return out;
}

Outcome siegel_check(const RunConfig& c) {
    Outcome out;
    const Box big{-2, 2, -2, 2};
    const Box unit{0, 1, 0, 1};
    const double small_t = 0.1;
    ConeSpec<double> cone;
    cone.side = ConeSide::OneSided;
    std::vector<Sample> big_counts(c.samples), unit_counts(c.samples), f(c.samples);
    parallel_for(c.samples, [&](std::size_t i) {
        Stream stream(c.seed, i);
        const HaarSample h = sample_x2(stream);
        const std::string input = format_double(h.x) + ";" + format_double(h.y) + ";" + format_double(h.theta);
        big_counts[i] = {input, static_cast<double>(count_in_box(h.basis, big))};
        unit_counts[i] = {input, static_cast<double>(count_in_box(h.basis, unit))};
        f[i] = {input, f_cone(h.basis, cone, 1e6).unorm};
    });
    const EmpiricalCDF f_cdf(statistics(f));
    out.summary["boxes"] = json::array({
        {{"box", "[-2,2)x[-2,2)"}, {"area", big.area()}, {"mean_count", mean_of(big_counts)}},
        {{"box", "[0,1)x[0,1)"}, {"area", unit.area()}, {"mean_count", mean_of(unit_counts)}},
    });
    out.summary["small_t"] = {{"T", small_t},
                              {"fraction", f_cdf.eval(small_t)},
                              {"reference", 6.0 * small_t * small_t / (std::numbers::pi * std::numbers::pi)}};
    out.summary["mean_f"] = mean_estimate(f_cdf);
    out.series.push_back({"count [-2,2)x[-2,2)", std::move(big_counts)});
    out.series.push_back({"count [0,1)x[0,1)", std::move(unit_counts)});
    out.series.push_back({"haar", std::move(f)});
    return out;
}

// Random exact instances; instance i of check k uses stream(seed, k * 2^32 + i).
std::uint64_t draw(Stream& s, std::uint64_t lo, std::uint64_t hi) { return lo + s.next_u64() % (hi - lo + 1); }

Rational draw_fraction(Stream& s, std::uint64_t max_den) {
    const auto d = draw(s, 1, max_den);
    return Rational(Integer(static_cast<unsigned long>(draw(s, 0, d - 1))), Integer(static_cast<unsigned long>(d)));
}

Rational draw_delta(Stream& s, std::uint64_t max_den) {
    const auto d = draw(s, 2, max_den);
    return Rational(Integer(static_cast<unsigned long>(draw(s, 1, std::max<std::uint64_t>(1, d / 4)))),
                    Integer(static_cast<unsigned long>(d)));
}

struct OracleCheck {
    std::string name;
    std::size_t count;
    // returns the sample and whether both sides agree
    std::function<std::pair<Sample, bool>(Stream&)> one;
};

Outcome oracle_suite(const RunConfig& c) {
    Outcome out;
    const std::size_t small = std::max<std::size_t>(1, c.samples / 10);
    ConeSpec<Rational> one_sided;
    one_sided.side = ConeSide::OneSided;

    std::vector<OracleCheck> checks;
    checks.push_back({"qmin vs bruteforce", c.samples, [](Stream& s) {
                          const Rational x = draw_fraction(s, 1'000'000);
                          const Rational delta = draw_delta(s, 10'000);
                          const auto fast = qmin(x, delta);
                          const auto slow = qmin_bruteforce(x, delta);
                          return std::pair{Sample{"x=" + x.str() + ";delta=" + delta.str(), fast.q.get_d()},
                                           fast == slow};
                      }});
    checks.push_back({"qmin vs cone minimum", c.samples, [&](Stream& s) {
                          const Rational x = draw_fraction(s, 1'000'000);
                          const Rational delta = draw_delta(s, 10'000);
                          const auto fast = qmin(x, delta);
                          ConeSpec<Rational> cone = one_sided;
                          cone.delta = delta;
                          const auto hit = f_cone_exact(LatticeQ(horocycle_2_exact(x)), cone);
                          return std::pair{Sample{"x=" + x.str() + ";delta=" + delta.str(), fast.q.get_d()},
                                           hit.unorm == Rational(fast.q)};
                      }});
    for (auto [m, n] : {std::pair<std::size_t, std::size_t>{1, 1}, {2, 1}, {1, 2}}) {
        checks.push_back({"linear forms " + std::to_string(m) + "x" + std::to_string(n) + " vs cone minimum", small,
                          [m = m, n = n](Stream& s) {
                              std::vector<Rational> entries;
                              std::string input = "X=";
                              for (std::size_t k = 0; k < m * n; ++k) {
                                  entries.push_back(draw_fraction(s, 1000));
                                  input += (k ? ":" : "") + entries.back().str();
                              }
                              const RationalMatrix x(m, n, entries);
                              const Rational delta(Integer(1), Integer(static_cast<unsigned long>(draw(s, 2, 200))));
                              const auto q = q_mn(x, delta);
                              ConeSpec<Rational> cone;
                              cone.n = n;
                              cone.m = m;
                              cone.delta = delta;
                              const auto hit = f_cone_exact(LatticeQ(horocycle_mn_exact(x)), cone);
                              bool agree = hit.unorm == Rational(static_cast<long>(q.qnorm));
                              if (m == 1 && n == 1) agree = agree && qmin(entries[0], delta).q == q.qnorm;
                              return std::pair{Sample{input + ";delta=" + delta.str(), static_cast<double>(q.qnorm)},
                                               agree};
                          }});
    }

    json rows = json::array();
    for (std::size_t k = 0; k < checks.size(); ++k) {
        std::vector<Sample> samples(checks[k].count);
        std::vector<char> agree(checks[k].count);
        parallel_for(checks[k].count, [&](std::size_t i) {
            Stream s(c.seed, (static_cast<std::uint64_t>(k) << 32) + i);
            auto [sample, ok] = checks[k].one(s);
            samples[i] = std::move(sample);
            agree[i] = ok;
        });
        std::size_t bad = 0;
        for (char a : agree) bad += a ? 0 : 1;
        out.mismatches += bad;
        rows.push_back({{"check", checks[k].name}, {"instances", checks[k].count}, {"mismatches", bad}});
        out.series.push_back({checks[k].name, std::move(samples)});
    }
    out.summary["checks"] = std::move(rows);
    out.summary["mismatches"] = out.mismatches;
    return out;
}

json config_echo(const RunConfig& c) {
    return {{"experiment", experiment_name(c.experiment)},
            {"m", c.m},
            {"dim-n", c.n_dim},
            {"delta", c.deltas},
            {"n", c.samples},
            {"seed", c.seed},
            {"output", c.output},
            {"cone", cone_name(c.cone)},
            {"origami", c.origami},
            {"alpha", c.alpha},
            {"max-q", c.max_q},
            {"max-shell", c.max_shell}};
}

} // namespace

const std::vector<std::string>& experiment_names() {
    static const std::vector<std::string> names{"theorem-1.2", "theorem-1.4", "theorem-5.5",
                                                "theorem-1.5", "siegel-check", "oracle-suite"};
    return names;
}

std::string experiment_name(Experiment e) { return experiment_names()[static_cast<std::size_t>(e)]; }

Experiment parse_experiment(const std::string& id) {
    const auto& names = experiment_names();
    for (std::size_t k = 0; k < names.size(); ++k)
        if (names[k] == id) return static_cast<Experiment>(k);
    throw std::invalid_argument("unknown experiment \"" + id + "\"");
}

void validate(const RunConfig& c) {
    if (c.samples < 1) throw std::invalid_argument("n must be >= 1");
    if (c.m < 1 || c.n_dim < 1) throw std::invalid_argument("dimensions m and dim-n must be >= 1");
    if (c.deltas.empty()) throw std::invalid_argument("at least one delta is required");
    for (const auto& d : c.deltas) {
        Rational v;
        try {
            v = Rational::parse(d);
        } catch (const std::exception&) {
            throw std::invalid_argument("delta \"" + d + "\" is not a number");
        }
        if (!(v.sign() > 0 && v < Rational(1))) throw std::invalid_argument("delta " + d + " is outside (0, 1)");
    }
    if (c.experiment == Experiment::Theorem14 && c.n_dim != 1)
        throw std::invalid_argument("theorem-1.4 approximates a vector; use theorem-5.5 for dim-n > 1");
    if (c.max_shell < 0) throw std::invalid_argument("max-shell must be >= 0");
    if (c.alpha < 0) throw std::invalid_argument("alpha must be >= 0");
    if (c.output.empty()) throw std::invalid_argument("output path is empty");
}

int run(const RunConfig& config, std::ostream& log) {
    try {
        validate(config);
    } catch (const std::invalid_argument& e) {
        log << "error: " << e.what() << '\n';
        return exit_invalid;
    }
    namespace fs = std::filesystem;
    const fs::path dir(config.output);
    const std::vector<fs::path> files{dir / "samples.csv", dir / "cdf.csv", dir / "manifest.json"};
    std::vector<fs::path> written;
    const auto start = std::chrono::steady_clock::now();
    try {
        Outcome out;
        switch (config.experiment) {
        case Experiment::Theorem12: out = theorem_1_2(config); break;
        case Experiment::Theorem14: out = stabilization(config, false); break;
        case Experiment::Theorem55: out = stabilization(config, true); break;
        case Experiment::Theorem15: out = theorem_1_5(config); break;
        case Experiment::SiegelCheck: out = siegel_check(config); break;
        case Experiment::OracleSuite: out = oracle_suite(config); break;
        }
        const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

        fs::create_directories(dir);
        written.push_back(files[0]);
        write_samples_csv(files[0].string(), out.series);
        written.push_back(files[1]);
        write_cdf_csv(files[1].string(), out.series);

        json manifest = {{"schema_version", manifest_schema_version},
                         {"csv_schema_version", csv_schema_version},
                         {"code_version", code_version},
                         {"rng", {{"algorithm", Philox4x32::algorithm_id}, {"streams", "stream(seed, i) for sample i"}}},
                         {"config", config_echo(config)},
                         {"wall_time_seconds", wall},
                         {"files", {{"samples", "samples.csv"}, {"cdf", "cdf.csv"}}},
                         {"series", json::array()},
                         {"summary", out.summary}};
        for (const auto& s : out.series) manifest["series"].push_back({{"name", s.name}, {"n", s.samples.size()}});
        written.push_back(files[2]);
        write_text_file(files[2].string(), manifest.dump(2) + "\n");

        log << experiment_name(config.experiment) << ": wrote " << files[0].string() << ", " << files[1].string()
            << ", " << files[2].string() << '\n';
        log << out.summary.dump(2) << '\n';
        if (out.mismatches > 0) {
            log << "error: " << out.mismatches << " oracle mismatches\n";
            return exit_mismatch;
        }
        return exit_ok;
    } catch (const NotFoundError& e) {
        log << "error: enumeration cap exceeded: " << e.what() << '\n';
    } catch (const EmptyConeError& e) {
        log << "error: enumeration cap exceeded: " << e.what() << '\n';
    } catch (const std::invalid_argument& e) {
        log << "error: " << e.what() << '\n';
        for (const auto& p : written) fs::remove(p);
        return exit_invalid;
    }
    std::error_code ec;
    for (const auto& p : written) fs::remove(p, ec);
    return exit_cap;
}

int emit_plot_data(const std::vector<std::string>& cdf_files, const std::string& svg_path,
                   const std::string& csv_path, std::ostream& log) {
    if (cdf_files.empty()) {
        log << "error: at least one cdf file is required\n";
        return exit_invalid;
    }
    std::vector<CdfCurve> curves;
    try {
        for (const auto& f : cdf_files) {
            auto part = read_cdf_csv(f);
            curves.insert(curves.end(), part.begin(), part.end());
        }
    } catch (const SchemaError& e) {
        log << "error: " << e.what() << '\n';
        return exit_invalid;
    }
    write_text_file(svg_path, render_svg(curves));
    write_merged_csv(csv_path, curves);
    log << "plot: " << curves.size() << " curves to " << svg_path << " and " << csv_path << '\n';
    return exit_ok;
}

} // namespace mindenom
