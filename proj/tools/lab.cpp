#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "mindenom/run.hpp"

using namespace mindenom;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Minimal denominators, lattice cone minima and saddle connections: experiment runner"};
    app.set_version_flag("--version", std::string(code_version));
    app.set_config("--config", "", "TOML file with flat keys; command-line flags override it");
    app.require_subcommand(1);

    RunConfig config;
    std::string cone = "symmetric";
    std::string origami_file;
    app.add_option("--delta", config.deltas, "Scale parameters in (0, 1), exact decimal or p/q")->capture_default_str();
    app.add_option("--n", config.samples, "Sample count per series")->capture_default_str();
    app.add_option("--seed", config.seed, "64-bit seed")->capture_default_str();
    app.add_option("--output,-o", config.output, "Output directory")->capture_default_str();
    app.add_option("--m", config.m, "Number of linear forms (rows of X)")->capture_default_str();
    app.add_option("--dim-n", config.n_dim, "Number of variables (columns of X)")->capture_default_str();
    app.add_option("--cone", cone, "Surface cone: symmetric or printed")
        ->check(CLI::IsMember({"symmetric", "printed"}))
        ->capture_default_str();
    app.add_option("--origami", config.origami, "Square-tiled surface, e.g. \"h=(1 2)(3);v=(1 3)(2)\"");
    app.add_option("--origami-file", origami_file, "File with h= and v= lines")->check(CLI::ExistingFile);
    app.add_option("--max-q", config.max_q, "Denominator cap for theorem-1.4; 0 uses the default")->capture_default_str();
    app.add_option("--max-shell", config.max_shell, "Shell cap for theorem-5.5; 0 uses the default")
        ->capture_default_str();
    app.add_option("--alpha", config.alpha, "Horocycle period; 0 picks the smallest one")->capture_default_str();

    const std::vector<std::pair<std::string, std::string>> descriptions{
        {"theorem-1.2", "Normalized minimal denominators against Haar lattices and horocycle orbits"},
        {"theorem-1.4", "Simultaneous approximation of a vector in dimension m, stabilization across delta"},
        {"theorem-5.5", "Linear forms (m forms in dim-n variables), stabilization across delta"},
        {"theorem-1.5", "Shortest saddle connection in a thin cone along a closed horocycle of a surface"},
        {"siegel-check", "Lattice point counts and small-value law for the Haar sampler"},
        {"oracle-suite", "Exact agreement of fast solvers with brute-force and cone-search oracles"},
    };
    for (const auto& [name, text] : descriptions) app.add_subcommand(name, text)->fallthrough();

    std::vector<std::string> cdf_files;
    std::string svg = "plot.svg", merged = "plot.csv";
    auto* plot = app.add_subcommand("plot", "Overlay cdf.csv files into an SVG and a merged CSV");
    plot->add_option("files", cdf_files, "cdf.csv files")->required();
    plot->add_option("--svg", svg, "SVG output path")->capture_default_str();
    plot->add_option("--csv", merged, "Merged CSV output path")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_invalid;
    }

    if (plot->parsed()) return emit_plot_data(cdf_files, svg, merged, std::cerr);

    try {
        config.experiment = parse_experiment(app.get_subcommands().front()->get_name());
        config.cone = cone == "printed" ? SurfaceCone::Printed : SurfaceCone::Symmetric;
        if (!origami_file.empty()) config.origami = read_file(origami_file);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_invalid;
    }
    return run(config, std::cerr);
}
