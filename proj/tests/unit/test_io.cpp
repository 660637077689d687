#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "mindenom/io.hpp"
#include "mindenom/run.hpp"

using namespace mindenom;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    explicit TempDir(const std::string& name) : path(fs::temp_directory_path() / ("mindenom_test_" + name)) {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

RunConfig small_config(Experiment e, const fs::path& out) {
    RunConfig c;
    c.experiment = e;
    c.samples = 200;
    c.seed = 11;
    c.deltas = {"1e-2", "1e-3"};
    c.output = out.string();
    return c;
}

} // namespace

TEST_CASE("experiment ids") {
    for (const auto& name : experiment_names()) CHECK(experiment_name(parse_experiment(name)) == name);
    CHECK_THROWS_AS(parse_experiment("theorem-9"), std::invalid_argument);
}

TEST_CASE("config validation") {
    RunConfig c;
    CHECK_NOTHROW(validate(c));
    c.samples = 0;
    CHECK_THROWS_AS(validate(c), std::invalid_argument);
    c = RunConfig{};
    c.deltas = {"1"};
    CHECK_THROWS_AS(validate(c), std::invalid_argument);
    c.deltas = {"0"};
    CHECK_THROWS_AS(validate(c), std::invalid_argument);
    c.deltas = {"abc"};
    CHECK_THROWS_AS(validate(c), std::invalid_argument);
    c.deltas = {};
    CHECK_THROWS_AS(validate(c), std::invalid_argument);
    c = RunConfig{};
    c.m = 0;
    CHECK_THROWS_AS(validate(c), std::invalid_argument);
    c = RunConfig{};
    c.experiment = Experiment::Theorem14;
    c.n_dim = 2;
    CHECK_THROWS_AS(validate(c), std::invalid_argument);
}

TEST_CASE("csv round trip") {
    TempDir dir("csv");
    const std::vector<Series> series{{"a", {{"x", 0.5}, {"y", 1.5}}}, {"b", {{"z", 0.1 + 0.2}}}};
    write_samples_csv((dir.path / "s.csv").string(), series);
    CHECK(slurp(dir.path / "s.csv") ==
          "series,index,input,statistic\na,0,x,0.5\na,1,y,1.5\nb,0,z,0.30000000000000004\n");
    write_cdf_csv((dir.path / "c.csv").string(), series, {0.4, 1.0, 2.0});
    const auto curves = read_cdf_csv((dir.path / "c.csv").string());
    REQUIRE(curves.size() == 2);
    CHECK(curves[0].series == "a");
    CHECK(curves[0].xi == std::vector<double>{0.0, 0.5, 1.0});
    CHECK(curves[1].xi == std::vector<double>{1.0, 1.0, 1.0});
    // 17 significant digits round-trip exactly
    CHECK(std::stod(format_double(0.1 + 0.2)) == 0.1 + 0.2);
}

TEST_CASE("cdf reader rejects malformed files") {
    TempDir dir("schema");
    auto bad = [&](const std::string& body) {
        const auto p = dir.path / "bad.csv";
        write_text_file(p.string(), body);
        CHECK_THROWS_AS(read_cdf_csv(p.string()), SchemaError);
    };
    bad("");
    bad("series,T,xi_hat\n");
    bad("index,input,statistic\n0,a,1\n");
    bad("series,T,xi_hat\na,1\n");
    bad("series,T,xi_hat\na,1,zz\n");
    bad("series,T,xi_hat\na,1,1.5\n");
    CHECK_THROWS_AS(read_cdf_csv((dir.path / "missing.csv").string()), SchemaError);
}

TEST_CASE("plot output") {
    TempDir dir("plot");
    const auto cdf = dir.path / "cdf.csv";
    write_cdf_csv(cdf.string(), {{"one", {{"a", 0.5}, {"b", 2.0}}}});
    std::ostringstream log;
    const auto svg = dir.path / "p.svg", csv = dir.path / "p.csv";
    CHECK(emit_plot_data({cdf.string()}, svg.string(), csv.string(), log) == exit_ok);
    const std::string text = slurp(svg);
    CHECK(text.rfind("<svg", 0) == 0);
    std::size_t polylines = 0;
    for (auto pos = text.find("<polyline"); pos != std::string::npos; pos = text.find("<polyline", pos + 1)) ++polylines;
    CHECK(polylines == 1);
    CHECK(slurp(csv).rfind("source,series,T,xi_hat\n", 0) == 0);

    const auto empty = dir.path / "empty.csv";
    write_text_file(empty.string(), "");
    CHECK(emit_plot_data({empty.string()}, svg.string(), csv.string(), log) == exit_invalid);
    CHECK(emit_plot_data({}, svg.string(), csv.string(), log) == exit_invalid);
}

TEST_CASE("runs are deterministic and write a manifest") {
    TempDir dir("determinism");
    for (Experiment e : {Experiment::Theorem12, Experiment::Theorem14, Experiment::Theorem55, Experiment::Theorem15,
                         Experiment::SiegelCheck, Experiment::OracleSuite}) {
        CAPTURE(experiment_name(e));
        std::ostringstream log;
        RunConfig a = small_config(e, dir.path / "a");
        RunConfig b = small_config(e, dir.path / "b");
        if (e == Experiment::Theorem14 || e == Experiment::Theorem55) a.m = b.m = 2;
        if (e == Experiment::Theorem15) a.origami = b.origami = "h=(1 2)(3);v=(1 3)(2)";
        REQUIRE(run(a, log) == exit_ok);
        REQUIRE(run(b, log) == exit_ok);
        for (const char* f : {"samples.csv", "cdf.csv"}) CHECK(slurp(dir.path / "a" / f) == slurp(dir.path / "b" / f));

        const auto manifest = nlohmann::json::parse(slurp(dir.path / "a" / "manifest.json"));
        CHECK(manifest["schema_version"] == manifest_schema_version);
        CHECK(manifest["rng"]["algorithm"] == "philox4x32-10");
        CHECK(manifest["config"]["experiment"] == experiment_name(e));
        CHECK(manifest["config"]["seed"] == 11);
        CHECK(manifest["wall_time_seconds"].get<double>() >= 0);
        if (e == Experiment::OracleSuite) CHECK(manifest["summary"]["mismatches"] == 0);
    }
}

TEST_CASE("cap failure exits 3 and leaves no files") {
    TempDir dir("cap");
    RunConfig c = small_config(Experiment::Theorem14, dir.path / "out");
    c.m = 2;
    c.max_q = 2;
    std::ostringstream log;
    CHECK(run(c, log) == exit_cap);
    CHECK_FALSE(fs::exists(dir.path / "out" / "samples.csv"));
    CHECK_FALSE(fs::exists(dir.path / "out" / "manifest.json"));

    c = small_config(Experiment::Theorem15, dir.path / "out");
    c.origami = "h=(1 2;v=(1)";
    CHECK(run(c, log) == exit_invalid);
    c.origami = "h=(1 2)(3);v=(1 3)(2)";
    c.alpha = 1;
    CHECK(run(c, log) == exit_invalid);
}
