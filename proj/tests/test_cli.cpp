#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "ssr/config.hpp"
#include "ssr/io.hpp"
#include "ssr/metamorph.hpp"

using namespace ssr;
namespace fs = std::filesystem;

namespace {

const RepresentationContext ctx{PlanckConstant(1.0)};

fs::path scratch_dir() {
    static const fs::path dir = [] {
        fs::path p = fs::temp_directory_path() / "ssr_cli_test";
        fs::remove_all(p);
        fs::create_directories(p);
        return p;
    }();
    return dir;
}

int run_cli(const std::string& args) {
    const std::string cmd = std::string("\"") + SSR_CLI_PATH + "\" " + args;
    const int rc = std::system(cmd.c_str());
    if (rc == -1) return -1;
    if (WIFEXITED(rc)) return WEXITSTATUS(rc);
    return -2;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

nlohmann::json strip_timing(nlohmann::json report) {
    report.erase("total_seconds");
    for (auto& [name, entries] : report.at("suites").items()) {
        for (auto& entry : entries) entry.erase("seconds");
    }
    return report;
}

} // namespace

TEST_CASE("verify group suite passes and reports") {
    const fs::path report = scratch_dir() / "verify_group.json";
    CHECK(run_cli("verify --suite group --report " + report.string() + " > /dev/null") == 0);
    const nlohmann::json j = read_json_file(report.string());
    CHECK(j.at("all_passed").get<bool>());
    CHECK(j.at("seed").get<std::uint64_t>() == 12345);
    CHECK(j.at("suites").at("group").size() >= 5);
    bool found = false;
    for (const auto& e : j.at("suites").at("group")) {
        if (e.at("name").get<std::string>() == "multiply_matches_matrix_product") {
            found = true;
            CHECK(e.at("passed").get<bool>());
            CHECK(e.at("value").get<double>() < 1e-12);
        }
    }
    CHECK(found);
}

TEST_CASE("verify reports are deterministic for a fixed seed") {
    const fs::path a = scratch_dir() / "det_a.json";
    const fs::path b = scratch_dir() / "det_b.json";
    CHECK(run_cli("verify --suite intertwining --seed 777 --report " + a.string() +
                  " > /dev/null") == 0);
    CHECK(run_cli("verify --suite intertwining --seed 777 --report " + b.string() +
                  " > /dev/null") == 0);
    CHECK(strip_timing(read_json_file(a.string())) == strip_timing(read_json_file(b.string())));
    CHECK(read_json_file(a.string()).at("seed").get<std::uint64_t>() == 777);
}

TEST_CASE("verify rejects unknown suites") {
    CHECK(run_cli("verify --suite galois 2> /dev/null > /dev/null") == 2);
}

TEST_CASE("transform writes the gaussian field") {
    const fs::path out = scratch_dir() / "field.csv";
    CHECK(run_cli("transform --out " + out.string() + " > /dev/null") == 0);

    const FieldCsv csv = read_field_csv(out.string());
    const ComplexField2D field = to_field(csv, 0.0, 1.0, 1.0);
    const Eigen::Index k0 = field.x_grid().nearest_index(0.0);
    const Eigen::Index i0 = field.y_grid().nearest_index(0.0);
    CHECK(std::abs(field.values()(k0, i0) - Complex(1.0, 0.0)) < 1e-8);

    const std::string first = slurp(out);
    write_field_csv(out.string(), csv);
    CHECK(slurp(out) == first);
}

TEST_CASE("transform of a stored signal keeps the isometry") {
    const fs::path sig = scratch_dir() / "hermite2.json";
    nlohmann::json wrapped;
    wrapped["signal"] = signal_spec_to_json(spec_for_signal(Signal(hermite(2, ctx.hbar)), 1.0));
    write_json_file(sig.string(), wrapped);

    const fs::path out = scratch_dir() / "hermite2_field.csv";
    CHECK(run_cli("transform --signal " + sig.string() + " --b 0.5 --r 0.7 --out " +
                  out.string() + " > /dev/null") == 0);
    const ComplexField2D field = to_field(read_field_csv(out.string()), 0.5, 0.7, 1.0);
    CHECK(std::abs(slice_norm(field) - 1.0) < 1e-6);
}

TEST_CASE("analyze reports the image-space residuals of a written stack") {
    const fs::path field = scratch_dir() / "stack_field.csv";
    const fs::path stack = scratch_dir() / "stack";
    CHECK(run_cli("transform --out " + field.string() + " --stack-out " + stack.string() +
                  " > /dev/null") == 0);
    CHECK(fs::exists(stack / "slice_b0_r0.csv"));
    CHECK(fs::exists(stack / "half" / "meta.json"));

    const fs::path report = scratch_dir() / "report.json";
    CHECK(run_cli("analyze --stack " + stack.string() + " --report " + report.string() +
                  " > /dev/null") == 0);
    const nlohmann::json j = read_json_file(report.string());
    CHECK(j.at("residuals").at("c1").get<double>() < 1e-6);
    CHECK(j.at("residuals").at("c2").get<double>() < 1e-4);
    CHECK(j.at("residuals").at("s1").get<double>() < 1e-4);
    CHECK(j.at("residuals").at("s2").get<double>() < 1e-4);
    CHECK(j.at("residuals").at("parabolic").get<double>() < 1e-3);
    CHECK(j.at("norms").at("center").get<double>() == doctest::Approx(1.0).epsilon(1e-6));
    const double ratio = j.at("convergence_ratios").at("c2").get<double>();
    CHECK(ratio > 3.0);
    CHECK(ratio < 5.0);

    const std::string first = slurp(report);
    write_json_file(report.string(), parse_json_text(first));
    CHECK(slurp(report) == first);
}

TEST_CASE("reconstruct recovers the gaussian from its stack") {
    const fs::path stack = scratch_dir() / "stack"; // written by the analyze case
    REQUIRE(fs::exists(stack / "meta.json"));
    const fs::path out = scratch_dir() / "recovered.json";
    CHECK(run_cli("reconstruct --stack " + stack.string() + " --out " + out.string() +
                  " > /dev/null") == 0);

    const Signal rec = build_signal(read_signal_file(out.string()));
    const SampledSignal samples = rec.samples();
    const Eigen::VectorXcd ref =
        Signal(gaussian_chirp(ctx.hbar)).sample_on(samples.grid).values;
    const double err = std::sqrt(samples.grid.step()) * (samples.values - ref).norm();
    CHECK(err < 1e-5);
}

TEST_CASE("fiducial certifies a valid spec") {
    const fs::path spec = scratch_dir() / "spec.json";
    nlohmann::json j;
    j["E_s"] = 0.1;
    j["E_x"] = 0.3;
    j["E_y"] = 0.5;
    j["E_b"] = 2.0;
    j["E_r"] = 1.0;
    write_json_file(spec.string(), j);

    const fs::path out = scratch_dir() / "phi.json";
    CHECK(run_cli("fiducial --spec " + spec.string() + " --out " + out.string() +
                  " > /dev/null") == 0);
    const nlohmann::json phi = read_json_file(out.string());
    CHECK(phi.at("certification").at("annihilation_residual").get<double>() < 1e-6);
    CHECK(phi.at("certification").at("norm").get<double>() == doctest::Approx(1.0).epsilon(1e-9));

    const std::string first = slurp(out);
    write_json_file(out.string(), parse_json_text(first));
    CHECK(slurp(out) == first);
}

TEST_CASE("fiducial rejects a non-integrable spec with exit code 2") {
    const fs::path spec = scratch_dir() / "bad_spec.json";
    nlohmann::json j;
    j["E_s"] = 0.0;
    j["E_x"] = 0.5;
    j["E_y"] = 1.0;
    j["E_b"] = 0.0;
    j["E_r"] = 0.0;
    write_json_file(spec.string(), j);

    const fs::path err = scratch_dir() / "err.txt";
    CHECK(run_cli("fiducial --spec " + spec.string() + " --out " +
                  (scratch_dir() / "never.json").string() + " 2> " + err.string() +
                  " > /dev/null") == 2);
    CHECK(slurp(err).find("square integrability") != std::string::npos);
}

TEST_CASE("invalid invocations exit with code 2") {
    CHECK(run_cli("reconstruct 2> /dev/null > /dev/null") == 2);
    CHECK(run_cli("2> /dev/null > /dev/null") == 2);
    CHECK(run_cli("transmogrify 2> /dev/null > /dev/null") == 2);

    const fs::path cfg = scratch_dir() / "bad_config.json";
    {
        std::ofstream out(cfg);
        out << "{\"gridsize\": 128}\n";
    }
    CHECK(run_cli("transform --config " + cfg.string() + " 2> /dev/null > /dev/null") == 2);
}
