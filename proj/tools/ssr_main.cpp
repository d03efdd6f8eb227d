#include <cmath>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ssr/config.hpp"
#include "ssr/fiducial.hpp"
#include "ssr/io.hpp"
#include "ssr/metamorph.hpp"
#include "ssr/verify.hpp"

namespace {

using namespace ssr;

// Flags land here before they are merged over an optional config file.
struct CommonFlags {
    std::string config;
    RunConfig defaults;
};

void add_common(CLI::App* sub, CommonFlags& f) {
    sub->add_option("--config", f.config, "JSON run configuration; flags override its values");
    sub->add_option("--hbar", f.defaults.hbar, "Planck constant")->capture_default_str();
    sub->add_option("--n", f.defaults.n, "grid size (power of two)")->capture_default_str();
    sub->add_option("--window", f.defaults.window, "grid half-width")->capture_default_str();
    sub->add_option("--b", f.defaults.b, "slice shear parameter")->capture_default_str();
    sub->add_option("--r", f.defaults.r, "slice squeeze parameter, r > 0")->capture_default_str();
    sub->add_option("--h-b", f.defaults.h_b, "stack step in b")->capture_default_str();
    sub->add_option("--h-r", f.defaults.h_r, "stack step in r")->capture_default_str();
    sub->add_option("--normalization", f.defaults.normalization,
                    "slice measure weight: default | scaled")
        ->transform(CLI::CheckedTransformer(
            std::vector<std::pair<std::string, SliceWeight>>{
                {"default", SliceWeight::Default}, {"scaled", SliceWeight::Scaled}},
            CLI::ignore_case));
    sub->add_option("--seed", f.defaults.seed, "seed for randomized sweeps")
        ->capture_default_str();
    sub->add_option("--tol-c1", f.defaults.tol.c1, "first image-condition tolerance")
        ->capture_default_str();
    sub->add_option("--tol-fd", f.defaults.tol.fd, "finite-difference condition tolerance")
        ->capture_default_str();
    sub->add_option("--tol-roundtrip", f.defaults.tol.roundtrip, "round-trip tolerance")
        ->capture_default_str();
}

RunConfig resolve(const CLI::App* sub, const CommonFlags& f) {
    RunConfig cfg;
    if (!f.config.empty()) cfg = load_run_config(f.config);
    if (sub->count("--hbar")) cfg.hbar = f.defaults.hbar;
    if (sub->count("--n")) cfg.n = f.defaults.n;
    if (sub->count("--window")) cfg.window = f.defaults.window;
    if (sub->count("--b")) cfg.b = f.defaults.b;
    if (sub->count("--r")) cfg.r = f.defaults.r;
    if (sub->count("--h-b")) cfg.h_b = f.defaults.h_b;
    if (sub->count("--h-r")) cfg.h_r = f.defaults.h_r;
    if (sub->count("--normalization")) cfg.normalization = f.defaults.normalization;
    if (sub->count("--seed")) cfg.seed = f.defaults.seed;
    if (sub->count("--tol-c1")) cfg.tol.c1 = f.defaults.tol.c1;
    if (sub->count("--tol-fd")) cfg.tol.fd = f.defaults.tol.fd;
    if (sub->count("--tol-roundtrip")) cfg.tol.roundtrip = f.defaults.tol.roundtrip;
    cfg.validate();
    return cfg;
}

Signal load_signal(const std::string& name_or_path, const RunConfig& cfg) {
    if (name_or_path == "gaussian") {
        return Signal(gaussian_chirp(PlanckConstant(cfg.hbar)));
    }
    const SignalSpec spec = read_signal_file(name_or_path);
    if (std::abs(spec.hbar - cfg.hbar) > 1e-15 * std::abs(cfg.hbar)) {
        throw InvalidSpecError(name_or_path + ": signal hbar " + std::to_string(spec.hbar) +
                               " disagrees with the configured hbar");
    }
    return build_signal(spec);
}

Signal load_fiducial(const std::string& name_or_path, const RunConfig& cfg) {
    if (name_or_path == "gaussian") {
        return Signal(gaussian(cfg.ctx()));
    }
    const nlohmann::json j = read_json_file(name_or_path);
    if (j.is_object() && j.contains("E_s")) {
        return build_fiducial(fiducial_spec_from_json(j), cfg.ctx());
    }
    const SignalSpec spec =
        signal_spec_from_json(j.is_object() && j.contains("signal") ? j.at("signal") : j);
    if (std::abs(spec.hbar - cfg.hbar) > 1e-15 * std::abs(cfg.hbar)) {
        throw InvalidSpecError(name_or_path + ": fiducial hbar disagrees with the configured hbar");
    }
    return build_signal(spec);
}

double finite_or_cap(double v) {
    if (std::isfinite(v)) return v;
    return v > 0 ? 1e308 : -1e308;
}

struct TransformArgs {
    CommonFlags common;
    std::string signal = "gaussian";
    std::string fiducial = "gaussian";
    std::string out = "field.csv";
    std::string stack_out;
};

int run_transform(const CLI::App* sub, const TransformArgs& a) {
    const RunConfig cfg = resolve(sub, a.common);
    const RepresentationContext ctx = cfg.ctx();
    Signal f = load_signal(a.signal, cfg);
    const Signal phi = load_fiducial(a.fiducial, cfg);
    if (f.exact() && (sub->count("--n") || sub->count("--window"))) {
        f = Signal(f.sample_on(cfg.grid()));
    }

    const TransformResult res = covariant_fast(f, phi, cfg.b, cfg.r, ctx);
    write_field_csv(a.out, res.field);
    std::cout << "wrote " << a.out << " (" << res.field.x_grid().count() << " x "
              << res.field.y_grid().count() << " samples, fiducial " << res.fiducial << ")\n";

    if (!a.stack_out.empty()) {
        const SliceProvider provider = [&](double b, double r) {
            return covariant_fast(f, phi, b, r, ctx).field;
        };
        const SliceStack stack = make_slice_stack(provider, cfg.b, cfg.r, cfg.h_b, cfg.h_r);
        const SliceStack half =
            make_slice_stack(provider, cfg.b, cfg.r, cfg.h_b / 2.0, cfg.h_r / 2.0);
        write_stack(a.stack_out, stack, &half);
        std::cout << "wrote stack " << a.stack_out << " (steps " << cfg.h_b << ", " << cfg.h_r
                  << " plus half-step stencil)\n";
    }
    return 0;
}

struct ReconstructArgs {
    CommonFlags common;
    std::string stack;
    std::string fiducial = "gaussian";
    std::string out = "signal.json";
};

int run_reconstruct(const CLI::App* sub, const ReconstructArgs& a) {
    RunConfig cfg = resolve(sub, a.common);
    const SliceStack stack = read_stack(a.stack);
    if (sub->count("--hbar") && std::abs(cfg.hbar - stack.center().hbar()) > 1e-15) {
        throw InvalidSpecError("reconstruct: --hbar disagrees with the stack metadata");
    }
    cfg.hbar = stack.center().hbar();
    const Signal phi = load_fiducial(a.fiducial, cfg);

    const ComplexField2D& center = stack.center();
    const MeasureSpec measure =
        MeasureSpec::dirac(center.b(), center.r(), cfg.normalization);
    const ComplexField2D fields[] = {center};
    const SampledSignal rec = contravariant(fields, phi, measure, cfg.ctx());

    nlohmann::json out;
    out["signal"] = signal_spec_to_json(spec_for_signal(Signal(rec), cfg.hbar));
    write_json_file(a.out, out);
    std::cout << "wrote " << a.out << " (norm " << rec.norm() << ")\n";
    return 0;
}

struct AnalyzeArgs {
    CommonFlags common;
    std::string stack;
    std::string report = "report.json";
};

nlohmann::json residual_block(const SliceStack& stack) {
    const CauchyRiemannResiduals cr = cauchy_riemann_residuals(stack);
    const StructuralResiduals st = structural_residuals(stack);
    const double parabolic = parabolic_residual(to_complex_chart(stack));
    nlohmann::json j;
    j["c1"] = finite_or_cap(cr.c1);
    j["c2"] = finite_or_cap(cr.c2);
    j["s1"] = finite_or_cap(st.s1);
    j["s2"] = finite_or_cap(st.s2);
    j["parabolic"] = finite_or_cap(parabolic);
    return j;
}

int run_analyze(const CLI::App* sub, const AnalyzeArgs& a) {
    const RunConfig cfg = resolve(sub, a.common);
    const SliceStack stack = read_stack(a.stack);

    nlohmann::json report;
    report["stack"] = {{"b0", stack.center().b()},
                       {"r0", stack.center().r()},
                       {"h_b", stack.h_b()},
                       {"h_r", stack.h_r()},
                       {"hbar", stack.center().hbar()}};
    report["residuals"] = residual_block(stack);
    report["norms"] = {{"center", slice_norm(stack.center(), cfg.normalization)},
                       {"b_plus", slice_norm(stack.b_plus(), cfg.normalization)},
                       {"b_minus", slice_norm(stack.b_minus(), cfg.normalization)},
                       {"r_plus", slice_norm(stack.r_plus(), cfg.normalization)},
                       {"r_minus", slice_norm(stack.r_minus(), cfg.normalization)}};

    if (stack_has_half(a.stack)) {
        const SliceStack half = read_stack((std::filesystem::path(a.stack) / "half").string());
        const nlohmann::json coarse = report["residuals"];
        const nlohmann::json fine = residual_block(half);
        nlohmann::json ratios;
        for (const char* key : {"c2", "s1", "s2", "parabolic"}) {
            const double denom = fine.at(key).get<double>();
            ratios[key] = finite_or_cap(denom > 0.0 ? coarse.at(key).get<double>() / denom : 0.0);
        }
        report["half_step"] = fine;
        report["convergence_ratios"] = ratios;
    }

    write_json_file(a.report, report);
    const nlohmann::json& res = report["residuals"];
    std::printf("c1 %.3e  c2 %.3e  s1 %.3e  s2 %.3e  parabolic %.3e\n",
                res.at("c1").get<double>(), res.at("c2").get<double>(),
                res.at("s1").get<double>(), res.at("s2").get<double>(),
                res.at("parabolic").get<double>());
    std::cout << "wrote " << a.report << "\n";
    return 0;
}

struct VerifyArgs {
    CommonFlags common;
    std::string suite = "all";
    std::string report;
};

int run_verify(const CLI::App* sub, const VerifyArgs& a) {
    const RunConfig cfg = resolve(sub, a.common);
    std::vector<std::string> names;
    if (a.suite == "all") {
        names = verify::suite_names();
    } else {
        names.push_back(a.suite);
    }

    nlohmann::json report;
    report["seed"] = cfg.seed;
    nlohmann::json suites = nlohmann::json::object();
    bool all_ok = true;
    double total = 0.0;
    for (const std::string& name : names) {
        const std::vector<verify::Check> checks = verify::run_suite(name, cfg.seed);
        nlohmann::json entries = nlohmann::json::array();
        for (const verify::Check& c : checks) {
            std::printf("[%s] %s/%s  value %.3e  limit %.3e  (%.2f s)%s%s\n",
                        c.passed ? "PASS" : "FAIL", c.suite.c_str(), c.name.c_str(), c.value,
                        c.limit, c.seconds, c.note.empty() ? "" : "  ", c.note.c_str());
            nlohmann::json e;
            e["name"] = c.name;
            e["value"] = finite_or_cap(c.value);
            e["limit"] = finite_or_cap(c.limit);
            e["passed"] = c.passed;
            e["seconds"] = finite_or_cap(c.seconds);
            if (!c.note.empty()) e["note"] = c.note;
            entries.push_back(std::move(e));
            all_ok = all_ok && c.passed;
            total += c.seconds;
        }
        suites[name] = std::move(entries);
    }
    report["suites"] = std::move(suites);
    report["all_passed"] = all_ok;
    report["total_seconds"] = finite_or_cap(total);
    if (!a.report.empty()) {
        write_json_file(a.report, report);
        std::cout << "wrote " << a.report << "\n";
    }
    std::printf("verify: %s (seed %llu, %.2f s)\n", all_ok ? "all checks passed" : "FAILURES",
                static_cast<unsigned long long>(cfg.seed), total);
    return all_ok ? 0 : 1;
}

struct FiducialArgs {
    CommonFlags common;
    std::string spec;
    std::string out = "phi.json";
};

int run_fiducial(const CLI::App* sub, const FiducialArgs& a) {
    const RunConfig cfg = resolve(sub, a.common);
    const FiducialSpec spec = fiducial_spec_from_json(read_json_file(a.spec));
    const Signal phi = build_fiducial(spec, cfg.ctx());
    const double nrm = phi.norm();
    const double residual = annihilation_residual(spec, phi, cfg.ctx());
    write_fiducial_file(a.out, spec_for_signal(phi, cfg.hbar), spec, nrm, residual);
    std::printf("wrote %s (norm %.12g, annihilation residual %.3e)\n", a.out.c_str(), nrm,
                residual);
    if (residual > 1e-6) {
        std::cerr << "fiducial: certification failed, annihilation residual " << residual
                  << " exceeds 1e-6\n";
        return 1;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Covariant transform toolkit for the shear-squeeze-shift group"};
    app.require_subcommand(1);

    TransformArgs t;
    CLI::App* transform = app.add_subcommand(
        "transform", "Covariant transform of a signal on one (b, r) slice");
    add_common(transform, t.common);
    transform->add_option("--signal", t.signal, "signal JSON file, or \"gaussian\"")
        ->capture_default_str();
    transform->add_option("--fiducial", t.fiducial,
                          "fiducial: \"gaussian\", a spec JSON, or a signal JSON")
        ->capture_default_str();
    transform->add_option("--out", t.out, "output field CSV")->capture_default_str();
    transform->add_option("--stack-out", t.stack_out,
                          "also write a five-slice stack (with half-step stencil) here");

    ReconstructArgs rc;
    CLI::App* reconstruct =
        app.add_subcommand("reconstruct", "Contravariant transform of a stored stack");
    add_common(reconstruct, rc.common);
    reconstruct->add_option("--stack", rc.stack, "stack directory")->required();
    reconstruct->add_option("--fiducial", rc.fiducial, "fiducial used for reconstruction")
        ->capture_default_str();
    reconstruct->add_option("--out", rc.out, "output signal JSON")->capture_default_str();

    AnalyzeArgs an;
    CLI::App* analyze =
        app.add_subcommand("analyze", "Image-space residual report for a stored stack");
    add_common(analyze, an.common);
    analyze->add_option("--stack", an.stack, "stack directory")->required();
    analyze->add_option("--report", an.report, "output report JSON")->capture_default_str();

    VerifyArgs v;
    CLI::App* verify = app.add_subcommand("verify", "Run invariant suites");
    add_common(verify, v.common);
    verify->add_option("--suite", v.suite, "suite name or \"all\"")->capture_default_str();
    verify->add_option("--report", v.report, "optional report JSON");

    FiducialArgs fd;
    CLI::App* fiducial =
        app.add_subcommand("fiducial", "Build and certify a fiducial from a coefficient spec");
    add_common(fiducial, fd.common);
    fiducial->add_option("--spec", fd.spec, "coefficient spec JSON")->required();
    fiducial->add_option("--out", fd.out, "output fiducial JSON")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*transform) return run_transform(transform, t);
        if (*reconstruct) return run_reconstruct(reconstruct, rc);
        if (*analyze) return run_analyze(analyze, an);
        if (*verify) return run_verify(verify, v);
        if (*fiducial) return run_fiducial(fiducial, fd);
    } catch (const ssr::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
