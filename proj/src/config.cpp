#include "ssr/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ssr/errors.hpp"

namespace ssr {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& j, std::initializer_list<const char*> allowed,
                         const std::string& where) {
    for (const auto& item : j.items()) {
        bool known = false;
        for (const char* key : allowed) {
            if (item.key() == key) {
                known = true;
                break;
            }
        }
        if (!known) {
            throw InvalidSpecError("config: unknown key \"" + item.key() + "\" in " + where);
        }
    }
}

double take_number(const json& j, const char* key, double fallback) {
    if (!j.contains(key)) return fallback;
    if (!j.at(key).is_number()) {
        throw InvalidSpecError(std::string("config: \"") + key + "\" must be a number");
    }
    return j.at(key).get<double>();
}

} // namespace

UniformGrid1D RunConfig::grid() const { return UniformGrid1D::centered(window, n); }

RepresentationContext RunConfig::ctx() const {
    return RepresentationContext{PlanckConstant(hbar)};
}

CharacterizeTolerances RunConfig::characterize_tolerances() const {
    return CharacterizeTolerances{tol.c1, tol.fd, tol.fd, tol.roundtrip};
}

void RunConfig::validate() const {
    if (!(hbar > 0.0) || !std::isfinite(hbar)) {
        throw InvalidSpecError("config: hbar must be positive and finite");
    }
    if (n < 2 || (n & (n - 1)) != 0) {
        throw InvalidSpecError("config: n must be a power of two, at least 2");
    }
    if (!(window > 0.0) || !std::isfinite(window)) {
        throw InvalidSpecError("config: window must be positive and finite");
    }
    if (!(r > 0.0) || !std::isfinite(r)) {
        throw InvalidSpecError("config: r must be positive and finite");
    }
    if (!std::isfinite(b)) throw InvalidSpecError("config: b must be finite");
    if (!(h_b > 0.0) || !(h_r > 0.0)) {
        throw InvalidSpecError("config: h_b and h_r must be positive");
    }
    if (!(r - h_r > 0.0)) {
        throw InvalidSpecError("config: r - h_r must stay positive");
    }
    if (!(tol.c1 > 0.0) || !(tol.fd > 0.0) || !(tol.roundtrip > 0.0)) {
        throw InvalidSpecError("config: tolerances must be positive");
    }
}

RunConfig run_config_from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw InvalidSpecError(std::string("config: invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw InvalidSpecError("config: top level must be an object");
    reject_unknown_keys(
        j, {"hbar", "n", "window", "b", "r", "h_b", "h_r", "normalization", "seed", "tolerances"},
        "config");

    RunConfig cfg;
    cfg.hbar = take_number(j, "hbar", cfg.hbar);
    if (j.contains("n")) {
        if (!j.at("n").is_number_integer()) {
            throw InvalidSpecError("config: \"n\" must be an integer");
        }
        cfg.n = j.at("n").get<Eigen::Index>();
    }
    cfg.window = take_number(j, "window", cfg.window);
    cfg.b = take_number(j, "b", cfg.b);
    cfg.r = take_number(j, "r", cfg.r);
    cfg.h_b = take_number(j, "h_b", cfg.h_b);
    cfg.h_r = take_number(j, "h_r", cfg.h_r);
    if (j.contains("normalization")) {
        if (!j.at("normalization").is_string()) {
            throw InvalidSpecError("config: \"normalization\" must be a string");
        }
        cfg.normalization = normalization_from_name(j.at("normalization").get<std::string>());
    }
    if (j.contains("seed")) {
        if (!j.at("seed").is_number_unsigned() && !j.at("seed").is_number_integer()) {
            throw InvalidSpecError("config: \"seed\" must be an integer");
        }
        cfg.seed = j.at("seed").get<std::uint64_t>();
    }
    if (j.contains("tolerances")) {
        const json& t = j.at("tolerances");
        if (!t.is_object()) throw InvalidSpecError("config: \"tolerances\" must be an object");
        reject_unknown_keys(t, {"c1", "fd", "roundtrip"}, "tolerances");
        cfg.tol.c1 = take_number(t, "c1", cfg.tol.c1);
        cfg.tol.fd = take_number(t, "fd", cfg.tol.fd);
        cfg.tol.roundtrip = take_number(t, "roundtrip", cfg.tol.roundtrip);
    }
    cfg.validate();
    return cfg;
}

RunConfig load_run_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("config: cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return run_config_from_json_text(buf.str());
}

std::string normalization_name(SliceWeight w) {
    return w == SliceWeight::Scaled ? "scaled" : "default";
}

SliceWeight normalization_from_name(const std::string& name) {
    if (name == "default") return SliceWeight::Default;
    if (name == "scaled") return SliceWeight::Scaled;
    throw InvalidSpecError("config: normalization must be \"default\" or \"scaled\"");
}

} // namespace ssr
