#pragma once

#include <cstdint>
#include <string>

#include "ssr/field.hpp"
#include "ssr/metamorph.hpp"
#include "ssr/representations.hpp"

namespace ssr {

struct Tolerances {
    double c1 = 1e-6;        // first image-space condition (spectral, one slice)
    double fd = 1e-4;        // finite-difference conditions (C2, S1)
    double roundtrip = 1e-5; // reconstruct-and-retransform
};

// One run's shared knobs.  Flags and JSON config files both land here.
struct RunConfig {
    double hbar = 1.0;
    Eigen::Index n = 512; // grid size, a power of two
    double window = 8.0;  // grid covers [-window, window)
    double b = 0.0;
    double r = 1.0;
    double h_b = 1e-3; // stack step in b
    double h_r = 1e-3; // stack step in r
    SliceWeight normalization = SliceWeight::Default;
    std::uint64_t seed = 12345;
    Tolerances tol;

    UniformGrid1D grid() const;
    RepresentationContext ctx() const;
    CharacterizeTolerances characterize_tolerances() const;
    void validate() const;
};

// Parses {"hbar", "n", "window", "b", "r", "h_b", "h_r", "normalization",
// "seed", "tolerances": {"c1", "fd", "roundtrip"}}.  All keys optional,
// unknown keys rejected.
RunConfig run_config_from_json_text(const std::string& text);
RunConfig load_run_config(const std::string& path);

std::string normalization_name(SliceWeight w);
SliceWeight normalization_from_name(const std::string& name);

} // namespace ssr
