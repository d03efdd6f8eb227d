#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "ssr/fiducial.hpp"
#include "ssr/field.hpp"
#include "ssr/group.hpp"
#include "ssr/signals.hpp"

namespace ssr {

// Serialization keeps numbers as 17-significant-digit decimal text, so every
// file read back and re-serialized is byte-identical.

std::string json_to_text(const nlohmann::json& j);
nlohmann::json parse_json_text(const std::string& text);
nlohmann::json read_json_file(const std::string& path);
void write_text_atomic(const std::string& path, const std::string& text);
void write_json_file(const std::string& path, const nlohmann::json& j);

// Signal files keep the family tag they were written with:
//   {"family": "gaussian"|"hermite"|"poly_gauss_chirp"|"samples", "hbar": h, ...}
struct SignalSpec {
    std::string family;
    double hbar = 1.0;
    int hermite_n = 0;                  // family == "hermite"
    std::optional<PolyGaussChirp> chirp;  // family == "poly_gauss_chirp"
    std::optional<SampledSignal> sampled; // family == "samples"
};

SignalSpec signal_spec_from_json(const nlohmann::json& j);
nlohmann::json signal_spec_to_json(const SignalSpec& spec);
Signal build_signal(const SignalSpec& spec);
SignalSpec spec_for_signal(const Signal& s, double hbar);

// Unwraps {"signal": ...} certification wrappers.
SignalSpec read_signal_file(const std::string& path);

// Field CSV: header x,y,re,im; y in the outer loop, x inner; one value per
// row.  Parsed columns are kept verbatim so re-serialization preserves bytes.
struct FieldCsv {
    Eigen::ArrayXd x_points;
    Eigen::ArrayXd y_points;
    Eigen::MatrixXcd values; // (x index, y index)

    UniformGrid1D x_grid() const;
    UniformGrid1D y_grid() const;
};

void write_field_csv(const std::string& path, const ComplexField2D& field);
void write_field_csv(const std::string& path, const FieldCsv& csv);
FieldCsv read_field_csv(const std::string& path);
ComplexField2D to_field(const FieldCsv& csv, double b, double r, double hbar);

// Stack directory: slice_b0_r0.csv, slice_b+h_r0.csv, slice_b-h_r0.csv,
// slice_b0_r+h.csv, slice_b0_r-h.csv and meta.json with
// {b0, r0, h_b, h_r, hbar, grids}.  An optional half/ subdirectory holds the
// same stencil at half steps for convergence diagnostics.
void write_stack(const std::string& dir, const SliceStack& stack,
                 const SliceStack* half = nullptr);
SliceStack read_stack(const std::string& dir);
bool stack_has_half(const std::string& dir);

GroupElement group_from_json(const nlohmann::json& j);
nlohmann::json group_to_json(const GroupElement& g);
AlgebraVector algebra_from_json(const nlohmann::json& j);
nlohmann::json algebra_to_json(const AlgebraVector& a);

FiducialSpec fiducial_spec_from_json(const nlohmann::json& j);
nlohmann::json fiducial_spec_to_json(const FiducialSpec& spec);

// {"signal": ..., "certification": {"norm", "annihilation_residual", "spec"}}
void write_fiducial_file(const std::string& path, const SignalSpec& signal,
                         const FiducialSpec& spec, double norm_value, double residual);

} // namespace ssr
