#include "ssr/io.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ssr/errors.hpp"

namespace ssr {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

void append_number_text(std::string& out, double x) {
    if (!std::isfinite(x)) throw IoError("serialization: value is not finite");
    if (x == 0.0) x = 0.0; // avoid "-0"
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    out += buf;
}

bool is_primitive(const json& j) { return !j.is_object() && !j.is_array(); }

void dump_json(std::string& out, const json& j, int depth) {
    const std::string pad(static_cast<size_t>(depth) * 2, ' ');
    const std::string pad_in(static_cast<size_t>(depth + 1) * 2, ' ');
    switch (j.type()) {
    case json::value_t::object: {
        if (j.empty()) {
            out += "{}";
            return;
        }
        out += "{\n";
        bool first = true;
        for (const auto& item : j.items()) {
            if (!first) out += ",\n";
            first = false;
            out += pad_in;
            out += json(item.key()).dump();
            out += ": ";
            dump_json(out, item.value(), depth + 1);
        }
        out += "\n" + pad + "}";
        return;
    }
    case json::value_t::array: {
        if (j.empty()) {
            out += "[]";
            return;
        }
        bool flat = true;
        for (const json& e : j) flat = flat && is_primitive(e);
        if (flat) {
            out += "[";
            for (size_t i = 0; i < j.size(); ++i) {
                if (i > 0) out += ", ";
                dump_json(out, j[i], depth);
            }
            out += "]";
            return;
        }
        out += "[\n";
        for (size_t i = 0; i < j.size(); ++i) {
            if (i > 0) out += ",\n";
            out += pad_in;
            dump_json(out, j[i], depth + 1);
        }
        out += "\n" + pad + "]";
        return;
    }
    case json::value_t::string:
        out += j.dump();
        return;
    case json::value_t::boolean:
        out += j.get<bool>() ? "true" : "false";
        return;
    case json::value_t::number_integer:
        out += std::to_string(j.get<long long>());
        return;
    case json::value_t::number_unsigned:
        out += std::to_string(j.get<unsigned long long>());
        return;
    case json::value_t::number_float:
        append_number_text(out, j.get<double>());
        return;
    case json::value_t::null:
        out += "null";
        return;
    default:
        throw IoError("serialization: unsupported JSON node");
    }
}

double require_number(const json& j, const char* key, const std::string& where) {
    if (!j.contains(key) || !j.at(key).is_number()) {
        throw InvalidSpecError(where + ": missing numeric key \"" + key + "\"");
    }
    return j.at(key).get<double>();
}

Complex complex_from_json(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw InvalidSpecError(where + ": complex values are [re, im] pairs");
    }
    return Complex(j[0].get<double>(), j[1].get<double>());
}

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

std::string format_row(double x, double y, Complex v) {
    std::string line;
    append_number_text(line, x);
    line += ',';
    append_number_text(line, y);
    line += ',';
    append_number_text(line, v.real());
    line += ',';
    append_number_text(line, v.imag());
    line += '\n';
    return line;
}

UniformGrid1D grid_from_points(const Eigen::ArrayXd& pts, const char* axis) {
    if (pts.size() < 2) {
        throw InvalidSpecError(std::string("field csv: axis ") + axis +
                               " needs at least two points");
    }
    const double start = pts[0];
    const double step = pts[1] - pts[0];
    UniformGrid1D grid(start, step, pts.size());
    for (Eigen::Index k = 0; k < pts.size(); ++k) {
        if (std::abs(pts[k] - grid.point(k)) > 1e-9 * std::max(1.0, std::abs(pts[k]))) {
            throw InvalidSpecError(std::string("field csv: axis ") + axis + " is not uniform");
        }
    }
    return grid;
}

json grid_to_json(const UniformGrid1D& g) {
    return json{{"start", g.start()}, {"step", g.step()}, {"count", g.count()}};
}

UniformGrid1D grid_from_json(const json& j, const std::string& where) {
    if (!j.is_object()) throw InvalidSpecError(where + ": grid must be an object");
    const double start = require_number(j, "start", where);
    const double step = require_number(j, "step", where);
    if (!j.contains("count") || !j.at("count").is_number_integer()) {
        throw InvalidSpecError(where + ": missing integer key \"count\"");
    }
    return UniformGrid1D(start, step, j.at("count").get<Eigen::Index>());
}

struct StackFile {
    const char* name;
    int db; // -1, 0, +1 in units of h_b
    int dr;
};

constexpr StackFile kStackFiles[] = {
    {"slice_b0_r0.csv", 0, 0},   {"slice_b+h_r0.csv", 1, 0}, {"slice_b-h_r0.csv", -1, 0},
    {"slice_b0_r+h.csv", 0, 1},  {"slice_b0_r-h.csv", 0, -1},
};

} // namespace

std::string json_to_text(const json& j) {
    std::string out;
    dump_json(out, j, 0);
    out += '\n';
    return out;
}

json parse_json_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw InvalidSpecError(std::string("invalid JSON: ") + e.what());
    }
}

json read_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return json::parse(buf.str());
    } catch (const json::exception& e) {
        throw InvalidSpecError(path + ": invalid JSON: " + e.what());
    }
}

void write_text_atomic(const std::string& path, const std::string& text) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot open " + tmp + " for writing");
        out.write(text.data(), static_cast<std::streamsize>(text.size()));
        if (!out) throw IoError("short write to " + tmp);
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) throw IoError("cannot rename " + tmp + " to " + path + ": " + ec.message());
}

void write_json_file(const std::string& path, const json& j) {
    write_text_atomic(path, json_to_text(j));
}

namespace {

void reject_unknown_keys(const json& j, std::initializer_list<const char*> allowed,
                         const std::string& where) {
    for (const auto& item : j.items()) {
        bool known = false;
        for (const char* key : allowed) known = known || item.key() == key;
        if (!known) throw InvalidSpecError(where + ": unknown key \"" + item.key() + "\"");
    }
}

} // namespace

SignalSpec signal_spec_from_json(const json& j) {
    if (!j.is_object() || !j.contains("family") || !j.at("family").is_string()) {
        throw InvalidSpecError("signal: missing \"family\"");
    }
    SignalSpec spec;
    spec.family = j.at("family").get<std::string>();
    spec.hbar = require_number(j, "hbar", "signal");
    if (!(spec.hbar > 0.0)) throw InvalidSpecError("signal: hbar must be positive");

    if (spec.family == "gaussian") {
        reject_unknown_keys(j, {"family", "hbar"}, "signal");
    } else if (spec.family == "hermite") {
        reject_unknown_keys(j, {"family", "hbar", "n"}, "signal");
    } else if (spec.family == "poly_gauss_chirp") {
        reject_unknown_keys(j, {"family", "hbar", "poly", "alpha", "beta", "gamma"}, "signal");
    } else if (spec.family == "samples") {
        reject_unknown_keys(j, {"family", "hbar", "start", "step", "values"}, "signal");
    }

    if (spec.family == "gaussian") {
        return spec;
    }
    if (spec.family == "hermite") {
        if (!j.contains("n") || !j.at("n").is_number_integer()) {
            throw InvalidSpecError("signal: hermite family needs integer \"n\"");
        }
        spec.hermite_n = j.at("n").get<int>();
        return spec;
    }
    if (spec.family == "poly_gauss_chirp") {
        if (!j.contains("poly") || !j.at("poly").is_array() || j.at("poly").empty()) {
            throw InvalidSpecError("signal: poly_gauss_chirp needs a nonempty \"poly\" array");
        }
        Eigen::VectorXcd poly(j.at("poly").size());
        for (size_t k = 0; k < j.at("poly").size(); ++k) {
            poly[static_cast<Eigen::Index>(k)] = complex_from_json(j.at("poly")[k], "signal poly");
        }
        spec.chirp = PolyGaussChirp(std::move(poly),
                                    complex_from_json(j.at("alpha"), "signal alpha"),
                                    complex_from_json(j.at("beta"), "signal beta"),
                                    complex_from_json(j.at("gamma"), "signal gamma"));
        return spec;
    }
    if (spec.family == "samples") {
        const double start = require_number(j, "start", "signal");
        const double step = require_number(j, "step", "signal");
        if (!j.contains("values") || !j.at("values").is_array() || j.at("values").empty()) {
            throw InvalidSpecError("signal: samples family needs a nonempty \"values\" array");
        }
        Eigen::VectorXcd values(j.at("values").size());
        for (size_t k = 0; k < j.at("values").size(); ++k) {
            values[static_cast<Eigen::Index>(k)] =
                complex_from_json(j.at("values")[k], "signal values");
        }
        const Eigen::Index count = values.size();
        spec.sampled = SampledSignal(UniformGrid1D(start, step, count), std::move(values));
        return spec;
    }
    throw InvalidSpecError("signal: unknown family \"" + spec.family + "\"");
}

json signal_spec_to_json(const SignalSpec& spec) {
    json j;
    j["family"] = spec.family;
    j["hbar"] = spec.hbar;
    if (spec.family == "gaussian") return j;
    if (spec.family == "hermite") {
        j["n"] = spec.hermite_n;
        return j;
    }
    if (spec.family == "poly_gauss_chirp") {
        if (!spec.chirp) throw InvalidSpecError("signal: poly_gauss_chirp spec lacks data");
        json poly = json::array();
        for (Eigen::Index k = 0; k < spec.chirp->poly().size(); ++k) {
            poly.push_back(complex_to_json(spec.chirp->poly()[k]));
        }
        j["poly"] = std::move(poly);
        j["alpha"] = complex_to_json(spec.chirp->alpha());
        j["beta"] = complex_to_json(spec.chirp->beta());
        j["gamma"] = complex_to_json(spec.chirp->gamma());
        return j;
    }
    if (spec.family == "samples") {
        if (!spec.sampled) throw InvalidSpecError("signal: samples spec lacks data");
        j["start"] = spec.sampled->grid.start();
        j["step"] = spec.sampled->grid.step();
        json values = json::array();
        for (Eigen::Index k = 0; k < spec.sampled->values.size(); ++k) {
            values.push_back(complex_to_json(spec.sampled->values[k]));
        }
        j["values"] = std::move(values);
        return j;
    }
    throw InvalidSpecError("signal: unknown family \"" + spec.family + "\"");
}

Signal build_signal(const SignalSpec& spec) {
    const PlanckConstant hbar(spec.hbar);
    if (spec.family == "gaussian") return Signal(gaussian_chirp(hbar));
    if (spec.family == "hermite") return Signal(hermite(spec.hermite_n, hbar));
    if (spec.family == "poly_gauss_chirp") {
        if (!spec.chirp) throw InvalidSpecError("signal: poly_gauss_chirp spec lacks data");
        return Signal(*spec.chirp);
    }
    if (spec.family == "samples") {
        if (!spec.sampled) throw InvalidSpecError("signal: samples spec lacks data");
        return Signal(*spec.sampled);
    }
    throw InvalidSpecError("signal: unknown family \"" + spec.family + "\"");
}

SignalSpec spec_for_signal(const Signal& s, double hbar) {
    SignalSpec spec;
    spec.hbar = hbar;
    if (s.exact()) {
        spec.family = "poly_gauss_chirp";
        spec.chirp = s.chirp();
    } else {
        spec.family = "samples";
        spec.sampled = s.samples();
    }
    return spec;
}

SignalSpec read_signal_file(const std::string& path) {
    json j = read_json_file(path);
    if (j.is_object() && j.contains("signal")) j = j.at("signal");
    return signal_spec_from_json(j);
}

UniformGrid1D FieldCsv::x_grid() const { return grid_from_points(x_points, "x"); }
UniformGrid1D FieldCsv::y_grid() const { return grid_from_points(y_points, "y"); }

void write_field_csv(const std::string& path, const ComplexField2D& field) {
    std::string out = "x,y,re,im\n";
    for (Eigen::Index i = 0; i < field.y_grid().count(); ++i) {
        const double y = field.y_grid().point(i);
        for (Eigen::Index k = 0; k < field.x_grid().count(); ++k) {
            out += format_row(field.x_grid().point(k), y, field.values()(k, i));
        }
    }
    write_text_atomic(path, out);
}

void write_field_csv(const std::string& path, const FieldCsv& csv) {
    std::string out = "x,y,re,im\n";
    for (Eigen::Index i = 0; i < csv.y_points.size(); ++i) {
        for (Eigen::Index k = 0; k < csv.x_points.size(); ++k) {
            out += format_row(csv.x_points[k], csv.y_points[i], csv.values(k, i));
        }
    }
    write_text_atomic(path, out);
}

FieldCsv read_field_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::string line;
    if (!std::getline(in, line) || (line != "x,y,re,im" && line != "x,y,re,im\r")) {
        throw InvalidSpecError(path + ": expected header x,y,re,im");
    }
    std::vector<double> xs, ys, res, ims;
    size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        double vals[4];
        const char* p = line.c_str();
        for (int c = 0; c < 4; ++c) {
            char* end = nullptr;
            errno = 0;
            vals[c] = std::strtod(p, &end);
            if (end == p || errno == ERANGE) {
                throw InvalidSpecError(path + ": bad number at line " + std::to_string(lineno));
            }
            p = end;
            if (c < 3) {
                if (*p != ',') {
                    throw InvalidSpecError(path + ": expected comma at line " +
                                           std::to_string(lineno));
                }
                ++p;
            }
        }
        if (*p != '\0') {
            throw InvalidSpecError(path + ": trailing text at line " + std::to_string(lineno));
        }
        xs.push_back(vals[0]);
        ys.push_back(vals[1]);
        res.push_back(vals[2]);
        ims.push_back(vals[3]);
    }
    if (xs.empty()) throw InvalidSpecError(path + ": no data rows");

    size_t nx = 1;
    while (nx < xs.size() && ys[nx] == ys[0]) ++nx;
    if (xs.size() % nx != 0) {
        throw InvalidSpecError(path + ": row count is not a multiple of the x block size");
    }
    const size_t ny = xs.size() / nx;

    FieldCsv csv;
    csv.x_points.resize(static_cast<Eigen::Index>(nx));
    csv.y_points.resize(static_cast<Eigen::Index>(ny));
    csv.values.resize(static_cast<Eigen::Index>(nx), static_cast<Eigen::Index>(ny));
    for (size_t k = 0; k < nx; ++k) csv.x_points[static_cast<Eigen::Index>(k)] = xs[k];
    for (size_t i = 0; i < ny; ++i) {
        csv.y_points[static_cast<Eigen::Index>(i)] = ys[i * nx];
        for (size_t k = 0; k < nx; ++k) {
            const size_t row = i * nx + k;
            if (xs[row] != xs[k] || ys[row] != ys[i * nx]) {
                throw InvalidSpecError(path + ": rows are not ordered y-outer, x-inner");
            }
            csv.values(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(i)) =
                Complex(res[row], ims[row]);
        }
    }
    return csv;
}

ComplexField2D to_field(const FieldCsv& csv, double b, double r, double hbar) {
    return ComplexField2D(csv.x_grid(), csv.y_grid(), csv.values, b, r, hbar);
}

void write_stack(const std::string& dir, const SliceStack& stack, const SliceStack* half) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw IoError("cannot create directory " + dir + ": " + ec.message());

    const ComplexField2D* slices[5] = {&stack.center(), &stack.b_plus(), &stack.b_minus(),
                                       &stack.r_plus(), &stack.r_minus()};
    for (int k = 0; k < 5; ++k) {
        write_field_csv((fs::path(dir) / kStackFiles[k].name).string(), *slices[k]);
    }
    json meta;
    meta["b0"] = stack.center().b();
    meta["r0"] = stack.center().r();
    meta["h_b"] = stack.h_b();
    meta["h_r"] = stack.h_r();
    meta["hbar"] = stack.center().hbar();
    meta["grids"] = json{{"x", grid_to_json(stack.center().x_grid())},
                         {"y", grid_to_json(stack.center().y_grid())}};
    write_json_file((fs::path(dir) / "meta.json").string(), meta);

    if (half != nullptr) {
        write_stack((fs::path(dir) / "half").string(), *half);
    }
}

SliceStack read_stack(const std::string& dir) {
    const json meta = read_json_file((fs::path(dir) / "meta.json").string());
    const double b0 = require_number(meta, "b0", "stack meta");
    const double r0 = require_number(meta, "r0", "stack meta");
    const double h_b = require_number(meta, "h_b", "stack meta");
    const double h_r = require_number(meta, "h_r", "stack meta");
    const double hbar = require_number(meta, "hbar", "stack meta");
    if (!meta.contains("grids")) throw InvalidSpecError("stack meta: missing \"grids\"");
    const UniformGrid1D x_grid = grid_from_json(meta.at("grids").at("x"), "stack meta x grid");
    const UniformGrid1D y_grid = grid_from_json(meta.at("grids").at("y"), "stack meta y grid");

    std::vector<ComplexField2D> slices;
    slices.reserve(5);
    for (const StackFile& f : kStackFiles) {
        const FieldCsv csv = read_field_csv((fs::path(dir) / f.name).string());
        if (!csv.x_grid().same_as(x_grid, 1e-9) || !csv.y_grid().same_as(y_grid, 1e-9)) {
            throw GridMismatchError(std::string("stack: ") + f.name +
                                    " grids disagree with meta.json");
        }
        slices.emplace_back(x_grid, y_grid, csv.values, b0 + f.db * h_b, r0 + f.dr * h_r, hbar);
    }
    return SliceStack(slices[0], slices[1], slices[2], slices[3], slices[4]);
}

bool stack_has_half(const std::string& dir) {
    return fs::exists(fs::path(dir) / "half" / "meta.json");
}

GroupElement group_from_json(const json& j) {
    if (!j.is_array() || j.size() != 5) {
        throw InvalidSpecError("group element: expected [s, x, y, b, r]");
    }
    double c[5];
    for (size_t k = 0; k < 5; ++k) {
        if (!j[k].is_number()) throw InvalidSpecError("group element: entries must be numbers");
        c[k] = j[k].get<double>();
    }
    return GroupElement(c[0], c[1], c[2], c[3], c[4]);
}

json group_to_json(const GroupElement& g) {
    return json::array({g.s(), g.x(), g.y(), g.b(), g.r()});
}

AlgebraVector algebra_from_json(const json& j) {
    if (!j.is_array() || j.size() != 5) {
        throw InvalidSpecError("algebra vector: expected [S, X, Y, B, R]");
    }
    AlgebraVector a;
    for (size_t k = 0; k < 5; ++k) {
        if (!j[k].is_number()) throw InvalidSpecError("algebra vector: entries must be numbers");
        a[static_cast<Basis>(k)] = j[k].get<double>();
    }
    return a;
}

json algebra_to_json(const AlgebraVector& a) {
    json j = json::array();
    for (int k = 0; k < 5; ++k) j.push_back(a[static_cast<Basis>(k)]);
    return j;
}

FiducialSpec fiducial_spec_from_json(const json& j) {
    if (!j.is_object()) throw InvalidSpecError("fiducial spec: expected an object");
    for (const auto& item : j.items()) {
        if (item.key() != "E_s" && item.key() != "E_x" && item.key() != "E_y" &&
            item.key() != "E_b" && item.key() != "E_r") {
            throw InvalidSpecError("fiducial spec: unknown key \"" + item.key() + "\"");
        }
    }
    FiducialSpec spec;
    spec.e_s = require_number(j, "E_s", "fiducial spec");
    spec.e_x = require_number(j, "E_x", "fiducial spec");
    spec.e_y = require_number(j, "E_y", "fiducial spec");
    spec.e_b = require_number(j, "E_b", "fiducial spec");
    spec.e_r = require_number(j, "E_r", "fiducial spec");
    return spec;
}

json fiducial_spec_to_json(const FiducialSpec& spec) {
    return json{{"E_s", spec.e_s},
                {"E_x", spec.e_x},
                {"E_y", spec.e_y},
                {"E_b", spec.e_b},
                {"E_r", spec.e_r}};
}

void write_fiducial_file(const std::string& path, const SignalSpec& signal,
                         const FiducialSpec& spec, double norm_value, double residual) {
    json j;
    j["signal"] = signal_spec_to_json(signal);
    j["certification"] = json{{"norm", norm_value},
                              {"annihilation_residual", residual},
                              {"spec", fiducial_spec_to_json(spec)}};
    write_json_file(path, j);
}

} // namespace ssr
