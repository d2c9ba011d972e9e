#include "phaseret/config.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace phaseret {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

[[noreturn]] void fail(const std::string& source, std::size_t line, const std::string& msg) {
    throw std::invalid_argument(source + ":" + std::to_string(line) + ": " + msg);
}

double parse_double(const std::string& v, const std::string& source, std::size_t line) {
    const std::string t = trim(v);
    double out = 0.0;
    const auto* last = t.data() + t.size();
    const auto res = std::from_chars(t.data(), last, out);
    if (res.ec != std::errc() || res.ptr != last || t.empty()) {
        fail(source, line, "expected a number, got '" + t + "'");
    }
    return out;
}

std::uint64_t parse_u64(const std::string& v, const std::string& source, std::size_t line) {
    const std::string t = trim(v);
    std::uint64_t out = 0;
    const auto* last = t.data() + t.size();
    const auto res = std::from_chars(t.data(), last, out);
    if (res.ec != std::errc() || res.ptr != last || t.empty()) {
        fail(source, line, "expected a nonnegative integer, got '" + t + "'");
    }
    return out;
}

bool parse_bool(const std::string& v, const std::string& source, std::size_t line) {
    const std::string t = trim(v);
    if (t == "true") return true;
    if (t == "false") return false;
    fail(source, line, "expected true or false, got '" + t + "'");
}

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

void ExperimentConfig::validate() const {
    auto bad = [](const std::string& msg) { throw std::invalid_argument("config: " + msg); };
    if (rows == 0 || cols == 0) bad("rows and cols must be at least 1");
    if (!(pitch > 0.0)) bad("pitch must be positive");
    if (!(wavelength > 0.0)) bad("wavelength must be positive");
    if (z1 < 0.0) bad("z1 must be nonnegative");
    if (z1_zf_multiple < 0.0) bad("z1_zf_multiple must be nonnegative");
    if (delta_z < 0.0) bad("delta_z must be nonnegative");
    if (num_planes == 0) bad("num_planes must be at least 1");
    if (object != "chessboard" && object != "file") bad("object must be chessboard or file");
    if (object == "chessboard") {
        if (tile == 0) bad("tile must be at least 1");
        if (rows % tile != 0 || cols % tile != 0) bad("rows and cols must be divisible by tile");
    }
    if (object == "file" && object_file.empty()) bad("object_file required when object = file");
    if (sigma < 0.0) bad("sigma must be nonnegative");
    if (algorithm != "sbmir" && algorithm != "al" && algorithm != "dal") {
        bad("algorithm must be sbmir, al or dal");
    }
    if (tau_a < 0.0 || tau_phi < 0.0) bad("tau_a and tau_phi must be nonnegative");
    if (gamma < 0.0) bad("gamma must be nonnegative (0 derives 1/sigma)");
    if (!(gamma_a > 0.0) || !(gamma_phi > 0.0)) bad("gamma_a and gamma_phi must be positive");
    if (!(xi > 0.0)) bad("xi must be positive");
    if (block == 0 || step == 0 || step > block) bad("need 1 <= step <= block");
    if (block > rows || block > cols) bad("block must not exceed the grid");
    if (out_dir.empty()) bad("out_dir must not be empty");
}

OpticalSetup ExperimentConfig::to_setup() const {
    OpticalSetup s;
    s.wavelength = wavelength;
    s.pitch = pitch;
    s.delta_z = delta_z;
    s.num_planes = num_planes;
    s.rows = rows;
    s.cols = cols;
    s.z1 = (z1_zf_multiple > 0.0) ? z1_zf_multiple * s.in_focus_distance() : z1;
    return s;
}

AlgoParams ExperimentConfig::to_algo_params(std::size_t num_planes) const {
    const double sigma_eff = (sigma > 0.0) ? sigma : 1.0;
    AlgoParams p;
    p.tau_a = tau_a;
    p.tau_phi = tau_phi;
    p.gamma_r.assign(num_planes, (gamma > 0.0) ? gamma : 1.0 / sigma_eff);
    p.gamma_a = gamma_a;
    p.gamma_phi = gamma_phi;
    p.xi = xi;
    p.alpha_r.assign(num_planes, alpha);
    p.sigma_r.assign(num_planes, sigma_eff);
    p.iterations = iterations;
    return p;
}

ExperimentConfig parse_config(const std::string& text, const std::string& source_name) {
    ExperimentConfig c;

    using Setter = std::function<void(const std::string&, std::size_t)>;
    const std::map<std::string, Setter> setters = {
        {"rows", [&](const std::string& v, std::size_t l) { c.rows = parse_u64(v, source_name, l); }},
        {"cols", [&](const std::string& v, std::size_t l) { c.cols = parse_u64(v, source_name, l); }},
        {"pitch", [&](const std::string& v, std::size_t l) { c.pitch = parse_double(v, source_name, l); }},
        {"wavelength", [&](const std::string& v, std::size_t l) { c.wavelength = parse_double(v, source_name, l); }},
        {"z1", [&](const std::string& v, std::size_t l) { c.z1 = parse_double(v, source_name, l); }},
        {"z1_zf_multiple", [&](const std::string& v, std::size_t l) { c.z1_zf_multiple = parse_double(v, source_name, l); }},
        {"delta_z", [&](const std::string& v, std::size_t l) { c.delta_z = parse_double(v, source_name, l); }},
        {"num_planes", [&](const std::string& v, std::size_t l) { c.num_planes = parse_u64(v, source_name, l); }},
        {"object", [&](const std::string& v, std::size_t) { c.object = trim(v); }},
        {"tile", [&](const std::string& v, std::size_t l) { c.tile = parse_u64(v, source_name, l); }},
        {"object_file", [&](const std::string& v, std::size_t) { c.object_file = trim(v); }},
        {"sigma", [&](const std::string& v, std::size_t l) { c.sigma = parse_double(v, source_name, l); }},
        {"seed", [&](const std::string& v, std::size_t l) { c.seed = parse_u64(v, source_name, l); }},
        {"algorithm", [&](const std::string& v, std::size_t) { c.algorithm = trim(v); }},
        {"iterations", [&](const std::string& v, std::size_t l) { c.iterations = parse_u64(v, source_name, l); }},
        {"warm_iterations", [&](const std::string& v, std::size_t l) { c.warm_iterations = parse_u64(v, source_name, l); }},
        {"reset_multipliers", [&](const std::string& v, std::size_t l) { c.reset_multipliers = parse_bool(v, source_name, l); }},
        {"tau_a", [&](const std::string& v, std::size_t l) { c.tau_a = parse_double(v, source_name, l); }},
        {"tau_phi", [&](const std::string& v, std::size_t l) { c.tau_phi = parse_double(v, source_name, l); }},
        {"gamma", [&](const std::string& v, std::size_t l) { c.gamma = parse_double(v, source_name, l); }},
        {"gamma_a", [&](const std::string& v, std::size_t l) { c.gamma_a = parse_double(v, source_name, l); }},
        {"gamma_phi", [&](const std::string& v, std::size_t l) { c.gamma_phi = parse_double(v, source_name, l); }},
        {"xi", [&](const std::string& v, std::size_t l) { c.xi = parse_double(v, source_name, l); }},
        {"alpha", [&](const std::string& v, std::size_t l) { c.alpha = parse_double(v, source_name, l); }},
        {"block", [&](const std::string& v, std::size_t l) { c.block = parse_u64(v, source_name, l); }},
        {"step", [&](const std::string& v, std::size_t l) { c.step = parse_u64(v, source_name, l); }},
        {"shrink_dc", [&](const std::string& v, std::size_t l) { c.shrink_dc = parse_bool(v, source_name, l); }},
        {"out_dir", [&](const std::string& v, std::size_t) { c.out_dir = trim(v); }},
    };

    std::set<std::string> seen;
    std::istringstream stream(text);
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(stream, raw)) {
        ++line_no;
        const auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        const std::string line = trim(raw);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            fail(source_name, line_no, "expected 'key = value'");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        const auto it = setters.find(key);
        if (it == setters.end()) {
            fail(source_name, line_no, "unknown key '" + key + "'");
        }
        if (!seen.insert(key).second) {
            fail(source_name, line_no, "duplicate key '" + key + "'");
        }
        if (value.empty() && key != "object_file") {
            fail(source_name, line_no, "empty value for '" + key + "'");
        }
        it->second(value, line_no);
    }
    try {
        c.validate();
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(source_name + ": " + e.what());
    }
    return c;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
    std::ifstream is(path);
    if (!is) {
        throw std::runtime_error("load_config: cannot open " + path.string());
    }
    std::ostringstream buf;
    buf << is.rdbuf();
    return parse_config(buf.str(), path.string());
}

std::string serialize_config(const ExperimentConfig& c) {
    std::ostringstream os;
    os << "# experiment configuration\n";
    os << "rows = " << c.rows << "\n";
    os << "cols = " << c.cols << "\n";
    os << "pitch = " << fmt_double(c.pitch) << "\n";
    os << "wavelength = " << fmt_double(c.wavelength) << "\n";
    os << "z1 = " << fmt_double(c.z1) << "\n";
    os << "z1_zf_multiple = " << fmt_double(c.z1_zf_multiple) << "\n";
    os << "delta_z = " << fmt_double(c.delta_z) << "\n";
    os << "num_planes = " << c.num_planes << "\n";
    os << "object = " << c.object << "\n";
    os << "tile = " << c.tile << "\n";
    os << "object_file = " << c.object_file << "\n";
    os << "sigma = " << fmt_double(c.sigma) << "\n";
    os << "seed = " << c.seed << "\n";
    os << "algorithm = " << c.algorithm << "\n";
    os << "iterations = " << c.iterations << "\n";
    os << "warm_iterations = " << c.warm_iterations << "\n";
    os << "reset_multipliers = " << (c.reset_multipliers ? "true" : "false") << "\n";
    os << "tau_a = " << fmt_double(c.tau_a) << "\n";
    os << "tau_phi = " << fmt_double(c.tau_phi) << "\n";
    os << "gamma = " << fmt_double(c.gamma) << "\n";
    os << "gamma_a = " << fmt_double(c.gamma_a) << "\n";
    os << "gamma_phi = " << fmt_double(c.gamma_phi) << "\n";
    os << "xi = " << fmt_double(c.xi) << "\n";
    os << "alpha = " << fmt_double(c.alpha) << "\n";
    os << "block = " << c.block << "\n";
    os << "step = " << c.step << "\n";
    os << "shrink_dc = " << (c.shrink_dc ? "true" : "false") << "\n";
    os << "out_dir = " << c.out_dir << "\n";
    return os.str();
}

}  // namespace phaseret
