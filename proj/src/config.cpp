// config.cpp — Key=value parsing and run-configuration assembly.

#include "switchqfi/config.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <stdexcept>

namespace switchqfi {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

const std::map<std::string, std::string>* find_key(
    const std::map<std::string, std::string>& file_kv,
    const std::map<std::string, std::string>& flag_kv, const std::string& key) {
    if (flag_kv.count(key)) return &flag_kv;  // flags win
    if (file_kv.count(key)) return &file_kv;
    return nullptr;
}

std::string short_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

void check_range(double v, double lo, double hi, const std::string& what) {
    if (!(v >= lo && v <= hi))
        throw std::invalid_argument(what + " must lie in [" + short_number(lo) + ", " +
                                    short_number(hi) + "]");
}

}  // namespace

RunConfig RunConfig::make_default() {
    RunConfig cfg;
    cfg.xi = std::numbers::pi / 4.0;
    return cfg;
}

std::map<std::string, std::string> read_kv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("config file not readable: " + path);
    std::map<std::string, std::string> kv;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const std::string stripped = trim(line);
        if (stripped.empty()) continue;
        const std::size_t eq = stripped.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                        ": expected key = value");
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (key.empty() || value.empty())
            throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                        ": expected key = value");
        kv[key] = value;
    }
    return kv;
}

double parse_real(const std::string& text, const std::string& what) {
    const std::string s = trim(text);
    if (s.empty()) throw std::invalid_argument(what + ": empty value");
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size() || !std::isfinite(v))
        throw std::invalid_argument(what + ": not a finite number: '" + text + "'");
    return v;
}

long parse_integer(const std::string& text, const std::string& what) {
    const std::string s = trim(text);
    if (s.empty()) throw std::invalid_argument(what + ": empty value");
    char* end = nullptr;
    const long v = std::strtol(s.c_str(), &end, 10);
    if (end != s.c_str() + s.size())
        throw std::invalid_argument(what + ": not an integer: '" + text + "'");
    return v;
}

double parse_angle(const std::string& text) {
    const std::string s = trim(text);
    const std::size_t pos = s.find("pi");
    if (pos == std::string::npos) return parse_real(s, "angle");

    const std::string before = trim(s.substr(0, pos));
    std::string after = trim(s.substr(pos + 2));

    double coef = 1.0;
    if (before == "-")
        coef = -1.0;
    else if (before == "+" || before.empty())
        coef = 1.0;
    else if (before.back() == '*')
        coef = parse_real(before.substr(0, before.size() - 1), "angle");
    else
        coef = parse_real(before, "angle");

    double div = 1.0;
    if (!after.empty()) {
        if (after.front() != '/')
            throw std::invalid_argument("angle: expected 'pi' or 'pi/N': '" + text + "'");
        div = parse_real(after.substr(1), "angle");
        if (div == 0.0) throw std::invalid_argument("angle: division by zero");
    }
    return coef * std::numbers::pi / div;
}

Vec3 parse_axis(const std::string& text) {
    const std::string s = trim(text);
    const std::size_t c1 = s.find(',');
    const std::size_t c2 = (c1 == std::string::npos) ? std::string::npos : s.find(',', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
        throw std::invalid_argument("axis: expected 'x,y,z': '" + text + "'");
    Vec3 v{parse_real(s.substr(0, c1), "axis"), parse_real(s.substr(c1 + 1, c2 - c1 - 1), "axis"),
           parse_real(s.substr(c2 + 1), "axis")};
    const double n = norm(v);
    if (n < 1e-12) throw std::invalid_argument("axis: zero vector");
    return (1.0 / n) * v;
}

cdouble parse_complex_pair(const std::string& text) {
    const std::string s = trim(text);
    const std::size_t c = s.find(',');
    if (c == std::string::npos) return {parse_real(s, "rho01"), 0.0};
    return {parse_real(s.substr(0, c), "rho01"), parse_real(s.substr(c + 1), "rho01")};
}

RunConfig build_run_config(const std::map<std::string, std::string>& file_kv,
                           const std::map<std::string, std::string>& flag_kv) {
    static const char* kKnown[] = {"p",     "T_p",  "gamma", "xi",  "rho00",
                                   "rho01", "p_c",  "axis",  "tol", "threads"};
    for (const auto& kv : {file_kv, flag_kv})
        for (const auto& [key, value] : kv) {
            (void)value;
            bool known = false;
            for (const char* k : kKnown) known = known || key == k;
            if (!known) throw std::invalid_argument("unknown configuration key: " + key);
        }

    RunConfig cfg = RunConfig::make_default();

    const auto* p_src = find_key(file_kv, flag_kv, "p");
    const auto* tp_src = find_key(file_kv, flag_kv, "T_p");
    if (p_src && tp_src)
        throw std::invalid_argument("specify either p or T_p, not both (T_p = 2(1-p))");
    if (p_src) {
        cfg.p = parse_real(p_src->at("p"), "p");
        check_range(cfg.p, 0.0, 1.0, "p");
    } else if (tp_src) {
        const double t_p = parse_real(tp_src->at("T_p"), "T_p");
        check_range(t_p, 0.0, 2.0, "T_p");
        cfg.p = 1.0 - 0.5 * t_p;
    }

    if (const auto* src = find_key(file_kv, flag_kv, "gamma")) {
        cfg.gamma = parse_real(src->at("gamma"), "gamma");
        check_range(cfg.gamma, 0.0, 1.0, "gamma");
    }
    if (const auto* src = find_key(file_kv, flag_kv, "xi")) cfg.xi = parse_angle(src->at("xi"));
    if (const auto* src = find_key(file_kv, flag_kv, "rho00")) {
        cfg.rho00 = parse_real(src->at("rho00"), "rho00");
        check_range(cfg.rho00, 0.0, 1.0, "rho00");
    }
    if (const auto* src = find_key(file_kv, flag_kv, "rho01"))
        cfg.rho01 = parse_complex_pair(src->at("rho01"));
    if (const auto* src = find_key(file_kv, flag_kv, "p_c")) {
        cfg.p_c = parse_real(src->at("p_c"), "p_c");
        check_range(cfg.p_c, 0.0, 1.0, "p_c");
    }
    if (const auto* src = find_key(file_kv, flag_kv, "axis")) cfg.axis = parse_axis(src->at("axis"));
    if (const auto* src = find_key(file_kv, flag_kv, "tol")) {
        cfg.tol = parse_real(src->at("tol"), "tol");
        if (!(cfg.tol > 0.0 && cfg.tol < 1.0))
            throw std::invalid_argument("tol must lie in (0, 1)");
    }
    if (const auto* src = find_key(file_kv, flag_kv, "threads")) {
        const long n = parse_integer(src->at("threads"), "threads");
        if (n < 0) throw std::invalid_argument("threads must be nonnegative");
        cfg.threads = static_cast<unsigned>(n);
    }
    return cfg;
}

}  // namespace switchqfi
