// sweep.cpp — Grid evaluation, figure presets and deterministic CSV rendering.

#include "switchqfi/sweep.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <set>
#include <thread>

#include "switchqfi/metrology.hpp"

namespace switchqfi {

namespace {

constexpr std::size_t kMaxGridPoints = 10'000'000;  // keeps the row buffer in memory

const std::set<std::string>& model_parameters() {
    static const std::set<std::string> names{"p", "T_p", "gamma", "xi", "rho00", "p_c"};
    return names;
}

const std::set<std::string>& known_targets() {
    static const std::set<std::string> names{"qfi_control", "cfi_control", "q_factor",
                                             "qfi_standard"};
    return names;
}

struct ModelPoint {
    double p;
    double gamma;
    double xi;
    double rho00;
    double p_c;
};

void assign_parameter(ModelPoint& pt, const std::string& name, double value) {
    if (name == "p")
        pt.p = value;
    else if (name == "T_p")
        pt.p = 1.0 - 0.5 * value;
    else if (name == "gamma")
        pt.gamma = value;
    else if (name == "xi")
        pt.xi = value;
    else if (name == "rho00")
        pt.rho00 = value;
    else
        pt.p_c = value;
}

void check_parameter_domain(const std::string& name, double value) {
    const auto reject = [&](const char* range) {
        throw std::invalid_argument("sweep: " + name + " outside " + range);
    };
    if (name == "p" && !(value >= 0.0 && value <= 1.0)) reject("[0, 1]");
    if (name == "T_p" && !(value >= 0.0 && value <= 2.0)) reject("[0, 2]");
    if (name == "gamma" && !(value >= 0.0 && value <= 1.0)) reject("[0, 1]");
    if (name == "rho00" && !(value >= 0.0 && value <= 1.0)) reject("[0, 1]");
    if (name == "p_c" && !(value >= 0.0 && value <= 1.0)) reject("[0, 1]");
}

double eval_target(const std::string& target, const ModelPoint& pt) {
    const ThermalNoiseParams noise(pt.p, pt.gamma);
    if (target == "qfi_control") return qfi_control(noise, pt.xi, pt.rho00, pt.p_c);
    if (target == "cfi_control")
        return cfi_control(pt.p_c, q_factor(noise, pt.xi, pt.rho00),
                           dq_factor(noise, pt.xi, pt.rho00));
    if (target == "q_factor") return q_factor(noise, pt.xi, pt.rho00);
    // qfi_standard: the optimal reference probe r = e_x against a z-axis unitary,
    // whose value is the benchmark 1 - gamma.
    return qfi_standard({{1.0, 0.0, 0.0}, UnitaryParams({0.0, 0.0, 1.0}, pt.xi), noise});
}

}  // namespace

const std::vector<std::string>& sweep_preset_names() {
    static const std::vector<std::string> names{"fig3", "fig4", "fig5", "fig6", "fig7"};
    return names;
}

SweepSpec sweep_preset(const std::string& name, std::size_t points_override) {
    const double quarter_pi = std::numbers::pi / 4.0;
    SweepSpec spec;
    spec.out_path = name + ".csv";
    if (name == "fig3" || name == "fig4" || name == "fig5") {
        const std::size_t n = points_override ? points_override : 51;
        spec.targets = {"qfi_control"};
        spec.axes = {{"T_p", 0.0, 1.0, n}, {"gamma", 0.0, 1.0, n}};
        spec.fixed = {{"rho00", name == "fig3" ? 1.0 : (name == "fig4" ? 0.0 : 0.5)},
                      {"xi", quarter_pi},
                      {"p_c", 0.5}};
        return spec;
    }
    if (name == "fig6") {
        const std::size_t n = points_override ? points_override : 101;
        spec.targets = {"qfi_control", "qfi_standard"};
        spec.axes = {{"p", 1.0, 0.5, 6}, {"gamma", 0.0, 1.0, n}};
        spec.fixed = {{"rho00", 0.0}, {"xi", quarter_pi}, {"p_c", 0.5}};
        return spec;
    }
    if (name == "fig7") {
        const std::size_t n = points_override ? points_override : 101;
        spec.targets = {"qfi_control"};
        spec.axes = {{"p", 1.0, 0.5, 3}, {"rho00", 0.0, 1.0, n}};
        spec.fixed = {{"gamma", 0.5}, {"xi", quarter_pi}, {"p_c", 0.5}};
        return spec;
    }
    throw std::invalid_argument("unknown sweep preset: " + name);
}

double linspace_value(double start, double stop, std::size_t count, std::size_t i) {
    if (i + 1 == count) return stop;
    return start + (stop - start) * static_cast<double>(i) / static_cast<double>(count - 1);
}

std::string format_value(double v) {
    if (v == 0.0) v = 0.0;  // normalize -0
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string target_column(const std::string& target) {
    if (target == "qfi_control") return "fq_con";
    if (target == "cfi_control") return "fc_con";
    if (target == "q_factor") return "q_c";
    if (target == "qfi_standard") return "fq_std";
    throw std::invalid_argument("unknown sweep target: " + target);
}

std::string render_sweep_csv(const SweepSpec& spec, const RunConfig& defaults, unsigned threads) {
    if (spec.targets.empty()) throw std::invalid_argument("sweep: no target given");
    for (const std::string& t : spec.targets)
        if (!known_targets().count(t)) throw std::invalid_argument("unknown sweep target: " + t);
    if (spec.axes.empty()) throw std::invalid_argument("sweep: no axis given");

    std::set<std::string> assigned;
    bool p_given = false, tp_given = false;
    const auto note_name = [&](const std::string& name) {
        if (!model_parameters().count(name))
            throw std::invalid_argument("unknown sweep parameter: " + name);
        if (!assigned.insert(name).second)
            throw std::invalid_argument("sweep: parameter assigned twice: " + name);
        p_given = p_given || name == "p";
        tp_given = tp_given || name == "T_p";
    };
    for (const SweepAxisSpec& ax : spec.axes) {
        note_name(ax.name);
        if (ax.count < 2) throw std::invalid_argument("sweep: axis needs at least 2 points");
        check_parameter_domain(ax.name, ax.start);
        check_parameter_domain(ax.name, ax.stop);
    }
    for (const auto& [name, value] : spec.fixed) {
        note_name(name);
        check_parameter_domain(name, value);
    }
    if (p_given && tp_given)
        throw std::invalid_argument("sweep: specify either p or T_p, not both (T_p = 2(1-p))");

    // Parameters that are neither axes nor fixed come from the run config.
    ModelPoint base{defaults.p, defaults.gamma, defaults.xi, defaults.rho00, defaults.p_c};
    for (const auto& [name, value] : spec.fixed) assign_parameter(base, name, value);

    std::size_t total = 1;
    for (const SweepAxisSpec& ax : spec.axes) {
        if (ax.count > 0 && total > kMaxGridPoints / ax.count)
            throw std::invalid_argument("sweep: grid exceeds " +
                                        std::to_string(kMaxGridPoints) + " points");
        total *= ax.count;
    }

    std::string header;
    for (const SweepAxisSpec& ax : spec.axes) header += ax.name + ",";
    for (std::size_t t = 0; t < spec.targets.size(); ++t)
        header += target_column(spec.targets[t]) + (t + 1 < spec.targets.size() ? "," : "");

    std::vector<std::string> rows(total);
    const auto eval_row = [&](std::size_t index) {
        ModelPoint pt = base;
        std::string row;
        std::size_t stride = total;  // last axis runs fastest (lexicographic rows)
        for (const SweepAxisSpec& ax : spec.axes) {
            stride /= ax.count;
            const std::size_t i = (index / stride) % ax.count;
            const double v = linspace_value(ax.start, ax.stop, ax.count, i);
            assign_parameter(pt, ax.name, v);
            row += format_value(v) + ",";
        }
        for (std::size_t t = 0; t < spec.targets.size(); ++t)
            row += format_value(eval_target(spec.targets[t], pt)) +
                   (t + 1 < spec.targets.size() ? "," : "");
        rows[index] = std::move(row);
    };

    unsigned workers = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, total));
    if (workers <= 1) {
        for (std::size_t i = 0; i < total; ++i) eval_row(i);
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(workers);
        const std::size_t chunk = (total + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w]() {
                try {
                    const std::size_t begin = static_cast<std::size_t>(w) * chunk;
                    const std::size_t end = std::min(total, begin + chunk);
                    for (std::size_t i = begin; i < end; ++i) eval_row(i);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
        for (std::thread& t : pool) t.join();
        for (const std::exception_ptr& e : errors)
            if (e) std::rethrow_exception(e);
    }

    std::string csv = header + "\n";
    for (const std::string& row : rows) csv += row + "\n";
    return csv;
}

void write_file_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot open for writing: " + tmp);
        out << content;
        out.flush();
        if (!out) throw IoError("write failed: " + tmp);
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw IoError("cannot move output into place: " + path);
    }
}

}  // namespace switchqfi
