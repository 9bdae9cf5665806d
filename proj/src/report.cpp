#include "braidlab/report.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <thread>

namespace braidlab {

bool Report::all_passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.passed; });
}

void validate_config(RunConfig& config) {
    if (config.command != "spectrum" && config.command != "verify" &&
        config.command != "qgroup" && config.command != "algebra")
        throw ConfigError("unknown command: " + config.command);
    if (config.format != "json" && config.format != "csv" && config.format != "table")
        throw ConfigError("unknown format: " + config.format);
    if (config.particles_lo < 1 || config.particles_lo > config.particles_hi)
        throw ConfigError("invalid particles range");
    if (config.mode == Mode::exact) {
        if (config.tol != 0.0)
            throw ConfigError("exact mode forbids a nonzero tolerance");
    } else {
        if (config.tol < 0.0) throw ConfigError("tolerance must be nonnegative");
        if (config.tol == 0.0) config.tol = 1e-9;  // float default
    }
}

nlohmann::ordered_json scalar_json(const Scalar& value) {
    nlohmann::ordered_json out;
    if (value.is_exact()) {
        nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
        for (const mpq_class& c : value.coefficients()) coeffs.push_back(c.get_str());
        out["exact"] = nlohmann::ordered_json::array({coeffs, value.order()});
    }
    const std::complex<double> z = value.approx();
    out["approx"] = nlohmann::ordered_json::array({z.real(), z.imag()});
    return out;
}

nlohmann::ordered_json angle_json(const PiRational& theta) {
    nlohmann::ordered_json out;
    out["pi_rational"] = theta.to_string();
    out["approx"] = theta.radians();
    return out;
}

nlohmann::ordered_json matrix_json(const Matrix& m) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_json(m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

namespace {

nlohmann::ordered_json config_json(const RunConfig& c) {
    nlohmann::ordered_json out;
    out["command"] = c.command;
    nlohmann::ordered_json levels = nlohmann::ordered_json::array();
    for (const auto& [r, s] : c.levels)
        levels.push_back(std::to_string(r) + "/" + std::to_string(s));
    out["levels"] = levels;
    out["t"] = c.t_specs;
    out["particles"] = nlohmann::ordered_json::array({c.particles_lo, c.particles_hi});
    if (c.n_max) out["n_max"] = *c.n_max;
    out["mode"] = c.mode == Mode::exact ? "exact" : "float";
    out["tol"] = c.tol;
    out["seed"] = c.seed;
    return out;
}

}  // namespace

nlohmann::ordered_json report_json(const Report& report) {
    nlohmann::ordered_json out;
    out["version"] = kArtifactVersion;
    out["config"] = config_json(report.config);
    std::vector<const CheckResult*> ordered;
    ordered.reserve(report.checks.size());
    for (const CheckResult& c : report.checks) ordered.push_back(&c);
    std::sort(ordered.begin(), ordered.end(),
              [](const CheckResult* a, const CheckResult* b) { return a->name < b->name; });
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const CheckResult* c : ordered) {
        nlohmann::ordered_json entry;
        entry["name"] = c->name;
        entry["passed"] = c->passed;
        entry["residual"] = c->residual;
        if (!c->payload.is_null()) entry["detail"] = c->payload;
        checks.push_back(entry);
    }
    out["checks"] = checks;
    out["all_passed"] = report.all_passed();
    if (report.config.timing) out["duration_seconds"] = report.duration_seconds;
    return out;
}

std::string render_report(const Report& report) {
    const nlohmann::ordered_json j = report_json(report);
    if (report.config.format == "json") return j.dump(2) + "\n";
    if (report.config.format == "csv") {
        std::string out = "name,passed,residual\n";
        for (const auto& c : j["checks"]) {
            out += "\"" + c["name"].get<std::string>() + "\",";
            out += c["passed"].get<bool>() ? "true," : "false,";
            char buf[32];
            std::snprintf(buf, sizeof(buf), "%.17g", c["residual"].get<double>());
            out += buf;
            out += "\n";
        }
        return out;
    }
    // table
    std::size_t width = 4;
    for (const auto& c : j["checks"])
        width = std::max(width, c["name"].get<std::string>().size());
    std::string out = "braidlab ";
    out += kArtifactVersion;
    out += " | command: " + report.config.command + "\n";
    for (const auto& c : j["checks"]) {
        std::string name = c["name"].get<std::string>();
        name.resize(width, ' ');
        char buf[64];
        std::snprintf(buf, sizeof(buf), "  %s  %s  %.3g\n", name.c_str(),
                      c["passed"].get<bool>() ? "pass" : "FAIL",
                      c["residual"].get<double>());
        out += buf;
    }
    out += j["all_passed"].get<bool>() ? "ALL PASSED\n" : "FAILURES PRESENT\n";
    return out;
}

unsigned resolve_threads(unsigned configured) {
    if (configured > 0) return configured;
    if (const char* env = std::getenv("BRAIDLAB_THREADS")) {
        const long n = std::strtol(env, nullptr, 10);
        if (n > 0) return static_cast<unsigned>(n);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

std::vector<std::vector<CheckResult>> run_jobs(
    unsigned threads, std::size_t count,
    const std::function<std::vector<CheckResult>(std::size_t)>& job) {
    std::vector<std::vector<CheckResult>> results(count);
    const unsigned workers =
        static_cast<unsigned>(std::min<std::size_t>(resolve_threads(threads), count));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) results[i] = job(i);
        return results;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(count);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
                try {
                    results[i] = job(i);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        });
    for (std::thread& t : pool) t.join();
    for (const std::exception_ptr& e : errors)
        if (e) std::rethrow_exception(e);  // earliest job wins, deterministically
    return results;
}

}  // namespace braidlab
