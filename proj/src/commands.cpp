#include "braidlab/commands.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <random>

#include "braidlab/fock.hpp"
#include "braidlab/graded.hpp"
#include "braidlab/mixed.hpp"
#include "braidlab/qgroup.hpp"

namespace braidlab {

namespace {

constexpr double kFloatCertTol = 1e-12;  // bound for the seeded random sector

struct NamedParameter {
    BraidParameter parameter;
    std::string label;
    Mode mode;
    double tol;
};

std::string level_label(long r, long s) {
    return std::to_string(r) + "/" + std::to_string(s);
}

// Expands --level/--t into concrete parameters in the config mode.
std::vector<NamedParameter> requested_parameters(const RunConfig& config) {
    std::vector<NamedParameter> out;
    for (const auto& [r, s] : config.levels)
        out.push_back({BraidParameter::level(r, s), level_label(r, s), config.mode, config.tol});
    for (const std::string& spec : config.t_specs)
        out.push_back({parse_t_spec(spec, config.mode), "t=" + spec, config.mode, config.tol});
    return out;
}

// The default verify sweep: levels 1/s for s = 2..12 plus 20 seeded generic
// t values drawn from the annulus 1/2 <= |t| <= 2 (float mode, certified to
// 1e-12). The raw engine draws keep the sweep reproducible bit for bit.
std::vector<NamedParameter> default_sweep(const RunConfig& config) {
    std::vector<NamedParameter> out;
    for (long s = 2; s <= 12; ++s)
        out.push_back(
            {BraidParameter::level(1, s), level_label(1, s), config.mode, config.tol});
    std::mt19937_64 rng(config.seed);
    auto unit = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    for (int i = 0; i < 20; ++i) {
        const double radius = std::exp(std::log(0.5) + unit() * (std::log(2.0) - std::log(0.5)));
        const double angle = unit() * 2.0 * std::numbers::pi;
        const std::complex<double> t = std::polar(radius, angle);
        char label[32];
        std::snprintf(label, sizeof(label), "random-%02d", i);
        out.push_back({BraidParameter::generic(Scalar(t)), label, Mode::floating, kFloatCertTol});
    }
    return out;
}

bool residual_passes(double residual, Mode mode, double tol) {
    return mode == Mode::exact ? residual == 0.0 : residual <= tol;
}

nlohmann::ordered_json spectrum_payload(const SpectrumReport& rep) {
    nlohmann::ordered_json out;
    out["energies"] = rep.energies;
    if (rep.plateau) out["plateau"] = *rep.plateau;
    if (rep.truncation_index) out["truncation_index"] = *rep.truncation_index;
    return out;
}

nlohmann::ordered_json ladder_payload(const LadderReport& rep) {
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (const LadderEntry& e : rep.entries) {
        nlohmann::ordered_json j;
        j["n"] = e.n;
        j["norm_squared"] = scalar_json(e.norm_squared);
        if (e.energy) j["energy"] = *e.energy;
        j["vanished"] = e.vanished;
        entries.push_back(j);
    }
    nlohmann::ordered_json out;
    out["entries"] = entries;
    if (rep.truncation_index) out["truncation_index"] = *rep.truncation_index;
    return out;
}

std::vector<long> expected_energies(const NamedParameter& np, unsigned particles) {
    long top = static_cast<long>(particles);
    if (np.parameter.is_level()) top = std::min<long>(top, np.parameter.s() - 1);
    std::vector<long> out;
    for (long e = 0; e <= top; ++e) out.push_back(e);
    return out;
}

}  // namespace

std::pair<long, long> parse_level_spec(const std::string& spec) {
    const auto slash = spec.find('/');
    if (slash == std::string::npos || slash == 0 || slash + 1 >= spec.size())
        throw ConfigError("level must be r/s: " + spec);
    try {
        std::size_t used = 0;
        const long r = std::stol(spec.substr(0, slash), &used);
        if (used != slash) throw ConfigError("level must be r/s: " + spec);
        const std::string rest = spec.substr(slash + 1);
        const long s = std::stol(rest, &used);
        if (used != rest.size()) throw ConfigError("level must be r/s: " + spec);
        return {r, s};
    } catch (const std::logic_error&) {
        throw ConfigError("level must be r/s: " + spec);
    }
}

std::pair<unsigned, unsigned> parse_particles_spec(const std::string& spec) {
    const auto dots = spec.find("..");
    try {
        if (dots == std::string::npos) {
            const unsigned n = static_cast<unsigned>(std::stoul(spec));
            return {n, n};
        }
        const unsigned lo = static_cast<unsigned>(std::stoul(spec.substr(0, dots)));
        const unsigned hi = static_cast<unsigned>(std::stoul(spec.substr(dots + 2)));
        return {lo, hi};
    } catch (const std::logic_error&) {
        throw ConfigError("particles must be N or a..b: " + spec);
    }
}

BraidParameter parse_t_spec(const std::string& spec, Mode mode) {
    const auto comma = spec.find(',');
    if (comma == std::string::npos)
        throw ConfigError("t must be re,im: " + spec);
    const std::string re = spec.substr(0, comma);
    const std::string im = spec.substr(comma + 1);
    try {
        if (mode == Mode::exact) {
            mpq_class re_q(re), im_q(im);
            re_q.canonicalize();
            im_q.canonicalize();
            return BraidParameter::generic(Scalar(re_q) +
                                           Scalar::i_unit(Mode::exact) * Scalar(im_q));
        }
        return BraidParameter::generic(Scalar::embed_complex(std::stod(re), std::stod(im)));
    } catch (const std::logic_error&) {
        throw ConfigError("t components must be rational (exact mode) or numeric: " + spec);
    }
}

Report cmd_spectrum(const RunConfig& config) {
    const std::vector<NamedParameter> params = requested_parameters(config);
    if (params.empty()) throw ConfigError("spectrum requires --level or --t");

    auto job = [&](std::size_t i) {
        const NamedParameter& np = params[i];
        std::vector<CheckResult> out;
        for (unsigned n = config.particles_lo; n <= config.particles_hi; ++n) {
            const std::string suffix = "[" + np.label + ",N=" + std::to_string(n) + "]";
            const SpectrumReport sp = spectrum(np.parameter, n, np.mode, np.tol);
            CheckResult spectrum_check{"spectrum" + suffix, sp.energies == expected_energies(np, n),
                                       0.0, spectrum_payload(sp)};
            spectrum_check.residual = spectrum_check.passed ? 0.0 : 1.0;
            out.push_back(std::move(spectrum_check));

            const unsigned n_max = config.n_max.value_or(n + 1);
            const LadderReport ld = ladder(np.parameter, n, n_max, np.mode, np.tol);
            bool eigen_ok = true;
            for (const LadderEntry& e : ld.entries)
                if (!e.vanished && !e.energy) eigen_ok = false;
            out.push_back({"ladder" + suffix, eigen_ok, eigen_ok ? 0.0 : 1.0,
                           ladder_payload(ld)});
        }
        return out;
    };

    Report report{config, {}, 0.0};
    for (auto& chunk : run_jobs(config.threads, params.size(), job))
        for (auto& check : chunk) report.checks.push_back(std::move(check));
    return report;
}

namespace {

// Residual of W gamma = (-t) gamma W, recomputed entrywise for the report.
double exchange_residual(const BraidParameter& p, Mode mode) {
    const Matrix w = intertwiner(p, mode).matrix;
    const Matrix gamma = gl11_generators(mode).gamma.matrix;
    const Scalar minus_t = -p.t_value(mode);
    return (w * gamma - (gamma * w).scaled(minus_t)).max_residual();
}

// Residual of (W gamma) (x) gamma = B ((gamma W) (x) gamma).
double braided_product_residual(const BraidParameter& p, Mode mode) {
    const Matrix w = intertwiner(p, mode).matrix;
    const Matrix gamma = gl11_generators(mode).gamma.matrix;
    const Matrix b = braid_matrix(p, mode).matrix;
    return ((w * gamma).kron(gamma) - b * (gamma * w).kron(gamma)).max_residual();
}

// Exact generic t whose -t is not a root of unity has no cyclotomic square
// root, so the intertwiner checks for it run in float mode instead.
bool needs_float_intertwiner(const NamedParameter& np) {
    if (np.mode == Mode::floating || np.parameter.is_level()) return false;
    const Scalar minus_t = -np.parameter.t_value(Mode::exact);
    return !minus_t.as_root_of_unity().has_value();
}

std::vector<CheckResult> verify_parameter(const NamedParameter& np) {
    std::vector<CheckResult> out;
    const std::string suffix = "[" + np.label + "]";

    const double yb = check_yang_baxter(braid_matrix(np.parameter, np.mode));
    out.push_back({"yang_baxter" + suffix, residual_passes(yb, np.mode, np.tol), yb, {}});

    Mode w_mode = np.mode;
    double w_tol = np.tol;
    nlohmann::ordered_json w_note;
    if (needs_float_intertwiner(np)) {
        w_mode = Mode::floating;
        w_tol = kFloatCertTol;
        w_note["note"] = "intertwiner evaluated in float mode: -t is not a root of unity";
    }
    const double ex = exchange_residual(np.parameter, w_mode);
    out.push_back({"exchange" + suffix, residual_passes(ex, w_mode, w_tol), ex, w_note});
    const double bp = braided_product_residual(np.parameter, w_mode);
    out.push_back({"braided_product" + suffix, residual_passes(bp, w_mode, w_tol), bp, w_note});

    const bool is_level = np.parameter.is_level();
    const long cap = is_level ? 4 * np.parameter.s() : 100;
    const std::optional<long> order =
        braid_order_generic(np.parameter, cap, np.mode, np.tol);
    nlohmann::ordered_json payload;
    payload["cap"] = cap;
    if (order)
        payload["finite_order"] = *order;
    else
        payload["finite_order"] = nullptr;
    const bool order_ok = is_level ? (order && *order == np.parameter.s()) : true;
    out.push_back({"braid_order" + suffix, order_ok, order_ok ? 0.0 : 1.0, payload});
    return out;
}

}  // namespace

Report cmd_verify(const RunConfig& config) {
    std::vector<NamedParameter> params = requested_parameters(config);
    if (params.empty()) params = default_sweep(config);

    auto job = [&](std::size_t i) -> std::vector<CheckResult> {
        if (i == 0) {
            const Gl11 g = gl11_generators(config.mode);
            double worst = 0.0;
            nlohmann::ordered_json detail = nlohmann::ordered_json::array();
            for (const BracketCheck& c : gl11_bracket_checks(g.alpha, g.beta, g.gamma, g.delta)) {
                worst = std::max(worst, c.residual);
                nlohmann::ordered_json row;
                row["bracket"] = c.name;
                row["residual"] = c.residual;
                detail.push_back(row);
            }
            return {{"gl11_brackets", residual_passes(worst, config.mode, config.tol), worst,
                     detail}};
        }
        return verify_parameter(params[i - 1]);
    };

    Report report{config, {}, 0.0};
    for (auto& chunk : run_jobs(config.threads, params.size() + 1, job))
        for (auto& check : chunk) report.checks.push_back(std::move(check));
    return report;
}

Report cmd_qgroup(const RunConfig& config) {
    if (config.levels.empty() || !config.t_specs.empty())
        throw ConfigError("qgroup requires root-of-unity levels (--level r/s)");
    const std::vector<NamedParameter> params = requested_parameters(config);

    auto job = [&](std::size_t i) {
        const NamedParameter& np = params[i];
        std::vector<CheckResult> out;
        const std::string suffix = "[" + np.label + "]";
        const unsigned cutoff =
            std::max(2u, config.n_max.value_or(config.particles_hi + 1));
        const QGroupRep rep =
            build_rep_level(np.parameter.r(), np.parameter.s(), cutoff, np.mode);

        const double rel = check_relations(rep);
        out.push_back({"qgroup_relations" + suffix, residual_passes(rel, np.mode, np.tol), rel,
                       {}});
        const double coa = coassociativity_residual(rep);
        out.push_back({"qgroup_coassociativity" + suffix, residual_passes(coa, np.mode, np.tol),
                       coa, {}});

        for (unsigned n = config.particles_lo; n <= config.particles_hi; ++n) {
            const MatchResult m = match_spectrum(np.parameter, n, np.mode, np.tol);
            nlohmann::ordered_json payload;
            payload["qgroup_energies"] = m.qgroup_energies;
            payload["fock_energies"] = m.fock.energies;
            if (m.tower.truncation_index) payload["tower_truncation"] = *m.tower.truncation_index;
            if (m.fock.truncation_index) payload["fock_truncation"] = *m.fock.truncation_index;
            out.push_back({"qgroup_match[" + np.label + ",N=" + std::to_string(n) + "]",
                           m.matched, m.matched ? 0.0 : 1.0, payload});
        }
        return out;
    };

    Report report{config, {}, 0.0};
    for (auto& chunk : run_jobs(config.threads, params.size(), job))
        for (auto& check : chunk) report.checks.push_back(std::move(check));
    return report;
}

namespace {

const char* bracket_class_name(BracketClass kind) {
    switch (kind) {
        case BracketClass::zero: return "zero";
        case BracketClass::central_multiple: return "central-multiple";
        default: return "unresolved";
    }
}

nlohmann::ordered_json table_json(const MixedBracketTable& table) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const TableEntry& e : table.entries) {
        nlohmann::ordered_json row;
        row["lhs"] = e.lhs;
        row["rhs"] = e.rhs;
        row["theta"] = angle_json(e.theta);
        row["kind"] = bracket_class_name(e.kind);
        if (e.kind == BracketClass::central_multiple)
            row["coefficient"] = scalar_json(e.coefficient);
        out.push_back(row);
    }
    return out;
}

}  // namespace

Report cmd_algebra(const RunConfig& config) {
    if (config.levels.empty() || !config.t_specs.empty())
        throw ConfigError("algebra requires root-of-unity levels (--level r/s)");
    if (config.mode != Mode::exact)
        throw ConfigError("algebra runs in exact mode only");
    const std::vector<NamedParameter> params = requested_parameters(config);
    const unsigned lo = std::max(2u, config.particles_lo);
    const unsigned hi = std::max(lo, config.particles_hi);

    auto job = [&](std::size_t i) {
        const NamedParameter& np = params[i];
        std::vector<CheckResult> out;
        for (unsigned n = lo; n <= hi; ++n) {
            const std::string suffix = "[" + np.label + ",N=" + std::to_string(n) + "]";
            const HeisenbergReport h = verify_heisenberg(np.parameter, n);
            nlohmann::ordered_json payload;
            payload["table"] = table_json(h.table);
            payload["violations"] = h.violations;
            out.push_back({"heisenberg" + suffix, h.passed(), h.passed() ? 0.0 : 1.0, payload});

            const bool mixed_ok = check_meta_abelian_mixed(np.parameter, n);
            out.push_back({"meta_abelian_mixed" + suffix, mixed_ok, mixed_ok ? 0.0 : 1.0, {}});

            const OrdinaryMetaReport ord = check_meta_abelian_ordinary(np.parameter, n);
            nlohmann::ordered_json ord_payload;
            nlohmann::ordered_json violations = nlohmann::ordered_json::array();
            for (const TripleViolation& v : ord.violations) {
                nlohmann::ordered_json row;
                row["outer"] = v.outer;
                row["inner"] = nlohmann::ordered_json::array({v.inner_lhs, v.inner_rhs});
                row["residual"] = v.residual;
                violations.push_back(row);
            }
            ord_payload["violation_count"] = ord.violations.size();
            ord_payload["violations"] = violations;
            nlohmann::ordered_json ref;
            ref["outer"] = 1;
            ref["inner"] = nlohmann::ordered_json::array({2, -2});
            ref["value"] = matrix_json(ord.reference_value);
            ref["nonzero"] = ord.reference_nonzero;
            ord_payload["reference_triple"] = ref;
            // The scan is informational: which triples survive is the output.
            out.push_back({"ordinary_triples" + suffix, true, 0.0, ord_payload});
        }
        return out;
    };

    Report report{config, {}, 0.0};
    for (auto& chunk : run_jobs(config.threads, params.size(), job))
        for (auto& check : chunk) report.checks.push_back(std::move(check));
    return report;
}

int run_command(RunConfig config) {
    try {
        validate_config(config);
    } catch (const ConfigError& e) {
        std::cerr << "braidlab: " << e.what() << "\n";
        return kExitConfigError;
    }
    try {
        const auto start = std::chrono::steady_clock::now();
        Report report;
        if (config.command == "spectrum")
            report = cmd_spectrum(config);
        else if (config.command == "verify")
            report = cmd_verify(config);
        else if (config.command == "qgroup")
            report = cmd_qgroup(config);
        else
            report = cmd_algebra(config);
        report.duration_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

        const std::string text = render_report(report);
        if (config.out_path.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(config.out_path, std::ios::binary);
            if (!out) {
                std::cerr << "braidlab: cannot write " << config.out_path << "\n";
                return kExitConfigError;
            }
            out << text;
        }
        return report.all_passed() ? kExitAllPassed : kExitCheckFailed;
    } catch (const SingularLevelError& e) {
        std::cerr << "braidlab: singular level: " << e.what() << "\n";
        return kExitSingularLevel;
    } catch (const ConfigError& e) {
        std::cerr << "braidlab: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const std::invalid_argument& e) {
        // Library-level validation failures are configuration mistakes.
        std::cerr << "braidlab: " << e.what() << "\n";
        return kExitConfigError;
    }
}

}  // namespace braidlab
