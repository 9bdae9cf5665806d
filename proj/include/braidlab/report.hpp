#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "braidlab/matrix.hpp"

namespace braidlab {

inline constexpr const char* kArtifactVersion = "0.1.0";

// Parsed command-line configuration, validated before any work starts.
struct RunConfig {
    std::string command;                            // spectrum | verify | qgroup | algebra
    std::vector<std::pair<long, long>> levels;      // --level r/s, repeatable
    std::vector<std::string> t_specs;               // --t re,im (rational or decimal)
    unsigned particles_lo = 1, particles_hi = 4;    // --particles N | a..b
    std::optional<unsigned> n_max;                  // --n-max
    Mode mode = Mode::exact;                        // --mode
    double tol = 0.0;                               // --tol (float mode only)
    std::string format = "json";                    // --format json|csv|table
    std::uint64_t seed = 1;                         // --seed
    std::string out_path;                           // --out (empty = stdout)
    bool timing = false;                            // include wall-clock duration
    unsigned threads = 0;                           // 0 = BRAIDLAB_THREADS or hw default
};

class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Throws ConfigError on contradictory settings (e.g. exact mode with a
// nonzero tolerance) and fills in mode-dependent defaults.
void validate_config(RunConfig& config);

struct CheckResult {
    std::string name;
    bool passed = false;
    double residual = 0.0;  // 0 certifies exactness; boolean checks use 0/1
    nlohmann::ordered_json payload;  // check-specific detail, may be null
};

struct Report {
    RunConfig config;
    std::vector<CheckResult> checks;
    double duration_seconds = 0.0;

    bool all_passed() const;
};

// Canonical JSON: config echo, artifact version, checks sorted by name.
// Wall-clock duration is included only when config.timing is set, so repeated
// runs with the same config and seed are byte-identical.
nlohmann::ordered_json report_json(const Report& report);

// json | csv | table rendering of the same structure.
std::string render_report(const Report& report);

// Serialization helpers shared by the subcommands.
nlohmann::ordered_json scalar_json(const Scalar& value);
nlohmann::ordered_json angle_json(const class PiRational& theta);
nlohmann::ordered_json matrix_json(const Matrix& m);

// Process exit codes.
inline constexpr int kExitAllPassed = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitSingularLevel = 3;

// Deterministic parallel map: runs job(i) for i in [0, count) on up to
// config-capped workers; results land in index order.
std::vector<std::vector<CheckResult>> run_jobs(
    unsigned threads, std::size_t count,
    const std::function<std::vector<CheckResult>(std::size_t)>& job);

// Worker cap: explicit config value, else BRAIDLAB_THREADS, else hardware.
unsigned resolve_threads(unsigned configured);

}  // namespace braidlab
