#pragma once

#include "braidlab/braid.hpp"
#include "braidlab/report.hpp"

namespace braidlab {

// Argument-string parsing for the CLI surface ("1/3", "2,0", "1..6").
// ConfigError on malformed input.
std::pair<long, long> parse_level_spec(const std::string& spec);
std::pair<unsigned, unsigned> parse_particles_spec(const std::string& spec);
BraidParameter parse_t_spec(const std::string& spec, Mode mode);

// Ladder/spectrum sweep over the requested parameters and particle range.
Report cmd_spectrum(const RunConfig& config);

// Identity suite: gl(1|1) brackets, Yang-Baxter, intertwiner exchange,
// braided product, braid order. With no --level/--t it sweeps levels
// s = 2..12 plus 20 seeded pseudo-random generic t values.
Report cmd_verify(const RunConfig& config);

// Quantum-superalgebra relations, coassociativity, and the spectrum match.
Report cmd_qgroup(const RunConfig& config);

// Mixed-bracket angle table, metaabelianess checks, ordinary triple scan.
Report cmd_algebra(const RunConfig& config);

// Validates, dispatches, renders, writes, and maps errors to exit codes:
// 0 all passed, 1 check failure, 2 configuration error, 3 singular level.
int run_command(RunConfig config);

}  // namespace braidlab
