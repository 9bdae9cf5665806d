#pragma once

#include <optional>
#include <string>
#include <vector>

#include "braidlab/braid.hpp"

namespace braidlab {

// How an angled bracket closes: identically zero, a scalar multiple of the
// central element G_0 = I, or neither.
enum class BracketClass { zero, central_multiple, unresolved };

// The oscillator family on N qubits: G_0 = I (even, central), creators
// G_{+k} = W^{(k-1)} (x) gamma (x) I^{(N-k)}, annihilators G_{-k} = (G_{+k})^.
// Valid indices are 0 and +-1..+-N, enumerated 0, +1, -1, ..., +N, -N.
struct GeneratorFamily {
    BraidParameter parameter;
    unsigned particles = 2;
    GradedOperator central;
    std::vector<GradedOperator> creators;
    std::vector<GradedOperator> annihilators;

    const GradedOperator& get(int index) const;
    std::vector<int> indices() const;
};

GeneratorFamily generator_family(const BraidParameter& p, unsigned particles, Mode mode);

// (X, Y)_theta = i sin(theta) [X, Y] + cos(theta) {X, Y}. theta = 0 is the
// anticommutator, theta = pi/2 is i times the commutator. Exact whenever the
// operands are exact, since i sin and cos of a rational multiple of pi are
// cyclotomic.
GradedOperator mixed_bracket(const GradedOperator& x, const GradedOperator& y,
                             const PiRational& theta);

struct AngleSolution {
    PiRational theta;
    BracketClass kind = BracketClass::zero;
    Scalar coefficient;  // of the identity, when kind == central_multiple
};

// Finds theta in [-pi, pi) with (X, Y)_theta zero or a central multiple, as an
// exact rational multiple of pi (exact mode only). When both theta and
// theta - pi close the bracket, the representative with |theta| >= pi/2 is
// returned; a tie at +-pi/2 resolves to +pi/2. Returns empty when no rational
// angle closes the bracket.
std::optional<AngleSolution> solve_angle(const GradedOperator& x, const GradedOperator& y);

// Float-mode analogue: the angle in radians, or empty. Used for large-s trend
// studies where the exact cyclotomic order would be impractical.
std::optional<double> solve_angle_approx(const GradedOperator& x, const GradedOperator& y,
                                         double tol = 1e-9);

struct TableEntry {
    int lhs = 0, rhs = 0;
    PiRational theta;
    BracketClass kind = BracketClass::zero;
    Scalar coefficient;
};

// One entry per ordered pair of generator indices. Entries are computed once
// per unordered pair in canonical enumeration order and mirrored with
// theta -> -theta (the bracket satisfies (Y, X)_{-theta} = (X, Y)_theta), so
// the table is antisymmetric in the angle by construction.
struct MixedBracketTable {
    std::vector<TableEntry> entries;

    const TableEntry& at(int lhs, int rhs) const;
};

struct HeisenbergReport {
    long r = 0, s = 0;
    unsigned particles = 2;
    MixedBracketTable table;
    std::vector<std::string> violations;

    bool passed() const { return violations.empty(); }
};

// Builds the full angle table and asserts the oscillator relations:
// (G_{+-k}, G_{-+k})_0 = G_0, (G_{+-k}, G_{+-k})_0 = 0, every cross pair
// closes to zero at its solved angle, and (for N = 2) the cross angles are
// +-(s+2r)/(2s) pi. Level parameters only; exact arithmetic.
HeisenbergReport verify_heisenberg(const BraidParameter& p, unsigned particles);

// True iff (G_I, (G_J, G_K)) = 0 for every ordered triple, with the inner
// angle taken from the table and the outer bracket evaluated at +pi/2 (the
// pure-commutator convention for pairs whose partner is central or zero).
bool check_meta_abelian_mixed(const BraidParameter& p, unsigned particles);

struct TripleViolation {
    int outer = 0, inner_lhs = 0, inner_rhs = 0;
    double residual = 0.0;
};

// The same triple scan with ordinary commutators throughout. The returned
// report lists every nonvanishing [G_I, [G_J, G_K]]; it also evaluates the
// nested commutator [G_{+1}, [G_{+2}, G_{-2}]] explicitly, whose inner part
// is diagonal and commutes with G_{+1}, so its value is reported rather than
// presumed.
struct OrdinaryMetaReport {
    std::vector<TripleViolation> violations;
    Matrix reference_value;
    bool reference_nonzero = false;
};

OrdinaryMetaReport check_meta_abelian_ordinary(const BraidParameter& p, unsigned particles,
                                               Mode mode = Mode::exact, double tol = 0.0);

}  // namespace braidlab
