#include "braidlab/mixed.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>

namespace braidlab {

namespace {

// cos(theta) and i sin(theta) in the operand mode.
Scalar theta_cos(const PiRational& theta, Mode mode) {
    if (mode == Mode::exact) return theta.cos_value();
    return Scalar(std::complex<double>(std::cos(theta.radians()), 0.0));
}

Scalar theta_isin(const PiRational& theta, Mode mode) {
    if (mode == Mode::exact) return theta.i_sin_value();
    return Scalar(std::complex<double>(0.0, std::sin(theta.radians())));
}

// The traceless part and the identity coefficient of a square matrix.
struct CentralSplit {
    Scalar coefficient;
    Matrix traceless;
};

CentralSplit split_central(const Matrix& m) {
    const Scalar dim = m.mode() == Mode::exact
                           ? Scalar(static_cast<long>(m.rows()))
                           : Scalar(std::complex<double>(static_cast<double>(m.rows()), 0.0));
    const Scalar coeff = m.trace() * dim.inverse();
    Matrix traceless = m - Matrix::identity(m.rows(), m.mode()).scaled(coeff);
    return {coeff, std::move(traceless)};
}

}  // namespace

const GradedOperator& GeneratorFamily::get(int index) const {
    if (index == 0) return central;
    const std::size_t k = static_cast<std::size_t>(std::abs(index));
    if (k > creators.size()) throw std::invalid_argument("GeneratorFamily: index out of range");
    return index > 0 ? creators[k - 1] : annihilators[k - 1];
}

std::vector<int> GeneratorFamily::indices() const {
    std::vector<int> out{0};
    for (int k = 1; k <= static_cast<int>(creators.size()); ++k) {
        out.push_back(+k);
        out.push_back(-k);
    }
    return out;
}

GeneratorFamily generator_family(const BraidParameter& p, unsigned particles, Mode mode) {
    if (particles < 1) throw std::invalid_argument("generator_family: particles >= 1 required");
    const Matrix w = intertwiner(p, mode).matrix;
    Matrix gamma(2, 2, mode);
    gamma.at(1, 0) = Scalar::one(mode);
    const Matrix eye = Matrix::identity(2, mode);

    GeneratorFamily family{p, particles, graded_identity(particles, mode), {}, {}};
    for (unsigned k = 1; k <= particles; ++k) {
        Matrix op = k == 1 ? gamma : w;
        for (unsigned slot = 2; slot <= particles; ++slot)
            op = op.kron(slot < k ? w : (slot == k ? gamma : eye));
        family.creators.push_back(make_graded(op, particles));
        family.annihilators.push_back(make_graded(op.dagger(), particles));
    }
    return family;
}

GradedOperator mixed_bracket(const GradedOperator& x, const GradedOperator& y,
                             const PiRational& theta) {
    if (x.dim() != y.dim())
        throw std::invalid_argument("mixed_bracket: dimension mismatch");
    const Mode mode = x.mode();
    const Matrix comm = bracket(x, y, BracketKind::commutator).matrix;
    const Matrix anti = bracket(x, y, BracketKind::anticommutator).matrix;
    return make_graded(comm.scaled(theta_isin(theta, mode)) + anti.scaled(theta_cos(theta, mode)),
                       x.particles);
}

std::optional<AngleSolution> solve_angle(const GradedOperator& x, const GradedOperator& y) {
    if (x.mode() != Mode::exact || y.mode() != Mode::exact)
        throw ModeMismatchError("solve_angle: exact operands required (see solve_angle_approx)");
    if (x.dim() != y.dim())
        throw std::invalid_argument("solve_angle: dimension mismatch");

    const Matrix comm = bracket(x, y, BracketKind::commutator).matrix;
    const Matrix anti = bracket(x, y, BracketKind::anticommutator).matrix;
    auto [a_coeff, a_prime] = split_central(anti);
    // A commutator is traceless, so its central part is always zero.
    const Matrix& c_prime = comm;

    const bool anti_central = a_prime.fast_zero();
    const bool anti_coeff_zero = a_coeff.fast_zero();

    if (c_prime.fast_zero()) {
        if (!anti_central)
            // Only cos(theta) multiplies the noncentral part; kill it.
            return AngleSolution{PiRational(1, 2), BracketClass::zero, Scalar::zero(Mode::exact)};
        if (anti_coeff_zero)
            return AngleSolution{PiRational(0, 1), BracketClass::zero, Scalar::zero(Mode::exact)};
        return AngleSolution{PiRational(0, 1), BracketClass::central_multiple, a_coeff};
    }

    if (anti_central) {
        // sin(theta) = 0 is forced. theta = 0 keeps the central anticommutator
        // with a + sign; when the anticommutator vanishes outright both
        // representatives give zero and the |theta| >= pi/2 rule picks -pi.
        if (anti_coeff_zero)
            return AngleSolution{PiRational(-1, 1), BracketClass::zero, Scalar::zero(Mode::exact)};
        return AngleSolution{PiRational(0, 1), BracketClass::central_multiple, a_coeff};
    }

    // General two-term case: closure needs [X,Y] = rho * ({X,Y} - a I) with a
    // single scalar rho, and then i sin(theta) rho + cos(theta) = 0, i.e.
    // e^{2 i theta} = (rho - 1)/(rho + 1).
    Scalar rho = Scalar::zero(Mode::exact);
    bool found = false;
    for (std::size_t i = 0; i < a_prime.rows() && !found; ++i)
        for (std::size_t j = 0; j < a_prime.cols() && !found; ++j)
            if (!a_prime.at(i, j).fast_zero()) {
                rho = c_prime.at(i, j) / a_prime.at(i, j);
                found = true;
            }
    if (c_prime != a_prime.scaled(rho)) return std::nullopt;

    const Scalar one = Scalar::one(Mode::exact);
    if ((rho - one).fast_zero() || (rho + one).fast_zero()) return std::nullopt;
    const Scalar nu = (rho - one) / (rho + one);
    if (!(nu * nu.conj() - one).fast_zero()) return std::nullopt;  // |nu| != 1: no real angle
    const auto root = nu.as_root_of_unity();
    if (!root) return std::nullopt;  // closes only at an irrational angle
    const auto [m, k] = *root;

    PiRational candidate(static_cast<long>(k), static_cast<long>(m));
    PiRational alternate = candidate - PiRational(1, 1);
    const mpq_class half(1, 2);
    const mpq_class mag_c = abs(candidate.multiple_of_pi());
    const mpq_class mag_a = abs(alternate.multiple_of_pi());
    PiRational theta = candidate;
    if (mag_a > mag_c)
        theta = alternate;
    else if (mag_a == mag_c && alternate.multiple_of_pi() > candidate.multiple_of_pi())
        theta = alternate;

    // Confirm the assembled bracket before classifying.
    const Matrix value =
        comm.scaled(theta.i_sin_value()) + anti.scaled(theta.cos_value());
    auto [v_coeff, v_prime] = split_central(value);
    if (!v_prime.fast_zero()) return std::nullopt;
    if (v_coeff.fast_zero())
        return AngleSolution{theta, BracketClass::zero, Scalar::zero(Mode::exact)};
    return AngleSolution{theta, BracketClass::central_multiple, v_coeff};
}

std::optional<double> solve_angle_approx(const GradedOperator& x, const GradedOperator& y,
                                         double tol) {
    if (tol <= 0) throw ToleranceError("solve_angle_approx: tol > 0 required");
    const std::size_t d = x.dim();
    if (d != y.dim()) throw std::invalid_argument("solve_angle_approx: dimension mismatch");
    const Matrix comm = bracket(x, y, BracketKind::commutator).matrix.to_float();
    const Matrix anti = bracket(x, y, BracketKind::anticommutator).matrix.to_float();
    auto [a_coeff, a_prime] = split_central(anti);

    auto closes = [&](double theta) {
        const Scalar is(std::complex<double>(0.0, std::sin(theta)));
        const Scalar co(std::complex<double>(std::cos(theta), 0.0));
        auto [coeff, prime] = split_central(comm.scaled(is) + anti.scaled(co));
        return prime.max_residual() <= tol;
    };
    auto pick_branch = [](double theta) {
        // Same branch rule as the exact solver: representative in [-pi, pi)
        // with |theta| >= pi/2; ties resolve to +pi/2.
        const double pi = std::numbers::pi;
        double other = theta > 0 ? theta - pi : theta + pi;
        if (std::abs(other) > std::abs(theta) + 1e-15) return other;
        if (std::abs(std::abs(other) - std::abs(theta)) <= 1e-15) return std::abs(theta);
        return theta;
    };

    if (comm.max_residual() <= tol) {
        if (a_prime.max_residual() > tol) return std::numbers::pi / 2;
        return 0.0;
    }
    if (a_prime.max_residual() <= tol) {
        if (std::abs(a_coeff.approx()) <= tol) return -std::numbers::pi;
        return 0.0;
    }

    std::size_t bi = 0, bj = 0;
    double best = 0.0;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const double mag = std::abs(a_prime.at(i, j).approx());
            if (mag > best) best = mag, bi = i, bj = j;
        }
    const std::complex<double> rho = comm.at(bi, bj).approx() / a_prime.at(bi, bj).approx();
    const std::complex<double> nu = (rho - 1.0) / (rho + 1.0);
    if (std::abs(std::abs(nu) - 1.0) > tol) return std::nullopt;
    const double theta = pick_branch(std::arg(nu) / 2.0);
    if (!closes(theta)) return std::nullopt;
    return theta;
}

const TableEntry& MixedBracketTable::at(int lhs, int rhs) const {
    for (const TableEntry& e : entries)
        if (e.lhs == lhs && e.rhs == rhs) return e;
    throw std::invalid_argument("MixedBracketTable: no such pair");
}

namespace {

MixedBracketTable build_table(const GeneratorFamily& family) {
    const std::vector<int> idx = family.indices();
    MixedBracketTable table;
    for (std::size_t a = 0; a < idx.size(); ++a) {
        for (std::size_t b = a; b < idx.size(); ++b) {
            const int lhs = idx[a], rhs = idx[b];
            TableEntry entry{lhs, rhs, PiRational(0, 1), BracketClass::unresolved,
                             Scalar::zero(Mode::exact)};
            if (lhs == 0 || rhs == 0) {
                // Pairs with the central charge close as pure commutators.
                entry.theta = PiRational(1, 2);
                entry.kind = BracketClass::zero;
            } else if (auto sol = solve_angle(family.get(lhs), family.get(rhs))) {
                entry.theta = sol->theta;
                entry.kind = sol->kind;
                entry.coefficient = sol->coefficient;
            }
            table.entries.push_back(entry);
            if (lhs != rhs) {
                TableEntry mirror = entry;
                mirror.lhs = rhs;
                mirror.rhs = lhs;
                mirror.theta = -entry.theta;  // (Y, X)_{-theta} = (X, Y)_theta
                table.entries.push_back(mirror);
            }
        }
    }
    return table;
}

}  // namespace

HeisenbergReport verify_heisenberg(const BraidParameter& p, unsigned particles) {
    if (!p.is_level())
        throw std::invalid_argument("verify_heisenberg: level parameter required");
    if (particles < 2)
        throw std::invalid_argument("verify_heisenberg: particles >= 2 required");
    const GeneratorFamily family = generator_family(p, particles, Mode::exact);
    HeisenbergReport report{p.r(), p.s(), particles, build_table(family), {}};

    auto pair_name = [](int lhs, int rhs) {
        auto one = [](int i) {
            if (i == 0) return std::string("G0");
            return std::string(i > 0 ? "G+" : "G-") + std::to_string(std::abs(i));
        };
        return "(" + one(lhs) + "," + one(rhs) + ")";
    };

    const PiRational cross_angle(p.s() + 2 * p.r(), 2 * p.s());
    for (const TableEntry& e : report.table.entries) {
        if (e.lhs == 0 || e.rhs == 0) continue;
        const std::string name = pair_name(e.lhs, e.rhs);
        if (e.kind == BracketClass::unresolved) {
            report.violations.push_back(name + " has no closing angle");
            continue;
        }
        if (e.lhs == -e.rhs) {
            // Oscillator pairs: the plain anticommutator is the central charge.
            if (e.theta != PiRational(0, 1) || e.kind != BracketClass::central_multiple ||
                e.coefficient != Scalar::one(Mode::exact))
                report.violations.push_back(name + "_0 != G0");
        } else if (e.lhs == e.rhs) {
            if (e.theta != PiRational(0, 1) || e.kind != BracketClass::zero)
                report.violations.push_back(name + "_0 != 0");
        } else {
            if (e.kind != BracketClass::zero)
                report.violations.push_back(name + " does not close to zero");
            if (particles == 2 && e.theta != cross_angle && e.theta != -cross_angle)
                report.violations.push_back(name + " angle off the (s+2r)/(2s) pi branch");
        }
    }
    return report;
}

bool check_meta_abelian_mixed(const BraidParameter& p, unsigned particles) {
    const GeneratorFamily family = generator_family(p, particles, Mode::exact);
    const MixedBracketTable table = build_table(family);
    const std::vector<int> idx = family.indices();
    const PiRational outer_angle(1, 2);
    for (int j : idx)
        for (int k : idx) {
            const TableEntry& e = table.at(j, k);
            if (e.kind == BracketClass::unresolved) return false;
            const GradedOperator inner = mixed_bracket(family.get(j), family.get(k), e.theta);
            for (int i : idx)
                if (!mixed_bracket(family.get(i), inner, outer_angle).matrix.fast_zero())
                    return false;
        }
    return true;
}

OrdinaryMetaReport check_meta_abelian_ordinary(const BraidParameter& p, unsigned particles,
                                               Mode mode, double tol) {
    if (particles < 2)
        throw std::invalid_argument("check_meta_abelian_ordinary: particles >= 2 required");
    if (tol < 0 || (mode == Mode::exact && tol != 0))
        throw ToleranceError("check_meta_abelian_ordinary: tolerance must match the mode");
    const GeneratorFamily family = generator_family(p, particles, mode);
    const std::vector<int> idx = family.indices();
    OrdinaryMetaReport report;
    for (int j : idx)
        for (int k : idx) {
            const GradedOperator inner =
                bracket(family.get(j), family.get(k), BracketKind::commutator);
            if (j == 2 && k == -2) {
                report.reference_value =
                    bracket(family.get(1), inner, BracketKind::commutator).matrix;
                report.reference_nonzero = report.reference_value.max_residual() > tol;
            }
            for (int i : idx) {
                const double residual =
                    bracket(family.get(i), inner, BracketKind::commutator).matrix.max_residual();
                if (residual > tol) report.violations.push_back({i, j, k, residual});
            }
        }
    return report;
}

}  // namespace braidlab
