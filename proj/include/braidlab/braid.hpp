#pragma once

#include <optional>

#include "braidlab/graded.hpp"

namespace braidlab {

// Either a root-of-unity level (r, s) with t = -e^{2*pi*i*r/s}, or a generic
// nonzero t. Levels validate s >= 2, 1 <= r < s, gcd(r, s) = 1.
class BraidParameter {
public:
    static BraidParameter level(long r, long s);
    static BraidParameter generic(Scalar t);

    bool is_level() const { return is_level_; }
    long r() const;
    long s() const;

    // t in the requested mode. A generic float t cannot be produced in exact
    // mode and throws; exact rational re/im pairs are fine.
    Scalar t_value(Mode mode) const;

    std::string describe() const;

private:
    BraidParameter() = default;
    bool is_level_ = false;
    long r_ = 0, s_ = 0;
    std::optional<Scalar> t_;  // generic only
};

// The 4x4 R-matrix rows (1,0,0,0),(0,1-t,t,0),(0,1,0,0),(0,0,0,-t); even parity.
GradedOperator braid_matrix(const BraidParameter& p, Mode mode);

// Largest entry modulus of LHS - RHS of the braid relation on the 8-dim space.
double check_yang_baxter(const GradedOperator& b);

// W = diag(e^{-i*pi*r/s}, e^{+i*pi*r/s}) at a level; principal-branch
// diag((-t)^{-1/2}, (-t)^{1/2}) for generic t. Exact generic t must be a root
// of unity for the square root to stay in a cyclotomic field.
GradedOperator intertwiner(const BraidParameter& p, Mode mode);

// W*gamma = (-t)*gamma*W within tol (tol = 0 certifies exactness).
bool check_exchange(const GradedOperator& w, const GradedOperator& gamma,
                    const BraidParameter& p, double tol = 0.0);

// (W*gamma) (x) gamma = B_t * ((gamma*W) (x) gamma), the braided-product
// consistency of the intertwiner realization.
bool check_braided_product(const BraidParameter& p, Mode mode, double tol = 0.0);

// Minimal k >= 1 with B^k = I (0 when no k <= cap works), under both phase
// conventions: primary t = -e^{2*pi*i/s} and alternate t' = e^{-2*pi*i/s}.
struct BraidOrderReport {
    long s = 0;
    bool holds_at_s = false;       // B^s = I, primary convention
    long minimal_order = 0;
    bool alt_holds_at_s = false;   // alternate convention
    long alt_minimal_order = 0;
};

BraidOrderReport braid_order(long s, long cap_factor = 4);

// Minimal k <= cap with B_t^k = I for an arbitrary parameter, or nullopt.
std::optional<long> braid_order_generic(const BraidParameter& p, long cap, Mode mode,
                                        double tol = 0.0);

}  // namespace braidlab
