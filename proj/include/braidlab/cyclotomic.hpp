#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace braidlab::detail {

// Precomputed data for the cyclotomic field Q(zeta_m): the minimal polynomial
// Phi_m and, for every power basis exponent e in [phi(m), m-1], the expansion
// of zeta_m^e over the canonical basis {1, zeta, ..., zeta^{phi(m)-1}}.
struct CycloTable {
    unsigned order = 1;                             // m
    unsigned degree = 1;                            // phi(m)
    std::vector<mpz_class> min_poly;                // Phi_m, monic, size degree+1
    std::vector<std::vector<mpq_class>> reduce_rows;  // rows for e = degree..order-1

    const std::vector<mpq_class>& row(unsigned exponent) const;
};

unsigned totient(unsigned m);

// Integer coefficients of Phi_m (ascending powers).
std::vector<mpz_class> cyclotomic_polynomial(unsigned m);

// Shared, lazily built, thread-safe table cache.
const CycloTable& cyclo_table(unsigned m);

}  // namespace braidlab::detail
