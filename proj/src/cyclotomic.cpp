#include "braidlab/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace braidlab::detail {

namespace {

// Exact division of integer polynomials (ascending coefficients), remainder
// must be zero. Used for Phi_m = (x^m - 1) / prod_{d|m, d<m} Phi_d.
std::vector<mpz_class> divide_exact(std::vector<mpz_class> num,
                                    const std::vector<mpz_class>& den) {
    if (den.empty() || den.back() == 0)
        throw std::invalid_argument("divide_exact: zero divisor");
    if (num.size() < den.size())
        throw std::invalid_argument("divide_exact: degree mismatch");
    std::vector<mpz_class> quot(num.size() - den.size() + 1, 0);
    for (std::size_t i = quot.size(); i-- > 0;) {
        mpz_class q = num[i + den.size() - 1] / den.back();
        quot[i] = q;
        if (q != 0) {
            for (std::size_t j = 0; j < den.size(); ++j)
                num[i + j] -= q * den[j];
        }
    }
    for (const auto& c : num)
        if (c != 0) throw std::logic_error("divide_exact: nonzero remainder");
    return quot;
}

std::map<unsigned, std::vector<mpz_class>> g_phi_cache;
std::map<unsigned, std::unique_ptr<CycloTable>> g_table_cache;
std::shared_mutex g_mutex;

std::vector<mpz_class> cyclotomic_polynomial_locked(unsigned m) {
    auto it = g_phi_cache.find(m);
    if (it != g_phi_cache.end()) return it->second;
    // x^m - 1
    std::vector<mpz_class> poly(m + 1, 0);
    poly[0] = -1;
    poly[m] = 1;
    for (unsigned d = 1; d < m; ++d) {
        if (m % d == 0) poly = divide_exact(std::move(poly), cyclotomic_polynomial_locked(d));
    }
    g_phi_cache.emplace(m, poly);
    return poly;
}

std::unique_ptr<CycloTable> build_table(unsigned m) {
    auto table = std::make_unique<CycloTable>();
    table->order = m;
    table->degree = totient(m);
    table->min_poly = cyclotomic_polynomial_locked(m);
    if (table->min_poly.size() != table->degree + 1)
        throw std::logic_error("cyclotomic polynomial degree mismatch");

    const unsigned d = table->degree;
    // x^d mod Phi = -(c_0 + c_1 x + ... + c_{d-1} x^{d-1})  (Phi monic)
    std::vector<mpq_class> current(d);
    for (unsigned j = 0; j < d; ++j) current[j] = mpq_class(-table->min_poly[j]);
    table->reduce_rows.reserve(m > d ? m - d : 0);
    for (unsigned e = d; e < m; ++e) {
        table->reduce_rows.push_back(current);
        // next = x * current, reduced
        std::vector<mpq_class> next(d, 0);
        const mpq_class& top = current[d - 1];
        for (unsigned j = 0; j + 1 < d; ++j) next[j + 1] = current[j];
        if (top != 0) {
            for (unsigned j = 0; j < d; ++j) next[j] += top * mpq_class(-table->min_poly[j]);
        }
        current = std::move(next);
    }
    return table;
}

}  // namespace

unsigned totient(unsigned m) {
    if (m == 0) throw std::invalid_argument("totient: order must be positive");
    unsigned result = m;
    unsigned n = m;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

std::vector<mpz_class> cyclotomic_polynomial(unsigned m) {
    std::unique_lock lock(g_mutex);
    return cyclotomic_polynomial_locked(m);
}

const std::vector<mpq_class>& CycloTable::row(unsigned exponent) const {
    if (exponent < degree || exponent >= order)
        throw std::out_of_range("CycloTable::row: exponent outside [phi(m), m)");
    return reduce_rows[exponent - degree];
}

const CycloTable& cyclo_table(unsigned m) {
    if (m == 0) throw std::invalid_argument("cyclo_table: order must be positive");
    {
        std::shared_lock lock(g_mutex);
        auto it = g_table_cache.find(m);
        if (it != g_table_cache.end()) return *it->second;
    }
    std::unique_lock lock(g_mutex);
    auto it = g_table_cache.find(m);
    if (it == g_table_cache.end()) it = g_table_cache.emplace(m, build_table(m)).first;
    return *it->second;
}

}  // namespace braidlab::detail
