#include "braidlab/braid.hpp"

#include <complex>
#include <vector>

#include "doctest.h"
#include "braidlab/graded.hpp"

using namespace braidlab;

TEST_CASE("gl11_defining_brackets_hold_exactly") {
    auto g = gl11_generators(Mode::exact);
    CHECK(check_gl11(g.alpha, g.beta, g.gamma, g.delta).empty());
    for (const auto& c : gl11_bracket_checks(g.alpha, g.beta, g.gamma, g.delta))
        CHECK(c.residual == 0.0);
}

TEST_CASE("gl11_detects_a_wrong_generator_set") {
    // swapping beta and gamma flips the four weight brackets
    auto g = gl11_generators(Mode::exact);
    auto bad = check_gl11(g.alpha, g.gamma, g.beta, g.delta);
    REQUIRE(bad.size() == 4);
    CHECK(bad[0] == "[alpha,beta]=beta");
    CHECK(bad[1] == "[alpha,gamma]=-gamma");
    CHECK(bad[2] == "[delta,beta]=-beta");
    CHECK(bad[3] == "[delta,gamma]=gamma");
}

TEST_CASE("yang_baxter_residual_is_zero_at_levels") {
    for (long s = 2; s <= 12; ++s)
        CHECK(check_yang_baxter(braid_matrix(BraidParameter::level(1, s), Mode::exact)) == 0.0);
    // generic rational t stays exact too
    CHECK(check_yang_baxter(braid_matrix(BraidParameter::generic(Scalar(2L)), Mode::exact)) ==
          0.0);
}

TEST_CASE("yang_baxter_float_mode_is_tiny") {
    auto p = BraidParameter::generic(Scalar(std::complex<double>(0.37, 1.21)));
    CHECK(check_yang_baxter(braid_matrix(p, Mode::floating)) <= 1e-12);
}

TEST_CASE("braid_matrix_rows_at_t_equals_one") {
    // level 1/2 means t = 1: the middle block is the plain swap, corner -1
    auto b = braid_matrix(BraidParameter::level(1, 2), Mode::exact);
    CHECK(b.matrix.at(1, 2) == Scalar(1L));
    CHECK(b.matrix.at(1, 1) == Scalar(0L));
    CHECK(b.matrix.at(3, 3) == Scalar(-1L));
    CHECK(b.parity == Parity::even);
}

TEST_CASE("braid_order_is_minimal_s") {
    // frozen alternate-convention orders: none for s=2, 2s for odd s,
    // s for s = 0 mod 4, s/2 for s = 2 mod 4
    const std::vector<long> alt_orders{0, 6, 4, 10, 3, 14, 8, 18, 5, 22, 12};
    for (long s = 2; s <= 12; ++s) {
        auto rep = braid_order(s);
        CHECK(rep.holds_at_s);
        CHECK(rep.minimal_order == s);
        CHECK(rep.alt_minimal_order == alt_orders[static_cast<std::size_t>(s - 2)]);
        CHECK(rep.alt_holds_at_s == (s % 2 == 0 && s > 2));
    }
}

TEST_CASE("generic_t_minus_one_has_no_finite_order") {
    CHECK(!braid_order_generic(BraidParameter::generic(Scalar(-1L)), 100, Mode::exact));
}

TEST_CASE("intertwiner_values_at_small_levels") {
    auto w2 = intertwiner(BraidParameter::level(1, 2), Mode::exact);
    CHECK(w2.matrix.at(0, 0) == Scalar::root_of_unity(-1, 4));
    CHECK(w2.matrix.at(1, 1) == Scalar::root_of_unity(1, 4));
    auto w3 = intertwiner(BraidParameter::level(1, 3), Mode::exact);
    CHECK(w3.matrix.at(0, 0) == Scalar::root_of_unity(-1, 6));
    // t = -1 makes the intertwiner trivial
    auto wm1 = intertwiner(BraidParameter::generic(Scalar(-1L)), Mode::exact);
    CHECK(wm1.matrix == Matrix::identity(2, Mode::exact));
}

TEST_CASE("exchange_and_braided_product_hold_at_levels") {
    auto g = gl11_generators(Mode::exact).gamma;
    for (long s = 2; s <= 8; ++s) {
        auto p = BraidParameter::level(1, s);
        CHECK(check_exchange(intertwiner(p, Mode::exact), g, p));
        CHECK(check_braided_product(p, Mode::exact));
    }
}

TEST_CASE("exchange_rejects_a_wrong_intertwiner") {
    // diag(1,-1) commutes with gamma up to sign -1, not -t, at s = 3
    Matrix d(2, 2, Mode::exact);
    d.at(0, 0) = Scalar(1L);
    d.at(1, 1) = Scalar(-1L);
    GradedOperator dd{d, Parity::even, 1};
    CHECK(!check_exchange(dd, gl11_generators(Mode::exact).gamma, BraidParameter::level(1, 3)));
}
