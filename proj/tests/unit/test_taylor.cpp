#include <doctest.h>

#include "aee/errors.hpp"
#include "aee/taylor.hpp"
#include "reference.hpp"

using aee::cplx;
using ref::I;

TEST_SUITE("local terms") {

TEST_CASE("a0 at the origin") {
    const aee::Potential p(2, ref::random_betas(2, 1u));
    CHECK(std::abs(aee::a_n_taylor(p, 0.0, 0) - 1.0) < 1e-15);
    CHECK(std::abs(aee::a_m_closed_form(p, 0.0, 0) - 1.0) < 1e-15);
}

TEST_CASE("linear-coefficient term a_{4N}") {
    for (int N = 1; N <= 3; ++N) {
        const cplx b{0.4, 1.1};
        const aee::Potential p = aee::two_term_potential(N, b);
        const double y = 0.3;
        const cplx want = -b * y / (2.0 * I * std::sqrt(1.0 - std::pow(y, 2 * N + 1)));
        CHECK(ref::rel(aee::a_n_taylor(p, y, 4 * N), want) < 1e-13);
        CHECK(ref::rel(aee::a_m_closed_form(p, y, 4 * N), want) < 1e-13);
    }
}

TEST_CASE("first hbar term a_{2N+3} = -(hbar/2a0) da0/dy") {
    for (int N = 1; N <= 3; ++N) {
        const double hbar = 0.8;
        const aee::Potential p(N, ref::random_betas(N, 2u + N), hbar);
        const int M = 2 * N + 1;
        const cplx y = 0.2;
        const cplx a0 = std::sqrt(1.0 - std::pow(y, M));
        const cplx da0 = -static_cast<double>(M) * std::pow(y, M - 1) / (2.0 * a0);
        const cplx want = -hbar / (2.0 * a0) * da0;
        CHECK(ref::rel(aee::a_n_taylor(p, y, 2 * N + 3), want) < 1e-13);
        CHECK(ref::rel(aee::a_m_closed_form(p, y, 2 * N + 3), want) < 1e-13);
    }
}

TEST_CASE("a_{4N+6} vanishes at the origin like y^(2N-1)") {
    for (int N = 1; N <= 3; ++N) {
        const double hbar = 1.3;
        const aee::Potential p = aee::two_term_potential(N, {0.7, -0.4}, hbar);
        const double M = 2.0 * N + 1.0;
        CHECK(std::abs(aee::a_n_taylor(p, 0.0, 4 * N + 6)) < 1e-300);
        CHECK(std::abs(aee::a_m_closed_form(p, 0.0, 4 * N + 6)) < 1e-300);
        const double y = 1e-3;
        const double limit = -hbar * hbar * M * (M - 1.0) * std::pow(y, M - 2.0) / 8.0;
        CHECK(ref::rel(aee::a_m_closed_form(p, y, 4 * N + 6), limit) < 1e-5);
        CHECK(ref::rel(aee::a_n_taylor(p, y, 4 * N + 6), limit) < 1e-5);
    }
}

TEST_CASE("closed form agrees with the power-series recurrence") {
    for (int N = 1; N <= 3; ++N) {
        const aee::Potential p(N, ref::random_betas(N, 60u + N), 1.1);
        const int top = 4 * N + 6;
        const aee::TablePair tables = aee::build_tables(p, (top + 1) / 2);
        double worst = 0.0;
        for (cplx y : ref::random_points(20, 0.9, 17u + N)) {
            for (int idx = 0; idx <= top; ++idx) {
                worst = std::max(worst, ref::rel(aee::a_n_taylor(p, y, idx), aee::a_m_closed_form(tables, y, idx)));
            }
        }
        CHECK(worst < 1e-9);
    }
}

TEST_CASE("explicit branch choice flips odd powers of the radical") {
    const aee::Potential p(2, ref::random_betas(2, 4u));
    const cplx y{0.3, 0.4};
    const cplx a0 = aee::radical_branch(2, y);
    CHECK(std::abs(a0 * a0 - (1.0 - std::pow(y, 5))) < 1e-14);
    CHECK(std::abs(aee::a_n_taylor(p, y, 0, std::nullopt, -a0) + a0) < 1e-14);
    const aee::TablePair t = aee::build_tables(p, 6);
    CHECK(ref::rel(aee::a_m_closed_form(t, y, 9, -a0), aee::a_n_taylor(p, y, 9, std::nullopt, -a0)) < 1e-10);
}

TEST_CASE("radical branch is continuous from +1 at the origin") {
    // Along a ray approaching the cut, successive values never jump sign.
    cplx prev = 1.0;
    for (int i = 1; i <= 200; ++i) {
        const cplx y = std::polar(0.99 * i / 200.0, 0.3);
        const cplx v = aee::radical_branch(2, y);
        CHECK(std::abs(v - prev) < 0.05);
        prev = v;
    }
}

TEST_CASE("errors") {
    const aee::Potential p(2, ref::random_betas(2, 4u));
    CHECK_THROWS_AS(aee::a_n_taylor(p, 0.3, 14, 2), aee::InsufficientDepthError);
    CHECK_NOTHROW(aee::a_n_taylor(p, 0.3, 14, 4));
    CHECK(aee::default_taylor_depth(2, 14) == 6);
    CHECK_THROWS_AS(aee::a_n_taylor(p, aee::branch_points(2).left, 4), aee::SingularityError);
    CHECK_THROWS_AS(aee::a_n_taylor(p, 1.0, 4), aee::SingularityError);
    const aee::TablePair t = aee::build_tables(p, 2);
    CHECK_THROWS_AS(aee::a_m_closed_form(t, 0.3, 40), aee::RangeError);
}

}
