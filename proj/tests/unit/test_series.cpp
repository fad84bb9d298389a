#include <doctest.h>

#include "aee/energy_series.hpp"
#include "aee/errors.hpp"
#include "aee/presets.hpp"
#include "aee/taylor.hpp"
#include "reference.hpp"

using aee::cplx;
using ref::I;

namespace {

aee::EnergySeries single_term(int N, cplx d0) {
    aee::EnergySeries s;
    s.N = N;
    s.constant = 0.0;
    s.n_max = 0;
    s.terms.push_back(aee::make_term(N, 0, d0));
    return s;
}

}  // namespace

TEST_SUITE("energy series") {

TEST_CASE("leading coefficient") {
    for (int N = 1; N <= 8; ++N) {
        CHECK(aee::leading_coefficient(N) == doctest::Approx(ref::leading_coefficient(N)).epsilon(1e-13));
        const aee::Potential p(N, ref::random_betas(N, 9u + N), 0.6);
        CHECK(aee::d_coefficients(p, 0).terms[0].d.real() ==
              doctest::Approx(ref::leading_coefficient(N)).epsilon(1e-13));
    }
}

TEST_CASE("pure quintic: only d0 until the hbar^2 term") {
    const aee::EnergySeries s = aee::d_coefficients(aee::Potential(2, {0, 0, 0, 0}), 7);
    const double d0 = 2.0 * std::cos(ref::pi / 10.0) * std::tgamma(0.2) / (std::sqrt(ref::pi) * 7.0 * std::tgamma(0.7));
    CHECK(s.terms[0].d.real() == doctest::Approx(d0).epsilon(1e-13));
    for (int n = 1; n < 7; ++n) CHECK(std::abs(s.terms[static_cast<std::size_t>(n)].d) < 1e-15);
    CHECK(ref::rel(s.terms[7].d, ref::two_term_b4n6(2, 1.0)) < 1e-12);
    CHECK(s.constant == cplx(-0.5));
}

TEST_CASE("constant term is -hbar/2") {
    for (double hbar : {1.0, 0.25, 3.0}) {
        for (int N = 1; N <= 4; ++N) {
            CHECK(aee::d_coefficients(aee::Potential(N, ref::random_betas(N, 1u), hbar), 3).constant ==
                  cplx(-0.5 * hbar));
        }
        CHECK(aee::two_term_series(2, I, hbar).constant == cplx(-0.5 * hbar));
    }
}

TEST_CASE("exponents") {
    const aee::EnergySeries s = aee::d_coefficients(aee::Potential(3, ref::random_betas(3, 2u)), 20);
    CHECK(s.terms.size() == 21);
    CHECK(s.terms[0].exponent() == doctest::Approx(9.0 / 14.0));
    for (std::size_t n = 0; n < s.terms.size(); ++n) {
        CHECK(s.terms[n].n == static_cast<int>(n));
        CHECK(s.terms[n].exponent_num == 9 - 2 * static_cast<int>(n));
        CHECK(s.terms[n].exponent_den == 14);
        if (n > 0) CHECK(s.terms[n].exponent() < s.terms[n - 1].exponent());
    }
}

TEST_CASE("two-path equality for the linear-coefficient family") {
    for (int N = 1; N <= 4; ++N) {
        for (cplx b : {I, 1.0 + I}) {
            const aee::EnergySeries general = aee::d_coefficients(aee::two_term_potential(N, b), 2 * N + 3);
            const aee::EnergySeries closed = aee::two_term_series(N, b);
            CHECK(closed.n_max == 2 * N + 3);
            for (int n = 0; n <= 2 * N + 3; ++n) {
                const cplx g = general.terms[static_cast<std::size_t>(n)].d;
                const cplx c = closed.terms[static_cast<std::size_t>(n)].d;
                if (n == 0 || n == 2 * N || n == 2 * N + 3) {
                    CHECK(ref::rel(g, c) < 1e-12);
                } else {
                    CHECK(std::abs(g) < 1e-14);
                    CHECK(c == cplx{});
                }
            }
            CHECK(ref::rel(closed.terms[static_cast<std::size_t>(2 * N)].d, ref::two_term_b4n(N, b)) < 1e-13);
            CHECK(ref::rel(closed.terms[static_cast<std::size_t>(2 * N + 3)].d, ref::two_term_b4n6(N, 1.0)) < 1e-13);
        }
    }
}

TEST_CASE("bare closed form of the linear slot differs in sign for odd N") {
    for (int N = 1; N <= 4; ++N) {
        const cplx bare = aee::two_term_b4n_as_printed(N, I);
        const cplx used = aee::two_term_series(N, I).terms[static_cast<std::size_t>(2 * N)].d;
        CHECK(std::abs(bare - (N % 2 == 0 ? used : -used)) < 1e-15);
    }
}

TEST_CASE("linear slot vanishes with b") {
    for (int N = 1; N <= 4; ++N) {
        CHECK(aee::two_term_series(N, 0.0).terms[static_cast<std::size_t>(2 * N)].d == cplx{});
    }
}

TEST_CASE("coefficients agree with loop integrals of the local terms") {
    for (int N = 1; N <= 3; ++N) {
        const aee::Potential p(N, ref::random_betas(N, 70u + N), 0.9);
        const int n_max = 10;
        const aee::EnergySeries s = aee::d_coefficients(p, n_max);
        for (int n = 0; n <= n_max; ++n) {
            const cplx want = ref::series_coefficient(N, [&](cplx y, cplx a0) {
                return aee::a_n_taylor(p, y, 2 * n, std::nullopt, a0);
            });
            const cplx got = s.terms[static_cast<std::size_t>(n)].d;
            CHECK(std::abs(got - want) <= 1e-9 * std::max(1.0, std::abs(want)));
        }
    }
}

TEST_CASE("selection rule zeros") {
    for (int N = 1; N <= 4; ++N) {
        const aee::EnergySeries s = aee::d_coefficients(aee::Potential(N, ref::random_betas(N, 30u + N)), 40);
        const int M = 2 * N + 1;
        for (int n = 0; n <= 40; ++n) {
            const bool vanishes = n >= 1 && (n - 1) % M == 0;
            CHECK(aee::selection_rule_vanishes(N, n) == vanishes);
            if (vanishes) {
                CHECK(s.terms[static_cast<std::size_t>(n)].d == cplx{});
            } else {
                CHECK(s.terms[static_cast<std::size_t>(n)].d != cplx{});
            }
        }
    }
}

TEST_CASE("PT-symmetric inputs give real coefficients") {
    for (int id : {1, 3, 4}) {
        const aee::EnergySeries s = aee::d_coefficients(aee::table_preset(id).potential, 60);
        for (const auto& t : s.terms) CHECK(std::abs(t.d.imag()) <= 1e-12 * (1.0 + std::abs(t.d)));
    }
    for (int N = 1; N <= 4; ++N) {
        const aee::EnergySeries s = aee::d_coefficients(aee::Potential(N, ref::random_pt_betas(N, 50u + N)), 40);
        for (const auto& t : s.terms) CHECK(std::abs(t.d.imag()) <= 1e-12 * (1.0 + std::abs(t.d)));
    }
}

TEST_CASE("nonzero-count builder") {
    const aee::Potential p = aee::table_preset(4).potential;
    const aee::EnergySeries s = aee::d_coefficients_nonzero(p, 25);
    CHECK(s.nonzero_count() == 25);
    CHECK(s.n_max == 39);
    CHECK(s.terms.back().d != cplx{});
    CHECK(aee::d_coefficients_nonzero(aee::table_preset(3).potential, 25).nonzero_count() == 25);
}

TEST_CASE("eval_J") {
    const aee::EnergySeries four = aee::two_term_series(2, I);
    CHECK(eval_J(four, 79.43411).real() == doctest::Approx(11.0).epsilon(5e-4 / 11.0));

    const aee::EnergySeries s = aee::d_coefficients(aee::table_preset(1).potential, 14);
    const double E = 20.0;
    const cplx lead = aee::eval_J(s, E, 0);
    CHECK(std::abs(lead - (s.constant + s.terms[0].d * std::pow(E, s.terms[0].exponent()))) < 1e-14);
    CHECK(std::abs(lead.imag()) < 1e-15);

    for (double x : {3.0, 17.5, 80.0, 400.0}) {
        const cplx J = aee::eval_J(s, x);
        CHECK(std::abs(J.imag()) < 1e-10 * std::abs(J));
    }
    CHECK_THROWS_AS(aee::eval_J(s, 0.0), aee::DomainError);
    CHECK_THROWS_AS(aee::eval_J(s, 1.0, 15), aee::RangeError);
    CHECK_THROWS_AS(aee::eval_J(s, 1.0, -1), aee::RangeError);
}

TEST_CASE("eval_J uses the principal branch") {
    const aee::EnergySeries s = single_term(2, 1.0);
    const cplx E{-3.0, 1e-9};
    CHECK(std::abs(aee::eval_J(s, E, 0) - std::pow(E, 7.0 / 10.0)) < 1e-14);
    CHECK(aee::eval_J(s, cplx(-3.0, 1e-9), 0).imag() > 0.0);
    CHECK(aee::eval_J(s, cplx(-3.0, -1e-9), 0).imag() < 0.0);
}

TEST_CASE("eval_J_derivative") {
    const aee::EnergySeries one = single_term(2, {0.7, 0.2});
    const cplx E{12.0, -3.0};
    const double alpha = 0.7;
    CHECK(std::abs(aee::eval_J_derivative(one, E, 0) - cplx(0.7, 0.2) * alpha * std::pow(E, alpha - 1.0)) < 1e-14);

    aee::EnergySeries constant_only = single_term(2, 0.0);
    constant_only.constant = 4.0;
    CHECK(aee::eval_J_derivative(constant_only, E, 0) == cplx{});

    const aee::EnergySeries s = aee::d_coefficients(aee::table_preset(2).potential, 20);
    const double h = 1e-5;
    for (int k : {0, 4, 12, 20}) {
        const cplx fd = (aee::eval_J(s, 50.0 + h, k) - aee::eval_J(s, 50.0 - h, k)) / (2.0 * h);
        CHECK(ref::rel(fd, aee::eval_J_derivative(s, 50.0, k)) < 1e-7);
    }
    CHECK_THROWS_AS(aee::eval_J_derivative(s, 0.0, 3), aee::DomainError);
}

TEST_CASE("optimal truncation") {
    const aee::EnergySeries four = aee::two_term_series(2, I);
    // At large |E| every later term is smaller, so the cut sits at the end.
    CHECK(aee::optimal_truncation(four, 1e6) == four.n_max);
    for (double E : {0.05, 1.0, 30.0}) {
        int best = 0;
        double best_mag = 1e300;
        for (const auto& t : four.terms) {
            if (t.n == 0 || t.d == cplx{}) continue;
            const double mag = std::abs(t.d * std::pow(cplx(E), t.exponent()));
            if (mag < best_mag) {
                best_mag = mag;
                best = t.n;
            }
        }
        CHECK(aee::optimal_truncation(four, E) == best);
    }

    const aee::EnergySeries sextic = aee::d_coefficients_nonzero(aee::table_preset(3).potential, 25);
    CHECK(aee::optimal_truncation(sextic, 105.0) >= 20);

    const aee::EnergySeries lonely = single_term(2, 1.0);
    CHECK(aee::optimal_truncation(lonely, 10.0) == 0);
}

TEST_CASE("first omitted magnitude") {
    const aee::EnergySeries four = aee::two_term_series(2, I);
    const double E = 40.0;
    const auto& t = four.terms[4];
    CHECK(aee::first_omitted_magnitude(four, E, 0) == doctest::Approx(std::abs(t.d) * std::pow(E, t.exponent())));
    CHECK(aee::first_omitted_magnitude(four, E, four.n_max) == 0.0);
}

}
