#include <doctest.h>

#include <cmath>
#include <random>

#include "helpers.hpp"
#include "kmweyl/recurrence.hpp"

using namespace kmweyl;
using kmtest::root_of;

namespace {
const auto a2m2 = kmtest::make_algebra(2, 2);

LinearRecurrence joint_fit(const WeylWord& w) {
    return fit_min_recurrence(component_sequences(word_matrix(w, a2m2.cartan), 14));
}

std::vector<Rat> rats(std::initializer_list<long> v) {
    std::vector<Rat> out;
    for (long x : v) out.emplace_back(x);
    return out;
}
} // namespace

TEST_CASE("minimal joint recurrences of the three standard words") {
    const auto affine = joint_fit({0, 1, 2});
    CHECK(affine.order == 4);
    CHECK(affine.coeffs == rats({2, 0, -2, 1}));

    const auto hyper = joint_fit({-1, 0, 1, 2});
    CHECK(hyper.order == 5);
    CHECK(hyper.coeffs == rats({2, 2, -2, -2, 1}));

    const auto lorentz = joint_fit({-2, -1, 0, 1, 2});
    CHECK(lorentz.order == 5);
    CHECK(lorentz.coeffs == rats({1, 3, 3, 1, -1}));
}

TEST_CASE("single-sequence fits can be lower order than the joint one") {
    // constant coefficient sequence
    const auto ones = fit_min_recurrence(std::vector<Int>{1, 1, 1, 1, 1, 1, 1, 1});
    CHECK(ones.order == 1);
    CHECK(ones.coeffs == rats({1}));
    // Fibonacci
    const auto fib = fit_min_recurrence(std::vector<Int>{0, 1, 1, 2, 3, 5, 8, 13, 21, 34});
    CHECK(fib.order == 2);
    CHECK(fib.coeffs == rats({1, 1}));
}

TEST_CASE("no recurrence for a generic sequence") {
    CHECK_THROWS_AS(fit_min_recurrence(std::vector<Int>{1, 2, 4, 9, 23, 61, 164, 500}),
                    NoRecurrenceFound);
}

TEST_CASE("characteristic polynomials of the standard recurrences") {
    auto poly = [](const WeylWord& w) { return char_poly(joint_fit(w)); };
    CHECK(poly({0, 1, 2}) == std::vector<Int>{1, -2, 0, 2, -1});
    CHECK(poly({-1, 0, 1, 2}) == std::vector<Int>{1, -2, -2, 2, 2, -1});
    CHECK(poly({-2, -1, 0, 1, 2}) == std::vector<Int>{1, -1, -3, -3, -1, 1});
}

TEST_CASE("recurrence holds for the matrix itself") {
    for (const WeylWord w :
         {WeylWord{0, 1, 2}, WeylWord{-1, 0, 1, 2}, WeylWord{-2, -1, 0, 1, 2}}) {
        const auto c = word_matrix(w, a2m2.cartan);
        const auto rec = joint_fit(w);
        IntMatrix lhs = c.power(rec.order);
        IntMatrix rhs(lhs.size());
        for (int i = 1; i <= rec.order; ++i) {
            REQUIRE(denominator(rec.coeffs[i - 1]) == 1);
            const Int ci = numerator(rec.coeffs[i - 1]);
            const IntMatrix p = c.power(rec.order - i);
            for (int r = 0; r < lhs.size(); ++r)
                for (int s = 0; s < lhs.size(); ++s) rhs.at(r, s) += ci * p.at(r, s);
        }
        CHECK(lhs == rhs);
    }
}

TEST_CASE("root classification: affine word") {
    const auto roots = char_roots(char_poly(joint_fit({0, 1, 2})));
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].kind == CharRoot::Kind::integer);
    CHECK(roots[0].int_value == -1);
    CHECK(roots[0].multiplicity == 1);
    CHECK(roots[1].kind == CharRoot::Kind::integer);
    CHECK(roots[1].int_value == 1);
    CHECK(roots[1].multiplicity == 3);
}

TEST_CASE("root classification: full word") {
    const auto roots = char_roots(char_poly(joint_fit({-2, -1, 0, 1, 2})));
    REQUIRE(roots.size() == 5);
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;

    int integers = 0, surds = 0, unity = 0;
    for (const auto& r : roots) {
        CHECK(r.multiplicity == 1);
        switch (r.kind) {
        case CharRoot::Kind::integer:
            ++integers;
            CHECK(r.int_value == -1);
            break;
        case CharRoot::Kind::quadratic_surd:
            ++surds;
            CHECK(r.surd_a == 3);
            CHECK(r.surd_c == 2);
            CHECK(r.surd_d == 5);
            CHECK(std::fabs(std::fabs(r.approx().real()) -
                            (r.surd_b > 0 ? phi * phi : 1.0 / (phi * phi))) < 1e-12);
            break;
        case CharRoot::Kind::root_of_unity:
            ++unity;
            CHECK(r.unity_q == 3);
            break;
        default:
            FAIL("unexpected numeric root");
        }
    }
    CHECK(integers == 1);
    CHECK(surds == 2);
    CHECK(unity == 2);
}

TEST_CASE("root classification: extended-by-one word") {
    const auto poly = char_poly(joint_fit({-1, 0, 1, 2}));
    const auto roots = char_roots(poly);
    REQUIRE(roots.size() == 5);

    const double s21 = std::sqrt(21.0);
    const double l2 = (1.0 + s21 + std::sqrt(2.0 * s21 + 6.0)) / 4.0;
    const double l3 = (1.0 + s21 - std::sqrt(2.0 * s21 + 6.0)) / 4.0;
    const double re45 = (1.0 - s21) / 4.0;
    const double im45 = std::sqrt(2.0 * s21 - 6.0) / 4.0;

    int reals = 0, complexes = 0, ones = 0;
    for (const auto& r : roots) {
        if (r.kind == CharRoot::Kind::integer) {
            ++ones;
            CHECK(r.int_value == 1);
            continue;
        }
        CHECK(r.kind == CharRoot::Kind::numeric_complex);
        const auto z = r.approx();
        if (std::fabs(z.imag()) < 1e-12) {
            ++reals;
            const bool is_l2 = std::fabs(z.real() - l2) < 1e-10;
            const bool is_l3 = std::fabs(z.real() - l3) < 1e-10;
            CHECK((is_l2 || is_l3));
        } else {
            ++complexes;
            CHECK(std::fabs(z.real() - re45) < 1e-10);
            CHECK(std::fabs(std::fabs(z.imag()) - im45) < 1e-10);
        }
        CHECK(polynomial_residual(poly, z) < 1e-10);
    }
    CHECK(ones == 1);
    CHECK(reals == 2);
    CHECK(complexes == 2);
}

TEST_CASE("closed-form solver matches exact powers") {
    for (const WeylWord w : {WeylWord{-1, 0, 1, 2}, WeylWord{-2, -1, 0, 1, 2}}) {
        const auto c = word_matrix(w, a2m2.cartan);
        const auto rec = joint_fit(w);
        const auto seqs = component_sequences(c, 2 * rec.order);
        const int n = c.size();
        for (int nu = 0; nu < n; ++nu) {
            for (int mu = 0; mu < n; ++mu) {
                const auto& s = seqs[static_cast<std::size_t>(nu) * n + mu];
                const auto cf = solve_closed_form(rec, s);
                RootVector seed(n);
                seed[mu] = 1;
                CHECK(verify_closed_form(cf, c, seed, nu, -15, 15) <= 1e-6);
            }
        }
    }
}

TEST_CASE("affine closed form is quadratic in k plus an alternating part") {
    const auto rec = joint_fit({0, 1, 2});
    const auto c = word_matrix({0, 1, 2}, a2m2.cartan);
    const auto seqs = component_sequences(c, 2 * rec.order);
    const auto cf = solve_closed_form(rec, seqs[2 * 5 + 1]); // a_0^q
    REQUIRE(cf.terms.size() == 2);
    for (const auto& t : cf.terms) {
        REQUIRE(t.root.kind == CharRoot::Kind::integer);
        if (t.root.int_value == 1)
            CHECK(t.poly_k.size() == 3); // degree 2 polynomial
        else
            CHECK(t.poly_k.size() == 1);
    }
}

TEST_CASE("dominant-root growth matches the coefficients at k = 30") {
    for (const WeylWord w :
         {WeylWord{0, 1, 2}, WeylWord{-1, 0, 1, 2}, WeylWord{-2, -1, 0, 1, 2}}) {
        const auto c = word_matrix(w, a2m2.cartan);
        const auto rec = joint_fit(w);
        const auto seqs = component_sequences(c, 2 * rec.order);
        const auto cf = solve_closed_form(rec, seqs[2 * 5 + 1]);
        const double exact = std::fabs(static_cast<double>(c.power(30).at(2, 1)));
        double lead = 0.0;
        for (const auto& t : cf.terms) {
            std::complex<double> pk{0.0, 0.0};
            double kp = 1.0;
            for (const auto& coeff : t.poly_k) {
                pk += coeff * kp;
                kp *= 30.0;
            }
            lead = std::max(lead, std::abs(pk * t.root.pow_k(30)));
        }
        CHECK(exact <= 2.0 * lead);
        CHECK(lead <= 2.0 * exact);
    }
}

TEST_CASE("exact affine power formula against matrix powers") {
    const auto sa = word_matrix({0, 1, 2}, a2m2.cartan);
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 20; ++trial) {
        const auto seed = kmtest::random_root(rng, 5, -9, 9);
        for (long k = -50; k <= 50; ++k)
            CHECK(affine_power_exact(k, seed) == apply_power(sa, k, seed));
    }
}

TEST_CASE("exact affine power formula spot values") {
    // k = 2 alpha_0 coefficient is 4l - 3n + 3q
    const auto r = affine_power_exact(2, root_of({2, 3, 5, 7, 11}));
    CHECK(r[2] == 4 * 5 - 3 * 11 + 3 * 3);
    // k = 0 is the identity
    CHECK(affine_power_exact(0, root_of({1, 2, 3, 4, 5})) == root_of({1, 2, 3, 4, 5}));
}
