#include <doctest.h>

#include <cmath>
#include <numbers>
#include <set>

#include "cdgsym/binary_expansion.hpp"
#include "cdgsym/errors.hpp"
#include "cdgsym/fourier.hpp"
#include "cdgsym/fourier_bound.hpp"
#include "cdgsym/process.hpp"

using namespace cdgsym;

namespace {

double trinary_factor(double x) {
    return 1.0 / 3.0 + (2.0 / 3.0) * std::cos(2.0 * std::numbers::pi * x);
}

}  // namespace

TEST_SUITE("fourier-bound") {

TEST_CASE("binary windows by exact long division") {
    auto w = binary_window(1, Modulus(3), 0, 4);
    CHECK(w.digits == std::vector<std::uint8_t>{0, 1, 0, 1});
    CHECK(binary_window(1, Modulus(5), 0, 4).digits == std::vector<std::uint8_t>{0, 0, 1, 1});
    CHECK(binary_window(4, Modulus(5), 0, 4).digits == std::vector<std::uint8_t>{1, 1, 0, 0});
    // start offset: 1/5 = .00110011..., positions 2..5 are 1,1,0,0
    CHECK(binary_window(1, Modulus(5), 2, 4).digits == std::vector<std::uint8_t>{1, 1, 0, 0});

    CHECK_THROWS_AS(binary_window(0, Modulus(5), 0, 4), std::invalid_argument);
    CHECK_THROWS_AS(binary_window(5, Modulus(5), 0, 4), std::invalid_argument);
}

TEST_CASE("alternation counting") {
    BinaryWindow w{1, 3, 0, {0, 1, 0, 1}};
    auto profile = alternation_count(w);
    CHECK(profile.count == 3);
    CHECK(profile.positions == std::vector<std::int64_t>{0, 1, 2});

    CHECK(alternation_count({1, 3, 0, {0, 0, 0, 0}}).count == 0);
    CHECK(alternation_count({1, 5, 0, {0, 0, 1, 1}}).count == 1);
    CHECK_THROWS_AS(alternation_count({1, 3, 0, {1}}), std::invalid_argument);
}

TEST_CASE("windows longer than log2 p always alternate") {
    for (std::int64_t p : {3, 5, 7, 9, 31, 101, 257}) {
        Modulus mod(p);
        const auto length = static_cast<std::int64_t>(std::ceil(log2_of(p))) + 1;
        for (std::int64_t m = 1; m < p; ++m) {
            CHECK(alternation_count(binary_window(m, mod, 0, length)).count >= 1);
        }
    }
}

TEST_CASE("g dominates the squared trinary factor") {
    CHECK(g_indicator(0.25) == 1.0 / 9.0);
    CHECK(g_indicator(0.0) == 1.0);
    CHECK(g_indicator(0.7499999) == 1.0 / 9.0);
    CHECK(g_indicator(0.75) == 1.0);
    CHECK(g_indicator(1.25) == 1.0 / 9.0);  // fractional part is taken

    for (int i = 0; i < 10000; ++i) {
        double x = static_cast<double>(i) / 10000.0;
        double f = trinary_factor(x);
        CHECK(f * f <= g_indicator(x) + 1e-15);
    }
    CHECK(trinary_factor(0.25) * trinary_factor(0.25) == doctest::Approx(1.0 / 9).epsilon(1e-14));
}

TEST_CASE("band membership is alternation between adjacent digits") {
    for (std::int64_t p : {3, 5, 17, 101, 257}) {
        Modulus mod(p);
        const auto lmax = 2 * static_cast<std::int64_t>(std::ceil(log2_of(p)));
        for (std::int64_t m = 1; m < p; ++m) {
            auto w = binary_window(m, mod, 0, lmax + 2);
            for (std::int64_t ell = 0; ell <= lmax; ++ell) {
                bool alternates = w.digits[static_cast<std::size_t>(ell)] !=
                                  w.digits[static_cast<std::size_t>(ell + 1)];
                CHECK(in_alternation_band(ell, m, mod) == alternates);
            }
        }
    }
}

TEST_CASE("shifted exponents of a short sequence") {
    // n = 3, seq = (a_1, a_2) = (Forward, Inverse): coefficients of
    // (b_2, b_1, b_0) are 2^0, 2^{-1}, 2^{-1+1}; shifted by n: 3, 2, 3
    MultiplierSequence seq = {StepChoice::Forward, StepChoice::Inverse};
    CHECK(shifted_exponents(seq) == std::vector<std::int64_t>{3, 2, 3});
    CHECK(shifted_exponents({}) == std::vector<std::int64_t>{1});
}

TEST_CASE("product formula: single factors and the zero frequency") {
    Modulus p3(3);
    std::vector<std::int64_t> e{0};
    CHECK(std::abs(conditional_dft_product(e, 1, p3)) <= 1e-15);
    CHECK(conditional_dft_product(e, 0, p3) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK_THROWS_AS(conditional_dft_product({}, 1, p3), std::invalid_argument);
}

TEST_CASE("product formula matches the conditional transform") {
    // spec instance: n = 3, alternating, p = 5
    {
        Modulus mod(5);
        auto params = ProcessParams::trinary(mod);
        auto seq = alternating_sequence(2);
        auto cond = conditional_evolve(params, seq);
        auto exps = shifted_exponents(seq);
        const std::int64_t reindex = mod.pow2(3);
        for (std::int64_t m = 1; m < 5; ++m) {
            double prod = conditional_dft_product(exps, m, mod);
            auto f = dft(cond, mod.mul(reindex, m));
            CHECK(std::abs(prod - f.value.real()) <= 1e-12);
            CHECK(std::abs(f.value.imag()) <= 1e-12);
        }
    }
    // random battery
    for (std::int64_t p : {17, 101}) {
        Modulus mod(p);
        auto params = ProcessParams::trinary(mod);
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            const std::int64_t n = 2 + static_cast<std::int64_t>(seed) * 13 % 59;
            auto seq = random_sequence(n - 1, seed);
            auto cond = conditional_evolve(params, seq);
            auto exps = shifted_exponents(seq);
            const std::int64_t reindex = mod.pow2(n);
            for (std::int64_t m = 1; m < p; ++m) {
                double prod = conditional_dft_product(exps, m, mod);
                auto f = dft(cond, mod.mul(reindex, m));
                CHECK(std::abs(prod - f.value.real()) <= 1e-10);
            }
        }
    }
}

TEST_CASE("quenched upper bound values") {
    Modulus p3(3);
    auto params3 = ProcessParams::trinary(p3);
    CHECK(conditional_ub_bound({}, params3) <= 1e-15);
    CHECK(tv_distance(conditional_evolve(params3, {})) <= 1e-15);

    Modulus p5(5);
    auto params5 = ProcessParams::trinary(p5);
    double bound = conditional_ub_bound({}, params5);
    CHECK(bound == doctest::Approx(1.0 / 6).epsilon(1e-12));  // exact character sums
    double tv = tv_distance(conditional_evolve(params5, {}));
    CHECK(tv * tv <= bound + 1e-12);
}

TEST_CASE("quenched bound controls quenched TV") {
    for (std::int64_t p : {17, 101}) {
        Modulus mod(p);
        auto params = ProcessParams::trinary(mod);
        for (std::uint64_t seed = 10; seed < 16; ++seed) {
            const std::int64_t n = 3 + static_cast<std::int64_t>(seed) % 40;
            auto seq = random_sequence(n - 1, seed);
            double tv = tv_distance(conditional_evolve(params, seq));
            CHECK(tv * tv <= conditional_ub_bound(seq, params) + 1e-12);
        }
    }
}

TEST_CASE("quenched bound decays for the fixed-a chain") {
    auto params = ProcessParams::trinary(Modulus(101));
    auto seq = all_forward_sequence(199);  // n = 200
    CHECK(conditional_ub_bound(seq, params) < 1e-6);
    CHECK(tv_distance(conditional_evolve(params, seq)) < 1e-3);
}

TEST_CASE("bound is thread-count invariant") {
    auto params = ProcessParams::trinary(Modulus(257));
    auto seq = random_sequence(40, 5);
    CHECK(conditional_ub_bound(seq, params, 1) == conditional_ub_bound(seq, params, 4));
}

TEST_CASE("binary increments use their own characteristic function") {
    Modulus mod(17);
    auto params = ProcessParams::binary(mod);
    auto seq = random_sequence(7, 3);  // n = 8
    double tv = tv_distance(conditional_evolve(params, seq));
    CHECK(tv * tv <= conditional_ub_bound(seq, params) + 1e-12);
}

TEST_CASE("classification: flat occupation leaves everything unresolved") {
    auto path = to_exponent_path(all_forward_sequence(30));  // strictly rising, no revisits
    auto table = occupation_counts(path, 100);
    auto thresholds = default_thresholds(101, 10.0);
    Modulus mod(101);
    for (std::int64_t m = 1; m < 101; ++m) {
        auto cls = classify_frequency(m, table, 31, thresholds, mod);
        CHECK(cls.tag == FrequencyClass::Tag::Unresolved);
    }
}

TEST_CASE("classification: a heavy revisited band level forces S1") {
    // synthetic path bouncing on levels 0/1, so R(0) and R(1) are large
    ExponentPath path;
    path.w.push_back(0);
    for (int i = 0; i < 300; ++i) path.w.push_back(i % 2 == 0 ? 1 : 0);
    auto table = occupation_counts(path, 400);
    CHECK(table.at(0).revisits == 150);

    Modulus mod(101);
    ClassifyThresholds thresholds{5.0, 50.0};
    const std::int64_t n = 4;
    // pick m with {2^{n+0} m / p} in the band
    std::int64_t m_band = 0;
    for (std::int64_t m = 1; m < 101; ++m) {
        if (in_alternation_band(n, m, mod)) {
            m_band = m;
            break;
        }
    }
    REQUIRE(m_band != 0);
    auto cls = classify_frequency(m_band, table, n, thresholds, mod);
    CHECK(cls.tag == FrequencyClass::Tag::S1);
    REQUIRE(cls.witnesses.size() == 1);
    CHECK(cls.witnesses[0].second > 50);
}

TEST_CASE("classification: moderate levels produce S2 with band count") {
    ExponentPath path;
    path.w.push_back(0);
    for (int i = 0; i < 20; ++i) path.w.push_back(i % 2 == 0 ? 1 : 0);
    auto table = occupation_counts(path, 200);
    REQUIRE(table.at(0).revisits == 10);
    REQUIRE(table.at(1).revisits == 9);

    Modulus mod(101);
    ClassifyThresholds thresholds{2.0, 50.0};
    const std::int64_t n = 4;
    for (std::int64_t m = 1; m < 101; ++m) {
        auto cls = classify_frequency(m, table, n, thresholds, mod);
        bool band0 = in_alternation_band(n + 0, m, mod);
        bool band1 = in_alternation_band(n + 1, m, mod);
        std::int64_t expect_b = (band0 ? 1 : 0) + (band1 && table.at(1).revisits > 2 ? 1 : 0);
        if (expect_b > 0) {
            CHECK(cls.tag == FrequencyClass::Tag::S2);
            CHECK(cls.b == expect_b);
        } else {
            CHECK(cls.tag == FrequencyClass::Tag::Unresolved);
        }
    }
}

TEST_CASE("census partitions all frequencies") {
    Modulus mod(101);
    auto seq = random_sequence(399, 11);
    MultiplierSequence reversed(seq.rbegin(), seq.rend());
    auto table = occupation_counts(to_exponent_path(reversed), 44);  // floor(log2(101)^2)
    auto census = frequency_census(table, 400, default_thresholds(101, 1.0), mod, 2);
    std::int64_t total = census.s1_count + census.unresolved_count;
    for (const auto& [b, count] : census.s2_counts) {
        CHECK(b >= 1);
        total += count;
    }
    CHECK(total == 100);

    // classify_frequency agrees with the census tallies
    std::int64_t s1 = 0;
    for (std::int64_t m = 1; m < 101; ++m) {
        auto cls = classify_frequency(m, table, 400, default_thresholds(101, 1.0), mod);
        s1 += cls.tag == FrequencyClass::Tag::S1;
    }
    CHECK(s1 == census.s1_count);
}

TEST_CASE("alternation census: the p = 5 window example") {
    auto census = alternation_census(Modulus(5), 0, 4, 1.0 / 9.0, 1.0);
    REQUIRE(census.histogram.size() == 4);
    CHECK(census.histogram[0] == 0);
    CHECK(census.histogram[1] == 2);
    CHECK(census.histogram[2] == 2);
    CHECK(census.histogram[3] == 0);
    CHECK(census.weighted_sum == doctest::Approx(2.0 / 9 + 2.0 / 81).epsilon(1e-14));
    CHECK(census.weighted_sum <= census.majorant);
    CHECK_THROWS_AS(alternation_census(Modulus(5), 0, 2, 1.0 / 9.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(alternation_census(Modulus(5), 0, 4, 1.5, 1.0), std::invalid_argument);
}

TEST_CASE("alternation census majorization across betas") {
    for (std::int64_t p : {101, 1009}) {
        Modulus mod(p);
        const auto length = static_cast<std::int64_t>(std::ceil(log2_of(p))) + 2;
        for (double beta : {1.0, 5.0, 10.0}) {
            auto census = alternation_census(mod, 0, length, 1.0 / 9.0, beta, 2);
            CHECK(census.weighted_sum <= census.majorant);
        }
    }
}

TEST_CASE("short windows are pairwise distinct across m") {
    for (std::int64_t p : {101, 257, 1009}) {
        Modulus mod(p);
        const auto length = static_cast<std::int64_t>(std::ceil(log2_of(p)));
        std::set<std::vector<std::uint8_t>> seen;
        for (std::int64_t m = 1; m < p; ++m) {
            CHECK(seen.insert(binary_window(m, mod, 0, length).digits).second);
        }
    }
}

}  // TEST_SUITE
