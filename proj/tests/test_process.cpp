#include <doctest.h>

#include <cmath>

#include "cdgsym/distribution.hpp"
#include "cdgsym/process.hpp"
#include "oracles.hpp"

using namespace cdgsym;

namespace {

void check_close(const std::vector<double>& got, const std::vector<double>& want, double tol) {
    REQUIRE(got.size() == want.size());
    for (std::size_t i = 0; i < got.size(); ++i) {
        CHECK(std::abs(got[i] - want[i]) <= tol);
    }
}

std::vector<double> normalize(const std::vector<std::int64_t>& counts) {
    std::int64_t total = 0;
    for (auto c : counts) total += c;
    std::vector<double> out(counts.size());
    for (std::size_t i = 0; i < counts.size(); ++i) {
        out[i] = static_cast<double>(counts[i]) / static_cast<double>(total);
    }
    return out;
}

}  // namespace

TEST_SUITE("process") {

TEST_CASE("params validation") {
    Modulus p7(7);
    auto params = ProcessParams::trinary(p7);
    CHECK(params.multiplier == 2);
    CHECK(params.multiplier_inverse == 4);
    CHECK(ProcessParams::binary(p7).increments.size() == 2);

    ProcessParams bad = params;
    bad.multiplier_inverse = 3;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = params;
    bad.increments = {{1, 0.6}, {-1, 0.6}};
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = params;
    bad.multiplier = 1;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("one exact step from the point mass") {
    Modulus p5(5);
    auto params = ProcessParams::trinary(p5);
    auto d = step_exact(DistributionModP::point_mass(p5, 0), params);
    check_close(d.mass, {1.0 / 3, 1.0 / 3, 0, 0, 1.0 / 3}, 1e-15);

    auto u = step_exact(DistributionModP::uniform(p5), params);
    check_close(u.mass, DistributionModP::uniform(p5).mass, 1e-15);

    CHECK_THROWS_AS(step_exact(DistributionModP::uniform(Modulus(7)), params),
                    std::invalid_argument);
}

TEST_CASE("two steps give the 18-combination law") {
    auto result = evolve_exact(ProcessParams::trinary(Modulus(5)), 2);
    check_close(result.final_dist.mass,
                {1.0 / 9, 2.0 / 9, 2.0 / 9, 2.0 / 9, 2.0 / 9}, 1e-15);
    CHECK(result.curve.points.size() == 3);
    CHECK(result.curve.points[0].tv == doctest::Approx(0.8).epsilon(1e-15));
    CHECK(result.curve.points[2].tv == doctest::Approx(4.0 / 45).epsilon(1e-13));
}

TEST_CASE("p=3 mixes in one step, exactly") {
    auto result = evolve_exact(ProcessParams::trinary(Modulus(3)), 1);
    CHECK(result.curve.final_tv() == 0.0);
}

TEST_CASE("mass conservation and symmetry along an evolution") {
    auto params = ProcessParams::trinary(Modulus(101));
    DistributionModP d = DistributionModP::point_mass(params.modulus, 0);
    for (int step = 0; step < 60; ++step) {
        double before = 0.0;
        for (double x : d.mass) before += x;
        d = step_exact(d, params);
        double after = 0.0;
        for (double x : d.mass) after += x;
        CHECK(std::abs(after - before) <= 1e-12);
        for (std::int64_t s = 0; s < params.modulus.p; ++s) {
            CHECK(std::abs(d[s] - d[params.modulus.reduce(-s)]) <= 1e-12);
        }
    }
}

TEST_CASE("curve is monotone non-increasing") {
    auto result = evolve_exact(ProcessParams::trinary(Modulus(101)), 100);
    for (std::size_t i = 1; i < result.curve.points.size(); ++i) {
        CHECK(result.curve.points[i].tv <= result.curve.points[i - 1].tv + 1e-12);
    }
}

TEST_CASE("exhaustive path enumeration, p in {3,5,7}, n <= 5") {
    for (std::int64_t p : {3, 5, 7}) {
        Modulus mod(p);
        auto params = ProcessParams::trinary(mod);
        for (std::int64_t n = 0; n <= 5; ++n) {
            auto expected = normalize(oracles::process_counts(p, n, 2, mod.inv2, {1, 0, -1}));
            auto got = evolve_exact(params, n).final_dist;
            check_close(got.mass, expected, 1e-13);
        }
    }
}

TEST_CASE("generalized multiplier a=3 mod 7") {
    Modulus p7(7);
    auto params = ProcessParams::trinary(p7, 3);
    CHECK(params.multiplier_inverse == 5);
    auto expected = normalize(oracles::process_counts(7, 1, 3, 5, {1, 0, -1}));
    check_close(step_exact(DistributionModP::point_mass(p7, 0), params).mass, expected, 1e-15);
    // two steps too, where the multiplier actually matters
    auto expected2 = normalize(oracles::process_counts(7, 2, 3, 5, {1, 0, -1}));
    check_close(evolve_exact(params, 2).final_dist.mass, expected2, 1e-14);
}

TEST_CASE("binary increment preset evolves against enumeration") {
    Modulus p7(7);
    auto params = ProcessParams::binary(p7);
    auto expected = normalize(oracles::process_counts(7, 3, 2, p7.inv2, {1, -1}));
    check_close(evolve_exact(params, 3).final_dist.mass, expected, 1e-13);
}

TEST_CASE("conditional: empty sequence is the first-step law") {
    auto cond = conditional_evolve(ProcessParams::trinary(Modulus(5)), {});
    check_close(cond.mass, {1.0 / 3, 1.0 / 3, 0, 0, 1.0 / 3}, 1e-15);
}

TEST_CASE("conditional: all-forward matches the fixed-a chain") {
    Modulus mod(101);
    auto params = ProcessParams::trinary(mod);
    auto cond = conditional_evolve(params, all_forward_sequence(19));  // n = 20
    auto fixed = evolve_exact(ProcessParams::trinary(mod, 2, 1.0), 20).final_dist;
    check_close(cond.mass, fixed.mass, 1e-14);
}

TEST_CASE("conditional: alternating equals 2*(even-b sum) + (odd-b sum)") {
    const std::int64_t p = 101, n = 12;
    Modulus mod(p);
    auto cond = conditional_evolve(ProcessParams::trinary(mod), alternating_sequence(n - 1));

    // right-hand side: coefficients from the last step are 1,2,1,2,..., so
    // n/2 terms of weight 2 and n/2 of weight 1; convolve two trinomial sums
    auto twos = oracles::trinomial_counts(n / 2);   // sums of the coeff-2 b's
    auto ones = oracles::trinomial_counts(n / 2);   // sums of the coeff-1 b's
    std::vector<std::int64_t> counts(static_cast<std::size_t>(p), 0);
    for (std::size_t i = 0; i < twos.size(); ++i) {
        const std::int64_t u = static_cast<std::int64_t>(i) - n / 2;
        for (std::size_t k = 0; k < ones.size(); ++k) {
            const std::int64_t v = static_cast<std::int64_t>(k) - n / 2;
            counts[static_cast<std::size_t>(mod.reduce(2 * u + v))] += twos[i] * ones[k];
        }
    }
    check_close(cond.mass, normalize(counts), 1e-13);
}

TEST_CASE("conditional: alternating concentrates on <= 3(n+1) residues") {
    const std::int64_t p = 1009, n = 50;
    auto cond = conditional_evolve(ProcessParams::trinary(Modulus(p)), alternating_sequence(n - 1));
    std::int64_t support = 0;
    for (double x : cond.mass) support += x > 0.0;
    CHECK(support <= 3 * (n + 1));
    CHECK(tv_distance(cond) >= 1.0 - 3.0 * static_cast<double>(n + 1) / static_cast<double>(p));
}

TEST_CASE("conditional against exhaustive enumeration") {
    Modulus mod(7);
    auto params = ProcessParams::trinary(mod);
    MultiplierSequence seq = {StepChoice::Forward, StepChoice::Inverse, StepChoice::Inverse,
                              StepChoice::Forward};
    std::vector<std::int64_t> mults;
    for (auto c : seq) mults.push_back(c == StepChoice::Forward ? 2 : mod.inv2);
    auto expected = normalize(oracles::conditional_counts(7, mults, {1, 0, -1}));
    check_close(conditional_evolve(params, seq).mass, expected, 1e-14);
}

TEST_CASE("mixture of conditionals reconstructs the annealed law") {
    Modulus p5(5);
    auto params = ProcessParams::trinary(p5);
    check_close(mixture_reconstruct(params, 1).mass,
                conditional_evolve(params, {}).mass, 1e-15);
    check_close(mixture_reconstruct(params, 2).mass,
                {1.0 / 9, 2.0 / 9, 2.0 / 9, 2.0 / 9, 2.0 / 9}, 1e-14);
    check_close(mixture_reconstruct(params, 3).mass, evolve_exact(params, 3).final_dist.mass,
                1e-10);

    // the two n = 2 conditionals, each a 9-way enumeration
    auto fwd = normalize(oracles::conditional_counts(5, {2}, {1, 0, -1}));
    auto inv = normalize(oracles::conditional_counts(5, {3}, {1, 0, -1}));
    check_close(conditional_evolve(params, {StepChoice::Forward}).mass, fwd, 1e-15);
    check_close(conditional_evolve(params, {StepChoice::Inverse}).mass, inv, 1e-15);

    CHECK_THROWS_AS(mixture_reconstruct(params, 13), std::invalid_argument);
}

TEST_CASE("seeded trajectories are deterministic") {
    auto params = ProcessParams::trinary(Modulus(101));
    auto t0 = sample_trajectory(params, 0, 42);
    CHECK(t0.final_residue == 0);
    CHECK(t0.choices.empty());

    auto a = sample_trajectory(params, 50, 42, 7);
    auto b = sample_trajectory(params, 50, 42, 7);
    CHECK(a.final_residue == b.final_residue);
    CHECK(a.choices == b.choices);
    auto c = sample_trajectory(params, 50, 43, 7);
    CHECK(a.choices.size() == c.choices.size());
}

TEST_CASE("empirical distribution approaches the exact law") {
    auto params = ProcessParams::trinary(Modulus(101));
    const std::int64_t n = 50, samples = 20000;
    auto exact = evolve_exact(params, n).final_dist;
    auto emp = empirical_distribution(params, n, samples, 2024);
    double dist = 0.0;
    for (std::int64_t s = 0; s < 101; ++s) dist += std::abs(exact[s] - emp[s]);
    dist *= 0.5;
    CHECK(dist <= 3.0 * std::sqrt(101.0 / (4.0 * static_cast<double>(samples))));

    auto emp1 = empirical_distribution(params, n, samples, 2024, 1);
    auto emp4 = empirical_distribution(params, n, samples, 2024, 4);
    CHECK(emp1.mass == emp4.mass);  // thread count must not change anything
}

}  // TEST_SUITE
