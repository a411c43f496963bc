#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "layered/arrival.hpp"
#include "layered/errors.hpp"
#include "support/random_media.hpp"

namespace layered {
namespace {

const double kSqrt2 = std::sqrt(2.0);

std::vector<double> values(const ArrivalVector& v) { return {v.values().begin(), v.values().end()}; }

TEST(ArrivalVector, Validation) {
    EXPECT_NO_THROW(ArrivalVector({1.0, 2.0}));
    EXPECT_THROW(ArrivalVector({1.0, 1.0}), ValidationError);
    EXPECT_THROW(ArrivalVector({0.0, 1.0}), ValidationError);
}

TEST(PhiMap, Examples) {
    const auto phi = values(phi_map(std::vector<double>{1.0, kSqrt2}));
    ASSERT_EQ(phi.size(), 3u);
    EXPECT_DOUBLE_EQ(phi[0], 1.0);
    EXPECT_DOUBLE_EQ(phi[1], 2.0);
    EXPECT_DOUBLE_EQ(phi[2], 1.0 + kSqrt2);

    EXPECT_EQ(values(phi_map(std::vector<double>{2.0, 3.0})), (std::vector<double>{2.0, 4.0, 5.0}));
}

TEST(PhiMap, CommutesWithScaling) {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 20; ++trial) {
        const auto tau = testing::uniform_vector(rng, 2 + trial % 4, 0.5, 1.5);
        const double alpha = testing::uniform_vector(rng, 1, 0.1, 10.0).front();
        std::vector<double> scaled = tau;
        for (double& t : scaled) {
            t *= alpha;
        }
        const auto base = values(phi_map(tau));
        const auto image = values(phi_map(scaled));
        ASSERT_EQ(base.size(), image.size());
        for (std::size_t i = 0; i < base.size(); ++i) {
            EXPECT_NEAR(image[i], alpha * base[i], 1e-12 * image[i]);
        }
    }
}

TEST(IsGeneric, Examples) {
    EXPECT_FALSE(is_generic(std::vector<double>{1.0, 1.0}));
    EXPECT_TRUE(is_generic(std::vector<double>{1.0, kSqrt2}));
    EXPECT_TRUE(is_generic(std::vector<double>{2.0, 3.0}));
    EXPECT_FALSE(is_generic(std::vector<double>{1.0, 2.0, 0.5}));
}

TEST(InvertArrivalTimes, Examples) {
    const auto sqrt_case = invert_arrival_times(ArrivalVector({1.0, 2.0, 1.0 + kSqrt2}));
    ASSERT_EQ(sqrt_case.tau.size(), 2u);
    EXPECT_DOUBLE_EQ(sqrt_case.tau[0], 1.0);
    EXPECT_NEAR(sqrt_case.tau[1], kSqrt2, 1e-15);
    EXPECT_EQ(sqrt_case.rows, (std::vector<LatticePoint>{{1, 0}, {2, 0}, {1, 1}}));

    const auto integer_case = invert_arrival_times(ArrivalVector({2.0, 4.0, 5.0}));
    EXPECT_EQ(integer_case.tau, (std::vector<double>{2.0, 3.0}));
    EXPECT_EQ(integer_case.rows, (std::vector<LatticePoint>{{1, 0}, {2, 0}, {1, 1}}));
    EXPECT_EQ(integer_case.times(), (std::vector<double>{2.0, 4.0, 5.0}));
}

TEST(InvertArrivalTimes, RoundTrip) {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 100; ++trial) {
        const auto tau = testing::uniform_vector(rng, 2 + trial % 6, 0.5, 1.5);
        ASSERT_TRUE(is_generic(tau));
        const auto phi = phi_map(tau);
        const auto result = invert_arrival_times(phi);
        ASSERT_EQ(result.tau.size(), tau.size());
        for (std::size_t i = 0; i < tau.size(); ++i) {
            EXPECT_NEAR(result.tau[i], tau[i], 1e-10 * tau[i]);
        }
        EXPECT_EQ(result.rows, cell_signature(tau));
        const auto times = result.times();
        ASSERT_EQ(times.size(), phi.size());
        for (std::size_t i = 0; i < times.size(); ++i) {
            EXPECT_NEAR(times[i], phi[i], 1e-12 * phi[i]);
        }
    }
}

TEST(InvertArrivalTimes, PrimarySubvectorSuffices) {
    std::mt19937_64 rng(13);
    std::bernoulli_distribution keep(0.5);
    for (int trial = 0; trial < 50; ++trial) {
        const auto tau = testing::uniform_vector(rng, 2 + trial % 5, 0.5, 1.5);
        const auto phi = phi_map(tau);
        const auto full = invert_arrival_times(phi);
        std::vector<double> partial_sums;
        double s = 0.0;
        for (double t : tau) {
            s += t;
            partial_sums.push_back(s);
        }
        std::vector<double> subvector;
        for (double v : phi.values()) {
            const bool primary = std::any_of(partial_sums.begin(), partial_sums.end(),
                                             [&](double p) { return std::abs(p - v) <= 1e-12 * p; });
            if (primary || keep(rng)) {
                subvector.push_back(v);
            }
        }
        const auto reduced = invert_arrival_times(ArrivalVector(subvector));
        EXPECT_EQ(reduced.rows, full.rows);
        ASSERT_EQ(reduced.tau.size(), full.tau.size());
        for (std::size_t i = 0; i < tau.size(); ++i) {
            EXPECT_NEAR(reduced.tau[i], tau[i], 1e-10 * tau[i]);
        }
    }
}

TEST(InvertArrivalTimes, ReflectionSupportCandidates) {
    // Only k_0 = 1 points: the multiple 2 tau_0 is neither generated nor needed.
    ArrivalInversionOptions options;
    options.candidates = CandidateSet::ReflectionSupport;
    const auto result = invert_arrival_times(ArrivalVector({1.0, 1.0 + kSqrt2, 1.0 + 2 * kSqrt2}), options);
    ASSERT_EQ(result.tau.size(), 2u);
    EXPECT_NEAR(result.tau[1], kSqrt2, 1e-15);
    EXPECT_EQ(result.rows, (std::vector<LatticePoint>{{1, 0}, {1, 1}, {1, 2}}));
}

TEST(InvertArrivalTimes, Errors) {
    EXPECT_THROW(invert_arrival_times(ArrivalVector()), InversionError);
    // Everything is a multiple of the first arrival: only one travel time.
    EXPECT_THROW(invert_arrival_times(ArrivalVector({1.0, 2.0, 3.0})), InversionError);
    // The last arrival sits within tolerance of an explained one.
    try {
        invert_arrival_times(ArrivalVector({1.0, 1.5, 1.5 + 5e-10}));
        FAIL() << "expected InversionError";
    } catch (const InversionError& e) {
        EXPECT_EQ(e.stage(), "arrival-times");
        EXPECT_NE(std::string(e.what()).find("not positive"), std::string::npos) << e.what();
    }
    EXPECT_THROW(invert_arrival_times(ArrivalVector({1.0, 2.0, 2.0 + 1e-10})), InversionError);
}

TEST(CellSignature, StableInsideACell) {
    EXPECT_EQ(cell_signature(std::vector<double>{1.0, kSqrt2}), cell_signature(std::vector<double>{1.0, 1.42}));
    EXPECT_NE(cell_signature(std::vector<double>{1.0, 0.9}), cell_signature(std::vector<double>{1.0, 1.1}));
    EXPECT_EQ(cell_signature(std::vector<double>{3.0, 3.0 * kSqrt2}), cell_signature(std::vector<double>{1.0, kSqrt2}));
    EXPECT_THROW(cell_signature(std::vector<double>{1.0, 1.0}), InversionError);
}

TEST(CellSignature, LocallyLinear) {
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 20; ++trial) {
        const auto tau = testing::uniform_vector(rng, 3, 0.5, 1.5);
        auto nearby = tau;
        nearby[1] *= 1.0 + 1e-7;
        const auto rows = cell_signature(tau);
        if (rows != cell_signature(nearby)) {
            continue;
        }
        const auto phi = phi_map(nearby);
        ASSERT_EQ(phi.size(), rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            EXPECT_NEAR(arrival_time(rows[i], nearby), phi[i], 1e-12 * phi[i]);
        }
    }
}

}  // namespace
}  // namespace layered
