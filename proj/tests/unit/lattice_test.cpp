#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "layered/errors.hpp"
#include "layered/lattice.hpp"
#include "support/random_media.hpp"

namespace layered {
namespace {

const double kSqrt2 = std::sqrt(2.0);

TEST(LatticePoint, Membership) {
    EXPECT_TRUE(in_initial_interval_lattice({1, 2, 0}));
    EXPECT_TRUE(in_initial_interval_lattice({3, 1, 1}));
    EXPECT_FALSE(in_initial_interval_lattice({1, 0, 2}));
    EXPECT_FALSE(in_initial_interval_lattice({1, -1, 0}));

    EXPECT_TRUE(in_reflection_support({1, 2, 0}));
    EXPECT_FALSE(in_reflection_support({2, 1, 0}));
    EXPECT_FALSE(in_reflection_support({0, 0, 0}));

    EXPECT_TRUE(in_transmission_support({0, 0, 3}));
    EXPECT_TRUE(in_transmission_support({0, 2, 0}));
    EXPECT_FALSE(in_transmission_support({1, 0, 0}));
    EXPECT_FALSE(in_transmission_support({0, -1, 0}));
}

TEST(LatticePoint, Arithmetic) {
    const LatticePoint k{1, 2, 0};
    EXPECT_EQ(k + LatticePoint::unit(3, 2), (LatticePoint{1, 2, 1}));
    EXPECT_EQ(2 * k, (LatticePoint{2, 4, 0}));
    EXPECT_EQ(LatticePoint::ones_through(4, 1), (LatticePoint{1, 1, 0, 0}));
    EXPECT_EQ(to_string(k), "(1,2,0)");
    EXPECT_THROW(k + LatticePoint({1, 1}), DimensionError);
}

TEST(LatticePoint, ArrivalTimes) {
    const std::vector<double> tau{1.0, 2.0, 3.0};
    EXPECT_DOUBLE_EQ(arrival_time({1, 1, 2}, tau), 9.0);
    EXPECT_THROW(arrival_time({1, 1}, tau), DimensionError);

    const std::vector<double> tau_prime{1.0, 2.0, 1.0};
    EXPECT_DOUBLE_EQ(transmission_arrival_time({0, 1}, tau_prime), 4.0);
}

TEST(EnumerateReflectionLattice, SingleLayer) {
    const std::vector<double> tau{1.0};
    const auto points = enumerate_reflection_lattice(tau, 2.5);
    EXPECT_EQ(points, (std::vector<LatticePoint>{{1}, {2}}));
}

TEST(EnumerateReflectionLattice, TwoLayers) {
    const std::vector<double> tau{1.0, kSqrt2};
    const auto points = enumerate_reflection_lattice(tau, 2.4143);
    EXPECT_EQ(points, (std::vector<LatticePoint>{{1, 0}, {2, 0}, {1, 1}}));
}

TEST(EnumerateReflectionLattice, CutoffBeforeFirstArrival) {
    const std::vector<double> tau{1.0, 0.3};
    EXPECT_TRUE(enumerate_reflection_lattice(tau, 0.99).empty());
}

TEST(EnumerateReflectionLattice, TiesBrokenLexicographically) {
    const std::vector<double> tau{1.0, 1.0};
    const auto points = enumerate_reflection_lattice(tau, 2.0);
    EXPECT_EQ(points, (std::vector<LatticePoint>{{1, 0}, {1, 1}, {2, 0}}));
}

TEST(EnumerateReflectionLattice, InclusiveCutoff) {
    const std::vector<double> tau{0.1, 0.2};
    // 0.1 + 0.2 != 0.3 in binary; the inclusive cutoff still admits (1,1).
    const auto points = enumerate_reflection_support(tau, 0.3);
    EXPECT_EQ(points, (std::vector<LatticePoint>{{1, 0}, {1, 1}}));
}

// Brute-force filter over an integer box, independent of the pruned search.
std::vector<LatticePoint> box_scan(const std::vector<double>& tau, double cutoff, bool support_only) {
    const double shortest = *std::min_element(tau.begin(), tau.end());
    const int bound = static_cast<int>(std::ceil(cutoff / shortest));
    const std::size_t dim = tau.size();
    std::vector<LatticePoint> out;
    std::vector<int> k(dim, 0);
    while (true) {
        const LatticePoint point(k);
        double t = 0.0;
        for (std::size_t i = 0; i < dim; ++i) {
            t += k[i] * tau[i];
        }
        const bool member = support_only ? in_reflection_support(point)
                                         : in_initial_interval_lattice(point) && k[0] >= 1;
        if (member && t <= inclusive_cutoff(cutoff)) {
            out.push_back(point);
        }
        std::size_t i = 0;
        while (i < dim && ++k[i] > bound) {
            k[i] = 0;
            ++i;
        }
        if (i == dim) {
            break;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

TEST(EnumerateReflectionLattice, MatchesBoxScan) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t dim = 1 + trial % 4;
        const auto tau = testing::uniform_vector(rng, dim, 0.5, 1.5);
        const double cutoff = testing::uniform_vector(rng, 1, 1.0, 5.0).front();
        for (bool support_only : {false, true}) {
            auto points = support_only ? enumerate_reflection_support(tau, cutoff)
                                       : enumerate_reflection_lattice(tau, cutoff);
            for (std::size_t i = 1; i < points.size(); ++i) {
                EXPECT_LE(arrival_time(points[i - 1], tau), arrival_time(points[i], tau));
            }
            std::sort(points.begin(), points.end());
            EXPECT_EQ(points, box_scan(tau, cutoff, support_only)) << "trial " << trial;
        }
    }
}

TEST(EnumerateReflectionLattice, ResourceCap) {
    const std::vector<double> tau{0.1, 0.1, 0.1};
    EXPECT_THROW(enumerate_reflection_lattice(tau, 10.0, EnumerationLimits{1000}), ResourceError);
}

TEST(EnumerateTransmissionLattice, Examples) {
    const std::vector<double> equal{1.0, 1.0, 1.0};
    const auto first = enumerate_transmission_lattice(equal, 1.5);
    ASSERT_EQ(first.size(), 1u);
    EXPECT_EQ(first[0].point, (LatticePoint{0, 0}));
    EXPECT_DOUBLE_EQ(first[0].time, 1.5);

    EXPECT_TRUE(enumerate_transmission_lattice(equal, 1.4).empty());

    const std::vector<double> tau_prime{1.0, 2.0, 1.0};
    const auto points = enumerate_transmission_lattice(tau_prime, 4.5);
    const auto it = std::find_if(points.begin(), points.end(),
                                 [](const TimedPoint& p) { return p.point == LatticePoint{0, 1}; });
    ASSERT_NE(it, points.end());
    EXPECT_DOUBLE_EQ(it->time, 4.0);
    for (const auto& p : points) {
        EXPECT_TRUE(in_transmission_support(p.point));
        EXPECT_LE(p.time, 4.5);
    }
}

}  // namespace
}  // namespace layered
