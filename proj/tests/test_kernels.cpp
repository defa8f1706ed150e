#include <gtest/gtest.h>

#include <cstring>
#include <random>
#include <vector>

#include "sgdqe/kernels.hpp"

using namespace sgdqe::kernels;

namespace {

std::vector<double> random_vector(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> d(-1e3, 1e3);
    std::vector<double> v(n);
    for (auto& x : v) x = d(rng);
    return v;
}

bool same_bits(const double* a, const double* b, std::size_t n) {
    return std::memcmp(a, b, n * sizeof(double)) == 0;
}

}  // namespace

TEST(Kernels, ScalarReference) {
    double x[] = {1, 2, 3}, y[] = {1, 1, 1};
    scalar::axpy(3, 2.0, x, y);
    EXPECT_EQ(y[0], 3.0);
    EXPECT_EQ(y[2], 7.0);
    scalar::scale(3, 0.5, y);
    EXPECT_EQ(y[1], 2.5);
    const double z[] = {-4, 3, 2};
    EXPECT_EQ(scalar::max_abs(3, z), 4.0);
    EXPECT_EQ(scalar::max_abs(0, z), 0.0);
}

TEST(Kernels, Avx2MatchesScalarBitwise) {
    if (!avx2_available()) GTEST_SKIP() << "CPU lacks AVX2";
    std::mt19937_64 rng(99);
    for (std::size_t n = 0; n <= 67; ++n) {
        for (std::size_t off = 0; off < 3; ++off) {  // unaligned starts
            auto x = random_vector(rng, n + off);
            auto y1 = random_vector(rng, n + off);
            auto y2 = y1;
            const double alpha = std::uniform_real_distribution<double>(-3, 3)(rng);
            scalar::axpy(n, alpha, x.data() + off, y1.data() + off);
            avx2::axpy(n, alpha, x.data() + off, y2.data() + off);
            EXPECT_TRUE(same_bits(y1.data(), y2.data(), n + off)) << "axpy n=" << n;
            scalar::scale(n, alpha, y1.data() + off);
            avx2::scale(n, alpha, y2.data() + off);
            EXPECT_TRUE(same_bits(y1.data(), y2.data(), n + off)) << "scale n=" << n;
            const double m1 = scalar::max_abs(n, x.data() + off);
            const double m2 = avx2::max_abs(n, x.data() + off);
            EXPECT_TRUE(same_bits(&m1, &m2, 1)) << "max_abs n=" << n;
        }
    }
}

TEST(Kernels, DispatchFollowsSelection) {
    const Isa before = active_isa();
    EXPECT_EQ(select_isa(Isa::scalar), Isa::scalar);
    EXPECT_EQ(active_isa(), Isa::scalar);
    const Isa got = select_isa(Isa::avx2);
    EXPECT_EQ(got, avx2_available() ? Isa::avx2 : Isa::scalar);
    std::mt19937_64 rng(5);
    auto x = random_vector(rng, 1001), y1 = random_vector(rng, 1001), y2 = y1;
    select_isa(Isa::scalar);
    axpy(x.size(), 1.25, x.data(), y1.data());
    select_isa(Isa::avx2);
    axpy(x.size(), 1.25, x.data(), y2.data());
    EXPECT_TRUE(same_bits(y1.data(), y2.data(), x.size()));
    select_isa(before);
    EXPECT_STREQ(isa_name(Isa::scalar), "scalar");
}
