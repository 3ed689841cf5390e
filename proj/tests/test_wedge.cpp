#include <gtest/gtest.h>

#include <random>

#include "brauer/box_oracle.hpp"
#include "brauer/wedge.hpp"

using namespace brauer;
using brauer::oracle::oracle_lower;
using brauer::oracle::oracle_raise;

namespace {

HalfInt h(std::int64_t twice) { return HalfInt::from_twice(twice); }
HalfInt I(std::int64_t v) { return HalfInt::from_int(v); }

WedgeVector w(const Partition& shape, HalfInt charge) { return WedgeVector::basis(make_sequence(shape, charge)); }

}  // namespace

TEST(ApplyRaising, Examples) {
  EXPECT_EQ(apply_raising(h(1), w(Partition{1}, I(0))), w(Partition{}, I(0)));
  EXPECT_TRUE(apply_raising(h(3), w(Partition{}, I(0))).is_zero());
  EXPECT_TRUE(apply_raising(h(5), WedgeVector(I(0))).is_zero());
}

TEST(ApplyLowering, Examples) {
  EXPECT_EQ(apply_lowering(h(1), w(Partition{}, I(0))), w(Partition{1}, I(0)));
  EXPECT_TRUE(apply_lowering(h(3), w(Partition{}, I(0))).is_zero());
  EXPECT_TRUE(apply_lowering(h(-1), WedgeVector(I(0))).is_zero());
}

TEST(ApplyB, Examples) {
  EXPECT_EQ(apply_b(h(-1), w(Partition{}, I(0))), w(Partition{1}, I(0)));
  // e_{1/2}: 0 -> 1 gives the vacuum; f_{-1/2}: 0 -> -1 gives (-1, 2, 3, ...) = shape (2)
  EXPECT_EQ(apply_b(h(1), w(Partition{1}, I(0))), w(Partition{}, I(0)) + w(Partition{2}, I(0)));
  EXPECT_TRUE(apply_b(h(7), WedgeVector(I(0))).is_zero());
}

TEST(ApplyB, RejectsIndexOutsideI) {
  EXPECT_THROW(apply_b(I(0), w(Partition{}, I(0))), std::invalid_argument);
  EXPECT_THROW(apply_raising(h(1), w(Partition{}, h(1))), std::invalid_argument);
  EXPECT_NO_THROW(apply_raising(I(1), w(Partition{}, h(1))));
}

TEST(WedgeVector, RejectsMixedSectors) {
  WedgeVector v(I(0));
  EXPECT_THROW(v.add(make_sequence(Partition{}, I(1)), 1), std::invalid_argument);
  EXPECT_THROW(v += w(Partition{}, I(1)), std::invalid_argument);
}

TEST(WedgeVector, CancellingTermsAreDropped) {
  WedgeVector v = w(Partition{1}, I(0)) + Rational(-1) * w(Partition{1}, I(0));
  EXPECT_TRUE(v.is_zero());
}

TEST(RelativeWeight, Examples) {
  EXPECT_TRUE(relative_weight(make_sequence(Partition{}, I(0))).is_zero());
  EXPECT_EQ(relative_weight(make_sequence(Partition{1}, I(0))), RootVector({{h(1), -1}}));
  EXPECT_EQ(relative_weight(make_sequence(Partition{1, 1}, I(0))), RootVector({{h(1), -1}, {h(3), -1}}));
}

TEST(WedgeProperties, TransposedSequenceWeightBridge) {
  for (std::int64_t delta = -4; delta <= 6; ++delta) {
    const HalfInt d = charge_for_delta(delta);
    for (const auto& lambda : enumerate_partitions(10))
      ASSERT_EQ(relative_weight(make_sequence(transpose(lambda), d)), -weight_alpha_part(lambda, delta))
          << lambda << " delta=" << delta;
  }
}

TEST(WedgeProperties, GeneratorsMatchBoxOracle) {
  for (std::int64_t delta = -4; delta <= 6; ++delta) {
    const HalfInt d = charge_for_delta(delta);
    for (const auto& shape : enumerate_partitions(6)) {
      const auto s = make_sequence(shape, d);
      for (std::int64_t t = -21; t <= 21; ++t) {
        const HalfInt i = HalfInt::from_twice(t);
        if (!(i - HalfInt::half(1) - d).is_integer()) continue;
        auto up = raise_basis(i, s);
        auto expected_up = oracle_raise(i, d, shape);
        ASSERT_EQ(up.has_value(), expected_up.has_value()) << shape << " e_" << i << " d=" << d;
        if (up) EXPECT_EQ(up->shape(), *expected_up);

        auto down = lower_basis(-i, s);
        auto expected_down = oracle_lower(-i, d, shape);
        ASSERT_EQ(down.has_value(), expected_down.has_value()) << shape << " f_" << -i << " d=" << d;
        if (down) EXPECT_EQ(down->shape(), *expected_down);

        WedgeVector b = apply_b(i, WedgeVector::basis(s));
        ASSERT_LE(b.terms().size(), 2u);
        for (const auto& [out, coeff] : b.terms()) {
          EXPECT_EQ(coeff, 1);
          EXPECT_EQ(std::abs(out.shape().size() - shape.size()), 1);
          RootVector shift = relative_weight(out) - relative_weight(s);
          // e_i raises the weight by alpha_i; f_{-i} lowers it by alpha_{-i}
          EXPECT_TRUE(shift == RootVector({{i, 1}}) || shift == RootVector({{-i, -1}}));
        }
      }
    }
  }
}

TEST(WedgeProperties, Linearity) {
  std::mt19937 rng(99);
  auto shapes = enumerate_partitions(5);
  std::uniform_int_distribution<std::size_t> pick(0, shapes.size() - 1);
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4), idx(-4, 4);
  for (int trial = 0; trial < 200; ++trial) {
    const HalfInt d = trial % 2 ? I(0) : h(-1);
    auto random_vector = [&] {
      WedgeVector v(d);
      for (int k = 0; k < 4; ++k) v.add(make_sequence(shapes[pick(rng)], d), Rational(num(rng), den(rng)));
      return v;
    };
    WedgeVector a = random_vector(), b = random_vector();
    Rational k(num(rng), den(rng));
    const HalfInt i = d + h(1) + idx(rng);
    EXPECT_EQ(apply_raising(i, a + b), apply_raising(i, a) + apply_raising(i, b));
    EXPECT_EQ(apply_lowering(i, a + b), apply_lowering(i, a) + apply_lowering(i, b));
    EXPECT_EQ(apply_raising(i, k * a), k * apply_raising(i, a));
    EXPECT_EQ(apply_lowering(i, k * a), k * apply_lowering(i, a));
  }
}
