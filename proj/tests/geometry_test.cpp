#include <gtest/gtest.h>

#include "deltaconf/geometry.hpp"

using namespace deltaconf;

namespace {

Segment seg(double ax, double ay, double bx, double by, std::size_t owner = 0) {
  return {{ax, ay}, {bx, by}, owner};
}

std::optional<Contact> contact(const Segment& a, const Segment& b, double eps = 0) {
  Contact c{0, 1, ContactKind::Touch, {}, false};
  if (segment_contact(a, b, eps, c)) return c;
  return std::nullopt;
}

}  // namespace

TEST(SegmentContact, Classification) {
  EXPECT_FALSE(contact(seg(0, 0, 1, 0), seg(0, 1, 1, 1)));
  EXPECT_EQ(contact(seg(0, 0, 2, 2), seg(0, 2, 2, 0))->kind, ContactKind::Crossing);

  const auto shared = contact(seg(0, 0, 1, 0), seg(1, 0, 1, 5));
  ASSERT_TRUE(shared);
  EXPECT_EQ(shared->kind, ContactKind::Touch);
  EXPECT_TRUE(shared->endpoint_of_both);

  const auto tee = contact(seg(0, 0, 4, 0), seg(2, 0, 2, 3));
  ASSERT_TRUE(tee);
  EXPECT_EQ(tee->kind, ContactKind::Touch);
  EXPECT_FALSE(tee->endpoint_of_both);
  EXPECT_EQ(tee->at, (Point{2, 0}));

  EXPECT_EQ(contact(seg(0, 0, 4, 2), seg(2, 1, 6, 3))->kind, ContactKind::Overlap);
  EXPECT_EQ(contact(seg(0, 0, 2, 1), seg(2, 1, 4, 2))->kind, ContactKind::Touch);
  EXPECT_FALSE(contact(seg(0, 0, 2, 1), seg(4, 2, 6, 3)));
}

TEST(SegmentContact, Tolerance) {
  EXPECT_FALSE(contact(seg(0, 0, 1, 0), seg(1 + 1e-7, 0, 2, 0)));
  EXPECT_TRUE(contact(seg(0, 0, 1, 0), seg(1 + 1e-7, 0, 2, 0), 1e-12));
}

TEST(SegmentContacts, GridMatchesBruteForce) {
  std::vector<Segment> segs;
  std::uint64_t state = 12345;
  auto next = [&] {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<double>((state >> 33) % 40);
  };
  for (std::size_t i = 0; i < 300; ++i) {
    const double x = next();
    const double y = next();
    segs.push_back(seg(x, y, x + next() / 8, y + next() / 10, i));
  }
  const auto found = segment_contacts(segs);
  std::size_t brute = 0;
  for (std::size_t i = 0; i < segs.size(); ++i)
    for (std::size_t j = i + 1; j < segs.size(); ++j) brute += contact(segs[i], segs[j]).has_value();
  EXPECT_EQ(found.size(), brute);
  EXPECT_GT(brute, 0u);
}

TEST(SegmentContacts, SkipsSameOwner) {
  const std::vector<Segment> segs{seg(0, 0, 1, 0, 7), seg(1, 0, 2, 0, 7), seg(5, 5, 6, 6, 8)};
  EXPECT_EQ(segment_contacts(segs).size(), 1u);
  EXPECT_TRUE(segment_contacts(segs, 0, true).empty());
}
