#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "genruns/contract.hpp"
#include "genruns/order_maintenance.hpp"

namespace genruns {
namespace {

TEST(OrderMaintenance, InsertAfterOrders) {
  OrderMaintenanceList list;
  const OmNode a = om_insert_after(list, std::nullopt, 1);
  const OmNode b = om_insert_after(list, a, 2);
  EXPECT_TRUE(om_precedes(list, a, b));
  EXPECT_FALSE(om_precedes(list, b, a));
  EXPECT_FALSE(om_precedes(list, a, a));
  const OmNode c = list.insert_after(a, 3);
  EXPECT_EQ(list.to_vector(), (std::vector<Position>{1, 3, 2}));
  EXPECT_TRUE(list.precedes(a, c));
  EXPECT_TRUE(list.precedes(c, b));
  EXPECT_EQ(list.front(), a);
  EXPECT_EQ(list.back(), b);
  EXPECT_EQ(list.next(a), c);
  EXPECT_EQ(list.prev(c), a);
  EXPECT_EQ(list.prev(a), std::nullopt);
  EXPECT_EQ(list.next(b), std::nullopt);
  EXPECT_EQ(list.payload(c), 3u);
}

TEST(OrderMaintenance, InsertBeforeAndFront) {
  OrderMaintenanceList list;
  const OmNode a = list.insert_after(std::nullopt, 1);
  const OmNode z = list.insert_before(a, 0);
  const OmNode f = list.insert_after(std::nullopt, 9);
  EXPECT_EQ(list.to_vector(), (std::vector<Position>{9, 0, 1}));
  EXPECT_TRUE(list.precedes(f, z));
}

TEST(OrderMaintenance, ForeignNodesAreContractViolations) {
  OrderMaintenanceList list;
  const OmNode a = list.insert_after(std::nullopt, 1);
  EXPECT_THROW(list.insert_after(OmNode{5}, 2), ContractViolation);
  EXPECT_THROW((void)list.precedes(a, OmNode{7}), ContractViolation);
}

TEST(OrderMaintenance, RandomInsertionsAgreeWithReferenceList) {
  std::mt19937_64 gen(3);
  OrderMaintenanceList list;
  std::vector<OmNode> reference;  // list order
  constexpr int kInsertions = 100000;
  for (int i = 0; i < kInsertions; ++i) {
    std::uniform_int_distribution<std::size_t> pick(0, reference.size());
    const std::size_t slot = pick(gen);  // insert after reference[slot - 1]
    const auto anchor = slot == 0 ? std::nullopt : std::optional<OmNode>(reference[slot - 1]);
    const OmNode node = list.insert_after(anchor, static_cast<Position>(i));
    reference.insert(reference.begin() + static_cast<std::ptrdiff_t>(slot), node);
  }
  std::vector<Position> expected;
  for (OmNode n : reference) expected.push_back(list.payload(n));
  ASSERT_EQ(list.to_vector(), expected);
  for (std::size_t j = 0; j + 1 < reference.size(); ++j) {
    ASSERT_TRUE(list.precedes(reference[j], reference[j + 1]));
  }
  std::uniform_int_distribution<std::size_t> idx(0, reference.size() - 1);
  for (int trial = 0; trial < 200000; ++trial) {
    const std::size_t a = idx(gen), b = idx(gen), c = idx(gen);
    ASSERT_EQ(list.precedes(reference[a], reference[b]), a < b);
    if (a != b) ASSERT_NE(list.precedes(reference[a], reference[b]), list.precedes(reference[b], reference[a]));
    if (list.precedes(reference[a], reference[b]) && list.precedes(reference[b], reference[c])) {
      ASSERT_TRUE(list.precedes(reference[a], reference[c]));
    }
  }
}

TEST(OrderMaintenance, AdversarialInsertionPatterns) {
  // Appending at the back, pushing at the front and hammering one gap all
  // exhaust midpoints quickly.
  for (int pattern = 0; pattern < 3; ++pattern) {
    OrderMaintenanceList list;
    const OmNode first = list.insert_after(std::nullopt, 0);
    std::optional<OmNode> last = first;
    std::vector<Position> expected{0};
    for (Position i = 1; i <= 50000; ++i) {
      if (pattern == 0) {
        last = list.insert_after(last, i);
        expected.push_back(i);
      } else if (pattern == 1) {
        list.insert_after(std::nullopt, i);
        expected.insert(expected.begin(), i);
      } else {
        list.insert_after(first, i);
        expected.insert(expected.begin() + 1, i);
      }
    }
    ASSERT_EQ(list.to_vector(), expected) << pattern;
    const double m = 50001;
    EXPECT_LT(static_cast<double>(list.relabel_work()), 8.0 * m * std::log2(m)) << pattern;
  }
}

}  // namespace
}  // namespace genruns
