#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "spinweyl/combinat.hpp"

using namespace spinweyl;

namespace {

bool is_power_of_two(size_t v) { return v && (v & (v - 1)) == 0; }

}  // namespace

TEST_CASE("partition enumeration") {
  CHECK(partitions(0).size() == 1);
  CHECK(partitions(4).size() == 5);
  CHECK(partitions(6).size() == 11);
  CHECK(partitions(12).size() == 77);
  CHECK(distinct_partitions(6).size() == 4);
  CHECK(distinct_partitions(12).size() == 15);
  for (const auto& lam : partitions(7)) CHECK(is_partition(lam));
  for (const auto& lam : distinct_partitions(9)) CHECK(has_distinct_parts(lam));
  // enumerations are duplicate-free
  auto ps = partitions(8);
  std::set<Partition> uniq(ps.begin(), ps.end());
  CHECK(uniq.size() == ps.size());
}

TEST_CASE("transpose and parity") {
  CHECK(transpose({3, 2, 1}) == Partition{3, 2, 1});
  CHECK(transpose({4, 1}) == Partition{2, 1, 1, 1});
  CHECK(transpose(transpose({5, 3, 3, 1})) == Partition{5, 3, 3, 1});
  CHECK(!partition_even({2, 1}));      // 3 boxes, 2 parts: odd, associate pair
  CHECK(partition_even({3}));          // 3 boxes, 1 part: even, single type
  CHECK(partition_even({3, 1}));       // 4 boxes, 2 parts
  CHECK(partition_weight({4, 2, 1}) == 7);
}

TEST_CASE("dimension formula for genuine types") {
  // odd partitions label an associate pair; the formula gives the dimension
  // of each member, so (2,1) gives the two genuine 1-dims of the degree-3 cover
  CHECK(schur_dimension({2, 1}) == 1);
  CHECK(schur_dimension({3, 2, 1}) == 4);
  for (int n = 1; n <= 8; ++n)
    CHECK(schur_dimension({n}) == (Int(1) << ((n - 1) / 2)));
  CHECK(schur_dimension({4, 2}) == 20);
  CHECK(schur_dimension({5, 1}) == 16);

  // genuine part of the squared-dimension count for the degree-6 double cover:
  // even lambda contributes one type, odd lambda an associate pair
  Int total = 0;
  for (const auto& lam : distinct_partitions(6)) {
    Int d = schur_dimension(lam);
    total += (partition_even(lam) ? 1 : 2) * d * d;
  }
  CHECK(total == 720);
}

TEST_CASE("trace ratio on the 3-cycle class") {
  CHECK(spin_char_on_3cycle({2, 1}) == Rat(-1));
  CHECK(spin_char_on_3cycle({3}) == Rat(1, 2));
  CHECK(spin_char_on_3cycle({4}) == Rat(1, 2));
  // restriction consistency at n = 4: tr((123)) in the (3,1) type equals the
  // sum of traces of the restrictions (3) and (2,1)+ (+) (2,1)- in degree 3
  Rat lhs = spin_char_on_3cycle({3, 1}) * Rat(schur_dimension({3, 1}));
  Rat rhs = spin_char_on_3cycle({3}) * Rat(schur_dimension({3})) +
            spin_char_on_3cycle({2, 1}) * Rat(2 * schur_dimension({2, 1}));
  CHECK(lhs == rhs);
}

TEST_CASE("partition fraction identity up to n = 12") {
  for (int n = 1; n <= 12; ++n)
    for (const auto& lam : distinct_partitions(n))
      CHECK(verify_partition_fraction_identity(lam));
}

TEST_CASE("content power sums") {
  CHECK(content_power_sum({2, 1}, 2, Rat(1), Rat(1)) == 5);
  CHECK(content_power_sum({2}, 2, Rat(1), Rat(1)) == 5);
  CHECK(content_power_sum({2, 1}, 1, Rat(1), Rat(0)) == 0);
  CHECK(content_power_sum({2, 1}, 2, Rat(1), Rat(0)) == 2);
  CHECK(content_power_sum({3, 1}, 2, Rat(1), Rat(1, 2)) == Rat(1 + 9 + 25 + 1, 4));
  // scaling both parameters scales p2 quadratically
  CHECK(content_power_sum({3, 2}, 2, Rat(2), Rat(3)) ==
        content_power_sum({3, 2}, 2, Rat(1), Rat(3, 2)) * 4);
}

TEST_CASE("slooten on pinned examples") {
  auto r1 = slooten({2, 1}, Rat(1), Rat(1, 2));
  REQUIRE(r1.size() == 1);
  CHECK(r1[0] == Bipartition{{2}, {1}});

  auto r2 = slooten({2}, Rat(1), Rat(1));
  REQUIRE(r2.size() == 1);
  CHECK(r2[0] == Bipartition{{2}, {}});

  // zero-content final box branches
  auto r3 = slooten({2, 1}, Rat(1), Rat(1));
  REQUIRE(r3.size() == 2);
  CHECK(std::count(r3.begin(), r3.end(), Bipartition{{2, 1}, {}}) == 1);
  CHECK(std::count(r3.begin(), r3.end(), Bipartition{{2}, {1}}) == 1);

  auto r4 = slooten({1, 1}, Rat(1), Rat(1));
  REQUIRE(r4.size() == 2);
  CHECK(std::count(r4.begin(), r4.end(), Bipartition{{1, 1}, {}}) == 1);
  CHECK(std::count(r4.begin(), r4.end(), Bipartition{{1}, {1}}) == 1);

  // corner tie branches
  auto r5 = slooten({1, 1}, Rat(1), Rat(1, 2));
  REQUIRE(r5.size() == 2);
  CHECK(std::count(r5.begin(), r5.end(), Bipartition{{1}, {1}}) == 1);
  CHECK(std::count(r5.begin(), r5.end(), Bipartition{{}, {2}}) == 1);

  auto r6 = slooten({2, 2}, Rat(1), Rat(1));
  REQUIRE(r6.size() == 1);
  CHECK(r6[0] == Bipartition{{2, 2}, {}});

  auto r7 = slooten({2, 2}, Rat(1), Rat(0));
  CHECK(r7.size() == 4);
}

TEST_CASE("slooten output shape invariants") {
  for (int n = 1; n <= 8; ++n) {
    for (const auto& lam : partitions(n)) {
      for (const Rat& eps : {Rat(0), Rat(1, 2), Rat(1)}) {
        auto outs = slooten(lam, Rat(1), eps);
        CHECK(is_power_of_two(outs.size()));
        CHECK(std::is_sorted(outs.begin(), outs.end()));
        for (const auto& bp : outs)
          CHECK(partition_weight(bp.first) + partition_weight(bp.second) == n);
      }
    }
  }
}

TEST_CASE("strings") {
  CHECK(partition_str({3, 1}) == "(3,1)");
  CHECK(partition_str({}) == "()");
  CHECK(bipartition_str({{2}, {1}}) == "(2)x(1)");
}
