#include <doctest.h>

#include <algorithm>
#include <map>

#include "tvs/characters.hpp"
#include "tvs/partition.hpp"

using namespace tvs;

namespace {

// p(n) by the coin-change recurrence over part sizes.
std::vector<long> partition_counts(int n) {
  std::vector<long> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= n; ++part)
    for (int s = part; s <= n; ++s) p[static_cast<std::size_t>(s)] += p[static_cast<std::size_t>(s - part)];
  return p;
}

std::vector<int> sorted_hooks(const Partition& l) {
  std::vector<int> h;
  for (const auto& c : hooks_and_contents(l)) h.push_back(c.hook);
  std::sort(h.begin(), h.end());
  return h;
}

std::vector<int> sorted_contents(const Partition& l) {
  std::vector<int> h;
  for (const auto& c : hooks_and_contents(l)) h.push_back(c.content);
  std::sort(h.begin(), h.end());
  return h;
}

}  // namespace

TEST_CASE("enumerate small sizes") {
  CHECK(enumerate_partitions(0) == std::vector<Partition>{Partition()});
  CHECK(enumerate_partitions(2) == std::vector<Partition>{Partition(), Partition{1}, Partition{2}, Partition{1, 1}});
}

TEST_CASE("partition counts agree with the counting recurrence") {
  const auto p = partition_counts(12);
  long total = 0;
  for (int n = 0; n <= 12; ++n) {
    CHECK(static_cast<long>(partitions_of(n).size()) == p[static_cast<std::size_t>(n)]);
    total += p[static_cast<std::size_t>(n)];
    if (n == 8) {
      CHECK(total == 67);
      CHECK(enumerate_partitions(8).size() == 67);
    }
  }
}

TEST_CASE("enumeration is sorted and without repeats") {
  const auto all = enumerate_partitions(9);
  CHECK(std::is_sorted(all.begin(), all.end()));
  CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
  for (std::size_t i = 0; i < all.size(); ++i) CHECK(partitions_of(all[i].size())[partition_index(all[i])] == all[i]);
}

TEST_CASE("kappa") {
  CHECK(Partition().kappa() == 0);
  CHECK(Partition{2}.kappa() == 2);
  CHECK(Partition{1, 1}.kappa() == -2);
  CHECK(Partition{3, 1}.kappa() == 4);
}

TEST_CASE("hooks and contents") {
  const auto one = hooks_and_contents(Partition{1});
  REQUIRE(one.size() == 1);
  CHECK(one[0].hook == 1);
  CHECK(one[0].content == 0);
  CHECK(sorted_hooks(Partition{2, 1}) == std::vector<int>{1, 1, 3});
  CHECK(sorted_contents(Partition{2, 1}) == std::vector<int>{-1, 0, 1});
  CHECK(sorted_hooks(Partition{2}) == std::vector<int>{1, 2});
  CHECK(sorted_contents(Partition{2}) == std::vector<int>{0, 1});
}

TEST_CASE("box moves") {
  CHECK(box_moves(Partition(), BoxMove::Add) == std::vector<Partition>{Partition{1}});
  auto added = box_moves(Partition{2, 1}, BoxMove::Add);
  std::sort(added.begin(), added.end());
  std::vector<Partition> expected{Partition{3, 1}, Partition{2, 2}, Partition{2, 1, 1}};
  std::sort(expected.begin(), expected.end());
  CHECK(added == expected);
  CHECK(box_moves(Partition{1}, BoxMove::Remove) == std::vector<Partition>{Partition()});
  CHECK(box_moves(Partition(), BoxMove::Remove).empty());
}

TEST_CASE("transpose invariants") {
  for (const auto& l : enumerate_partitions(10)) {
    const Partition t = l.transpose();
    CHECK(t.transpose() == l);
    CHECK(t.size() == l.size());
    CHECK(t.kappa() == -l.kappa());
    CHECK(sorted_hooks(t) == sorted_hooks(l));
    auto neg = sorted_contents(l);
    for (int& c : neg) c = -c;
    std::sort(neg.begin(), neg.end());
    CHECK(sorted_contents(t) == neg);
    int twice_contents = 0;
    for (const auto& c : hooks_and_contents(l)) twice_contents += 2 * c.content;
    CHECK(twice_contents == l.kappa());
  }
}

TEST_CASE("box moves are inverse to each other") {
  for (const auto& l : enumerate_partitions(7)) {
    for (const auto& up : box_moves(l, BoxMove::Add)) {
      CHECK(up.size() == l.size() + 1);
      CHECK(up.contains(l));
      const auto down = box_moves(up, BoxMove::Remove);
      CHECK(std::find(down.begin(), down.end(), l) != down.end());
    }
  }
}

TEST_CASE("character degrees match the hook length formula") {
  for (int n = 1; n <= 8; ++n) {
    long long fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    Partition identity(std::vector<int>(static_cast<std::size_t>(n), 1));
    for (const auto& l : partitions_of(n)) {
      long long prod = 1;
      for (const auto& c : hooks_and_contents(l)) prod *= c.hook;
      CHECK(character(l, identity) == fact / prod);
    }
  }
}

TEST_CASE("character orthogonality") {
  for (int n = 1; n <= 7; ++n) {
    const auto& ps = partitions_of(n);
    long long fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    for (const auto& l : ps)
      for (const auto& m : ps) {
        // sum over classes of chi^l chi^m |class| = n! delta
        long long s = 0;
        for (const auto& rho : ps) s += character(l, rho) * character(m, rho) * (fact / z_lambda(rho));
        CHECK(s == (l == m ? fact : 0));
      }
    // column orthogonality
    for (const auto& a : ps)
      for (const auto& b : ps) {
        long long s = 0;
        for (const auto& l : ps) s += character(l, a) * character(l, b);
        CHECK(s == (a == b ? z_lambda(a) : 0));
      }
  }
}

TEST_CASE("invalid partitions are rejected") {
  CHECK_THROWS(Partition{1, 2});
  CHECK_THROWS(Partition{2, 0});
  CHECK_THROWS(Partition(std::vector<int>{-1}));
}
