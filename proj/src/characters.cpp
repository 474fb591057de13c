#include "tvs/characters.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <set>

#include "tvs/errors.hpp"

namespace tvs {

std::vector<std::pair<Partition, int>> remove_border_strips(const Partition& lambda, int k) {
  // beta-numbers: lambda_i + (len - 1 - i); removing a k-strip moves one bead down by k
  const int len = lambda.length();
  std::vector<int> beta(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = lambda[i] + (len - 1 - i);
  const std::set<int> occupied(beta.begin(), beta.end());
  std::vector<std::pair<Partition, int>> out;
  for (int b : beta) {
    const int target = b - k;
    if (target < 0 || occupied.count(target)) continue;
    int height = 0;
    for (int c : beta)
      if (c > target && c < b) ++height;
    std::vector<int> nb;
    for (int c : beta)
      if (c != b) nb.push_back(c);
    nb.push_back(target);
    std::sort(nb.begin(), nb.end(), std::greater<>());
    std::vector<int> parts;
    for (int i = 0; i < len; ++i) {
      const int p = nb[static_cast<std::size_t>(i)] - (len - 1 - i);
      if (p > 0) parts.push_back(p);
    }
    out.emplace_back(Partition(std::move(parts)), height);
  }
  return out;
}

namespace {

struct Table {
  std::vector<std::vector<long long>> rows;  // rows[lambda][mu]
  std::vector<std::vector<long long>> cols;  // cols[mu][lambda]
};

std::mutex table_mutex;
std::vector<std::unique_ptr<Table>> tables;

const Table& table_for(int n) {
  std::lock_guard lock(table_mutex);
  while (tables.size() <= static_cast<std::size_t>(n)) {
    const int m = static_cast<int>(tables.size());
    const auto& ps = partitions_of(m);
    auto tab = std::make_unique<Table>();
    tab->rows.assign(ps.size(), std::vector<long long>(ps.size(), 0));
    for (std::size_t li = 0; li < ps.size(); ++li) {
      for (std::size_t mi = 0; mi < ps.size(); ++mi) {
        const Partition& mu = ps[mi];
        if (m == 0) {
          tab->rows[li][mi] = 1;
          continue;
        }
        const int k = mu[0];
        const Partition rest(std::vector<int>(mu.parts().begin() + 1, mu.parts().end()));
        const Table& smaller = *tables[static_cast<std::size_t>(m - k)];
        const std::size_t ri = partition_index(rest);
        long long v = 0;
        for (const auto& [shape, height] : remove_border_strips(ps[li], k)) {
          const long long c = smaller.rows[partition_index(shape)][ri];
          v += (height % 2 ? -c : c);
        }
        tab->rows[li][mi] = v;
      }
    }
    tab->cols.assign(ps.size(), std::vector<long long>(ps.size(), 0));
    for (std::size_t li = 0; li < ps.size(); ++li)
      for (std::size_t mi = 0; mi < ps.size(); ++mi) tab->cols[mi][li] = tab->rows[li][mi];
    tables.push_back(std::move(tab));
  }
  return *tables[static_cast<std::size_t>(n)];
}

}  // namespace

long long character(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) throw InvalidInput("character: sizes differ");
  return table_for(lambda.size()).rows[partition_index(lambda)][partition_index(mu)];
}

const std::vector<long long>& character_row(const Partition& lambda) {
  return table_for(lambda.size()).rows[partition_index(lambda)];
}

const std::vector<long long>& character_column(const Partition& mu) {
  return table_for(mu.size()).cols[partition_index(mu)];
}

}  // namespace tvs
