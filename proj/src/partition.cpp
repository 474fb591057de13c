#include "tvs/partition.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include "tvs/errors.hpp"

namespace tvs {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw InvalidInput("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw InvalidInput("partition parts must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::transpose() const {
  if (parts_.empty()) return {};
  std::vector<int> t(static_cast<std::size_t>(parts_[0]), 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++t[static_cast<std::size_t>(j)];
  return Partition(std::move(t));
}

int Partition::kappa() const {
  int k = 0;
  for (int i = 0; i < length(); ++i) {
    const int li = parts_[static_cast<std::size_t>(i)];
    k += li * (li - 2 * (i + 1) + 1);
  }
  return k;
}

bool Partition::contains(const Partition& mu) const {
  if (mu.length() > length()) return false;
  for (int i = 0; i < mu.length(); ++i)
    if (mu[i] > (*this)[i]) return false;
  return true;
}

Partition Partition::merged(const Partition& o) const {
  if (o.empty()) return *this;
  if (empty()) return o;
  std::vector<int> p;
  p.reserve(parts_.size() + o.parts_.size());
  std::merge(parts_.begin(), parts_.end(), o.parts_.begin(), o.parts_.end(), std::back_inserter(p),
             std::greater<>());
  Partition r;
  r.parts_ = std::move(p);
  r.size_ = size_ + o.size_;
  return r;
}

Partition Partition::scaled(int k) const {
  Partition r = *this;
  for (auto& p : r.parts_) p *= k;
  r.size_ *= k;
  return r;
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << "]";
  return os.str();
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
  if (auto c = a.size_ <=> b.size_; c != 0) return c;
  // reverse lexicographic: larger leading parts first
  return b.parts_ <=> a.parts_;
}

std::vector<Cell> hooks_and_contents(const Partition& lambda) {
  const Partition t = lambda.transpose();
  std::vector<Cell> cells;
  cells.reserve(static_cast<std::size_t>(lambda.size()));
  for (int i = 1; i <= lambda.length(); ++i)
    for (int j = 1; j <= lambda[i - 1]; ++j)
      cells.push_back({i, j, lambda[i - 1] - j + t[j - 1] - i + 1, j - i});
  return cells;
}

namespace {

void generate(int n, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int k = std::min(n, max_part); k >= 1; --k) {
    cur.push_back(k);
    generate(n - k, k, cur, out);
    cur.pop_back();
  }
}

}  // namespace

const std::vector<Partition>& partitions_of(int n) {
  static std::mutex mu;
  static std::vector<std::unique_ptr<std::vector<Partition>>> table;
  if (n < 0) throw InvalidInput("negative partition size");
  std::lock_guard lock(mu);
  while (table.size() <= static_cast<std::size_t>(n)) {
    auto list = std::make_unique<std::vector<Partition>>();
    std::vector<int> cur;
    generate(static_cast<int>(table.size()), static_cast<int>(table.size()), cur, *list);
    table.push_back(std::move(list));
  }
  return *table[static_cast<std::size_t>(n)];
}

std::vector<Partition> enumerate_partitions(int max_size) {
  if (max_size < 0) throw InvalidInput("maxSize must be non-negative");
  std::vector<Partition> out;
  for (int n = 0; n <= max_size; ++n) {
    const auto& ps = partitions_of(n);
    out.insert(out.end(), ps.begin(), ps.end());
  }
  return out;
}

std::size_t partition_index(const Partition& lambda) {
  const auto& ps = partitions_of(lambda.size());
  auto it = std::lower_bound(ps.begin(), ps.end(), lambda);
  return static_cast<std::size_t>(it - ps.begin());
}

std::vector<Partition> box_moves(const Partition& lambda, BoxMove dir) {
  std::vector<Partition> out;
  const auto& p = lambda.parts();
  const int len = lambda.length();
  if (dir == BoxMove::Add) {
    for (int i = 0; i <= len; ++i) {
      if (i > 0 && lambda[i] + 1 > lambda[i - 1]) continue;
      std::vector<int> q = p;
      if (i == len)
        q.push_back(1);
      else
        ++q[static_cast<std::size_t>(i)];
      out.emplace_back(std::move(q));
    }
  } else {
    for (int i = 0; i < len; ++i) {
      if (lambda[i] - 1 < lambda[i + 1]) continue;
      std::vector<int> q = p;
      if (--q[static_cast<std::size_t>(i)] == 0) q.pop_back();
      out.emplace_back(std::move(q));
    }
  }
  return out;
}

long long z_lambda(const Partition& lambda) {
  long long z = 1;
  const auto& p = lambda.parts();
  std::size_t i = 0;
  while (i < p.size()) {
    std::size_t j = i;
    while (j < p.size() && p[j] == p[i]) ++j;
    const long long m = static_cast<long long>(j - i);
    for (long long r = 1; r <= m; ++r) z *= p[i] * r;
    i = j;
  }
  return z;
}

}  // namespace tvs
