#include "ymheat/partitions.hpp"

#include <algorithm>

namespace ymheat {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) {
      throw std::invalid_argument("partition parts must be positive");
    }
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    size_ += parts_[i];
  }
}

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

std::string Partition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(parts_[i]);
  }
  out += ')';
  return out;
}

namespace {

void enumerate_into(int remaining, int max_part, std::vector<int>& prefix,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    enumerate_into(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

std::vector<int> with_part(const Partition& a, int row, int delta) {
  std::vector<int> parts(a.parts().begin(), a.parts().end());
  if (row == a.length()) {
    parts.push_back(delta);
  } else {
    parts[static_cast<std::size_t>(row)] += delta;
  }
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return parts;
}

}  // namespace

std::vector<Partition> enumerate(int k) {
  if (k < 0) throw DomainError("enumerate: k must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> prefix;
  enumerate_into(k, k, prefix, out);
  return out;
}

std::uint64_t partition_count(int k) {
  if (k < 0) return 0;
  if (k > 400) throw DomainError("partition_count: k too large for 64 bits");
  std::vector<std::int64_t> p(static_cast<std::size_t>(k) + 1, 0);
  p[0] = 1;
  for (int n = 1; n <= k; ++n) {
    std::int64_t acc = 0;
    for (int j = 1;; ++j) {
      const int g1 = j * (3 * j - 1) / 2;
      const int g2 = j * (3 * j + 1) / 2;
      if (g1 > n) break;
      const std::int64_t sign = (j % 2 == 1) ? 1 : -1;
      acc += sign * p[static_cast<std::size_t>(n - g1)];
      if (g2 <= n) acc += sign * p[static_cast<std::size_t>(n - g2)];
    }
    p[static_cast<std::size_t>(n)] = acc;
  }
  return static_cast<std::uint64_t>(p[static_cast<std::size_t>(k)]);
}

long total_content(const Partition& a) {
  long k = 0;
  for (int i = 0; i < a.length(); ++i) {
    const long len = a[i];
    k += len * (len - 1) / 2 - static_cast<long>(i) * len;
  }
  return k;
}

int hook_length(const Partition& a, int i, int j) {
  int leg = 0;
  for (int r = i + 1; r < a.length() && a[r] > j; ++r) ++leg;
  return (a[i] - j - 1) + leg + 1;
}

BigInt sym_dim(const Partition& a) {
  BigInt hooks = 1;
  for (int i = 0; i < a.length(); ++i) {
    for (int j = 0; j < a[i]; ++j) hooks *= hook_length(a, i, j);
  }
  return factorial(a.size()) / hooks;
}

std::vector<Partition> add_box(const Partition& a) {
  std::vector<Partition> out;
  for (int i = 0; i <= a.length(); ++i) {
    if (i == 0 || a[i - 1] > a[i]) out.emplace_back(with_part(a, i, 1));
  }
  return out;
}

std::vector<Partition> remove_box(const Partition& a) {
  std::vector<Partition> out;
  for (int i = 0; i < a.length(); ++i) {
    if (a[i] > a[i + 1]) out.emplace_back(with_part(a, i, -1));
  }
  return out;
}

std::vector<Partition> sim_partitions(const Partition& a) {
  std::vector<Partition> out;
  for (const Partition& up : add_box(a)) {
    for (const Partition& down : remove_box(up)) {
      if (down != a) out.push_back(down);
    }
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<BorderStripStep> border_strips(const Partition& a, int r) {
  if (r < 1) throw DomainError("border_strips: r must be positive");
  std::vector<BorderStripStep> out;
  const int len = a.length();
  // Rows are 0-based; the strip occupies rows top..bottom.
  for (int top = 0; top <= len; ++top) {
    for (int bottom = top; bottom - top < r && bottom <= len + r - 1; ++bottom) {
      const int first = r + a[bottom] - (bottom - top);
      if (first < a[top] + 1) continue;
      if (top > 0 && first > a[top - 1]) continue;
      std::vector<int> parts(static_cast<std::size_t>(std::max(len, bottom + 1)), 0);
      for (int i = 0; i < len; ++i) parts[static_cast<std::size_t>(i)] = a[i];
      parts[static_cast<std::size_t>(top)] = first;
      for (int i = top + 1; i <= bottom; ++i) {
        parts[static_cast<std::size_t>(i)] = a[i - 1] + 1;
      }
      out.push_back({Partition(std::move(parts)), bottom - top});
    }
  }
  return out;
}

}  // namespace ymheat
