#include "ymheat/partitions.hpp"

#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <set>

using namespace ymheat;

namespace {

std::vector<Partition> list(std::initializer_list<Partition> ps) { return ps; }

// Standard Young tableaux counted by removing the largest entry.
std::uint64_t count_syt(const Partition& a) {
  static std::map<std::vector<int>, std::uint64_t> memo;
  if (a.size() <= 1) return 1;
  const std::vector<int> key(a.parts().begin(), a.parts().end());
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  std::uint64_t total = 0;
  for (const Partition& b : remove_box(a)) total += count_syt(b);
  memo[key] = total;
  return total;
}

// All partitions contained in the rectangle rows x cols, by direct recursion.
void contained(int rows, int cols, std::vector<int>& prefix, std::vector<Partition>& out) {
  out.emplace_back(prefix);
  if (static_cast<int>(prefix.size()) == rows) return;
  const int top = prefix.empty() ? cols : prefix.back();
  for (int v = top; v >= 1; --v) {
    prefix.push_back(v);
    contained(rows, cols, prefix, out);
    prefix.pop_back();
  }
}

// Border strips of size r found by scanning skew shapes mu / a cell by cell.
std::set<std::pair<std::vector<int>, int>> brute_strips(const Partition& a, int r) {
  std::vector<Partition> all;
  std::vector<int> prefix;
  contained(a.length() + r, a[0] + r, prefix, all);
  std::set<std::pair<std::vector<int>, int>> out;
  for (const Partition& mu : all) {
    if (mu.size() != a.size() + r) continue;
    std::set<std::pair<int, int>> cells;
    bool inside = true;
    for (int i = 0; i < std::max(mu.length(), a.length()); ++i) {
      if (mu[i] < a[i]) inside = false;
      for (int j = a[i]; j < mu[i]; ++j) cells.insert({i, j});
    }
    if (!inside) continue;
    bool square = false;
    for (auto [i, j] : cells) {
      if (cells.count({i + 1, j}) && cells.count({i, j + 1}) && cells.count({i + 1, j + 1})) {
        square = true;
      }
    }
    if (square) continue;
    std::set<std::pair<int, int>> seen;
    std::function<void(int, int)> flood = [&](int i, int j) {
      if (!cells.count({i, j}) || seen.count({i, j})) return;
      seen.insert({i, j});
      flood(i + 1, j);
      flood(i - 1, j);
      flood(i, j + 1);
      flood(i, j - 1);
    };
    flood(cells.begin()->first, cells.begin()->second);
    if (seen.size() != cells.size()) continue;
    std::set<int> rows;
    for (auto [i, j] : cells) rows.insert(i);
    out.insert({std::vector<int>(mu.parts().begin(), mu.parts().end()),
                static_cast<int>(rows.size()) - 1});
  }
  return out;
}

}  // namespace

TEST_SUITE("partitions") {
  TEST_CASE("enumerate examples") {
    CHECK(enumerate(0) == list({Partition{}}));
    CHECK(enumerate(1) == list({Partition{1}}));
    CHECK(enumerate(4) == list({{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}}));
    CHECK_THROWS_AS(enumerate(-1), DomainError);
  }

  TEST_CASE("enumerate is strictly decreasing and matches partition_count") {
    for (int k = 0; k <= 22; ++k) {
      const auto ps = enumerate(k);
      CHECK(ps.size() == partition_count(k));
      for (std::size_t i = 1; i < ps.size(); ++i) CHECK(ps[i] < ps[i - 1]);
      for (const Partition& p : ps) CHECK(p.size() == k);
    }
    CHECK(partition_count(100) == 190569292ULL);
    CHECK(partition_count(400) == 6727090051741041926ULL);
    CHECK_THROWS_AS(partition_count(401), DomainError);
  }

  TEST_CASE("construction validates parts") {
    CHECK_THROWS(Partition{1, 2});
    CHECK_THROWS(Partition{2, 0});
    CHECK(Partition{2, 1}.to_string() == "(2,1)");
    CHECK(Partition{}.to_string() == "()");
    CHECK(Partition{3, 1}[5] == 0);
  }

  TEST_CASE("total_content examples") {
    CHECK(total_content(Partition{}) == 0);
    CHECK(total_content(Partition{3}) == 3);
    CHECK(total_content(Partition{2, 1}) == 0);
    CHECK(total_content(Partition{1, 1, 1}) == -3);
  }

  TEST_CASE("sym_dim examples and tableau count") {
    CHECK(sym_dim(Partition{1}) == 1);
    CHECK(sym_dim(Partition{2, 1}) == 2);
    CHECK(sym_dim(Partition{2, 2}) == 2);
    CHECK(sym_dim(Partition{3, 2, 1}) == 16);
    for (int k = 1; k <= 10; ++k) {
      for (const Partition& p : enumerate(k)) CHECK(sym_dim(p) == count_syt(p));
    }
  }

  TEST_CASE("hook lengths") {
    const Partition a{3, 1};
    CHECK(hook_length(a, 0, 0) == 4);
    CHECK(hook_length(a, 0, 1) == 2);
    CHECK(hook_length(a, 0, 2) == 1);
    CHECK(hook_length(a, 1, 0) == 1);
  }

  TEST_CASE("add_box and remove_box examples") {
    CHECK(add_box(Partition{}) == list({{1}}));
    CHECK(add_box(Partition{1}) == list({{2}, {1, 1}}));
    CHECK(add_box(Partition{2, 1}) == list({{3, 1}, {2, 2}, {2, 1, 1}}));
    CHECK(remove_box(Partition{}).empty());
    CHECK(remove_box(Partition{1}) == list({Partition{}}));
    CHECK(remove_box(Partition{2, 1}) == list({{1, 1}, {2}}));
  }

  TEST_CASE("add_box and remove_box are inverse relations") {
    for (int k = 0; k <= 8; ++k) {
      for (const Partition& a : enumerate(k)) {
        for (const Partition& b : add_box(a)) {
          const auto back = remove_box(b);
          CHECK(std::find(back.begin(), back.end(), a) != back.end());
        }
      }
    }
  }

  TEST_CASE("sim_partitions examples") {
    CHECK(sim_partitions(Partition{}).empty());
    CHECK(sim_partitions(Partition{1}).empty());
    CHECK(sim_partitions(Partition{2}) == list({{1, 1}}));
    CHECK(sim_partitions(Partition{2, 1}) == list({{3}, {1, 1, 1}}));
  }

  TEST_CASE("sim_partitions matches an add-then-remove scan") {
    for (int k = 0; k <= 7; ++k) {
      for (const Partition& a : enumerate(k)) {
        std::set<Partition> expect;
        for (const Partition& up : add_box(a)) {
          for (const Partition& down : remove_box(up)) {
            if (!(down == a)) expect.insert(down);
          }
        }
        auto got = sim_partitions(a);
        CHECK(std::is_sorted(got.rbegin(), got.rend()));
        CHECK(std::set<Partition>(got.begin(), got.end()) == expect);
        CHECK(got.size() == expect.size());
      }
    }
  }

  TEST_CASE("border_strips examples") {
    using S = std::vector<BorderStripStep>;
    CHECK(border_strips(Partition{}, 1) == S{{Partition{1}, 0}});
    CHECK(border_strips(Partition{}, 2) == S{{Partition{2}, 0}, {Partition{1, 1}, 1}});
    CHECK(border_strips(Partition{1}, 2) == S{{Partition{3}, 0}, {Partition{1, 1, 1}, 1}});
    CHECK_THROWS_AS(border_strips(Partition{1}, 0), DomainError);
  }

  TEST_CASE("border_strips match a brute-force skew scan") {
    for (int k = 0; k <= 6; ++k) {
      for (const Partition& a : enumerate(k)) {
        for (int r = 1; r <= 4; ++r) {
          std::set<std::pair<std::vector<int>, int>> got;
          const auto strips = border_strips(a, r);
          for (const auto& s : strips) {
            got.insert({std::vector<int>(s.target.parts().begin(), s.target.parts().end()),
                        s.height});
          }
          CHECK(got.size() == strips.size());
          CHECK(got == brute_strips(a, r));
        }
      }
    }
  }
}
