#include "hiddensums/enumerate.hpp"

#include <array>
#include <atomic>
#include <bit>

#include "hiddensums/parallel.hpp"

namespace hiddensums {

namespace {

struct VarietyShape {
  int n, d, pairs, free_bits;
};

VarietyShape checked_shape(int n, int d) {
  if (n < 2 || d < 1) throw std::invalid_argument("variety needs n >= 2, d >= 1");
  VarietyShape s{n, d, n * (n - 1) / 2, d * n * (n - 1) / 2};
  if (s.free_bits > kVarietyFreeBitBudget)
    throw BudgetExceeded("free-bit budget exceeded: d*n*(n-1)/2 > 40");
  return s;
}

// Unpacks one assignment into the free rows and tests non-degeneracy by a
// Gray-code walk over the block subset sums.
bool assignment_rows(const VarietyShape& s, std::uint64_t assign, std::vector<word_t>& rows) {
  const word_t mask = low_mask(s.d);
  for (int p = 0; p < s.pairs; ++p) rows[p] = (assign >> (p * s.d)) & mask;
  return blocks_nondegenerate(s.n, s.d, rows);
}

}  // namespace

void for_each_variety(int n, int d, const std::function<void(const StandardHiddenSum&)>& fn) {
  const VarietyShape s = checked_shape(n, d);
  const std::uint64_t total = std::uint64_t{1} << s.free_bits;
  std::vector<word_t> rows(s.pairs);
  for (std::uint64_t assign = 0; assign < total; ++assign)
    if (assignment_rows(s, assign, rows)) fn(StandardHiddenSum(n + d, d, rows));
}

std::vector<StandardHiddenSum> enumerate_variety(int n, int d) {
  std::vector<StandardHiddenSum> out;
  for_each_variety(n, d, [&](const StandardHiddenSum& t) { out.push_back(t); });
  return out;
}

bigint count_variety(int n, int d) {
  const VarietyShape s = checked_shape(n, d);
  const std::uint64_t total = std::uint64_t{1} << s.free_bits;
  std::atomic<std::uint64_t> count{0};
  parallel_ranges(total, [&](std::uint64_t begin, std::uint64_t end) {
    std::vector<word_t> rows(s.pairs);
    std::uint64_t local = 0;
    for (std::uint64_t a = begin; a < end; ++a)
      if (assignment_rows(s, a, rows)) ++local;
    count += local;
  });
  return bigint(count.load());
}

bigint variety_upper_bound(int n, int d) {
  if (n < 2 || d < 1) throw std::invalid_argument("bound needs n >= 2, d >= 1");
  auto choose = [](int a, int b) {
    bigint r = 1;
    for (int i = 0; i < b; ++i) r = r * (a - i) / (i + 1);
    return r;
  };
  bigint result = (bigint(1) << (d * n * (n - 1) / 2)) - 1;
  const bigint nonzero = (bigint(1) << d) - 1;
  for (int r = 1; r <= n - 2; ++r) {
    bigint term = choose(n, r);
    const int exponent = (n - r) * (n - r - 1) / 2;
    bigint pw = 1;
    for (int i = 0; i < exponent; ++i) pw *= nonzero;
    result -= term * pw;
  }
  return result;
}

bigint count_total(int N, int d) {
  if (!(1 <= d && d <= N - 2)) throw std::invalid_argument("count_total needs 1 <= d <= N-2");
  return gaussian_binomial(N, d) * count_variety(N - d, d);
}

bigint count_codim2(int N) {
  if (N < 4) throw std::invalid_argument("codim-2 count needs N >= 4");
  return gaussian_binomial(N, N - 2) * ((bigint(1) << (N - 2)) - 1);
}

bigint count_codim3(int N) {
  if (N < 4) throw std::invalid_argument("codim-3 count needs N >= 4");
  bigint inner = (bigint(1) << (3 * (N - 3))) - 7 * ((bigint(1) << (N - 3)) - 1) - 1;
  return gaussian_binomial(N, N - 3) * inner;
}

void for_each_embedded(int N, int d, std::uint64_t cap,
                       const std::function<void(const EmbeddedHiddenSum&)>& fn) {
  bigint total = count_total(N, d);
  if (total > cap) throw CapExceeded("embedded enumeration beyond cap; raise it explicitly");
  std::vector<StandardHiddenSum> stds = enumerate_variety(N - d, d);
  for_each_subspace(N, d, [&](const SubspaceFrame& frame) {
    for (const auto& t : stds) fn(EmbeddedHiddenSum(t, frame.to_tail));
  });
}

std::vector<EmbeddedHiddenSum> enumerate_all(int N, int d, std::uint64_t cap) {
  std::vector<EmbeddedHiddenSum> out;
  for_each_embedded(N, d, cap, [&](const EmbeddedHiddenSum& e) { out.push_back(e); });
  return out;
}

CountReportRow count_report(int N, int d) {
  CountReportRow row{N, d, N - d, 0, 0, 0, 0};
  row.variety_count = count_variety(N - d, d);
  row.bound = variety_upper_bound(N - d, d);
  row.gaussian = gaussian_binomial(N, d);
  row.total = row.gaussian * row.variety_count;
  return row;
}

}  // namespace hiddensums
