#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "hiddensums/hidden_sum.hpp"

namespace hiddensums {

inline constexpr int kVarietyFreeBitBudget = 40;
inline constexpr std::uint64_t kDefaultEmbeddedCap = std::uint64_t{1} << 22;

// Visits every standard-form group with head dimension n and tail dimension
// d: all assignments of the d*n(n-1)/2 free block bits, in lexicographic
// order, that leave no subset of blocks summing to zero.  Throws
// BudgetExceeded past the free-bit budget.
void for_each_variety(int n, int d, const std::function<void(const StandardHiddenSum&)>& fn);
std::vector<StandardHiddenSum> enumerate_variety(int n, int d);

// |enumerate_variety(n, d)| without materializing groups; splits the
// assignment range over worker threads.
bigint count_variety(int n, int d);

// 2^(dn(n-1)/2) - 1 - sum_{r=1}^{n-2} C(n,r) (2^d-1)^C(n-r,2), an upper
// bound for count_variety (tight at n = 2).
bigint variety_upper_bound(int n, int d);

// Number of groups with dim U = d on (F2)^N that the plain translations
// normalize: one variety count per tail subspace.
bigint count_total(int N, int d);

// Closed forms for co-dimension 2 and 3 of U.
bigint count_codim2(int N);
bigint count_codim3(int N);

// Visits every group with dim U = d: each tail subspace paired with each
// standard form, subspaces outer (reduced-row-echelon order), free bits
// inner.  Throws CapExceeded when the total exceeds `cap`.
void for_each_embedded(int N, int d, std::uint64_t cap,
                       const std::function<void(const EmbeddedHiddenSum&)>& fn);
std::vector<EmbeddedHiddenSum> enumerate_all(int N, int d,
                                             std::uint64_t cap = kDefaultEmbeddedCap);

struct CountReportRow {
  int N, d, n;
  bigint variety_count, bound, gaussian, total;
};
CountReportRow count_report(int N, int d);

}  // namespace hiddensums
