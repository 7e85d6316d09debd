#pragma once

#include <cstdint>
#include <vector>

#include "hiddensums/hidden_sum.hpp"

namespace hiddensums {

// Known classification results for 3 <= N <= 6, used as the regression
// contract by the classifier, the CLI exit statuses and the acceptance
// suite.  All machine-checked expectations live here.
struct ReferenceClass {
  std::uint64_t size;
  int dim_u;
};

const std::vector<ReferenceClass>& reference_classification(int N);

// Bundled conjugacy-class representatives, one generator set per class (the
// first entry is always the plain translation group).
std::vector<GeneratedGroup> reference_representatives(int N);

// Query budget of the cipher reconstruction attack: N+1 encryptions, and the
// same number of decryptions in the chosen-ciphertext variant.
inline constexpr int attack_query_budget(int N) { return N + 1; }

}  // namespace hiddensums
