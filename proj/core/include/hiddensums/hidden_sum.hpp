#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hiddensums/gf2.hpp"

namespace hiddensums {

// A hidden-sum group in block normal form: every linear part is
//
//     kappa_y = [ I_n  B_y ]
//               [ 0    I_d ]
//
// with B_y determined by the blocks B_{e_1},...,B_{e_n} of the head basis
// vectors.  The blocks are stored as the packed free rows
// (b_2^(1),...,b_n^(1), b_3^(2),...,b_n^(n-1)): row j of B_{e_i} equals row i
// of B_{e_j} and row i of B_{e_i} is zero, so the pairs i<j carry all data.
//
// Invariants enforced at construction:
//   * 1 <= d <= N-2, or d = N (plain translation group, n = 0);
//   * non-degeneracy: no non-empty subset of {B_{e_1},...,B_{e_n}} sums to
//     zero, so the fixed-translation space U is exactly the tail span.
class StandardHiddenSum {
 public:
  StandardHiddenSum(int N, int d, std::vector<word_t> free_rows);
  static StandardHiddenSum translations(int N);  // d = N

  int dim() const { return N_; }
  int head_dim() const { return n_; }       // n
  int tail_dim() const { return d_; }       // d = dim U
  bool is_translations() const { return n_ == 0; }
  const std::vector<word_t>& free_rows() const { return rows_; }

  // Row j of B_{e_i}, as d packed bits (0-based i, j < n).
  word_t block_row(int i, int j) const;
  Gf2Matrix block(int i) const;  // B_{e_i}, n x d

  // kappa for the group element sending 0 to a; only the head bits of a
  // matter since tail basis vectors have identity linear part.
  Gf2Matrix kappa(const Gf2Vector& a) const;
  Gf2Matrix kappa_head(word_t head_mask) const;

  Gf2Vector circ(const Gf2Vector& x, const Gf2Vector& y) const;          // x o y
  Gf2Vector ring_product(const Gf2Vector& x, const Gf2Vector& y) const;  // x*kappa_y + x

  // Coordinates of v in the o-basis e_1,...,e_N: copy the head, cancel it
  // with the basis translations, read the tail.
  Gf2Vector coordinates(const Gf2Vector& v) const;
  // Inverse reconstruction 0 tau_{e_1}^{l_1} ... tau_{e_N}^{l_N}.
  Gf2Vector from_coordinates(const Gf2Vector& lambda) const;

  std::vector<Gf2Vector> u_basis() const;  // canonical tail basis
  std::vector<AffineMap> basis_translations() const;  // tau_{e_1},...,tau_{e_N}

  friend bool operator==(const StandardHiddenSum&, const StandardHiddenSum&) = default;

 private:
  int N_, n_, d_;
  std::vector<word_t> rows_;  // n(n-1)/2 entries, pair (i,j) i<j row-major

  int pair_index(int i, int j) const { return i * (2 * n_ - i - 1) / 2 + (j - i - 1); }
};

// True when no non-empty subset of the blocks sums to zero (checked by
// Gray-code subset sums for small n, by rank for large n).
bool blocks_nondegenerate(int n, int d, const std::vector<word_t>& free_rows);

// A hidden-sum group T given by a standard form and an invertible g with
// g^-1 T g = std, equivalently U(T)g = span{e_{n+1},...,e_N}.
class EmbeddedHiddenSum {
 public:
  EmbeddedHiddenSum(StandardHiddenSum std_form, Gf2Matrix g);
  static EmbeddedHiddenSum plain(StandardHiddenSum std_form);  // g = I

  int dim() const { return std_.dim(); }
  const StandardHiddenSum& standard_form() const { return std_; }
  const Gf2Matrix& conjugator() const { return g_; }
  const Gf2Matrix& conjugator_inverse() const { return g_inv_; }

  // kappa/tau of the element of T sending 0 to a: g kappa^std_{ag} g^-1.
  Gf2Matrix kappa(const Gf2Vector& a) const;
  AffineMap tau(const Gf2Vector& a) const;

  Gf2Vector circ(const Gf2Vector& x, const Gf2Vector& y) const;

  // Algorithm-1 coordinates of v with respect to the basis v_i = e_i g^-1.
  Gf2Vector coordinates(const Gf2Vector& v) const { return std_.coordinates(v * g_); }
  Gf2Vector from_coordinates(const Gf2Vector& lambda) const {
    return std_.from_coordinates(lambda) * g_inv_;
  }

  std::vector<Gf2Vector> u_basis() const;

 private:
  StandardHiddenSum std_;
  Gf2Matrix g_, g_inv_;
};

// Candidate group given by N affine generators; no validity assumed.
struct GeneratedGroup {
  int N = 0;
  std::vector<AffineMap> generators;
};

GeneratedGroup conjugate(const GeneratedGroup& t, const Gf2Matrix& g);

// Direct product acting on the concatenated coordinates.
GeneratedGroup product_group(const GeneratedGroup& a, const GeneratedGroup& b);

// An elementary abelian regular subgroup with its full closure materialized:
// kappa_a indexed by the packed offset a.  Immutable once built.
class ValidatedGroup {
 public:
  int dim() const { return N_; }
  std::size_t order() const { return kappa_.size(); }
  const std::vector<AffineMap>& generators() const { return generators_; }

  const Gf2Matrix& kappa(const Gf2Vector& a) const { return kappa_[a.bits()]; }
  AffineMap tau(const Gf2Vector& a) const { return AffineMap{kappa(a), a}; }

  Gf2Vector circ(const Gf2Vector& x, const Gf2Vector& y) const { return x * kappa(y) + y; }
  Gf2Vector ring_product(const Gf2Vector& x, const Gf2Vector& y) const {
    return x * kappa(y) + x;
  }

  // Basis of U(T) = {a : kappa_a = 1}.
  std::vector<Gf2Vector> u_basis() const;

  // Whether the plain translation group normalizes T: the triple products
  // over a basis all vanish, equivalently e_i . e_j lies in U(T) for all i,j.
  bool normalized_by_translations() const;

  // Basis of {v : x.v in U(T) for all x}, the translations sigma_v that are
  // affine for the hidden sum; a weak-key set when T itself is not normalized.
  std::vector<Gf2Vector> weak_key_basis() const;

 private:
  friend struct ValidationAccess;
  int N_ = 0;
  std::vector<AffineMap> generators_;
  std::vector<Gf2Matrix> kappa_;  // index = packed offset
};

struct ValidationResult {
  std::optional<ValidatedGroup> group;
  std::string failure;  // first violated property when !group
  bool ok() const { return group.has_value(); }
};

// Exhaustive closure check (N <= 16): generators pairwise commuting and
// involutive, closure of size exactly 2^N, transitive on V.  Throws
// ClosureOverflow past 2^(N+2) elements.
ValidationResult validate(const GeneratedGroup& t);
bool is_elementary_abelian_regular(const GeneratedGroup& t, std::string* reason = nullptr);

bool normalized_by_translations(const StandardHiddenSum&);  // true by construction
bool normalized_by_translations(const GeneratedGroup&);     // validates, then checks

// Result of triangularizing a validated group: g^-1 T g is upper
// unitriangular with U mapped onto the canonical tail span.  The block
// normal form is present exactly when T is normalized by the plain
// translations.
struct Standardization {
  Gf2Matrix g;
  std::vector<AffineMap> triangular_generators;  // tau_{e_i} of g^-1 T g
  std::optional<StandardHiddenSum> block_form;
};

// Deterministic construction: at each stage extend the basis by the common
// fixed space of the linear parts on the current quotient, picking kernel
// vectors in increasing packed-word order.  Never fails on valid input.
Standardization standardize(const ValidatedGroup& t);

// Standardize and require the block normal form; throws NotNormalized.
EmbeddedHiddenSum to_embedded(const ValidatedGroup& t);

// Nil-algebra group from the degree-3 exterior product on coordinates
// 1..7 (e1^e2 = e4, e1^e3 = e5, e2^e3 = e6, e1^e2^e3 = e7) extended by a
// trivial product on the remaining coordinates; N >= 7.
GeneratedGroup build_exterior_group(int N);

std::vector<Gf2Vector> weak_keys(const StandardHiddenSum&);  // whole space

// Random standard form with head dimension n; non-degeneracy enforced by
// rejection sampling.
StandardHiddenSum random_standard_hidden_sum(int N, int n, std::mt19937_64& rng);

}  // namespace hiddensums
