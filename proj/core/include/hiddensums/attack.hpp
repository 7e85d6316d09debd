#pragma once

#include <cstdint>
#include <functional>
#include <random>

#include "hiddensums/hidden_sum.hpp"

namespace hiddensums {

// Query-counted encryption/decryption interface; attack code goes through
// the counting wrappers only.
class Oracle {
 public:
  using Fn = std::function<Gf2Vector(const Gf2Vector&)>;

  Oracle(Fn encrypt, Fn decrypt = nullptr)
      : encrypt_(std::move(encrypt)), decrypt_(std::move(decrypt)) {}

  Gf2Vector query_encrypt(const Gf2Vector& v) const {
    ++enc_queries_;
    return encrypt_(v);
  }
  Gf2Vector query_decrypt(const Gf2Vector& v) const {
    if (!decrypt_) throw Error("oracle has no decryption access");
    ++dec_queries_;
    return decrypt_(v);
  }
  bool has_decrypt() const { return static_cast<bool>(decrypt_); }
  std::uint64_t enc_queries() const { return enc_queries_; }
  std::uint64_t dec_queries() const { return dec_queries_; }

 private:
  Fn encrypt_, decrypt_;
  mutable std::uint64_t enc_queries_ = 0;
  mutable std::uint64_t dec_queries_ = 0;
};

enum class AttackVariant { cpa, cpa_cca };

// Functional reconstruction of an oracle that is affine for the hidden sum:
// coordinates of the map are [v phi g] = [v g] M + [t].
struct Reconstruction {
  EmbeddedHiddenSum hidden_sum;
  Gf2Matrix M, M_inv;
  Gf2Vector t;  // Algorithm-1 coordinates of 0's image
  AttackVariant variant;
  std::uint64_t enc_queries, dec_queries;  // attack-phase budget
  std::uint64_t binary_row_ops;            // row XORs spent deriving M_inv

  Gf2Vector predict_encrypt(const Gf2Vector& v) const;
  Gf2Vector predict_decrypt(const Gf2Vector& c) const;
};

// N+1 chosen plaintexts (0 and e_i g^-1); the cca variant spends N+1 chosen
// ciphertexts instead of the Gaussian inversion.  Throws
// SingularReconstruction when the derived rows are dependent.
Reconstruction mount_attack(const Oracle& oracle, const EmbeddedHiddenSum& hidden_sum,
                            AttackVariant variant = AttackVariant::cpa);

struct DeductionReport {
  std::uint64_t mismatches = 0;
  std::uint64_t points_checked = 0;
  std::uint64_t attack_enc_queries = 0;
  std::uint64_t attack_dec_queries = 0;
  std::uint64_t verification_queries = 0;
};

// Compares the reconstruction against the oracle on all 2^N points (N <= 16);
// verification queries are tallied separately from the attack budget.
DeductionReport verify_global_deduction(const Oracle& oracle, const Reconstruction& r);

// Same comparison on `samples` seeded random points, for larger N.
DeductionReport verify_global_deduction_sampled(const Oracle& oracle, const Reconstruction& r,
                                                std::uint64_t samples, std::uint64_t seed);

// o-affine demo oracle with secret coordinate matrix M and translation t.
Oracle make_affine_oracle(const EmbeddedHiddenSum& hs, const Gf2Matrix& M, const Gf2Vector& t);
Gf2Matrix random_invertible_matrix(int N, std::mt19937_64& rng);

}  // namespace hiddensums
