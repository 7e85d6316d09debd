#include "hiddensums/attack.hpp"

namespace hiddensums {

Gf2Vector Reconstruction::predict_encrypt(const Gf2Vector& v) const {
  Gf2Vector lambda = hidden_sum.coordinates(v) * M + t;
  return hidden_sum.from_coordinates(lambda);
}

Gf2Vector Reconstruction::predict_decrypt(const Gf2Vector& c) const {
  Gf2Vector lambda = (hidden_sum.coordinates(c) + t) * M_inv;
  return hidden_sum.from_coordinates(lambda);
}

Reconstruction mount_attack(const Oracle& oracle, const EmbeddedHiddenSum& hs,
                            AttackVariant variant) {
  const int N = hs.dim();
  const std::uint64_t enc0 = oracle.enc_queries();
  const std::uint64_t dec0 = oracle.dec_queries();

  const Gf2Vector zero = Gf2Vector::zero(N);
  const Gf2Vector t = hs.coordinates(oracle.query_encrypt(zero));
  std::vector<Gf2Vector> rows;
  rows.reserve(N);
  for (int i = 0; i < N; ++i) {
    Gf2Vector vi = Gf2Vector::unit(N, i) * hs.conjugator_inverse();
    rows.push_back(hs.coordinates(oracle.query_encrypt(vi)) + t);
  }
  Gf2Matrix M = Gf2Matrix::from_rows(rows);

  Gf2Matrix M_inv(N, N);
  std::uint64_t row_ops = 0;
  if (variant == AttackVariant::cpa) {
    try {
      M_inv = inverse_counting(M, &row_ops);
    } catch (const SingularMatrix&) {
      throw SingularReconstruction("derived rows are dependent: oracle is not affine for this sum");
    }
  } else {
    const Gf2Vector t_dec = hs.coordinates(oracle.query_decrypt(zero));
    std::vector<Gf2Vector> inv_rows;
    inv_rows.reserve(N);
    for (int i = 0; i < N; ++i) {
      Gf2Vector vi = Gf2Vector::unit(N, i) * hs.conjugator_inverse();
      inv_rows.push_back(hs.coordinates(oracle.query_decrypt(vi)) + t_dec);
      ++row_ops;
    }
    M_inv = Gf2Matrix::from_rows(inv_rows);
    if (!(M * M_inv).is_identity())
      throw SingularReconstruction("decryption rows do not invert M: oracle not affine for this sum");
  }

  return Reconstruction{hs,
                        std::move(M),
                        std::move(M_inv),
                        t,
                        variant,
                        oracle.enc_queries() - enc0,
                        oracle.dec_queries() - dec0,
                        row_ops};
}

DeductionReport verify_global_deduction(const Oracle& oracle, const Reconstruction& r) {
  const int N = r.hidden_sum.dim();
  if (N > 16) throw DimensionMismatch("exhaustive verification capped at N = 16");
  DeductionReport rep;
  rep.attack_enc_queries = r.enc_queries;
  rep.attack_dec_queries = r.dec_queries;
  for (word_t w = 0; w < (word_t{1} << N); ++w) {
    Gf2Vector v(N, w);
    Gf2Vector truth = oracle.query_encrypt(v);
    ++rep.verification_queries;
    ++rep.points_checked;
    if (r.predict_encrypt(v) != truth) ++rep.mismatches;
  }
  return rep;
}

DeductionReport verify_global_deduction_sampled(const Oracle& oracle, const Reconstruction& r,
                                                std::uint64_t samples, std::uint64_t seed) {
  const int N = r.hidden_sum.dim();
  std::mt19937_64 rng(seed);
  DeductionReport rep;
  rep.attack_enc_queries = r.enc_queries;
  rep.attack_dec_queries = r.dec_queries;
  for (std::uint64_t i = 0; i < samples; ++i) {
    Gf2Vector v(N, rng() & low_mask(N));
    Gf2Vector truth = oracle.query_encrypt(v);
    ++rep.verification_queries;
    ++rep.points_checked;
    if (r.predict_encrypt(v) != truth) ++rep.mismatches;
  }
  return rep;
}

Oracle make_affine_oracle(const EmbeddedHiddenSum& hs, const Gf2Matrix& M, const Gf2Vector& t) {
  Gf2Matrix M_inv = inverse(M);
  return Oracle(
      [hs, M, t](const Gf2Vector& v) {
        return hs.from_coordinates(hs.coordinates(v) * M + t);
      },
      [hs, M_inv, t](const Gf2Vector& c) {
        return hs.from_coordinates((hs.coordinates(c) + t) * M_inv);
      });
}

Gf2Matrix random_invertible_matrix(int N, std::mt19937_64& rng) {
  while (true) {
    Gf2Matrix m(N, N);
    for (int r = 0; r < N; ++r) m.set_row_bits(r, rng() & low_mask(N));
    if (is_invertible(m)) return m;
  }
}

}  // namespace hiddensums
