#include "hiddensums/reference_tables.hpp"

#include <stdexcept>

#include "hiddensums/serialization.hpp"

namespace hiddensums {

const std::vector<ReferenceClass>& reference_classification(int N) {
  static const std::vector<ReferenceClass> n3 = {{1, 3}, {7, 1}};
  static const std::vector<ReferenceClass> n4 = {{1, 4}, {105, 2}};
  static const std::vector<ReferenceClass> n5 = {{1, 5}, {1085, 3}, {6510, 2}, {868, 1}};
  // listed in the classifier's canonical order: dim U descending, size
  // ascending inside a stratum
  static const std::vector<ReferenceClass> n6 = {{1, 6},      {9765, 4},   {234360, 3},
                                                 {410130, 3}, {54684, 2},  {218736, 2},
                                                 {820260, 2}, {1093680, 2}};
  switch (N) {
    case 3: return n3;
    case 4: return n4;
    case 5: return n5;
    case 6: return n6;
    default: throw std::invalid_argument("reference classification covers 3 <= N <= 6");
  }
}

namespace {

using Rows = std::vector<std::string>;

// One generator: linear part as row strings plus the translation e_{offset}.
AffineMap gen(const Rows& rows, int offset_index) {
  Gf2Matrix lin = parse_matrix(rows);
  return AffineMap{lin, Gf2Vector::unit(lin.cols(), offset_index)};
}

AffineMap sigma(int N, int offset_index) {
  return AffineMap{Gf2Matrix::identity(N), Gf2Vector::unit(N, offset_index)};
}

GeneratedGroup translations(int N) {
  GeneratedGroup t{N, {}};
  for (int i = 0; i < N; ++i) t.generators.push_back(sigma(N, i));
  return t;
}

}  // namespace

std::vector<GeneratedGroup> reference_representatives(int N) {
  std::vector<GeneratedGroup> reps;
  reps.push_back(translations(N));
  switch (N) {
    case 3:
      reps.push_back({3,
                      {gen({"100", "011", "001"}, 0),  //
                       gen({"101", "010", "001"}, 1),  //
                       sigma(3, 2)}});
      break;
    case 4:
      reps.push_back({4,
                      {gen({"1000", "0110", "0010", "0001"}, 0),
                       gen({"1010", "0100", "0010", "0001"}, 1),  //
                       sigma(4, 2), sigma(4, 3)}});
      break;
    case 5:
      reps.push_back({5,
                      {gen({"10000", "01101", "00100", "00010", "00001"}, 0),
                       gen({"10101", "01000", "00100", "00010", "00001"}, 1),  //
                       sigma(5, 2), sigma(5, 3), sigma(5, 4)}});
      reps.push_back({5,
                      {gen({"10000", "01011", "00111", "00010", "00001"}, 0),
                       gen({"10011", "01000", "00110", "00010", "00001"}, 1),
                       gen({"10011", "01010", "00100", "00010", "00001"}, 2),  //
                       sigma(5, 3), sigma(5, 4)}});
      reps.push_back({5,
                      {gen({"10000", "01000", "00100", "00011", "00001"}, 0),
                       gen({"10000", "01000", "00101", "00011", "00001"}, 1),
                       gen({"10000", "01001", "00100", "00010", "00001"}, 2),
                       gen({"10001", "01001", "00100", "00010", "00001"}, 3),  //
                       sigma(5, 4)}});
      break;
    case 6:
      reps.push_back({6,
                      {gen({"100000", "011010", "001000", "000100", "000010", "000001"}, 0),
                       gen({"101010", "010000", "001000", "000100", "000010", "000001"}, 1),
                       sigma(6, 2), sigma(6, 3), sigma(6, 4), sigma(6, 5)}});
      reps.push_back({6,
                      {gen({"100000", "010110", "001011", "000100", "000010", "000001"}, 0),
                       gen({"100110", "010000", "001010", "000100", "000010", "000001"}, 1),
                       gen({"100011", "010010", "001000", "000100", "000010", "000001"}, 2),
                       sigma(6, 3), sigma(6, 4), sigma(6, 5)}});
      reps.push_back({6,
                      {gen({"100000", "010110", "001011", "000100", "000010", "000001"}, 0),
                       gen({"100110", "010000", "001011", "000100", "000010", "000001"}, 1),
                       gen({"100011", "010011", "001000", "000100", "000010", "000001"}, 2),
                       sigma(6, 3), sigma(6, 4), sigma(6, 5)}});
      reps.push_back({6,
                      {gen({"100000", "010001", "001000", "000111", "000010", "000001"}, 0),
                       gen({"100001", "010000", "001011", "000111", "000010", "000001"}, 1),
                       gen({"100000", "010011", "001000", "000100", "000010", "000001"}, 2),
                       gen({"100011", "010011", "001000", "000100", "000010", "000001"}, 3),
                       sigma(6, 4), sigma(6, 5)}});
      reps.push_back({6,
                      {gen({"100000", "010001", "001000", "000111", "000010", "000001"}, 0),
                       gen({"100001", "010000", "001011", "000111", "000010", "000001"}, 1),
                       gen({"100000", "010011", "001000", "000110", "000010", "000001"}, 2),
                       gen({"100011", "010011", "001010", "000100", "000010", "000001"}, 3),
                       sigma(6, 4), sigma(6, 5)}});
      reps.push_back({6,
                      {gen({"100000", "010000", "001011", "000100", "000010", "000001"}, 0),
                       gen({"100000", "010000", "001011", "000111", "000010", "000001"}, 1),
                       gen({"100011", "010011", "001000", "000100", "000010", "000001"}, 2),
                       gen({"100000", "010011", "001000", "000100", "000010", "000001"}, 3),
                       sigma(6, 4), sigma(6, 5)}});
      reps.push_back({6,
                      {gen({"100000", "010001", "001000", "000111", "000010", "000001"}, 0),
                       gen({"100001", "010000", "001011", "000111", "000010", "000001"}, 1),
                       gen({"100000", "010011", "001000", "000111", "000010", "000001"}, 2),
                       gen({"100011", "010011", "001011", "000100", "000010", "000001"}, 3),
                       sigma(6, 4), sigma(6, 5)}});
      break;
    default:
      throw std::invalid_argument("representatives available for 3 <= N <= 6");
  }
  return reps;
}

}  // namespace hiddensums
