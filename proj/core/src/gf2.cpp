#include "hiddensums/gf2.hpp"

#include <algorithm>

namespace hiddensums {

Gf2Matrix Gf2Matrix::identity(int n) {
  Gf2Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.bits_[i] = word_t{1} << i;
  return m;
}

Gf2Matrix Gf2Matrix::from_rows(const std::vector<Gf2Vector>& rows) {
  if (rows.empty()) throw DimensionMismatch("matrix needs at least one row");
  Gf2Matrix m(static_cast<int>(rows.size()), rows.front().dim());
  for (size_t r = 0; r < rows.size(); ++r) m.set_row(static_cast<int>(r), rows[r]);
  return m;
}

bool Gf2Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    if (bits_[i] != (word_t{1} << i)) return false;
  return true;
}

Gf2Vector operator*(const Gf2Vector& v, const Gf2Matrix& m) {
  if (v.dim() != m.rows()) throw DimensionMismatch("vector/matrix dimension mismatch");
  word_t acc = 0;
  word_t sel = v.bits();
  while (sel) {
    int i = std::countr_zero(sel);
    acc ^= m.row_bits(i);
    sel &= sel - 1;
  }
  return Gf2Vector(m.cols(), acc);
}

Gf2Matrix operator*(const Gf2Matrix& a, const Gf2Matrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matrix product dimension mismatch");
  Gf2Matrix out(a.rows(), b.cols());
  for (int r = 0; r < a.rows(); ++r) {
    word_t acc = 0;
    word_t sel = a.row_bits(r);
    while (sel) {
      int i = std::countr_zero(sel);
      acc ^= b.row_bits(i);
      sel &= sel - 1;
    }
    out.set_row_bits(r, acc);
  }
  return out;
}

Gf2Matrix transpose(const Gf2Matrix& m) {
  Gf2Matrix out(m.cols(), m.rows());
  for (int r = 0; r < m.rows(); ++r) {
    word_t bits = m.row_bits(r);
    while (bits) {
      int c = std::countr_zero(bits);
      out.set(c, r, true);
      bits &= bits - 1;
    }
  }
  return out;
}

int rank(const Gf2Matrix& m) {
  std::vector<word_t> rows(m.rows());
  for (int r = 0; r < m.rows(); ++r) rows[r] = m.row_bits(r);
  int rk = 0;
  for (int c = 0; c < m.cols() && rk < m.rows(); ++c) {
    const word_t bit = word_t{1} << c;
    int pivot = -1;
    for (int r = rk; r < m.rows(); ++r)
      if (rows[r] & bit) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[rk], rows[pivot]);
    for (int r = 0; r < m.rows(); ++r)
      if (r != rk && (rows[r] & bit)) rows[r] ^= rows[rk];
    ++rk;
  }
  return rk;
}

namespace {

std::optional<Gf2Matrix> gauss_jordan(const Gf2Matrix& m, std::uint64_t* row_ops) {
  if (!m.is_square()) throw DimensionMismatch("inverse of a non-square matrix");
  const int n = m.rows();
  std::vector<word_t> a(n), inv(n);
  for (int r = 0; r < n; ++r) {
    a[r] = m.row_bits(r);
    inv[r] = word_t{1} << r;
  }
  for (int c = 0; c < n; ++c) {
    const word_t bit = word_t{1} << c;
    int pivot = -1;
    for (int r = c; r < n; ++r)
      if (a[r] & bit) {
        pivot = r;
        break;
      }
    if (pivot < 0) return std::nullopt;
    std::swap(a[c], a[pivot]);
    std::swap(inv[c], inv[pivot]);
    for (int r = 0; r < n; ++r) {
      if (r == c || !(a[r] & bit)) continue;
      a[r] ^= a[c];
      inv[r] ^= inv[c];
      if (row_ops) *row_ops += 2;
    }
  }
  Gf2Matrix out(n, n);
  for (int r = 0; r < n; ++r) out.set_row_bits(r, inv[r]);
  return out;
}

}  // namespace

std::optional<Gf2Matrix> try_inverse(const Gf2Matrix& m) { return gauss_jordan(m, nullptr); }

Gf2Matrix inverse(const Gf2Matrix& m) {
  auto inv = gauss_jordan(m, nullptr);
  if (!inv) throw SingularMatrix("matrix is singular");
  return *inv;
}

Gf2Matrix inverse_counting(const Gf2Matrix& m, std::uint64_t* row_ops) {
  auto inv = gauss_jordan(m, row_ops);
  if (!inv) throw SingularMatrix("matrix is singular");
  return *inv;
}

bool is_invertible(const Gf2Matrix& m) { return m.is_square() && rank(m) == m.rows(); }

std::vector<Gf2Vector> rref_basis(std::vector<Gf2Vector> vectors) {
  if (vectors.empty()) return {};
  const int dim = vectors.front().dim();
  std::vector<word_t> rows;
  for (const auto& v : vectors) {
    if (v.dim() != dim) throw DimensionMismatch("mixed dimensions in basis reduction");
    rows.push_back(v.bits());
  }
  std::vector<word_t> basis;  // echelon rows, pivot columns increasing
  for (int c = 0; c < dim; ++c) {
    const word_t bit = word_t{1} << c;
    int pivot = -1;
    for (size_t r = 0; r < rows.size(); ++r)
      if (rows[r] & bit) {
        pivot = static_cast<int>(r);
        break;
      }
    if (pivot < 0) continue;
    word_t p = rows[pivot];
    rows.erase(rows.begin() + pivot);
    for (auto& r : rows)
      if (r & bit) r ^= p;
    for (auto& b : basis)
      if (b & bit) b ^= p;
    basis.push_back(p);
  }
  std::vector<Gf2Vector> out;
  out.reserve(basis.size());
  for (word_t b : basis) out.emplace_back(dim, b);
  return out;
}

bool SpanTracker::insert(const Gf2Vector& v) {
  if (v.dim() != dim_) throw DimensionMismatch("span tracker dimension mismatch");
  word_t r = reduce(v.bits());
  if (!r) return false;
  pivot_rows_.push_back(r);
  // keep rows sorted by pivot so reduce() stays one pass
  std::sort(pivot_rows_.begin(), pivot_rows_.end(),
            [](word_t a, word_t b) { return std::countr_zero(a) < std::countr_zero(b); });
  return true;
}

bool SpanTracker::contains(const Gf2Vector& v) const { return reduce(v.bits()) == 0; }

word_t SpanTracker::reduce(word_t v) const {
  for (word_t row : pivot_rows_) {
    if (!v) break;
    if (v & (word_t{1} << std::countr_zero(row))) v ^= row;
  }
  return v;
}

AffineMap compose(const AffineMap& f, const AffineMap& g) {
  return AffineMap{f.linear * g.linear, f.offset * g.linear + g.offset};
}

AffineMap inverse(const AffineMap& f) {
  Gf2Matrix linv = inverse(f.linear);
  return AffineMap{linv, f.offset * linv};
}

bigint gaussian_binomial(int N, int d) {
  if (d < 0 || d > N) throw std::invalid_argument("gaussian binomial needs 0 <= d <= N");
  bigint num = 1, den = 1;
  for (int i = 0; i < d; ++i) {
    num *= (bigint(1) << (N - i)) - 1;
    den *= (bigint(1) << (d - i)) - 1;
  }
  return num / den;
}

void for_each_subspace(int N, int d, const std::function<void(const SubspaceFrame&)>& fn) {
  if (d < 1 || d > N || N > 64) throw std::invalid_argument("subspace enumeration needs 1 <= d <= N <= 64");
  // pivot columns, lexicographically first combination
  std::vector<int> pivots(d);
  for (int i = 0; i < d; ++i) pivots[i] = i;

  while (true) {
    std::vector<bool> is_pivot(N, false);
    for (int p : pivots) is_pivot[p] = true;

    // free positions of the RREF pattern: (row i, col c) with c > pivots[i],
    // c not a pivot; enumerated row-major
    std::vector<std::pair<int, int>> free_pos;
    for (int i = 0; i < d; ++i)
      for (int c = pivots[i] + 1; c < N; ++c)
        if (!is_pivot[c]) free_pos.emplace_back(i, c);
    if (free_pos.size() > 40)
      throw BudgetExceeded("subspace free-entry budget exceeded");

    std::vector<int> complement;
    for (int c = 0; c < N; ++c)
      if (!is_pivot[c]) complement.push_back(c);

    const word_t total = word_t{1} << free_pos.size();
    for (word_t assign = 0; assign < total; ++assign) {
      SubspaceFrame frame;
      std::vector<word_t> rows(d, 0);
      for (int i = 0; i < d; ++i) rows[i] = word_t{1} << pivots[i];
      for (size_t k = 0; k < free_pos.size(); ++k)
        if ((assign >> k) & 1) rows[free_pos[k].first] |= word_t{1} << free_pos[k].second;
      frame.basis.reserve(d);
      for (int i = 0; i < d; ++i) frame.basis.emplace_back(N, rows[i]);

      // h maps e_i onto a full basis (complement first, subspace last);
      // its inverse sends the subspace onto the canonical tail
      Gf2Matrix h(N, N);
      const int n = N - d;
      for (int i = 0; i < n; ++i) h.set_row_bits(i, word_t{1} << complement[i]);
      for (int i = 0; i < d; ++i) h.set_row_bits(n + i, rows[i]);
      frame.to_tail = inverse(h);
      fn(frame);
    }

    // next combination of pivot columns
    int i = d - 1;
    while (i >= 0 && pivots[i] == N - d + i) --i;
    if (i < 0) break;
    ++pivots[i];
    for (int j = i + 1; j < d; ++j) pivots[j] = pivots[j - 1] + 1;
  }
}

std::vector<SubspaceFrame> enumerate_subspaces(int N, int d) {
  std::vector<SubspaceFrame> out;
  for_each_subspace(N, d, [&](const SubspaceFrame& f) { out.push_back(f); });
  return out;
}

}  // namespace hiddensums
