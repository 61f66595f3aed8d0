#include "srdelta/exact_linalg.hpp"

#include <utility>

namespace srdelta {

int rank_over_q(IntMatrix m) {
  int rank = 0;
  BigInt prev_pivot = 1;
  for (int col = 0; col < m.cols && rank < m.rows; ++col) {
    // Any nonzero pivot works; elimination is exact regardless.
    int pivot_row = -1;
    for (int r = rank; r < m.rows; ++r) {
      if (m.at(r, col) != 0) {
        pivot_row = r;
        break;
      }
    }
    if (pivot_row < 0) continue;
    if (pivot_row != rank)
      for (int c = col; c < m.cols; ++c)
        std::swap(m.at(pivot_row, c), m.at(rank, c));

    const BigInt pivot = m.at(rank, col);
    for (int r = rank + 1; r < m.rows; ++r) {
      const BigInt factor = m.at(r, col);
      for (int c = col + 1; c < m.cols; ++c) {
        BigInt v = m.at(r, c) * pivot - factor * m.at(rank, c);
        v /= prev_pivot;  // exact: Bareiss one-step fraction-free update
        m.at(r, c) = std::move(v);
      }
      m.at(r, col) = 0;
    }
    prev_pivot = pivot;
    ++rank;
  }
  return rank;
}

namespace {

// GF(2) elimination on packed bit rows.
int rank_gf2(int rows, int cols, std::vector<uint64_t> bits, int words) {
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    const int w = col >> 6;
    const uint64_t mask = 1ull << (col & 63);
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (bits[static_cast<size_t>(r) * words + w] & mask) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    for (int k = 0; k < words; ++k)
      std::swap(bits[static_cast<size_t>(pivot) * words + k],
                bits[static_cast<size_t>(rank) * words + k]);
    for (int r = rank + 1; r < rows; ++r) {
      if (bits[static_cast<size_t>(r) * words + w] & mask)
        for (int k = 0; k < words; ++k)
          bits[static_cast<size_t>(r) * words + k] ^=
              bits[static_cast<size_t>(rank) * words + k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

int rank_mod_p(const IntMatrix& m, uint32_t p) {
  if (p == 2) {
    const int words = (m.cols + 63) / 64;
    std::vector<uint64_t> bits(static_cast<size_t>(m.rows) *
                                   std::max(words, 1),
                               0);
    for (int r = 0; r < m.rows; ++r)
      for (int c = 0; c < m.cols; ++c)
        if ((m.at(r, c) & 1) != 0)
          bits[static_cast<size_t>(r) * words + (c >> 6)] |= 1ull << (c & 63);
    return rank_gf2(m.rows, m.cols, std::move(bits), std::max(words, 1));
  }

  const int64_t pp = static_cast<int64_t>(p);
  std::vector<int64_t> a(static_cast<size_t>(m.rows) * m.cols);
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c) {
      BigInt v = m.at(r, c) % pp;
      if (v < 0) v += pp;
      a[static_cast<size_t>(r) * m.cols + c] = static_cast<int64_t>(v);
    }

  auto inv_mod = [pp](int64_t x) {
    // Fermat; p is prime.
    int64_t result = 1, base = x % pp, e = pp - 2;
    while (e > 0) {
      if (e & 1) result = result * base % pp;
      base = base * base % pp;
      e >>= 1;
    }
    return result;
  };

  int rank = 0;
  for (int col = 0; col < m.cols && rank < m.rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < m.rows; ++r) {
      if (a[static_cast<size_t>(r) * m.cols + col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int c = col; c < m.cols; ++c)
        std::swap(a[static_cast<size_t>(pivot) * m.cols + c],
                  a[static_cast<size_t>(rank) * m.cols + c]);
    const int64_t inv = inv_mod(a[static_cast<size_t>(rank) * m.cols + col]);
    for (int r = rank + 1; r < m.rows; ++r) {
      int64_t& lead = a[static_cast<size_t>(r) * m.cols + col];
      if (lead == 0) continue;
      const int64_t factor = lead * inv % pp;
      for (int c = col; c < m.cols; ++c) {
        int64_t& x = a[static_cast<size_t>(r) * m.cols + c];
        x = (x - factor * a[static_cast<size_t>(rank) * m.cols + c]) % pp;
        if (x < 0) x += pp;
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace srdelta
