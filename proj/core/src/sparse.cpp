#include "altschur/sparse.hpp"

namespace altschur {

int64_t dense_rank_modp(std::vector<std::vector<uint64_t>> m, uint64_t p) {
  auto mul = [p](uint64_t a, uint64_t b) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
  };
  auto inv = [&](uint64_t b) {
    uint64_t r = 1, e = p - 2;
    while (e) {
      if (e & 1) r = mul(r, b);
      b = mul(b, b);
      e >>= 1;
    }
    return r;
  };
  size_t nrows = m.size();
  size_t ncols = nrows ? m[0].size() : 0;
  int64_t rank = 0;
  size_t row = 0;
  for (size_t col = 0; col < ncols && row < nrows; ++col) {
    size_t sel = row;
    while (sel < nrows && m[sel][col] % p == 0) ++sel;
    if (sel == nrows) continue;
    std::swap(m[sel], m[row]);
    uint64_t d = inv(m[row][col] % p);
    for (size_t i = row + 1; i < nrows; ++i) {
      uint64_t f = mul(m[i][col] % p, d);
      if (f == 0) continue;
      for (size_t j = col; j < ncols; ++j) {
        uint64_t s = mul(f, m[row][j] % p);
        m[i][j] = (m[i][j] % p + p - s) % p;
      }
    }
    ++row;
    ++rank;
  }
  return rank;
}

}  // namespace altschur
