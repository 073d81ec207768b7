#include <cstdlib>
#include <sstream>

#include "gemkit/pi1.hpp"

namespace gemkit {

namespace {

using Matrix = std::vector<std::vector<std::int64_t>>;

std::int64_t checked_axpy(std::int64_t a, std::int64_t q, std::int64_t b) {
  // a - q * b
  std::int64_t prod = 0, out = 0;
  if (__builtin_mul_overflow(q, b, &prod) || __builtin_sub_overflow(a, prod, &out)) {
    throw GemError(Errc::InternalInconsistency, "integer overflow in Smith normal form");
  }
  return out;
}

// Diagonal of the Smith normal form (absolute values, nonzero entries only).
std::vector<std::int64_t> smith_diagonal(Matrix m, int cols) {
  const int rows = static_cast<int>(m.size());
  std::vector<std::int64_t> diag;
  for (int t = 0; t < rows && t < cols; ++t) {
    while (true) {
      int pr = -1, pc = -1;
      for (int r = t; r < rows; ++r) {
        for (int c = t; c < cols; ++c) {
          if (m[r][c] != 0 && (pr < 0 || std::llabs(m[r][c]) < std::llabs(m[pr][pc]))) {
            pr = r;
            pc = c;
          }
        }
      }
      if (pr < 0) return diag;
      std::swap(m[t], m[pr]);
      for (auto& row : m) std::swap(row[t], row[pc]);

      bool clean = true;
      for (int r = t + 1; r < rows; ++r) {
        const std::int64_t q = m[r][t] / m[t][t];
        if (q != 0) {
          for (int c = t; c < cols; ++c) m[r][c] = checked_axpy(m[r][c], q, m[t][c]);
        }
        clean = clean && m[r][t] == 0;
      }
      for (int c = t + 1; c < cols; ++c) {
        const std::int64_t q = m[t][c] / m[t][t];
        if (q != 0) {
          for (int r = t; r < rows; ++r) m[r][c] = checked_axpy(m[r][c], q, m[r][t]);
        }
        clean = clean && m[t][c] == 0;
      }
      if (!clean) continue;

      // The pivot must divide the rest of the matrix.
      int bad_row = -1;
      for (int r = t + 1; r < rows && bad_row < 0; ++r) {
        for (int c = t + 1; c < cols; ++c) {
          if (m[r][c] % m[t][t] != 0) {
            bad_row = r;
            break;
          }
        }
      }
      if (bad_row < 0) break;
      for (int c = t; c < cols; ++c) m[t][c] = checked_axpy(m[t][c], -1, m[bad_row][c]);
    }
    diag.push_back(std::llabs(m[t][t]));
  }
  return diag;
}

}  // namespace

std::string Abelianization::to_string() const {
  std::ostringstream os;
  os << "Z^" << free_rank;
  for (auto d : divisors) os << " + Z/" << d;
  return os.str();
}

Abelianization abelianization_rank(const GroupPresentation& pres) {
  const auto rels = pres.all_relators();
  Matrix m(rels.size(), std::vector<std::int64_t>(static_cast<std::size_t>(pres.generators), 0));
  for (std::size_t r = 0; r < rels.size(); ++r) {
    for (int x : rels[r]) m[r][static_cast<std::size_t>(std::abs(x) - 1)] += x > 0 ? 1 : -1;
  }
  const auto diag = smith_diagonal(std::move(m), pres.generators);
  Abelianization out;
  out.free_rank = pres.generators - static_cast<int>(diag.size());
  for (auto d : diag) {
    if (d > 1) out.divisors.push_back(d);
  }
  return out;
}

RankBounds rank_bounds(const GroupPresentation& pres) {
  const auto ab = abelianization_rank(pres);
  const auto simplified = tietze_simplify(pres);
  return {ab.free_rank + static_cast<int>(ab.divisors.size()), simplified.generators};
}

}  // namespace gemkit
