#include "snfgraph/smith.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace snfgraph {

namespace {

BigInt abs_value(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

// (row_i, row_j) <- (a*row_i + b*row_j, c*row_i + d*row_j)
void combine_rows(IntMatrix& m, std::size_t i, std::size_t j, const BigInt& a,
                  const BigInt& b, const BigInt& c, const BigInt& d) {
  for (std::size_t k = 0; k < m.cols(); ++k) {
    BigInt x = m(i, k);
    BigInt y = m(j, k);
    m(i, k) = a * x + b * y;
    m(j, k) = c * x + d * y;
  }
}

// (col_i, col_j) <- (a*col_i + c*col_j, b*col_i + d*col_j), i.e. M * [[a b] [c d]]
void combine_cols(IntMatrix& m, std::size_t i, std::size_t j, const BigInt& a,
                  const BigInt& b, const BigInt& c, const BigInt& d) {
  for (std::size_t k = 0; k < m.rows(); ++k) {
    BigInt x = m(k, i);
    BigInt y = m(k, j);
    m(k, i) = a * x + c * y;
    m(k, j) = b * x + d * y;
  }
}

class Reducer {
 public:
  Reducer(const IntMatrix& m, bool track)
      : work_(m), track_(track) {
    if (track_) {
      left_ = IntMatrix::identity(m.rows());
      right_ = IntMatrix::identity(m.cols());
    }
  }

  std::vector<BigInt> diagonalize() {
    const std::size_t rank_bound = std::min(work_.rows(), work_.cols());
    std::vector<BigInt> diag(rank_bound);
    for (std::size_t t = 0; t < rank_bound; ++t) {
      if (!move_min_to(t, /*whole_block=*/true)) break;
      while (!clear_cross(t)) move_min_to(t, /*whole_block=*/false);
      if (work_(t, t) < 0) negate_row(t);
      diag[t] = work_(t, t);
    }
    return diag;
  }

  // Pairwise (gcd, lcm) replacement until s_i | s_{i+1}.
  void enforce_chain(std::vector<BigInt>& diag) {
    for (std::size_t i = 0; i < diag.size(); ++i) {
      for (std::size_t j = i + 1; j < diag.size(); ++j) {
        if (diag[j] == 0) continue;
        if (diag[i] == 0) {
          swap_diagonal(i, j);
          std::swap(diag[i], diag[j]);
          continue;
        }
        if (diag[j] % diag[i] == 0) continue;
        BigInt g, x, y;
        mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), diag[i].get_mpz_t(),
                   diag[j].get_mpz_t());
        const BigInt a_red = diag[i] / g;
        const BigInt b_red = diag[j] / g;
        // [[x y] [-b' a']] diag(a, b) [[1 -y b'] [1 x a']] = diag(g, g a' b')
        if (track_) {
          combine_rows(work_, i, j, x, y, -b_red, a_red);
          combine_rows(left_, i, j, x, y, -b_red, a_red);
          combine_cols(work_, i, j, 1, -y * b_red, 1, x * a_red);
          combine_cols(right_, i, j, 1, -y * b_red, 1, x * a_red);
        }
        diag[j] = g * a_red * b_red;
        diag[i] = g;
      }
    }
  }

  UnimodularPair transforms() && { return {std::move(left_), std::move(right_)}; }

 private:
  void swap_rows(std::size_t a, std::size_t b) {
    work_.swap_rows(a, b);
    if (track_) left_.swap_rows(a, b);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    work_.swap_cols(a, b);
    if (track_) right_.swap_cols(a, b);
  }
  void negate_row(std::size_t r) {
    work_.negate_row(r);
    if (track_) left_.negate_row(r);
  }
  void add_row_multiple(std::size_t dst, std::size_t src, const BigInt& f) {
    work_.add_row_multiple(dst, src, f);
    if (track_) left_.add_row_multiple(dst, src, f);
  }
  void add_col_multiple(std::size_t dst, std::size_t src, const BigInt& f) {
    work_.add_col_multiple(dst, src, f);
    if (track_) right_.add_col_multiple(dst, src, f);
  }
  void swap_diagonal(std::size_t i, std::size_t j) {
    swap_rows(i, j);
    swap_cols(i, j);
  }

  // Brings the nonzero entry of least magnitude to (t, t). With whole_block
  // the search covers the trailing submatrix, otherwise only row t and
  // column t. Returns false when the searched region is all zero.
  bool move_min_to(std::size_t t, bool whole_block) {
    std::size_t best_r = 0, best_c = 0;
    BigInt best;
    auto consider = [&](std::size_t r, std::size_t c) {
      const BigInt& v = work_(r, c);
      if (v == 0) return;
      if (best == 0 || abs_value(v) < best) {
        best = abs_value(v);
        best_r = r;
        best_c = c;
      }
    };
    if (whole_block) {
      for (std::size_t r = t; r < work_.rows(); ++r)
        for (std::size_t c = t; c < work_.cols(); ++c) consider(r, c);
    } else {
      for (std::size_t r = t; r < work_.rows(); ++r) consider(r, t);
      for (std::size_t c = t + 1; c < work_.cols(); ++c) consider(t, c);
    }
    if (best == 0) return false;
    swap_rows(t, best_r);
    swap_cols(t, best_c);
    return true;
  }

  // Reduces column t and row t modulo the pivot; true when both are clear.
  bool clear_cross(std::size_t t) {
    bool clear = true;
    const BigInt pivot = work_(t, t);
    for (std::size_t r = t + 1; r < work_.rows(); ++r) {
      if (work_(r, t) == 0) continue;
      BigInt q = work_(r, t) / pivot;
      add_row_multiple(r, t, -q);
      if (work_(r, t) != 0) clear = false;
    }
    for (std::size_t c = t + 1; c < work_.cols(); ++c) {
      if (work_(t, c) == 0) continue;
      BigInt q = work_(t, c) / pivot;
      add_col_multiple(c, t, -q);
      if (work_(t, c) != 0) clear = false;
    }
    return clear;
  }

  IntMatrix work_;
  bool track_;
  IntMatrix left_;
  IntMatrix right_;
};

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<BigInt> DeterminantalDivisors::invariant_factors() const {
  std::vector<BigInt> out;
  for (std::size_t i = 1; i < deltas.size(); ++i) {
    if (deltas[i] == 0 || deltas[i - 1] == 0) {
      out.emplace_back(0);
    } else {
      out.emplace_back(deltas[i] / deltas[i - 1]);
    }
  }
  return out;
}

SnfResult smith_normal_form(const IntMatrix& m, const SnfOptions& options) {
  Reducer reducer(m, options.want_transforms);
  SnfResult result;
  result.factors = reducer.diagonalize();
  if (options.enforce_divisibility_chain) reducer.enforce_chain(result.factors);
  if (options.want_transforms) result.transforms = std::move(reducer).transforms();
  return result;
}

std::vector<BigInt> invariant_factors(const IntMatrix& m) {
  return smith_normal_form(m).factors;
}

DeterminantalDivisors determinantal_divisors(const IntMatrix& m) {
  if (!m.square()) throw std::invalid_argument("determinantal divisors need a square matrix");
  const std::size_t n = m.rows();
  if (n > kMaxDivisorOrder) {
    throw std::invalid_argument("minor enumeration is limited to " +
                                std::to_string(kMaxDivisorOrder) + " rows");
  }
  DeterminantalDivisors out;
  out.deltas.reserve(n + 1);
  out.deltas.emplace_back(1);
  for (std::size_t size = 1; size <= n; ++size) {
    BigInt g = 0;
    if (out.deltas.back() != 0) {
      std::vector<std::size_t> rows(size);
      for (std::size_t i = 0; i < size; ++i) rows[i] = i;
      do {
        std::vector<std::size_t> cols(rows.size());
        for (std::size_t i = 0; i < size; ++i) cols[i] = i;
        do {
          BigInt d = determinant(submatrix(m, rows, cols));
          mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
        } while (g != 1 && next_combination(cols, n));
      } while (g != 1 && next_combination(rows, n));
    }
    out.deltas.push_back(g);
  }
  return out;
}

bool satisfies_divisibility_chain(const std::vector<BigInt>& factors) {
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i] < 0) return false;
    if (i + 1 < factors.size() && factors[i + 1] != 0) {
      if (factors[i] == 0 || factors[i + 1] % factors[i] != 0) return false;
    }
  }
  return true;
}

}  // namespace snfgraph
