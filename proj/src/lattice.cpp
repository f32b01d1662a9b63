#include "cwtop/lattice.hpp"

#include <algorithm>
#include <cstdlib>

namespace cwtop {

Int IntegerMatrix::determinant() const {
  if (rows_ != cols_) throw DimensionMismatch("determinant of non-square matrix");
  if (rows_ == 0) return 1;
  IntegerMatrix m = *this;
  Int prev(1);
  int sign = 1;
  std::size_t n = rows_;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign > 0 ? m(n - 1, n - 1) : Int(-m(n - 1, n - 1));
}

namespace {

// Elementary row/column operations applied simultaneously to the working
// matrix and the transforms. Row ops keep uInv in sync by applying the
// inverse operation on its columns, so uInv * u = I throughout.
struct SmithWorkspace {
  IntegerMatrix d, u, uInv, v;

  void swapRows(std::size_t a, std::size_t b) {
    d.swap_rows(a, b);
    u.swap_rows(a, b);
    uInv.swap_cols(a, b);
  }
  void swapCols(std::size_t a, std::size_t b) {
    d.swap_cols(a, b);
    v.swap_cols(a, b);
  }
  // row[a] += q * row[b];  inverse on uInv: col[b] -= q * col[a]
  void addRow(std::size_t a, std::size_t b, const Int& q) {
    d.add_row(a, b, q);
    u.add_row(a, b, q);
    uInv.add_col(b, a, Int(-q));
  }
  void addCol(std::size_t a, std::size_t b, const Int& q) {
    d.add_col(a, b, q);
    v.add_col(a, b, q);
  }
  void negateRow(std::size_t a) {
    d.negate_row(a);
    u.negate_row(a);
    uInv.negate_col(a);
  }
};

// Position of the entry of minimal nonzero absolute value in the trailing
// submatrix starting at (t, t); nullopt when that submatrix is zero.
std::optional<std::pair<std::size_t, std::size_t>> min_pivot(
    const IntegerMatrix& d, std::size_t t) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  Int bestAbs;
  for (std::size_t i = t; i < d.rows(); ++i)
    for (std::size_t j = t; j < d.cols(); ++j) {
      if (d(i, j) == 0) continue;
      Int a = abs(d(i, j));
      if (!best || a < bestAbs) {
        best = {i, j};
        bestAbs = a;
      }
    }
  return best;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntegerMatrix& a) {
  const std::size_t m = a.rows(), k = a.cols();
  SmithWorkspace w{a, IntegerMatrix::identity(m), IntegerMatrix::identity(m),
                   IntegerMatrix::identity(k)};

  const std::size_t nmin = std::min(m, k);
  for (std::size_t t = 0; t < nmin; ++t) {
    auto piv = min_pivot(w.d, t);
    if (!piv) break;

    while (true) {
      w.swapRows(t, piv->first);
      w.swapCols(t, piv->second);

      // Clear column t below and row t right of the pivot; each pass either
      // finishes or strictly shrinks |d(t,t)| via a swap, so this terminates.
      bool clean = false;
      while (!clean) {
        clean = true;
        for (std::size_t i = t + 1; i < m; ++i) {
          while (w.d(i, t) != 0) {
            Int q = w.d(i, t) / w.d(t, t);  // truncated division
            w.addRow(i, t, Int(-q));
            if (w.d(i, t) != 0) {  // remainder smaller than pivot: swap up
              w.swapRows(t, i);
              clean = false;
            }
          }
        }
        for (std::size_t j = t + 1; j < k; ++j) {
          while (w.d(t, j) != 0) {
            Int q = w.d(t, j) / w.d(t, t);
            w.addCol(j, t, Int(-q));
            if (w.d(t, j) != 0) {
              w.swapCols(t, j);
              clean = false;  // column swap can repopulate column t
            }
          }
        }
      }

      // Force the pivot to divide every remaining entry. Folding an offending
      // row into row t restarts the reduction with a strictly smaller gcd.
      std::optional<std::pair<std::size_t, std::size_t>> offender;
      for (std::size_t i = t + 1; i < m && !offender; ++i)
        for (std::size_t j = t + 1; j < k && !offender; ++j)
          if (w.d(i, j) % w.d(t, t) != 0) offender = {i, j};
      if (!offender) break;
      w.addRow(t, offender->first, Int(1));
      piv = {t, t};
    }

    if (w.d(t, t) < 0) w.negateRow(t);
  }

  return SmithDecomposition{std::move(w.u), std::move(w.d), std::move(w.v),
                            std::move(w.uInv)};
}

std::pair<IntegerMatrix, IntegerMatrix> hermite_normal_form(const IntegerMatrix& a) {
  const std::size_t m = a.rows(), k = a.cols();
  IntegerMatrix h = a;
  IntegerMatrix u = IntegerMatrix::identity(k);

  auto addCol = [&](std::size_t x, std::size_t y, const Int& q) {
    h.add_col(x, y, q);
    u.add_col(x, y, q);
  };
  auto swapCols = [&](std::size_t x, std::size_t y) {
    h.swap_cols(x, y);
    u.swap_cols(x, y);
  };
  auto negateCol = [&](std::size_t x) {
    h.negate_col(x);
    u.negate_col(x);
  };

  std::size_t r = 0;  // next pivot column
  for (std::size_t i = 0; i < m && r < k; ++i) {
    // Euclid across columns r..k-1 on row i until a single nonzero remains.
    while (true) {
      std::optional<std::size_t> best;
      for (std::size_t j = r; j < k; ++j) {
        if (h(i, j) == 0) continue;
        if (!best || abs(h(i, j)) < abs(h(i, *best))) best = j;
      }
      if (!best) break;
      swapCols(r, *best);
      bool done = true;
      for (std::size_t j = r + 1; j < k; ++j) {
        if (h(i, j) == 0) continue;
        Int q = h(i, j) / h(i, r);
        addCol(j, r, Int(-q));
        if (h(i, j) != 0) done = false;
      }
      if (done) break;
    }
    if (h(i, r) == 0) continue;  // row has no pivot
    if (h(i, r) < 0) negateCol(r);
    // Reduce the pivot row entries left of the pivot into [0, pivot).
    for (std::size_t j = 0; j < r; ++j) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), h(i, j).get_mpz_t(), h(i, r).get_mpz_t());
      if (q != 0) addCol(j, r, Int(-q));
    }
    ++r;
  }
  return {std::move(h), std::move(u)};
}

std::optional<MembershipWitness> lattice_member(const IntegerMatrix& a,
                                                const std::vector<Int>& b) {
  if (b.size() != a.rows()) throw DimensionMismatch("lattice_member: b.size() != rows");
  const std::size_t m = a.rows(), k = a.cols();
  auto [h, u] = hermite_normal_form(a);

  // Forward substitution down the column pivots of H.
  std::vector<Int> residual = b;
  std::vector<Int> y(k, Int(0));
  std::size_t col = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (col < k && h(i, col) != 0) {
      if (residual[i] % h(i, col) != 0) return std::nullopt;
      y[col] = residual[i] / h(i, col);
      if (y[col] != 0)
        for (std::size_t ii = i; ii < m; ++ii) residual[ii] -= y[col] * h(ii, col);
      ++col;
    } else if (residual[i] != 0) {
      return std::nullopt;  // row outside the pivot structure must vanish
    }
  }
  MembershipWitness w;
  w.coefficients = u * y;
  return w;
}

AbelianGroupPresentation cokernel(const IntegerMatrix& relations) {
  AbelianGroupPresentation g;
  if (relations.cols() == 0) {
    g.freeRank = relations.rows();
    return g;
  }
  SmithDecomposition snf = smith_normal_form(relations);
  std::size_t r = snf.rank();
  g.freeRank = relations.rows() - r;
  for (std::size_t i = 0; i < r; ++i)
    if (snf.d(i, i) > 1) g.torsion.push_back(snf.d(i, i));
  return g;
}

QuotientElement quotient_image(const IntegerMatrix& relations,
                               const std::vector<Int>& v) {
  const std::size_t m = relations.rows();
  if (v.size() != m) throw DimensionMismatch("quotient_image: v.size() != rows");

  if (relations.cols() == 0) {
    // No relations: the quotient is Z^m, cyclic only for m <= 1.
    if (m > 1) throw NonCyclicQuotient("free quotient of rank > 1");
    if (m == 0) return QuotientElement{0, 1};
    return QuotientElement{v[0], 0};
  }

  SmithDecomposition snf = smith_normal_form(relations);
  const std::size_t r = snf.rank();
  const std::size_t freeRank = m - r;

  std::optional<std::size_t> torsionIdx;
  for (std::size_t i = 0; i < r; ++i) {
    if (snf.d(i, i) > 1) {
      if (torsionIdx) throw NonCyclicQuotient("more than one invariant factor");
      torsionIdx = i;
    }
  }
  if (freeRank > 1 || (freeRank == 1 && torsionIdx))
    throw NonCyclicQuotient("quotient has rank > 1 or mixed free/torsion part");

  if (freeRank == 0 && !torsionIdx) return QuotientElement{0, 1};  // trivial

  const std::size_t idx = freeRank == 1 ? r : *torsionIdx;
  const Int modulus = freeRank == 1 ? Int(0) : Int(snf.d(idx, idx));

  // Coordinate of v along the canonical generator.
  Int value(0);
  for (std::size_t j = 0; j < m; ++j) value += snf.u(idx, j) * v[j];

  // Sign convention: the generator's lift (column idx of U^{-1}) has
  // positive first nonzero coordinate.
  for (std::size_t i = 0; i < m; ++i) {
    const Int& lift = snf.uInverse(i, idx);
    if (lift != 0) {
      if (lift < 0) value = -value;
      break;
    }
  }

  QuotientElement e{std::move(value), modulus};
  if (e.modulus > 0) e.value = ((e.value % e.modulus) + e.modulus) % e.modulus;
  return e;
}

}  // namespace cwtop
