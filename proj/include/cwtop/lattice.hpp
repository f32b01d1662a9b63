#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cwtop/matrix.hpp"

namespace cwtop {

// U * A * V = D with U, V unimodular and D diagonal, d_i >= 0, d_i | d_{i+1}.
// uInverse satisfies uInverse * U = I; it carries the lifts of the canonical
// generators of the cokernel back to the ambient Z^m.
struct SmithDecomposition {
  IntegerMatrix u;         // rows x rows
  IntegerMatrix d;         // rows x cols, diagonal
  IntegerMatrix v;         // cols x cols
  IntegerMatrix uInverse;  // rows x rows

  std::size_t rank() const {
    std::size_t r = 0;
    std::size_t n = std::min(d.rows(), d.cols());
    while (r < n && d(r, r) != 0) ++r;
    return r;
  }
};

// Canonical form of a finitely generated abelian group: free rank plus
// invariant factors (each > 1, each dividing the next). Two groups are
// isomorphic iff their presentations compare equal.
struct AbelianGroupPresentation {
  std::size_t freeRank = 0;
  std::vector<Int> torsion;

  bool operator==(const AbelianGroupPresentation& o) const {
    return freeRank == o.freeRank && torsion == o.torsion;
  }
  bool operator!=(const AbelianGroupPresentation& o) const { return !(*this == o); }

  bool trivial() const { return freeRank == 0 && torsion.empty(); }
  // Z, Z/d or the trivial group.
  bool cyclic() const {
    return (freeRank == 1 && torsion.empty()) ||
           (freeRank == 0 && torsion.size() <= 1);
  }
};

// Integer coefficients beta with A * beta = b.
struct MembershipWitness {
  std::vector<Int> coefficients;
};

// Element of a cyclic quotient group under its canonical coordinate:
// modulus == 0 encodes Z, modulus == 1 the trivial group, modulus == d > 1
// the group Z/d with value normalized into [0, d).
struct QuotientElement {
  Int value{0};
  Int modulus{0};

  bool isZero() const { return value == 0; }
  bool operator==(const QuotientElement& o) const {
    return value == o.value && modulus == o.modulus;
  }
  bool operator!=(const QuotientElement& o) const { return !(*this == o); }

  QuotientElement operator+(const QuotientElement& o) const {
    if (modulus != o.modulus) throw DimensionMismatch("adding elements of different groups");
    QuotientElement r{value + o.value, modulus};
    if (modulus > 0) r.value = ((r.value % modulus) + modulus) % modulus;
    return r;
  }
  QuotientElement operator*(const Int& n) const {
    QuotientElement r{value * n, modulus};
    if (modulus > 0) r.value = ((r.value % modulus) + modulus) % modulus;
    return r;
  }

  // |value| for Z; for Z/d the representative is already in [0, d).
  Int magnitude() const { return value >= 0 ? value : Int(-value); }
};

SmithDecomposition smith_normal_form(const IntegerMatrix& a);

// Column-style Hermite form: A * U = H with U unimodular, H lower triangular
// with positive pivots in strictly increasing rows and entries left of each
// pivot reduced into [0, pivot).
std::pair<IntegerMatrix, IntegerMatrix> hermite_normal_form(const IntegerMatrix& a);

// Decides b in the column lattice of A; a returned witness satisfies
// A * beta = b exactly. Certified through the Hermite form.
std::optional<MembershipWitness> lattice_member(const IntegerMatrix& a,
                                                const std::vector<Int>& b);

// Z^rows / (column lattice of `relations`), in canonical form.
AbelianGroupPresentation cokernel(const IntegerMatrix& relations);

// The class of v in the cyclic quotient Z^rows / (column lattice), under the
// canonical generator fixed by the Smith decomposition. Sign convention: the
// generator's lift to Z^rows has positive first nonzero coordinate.
// Throws NonCyclicQuotient if the quotient is not cyclic.
QuotientElement quotient_image(const IntegerMatrix& relations,
                               const std::vector<Int>& v);

}  // namespace cwtop
