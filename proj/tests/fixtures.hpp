#pragma once

#include "ncg/families.hpp"
#include "ncg/ring.hpp"

namespace fixtures {

// Rank of the matrix unit E_ij inside matrix_ring(n, m).
inline int matrix_unit(const ncg::FiniteRing& R, int n, int i, int j) {
  return R.shape().generator_rank(i * n + j);
}

// Rank of the identity matrix inside matrix_ring(n, m).
inline int identity_matrix(const ncg::FiniteRing& R, int n) {
  int acc = 0;
  for (int i = 0; i < n; ++i) acc = R.add(acc, matrix_unit(R, n, i, i));
  return acc;
}

// UT2 basis is E11, E12, E22 at generator indices 0, 1, 2.
inline int ut2_unit(const ncg::FiniteRing& R, int which) {
  return R.shape().generator_rank(which);
}

}  // namespace fixtures
