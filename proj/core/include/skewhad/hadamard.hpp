#ifndef SKEWHAD_HADAMARD_HPP
#define SKEWHAD_HADAMARD_HPP

#include "skewhad/sign_matrix.hpp"

namespace skewhad {

/// True iff M * M^T = n * I, checked entrywise in integers.
bool is_hadamard(const SignMatrix& m);

/// True iff M is Hadamard and M - I is skew-symmetric, i.e. the diagonal
/// is all +1 and M_ij = -M_ji off the diagonal.
bool is_skew_hadamard(const SignMatrix& m);

/// Paley type I construction for prime q = 3 (mod 4): the quadratic
/// residue core Q with Q_ij = chi(j - i) bordered by a +1 first row and
/// -1 first column, unit diagonal. The result has order q+1, passes
/// is_skew_hadamard, and is a fixed point of normalize.
SignMatrix paley_skew_hadamard(int q);

/// Sign-conjugates H to D*H*D with D_jj = H_1j. The result has an all +1
/// first row, -1 first column below the diagonal, and is still
/// skew-Hadamard. Idempotent. Rejects non-skew-Hadamard input.
SignMatrix normalize(const SignMatrix& h);

/// True iff the first row of a skew-Hadamard matrix is all +1 (which,
/// with skewness, forces the normalized first column and diagonal).
bool is_normalized(const SignMatrix& h);

/// Order-2n matrix [[I+S, I+S], [-I+S, I-S]] with S = H - I. The result
/// is skew-Hadamard again, and normalized whenever H is. Rejects
/// non-skew-Hadamard input.
SignMatrix doubling(const SignMatrix& h);

}  // namespace skewhad

#endif
