#ifndef HKIT_LINALG_HPP
#define HKIT_LINALG_HPP

#include <optional>
#include <vector>

#include "hkit/rational.hpp"

namespace hkit {

using RatMatrix = std::vector<Vec>;
using IntVec = std::vector<Int>;
using IntMatrix = std::vector<IntVec>;

// --- exact rational elimination ----------------------------------------------

int rank(RatMatrix m);

// Solves the square system A x = b; empty when A is singular.
std::optional<Vec> solve_square(RatMatrix a, Vec b);

// Solves A x = b in the least-squares sense via the normal equations,
// assuming A has full column rank. Empty when the Gram matrix is singular.
std::optional<Vec> solve_normal_equations(const RatMatrix& a, const Vec& b);

// Basis of the null space of A (rows are the input vectors).
std::vector<Vec> nullspace(RatMatrix a);

// --- fraction-free integer kernels (Bareiss) ----------------------------------
//
// The vertex enumeration inner loop works on integer data: a vertex is kept
// as x = X / D with integer X and D > 0, so tightness and feasibility tests
// are pure integer comparisons.

// Solves the square integer system A x = b exactly, returning (X, D) with
// x = X / D and D > 0. Empty when A is singular.
struct ScaledIntSolution {
  IntVec x;
  Int den;
};
std::optional<ScaledIntSolution> bareiss_solve(IntMatrix a, IntVec b);

// One integer kernel vector of a rank-(cols-1) matrix; empty when the rank
// is lower (or the kernel is trivial, which cannot happen for rows < cols).
std::optional<IntVec> bareiss_kernel_vector(IntMatrix a);

int int_rank(IntMatrix a);

// gcd-reduces v (together with an optional denominator) to primitive form.
void make_primitive(IntVec& v);
void make_primitive(IntVec& v, Int& den);

}  // namespace hkit

#endif
