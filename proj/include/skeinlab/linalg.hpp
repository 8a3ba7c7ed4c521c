#pragma once

#include <vector>

#include "skeinlab/laurent.hpp"

namespace skeinlab {
namespace linalg {

using RMatrix = std::vector<std::vector<Rational>>;
using IMatrix = std::vector<std::vector<Int>>;

// Signature of a symmetric rational matrix via congruence diagonalization.
int signature(RMatrix m);

// Basis of the integer kernel {x : m x = 0} by fraction-free elimination,
// returned as rows of primitive integer vectors.
IMatrix integer_kernel(const IMatrix& m, int cols);

}  // namespace linalg
}  // namespace skeinlab
