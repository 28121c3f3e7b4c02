#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "jacquet/rational.hpp"

namespace jacquet {

using RationalMatrix = std::vector<std::vector<Rational>>;

class SingularMatrix : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotTriangular : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

RationalMatrix identity_matrix(std::size_t n);
RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b);

// Inverse of M, where listing rows and columns in the sequence `order` makes M lower
// triangular. Solved by forward substitution in that sequence; rows/columns of the
// result are in the original indexing. An empty `order` means the identity permutation.
RationalMatrix invert_triangular(const RationalMatrix& m, const std::vector<std::size_t>& order = {});

}  // namespace jacquet
