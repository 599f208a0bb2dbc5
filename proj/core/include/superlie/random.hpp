#pragma once

#include <cstddef>
#include <random>

#include "superlie/grassmann.hpp"
#include "superlie/linalg.hpp"
#include "superlie/supermatrix.hpp"

namespace superlie {

/// Homogeneous element of Lambda(q) with integer coefficients in [-bound, bound].
GrassmannElement random_grassmann(std::size_t generators, Parity p, std::mt19937_64& rng, int bound = 3);

/// Even element with nonzero body.
GrassmannElement random_grassmann_unit(std::size_t generators, std::mt19937_64& rng, int bound = 3);

/// Homogeneous supermatrix of parity p.
SuperMatrix random_supermatrix(std::size_t even_dim, std::size_t odd_dim, std::size_t generators, Parity p,
                               std::mt19937_64& rng, int bound = 3);

/// Even supermatrix whose diagonal blocks have invertible bodies.
SuperMatrix random_invertible_supermatrix(std::size_t even_dim, std::size_t odd_dim, std::size_t generators,
                                          std::mt19937_64& rng, int bound = 3);

RationalMatrix random_rational_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng, int bound = 3);

}  // namespace superlie
