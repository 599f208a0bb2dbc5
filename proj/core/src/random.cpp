#include "superlie/random.hpp"

namespace superlie {

namespace {

int draw(std::mt19937_64& rng, int bound) { return std::uniform_int_distribution<int>(-bound, bound)(rng); }

}  // namespace

GrassmannElement random_grassmann(std::size_t generators, Parity p, std::mt19937_64& rng, int bound) {
  GrassmannElement out(generators);
  const GrassmannElement::Mask end = GrassmannElement::Mask{1} << generators;
  for (GrassmannElement::Mask mask = 0; mask < end; ++mask) {
    if (mask_parity(mask) != p) continue;
    const int c = draw(rng, bound);
    if (c != 0) out += GrassmannElement::monomial(generators, mask, Scalar(c));
  }
  return out;
}

GrassmannElement random_grassmann_unit(std::size_t generators, std::mt19937_64& rng, int bound) {
  GrassmannElement out = random_grassmann(generators, Parity::Even, rng, bound);
  if (superlie::is_zero(out.body())) out += GrassmannElement::one(generators);
  return out;
}

SuperMatrix random_supermatrix(std::size_t even_dim, std::size_t odd_dim, std::size_t generators, Parity p,
                               std::mt19937_64& rng, int bound) {
  SuperMatrix out(even_dim, odd_dim, generators);
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t j = 0; j < out.size(); ++j) {
      out(i, j) = random_grassmann(generators, p + out.block_parity(i, j), rng, bound);
    }
  }
  return out;
}

SuperMatrix random_invertible_supermatrix(std::size_t even_dim, std::size_t odd_dim, std::size_t generators,
                                          std::mt19937_64& rng, int bound) {
  for (;;) {
    SuperMatrix out = random_supermatrix(even_dim, odd_dim, generators, Parity::Even, rng, bound);
    const RationalMatrix body = out.body();
    RationalMatrix top(even_dim, even_dim);
    RationalMatrix bottom(odd_dim, odd_dim);
    for (std::size_t i = 0; i < even_dim; ++i) {
      for (std::size_t j = 0; j < even_dim; ++j) top(i, j) = body(i, j);
    }
    for (std::size_t i = 0; i < odd_dim; ++i) {
      for (std::size_t j = 0; j < odd_dim; ++j) bottom(i, j) = body(even_dim + i, even_dim + j);
    }
    const bool top_ok = even_dim == 0 || !superlie::is_zero(determinant(top));
    const bool bottom_ok = odd_dim == 0 || !superlie::is_zero(determinant(bottom));
    if (top_ok && bottom_ok) return out;
  }
}

RationalMatrix random_rational_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng, int bound) {
  RationalMatrix out(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = Scalar(draw(rng, bound));
  }
  return out;
}

}  // namespace superlie
