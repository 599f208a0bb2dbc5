#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <string>
#include <utility>
#include <vector>

#include "superlie/lie_superalgebra.hpp"
#include "superlie/linalg.hpp"

namespace superlie {

// Line-oriented text formats. '#' starts a comment; blank lines are ignored.
// Scalars are integers or p/q.
//
// Algebra file:
//   superalgebra <name> <m> <n>
//   labels <l1> ... <l(m+n)>        (optional, must precede the entries)
//   <i> <j> <k> <value>             c_ijk with 1-based indices
//
// Matrix file:
//   matrix <n>
//   <n rows of n scalars>
//
// Kac subspace file:
//   sym <n>                         U = L (x) Lambda(n)
//   inner                           (optional) include the inner ideal
//   all                             (optional) take all of Der(U)
//   vector <c>:<label> ...          a vector of Der(U) by basis labels

/// Throws ParseError with the offending line number.
LieSuperAlgebra parse_algebra(std::istream& in);
LieSuperAlgebra load_algebra(const std::filesystem::path& path);
/// Entries are written in (i, j, k) order, skipping zeros.
std::string serialize_algebra(const LieSuperAlgebra& l);

RationalMatrix parse_matrix(std::istream& in);
RationalMatrix load_matrix(const std::filesystem::path& path);

struct KacSubspaceFile {
  std::size_t generators = 0;
  bool inner = false;
  bool all = false;
  /// (coefficient, Der(U) basis label) terms of each vector.
  std::vector<std::vector<std::pair<Scalar, std::string>>> vectors;
  /// Line number of each vector, for diagnostics.
  std::vector<std::size_t> lines;
};

KacSubspaceFile parse_kac_subspace(std::istream& in);
KacSubspaceFile load_kac_subspace(const std::filesystem::path& path);

}  // namespace superlie
