#include "superlie/lie_superalgebra.hpp"

#include <sstream>

#include "superlie/errors.hpp"

namespace superlie {

LieSuperAlgebra::LieSuperAlgebra(std::size_t even_dim, std::size_t odd_dim, std::vector<std::string> labels,
                                 std::string name)
    : name_(std::move(name)), m_(even_dim), n_(odd_dim), labels_(std::move(labels)),
      table_((even_dim + odd_dim) * (even_dim + odd_dim)) {
  if (labels_.empty()) {
    for (std::size_t i = 0; i < dim(); ++i) labels_.push_back("x" + std::to_string(i + 1));
  }
  if (labels_.size() != dim()) throw DimensionError("label count does not match the dimension");
}

std::vector<Parity> LieSuperAlgebra::coordinate_parity() const {
  std::vector<Parity> p(dim(), Parity::Even);
  for (std::size_t i = m_; i < dim(); ++i) p[i] = Parity::Odd;
  return p;
}

std::optional<std::size_t> LieSuperAlgebra::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

void LieSuperAlgebra::check_index(std::size_t i) const {
  if (i >= dim()) throw DimensionError("basis index " + std::to_string(i) + " out of range");
}

void LieSuperAlgebra::check_vector(const Vector& v) const {
  if (v.size() != dim()) throw DimensionError("vector length does not match the algebra dimension");
}

void LieSuperAlgebra::set_bracket(std::size_t i, std::size_t j, Vector value) {
  check_index(i);
  check_index(j);
  check_vector(value);
  table_[i * dim() + j] = superlie::is_zero(value) ? Vector{} : std::move(value);
}

void LieSuperAlgebra::set_antisymmetric(std::size_t i, std::size_t j, const Vector& value) {
  set_bracket(i, j, value);
  const Scalar s = -koszul_sign(parity(i), parity(j));
  set_bracket(j, i, s * value);
}

void LieSuperAlgebra::set_structure_constant(std::size_t i, std::size_t j, std::size_t k, const Scalar& value) {
  check_index(k);
  Vector v = basis_bracket(i, j);
  v[k] = value;
  set_bracket(i, j, std::move(v));
}

Scalar LieSuperAlgebra::structure_constant(std::size_t i, std::size_t j, std::size_t k) const {
  check_index(i);
  check_index(j);
  check_index(k);
  const Vector& v = table_[i * dim() + j];
  return v.empty() ? Scalar(0) : v[k];
}

Vector LieSuperAlgebra::basis_bracket(std::size_t i, std::size_t j) const {
  check_index(i);
  check_index(j);
  const Vector& v = table_[i * dim() + j];
  return v.empty() ? zero_vector() : v;
}

Vector LieSuperAlgebra::bracket(const Vector& v, const Vector& w) const {
  check_vector(v);
  check_vector(w);
  std::vector<std::size_t> support_w;
  for (std::size_t j = 0; j < dim(); ++j) {
    if (!superlie::is_zero(w[j])) support_w.push_back(j);
  }
  Vector out(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (superlie::is_zero(v[i])) continue;
    for (std::size_t j : support_w) {
      const Vector& c = table_[i * dim() + j];
      if (c.empty()) continue;
      axpy(v[i] * w[j], c, out);
    }
  }
  return out;
}

bool LieSuperAlgebra::is_abelian() const {
  for (const auto& v : table_) {
    if (!v.empty()) return false;
  }
  return true;
}

RationalMatrix LieSuperAlgebra::ad(const Vector& x) const {
  RationalMatrix m(dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) m.set_column(j, bracket(unit_vector(dim(), j), x));
  return m;
}

std::string LieSuperAlgebra::format(const Vector& v) const {
  check_vector(v);
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (superlie::is_zero(v[i])) continue;
    const Scalar mag = abs(v[i]);
    if (first) {
      if (sgn(v[i]) < 0) os << "-";
    } else {
      os << (sgn(v[i]) < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1) os << superlie::to_string(mag) << "*";
    os << labels_[i];
  }
  return first ? "0" : os.str();
}

bool operator==(const LieSuperAlgebra& a, const LieSuperAlgebra& b) {
  return a.m_ == b.m_ && a.n_ == b.n_ && a.labels_ == b.labels_ && a.table_ == b.table_;
}

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::Homogeneity:
      return "homogeneity";
    case ViolationKind::Antisymmetry:
      return "antisymmetry";
    case ViolationKind::Jacobi:
      return "jacobi";
  }
  return "unknown";
}

ValidationReport validate(const LieSuperAlgebra& l) {
  ValidationReport r;
  const std::size_t d = l.dim();
  auto fail = [&](ViolationKind kind, std::size_t i, std::size_t j, std::size_t k, std::string msg) {
    r.valid = false;
    r.kind = kind;
    r.i = i;
    r.j = j;
    r.k = k;
    r.message = std::move(msg);
    return r;
  };

  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      if (!l.has_bracket(i, j)) continue;
      for (std::size_t k = 0; k < d; ++k) {
        if (l.parity(i) + l.parity(j) != l.parity(k) && !is_zero(l.structure_constant(i, j, k))) {
          return fail(ViolationKind::Homogeneity, i, j, k,
                      "c(" + l.label(i) + "," + l.label(j) + "," + l.label(k) + ") = " +
                          to_string(l.structure_constant(i, j, k)) + " breaks parity");
        }
      }
    }
  }

  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) {
      const Scalar s = koszul_sign(l.parity(i), l.parity(j));
      Vector sum = l.basis_bracket(i, j);
      axpy(s, l.basis_bracket(j, i), sum);
      if (!is_zero(sum)) {
        return fail(ViolationKind::Antisymmetry, i, j, 0,
                    "[" + l.label(i) + "," + l.label(j) + "] + sign*[" + l.label(j) + "," + l.label(i) +
                        "] = " + l.format(sum));
      }
    }
  }

  for (std::size_t i = 0; i < d; ++i) {
    const Vector xi = unit_vector(d, i);
    for (std::size_t j = 0; j < d; ++j) {
      const Vector xj = unit_vector(d, j);
      const Vector xij = l.basis_bracket(i, j);
      for (std::size_t k = 0; k < d; ++k) {
        const Vector xk = unit_vector(d, k);
        Vector defect = l.bracket(xij, xk);
        defect = defect - l.bracket(xi, l.basis_bracket(j, k));
        const Scalar s = koszul_sign(l.parity(j), l.parity(k));
        axpy(-s, l.bracket(l.basis_bracket(i, k), xj), defect);
        if (!is_zero(defect)) {
          return fail(ViolationKind::Jacobi, i, j, k,
                      "Jacobi defect on (" + l.label(i) + "," + l.label(j) + "," + l.label(k) +
                          ") = " + l.format(defect));
        }
      }
    }
  }
  return r;
}

LieSuperAlgebra make_gl(std::size_t m, std::size_t n) {
  const std::size_t N = m + n;
  if (N == 0) throw DimensionError("gl(0|0) is empty");
  auto idx_parity = [m](std::size_t i) { return i < m ? Parity::Even : Parity::Odd; };
  std::vector<std::pair<std::size_t, std::size_t>> order;
  for (Parity want : {Parity::Even, Parity::Odd}) {
    for (std::size_t i = 0; i < N; ++i) {
      for (std::size_t j = 0; j < N; ++j) {
        if (idx_parity(i) + idx_parity(j) == want) order.emplace_back(i, j);
      }
    }
  }
  std::vector<std::size_t> position(N * N);
  std::vector<std::string> labels;
  std::size_t even_count = 0;
  for (std::size_t b = 0; b < order.size(); ++b) {
    const auto [i, j] = order[b];
    position[i * N + j] = b;
    labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
    if (idx_parity(i) == idx_parity(j)) ++even_count;
  }
  LieSuperAlgebra g(even_count, N * N - even_count, labels,
                    "gl(" + std::to_string(m) + "|" + std::to_string(n) + ")");
  // [E_ij, E_kl] = d_jk E_il - (-1)^{|E_ij||E_kl|} d_li E_kj
  for (std::size_t a = 0; a < order.size(); ++a) {
    const auto [i, j] = order[a];
    for (std::size_t b = 0; b < order.size(); ++b) {
      const auto [k, l] = order[b];
      Vector v(N * N);
      if (j == k) v[position[i * N + l]] += 1;
      if (l == i) v[position[k * N + j]] -= koszul_sign(g.parity(a), g.parity(b));
      g.set_bracket(a, b, std::move(v));
    }
  }
  return g;
}

LieSuperAlgebra make_sl2() {
  LieSuperAlgebra g(3, 0, {"h", "e", "f"}, "sl2");
  g.set_antisymmetric(0, 1, Vector{0, 2, 0});
  g.set_antisymmetric(0, 2, Vector{0, 0, -2});
  g.set_antisymmetric(1, 2, Vector{1, 0, 0});
  return g;
}

LieSuperAlgebra make_abelian(std::size_t even_dim, std::size_t odd_dim) {
  return LieSuperAlgebra(even_dim, odd_dim, {},
                         "abelian(" + std::to_string(even_dim) + "|" + std::to_string(odd_dim) + ")");
}

LieSuperAlgebra make_nonabelian2() {
  LieSuperAlgebra g(2, 0, {"h", "e"}, "nonabelian2");
  g.set_antisymmetric(0, 1, Vector{0, 1});
  return g;
}

}  // namespace superlie
