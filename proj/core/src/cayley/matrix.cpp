#include "ramcut/cayley/matrix.hpp"

#include "ramcut/error.hpp"

#include <utility>

namespace ramcut::cayley {

Matrix identity(unsigned d) {
  Matrix m{d, std::vector<Element>(static_cast<std::size_t>(d) * d, 0)};
  for (unsigned i = 0; i < d; ++i) m.at(i, i) = 1;
  return m;
}

Matrix multiply(const FiniteField& field, const Matrix& a, const Matrix& b) {
  const unsigned d = a.d;
  Matrix out{d, std::vector<Element>(static_cast<std::size_t>(d) * d, 0)};
  for (unsigned i = 0; i < d; ++i) {
    for (unsigned j = 0; j < d; ++j) {
      Element sum = 0;
      for (unsigned l = 0; l < d; ++l) sum = field.add(sum, field.mul(a.at(i, l), b.at(l, j)));
      out.at(i, j) = sum;
    }
  }
  return out;
}

Matrix scale(const FiniteField& field, const Matrix& m, Element c) {
  Matrix out = m;
  for (auto& x : out.entries) x = field.mul(x, c);
  return out;
}

Element determinant(const FiniteField& field, const Matrix& m) {
  Matrix a = m;
  const unsigned d = a.d;
  Element det = 1;
  for (unsigned col = 0; col < d; ++col) {
    unsigned pivot = col;
    while (pivot < d && a.at(pivot, col) == 0) ++pivot;
    if (pivot == d) return 0;
    if (pivot != col) {
      for (unsigned j = 0; j < d; ++j) std::swap(a.at(pivot, j), a.at(col, j));
      det = field.neg(det);
    }
    det = field.mul(det, a.at(col, col));
    const Element inv = field.inv(a.at(col, col));
    for (unsigned row = col + 1; row < d; ++row) {
      const Element factor = field.mul(a.at(row, col), inv);
      if (factor == 0) continue;
      for (unsigned j = col; j < d; ++j) a.at(row, j) = field.sub(a.at(row, j), field.mul(factor, a.at(col, j)));
    }
  }
  return det;
}

std::optional<Matrix> inverse(const FiniteField& field, const Matrix& m) {
  Matrix a = m;
  Matrix out = identity(m.d);
  const unsigned d = a.d;
  for (unsigned col = 0; col < d; ++col) {
    unsigned pivot = col;
    while (pivot < d && a.at(pivot, col) == 0) ++pivot;
    if (pivot == d) return std::nullopt;
    for (unsigned j = 0; j < d; ++j) {
      std::swap(a.at(pivot, j), a.at(col, j));
      std::swap(out.at(pivot, j), out.at(col, j));
    }
    const Element inv = field.inv(a.at(col, col));
    for (unsigned j = 0; j < d; ++j) {
      a.at(col, j) = field.mul(a.at(col, j), inv);
      out.at(col, j) = field.mul(out.at(col, j), inv);
    }
    for (unsigned row = 0; row < d; ++row) {
      if (row == col || a.at(row, col) == 0) continue;
      const Element factor = a.at(row, col);
      for (unsigned j = 0; j < d; ++j) {
        a.at(row, j) = field.sub(a.at(row, j), field.mul(factor, a.at(col, j)));
        out.at(row, j) = field.sub(out.at(row, j), field.mul(factor, out.at(col, j)));
      }
    }
  }
  return out;
}

ProjectiveMatrix ProjectiveMatrix::canonicalize(const FiniteField& field, const Matrix& m) {
  if (determinant(field, m) == 0) throw DomainError("matrix " + to_string(m) + " is singular");
  return normalize_invertible(field, m);
}

ProjectiveMatrix ProjectiveMatrix::normalize_invertible(const FiniteField& field, Matrix m) {
  Element lead = 0;
  for (const Element x : m.entries) {
    if (x != 0) {
      lead = x;
      break;
    }
  }
  ProjectiveMatrix out;
  out.m_ = lead == 1 ? std::move(m) : scale(field, m, field.inv(lead));
  return out;
}

ProjectiveMatrix multiply(const FiniteField& field, const ProjectiveMatrix& a, const ProjectiveMatrix& b) {
  return ProjectiveMatrix::normalize_invertible(field, multiply(field, a.matrix(), b.matrix()));
}

ProjectiveMatrix inverse(const FiniteField& field, const ProjectiveMatrix& m) {
  return ProjectiveMatrix::normalize_invertible(field, *inverse(field, m.matrix()));
}

std::string to_string(const Matrix& m) {
  std::string out = "[";
  for (unsigned i = 0; i < m.d; ++i) {
    out += i == 0 ? "[" : ",[";
    for (unsigned j = 0; j < m.d; ++j) {
      if (j > 0) out += ',';
      out += std::to_string(m.at(i, j));
    }
    out += ']';
  }
  return out + "]";
}

std::string to_string(const ProjectiveMatrix& m) { return to_string(m.matrix()); }

std::size_t MatrixHash::operator()(const Matrix& m) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (const Element x : m.entries) {
    h ^= x;
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace ramcut::cayley
