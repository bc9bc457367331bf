#pragma once

#include "ramcut/cayley/field.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace ramcut::cayley {

/// Dense d x d matrix over F_q, row-major.
struct Matrix {
  unsigned d = 0;
  std::vector<Element> entries;

  Element at(unsigned row, unsigned col) const { return entries[row * d + col]; }
  Element& at(unsigned row, unsigned col) { return entries[row * d + col]; }

  auto operator<=>(const Matrix&) const = default;
};

Matrix identity(unsigned d);
Matrix multiply(const FiniteField& field, const Matrix& a, const Matrix& b);
Matrix scale(const FiniteField& field, const Matrix& m, Element c);
Element determinant(const FiniteField& field, const Matrix& m);
/// Empty when m is singular.
std::optional<Matrix> inverse(const FiniteField& field, const Matrix& m);

/// Representative of a scalar class in PGL_d(F_q): the first nonzero entry in
/// row-major order is 1.
class ProjectiveMatrix {
 public:
  /// Throws DomainError if m is singular.
  static ProjectiveMatrix canonicalize(const FiniteField& field, const Matrix& m);
  /// Skips the determinant; the caller guarantees m is invertible.
  static ProjectiveMatrix normalize_invertible(const FiniteField& field, Matrix m);

  const Matrix& matrix() const noexcept { return m_; }
  unsigned d() const noexcept { return m_.d; }

  auto operator<=>(const ProjectiveMatrix&) const = default;

 private:
  Matrix m_;
};

ProjectiveMatrix multiply(const FiniteField& field, const ProjectiveMatrix& a, const ProjectiveMatrix& b);
ProjectiveMatrix inverse(const FiniteField& field, const ProjectiveMatrix& m);

/// "[[a,b],[c,d]]" with integer-encoded entries.
std::string to_string(const Matrix& m);
std::string to_string(const ProjectiveMatrix& m);

struct MatrixHash {
  std::size_t operator()(const Matrix& m) const noexcept;
  std::size_t operator()(const ProjectiveMatrix& m) const noexcept { return (*this)(m.matrix()); }
};

}  // namespace ramcut::cayley
