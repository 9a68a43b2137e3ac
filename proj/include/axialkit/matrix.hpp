#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "axialkit/rational.hpp"

namespace axialkit {

using RatVector = std::vector<Rational>;

RatVector zero_vector(std::size_t n);
RatVector unit_vector(std::size_t n, std::size_t i);
RatVector parse_vector(std::initializer_list<long> values);
bool is_zero(std::span<const Rational> v);
RatVector operator+(const RatVector& a, const RatVector& b);
RatVector operator-(const RatVector& a, const RatVector& b);
RatVector operator*(const Rational& s, const RatVector& v);
// y += s * x
void axpy(RatVector& y, const Rational& s, std::span<const Rational> x);
Rational dot(std::span<const Rational> a, std::span<const Rational> b);
std::vector<std::string> to_strings(std::span<const Rational> v);

// Dense row-major matrix of rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RatMatrix identity(std::size_t n);
  static RatMatrix from_rows(std::span<const RatVector> rows, std::size_t cols);
  static RatMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);
  static RatMatrix from_columns(std::span<const RatVector> columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  RatVector row_vector(std::size_t r) const;
  RatVector column(std::size_t c) const;
  std::vector<RatVector> row_vectors() const;

  void swap_rows(std::size_t a, std::size_t b);
  void append_row(std::span<const Rational> values);

  RatMatrix transpose() const;
  RatVector apply(std::span<const Rational> v) const;
  bool is_identity() const;
  bool is_symmetric() const;
  bool is_zero() const;

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
  friend bool operator==(const RatMatrix& a, const RatMatrix& b) = default;

  std::size_t hash() const;
  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct RatMatrixHash {
  std::size_t operator()(const RatMatrix& m) const { return m.hash(); }
};

struct RatVectorHash {
  std::size_t operator()(const RatVector& v) const;
};

}  // namespace axialkit
