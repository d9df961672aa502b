#include "csn/field.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "csn/error.hpp"

namespace csn {

bool is_prime(std::uint32_t q) {
  if (q < 2) return false;
  for (std::uint32_t p = 2; static_cast<std::uint64_t>(p) * p <= q; ++p) {
    if (q % p == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t q) : q_(q) {
  if (!is_prime(q)) throw Error(ErrorCode::InvalidField, std::to_string(q) + " is not prime");
  if (q > 65521) throw Error(ErrorCode::InvalidField, "modulus too large for 32-bit products");
}

FieldElement PrimeField::inv(FieldElement a) const {
  if (a % q_ == 0) throw std::domain_error("inverse of zero");
  // Fermat: a^(q-2).
  std::uint64_t result = 1;
  std::uint64_t base = a % q_;
  for (std::uint32_t e = q_ - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % q_;
    base = base * base % q_;
  }
  return static_cast<FieldElement>(result);
}

FieldElement PrimeField::reduce(std::int64_t v) const {
  const std::int64_t q = q_;
  return static_cast<FieldElement>(((v % q) + q) % q);
}

std::size_t PrimeField::rank(Matrix m) const {
  std::size_t r = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[r], m[pivot]);
    const FieldElement scale = inv(m[r][c]);
    for (auto& v : m[r]) v = mul(v, scale);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const FieldElement f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] = sub(m[i][j], mul(f, m[r][j]));
    }
    ++r;
  }
  return r;
}

std::optional<std::vector<FieldElement>> PrimeField::solve(const Matrix& m, const std::vector<FieldElement>& b) const {
  const std::size_t rows = m.size();
  if (b.size() != rows) throw std::invalid_argument("solve: dimension mismatch");
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  Matrix aug = m;
  for (std::size_t i = 0; i < rows; ++i) aug[i].push_back(b[i] % q_);

  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && aug[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(aug[r], aug[pivot]);
    const FieldElement scale = inv(aug[r][c]);
    for (auto& v : aug[r]) v = mul(v, scale);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || aug[i][c] == 0) continue;
      const FieldElement f = aug[i][c];
      for (std::size_t j = 0; j <= cols; ++j) aug[i][j] = sub(aug[i][j], mul(f, aug[r][j]));
    }
    pivot_cols.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (aug[i][cols] != 0) return std::nullopt;
  }
  std::vector<FieldElement> x(cols, 0);
  for (std::size_t i = 0; i < r; ++i) x[pivot_cols[i]] = aug[i][cols];
  return x;
}

Matrix PrimeField::multiply(const Matrix& a, const Matrix& b) const {
  const std::size_t inner = b.size();
  const std::size_t cols = inner == 0 ? 0 : b[0].size();
  Matrix out(a.size(), std::vector<FieldElement>(cols, 0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != inner) throw std::invalid_argument("multiply: dimension mismatch");
    for (std::size_t t = 0; t < inner; ++t) {
      if (a[i][t] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) out[i][j] = add(out[i][j], mul(a[i][t], b[t][j]));
    }
  }
  return out;
}

Matrix transpose(const Matrix& m) {
  if (m.empty()) return {};
  Matrix t(m[0].size(), std::vector<FieldElement>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  }
  return t;
}

}  // namespace csn
