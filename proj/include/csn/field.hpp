#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace csn {

using FieldElement = std::uint32_t;
using Matrix = std::vector<std::vector<FieldElement>>;

// Arithmetic modulo a prime q. Elements are canonical residues in [0, q).
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t q);  // throws InvalidField unless q is prime

  std::uint32_t q() const { return q_; }

  FieldElement add(FieldElement a, FieldElement b) const { return (a + b) % q_; }
  FieldElement sub(FieldElement a, FieldElement b) const { return (a + q_ - b) % q_; }
  FieldElement mul(FieldElement a, FieldElement b) const {
    return static_cast<FieldElement>(static_cast<std::uint64_t>(a) * b % q_);
  }
  FieldElement neg(FieldElement a) const { return (q_ - a) % q_; }
  FieldElement inv(FieldElement a) const;  // throws on zero
  FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }
  FieldElement reduce(std::int64_t v) const;

  std::size_t rank(Matrix m) const;

  // x with m * x = b, or nullopt when the system is inconsistent. Free
  // variables are set to zero.
  std::optional<std::vector<FieldElement>> solve(const Matrix& m, const std::vector<FieldElement>& b) const;

  Matrix multiply(const Matrix& a, const Matrix& b) const;

 private:
  std::uint32_t q_;
};

bool is_prime(std::uint32_t q);

Matrix transpose(const Matrix& m);

}  // namespace csn
