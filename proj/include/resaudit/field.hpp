// Coefficient fields: exact rationals (GMP-backed) and prime fields F_p,
// p < 2^31. All arithmetic is exact; there is no floating point anywhere.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace resaudit {

class Field;

/// One coefficient. Storage only; arithmetic goes through the owning Field
/// so residues stay reduced and rationals stay canonical.
class Scalar {
 public:
  Scalar() = default;
  bool operator==(const Scalar& o) const { return r_ == o.r_ && q_ == o.q_; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

 private:
  friend class Field;
  mpq_class q_;       // active over Q
  std::uint64_t r_ = 0;  // active over F_p, value in [0, p)
};

class Field {
 public:
  Field() : p_(0) {}
  static Field rationals() { return Field(); }
  /// Throws std::invalid_argument unless p is a prime below 2^31.
  static Field prime_field(std::uint32_t p);

  bool is_rational() const { return p_ == 0; }
  std::uint32_t characteristic() const { return p_; }
  bool operator==(const Field& o) const { return p_ == o.p_; }
  bool operator!=(const Field& o) const { return p_ != o.p_; }

  Scalar zero() const { return Scalar(); }
  Scalar one() const { return from_int(1); }
  Scalar from_int(long v) const;
  /// a/b with exact reduction; b must be invertible (nonzero, and nonzero mod p).
  Scalar from_fraction(const mpz_class& num, const mpz_class& den) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;  // throws on zero
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

  bool is_zero(const Scalar& a) const;
  bool is_one(const Scalar& a) const;
  std::string str(const Scalar& a) const;

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_;
};

/// Deterministic Miller-Rabin, valid for all n < 2^31.
bool is_prime_u32(std::uint32_t n);

}  // namespace resaudit
