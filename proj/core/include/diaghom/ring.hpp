#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "diaghom/error.hpp"

namespace diaghom {

using Int = mpz_class;

enum class RingKind { Integers, IntegersMod, Rationals };

// Coefficient ring descriptor: Z, Z/m (m >= 2), or Q.
struct RingSpec {
  RingKind kind = RingKind::Integers;
  Int modulus = 0;  // only for IntegersMod

  static RingSpec integers() { return {RingKind::Integers, 0}; }
  static RingSpec rationals() { return {RingKind::Rationals, 0}; }
  static RingSpec integers_mod(const Int& m);
  // Accepts "z", "q", "z<m>" (e.g. "z2", "z12"), case-insensitive.
  static RingSpec parse(const std::string& text);

  bool operator==(const RingSpec& o) const { return kind == o.kind && modulus == o.modulus; }
  std::string to_string() const;
  bool is_field() const;  // Q, or Z/p with p prime
};

// Exact scalar: num/den with den > 0 and gcd(num, den) == 1.
// den == 1 always for Integers and IntegersMod; residues lie in [0, m).
class Scalar {
 public:
  Scalar() : num_(0), den_(1) {}
  explicit Scalar(Int n) : num_(std::move(n)), den_(1) {}
  Scalar(Int n, Int d);  // normalizes; d must be nonzero

  const Int& num() const { return num_; }
  const Int& den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  bool operator==(const Scalar& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }
  bool operator<(const Scalar& o) const;  // order for deterministic containers

  // Decimal string; "p/q" when den != 1.
  std::string to_string() const;

 private:
  Int num_, den_;
};

// Arithmetic context for a RingSpec. All Scalar arithmetic goes through
// here so IntegersMod values stay reduced and Rationals stay canonical.
class Ring {
 public:
  explicit Ring(RingSpec spec);

  const RingSpec& spec() const { return spec_; }
  RingKind kind() const { return spec_.kind; }
  const Int& modulus() const { return spec_.modulus; }
  bool is_field() const { return is_field_; }

  Scalar zero() const { return Scalar(); }
  Scalar one() const { return from_int(1); }
  Scalar from_int(long v) const;
  Scalar from_integer(const Int& v) const;
  // Accepts integer or "p/q" literals; rationals only over Q.
  Scalar parse(const std::string& text) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  // Unit inverse; nullopt when a is not invertible in the ring.
  std::optional<Scalar> invert(const Scalar& a) const;
  // Exact division a / b; fails when b does not divide a in the ring.
  Scalar div_exact(const Scalar& a, const Scalar& b) const;
  Scalar pow(const Scalar& a, long e) const;  // e >= 0; a^0 == 1 always

  bool is_zero(const Scalar& a) const { return a.is_zero(); }
  bool is_one(const Scalar& a) const { return a == one(); }

 private:
  Scalar reduce(Int n, Int d) const;
  RingSpec spec_;
  bool is_field_;
};

// Spec-level op name: unit inverse in the ring.
inline std::optional<Scalar> scalar_invert(const Scalar& s, const RingSpec& ring) {
  return Ring(ring).invert(s);
}

bool is_prime(const Int& m);

}  // namespace diaghom
