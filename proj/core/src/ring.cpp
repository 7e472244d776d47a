#include "diaghom/ring.hpp"

#include <algorithm>
#include <cctype>

namespace diaghom {

bool is_prime(const Int& m) {
  if (m < 2) return false;
  return mpz_probab_prime_p(m.get_mpz_t(), 40) != 0;  // 40 rounds: exact far beyond desk scale
}

RingSpec RingSpec::integers_mod(const Int& m) {
  require(m >= 2, Errc::BadArgument, "modulus must be >= 2");
  return {RingKind::IntegersMod, m};
}

RingSpec RingSpec::parse(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(static_cast<char>(std::tolower(c)));
  if (t == "z") return integers();
  if (t == "q") return rationals();
  if (t.size() > 1 && t[0] == 'z') {
    const std::string digits = t.substr(1);
    if (std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      return integers_mod(Int(digits));
  }
  fail(Errc::BadArgument, "unrecognized ring '" + text + "' (expected z, q, or z<m>)");
}

std::string RingSpec::to_string() const {
  switch (kind) {
    case RingKind::Integers: return "z";
    case RingKind::Rationals: return "q";
    case RingKind::IntegersMod: return "z" + modulus.get_str();
  }
  return "?";
}

bool RingSpec::is_field() const {
  return kind == RingKind::Rationals || (kind == RingKind::IntegersMod && is_prime(modulus));
}

Scalar::Scalar(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) {
  require(den_ != 0, Errc::BadArgument, "zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  Int g = gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
  if (num_ == 0) den_ = 1;
}

bool Scalar::operator<(const Scalar& o) const {
  // Compare as rationals: a/b < c/d  <=>  a*d < c*b (b, d > 0).
  return num_ * o.den_ < o.num_ * den_;
}

std::string Scalar::to_string() const {
  if (den_ == 1) return num_.get_str();
  return num_.get_str() + "/" + den_.get_str();
}

Ring::Ring(RingSpec spec) : spec_(std::move(spec)), is_field_(spec_.is_field()) {
  if (spec_.kind == RingKind::IntegersMod)
    require(spec_.modulus >= 2, Errc::BadArgument, "modulus must be >= 2");
}

Scalar Ring::reduce(Int n, Int d) const {
  switch (spec_.kind) {
    case RingKind::Rationals: return Scalar(std::move(n), std::move(d));
    case RingKind::Integers:
      require(d == 1, Errc::BadArgument, "non-integer scalar over z");
      return Scalar(std::move(n));
    case RingKind::IntegersMod: {
      require(d == 1, Errc::BadArgument, "non-integer scalar over z/m");
      Int r = n % spec_.modulus;
      if (r < 0) r += spec_.modulus;
      return Scalar(std::move(r));
    }
  }
  fail(Errc::BadArgument, "bad ring kind");
}

Scalar Ring::from_int(long v) const { return reduce(Int(v), 1); }
Scalar Ring::from_integer(const Int& v) const { return reduce(v, 1); }

Scalar Ring::parse(const std::string& text) const {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return reduce(Int(text), 1);
    Int n(text.substr(0, slash)), d(text.substr(slash + 1));
    require(spec_.kind == RingKind::Rationals, Errc::BadArgument,
            "fractional literal '" + text + "' only valid over q");
    return reduce(std::move(n), std::move(d));
  } catch (const std::invalid_argument&) {
    fail(Errc::BadArgument, "bad scalar literal '" + text + "'");
  }
}

Scalar Ring::add(const Scalar& a, const Scalar& b) const {
  return reduce(a.num() * b.den() + b.num() * a.den(), a.den() * b.den());
}

Scalar Ring::sub(const Scalar& a, const Scalar& b) const {
  return reduce(a.num() * b.den() - b.num() * a.den(), a.den() * b.den());
}

Scalar Ring::mul(const Scalar& a, const Scalar& b) const {
  return reduce(a.num() * b.num(), a.den() * b.den());
}

Scalar Ring::neg(const Scalar& a) const { return reduce(-a.num(), a.den()); }

std::optional<Scalar> Ring::invert(const Scalar& a) const {
  if (a.is_zero()) return std::nullopt;
  switch (spec_.kind) {
    case RingKind::Rationals: return Scalar(a.den(), a.num());
    case RingKind::Integers:
      if (a.num() == 1 || a.num() == -1) return a;
      return std::nullopt;
    case RingKind::IntegersMod: {
      Int inv;
      if (mpz_invert(inv.get_mpz_t(), a.num().get_mpz_t(), spec_.modulus.get_mpz_t()) == 0)
        return std::nullopt;
      return Scalar(std::move(inv));
    }
  }
  return std::nullopt;
}

Scalar Ring::div_exact(const Scalar& a, const Scalar& b) const {
  require(!b.is_zero(), Errc::NotInvertible, "division by zero");
  if (auto inv = invert(b)) return mul(a, *inv);
  // Non-unit exact division (Z or Z/m): quotient must exist.
  require(spec_.kind != RingKind::Rationals, Errc::NotInvertible, "unreachable");
  if (spec_.kind == RingKind::Integers) {
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.num().get_mpz_t(), b.num().get_mpz_t());
    require(r == 0, Errc::NotInvertible, b.to_string() + " does not divide " + a.to_string());
    return Scalar(std::move(q));
  }
  // Z/m: solve b*x = a; exists iff gcd(b, m) divides a.
  Int g = gcd(b.num(), spec_.modulus);
  require(a.num() % g == 0, Errc::NotInvertible,
          "no exact quotient of " + a.to_string() + " by " + b.to_string());
  Int m2 = spec_.modulus / g, b2 = b.num() / g, a2 = a.num() / g, inv;
  if (m2 == 1) return Scalar(0);
  mpz_invert(inv.get_mpz_t(), b2.get_mpz_t(), m2.get_mpz_t());
  return reduce(a2 * inv, 1);
}

Scalar Ring::pow(const Scalar& a, long e) const {
  require(e >= 0, Errc::BadArgument, "negative exponent");
  Scalar acc = one();
  for (long i = 0; i < e; ++i) acc = mul(acc, a);
  return acc;
}

}  // namespace diaghom
