#pragma once

// Exact rational scalars and vectors, seeded sampling, and the singular-input
// error used by every formula that divides.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace ybmap {

/// Raised when a formula would divide by an exact zero. The message names the
/// vanishing denominator.
class SingularInput : public std::runtime_error {
 public:
  explicit SingularInput(const std::string& what)
      : std::runtime_error("singular input: " + what) {}
};

/// Arbitrary-precision rational in canonical form: gcd(|p|, q) = 1, q > 0.
class Scalar {
 public:
  Scalar() = default;
  template <std::integral I>
  Scalar(I n) : value_(static_cast<long>(n)) {}  // NOLINT(google-explicit-constructor)
  explicit Scalar(mpq_class q);

  /// Throws std::invalid_argument on a zero denominator.
  static Scalar make(const mpz_class& num, const mpz_class& den);
  /// Accepts "p/q" or "p" (optional leading sign).
  static Scalar parse(std::string_view text);

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& value() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }
  /// Larger of the numerator and denominator bit lengths.
  std::size_t bit_height() const;
  /// Always "p/q", including "0/1" and "3/1".
  std::string str() const;

  Scalar operator-() const { return Scalar(mpq_class(-value_)); }
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  /// Throws SingularInput on division by zero.
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_{0};
};

Scalar make_scalar(long long num, long long den);

/// Division that names its denominator when it vanishes.
Scalar divide(const Scalar& num, const Scalar& den, std::string_view what);
/// Multiplicative inverse; throws SingularInput naming `what` for zero.
Scalar inverse(const Scalar& x, std::string_view what);

/// Fixed-length ordered list of Scalars. Also carries multi-field site values
/// and YB points (a scalar field is a vector of length one).
class RVector {
 public:
  RVector() = default;
  explicit RVector(std::size_t n) : c_(n) {}
  RVector(std::initializer_list<Scalar> init) : c_(init) {}
  explicit RVector(std::vector<Scalar> c) : c_(std::move(c)) {}

  std::size_t size() const { return c_.size(); }
  const Scalar& operator[](std::size_t i) const { return c_[i]; }
  Scalar& operator[](std::size_t i) { return c_[i]; }
  const std::vector<Scalar>& components() const { return c_; }
  auto begin() const { return c_.begin(); }
  auto end() const { return c_.end(); }

  Scalar dot(const RVector& o) const;
  Scalar norm2() const { return dot(*this); }
  bool is_zero() const;
  std::size_t bit_height() const;
  /// "[p/q,p/q,...]"
  std::string str() const;
  static RVector parse(std::string_view text);

  RVector& operator+=(const RVector& o);
  RVector& operator-=(const RVector& o);
  RVector& operator*=(const Scalar& k);
  friend RVector operator+(RVector a, const RVector& b) { return a += b; }
  friend RVector operator-(RVector a, const RVector& b) { return a -= b; }
  friend RVector operator*(const Scalar& k, RVector a) { return a *= k; }
  friend RVector operator*(RVector a, const Scalar& k) { return a *= k; }
  friend bool operator==(const RVector&, const RVector&) = default;

 private:
  std::vector<Scalar> c_;
};

/// Serialization used in reports: a one-component value prints as its scalar,
/// anything longer as a bracketed list.
std::string to_string(const RVector& v);

/// SplitMix64 stream. Identical seeds give identical streams on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), state_(seed) {}

  std::uint64_t seed() const { return seed_; }
  std::uint64_t next();
  /// Uniform integer in [0, bound), bound > 0.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform integer in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi);
  /// Independent child stream for the given index; does not advance this one.
  Rng split(std::uint64_t stream) const;

 private:
  std::uint64_t seed_;
  std::uint64_t state_;
};

inline constexpr int kDefaultHeight = 10;
inline constexpr int kMaxResamples = 100;

/// p/q with |p| <= height, 1 <= q <= height, uniform over canonical pairs.
Scalar sample_scalar(Rng& rng, int height);
RVector sample_vector(Rng& rng, std::size_t n, int height);
/// Inverse stereographic image of a sampled rational w in Q^{n-1}.
RVector sample_unit_vector(Rng& rng, std::size_t n, int height);
/// (2w, |w|^2 - 1) / (|w|^2 + 1)
RVector stereographic_lift(const RVector& w);

}  // namespace ybmap
