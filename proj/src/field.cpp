#include "ybmap/field.hpp"

#include <algorithm>
#include <numeric>

namespace ybmap {

Scalar::Scalar(mpq_class q) : value_(std::move(q)) { value_.canonicalize(); }

Scalar Scalar::make(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::invalid_argument("scalar with zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(std::move(q));
}

Scalar Scalar::parse(std::string_view text) {
  auto slash = text.find('/');
  auto parse_int = [](std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty integer in scalar");
    std::string str(s);
    if (str.front() == '+') str.erase(0, 1);
    mpz_class z;
    if (z.set_str(str, 10) != 0) throw std::invalid_argument("bad integer '" + std::string(s) + "'");
    return z;
  };
  if (slash == std::string_view::npos) return make(parse_int(text), 1);
  return make(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::size_t Scalar::bit_height() const {
  auto bits = [](const mpz_class& z) -> std::size_t {
    return z == 0 ? 0 : mpz_sizeinbase(z.get_mpz_t(), 2);
  };
  return std::max(bits(value_.get_num()), bits(value_.get_den()));
}

std::string Scalar::str() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Scalar& Scalar::operator+=(const Scalar& o) {
  value_ += o.value_;
  return *this;
}
Scalar& Scalar::operator-=(const Scalar& o) {
  value_ -= o.value_;
  return *this;
}
Scalar& Scalar::operator*=(const Scalar& o) {
  value_ *= o.value_;
  return *this;
}
Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw SingularInput("division by zero");
  value_ /= o.value_;
  return *this;
}

Scalar make_scalar(long long num, long long den) {
  return Scalar::make(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
}

Scalar divide(const Scalar& num, const Scalar& den, std::string_view what) {
  if (den.is_zero()) throw SingularInput(std::string(what) + " = 0");
  return num / den;
}

Scalar inverse(const Scalar& x, std::string_view what) { return divide(Scalar(1), x, what); }

Scalar RVector::dot(const RVector& o) const {
  if (o.size() != size()) throw std::invalid_argument("vector length mismatch");
  Scalar s;
  for (std::size_t i = 0; i < c_.size(); ++i) s += c_[i] * o.c_[i];
  return s;
}

bool RVector::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Scalar& s) { return s.is_zero(); });
}

std::size_t RVector::bit_height() const {
  std::size_t h = 0;
  for (const auto& s : c_) h = std::max(h, s.bit_height());
  return h;
}

std::string RVector::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) out += ',';
    out += c_[i].str();
  }
  return out + "]";
}

RVector RVector::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.size() < 2 || text.front() != '[' || text.back() != ']')
    throw std::invalid_argument("vector must be bracketed");
  text = text.substr(1, text.size() - 2);
  std::vector<Scalar> out;
  while (!text.empty()) {
    auto comma = text.find(',');
    out.push_back(Scalar::parse(trim(text.substr(0, comma))));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  if (out.empty()) throw std::invalid_argument("empty vector");
  return RVector(std::move(out));
}

RVector& RVector::operator+=(const RVector& o) {
  if (o.size() != size()) throw std::invalid_argument("vector length mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}
RVector& RVector::operator-=(const RVector& o) {
  if (o.size() != size()) throw std::invalid_argument("vector length mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}
RVector& RVector::operator*=(const Scalar& k) {
  for (auto& s : c_) s *= k;
  return *this;
}

std::string to_string(const RVector& v) { return v.size() == 1 ? v[0].str() : v.str(); }

// SplitMix64 (Steele, Lea, Flood).
std::uint64_t Rng::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Rng::below with zero bound");
  // Rejection keeps the draw exactly uniform.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t r;
  do r = next();
  while (r >= limit);
  return r % bound;
}

std::int64_t Rng::between(std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

Rng Rng::split(std::uint64_t stream) const {
  Rng mixer(seed_ ^ (0xD1B54A32D192ED03ULL * (stream + 1)));
  return Rng(mixer.next());
}

Scalar sample_scalar(Rng& rng, int height) {
  if (height < 1) throw std::invalid_argument("height must be >= 1");
  for (;;) {
    long p = rng.between(-height, height);
    long q = rng.between(1, height);
    if (std::gcd(p < 0 ? -p : p, q) == 1) return Scalar::make(p, q);
  }
}

RVector sample_vector(Rng& rng, std::size_t n, int height) {
  RVector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = sample_scalar(rng, height);
  return v;
}

RVector stereographic_lift(const RVector& w) {
  const Scalar s = w.norm2();
  const Scalar denom = s + 1;  // >= 1 over the rationals
  RVector v(w.size() + 1);
  for (std::size_t i = 0; i < w.size(); ++i) v[i] = 2 * w[i] / denom;
  v[w.size()] = (s - 1) / denom;
  return v;
}

RVector sample_unit_vector(Rng& rng, std::size_t n, int height) {
  if (n < 2) throw std::invalid_argument("unit vectors need n >= 2");
  return stereographic_lift(sample_vector(rng, n - 1, height));
}

}  // namespace ybmap
