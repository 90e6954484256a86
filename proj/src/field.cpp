#include "qweyl/field.hpp"

#include <charconv>
#include <vector>

namespace qweyl {

namespace detail {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1;
  }
  return result;
}

}  // namespace detail

namespace {

using detail::mul_mod;
using detail::pow_mod;

static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));

bool is_prime(std::uint64_t n) {
  mpz_class z(static_cast<unsigned long>(n));
  return mpz_probab_prime_p(z.get_mpz_t(), 40) > 0;
}

std::uint64_t reduce(const mpz_class& value, std::uint64_t p) {
  return mpz_fdiv_ui(value.get_mpz_t(), static_cast<unsigned long>(p));
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  return pow_mod(a, p - 2, p);
}

// Euler's criterion.
bool is_residue(std::uint64_t a, std::uint64_t p) {
  return a == 0 || pow_mod(a, (p - 1) / 2, p) == 1;
}

std::optional<std::uint64_t> tonelli_shanks(std::uint64_t a, std::uint64_t p) {
  if (a == 0) return 0;
  if (!is_residue(a, p)) return std::nullopt;
  if (p % 4 == 3) return pow_mod(a, (p + 1) / 4, p);
  std::uint64_t odd = p - 1;
  unsigned s = 0;
  while ((odd & 1) == 0) {
    odd >>= 1;
    ++s;
  }
  std::uint64_t z = 2;
  while (is_residue(z, p)) ++z;
  std::uint64_t c = pow_mod(z, odd, p);
  std::uint64_t r = pow_mod(a, (odd + 1) / 2, p);
  std::uint64_t t = pow_mod(a, odd, p);
  unsigned m = s;
  while (t != 1) {
    unsigned i = 0;
    std::uint64_t t2 = t;
    while (t2 != 1) {
      t2 = mul_mod(t2, t2, p);
      ++i;
    }
    std::uint64_t b = c;
    for (unsigned j = 0; j + i + 1 < m; ++j) b = mul_mod(b, b, p);
    r = mul_mod(r, b, p);
    c = mul_mod(b, b, p);
    t = mul_mod(t, c, p);
    m = i;
  }
  return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p == 2) throw Error(ErrorCode::CharacteristicTwo, "fields of characteristic 2 are not supported");
  if (p < 2 || !is_prime(p)) {
    throw Error(ErrorCode::InvalidModulus, "modulus " + std::to_string(p) + " is not an odd prime");
  }
  return FieldSpec(p);
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "q" || text == "Q") return rationals();
  if (text.starts_with("fp:")) {
    auto digits = text.substr(3);
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty()) {
      throw Error(ErrorCode::InvalidArgument, "bad field modulus '" + std::string(digits) + "'");
    }
    return prime(p);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown field '" + std::string(text) + "' (expected q or fp:<p>)");
}

std::string FieldSpec::name() const {
  return is_rational() ? "q" : "fp:" + std::to_string(modulus_);
}

Scalar::Scalar(const FieldSpec& field, long value) : field_(field) {
  if (field.is_rational()) {
    value_ = mpq_class(value);
  } else {
    auto p = static_cast<__int128>(field.modulus());
    auto r = static_cast<__int128>(value) % p;
    value_ = static_cast<std::uint64_t>(r < 0 ? r + p : r);
  }
}

Scalar::Scalar(const FieldSpec& field, const mpz_class& value) : field_(field) {
  if (field.is_rational()) {
    value_ = mpq_class(value);
  } else {
    value_ = reduce(value, field.modulus());
  }
}

Scalar::Scalar(const FieldSpec& field, const mpz_class& num, const mpz_class& den) : field_(field) {
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  if (field.is_rational()) {
    mpq_class v(num, den);
    v.canonicalize();
    value_ = v;
  } else {
    std::uint64_t d = reduce(den, field.modulus());
    if (d == 0) throw Error(ErrorCode::DivisionByZero, "denominator vanishes mod p");
    value_ = mul_mod(reduce(num, field.modulus()), inv_mod(d, field.modulus()), field.modulus());
  }
}

Scalar::Scalar(const mpq_class& value) : field_(FieldSpec::rationals()), value_(value) {
  std::get<mpq_class>(value_).canonicalize();
}

Scalar Scalar::parse(const FieldSpec& field, std::string_view text) {
  auto fail = [&](const std::string& why) {
    return Error(ErrorCode::FieldLiteralError, "bad literal '" + std::string(text) + "': " + why);
  };
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  auto all_digits = [](std::string_view s) {
    return !s.empty() && s.find_first_not_of("0123456789") == std::string_view::npos;
  };
  if (!all_digits(num)) throw fail("expected digits");
  if (slash != std::string_view::npos && !all_digits(den)) throw fail("expected digits after '/'");
  mpz_class n{std::string(num)};
  if (negative) n = -n;
  if (field.is_rational()) {
    mpz_class d = slash == std::string_view::npos ? mpz_class(1) : mpz_class(std::string(den));
    if (d == 0) throw fail("zero denominator");
    return Scalar(field, n, d);
  }
  if (slash != std::string_view::npos) throw fail("fractions are not residue literals");
  if (negative) throw fail("residue literals are non-negative");
  if (n >= mpz_class(static_cast<unsigned long>(field.modulus()))) throw fail("residue out of range [0, p)");
  return Scalar(field, n);
}

bool Scalar::is_zero() const noexcept {
  if (auto* r = std::get_if<std::uint64_t>(&value_)) return *r == 0;
  return std::get<mpq_class>(value_) == 0;
}

bool Scalar::is_one() const noexcept {
  if (auto* r = std::get_if<std::uint64_t>(&value_)) return *r == 1;
  return std::get<mpq_class>(value_) == 1;
}

const mpq_class& Scalar::rational() const {
  if (!field_.is_rational()) throw Error(ErrorCode::FieldMismatch, "not a rational scalar");
  return std::get<mpq_class>(value_);
}

std::uint64_t Scalar::residue() const {
  if (field_.is_rational()) throw Error(ErrorCode::FieldMismatch, "not a residue scalar");
  return std::get<std::uint64_t>(value_);
}

void Scalar::check_same_field(const Scalar& other) const {
  if (!(field_ == other.field_)) {
    throw Error(ErrorCode::FieldMismatch, "scalars from " + field_.name() + " and " + other.field_.name());
  }
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  if (auto* r = std::get_if<std::uint64_t>(&out.value_)) {
    if (*r != 0) *r = field_.modulus() - *r;
  } else {
    std::get<mpq_class>(out.value_) = -std::get<mpq_class>(value_);
  }
  return out;
}

Scalar Scalar::inv() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  Scalar out = *this;
  if (auto* r = std::get_if<std::uint64_t>(&out.value_)) {
    *r = inv_mod(*r, field_.modulus());
  } else {
    mpq_class v = 1 / std::get<mpq_class>(value_);
    v.canonicalize();
    std::get<mpq_class>(out.value_) = v;
  }
  return out;
}

Scalar Scalar::pow(long exponent) const {
  if (exponent < 0) return inv().pow(-exponent);
  Scalar result = one(field_);
  Scalar base = *this;
  auto e = static_cast<unsigned long>(exponent);
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  check_same_field(rhs);
  if (auto* r = std::get_if<std::uint64_t>(&value_)) {
    std::uint64_t p = field_.modulus();
    std::uint64_t s = std::get<std::uint64_t>(rhs.value_);
    *r = (*r >= p - s) ? *r - (p - s) : *r + s;
  } else {
    std::get<mpq_class>(value_) += std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) { return *this += -rhs; }

Scalar& Scalar::operator*=(const Scalar& rhs) {
  check_same_field(rhs);
  if (auto* r = std::get_if<std::uint64_t>(&value_)) {
    *r = mul_mod(*r, std::get<std::uint64_t>(rhs.value_), field_.modulus());
  } else {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  check_same_field(rhs);
  return *this *= rhs.inv();
}

bool operator==(const Scalar& a, const Scalar& b) {
  return a.field_ == b.field_ && a.value_ == b.value_;
}

std::string Scalar::str() const {
  if (auto* r = std::get_if<std::uint64_t>(&value_)) return std::to_string(*r);
  return std::get<mpq_class>(value_).get_str();
}

std::optional<Scalar> square_root(const Scalar& x) {
  const FieldSpec& f = x.field();
  if (f.is_rational()) {
    const mpq_class& v = x.rational();
    if (v < 0) return std::nullopt;
    mpz_class num = v.get_num(), den = v.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
      return std::nullopt;
    }
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return Scalar(f, rn, rd);
  }
  const std::uint64_t p = f.modulus();
  const std::uint64_t a = x.residue();
  std::optional<std::uint64_t> root;
  if (p < 10000) {
    for (std::uint64_t s = 0; s <= p / 2; ++s) {
      if (s * s % p == a) {
        root = s;
        break;
      }
    }
  } else {
    root = tonelli_shanks(a, p);
  }
  if (root.has_value() != is_residue(a, p) || (root && mul_mod(*root, *root, p) != a)) {
    throw Error(ErrorCode::Internal, "square root disagrees with Euler's criterion");
  }
  if (!root) return std::nullopt;
  std::uint64_t r = std::min(*root, (p - *root) % p);
  return Scalar(f, mpz_class(static_cast<unsigned long>(r)));
}

std::optional<std::uint64_t> multiplicative_order(const Scalar& q) {
  if (q.is_zero()) throw Error(ErrorCode::ZeroInput, "multiplicative order of zero");
  const FieldSpec& f = q.field();
  if (f.is_rational()) {
    if (q.is_one()) return 1;
    if ((-q).is_one()) return 2;
    return std::nullopt;
  }
  const std::uint64_t p = f.modulus();
  const std::uint64_t a = q.residue();
  std::uint64_t order = p - 1;
  for (std::uint64_t prime : prime_factors(p - 1)) {
    while (order % prime == 0 && pow_mod(a, order / prime, p) == 1) order /= prime;
  }
  return order;
}

Scalar q_int(unsigned n, const Scalar& q) {
  Scalar sum = Scalar::zero(q.field());
  Scalar term = Scalar::one(q.field());
  for (unsigned i = 0; i < n; ++i) {
    sum += term;
    term *= q;
  }
  return sum;
}

}  // namespace qweyl
