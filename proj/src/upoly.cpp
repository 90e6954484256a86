#include "qweyl/upoly.hpp"

#include <algorithm>
#include <numeric>

namespace qweyl {

UPoly::UPoly(const FieldSpec& field, std::vector<Scalar> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {
  for (const Scalar& c : coeffs_) {
    if (!(c.field() == field_)) throw Error(ErrorCode::FieldMismatch, "coefficient field mismatch");
  }
  trim();
}

UPoly UPoly::constant(const Scalar& c) { return UPoly(c.field(), {c}); }

UPoly UPoly::monomial(const Scalar& c, unsigned exponent) {
  std::vector<Scalar> v(exponent + 1, Scalar::zero(c.field()));
  v[exponent] = c;
  return UPoly(c.field(), std::move(v));
}

void UPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::optional<unsigned> UPoly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return static_cast<unsigned>(coeffs_.size() - 1);
}

Scalar UPoly::coeff(unsigned exponent) const {
  return exponent < coeffs_.size() ? coeffs_[exponent] : Scalar::zero(field_);
}

const Scalar& UPoly::lead() const {
  if (coeffs_.empty()) throw Error(ErrorCode::ZeroInput, "leading coefficient of zero polynomial");
  return coeffs_.back();
}

UPoly UPoly::operator-() const {
  UPoly out = *this;
  for (Scalar& c : out.coeffs_) c = -c;
  return out;
}

UPoly& UPoly::operator+=(const UPoly& rhs) {
  if (!(field_ == rhs.field_)) throw Error(ErrorCode::FieldMismatch, "polynomial field mismatch");
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Scalar::zero(field_));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& rhs) { return *this += -rhs; }

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (!(a.field_ == b.field_)) throw Error(ErrorCode::FieldMismatch, "polynomial field mismatch");
  if (a.is_zero() || b.is_zero()) return UPoly(a.field_);
  std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar::zero(a.field_));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UPoly(a.field_, std::move(out));
}

UPoly UPoly::scaled(const Scalar& c) const {
  UPoly out = *this;
  for (Scalar& x : out.coeffs_) x *= c;
  out.trim();
  return out;
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& num, const UPoly& den) {
  if (den.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  UPoly rem = num;
  const std::size_t dd = den.coeffs_.size() - 1;
  if (rem.coeffs_.size() <= dd) return {UPoly(num.field_), rem};
  std::vector<Scalar> quot(rem.coeffs_.size() - dd, Scalar::zero(num.field_));
  const Scalar lead_inv = den.lead().inv();
  for (std::size_t k = rem.coeffs_.size(); k-- > dd;) {
    Scalar c = rem.coeffs_[k] * lead_inv;
    if (c.is_zero()) continue;
    quot[k - dd] = c;
    for (std::size_t j = 0; j <= dd; ++j) rem.coeffs_[k - dd + j] -= c * den.coeffs_[j];
  }
  rem.trim();
  return {UPoly(num.field_, std::move(quot)), rem};
}

std::optional<UPoly> UPoly::exact_quotient(const UPoly& num, const UPoly& den) {
  auto [q, r] = divmod(num, den);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(lead().inv());
}

UPoly UPoly::dilated(const Scalar& lambda) const {
  UPoly out = *this;
  Scalar power = Scalar::one(field_);
  for (Scalar& c : out.coeffs_) {
    c *= power;
    power *= lambda;
  }
  out.trim();
  return out;
}

Scalar UPoly::eval(const Scalar& at) const {
  Scalar acc = Scalar::zero(field_);
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * at + coeffs_[i];
  return acc;
}

std::string UPoly::str(char var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Scalar& c = coeffs_[i];
    if (c.is_zero()) continue;
    std::string cs = c.str();
    bool negative = cs.front() == '-';
    if (negative) cs.erase(0, 1);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string mono;
    if (i >= 1) mono += var;
    if (i >= 2) mono += "^" + std::to_string(i);
    if (mono.empty()) {
      out += cs;
    } else if (cs == "1") {
      out += mono;
    } else {
      out += cs + "*" + mono;
    }
  }
  return out;
}

UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = UPoly::divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

namespace {

// Enumerates monic polynomials of each degree up to n/2 and tests division.
FactorSearch find_factor_prime_field(const UPoly& f, std::uint64_t budget) {
  const FieldSpec& field = f.field();
  const std::uint64_t p = field.modulus();
  const unsigned n = *f.degree();
  std::uint64_t spent = 0;
  for (unsigned d = 1; d <= n / 2; ++d) {
    std::vector<std::uint64_t> digits(d, 0);
    while (true) {
      if (++spent > budget) return {FactorSearch::Outcome::Inconclusive, std::nullopt};
      std::vector<Scalar> coeffs;
      coeffs.reserve(d + 1);
      for (std::uint64_t v : digits) coeffs.emplace_back(field, mpz_class(static_cast<unsigned long>(v)));
      coeffs.push_back(Scalar::one(field));
      UPoly g(field, std::move(coeffs));
      if (auto h = UPoly::exact_quotient(f, g)) {
        return {FactorSearch::Outcome::Reducible, std::make_pair(g, *h)};
      }
      std::size_t k = 0;
      while (k < d && ++digits[k] == p) digits[k++] = 0;
      if (k == d) break;
    }
  }
  return {FactorSearch::Outcome::Irreducible, std::nullopt};
}

std::vector<mpz_class> positive_divisors(const mpz_class& value) {
  mpz_class n = abs(value);
  std::vector<std::pair<mpz_class, unsigned>> factored;
  for (mpz_class d = 2; d * d <= n; ++d) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e) factored.emplace_back(d, e);
  }
  if (n > 1) factored.emplace_back(n, 1);
  std::vector<mpz_class> divisors{1};
  for (const auto& [prime, e] : factored) {
    std::size_t existing = divisors.size();
    mpz_class power = 1;
    for (unsigned k = 1; k <= e; ++k) {
      power *= prime;
      for (std::size_t i = 0; i < existing; ++i) divisors.push_back(divisors[i] * power);
    }
  }
  return divisors;
}

mpz_class eval_int(const std::vector<mpz_class>& p, const mpz_class& at) {
  mpz_class acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * at + p[i];
  return acc;
}

// Kronecker's method on the primitive integer multiple of f.
FactorSearch find_factor_rationals(const UPoly& f, std::uint64_t budget) {
  const FieldSpec field = f.field();
  const unsigned n = *f.degree();
  mpz_class lcm_den = 1;
  for (const Scalar& c : f.coeffs()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.rational().get_den_mpz_t());
  std::vector<mpz_class> ints;
  for (const Scalar& c : f.coeffs()) ints.push_back(mpz_class(c.rational() * lcm_den));
  mpz_class content = 0;
  for (const mpz_class& c : ints) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
  for (mpz_class& c : ints) c /= content;

  auto as_upoly = [&](const std::vector<mpq_class>& coeffs) {
    std::vector<Scalar> v;
    for (const mpq_class& c : coeffs) v.emplace_back(c);
    return UPoly(field, std::move(v));
  };
  auto split_with = [&](const UPoly& g) -> std::optional<FactorSearch> {
    if (auto h = UPoly::exact_quotient(f, g)) {
      return FactorSearch{FactorSearch::Outcome::Reducible, std::make_pair(g, *h)};
    }
    return std::nullopt;
  };

  // Sample points, ordered by the size of the value there.
  std::vector<std::pair<mpz_class, mpz_class>> samples;
  for (long a = -24; a <= 24; ++a) {
    mpz_class v = eval_int(ints, a);
    if (v == 0) {
      if (auto r = split_with(as_upoly({mpq_class(-a), mpq_class(1)}))) return *r;
    }
    samples.emplace_back(a, v);
  }
  std::stable_sort(samples.begin(), samples.end(),
                   [](const auto& l, const auto& r) { return abs(l.second) < abs(r.second); });

  std::uint64_t spent = 0;
  const mpz_class divisor_limit("100000000000000");
  for (unsigned d = 1; d <= n / 2; ++d) {
    std::vector<mpq_class> points;
    std::vector<std::vector<mpz_class>> choices;
    for (const auto& [a, v] : samples) {
      if (points.size() == d + 1) break;
      if (abs(v) > divisor_limit) return {FactorSearch::Outcome::Inconclusive, std::nullopt};
      points.emplace_back(a);
      auto divs = positive_divisors(v);
      std::vector<mpz_class> signed_divs;
      for (const mpz_class& dv : divs) {
        signed_divs.push_back(dv);
        if (choices.size() > 0) signed_divs.push_back(-dv);
      }
      choices.push_back(std::move(signed_divs));
    }
    // Lagrange basis polynomials over the chosen points.
    std::vector<std::vector<mpq_class>> basis;
    for (std::size_t i = 0; i <= d; ++i) {
      std::vector<mpq_class> poly{1};
      mpq_class denom = 1;
      for (std::size_t j = 0; j <= d; ++j) {
        if (j == i) continue;
        std::vector<mpq_class> next(poly.size() + 1, 0);
        for (std::size_t k = 0; k < poly.size(); ++k) {
          next[k + 1] += poly[k];
          next[k] -= poly[k] * points[j];
        }
        poly = std::move(next);
        denom *= points[i] - points[j];
      }
      for (mpq_class& c : poly) {
        c /= denom;
        c.canonicalize();
      }
      basis.push_back(std::move(poly));
    }
    std::vector<std::size_t> idx(d + 1, 0);
    while (true) {
      if (++spent > budget) return {FactorSearch::Outcome::Inconclusive, std::nullopt};
      std::vector<mpq_class> g(d + 1, 0);
      for (std::size_t i = 0; i <= d; ++i) {
        for (std::size_t k = 0; k <= d; ++k) g[k] += basis[i][k] * choices[i][idx[i]];
      }
      bool integral = true;
      for (mpq_class& c : g) {
        c.canonicalize();
        if (c.get_den() != 1) integral = false;
      }
      while (!g.empty() && g.back() == 0) g.pop_back();
      if (integral && g.size() >= 2) {
        if (auto r = split_with(as_upoly(g))) return *r;
      }
      std::size_t k = 0;
      while (k <= d && ++idx[k] == choices[k].size()) idx[k++] = 0;
      if (k > d) break;
    }
  }
  return {FactorSearch::Outcome::Irreducible, std::nullopt};
}

}  // namespace

FactorSearch find_factor(const UPoly& f, std::uint64_t budget) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroInput, "factor search on zero polynomial");
  if (*f.degree() <= 1) return {FactorSearch::Outcome::Irreducible, std::nullopt};
  return f.field().is_rational() ? find_factor_rationals(f, budget) : find_factor_prime_field(f, budget);
}

}  // namespace qweyl
