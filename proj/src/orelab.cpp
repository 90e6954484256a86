#include "qweyl/orelab.hpp"

#include <algorithm>

namespace qweyl {

RatFunc::RatFunc(const FieldSpec& field) : num_(field), den_(UPoly::constant(Scalar::one(field))) {}

RatFunc::RatFunc(UPoly num, UPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (!(num_.field() == den_.field())) throw Error(ErrorCode::FieldMismatch, "numerator and denominator fields differ");
  if (den_.is_zero()) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  canonicalize();
}

RatFunc RatFunc::constant(const Scalar& c) { return from_poly(UPoly::constant(c)); }

RatFunc RatFunc::x(const FieldSpec& field) { return from_poly(UPoly::variable(field)); }

RatFunc RatFunc::from_poly(const UPoly& p) { return RatFunc(p, UPoly::constant(Scalar::one(p.field()))); }

void RatFunc::canonicalize() {
  if (num_.is_zero()) {
    den_ = UPoly::constant(Scalar::one(field()));
    return;
  }
  UPoly g = gcd(num_, den_);
  num_ = UPoly::divmod(num_, g).first;
  den_ = UPoly::divmod(den_, g).first;
  const Scalar lead = den_.lead();
  num_ = num_.scaled(lead.inv());
  den_ = den_.monic();
}

bool RatFunc::is_polynomial() const { return den_.degree() == 0u; }

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_); }

RatFunc RatFunc::inv() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  return RatFunc(den_, num_);
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) { return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_); }

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) { return RatFunc(a.num_ * b.num_, a.den_ * b.den_); }

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inv(); }

namespace {

std::string grouped(const UPoly& p) {
  auto terms = std::count_if(p.coeffs().begin(), p.coeffs().end(), [](const Scalar& c) { return !c.is_zero(); });
  const std::string text = p.str('x');
  return terms > 1 || text.find('/') != std::string::npos ? "(" + text + ")" : text;
}

}  // namespace

std::string RatFunc::str() const {
  if (is_polynomial()) return num_.str('x');
  return grouped(num_) + "/" + grouped(den_);
}

RatFunc sigma_q(const RatFunc& r, const Scalar& q) { return RatFunc(r.num().dilated(q), r.den().dilated(q)); }

namespace {

UPoly delta_poly(const UPoly& p, const Scalar& q) {
  const FieldSpec& field = p.field();
  const UPoly divisor = UPoly::monomial(q - Scalar::one(field), 1);
  auto quotient = UPoly::exact_quotient(p.dilated(q) - p, divisor);
  if (!quotient) throw Error(ErrorCode::Internal, "sigma(p) - p not divisible by (q - 1)x");
  return *quotient;
}

}  // namespace

RatFunc delta_q(const RatFunc& r, const Scalar& q) {
  if (q.is_one()) throw Error(ErrorCode::QIsOne, "the Eulerian derivation needs q != 1");
  const RatFunc dn = RatFunc::from_poly(delta_poly(r.num(), q));
  if (r.is_polynomial()) return dn;
  const RatFunc s = RatFunc::from_poly(r.den());
  const RatFunc ds = RatFunc::from_poly(delta_poly(r.den(), q));
  return (dn - sigma_q(r, q) * ds) / s;
}

SkewPoly::SkewPoly(const Context& ctx, Derivation derivation, std::vector<RatFunc> coeffs)
    : ctx_(ctx), derivation_(derivation), coeffs_(std::move(coeffs)) {
  for (const RatFunc& c : coeffs_) {
    if (!(c.field() == ctx_.field())) throw Error(ErrorCode::FieldMismatch, "coefficient from another field");
  }
  if (derivation_ == Derivation::Eulerian) ctx_.require_q_not_one();
  trim();
}

SkewPoly SkewPoly::t(const Context& ctx, Derivation derivation) {
  const FieldSpec& f = ctx.field();
  return SkewPoly(ctx, derivation, {RatFunc(f), RatFunc::constant(Scalar::one(f))});
}

SkewPoly SkewPoly::constant(const Context& ctx, Derivation derivation, const RatFunc& r) {
  return SkewPoly(ctx, derivation, {r});
}

SkewPoly SkewPoly::from_weyl(const WeylPoly& f) {
  const Context& ctx = f.context();
  unsigned top = 0;
  for (const auto& [m, c] : f.terms()) top = std::max(top, m.y);
  std::vector<std::vector<Scalar>> columns(top + 1);
  for (const auto& [m, c] : f.terms()) {
    auto& col = columns[m.y];
    if (col.size() <= m.x) col.resize(m.x + 1, ctx.scalar(0));
    col[m.x] = c;
  }
  std::vector<RatFunc> coeffs;
  for (auto& col : columns) coeffs.push_back(RatFunc::from_poly(UPoly(ctx.field(), std::move(col))));
  return SkewPoly(ctx, Derivation::Eulerian, std::move(coeffs));
}

void SkewPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

void SkewPoly::check_compatible(const SkewPoly& other) const {
  if (!(ctx_ == other.ctx_) || derivation_ != other.derivation_) {
    throw Error(ErrorCode::ContextMismatch, "skew polynomials from different rings");
  }
}

std::optional<unsigned> SkewPoly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return static_cast<unsigned>(coeffs_.size() - 1);
}

RatFunc SkewPoly::coeff(unsigned i) const { return i < coeffs_.size() ? coeffs_[i] : RatFunc(ctx_.field()); }

SkewPoly SkewPoly::operator-() const {
  std::vector<RatFunc> out;
  for (const RatFunc& c : coeffs_) out.push_back(-c);
  return SkewPoly(ctx_, derivation_, std::move(out));
}

SkewPoly operator+(const SkewPoly& a, const SkewPoly& b) {
  a.check_compatible(b);
  std::vector<RatFunc> out(std::max(a.coeffs_.size(), b.coeffs_.size()), RatFunc(a.ctx_.field()));
  for (unsigned i = 0; i < out.size(); ++i) out[i] = a.coeff(i) + b.coeff(i);
  return SkewPoly(a.ctx_, a.derivation_, std::move(out));
}

SkewPoly operator-(const SkewPoly& a, const SkewPoly& b) { return a + (-b); }

bool operator==(const SkewPoly& a, const SkewPoly& b) {
  return a.ctx_ == b.ctx_ && a.derivation_ == b.derivation_ && a.coeffs_ == b.coeffs_;
}

std::string SkewPoly::str() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const RatFunc& c = coeffs_[i];
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string mono = i == 0 ? "" : i == 1 ? "t" : "t^" + std::to_string(i);
    std::string cs = c.str();
    if (mono.empty()) {
      out += "(" + cs + ")";
    } else if (c == RatFunc::constant(Scalar::one(c.field()))) {
      out += mono;
    } else {
      out += "(" + cs + ")*" + mono;
    }
  }
  return out;
}

SkewPoly skew_mul(const SkewPoly& f, const SkewPoly& g) {
  if (!(f.context() == g.context()) || f.derivation() != g.derivation()) {
    throw Error(ErrorCode::ContextMismatch, "skew polynomials from different rings");
  }
  const Context& ctx = f.context();
  const Scalar& q = ctx.q();
  const FieldSpec& field = ctx.field();
  // h runs through t^i g; t * sum h_k t^k = sum sigma(h_k) t^(k+1) + delta(h_k) t^k.
  std::vector<RatFunc> h = g.coeffs();
  std::vector<RatFunc> out;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (out.size() < h.size() + i + 1) out.resize(h.size() + i + 1, RatFunc(field));
    for (std::size_t k = 0; k < h.size(); ++k) out[k] = out[k] + f.coeffs()[i] * h[k];
    if (i + 1 == f.coeffs().size()) break;
    std::vector<RatFunc> next(h.size() + 1, RatFunc(field));
    for (std::size_t k = 0; k < h.size(); ++k) {
      next[k + 1] = next[k + 1] + sigma_q(h[k], q);
      if (f.derivation() == Derivation::Eulerian) next[k] = next[k] + delta_q(h[k], q);
    }
    h = std::move(next);
  }
  return SkewPoly(ctx, f.derivation(), std::move(out));
}

RatFunc recenter_shift(const FieldSpec& field) {
  return RatFunc::x(field).inv() / RatFunc::constant(Scalar(field, 2L));
}

namespace {

void require_q_minus_one(const Context& ctx) {
  if (!(ctx.q() + ctx.scalar(1)).is_zero()) throw Error(ErrorCode::QNotMinusOne, "this operation requires q = -1");
}

// -(a x^2 + (2x)^-2 + k).
RatFunc recentered_p(const FieldSpec& field, const Scalar& a, const Scalar& k) {
  const RatFunc x = RatFunc::x(field);
  const RatFunc s = recenter_shift(field);
  return -(RatFunc::constant(a) * x * x + s * s + RatFunc::constant(k));
}

SkewPoly t_squared_minus(const Context& ctx, Derivation derivation, const RatFunc& p) {
  const FieldSpec& field = ctx.field();
  return SkewPoly(ctx, derivation, {-p, RatFunc(field), RatFunc::constant(Scalar::one(field))});
}

// y^2 + a x^2 + k in F(x)[y; sigma, delta].
SkewPoly normalized_form(const Context& ctx, const Scalar& a, const Scalar& k) {
  WeylPoly f(ctx);
  f.add_term({0, 2}, ctx.scalar(1));
  f.add_term({2, 0}, a);
  f.add_term({0, 0}, k);
  return SkewPoly::from_weyl(f);
}

// sigma(w) w, the constant term of (t - sigma(w))(t + w) up to sign.
bool norm_matches(const Context& ctx, const RatFunc& w, const RatFunc& p) {
  return sigma_q(w, ctx.q()) * w == p;
}

}  // namespace

Recentered recenter_q_minus_1(const WeylPoly& f) {
  const Context& ctx = f.context();
  require_q_minus_one(ctx);
  for (const auto& [m, c] : f.terms()) {
    if (!(m == Monomial{0, 2}) && !(m == Monomial{2, 0}) && !(m == Monomial{0, 0})) {
      throw Error(ErrorCode::WrongShape, "expected c y^2 + a x^2 + k");
    }
  }
  const Scalar c = f.coefficient({0, 2});
  if (c.is_zero()) throw Error(ErrorCode::WrongShape, "expected a nonzero y^2 coefficient");
  const Scalar a = f.coefficient({2, 0}) / c, k = f.coefficient({0, 0}) / c;
  const FieldSpec& field = ctx.field();
  const RatFunc p = recentered_p(field, a, k);

  // In F(x)[y; sigma, delta], T = y - (2x)^-1 must satisfy T x = sigma(x) T and T^2 - p = f / c.
  const SkewPoly y = SkewPoly::t(ctx, Derivation::Eulerian);
  const SkewPoly T = y - SkewPoly::constant(ctx, Derivation::Eulerian, recenter_shift(field));
  const SkewPoly x = SkewPoly::constant(ctx, Derivation::Eulerian, RatFunc::x(field));
  const SkewPoly sx = SkewPoly::constant(ctx, Derivation::Eulerian, sigma_q(RatFunc::x(field), ctx.q()));
  if (!(skew_mul(T, x) == skew_mul(sx, T)) ||
      !(skew_mul(T, T) - SkewPoly::constant(ctx, Derivation::Eulerian, p) == normalized_form(ctx, a, k))) {
    throw Error(ErrorCode::Internal, "recentering does not reproduce the input");
  }
  return Recentered{a, k, p, t_squared_minus(ctx, Derivation::None, p)};
}

OreDecision factor_t2_minus_v_decide(const Context& ctx, const Scalar& a, const Scalar& k) {
  require_q_minus_one(ctx);
  if (a.is_zero()) throw Error(ErrorCode::ZeroLeadingCoefficient, "the x^2 coefficient must be nonzero");
  const FieldSpec& field = ctx.field();
  const Scalar zero = ctx.scalar(0), one = ctx.scalar(1), two = ctx.scalar(2);
  const UPoly X = UPoly::variable(field);
  OreDecision out;

  auto accept = [&](const UPoly& u, std::string branch, std::vector<std::pair<std::string, Scalar>> wit) {
    out.reducible = true;
    out.branch = std::move(branch);
    out.witnesses = std::move(wit);
    out.w = RatFunc::from_poly(u) * recenter_shift(field);
    if (!norm_matches(ctx, *out.w, recentered_p(field, a, k))) {
      throw Error(ErrorCode::Internal, "constructed w does not factor t^2 - p");
    }
  };
  auto reject = [&](std::string branch) { out.branch = std::move(branch); };

  // Roots of 4a z^2 + 4k z + 1 are (-k +- sqrt(D)) / (2a).
  const Scalar D = k * k - a;
  if (D.is_zero()) {
    // g = (2k x^2 + 1)^2.
    accept(UPoly(field, {one, zero, two * k}), "g is a perfect square", {{"k", k}});
    return out;
  }
  if (auto sD = square_root(D)) {
    const Scalar z1 = (-k + *sD) / (two * a), z2 = (-k - *sD) / (two * a);
    auto r1 = square_root(z1), r2 = square_root(z2);
    if (r1 && r2) {
      // g = 4a (x^2 - z1)(x^2 - z2) = N(c (x - r1)(x - r2)) with c = 1/(r1 r2).
      const UPoly u = (X - UPoly::constant(*r1)) * (X - UPoly::constant(*r2));
      accept(u.scaled((*r1 * *r2).inv()), "g splits into linear factors", {{"r1", *r1}, {"r2", *r2}});
    } else {
      reject("x^2 - z is an irreducible factor of odd multiplicity");
    }
    return out;
  }
  // 4a z^2 + 4k z + 1 is irreducible; g is a norm iff
  // g = 4a (x^2 + alpha x + beta)(x^2 - alpha x + beta) with 4a a square.
  if (auto sa = square_root(a)) {
    for (const Scalar& beta : {(two * *sa).inv(), -(two * *sa).inv()}) {
      auto alpha = square_root(two * beta - k / a);
      if (!alpha || alpha->is_zero()) continue;
      const Scalar tau = (two * beta).inv();
      accept(UPoly(field, {beta, *alpha, one}).scaled(two * *sa), "g is a product of conjugate quadratics",
             {{"alpha", *alpha}, {"beta", beta}, {"tau", tau}, {"omega", *alpha * tau}});
      return out;
    }
  }
  reject("g has no conjugate factorization");
  return out;
}

RatFunc reconstruct_w(const WeylPoly& left, const WeylPoly& right) {
  (void)left;
  if (total_degree(right) != 1u) throw Error(ErrorCode::WrongShape, "right factor must be linear");
  const Scalar r2 = right.coefficient({0, 1});
  if (r2.is_zero()) throw Error(ErrorCode::WrongShape, "right factor has no y-term");
  const FieldSpec& field = right.context().field();
  const UPoly rest(field, {right.coefficient({0, 0}) / r2, right.coefficient({1, 0}) / r2});
  return RatFunc::from_poly(rest) + recenter_shift(field);
}

bool verify_w(const Context& ctx, const Scalar& a, const Scalar& k, const RatFunc& w) {
  require_q_minus_one(ctx);
  const FieldSpec& field = ctx.field();
  const Scalar& q = ctx.q();
  const RatFunc p = recentered_p(field, a, k);

  const SkewPoly t = SkewPoly::t(ctx, Derivation::None);
  auto c0 = [&](const RatFunc& r) { return SkewPoly::constant(ctx, Derivation::None, r); };
  const bool recentered = skew_mul(t - c0(sigma_q(w, q)), t + c0(w)) == t_squared_minus(ctx, Derivation::None, p);

  const RatFunc wy = w - recenter_shift(field);
  const SkewPoly y = SkewPoly::t(ctx, Derivation::Eulerian);
  auto c1 = [&](const RatFunc& r) { return SkewPoly::constant(ctx, Derivation::Eulerian, r); };
  const bool original = skew_mul(y - c1(sigma_q(wy, q)), y + c1(wy)) == normalized_form(ctx, a, k);
  return recentered && original;
}

bool LemmaReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const LemmaCheck& c) { return c.passed; });
}

LemmaReport normal_lemma_verify(const RatFunc& v, const std::vector<RatFunc>& samples, const Scalar& q) {
  if (q.is_one()) throw Error(ErrorCode::QIsOne, "the Eulerian derivation needs q != 1");
  auto sigma = [&](const RatFunc& r) { return sigma_q(r, q); };
  auto delta = [&](const RatFunc& r) { return delta_q(r, q); };
  LemmaReport report;

  LemmaCheck commute{"t commutes with v", sigma(v) == v && delta(v).is_zero(), std::nullopt};
  if (!commute.passed) commute.counterexample = v;
  report.checks.push_back(std::move(commute));

  LemmaCheck second{"delta^2(r) = v r - sigma^2(r) v", true, std::nullopt};
  LemmaCheck anti{"delta sigma = -sigma delta", true, std::nullopt};
  for (const RatFunc& r : samples) {
    if (second.passed && !(delta(delta(r)) == v * r - sigma(sigma(r)) * v)) {
      second.passed = false;
      second.counterexample = r;
    }
    if (anti.passed && !(delta(sigma(r)) == -sigma(delta(r)))) {
      anti.passed = false;
      anti.counterexample = r;
    }
  }
  report.checks.push_back(std::move(second));
  report.checks.push_back(std::move(anti));
  return report;
}

}  // namespace qweyl
