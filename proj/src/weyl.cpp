#include "qweyl/weyl.hpp"

#include <algorithm>
#include <utility>

#include "linalg.hpp"
#include "qweyl/upoly.hpp"

namespace qweyl {

Context::Context(const FieldSpec& field, const Scalar& q) : field_(field), q_(q) {
  if (!(q.field() == field)) throw Error(ErrorCode::FieldMismatch, "q does not belong to " + field.name());
  if (q.is_zero()) throw Error(ErrorCode::QIsZero, "the deformation parameter q must be nonzero");
}

Context Context::parse(std::string_view field, std::string_view q) {
  FieldSpec f = FieldSpec::parse(field);
  return Context(f, Scalar::parse(f, q));
}

void Context::require_q_not_one() const {
  if (q_.is_one()) throw Error(ErrorCode::QIsOne, "this operation requires q != 1");
}

WeylPoly WeylPoly::constant(const Context& ctx, const Scalar& c) {
  return monomial(ctx, {0, 0}, c);
}

WeylPoly WeylPoly::monomial(const Context& ctx, Monomial m, const Scalar& c) {
  WeylPoly out(ctx);
  out.add_term(m, c);
  return out;
}

bool WeylPoly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0);
}

Scalar WeylPoly::coefficient(Monomial m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar::zero(ctx_.field()) : it->second;
}

void WeylPoly::add_term(Monomial m, const Scalar& c) {
  if (!(c.field() == ctx_.field())) throw Error(ErrorCode::FieldMismatch, "coefficient from another field");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void WeylPoly::check_context(const WeylPoly& other) const {
  if (!(ctx_ == other.ctx_)) throw Error(ErrorCode::ContextMismatch, "polynomials from different algebras");
}

WeylPoly WeylPoly::operator-() const {
  WeylPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

WeylPoly& WeylPoly::operator+=(const WeylPoly& rhs) {
  check_context(rhs);
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

WeylPoly& WeylPoly::operator-=(const WeylPoly& rhs) {
  check_context(rhs);
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

WeylPoly operator*(const Scalar& c, const WeylPoly& f) {
  WeylPoly out(f.ctx_);
  for (const auto& [m, v] : f.terms_) out.add_term(m, c * v);
  return out;
}

namespace {

using TermList = std::vector<std::pair<Monomial, Scalar>>;

// Normal forms of y^j x^k, built by repeated left multiplication by y using
// y x^a = q^a x^a y + [a]_q x^(a-1). Lives for one product only.
class Reorderer {
 public:
  explicit Reorderer(const Context& ctx) : ctx_(ctx) {}

  const TermList& y_times_x(unsigned j, unsigned k) {
    auto key = std::make_pair(j, k);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    TermList result;
    if (j == 0 || k == 0) {
      result.emplace_back(Monomial{k, j}, ctx_.scalar(1));
    } else {
      WeylPoly acc(ctx_);
      for (const auto& [m, c] : y_times_x(j - 1, k)) {
        acc.add_term({m.x, m.y + 1}, q_power(m.x) * c);
        if (m.x > 0) acc.add_term({m.x - 1, m.y}, q_integer(m.x) * c);
      }
      result.assign(acc.terms().begin(), acc.terms().end());
    }
    return cache_.emplace(key, std::move(result)).first->second;
  }

 private:
  const Scalar& q_power(unsigned n) {
    while (powers_.size() <= n) {
      powers_.push_back(powers_.empty() ? ctx_.scalar(1) : powers_.back() * ctx_.q());
    }
    return powers_[n];
  }

  const Scalar& q_integer(unsigned n) {
    while (integers_.size() <= n) {
      auto i = static_cast<unsigned>(integers_.size());
      integers_.push_back(i == 0 ? ctx_.scalar(0) : integers_.back() + q_power(i - 1));
    }
    return integers_[n];
  }

  Context ctx_;
  std::map<std::pair<unsigned, unsigned>, TermList> cache_;
  std::vector<Scalar> powers_;
  std::vector<Scalar> integers_;
};

}  // namespace

WeylPoly operator*(const WeylPoly& a, const WeylPoly& b) {
  a.check_context(b);
  WeylPoly out(a.ctx_);
  Reorderer reorder(a.ctx_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      const Scalar c = ca * cb;
      for (const auto& [m, r] : reorder.y_times_x(ma.y, mb.x)) {
        out.add_term({ma.x + m.x, m.y + mb.y}, c * r);
      }
    }
  }
  return out;
}

WeylPoly pow(const WeylPoly& f, unsigned exponent) {
  WeylPoly result = WeylPoly::constant(f.context(), f.context().scalar(1));
  for (unsigned i = 0; i < exponent; ++i) result = result * f;
  return result;
}

WeylPoly reorder_monomial(unsigned i, unsigned j, unsigned k, unsigned l, const Context& ctx) {
  Reorderer reorder(ctx);
  WeylPoly out(ctx);
  for (const auto& [m, c] : reorder.y_times_x(j, k)) out.add_term({i + m.x, m.y + l}, c);
  return out;
}

WeylPoly substitute(const WeylPoly& f, const Scalar& lambda, const Scalar& mu) {
  WeylPoly out(f.context());
  for (const auto& [m, c] : f.terms()) {
    out.add_term(m, lambda.pow(m.x) * mu.pow(m.y) * c);
  }
  return out;
}

std::optional<unsigned> total_degree(const WeylPoly& f) {
  if (f.is_zero()) return std::nullopt;
  return f.terms().begin()->first.degree();
}

namespace {

std::vector<Monomial> monomials_up_to(unsigned degree) {
  std::vector<Monomial> out;
  for (unsigned d = degree + 1; d-- > 0;) {
    for (unsigned x = d + 1; x-- > 0;) out.push_back({x, d - x});
  }
  return out;
}

// Finds coefficients z with sum z_i * columns[i] = target.
std::optional<std::vector<Scalar>> solve_combination(const std::vector<WeylPoly>& columns,
                                                     const WeylPoly& target) {
  const FieldSpec& field = target.context().field();
  std::map<Monomial, std::size_t, DescendingDegLex> rows;
  auto row_of = [&](const Monomial& m) { return rows.try_emplace(m, rows.size()).first->second; };
  for (const auto& col : columns)
    for (const auto& [m, c] : col.terms()) row_of(m);
  for (const auto& [m, c] : target.terms()) row_of(m);

  linalg::Matrix a(rows.size(), linalg::Row(columns.size(), Scalar::zero(field)));
  std::vector<Scalar> rhs(rows.size(), Scalar::zero(field));
  for (std::size_t j = 0; j < columns.size(); ++j)
    for (const auto& [m, c] : columns[j].terms()) a[rows.at(m)][j] = c;
  for (const auto& [m, c] : target.terms()) rhs[rows.at(m)] = c;
  return linalg::solve(std::move(a), std::move(rhs), field, columns.size());
}

WeylPoly combine(const Context& ctx, const std::vector<Monomial>& basis, const std::vector<Scalar>& z) {
  WeylPoly out(ctx);
  for (std::size_t i = 0; i < basis.size(); ++i) out.add_term(basis[i], z[i]);
  return out;
}

}  // namespace

std::optional<DivisionWitness> divides(const WeylPoly& a, const WeylPoly& c) {
  if (a.is_zero()) throw Error(ErrorCode::ZeroDivisor, "divisibility by zero");
  if (!(a.context() == c.context())) throw Error(ErrorCode::ContextMismatch, "polynomials from different algebras");
  const Context& ctx = a.context();
  if (c.is_zero()) return DivisionWitness{Side::Right, WeylPoly(ctx)};
  const unsigned da = *total_degree(a), dc = *total_degree(c);
  if (dc < da) return std::nullopt;
  const auto basis = monomials_up_to(dc - da);
  for (Side side : {Side::Right, Side::Left}) {
    std::vector<WeylPoly> columns;
    columns.reserve(basis.size());
    for (const Monomial& m : basis) {
      WeylPoly mono = WeylPoly::monomial(ctx, m, ctx.scalar(1));
      columns.push_back(side == Side::Right ? a * mono : mono * a);
    }
    if (auto z = solve_combination(columns, c)) return DivisionWitness{side, combine(ctx, basis, *z)};
  }
  return std::nullopt;
}

std::optional<NormalityWitness> is_normal(const WeylPoly& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroInput, "normality of zero");
  const Context& ctx = f.context();
  const auto basis = monomials_up_to(1);
  std::vector<WeylPoly> columns;
  for (const Monomial& m : basis) columns.push_back(WeylPoly::monomial(ctx, m, ctx.scalar(1)) * f);
  auto gx = solve_combination(columns, f * WeylPoly::x(ctx));
  if (!gx) return std::nullopt;
  auto gy = solve_combination(columns, f * WeylPoly::y(ctx));
  if (!gy) return std::nullopt;
  return NormalityWitness{combine(ctx, basis, *gx), combine(ctx, basis, *gy)};
}

bool is_central(const WeylPoly& f) {
  const Context& ctx = f.context();
  const WeylPoly x = WeylPoly::x(ctx), y = WeylPoly::y(ctx);
  const bool central = f * x == x * f && f * y == y * f;
  if (!ctx.q().is_one()) {
    if (auto n = multiplicative_order(ctx.q()); n && *n > 1) {
      bool support_rule = std::all_of(f.terms().begin(), f.terms().end(),
                                      [&](const auto& t) { return t.first.x % *n == 0 && t.first.y % *n == 0; });
      if (support_rule != central) throw Error(ErrorCode::Internal, "centrality disagrees with the support rule");
    }
  }
  return central;
}

WeylPoly u_poly(const Context& ctx) {
  ctx.require_q_not_one();
  WeylPoly u(ctx);
  u.add_term({1, 1}, ctx.q() - ctx.scalar(1));
  u.add_term({0, 0}, ctx.scalar(1));
  return u;
}

std::vector<Scalar> u_power_coeffs(unsigned m, const Context& ctx) {
  ctx.require_q_not_one();
  const FieldSpec& field = ctx.field();
  const Scalar one = Scalar::one(field);
  // Polynomials in an indeterminate standing for q.
  UPoly mu = UPoly::constant(one);
  std::vector<Scalar> out{mu.eval(ctx.q())};
  for (unsigned j = 0; j < m; ++j) {
    UPoly numer = UPoly::monomial(one, m) - UPoly::monomial(one, j);
    UPoly bracket(field);
    for (unsigned i = 0; i <= j; ++i) bracket += UPoly::monomial(one, i);
    auto next = UPoly::exact_quotient(numer * mu, bracket);
    if (!next) throw Error(ErrorCode::Internal, "u-power recursion is not polynomial in q");
    mu = std::move(*next);
    out.push_back(mu.eval(ctx.q()));
  }
  return out;
}

}  // namespace qweyl
