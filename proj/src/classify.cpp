#include "qweyl/classify.hpp"

#include <algorithm>

#include "qweyl/upoly.hpp"

namespace qweyl {

std::string_view case_name(QuadCase c) {
  switch (c) {
    case QuadCase::YRightFactor: return "y-right-factor";
    case QuadCase::XLeftFactor: return "x-left-factor";
    case QuadCase::UnivariateY: return "univariate-y";
    case QuadCase::UnivariateX: return "univariate-x";
    case QuadCase::ConstantPivot: return "constant-pivot";
    case QuadCase::QSymmetric: return "q-symmetric";
    case QuadCase::QMinusOne: return "q-minus-one";
    case QuadCase::GeneralLeadX: return "general-lead-x";
    case QuadCase::GeneralLeadY: return "general-lead-y";
  }
  return "unknown";
}

std::string_view kind_name(PrimalityVerdict::Kind kind) {
  switch (kind) {
    case PrimalityVerdict::Kind::Prime: return "Prime";
    case PrimalityVerdict::Kind::NotPrime: return "NotPrime";
    case PrimalityVerdict::Kind::Undecided: return "Undecided";
  }
  return "Unknown";
}

QuadraticForm QuadraticForm::from_poly(const WeylPoly& f) {
  if (auto deg = total_degree(f); deg && *deg > 2) {
    throw Error(ErrorCode::WrongShape, "not a polynomial of total degree at most 2");
  }
  return QuadraticForm{f.context(),          f.coefficient({2, 0}), f.coefficient({1, 1}),
                       f.coefficient({0, 2}), f.coefficient({1, 0}), f.coefficient({0, 1}),
                       f.coefficient({0, 0})};
}

WeylPoly QuadraticForm::to_poly() const {
  WeylPoly f(ctx);
  f.add_term({2, 0}, a);
  f.add_term({1, 1}, b);
  f.add_term({0, 2}, c);
  f.add_term({1, 0}, d);
  f.add_term({0, 1}, e);
  f.add_term({0, 0}, k);
  return f;
}

Scalar quantum_discriminant(const QuadraticForm& f) {
  return f.b * f.b - f.ctx.scalar(4) * f.a * f.c * f.ctx.q();
}

namespace {

WeylPoly linear(const Context& ctx, const Scalar& cx, const Scalar& cy, const Scalar& c1) {
  WeylPoly out(ctx);
  out.add_term({1, 0}, cx);
  out.add_term({0, 1}, cy);
  out.add_term({0, 0}, c1);
  return out;
}

// Roots of A t^2 + B t + C with A != 0.
std::vector<Scalar> quadratic_roots(const Scalar& A, const Scalar& B, const Scalar& C) {
  const Scalar two = Scalar(A.field(), 2L);
  auto s = square_root(B * B - Scalar(A.field(), 4L) * A * C);
  if (!s) return {};
  Scalar r1 = (-B + *s) / (two * A);
  Scalar r2 = (-B - *s) / (two * A);
  if (r1 == r2) return {r1};
  return {r1, r2};
}

Factorization checked(const WeylPoly& f, Factorization fac) {
  if (!(fac.left * fac.right == f) || total_degree(fac.left) != 1u || total_degree(fac.right) != 1u) {
    throw Error(ErrorCode::Internal, "factorization for case " + std::string(case_name(fac.label)) +
                                         " does not reproduce the input");
  }
  return fac;
}

std::vector<Factorization> no_linear_cases(const Context& ctx, const Scalar& a, const Scalar& b, const Scalar& c,
                                           const Scalar& k, bool first_only) {
  if (a.is_zero() && b.is_zero() && c.is_zero()) {
    throw Error(ErrorCode::DegreeTooLow, "a, b and c all vanish: not a quadratic form");
  }
  const Scalar& q = ctx.q();
  const Scalar zero = ctx.scalar(0), one = ctx.scalar(1), two = ctx.scalar(2);
  const QuadraticForm form{ctx, a, b, c, zero, zero, k};
  const WeylPoly f = form.to_poly();
  const Scalar disc = quantum_discriminant(form);
  std::vector<Factorization> out;
  auto add = [&](Factorization fac) {
    out.push_back(checked(f, std::move(fac)));
    return first_only;
  };

  if (a.is_zero() && k.is_zero()) {
    if (add({QuadCase::YRightFactor, linear(ctx, b, c, zero), linear(ctx, zero, one, zero), {}})) return out;
  }
  if (c.is_zero() && k.is_zero()) {
    if (add({QuadCase::XLeftFactor, linear(ctx, one, zero, zero), linear(ctx, a, b, zero), {}})) return out;
  }
  if (a.is_zero() && b.is_zero()) {
    if (auto s = square_root(-c * k)) {
      if (add({QuadCase::UnivariateY, linear(ctx, zero, c, -*s), linear(ctx, zero, one, *s / c), {{"s", *s}}})) {
        return out;
      }
    }
  }
  if (b.is_zero() && c.is_zero()) {
    if (auto s = square_root(-a * k)) {
      if (add({QuadCase::UnivariateX, linear(ctx, a, zero, -*s), linear(ctx, one, zero, *s / a), {{"s", *s}}})) {
        return out;
      }
    }
  }
  if (!k.is_zero()) {
    const Scalar shift = b - two * q * k;
    if (disc == shift * shift) {
      if (add({QuadCase::ConstantPivot, linear(ctx, a, k, zero), linear(ctx, one, c / k, zero), {}})) return out;
    }
  }
  const Scalar q2 = q_int(2, q);
  if (!q2.is_zero() && !b.is_zero() && !a.is_zero()) {
    const Scalar ratio = (one - q) / q2 * b;
    if (disc == ratio * ratio) {
      if (auto s = square_root(a * (b / q2 - k))) {
        if (add({QuadCase::QSymmetric, linear(ctx, a, b / q2, *s), linear(ctx, one, q2 / b * c, -*s / a),
                 {{"s", *s}}})) {
          return out;
        }
      }
    }
  }
  if ((q + one).is_zero() && b.is_zero() && !(a * c).is_zero()) {
    if (auto root = square_root(a * c)) {
      std::vector<Scalar> taus{*root};
      if (!(-*root == *root)) taus.push_back(-*root);
      for (const Scalar& tau : taus) {
        if (auto omega = square_root((tau - k) * c)) {
          if (add({QuadCase::QMinusOne, linear(ctx, a, tau, -a * *omega / tau),
                   linear(ctx, one, c / tau, *omega / tau), {{"tau", tau}, {"omega", *omega}}})) {
            return out;
          }
          break;
        }
      }
    }
  }
  return out;
}

std::optional<Factorization> solve_general(const QuadraticForm& form) {
  const Context& ctx = form.ctx;
  const Scalar& q = ctx.q();
  const auto& [_, a, b, c, d, e, k] = form;
  const Scalar zero = ctx.scalar(0), one = ctx.scalar(1);
  const WeylPoly f = form.to_poly();

  auto attempt = [&](QuadCase label, const WeylPoly& left, const WeylPoly& right,
                     std::vector<std::pair<std::string, Scalar>> wit) -> std::optional<Factorization> {
    if (left * right == f) return checked(f, {label, left, right, std::move(wit)});
    return std::nullopt;
  };

  // Left factor x + mu y + nu, right factor a x + beta y + gamma.
  std::vector<Scalar> mus;
  if (!a.is_zero()) {
    mus = quadratic_roots(q * a, -b, c);
  } else if (!b.is_zero()) {
    mus = {c / b};
  }
  for (const Scalar& mu : mus) {
    const Scalar beta = b - q * a * mu;
    const Scalar det = beta - a * mu;
    std::vector<std::pair<Scalar, Scalar>> nu_gamma;
    if (!det.is_zero()) {
      Scalar gamma = (d * beta - a * e) / det;
      Scalar nu = (e - mu * d) / det;
      nu_gamma.emplace_back(nu, gamma);
    } else if (e == mu * d) {
      std::vector<Scalar> nus;
      if (!a.is_zero()) {
        nus = quadratic_roots(a, -d, k - mu * a);
      } else if (!d.is_zero()) {
        nus = {(k - mu * a) / d};
      } else if ((k - mu * a).is_zero()) {
        nus = {zero};
      }
      for (const Scalar& nu : nus) nu_gamma.emplace_back(nu, d - a * nu);
    }
    for (const auto& [nu, gamma] : nu_gamma) {
      if (auto fac = attempt(QuadCase::GeneralLeadX, linear(ctx, one, mu, nu), linear(ctx, a, beta, gamma),
                             {{"mu", mu}, {"nu", nu}})) {
        return fac;
      }
    }
  }

  // Left factor y + nu (forces a = 0), right factor (b/q) x + c y + gamma.
  if (a.is_zero()) {
    const Scalar alpha = b / q;
    std::vector<Scalar> nus;
    if (!alpha.is_zero()) {
      nus = {d / alpha};
    } else if (d.is_zero() && !c.is_zero()) {
      nus = quadratic_roots(c, -e, k);
    }
    for (const Scalar& nu : nus) {
      if (auto fac = attempt(QuadCase::GeneralLeadY, linear(ctx, zero, one, nu), linear(ctx, alpha, c, e - c * nu),
                             {{"nu", nu}})) {
        return fac;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

ReducibilityVerdict classify_quadratic_no_linear(const Context& ctx, const Scalar& a, const Scalar& b,
                                                 const Scalar& c, const Scalar& k) {
  auto cases = no_linear_cases(ctx, a, b, c, k, true);
  if (cases.empty()) return {};
  return {std::move(cases.front())};
}

std::vector<Factorization> firing_cases(const Context& ctx, const Scalar& a, const Scalar& b, const Scalar& c,
                                        const Scalar& k) {
  return no_linear_cases(ctx, a, b, c, k, false);
}

ReducibilityVerdict classify_quadratic_general(const QuadraticForm& f) {
  if (!f.is_degree_two()) throw Error(ErrorCode::DegreeTooLow, "a, b and c all vanish: not a quadratic form");
  // A reducible form has a square quantum discriminant.
  if (!square_root(quantum_discriminant(f))) return {};
  return {solve_general(f)};
}

ReducibilityVerdict classify_quadratic(const QuadraticForm& f) {
  if (f.has_linear_terms()) return classify_quadratic_general(f);
  return classify_quadratic_no_linear(f.ctx, f.a, f.b, f.c, f.k);
}

std::optional<Scalar> is_scalar_multiple_of_u(const WeylPoly& f) {
  const Context& ctx = f.context();
  ctx.require_q_not_one();
  for (const auto& [m, c] : f.terms()) {
    if (!(m == Monomial{1, 1}) && !(m == Monomial{0, 0})) return std::nullopt;
  }
  Scalar k = f.coefficient({0, 0});
  if (!(f.coefficient({1, 1}) == k * (ctx.q() - ctx.scalar(1)))) return std::nullopt;
  return k;
}

bool is_prime_counterexample(const WeylPoly& f, const WeylPoly& b, const WeylPoly& c) {
  return divides(f, b * c).has_value() && !divides(f, b).has_value() && !divides(f, c).has_value();
}

namespace {

using Kind = PrimalityVerdict::Kind;

bool support_within(const WeylPoly& f, std::initializer_list<Monomial> allowed) {
  return std::all_of(f.terms().begin(), f.terms().end(), [&](const auto& t) {
    return std::find(allowed.begin(), allowed.end(), t.first) != allowed.end();
  });
}

PrimalityVerdict prime(std::string criterion) { return {Kind::Prime, std::move(criterion), std::nullopt}; }

PrimalityVerdict undecided(std::string reason) { return {Kind::Undecided, std::move(reason), std::nullopt}; }

// NotPrime with a witness, if it verifies.
std::optional<PrimalityVerdict> verified(const WeylPoly& f, std::string reason, bool factorization,
                                         const WeylPoly& first, const WeylPoly& second) {
  bool ok = factorization ? (first * second == f && total_degree(first) >= 1u && total_degree(second) >= 1u)
                          : true;
  ok = ok && is_prime_counterexample(f, first, second);
  if (!ok) return std::nullopt;
  return PrimalityVerdict{Kind::NotPrime, std::move(reason), PrimalityVerdict::Witness{factorization, first, second}};
}

PrimalityVerdict not_prime(const WeylPoly& f, std::string reason, bool factorization, const WeylPoly& first,
                           const WeylPoly& second, PrimalityVerdict fallback) {
  return verified(f, std::move(reason), factorization, first, second).value_or(std::move(fallback));
}

PrimalityVerdict from_factorization(const WeylPoly& f, const Factorization& fac, std::string reason) {
  return not_prime(f, std::move(reason), true, fac.left, fac.right, undecided("unverified factorization"));
}

// p x = x g for f = sum of lambda_i x^i y^i; g is the right cofactor.
WeylPoly conjugate_by_x(const WeylPoly& f) {
  const Context& ctx = f.context();
  auto w = divides(WeylPoly::x(ctx), f * WeylPoly::x(ctx));
  if (!w || w->side != Side::Right) throw Error(ErrorCode::Internal, "x does not left-divide f x");
  return w->cofactor;
}

// q^2 xy + [2]_q, the cofactor in y^2 x = (q^2 xy + [2]_q) y.
WeylPoly variables_cofactor(const Context& ctx) {
  WeylPoly g(ctx);
  g.add_term({1, 1}, ctx.q() * ctx.q());
  g.add_term({0, 0}, q_int(2, ctx.q()));
  return g;
}

// Since f u = u f(x/q, qy), a prime f not associate to u must be proportional to f(x/q, qy).
std::optional<PrimalityVerdict> twist_witness(const WeylPoly& f) {
  const Context& ctx = f.context();
  const WeylPoly shifted = substitute(f, ctx.q().inv(), ctx.q());
  // Both sides have the same leading monomial, so proportionality is checked by one ratio.
  const auto& [m, c] = *f.terms().begin();
  const Scalar ratio = shifted.coefficient(m) / c;
  if (shifted == ratio * f) return std::nullopt;
  auto verdict = not_prime(f, "f(x/q, qy) not proportional to f", false, u_poly(ctx), shifted,
                           undecided("f(x/q, qy) not proportional to f, no witness"));
  return verdict;
}

// When all terms x^i y^j share an offset i - j != 0: x or y splits off, and
// for degree 1 the pair from y^2 x = (q^2 xy + [2]_q) y, which needs [2]_q != 0.
std::optional<PrimalityVerdict> offset_witness(const WeylPoly& f, const std::string& reason) {
  const Context& ctx = f.context();
  const auto& lead = f.terms().begin()->first;
  const long offset = static_cast<long>(lead.x) - static_cast<long>(lead.y);
  if (offset == 0) return std::nullopt;
  for (const auto& [m, c] : f.terms()) {
    if (static_cast<long>(m.x) - static_cast<long>(m.y) != offset) return std::nullopt;
  }
  const WeylPoly x = WeylPoly::x(ctx), y = WeylPoly::y(ctx);
  if (*total_degree(f) == 1) {
    const WeylPoly g = variables_cofactor(ctx);
    if (offset > 0) return verified(f, reason, false, g, y);
    return verified(f, reason, false, x, g);
  }
  WeylPoly rest(ctx);
  if (offset > 0) {
    for (const auto& [m, c] : f.terms()) rest.add_term({m.x - 1, m.y}, c);
    return verified(f, reason, true, x, rest);
  }
  for (const auto& [m, c] : f.terms()) rest.add_term({m.x, m.y - 1}, c);
  return verified(f, reason, true, rest, y);
}

// q of infinite order: f is prime iff f is a nonzero multiple of u. Builds a
// verified witness for every other f.
PrimalityVerdict infinite_order(const WeylPoly& f) {
  const Context& ctx = f.context();
  const std::string reason = "not a scalar multiple of u (q not a root of unity)";
  const PrimalityVerdict bare{Kind::NotPrime, reason, std::nullopt};
  if (auto k = is_scalar_multiple_of_u(f); k && !k->is_zero()) {
    return prime("scalar multiple of u, q not a root of unity");
  }
  if (auto v = twist_witness(f)) return *v;

  // Every term x^i y^j now has the same offset i - j.
  if (auto v = offset_witness(f, reason)) return *v;
  const auto& lead = f.terms().begin()->first;
  if (lead.x != lead.y) return bare;
  const WeylPoly x = WeylPoly::x(ctx);
  const WeylPoly g = conjugate_by_x(f);
  if (!divides(f, g)) return not_prime(f, reason, false, x, g, bare);
  // f = lambda_0 u^n with n >= 2.
  const unsigned n = lead.x;
  const WeylPoly u = u_poly(ctx);
  const Scalar lambda0 = f.coefficient({0, 0});
  return not_prime(f, reason, true, lambda0 * pow(u, n - 1), u, bare);
}

std::optional<PrimalityVerdict> single_variable(const WeylPoly& f) {
  const Context& ctx = f.context();
  const bool in_x = std::all_of(f.terms().begin(), f.terms().end(), [](const auto& t) { return t.first.y == 0; });
  const bool in_y = std::all_of(f.terms().begin(), f.terms().end(), [](const auto& t) { return t.first.x == 0; });
  if (!in_x && !in_y) return std::nullopt;
  std::vector<Scalar> coeffs(*total_degree(f) + 1, ctx.scalar(0));
  for (const auto& [m, c] : f.terms()) coeffs[m.x + m.y] = c;
  const UPoly p(ctx.field(), std::move(coeffs));
  auto to_weyl = [&](const UPoly& g) {
    WeylPoly out(ctx);
    for (unsigned i = 0; i < g.coeffs().size(); ++i) out.add_term(in_x ? Monomial{i, 0} : Monomial{0, i}, g.coeffs()[i]);
    return out;
  };
  FactorSearch search = find_factor(p);
  switch (search.outcome) {
    case FactorSearch::Outcome::Reducible:
      return not_prime(f, "reducible in the commutative polynomial ring", true, to_weyl(search.factors->first),
                       to_weyl(search.factors->second), undecided("unverified factorization"));
    case FactorSearch::Outcome::Inconclusive:
      return undecided("single-variable factor search exhausted its budget");
    case FactorSearch::Outcome::Irreducible:
      break;
  }
  if (is_central(f)) return prime("central irreducible single-variable polynomial");
  return undecided("non-central irreducible single-variable polynomial at a root of unity");
}

}  // namespace

PrimalityVerdict classify_prime(const WeylPoly& f) {
  const Context& ctx = f.context();
  ctx.require_q_not_one();
  if (f.is_constant()) return {Kind::NotPrime, "zero or unit", std::nullopt};

  const Scalar one = ctx.scalar(1);
  const auto order = multiplicative_order(ctx.q());

  if (support_within(f, {{1, 1}, {0, 0}})) {
    if (auto k = is_scalar_multiple_of_u(f); k && !k->is_zero()) return prime("bxy + k equal to k*u, k != 0");
    const Scalar b = f.coefficient({1, 1}), k = f.coefficient({0, 0});
    const auto verdict = classify_quadratic_no_linear(ctx, ctx.scalar(0), b, ctx.scalar(0), k);
    if (verdict.reducible()) return from_factorization(f, *verdict.factorization, "reducible bxy + k");
    return not_prime(f, "bxy + k not a multiple of u", false, WeylPoly::x(ctx), conjugate_by_x(f),
                     {Kind::NotPrime, "bxy + k not a multiple of u", std::nullopt});
  }

  if (!order) return infinite_order(f);

  const bool q_minus_one = (ctx.q() + one).is_zero();
  if (q_minus_one && support_within(f, {{2, 0}, {0, 2}, {0, 0}})) {
    const auto verdict = classify_quadratic_no_linear(ctx, f.coefficient({2, 0}), ctx.scalar(0),
                                                      f.coefficient({0, 2}), f.coefficient({0, 0}));
    if (verdict.reducible()) return from_factorization(f, *verdict.factorization, "reducible ax^2 + cy^2 + k");
    return prime("irreducible ax^2 + cy^2 + k at q = -1");
  }

  if (auto v = offset_witness(f, "x or y splits off")) return *v;

  if (*order > 1) {
    if (auto v = single_variable(f)) return *v;
  }

  if (total_degree(f) == 2u) {
    const auto verdict = classify_quadratic(QuadraticForm::from_poly(f));
    if (verdict.reducible()) return from_factorization(f, *verdict.factorization, "reducible quadratic form");
  }

  if (auto v = twist_witness(f)) return *v;

  return undecided("outside the proven primality criteria");
}

}  // namespace qweyl
