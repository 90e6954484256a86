#include "qweyl/oracle.hpp"

#include <algorithm>

#include "linalg.hpp"
#include "qweyl/classify.hpp"
#include "qweyl/text.hpp"

namespace qweyl {

namespace {

std::vector<Monomial> monomials_of_degree(unsigned d) {
  std::vector<Monomial> out;
  for (unsigned x = d + 1; x-- > 0;) out.push_back({x, d - x});
  return out;
}

bool in_support(const EnumSpace& space, const Monomial& m) {
  if (!space.support) return true;
  return std::find(space.support->begin(), space.support->end(), m) != space.support->end();
}

// p^n - 1, saturating.
std::uint64_t nonzero_count(std::uint64_t p, std::size_t n) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (total > UINT64_MAX / p) return UINT64_MAX;
    total *= p;
  }
  return total - 1;
}

void require_nonunit(const WeylPoly& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroInput, "zero polynomial");
  if (f.is_constant()) throw Error(ErrorCode::UnitInput, "nonzero constants are units");
}

void require_context(const WeylPoly& f, const EnumSpace& space) {
  if (!(f.context() == space.ctx)) throw Error(ErrorCode::ContextMismatch, "polynomial and search space differ");
}

}  // namespace

void EnumSpace::validate() const {
  const FieldSpec& f = ctx.field();
  if (f.is_rational() || f.modulus() > 7) {
    throw Error(ErrorCode::InvalidArgument, "oracle spaces need F_p with p <= 7, got " + f.name());
  }
  if (max_total_degree > 3) throw Error(ErrorCode::InvalidArgument, "oracle spaces need total degree <= 3");
}

std::vector<Monomial> EnumSpace::basis() const {
  std::vector<Monomial> out;
  for (unsigned d = max_total_degree + 1; d-- > 0;) {
    for (const Monomial& m : monomials_of_degree(d)) {
      if (in_support(*this, m)) out.push_back(m);
    }
  }
  return out;
}

std::uint64_t EnumSpace::cardinality() const { return nonzero_count(ctx.field().modulus(), basis().size()); }

void enumerate_degree(const EnumSpace& space, unsigned d, bool normalized,
                      const std::function<bool(const WeylPoly&)>& visit) {
  if (space.ctx.field().is_rational()) throw Error(ErrorCode::InvalidArgument, "enumeration needs a finite field");
  const std::uint64_t p = space.ctx.field().modulus();
  std::vector<Monomial> top, lower;
  for (const Monomial& m : monomials_of_degree(d)) {
    if (in_support(space, m)) top.push_back(m);
  }
  for (unsigned e = d; e-- > 0;) {
    for (const Monomial& m : monomials_of_degree(e)) {
      if (in_support(space, m)) lower.push_back(m);
    }
  }
  if (top.empty()) return;
  if (nonzero_count(p, top.size() + lower.size()) > space.cap) {
    throw Error(ErrorCode::SpaceTooLarge, "search space exceeds the cardinality cap");
  }
  std::vector<Monomial> monos = top;
  monos.insert(monos.end(), lower.begin(), lower.end());
  // Odometer with the leading monomial as the most significant digit.
  std::vector<std::uint64_t> digits(monos.size(), 0);
  while (true) {
    std::size_t lead = 0;
    while (lead < top.size() && digits[lead] == 0) ++lead;
    if (lead < top.size() && (!normalized || digits[lead] == 1)) {
      WeylPoly f(space.ctx);
      for (std::size_t i = 0; i < monos.size(); ++i) {
        if (digits[i] != 0) f.add_term(monos[i], space.ctx.scalar(static_cast<long>(digits[i])));
      }
      if (!visit(f)) return;
    }
    std::size_t i = monos.size();
    while (i > 0) {
      --i;
      if (++digits[i] < p) break;
      digits[i] = 0;
      if (i == 0) return;
    }
  }
}

void enumerate_polys(const EnumSpace& space, const std::function<bool(const WeylPoly&)>& visit) {
  space.validate();
  if (space.cardinality() > space.cap) throw Error(ErrorCode::SpaceTooLarge, "search space exceeds the cardinality cap");
  bool go = true;
  for (unsigned d = 0; d <= space.max_total_degree && go; ++d) {
    enumerate_degree(space, d, false, [&](const WeylPoly& f) { return go = visit(f); });
  }
}

std::optional<std::pair<WeylPoly, WeylPoly>> brute_factor(const WeylPoly& f, const EnumSpace& space) {
  space.validate();
  require_context(f, space);
  require_nonunit(f);
  const unsigned n = *total_degree(f);
  std::optional<std::pair<WeylPoly, WeylPoly>> found;
  for (unsigned dg = 1; dg < n && !found; ++dg) {
    const unsigned dh = n - dg;
    if (dg > space.max_total_degree || dh > space.max_total_degree) continue;
    enumerate_degree(space, dg, true, [&](const WeylPoly& g) {
      enumerate_degree(space, dh, false, [&](const WeylPoly& h) {
        if (g * h == f) found.emplace(g, h);
        return !found;
      });
      return !found;
    });
  }
  return found;
}

std::optional<DivisionWitness> brute_divides(const WeylPoly& a, const WeylPoly& c, const EnumSpace& space) {
  space.validate();
  require_context(a, space);
  require_context(c, space);
  if (a.is_zero()) throw Error(ErrorCode::ZeroDivisor, "divisibility by zero");
  if (c.is_zero()) return DivisionWitness{Side::Right, WeylPoly(space.ctx)};
  const unsigned da = *total_degree(a), dc = *total_degree(c);
  if (dc < da) return std::nullopt;
  EnumSpace cofactors = space;
  cofactors.support.reset();
  for (Side side : {Side::Right, Side::Left}) {
    std::optional<DivisionWitness> found;
    enumerate_degree(cofactors, dc - da, false, [&](const WeylPoly& m) {
      if ((side == Side::Right ? a * m : m * a) == c) found = DivisionWitness{side, m};
      return !found;
    });
    if (found) return found;
  }
  return std::nullopt;
}

namespace {

// Basis of the c-part of {(c, m) : b c = f m} (or b c = m f), c over `c_basis`.
std::vector<WeylPoly> multiplier_space(const WeylPoly& f, const WeylPoly& b, const std::vector<Monomial>& c_basis,
                                       unsigned m_degree, Side side) {
  const Context& ctx = f.context();
  std::vector<WeylPoly> columns;
  for (const Monomial& m : c_basis) columns.push_back(b * WeylPoly::monomial(ctx, m, ctx.scalar(1)));
  for (unsigned d = m_degree + 1; d-- > 0;) {
    for (const Monomial& m : monomials_of_degree(d)) {
      WeylPoly mono = WeylPoly::monomial(ctx, m, ctx.scalar(1));
      columns.push_back(-(side == Side::Right ? f * mono : mono * f));
    }
  }
  std::map<Monomial, std::size_t, DescendingDegLex> rows;
  for (const auto& col : columns)
    for (const auto& [m, c] : col.terms()) rows.try_emplace(m, rows.size());
  const FieldSpec& field = ctx.field();
  linalg::Matrix a(rows.size(), linalg::Row(columns.size(), Scalar::zero(field)));
  for (std::size_t j = 0; j < columns.size(); ++j)
    for (const auto& [m, c] : columns[j].terms()) a[rows.at(m)][j] = c;
  std::vector<WeylPoly> out;
  for (const auto& v : linalg::nullspace(std::move(a), field, columns.size())) {
    WeylPoly c(ctx);
    for (std::size_t i = 0; i < c_basis.size(); ++i) c.add_term(c_basis[i], v[i]);
    if (!c.is_zero()) out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

std::optional<std::pair<WeylPoly, WeylPoly>> prime_counterexample_search(const WeylPoly& f, const EnumSpace& space) {
  space.validate();
  require_context(f, space);
  require_nonunit(f);
  const unsigned df = *total_degree(f);
  const unsigned D = space.max_total_degree;
  const std::vector<Monomial> c_basis = space.basis();
  auto f_divides = [&](const WeylPoly& g) { return divides(f, g).has_value(); };

  std::optional<std::pair<WeylPoly, WeylPoly>> found;
  for (unsigned d = 0; d <= D && !found; ++d) {
    if (d + D < df) continue;
    enumerate_degree(space, d, true, [&](const WeylPoly& b) {
      if (d >= df && f_divides(b)) return true;
      for (Side side : {Side::Right, Side::Left}) {
        // The c with f | bc form a subspace V; V avoids the two divisor
        // subspaces iff some spanning vector or sum of two does.
        const auto span = multiplier_space(f, b, c_basis, d + D - df, side);
        std::vector<WeylPoly> candidates = span;
        for (std::size_t i = 0; i < span.size(); ++i)
          for (std::size_t j = i + 1; j < span.size(); ++j) candidates.push_back(span[i] + span[j]);
        for (const WeylPoly& c : candidates) {
          if (c.is_zero() || f_divides(c)) continue;
          if (!is_prime_counterexample(f, b, c)) throw Error(ErrorCode::Internal, "counterexample failed to verify");
          found.emplace(b, c);
          return false;
        }
      }
      return true;
    });
  }
  return found;
}

ProductTable::ProductTable(const EnumSpace& space, unsigned dg, unsigned dh) {
  space.validate();
  enumerate_degree(space, dg, true, [&](const WeylPoly& g) {
    enumerate_degree(space, dh, false, [&](const WeylPoly& h) {
      table_.try_emplace(render(g * h), g, h);
      return true;
    });
    return true;
  });
}

std::optional<std::pair<WeylPoly, WeylPoly>> ProductTable::lookup(const WeylPoly& f) const {
  auto it = table_.find(render(f));
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

void DifferentialReport::record(bool agree, const std::string& description, const std::string& repro) {
  if (agree) {
    ++agreements;
  } else {
    disagreements.push_back({description, repro});
  }
}

std::string repro_command(const Context& ctx, const std::string& subcommand, const std::vector<std::string>& args) {
  std::string out = "qweyl --field " + ctx.field().name() + " --q " + ctx.q().str() + " " + subcommand;
  for (const std::string& a : args) out += " \"" + a + "\"";
  return out;
}

}  // namespace qweyl
