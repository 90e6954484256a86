// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "qweyl/classify.hpp"
#include "qweyl/oracle.hpp"
#include "qweyl/orelab.hpp"
#include "qweyl/text.hpp"
#include "support.hpp"

using namespace qweyl;
using namespace qweyl::testing;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  std::vector<std::string> failures;

  void require(bool cond, const std::string& what) {
    if (cond) return;
    ok = false;
    if (failures.size() < 10) failures.push_back(what);
  }
};

std::vector<Context> f_p_contexts(std::uint64_t p, bool include_one) {
  std::vector<Context> out;
  for (long q = 1; q < long(p); ++q) {
    if (q == 1 && !include_one) continue;
    out.push_back(prime_ctx(p, q));
  }
  return out;
}

// Distinct rationals n/d with |n|, d <= 5.
std::vector<Scalar> rational_grid() {
  const FieldSpec Q = FieldSpec::rationals();
  std::vector<Scalar> out;
  std::set<std::string> seen;
  for (long n = -5; n <= 5; ++n)
    for (long d = 1; d <= 5; ++d) {
      Scalar s(Q, n, d);
      if (seen.insert(s.str()).second) out.push_back(s);
    }
  return out;
}

std::vector<Scalar> residues(const Context& ctx) {
  std::vector<Scalar> out;
  for (long v = 0; v < long(ctx.field().modulus()); ++v) out.push_back(ctx.scalar(v));
  return out;
}

Scalar q_integer(unsigned n, const Scalar& q) {
  Scalar sum = Scalar::zero(q.field()), power = Scalar::one(q.field());
  for (unsigned i = 0; i < n; ++i) {
    sum += power;
    power *= q;
  }
  return sum;
}

// 1. yx^n = q^n x^n y + [n] x^(n-1) and y^n x = q^n x y^n + [n] y^(n-1).
Outcome reordering() {
  Outcome o;
  std::vector<Context> contexts{rational_ctx(2), rational_ctx(-1), rational_ctx(3, 2)};
  for (const Context& c : f_p_contexts(5, true)) contexts.push_back(c);
  const auto start = std::chrono::steady_clock::now();
  for (const Context& ctx : contexts) {
    const WeylPoly x = WeylPoly::x(ctx), y = WeylPoly::y(ctx);
    WeylPoly xn = WeylPoly::constant(ctx, ctx.scalar(1)), yn = xn;
    Scalar qn = ctx.scalar(1);
    for (unsigned n = 1; n <= 20; ++n) {
      xn = xn * x;
      yn = yn * y;
      qn *= ctx.q();
      WeylPoly e1(ctx), e2(ctx);
      e1.add_term({n, 1}, qn);
      e1.add_term({n - 1, 0}, q_integer(n, ctx.q()));
      e2.add_term({1, n}, qn);
      e2.add_term({0, n - 1}, q_integer(n, ctx.q()));
      o.require(y * xn == e1, "y x^" + std::to_string(n) + " at q=" + ctx.q().str() + " over " + ctx.field().name());
      o.require(yn * x == e2, "y^" + std::to_string(n) + " x at q=" + ctx.q().str() + " over " + ctx.field().name());
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(secs < 5.0, "runtime " + std::to_string(secs) + " s");
  o.detail = std::to_string(contexts.size()) + " contexts, n <= 20";
  return o;
}

// 2. Worked products.
Outcome worked_products() {
  Outcome o;
  std::mt19937_64 rng(2);
  for (int i = 0; i < 20; ++i) {
    long num = 0;
    while (num == 0) num = static_cast<long>(rng() % 13) - 6;
    const Context ctx = rational_ctx(num, static_cast<long>(rng() % 4) + 1);
    Scalar r = Scalar::zero(ctx.field());
    while (r.is_zero()) r = random_scalar(ctx.field(), rng, 7);
    const WeylPoly x = WeylPoly::x(ctx), y = WeylPoly::y(ctx);
    const WeylPoly one = WeylPoly::constant(ctx, ctx.scalar(1));
    const WeylPoly f = x + r * r * y + r * one, g = x + r * r * y - r * one;
    WeylPoly expected(ctx);
    expected.add_term({2, 0}, ctx.scalar(1));
    expected.add_term({1, 1}, q_integer(2, ctx.q()) * r * r);
    expected.add_term({0, 2}, r * r * r * r);
    o.require(f * g == expected, "fg at q=" + ctx.q().str() + ", r=" + r.str());
  }
  for (const Context& ctx : {rational_ctx(2), rational_ctx(-1), rational_ctx(3, 2), prime_ctx(5, 2), prime_ctx(7, 3)}) {
    const WeylPoly x = WeylPoly::x(ctx), y = WeylPoly::y(ctx), u = u_poly(ctx);
    o.require(u * x == ctx.q() * (x * u), "ux = qxu at q=" + ctx.q().str());
    o.require(y * u == ctx.q() * (u * y), "yu = quy at q=" + ctx.q().str());
    WeylPoly g(ctx);
    g.add_term({1, 1}, ctx.q() * ctx.q());
    g.add_term({0, 0}, q_integer(2, ctx.q()));
    o.require(y * y * x == g * y, "y^2 x at q=" + ctx.q().str());
  }
  o.detail = "20 random (q, r), normal-element and variables identities";
  return o;
}

void check_factorization(Outcome& o, const WeylPoly& f, const ReducibilityVerdict& v) {
  if (v.reducible()) o.require(v.factorization->left * v.factorization->right == f, "remultiply " + render(f));
}

// 3. Classifiers against brute force.
Outcome exhaustive_classifiers() {
  Outcome o;
  std::uint64_t forms = 0, reducible = 0;
  for (std::uint64_t p : {5u, 7u}) {
    for (const Context& ctx : f_p_contexts(p, false)) {
      const ProductTable table(EnumSpace{ctx, 1, std::nullopt}, 1, 1);
      const auto vals = residues(ctx);
      const Scalar zero = ctx.scalar(0);
      for (const Scalar& a : vals)
        for (const Scalar& b : vals)
          for (const Scalar& c : vals)
            for (const Scalar& k : vals) {
              if (a.is_zero() && b.is_zero() && c.is_zero()) continue;
              const QuadraticForm form{ctx, a, b, c, zero, zero, k};
              const WeylPoly f = form.to_poly();
              const auto v = classify_quadratic_no_linear(ctx, a, b, c, k);
              const bool brute = table.lookup(f).has_value();
              o.require(v.reducible() == brute, repro_command(ctx, "factor", {render(f)}));
              check_factorization(o, f, v);
              ++forms;
              reducible += brute;
            }
    }
  }
  for (const Context& ctx : f_p_contexts(3, false)) {
    const ProductTable table(EnumSpace{ctx, 1, std::nullopt}, 1, 1);
    const auto vals = residues(ctx);
    for (const Scalar& a : vals)
      for (const Scalar& b : vals)
        for (const Scalar& c : vals)
          for (const Scalar& d : vals)
            for (const Scalar& e : vals)
              for (const Scalar& k : vals) {
                const QuadraticForm form{ctx, a, b, c, d, e, k};
                if (!form.is_degree_two()) continue;
                const WeylPoly f = form.to_poly();
                const auto v = classify_quadratic_general(form);
                const bool brute = table.lookup(f).has_value();
                o.require(v.reducible() == brute, repro_command(ctx, "factor", {render(f)}));
                check_factorization(o, f, v);
                ++forms;
                reducible += brute;
              }
  }
  o.detail = std::to_string(forms) + " forms, " + std::to_string(reducible) + " reducible";
  return o;
}

// Reducibility conditions for a x^2 + c y^2 + k with a, c != 0.
bool diagonal_reducible(const Context& ctx, const Scalar& a, const Scalar& c, const Scalar& k) {
  const Scalar& q = ctx.q();
  if (!k.is_zero() && a * c == -(q * k * k)) return true;
  if (q != ctx.scalar(-1)) return false;
  const auto tau = square_root(a * c);
  if (!tau) return false;
  for (const Scalar& t : {*tau, -*tau}) {
    if (square_root((t - k) * c)) return true;
  }
  return false;
}

// 4. Closed-form conditions for bxy + k and a x^2 + c y^2 + k.
Outcome closed_forms() {
  Outcome o;
  std::uint64_t checked = 0;
  auto run = [&](const Context& ctx, const std::vector<Scalar>& vals, const ProductTable* table) {
    const Scalar zero = ctx.scalar(0);
    for (const Scalar& b : vals) {
      if (b.is_zero()) continue;
      for (const Scalar& k : vals) {
        const bool expected = k.is_zero() || b == ctx.q() * k;
        const auto v = classify_quadratic_no_linear(ctx, zero, b, zero, k);
        const WeylPoly f = QuadraticForm{ctx, zero, b, zero, zero, zero, k}.to_poly();
        o.require(v.reducible() == expected, repro_command(ctx, "factor", {render(f)}));
        if (table) o.require(table->lookup(f).has_value() == expected, "oracle " + repro_command(ctx, "factor", {render(f)}));
        check_factorization(o, f, v);
        ++checked;
      }
    }
    for (const Scalar& a : vals) {
      if (a.is_zero()) continue;
      for (const Scalar& c : vals) {
        if (c.is_zero()) continue;
        for (const Scalar& k : vals) {
          const bool expected = diagonal_reducible(ctx, a, c, k);
          const auto v = classify_quadratic_no_linear(ctx, a, zero, c, k);
          const WeylPoly f = QuadraticForm{ctx, a, zero, c, zero, zero, k}.to_poly();
          o.require(v.reducible() == expected, repro_command(ctx, "factor", {render(f)}));
          if (table) o.require(table->lookup(f).has_value() == expected, "oracle " + repro_command(ctx, "factor", {render(f)}));
          check_factorization(o, f, v);
          ++checked;
        }
      }
    }
  };
  for (std::uint64_t p : {5u, 7u}) {
    for (const Context& ctx : f_p_contexts(p, false)) {
      const ProductTable table(EnumSpace{ctx, 1, std::nullopt}, 1, 1);
      run(ctx, residues(ctx), &table);
    }
  }
  const auto grid = rational_grid();
  for (const Scalar& q : grid) {
    if (q.is_zero() || q.is_one()) continue;
    run(Context(q.field(), q), grid, nullptr);
  }
  o.detail = std::to_string(checked) + " forms over F_5, F_7 and a height-5 rational grid";
  return o;
}

// 5. Primality suite.
Outcome primality() {
  Outcome o;
  using Kind = PrimalityVerdict::Kind;

  std::vector<Context> infinite{rational_ctx(2), rational_ctx(3), rational_ctx(1, 2), rational_ctx(-2),
                                rational_ctx(3, 2), rational_ctx(-3, 4), rational_ctx(5, 3)};
  std::vector<Context> all = infinite;
  all.push_back(rational_ctx(-1));
  for (std::uint64_t p : {5u, 7u, 11u})
    for (const Context& c : f_p_contexts(p, false)) all.push_back(c);

  for (const Context& ctx : all) {
    const WeylPoly u = u_poly(ctx);
    o.require(classify_prime(u).kind == Kind::Prime, "u at q=" + ctx.q().str() + " over " + ctx.field().name());
    o.require(classify_prime(ctx.scalar(3) * u).kind == Kind::Prime, "3u at q=" + ctx.q().str());
    if (ctx.q() == ctx.scalar(-1)) continue;
    const WeylPoly x = WeylPoly::x(ctx), y = WeylPoly::y(ctx);
    WeylPoly g(ctx);
    g.add_term({1, 1}, ctx.q() * ctx.q());
    g.add_term({0, 0}, q_integer(2, ctx.q()));
    o.require(is_prime_counterexample(x, g, y), "variables witness for x at q=" + ctx.q().str());
    for (const WeylPoly& v : {x, y}) {
      const auto verdict = classify_prime(v);
      o.require(verdict.kind == Kind::NotPrime && verdict.witness &&
                    is_prime_counterexample(v, verdict.witness->first, verdict.witness->second),
                render(v) + " at q=" + ctx.q().str() + " over " + ctx.field().name());
    }
  }

  // b xy + k at q = -1.
  std::vector<std::pair<Context, std::vector<Scalar>>> minus_one{{rational_ctx(-1), rational_grid()}};
  for (std::uint64_t p : {5u, 7u, 11u}) {
    const Context ctx = prime_ctx(p, long(p) - 1);
    minus_one.emplace_back(ctx, residues(ctx));
  }
  std::uint64_t bxy = 0;
  for (const auto& [ctx, vals] : minus_one) {
    for (const Scalar& b : vals) {
      if (b.is_zero()) continue;
      for (const Scalar& k : vals) {
        WeylPoly f(ctx);
        f.add_term({1, 1}, b);
        f.add_term({0, 0}, k);
        const auto v = classify_prime(f);
        const bool expected = b == ctx.scalar(-2) * k;
        o.require((v.kind == Kind::Prime) == expected && v.kind != Kind::Undecided,
                  repro_command(ctx, "prime", {render(f)}));
        ++bxy;
      }
    }
  }

  // No Prime verdict over F_5 survives a counterexample search at degree 2.
  std::uint64_t primes = 0, searched = 0;
  for (const Context& ctx : f_p_contexts(5, false)) {
    const EnumSpace space{ctx, 2, std::nullopt};
    for (unsigned d = 1; d <= 2; ++d) {
      enumerate_degree(space, d, true, [&](const WeylPoly& f) {
        ++searched;
        const auto v = classify_prime(f);
        if (v.kind == Kind::NotPrime && v.witness) {
          const auto& w = *v.witness;
          o.require(w.factorization ? w.first * w.second == f : is_prime_counterexample(f, w.first, w.second),
                    "witness " + repro_command(ctx, "prime", {render(f)}));
        }
        if (v.kind != Kind::Prime) return true;
        ++primes;
        const auto found = prime_counterexample_search(f, space);
        o.require(!found, "contradicted " + repro_command(ctx, "prime", {render(f)}));
        return true;
      });
    }
  }
  o.detail = std::to_string(all.size()) + " contexts for u, x, y; " + std::to_string(bxy) + " bxy + k forms; " +
             std::to_string(primes) + " Prime verdicts among " + std::to_string(searched) +
             " monic F_5 polynomials survive the degree-2 search";
  return o;
}

// 6. u^m coefficients.
Outcome u_powers() {
  Outcome o;
  for (const Context& ctx : {rational_ctx(2), rational_ctx(-1), rational_ctx(3)}) {
    const WeylPoly u = u_poly(ctx);
    WeylPoly um = WeylPoly::constant(ctx, ctx.scalar(1));
    for (unsigned m = 0; m <= 6; ++m) {
      const auto coeffs = u_power_coeffs(m, ctx);
      WeylPoly rebuilt(ctx);
      for (unsigned i = 0; i < coeffs.size(); ++i) rebuilt.add_term({i, i}, coeffs[i]);
      o.require(rebuilt == um, "u^" + std::to_string(m) + " at q=" + ctx.q().str());
      um = um * u;
    }
  }
  o.detail = "m <= 6, q in {2, -1, 3}";
  return o;
}

// 7. Ore route against the classifier at q = -1.
Outcome two_routes() {
  Outcome o;
  std::uint64_t pairs = 0, reducible = 0;
  std::vector<std::pair<Context, std::vector<Scalar>>> grids{{rational_ctx(-1), rational_grid()}};
  const Context f5 = prime_ctx(5, 4);
  grids.emplace_back(f5, residues(f5));
  for (const auto& [ctx, vals] : grids) {
    const Scalar zero = ctx.scalar(0), one = ctx.scalar(1);
    for (const Scalar& a : vals) {
      if (a.is_zero()) continue;
      for (const Scalar& k : vals) {
        const auto decision = factor_t2_minus_v_decide(ctx, a, k);
        const auto verdict = classify_quadratic_no_linear(ctx, a, zero, one, k);
        const std::string f = render(QuadraticForm{ctx, a, zero, one, zero, zero, k}.to_poly());
        o.require(decision.reducible == verdict.reducible(), repro_command(ctx, "ore-decide", {a.str(), k.str()}));
        ++pairs;
        if (!verdict.reducible()) continue;
        ++reducible;
        const RatFunc w = reconstruct_w(verdict.factorization->left, verdict.factorization->right);
        o.require(verify_w(ctx, a, k, w), "reconstructed w for " + f);
        if (decision.w) o.require(verify_w(ctx, a, k, *decision.w), "decided w for " + f);
      }
    }
  }
  o.detail = std::to_string(pairs) + " (a, k) pairs, " + std::to_string(reducible) + " reducible with verified w";
  return o;
}

// 8. Normal-element lemma checks.
Outcome normal_lemma() {
  Outcome o;
  const FieldSpec Q = FieldSpec::rationals();
  const RatFunc x = RatFunc::x(Q);
  const std::vector<RatFunc> samples{x, x * x, x * x * x};
  const auto pass = normal_lemma_verify(x * x, samples, Scalar(Q, -1L));
  o.require(pass.passed() && pass.checks.size() == 3, "v = x^2 at q = -1");
  const auto fail = normal_lemma_verify(x * x, samples, Scalar(Q, 2L));
  bool named = false;
  for (const auto& c : fail.checks) {
    if (c.name == "delta sigma = -sigma delta") {
      named = !c.passed && c.counterexample && *c.counterexample == x;
    }
  }
  o.require(!fail.passed() && named, "q = 2 fails the skew check at r = x");
  o.detail = "q = -1 passes; q = 2 fails '" + fail.checks[2].name + "' at r = x";
  return o;
}

// 9. Round trip and CLI determinism.
Outcome round_trip_and_determinism() {
  Outcome o;
  std::mt19937_64 rng(9);
  std::uint64_t polys = 0;
  for (const Context& ctx : {rational_ctx(3, 2), rational_ctx(-1), prime_ctx(5, 2), prime_ctx(7, 3)}) {
    for (int i = 0; i < 10000; ++i) {
      const WeylPoly f = random_poly(ctx, rng, 4, 5, 20);
      const std::string text = render(f);
      o.require(parse_poly(ctx, text) == f && render(parse_poly(ctx, text)) == text, text);
      ++polys;
    }
  }
  const std::string cli = shell_quote(QWEYL_CLI_PATH);
  const std::vector<std::string> commands{
      "--field q --q 2 prime 'x*y + 1'",
      "--field fp:5 --q 2 --json prime x",
      "--field q --q -1 --all-cases --json factor 'x^2 + 4*y^2 - 2'",
      "--field fp:5 --q 2 --json oracle-prime-search y",
      "--field q --q -1 --json ore-decide 4 2",
      "--field q --q 2 normal 'y^2*x'",
  };
  for (const auto& c : commands) {
    const auto first = run_command(cli + " " + c), second = run_command(cli + " " + c);
    o.require(first.exit_code == 0 && first.out == second.out && !first.out.empty(), c);
  }
  o.detail = std::to_string(polys) + " round trips, " + std::to_string(commands.size()) + " repeated CLI runs";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"reordering identities", reordering},
      {"worked products", worked_products},
      {"exhaustive classifier validation", exhaustive_classifiers},
      {"closed forms for bxy + k and ax^2 + cy^2 + k", closed_forms},
      {"primality suite", primality},
      {"u-power recursion", u_powers},
      {"two-route consistency at q = -1", two_routes},
      {"normal-element lemma verifier", normal_lemma},
      {"parser round trip and CLI determinism", round_trip_and_determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& [name, fn] = criteria[i];
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.ok = false;
      o.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (o.ok ? "PASS" : "FAIL") << " [" << i + 1 << "] " << name << ": " << o.detail << " (" << timing
              << ")\n";
    for (const auto& f : o.failures) std::cout << "    " << f << "\n";
    std::cout.flush();
    failed += !o.ok;
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}
