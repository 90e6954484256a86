#include "qweyl/qweyl.h"

#include <cstring>
#include <nlohmann/json.hpp>
#include <string>

#include "qweyl/classify.hpp"
#include "qweyl/oracle.hpp"
#include "qweyl/orelab.hpp"
#include "qweyl/text.hpp"

using nlohmann::ordered_json;
using namespace qweyl;

struct qw_context {
  Context ctx;
};

struct qw_poly {
  WeylPoly f;
};

namespace {

thread_local std::string last_error;
thread_local long last_position = -1;

static_assert(static_cast<int>(ErrorCode::DivisionByZero) + 1 == QW_DIVISION_BY_ZERO);
static_assert(static_cast<int>(ErrorCode::Internal) + 1 == QW_INTERNAL);

qw_status fail(qw_status status, std::string message, long position = -1) {
  last_error = std::move(message);
  last_position = position;
  return status;
}

template <typename Fn>
qw_status guard(Fn&& fn) {
  last_error.clear();
  last_position = -1;
  try {
    fn();
    return QW_OK;
  } catch (const Error& e) {
    long pos = e.position() ? static_cast<long>(*e.position()) : -1;
    return fail(static_cast<qw_status>(static_cast<int>(e.code()) + 1), e.what(), pos);
  } catch (const std::exception& e) {
    return fail(QW_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(const void* p) {
  if (!p) throw Error(ErrorCode::InvalidArgument, "null argument");
}

ordered_json ctx_json(const Context& ctx) { return {{"field", ctx.field().name()}, {"q", ctx.q().str()}}; }

char* record(const std::string& command, const Context& ctx, const ordered_json& input, const ordered_json& verdict,
             const ordered_json& details) {
  ordered_json r;
  r["command"] = command;
  r["ctx"] = ctx_json(ctx);
  r["input"] = input;
  r["verdict"] = verdict;
  r["details"] = details.is_null() ? ordered_json::object() : details;
  return copy_string(r.dump());
}

ordered_json witnesses_json(const std::vector<std::pair<std::string, Scalar>>& w) {
  ordered_json out = ordered_json::object();
  for (const auto& [name, value] : w) out[name] = value.str();
  return out;
}

ordered_json factorization_json(const Factorization& f) {
  return {{"case", std::string(case_name(f.label))},
          {"left", render(f.left)},
          {"right", render(f.right)},
          {"witnesses", witnesses_json(f.witnesses)}};
}

ordered_json division_json(const std::optional<DivisionWitness>& w) {
  if (!w) return ordered_json::object();
  return {{"side", w->side == Side::Right ? "right" : "left"}, {"cofactor", render(w->cofactor)}};
}

EnumSpace space_for(const Context& ctx, unsigned degree) {
  EnumSpace space{ctx, degree, std::nullopt};
  space.validate();
  return space;
}

UPoly x_polynomial(const WeylPoly& f) {
  std::vector<Scalar> coeffs;
  for (const auto& [m, c] : f.terms()) {
    if (m.y != 0) throw Error(ErrorCode::WrongShape, "expected a polynomial in x alone");
    if (coeffs.size() <= m.x) coeffs.resize(m.x + 1, Scalar::zero(f.context().field()));
    coeffs[m.x] = c;
  }
  return UPoly(f.context().field(), std::move(coeffs));
}

void same_context(const qw_poly* a, const qw_poly* b) {
  if (!(a->f.context() == b->f.context())) {
    throw Error(ErrorCode::ContextMismatch, "polynomials from different algebras");
  }
}

}  // namespace

extern "C" {

const char* qw_status_name(qw_status status) {
  if (status == QW_OK) return "Ok";
  if (status == QW_NULL_ARGUMENT) return "NullArgument";
  if (status < QW_OK || status > QW_NULL_ARGUMENT) return "Unknown";
  return error_name(static_cast<ErrorCode>(static_cast<int>(status) - 1)).data();
}

int qw_status_is_usage_error(qw_status status) {
  if (status == QW_NULL_ARGUMENT) return 1;
  if (status <= QW_OK || status > QW_INTERNAL) return 0;
  return is_usage_error(static_cast<ErrorCode>(static_cast<int>(status) - 1)) ? 1 : 0;
}

const char* qw_last_error(void) { return last_error.c_str(); }

long qw_last_error_position(void) { return last_position; }

void qw_string_free(char* s) { std::free(s); }

qw_status qw_context_new(const char* field, const char* q, qw_context** out) {
  if (!field || !q || !out) return fail(QW_NULL_ARGUMENT, "null argument");
  return guard([&] { *out = new qw_context{Context::parse(field, q)}; });
}

void qw_context_free(qw_context* ctx) { delete ctx; }

qw_status qw_poly_parse(const qw_context* ctx, const char* text, qw_poly** out) {
  if (!ctx || !text || !out) return fail(QW_NULL_ARGUMENT, "null argument");
  return guard([&] { *out = new qw_poly{parse_poly(ctx->ctx, text)}; });
}

void qw_poly_free(qw_poly* f) { delete f; }

qw_status qw_poly_render(const qw_poly* f, char** out) {
  if (!f || !out) return fail(QW_NULL_ARGUMENT, "null argument");
  return guard([&] { *out = copy_string(render(f->f)); });
}

qw_status qw_poly_add(const qw_poly* f, const qw_poly* g, qw_poly** out) {
  if (!f || !g || !out) return fail(QW_NULL_ARGUMENT, "null argument");
  return guard([&] { *out = new qw_poly{f->f + g->f}; });
}

qw_status qw_poly_mul(const qw_poly* f, const qw_poly* g, qw_poly** out) {
  if (!f || !g || !out) return fail(QW_NULL_ARGUMENT, "null argument");
  return guard([&] { *out = new qw_poly{f->f * g->f}; });
}

qw_status qw_poly_degree(const qw_poly* f, long* out) {
  if (!f || !out) return fail(QW_NULL_ARGUMENT, "null argument");
  return guard([&] {
    auto d = total_degree(f->f);
    *out = d ? static_cast<long>(*d) : -1;
  });
}

qw_status qw_poly_substitute(const qw_poly* f, const char* lambda, const char* mu, qw_poly** out) {
  if (!f || !lambda || !mu || !out) return fail(QW_NULL_ARGUMENT, "null argument");
  return guard([&] {
    const FieldSpec& field = f->f.context().field();
    *out = new qw_poly{substitute(f->f, Scalar::parse(field, lambda), Scalar::parse(field, mu))};
  });
}

qw_status qw_poly_equal(const qw_poly* f, const qw_poly* g, int* out) {
  if (!f || !g || !out) return fail(QW_NULL_ARGUMENT, "null argument");
  return guard([&] { *out = f->f == g->f ? 1 : 0; });
}

qw_status qw_normal(const qw_poly* f, char** json) {
  if (!f || !json) return fail(QW_NULL_ARGUMENT, "null argument");
  return guard([&] {
    const std::string text = render(f->f);
    *json = record("normal", f->f.context(), {text}, text, nullptr);
  });
}

qw_status qw_mul(const qw_poly* f, const qw_poly* g, char** json) {
  if (!f || !g || !json) return fail(QW_NULL_ARGUMENT, "null argument");
  return guard([&] {
    same_context(f, g);
    *json = record("mul", f->f.context(), {render(f->f), render(g->f)}, render(f->f * g->f), nullptr);
  });
}

qw_status qw_degree(const qw_poly* f, char** json) {
  if (!f || !json) return fail(QW_NULL_ARGUMENT, "null argument");
  return guard([&] {
    auto d = total_degree(f->f);
    *json = record("deg", f->f.context(), {render(f->f)}, d ? ordered_json(*d) : ordered_json(nullptr), nullptr);
  });
}

qw_status qw_substitute(const qw_poly* f, const char* lambda, const char* mu, char** json) {
  if (!f || !lambda || !mu || !json) return fail(QW_NULL_ARGUMENT, "null argument");
  return guard([&] {
    const FieldSpec& field = f->f.context().field();
    const Scalar l = Scalar::parse(field, lambda), m = Scalar::parse(field, mu);
    *json = record("subst", f->f.context(), {render(f->f), l.str(), m.str()}, render(substitute(f->f, l, m)),
                   nullptr);
  });
}

qw_status qw_divides(const qw_poly* a, const qw_poly* c, char** json) {
  if (!a || !c || !json) return fail(QW_NULL_ARGUMENT, "null argument");
  return guard([&] {
    same_context(a, c);
    auto w = divides(a->f, c->f);
    *json = record("divides", a->f.context(), {render(a->f), render(c->f)}, w ? "Divides" : "DoesNotDivide",
                   division_json(w));
  });
}

qw_status qw_normality(const qw_poly* f, char** json) {
  if (!f || !json) return fail(QW_NULL_ARGUMENT, "null argument");
  return guard([&] {
    auto w = is_normal(f->f);
    ordered_json details = ordered_json::object();
    if (w) details = {{"gx", render(w->gx)}, {"gy", render(w->gy)}};
    *json = record("normality", f->f.context(), {render(f->f)}, w ? "Normal" : "NotNormal", details);
  });
}

qw_status qw_central(const qw_poly* f, char** json) {
  if (!f || !json) return fail(QW_NULL_ARGUMENT, "null argument");
  return guard([&] {
    const bool central = is_central(f->f);
    auto order = multiplicative_order(f->f.context().q());
    ordered_json details = {{"q_order", order ? ordered_json(*order) : ordered_json(nullptr)}};
    *json = record("central", f->f.context(), {render(f->f)}, central ? "Central" : "NotCentral", details);
  });
}

qw_status qw_discriminant(const qw_poly* f, char** json) {
  if (!f || !json) return fail(QW_NULL_ARGUMENT, "null argument");
  return guard([&] {
    const QuadraticForm form = QuadraticForm::from_poly(f->f);
    const Scalar disc = quantum_discriminant(form);
    ordered_json details = {{"a", form.a.str()},
                            {"b", form.b.str()},
                            {"c", form.c.str()},
                            {"is_square", square_root(disc).has_value()}};
    *json = record("discriminant", f->f.context(), {render(f->f)}, disc.str(), details);
  });
}

qw_status qw_factor(const qw_poly* f, int all_cases, char** json) {
  if (!f || !json) return fail(QW_NULL_ARGUMENT, "null argument");
  return guard([&] {
    const QuadraticForm form = QuadraticForm::from_poly(f->f);
    const auto verdict = classify_quadratic(form);
    ordered_json details = ordered_json::object();
    if (verdict.reducible()) details = factorization_json(*verdict.factorization);
    if (all_cases) {
      ordered_json cases = ordered_json::array();
      if (!form.has_linear_terms()) {
        for (const auto& fac : firing_cases(form.ctx, form.a, form.b, form.c, form.k)) {
          cases.push_back(factorization_json(fac));
        }
      } else if (verdict.reducible()) {
        cases.push_back(factorization_json(*verdict.factorization));
      }
      details["all_cases"] = cases;
    }
    *json = record("factor", f->f.context(), {render(f->f)}, verdict.reducible() ? "Reducible" : "Irreducible",
                   details);
  });
}

qw_status qw_prime(const qw_poly* f, char** json) {
  if (!f || !json) return fail(QW_NULL_ARGUMENT, "null argument");
  return guard([&] {
    const PrimalityVerdict v = classify_prime(f->f);
    ordered_json details;
    details[v.kind == PrimalityVerdict::Kind::Prime ? "criterion" : "reason"] = v.criterion;
    if (v.witness) {
      ordered_json w = {{"kind", v.witness->factorization ? "factorization" : "counterexample"},
                        {"first", render(v.witness->first)},
                        {"second", render(v.witness->second)}};
      if (!v.witness->factorization) w["product"] = render(v.witness->first * v.witness->second);
      details["witness"] = w;
    }
    *json = record("prime", f->f.context(), {render(f->f)}, std::string(kind_name(v.kind)), details);
  });
}

qw_status qw_oracle_factor(const qw_poly* f, unsigned degree, char** json) {
  if (!f || !json) return fail(QW_NULL_ARGUMENT, "null argument");
  return guard([&] {
    const EnumSpace space = space_for(f->f.context(), degree);
    auto found = brute_factor(f->f, space);
    ordered_json details = {{"bound", degree}};
    if (found) {
      details["left"] = render(found->first);
      details["right"] = render(found->second);
    }
    *json = record("oracle-factor", f->f.context(), {render(f->f)}, found ? "Reducible" : "NoFactorizationUpToBound",
                   details);
  });
}

qw_status qw_oracle_divides(const qw_poly* a, const qw_poly* c, char** json) {
  if (!a || !c || !json) return fail(QW_NULL_ARGUMENT, "null argument");
  return guard([&] {
    same_context(a, c);
    const EnumSpace space = space_for(a->f.context(), 0);
    auto w = brute_divides(a->f, c->f, space);
    *json = record("oracle-divides", a->f.context(), {render(a->f), render(c->f)}, w ? "Divides" : "DoesNotDivide",
                   division_json(w));
  });
}

qw_status qw_oracle_prime_search(const qw_poly* f, unsigned degree, char** json) {
  if (!f || !json) return fail(QW_NULL_ARGUMENT, "null argument");
  return guard([&] {
    const EnumSpace space = space_for(f->f.context(), degree);
    auto found = prime_counterexample_search(f->f, space);
    ordered_json details = {{"bound", degree}};
    if (found) {
      details["b"] = render(found->first);
      details["c"] = render(found->second);
      details["product"] = render(found->first * found->second);
    }
    *json = record("oracle-prime-search", f->f.context(), {render(f->f)},
                   found ? "CounterexampleFound" : "NoCounterexampleUpToBound", details);
  });
}

qw_status qw_ore_recenter(const qw_poly* f, char** json) {
  if (!f || !json) return fail(QW_NULL_ARGUMENT, "null argument");
  return guard([&] {
    const Recentered r = recenter_q_minus_1(f->f);
    ordered_json details = {{"a", r.a.str()},
                            {"k", r.k.str()},
                            {"p", r.p.str()},
                            {"t", "y - 1/(2*x)"}};
    *json = record("ore-recenter", f->f.context(), {render(f->f)}, r.image.str(), details);
  });
}

qw_status qw_ore_decide(const qw_context* ctx, const char* a, const char* k, char** json) {
  if (!ctx || !a || !k || !json) return fail(QW_NULL_ARGUMENT, "null argument");
  return guard([&] {
    const FieldSpec& field = ctx->ctx.field();
    const Scalar sa = Scalar::parse(field, a), sk = Scalar::parse(field, k);
    const OreDecision d = factor_t2_minus_v_decide(ctx->ctx, sa, sk);
    ordered_json details = {{"branch", d.branch}, {"witnesses", witnesses_json(d.witnesses)}};
    if (d.w) details["w"] = d.w->str();
    *json = record("ore-decide", ctx->ctx, {sa.str(), sk.str()}, d.reducible ? "Reducible" : "Irreducible", details);
  });
}

qw_status qw_ore_verify(const qw_poly* v, const qw_poly* const* samples, size_t nsamples, char** json) {
  if (!v || !json || (nsamples > 0 && !samples)) return fail(QW_NULL_ARGUMENT, "null argument");
  return guard([&] {
    const Context& ctx = v->f.context();
    const FieldSpec& field = ctx.field();
    ordered_json input = {render(v->f)};
    std::vector<RatFunc> rs;
    for (size_t i = 0; i < nsamples; ++i) {
      require(samples[i]);
      if (!(samples[i]->f.context() == ctx)) throw Error(ErrorCode::ContextMismatch, "sample from another algebra");
      rs.push_back(RatFunc::from_poly(x_polynomial(samples[i]->f)));
      input.push_back(render(samples[i]->f));
    }
    if (nsamples == 0) {
      const RatFunc x = RatFunc::x(field);
      rs = {x, x * x, x * x * x};
    }
    const LemmaReport report = normal_lemma_verify(RatFunc::from_poly(x_polynomial(v->f)), rs, ctx.q());
    ordered_json checks = ordered_json::array();
    for (const LemmaCheck& c : report.checks) {
      checks.push_back({{"name", c.name},
                        {"passed", c.passed},
                        {"counterexample", c.counterexample ? ordered_json(c.counterexample->str()) : ordered_json(nullptr)}});
    }
    *json = record("ore-verify", ctx, input, report.passed() ? "AllChecksPass" : "CheckFailed",
                   {{"checks", checks}});
  });
}

}  // extern "C"
