#include <gtest/gtest.h>

#include <memory>
#include <nlohmann/json.hpp>
#include <string>

#include "qweyl/qweyl.h"

using nlohmann::json;

namespace {

struct ContextDeleter {
  void operator()(qw_context* c) const { qw_context_free(c); }
};
struct PolyDeleter {
  void operator()(qw_poly* f) const { qw_poly_free(f); }
};
using ContextPtr = std::unique_ptr<qw_context, ContextDeleter>;
using PolyPtr = std::unique_ptr<qw_poly, PolyDeleter>;

ContextPtr make_context(const char* field, const char* q) {
  qw_context* ctx = nullptr;
  EXPECT_EQ(qw_context_new(field, q, &ctx), QW_OK) << qw_last_error();
  return ContextPtr(ctx);
}

PolyPtr parse(const qw_context* ctx, const char* text) {
  qw_poly* f = nullptr;
  EXPECT_EQ(qw_poly_parse(ctx, text, &f), QW_OK) << qw_last_error();
  return PolyPtr(f);
}

std::string render(const qw_poly* f) {
  char* s = nullptr;
  EXPECT_EQ(qw_poly_render(f, &s), QW_OK);
  std::string out(s);
  qw_string_free(s);
  return out;
}

// Runs a record-producing call and parses its output.
template <typename Fn>
json call(Fn&& fn) {
  char* text = nullptr;
  const qw_status status = fn(&text);
  EXPECT_EQ(status, QW_OK) << qw_last_error();
  if (status != QW_OK) return json::object();
  json j = json::parse(text);
  qw_string_free(text);
  return j;
}

}  // namespace

TEST(CApi, ContextErrors) {
  qw_context* ctx = nullptr;
  EXPECT_EQ(qw_context_new("q", "1", &ctx), QW_OK);
  qw_context_free(ctx);
  EXPECT_EQ(qw_context_new("q", "0", &ctx), QW_Q_IS_ZERO);
  EXPECT_EQ(qw_context_new("fp:2", "1", &ctx), QW_CHARACTERISTIC_TWO);
  EXPECT_EQ(qw_context_new("fp:9", "2", &ctx), QW_INVALID_MODULUS);
  EXPECT_EQ(qw_context_new(nullptr, "2", &ctx), QW_NULL_ARGUMENT);
  EXPECT_STREQ(qw_status_name(QW_Q_IS_ONE), "QIsOne");
  EXPECT_STREQ(qw_status_name(QW_OK), "Ok");
  EXPECT_TRUE(qw_status_is_usage_error(QW_SYNTAX_ERROR));
  EXPECT_FALSE(qw_status_is_usage_error(QW_Q_IS_ONE));
}

TEST(CApi, ParseRenderAndArithmetic) {
  auto ctx = make_context("q", "2");
  auto yx = parse(ctx.get(), "y*x");
  EXPECT_EQ(render(yx.get()), "2*x*y + 1");

  qw_poly* bad = nullptr;
  EXPECT_EQ(qw_poly_parse(ctx.get(), "x^", &bad), QW_SYNTAX_ERROR);
  EXPECT_EQ(qw_last_error_position(), 2);
  EXPECT_NE(std::string(qw_last_error()), "");

  auto x = parse(ctx.get(), "x"), y = parse(ctx.get(), "y");
  qw_poly* prod = nullptr;
  ASSERT_EQ(qw_poly_mul(y.get(), x.get(), &prod), QW_OK);
  int equal = 0;
  ASSERT_EQ(qw_poly_equal(prod, yx.get(), &equal), QW_OK);
  EXPECT_EQ(equal, 1);
  qw_poly_free(prod);

  long degree = 0;
  ASSERT_EQ(qw_poly_degree(yx.get(), &degree), QW_OK);
  EXPECT_EQ(degree, 2);
  auto zero = parse(ctx.get(), "0");
  ASSERT_EQ(qw_poly_degree(zero.get(), &degree), QW_OK);
  EXPECT_EQ(degree, -1);

  auto other = make_context("q", "3");
  auto x3 = parse(other.get(), "x");
  qw_poly* sum = nullptr;
  EXPECT_EQ(qw_poly_add(x.get(), x3.get(), &sum), QW_CONTEXT_MISMATCH);
}

TEST(CApi, RecordShape) {
  auto ctx = make_context("fp:5", "2");
  auto x = parse(ctx.get(), "x");
  const json r = call([&](char** o) { return qw_prime(x.get(), o); });
  EXPECT_EQ(r["command"], "prime");
  EXPECT_EQ(r["ctx"]["field"], "fp:5");
  EXPECT_EQ(r["ctx"]["q"], "2");
  ASSERT_TRUE(r["input"].is_array());
  EXPECT_EQ(r["input"][0], "x");
  EXPECT_EQ(r["verdict"], "NotPrime");
  EXPECT_EQ(r["details"]["witness"]["first"], "4*x*y + 3");
  EXPECT_EQ(r["details"]["witness"]["second"], "y");
}

TEST(CApi, FactorRecordsRemultiply) {
  auto ctx = make_context("q", "-1");
  for (const char* text : {"x^2 + 4*y^2 - 2", "y^2 - 1", "x*y + x + y + 1", "x*y + 1"}) {
    auto f = parse(ctx.get(), text);
    const json r = call([&](char** o) { return qw_factor(f.get(), 1, o); });
    ASSERT_TRUE(r["details"]["all_cases"].is_array());
    for (const json& fac : r["details"]["all_cases"]) {
      auto left = parse(ctx.get(), fac["left"].get<std::string>().c_str());
      auto right = parse(ctx.get(), fac["right"].get<std::string>().c_str());
      qw_poly* prod = nullptr;
      ASSERT_EQ(qw_poly_mul(left.get(), right.get(), &prod), QW_OK);
      int equal = 0;
      qw_poly_equal(prod, f.get(), &equal);
      EXPECT_EQ(equal, 1) << text;
      qw_poly_free(prod);
    }
  }
}

TEST(CApi, OreRecords) {
  auto m1 = make_context("q", "-1");
  char* out = nullptr;
  EXPECT_EQ(call([&](char** o) { return qw_ore_decide(m1.get(), "4", "2", o); })["verdict"], "Reducible");
  EXPECT_EQ(call([&](char** o) { return qw_ore_decide(m1.get(), "1", "2", o); })["verdict"], "Irreducible");

  auto v = parse(m1.get(), "x^2");
  const json ok = call([&](char** o) { return qw_ore_verify(v.get(), nullptr, 0, o); });
  EXPECT_EQ(ok["verdict"], "AllChecksPass");
  EXPECT_EQ(ok["details"]["checks"].size(), 3u);

  auto q2 = make_context("q", "2");
  auto v2 = parse(q2.get(), "x^2");
  const json bad = call([&](char** o) { return qw_ore_verify(v2.get(), nullptr, 0, o); });
  EXPECT_EQ(bad["verdict"], "CheckFailed");
  EXPECT_EQ(bad["details"]["checks"][2]["counterexample"], "x");

  EXPECT_EQ(qw_ore_decide(q2.get(), "1", "1", &out), QW_Q_NOT_MINUS_ONE);
  auto uv = parse(m1.get(), "x*y + 1");
  EXPECT_EQ(qw_ore_recenter(uv.get(), &out), QW_WRONG_SHAPE);
}

TEST(CApi, OracleRecords) {
  auto ctx = make_context("fp:5", "2");
  auto f = parse(ctx.get(), "x*y + 1");
  char* out = nullptr;
  EXPECT_EQ(call([&](char** o) { return qw_oracle_factor(f.get(), 1, o); })["verdict"], "NoFactorizationUpToBound");
  EXPECT_EQ(call([&](char** o) { return qw_oracle_prime_search(f.get(), 2, o); })["verdict"], "NoCounterexampleUpToBound");

  auto rq = make_context("q", "2");
  auto g = parse(rq.get(), "x");
  EXPECT_EQ(qw_oracle_factor(g.get(), 1, &out), QW_INVALID_ARGUMENT);
}

TEST(CApi, QIsOneIsReported) {
  auto ctx = make_context("q", "1");
  auto x = parse(ctx.get(), "x");
  char* out = nullptr;
  EXPECT_EQ(qw_prime(x.get(), &out), QW_Q_IS_ONE);
  EXPECT_NE(std::string(qw_last_error()), "");
}
