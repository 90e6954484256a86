#include <gtest/gtest.h>

#include <random>

#include "qweyl/text.hpp"
#include "support.hpp"

using namespace qweyl;
using namespace qweyl::testing;

namespace {

Error parse_error(const Context& ctx, const std::string& text) {
  try {
    parse_poly(ctx, text);
  } catch (const Error& e) {
    return e;
  }
  ADD_FAILURE() << "no error for '" << text << "'";
  return Error(ErrorCode::Internal, "");
}

}  // namespace

TEST(Parse, WrittenOrderIsNormalOrdered) {
  const Context ctx = rational_ctx(2);
  EXPECT_EQ(render(parse_poly(ctx, "y*x")), "2*x*y + 1");
  EXPECT_EQ(render(parse_poly(ctx, "y^2*x")), "4*x*y^2 + 3*y");
  EXPECT_EQ(render(parse_poly(ctx, " x^2*y   - 1/2 ")), "x^2*y - 1/2");
  EXPECT_EQ(render(parse_poly(ctx, "-x + 3*x")), "2*x");
  EXPECT_THROW(parse_poly(ctx, "2*3*x"), Error);
  EXPECT_EQ(render(parse_poly(ctx, "x - x")), "0");
  EXPECT_EQ(render(parse_poly(ctx, "0")), "0");
}

TEST(Render, Examples) {
  const Context q2 = rational_ctx(2);
  EXPECT_EQ(render(u_poly(q2)), "x*y + 1");
  EXPECT_EQ(render(WeylPoly(q2)), "0");
  const Context f5 = prime_ctx(5, 2);
  EXPECT_EQ(render(parse_poly(f5, "4*x*y + 3")), "4*x*y + 3");
  EXPECT_EQ(render(parse_poly(f5, "x - 2")), "x + 3");
  EXPECT_EQ(render(parse_poly(rational_ctx(-1), "y*x")), "-x*y + 1");
}

TEST(Parse, Errors) {
  const Context ctx = rational_ctx(2);
  Error e = parse_error(ctx, "x^");
  EXPECT_EQ(e.code(), ErrorCode::SyntaxError);
  EXPECT_EQ(e.position(), 2u);
  EXPECT_EQ(parse_error(ctx, "2x").code(), ErrorCode::SyntaxError);
  EXPECT_EQ(parse_error(ctx, "x y").code(), ErrorCode::SyntaxError);
  EXPECT_EQ(parse_error(ctx, "").code(), ErrorCode::SyntaxError);
  EXPECT_EQ(parse_error(ctx, "x +").code(), ErrorCode::SyntaxError);
  EXPECT_EQ(parse_error(ctx, "x*").code(), ErrorCode::SyntaxError);
  Error z = parse_error(ctx, "x + z");
  EXPECT_EQ(z.code(), ErrorCode::UnknownVariable);
  EXPECT_EQ(z.position(), 4u);
  Error lit = parse_error(prime_ctx(5, 2), "x + 7");
  EXPECT_EQ(lit.code(), ErrorCode::FieldLiteralError);
  EXPECT_EQ(lit.position(), 4u);
  EXPECT_EQ(parse_error(ctx, "1/0*x").code(), ErrorCode::FieldLiteralError);
  EXPECT_EQ(parse_error(ctx, "x^2^3").code(), ErrorCode::SyntaxError);
}

TEST(RoundTrip, TenThousandRandomPolynomialsPerField) {
  std::mt19937_64 rng(21);
  for (const Context& ctx : {rational_ctx(3, 2), prime_ctx(5, 2), prime_ctx(7, 3), prime_ctx(101, 5)}) {
    for (int i = 0; i < 10000; ++i) {
      const WeylPoly f = random_poly(ctx, rng, 4, 5, 20);
      const std::string text = render(f);
      ASSERT_EQ(parse_poly(ctx, text), f) << text;
      ASSERT_EQ(render(parse_poly(ctx, text)), text);
    }
  }
}
