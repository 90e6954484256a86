#include "qweyl/text.hpp"

#include <cctype>

namespace qweyl {

namespace {

class Parser {
 public:
  Parser(const Context& ctx, std::string_view text) : ctx_(ctx), text_(text) {}

  WeylPoly parse() {
    skip_space();
    if (at_end()) throw error(ErrorCode::SyntaxError, "empty polynomial");
    WeylPoly result(ctx_);
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    while (true) {
      WeylPoly t = term();
      result += negative ? -t : t;
      skip_space();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') throw error(ErrorCode::SyntaxError, "expected '+' or '-'");
      negative = peek() == '-';
      ++pos_;
    }
    return result;
  }

 private:
  WeylPoly term() {
    skip_space();
    if (at_end()) throw error(ErrorCode::SyntaxError, "expected a term");
    WeylPoly acc = WeylPoly::constant(ctx_, ctx_.scalar(1));
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      acc = WeylPoly::constant(ctx_, coefficient());
    } else {
      acc = factor();
    }
    while (true) {
      skip_space();
      if (at_end() || peek() != '*') break;
      ++pos_;
      acc = acc * factor();
    }
    skip_space();
    if (!at_end() && peek() != '+' && peek() != '-') {
      if (std::isalpha(static_cast<unsigned char>(peek())) || std::isdigit(static_cast<unsigned char>(peek()))) {
        throw error(ErrorCode::SyntaxError, "juxtaposition is not multiplication; use '*'");
      }
      throw error(ErrorCode::SyntaxError, std::string("unexpected character '") + peek() + "'");
    }
    return acc;
  }

  Scalar coefficient() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (!at_end() && peek() == '/') {
      ++pos_;
      std::size_t den_start = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (pos_ == den_start) throw error(ErrorCode::SyntaxError, "expected denominator");
    }
    std::string_view literal = text_.substr(start, pos_ - start);
    try {
      return Scalar::parse(ctx_.field(), literal);
    } catch (const Error& e) {
      throw Error(e.code(), e.what(), start);
    }
  }

  WeylPoly factor() {
    skip_space();
    if (at_end()) throw error(ErrorCode::SyntaxError, "expected 'x' or 'y'");
    char c = peek();
    if (!std::isalpha(static_cast<unsigned char>(c))) {
      throw error(ErrorCode::SyntaxError, std::string("expected 'x' or 'y', found '") + c + "'");
    }
    if (c != 'x' && c != 'y') throw error(ErrorCode::UnknownVariable, std::string("unknown variable '") + c + "'");
    ++pos_;
    unsigned exponent = 1;
    skip_space();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_space();
      std::size_t start = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (pos_ == start) throw error(ErrorCode::SyntaxError, "expected exponent after '^'");
      std::string digits(text_.substr(start, pos_ - start));
      if (digits.size() > 6) throw Error(ErrorCode::SyntaxError, "exponent too large", start);
      exponent = static_cast<unsigned>(std::stoul(digits));
    }
    Monomial m = c == 'x' ? Monomial{exponent, 0} : Monomial{0, exponent};
    return WeylPoly::monomial(ctx_, m, ctx_.scalar(1));
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  Error error(ErrorCode code, const std::string& what) const {
    return Error(code, what + " at offset " + std::to_string(pos_), pos_);
  }

  const Context& ctx_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string monomial_text(const Monomial& m) {
  std::string out;
  auto var = [&](char v, unsigned e) {
    if (e == 0) return;
    if (!out.empty()) out += "*";
    out += v;
    if (e > 1) out += "^" + std::to_string(e);
  };
  var('x', m.x);
  var('y', m.y);
  return out;
}

}  // namespace

WeylPoly parse_poly(const Context& ctx, std::string_view text) { return Parser(ctx, text).parse(); }

std::string render(const WeylPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : f.terms()) {
    std::string cs = c.str();
    const bool negative = cs.front() == '-';
    if (negative) cs.erase(0, 1);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string mono = monomial_text(m);
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

}  // namespace qweyl
