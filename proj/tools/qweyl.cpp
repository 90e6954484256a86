// qweyl: command-line front end over the C interface.

#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qweyl/qweyl.h"

namespace {

constexpr int kUsageExit = 2;
constexpr int kDomainExit = 3;

struct Failure {
  qw_status status;
};

void check(qw_status status) {
  if (status != QW_OK) throw Failure{status};
}

using ContextPtr = std::unique_ptr<qw_context, decltype(&qw_context_free)>;
using PolyPtr = std::unique_ptr<qw_poly, decltype(&qw_poly_free)>;

PolyPtr parse(const qw_context* ctx, const std::string& text) {
  qw_poly* f = nullptr;
  check(qw_poly_parse(ctx, text.c_str(), &f));
  return PolyPtr(f, qw_poly_free);
}

std::string take(char* s) {
  std::string out(s);
  qw_string_free(s);
  return out;
}

std::string scalar_text(const nlohmann::ordered_json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

std::string inline_object(const nlohmann::ordered_json& obj) {
  std::string out;
  for (const auto& [k, v] : obj.items()) {
    if (!out.empty()) out += "; ";
    out += k + " = " + scalar_text(v);
  }
  return out;
}

void print_human(const nlohmann::ordered_json& record) {
  std::cout << scalar_text(record["verdict"]) << "\n";
  for (const auto& [key, value] : record["details"].items()) {
    if (value.is_object()) {
      if (!value.empty()) std::cout << "  " << key << ": " << inline_object(value) << "\n";
    } else if (value.is_array()) {
      std::cout << "  " << key << ":" << (value.empty() ? " none" : "") << "\n";
      for (const auto& item : value) {
        std::cout << "    - " << (item.is_object() ? inline_object(item) : scalar_text(item)) << "\n";
      }
    } else {
      std::cout << "  " << key << ": " << scalar_text(value) << "\n";
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact arithmetic and factorization in the quantized Weyl algebra yx = qxy + 1"};
  app.require_subcommand(1);

  std::string field = "q";
  std::string q;
  bool json = false;
  bool all_cases = false;
  app.add_option("--field", field, "Coefficient field: q (rationals) or fp:<p>")->capture_default_str();
  app.add_option("--q", q, "Deformation parameter q")->required();
  app.add_flag("--json", json, "Emit JSON records");
  app.add_flag("--all-cases", all_cases, "List every firing case when factoring");

  std::vector<std::string> args;
  unsigned degree = 2;
  std::function<char*(const qw_context*)> action;

  auto poly_command = [&](const std::string& name, const std::string& help, std::size_t count,
                          std::function<void(const std::vector<PolyPtr>&, char**)> run) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("polys", args, "Polynomials")->required()->expected(static_cast<int>(count));
    sub->callback([&, count, run] {
      action = [&, count, run](const qw_context* ctx) {
        std::vector<PolyPtr> polys;
        for (std::size_t i = 0; i < count; ++i) polys.push_back(parse(ctx, args[i]));
        char* out = nullptr;
        run(polys, &out);
        return out;
      };
    });
    return sub;
  };

  poly_command("normal", "Normal-ordered form", 1, [](const auto& p, char** o) { check(qw_normal(p[0].get(), o)); });
  poly_command("mul", "Product f*g", 2, [](const auto& p, char** o) { check(qw_mul(p[0].get(), p[1].get(), o)); });
  poly_command("deg", "Total degree", 1, [](const auto& p, char** o) { check(qw_degree(p[0].get(), o)); });
  poly_command("divides", "Whether a divides c on either side", 2,
               [](const auto& p, char** o) { check(qw_divides(p[0].get(), p[1].get(), o)); });
  poly_command("normality", "Whether f is a normal element", 1,
               [](const auto& p, char** o) { check(qw_normality(p[0].get(), o)); });
  poly_command("central", "Whether f is central", 1, [](const auto& p, char** o) { check(qw_central(p[0].get(), o)); });
  poly_command("discriminant", "Quantum discriminant b^2 - 4acq", 1,
               [](const auto& p, char** o) { check(qw_discriminant(p[0].get(), o)); });
  poly_command("factor", "Reducibility of a quadratic form", 1,
               [&](const auto& p, char** o) { check(qw_factor(p[0].get(), all_cases ? 1 : 0, o)); });
  poly_command("prime", "Primality classification", 1, [](const auto& p, char** o) { check(qw_prime(p[0].get(), o)); });
  poly_command("oracle-divides", "Brute-force divisibility over F_p", 2,
               [](const auto& p, char** o) { check(qw_oracle_divides(p[0].get(), p[1].get(), o)); });
  poly_command("oracle-factor", "Brute-force factor search over F_p", 1,
               [&](const auto& p, char** o) { check(qw_oracle_factor(p[0].get(), degree, o)); })
      ->add_option("--degree", degree, "Factor degree bound (<= 3)")
      ->capture_default_str();
  poly_command("oracle-prime-search", "Bounded search for a primality counterexample over F_p", 1,
               [&](const auto& p, char** o) { check(qw_oracle_prime_search(p[0].get(), degree, o)); })
      ->add_option("--degree", degree, "Degree bound for b and c (<= 3)")
      ->capture_default_str();
  poly_command("ore-recenter", "Image of c*y^2 + a*x^2 + k under t = y - 1/(2x) at q = -1", 1,
               [](const auto& p, char** o) { check(qw_ore_recenter(p[0].get(), o)); });

  {
    CLI::App* sub = app.add_subcommand("subst", "f(lambda*x, mu*y)");
    sub->add_option("args", args, "Polynomial, lambda, mu")->required()->expected(3);
    sub->callback([&] {
      action = [&](const qw_context* ctx) {
        PolyPtr f = parse(ctx, args[0]);
        char* out = nullptr;
        check(qw_substitute(f.get(), args[1].c_str(), args[2].c_str(), &out));
        return out;
      };
    });
  }
  {
    CLI::App* sub = app.add_subcommand("ore-decide", "Reducibility of t^2 - p for y^2 + a*x^2 + k at q = -1");
    sub->add_option("args", args, "Scalars a and k")->required()->expected(2);
    sub->callback([&] {
      action = [&](const qw_context* ctx) {
        char* out = nullptr;
        check(qw_ore_decide(ctx, args[0].c_str(), args[1].c_str(), &out));
        return out;
      };
    });
  }
  {
    CLI::App* sub = app.add_subcommand("ore-verify", "Normality checks for t^2 - v; v and samples in x");
    sub->add_option("args", args, "v followed by sample polynomials (default x, x^2, x^3)")->required()->expected(1, -1);
    sub->callback([&] {
      action = [&](const qw_context* ctx) {
        PolyPtr v = parse(ctx, args[0]);
        std::vector<PolyPtr> samples;
        std::vector<const qw_poly*> raw;
        for (std::size_t i = 1; i < args.size(); ++i) {
          samples.push_back(parse(ctx, args[i]));
          raw.push_back(samples.back().get());
        }
        char* out = nullptr;
        check(qw_ore_verify(v.get(), raw.empty() ? nullptr : raw.data(), raw.size(), &out));
        return out;
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageExit;
  }

  try {
    qw_context* raw = nullptr;
    check(qw_context_new(field.c_str(), q.c_str(), &raw));
    ContextPtr ctx(raw, qw_context_free);
    const std::string text = take(action(ctx.get()));
    if (json) {
      std::cout << text << "\n";
    } else {
      print_human(nlohmann::ordered_json::parse(text));
    }
    return 0;
  } catch (const Failure& f) {
    std::cerr << "error: " << qw_status_name(f.status) << ": " << qw_last_error() << "\n";
    return qw_status_is_usage_error(f.status) ? kUsageExit : kDomainExit;
  }
}
