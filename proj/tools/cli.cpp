#include "cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <json.hpp>
#include <ostream>
#include <string>

#include "gammae/derivation.hpp"
#include "gammae/errors.hpp"
#include "gammae/gamma_e.hpp"
#include "gammae/verify_suites.hpp"

namespace gammae::cli {
namespace {

using nlohmann::json;

enum class Format { human, json, csv };

struct Common {
  double a = 0.0;
  double b = 0.0;
  std::string format = "human";

  Format kind() const {
    if (format == "json") return Format::json;
    if (format == "csv") return Format::csv;
    return Format::human;
  }
};

// A reported failure with its exit status and machine-readable code.
struct Failure {
  ExitCode status;
  std::string code;
  std::string message;
};

std::string fmt15(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Decimal scientific form from a log magnitude, for values beyond double range.
std::string fmt_from_log(const LogValue& v) {
  if (v.is_zero()) return "0";
  const double direct = v.to_real();
  if (std::isfinite(direct) && direct != 0.0) return fmt15(direct);
  const double log10 = v.log_abs() / std::log(10.0);
  double exponent = std::floor(log10);
  double mantissa = std::pow(10.0, log10 - exponent);
  if (mantissa >= 9.999999999999995) {
    mantissa /= 10.0;
    exponent += 1.0;
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%s%.14fe%+.0f", v.sign() < 0 ? "-" : "", mantissa, exponent);
  return buf;
}

json nullable(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

void add_common(CLI::App* cmd, Common& common) {
  cmd->add_option("--a", common.a, "first factor a > 0")->required();
  cmd->add_option("--b", common.b, "step b > 0")->required();
  cmd->add_option("--format", common.format, "output format")
      ->check(CLI::IsMember({"human", "json", "csv"}));
}

std::int64_t as_index(double x, const char* method) {
  if (x != std::floor(x) || !(std::fabs(x) <= double(kMaxProductIndex)))
    throw DomainError(std::string("method ") + method + " requires integer x within [1, " +
                      std::to_string(kMaxProductIndex) + "]");
  return static_cast<std::int64_t>(x);
}

int cmd_eval(const Common& c, double x, const std::string& method, int order, bool log_flag,
             std::ostream& out) {
  const Params p(c.a, c.b);
  LogValue v;
  if (method == "product")
    v = gamma_e_product(as_index(x, "product"), p);
  else if (method == "closed")
    v = gamma_e_closed(x, p);
  else if (method == "integral")
    v = gamma_e_integral(x, p);
  else
    v = gamma_e_euler_maclaurin(as_index(x, "euler-maclaurin"), p, order);

  const double value = v.to_real();
  switch (c.kind()) {
    case Format::json: {
      json doc = {{"a", c.a},           {"b", c.b},
                  {"x", x},             {"method", method},
                  {"value_log", v.log_abs()}, {"value", nullable(value)},
                  {"sign", v.sign()}};
      out << doc.dump() << '\n';
      break;
    }
    case Format::csv:
      out << "a,b,x,method,value_log,value,sign\n"
          << fmt17(c.a) << ',' << fmt17(c.b) << ',' << fmt17(x) << ',' << method << ','
          << fmt17(v.log_abs()) << ',' << (std::isfinite(value) ? fmt17(value) : "") << ','
          << v.sign() << '\n';
      break;
    case Format::human:
      out << (log_flag ? fmt15(v.log_abs()) : fmt_from_log(v)) << '\n';
      break;
  }
  return kOk;
}

int cmd_constant_a(const Common& c, std::optional<std::int64_t> empirical, std::ostream& out) {
  const Params p(c.a, c.b);
  const double A = constant_A(p);
  std::optional<ConvergenceRecord> rec;
  if (empirical) rec = estimate_A(*empirical, p);

  switch (c.kind()) {
    case Format::json: {
      json doc = {{"a", c.a}, {"b", c.b}, {"A", A}};
      if (rec)
        doc["empirical"] = {{"i", rec->i},
                            {"a_hat", rec->a_hat},
                            {"a_closed", rec->a_closed},
                            {"rel_error", rec->rel_error}};
      out << doc.dump() << '\n';
      break;
    }
    case Format::csv:
      if (rec) {
        out << "a,b,A,i,a_hat,rel_error\n"
            << fmt17(c.a) << ',' << fmt17(c.b) << ',' << fmt17(A) << ',' << rec->i << ','
            << fmt17(rec->a_hat) << ',' << fmt17(rec->rel_error) << '\n';
      } else {
        out << "a,b,A\n" << fmt17(c.a) << ',' << fmt17(c.b) << ',' << fmt17(A) << '\n';
      }
      break;
    case Format::human:
      out << "A = " << fmt15(A) << '\n';
      if (rec) {
        out << "a_hat(" << rec->i << ") = " << fmt15(rec->a_hat) << '\n'
            << "rel_error = " << fmt15(rec->rel_error) << '\n';
      }
      break;
  }
  return kOk;
}

int cmd_verify(const Common& c, const std::string& suite_text, std::uint64_t seed,
               std::ostream& out) {
  const Params p(c.a, c.b);
  const auto suite = parse_suite(suite_text);
  if (!suite) throw std::invalid_argument("unknown suite " + suite_text);
  VerifyReport report;
  try {
    report = run_suite(*suite, p, seed);
  } catch (const DomainError& e) {
    throw Failure{kInternal, "internal", std::string("suite infrastructure: ") + e.what()};
  } catch (const ConvergenceError& e) {
    throw Failure{kInternal, "internal", std::string("suite infrastructure: ") + e.what()};
  }

  switch (c.kind()) {
    case Format::json: {
      json checks = json::array();
      for (const auto& ch : report.checks)
        checks.push_back({{"label", ch.label},
                          {"residual", nullable(ch.residual)},
                          {"tolerance", ch.tolerance},
                          {"pass", ch.pass}});
      json evidence = json::array();
      for (const auto& e : report.evidence)
        evidence.push_back({{"label", e.label}, {"value", nullable(e.value)}});
      json doc = {{"suite", report.suite_name}, {"a", c.a},
                  {"b", c.b},                   {"seed", seed},
                  {"overall_pass", report.overall_pass()},
                  {"max_residual", report.max_residual()},
                  {"checks", checks},           {"evidence", evidence}};
      out << doc.dump() << '\n';
      break;
    }
    case Format::csv:
      out << "label,residual,tolerance,pass\n";
      for (const auto& ch : report.checks)
        out << csv_field(ch.label) << ',' << fmt17(ch.residual) << ',' << fmt17(ch.tolerance)
            << ',' << (ch.pass ? "true" : "false") << '\n';
      break;
    case Format::human:
      out << "suite " << report.suite_name << " (a=" << fmt15(c.a) << ", b=" << fmt15(c.b)
          << ", seed=" << seed << "): " << (report.overall_pass() ? "PASS" : "FAIL") << '\n';
      for (const auto& ch : report.checks)
        out << "  [" << (ch.pass ? "pass" : "FAIL") << "] " << ch.label
            << "  residual=" << fmt15(ch.residual) << "  tolerance=" << fmt15(ch.tolerance)
            << '\n';
      if (!report.evidence.empty()) {
        out << "  evidence:\n";
        for (const auto& e : report.evidence)
          out << "    " << e.label << " = " << fmt15(e.value) << '\n';
      }
      out << "  max residual = " << fmt15(report.max_residual()) << '\n';
      break;
  }
  return report.overall_pass() ? kOk : kCheckFailed;
}

std::vector<std::int64_t> parse_indices(const std::vector<std::string>& tokens) {
  std::vector<std::int64_t> indices;
  for (const auto& t : tokens) {
    if (t.empty()) continue;
    std::int64_t v = 0;
    const auto [end, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc{} || end != t.data() + t.size())
      throw std::invalid_argument("--i: not an integer: " + t);
    indices.push_back(v);
  }
  if (indices.empty()) throw std::invalid_argument("--i needs at least one index");
  return indices;
}

int cmd_table(const Common& c, const std::vector<std::string>& tokens, std::ostream& out) {
  const auto indices = parse_indices(tokens);
  const Params p(c.a, c.b);
  std::vector<ConvergenceRecord> rows;
  rows.reserve(indices.size());
  for (std::int64_t i : indices) rows.push_back(estimate_A(i, p));

  switch (c.kind()) {
    case Format::json: {
      json list = json::array();
      for (const auto& r : rows)
        list.push_back(
            {{"i", r.i}, {"a_hat", r.a_hat}, {"a_closed", r.a_closed}, {"rel_error", r.rel_error}});
      out << json{{"a", c.a}, {"b", c.b}, {"rows", list}}.dump() << '\n';
      break;
    }
    case Format::csv:
      out << "i,a_hat,a_closed,rel_error\n";
      for (const auto& r : rows)
        out << r.i << ',' << fmt17(r.a_hat) << ',' << fmt17(r.a_closed) << ','
            << fmt17(r.rel_error) << '\n';
      break;
    case Format::human: {
      char line[160];
      std::snprintf(line, sizeof line, "%12s  %22s  %22s  %22s\n", "i", "a_hat", "a_closed",
                    "rel_error");
      out << line;
      for (const auto& r : rows) {
        std::snprintf(line, sizeof line, "%12lld  %22.15g  %22.15g  %22.15g\n",
                      static_cast<long long>(r.i), r.a_hat, r.a_closed, r.rel_error);
        out << line;
      }
      break;
    }
  }
  return kOk;
}

int report_failure(const Failure& f, Format format, std::ostream& out, std::ostream& err) {
  err << "error: " << f.code << ": " << f.message << '\n';
  if (format == Format::json)
    out << json{{"error", {{"code", f.code}, {"message", f.message}}}}.dump() << '\n';
  return f.status;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Euler's generalized factorial Γ_E(x; a, b): evaluation, constant A, checks"};
  app.name("gammae");
  app.require_subcommand(1);

  Common common;
  double x = 0.0;
  std::string method = "closed";
  int order = 2;
  bool log_flag = false;
  std::optional<std::int64_t> empirical;
  std::string suite = "all";
  std::uint64_t seed = 42;
  std::vector<std::string> indices;

  auto* eval = app.add_subcommand("eval", "evaluate Γ_E(x) by one route");
  add_common(eval, common);
  eval->add_option("--x", x, "argument x")->required();
  eval->add_option("--method", method, "evaluation route")
      ->check(CLI::IsMember({"product", "closed", "integral", "euler-maclaurin"}));
  eval->add_option("--order", order, "Euler-Maclaurin order")->check(CLI::Range(0, 2));
  eval->add_flag("--log", log_flag, "print the natural log of the value");

  auto* constant = app.add_subcommand("constant-a", "closed-form constant A");
  add_common(constant, common);
  constant->add_option("--empirical", empirical, "also estimate A from Γ_E(i)");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  add_common(verify, common);
  verify->add_option("--suite", suite, "suite name")
      ->check(CLI::IsMember(
          {"functional", "routes", "ode", "boundary", "auxiliary", "convergence", "all"}));
  verify->add_option("--seed", seed, "seed for randomized sweeps");

  auto* table = app.add_subcommand("table", "convergence table of the A estimator");
  add_common(table, common);
  table->add_option("--i", indices, "comma-separated indices i >= 2")
      ->delimiter(',')
      ->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    return report_failure({kUsage, "usage", e.what()}, common.kind(), out, err);
  }

  try {
    if (eval->parsed()) return cmd_eval(common, x, method, order, log_flag, out);
    if (constant->parsed()) return cmd_constant_a(common, empirical, out);
    if (verify->parsed()) return cmd_verify(common, suite, seed, out);
    return cmd_table(common, indices, out);
  } catch (const Failure& f) {
    return report_failure(f, common.kind(), out, err);
  } catch (const DomainError& e) {
    return report_failure({kDomain, "domain", e.what()}, common.kind(), out, err);
  } catch (const ConvergenceError& e) {
    return report_failure({kConvergence, "convergence",
                           std::string(e.what()) + " (best " + fmt15(e.best_estimate()) +
                               ", error " + fmt15(e.achieved_error()) + ")"},
                          common.kind(), out, err);
  } catch (const std::invalid_argument& e) {
    return report_failure({kUsage, "usage", e.what()}, common.kind(), out, err);
  } catch (const std::exception& e) {
    return report_failure({kInternal, "internal", e.what()}, common.kind(), out, err);
  }
}

}  // namespace gammae::cli
