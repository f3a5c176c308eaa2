#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "jorder/bott.hpp"
#include "jorder/jorder.hpp"
#include "jorder/report.hpp"
#include "jorder/selfcheck.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

using jorder::FactoredInt;
using jorder::Int;
using jorder::KOElement;

std::vector<Int> parse_coeffs(const std::string& text) {
  std::vector<Int> out;
  if (text.empty()) return out;
  std::istringstream is(text);
  std::string item;
  while (std::getline(is, item, ',')) {
    if (item.empty())
      throw std::invalid_argument("--coeffs: empty entry in the list");
    out.emplace_back(item);  // mpz parses, throws on garbage
  }
  return out;
}

int emit(const std::string& content, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << content;
    return 0;
  }
  std::ofstream os(out_path, std::ios::trunc);
  os << content;
  if (!os) {
    std::cerr << "error: cannot write " << out_path << "\n";
    return 2;
  }
  return 0;
}

std::string render(const jorder::report::json& rec, const std::string& format) {
  if (format == "json") return jorder::report::render_json(rec);
  if (format == "csv") return jorder::report::render_csv(rec);
  return jorder::report::render_text(rec);
}

std::optional<std::string> cache_file() {
  const char* dir = std::getenv("JORDER_CACHE_DIR");
  if (dir == nullptr || *dir == '\0') return std::nullopt;
  return std::string(dir) + "/theta_cache.txt";
}

long require_even(long m, const char* who) {
  if (m < 2 || m % 2 != 0)
    throw std::invalid_argument(std::string(who) +
                                ": needs even m >= 2 (odd m reduces; use "
                                "'element' for odd-m queries)");
  return m;
}

int run_element(long m, const std::string& coeffs, const std::string& format,
                const std::string& out) {
  const std::vector<Int> given = parse_coeffs(coeffs);
  const KOElement x(m, given);
  const jorder::JOrderResult r = jorder::j_order_exact(x);
  return emit(render(jorder::report::element_record(m, given, r), format), out);
}

int run_generator(long m, long k, const std::string& method,
                  const std::string& format, const std::string& out) {
  require_even(m, "generator");
  if (k < 1 || k > m / 2)
    throw std::invalid_argument("generator: needs 1 <= k <= t = m/2");
  std::optional<jorder::JOrderResult> exact;
  std::optional<jorder::GeneratorPowerOrder> closed;
  if (method != "closed-form")
    exact = jorder::j_order_exact(KOElement::y_power(m, k));
  if (method != "exact") closed = jorder::generator_power_order_closed_form(m, k);
  if (exact && closed) {
    // a mismatch in the proven range is a bug, not a report line
    for (const Int& p : jorder::primes_up_to(m + 1)) {
      const auto cf = jorder::generator_power_closed_form(p, m, k);
      if (cf.status == jorder::FormulaStatus::proven &&
          cf.exponent != exact->order.exponent_of(p))
        throw std::runtime_error(
            "generator: proven closed form disagrees with the exact pipeline "
            "at p=" + p.get_str());
    }
  }
  return emit(
      render(jorder::report::generator_record(m, k, method, exact, closed),
             format),
      out);
}

int run_line_bundle(long m, long n, const std::string& method,
                    const std::string& format, const std::string& out) {
  if (n < 1) throw std::invalid_argument("line-bundle: needs n >= 1");
  std::optional<jorder::JOrderResult> exact;
  std::optional<jorder::JOrderResult> closed;
  if (method != "closed-form") exact = jorder::line_bundle_order_exact(n, m);
  if (method != "exact") {
    require_even(m, "line-bundle closed form");
    closed = jorder::line_bundle_order(n, m);
  }
  if (exact && closed && !(exact->order == closed->order))
    throw std::runtime_error(
        "line-bundle: closed form disagrees with the exact pipeline");
  return emit(
      render(jorder::report::line_bundle_record(m, n, method, exact, closed),
             format),
      out);
}

int run_bounds(long m, const std::string& coeffs, const std::string& p,
               const std::string& format, const std::string& out) {
  require_even(m, "bounds");
  const std::vector<Int> given = parse_coeffs(coeffs);
  const Int prime(p);
  const KOElement x(m, given);
  const jorder::BoundsResult b = jorder::bounds_LU(x, prime);
  return emit(render(jorder::report::bounds_record(m, given, prime, b), format),
              out);
}

int run_stiefel(long m, const std::string& format, const std::string& out) {
  if (m < 1) throw std::invalid_argument("stiefel: needs m >= 1");
  const FactoredInt order = jorder::stiefel_min_n(m);
  return emit(render(jorder::report::stiefel_record(m, order), format), out);
}

jorder::report::TableRow order_row(const std::string& m, const std::string& k,
                                   const FactoredInt& order) {
  return {m, k, order.decimal(), order.factored("*"),
          jorder::report::per_prime_string(order)};
}

int run_table(const std::string& kind, long m, long m_from, long m_to,
              long n_from, long n_to, long k_from, long k_to,
              const std::string& format, const std::string& out) {
  std::vector<jorder::report::TableRow> rows;
  if (kind == "generator") {
    for (long mm = m_from; mm <= m_to; ++mm) {
      if (mm < 2 || mm % 2 != 0) continue;
      rows.push_back(order_row(std::to_string(mm), "1",
                               jorder::stiefel_min_n(mm)));
    }
  } else if (kind == "line-bundle") {
    require_even(m, "table --kind line-bundle");
    for (long n = n_from; n <= n_to; ++n) {
      if (n < 1) continue;
      rows.push_back(order_row(std::to_string(m), std::to_string(n),
                               jorder::line_bundle_order(n, m).order));
    }
  } else if (kind == "nk") {
    auto& theta = jorder::ThetaCache::instance();
    for (long k = k_from; k <= k_to; ++k) {
      if (k < 2) continue;
      const Int nk = theta.n_weight(k);
      const bool neg = sgn(nk) < 0;
      const FactoredInt f = FactoredInt::from_integer(neg ? Int(-nk) : nk);
      rows.push_back({"", std::to_string(k), nk.get_str(),
                      (neg ? "-" : "") + f.factored("*"), ""});
    }
  } else {
    throw std::invalid_argument("table: kind must be generator|line-bundle|nk");
  }
  std::string content;
  if (format == "md") {
    content = jorder::report::render_table_markdown(rows);
  } else {
    std::ostringstream banner;
    banner << "jorder " << kVersion << " table kind=" << kind;
    content = jorder::report::render_table_csv(rows, banner.str());
  }
  return emit(content, out);
}

int run_selfcheck(const std::string& depth, const std::string& format,
                  const std::string& out) {
  jorder::selfcheck::Options opt;
  opt.depth = depth == "full" ? jorder::selfcheck::Depth::full
                              : jorder::selfcheck::Depth::quick;
  const jorder::selfcheck::Report rep = jorder::selfcheck::run_selfcheck(opt);
  const auto rec = jorder::report::selfcheck_record(rep, depth);
  const std::string content = format == "json"
                                  ? jorder::report::render_json(rec)
                                  : jorder::report::render_text(rec);
  const int code = emit(content, out);
  if (code != 0) return code;
  return rep.all_passed() ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact J-orders in the KO-ring of complex projective space"};
  app.set_version_flag("--version", std::string("jorder ") + kVersion);
  app.require_subcommand(1);

  std::string format = "text", out, coeffs, method = "exact", p = "2";
  long m = 0, k = 1, n = 1;

  auto add_io = [&](CLI::App* cmd, bool with_csv = true) {
    cmd->add_option("--format", format, "text|json" + std::string(with_csv ? "|csv" : ""))
        ->check(CLI::IsMember(with_csv
                                  ? std::vector<std::string>{"text", "json", "csv"}
                                  : std::vector<std::string>{"text", "json"}));
    cmd->add_option("--out", out, "write to a file instead of stdout");
  };

  auto* element =
      app.add_subcommand("element", "J-order of m1*y + m2*y^2 + ... in CP^m");
  element->add_option("--m", m, "projective-space dimension")->required();
  element->add_option("--coeffs", coeffs, "comma-separated m1,m2,...")
      ->required();
  add_io(element);

  auto* generator =
      app.add_subcommand("generator", "J-order of the generator power y^k");
  generator->add_option("--m", m, "even projective-space dimension")->required();
  generator->add_option("--k", k, "power of the generator")->required();
  generator->add_option("--method", method, "exact|closed-form|both")
      ->check(CLI::IsMember({"exact", "closed-form", "both"}));
  add_io(generator);

  auto* line = app.add_subcommand(
      "line-bundle", "J-order of the n-th power of the Hopf bundle");
  std::string lb_method = "closed-form";  // proven and cheap for any n
  line->add_option("--m", m, "projective-space dimension")->required();
  line->add_option("--n", n, "line-bundle power")->required();
  line->add_option("--method", lb_method, "exact|closed-form|both")
      ->check(CLI::IsMember({"exact", "closed-form", "both"}));
  add_io(line);

  auto* bounds = app.add_subcommand(
      "bounds", "lower/upper bounds on a per-prime J-order exponent");
  bounds->add_option("--m", m, "even projective-space dimension")->required();
  bounds->add_option("--coeffs", coeffs, "comma-separated m1,m2,...")
      ->required();
  bounds->add_option("--p", p, "prime")->required();
  add_io(bounds);

  auto* stiefel = app.add_subcommand(
      "stiefel", "minimal n admitting a Stiefel cross-section over CP^m");
  stiefel->add_option("--m", m, "projective-space dimension")->required();
  add_io(stiefel);

  std::string kind = "generator", table_format = "csv";
  long m_from = 2, m_to = 12, n_from = 1, n_to = 10, k_from = 2, k_to = 6;
  auto* table = app.add_subcommand("table", "batch tables (CSV or Markdown)");
  table->add_option("--kind", kind, "generator|line-bundle|nk");
  table->add_option("--m", m, "fixed m for line-bundle rows");
  table->add_option("--m-from", m_from);
  table->add_option("--m-to", m_to);
  table->add_option("--n-from", n_from);
  table->add_option("--n-to", n_to);
  table->add_option("--k-from", k_from);
  table->add_option("--k-to", k_to);
  table->add_option("--format", table_format, "csv|md")
      ->check(CLI::IsMember({"csv", "md"}));
  table->add_option("--out", out, "write to a file instead of stdout");

  std::string depth = "quick";
  auto* selfcheck =
      app.add_subcommand("selfcheck", "run the internal invariant suites");
  selfcheck->add_option("--depth", depth, "quick|full")
      ->check(CLI::IsMember({"quick", "full"}));
  add_io(selfcheck, /*with_csv=*/false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (auto f = cache_file()) jorder::ThetaCache::instance().load_snapshot(*f);

  int code = 0;
  try {
    if (element->parsed()) code = run_element(m, coeffs, format, out);
    if (generator->parsed()) code = run_generator(m, k, method, format, out);
    if (line->parsed()) code = run_line_bundle(m, n, lb_method, format, out);
    if (bounds->parsed()) code = run_bounds(m, coeffs, p, format, out);
    if (stiefel->parsed()) code = run_stiefel(m, format, out);
    if (table->parsed())
      code = run_table(kind, m, m_from, m_to, n_from, n_to, k_from, k_to,
                       table_format, out);
    if (selfcheck->parsed()) code = run_selfcheck(depth, format, out);
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  if (code == 0 || code == 3)
    if (auto f = cache_file()) jorder::ThetaCache::instance().save_snapshot(*f);
  return code;
}
