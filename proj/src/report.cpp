#include "jorder/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace jorder::report {

namespace {

json coeffs_json(const std::vector<Int>& coeffs) {
  json arr = json::array();
  for (const Int& c : coeffs) arr.push_back(c.get_str());
  return arr;
}

json flags_json(const JOrderResult& r) {
  json flags = json::array();
  if (r.lcm2_applied) flags.push_back("lcm2_applied");
  return flags;
}

std::string coeff_list(const json& arr, const char* sep) {
  std::ostringstream os;
  bool first = true;
  for (const auto& c : arr) {
    if (!first) os << sep;
    first = false;
    os << c.get<std::string>();
  }
  return os.str();
}

std::string order_line(const json& order) {
  std::ostringstream os;
  os << order["pretty"].get<std::string>() << " ("
     << order["decimal"].get<std::string>() << ")";
  return os.str();
}

// factored-map entries in numeric prime order (json object keys sort as text)
std::vector<std::pair<Int, long>> sorted_factors(const json& factored) {
  std::vector<std::pair<Int, long>> out;
  for (const auto& [p, e] : factored.items())
    out.emplace_back(Int(p), e.get<long>());
  std::sort(out.begin(), out.end());
  return out;
}

std::string per_prime_from_json(const json& factored) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, e] : sorted_factors(factored)) {
    if (!first) os << ' ';
    first = false;
    os << p.get_str() << ':' << e;
  }
  return os.str();
}

}  // namespace

std::string per_prime_string(const FactoredInt& f) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, e] : f.factors()) {
    if (!first) os << ' ';
    first = false;
    os << p.get_str() << ':' << e;
  }
  return os.str();
}

json order_json(const FactoredInt& f) {
  json factored = json::object();
  for (const auto& [p, e] : f.factors()) factored[p.get_str()] = e;
  return json{{"decimal", f.decimal()},
              {"factored", factored},
              {"pretty", f.factored()}};
}

json element_record(long m, const std::vector<Int>& coeffs_as_given,
                    const JOrderResult& r) {
  json rec;
  rec["query"] = {{"command", "element"},
                  {"m", m},
                  {"coeffs", coeffs_json(coeffs_as_given)}};
  if (r.element) rec["element"] = r.element->str();
  rec["order"] = order_json(r.order);
  rec["method"] = r.method;
  rec["flags"] = flags_json(r);
  return rec;
}

json generator_record(long m, long k, const std::string& method,
                      const std::optional<JOrderResult>& exact,
                      const std::optional<GeneratorPowerOrder>& closed) {
  json rec;
  rec["query"] = {{"command", "generator"}, {"m", m}, {"k", k},
                  {"method", method}};
  json flags = json::array();
  if (exact) {
    rec["order"] = order_json(exact->order);
  } else if (closed) {
    rec["order"] = order_json(closed->result.order);
  }
  if (closed && closed->status == FormulaStatus::conjectural)
    flags.push_back("conjectural");
  if (exact && closed) {
    rec["closed_form"] = order_json(closed->result.order);
    rec["agree"] = exact->order == closed->result.order;
  }
  rec["method"] = method;
  rec["flags"] = flags;
  return rec;
}

json line_bundle_record(long m, long n, const std::string& method,
                        const std::optional<JOrderResult>& exact,
                        const std::optional<JOrderResult>& closed) {
  json rec;
  rec["query"] = {{"command", "line-bundle"}, {"m", m}, {"n", n},
                  {"method", method}};
  if (exact) {
    rec["order"] = order_json(exact->order);
  } else if (closed) {
    rec["order"] = order_json(closed->order);
  }
  if (exact && closed) {
    rec["closed_form"] = order_json(closed->order);
    rec["agree"] = exact->order == closed->order;
  }
  rec["method"] = method;
  rec["flags"] = json::array();
  return rec;
}

json bounds_record(long m, const std::vector<Int>& coeffs_as_given,
                   const Int& p, const BoundsResult& b) {
  json rec;
  rec["query"] = {{"command", "bounds"},
                  {"m", m},
                  {"coeffs", coeffs_json(coeffs_as_given)},
                  {"p", p.get_str()}};
  json bounds;
  bounds["nu_b_gen"] = b.nu_b_gen;
  bounds["nu_N"] = b.nu_N.str();
  bounds["nu_E"] = b.nu_E;
  if (!b.degenerate) {
    bounds["L"] = b.lower;
    bounds["U"] = b.upper;
  }
  rec["bounds"] = bounds;
  rec["method"] = "bounds";
  json flags = json::array();
  if (b.degenerate) flags.push_back("degenerate-bounds");
  rec["flags"] = flags;
  return rec;
}

json stiefel_record(long m, const FactoredInt& order) {
  json rec;
  rec["query"] = {{"command", "stiefel"}, {"m", m}};
  rec["order"] = order_json(order);
  rec["method"] = "exact";
  rec["note"] = "minimal n for a cross-section of U(n)/U(n-m-1) -> S^{2n-1}";
  rec["flags"] = json::array();
  return rec;
}

json selfcheck_record(const selfcheck::Report& rep, const std::string& depth) {
  json rec;
  rec["query"] = {{"command", "selfcheck"}, {"depth", depth}};
  json suites = json::array();
  for (const auto& s : rep.suites) {
    suites.push_back({{"name", s.name},
                      {"passed", s.passed},
                      {"checks", s.checks},
                      {"failures", s.failures},
                      {"findings", s.findings}});
  }
  rec["suites"] = suites;
  rec["passed"] = rep.all_passed();
  return rec;
}

std::string render_json(const json& rec) { return rec.dump(2) + "\n"; }

std::string render_text(const json& rec) {
  std::ostringstream os;
  const json& q = rec["query"];
  const std::string cmd = q["command"].get<std::string>();

  if (cmd == "selfcheck") {
    os << "selfcheck depth=" << q["depth"].get<std::string>() << "\n";
    for (const auto& s : rec["suites"]) {
      os << (s["passed"].get<bool>() ? "PASS" : "FAIL") << " "
         << s["name"].get<std::string>() << " (checks="
         << s["checks"].get<long>() << ")\n";
      for (const auto& f : s["failures"])
        os << "  failure: " << f.get<std::string>() << "\n";
      for (const auto& f : s["findings"])
        os << "  finding: " << f.get<std::string>() << "\n";
    }
    os << (rec["passed"].get<bool>() ? "all suites passed"
                                     : "SELFCHECK FAILED")
       << "\n";
    return os.str();
  }

  os << cmd;
  if (q.contains("m")) os << " m=" << q["m"].get<long>();
  if (q.contains("coeffs")) os << " coeffs=[" << coeff_list(q["coeffs"], ",") << "]";
  if (q.contains("k")) os << " k=" << q["k"].get<long>();
  if (q.contains("n")) os << " n=" << q["n"].get<long>();
  if (q.contains("p")) os << " p=" << q["p"].get<std::string>();
  if (q.contains("method")) os << " method=" << q["method"].get<std::string>();
  os << "\n";

  if (cmd == "bounds") {
    const json& b = rec["bounds"];
    os << "nu_p(b_m(y)) = " << b["nu_b_gen"].get<long>()
       << ", nu_p(N) = " << b["nu_N"].get<std::string>()
       << ", nu_p(E) = " << b["nu_E"].get<long>() << "\n";
    if (b.contains("L"))
      os << "L = " << b["L"].get<long>() << ", U = " << b["U"].get<long>()
         << "\n";
    else
      os << "degenerate: N = 0, the bounds carry no content\n";
  } else {
    if (rec.contains("element"))
      os << "element: " << rec["element"].get<std::string>() << "\n";
    if (rec.contains("order")) {
      os << "order: " << order_line(rec["order"]) << "\n";
      const std::string pp = per_prime_from_json(rec["order"]["factored"]);
      if (!pp.empty()) os << "per-prime: " << pp << "\n";
    }
    if (rec.contains("closed_form"))
      os << "closed-form: " << order_line(rec["closed_form"]) << "\n";
    if (rec.contains("agree"))
      os << "agree: " << (rec["agree"].get<bool>() ? "yes" : "NO") << "\n";
    if (rec.contains("note"))
      os << "note: " << rec["note"].get<std::string>() << "\n";
  }

  std::ostringstream flags;
  bool first = true;
  for (const auto& f : rec["flags"]) {
    if (!first) flags << ' ';
    first = false;
    flags << f.get<std::string>();
  }
  if (rec.contains("method") && cmd != "bounds")
    os << "method: " << rec["method"].get<std::string>() << "\n";
  if (!first) os << "flags: " << flags.str() << "\n";
  return os.str();
}

namespace {

std::string csv_order_row(const json& rec, const std::string& k_or_n) {
  const json& q = rec["query"];
  std::ostringstream os;
  os << "m,k_or_n,order_decimal,order_factored,per_prime\n";
  os << q["m"].get<long>() << "," << k_or_n << ","
     << rec["order"]["decimal"].get<std::string>() << ",";
  // factored with an ASCII separator
  bool first = true;
  for (const auto& [p, e] : sorted_factors(rec["order"]["factored"])) {
    if (!first) os << '*';
    first = false;
    os << p.get_str();
    if (e > 1) os << '^' << e;
  }
  if (first) os << 1;
  os << "," << per_prime_from_json(rec["order"]["factored"]) << "\n";
  return os.str();
}

}  // namespace

std::string render_csv(const json& rec) {
  const json& q = rec["query"];
  const std::string cmd = q["command"].get<std::string>();
  if (cmd == "element")
    return csv_order_row(rec, coeff_list(q["coeffs"], ";"));
  if (cmd == "generator")
    return csv_order_row(rec, std::to_string(q["k"].get<long>()));
  if (cmd == "line-bundle")
    return csv_order_row(rec, std::to_string(q["n"].get<long>()));
  if (cmd == "stiefel") return csv_order_row(rec, "1");
  if (cmd == "bounds") {
    const json& b = rec["bounds"];
    std::ostringstream os;
    os << "m,p,L,U,nu_b_gen,nu_N,nu_E,degenerate\n";
    os << q["m"].get<long>() << "," << q["p"].get<std::string>() << ",";
    if (b.contains("L"))
      os << b["L"].get<long>() << "," << b["U"].get<long>() << ",";
    else
      os << ",,";
    os << b["nu_b_gen"].get<long>() << "," << b["nu_N"].get<std::string>()
       << "," << b["nu_E"].get<long>() << ","
       << (b.contains("L") ? "no" : "yes") << "\n";
    return os.str();
  }
  throw std::invalid_argument("csv rendering is not defined for " + cmd);
}

std::string render_table_csv(const std::vector<TableRow>& rows,
                             const std::string& banner) {
  std::ostringstream os;
  if (!banner.empty()) os << "# " << banner << "\n";
  os << "m,k_or_n,order_decimal,order_factored,per_prime\n";
  for (const TableRow& r : rows)
    os << r.m << "," << r.k_or_n << "," << r.order_decimal << ","
       << r.order_factored << "," << r.per_prime << "\n";
  return os.str();
}

std::string render_table_markdown(const std::vector<TableRow>& rows) {
  std::ostringstream os;
  os << "| m | k_or_n | order_decimal | order_factored | per_prime |\n";
  os << "|---|--------|---------------|----------------|-----------|\n";
  for (const TableRow& r : rows)
    os << "| " << r.m << " | " << r.k_or_n << " | " << r.order_decimal
       << " | " << r.order_factored << " | " << r.per_prime << " |\n";
  return os.str();
}

}  // namespace jorder::report
