#ifndef JORDER_REPORT_HPP
#define JORDER_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "jorder/jorder.hpp"
#include "jorder/selfcheck.hpp"

namespace jorder::report {

using json = nlohmann::json;

/// {"decimal": "...", "factored": {"2": 3, ...}}
json order_json(const FactoredInt& f);

json element_record(long m, const std::vector<Int>& coeffs_as_given,
                    const JOrderResult& r);
json generator_record(long m, long k, const std::string& method,
                      const std::optional<JOrderResult>& exact,
                      const std::optional<GeneratorPowerOrder>& closed);
json line_bundle_record(long m, long n, const std::string& method,
                        const std::optional<JOrderResult>& exact,
                        const std::optional<JOrderResult>& closed);
json bounds_record(long m, const std::vector<Int>& coeffs_as_given,
                   const Int& p, const BoundsResult& b);
json stiefel_record(long m, const FactoredInt& order);
json selfcheck_record(const selfcheck::Report& rep, const std::string& depth);

// The three renderings carry the same data; text and CSV are derived from
// the JSON record so they cannot drift apart.
std::string render_json(const json& rec);
std::string render_text(const json& rec);
std::string render_csv(const json& rec);

struct TableRow {
  std::string m;
  std::string k_or_n;
  std::string order_decimal;
  std::string order_factored;
  std::string per_prime;
};

std::string render_table_csv(const std::vector<TableRow>& rows,
                             const std::string& banner);
std::string render_table_markdown(const std::vector<TableRow>& rows);

/// "2:3 3:1" in ascending prime order; empty string for the empty product.
std::string per_prime_string(const FactoredInt& f);

}  // namespace jorder::report

#endif  // JORDER_REPORT_HPP
