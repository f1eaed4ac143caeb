#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "jcouple/coupling.hpp"
#include "jcouple/numerics.hpp"

namespace jcouple::cli {

using Json = nlohmann::ordered_json;

enum class Format { Json, Csv, Plain, Dot };

/// Raised for malformed invocations; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Format parse_format(const std::string& text);
std::string format_name(Format f);

Json surd_json(const Surd& s);
Json rational_json(const Rational& r);
Json halfint_list_json(const std::vector<HalfInt>& hs);
Json chain_json(const CouplingChain& c);
Json phased_sum_json(const PhasedSurdSum& s);

/// Shortest round-trip text for an approximation, identical to the JSON form.
std::string approx_text(double value);

std::string csv_field(const std::string& text);
std::string csv_row(const std::vector<std::string>& fields);

std::string join_halfints(const std::vector<HalfInt>& hs, const std::string& sep);
std::vector<HalfInt> parse_halfint_list(const std::string& text);

}  // namespace jcouple::cli
