#include "output.hpp"

namespace jcouple::cli {

Format parse_format(const std::string& text) {
  if (text == "json") return Format::Json;
  if (text == "csv") return Format::Csv;
  if (text == "plain") return Format::Plain;
  if (text == "dot") return Format::Dot;
  throw UsageError("unknown format '" + text + "' (expected json, csv, plain or dot)");
}

std::string format_name(Format f) {
  switch (f) {
    case Format::Json:
      return "json";
    case Format::Csv:
      return "csv";
    case Format::Plain:
      return "plain";
    case Format::Dot:
      return "dot";
  }
  return "?";
}

Json surd_json(const Surd& s) {
  Json j;
  j["sign"] = s.sign();
  j["num"] = to_string(numerator_of(s.radicand()));
  j["den"] = to_string(denominator_of(s.radicand()));
  j["approx"] = s.to_double();
  return j;
}

Json rational_json(const Rational& r) {
  Json j;
  j["num"] = to_string(numerator_of(r));
  j["den"] = to_string(denominator_of(r));
  return j;
}

Json halfint_list_json(const std::vector<HalfInt>& hs) {
  Json arr = Json::array();
  for (const HalfInt h : hs) arr.push_back(h.to_string());
  return arr;
}

Json chain_json(const CouplingChain& c) {
  Json j;
  j["js"] = halfint_list_json(c.js());
  j["intermediates"] = halfint_list_json(c.intermediates());
  j["j"] = c.total_j().to_string();
  return j;
}

Json phased_sum_json(const PhasedSurdSum& s) {
  Json terms = Json::array();
  for (const auto& [radical, coeff] : s.terms()) {
    Json t;
    t["radical"] = to_string(radical);
    t["re"] = to_string(coeff.re);
    t["im"] = to_string(coeff.im);
    terms.push_back(std::move(t));
  }
  Json j;
  j["text"] = s.to_string();
  j["terms"] = std::move(terms);
  j["approx_re"] = s.approx_real();
  j["approx_im"] = s.approx_imag();
  return j;
}

std::string approx_text(double value) { return Json(value).dump(); }

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (const char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_row(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += csv_field(fields[i]);
  }
  return out;
}

std::string join_halfints(const std::vector<HalfInt>& hs, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < hs.size(); ++i) out += (i ? sep : "") + hs[i].to_string();
  return out;
}

std::vector<HalfInt> parse_halfint_list(const std::string& text) {
  std::vector<HalfInt> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    out.push_back(parse_halfint(text.substr(start, comma == std::string::npos ? std::string::npos : comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace jcouple::cli
