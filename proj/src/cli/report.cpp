#include "partcat/cli/report.hpp"

#include <cstdint>
#include <cstdio>

namespace partcat::cli {

json rational_json(const Rat& value, int digits) {
  std::string dec = to_decimal_string(value, digits);
  return {{"exact", to_fraction_string(value)}, {"decimal", dec}, {"decimal_exact", parse_rat(dec) == value}};
}

json ratio_json(const std::optional<Rat>& value, int digits) {
  if (!value) return {{"exact", "inf"}, {"decimal", "inf"}, {"decimal_exact", true}};
  return rational_json(*value, digits);
}

json vector_json(const ProbVec& v, int digits) {
  json exact = json::array();
  json dec = json::array();
  for (const Rat& c : v) {
    exact.push_back(to_fraction_string(c));
    dec.push_back(to_decimal_string(c, digits));
  }
  return {{"exact", exact}, {"decimal", dec}};
}

Rat rational_from_json(const json& field) {
  if (field.is_object()) return parse_rat(field.at("exact").get<std::string>());
  return parse_rat(field.get<std::string>());
}

ProbVec vector_from_json(const json& field) {
  const json& exact = field.is_object() ? field.at("exact") : field;
  std::vector<std::string> entries;
  for (const auto& e : exact) entries.push_back(e.get<std::string>());
  return ProbVec::parse(entries);
}

std::string digest(const ProbVec& v) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](const std::string& s) {
    for (unsigned char ch : s) {
      h ^= ch;
      h *= 1099511628211ULL;
    }
  };
  for (const Rat& c : v) {
    mix(to_fraction_string(c));
    mix(",");
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace partcat::cli
