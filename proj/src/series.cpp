#include "kacq/series.hpp"

#include <json.hpp>

namespace kacq {

long moebius(long n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "moebius of non-positive integer");
  long mu = 1;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

std::string series_to_json(const TruncatedSeries& s) {
  nlohmann::json j;
  j["bound"] = s.bound();
  j["terms"] = nlohmann::json::array();
  for (size_t i = 0; i < s.size(); ++i) {
    if (s.at(i).is_zero()) continue;
    j["terms"].push_back({{"r", s.exponent(i)}, {"coeff", s.at(i).str()}});
  }
  return j.dump();
}

TruncatedSeries series_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
    TruncatedSeries s(j.at("bound").get<std::vector<int>>());
    for (const auto& t : j.at("terms")) s.set(t.at("r").get<std::vector<int>>(), parse_rf(t.at("coeff").get<std::string>()));
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("series JSON: ") + e.what());
  }
}

}  // namespace kacq
