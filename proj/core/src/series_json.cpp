#include <json.hpp>

#include "orbifold/mpoly.hpp"

namespace orbifold {

using ordered_json = nlohmann::ordered_json;

std::string series_to_json(const TruncatedSeries& a, int indent) {
  ordered_json j;
  j["nvars"] = a.nvars();
  j["bound"] = a.bound();
  j["halved"] = a.halved();
  ordered_json terms = ordered_json::array();
  for (const auto& [m, c] : a.terms()) {
    ordered_json t;
    t["exp"] = m.exps;
    t["coeff"] = c.get_str();
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j.dump(indent);
}

TruncatedSeries series_from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw SeriesError(std::string("malformed series JSON: ") + e.what());
  }
  try {
    const auto nvars = j.at("nvars").get<std::size_t>();
    const int bound = j.at("bound").get<int>();
    const bool halved = j.value("halved", false);
    TruncatedSeries s(nvars, bound, halved);
    for (const auto& t : j.at("terms")) {
      Monomial m(t.at("exp").get<std::vector<int>>());
      if (m.nvars() != nvars) throw SeriesError("term arity does not match nvars");
      if (!s.in_range(m)) throw SeriesError("term above truncation bound: " + m.to_string());
      Integer c;
      if (c.set_str(t.at("coeff").get<std::string>(), 10) != 0)
        throw SeriesError("coefficient is not a decimal integer");
      s.add_term(m, c);
    }
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw SeriesError(std::string("series JSON missing field: ") + e.what());
  }
}

}  // namespace orbifold
