#pragma once

// JSON renderings used by the CLI reports. Numbers are exact strings, never floats.

#include <json.hpp>

#include "rsv/hive.hpp"
#include "rsv/laurent.hpp"
#include "rsv/rational.hpp"
#include "rsv/series.hpp"
#include "rsv/weights.hpp"

namespace rsv {

using Json = nlohmann::ordered_json;

inline Json to_json(const Rational& r) { return Json{{"num", r.num_str()}, {"den", r.den_str()}}; }

/// [{"exp":[...],"num":"...","den":"..."}, ...] in graded-lex order.
inline Json to_json(const LaurentPolynomial& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) out.push_back(Json{{"exp", e}, {"num", c.num_str()}, {"den", c.den_str()}});
  return out;
}

/// [{"t1":a,"t2":b,"coeff":...}, ...] over the nonzero coefficients.
template <class Coeff>
Json to_json(const TruncatedBiSeries<Coeff>& s) {
  Json out = Json::array();
  for (int a = 0; a <= s.cap1(); ++a)
    for (int b = 0; b <= s.cap2(); ++b)
      if (!s.coeff(a, b).is_zero()) out.push_back(Json{{"t1", a}, {"t2", b}, {"coeff", to_json(s.coeff(a, b))}});
  return out;
}

inline Json to_json(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& r : v) out.push_back(to_json(r));
  return out;
}

inline Json to_json(const Hive& h) {
  Json rows = Json::array();
  for (int r = h.size(); r >= 0; --r) {
    Json row = Json::array();
    for (int c = 0; r + c <= h.size(); ++c) row.push_back(h.at(r, c));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace rsv
