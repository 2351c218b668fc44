#pragma once

// Text forms of monomials, forms and chains, flag value parsers, and the
// JSON / CSV encodings of dimension reports.
//
//   monomial   1 | x1^-2*x2^3*y1      (1-based indices, exponent defaults to 1)
//   form       (-1)*x1^-1*dlogx1 + y1*dy2
//   chain      (-1/2)*x1^-1 (x) x1^2 + y1 (x) 1
// Coefficients other than 1 are written "(c)*"; parsing also accepts "c*" and a
// leading "-".

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "modhom/forms.hpp"
#include "modhom/hochschild.hpp"
#include "modhom/homology.hpp"
#include "modhom/modpair.hpp"

namespace modhom {

std::string to_string(const Monomial& m);
std::string to_string(const FormTerm& term);
std::string to_string(const LogForm& form);
std::string to_string(const Tensor& tensor);
std::string to_string(const ChainElement& chain);

/// Throws std::invalid_argument on malformed text or an index outside the pair.
Monomial parse_monomial(const ModulusPair& p, const std::string& text);
ChainElement parse_chain(const ModulusPair& p, const std::string& text);
Rational parse_rational(const std::string& text);

/// "3", "-1,2". Throws std::invalid_argument.
std::vector<int> parse_int_list(const std::string& text);
/// "a..b" (or a single integer a). Throws std::invalid_argument if malformed or b < a.
std::pair<long, long> parse_range(const std::string& text);
/// Flat list: s x-degrees followed by t y-degrees.
Multidegree parse_multidegree(const ModulusPair& p, const std::string& text);

nlohmann::ordered_json to_json(const ModulusPair& p);
nlohmann::ordered_json to_json(const Multidegree& d);
nlohmann::ordered_json to_json(const DimensionReport& report);
nlohmann::ordered_json to_json(const std::vector<DimensionReport>& reports);

/// Header s,t,r,deg,variant,n,dim (plus oracle,match when any report carries
/// oracle values); list values inside a cell are joined by ';'.
std::string to_csv(const std::vector<DimensionReport>& reports);

}  // namespace modhom
