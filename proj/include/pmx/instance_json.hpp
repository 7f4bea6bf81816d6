#ifndef PMX_INSTANCE_JSON_HPP_
#define PMX_INSTANCE_JSON_HPP_

// Instance files:
//
//   {
//     "goods": 2,
//     "arithmetic": "rational",          // or "float"; default "rational"
//     "tolerance": 1e-9,                 // optional, float mode comparisons
//     "bids": [ {"id": "a", "values": ["2", "3"], "budget": "10"}, ... ],
//     "supply": [ {"steps": [ {"until": "100", "marginal": "0"}, ... ]}, ... ]
//   }
//
// Numbers are decimal strings ("2.5", "1e-3") or "p/q" fractions so rational
// mode is exact end to end; JSON integers are accepted as well.

#include <filesystem>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "pmx/model.hpp"

namespace pmx {

// Malformed instance document. The message names the offending field path.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

RawInstance parse_instance(const nlohmann::json& document);
RawInstance parse_instance_text(const std::string& text);
RawInstance read_instance_file(const std::filesystem::path& path);

// Values are written with format_decimal, so parse(serialize(x)) == x exactly.
nlohmann::json serialize_instance(const RawInstance& raw);

// Reads a number field written as string or integer.
Rational parse_number_field(const nlohmann::json& value, const std::string& path);

}  // namespace pmx

#endif  // PMX_INSTANCE_JSON_HPP_
