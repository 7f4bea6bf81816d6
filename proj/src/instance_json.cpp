#include "pmx/instance_json.hpp"

#include <fstream>
#include <sstream>

namespace pmx {

using nlohmann::json;

Rational parse_number_field(const json& value, const std::string& path) {
  if (value.is_string()) {
    try {
      return parse_rational(value.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw FormatError(path + ": " + e.what());
    }
  }
  if (value.is_number_integer()) return Rational(value.get<long long>());
  if (value.is_number_unsigned()) return Rational(value.get<unsigned long long>());
  throw FormatError(path + ": expected a decimal string");
}

namespace {

const json& require(const json& object, const char* key, const std::string& path) {
  if (!object.is_object()) throw FormatError(path + ": expected an object");
  auto it = object.find(key);
  if (it == object.end()) throw FormatError(path + "." + key + ": missing field");
  return *it;
}

const json& require_array(const json& object, const char* key, const std::string& path) {
  const json& value = require(object, key, path);
  if (!value.is_array()) throw FormatError(path + "." + key + ": expected an array");
  return value;
}

}  // namespace

RawInstance parse_instance(const json& document) {
  const std::string root = "instance";
  RawInstance raw;
  const json& goods = require(document, "goods", root);
  if (!goods.is_number_integer()) throw FormatError(root + ".goods: expected an integer");
  raw.goods = goods.get<long long>();

  if (auto it = document.find("arithmetic"); it != document.end()) {
    if (*it == "rational") raw.arithmetic = Arithmetic::kRational;
    else if (*it == "float") raw.arithmetic = Arithmetic::kFloat;
    else throw FormatError(root + ".arithmetic: expected \"rational\" or \"float\"");
  }
  if (auto it = document.find("tolerance"); it != document.end()) {
    if (it->is_number()) raw.tolerance = it->get<double>();
    else raw.tolerance = parse_number_field(*it, root + ".tolerance").convert_to<double>();
  }

  const json& bids = require_array(document, "bids", root);
  for (std::size_t b = 0; b < bids.size(); ++b) {
    const std::string path = root + ".bids[" + std::to_string(b) + "]";
    RawBid bid;
    const json& id = require(bids[b], "id", path);
    if (!id.is_string()) throw FormatError(path + ".id: expected a string");
    bid.id = id.get<std::string>();
    const json& values = require_array(bids[b], "values", path);
    for (std::size_t i = 0; i < values.size(); ++i)
      bid.values.push_back(
          parse_number_field(values[i], path + ".values[" + std::to_string(i) + "]"));
    bid.budget = parse_number_field(require(bids[b], "budget", path), path + ".budget");
    raw.bids.push_back(std::move(bid));
  }

  const json& supply = require_array(document, "supply", root);
  for (std::size_t i = 0; i < supply.size(); ++i) {
    const std::string path = root + ".supply[" + std::to_string(i) + "]";
    RawSupplyCurve curve;
    const json& steps = require_array(supply[i], "steps", path);
    for (std::size_t q = 0; q < steps.size(); ++q) {
      const std::string step_path = path + ".steps[" + std::to_string(q) + "]";
      curve.steps.push_back(
          {parse_number_field(require(steps[q], "until", step_path), step_path + ".until"),
           parse_number_field(require(steps[q], "marginal", step_path), step_path + ".marginal")});
    }
    raw.supply.push_back(std::move(curve));
  }
  return raw;
}

RawInstance parse_instance_text(const std::string& text) {
  json document;
  try {
    document = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("instance: malformed JSON: ") + e.what());
  }
  return parse_instance(document);
}

RawInstance read_instance_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError(path.string() + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_instance_text(buffer.str());
}

json serialize_instance(const RawInstance& raw) {
  json bids = json::array();
  for (const auto& bid : raw.bids) {
    json values = json::array();
    for (const auto& v : bid.values) values.push_back(format_decimal(v));
    bids.push_back({{"id", bid.id}, {"values", values}, {"budget", format_decimal(bid.budget)}});
  }
  json supply = json::array();
  for (const auto& curve : raw.supply) {
    json steps = json::array();
    for (const auto& step : curve.steps)
      steps.push_back({{"until", format_decimal(step.until)},
                       {"marginal", format_decimal(step.marginal)}});
    supply.push_back({{"steps", steps}});
  }
  return {{"goods", raw.goods},
          {"arithmetic", std::string(to_string(raw.arithmetic))},
          {"tolerance", raw.tolerance},
          {"bids", bids},
          {"supply", supply}};
}

}  // namespace pmx
