#include "pmx/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "pmx/allocation.hpp"
#include "pmx/candidates.hpp"
#include "pmx/instance_json.hpp"
#include "pmx/model.hpp"
#include "pmx/svg_plot.hpp"

namespace pmx {

namespace {

using nlohmann::json;

// Bad command-line values (not instance contents).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// JSON numbers are strings: exact fractions in rational mode, round-trippable
// doubles in float mode.
std::string json_number(const Rational& v) { return format_fraction(v); }
std::string json_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

template <class Num>
json json_vector(const std::vector<Num>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(json_number(v));
  return out;
}

template <class Num>
std::string text_vector(const std::vector<Num>& values) {
  std::string out;
  for (const auto& v : values) {
    if (!out.empty()) out += ' ';
    out += format_value(v);
  }
  return out;
}

struct LoadedInstance {
  RawInstance raw;
  AuctionInstance<Rational> exact;
};

LoadedInstance load(const std::string& path) {
  LoadedInstance loaded;
  loaded.raw = read_instance_file(path);
  loaded.exact = validate_instance(loaded.raw);
  return loaded;
}

// Runs body with the instance in the arithmetic the file asks for.
template <class Body>
void with_instance(const LoadedInstance& loaded, Body&& body) {
  if (loaded.raw.arithmetic == Arithmetic::kFloat) body(convert_instance<double>(loaded.exact));
  else body(loaded.exact);
}

std::string goods_label(const IndifferencePair& pair) {
  return "{" + std::to_string(pair.first) + "," + std::to_string(pair.second) + "}";
}

template <class Num>
void print_candidates(const AuctionInstance<Num>& instance, const CandidateSet<Num>& set,
                      bool stats, bool as_json, std::ostream& out) {
  if (as_json) {
    json doc;
    doc["arithmetic"] = std::string(to_string(instance.arithmetic()));
    doc["candidates"] = json::array();
    for (const auto& c : set.candidates) {
      json witness_bids = json::array();
      for (std::size_t b : c.bids) witness_bids.push_back(instance.bids[b].id());
      json planes = json::array();
      for (const auto& h : c.hyperplanes)
        planes.push_back({{"bid", instance.bids[h.bid].id()}, {"goods", {h.first, h.second}}});
      doc["candidates"].push_back({{"price", json_vector(c.price.values())},
                                   {"witness", {{"bids", witness_bids}, {"sigma", c.sigma}}},
                                   {"hyperplanes", planes}});
    }
    if (stats) {
      doc["stats"] = {{"combinations", set.stats.combinations},
                      {"calls", set.stats.calls},
                      {"pruned", set.stats.pruned},
                      {"feasible", set.stats.feasible},
                      {"unique", set.stats.unique}};
    }
    out << doc.dump(2) << '\n';
    return;
  }
  for (const auto& c : set.candidates) {
    out << text_vector(c.price.values()) << "\t(";
    for (std::size_t k = 0; k < c.hyperplanes.size(); ++k) {
      if (k > 0) out << ' ';
      out << instance.bids[c.hyperplanes[k].bid].id() << goods_label(c.hyperplanes[k]);
    }
    out << ")\n";
  }
  if (stats) {
    out << "combinations: " << set.stats.combinations << '\n'
        << "calls: " << set.stats.calls << '\n'
        << "skipped: " << set.stats.pruned << '\n'
        << "feasible: " << set.stats.feasible << '\n'
        << "unique: " << set.stats.unique << '\n';
  }
}

template <class Num>
json clearing_json(const AuctionInstance<Num>& instance, const ClearingResult<Num>& result) {
  json doc;
  doc["arithmetic"] = std::string(to_string(instance.arithmetic()));
  doc["price"] = json_vector(result.price.values());
  doc["revenue"] = result.revenue ? json(json_number(*result.revenue)) : json(nullptr);
  doc["allocation"] = json::array();
  for (const auto& a : result.allocation)
    doc["allocation"].push_back({{"id", a.bid_id}, {"bundle", json_vector(a.bundle.values())}});
  doc["aggregate"] = json_vector(result.aggregate.values());
  return doc;
}

template <class Num>
void print_clearing(const ClearingResult<Num>& result, std::ostream& out) {
  out << "price: " << text_vector(result.price.values()) << '\n';
  if (!result.revenue) {
    out << "revenue: -inf (no envy-free allocation within capacity)\n";
    return;
  }
  out << "revenue: " << format_value(*result.revenue) << '\n' << "allocation:\n";
  for (const auto& a : result.allocation)
    out << "  " << a.bid_id << ": " << text_vector(a.bundle.values()) << '\n';
  out << "aggregate: " << text_vector(result.aggregate.values()) << '\n';
}

PriceVector<Rational> parse_price_csv(const std::string& text, std::size_t goods) {
  std::vector<Rational> values;
  std::stringstream in(text);
  std::string field;
  while (std::getline(in, field, ',')) {
    try {
      values.push_back(parse_rational(field));
    } catch (const std::invalid_argument& e) {
      throw UsageError("--price: " + std::string(e.what()));
    }
  }
  if (!text.empty() && text.back() == ',') throw UsageError("--price: trailing comma");
  if (values.size() != goods)
    throw UsageError("--price: expected " + std::to_string(goods) + " values, got " +
                     std::to_string(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] <= 0)
      throw UsageError("--price: p" + std::to_string(i + 1) + " must be positive");
  }
  return PriceVector<Rational>(std::move(values));
}

struct Options {
  std::string file;
  bool stats = false;
  bool json = false;
  std::string price;
  std::string output;
};

int dispatch(const std::string& command, const Options& opt, std::ostream& out) {
  const LoadedInstance loaded = load(opt.file);

  if (command == "candidates") {
    with_instance(loaded, [&](const auto& instance) {
      print_candidates(instance, filtered_prices(instance), opt.stats, opt.json, out);
    });
  } else if (command == "solve") {
    with_instance(loaded, [&](const auto& instance) {
      const auto solution = solve_auction(instance);
      if (opt.json) {
        json doc = clearing_json(instance, solution.best);
        doc["candidates"] = solution.candidates.candidates.size();
        out << doc.dump(2) << '\n';
      } else {
        print_clearing(solution.best, out);
        out << "candidates evaluated: " << solution.candidates.candidates.size() << '\n';
      }
    });
  } else if (command == "allocate") {
    const auto exact_price = parse_price_csv(opt.price, loaded.exact.goods);
    with_instance(loaded, [&](const auto& instance) {
      using Num = std::decay_t<decltype(instance.bids[0].budget())>;
      const auto result = revenue_at(instance, convert_price<Num>(exact_price));
      if (opt.json) out << clearing_json(instance, result).dump(2) << '\n';
      else print_clearing(result, out);
    });
  } else if (command == "plot") {
    if (loaded.exact.goods != 2)
      throw UsageError("plot needs exactly 2 goods, instance has " +
                       std::to_string(loaded.exact.goods));
    std::vector<PriceVector<Rational>> dots;
    for (const auto& c : filtered_prices(loaded.exact).candidates) dots.push_back(c.price);
    const std::string svg = render_price_space_svg(loaded.exact, dots);
    std::ofstream file(opt.output, std::ios::binary);
    if (!file) throw UsageError("cannot write " + opt.output);
    file << svg;
    if (!file.flush()) throw UsageError("cannot write " + opt.output);
    out << "wrote " << opt.output << '\n';
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Product-mix auction clearing"};
  app.name("pmx");
  app.require_subcommand(1);
  Options opt;

  auto* candidates = app.add_subcommand("candidates", "List candidate clearing prices");
  candidates->add_option("file", opt.file, "Instance file")->required();
  candidates->add_flag("--stats", opt.stats, "Print enumeration statistics");
  candidates->add_flag("--json", opt.json, "JSON output");

  auto* solve = app.add_subcommand("solve", "Find a revenue-maximizing price and allocation");
  solve->add_option("file", opt.file, "Instance file")->required();
  solve->add_flag("--json", opt.json, "JSON output");

  auto* allocate = app.add_subcommand("allocate", "Best envy-free allocation at a fixed price");
  allocate->add_option("file", opt.file, "Instance file")->required();
  allocate->add_option("--price", opt.price, "Comma-separated prices p1,...,pn")->required();
  allocate->add_flag("--json", opt.json, "JSON output");

  auto* plot = app.add_subcommand("plot", "Draw the price plane of a 2-good instance as SVG");
  plot->add_option("file", opt.file, "Instance file")->required();
  plot->add_option("--output", opt.output, "SVG file to write")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return dispatch(command, opt, out);
  } catch (const InvalidInstance& e) {
    err << "pmx: invalid instance " << opt.file << '\n';
    for (const auto& issue : e.issues()) err << "  " << issue.message << '\n';
    return kExitInput;
  } catch (const FormatError& e) {
    err << "pmx: " << e.what() << '\n';
    return kExitInput;
  } catch (const UsageError& e) {
    err << "pmx: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    err << "pmx: internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace pmx
