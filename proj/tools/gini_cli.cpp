// Command-line surface for the extended Gini index: exact welfare of
// eventually periodic streams, transfer-principle certificates, the
// quantitative redistribution bound, convergence traces and the
// infinite-alphabet probe. One JSON document per invocation on stdout;
// diagnostics on stderr. Exit codes: 0 success/valid, 1 invalid
// certificate or failed bound, 2 malformed input.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "egini/axioms.hpp"
#include "egini/gini.hpp"
#include "egini/json_io.hpp"

namespace {

using egini::Json;
using egini::Rational;

constexpr int kExitValid = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitMalformed = 2;

void emit(const Json& payload) { std::cout << payload.dump(2) << "\n"; }

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << content;
}

Json rational_entry(const Rational& r) {
  return Json{{"exact", egini::format_rational(r)},
              {"decimal", egini::decimal_approx(r)}};
}

std::string ordering_name(egini::Ordering o) {
  switch (o) {
    case egini::Ordering::less: return "less";
    case egini::Ordering::equal: return "equal";
    case egini::Ordering::greater: return "greater";
  }
  return "?";
}

// Built-in demo streams, so exploration needs no hand-written JSON. The
// sparse pair is generator-only (not eventually periodic).
std::optional<egini::ValueGenerator> demo_generator(const std::string& name) {
  using egini::Stream;
  if (name == "x235")
    return egini::stream_generator(
        Stream::from_values({}, {Rational(2), Rational(3), Rational(5)}));
  if (name == "y145")
    return egini::stream_generator(
        Stream::from_values({}, {Rational(1), Rational(4), Rational(5)}));
  if (name == "sparse10")
    return egini::power_sparse_generator(10, Rational(1), Rational(4));
  if (name == "sparse10-partner")
    return egini::power_sparse_generator(10, Rational(2), Rational(3));
  return std::nullopt;
}

int cmd_welfare(const std::string& stream_file) {
  const egini::Stream s = egini::parse_stream_file(stream_file);
  const Rational w = egini::welfare_exact(s);
  Json payload;
  payload["W"] = egini::format_rational(w);
  payload["W_decimal"] = egini::decimal_approx(w);
  emit(payload);
  return kExitValid;
}

int cmd_compare(const std::string& file_a, const std::string& file_b) {
  const egini::Stream a = egini::parse_stream_file(file_a);
  const egini::Stream b = egini::parse_stream_file(file_b);
  Json payload;
  payload["order"] = ordering_name(egini::compare(a, b));
  payload["W_a"] = egini::format_rational(egini::welfare_exact(a));
  payload["W_b"] = egini::format_rational(egini::welfare_exact(b));
  emit(payload);
  return kExitValid;
}

int cmd_verify(const std::string& instance_file, const std::string& variant) {
  const auto v = egini::variant_from_name(variant);
  if (!v) throw std::invalid_argument("unknown variant: " + variant);
  const egini::TransferInstance inst = egini::parse_instance_file(instance_file);
  const egini::TransferCertificate cert = egini::verify_transfer(inst, *v);
  emit(egini::certificate_to_json(cert));
  return cert.valid ? kExitValid : kExitInvalid;
}

int cmd_prop1(const std::string& instance_file, std::uint64_t n_max,
              const std::string& csv_path) {
  const egini::TransferInstance inst = egini::parse_instance_file(instance_file);
  const auto cert = egini::verify_transfer(inst, egini::Variant::SAPD);
  if (!cert.valid) {
    std::cerr << "instance is not a valid s-APD transfer\n";
    emit(egini::certificate_to_json(cert));
    return kExitInvalid;
  }
  const auto rows = egini::prop1_bound_trace(inst, n_max);
  if (!csv_path.empty()) write_file(csv_path, egini::prop1_to_csv(rows));
  bool all_hold = true;
  Rational min_slack = rows.front().slack;
  for (const auto& r : rows) {
    all_hold = all_hold && r.holds;
    min_slack = std::min(min_slack, r.slack);
  }
  Json payload;
  payload["N_max"] = n_max;
  payload["all_hold"] = all_hold;
  payload["min_slack"] = egini::format_rational(min_slack);
  payload["dom_density"] = egini::format_rational(cert.dom_density.lower);
  payload["final"] = {
      {"raw_x", egini::format_rational(rows.back().raw_unequal)},
      {"raw_y", egini::format_rational(rows.back().raw_equal)},
      {"D", rows.back().dom_count},
      {"slack", egini::format_rational(rows.back().slack)}};
  emit(payload);
  return all_hold ? kExitValid : kExitInvalid;
}

int cmd_convergence(const std::string& stream_file, const std::string& demo,
                    std::uint64_t h, std::uint64_t n_max,
                    const std::string& csv_path) {
  egini::ValueGenerator gen;
  if (!demo.empty()) {
    auto g = demo_generator(demo);
    if (!g) throw std::invalid_argument("unknown demo: " + demo);
    gen = *g;
  } else if (!stream_file.empty()) {
    gen = egini::stream_generator(egini::parse_stream_file(stream_file));
  } else {
    throw std::invalid_argument("need a stream file or --demo");
  }
  const egini::WelfareTrace trace = egini::welfare_estimate(gen, h, n_max);
  if (!csv_path.empty()) write_file(csv_path, egini::trace_to_csv(trace));
  Json payload;
  payload["h"] = h;
  payload["N_max"] = n_max;
  payload["final_W_N"] = egini::format_rational(trace.points.back().w);
  payload["running_liminf"] =
      egini::format_rational(trace.final_liminf_estimate());
  payload["W_estimate"] = rational_entry(-trace.final_liminf_estimate());
  emit(payload);
  return kExitValid;
}

int cmd_case4_scan(int value_max, int eps_max) {
  const egini::Case4ScanResult r = egini::case4_scan(value_max, eps_max);
  Json payload;
  payload["configurations"] = r.configurations;
  payload["violations"] = r.violations;
  if (r.worst_slack)
    payload["worst_slack"] = egini::format_rational(*r.worst_slack);
  emit(payload);
  return r.violations == 0 ? kExitValid : kExitInvalid;
}

int cmd_prop2(std::uint64_t k_max, const std::string& csv_path) {
  const auto rows = egini::prop2_probe(k_max);
  if (!csv_path.empty()) write_file(csv_path, egini::prop2_to_csv(rows));
  Json payload;
  payload["K"] = k_max;
  payload["first_gap"] = egini::format_rational(rows.front().gap);
  payload["last_gap"] = egini::format_rational(rows.back().gap);
  Json table = Json::array();
  for (const auto& r : rows) {
    table.push_back({{"k", r.k},
                     {"eps", egini::format_rational(r.eps)},
                     {"W_unequal", egini::format_rational(r.w_unequal)},
                     {"W_equal", egini::format_rational(r.w_equal)},
                     {"gap", egini::format_rational(r.gap)}});
  }
  payload["rows"] = std::move(table);
  emit(payload);
  return kExitValid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extended Gini index on infinite utility streams"};
  app.require_subcommand(1);

  std::string stream_file, file_a, file_b, instance_file, variant, csv_path,
      demo;
  std::uint64_t n_max = 100, h = 1, k_max = 1;
  int value_max = 6, eps_max = 2;

  auto* welfare = app.add_subcommand("welfare", "Exact W of a periodic stream");
  welfare->add_option("stream", stream_file, "Stream JSON file")->required();

  auto* compare = app.add_subcommand("compare", "Welfare order of two streams");
  compare->add_option("a", file_a, "Stream JSON file")->required();
  compare->add_option("b", file_b, "Stream JSON file")->required();

  auto* verify =
      app.add_subcommand("verify", "Transfer-principle certificate");
  verify->add_option("instance", instance_file, "Instance JSON file")
      ->required();
  verify->add_option("--variant", variant, "pd|gpd|s-gpd|ipd|apd|wpd|s-apd")
      ->required();

  auto* prop1 = app.add_subcommand(
      "prop1", "Quantitative redistribution bound along block horizons");
  prop1->add_option("instance", instance_file, "Instance JSON file")
      ->required();
  prop1->add_option("--n-max", n_max, "Largest N")->check(CLI::PositiveNumber);
  prop1->add_option("--csv", csv_path, "Write per-N CSV here");

  auto* conv = app.add_subcommand("convergence", "W_N trace with running liminf");
  // Free up the short -h so the block-step option can be spelled --h.
  conv->set_help_flag("--help", "Print this help message and exit");
  conv->add_option("stream", stream_file, "Stream JSON file");
  conv->add_option("--demo", demo, "x235|y145|sparse10|sparse10-partner");
  conv->add_option("--h", h, "Block step")->check(CLI::PositiveNumber);
  conv->add_option("--n-max", n_max, "Largest N")->check(CLI::PositiveNumber);
  conv->add_option("--csv", csv_path, "Write trace CSV here");

  auto* scan = app.add_subcommand(
      "case4-scan", "Exhaustive five-pair inequality scan on an integer grid");
  scan->add_option("--value-max", value_max, "Grid bound")
      ->check(CLI::Range(2, 1000));
  scan->add_option("--eps-max", eps_max, "Epsilon bound")
      ->check(CLI::PositiveNumber);

  auto* prop2 = app.add_subcommand(
      "prop2", "Vanishing-gap probe over the infinite alphabet family");
  prop2->add_option("--k-max", k_max, "Largest k")
      ->required()
      ->check(CLI::PositiveNumber);
  prop2->add_option("--csv", csv_path, "Write probe CSV here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitMalformed;
  }

  try {
    if (welfare->parsed()) return cmd_welfare(stream_file);
    if (compare->parsed()) return cmd_compare(file_a, file_b);
    if (verify->parsed()) return cmd_verify(instance_file, variant);
    if (prop1->parsed()) return cmd_prop1(instance_file, n_max, csv_path);
    if (conv->parsed())
      return cmd_convergence(stream_file, demo, h, n_max, csv_path);
    if (scan->parsed()) return cmd_case4_scan(value_max, eps_max);
    if (prop2->parsed()) return cmd_prop2(k_max, csv_path);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitMalformed;
}
