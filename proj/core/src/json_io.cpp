#include "egini/json_io.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace egini {

namespace {

[[noreturn]] void fail(const std::string& what) {
  throw std::invalid_argument(what);
}

Rational json_rational(const Json& j) {
  if (j.is_number_integer()) {
    return Rational(BigInt(j.get<long long>()));
  }
  if (j.is_string()) {
    if (auto r = parse_rational(j.get<std::string>())) return *r;
    fail("malformed rational: " + j.get<std::string>());
  }
  fail("rational must be a \"p/q\" string or integer (floats rejected)");
}

std::vector<std::size_t> json_indices(const Json& j, const std::string& name) {
  if (!j.is_array()) fail(name + " must be an array");
  std::vector<std::size_t> out;
  out.reserve(j.size());
  for (const auto& e : j) {
    if (!e.is_number_integer() || e.get<long long>() < 0)
      fail(name + " entries must be non-negative integers");
    out.push_back(e.get<std::size_t>());
  }
  return out;
}

}  // namespace

Stream parse_stream(const Json& j) {
  if (!j.is_object() || !j.contains("alphabet") || !j.contains("period"))
    fail("stream needs \"alphabet\" and \"period\"");
  if (!j["alphabet"].is_array() || j["alphabet"].empty())
    fail("alphabet must be a non-empty array");
  std::vector<Rational> values;
  for (const auto& e : j["alphabet"]) values.push_back(json_rational(e));
  std::vector<std::size_t> pre;
  if (j.contains("preperiod")) pre = json_indices(j["preperiod"], "preperiod");
  std::vector<std::size_t> per = json_indices(j["period"], "period");
  try {
    return Stream(Alphabet(std::move(values)), std::move(pre), std::move(per));
  } catch (const std::exception& e) {
    fail(e.what());
  }
}

Json serialize_stream(const Stream& s) {
  Json j;
  j["alphabet"] = Json::array();
  for (const auto& v : s.alphabet().values())
    j["alphabet"].push_back(format_rational(v));
  j["preperiod"] = s.preperiod();
  j["period"] = s.period();
  return j;
}

PairingFunction parse_pairing(const Json& j) {
  if (!j.is_object() || !j.contains("h") || !j.contains("block_period"))
    fail("pairing needs \"h\" and \"block_period\"");
  if (!j["h"].is_number_integer() || j["h"].get<long long>() < 1)
    fail("\"h\" must be a positive integer");
  const std::size_t h = j["h"].get<std::size_t>();
  auto blocks = [&](const Json& arr, const std::string& name) {
    if (!arr.is_array()) fail(name + " must be an array of blocks");
    std::vector<BlockInvolution> out;
    for (const auto& b : arr) {
      if (!b.is_array() || b.size() != h)
        fail(name + " blocks must be arrays of length h");
      BlockInvolution block;
      for (const auto& e : b) {
        if (e.is_null()) {
          block.push_back(std::nullopt);
        } else if (e.is_number_integer() && e.get<long long>() >= 0) {
          block.push_back(e.get<std::size_t>());
        } else {
          fail(name + " entries must be offsets or null");
        }
      }
      out.push_back(std::move(block));
    }
    return out;
  };
  std::vector<BlockInvolution> pre;
  if (j.contains("block_preperiod"))
    pre = blocks(j["block_preperiod"], "block_preperiod");
  std::vector<BlockInvolution> per = blocks(j["block_period"], "block_period");
  try {
    return PairingFunction(h, std::move(pre), std::move(per));
  } catch (const std::exception& e) {
    fail(e.what());
  }
}

Json serialize_pairing(const PairingFunction& p) {
  auto blocks = [](const std::vector<BlockInvolution>& bs) {
    Json arr = Json::array();
    for (const auto& b : bs) {
      Json block = Json::array();
      for (const auto& e : b) {
        if (e)
          block.push_back(*e);
        else
          block.push_back(nullptr);
      }
      arr.push_back(std::move(block));
    }
    return arr;
  };
  Json j;
  j["h"] = p.step();
  j["block_preperiod"] = blocks(p.block_preperiod());
  j["block_period"] = blocks(p.block_period());
  return j;
}

TransferInstance parse_instance(const Json& j) {
  if (!j.is_object() || !j.contains("unequal") || !j.contains("equal") ||
      !j.contains("pairing"))
    fail("instance needs \"unequal\", \"equal\" and \"pairing\"");
  return TransferInstance{parse_stream(j["unequal"]), parse_stream(j["equal"]),
                          parse_pairing(j["pairing"])};
}

Json serialize_instance(const TransferInstance& inst) {
  Json j;
  j["unequal"] = serialize_stream(inst.unequal);
  j["equal"] = serialize_stream(inst.equal);
  j["pairing"] = serialize_pairing(inst.alpha);
  return j;
}

Json certificate_to_json(const TransferCertificate& cert) {
  Json j;
  j["variant"] = variant_name(cert.variant);
  j["valid"] = cert.valid;
  j["dom_density"] = {{"lower", format_rational(cert.dom_density.lower)},
                      {"upper", format_rational(cert.dom_density.upper)}};
  if (cert.step) j["step"] = *cert.step;
  Json eps = Json::object();
  for (const auto& [k, e] : cert.epsilons)
    eps[std::to_string(k)] = format_rational(e);
  j["epsilons"] = std::move(eps);
  Json viols = Json::array();
  for (const auto& v : cert.violations)
    viols.push_back({{"index", v.index}, {"what", v.what}});
  j["violations"] = std::move(viols);
  return j;
}

namespace {

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open " + path);
  Json j = Json::parse(in, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) fail("invalid JSON in " + path);
  return j;
}

}  // namespace

Stream parse_stream_file(const std::string& path) {
  return parse_stream(load_json(path));
}

TransferInstance parse_instance_file(const std::string& path) {
  return parse_instance(load_json(path));
}

std::string trace_to_csv(const WelfareTrace& trace) {
  std::ostringstream out;
  out << "N,H_N,W_N_num,W_N_den,running_liminf_num,running_liminf_den\n";
  for (std::size_t i = 0; i < trace.points.size(); ++i) {
    const auto& p = trace.points[i];
    const auto& inf = trace.tail_infimum[i];
    out << p.N << ',' << p.N * trace.h << ',' << numerator(p.w) << ','
        << denominator(p.w) << ',' << numerator(inf) << ','
        << denominator(inf) << '\n';
  }
  return out.str();
}

std::string prop1_to_csv(const std::vector<Prop1Row>& rows) {
  std::ostringstream out;
  out << "N,raw_x,raw_y,D,bound,slack\n";
  for (const auto& r : rows) {
    out << r.N << ',' << format_rational(r.raw_unequal) << ','
        << format_rational(r.raw_equal) << ',' << r.dom_count << ','
        << format_rational(r.bound) << ',' << format_rational(r.slack) << '\n';
  }
  return out.str();
}

std::string prop2_to_csv(const std::vector<Prop2Row>& rows) {
  std::ostringstream out;
  out << "k,eps,W_unequal,W_equal,gap\n";
  for (const auto& r : rows) {
    out << r.k << ',' << format_rational(r.eps) << ','
        << format_rational(r.w_unequal) << ',' << format_rational(r.w_equal)
        << ',' << format_rational(r.gap) << '\n';
  }
  return out.str();
}

}  // namespace egini
