#pragma once

#include <nlohmann/json_fwd.hpp>

#include <string>

#include "egini/axioms.hpp"

namespace egini {

// All parsers throw std::invalid_argument on malformed documents; exact
// rationals travel as "p/q" strings (bare integers accepted on input,
// floats rejected).

using Json = nlohmann::ordered_json;

Stream parse_stream(const Json& j);
Json serialize_stream(const Stream& s);

PairingFunction parse_pairing(const Json& j);
Json serialize_pairing(const PairingFunction& p);

TransferInstance parse_instance(const Json& j);
Json serialize_instance(const TransferInstance& inst);

Json certificate_to_json(const TransferCertificate& cert);

Stream parse_stream_file(const std::string& path);
TransferInstance parse_instance_file(const std::string& path);

// "N,H_N,W_N_num,W_N_den,running_liminf_num,running_liminf_den"
std::string trace_to_csv(const WelfareTrace& trace);

// "N,raw_x,raw_y,D,bound,slack" with rationals as p/q strings
std::string prop1_to_csv(const std::vector<Prop1Row>& rows);

// "k,eps,W_unequal,W_equal,gap" with rationals as p/q strings
std::string prop2_to_csv(const std::vector<Prop2Row>& rows);

}  // namespace egini
