#pragma once

#include <json.hpp>

#include "curtis.hpp"
#include "soergel.hpp"

namespace weylkit {

using Json = nlohmann::ordered_json;

// Parsed run configuration. Serialization round-trips.
struct RunConfig {
  Json datum = "GL2";  // builtin name, file path, or inline datum object
  i64 q = 2;
  Json tau = "id";  // name or explicit matrix
  std::string coeff = "qlbar";
  i64 ell = 0;
  i64 order_bound = 6;
  i64 weyl_cap = kDefaultWeylCap;
  std::uint64_t seed = 0x5eed;

  static RunConfig from_json(const Json& j);
  Json to_json() const;
};

// Context resolved from a config: datum, Weyl group, Frobenius.
struct Session {
  RootDatum rd;
  WeylGroup W;
  FrobeniusDatum fr;
  CoeffMode mode;

  static Session open(const RunConfig& cfg);
};

RootDatum resolve_datum(const Json& spec);
IntMat resolve_tau(const RootDatum& rd, const Json& spec);

// JSON encoders for the wire formats.
Json datum_file_json(const RootDatum& rd);
Json point_json(const SemisimplePoint& s);
Json word_json(const WeylGroup& W, int w);  // 1-based reduced word
std::vector<int> parse_word(const Json& j, int num_simple);  // 1-based -> 0-based
Json block_json(const WeylGroup& W, const Block& b);
Json classification_json(const CartanClassification& c);

// One entry point per CLI subcommand; every command takes a JSON parameter
// object and returns a JSON document.
Json cmd_validate(const Json& params);
Json cmd_dual(const Json& params);
Json cmd_weyl(const Json& params);
Json cmd_blocks(const Json& params);
Json cmd_endoscopy(const Json& params);
Json cmd_series(const Json& params);
Json cmd_torus(const Json& params);
Json cmd_curtis(const Json& params);
Json cmd_gg(const Json& params);
Json cmd_soergel_bs(const Json& params);
Json cmd_soergel_steinberg(const Json& params);
Json cmd_report(const Json& params);
Json cmd_verify(const Json& params);

// Dispatch by command name; throws InvalidArgument for unknown names.
Json run_command(const std::string& name, const Json& params);

// Serializes with the fixed layout used for golden files.
std::string render(const Json& j);

}  // namespace weylkit
