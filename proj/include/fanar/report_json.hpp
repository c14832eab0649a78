#pragma once

#include <string>

#include <json.hpp>

#include "fanar/detection.hpp"
#include "fanar/formulas.hpp"
#include "fanar/harness.hpp"
#include "fanar/oracles.hpp"
#include "fanar/partition.hpp"

namespace fanar {

using json = nlohmann::json;

json to_json(const VertexSet& s);
json to_json(const FanWitness& w);
json to_json(const ExtremalValue& v);
json to_json(const DeficitReport& d);
json to_json(const PartitionProperties& p);
json to_json(const VerificationReport& r);
json to_json(const GridCell& c);

// {parameters, value, witness_file, nodes, elapsed}
json oracle_record(const json& parameters, const OracleResult& res, const std::string& witness_file);

}  // namespace fanar
