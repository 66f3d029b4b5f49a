#pragma once

#include <json.hpp>
#include <string>

#include "rmm/engine.hpp"
#include "rmm/oracle.hpp"
#include "rmm/strategies.hpp"

namespace rmm {

using Json = nlohmann::ordered_json;

const char* to_string(EouLabel label);
const char* to_string(oracle::EdgeClass cls);

/// Machine-readable result documents. Key order and element order are fixed
/// (canonical instance order throughout), so output is byte-stable.
Json to_json(const Instance& inst, const Matching& m);
Json to_json(const Instance& inst, const RmmResult& result, bool include_phases);
Json to_json(const Instance& inst, const StrategyOutcome& outcome);
Json to_json(const Instance& inst, const HpConstruction& hp);
Json to_json(const Instance& inst, const oracle::RmmSet& set);

}  // namespace rmm
