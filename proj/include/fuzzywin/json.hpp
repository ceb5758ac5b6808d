#pragma once

#include <nlohmann/json.hpp>

#include "fuzzywin/ledger.hpp"

// JSON views shared by the renderer and the HTTP service. Key order is fixed so
// serialized output is byte-stable.

namespace fuzzywin::io {

using Json = nlohmann::ordered_json;

Json to_json(const EvaluationResult& evaluation);
Json to_json(const AttributedRecord& record);
Json to_json(const LedgerSummary& summary);
Json to_json(const RecordError& error);

}  // namespace fuzzywin::io
