#pragma once

#include <string>

#include "json.hpp"
#include "pursuit/bounds.hpp"
#include "pursuit/engine.hpp"
#include "pursuit/exact_solver.hpp"
#include "pursuit/expander.hpp"
#include "pursuit/guard.hpp"
#include "pursuit/meyniel.hpp"

namespace pursuit {

// Insertion-ordered so identical inputs dump to identical bytes.
using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "pursuit/1";

/// Top-level document: {"schema": ..., "kind": kind}.
Json document(const std::string& kind);

/// Graph hashes are written as 16-digit hex strings.
std::string hex64(std::uint64_t x);

Json to_json(const GameConfig& cfg);
Json to_json(const Transcript& t);
Json to_json(const VertexSet& s);
Json to_json(const CopSetFamily& family);
Json to_json(const LevelDecomposition& plan);
Json to_json(const PlanFailure& failure);
Json to_json(const GuardAudit& audit);
Json to_json(const ConfinementAudit& audit);
Json to_json(const RecursionTree& tree);
Json to_json(const MeynielResult& result);
Json to_json(const Enclosure& e);
Json to_json(const BoundParams& params);
Json to_json(const ChainStep& step);
Json to_json(const ChainReport& report);

const char* to_string(MeynielStatus status);
const char* to_string(HalfMove half);

}  // namespace pursuit
