#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "qmt/coevent.hpp"
#include "qmt/dynamics.hpp"
#include "qmt/limits.hpp"
#include "qmt/partition.hpp"
#include "qmt/theory.hpp"

namespace qmt {

using Json = nlohmann::ordered_json;

// Rationals travel as "p/q" strings or plain integers.
Rational rational_from_json(const Json& value);
Json rational_to_json(const Rational& value);

// {"histories": [...], "measure": {"type": "table", "values": {"0x1": "1/3", ...}}}
// or {"histories": [...], "measure": {"type": "decoherence", "matrix": [[["re", "im"], ...], ...]}}.
// The table form must list all 2^n events.
HistoriesTheory theory_from_json(const Json& doc, const Limits& limits = {});
Json theory_to_json(const HistoriesTheory& theory);
HistoriesTheory load_theory(const std::filesystem::path& path, const Limits& limits = {});

// {"dual": "0x5"} or {"table": {"0x7": 1, ...}} with unlisted events false.
CoEvent coevent_from_json(const Json& doc, unsigned n);
Json coevent_to_json(const CoEvent& phi);

// ["0x5", "0x2"]
Partition partition_from_json(const Json& doc, unsigned n);
Json partition_to_json(const Partition& partition);

Json feasibility_to_json(const FeasibilitySystem& system, const FeasibilityResult& result);
Json system_to_json(const FeasibilitySystem& system);

// Parses a whole file as JSON; malformed documents raise InvalidArgument.
Json read_json_file(const std::filesystem::path& path);

}  // namespace qmt
