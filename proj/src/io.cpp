#include "qmt/io.hpp"

#include <fstream>
#include <sstream>

#include "qmt/error.hpp"

namespace qmt {

namespace {

const Json& field(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) throw InvalidArgument(std::string("missing field \"") + key + "\"");
  return doc.at(key);
}

EventMask mask_in_space(const std::string& text, unsigned n) {
  const EventMask m = parse_hex_mask(text);
  if (n < 32 && (m >> n) != 0) throw InvalidArgument("event " + text + " lies outside a " + std::to_string(n) + "-history space");
  return m;
}

}  // namespace

Rational rational_from_json(const Json& value) {
  if (value.is_number_integer()) {
    return Rational(BigInt(std::to_string(value.get<long long>())));
  }
  if (value.is_string()) return parse_rational(value.get<std::string>());
  throw InvalidArgument("expected a rational as \"p/q\" or an integer, got " + value.dump());
}

Json rational_to_json(const Rational& value) { return to_string(value); }

HistoriesTheory theory_from_json(const Json& doc, const Limits& limits) {
  const Json& histories = field(doc, "histories");
  if (!histories.is_array()) throw InvalidArgument("\"histories\" must be an array of strings");
  std::vector<std::string> labels;
  for (const auto& h : histories) {
    if (!h.is_string()) throw InvalidArgument("history labels must be strings");
    labels.push_back(h.get<std::string>());
  }
  SampleSpace space(std::move(labels));
  const unsigned n = space.size();
  require_within(n, limits.enumeration_cap, "explicit theory");

  const Json& measure = field(doc, "measure");
  const Json& type = field(measure, "type");
  if (type == "table") {
    const Json& values = field(measure, "values");
    if (!values.is_object()) throw InvalidArgument("\"values\" must map event masks to rationals");
    const std::size_t count = std::size_t{1} << n;
    std::vector<Rational> table(count);
    std::vector<bool> seen(count, false);
    for (const auto& [key, v] : values.items()) {
      const EventMask m = mask_in_space(key, n);
      if (seen[m]) throw InvalidArgument("event " + to_hex(m) + " listed twice");
      seen[m] = true;
      table[m] = rational_from_json(v);
    }
    for (std::size_t a = 0; a < count; ++a) {
      if (!seen[a]) throw InvalidArgument("measure table is missing event " + to_hex(static_cast<EventMask>(a)));
    }
    return HistoriesTheory::from_table(std::move(space), std::move(table), limits);
  }
  if (type == "decoherence") {
    const Json& rows = field(measure, "matrix");
    if (!rows.is_array() || rows.size() != n) throw InvalidArgument("decoherence matrix must have one row per history");
    DecoherenceMatrix d(n);
    for (unsigned i = 0; i < n; ++i) {
      if (!rows[i].is_array() || rows[i].size() != n) throw InvalidArgument("decoherence matrix must be square");
      for (unsigned j = 0; j < n; ++j) {
        const Json& entry = rows[i][j];
        if (entry.is_array()) {
          if (entry.size() != 2) throw InvalidArgument("complex entries are [re, im] pairs");
          d(i, j) = ComplexRational(rational_from_json(entry[0]), rational_from_json(entry[1]));
        } else {
          d(i, j) = ComplexRational(rational_from_json(entry));
        }
      }
    }
    return HistoriesTheory::from_decoherence(std::move(space), std::move(d), limits);
  }
  throw InvalidArgument("measure type must be \"table\" or \"decoherence\", got " + type.dump());
}

Json theory_to_json(const HistoriesTheory& theory) {
  Json doc;
  doc["histories"] = theory.space().labels();
  Json measure;
  if (theory.has_decoherence()) {
    measure["type"] = "decoherence";
    const auto& d = theory.decoherence();
    Json rows = Json::array();
    for (unsigned i = 0; i < d.size(); ++i) {
      Json row = Json::array();
      for (unsigned j = 0; j < d.size(); ++j) row.push_back(Json::array({to_string(d(i, j).re), to_string(d(i, j).im)}));
      rows.push_back(std::move(row));
    }
    measure["matrix"] = std::move(rows);
  } else {
    measure["type"] = "table";
    Json values = Json::object();
    const auto mu = theory.mu_table();
    for (std::size_t a = 0; a < mu.size(); ++a) values[to_hex(static_cast<EventMask>(a))] = to_string(mu[a]);
    measure["values"] = std::move(values);
  }
  doc["measure"] = std::move(measure);
  return doc;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return Json::parse(buffer.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidArgument(path.string() + ": " + e.what());
  }
}

HistoriesTheory load_theory(const std::filesystem::path& path, const Limits& limits) {
  try {
    return theory_from_json(read_json_file(path), limits);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(path.string() + ": " + e.what());
  }
}

CoEvent coevent_from_json(const Json& doc, unsigned n) {
  if (doc.is_object() && doc.contains("dual")) {
    if (!doc["dual"].is_string()) throw InvalidArgument("\"dual\" must be a hex mask string");
    return CoEvent::multiplicative(Event(mask_in_space(doc["dual"].get<std::string>(), n), n));
  }
  if (doc.is_object() && doc.contains("table")) {
    const Json& table = doc["table"];
    if (!table.is_object()) throw InvalidArgument("\"table\" must map event masks to 0 or 1");
    EventBitmap bits(n);
    for (const auto& [key, v] : table.items()) {
      if (!v.is_number_integer() || (v != 0 && v != 1)) throw InvalidArgument("co-event values must be 0 or 1");
      bits.assign(mask_in_space(key, n), v == 1);
    }
    return CoEvent::from_table(std::move(bits));
  }
  throw InvalidArgument("a co-event is {\"dual\": ...} or {\"table\": ...}");
}

Json coevent_to_json(const CoEvent& phi) {
  Json doc;
  if (phi.is_multiplicative_form()) {
    doc["dual"] = to_hex(phi.dual());
    return doc;
  }
  Json table = Json::object();
  for (const Event& e : phi.table().events()) table[to_hex(e)] = 1;
  doc["table"] = std::move(table);
  return doc;
}

Partition partition_from_json(const Json& doc, unsigned n) {
  if (!doc.is_array()) throw InvalidArgument("a partition is an array of hex masks");
  std::vector<Event> blocks;
  for (const auto& b : doc) {
    if (!b.is_string()) throw InvalidArgument("partition blocks are hex mask strings");
    blocks.emplace_back(mask_in_space(b.get<std::string>(), n), n);
  }
  return Partition(std::move(blocks));
}

Json partition_to_json(const Partition& partition) {
  Json doc = Json::array();
  for (const Event& b : partition.blocks()) doc.push_back(to_hex(b));
  return doc;
}

namespace {

std::string_view mode_name(FeasibilityMode mode) {
  switch (mode) {
    case FeasibilityMode::all_events: return "all-events";
    case FeasibilityMode::binary: return "binary";
    case FeasibilityMode::observable: return "observable";
  }
  return "?";
}

Json row_label(const FeasibilityRow& row) {
  return row.event ? Json(to_hex(*row.event)) : Json("normalization");
}

}  // namespace

Json system_to_json(const FeasibilitySystem& system) {
  Json doc;
  doc["mode"] = mode_name(system.mode);
  Json coevents = Json::array();
  for (const auto& phi : system.coevents) coevents.push_back(coevent_to_json(phi));
  doc["coevents"] = std::move(coevents);
  Json rows = Json::array();
  for (const auto& row : system.rows) {
    Json r;
    r["event"] = row_label(row);
    r["coefficients"] = row.coefficients;
    r["rhs"] = to_string(row.rhs);
    rows.push_back(std::move(r));
  }
  doc["rows"] = std::move(rows);
  return doc;
}

Json feasibility_to_json(const FeasibilitySystem& system, const FeasibilityResult& result) {
  Json doc;
  switch (result.status) {
    case FeasibilityStatus::feasible: {
      doc["feasible"] = true;
      Json assignment = Json::object();
      for (std::size_t k = 0; k < system.coevents.size(); ++k) {
        assignment[to_hex(system.coevents[k].dual())] = to_string(result.assignment[k]);
      }
      doc["assignment"] = std::move(assignment);
      break;
    }
    case FeasibilityStatus::inconsistent_row:
      doc["feasible"] = false;
      doc["certificate"] = {{"kind", "inconsistent-row"},
                            {"row", *result.row},
                            {"event", row_label(system.rows[*result.row])},
                            {"rhs", to_string(system.rows[*result.row].rhs)}};
      break;
    case FeasibilityStatus::infeasible: {
      doc["feasible"] = false;
      Json y = Json::array();
      for (const auto& v : result.farkas) y.push_back(to_string(v));
      doc["certificate"] = {{"kind", "farkas"}, {"multipliers", std::move(y)}};
      break;
    }
  }
  return doc;
}

}  // namespace qmt
