#pragma once

#include <json.hpp>

#include <cstdio>
#include <string>

#include "equifreq/chains.hpp"
#include "equifreq/oracle.hpp"
#include "equifreq/pairs.hpp"
#include "equifreq/physics.hpp"
#include "equifreq/version.hpp"

namespace equifreq {

// Streamed output records. Integers always render as decimal strings so
// arbitrary-precision values survive the JSON round trip; doubles stay JSON
// numbers (nlohmann emits shortest round-trip form).
using Record = nlohmann::ordered_json;

enum class OutputFormat { JsonLines, Csv };

inline Record header_record() {
  return Record{{"kind", "header"}, {"tool", kToolName}, {"version", kVersion}};
}

inline Record conic_solution_record(const ConicSolution& sol, const Slope& q, const Int& l) {
  return Record{{"kind", "conic_solution"}, {"s", sol.s.get_str()}, {"q1", q.q1.get_str()},
                {"q2", q.q2.get_str()},     {"l", l.get_str()},     {"x", sol.x.get_str()},
                {"y", sol.y.get_str()},     {"z", sol.z.get_str()}};
}

inline Record quadruple_record(const Quadruple& q, const Rational& delta) {
  return Record{{"kind", "quadruple"},
                {"n1", q.a.upper.get_str()},
                {"n2", q.a.lower.get_str()},
                {"n3", q.b.upper.get_str()},
                {"n4", q.b.lower.get_str()},
                {"delta_num", delta.num().get_str()},
                {"delta_den", delta.den().get_str()}};
}

inline Record witness_record(const PairWitness& w) {
  return Record{{"kind", "witness"},       {"s", w.s.get_str()},
                {"x1", w.sol1.x.get_str()}, {"y1", w.sol1.y.get_str()},
                {"z1", w.sol1.z.get_str()}, {"x2", w.sol2.x.get_str()},
                {"y2", w.sol2.y.get_str()}, {"z2", w.sol2.z.get_str()},
                {"t1", w.t1.get_str()},     {"t2", w.t2.get_str()}};
}

inline Record members_json(const std::vector<Transition>& members) {
  Record list = Record::array();
  for (const Transition& t : members) {
    list.push_back(Record{{"upper", t.upper.get_str()}, {"lower", t.lower.get_str()}});
  }
  return list;
}

inline Record chain_record(const EquifreqChain& chain) {
  return Record{{"kind", "chain"},
                {"delta_num", chain.delta.num().get_str()},
                {"delta_den", chain.delta.den().get_str()},
                {"members", members_json(chain.transitions)}};
}

inline Record group_record(const Group& group) {
  return Record{{"kind", "group"},
                {"delta_num", group.delta.num().get_str()},
                {"delta_den", group.delta.den().get_str()},
                {"members", members_json(group.members)}};
}

inline Record line_record(const Transition& t, const PhysicalLine& line) {
  return Record{{"kind", "line"},
                {"upper", t.upper.get_str()},
                {"lower", t.lower.get_str()},
                {"delta_num", line.delta.num().get_str()},
                {"delta_den", line.delta.den().get_str()},
                {"constants", constants(line.profile).name},
                {"energy_ev", line.energy_ev},
                {"frequency_hz", line.frequency_hz},
                {"wavelength_nm", line.wavelength_nm}};
}

namespace detail {

inline std::string csv_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::string csv_members(const Record& members) {
  std::string out;
  for (const auto& m : members) {
    if (!out.empty()) out += ';';
    out += m.at("upper").get<std::string>() + ">" + m.at("lower").get<std::string>();
  }
  return out;
}

} // namespace detail

/// One line per record. CSV columns are fixed per kind and documented in the
/// README; member lists join as "upper>lower" items with ';'.
inline std::string render(const Record& record, OutputFormat format) {
  if (format == OutputFormat::JsonLines) return record.dump();
  const std::string kind = record.at("kind").get<std::string>();
  std::string out = kind;
  auto add = [&](const char* field) { out += "," + record.at(field).get<std::string>(); };
  if (kind == "header") {
    add("tool");
    add("version");
  } else if (kind == "conic_solution") {
    for (const char* f : {"s", "q1", "q2", "l", "x", "y", "z"}) add(f);
  } else if (kind == "quadruple") {
    for (const char* f : {"n1", "n2", "n3", "n4", "delta_num", "delta_den"}) add(f);
  } else if (kind == "witness") {
    for (const char* f : {"s", "x1", "y1", "z1", "x2", "y2", "z2", "t1", "t2"}) add(f);
  } else if (kind == "chain" || kind == "group") {
    add("delta_num");
    add("delta_den");
    out += "," + detail::csv_members(record.at("members"));
  } else if (kind == "line") {
    for (const char* f : {"upper", "lower", "delta_num", "delta_den", "constants"}) add(f);
    for (const char* f : {"energy_ev", "frequency_hz", "wavelength_nm"})
      out += "," + detail::csv_double(record.at(f).get<double>());
  }
  return out;
}

} // namespace equifreq
