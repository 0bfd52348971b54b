#include "ramac/json_io.hpp"

namespace ramac {

using nlohmann::json;

namespace {
json rational_json(const Rational& r) {
  if (r.is_integer()) return r.num;
  return r.str();
}
}  // namespace

json to_json(const RamificationData& rd) {
  json j;
  j["lower_breaks"] = rd.lower_breaks;
  j["orders"] = rd.orders;
  json ups = json::array();
  for (const auto& u : rd.upper_breaks) ups.push_back(rational_json(u));
  j["upper_breaks"] = std::move(ups);
  j["d"] = rd.d_derivative;
  j["d_breaks"] = rd.d_breaks;
  j["d_igsum"] = rd.d_igsum;
  j["criterion_residue"] = rd.criterion_residue;
  json table = json::array();
  for (const auto& [sigma, ig] : rd.i_table) {
    json row;
    row["sigma"] = sigma.c;
    row["i_G"] = ig;
    table.push_back(std::move(row));
  }
  j["i_table"] = std::move(table);
  return j;
}

json to_json(const PropositionReport& rep) {
  json j;
  j["d"] = rep.d;
  j["g1"] = rep.g1;
  j["b_m"] = rep.b_m;
  j["u_m"] = rational_json(rep.u_m);
  j["criterion_residue"] = rep.criterion_residue;
  j["identity_holds"] = rep.identity_holds;
  j["congruence_holds"] = rep.congruence_holds;
  j["hasse_arf_integral"] = rep.hasse_arf_integral;
  j["remark_holds"] = rep.remark_holds;
  return j;
}

json to_json(const TraceIdealReport& rep) {
  json j;
  j["d"] = rep.d;
  json rows = json::array();
  for (const auto& r : rep.rows) {
    json row;
    row["k"] = r.k;
    row["floor_vL"] = r.floor_vL;
    row["containment_holds"] = r.containment_holds;
    row["witness_vL"] = r.witness_vL;
    row["witness_trace_vK"] = r.witness_trace_vK;
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  return j;
}

json to_json(const EulerTraceReport& rep) {
  json j;
  j["traces"] = rep.traces;
  j["direct_route_used"] = rep.direct_route_used;
  return j;
}

json to_json(const CriterionReport& rep) {
  json j;
  j["tower"] = rep.tower_label;
  j["p"] = rep.p;
  j["degree"] = rep.degree;
  j["criterion_residue"] = rep.criterion_residue;
  j["trials"] = rep.trials;
  j["generators_found"] = rep.generators_found;
  j["seed"] = rep.seed;
  j["trial_valuations"] = rep.trial_valuations;
  json ws = json::object();
  for (const auto& w : rep.witnesses) {
    json row;
    row["element"] = w.element;
    row["trace"] = w.trace;
    row["v_L"] = w.vL;
    row["is_generator"] = w.is_generator;
    ws[std::to_string(w.residue_class)] = std::move(row);
  }
  j["witnesses"] = std::move(ws);
  j["note"] = rep.note;
  return j;
}

json to_json(const CounterexampleRecord& rec) {
  json j;
  j["kind"] = rec.kind;
  j["q"] = rec.q;
  j[rec.kind == "tame" ? "e" : "f"] = rec.param;
  j["i"] = rec.i;
  j["rho"] = rec.rho;
  j["conjugates"] = rec.conjugates;
  j["span_dim"] = rec.span_dim;
  j["full_dim"] = rec.full_dim;
  j["det_is_zero"] = rec.det_is_zero;
  j["is_generator"] = rec.is_generator;
  return j;
}

}  // namespace ramac
