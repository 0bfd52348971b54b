#ifndef RAMAC_JSON_IO_HPP
#define RAMAC_JSON_IO_HPP

#include <json.hpp>

#include "ramac/nbasis.hpp"
#include "ramac/ramify.hpp"

namespace ramac {

nlohmann::json to_json(const RamificationData& rd);
nlohmann::json to_json(const PropositionReport& rep);
nlohmann::json to_json(const TraceIdealReport& rep);
nlohmann::json to_json(const EulerTraceReport& rep);
nlohmann::json to_json(const CriterionReport& rep);
nlohmann::json to_json(const CounterexampleRecord& rec);

}  // namespace ramac

#endif
