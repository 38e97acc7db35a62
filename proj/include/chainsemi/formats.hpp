#ifndef CHAINSEMI_FORMATS_HPP_
#define CHAINSEMI_FORMATS_HPP_

#include <string>

#include <json.hpp>

#include "claims.hpp"
#include "green_star.hpp"

namespace chainsemi {

// All machine output is deterministic: fixed key order, sorted content, no
// volatile fields. Identical inputs produce byte-identical strings.

nlohmann::ordered_json enumeration_json(const ElementSet& set);
std::string enumeration_csv(const ElementSet& set);

nlohmann::ordered_json classes_json(const ElementSet& set, const RelationClasses& classes);
std::string classes_csv(const ElementSet& set, const RelationClasses& classes);

//! The machine report. Claim runtimes are intentionally absent; they live
//! in the human-readable table.
nlohmann::ordered_json report_json(const VerificationReport& report);
//! Fixed-width table with per-claim runtimes, for standard output.
std::string report_table(const VerificationReport& report);

std::string dump_json(const nlohmann::ordered_json& j);

}  // namespace chainsemi

#endif  // CHAINSEMI_FORMATS_HPP_
