#pragma once

#include <json.hpp>

#include "iipm/capacity.hpp"

namespace iipm {

// JSON shape: {"labels": [...], "values": {"<bitmask-decimal>": float, ...}}
// with all 2^K keys present. MassFunction uses the same shape with the
// lattice under "mass".
nlohmann::json capacity_to_json(const Capacity& nu);
Capacity capacity_from_json(const nlohmann::json& doc);

nlohmann::json mass_to_json(const MassFunction& mass);
MassFunction mass_from_json(const nlohmann::json& doc);

}  // namespace iipm
