#include "iipm/serialize.hpp"

#include <string>
#include <vector>

namespace iipm {

namespace {

nlohmann::json lattice_to_json(const std::vector<double>& values) {
  nlohmann::json out = nlohmann::json::object();
  for (std::size_t a = 0; a < values.size(); ++a) {
    out[std::to_string(a)] = values[a];
  }
  return out;
}

std::pair<FiniteSpace, std::vector<double>> lattice_from_json(
    const nlohmann::json& doc, const char* lattice_key) {
  if (!doc.is_object() || !doc.contains("labels") ||
      !doc.contains(lattice_key)) {
    throw Error(std::string("expected object with 'labels' and '") +
                lattice_key + "'");
  }
  FiniteSpace space(doc.at("labels").get<std::vector<std::string>>());
  const std::size_t n = subset_count(space.size());
  const auto& entries = doc.at(lattice_key);
  if (!entries.is_object() || entries.size() != n) {
    throw BadLength("lattice must carry exactly 2^K keys");
  }
  std::vector<double> values(n);
  for (std::size_t a = 0; a < n; ++a) {
    const std::string key = std::to_string(a);
    if (!entries.contains(key)) {
      throw Error("missing lattice key '" + key + "'");
    }
    values[a] = entries.at(key).get<double>();
  }
  return {std::move(space), std::move(values)};
}

}  // namespace

nlohmann::json capacity_to_json(const Capacity& nu) {
  nlohmann::json doc;
  doc["labels"] = nu.space().labels();
  doc["values"] = lattice_to_json(nu.values());
  return doc;
}

Capacity capacity_from_json(const nlohmann::json& doc) {
  auto [space, values] = lattice_from_json(doc, "values");
  return validate_capacity(space, std::move(values));
}

nlohmann::json mass_to_json(const MassFunction& mass) {
  nlohmann::json doc;
  doc["labels"] = mass.space().labels();
  doc["mass"] = lattice_to_json(mass.values());
  return doc;
}

MassFunction mass_from_json(const nlohmann::json& doc) {
  auto [space, values] = lattice_from_json(doc, "mass");
  return MassFunction(std::move(space), std::move(values));
}

}  // namespace iipm
