#include "isohom/casefile.hpp"

#include <json.hpp>

#include <sstream>

namespace isohom {

using ordered_json = nlohmann::ordered_json;

namespace {

std::int64_t as_integer(const ordered_json& v, const std::string& where) {
  if (!v.is_number_integer()) throw CaseFileError(where + ": expected an integer");
  return v.get<std::int64_t>();
}

std::vector<std::vector<std::int64_t>> parse_images(const ordered_json& v, const std::string& key,
                                                    std::size_t rank) {
  if (!v.is_array()) throw CaseFileError(key + ": expected an array of integer vectors");
  std::vector<std::vector<std::int64_t>> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::string where = key + "[" + std::to_string(i) + "]";
    const auto& vec = v[i];
    if (!vec.is_array()) throw CaseFileError(where + ": expected an array of integers");
    if (vec.size() != rank)
      throw CaseFileError(where + ": expected " + std::to_string(rank) +
                          " entries (one per group order), got " + std::to_string(vec.size()));
    std::vector<std::int64_t> coeffs;
    for (std::size_t j = 0; j < vec.size(); ++j)
      coeffs.push_back(as_integer(vec[j], where + "[" + std::to_string(j) + "]"));
    out.push_back(std::move(coeffs));
  }
  return out;
}

}  // namespace

CaseFile parse_case_file(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw CaseFileError(std::string("case file: ") + e.what());
  }
  if (!doc.is_object()) throw CaseFileError("case file: top level must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "label" && key != "group_orders" && key != "phi" && key != "psi")
      throw CaseFileError("case file: unknown key \"" + key + "\"");
  }
  for (const char* required : {"group_orders", "phi", "psi"})
    if (!doc.contains(required))
      throw CaseFileError(std::string("case file: missing key \"") + required + "\"");

  CaseFile out;
  const auto& orders = doc["group_orders"];
  if (!orders.is_array()) throw CaseFileError("group_orders: expected an array of integers");
  for (std::size_t i = 0; i < orders.size(); ++i) {
    const auto k = as_integer(orders[i], "group_orders[" + std::to_string(i) + "]");
    if (k < 2) throw CaseFileError("group_orders[" + std::to_string(i) + "]: cyclic orders must be >= 2");
    out.group_orders.push_back(k);
  }
  out.phi = parse_images(doc["phi"], "phi", out.group_orders.size());
  out.psi = parse_images(doc["psi"], "psi", out.group_orders.size());
  if (doc.contains("label")) {
    if (!doc["label"].is_string()) throw CaseFileError("label: expected a string");
    out.label = doc["label"].get<std::string>();
  }
  return out;
}

std::string serialize_case_file(const CaseFile& file) {
  ordered_json doc = ordered_json::object();
  if (file.label) doc["label"] = *file.label;
  doc["group_orders"] = file.group_orders;
  doc["phi"] = file.phi;
  doc["psi"] = file.psi;
  return doc.dump(2) + "\n";
}

CaseFile to_case_file(const FamilyCase& fc) {
  CaseFile out;
  out.label = fc.label;
  out.group_orders = fc.group().orders();
  for (const auto& x : fc.action.phi.images) out.phi.push_back(x.coeffs());
  for (const auto& x : fc.action.psi.images) out.psi.push_back(x.coeffs());
  return out;
}

FamilyCase to_family_case(const CaseFile& file) {
  const FinAbGroup g(file.group_orders);
  FamilyCase fc;
  fc.label = file.label.value_or("unnamed case");
  fc.action = ProductAction::from_systems(GeneratingSystem::from_coeffs(g, file.phi),
                                          GeneratingSystem::from_coeffs(g, file.psi));
  return fc;
}

std::string format_factors(const InvariantFactors& f) { return f.to_string(); }

std::string compute_report_json(const std::string& label,
                                const std::optional<InvariantFactors>& extension,
                                const std::optional<InvariantFactors>& oracle) {
  auto factors = [](const InvariantFactors& f) {
    ordered_json j = ordered_json::object();
    ordered_json list = ordered_json::array();
    for (const auto& d : f.factors) list.push_back(ordered_json::parse(d.str()));
    j["free_rank"] = f.free_rank;
    j["torsion"] = list;
    return j;
  };
  ordered_json doc = ordered_json::object();
  doc["label"] = label;
  if (extension) doc["paper"] = factors(*extension);
  if (oracle) doc["oracle"] = factors(*oracle);
  if (extension && oracle) doc["match"] = *extension == *oracle;
  return doc.dump() + "\n";
}

std::string describe_case(const FamilyCase& fc) {
  std::ostringstream os;
  os << fc.label << '\n';
  os << "  G = " << fc.group().to_string() << ", k = " << fc.action.k << ", n = " << fc.action.n()
     << ", m = " << fc.action.m() << '\n';
  if (fc.family_dimension >= 0) {
    os << "  family: ";
    if (fc.family_dimension == 0)
      os << "two points\n";
    else
      os << "dimension " << fc.family_dimension << '\n';
  }
  for (std::size_t i = 0; i < fc.action.n(); ++i)
    os << "  a" << (i + 1) << " -> " << fc.action.phi.images[i] << '\n';
  for (std::size_t j = 0; j < fc.action.m(); ++j)
    os << "  b" << (j + 1) << " -> " << fc.action.psi.images[j] << '\n';
  return os.str();
}

}  // namespace isohom
