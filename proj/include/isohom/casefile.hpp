#pragma once

// JSON case files and the report formats printed by the command-line tool.
//
//   {
//     "label": "Case 3: G = (Z/3)^2",
//     "group_orders": [3, 3],
//     "phi": [[1, 0], [0, 1], [2, 0], [0, 2]],
//     "psi": [[1, 1], [1, 2], [2, 2], [2, 1]]
//   }
//
// "label" is optional; any other key is rejected.

#include "isohom/families.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace isohom {

class CaseFileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CaseFile {
  std::vector<std::int64_t> group_orders;
  std::vector<std::vector<std::int64_t>> phi;
  std::vector<std::vector<std::int64_t>> psi;
  std::optional<std::string> label;

  bool operator==(const CaseFile&) const = default;
};

/// Throws CaseFileError with the JSON position or the offending field.
CaseFile parse_case_file(std::string_view text);
std::string serialize_case_file(const CaseFile& file);

CaseFile to_case_file(const FamilyCase& fc);
/// Builds the case without validating it; k is the largest image order.
FamilyCase to_family_case(const CaseFile& file);

/// "Z/4 ⊕ Z/4" style rendering; "0" for the trivial group.
std::string format_factors(const InvariantFactors& f);

/// One-line JSON object with the label and the invariant factors of each
/// method that was run, keys in fixed order.
std::string compute_report_json(const std::string& label,
                                const std::optional<InvariantFactors>& extension,
                                const std::optional<InvariantFactors>& oracle);

/// Human-readable description of a case.
std::string describe_case(const FamilyCase& fc);

}  // namespace isohom
