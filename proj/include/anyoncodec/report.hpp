#pragma once

#include <json.hpp>

#include "anyoncodec/binary_code.hpp"
#include "anyoncodec/qgeometry.hpp"
#include "anyoncodec/qmetric.hpp"
#include "anyoncodec/stab_code.hpp"

namespace anyoncodec {

using Json = nlohmann::ordered_json;

struct ReportOptions {
  std::size_t max_enum_bits = kDefaultMaxEnumBits;
};

/// {isotropic, parity_class, dimension, even_dimension, odd_coset_rep, witnesses}.
/// A non-isotropic input yields isotropic=false and the offending pair.
Json classify_report(const BinaryCode& code);
Json classify_report(const QSubspace& subspace);

/// Distance of `code`: exhaustive over C^{perp_q} when its dimension is within
/// the cap, otherwise a weight-limited search sized to the same budget.
struct DistanceSummary {
  DistanceResult result;
  std::string method;  // "enumeration" or "weight_search"
  std::size_t searched_up_to = 0;  // weight bound of a weight search
};

DistanceSummary summarize_distance(const StabilizerCode& code, const ReportOptions& options = {});

Json code_report(const StabilizerCode& code, const ReportOptions& options = {});

Json filtration_report(const FiltrationReport& report);

}  // namespace anyoncodec
