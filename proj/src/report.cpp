#include "anyoncodec/report.hpp"

#include <cmath>

namespace anyoncodec {

namespace {

Json optional_vector(const std::optional<BitVector>& v) { return v ? Json(v->to_string()) : Json(nullptr); }

Json optional_size(const std::optional<std::size_t>& v) { return v ? Json(*v) : Json(nullptr); }

Json rows_json(const std::vector<BitVector>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) out.push_back(r.to_string());
  return out;
}

// Largest W such that sum_{w <= W} C(len, w) stays within 2^bits.
std::size_t weight_budget(std::size_t len, std::size_t bits) {
  const double budget = std::ldexp(1.0, static_cast<int>(bits));
  double total = 1.0;
  double binom = 1.0;
  std::size_t w = 0;
  while (w < len) {
    binom = binom * static_cast<double>(len - w) / static_cast<double>(w + 1);
    if (total + binom > budget) break;
    total += binom;
    ++w;
  }
  return w;
}

}  // namespace

Json classify_report(const QSubspace& subspace) {
  Json j;
  j["isotropic"] = true;
  j["parity_class"] = to_string(subspace.parity_class);
  j["dimension"] = subspace.dimension();
  j["even_dimension"] = subspace.even_part.dimension();
  j["odd_coset_rep"] = optional_vector(subspace.odd_coset_rep);
  j["witnesses"] = Json::array();
  return j;
}

Json classify_report(const BinaryCode& code) {
  if (auto w = q_witness(code)) {
    Json j;
    j["isotropic"] = false;
    j["parity_class"] = nullptr;
    j["dimension"] = code.dimension();
    j["even_dimension"] = nullptr;
    j["odd_coset_rep"] = nullptr;
    j["witnesses"] = Json::array({w->first.to_string(), w->second.to_string()});
    return j;
  }
  return classify_report(classify(code));
}

DistanceSummary summarize_distance(const StabilizerCode& code, const ReportOptions& options) {
  DistanceSummary summary;
  if (code.complement().dimension() <= options.max_enum_bits) {
    summary.result = clifford_distance(code, options.max_enum_bits);
    summary.method = "enumeration";
  } else {
    summary.searched_up_to = weight_budget(code.modes(), options.max_enum_bits);
    summary.result = clifford_distance_by_weight(code, summary.searched_up_to);
    summary.method = "weight_search";
  }
  return summary;
}

Json code_report(const StabilizerCode& code, const ReportOptions& options) {
  const DistanceSummary distance = summarize_distance(code, options);
  const VerdictCensus census = verdict_census(code, options.max_enum_bits);

  Json j;
  j["modes"] = code.modes();
  j["n"] = code.n();
  j["k"] = code.k();
  j["stabilizer_dimension"] = code.stabilizer_dimension();
  j["basis"] = rows_json(code.stabilizer().basis());
  j["signs"] = code.signs();
  j["parity_class"] = to_string(code.subspace().parity_class);
  j["parity_violating"] = code.parity_violating();
  j["clifford_distance"] = optional_size(distance.result.distance);
  j["logical_minweight_witness"] = optional_vector(distance.result.witness);
  j["even_clifford_distance"] = optional_size(distance.result.even_distance);
  j["even_logical_witness"] = optional_vector(distance.result.even_witness);
  j["distance_method"] = distance.method;
  if (distance.method == "weight_search") {
    j["searched_up_to_weight"] = distance.searched_up_to;
    if (!distance.result.distance) j["distance_lower_bound"] = distance.searched_up_to + 1;
  }
  if (!distance.result.distance && distance.method == "enumeration") j["clifford_distance"] = "no-logical";
  j["verdict_census"] = {{"Stabilizer", census.stabilizer},
                         {"Detectable", census.detectable},
                         {"Logical", census.logical},
                         {"exhaustive", census.exhaustive}};
  return j;
}

Json filtration_report(const FiltrationReport& report) {
  Json j;
  j["label"] = report.label;
  j["dims"] = report.dims;
  j["saturation_level"] = optional_size(report.saturation_level);
  j["ambient_dim"] = report.ambient_dim;
  return j;
}

}  // namespace anyoncodec
