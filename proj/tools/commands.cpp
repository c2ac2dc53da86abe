#include "commands.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "anyoncodec/clifford.hpp"
#include "anyoncodec/code_io.hpp"
#include "anyoncodec/errors.hpp"
#include "anyoncodec/qgeometry.hpp"
#include "anyoncodec/qmetric.hpp"
#include "anyoncodec/report.hpp"

namespace anyoncodec::cli {

namespace {

void emit_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

void write_output(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty()) {
    out << content;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot write '" + path + "'");
  file << content;
}

std::vector<int> parse_signs(const std::string& text, std::size_t expected) {
  if (text.empty()) return {};
  std::vector<int> signs;
  for (char c : text) {
    if (c == '+') {
      signs.push_back(+1);
    } else if (c == '-') {
      signs.push_back(-1);
    } else if (c != ' ' && c != ',') {
      throw InputError(std::string("sign table may only contain '+' and '-', got '") + c + "'");
    }
  }
  if (signs.size() != expected) {
    throw InputError("sign table has " + std::to_string(signs.size()) + " entries, expected " +
                     std::to_string(expected));
  }
  return signs;
}

BitVector random_vector(std::size_t length, std::mt19937_64& rng) {
  BitVector v(length);
  for (auto& w : v.words()) w = rng();
  if (length % 64 != 0 && !v.words().empty()) v.words().back() &= (std::uint64_t{1} << (length % 64)) - 1;
  return v;
}

// All vectors of weight <= 2 followed by `samples` random ones, or every
// vector when the space is small enough.
std::vector<BitVector> error_samples(std::size_t length, std::size_t exhaustive_limit, std::size_t samples,
                                     std::uint64_t seed) {
  std::vector<BitVector> ys;
  if (length <= exhaustive_limit) {
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << length); ++v) ys.push_back(BitVector::from_integer(length, v));
    return ys;
  }
  ys.emplace_back(length);
  for (std::size_t i = 0; i < length; ++i) {
    ys.push_back(BitVector::unit(length, i));
    for (std::size_t j = i + 1; j < length; ++j) {
      BitVector y = BitVector::unit(length, i);
      y.set(j);
      ys.push_back(std::move(y));
    }
  }
  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < samples; ++s) ys.push_back(random_vector(length, rng));
  return ys;
}

DetectVerdict exact_sandwich_verdict(const OperatorSum& projector, const BitVector& y) {
  const OperatorSum sandwich = projector * OperatorSum(gamma_of(y)) * projector;
  if (sandwich.is_zero()) return DetectVerdict::Detectable;
  if (sandwich == projector || sandwich == projector.scaled(DyadicComplex(-1))) return DetectVerdict::Stabilizer;
  return DetectVerdict::Logical;
}

DetectVerdict dense_sandwich_verdict(const DenseOperator<double>& projector, const PauliTerm& error) {
  // P Gamma_y with Gamma_y a signed permutation: column c of the product is
  // phase(c) times column c ^ x of P.
  const DenseOperator<double> gamma = realize<double>(error, 30);
  const DenseOperator<double> sandwich = projector * gamma * projector;
  if (sandwich.cwiseAbs().maxCoeff() <= kDenseTolerance) return DetectVerdict::Detectable;
  const std::complex<double> lambda = sandwich.trace() / projector.trace();
  if (is_close(sandwich, lambda * projector) && std::abs(std::abs(lambda) - 1.0) <= kDenseTolerance) {
    return DetectVerdict::Stabilizer;
  }
  return DetectVerdict::Logical;
}

std::string describe_verdict_mismatch(const BitVector& y, DetectVerdict expected, DetectVerdict got) {
  return "y=" + y.to_string() + ": combinatorial " + to_string(expected) + ", operator " + to_string(got);
}

}  // namespace

std::vector<CheckResult> verify_code(const BinaryCode& code, const VerifyOptions& options,
                                     const GlobalOptions& global) {
  std::vector<CheckResult> checks;
  const std::size_t modes = code.length();
  if (modes % 2 != 0) throw InputError("verify needs an even ambient length, got " + std::to_string(modes));
  if (options.level == VerifyLevel::Dense && (modes > 14 || modes / 2 > global.max_dense_qubits)) {
    throw CapacityError("dense verification needs 2n <= 14 and n <= --max-dense-qubits");
  }

  {
    CheckResult c{"stabilizer generators pairwise commute", true, ""};
    if (auto w = q_witness(code)) {
      c.passed = false;
      c.detail = "q(" + w->first.to_string() + ", " + w->second.to_string() + ") = 1";
      checks.push_back(c);
      return checks;
    }
    const auto& b = code.basis();
    for (std::size_t i = 0; i < b.size() && c.passed; ++i) {
      for (std::size_t j = i + 1; j < b.size(); ++j) {
        if (!gamma_of(b[i]).commutes_with(gamma_of(b[j]))) {
          c.passed = false;
          c.detail = "Pauli products of " + b[i].to_string() + " and " + b[j].to_string() + " anticommute";
          break;
        }
      }
    }
    checks.push_back(c);
    if (!c.passed) return checks;
  }

  {
    CheckResult c{"commutation sign equals q-form", true, ""};
    std::mt19937_64 rng(options.seed);
    for (std::size_t s = 0; s < options.samples && c.passed; ++s) {
      const BitVector x = random_vector(modes, rng);
      const BitVector y = random_vector(modes, rng);
      const bool anticommute = !gamma_of(x).commutes_with(gamma_of(y));
      if (anticommute != commutation_sign(x, y)) {
        c.passed = false;
        c.detail = "x=" + x.to_string() + " y=" + y.to_string();
      }
    }
    checks.push_back(c);
  }

  const StabilizerCode stab(classify(code), parse_signs(options.signs, code.dimension()));
  const OperatorSum projector = stab.projector();

  {
    CheckResult c{"stabilizer group has real signs (group-sum identity)", true, ""};
    try {
      if (stab.projector_by_group_sum() != projector) {
        c.passed = false;
        c.detail = "product expansion differs from the group sum";
      }
    } catch (const std::logic_error& e) {
      c.passed = false;
      c.detail = e.what();
    }
    checks.push_back(c);
  }
  checks.push_back({"projector idempotent (exact)", projector * projector == projector, ""});
  checks.push_back({"projector Hermitian (exact)", projector.adjoint() == projector, ""});
  {
    const DyadicComplex expected(1, 0, static_cast<unsigned>(stab.n() - stab.k()));
    const DyadicComplex got = projector.normalized_trace();
    checks.push_back({"trace P = 2^k (exact)", got == expected,
                      "tr(P)/2^n = " + got.to_string() + ", k = " + std::to_string(stab.k())});
  }

  const VerdictCensus census = verdict_census(stab, global.max_enum_bits);
  {
    CheckResult c{"verdict census partitions F_2^{2n}", true, ""};
    const std::uint64_t stab_count = std::uint64_t{1} << stab.stabilizer_dimension();
    const std::uint64_t comp_count = std::uint64_t{1} << stab.complement().dimension();
    c.passed = census.stabilizer == stab_count && census.logical == comp_count - stab_count;
    if (modes < 64) c.passed = c.passed && census.stabilizer + census.detectable + census.logical ==
                                               (std::uint64_t{1} << modes);
    c.detail = "Stabilizer=" + std::to_string(census.stabilizer) + " Detectable=" +
               std::to_string(census.detectable) + " Logical=" + std::to_string(census.logical) +
               (census.exhaustive ? " (exhaustive)" : " (by dimension count)");
    checks.push_back(c);
  }

  const auto samples = error_samples(modes, 10, options.samples, options.seed + 1);
  {
    CheckResult c{"verdicts match exact P Gamma_y P", true, std::to_string(samples.size()) + " error vectors"};
    for (const auto& y : samples) {
      const DetectVerdict expected = stab.detect(y);
      const DetectVerdict got = exact_sandwich_verdict(projector, y);
      if (expected != got) {
        c.passed = false;
        c.detail = describe_verdict_mismatch(y, expected, got);
        break;
      }
    }
    checks.push_back(c);
  }

  {
    std::vector<int> flipped = stab.signs();
    for (auto& s : flipped) s = -s;
    const StabilizerCode other(stab.subspace(), flipped);
    const VerdictCensus other_census = verdict_census(other, global.max_enum_bits);
    const bool same = other.k() == stab.k() && other.complement() == stab.complement() &&
                      other_census.stabilizer == census.stabilizer && other_census.logical == census.logical &&
                      other_census.detectable == census.detectable;
    checks.push_back({"k, complement and census independent of signs", same, ""});
  }

  if (options.level == VerifyLevel::Dense) {
    const DenseOperator<double> p = realize<double>(projector, global.max_dense_qubits);
    checks.push_back({"dense P^2 = P", is_close(p * p, p), "tolerance 1e-9"});
    checks.push_back({"dense P^dagger = P", is_close(p.adjoint(), p), "tolerance 1e-9"});
    const double expected_trace = std::ldexp(1.0, static_cast<int>(stab.k()));
    checks.push_back({"dense trace P = 2^k", std::abs(p.trace() - std::complex<double>(expected_trace)) <= kDenseTolerance,
                      "trace = " + std::to_string(p.trace().real())});

    CheckResult comm{"dense generators commute", true, ""};
    const auto gens = stab.stabilizer_generators();
    for (std::size_t i = 0; i < gens.size() && comm.passed; ++i) {
      const auto a = realize<double>(gens[i], global.max_dense_qubits);
      for (std::size_t j = i + 1; j < gens.size(); ++j) {
        const auto b = realize<double>(gens[j], global.max_dense_qubits);
        if (!is_close(a * b, b * a)) {
          comm.passed = false;
          comm.detail = "generators " + std::to_string(i) + " and " + std::to_string(j);
          break;
        }
      }
    }
    checks.push_back(comm);

    CheckResult c{"dense P Gamma_y P matches verdicts", true, std::to_string(samples.size()) + " error vectors"};
    for (const auto& y : samples) {
      const DetectVerdict expected = stab.detect(y);
      const DetectVerdict got = dense_sandwich_verdict(p, gamma_of(y));
      if (expected != got) {
        c.passed = false;
        c.detail = describe_verdict_mismatch(y, expected, got);
        break;
      }
    }
    checks.push_back(c);
  }
  return checks;
}

int cmd_classify(const GlobalOptions& g, const std::string& path, std::ostream& out) {
  const CodeFile file = read_code_file(path);
  const Json report = classify_report(file.code);
  const bool isotropic = report["isotropic"].get<bool>();
  if (g.format == Format::Json) {
    emit_json(out, report);
  } else if (!isotropic) {
    out << "not q-isotropic: q(" << report["witnesses"][0].get<std::string>() << ", "
        << report["witnesses"][1].get<std::string>() << ") = 1\n";
  } else {
    out << report["parity_class"].get<std::string>() << ", dim " << report["dimension"].get<std::size_t>();
    if (report["parity_class"] == "MixedParity") {
      out << ", even_dim " << report["even_dimension"].get<std::size_t>() << ", u="
          << report["odd_coset_rep"].get<std::string>();
    }
    out << '\n';
  }
  return isotropic ? kOk : kInputError;
}

int cmd_convert(const GlobalOptions& g, const std::string& direction, const std::string& path,
                std::optional<std::size_t> coordinate, const std::string& output_path, std::ostream& out) {
  const CodeFile file = read_code_file(path);
  BinaryCode result;
  if (direction == "extend") {
    if (coordinate) throw InputError("--coordinate only applies to puncture");
    result = extend(classify(file.code));
  } else if (direction == "puncture") {
    result = puncture(file.code, coordinate).code;
  } else {
    throw InputError("direction must be 'extend' or 'puncture'");
  }
  const std::string text = to_code_file_string(result);
  if (g.format == Format::Json && output_path.empty()) {
    Json j;
    j["direction"] = direction;
    j["length"] = result.length();
    j["dimension"] = result.dimension();
    j["rows"] = Json::array();
    for (const auto& r : result.basis()) j["rows"].push_back(r.to_string());
    emit_json(out, j);
  } else {
    write_output(output_path, text, out);
  }
  return kOk;
}

int cmd_hamming(const GlobalOptions& g, std::size_t s, const std::string& output_path, std::ostream& out,
                std::ostream& err) {
  if (s < 2) throw InputError("s must be at least 2");
  if (s == 2) err << "warning: s = 2 lies below the usual range s >= 3\n";
  const QSubspace subspace = build_hamming_subspace(s);
  const StabilizerCode code(subspace);
  const std::size_t n = code.n();

  Json j;
  j["family"] = "clifford-hamming";
  j["s"] = s;
  j["parameters"] = "[[" + std::to_string(n) + "," + std::to_string(code.k()) + "]]_Cl";
  const Json report = code_report(code, {g.max_enum_bits});
  for (auto& [key, value] : report.items()) j[key] = value;
  const DualDistance certificate = dual_distance_by_columns(hamming_dual(s));
  j["certificate"] = {{"simplex_dual_distance_by_columns", certificate.to_string()},
                      {"implied_distance_lower_bound", certificate.value.value_or(0)}};

  if (!output_path.empty()) {
    std::ostringstream file;
    write_code_file(file, subspace.length(), subspace.code.generators(),
                    {"ambient=" + std::to_string(subspace.length()), "clifford hamming subspace, s=" + std::to_string(s)});
    write_output(output_path, file.str(), out);
  }

  if (g.format == Format::Json) {
    emit_json(out, j);
    return kOk;
  }
  out << "Clifford Hamming s=" << s << ": " << j["parameters"].get<std::string>() << '\n';
  out << "  stabilizer dimension " << code.stabilizer_dimension() << ", " << to_string(subspace.parity_class)
      << (code.parity_violating() ? " (contains parity-flipping stabilizers)" : "") << '\n';
  out << "  Clifford distance " << j["clifford_distance"].dump() << " (" << j["distance_method"].get<std::string>()
      << "), witness " << j["logical_minweight_witness"].dump() << '\n';
  out << "  even-only distance " << j["even_clifford_distance"].dump() << '\n';
  out << "  simplex dual distance by columns " << certificate.to_string() << " => distance >= "
      << certificate.value.value_or(0) << '\n';
  const auto& census = j["verdict_census"];
  out << "  census: Stabilizer=" << census["Stabilizer"] << " Detectable=" << census["Detectable"]
      << " Logical=" << census["Logical"] << '\n';
  return kOk;
}

int cmd_verify(const GlobalOptions& g, const std::string& path, const VerifyOptions& options, std::ostream& out) {
  const CodeFile file = read_code_file(path);
  const auto checks = verify_code(file.code, options, g);
  std::size_t failed = 0;
  for (const auto& c : checks) failed += c.passed ? 0 : 1;

  if (g.format == Format::Json) {
    Json j;
    j["level"] = options.level == VerifyLevel::Dense ? "dense" : "combinatorial";
    j["checks"] = Json::array();
    for (const auto& c : checks) j["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    j["passed"] = failed == 0;
    emit_json(out, j);
  } else {
    for (const auto& c : checks) {
      out << (c.passed ? "[PASS] " : "[FAIL] ") << c.name;
      if (!c.detail.empty()) out << " (" << c.detail << ")";
      out << '\n';
    }
    if (failed == 0) {
      out << "all " << checks.size() << " checks passed\n";
    } else {
      out << failed << " of " << checks.size() << " checks failed\n";
    }
  }
  return failed == 0 ? kOk : kInvariantFailure;
}

int cmd_metric(const GlobalOptions& g, const std::string& label, std::size_t size, std::size_t t_max,
               const std::string& block, std::ostream& out) {
  GeneratingSet gen;
  if (label == "quantum-hamming") {
    gen = gen_quantum_hamming(size);
  } else if (label == "full-clifford") {
    gen = gen_full_clifford(size);
  } else if (label == "spinorial") {
    gen = gen_spinorial(size);
  } else if (label == "semispinorial") {
    if (block != "plus" && block != "minus") throw InputError("--block must be 'plus' or 'minus'");
    gen = gen_semispinorial(size, block == "plus" ? Chirality::Plus : Chirality::Minus);
  } else {
    throw InputError("unknown metric '" + label + "' (quantum-hamming, full-clifford, spinorial, semispinorial)");
  }
  const FiltrationReport report = filtration(gen, t_max);
  if (g.format == Format::Json) {
    emit_json(out, filtration_report(report));
    return kOk;
  }
  out << report.label << " (size " << size << ", ambient " << report.ambient_dim << "): dims";
  for (auto d : report.dims) out << ' ' << d;
  if (report.saturation_level) out << ", saturates at t=" << *report.saturation_level;
  out << '\n';
  return kOk;
}

int cmd_search(const GlobalOptions& g, std::size_t n, std::size_t d, std::uint64_t budget, std::uint64_t seed,
               const std::string& output_path, std::ostream& out) {
  const auto found = search_self_orthogonal(n, d, budget, seed);
  if (g.format == Format::Json) {
    Json j;
    j["n"] = n;
    j["target_dual_distance"] = d;
    j["budget"] = budget;
    j["seed"] = seed;
    j["found"] = found.has_value();
    if (found) {
      j["dimension"] = found->dimension();
      j["parity_class"] = to_string(found->parity_class);
      j["extended_dual_distance"] = dual_distance_by_columns(extend(*found)).to_string();
      j["rows"] = Json::array();
      for (const auto& r : found->code.basis()) j["rows"].push_back(r.to_string());
    }
    emit_json(out, j);
    if (found && !output_path.empty()) write_output(output_path, to_code_file_string(found->code), out);
    return kOk;
  }
  if (!found) {
    out << "not found\n";
    return kOk;
  }
  const std::string text = to_code_file_string(
      found->code, {"search n=" + std::to_string(n) + " d=" + std::to_string(d) + " budget=" + std::to_string(budget) +
                    " seed=" + std::to_string(seed)});
  write_output(output_path, text, out);
  return kOk;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Clifford stabilizer codes for Majorana modes from binary codes", "anyoncodec"};
  app.require_subcommand(1);

  GlobalOptions g;
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--max-enum-bits", g.max_enum_bits, "Largest dimension enumerated exhaustively")
      ->capture_default_str();
  app.add_option("--max-dense-qubits", g.max_dense_qubits, "Largest qubit count realized as dense matrices")
      ->capture_default_str();

  std::uint64_t seed = 1;
  if (const char* env = std::getenv("ANYONCODEC_SEED")) {
    try {
      seed = std::stoull(env);
    } catch (const std::exception&) {
      err << "error: ANYONCODEC_SEED must be an unsigned integer\n";
      return kInputError;
    }
  }

  std::string path;
  std::string output_path;

  auto* classify_cmd = app.add_subcommand("classify", "Classify a q-isotropic subspace");
  classify_cmd->add_option("file", path, "Code file")->required();

  std::string direction;
  std::optional<std::size_t> coordinate;
  auto* convert_cmd = app.add_subcommand("convert", "Extend a q-isotropic subspace or puncture an even code");
  convert_cmd->add_option("direction", direction, "extend | puncture")->required()->check(
      CLI::IsMember({"extend", "puncture"}));
  convert_cmd->add_option("file", path, "Code file")->required();
  convert_cmd->add_option("--coordinate", coordinate, "0-based coordinate to delete (default: last)");
  convert_cmd->add_option("-o,--output", output_path, "Output code file");

  std::size_t s = 3;
  auto* hamming_cmd = app.add_subcommand("hamming", "Build and report a Clifford Hamming code");
  hamming_cmd->add_option("s", s, "Simplex order (n = 2^s - 1)")->required();
  hamming_cmd->add_option("-o,--output", output_path, "Write the subspace code file");

  VerifyOptions verify;
  std::string level = "combinatorial";
  auto* verify_cmd = app.add_subcommand("verify", "Run the invariant checklist on a stabilizer subspace");
  verify_cmd->add_option("file", path, "Code file (even ambient length)")->required();
  verify_cmd->add_option("--level", level, "combinatorial | dense")->check(CLI::IsMember({"combinatorial", "dense"}));
  verify_cmd->add_option("--signs", verify.signs, "Eigenvalue sign per RREF basis row, e.g. +-++");
  verify_cmd->add_option("--samples", verify.samples, "Random samples for sampled checks")->capture_default_str();
  verify_cmd->add_option("--seed", seed, "Sampling seed");

  std::string label;
  std::size_t size = 0;
  std::size_t t_max = 0;
  std::string block = "plus";
  auto* metric_cmd = app.add_subcommand("metric", "Dimensions of a graph-metric filtration");
  metric_cmd->add_option("label", label, "quantum-hamming | full-clifford | spinorial | semispinorial")->required();
  metric_cmd->add_option("size", size, "Qubits (quantum-hamming) or modes")->required();
  metric_cmd->add_option("t_max", t_max, "Highest level")->required();
  metric_cmd->add_option("--block", block, "Chirality block for semispinorial: plus | minus");

  std::size_t search_n = 0;
  std::size_t search_d = 0;
  std::uint64_t budget = 0;
  auto* search_cmd = app.add_subcommand("search", "Random search for a q-isotropic subspace with dual distance d");
  search_cmd->add_option("n", search_n, "Ambient length of the subspace")->required();
  search_cmd->add_option("d", search_d, "Target dual distance of the extended code")->required();
  search_cmd->add_option("budget", budget, "Candidate draws")->required();
  search_cmd->add_option("--seed", seed, "Random seed (default: $ANYONCODEC_SEED or 1)");
  search_cmd->add_option("-o,--output", output_path, "Write the code file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }
  g.format = format == "json" ? Format::Json : Format::Text;
  verify.level = level == "dense" ? VerifyLevel::Dense : VerifyLevel::Combinatorial;
  verify.seed = seed;

  try {
    if (*classify_cmd) return cmd_classify(g, path, out);
    if (*convert_cmd) return cmd_convert(g, direction, path, coordinate, output_path, out);
    if (*hamming_cmd) return cmd_hamming(g, s, output_path, out, err);
    if (*verify_cmd) return cmd_verify(g, path, verify, out);
    if (*metric_cmd) return cmd_metric(g, label, size, t_max, block, out);
    if (*search_cmd) return cmd_search(g, search_n, search_d, budget, seed, output_path, out);
  } catch (const CapacityError& e) {
    err << "capacity error: " << e.what() << '\n';
    return kCapacityError;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "invariant failure: " << e.what() << '\n';
    return kInvariantFailure;
  }
  return kInputError;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.push_back("anyoncodec");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace anyoncodec::cli
