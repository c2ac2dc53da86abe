#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "anyoncodec/binary_code.hpp"
#include "anyoncodec/dense.hpp"
#include "anyoncodec/stab_code.hpp"

namespace anyoncodec::cli {

enum ExitCode : int { kOk = 0, kInvariantFailure = 1, kInputError = 2, kCapacityError = 3 };

enum class Format { Text, Json };

struct GlobalOptions {
  Format format = Format::Text;
  std::size_t max_enum_bits = kDefaultMaxEnumBits;
  std::size_t max_dense_qubits = kDefaultMaxDenseQubits;
};

enum class VerifyLevel { Combinatorial, Dense };

struct VerifyOptions {
  VerifyLevel level = VerifyLevel::Combinatorial;
  std::string signs;  // one '+'/'-' per RREF basis row; empty means all '+'
  std::size_t samples = 256;
  std::uint64_t seed = 1;
};

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;
};

/// Runs the invariant checklist on the subspace in `code`. A non-isotropic
/// input stops after the commutation check.
std::vector<CheckResult> verify_code(const BinaryCode& code, const VerifyOptions& options,
                                     const GlobalOptions& global);

int cmd_classify(const GlobalOptions& g, const std::string& path, std::ostream& out);
int cmd_convert(const GlobalOptions& g, const std::string& direction, const std::string& path,
                std::optional<std::size_t> coordinate, const std::string& output_path, std::ostream& out);
int cmd_hamming(const GlobalOptions& g, std::size_t s, const std::string& output_path, std::ostream& out,
                std::ostream& err);
int cmd_verify(const GlobalOptions& g, const std::string& path, const VerifyOptions& options, std::ostream& out);
int cmd_metric(const GlobalOptions& g, const std::string& label, std::size_t size, std::size_t t_max,
               const std::string& block, std::ostream& out);
int cmd_search(const GlobalOptions& g, std::size_t n, std::size_t d, std::uint64_t budget, std::uint64_t seed,
               const std::string& output_path, std::ostream& out);

/// Parses argv, dispatches, and maps exceptions to exit codes.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace anyoncodec::cli
