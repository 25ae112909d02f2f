#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "maxdla/core.hpp"
#include "maxdla/oracle.hpp"

namespace maxdla::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kInputError = 2,
  kSizeRefusal = 3,
  kVerificationFailure = 4,
};

enum class Method { kAuto, kOracle, kTree, kTournament, kTransitiveDag, kDelta2 };

Method parse_method(const std::string& name);
std::string to_string(Method m);

struct SolveOptions {
  Method method = Method::kAuto;
  int limit = kDefaultArrangementLimit;
  int max_degree = 4;
};

struct CertificateOutput {
  std::string problem = "maxdla";
  Method method = Method::kAuto;
  Value value = 0;
  Arrangement arrangement;
  Signature signature;
  bool verified = false;
};

// Dispatches to the requested solver (auto picks by digraph class) and
// re-derives value and signature from the instance before returning.
CertificateOutput solve_instance(const Digraph& d, const SolveOptions& options);

// Full command-line entry point; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace maxdla::cli
