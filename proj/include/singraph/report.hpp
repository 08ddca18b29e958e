#ifndef SINGRAPH_REPORT_HPP
#define SINGRAPH_REPORT_HPP

// Analyses behind the `sg` command line tool. Each returns a JSON report
// whose keys are sorted and which contains no timing data, so the same
// input always serializes to the same bytes. Warnings and observe-mode
// findings are also collected in `Diagnostics` for stderr.
//
// Whenever two derivation routes for the nullity both run they are
// compared; a disagreement throws InconsistencyError.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "singraph/cayley.hpp"
#include "singraph/certificates.hpp"
#include "singraph/graph.hpp"
#include "singraph/group.hpp"
#include "singraph/transitive.hpp"

namespace sg {

struct Diagnostics {
  std::vector<std::string> warnings;
  std::vector<std::string> findings;
};

// Largest n for which circulant analyses also run the rank route.
inline constexpr std::size_t kRankCrossCheckLimit = 64;
// Default sweep guardrail, overridable through SG_MAX_N.
inline constexpr std::size_t kDefaultSweepLimit = 20;

nlohmann::json analyze_nullity(const Graph& g, Diagnostics& diag);
nlohmann::json analyze_circulant(const CirculantSpec& spec, bool with_spectrum, Diagnostics& diag);
nlohmann::json analyze_cayley(const FiniteGroup& g, const GroupSubset& h, const std::optional<CharacterTable>& table,
                              Diagnostics& diag);
// `moment_depth` = 0 uses the multiplicity of each character in psi.
nlohmann::json analyze_tau(const Graph& g, const GroupAction& action, const CharacterTable& table,
                           std::size_t moment_depth, Diagnostics& diag);
// Without a certificate one is extracted; with one it is re-verified.
// The report's "verified" field is false when verification fails.
nlohmann::json analyze_certify(const Graph& g, const std::optional<BalanceCertificate>& cert, Diagnostics& diag);

struct SweepOptions {
  std::size_t from = 2;
  std::size_t to = 2;
  bool primes_only = false;
  bool force = false;
  std::optional<std::size_t> max_n;  // guardrail; default kDefaultSweepLimit
};

struct SweepResult {
  nlohmann::json summary;
  std::string csv;
};

// Enumerates every valid circulant exponent set for each n in range,
// comparing the cyclotomic and rank nullities and asserting that connected
// circulants of prime order are non-singular.
SweepResult sweep_circulants(const SweepOptions& opts, Diagnostics& diag);

bool is_prime(std::size_t n);

}  // namespace sg

#endif  // SINGRAPH_REPORT_HPP
