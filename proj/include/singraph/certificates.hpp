#ifndef SINGRAPH_CERTIFICATES_HPP
#define SINGRAPH_CERTIFICATES_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "json.hpp"
#include "singraph/errors.hpp"
#include "singraph/graph.hpp"
#include "singraph/linalg.hpp"

namespace sg {

// The chosen kernel vector has entries of one sign only, so X or Y would be
// empty. Happens for kernels spanned by isolated vertices.
class OneSignedKernel : public InconsistencyError {
 public:
  using InconsistencyError::InconsistencyError;
};

// Disjoint nonempty vertex sets X, Y with positive integer weights f such
// that at every vertex v the f-weight of neighbours in X equals the
// f-weight of neighbours in Y. Equivalently sum_X f(x) A_x = sum_Y f(y) A_y,
// which makes the adjacency matrix singular.
struct BalanceCertificate {
  std::vector<Vertex> x;
  std::vector<Vertex> y;
  std::map<Vertex, Integer> f;

  // f restricted to X minus f restricted to Y, a kernel vector when valid.
  IntVector signed_vector(std::size_t n) const;
};

// {"X": [...], "Y": [...], "f": {"vertex": weight, ...}}
nlohmann::json to_json(const BalanceCertificate& c);
BalanceCertificate certificate_from_json(const nlohmann::json& j);

// From the first kernel basis vector: X = positive support, Y = negative.
// Returns nullopt when the graph is non-singular; throws OneSignedKernel.
std::optional<BalanceCertificate> extract_balance_certificate(const Graph& g);

// Throws InputError for a malformed certificate (overlap, empty side,
// vertex out of range, missing or non-positive weight, weight outside X u Y).
bool verify_balance_certificate(const Graph& g, const BalanceCertificate& c);

// Lexicographically first pair u < w of non-adjacent vertices with equal
// neighbourhoods; u - w is then a kernel vector.
std::optional<std::pair<Vertex, Vertex>> duplicate_neighborhood_certificate(const Graph& g);

// min(|X|, |Y|). Throws CertificateRejected unless the certificate verifies.
std::size_t certificate_nullity_bound(const Graph& g, const BalanceCertificate& c);

}  // namespace sg

#endif  // SINGRAPH_CERTIFICATES_HPP
