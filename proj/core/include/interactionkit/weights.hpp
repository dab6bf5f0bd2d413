#pragma once

#include <string>
#include <vector>

namespace interactionkit {

/// Interaction index families. `sv` is the Shapley value itself and is only
/// valid at order 1, where sii/sti/fsi coincide with it.
enum class IndexKind { sii, sti, fsi, bii, sv };

const char* to_string(IndexKind kind);
IndexKind index_kind_from_string(const std::string& s);

/// Per-size weights lambda_{k,l} of one cardinal interaction index:
///   I_K = sum over S disjoint from K of lambda_{k,|S|} * Delta_K(S).
class WeightProfile {
 public:
  WeightProfile(IndexKind kind, int n, int k);

  IndexKind kind() const { return kind_; }
  int n() const { return n_; }
  int order() const { return k_; }

  /// lambda_{k,l} for l = 0..n-k.
  double lambda(int ell) const { return lambdas_[static_cast<std::size_t>(ell)]; }
  const std::vector<double>& lambdas() const { return lambdas_; }

  /// C(n-k,l) * lambda_{k,l}, the coefficient applied to a stratum average in
  /// the aggregation. For sii this is computed directly as 1/(n-k+1) so the
  /// order-2 pairwise shortcut matches it bit for bit.
  double aggregation_weight(int ell) const { return agg_[static_cast<std::size_t>(ell)]; }

 private:
  IndexKind kind_;
  int n_;
  int k_;
  std::vector<double> lambdas_;
  std::vector<double> agg_;
};

inline WeightProfile cii_weights(IndexKind kind, int n, int k) {
  return WeightProfile(kind, n, k);
}

}  // namespace interactionkit
