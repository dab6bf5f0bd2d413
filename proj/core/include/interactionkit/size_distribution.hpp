#pragma once

#include <vector>

namespace interactionkit {

/// Probability distribution over coalition sizes 0..n. The built-in
/// distributions put all mass on {2..n-2}; sizes 0, 1, n-1, n are always
/// enumerated exhaustively before sampling starts.
struct SizeDistribution {
  int n = 0;
  std::vector<double> p;  // size n+1

  double operator()(int s) const { return p[static_cast<std::size_t>(s)]; }
  bool symmetric(double tol = 1e-12) const;
};

/// Uniform mass 1/(n-3) on each size in {2..n-2}. Requires n >= 4.
SizeDistribution size_distribution_uniform(int n);

/// Tailored distribution for pairwise estimation: mass proportional to
/// 1/(s(s-1)) on the low half and 1/((n-s)(n-s-1)) on the high half of
/// {2..n-2}, normalized by beta_n. Requires n >= 4.
SizeDistribution size_distribution_pairs(int n);

}  // namespace interactionkit
