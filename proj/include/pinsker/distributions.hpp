#pragma once

#include <cstddef>
#include <vector>

#include "pinsker/catalog.hpp"
#include "pinsker/extended_real.hpp"

namespace pinsker {

/// A probability vector on a finite alphabet. Entries are nonnegative and
/// sum to 1 within 1e-12; no silent renormalization.
class FiniteDistribution {
 public:
  explicit FiniteDistribution(std::vector<double> probs);

  /// Builds a distribution from nonnegative weights, rescaling them to sum
  /// to one. This is the only place renormalization happens.
  static FiniteDistribution normalized(std::vector<double> weights);

  const std::vector<double>& probs() const { return probs_; }
  std::size_t size() const { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }

 private:
  std::vector<double> probs_;
};

/// A pair (P, Q) on a common alphabet.
struct DistributionPair {
  FiniteDistribution p;
  FiniteDistribution q;

  DistributionPair(FiniteDistribution p_in, FiniteDistribution q_in);
  std::size_t size() const { return p.size(); }
};

/// Sum over the alphabet of q * f(p/q) with the usual zero-mass conventions:
/// cells with q=0, p>0 contribute p * f_slope_at_inf (possibly +inf), cells
/// with q>0, p=0 contribute q * f_at_zero, and empty cells contribute 0.
ExtendedReal f_divergence(const DistributionPair& pair, const DivergenceSpec& spec);

/// Sum of |p - q|; in [0, 2].
double variational_divergence(const DistributionPair& pair);

/// Minimal expected 0-1 loss at class prior `prior`:
/// sum over the alphabet of min(prior * p, (1-prior) * q).
double bayes_risk(double prior, const DistributionPair& pair);

/// min(prior, 1-prior) - bayes_risk(prior, pair); the primitive divergence
/// whose weighted integrals produce every other entry in the catalog.
double generalized_variational(double prior, const DistributionPair& pair);

}  // namespace pinsker
