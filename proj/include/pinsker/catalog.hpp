#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pinsker/errors.hpp"

namespace pinsker {

/// An f-divergence generator: convex f on (0,inf) with f(1) = 0, together
/// with the limits needed to evaluate the divergence on zero-mass cells.
struct DivergenceSpec {
  std::string name;
  double (*f)(double t);
  double f_at_zero;       // lim t->0+ f(t), may be +inf
  double f_slope_at_inf;  // lim t->inf f(t)/t, may be +inf
  double (*second_derivative)(double t);  // NaN where not classically defined
  bool symmetric_gamma;  // weight density symmetric about 1/2 (atoms included)
  bool convex_gamma;     // weight density convex on (0,1)
};

/// A point mass in the weight function.
struct WeightAtom {
  double location;  // in (0,1)
  double mass;      // >= 0
};

/// Weight in the integral representation: an absolutely continuous density
/// on (0,1) plus point atoms. The integrability flags record whether the
/// constant and linear moments of the density converge at each endpoint;
/// they decide when a segment integral diverges.
struct WeightFunction {
  double (*density)(double pi);
  std::vector<WeightAtom> atoms;
  bool const_integrable_at0;   // integral of gamma near 0 finite
  bool linear_integrable_at0;  // integral of pi*gamma near 0 finite
  bool const_integrable_at1;   // integral of gamma near 1 finite
  bool linear_integrable_at1;  // integral of (1-pi)*gamma near 1 finite
};

/// Closed-form antiderivatives of the weight density. Integration constants
/// follow a fixed per-entry convention; every consumer takes differences in
/// which the constants cancel.
struct AntiderivativePair {
  double (*Gamma)(double pi);     // d/dpi Gamma = density
  double (*GammaBar)(double pi);  // d/dpi GammaBar = Gamma
};

struct CatalogEntry {
  DivergenceSpec spec;
  WeightFunction weight;
  AntiderivativePair anti;
};

/// Names accepted by catalog_lookup, in canonical order.
std::span<const std::string_view> catalog_names();

/// Returns the calibrated entry for one of the nine known divergences.
/// Throws LookupError (listing the valid names) for anything else.
const CatalogEntry& catalog_lookup(std::string_view name);

/// Evaluates the weight implied by the generator's second derivative,
/// (1/pi^3) f''((1-pi)/pi). Throws AtomError at the location of a point
/// atom, where no classical second derivative exists.
double weight_from_generator(const CatalogEntry& entry, double pi);

/// Returns (Gamma(pi), GammaBar(pi)) for the named entry. Throws DomainError
/// at 0 or 1 when the density is not integrable up to that endpoint.
std::pair<double, double> antiderivatives(std::string_view name, double pi);

}  // namespace pinsker
