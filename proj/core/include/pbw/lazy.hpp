#ifndef PBW_LAZY_HPP
#define PBW_LAZY_HPP

#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "pbw/periodic.hpp"

namespace pbw {

/// Caps for product-graph walks over pure partner oracles.  For pairs of
/// validated descriptors divergence is proved exactly (state repetition
/// with positive drift), so these only bound walks involving oracles that
/// carry no periodic structure; a capped walk reports a singleton.
struct WalkLimits {
  std::int64_t max_steps = 200000;
  std::int64_t max_index = 1'000'000'000;
};

/// A Brauer graph on N given by a partner oracle.  Oracles must answer
/// symmetrically on every probed pair.  `profile` carries the analytic
/// parameter profile when the construction knows it.
class LazyDiagram {
 public:
  LazyDiagram() = default;
  LazyDiagram(std::function<std::optional<PVertex>(PVertex)> fn,
              std::string provenance)
      : fn_(std::move(fn)), provenance_(std::move(provenance)) {}

  static LazyDiagram from_descriptor(PeriodicDescriptor const& d);

  std::optional<PVertex> partner(PVertex v) const { return fn_(v); }

  std::string const& provenance() const { return provenance_; }

  bool has_profile() const { return profile_.has_value(); }
  ParamProfile const& profile() const { return *profile_; }
  LazyDiagram& with_profile(ParamProfile p) {
    profile_ = p;
    return *this;
  }

  // Present when this lazy view wraps a validated descriptor.
  std::shared_ptr<PeriodicDescriptor const> descriptor() const {
    return desc_;
  }

 private:
  std::function<std::optional<PVertex>(PVertex)> fn_;
  std::string provenance_;
  std::optional<ParamProfile> profile_;
  std::shared_ptr<PeriodicDescriptor const> desc_;
};

LazyDiagram star_lazy(LazyDiagram const& a);

/// Product of two Brauer graphs on N, answered per partner query by walking
/// the product graph.  When both factors wrap descriptors, walks that leave
/// for infinity are detected exactly; otherwise the limits apply.
LazyDiagram compose_lazy(LazyDiagram const& a, LazyDiagram const& b,
                         WalkLimits limits = {});

inline LazyDiagram compose_lazy(PeriodicDescriptor const& a,
                                PeriodicDescriptor const& b,
                                WalkLimits limits = {}) {
  return compose_lazy(LazyDiagram::from_descriptor(a),
                      LazyDiagram::from_descriptor(b), limits);
}

LazyDiagram compose_lazy(LazyDiagram const& a, LazyDiagram const& b,
                         LazyDiagram const& c);

/// Default scan bound for detecting the composition of two descriptors.
std::int64_t default_scan_bound(PeriodicDescriptor const& a,
                                PeriodicDescriptor const& b);

/// Search for an eventually periodic presentation agreeing with ld on all
/// indices < scan_bound.  Returns nothing rather than ever guessing wrong:
/// a returned descriptor is validated and window-checked against ld.
std::optional<PeriodicDescriptor> detect_periodicity(
    LazyDiagram const& ld, std::int64_t scan_bound,
    std::int64_t max_period = 24);

/// Window check that a lazy diagram is an idempotent (a^2 = a on [0, n)).
bool is_idempotent_window(LazyDiagram const& a, std::int64_t n,
                          WalkLimits limits = {});

}  // namespace pbw

#endif  // PBW_LAZY_HPP
