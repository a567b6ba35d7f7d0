#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hnlie/algebra.hpp"

namespace hnlie {

using Rng = std::mt19937_64;

/// A set of parameter bindings of one family, given as an exact membership
/// test plus an optional rational sampler. Regions without a sampler are
/// checked only at curated witnesses (e.g. the point q = sqrt(3)/6).
struct Region {
  std::string family;
  std::string description;
  std::function<bool(const Bindings&)> contains;
  std::function<Bindings(Rng&)> draw;  // may return points outside; callers reject
  std::string note;                    // caveats, e.g. excluded boundary values
};

/// Uniform-ish rational in [lo, hi] with denominator at most `max_den`.
Scalar random_rational(Rng& rng, const Rational& lo, const Rational& hi, long max_den = 12);

/// Draws until `contains` accepts and the family domain holds; nullopt after
/// `max_tries` rejections or when the region has no sampler.
std::optional<Bindings> sample(const Region& region, Rng& rng, int max_tries = 2000);

/// Entire parameter domain of a builtin family.
Region domain_region(const std::string& family);

/// True when the bindings satisfy the family's own domain constraint.
bool in_domain(const std::string& family, const Bindings& bindings);

/// Canonical "k=v, k=v" rendering.
std::string describe(const Bindings& bindings);

// Helpers for writing exact predicates (cross-extension safe).
inline bool lt(const Scalar& x, const Scalar& y) { return compare(x, y) < 0; }
inline bool gt(const Scalar& x, const Scalar& y) { return compare(x, y) > 0; }
inline bool le(const Scalar& x, const Scalar& y) { return compare(x, y) <= 0; }
inline bool ge(const Scalar& x, const Scalar& y) { return compare(x, y) >= 0; }
inline bool eq(const Scalar& x, const Scalar& y) { return compare(x, y) == 0; }

}  // namespace hnlie
