#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "hnlie/curvature.hpp"
#include "hnlie/regions.hpp"
#include "hnlie/witnesses.hpp"

namespace hnlie {

/// One item of the curvature theorem: "property holds iff the algebra lies
/// in one of `regions`". Items phrased "every ..." set `universal` and
/// claim `universal_claim` for every family.
struct TheoremItem {
  int number = 0;
  std::string property;
  std::vector<std::string> quantities;  // e.g. {"k12", "k34"}
  std::function<bool(const CurvatureReport&)> holds;
  std::vector<Region> regions;
  bool universal = false;
  bool universal_claim = true;
};

/// Items 1..20 in reference order.
const std::vector<TheoremItem>& theorem5_items();

/// Values by name: tau, tau*1..3, tau**1..3, k12..k34.
Scalar quantity(const CurvatureReport& report, const std::string& name);

struct Verdict {
  int item = 0;
  std::string family;
  Bindings witness;
  std::string source;  // "witness", "region", "domain"
  std::string region;  // region the claim came from, or "-"
  bool claim = false;
  bool computed = false;
  std::map<std::string, Scalar> values;
  bool agree() const { return claim == computed; }
};

/// Evaluates every item at one in-domain point.
std::vector<Verdict> theorem5_checks(const std::string& family, const Bindings& bindings);

struct Theorem5Report {
  int samples = 0;
  std::uint64_t seed = 0;
  std::vector<Verdict> verdicts;
  std::vector<std::string> notes;
  bool all_agree() const;
  bool items_agree(const std::vector<int>& items) const;
};

/// Each item is checked at every curated witness, at `samples` draws from
/// each of its regions and at `samples` draws from each family domain.
Theorem5Report theorem5_report(const WitnessSet& witnesses, int samples, std::uint64_t seed);

}  // namespace hnlie
