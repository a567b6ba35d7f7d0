#include "hnlie/theorem5.hpp"

#include <algorithm>

#include "hnlie/error.hpp"

namespace hnlie {

namespace {

const Scalar& at(const Bindings& b, const char* k) { return b.at(k); }

Region everywhere(const std::string& family) { return domain_region(family); }

Region region(const std::string& family, const std::string& text, std::function<bool(const Bindings&)> contains,
              std::function<Bindings(Rng&)> draw = {}, std::string note = {}) {
  return Region{family, text, std::move(contains), std::move(draw), std::move(note)};
}

Scalar rnd(Rng& rng, long lo, long hi) { return random_rational(rng, Rational(lo), Rational(hi)); }

std::vector<Region> families(std::initializer_list<int> ids) {
  std::vector<Region> out;
  for (int i : ids) out.push_back(everywhere("g4_" + std::to_string(i)));
  return out;
}

bool positive(const CurvatureReport& c, std::initializer_list<const char*> names) {
  return std::all_of(names.begin(), names.end(), [&](const char* n) { return quantity(c, n).sign() > 0; });
}

bool negative(const CurvatureReport& c, std::initializer_list<const char*> names) {
  return std::all_of(names.begin(), names.end(), [&](const char* n) { return quantity(c, n).sign() < 0; });
}

// ---- shared regions --------------------------------------------------------

const Scalar kSqrt2Over2 = Scalar::sqrt(Rational(1, 2));
const Scalar kSqrt2Over4 = Scalar::sqrt(Rational(1, 8));
const Scalar kSqrt3Over6 = Scalar::sqrt(Rational(1, 12));
const Scalar kSqrt15Over6 = Scalar::sqrt(Rational(15, 36));

Region m_positive() {
  return region("g4_2", "m > 0", [](const Bindings& b) { return at(b, "m").sign() > 0; },
                [](Rng& rng) { return Bindings{{"m", rnd(rng, 0, 3)}}; });
}

Region b6_positive() {
  return region("g4_6", "b1 > 0, b2 > 1",
                [](const Bindings& b) { return at(b, "b1").sign() > 0 && gt(at(b, "b2"), Scalar(1)); },
                [](Rng& rng) { return Bindings{{"b1", rnd(rng, 0, 3)}, {"b2", rnd(rng, 1, 4)}}; });
}

Region b6_negative() {
  return region("g4_6", "b1 < 0, 0 < b2 < 1",
                [](const Bindings& b) {
                  return at(b, "b1").sign() < 0 && at(b, "b2").sign() > 0 && lt(at(b, "b2"), Scalar(1));
                },
                [](Rng& rng) { return Bindings{{"b1", rnd(rng, -3, 0)}, {"b2", rnd(rng, 0, 1)}}; });
}

Region q_above_one() {
  return region("g4_11", "q > 1", [](const Bindings& b) { return gt(at(b, "q"), Scalar(1)); },
                [](Rng& rng) { return Bindings{{"q", rnd(rng, 1, 4)}}; });
}

Region q_small() {
  return region("g4_11", "0 < q < sqrt(2)/4", [](const Bindings& b) { return lt(at(b, "q"), kSqrt2Over4); },
                [](Rng& rng) { return Bindings{{"q", random_rational(rng, Rational(0), Rational(36, 100), 100)}}; });
}

Region p_wide() {
  return region("g4_9", "-3/4 < p <= 1, p != 0",
                [](const Bindings& b) { return gt(at(b, "p"), Scalar(-3, 4)) && !at(b, "p").is_zero(); },
                [](Rng& rng) { return Bindings{{"p", random_rational(rng, Rational(-3, 4), Rational(1), 24)}}; });
}

Region p_narrow() {
  const Scalar bound = (Scalar::sqrt(Rational(2)) - Scalar(1)) / Scalar(2);
  return region("g4_9", "(sqrt(2)-1)/2 < p <= 1", [bound](const Bindings& b) { return gt(at(b, "p"), bound); },
                [](Rng& rng) { return Bindings{{"p", random_rational(rng, Rational(2, 10), Rational(1), 24)}}; });
}

Region a_both_positive() {
  return region("g4_5", "a1 > 0, a2 > 0",
                [](const Bindings& b) { return at(b, "a1").sign() > 0 && at(b, "a2").sign() > 0; },
                [](Rng& rng) { return Bindings{{"a1", rnd(rng, 0, 3)}, {"a2", rnd(rng, 0, 3)}}; });
}

std::vector<Region> totally_real_positive(bool narrow_p) {
  std::vector<Region> r = families({4, 7});
  r.push_back(m_positive());
  r.push_back(a_both_positive());
  r.push_back(b6_positive());
  r.push_back(narrow_p ? p_narrow() : p_wide());
  r.push_back(q_above_one());
  return r;
}

// b1 = -b2 +- sqrt(1 - 2 b2^2): rational points of the ellipse
// (b1 + b2)^2 + 2 b2^2 = 1 via u = (1 - 2t^2)/(1 + 2t^2), b2 = 2t/(1 + 2t^2).
Bindings draw_ellipse(Rng& rng) {
  const Scalar t = random_rational(rng, Rational(0), Rational(4), 12);
  const Scalar den = Scalar(1) + Scalar(2) * t * t;
  const Scalar u = (Scalar(1) - Scalar(2) * t * t) / den;
  const Scalar b2 = Scalar(2) * t / den;
  return {{"b1", u - b2}, {"b2", b2}};
}

std::vector<TheoremItem> make_items() {
  std::vector<TheoremItem> items;
  auto item = [&](int n, std::string property, std::vector<std::string> quantities,
                  std::function<bool(const CurvatureReport&)> holds) -> TheoremItem& {
    TheoremItem it;
    it.number = n;
    it.property = std::move(property);
    it.quantities = std::move(quantities);
    it.holds = std::move(holds);
    items.push_back(std::move(it));
    return items.back();
  };

  {
    auto& it = item(1, "non-flat (R != 0)", {}, [](const CurvatureReport& c) { return !c.riemann.R04.is_zero(); });
    it.universal = true;
  }
  {
    auto& it = item(2, "scalar flat", {"tau"}, [](const CurvatureReport& c) { return c.ricci.tau.is_zero(); });
    it.regions = families({1});
    it.regions.push_back(region(
        "g4_6", "b1 = -b2 +- sqrt(1-2b2^2), 0 <= b2 <= sqrt(2)/2, b2 != sqrt(3)/3",
        [](const Bindings& b) {
          const Scalar& b1 = at(b, "b1");
          const Scalar& b2 = at(b, "b2");
          if (gt(b2, kSqrt2Over2)) return false;
          if (b2 * b2 == Scalar(1, 3)) return false;
          return (b1 + b2) * (b1 + b2) == Scalar(1) - Scalar(2) * b2 * b2;
        },
        draw_ellipse));
    it.regions.push_back(region("g4_11", "q = sqrt(3)/6", [](const Bindings& b) { return at(b, "q") == kSqrt3Over6; }));
  }
  {
    auto& it = item(3, "positive scalar curvature", {"tau"}, [](const CurvatureReport& c) { return c.ricci.tau.sign() > 0; });
    it.regions = families({2, 3, 4, 5, 7, 8, 9, 12});
    it.regions.push_back(region("g4_6", "b1 != 0, b2 > sqrt(2)/2",
                                [](const Bindings& b) { return gt(at(b, "b2"), kSqrt2Over2); },
                                [](Rng& rng) { return Bindings{{"b1", rnd(rng, -3, 3)}, {"b2", rnd(rng, 0, 3)}}; }));
    it.regions.push_back(region("g4_11", "q > sqrt(3)/6", [](const Bindings& b) { return gt(at(b, "q"), kSqrt3Over6); },
                                [](Rng& rng) { return Bindings{{"q", rnd(rng, 0, 3)}}; }));
  }
  {
    auto& it = item(4, "negative scalar curvature", {"tau"}, [](const CurvatureReport& c) { return c.ricci.tau.sign() < 0; });
    it.regions = families({10});
    it.regions.push_back(region("g4_11", "0 < q < sqrt(3)/6", [](const Bindings& b) { return lt(at(b, "q"), kSqrt3Over6); },
                                [](Rng& rng) {
                                  return Bindings{{"q", random_rational(rng, Rational(0), Rational(3, 10), 100)}};
                                }));
  }
  {
    auto& it = item(5, "*-scalar flat for J1 and J2", {"tau*1", "tau*2"}, [](const CurvatureReport& c) {
      return c.ricci.tau_star[0].is_zero() && c.ricci.tau_star[1].is_zero();
    });
    it.universal = true;
  }
  {
    auto& it = item(6, "*-scalar flat for J3", {"tau*3"}, [](const CurvatureReport& c) { return c.ricci.tau_star[2].is_zero(); });
    it.regions = families({1, 5, 8, 9, 10, 12});
    it.regions.push_back(region("g4_2", "m = -2", [](const Bindings& b) { return at(b, "m") == Scalar(-2); }));
    it.regions.push_back(region("g4_6", "b1 = -2 b2", [](const Bindings& b) { return at(b, "b1") == Scalar(-2) * at(b, "b2"); },
                                [](Rng& rng) {
                                  const Scalar t = rnd(rng, 0, 3);
                                  return Bindings{{"b1", Scalar(-2) * t}, {"b2", t}};
                                }));
  }
  auto inverse_minus = [](Rng& rng) {
    const Scalar t = rnd(rng, 0, 3);
    return Bindings{{"b1", t.is_zero() ? Scalar(0) : t.inverse() - t}, {"b2", t}};
  };
  auto on_inverse_minus = [](const Bindings& b) {
    const Scalar& b2 = at(b, "b2");
    return b2.sign() > 0 && at(b, "b1") == b2.inverse() - b2;
  };
  const std::string b2_note = "b2 = 0 excluded: b1 = 1/b2 - b2 is undefined there";
  {
    auto& it = item(7, "**-scalar flat for J1", {"tau**1"},
                    [](const CurvatureReport& c) { return c.ricci.tau_star_star[0].is_zero(); });
    it.regions.push_back(region("g4_2", "m = -1/4", [](const Bindings& b) { return at(b, "m") == Scalar(-1, 4); }));
    it.regions.push_back(region("g4_5", "a1 = -a2^2", [](const Bindings& b) { return at(b, "a1") == -at(b, "a2") * at(b, "a2"); },
                                [](Rng& rng) {
                                  const Scalar t = rnd(rng, -3, 3);
                                  return Bindings{{"a1", -t * t}, {"a2", t}};
                                }));
    it.regions.push_back(region("g4_6", "b1 = 1/b2 - b2", on_inverse_minus, inverse_minus, b2_note));
    it.regions.push_back(region("g4_11", "q = sqrt(15)/6", [](const Bindings& b) { return at(b, "q") == kSqrt15Over6; }));
  }
  {
    auto& it = item(8, "**-scalar flat for J2", {"tau**2"},
                    [](const CurvatureReport& c) { return c.ricci.tau_star_star[1].is_zero(); });
    it.regions.push_back(region("g4_2", "m = -5/4", [](const Bindings& b) { return at(b, "m") == Scalar(-5, 4); }));
    it.regions.push_back(region("g4_5", "a2 = -a1^2", [](const Bindings& b) { return at(b, "a2") == -at(b, "a1") * at(b, "a1"); },
                                [](Rng& rng) {
                                  const Scalar t = rnd(rng, -3, 3);
                                  return Bindings{{"a1", t}, {"a2", -t * t}};
                                }));
    it.regions.push_back(region("g4_6", "b1 = 1/b2 - b2", on_inverse_minus, inverse_minus, b2_note));
    it.regions.push_back(region("g4_11", "q = sqrt(15)/6", [](const Bindings& b) { return at(b, "q") == kSqrt15Over6; }));
  }
  {
    auto& it = item(9, "**-scalar flat for J3", {"tau**3"},
                    [](const CurvatureReport& c) { return c.ricci.tau_star_star[2].is_zero(); });
    it.regions = families({1});
    const Scalar p0 = (Scalar::sqrt(Rational(2)) - Scalar(3)) / Scalar(2);
    it.regions.push_back(region("g4_9", "p = (sqrt(2)-3)/2", [p0](const Bindings& b) { return at(b, "p") == p0; }));
  }
  {
    auto& it = item(10, "positive holomorphic sectional curvatures for J1", {"k12", "k34"},
                    [](const CurvatureReport& c) { return positive(c, {"k12", "k34"}); });
    it.regions = families({4, 7});
    it.regions.push_back(m_positive());
    it.regions.push_back(region("g4_5", "a1 > 0", [](const Bindings& b) { return at(b, "a1").sign() > 0; },
                                [](Rng& rng) { return Bindings{{"a1", rnd(rng, 0, 3)}, {"a2", rnd(rng, -3, 3)}}; }));
    it.regions.push_back(b6_positive());
    it.regions.push_back(p_wide());
    it.regions.push_back(q_above_one());
  }
  {
    auto& it = item(11, "positive holomorphic sectional curvatures for J2", {"k13", "k24"},
                    [](const CurvatureReport& c) { return positive(c, {"k13", "k24"}); });
    it.regions = families({4, 7});
    it.regions.push_back(m_positive());
    it.regions.push_back(region("g4_5", "a2 > 0", [](const Bindings& b) { return at(b, "a2").sign() > 0; },
                                [](Rng& rng) { return Bindings{{"a1", rnd(rng, -3, 3)}, {"a2", rnd(rng, 0, 3)}}; }));
    it.regions.push_back(b6_positive());
    it.regions.push_back(p_narrow());
    it.regions.push_back(q_above_one());
  }
  {
    auto& it = item(12, "positive holomorphic sectional curvatures for J3", {"k14", "k23"},
                    [](const CurvatureReport& c) { return positive(c, {"k14", "k23"}); });
    it.regions = families({2, 3, 4, 6, 7, 11});
    it.regions.push_back(region("g4_5", "a1 a2 > 0", [](const Bindings& b) { return (at(b, "a1") * at(b, "a2")).sign() > 0; },
                                [](Rng& rng) {
                                  const Scalar s = rnd(rng, 0, 3);
                                  const Scalar t = rnd(rng, 0, 3);
                                  return std::uniform_int_distribution<int>(0, 1)(rng) ? Bindings{{"a1", s}, {"a2", t}}
                                                                                       : Bindings{{"a1", -s}, {"a2", -t}};
                                }));
    it.regions.push_back(p_wide());
  }
  {
    auto& it = item(13, "negative holomorphic sectional curvatures for J1", {"k12", "k34"},
                    [](const CurvatureReport& c) { return negative(c, {"k12", "k34"}); });
    it.regions = families({1});
    it.regions.push_back(b6_negative());
    it.regions.push_back(q_small());
  }
  {
    auto& it = item(14, "negative holomorphic sectional curvatures for J2", {"k13", "k24"},
                    [](const CurvatureReport& c) { return negative(c, {"k13", "k24"}); });
    it.regions.push_back(b6_negative());
    it.regions.push_back(q_small());
  }
  {
    // "every ... non-negative" is read as: no algebra has both negative.
    auto& it = item(15, "negative holomorphic sectional curvatures for J3", {"k14", "k23"},
                    [](const CurvatureReport& c) { return negative(c, {"k14", "k23"}); });
    it.universal = true;
    it.universal_claim = false;
  }
  {
    auto& it = item(16, "positive totally real sectional curvatures for J1", {"k13", "k14", "k23", "k24"},
                    [](const CurvatureReport& c) { return positive(c, {"k13", "k14", "k23", "k24"}); });
    it.regions = totally_real_positive(true);
  }
  {
    auto& it = item(17, "positive totally real sectional curvatures for J2", {"k12", "k14", "k23", "k34"},
                    [](const CurvatureReport& c) { return positive(c, {"k12", "k14", "k23", "k34"}); });
    it.regions = totally_real_positive(false);
  }
  {
    auto& it = item(18, "positive totally real sectional curvatures for J3", {"k12", "k13", "k24", "k34"},
                    [](const CurvatureReport& c) { return positive(c, {"k12", "k13", "k24", "k34"}); });
    it.regions = totally_real_positive(true);
  }
  {
    auto& it = item(19, "negative totally real sectional curvatures for J1 or for J2",
                    {"k12", "k13", "k14", "k23", "k24", "k34"}, [](const CurvatureReport& c) {
                      return negative(c, {"k13", "k14", "k23", "k24"}) || negative(c, {"k12", "k14", "k23", "k34"});
                    });
    it.universal = true;
    it.universal_claim = false;
  }
  {
    auto& it = item(20, "negative totally real sectional curvatures for J3", {"k12", "k13", "k24", "k34"},
                    [](const CurvatureReport& c) { return negative(c, {"k12", "k13", "k24", "k34"}); });
    it.regions.push_back(b6_negative());
    it.regions.push_back(q_small());
  }
  return items;
}

struct Claim {
  bool value;
  std::string region;
};

Claim claim_for(const TheoremItem& item, const std::string& family, const Bindings& b) {
  if (item.universal) return {item.universal_claim, "all"};
  for (const auto& r : item.regions)
    if (r.family == family && r.contains(b)) return {true, r.description.empty() ? family : family + ": " + r.description};
  return {false, "-"};
}

}  // namespace

const std::vector<TheoremItem>& theorem5_items() {
  static const std::vector<TheoremItem> items = make_items();
  return items;
}

Scalar quantity(const CurvatureReport& c, const std::string& name) {
  if (name == "tau") return c.ricci.tau;
  if (name.rfind("tau**", 0) == 0) return c.ricci.tau_star_star.at(static_cast<std::size_t>(name[5] - '1'));
  if (name.rfind("tau*", 0) == 0) return c.ricci.tau_star.at(static_cast<std::size_t>(name[4] - '1'));
  if (name.size() == 3 && name[0] == 'k') {
    const auto it = c.sectional.k.find({name[1] - '0', name[2] - '0'});
    if (it != c.sectional.k.end()) return it->second;
  }
  throw Error(ErrorCode::IndexOutOfRange, "unknown curvature quantity '" + name + "'");
}

std::vector<Verdict> theorem5_checks(const std::string& family, const Bindings& bindings) {
  const std::string id = find_family(family).id;
  const CurvatureReport c = curvature(builtin(id, bindings), standard_h());
  std::vector<Verdict> out;
  for (const auto& item : theorem5_items()) {
    Verdict v;
    v.item = item.number;
    v.family = id;
    v.witness = bindings;
    const Claim claim = claim_for(item, id, bindings);
    v.claim = claim.value;
    v.region = claim.region;
    v.computed = item.holds(c);
    for (const auto& q : item.quantities) v.values[q] = quantity(c, q);
    out.push_back(std::move(v));
  }
  return out;
}

bool Theorem5Report::all_agree() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.agree(); });
}

bool Theorem5Report::items_agree(const std::vector<int>& items) const {
  for (const auto& v : verdicts)
    if (std::find(items.begin(), items.end(), v.item) != items.end() && !v.agree()) return false;
  return true;
}

Theorem5Report theorem5_report(const WitnessSet& witnesses, int samples, std::uint64_t seed) {
  if (samples < 1) throw Error(ErrorCode::DomainViolation, "samples must be >= 1");
  Theorem5Report report;
  report.samples = samples;
  report.seed = seed;
  report.notes.push_back("region claims are checked at curated witnesses and seeded rational samples, not proved");
  Rng rng(seed);

  std::map<std::string, std::vector<Verdict>> cache;
  auto all_items_at = [&](const std::string& family, const Bindings& b) -> const std::vector<Verdict>& {
    const std::string key = family + "|" + describe(b);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, theorem5_checks(family, b)).first;
    return it->second;
  };
  auto record = [&](const std::string& family, const Bindings& b, const std::string& source, int only_item) {
    for (Verdict v : all_items_at(family, b)) {
      if (only_item != 0 && v.item != only_item) continue;
      v.source = source;
      report.verdicts.push_back(std::move(v));
    }
  };

  for (const auto& w : witnesses.theorem5) record(find_family(w.family).id, w.bindings, "witness", 0);

  for (const auto& f : builtin_families()) {
    const Region dom = domain_region(f.id);
    bool witnessed = false;
    for (const auto& w : witnesses.theorem5) witnessed = witnessed || find_family(w.family).id == f.id;
    if (f.spec.params.empty() && witnessed) continue;  // a single point, already checked
    const int draws = f.spec.params.empty() ? 1 : samples;
    for (int s = 0; s < draws; ++s)
      if (auto b = sample(dom, rng)) record(f.id, *b, "domain", 0);
  }

  for (const auto& item : theorem5_items()) {
    for (const auto& r : item.regions) {
      if (!r.draw || find_family(r.family).spec.params.empty()) continue;
      for (int s = 0; s < samples; ++s) {
        auto b = sample(r, rng);
        if (!b) {
          report.notes.push_back("item " + std::to_string(item.number) + ", " + r.family + " " + r.description +
                                 ": sampler gave up");
          break;
        }
        record(r.family, *b, "region", item.number);
      }
      if (!r.note.empty()) report.notes.push_back("item " + std::to_string(item.number) + ": " + r.note);
    }
  }
  return report;
}

}  // namespace hnlie
