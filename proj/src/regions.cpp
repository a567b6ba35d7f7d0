#include "hnlie/regions.hpp"

#include <gmpxx.h>

#include "hnlie/error.hpp"

namespace hnlie {

namespace {

Integer ceil_of(const Rational& r) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Integer floor_of(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Bindings draw_box(Rng& rng, const std::vector<std::pair<std::string, std::pair<Rational, Rational>>>& box) {
  Bindings b;
  for (const auto& [symbol, range] : box) b[symbol] = random_rational(rng, range.first, range.second);
  return b;
}

}  // namespace

Scalar random_rational(Rng& rng, const Rational& lo, const Rational& hi, long max_den) {
  if (hi < lo) throw Error(ErrorCode::DomainViolation, "empty sampling interval");
  std::uniform_int_distribution<long> den_dist(1, max_den);
  for (;;) {
    const long den = den_dist(rng);
    const Integer from = ceil_of(lo * den);
    const Integer to = floor_of(hi * den);
    if (to < from) continue;
    const Integer width = to - from;
    std::uniform_int_distribution<long> num_dist(0, width.get_si());
    return Scalar(Rational(Integer(from + num_dist(rng)), Integer(den)));
  }
}

bool in_domain(const std::string& family, const Bindings& bindings) {
  const Family& f = find_family(family);
  for (const auto& p : f.spec.params)
    if (!bindings.count(p.symbol)) return false;
  try {
    return !f.domain_violation(bindings);
  } catch (const Error&) {
    return false;
  }
}

std::optional<Bindings> sample(const Region& region, Rng& rng, int max_tries) {
  if (!region.draw) return std::nullopt;
  for (int t = 0; t < max_tries; ++t) {
    Bindings b = region.draw(rng);
    if (in_domain(region.family, b) && region.contains(b)) return b;
  }
  return std::nullopt;
}

Region domain_region(const std::string& family) {
  const Family& f = find_family(family);
  Region r;
  r.family = f.id;
  r.contains = [](const Bindings&) { return true; };
  const Rational three(3), neg3(-3);
  if (f.id == "g4_2") {
    r.description = "m != 0";
    r.draw = [=](Rng& rng) { return draw_box(rng, {{"m", {neg3, three}}}); };
  } else if (f.id == "g4_5") {
    r.description = "a1 != 0, a2 != 0";
    r.draw = [=](Rng& rng) { return draw_box(rng, {{"a1", {neg3, three}}, {"a2", {neg3, three}}}); };
  } else if (f.id == "g4_6") {
    r.description = "b1 != 0, b2 >= 0";
    r.draw = [=](Rng& rng) { return draw_box(rng, {{"b1", {neg3, three}}, {"b2", {Rational(0), three}}}); };
  } else if (f.id == "g4_9") {
    r.description = "-1 < p <= 1";
    r.draw = [](Rng& rng) { return draw_box(rng, {{"p", {Rational(-1), Rational(1)}}}); };
  } else if (f.id == "g4_11") {
    r.description = "q > 0";
    r.draw = [=](Rng& rng) { return draw_box(rng, {{"q", {Rational(0), three}}}); };
  } else {
    r.description = "no parameters";
    r.draw = [](Rng&) { return Bindings{}; };
  }
  return r;
}

std::string describe(const Bindings& bindings) {
  if (bindings.empty()) return "-";
  std::string out;
  for (const auto& [k, v] : bindings) {
    if (!out.empty()) out += ", ";
    out += k + "=" + v.to_string();
  }
  return out;
}

}  // namespace hnlie
