#include "hnlie/table2.hpp"

#include "hnlie/error.hpp"

namespace hnlie {

namespace {

const Scalar& at(const Bindings& b, const char* k) { return b.at(k); }

Region point(const std::string& family, const std::string& text, Bindings where) {
  Region r;
  r.family = family;
  r.description = text;
  r.contains = [where](const Bindings& b) {
    for (const auto& [k, v] : where)
      if (!b.count(k) || !eq(b.at(k), v)) return false;
    return true;
  };
  return r;
}

Region region(const std::string& family, const std::string& text, std::function<bool(const Bindings&)> contains,
              std::function<Bindings(Rng&)> draw) {
  return Region{family, text, std::move(contains), std::move(draw), {}};
}

Region whole(const std::string& family) {
  Region r = domain_region(family);
  r.description = family == "g4_5" ? "a1 != 0, a2 != 0" : r.description;
  return r;
}

Scalar rnd(Rng& rng) { return random_rational(rng, Rational(-3), Rational(3)); }

bool not_in(const Scalar& x, std::initializer_list<Scalar> values) {
  for (const auto& v : values)
    if (eq(x, v)) return false;
  return true;
}

Table2Row row(std::string id, std::string params, std::array<std::string, 3> labels, Region r) {
  Table2Row out;
  out.id = std::move(id);
  out.parameters = std::move(params);
  out.labels = std::move(labels);
  out.region = std::move(r);
  return out;
}

std::vector<Table2Row> make_rows() {
  std::vector<Table2Row> rows;
  const Scalar one(1), m1(-1), m3(-3), third(-1, 3);
  auto plain = [&](const char* fam, std::array<std::string, 3> labels) {
    rows.push_back(row(std::string(fam) + "/r1", "-", std::move(labels), whole(fam)));
  };

  plain("g4_1", {"W24", "W123", "W123"});
  rows.push_back(row("g4_2/r1", "m = 1", {"W4", "W123", "W123"}, point("g4_2", "m = 1", {{"m", one}})));
  rows.push_back(row("g4_2/r2", "m != 0, m != 1", {"W24", "W123", "W123"},
                     region("g4_2", "m != 0, m != 1", [=](const Bindings& b) { return at(b, "m") != one; },
                            [](Rng& rng) { return Bindings{{"m", rnd(rng)}}; })));
  plain("g4_3", {"W24", "W123", "W123"});
  plain("g4_4", {"W24", "W123", "W123"});

  const std::string f5 = "g4_5";
  auto a1 = [](const Bindings& b) { return at(b, "a1"); };
  auto a2 = [](const Bindings& b) { return at(b, "a2"); };
  rows.push_back(row(f5 + "/r1", "a1 = -1, a2 = 1", {"W2", "W2", "W123"}, point(f5, "a1 = -1, a2 = 1", {{"a1", m1}, {"a2", one}})));
  rows.push_back(row(f5 + "/r2", "a1 = -1, a2 = -1", {"W2", "W123", "W2"}, point(f5, "a1 = -1, a2 = -1", {{"a1", m1}, {"a2", m1}})));
  rows.push_back(row(f5 + "/r3", "a1 = -1, a2 != +-1", {"W2", "W123", "W123"},
                     region(f5, "a1 = -1, a2 != +-1",
                            [=](const Bindings& b) { return a1(b) == m1 && not_in(a2(b), {one, m1}); },
                            [=](Rng& rng) { return Bindings{{"a1", m1}, {"a2", rnd(rng)}}; })));
  rows.push_back(row(f5 + "/r4", "a1 = 1, a2 = 1", {"W4", "W1", "W12"}, point(f5, "a1 = 1, a2 = 1", {{"a1", one}, {"a2", one}})));
  rows.push_back(row(f5 + "/r5", "a1 = 1, a2 = -3", {"W4", "W23", "W23"}, point(f5, "a1 = 1, a2 = -3", {{"a1", one}, {"a2", m3}})));
  {
    Table2Row r6 = row(f5 + "/r6", "a1 = -1, a2 not in {-3, 1}", {"W4", "W123", "W123"},
                       region(f5, "a1 = -1, a2 not in {-3, 1}",
                              [=](const Bindings& b) { return a1(b) == m1 && not_in(a2(b), {m3, one}); },
                              [=](Rng& rng) { return Bindings{{"a1", m1}, {"a2", rnd(rng)}}; }));
    r6.asserted = false;
    r6.alternate = region(f5, "a1 = 1, a2 not in {-3, 1}",
                          [=](const Bindings& b) { return a1(b) == one && not_in(a2(b), {m3, one}); },
                          [=](Rng& rng) { return Bindings{{"a1", one}, {"a2", rnd(rng)}}; });
    r6.annotation =
        "stated region a1 = -1 is already covered by rows r1-r3 (J1 class W2, not W4); "
        "evaluated under the reading a1 = 1 instead";
    rows.push_back(std::move(r6));
  }
  rows.push_back(row(f5 + "/r7", "a1 != +-1, a2 = 1", {"W24", "W12", "W123"},
                     region(f5, "a1 != +-1, a2 = 1",
                            [=](const Bindings& b) { return a2(b) == one && not_in(a1(b), {one, m1}); },
                            [=](Rng& rng) { return Bindings{{"a1", rnd(rng)}, {"a2", one}}; })));
  rows.push_back(row(f5 + "/r8", "a1 = -1/3, a2 = -1/3", {"W24", "W23", "W12"},
                     point(f5, "a1 = -1/3, a2 = -1/3", {{"a1", third}, {"a2", third}})));
  rows.push_back(row(f5 + "/r9", "a1 = -(a2+1)/2, a2 not in {-3, -1/3, 1}", {"W24", "W23", "W123"},
                     region(f5, "a1 = -(a2+1)/2, a2 not in {-3, -1/3, 1}",
                            [=](const Bindings& b) {
                              return a1(b) == Scalar(-1, 2) * (a2(b) + one) && not_in(a2(b), {m3, third, one});
                            },
                            [=](Rng& rng) {
                              const Scalar t = rnd(rng);
                              return Bindings{{"a1", Scalar(-1, 2) * (t + one)}, {"a2", t}};
                            })));
  rows.push_back(row(f5 + "/r10", "a1 = a2, a2 not in {+-1, -1/3}", {"W24", "W123", "W12"},
                     region(f5, "a1 = a2, a2 not in {+-1, -1/3}",
                            [=](const Bindings& b) { return a1(b) == a2(b) && not_in(a2(b), {one, m1, third}); },
                            [=](Rng& rng) {
                              const Scalar t = rnd(rng);
                              return Bindings{{"a1", t}, {"a2", t}};
                            })));
  rows.push_back(row(f5 + "/r11", "a1 = -a2-2, a2 not in {-3, -1}", {"W24", "W123", "W23"},
                     region(f5, "a1 = -a2-2, a2 not in {-3, -1}",
                            [=](const Bindings& b) { return a1(b) == -a2(b) - Scalar(2) && not_in(a2(b), {m3, m1}); },
                            [=](Rng& rng) {
                              const Scalar t = rnd(rng);
                              return Bindings{{"a1", -t - Scalar(2)}, {"a2", t}};
                            })));
  rows.push_back(row(f5 + "/r12", "a1 != 0, a2 != 0", {"W24", "W123", "W123"}, whole(f5)));

  plain("g4_6", {"W24", "W123", "W12"});
  plain("g4_7", {"W4", "W123", "W123"});
  plain("g4_8", {"W24", "W123", "W3"});
  rows.push_back(row("g4_9/r1", "p = 1", {"W4", "W12", "W12"}, point("g4_9", "p = 1", {{"p", one}})));
  rows.push_back(row("g4_9/r2", "-1 < p < 1", {"W24", "W12", "W123"},
                     region("g4_9", "-1 < p < 1", [=](const Bindings& b) { return at(b, "p") != one; },
                            [](Rng& rng) { return Bindings{{"p", random_rational(rng, Rational(-1), Rational(1))}}; })));
  plain("g4_10", {"W24", "W123", "W123"});
  plain("g4_11", {"W24", "W123", "W12"});
  plain("g4_12", {"W4", "W123", "W123"});
  return rows;
}

std::array<std::string, 3> label_strings(const std::array<ClassLabel, 3>& labels) {
  return {labels[0].label(), labels[1].label(), labels[2].label()};
}

bool all_contained(const std::array<ClassLabel, 3>& got, const std::array<std::string, 3>& expected) {
  for (int a = 0; a < 3; ++a)
    if (!got[static_cast<std::size_t>(a)].contained_in(ClassLabel::parse(a + 1, expected[static_cast<std::size_t>(a)])))
      return false;
  return true;
}

}  // namespace

const std::vector<Table2Row>& table2_rows() {
  static const std::vector<Table2Row> rows = make_rows();
  return rows;
}

const Table2Row* match_row(const std::string& family, const Bindings& bindings) {
  const std::string id = find_family(family).id;
  for (const auto& r : table2_rows())
    if (r.asserted && r.region.family == id && r.region.contains(bindings)) return &r;
  return nullptr;
}

const std::vector<NegativeBullet>& negative_bullets() {
  static const std::vector<NegativeBullet> bullets{
      {"g4_5", "a1 != 0, a2 != 0", {{{"W0"}, {"W0", "W3", "W13"}, {"W0", "W1", "W3", "W13"}}}},
      {"g4_6", "b1 != 0, b2 >= 0",
       {{{"W0", "W2", "W4"}, {"W0", "W1", "W2", "W3", "W12", "W13", "W23"}, {"W0", "W1", "W2"}}}},
      {"g4_2", "m != 0",
       {{{"W0", "W2"}, {"W0", "W1", "W2", "W3", "W12", "W13", "W23"}, {"W0", "W1", "W2", "W3", "W12", "W13", "W23"}}}},
      {"g4_9", "-1 < p <= 1", {{{"W0", "W2"}, {"W0", "W1", "W2"}, {"W0", "W1", "W2", "W3", "W13", "W23"}}}},
      {"g4_11", "q > 0",
       {{{"W0", "W2", "W4"}, {"W0", "W1", "W2", "W3", "W12", "W13", "W23"}, {"W0", "W1", "W2"}}}},
  };
  return bullets;
}

std::vector<std::string> bullet_violations(const std::string& family, const std::array<ClassLabel, 3>& labels) {
  std::vector<std::string> out;
  for (const auto& b : negative_bullets()) {
    if (b.family != family) continue;
    for (int a = 1; a <= 3; ++a)
      for (const auto& cls : b.excluded[static_cast<std::size_t>(a - 1)]) {
        const ClassLabel& got = labels[static_cast<std::size_t>(a - 1)];
        if (got.contained_in(ClassLabel::parse(a, cls))) {
          out.push_back("J" + std::to_string(a) + ": " + got.label() + " lies in excluded " + cls);
        }
      }
  }
  return out;
}

bool Table2Report::witnesses_exact() const {
  for (const auto& c : checks)
    if (c.asserted && c.source == "witness" && !c.exact) return false;
  return true;
}

bool Table2Report::samples_contained() const {
  for (const auto& c : checks)
    if (c.asserted && !c.contained) return false;
  return true;
}

bool Table2Report::bullets_hold() const {
  for (const auto& c : checks)
    if (!c.bullet_violations.empty()) return false;
  return true;
}

Table2Report table2_report(const WitnessSet& witnesses, int samples_per_region, std::uint64_t seed) {
  if (samples_per_region < 1) throw Error(ErrorCode::DomainViolation, "samples per region must be >= 1");
  Table2Report report;
  report.samples = samples_per_region;
  report.seed = seed;
  const HNStructure h = standard_h();
  Rng rng(seed);

  auto evaluate = [&](const std::string& family, const Bindings& b, const std::string& source,
                      const Table2Row* forced) {
    Table2Check check;
    check.family = family;
    check.bindings = b;
    check.source = source;
    const Table2Row* r = forced ? forced : match_row(family, b);
    const auto labels = classify(builtin(family, b), h);
    check.computed = label_strings(labels);
    check.bullet_violations = bullet_violations(family, labels);
    if (r == nullptr) {
      check.asserted = false;
      check.annotation = "no row covers these parameters";
    } else {
      check.row = r->id;
      check.expected = r->labels;
      check.exact = check.computed == r->labels;
      check.contained = all_contained(labels, r->labels);
      check.asserted = r->asserted;
      check.annotation = r->annotation;
    }
    report.checks.push_back(std::move(check));
  };

  for (const auto& w : witnesses.table2) {
    const Table2Row* forced = nullptr;
    if (!w.row.empty()) {
      for (const auto& r : table2_rows())
        if (r.id == w.row) forced = &r;
      if (forced == nullptr) throw Error(ErrorCode::SyntaxError, "witness names unknown row " + w.row);
    }
    const Table2Row* natural = match_row(w.family, w.bindings);
    if (forced && forced->asserted && natural != forced) {
      report.notes.push_back("witness " + w.family + " (" + describe(w.bindings) + ") is listed for " + w.row +
                             " but first matches " + (natural ? natural->id : std::string("no row")));
    }
    const bool alt = forced && !forced->asserted;
    evaluate(w.family, w.bindings, alt ? "alternate" : "witness", forced);
  }

  for (const auto& r : table2_rows()) {
    const Region& reg = r.asserted ? r.region : *r.alternate;
    if (!reg.draw || find_family(reg.family).spec.params.empty()) continue;
    for (int s = 0; s < samples_per_region; ++s) {
      auto b = sample(reg, rng);
      if (!b) {
        report.notes.push_back(r.id + ": sampler gave up");
        break;
      }
      evaluate(reg.family, *b, r.asserted ? "sample" : "alternate", r.asserted ? nullptr : &r);
    }
  }
  return report;
}

}  // namespace hnlie
