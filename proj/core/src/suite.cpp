#include "ilocal/suite.hpp"

#include <functional>

#include "ilocal/errors.hpp"
#include "ilocal/expression.hpp"
#include "ilocal/homology.hpp"
#include "ilocal/json_io.hpp"
#include "ilocal/random.hpp"

namespace ilocal {

namespace {

constexpr std::size_t kMaxCounterexamples = 5;

// A case returns an empty json on success, or a counterexample.
using Case = std::function<json(Rng&)>;

SuiteResult run_cases(const std::string& name, int cases, Rng& rng, const Case& body) {
  SuiteResult r;
  r.name = name;
  for (int k = 0; k < cases; ++k) {
    json bad;
    try {
      bad = body(rng);
    } catch (const std::exception& e) {
      bad = json{{"exception", e.what()}};
    }
    ++r.cases;
    if (bad.is_null()) continue;
    ++r.failures;
    bad["case"] = k;
    if (r.counterexamples.size() < kMaxCounterexamples) r.counterexamples.push_back(std::move(bad));
  }
  return r;
}

std::vector<std::int64_t> admissible_deltas(const SplitComplex& x, int cap) {
  const Width w = width(x);
  const std::int64_t top = w ? *w / 2 : cap;
  std::vector<std::int64_t> out;
  for (std::int64_t d = 0; d <= top; ++d) out.push_back(d);
  return out;
}

}  // namespace

bool SuiteReport::passed() const {
  for (const auto& s : suites)
    if (s.failures) return false;
  return true;
}

json SuiteReport::to_json() const {
  json suites_json = json::array();
  for (const auto& s : suites)
    suites_json.push_back(
        {{"name", s.name}, {"cases", s.cases}, {"failures", s.failures}, {"counterexamples", s.counterexamples}});
  return json{{"seed", seed}, {"passed", passed()}, {"suites", std::move(suites_json)}};
}

SuiteReport run_suite(std::uint64_t seed, const SuiteBounds& b, DoublingMutation mutation) {
  SuiteReport report;
  report.seed = seed;
  Rng rng(seed);
  SplitGenOptions gen;
  gen.max_cells = b.max_cells;

  report.suites.push_back(run_cases("kunneth", b.cases, rng, [&](Rng& r) -> json {
    const GeometricComplex c = random_complex(r, 6);
    const GeometricComplex d = random_complex(r, 6);
    const FUModule got = homology(tensor(c, d)).module;
    const FUModule want = kunneth(homology(c).module, homology(d).module);
    if (isomorphic(got, want)) return nullptr;
    return {{"left", complex_to_json(c)}, {"right", complex_to_json(d)}, {"homology", module_to_json(got.canonical())},
            {"kunneth", module_to_json(want)}};
  }));

  report.suites.push_back(run_cases("doubling_homology", b.cases, rng, [&](Rng& r) -> json {
    const SplitComplex x = random_split_complex(r, gen);
    const FUModule base = homology(x).module;
    const Grading g = x.base().cell(x.fixed()).maslov();
    for (std::int64_t delta : admissible_deltas(x, b.max_delta)) {
      FUModule want = base;
      if (delta > 0) want.add(Tower::torsion(g, delta));
      const FUModule got = homology(double_complex(x, delta, canonical_splitting(x), mutation).complex).module;
      if (!isomorphic(got, want))
        return {{"complex", complex_to_json(x)}, {"delta", delta}, {"homology", module_to_json(got.canonical())},
                {"expected", module_to_json(want.canonical())}};
    }
    return nullptr;
  }));

  report.suites.push_back(run_cases("local_pair", b.cases, rng, [&](Rng& r) -> json {
    const SplitComplex x = random_split_complex(r, gen);
    const Splitting s = random_splitting(r, x);
    for (std::int64_t delta : admissible_deltas(x, b.max_delta)) {
      const LocalPairReport rep =
          verify_local_pair(local_map_f(x, delta, s, mutation), local_map_g(x, delta, s, mutation));
      if (!rep.passed()) return {{"complex", complex_to_json(x)}, {"delta", delta}, {"report", report_to_json(rep)}};
    }
    return nullptr;
  }));

  report.suites.push_back(run_cases("representative", b.cases, rng, [&](Rng& r) -> json {
    const LinearCombination lc = random_combination(r, b.max_terms, b.max_index);
    SplitComplex rep = build_trivial();
    for (const auto& t : lc.terms())
      rep = t.sign == Sign::Plus ? double_complex(rep, t.index, canonical_splitting(rep), mutation).complex
                                 : half(rep, t.index, mutation);
    const FUModule got = homology(rep).module.torsion();
    const FUModule want = connected_homology(lc);
    if (isomorphic(got, want) && rep.size() == 2 * lc.size() + 1) return nullptr;
    return {{"expr", format_expression(lc)}, {"cells", rep.size()}, {"torsion", module_to_json(got.canonical())},
            {"expected", module_to_json(want)}};
  }));

  report.suites.push_back(run_cases("decode_round_trip", b.cases, rng, [&](Rng& r) -> json {
    const LinearCombination lc = random_combination(r, b.max_terms, b.max_index);
    const Grading d = 2 * r.uniform(-5, 5);
    const FUModule m = hf_conn({lc, d}).without_orientation();
    const LinearCombination back = decode(m, d);
    if (back == lc) return nullptr;
    return {{"expr", format_expression(lc)}, {"d", d.to_fraction()}, {"decoded", format_expression(back)}};
  }));

  report.suites.push_back(run_cases("duality", b.cases, rng, [&](Rng& r) -> json {
    const SplitComplex x = random_split_complex(r, gen);
    const FUModule t = homology(x).module.torsion();
    const FUModule td = homology(dual(x)).module.torsion();
    if (!isomorphic(td, reflect(t)) || width(dual(x)) != width(x))
      return {{"complex", complex_to_json(x)}, {"torsion", module_to_json(t)}, {"dual_torsion", module_to_json(td)}};
    const LinearCombination lc = random_combination(r, b.max_terms, b.max_index);
    const FUModule neg = connected_homology(simplify(lc.negated()));
    if (neg.canonical() != reflect(connected_homology(lc)).canonical())
      return {{"expr", format_expression(lc)}, {"negated", module_to_json(neg)}};
    return nullptr;
  }));

  return report;
}

}  // namespace ilocal
