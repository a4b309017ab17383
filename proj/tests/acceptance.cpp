// Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
// non-zero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "ilocal/connected.hpp"
#include "ilocal/doubling.hpp"
#include "ilocal/errors.hpp"
#include "ilocal/expression.hpp"
#include "ilocal/homology.hpp"
#include "ilocal/random.hpp"
#include "ilocal/render.hpp"
#include "oracle/graded_homology.hpp"

using namespace ilocal;

namespace {

constexpr std::uint64_t kSeed = 20261014;

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

int failures = 0;

void criterion(int number, const std::string& name, double limit_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit_s > 0 && secs >= limit_s) out.fail("runtime bound exceeded");
  if (!out.ok) ++failures;
  std::printf("criterion %2d [%s] %s (%.3f s", number, out.ok ? "PASS" : "FAIL", name.c_str(), secs);
  if (limit_s > 0) std::printf(" < %g s", limit_s);
  std::printf(")%s%s\n", out.detail.empty() ? "" : ": ", out.detail.c_str());
  std::fflush(stdout);
}

std::string str(const FUModule& m) { return to_string(m.canonical()); }

std::vector<SplitComplex> split_corpus() {
  Rng rng(kSeed);
  std::vector<SplitComplex> out;
  for (int k = 0; k < 200; ++k) out.push_back(random_split_complex(rng));
  return out;
}

std::vector<std::pair<GeometricComplex, GeometricComplex>> pair_corpus() {
  Rng rng(kSeed + 1);
  std::vector<std::pair<GeometricComplex, GeometricComplex>> out;
  for (int k = 0; k < 200; ++k) {
    GeometricComplex a = random_complex(rng, 12);
    out.emplace_back(std::move(a), random_complex(rng, 12));
  }
  return out;
}

// 0 <= delta with 2 delta <= width; capped at 3 for infinite width.
std::vector<std::int64_t> deltas(const SplitComplex& x) {
  const Width w = width(x);
  std::vector<std::int64_t> out;
  for (std::int64_t d = 0; d <= (w ? *w / 2 : 3); ++d) out.push_back(d);
  return out;
}

// Every simplified sign pattern over a descending index tuple: equal
// indices share a sign.
std::vector<LinearCombination> sign_patterns(const std::vector<int>& indices) {
  std::vector<int> distinct;
  for (int i : indices)
    if (distinct.empty() || distinct.back() != i) distinct.push_back(i);
  std::vector<LinearCombination> out;
  for (unsigned mask = 0; mask < (1u << distinct.size()); ++mask) {
    std::vector<SignedIndex> terms;
    for (int i : indices) {
      const auto pos = std::find(distinct.begin(), distinct.end(), i) - distinct.begin();
      terms.push_back({(mask >> pos & 1u) ? Sign::Minus : Sign::Plus, i});
    }
    out.push_back(simplify(LinearCombination(std::move(terms))));
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main() {
  const std::vector<SplitComplex> corpus = split_corpus();
  const auto pairs = pair_corpus();

  criterion(1, "basis homology Free_0 + T_0(i), i in [1,12]", 1.0, [] {
    Outcome o;
    for (int i = 1; i <= 12; ++i) {
      const FUModule want{Tower::free(0), Tower::torsion(0, i)};
      const FUModule got = homology(build_xi(i)).module.canonical();
      if (got != want.canonical()) o.fail("X_" + std::to_string(i) + ": " + str(got));
      if (oracle::graded_homology(build_xi(i).base()) != want.canonical()) o.fail("oracle disagrees at i = " + std::to_string(i));
    }
    return o;
  });

  criterion(2, "doubling adds T_g(delta), 200 split complexes x admissible delta", 10.0, [&] {
    Outcome o;
    int checks = 0;
    for (std::size_t k = 0; k < corpus.size(); ++k) {
      const SplitComplex& x = corpus[k];
      const FUModule base = oracle::graded_homology(x.base());
      const Grading g = x.base().cell(x.fixed()).maslov();
      for (std::int64_t delta : deltas(x)) {
        FUModule want = base;
        if (delta > 0) want.add(Tower::torsion(g, delta));
        const SplitComplex d = double_complex(x, delta).complex;
        const FUModule got = homology(d).module;
        ++checks;
        if (got.canonical() != want.canonical() || oracle::graded_homology(d.base()) != want.canonical())
          o.fail("complex " + std::to_string(k) + ", delta " + std::to_string(delta) + ": " + str(got));
      }
    }
    o.detail = o.ok ? std::to_string(checks) + " doublings" : o.detail;
    return o;
  });

  criterion(3, "local maps f, g pass all four checks on the same corpus", 30.0, [&] {
    Outcome o;
    Rng rng(kSeed + 3);
    int checks = 0;
    for (std::size_t k = 0; k < corpus.size(); ++k) {
      const SplitComplex& x = corpus[k];
      for (std::int64_t delta : deltas(x)) {
        for (const Splitting& s : {canonical_splitting(x), random_splitting(rng, x)}) {
          const LocalPairReport r = verify_local_pair(local_map_f(x, delta, s), local_map_g(x, delta, s));
          ++checks;
          if (!r.passed())
            o.fail("complex " + std::to_string(k) + ", delta " + std::to_string(delta) + ": " + r.witness.value_or("?"));
        }
      }
    }
    o.detail = o.ok ? std::to_string(checks) + " local pairs" : o.detail;
    return o;
  });

  criterion(4, "representative torsion = connected homology, n <= 5, i <= 8", 60.0, [] {
    Outcome o;
    Rng rng(kSeed + 4);
    std::set<std::vector<int>> tuples;
    while (tuples.size() < 500) {
      std::vector<int> t(static_cast<std::size_t>(rng.uniform(1, 5)));
      for (int& i : t) i = static_cast<int>(rng.uniform(1, 8));
      std::sort(t.begin(), t.end(), std::greater<>());
      tuples.insert(t);
    }
    tuples.insert({});
    int checks = 0;
    for (const auto& t : tuples) {
      for (const LinearCombination& lc : sign_patterns(t)) {
        const SplitComplex rep = representative(lc);
        const FUModule got = homology(rep).module;
        const FUModule want = connected_homology(lc);
        ++checks;
        if (!isomorphic(got.torsion(), want) || got.free_rank() != 1 || rep.size() != 2 * lc.size() + 1)
          o.fail(format_expression(lc) + ": " + str(got));
      }
    }
    o.detail = o.ok ? std::to_string(checks) + " combinations" : o.detail;
    return o;
  });

  criterion(5, "connected homology is a summand of the naive tensor, n <= 3, i <= 8", 10.0, [] {
    Outcome o;
    int checks = 0;
    std::vector<std::vector<int>> tuples{{}};
    for (int a = 1; a <= 8; ++a) {
      tuples.push_back({a});
      for (int b = 1; b <= a; ++b) {
        tuples.push_back({a, b});
        for (int c = 1; c <= b; ++c) tuples.push_back({a, b, c});
      }
    }
    for (const auto& t : tuples) {
      for (const LinearCombination& lc : sign_patterns(t)) {
        SplitComplex prod = build_trivial();
        for (const auto& term : lc.terms())
          prod = tensor(prod, term.sign == Sign::Plus ? build_xi(term.index) : dual(build_xi(term.index)));
        const FUModule whole = homology(prod).module.torsion();
        ++checks;
        if (!contains_summands(whole, connected_homology(lc))) o.fail(format_expression(lc) + ": " + str(whole));
      }
    }
    o.detail = o.ok ? std::to_string(checks) + " combinations" : o.detail;
    return o;
  });

  criterion(6, "decode round trip on 1000 classes; misordered module rejected", 5.0, [] {
    Outcome o;
    Rng rng(kSeed + 6);
    for (int k = 0; k < 1000; ++k) {
      const LinearCombination lc = random_combination(rng, 6, 9);
      const Grading d = 2 * rng.uniform(-5, 5);
      const LinearCombination back = decode(hf_conn({lc, d}).without_orientation(), d);
      if (!(back == lc)) o.fail(format_expression(lc) + " decoded as " + format_expression(back));
    }
    try {
      decode(FUModule{Tower::torsion(-1, 1), Tower::torsion(-2, 2)}, 0);
      o.fail("{T_-1(1), T_-2(2)} was accepted");
    } catch (const NotInXForm&) {
    }
    return o;
  });

  criterion(7, "homology(tensor) = kunneth on 200 pairs of complexes", 30.0, [&] {
    Outcome o;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      const auto& [a, b] = pairs[k];
      const FUModule got = homology(tensor(a, b)).module.canonical();
      const FUModule want = kunneth(oracle::graded_homology(a), oracle::graded_homology(b));
      if (got != want) o.fail("pair " + std::to_string(k) + ": " + str(got) + " vs " + str(want));
    }
    return o;
  });

  criterion(8, "dual reflects torsion and preserves width on the full corpus", 0, [&] {
    Outcome o;
    auto check = [&](const GeometricComplex& c, const std::string& tag) {
      const FUModule t = homology(c).module.torsion();
      const FUModule td = homology(dual(c)).module.torsion();
      if (td.canonical() != reflect(t).canonical()) o.fail(tag + ": " + str(td) + " vs " + str(reflect(t)));
      if (width(dual(c)) != width(c)) o.fail(tag + ": width changed");
    };
    for (std::size_t k = 0; k < corpus.size(); ++k) check(corpus[k].base(), "split complex " + std::to_string(k));
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      check(pairs[k].first, "complex " + std::to_string(2 * k));
      check(pairs[k].second, "complex " + std::to_string(2 * k + 1));
    }
    return o;
  });

  criterion(9, "mu-bar additive over connect sum; rank parity identity", 0, [] {
    Outcome o;
    Rng rng(kSeed + 9);
    for (int k = 0; k < 100; ++k) {
      const LocalClass a{random_combination(rng, 4, 8), 2 * rng.uniform(-5, 5)};
      const LocalClass b{random_combination(rng, 4, 8), 2 * rng.uniform(-5, 5)};
      const ConnectedClass s = connect_sum({hf_conn(a), a.d}, {hf_conn(b), b.d});
      const LocalClass sum{decode(s.module.without_orientation(), s.d), s.d};
      if (predict_mu_bar(sum) != predict_mu_bar(a) + predict_mu_bar(b))
        o.fail("pair " + std::to_string(k) + ": mu-bar not additive");
      for (const LocalClass* c : {&a, &b, &sum}) {
        std::int64_t indices = 0;
        for (const auto& t : c->combo.terms()) indices += t.index;
        const std::int64_t half_d = (c->d / 2).to_integer();
        const auto mod2 = [](std::int64_t v) { return static_cast<int>(((v % 2) + 2) % 2); };
        const int from_combo = mod2(indices + half_d);
        const int from_module = mod2(hf_conn(*c).torsion_rank() + half_d);
        if (from_combo != from_module || predict_rokhlin_parity(*c) != from_combo)
          o.fail(format_expression(c->combo) + ": parity mismatch");
      }
    }
    return o;
  });

  criterion(10, "golden ASCII renders", 0, [] {
    Outcome o;
    const std::string dir = ILOCAL_FIXTURE_DIR;
    const auto lc1 = simplify(parse_expression("X5 - X4 + X2"));
    const auto lc2 = simplify(parse_expression("X4 + X3 + X2"));
    if (render_ascii(hf_conn({lc1, 0})) != read_file(dir + "/render_x5_x4_x2.txt")) o.fail("X5 - X4 + X2 differs");
    if (render_ascii(hf_conn({lc2, 0})) != read_file(dir + "/render_x4_x3_x2.txt")) o.fail("X4 + X3 + X2 differs");
    return o;
  });

  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
