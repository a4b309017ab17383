#include "ilocal/random.hpp"

#include <algorithm>
#include <numeric>

#include "ilocal/errors.hpp"

namespace ilocal {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw Error("Rng::uniform: empty range");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(next() % span);
}

namespace {

// Split skeleton without gradings.
struct Skeleton {
  std::vector<int> dim;
  std::vector<Chain> faces;
  std::vector<int> J;
  int fixed = 0;

  int add(int d, Chain f) {
    dim.push_back(d);
    faces.push_back(std::move(f));
    J.push_back(-1);
    return static_cast<int>(dim.size()) - 1;
  }
  int size() const { return static_cast<int>(dim.size()); }
  Chain apply_J(const Chain& c) const {
    std::vector<int> r;
    for (int x : c) r.push_back(J[static_cast<std::size_t>(x)]);
    return make_chain(std::move(r));
  }
};

// sigma, J.sigma with the boundary of z and J.z; tau, J.tau filling in.
void expand(Skeleton& s, int z) {
  const int jz = s.J[static_cast<std::size_t>(z)];
  const int d = s.dim[static_cast<std::size_t>(z)];
  const int sigma = s.add(d, s.faces[static_cast<std::size_t>(z)]);
  const int jsigma = s.add(d, s.faces[static_cast<std::size_t>(jz)]);
  s.J[static_cast<std::size_t>(sigma)] = jsigma;
  s.J[static_cast<std::size_t>(jsigma)] = sigma;
  const int tau = s.add(d + 1, make_chain({sigma, z}));
  const int jtau = s.add(d + 1, make_chain({jsigma, jz}));
  s.J[static_cast<std::size_t>(tau)] = jtau;
  s.J[static_cast<std::size_t>(jtau)] = tau;
}

// eta -> omega, J.omega, theta, with omega reusing eta's slot. Of each
// pair touching eta the lower index keeps omega and its partner switches to
// J.omega; cells whose boundary then squares to omega + J.omega pick up
// theta.
void double_skeleton(Skeleton& s) {
  const int eta = s.fixed;
  const int d = s.dim[static_cast<std::size_t>(eta)];
  const int jomega = s.add(d, s.faces[static_cast<std::size_t>(eta)]);
  s.J[static_cast<std::size_t>(eta)] = jomega;
  s.J[static_cast<std::size_t>(jomega)] = eta;
  for (int i = 0; i < jomega; ++i) {
    const int ji = s.J[static_cast<std::size_t>(i)];
    if (i == eta || ji < i || !chain_contains(s.faces[static_cast<std::size_t>(i)], eta)) continue;
    s.faces[static_cast<std::size_t>(ji)] = chain_sum(s.faces[static_cast<std::size_t>(ji)], make_chain({eta, jomega}));
  }
  const int theta = s.add(d + 1, make_chain({eta, jomega}));
  s.J[static_cast<std::size_t>(theta)] = theta;
  s.fixed = theta;
  const Chain pair = make_chain({eta, jomega});
  for (int i = 0; i < theta; ++i) {
    if (s.dim[static_cast<std::size_t>(i)] != d + 2) continue;
    std::vector<int> dd;
    for (int f : s.faces[static_cast<std::size_t>(i)])
      for (int g : s.faces[static_cast<std::size_t>(f)]) dd.push_back(g);
    if (make_chain(dd) == pair) s.faces[static_cast<std::size_t>(i)] = chain_sum(s.faces[static_cast<std::size_t>(i)], {theta});
  }
}

void dualize(Skeleton& s) {
  const int n = *std::max_element(s.dim.begin(), s.dim.end());
  std::vector<std::vector<int>> cof(static_cast<std::size_t>(s.size()));
  for (int i = 0; i < s.size(); ++i)
    for (int f : s.faces[static_cast<std::size_t>(i)]) cof[static_cast<std::size_t>(f)].push_back(i);
  for (int i = 0; i < s.size(); ++i) {
    s.dim[static_cast<std::size_t>(i)] = n - s.dim[static_cast<std::size_t>(i)];
    s.faces[static_cast<std::size_t>(i)] = make_chain(cof[static_cast<std::size_t>(i)]);
  }
}

bool skeleton_ok(const Skeleton& s) {
  for (int i = 0; i < s.size(); ++i) {
    std::vector<int> dd;
    for (int f : s.faces[static_cast<std::size_t>(i)])
      for (int g : s.faces[static_cast<std::size_t>(f)]) dd.push_back(g);
    if (!make_chain(dd).empty()) return false;
    if (s.apply_J(s.faces[static_cast<std::size_t>(i)]) != s.faces[static_cast<std::size_t>(s.J[static_cast<std::size_t>(i)])])
      return false;
  }
  return true;
}

Grading random_offset(Rng& rng, bool fractional) {
  switch (rng.uniform(0, fractional ? 5 : 3)) {
    case 0:
    case 1:
    case 2:
      return Grading(0);
    case 3:
      return Grading(1);
    case 4:
      return Grading(1, 2);
    default:
      return Grading(-3, 4);
  }
}

}  // namespace

SplitComplex random_split_complex(Rng& rng, const SplitGenOptions& opt) {
  Skeleton s;
  for (int attempt = 0;; ++attempt) {
    s = Skeleton{};
    s.add(0, {});
    s.J[0] = 0;
    s.fixed = 0;
    for (int step = 0; step < opt.steps; ++step) {
      const int room = opt.max_cells - s.size();
      const auto op = rng.uniform(0, 3);
      if (op <= 1 && room >= 4) {
        expand(s, static_cast<int>(rng.uniform(0, s.size() - 1)));
      } else if (op == 2 && room >= 2) {
        double_skeleton(s);
      } else if (op == 3) {
        dualize(s);
      }
    }
    if (skeleton_ok(s)) break;
    if (attempt == 100) throw Error("random_split_complex: no valid skeleton after 100 attempts");
  }

  // Gradings by increasing dimension; J-partners share gr.
  const Grading offset = random_offset(rng, opt.fractional_offsets);
  const std::int64_t base_gap = rng.uniform(1, 3);
  std::vector<Grading> gr(static_cast<std::size_t>(s.size()));
  std::vector<bool> done(static_cast<std::size_t>(s.size()), false);
  std::vector<int> order(static_cast<std::size_t>(s.size()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return s.dim[static_cast<std::size_t>(a)] < s.dim[static_cast<std::size_t>(b)]; });
  for (int i : order) {
    if (done[static_cast<std::size_t>(i)]) continue;
    const auto& f = s.faces[static_cast<std::size_t>(i)];
    Grading g;
    if (f.empty()) {
      g = offset - 2 * rng.uniform(0, 2);
    } else {
      g = gr[static_cast<std::size_t>(f.front())];
      for (int x : f) g = std::min(g, gr[static_cast<std::size_t>(x)]);
      const std::int64_t gap = rng.chance(opt.zero_gap_percent) ? 0 : base_gap + rng.uniform(0, 2);
      g -= 2 * gap;
    }
    const int j = s.J[static_cast<std::size_t>(i)];
    gr[static_cast<std::size_t>(i)] = g;
    gr[static_cast<std::size_t>(j)] = g;
    done[static_cast<std::size_t>(i)] = done[static_cast<std::size_t>(j)] = true;
  }

  // Ids: pairs are "e<k>" / "J.e<k>", the fixed cell "eta".
  std::vector<Cell> cells(static_cast<std::size_t>(s.size()));
  int k = 0;
  for (int i = 0; i < s.size(); ++i) {
    const int j = s.J[static_cast<std::size_t>(i)];
    if (i == s.fixed) {
      cells[static_cast<std::size_t>(i)].id = "eta";
    } else if (i < j) {
      cells[static_cast<std::size_t>(i)].id = "e" + std::to_string(k);
      cells[static_cast<std::size_t>(j)].id = "J.e" + std::to_string(k);
      ++k;
    }
    cells[static_cast<std::size_t>(i)].dim = s.dim[static_cast<std::size_t>(i)];
    cells[static_cast<std::size_t>(i)].gr = gr[static_cast<std::size_t>(i)];
  }
  return SplitComplex(GeometricComplex(std::move(cells), s.faces), s.J);
}

Splitting random_splitting(Rng& rng, const SplitComplex& x) {
  Splitting s;
  s.chosen.assign(x.size(), false);
  for (int i = 0; i < static_cast<int>(x.size()); ++i) {
    const int j = x.J(i);
    if (j <= i) continue;
    s.chosen[static_cast<std::size_t>(rng.chance(50) ? i : j)] = true;
  }
  return s;
}

GeometricComplex random_complex(Rng& rng, int max_cells) {
  const int n = static_cast<int>(rng.uniform(1, max_cells));
  const Grading offset = random_offset(rng, true);
  std::vector<int> dim;
  std::vector<Grading> gr;
  std::vector<std::vector<bool>> d;  // d[row][col]: row is a face of col

  auto push = [&](int dm, Grading g) {
    dim.push_back(dm);
    gr.push_back(g);
  };
  std::vector<std::pair<int, int>> pairs;  // (face, cell)
  while (static_cast<int>(dim.size()) < n) {
    const int dm = static_cast<int>(rng.uniform(0, 2));
    const Grading g = offset - 2 * rng.uniform(0, 4);
    if (static_cast<int>(dim.size()) + 2 <= n && rng.chance(55)) {
      push(dm, g);
      push(dm + 1, g - 2 * rng.uniform(0, 3));
      pairs.emplace_back(static_cast<int>(dim.size()) - 2, static_cast<int>(dim.size()) - 1);
    } else {
      push(dm, g);
    }
  }
  const std::size_t sz = dim.size();
  d.assign(sz, std::vector<bool>(sz, false));
  for (auto [f, c] : pairs) d[static_cast<std::size_t>(f)][static_cast<std::size_t>(c)] = true;

  // x' = x + y for dim(x) = dim(y) and gr(y) >= gr(x): D <- E D E.
  const int ops = static_cast<int>(rng.uniform(0, 3 * static_cast<std::int64_t>(sz)));
  for (int op = 0; op < ops; ++op) {
    const auto x = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(sz) - 1));
    const auto y = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(sz) - 1));
    if (x == y || dim[x] != dim[y] || gr[y] < gr[x]) continue;
    // E = I + e_{y,x}: column x of D gains column y... as E D E with
    // E[y][x] = 1: (E D)[y][*] += D[x][*], then (. E)[*][x] += [*][y].
    for (std::size_t c = 0; c < sz; ++c)
      if (d[x][c]) d[y][c] = !d[y][c];
    for (std::size_t r = 0; r < sz; ++r)
      if (d[r][y]) d[r][x] = !d[r][x];
  }

  std::vector<Cell> cells;
  std::vector<Chain> faces(sz);
  for (std::size_t i = 0; i < sz; ++i) {
    cells.push_back({"c" + std::to_string(i), dim[i], gr[i]});
    std::vector<int> f;
    for (std::size_t r = 0; r < sz; ++r)
      if (d[r][i]) f.push_back(static_cast<int>(r));
    faces[i] = make_chain(std::move(f));
  }
  return GeometricComplex(std::move(cells), std::move(faces));
}

LinearCombination random_combination(Rng& rng, int max_terms, int max_index) {
  const auto n = rng.uniform(0, std::max(0, max_terms));
  std::vector<SignedIndex> terms;
  // Each index carries a single sign so the result is already simplified.
  std::vector<int> sign_of(static_cast<std::size_t>(max_index + 1), 0);
  for (std::int64_t k = 0; k < n && max_index >= 1; ++k) {
    const int i = static_cast<int>(rng.uniform(1, max_index));
    int& sg = sign_of[static_cast<std::size_t>(i)];
    if (sg == 0) sg = rng.chance(50) ? 1 : -1;
    terms.push_back({sg > 0 ? Sign::Plus : Sign::Minus, i});
  }
  return simplify(LinearCombination(std::move(terms)));
}

}  // namespace ilocal
