#include "ilocal/doubling.hpp"

#include <algorithm>

#include "ilocal/errors.hpp"
#include "ilocal/homology.hpp"

namespace ilocal {

namespace {

// Smallest level k such that omega<k>, J.omega<k>, theta<k> are all fresh:
// one past the highest level already present, ignoring dual markers.
int next_level(const GeometricComplex& c) {
  int level = 0;
  for (const auto& cell : c.cells()) {
    std::string_view id = cell.id;
    while (!id.empty() && id.back() == '*') id.remove_suffix(1);
    for (std::string_view prefix : {"theta", "omega", "J.omega"}) {
      if (id.size() > prefix.size() && id.substr(0, prefix.size()) == prefix) {
        const auto rest = id.substr(prefix.size());
        if (std::all_of(rest.begin(), rest.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
          level = std::max(level, std::stoi(std::string(rest)));
      }
    }
  }
  return level + 1;
}

void require_admissible(const SplitComplex& x, std::int64_t delta) {
  const Width w = width(x);
  if (!admits(w, delta))
    throw WidthExceeded("2 * delta = " + std::to_string(2 * delta) + " exceeds width " + to_string(w));
}

constexpr int kAlpha = 0;
constexpr int kJAlpha = 1;
constexpr int kBeta = 2;

}  // namespace

DoubleResult double_complex(const SplitComplex& x, std::int64_t delta, const Splitting& s,
                            DoublingMutation mutation) {
  validate_splitting(x, s);
  require_admissible(x, delta);

  const int n = static_cast<int>(x.size());
  const int eta = x.fixed();
  const GeometricComplex& base = x.base();

  DoubleResult out;
  out.eta = eta;
  out.cell_map.assign(static_cast<std::size_t>(n), -1);
  std::vector<Cell> cells;
  cells.reserve(static_cast<std::size_t>(n + 2));
  for (int i = 0; i < n; ++i) {
    if (i == eta) continue;
    out.cell_map[static_cast<std::size_t>(i)] = static_cast<int>(cells.size());
    cells.push_back(base.cell(i));
  }
  out.omega = n - 1;
  out.j_omega = n;
  out.theta = n + 1;

  const Cell& eta_cell = base.cell(eta);
  const int level = next_level(base);
  Grading theta_gr = eta_cell.gr - 2 * delta;
  if (mutation == DoublingMutation::ThetaGrading && delta >= 1) theta_gr += 2;
  cells.push_back({"omega" + std::to_string(level), eta_cell.dim, eta_cell.gr});
  cells.push_back({"J.omega" + std::to_string(level), eta_cell.dim, eta_cell.gr});
  cells.push_back({"theta" + std::to_string(level), eta_cell.dim + 1, theta_gr});

  std::vector<int> involution(static_cast<std::size_t>(n + 2));
  for (int i = 0; i < n; ++i)
    if (i != eta) involution[static_cast<std::size_t>(out.cell_map[static_cast<std::size_t>(i)])] =
        out.cell_map[static_cast<std::size_t>(x.J(i))];
  involution[static_cast<std::size_t>(out.omega)] = out.j_omega;
  involution[static_cast<std::size_t>(out.j_omega)] = out.omega;
  involution[static_cast<std::size_t>(out.theta)] = out.theta;

  auto remap = [&](const Chain& c) {
    std::vector<int> r;
    for (int i : c)
      if (i != eta) r.push_back(out.cell_map[static_cast<std::size_t>(i)]);
    return make_chain(std::move(r));
  };
  auto apply_new_j = [&](const Chain& c) {
    std::vector<int> r;
    for (int i : c) r.push_back(involution[static_cast<std::size_t>(i)]);
    return make_chain(std::move(r));
  };

  std::vector<Chain> faces(static_cast<std::size_t>(n + 2));
  for (int i = 0; i < n; ++i) {
    if (i == eta || !s.contains(i)) continue;
    const Decomposition dec = decompose(x, base.faces(i), s);
    Chain d = remap(base.faces(i));  // a + (1 + J) b
    if (dec.eps) {
      d = chain_sum(d, {out.omega});
    } else if (chain_contains(base.boundary(dec.b), eta) && mutation != DoublingMutation::DropThetaTerm) {
      d = chain_sum(d, {out.theta});
    }
    const int ni = out.cell_map[static_cast<std::size_t>(i)];
    faces[static_cast<std::size_t>(involution[static_cast<std::size_t>(ni)])] = apply_new_j(d);
    faces[static_cast<std::size_t>(ni)] = std::move(d);
  }
  const Decomposition eta_dec = decompose(x, base.faces(eta), s);
  out.zeta = remap(eta_dec.b);
  faces[static_cast<std::size_t>(out.omega)] = remap(base.faces(eta));
  faces[static_cast<std::size_t>(out.j_omega)] = remap(base.faces(eta));
  faces[static_cast<std::size_t>(out.theta)] = make_chain({out.omega, out.j_omega});

  out.complex = SplitComplex(GeometricComplex(std::move(cells), std::move(faces)), std::move(involution));

  out.splitting.chosen.assign(static_cast<std::size_t>(n + 2), false);
  for (int i = 0; i < n; ++i)
    if (i != eta && s.contains(i)) out.splitting.chosen[static_cast<std::size_t>(out.cell_map[static_cast<std::size_t>(i)])] = true;
  out.splitting.chosen[static_cast<std::size_t>(out.omega)] = true;
  return out;
}

SplitComplex half(const SplitComplex& x, std::int64_t delta, DoublingMutation mutation) {
  require_admissible(x, delta);
  const SplitComplex dx = dual(x);
  return dual(double_complex(dx, delta, canonical_splitting(dx), mutation).complex);
}

ChainMap local_map_f(const SplitComplex& x, std::int64_t delta, const Splitting& s,
                     DoublingMutation mutation) {
  const DoubleResult d = double_complex(x, delta, s, mutation);
  const SplitComplex target = tensor(x, basis_complex(static_cast<int>(delta)));
  const int eta = x.fixed();
  auto at = [](int cell, int factor) { return cell * 3 + factor; };

  std::vector<Chain> images(d.complex.size());
  for (int i = 0; i < static_cast<int>(x.size()); ++i) {
    if (i == eta || !s.contains(i)) continue;
    // f(c) = c.alpha + (Jb).beta
    const Decomposition dec = decompose(x, x.base().faces(i), s);
    std::vector<int> img{at(i, kAlpha)};
    for (int b : dec.b) img.push_back(at(x.J(b), kBeta));
    const Chain fc = make_chain(std::move(img));
    images[static_cast<std::size_t>(d.cell_map[static_cast<std::size_t>(i)])] = fc;
    images[static_cast<std::size_t>(d.cell_map[static_cast<std::size_t>(x.J(i))])] = target.apply_J(fc);
  }
  // f(omega) = eta.alpha + (J zeta).beta
  const Decomposition eta_dec = decompose(x, x.base().faces(eta), s);
  std::vector<int> fw{at(eta, kAlpha)};
  for (int z : eta_dec.b) fw.push_back(at(x.J(z), kBeta));
  const Chain f_omega = make_chain(std::move(fw));
  images[static_cast<std::size_t>(d.omega)] = f_omega;
  images[static_cast<std::size_t>(d.j_omega)] = target.apply_J(f_omega);
  images[static_cast<std::size_t>(d.theta)] = {at(eta, kBeta)};
  return lift_cellular(d.complex, target, images);
}

ChainMap local_map_g(const SplitComplex& x, std::int64_t delta, const Splitting& s,
                     DoublingMutation mutation) {
  const DoubleResult d = double_complex(x, delta, s, mutation);
  const SplitComplex source = tensor(x, basis_complex(static_cast<int>(delta)));
  const int eta = x.fixed();
  auto at = [](int cell, int factor) { return cell * 3 + factor; };

  std::vector<Chain> images(source.size());
  for (int i = 0; i < static_cast<int>(x.size()); ++i) {
    if (i == eta || !s.contains(i)) continue;
    const int c = d.cell_map[static_cast<std::size_t>(i)];
    const int jc = d.cell_map[static_cast<std::size_t>(x.J(i))];
    const bool touches_eta = chain_contains(x.base().faces(i), eta);
    Chain with_theta = {c};
    if (touches_eta) with_theta = make_chain({c, d.theta});
    images[static_cast<std::size_t>(at(i, kAlpha))] = {c};
    images[static_cast<std::size_t>(at(i, kJAlpha))] = with_theta;
    images[static_cast<std::size_t>(at(x.J(i), kJAlpha))] = {jc};
    images[static_cast<std::size_t>(at(x.J(i), kAlpha))] = d.complex.apply_J(with_theta);
    // c.beta and Jc.beta map to zero
  }
  images[static_cast<std::size_t>(at(eta, kAlpha))] = {d.omega};
  images[static_cast<std::size_t>(at(eta, kJAlpha))] = {d.j_omega};
  images[static_cast<std::size_t>(at(eta, kBeta))] = {d.theta};
  return lift_cellular(source, d.complex, images);
}

LocalPairReport verify_local_pair(const ChainMap& f, const ChainMap& g) {
  LocalPairReport report;
  auto note = [&](const std::string& who, const MapCheck& m) {
    if (!m.ok && !report.witness) report.witness = who + ": " + m.witness;
    return m.ok;
  };

  const bool f_graded = note("f", check_grading(f));
  const bool f_chain = f_graded && note("f", check_chain_map(f));
  const bool g_graded = note("g", check_grading(g));
  const bool g_chain = g_graded && note("g", check_chain_map(g));
  report.chain_map = f_chain && g_chain;

  const bool fj = note("f", check_j_equivariant(f));
  const bool gj = note("g", check_j_equivariant(g));
  report.j_equivariant = fj && gj;

  if (f.target.size() != g.source.size() || g.target.size() != f.source.size())
    throw Error("verify_local_pair: f and g do not compose");
  const ChainMap gf = compose(g, f);
  report.gf_identity = true;
  for (int cell = 0; cell < static_cast<int>(f.source.size()); ++cell) {
    const FUChain expected({{cell, 0}});
    if (gf.image[static_cast<std::size_t>(cell)] != expected) {
      report.gf_identity = false;
      if (!report.witness)
        report.witness = "g o f: " + f.source.base().cell(cell).id + " -> " +
                         describe(f.source.base(), gf.image[static_cast<std::size_t>(cell)]);
      break;
    }
  }

  if (report.chain_map) {
    try {
      const bool fi = is_u_localized_iso(f);
      const bool gi = is_u_localized_iso(g);
      report.u_localized_iso = fi && gi;
      if (!report.u_localized_iso && !report.witness)
        report.witness = std::string(fi ? "g" : "f") + ": free generator maps to a torsion class";
    } catch (const Error& e) {
      if (!report.witness) report.witness = e.what();
    }
  } else if (!report.witness) {
    report.witness = "U-localized iso not evaluated: not a chain map";
  }
  return report;
}

}  // namespace ilocal
