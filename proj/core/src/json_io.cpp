#include "ilocal/json_io.hpp"

#include <map>

#include "ilocal/errors.hpp"

namespace ilocal {

namespace {

template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw Error(std::string(what) + ": " + e.what());
  }
}

const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(std::string("missing member \"") + key + "\"");
  return j.at(key);
}

}  // namespace

json grading_to_json(const Grading& g) { return g.to_fraction(); }

Grading grading_from_json(const json& j) {
  if (j.is_number_integer()) return Grading(j.get<std::int64_t>());
  if (j.is_string()) return Grading::parse(j.get<std::string>());
  throw Error("grading must be a string \"n/d\" or an integer, got " + j.dump());
}

json module_to_json(const FUModule& m) {
  json towers = json::array();
  for (const auto& t : m.towers()) {
    json o;
    o["top"] = grading_to_json(t.top);
    o["length"] = t.is_free() ? json("inf") : json(*t.length);
    o["orientation"] = t.orientation == Orientation::Unoriented ? json(nullptr) : json(to_string(t.orientation));
    towers.push_back(std::move(o));
  }
  return json{{"towers", std::move(towers)}};
}

FUModule module_from_json(const json& j) {
  return guarded("FUModule JSON", [&] {
    FUModule m;
    for (const auto& o : member(j, "towers")) {
      const Grading top = grading_from_json(member(o, "top"));
      const json& len = member(o, "length");
      Orientation orient = Orientation::Unoriented;
      if (o.contains("orientation") && !o.at("orientation").is_null()) {
        const auto s = o.at("orientation").get<std::string>();
        if (s == "down") orient = Orientation::Down;
        else if (s == "up") orient = Orientation::Up;
        else throw Error("orientation must be \"down\", \"up\" or null, got \"" + s + "\"");
      }
      if (len.is_string() && len.get<std::string>() == "inf") {
        if (orient != Orientation::Unoriented) throw Error("free towers carry no orientation");
        m.add(Tower::free(top));
      } else {
        m.add(Tower::torsion(top, len.get<std::int64_t>(), orient));
      }
    }
    return m;
  });
}

json complex_to_json(const GeometricComplex& c) {
  json cells = json::array();
  json bdry = json::array();
  for (int i = 0; i < static_cast<int>(c.size()); ++i) {
    const Cell& e = c.cell(i);
    cells.push_back({{"id", e.id}, {"dim", e.dim}, {"gr", grading_to_json(e.gr)}});
    for (int f : c.faces(i)) bdry.push_back({e.id, c.cell(f).id});
  }
  return json{{"tau", grading_to_json(c.tau())}, {"cells", std::move(cells)}, {"bdry", std::move(bdry)}};
}

json complex_to_json(const SplitComplex& c) {
  json out = complex_to_json(c.base());
  json pairs = json::array();
  for (int i = 0; i < static_cast<int>(c.size()); ++i)
    if (c.J(i) > i) pairs.push_back({c.base().cell(i).id, c.base().cell(c.J(i)).id});
  out["J"] = std::move(pairs);
  out["fixed"] = c.base().cell(c.fixed()).id;
  return out;
}

GeometricComplex geometric_from_json(const json& j) {
  return guarded("complex JSON", [&] {
    std::vector<Cell> cells;
    std::map<std::string, int> index;
    for (const auto& o : member(j, "cells")) {
      Cell e{member(o, "id").get<std::string>(), member(o, "dim").get<int>(), grading_from_json(member(o, "gr"))};
      if (!index.emplace(e.id, static_cast<int>(cells.size())).second)
        throw InvalidComplex("duplicate cell id \"" + e.id + "\"");
      cells.push_back(std::move(e));
    }
    auto lookup = [&](const json& id) {
      const auto s = id.get<std::string>();
      const auto it = index.find(s);
      if (it == index.end()) throw InvalidComplex("unknown cell \"" + s + "\"");
      return it->second;
    };
    std::vector<std::vector<int>> faces(cells.size());
    if (j.contains("bdry")) {
      for (const auto& pair : j.at("bdry")) {
        if (!pair.is_array() || pair.size() != 2) throw Error("bdry entries must be [cell, face] pairs");
        faces[static_cast<std::size_t>(lookup(pair[0]))].push_back(lookup(pair[1]));
      }
    }
    std::vector<Chain> chains;
    chains.reserve(faces.size());
    for (std::size_t i = 0; i < faces.size(); ++i) {
      Chain ch = make_chain(faces[i]);
      if (ch.size() != faces[i].size())
        throw InvalidComplex("repeated incidence on cell \"" + cells[i].id + "\"");
      chains.push_back(std::move(ch));
    }
    GeometricComplex c(std::move(cells), std::move(chains));
    if (j.contains("tau") && grading_from_json(j.at("tau")) != c.tau())
      throw InvalidComplex("tau " + grading_from_json(j.at("tau")).to_fraction() + " does not match the gradings (" +
                           c.tau().to_fraction() + ")");
    return c;
  });
}

SplitComplex split_from_json(const json& j) {
  GeometricComplex base = geometric_from_json(j);
  return guarded("complex JSON", [&] {
    std::vector<int> inv(base.size(), -1);
    for (const auto& pair : member(j, "J")) {
      if (!pair.is_array() || pair.size() != 2) throw Error("J entries must be [cell, image] pairs");
      const int a = base.index_of(pair[0].get<std::string>());
      const int b = base.index_of(pair[1].get<std::string>());
      for (int x : {a, b})
        if (inv[static_cast<std::size_t>(x)] != -1)
          throw NotSplit("cell \"" + base.cell(x).id + "\" appears in more than one J pair");
      inv[static_cast<std::size_t>(a)] = b;
      inv[static_cast<std::size_t>(b)] = a;
    }
    const int fixed = base.index_of(member(j, "fixed").get<std::string>());
    if (inv[static_cast<std::size_t>(fixed)] != -1 && inv[static_cast<std::size_t>(fixed)] != fixed)
      throw NotSplit("fixed cell \"" + base.cell(fixed).id + "\" also appears in a J pair");
    inv[static_cast<std::size_t>(fixed)] = fixed;
    for (std::size_t i = 0; i < inv.size(); ++i)
      if (inv[i] == -1) throw NotSplit("cell \"" + base.cell(static_cast<int>(i)).id + "\" has no J image");
    return SplitComplex(std::move(base), std::move(inv));
  });
}

json local_class_to_json(const LocalClass& c) {
  json terms = json::array();
  for (const auto& t : c.combo.terms()) terms.push_back({{"sign", t.sign == Sign::Plus ? "+" : "-"}, {"index", t.index}});
  return json{{"terms", std::move(terms)}, {"d", grading_to_json(c.d)}};
}

LocalClass local_class_from_json(const json& j) {
  return guarded("LocalClass JSON", [&] {
    std::vector<SignedIndex> terms;
    for (const auto& o : member(j, "terms")) {
      const auto s = member(o, "sign").get<std::string>();
      if (s != "+" && s != "-") throw Error("sign must be \"+\" or \"-\", got \"" + s + "\"");
      terms.push_back({s == "+" ? Sign::Plus : Sign::Minus, member(o, "index").get<int>()});
    }
    const Grading d = j.contains("d") ? grading_from_json(j.at("d")) : Grading(0);
    return LocalClass{LinearCombination(std::move(terms)), d};
  });
}

json report_to_json(const LocalPairReport& r) {
  return json{{"chain_map", r.chain_map},
              {"j_equivariant", r.j_equivariant},
              {"gf_identity", r.gf_identity},
              {"u_localized_iso", r.u_localized_iso},
              {"witness", r.witness ? json(*r.witness) : json(nullptr)}};
}

json fu_chain_to_json(const GeometricComplex& c, const FUChain& x) {
  json out = json::array();
  for (const auto& t : x.terms()) out.push_back({{"cell", c.cell(t.cell).id}, {"u", t.power}});
  return out;
}

json witnesses_to_json(const ReductionResult& r) {
  const GeometricComplex& c = r.complex();
  json free = json::array();
  json torsion = json::array();
  const auto& towers = r.module.towers();
  for (std::size_t k = 0; k < r.free_cycles.size(); ++k)
    free.push_back({{"top", grading_to_json(towers[k].top)}, {"cycle", fu_chain_to_json(c, r.free_cycles[k])}});
  for (std::size_t k = 0; k < r.torsion_pairs.size(); ++k) {
    const Tower& t = towers[r.free_cycles.size() + k];
    const TorsionPair& p = r.torsion_pairs[k];
    torsion.push_back({{"top", grading_to_json(t.top)},
                       {"length", p.exponent},
                       {"cycle", fu_chain_to_json(c, p.cycle)},
                       {"killer", fu_chain_to_json(c, p.killer)}});
  }
  return json{{"free", std::move(free)}, {"torsion", std::move(torsion)}};
}

}  // namespace ilocal
