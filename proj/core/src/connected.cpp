#include "ilocal/connected.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ilocal/doubling.hpp"
#include "ilocal/errors.hpp"

namespace ilocal {

namespace {

bool term_order(const SignedIndex& a, const SignedIndex& b) {
  if (a.index != b.index) return a.index > b.index;
  return a.sign == Sign::Plus && b.sign == Sign::Minus;
}

}  // namespace

LinearCombination::LinearCombination(std::vector<SignedIndex> terms) : terms_(std::move(terms)) {
  for (const auto& t : terms_)
    if (t.index <= 0) throw Error("X_i requires a positive index, got " + std::to_string(t.index));
  std::stable_sort(terms_.begin(), terms_.end(), term_order);
}

bool LinearCombination::has_cancelling_pair() const {
  std::set<int> plus, minus;
  for (const auto& t : terms_) (t.sign == Sign::Plus ? plus : minus).insert(t.index);
  return std::any_of(plus.begin(), plus.end(), [&](int i) { return minus.count(i) > 0; });
}

LinearCombination LinearCombination::negated() const {
  std::vector<SignedIndex> out = terms_;
  for (auto& t : out) t.sign = t.sign == Sign::Plus ? Sign::Minus : Sign::Plus;
  LinearCombination lc(std::move(out));
  lc.simplified_ = simplified_;
  return lc;
}

LinearCombination operator+(const LinearCombination& a, const LinearCombination& b) {
  std::vector<SignedIndex> all = a.terms_;
  all.insert(all.end(), b.terms_.begin(), b.terms_.end());
  return LinearCombination(std::move(all));
}

LinearCombination simplify(const LinearCombination& lc) {
  std::map<int, int, std::greater<>> net;
  for (const auto& t : lc.terms()) net[t.index] += t.sign == Sign::Plus ? 1 : -1;
  std::vector<SignedIndex> out;
  for (const auto& [index, count] : net)
    for (int k = 0; k < std::abs(count); ++k) out.push_back({count > 0 ? Sign::Plus : Sign::Minus, index});
  LinearCombination result(std::move(out));
  result.simplified_ = true;
  return result;
}

FUModule place_towers(const std::vector<SignedIndex>& terms) {
  FUModule out;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const SignedIndex& t = terms[k];
    const bool down = t.sign == Sign::Plus;
    Grading head;
    if (k == 0) {
      head = down ? Grading(0) : Grading(1);
    } else {
      const Tower& prev = out.towers().back();
      const bool prev_down = prev.orientation == Orientation::Down;
      head = prev.tail();
      if (down && prev_down) head -= 1;
      if (!down && !prev_down) head += 1;
    }
    const Grading top = down ? head : head + 2 * (t.index - 1);
    out.add(Tower::torsion(top, t.index, down ? Orientation::Down : Orientation::Up));
  }
  return out;
}

FUModule connected_homology(const LinearCombination& lc) {
  if (!lc.simplified()) throw NotSimplified("combination must be simplified before tower placement");
  return place_towers(lc.terms());
}

FUModule hf_conn(const LocalClass& cls) { return shift(connected_homology(cls.combo), -cls.d + 1); }

SplitComplex representative(const LinearCombination& lc) {
  SplitComplex s = build_trivial();
  for (const auto& t : lc.terms()) {
    if (t.sign == Sign::Plus) s = double_complex(s, t.index).complex;
    else s = half(s, t.index);
  }
  return s;
}

LinearCombination decode(const FUModule& m, const Grading& d) {
  // Work in the frame of place_towers: undo the shift by d - 1.
  std::map<std::int64_t, std::vector<Grading>, std::greater<>> by_length;
  for (const auto& t : m.towers()) {
    if (t.is_free()) throw NotInXForm("decode: free towers are not part of connected homology");
    const Grading top = t.top - (d - 1);
    if (!top.is_integer())
      throw NotInXForm("decode: tower " + to_string(t) + " lies off the grading coset of d = " + d.to_string());
    by_length[*t.length].push_back(top);
  }

  struct ChainOfTowers {
    std::int64_t length;
    std::size_t count;
    Grading top;
    Grading bottom;
  };
  std::vector<ChainOfTowers> chains;
  for (auto& [length, tops] : by_length) {
    std::sort(tops.begin(), tops.end(), std::greater<>());
    for (std::size_t k = 1; k < tops.size(); ++k) {
      if (tops[k] != tops[k - 1] - 2 * length + 1)
        throw NotInXForm("decode: towers of length " + std::to_string(length) + " do not form a chain");
    }
    chains.push_back({length, tops.size(), tops.front(), tops.back() - 2 * (length - 1)});
  }

  std::vector<SignedIndex> terms;
  bool prev_down = true;
  Grading prev_tail;
  for (std::size_t k = 0; k < chains.size(); ++k) {
    const ChainOfTowers& c = chains[k];
    bool down = false;
    if (k == 0) {
      if (c.top == Grading(0)) down = true;
      else if (c.bottom == Grading(1)) down = false;
      else
        throw NotInXForm("decode: leading chain of length " + std::to_string(c.length) +
                         " has its head at neither d - 1 (down) nor d (up)");
    } else {
      const Grading down_head = prev_down ? prev_tail - 1 : prev_tail;
      const Grading up_head = prev_down ? prev_tail : prev_tail + 1;
      if (c.top == down_head) down = true;
      else if (c.bottom == up_head) down = false;
      else
        throw NotInXForm("decode: chain of length " + std::to_string(c.length) +
                         " is not placed relative to the previous tail by any rule");
    }
    for (std::size_t j = 0; j < c.count; ++j)
      terms.push_back({down ? Sign::Plus : Sign::Minus, static_cast<int>(c.length)});
    prev_down = down;
    prev_tail = down ? c.bottom : c.top;
  }
  return simplify(LinearCombination(std::move(terms)));
}

ConnectedClass connect_sum(const ConnectedClass& a, const ConnectedClass& b) {
  const LinearCombination la = decode(a.module, a.d);
  const LinearCombination lb = decode(b.module, b.d);
  const Grading d = a.d + b.d;
  return {hf_conn({simplify(la + lb), d}), d};
}

Grading predict_mu_bar(const LocalClass& cls) {
  return Grading(signed_rank(connected_homology(cls.combo))) - cls.d / 2;
}

int predict_rokhlin_parity(const LocalClass& cls) {
  const Grading half_d = cls.d / 2;
  if (!half_d.is_integer()) throw Error("Rokhlin parity needs d / 2 to be an integer, got d = " + cls.d.to_string());
  const std::int64_t v = connected_homology(cls.combo).torsion_rank() + half_d.to_integer();
  return static_cast<int>(((v % 2) + 2) % 2);
}

}  // namespace ilocal
