#include "ilocal/tower.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "ilocal/errors.hpp"

namespace ilocal {

Tower Tower::torsion(Grading top, std::int64_t length, Orientation o) {
  if (length <= 0) throw Error("torsion tower length must be positive");
  return Tower{top, length, o};
}

Tower Tower::free(Grading top) { return Tower{top, std::nullopt, Orientation::Unoriented}; }

Grading Tower::bottom() const {
  if (is_free()) throw Error("free tower has no bottom");
  return top - 2 * (*length - 1);
}

Grading Tower::head() const { return orientation == Orientation::Up ? bottom() : top; }

Grading Tower::tail() const { return orientation == Orientation::Up ? top : bottom(); }

void FUModule::append(const FUModule& other) {
  towers_.insert(towers_.end(), other.towers_.begin(), other.towers_.end());
}

std::size_t FUModule::free_rank() const {
  return static_cast<std::size_t>(
      std::count_if(towers_.begin(), towers_.end(), [](const Tower& t) { return t.is_free(); }));
}

std::int64_t FUModule::torsion_rank() const {
  std::int64_t total = 0;
  for (const auto& t : towers_)
    if (!t.is_free()) total += *t.length;
  return total;
}

FUModule FUModule::torsion() const {
  FUModule out;
  for (const auto& t : towers_)
    if (!t.is_free()) out.add(t);
  return out;
}

FUModule FUModule::free_part() const {
  FUModule out;
  for (const auto& t : towers_)
    if (t.is_free()) out.add(t);
  return out;
}

std::optional<Grading> FUModule::free_top() const {
  for (const auto& t : towers_)
    if (t.is_free()) return t.top;
  return std::nullopt;
}

namespace {

// Free towers compare as longer than any torsion tower.
bool canonical_less(const Tower& a, const Tower& b) {
  if (a.top != b.top) return a.top > b.top;
  if (a.length != b.length) {
    if (!a.length) return true;
    if (!b.length) return false;
    return *a.length > *b.length;
  }
  return static_cast<int>(a.orientation) < static_cast<int>(b.orientation);
}

}  // namespace

FUModule FUModule::canonical() const {
  std::vector<Tower> sorted = towers_;
  std::sort(sorted.begin(), sorted.end(), canonical_less);
  return FUModule(std::move(sorted));
}

FUModule FUModule::without_orientation() const {
  std::vector<Tower> out = towers_;
  for (auto& t : out) t.orientation = Orientation::Unoriented;
  return FUModule(std::move(out));
}

bool isomorphic(const FUModule& a, const FUModule& b) {
  return a.without_orientation().canonical() == b.without_orientation().canonical();
}

bool contains_summands(const FUModule& whole, const FUModule& part) {
  std::vector<Tower> pool = whole.without_orientation().canonical().towers();
  const FUModule stripped = part.without_orientation();
  for (const auto& t : stripped.towers()) {
    auto it = std::find(pool.begin(), pool.end(), t);
    if (it == pool.end()) return false;
    pool.erase(it);
  }
  return true;
}

FUModule shift(const FUModule& m, const Grading& sigma) {
  std::vector<Tower> out = m.towers();
  for (auto& t : out) t.top -= sigma;
  return FUModule(std::move(out));
}

FUModule reflect(const FUModule& m) {
  std::vector<Tower> out;
  out.reserve(m.size());
  for (const auto& t : m.towers()) {
    if (t.is_free()) throw Error("reflect: free towers are not reflected");
    Orientation o = t.orientation;
    if (o == Orientation::Down) o = Orientation::Up;
    else if (o == Orientation::Up) o = Orientation::Down;
    out.push_back(Tower{Grading(1) - t.bottom(), t.length, o});
  }
  return FUModule(std::move(out));
}

std::int64_t signed_rank(const FUModule& m) {
  std::int64_t total = 0;
  for (const auto& t : m.towers()) {
    if (t.is_free()) continue;
    switch (t.orientation) {
      case Orientation::Down: total += *t.length; break;
      case Orientation::Up: total -= *t.length; break;
      case Orientation::Unoriented:
        throw Error("signed_rank: tower " + to_string(t) + " is unoriented");
    }
  }
  return total;
}

FUModule kunneth(const FUModule& a, const FUModule& b) {
  FUModule out;
  for (const auto& s : a.towers()) {
    for (const auto& t : b.towers()) {
      const Grading top = s.top + t.top;
      if (s.is_free() && t.is_free()) {
        out.add(Tower::free(top));
      } else if (s.is_free() || t.is_free()) {
        out.add(Tower::torsion(top, s.is_free() ? *t.length : *s.length));
      } else {
        const std::int64_t lo = std::min(*s.length, *t.length);
        const std::int64_t hi = std::max(*s.length, *t.length);
        out.add(Tower::torsion(top, lo));
        // Tor(F[U]/U^l, F[U]/U^m) sits one degree up from where the
        // resolution places it.
        out.add(Tower::torsion(top - 2 * hi + 1, lo));
      }
    }
  }
  return out.canonical();
}

std::string to_string(Orientation o) {
  switch (o) {
    case Orientation::Down: return "down";
    case Orientation::Up: return "up";
    case Orientation::Unoriented: break;
  }
  return "none";
}

std::string to_string(const Tower& t) {
  std::ostringstream os;
  if (t.is_free()) {
    os << "Free_" << t.top;
  } else {
    os << "T_" << t.top << "(" << *t.length << ")";
    if (t.orientation == Orientation::Down) os << "v";
    if (t.orientation == Orientation::Up) os << "^";
  }
  return os.str();
}

std::string to_string(const FUModule& m) {
  if (m.empty()) return "{}";
  std::string s = "{";
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) s += ", ";
    s += to_string(m.towers()[i]);
  }
  return s + "}";
}

std::ostream& operator<<(std::ostream& os, const Tower& t) { return os << to_string(t); }
std::ostream& operator<<(std::ostream& os, const FUModule& m) { return os << to_string(m); }

}  // namespace ilocal
