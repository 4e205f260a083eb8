#include <algorithm>
#include <unordered_set>

#include "opwlab/error.hpp"
#include "opwlab/width.hpp"

namespace opw {
namespace {

// States are (finished, active) pairs. Non-anchor vertices whose neighbours
// have all been introduced are retired eagerly; keeping them active never
// helps. The anchor is never retired, so it ends up in the last bag.
class BagSearch {
 public:
  BagSearch(const Graph& g, int k, int anchor)
      : adj_(g.adjacency_masks()), full_(low_mask(g.order())), k_(k), anchor_(anchor) {}

  std::optional<PathDecomposition> run() {
    if (!search(0, 0)) return std::nullopt;
    return replay();
  }

 private:
  Mask retirable(Mask finished, Mask active) const {
    Mask seen = finished | active;
    Mask out = 0;
    for (Mask t = active; t != 0; t &= t - 1) {
      int u = lowest_bit(t);
      if (u == anchor_) continue;
      if ((adj_[static_cast<std::size_t>(u)] & ~seen) == 0) out |= bit(u);
    }
    return out;
  }

  bool search(Mask finished, Mask active) {
    Mask r = retirable(finished, active);
    finished |= r;
    active &= ~r;
    if ((finished | active) == full_) return true;
    if (!visited_.insert(finished | (active << 32)).second) return false;
    if (popcount(active) > k_) return false;
    for (Mask rest = full_ & ~(finished | active); rest != 0; rest &= rest - 1) {
      int v = lowest_bit(rest);
      intro_.push_back(v);
      if (search(finished, active | bit(v))) return true;
      intro_.pop_back();
    }
    return false;
  }

  static void append(PathDecomposition& pd, std::vector<int> bag) {
    if (!pd.bags.empty() &&
        std::includes(pd.bags.back().begin(), pd.bags.back().end(), bag.begin(), bag.end()))
      return;
    while (!pd.bags.empty() && std::includes(bag.begin(), bag.end(), pd.bags.back().begin(), pd.bags.back().end()))
      pd.bags.pop_back();
    pd.bags.push_back(std::move(bag));
  }

  static std::vector<int> members(Mask m) {
    std::vector<int> out;
    for (; m != 0; m &= m - 1) out.push_back(lowest_bit(m));
    return out;
  }

  PathDecomposition replay() const {
    PathDecomposition pd;
    Mask finished = 0;
    Mask active = 0;
    for (int v : intro_) {
      active |= bit(v);
      Mask r = retirable(finished, active);
      if (r != 0) {
        append(pd, members(active));
        finished |= r;
        active &= ~r;
      }
    }
    if (active != 0) append(pd, members(active));
    if (pd.bags.empty()) pd.bags.emplace_back();
    return pd;
  }

  std::vector<Mask> adj_;
  Mask full_;
  int k_;
  int anchor_;
  std::vector<int> intro_;
  std::unordered_set<Mask> visited_;
};

void check_scope(const Graph& g) {
  if (g.order() > kBagSearchMaxOrder)
    fail(ErrorKind::Scope, "bag-state search supports at most " + std::to_string(kBagSearchMaxOrder) +
                               " vertices (got " + std::to_string(g.order()) + ")");
}

}  // namespace

std::optional<PathDecomposition> bag_search_pathwidth(const Graph& g, int k, std::optional<int> anchor) {
  check_scope(g);
  if (anchor && (*anchor < 0 || *anchor >= g.order()))
    fail(ErrorKind::InvalidArgument, "anchor " + std::to_string(*anchor) + " is not a vertex");
  if (g.order() == 0) return k >= -1 ? std::optional<PathDecomposition>(PathDecomposition{{{}}}) : std::nullopt;
  if (k < 0) return std::nullopt;
  return BagSearch(g, k, anchor.value_or(-1)).run();
}

int bag_search_min_width(const Graph& g) {
  check_scope(g);
  if (g.order() == 0) return -1;
  for (int k = 0;; ++k)
    if (bag_search_pathwidth(g, k)) return k;
}

int anchored_pathwidth(const Graph& g, int v) {
  check_scope(g);
  if (v < 0 || v >= g.order()) fail(ErrorKind::InvalidArgument, "anchor " + std::to_string(v) + " is not a vertex");
  for (int k = 0;; ++k)
    if (bag_search_pathwidth(g, k, v)) return k;
}

}  // namespace opw
