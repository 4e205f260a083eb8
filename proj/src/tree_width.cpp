#include <algorithm>

#include "opwlab/error.hpp"
#include "opwlab/width.hpp"

namespace opw {
namespace {

// Label of a rooted tree: strictly decreasing widths. The head is the width of
// the tree itself, flagged when some vertex has two child subtrees of that
// width (at most one such vertex exists). If that vertex is not the root, the
// tail is the label of the tree with the vertex's subtree cut away.
struct Entry {
  int width;
  bool critical;
};
using Label = std::vector<Entry>;

Label combine(std::vector<Label> children) {
  if (children.empty()) return {{0, false}};
  int top = 0;
  for (const auto& l : children) top = std::max(top, l.front().width);
  if (top == 0) return {{1, false}};  // a star

  std::vector<std::size_t> at_top;
  for (std::size_t i = 0; i < children.size(); ++i)
    if (children[i].front().width == top) at_top.push_back(i);

  if (at_top.size() >= 3) return {{top + 1, false}};
  if (at_top.size() == 2) {
    if (children[at_top[0]].front().critical || children[at_top[1]].front().critical) return {{top + 1, false}};
    return {{top, true}};
  }
  auto& heavy = children[at_top[0]];
  if (!heavy.front().critical) return {{top, false}};
  // The critical vertex gains a third branch of width `top` exactly when the
  // remainder, seen from the new root, reaches that width.
  heavy.erase(heavy.begin());
  if (heavy.empty()) children.erase(children.begin() + static_cast<std::ptrdiff_t>(at_top[0]));
  Label rest = combine(std::move(children));
  if (rest.front().width >= top) return {{top + 1, false}};
  Label out{{top, true}};
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

}  // namespace

bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.size() == static_cast<std::size_t>(g.order() - 1) && is_connected(g);
}

int tree_pathwidth(const Graph& tree) {
  if (!is_tree(tree)) fail(ErrorKind::InvalidArgument, "tree_pathwidth: input is not a tree");
  const int n = tree.order();
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));
  order.push_back(0);
  parent[0] = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    int u = order[i];
    for (int w : tree.neighbors(u)) {
      if (parent[static_cast<std::size_t>(w)] == -1) {
        parent[static_cast<std::size_t>(w)] = u;
        order.push_back(w);
      }
    }
  }
  std::vector<std::vector<Label>> pending(static_cast<std::size_t>(n));
  Label root;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int u = *it;
    Label l = combine(std::move(pending[static_cast<std::size_t>(u)]));
    pending[static_cast<std::size_t>(u)].clear();
    if (u == 0) root = std::move(l);
    else pending[static_cast<std::size_t>(parent[static_cast<std::size_t>(u)])].push_back(std::move(l));
  }
  return root.front().width;
}

}  // namespace opw
