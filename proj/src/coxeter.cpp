#include "atlas/coxeter.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace atlas {

NodeSet::NodeSet(std::initializer_list<int> nodes) {
  for (int n : nodes)
    insert(n);
}

NodeSet NodeSet::from_bits(std::uint64_t bits) {
  NodeSet s;
  s.bits_ = bits;
  return s;
}

NodeSet NodeSet::from_vector(const std::vector<int>& nodes) {
  NodeSet s;
  for (int n : nodes)
    s.insert(n);
  return s;
}

NodeSet NodeSet::range(int first, int last) {
  NodeSet s;
  for (int n = first; n <= last; ++n)
    s.insert(n);
  return s;
}

void NodeSet::insert(int node) {
  if (node < 0 || node >= 64)
    throw std::out_of_range("NodeSet: node index out of range");
  bits_ |= std::uint64_t{1} << node;
}

int NodeSet::size() const { return std::popcount(bits_); }

std::vector<int> NodeSet::to_vector() const {
  std::vector<int> out;
  for (int i = 0; i < 64; ++i)
    if (contains(i))
      out.push_back(i);
  return out;
}

std::string NodeSet::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int n : to_vector()) {
    if (!first)
      os << ',';
    os << 's' << n;
    first = false;
  }
  os << '}';
  return os.str();
}

CoxeterMatrix::CoxeterMatrix(std::vector<std::vector<int>> entries)
    : m_(std::move(entries)) {
  const std::size_t n = m_.size();
  if (n > 64)
    throw std::invalid_argument("CoxeterMatrix: at most 64 nodes");
  for (std::size_t i = 0; i < n; ++i) {
    if (m_[i].size() != n)
      throw std::invalid_argument("CoxeterMatrix: not square");
    if (m_[i][i] != 1)
      throw std::invalid_argument("CoxeterMatrix: diagonal must be 1");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j)
        continue;
      int v = m_[i][j];
      if (v != m_[j][i])
        throw std::invalid_argument("CoxeterMatrix: not symmetric");
      if (v != kInfiniteOrder && v != 2 && v != 3 && v != 4 && v != 6)
        throw std::invalid_argument("CoxeterMatrix: unsupported entry");
    }
}

CoxeterMatrix affine_c_matrix(int n) {
  if (n < 1)
    throw std::invalid_argument("affine_c_matrix: rank must be positive");
  if (n == 1)
    return CoxeterMatrix({{1, kInfiniteOrder}, {kInfiniteOrder, 1}});
  std::vector<std::vector<int>> m(n + 1, std::vector<int>(n + 1, 2));
  for (int i = 0; i <= n; ++i)
    m[i][i] = 1;
  for (int i = 0; i < n; ++i) {
    int label = (i == 0 || i == n - 1) ? 4 : 3;
    m[i][i + 1] = m[i + 1][i] = label;
  }
  return CoxeterMatrix(std::move(m));
}

std::vector<NodeSet> connected_components(const CoxeterMatrix& mat, NodeSet j) {
  std::vector<NodeSet> comps;
  NodeSet remaining = j;
  while (!remaining.empty()) {
    int start = remaining.to_vector().front();
    NodeSet comp{start};
    std::vector<int> stack{start};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : remaining.to_vector())
        if (!comp.contains(w) && mat.joined(v, w)) {
          comp.insert(w);
          stack.push_back(w);
        }
    }
    comps.push_back(comp);
    remaining = remaining - comp;
  }
  return comps;
}

DiagramMap::DiagramMap(const CoxeterMatrix& mat, std::vector<int> images)
    : images_(std::move(images)) {
  const int n = mat.size();
  if (static_cast<int>(images_.size()) != n)
    throw std::invalid_argument("DiagramMap: wrong number of images");
  std::vector<bool> seen(n, false);
  for (int v : images_) {
    if (v < 0 || v >= n || seen[v])
      throw std::invalid_argument("DiagramMap: not a permutation");
    seen[v] = true;
  }
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      if (mat.order(images_[i], images_[k]) != mat.order(i, k))
        throw std::invalid_argument("DiagramMap: does not preserve the Coxeter matrix");
}

DiagramMap DiagramMap::identity(int n) {
  DiagramMap f;
  f.images_.resize(n);
  for (int i = 0; i < n; ++i)
    f.images_[i] = i;
  return f;
}

NodeSet DiagramMap::operator()(NodeSet j) const {
  NodeSet out;
  for (int v : j.to_vector())
    out.insert(images_[v]);
  return out;
}

DiagramMap DiagramMap::then(const DiagramMap& after) const {
  DiagramMap f;
  f.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    f.images_[i] = after.images_[images_[i]];
  return f;
}

std::vector<NodeSet> DiagramMap::orbits(NodeSet j) const {
  std::vector<NodeSet> out;
  NodeSet done;
  for (int v : j.to_vector()) {
    if (done.contains(v))
      continue;
    NodeSet orbit = orbit_closure(*this, NodeSet{v});
    out.push_back(orbit);
    done = done | orbit;
  }
  return out;
}

std::string word_string(const std::vector<int>& word) {
  if (word.empty())
    return "e";
  std::string out;
  for (int s : word)
    out += "s" + std::to_string(s);
  return out;
}

NodeSet orbit_closure(const DiagramMap& f, NodeSet j) {
  NodeSet closure = j;
  for (;;) {
    NodeSet next = closure | f(closure);
    if (next == closure)
      return closure;
    closure = next;
  }
}

std::string FiniteTypeLabel::to_string() const {
  if (components.empty())
    return "trivial";
  std::ostringstream os;
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (i)
      os << 'x';
    os << components[i].family << components[i].rank;
  }
  return os.str();
}

namespace {

// Local picture of one connected component.
struct Shape {
  std::vector<int> nodes;
  std::vector<std::vector<std::pair<int, int>>> adj;  // (neighbour slot, label)
  int edges = 0;
  bool has_infinity = false;

  Shape(const CoxeterMatrix& mat, NodeSet comp) : nodes(comp.to_vector()) {
    adj.resize(nodes.size());
    for (std::size_t a = 0; a < nodes.size(); ++a)
      for (std::size_t b = a + 1; b < nodes.size(); ++b)
        if (mat.joined(nodes[a], nodes[b])) {
          int label = mat.order(nodes[a], nodes[b]);
          if (label == kInfiniteOrder)
            has_infinity = true;
          adj[a].emplace_back(static_cast<int>(b), label);
          adj[b].emplace_back(static_cast<int>(a), label);
          ++edges;
        }
  }

  int n() const { return static_cast<int>(nodes.size()); }
  int degree(int v) const { return static_cast<int>(adj[v].size()); }
  int max_degree() const {
    int d = 0;
    for (int v = 0; v < n(); ++v)
      d = std::max(d, degree(v));
    return d;
  }
  bool all_labels(int label) const {
    for (const auto& row : adj)
      for (const auto& [w, l] : row)
        if (l != label)
          return false;
    return true;
  }

  // Edge labels along a path that starts at a leaf; requires max degree <= 2.
  std::vector<int> path_labels() const {
    std::vector<int> labels;
    int start = 0;
    for (int v = 0; v < n(); ++v)
      if (degree(v) <= 1) {
        start = v;
        break;
      }
    int prev = -1, cur = start;
    for (;;) {
      int next = -1, label = 0;
      for (const auto& [w, l] : adj[cur])
        if (w != prev) {
          next = w;
          label = l;
        }
      if (next < 0)
        break;
      labels.push_back(label);
      prev = cur;
      cur = next;
    }
    return labels;
  }

  // Labels along each arm leaving `branch`, each listed outward. Empty when
  // an arm meets another branch node.
  std::optional<std::vector<std::vector<int>>> arms(int branch) const {
    std::vector<std::vector<int>> out;
    for (const auto& [first, first_label] : adj[branch]) {
      std::vector<int> labels{first_label};
      int prev = branch, cur = first;
      while (degree(cur) == 2) {
        int next = -1, label = 0;
        for (const auto& [w, l] : adj[cur])
          if (w != prev) {
            next = w;
            label = l;
          }
        labels.push_back(label);
        prev = cur;
        cur = next;
      }
      if (degree(cur) != 1)
        return std::nullopt;
      out.push_back(std::move(labels));
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.size() < b.size(); });
    return out;
  }

  std::vector<int> branch_nodes() const {
    std::vector<int> b;
    for (int v = 0; v < n(); ++v)
      if (degree(v) >= 3)
        b.push_back(v);
    return b;
  }
};

bool only_threes(const std::vector<int>& labels, std::size_t from, std::size_t to) {
  for (std::size_t i = from; i < to; ++i)
    if (labels[i] != 3)
      return false;
  return true;
}

std::optional<CartanComponent> classify_finite(const Shape& s) {
  const int n = s.n();
  if (s.has_infinity || s.edges != n - 1)
    return std::nullopt;
  if (n == 1)
    return CartanComponent{'A', 1};
  if (s.max_degree() <= 2) {
    std::vector<int> l = s.path_labels();
    if (only_threes(l, 0, l.size()))
      return CartanComponent{'A', n};
    if (n == 2 && l[0] == 6)
      return CartanComponent{'G', 2};
    if (l.front() == 4 && only_threes(l, 1, l.size()))
      return CartanComponent{'C', n};
    if (l.back() == 4 && only_threes(l, 0, l.size() - 1))
      return CartanComponent{'C', n};
    if (l == std::vector<int>{3, 4, 3})
      return CartanComponent{'F', 4};
    return std::nullopt;
  }
  std::vector<int> branches = s.branch_nodes();
  if (branches.size() != 1 || s.degree(branches[0]) != 3 || !s.all_labels(3))
    return std::nullopt;
  auto arms = s.arms(branches[0]);
  if (!arms)
    return std::nullopt;
  std::size_t a = (*arms)[0].size(), b = (*arms)[1].size(), c = (*arms)[2].size();
  if (a == 1 && b == 1)
    return CartanComponent{'D', static_cast<int>(c) + 3};
  if (a == 1 && b == 2 && c >= 2 && c <= 4)
    return CartanComponent{'E', static_cast<int>(c) + 4};
  return std::nullopt;
}

std::optional<std::string> classify_affine(const Shape& s) {
  const int n = s.n();
  if (n == 2 && s.edges == 1 && s.has_infinity)
    return "A~1";
  if (s.has_infinity)
    return std::nullopt;
  if (n >= 3 && s.edges == n && s.max_degree() == 2 && s.all_labels(3))
    return "A~" + std::to_string(n - 1);
  if (s.edges != n - 1)
    return std::nullopt;
  if (s.max_degree() <= 2) {
    std::vector<int> l = s.path_labels();
    if (n >= 3 && l.front() == 4 && l.back() == 4 &&
        only_threes(l, 1, l.size() - 1))
      return "C~" + std::to_string(n - 1);
    if (l == std::vector<int>{3, 6} || l == std::vector<int>{6, 3})
      return "G~2";
    if (l == std::vector<int>{3, 3, 4, 3} || l == std::vector<int>{3, 4, 3, 3})
      return "F~4";
    return std::nullopt;
  }
  std::vector<int> branches = s.branch_nodes();
  if (branches.size() == 1 && s.degree(branches[0]) == 4) {
    auto arms = s.arms(branches[0]);
    if (arms && s.all_labels(3) && (*arms)[3].size() == 1)
      return "D~4";
    return std::nullopt;
  }
  if (branches.size() == 1 && s.degree(branches[0]) == 3) {
    auto arms = s.arms(branches[0]);
    if (!arms)
      return std::nullopt;
    std::size_t a = (*arms)[0].size(), b = (*arms)[1].size(), c = (*arms)[2].size();
    if (s.all_labels(3)) {
      if (a == 2 && b == 2 && c == 2)
        return "E~6";
      if (a == 1 && b == 3 && c == 3)
        return "E~7";
      if (a == 1 && b == 2 && c == 5)
        return "E~8";
      return std::nullopt;
    }
    // B~_n: fork at one end, a double bond at the far end of the long arm.
    if (a == 1 && b == 1) {
      const auto& first = (*arms)[0];
      const auto& second = (*arms)[1];
      const auto& last = (*arms)[2];
      if (first[0] == 3 && second[0] == 3 && last.back() == 4 &&
          only_threes(last, 0, last.size() - 1))
        return "B~" + std::to_string(c + 2);
    }
    return std::nullopt;
  }
  if (branches.size() == 2 && s.all_labels(3)) {
    for (int b : branches) {
      if (s.degree(b) != 3)
        return std::nullopt;
      int leaves = 0;
      for (const auto& [w, l] : s.adj[b])
        if (s.degree(w) == 1)
          ++leaves;
      if (leaves != 2)
        return std::nullopt;
    }
    return "D~" + std::to_string(n - 1);
  }
  return std::nullopt;
}

}  // namespace

FiniteTypeLabel finite_type_of(const CoxeterMatrix& mat, NodeSet j) {
  FiniteTypeLabel label;
  for (NodeSet comp : connected_components(mat, j)) {
    auto c = classify_finite(Shape(mat, comp));
    if (!c)
      throw std::domain_error("finite_type_of: component " + comp.to_string() +
                              " is not of finite type");
    label.components.push_back(*c);
  }
  std::sort(label.components.begin(), label.components.end());
  return label;
}

AffineDiagram::AffineDiagram(CoxeterMatrix mat) : mat_(std::move(mat)) {
  components_ = connected_components(mat_, mat_.all_nodes());
  for (NodeSet comp : components_) {
    auto type = classify_affine(Shape(mat_, comp));
    if (!type)
      throw std::invalid_argument("AffineDiagram: component " + comp.to_string() +
                                  " is not an irreducible affine diagram");
    types_.push_back(*type);
  }
}

bool is_finite_parabolic(const AffineDiagram& diagram, NodeSet j) {
  if (!j.subset_of(diagram.matrix().all_nodes()))
    throw std::out_of_range("is_finite_parabolic: node outside the diagram");
  for (NodeSet comp : diagram.components())
    if (comp.subset_of(j))
      return false;
  return true;
}

}  // namespace atlas
