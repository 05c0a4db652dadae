#include "atlas/oracles.hpp"

#include <deque>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "atlas/ekor.hpp"

namespace atlas::oracle {

void Result::fail(std::string message) {
  if (failures.size() < 20)
    failures.push_back(std::move(message));
  else if (failures.size() == 20)
    failures.push_back("...");
}

std::vector<std::pair<ExtAffineElement, int>> ball(const AffineWeylGroup& group, int radius) {
  std::vector<std::pair<ExtAffineElement, int>> out{{group.identity(), 0}};
  std::unordered_set<ExtAffineElement, ElementHash> seen{group.identity()};
  for (std::size_t head = 0; head < out.size(); ++head) {
    auto [y, d] = out[head];
    if (d == radius)
      continue;
    for (int s = 0; s < group.node_count(); ++s) {
      ExtAffineElement z = group.multiply(y, group.simple_reflection(s));
      if (seen.insert(z).second)
        out.emplace_back(std::move(z), d + 1);
    }
  }
  return out;
}

Result bfs_length(const AffineWeylGroup& group, int radius,
                  const std::vector<ExtAffineElement>& omegas) {
  Result r;
  r.name = "bfs-length";
  for (const auto& [y, d] : ball(group, radius)) {
    for (const auto& omega : omegas) {
      ++r.checked;
      int len = group.length(group.multiply(y, omega));
      if (len != d)
        r.fail(word_string(group.reduced_word(y).word) + ": BFS distance " + std::to_string(d) +
               ", length " + std::to_string(len));
    }
    const int len = group.length(y);
    for (int s = 0; s < group.node_count(); ++s) {
      ++r.checked;
      int diff = group.length(group.multiply(y, group.simple_reflection(s))) - len;
      if (diff != 1 && diff != -1)
        r.fail("l(ys) - l(y) = " + std::to_string(diff));
    }
  }
  return r;
}

namespace {

void subwords(const AffineWeylGroup& group, const std::vector<int>& word, std::size_t pos,
              const ExtAffineElement& prefix, const ExtAffineElement& omega,
              std::unordered_set<ExtAffineElement, ElementHash>& out) {
  if (pos == word.size()) {
    out.insert(group.multiply(prefix, omega));
    return;
  }
  subwords(group, word, pos + 1, prefix, omega, out);
  subwords(group, word, pos + 1, group.multiply(prefix, group.simple_reflection(word[pos])), omega,
           out);
}

}  // namespace

Result subword_bruhat(const AffineWeylGroup& group, const AdmissibleSet& adm) {
  Result r;
  r.name = "subword-bruhat";
  for (const auto& y : adm.elements) {
    ReducedDecomposition rd = group.reduced_word(y);
    std::unordered_set<ExtAffineElement, ElementHash> below;
    subwords(group, rd.word, 0, group.identity(), rd.omega, below);
    for (const auto& x : adm.elements) {
      ++r.checked;
      if (group.bruhat_leq(x, y) != (below.count(x) != 0))
        r.fail(word_string(group.reduced_word(x).word) + " vs " + word_string(rd.word));
    }
  }
  return r;
}

Result subset_i_set(const AffineWeylGroup& group, const AdmissibleSet& adm) {
  Result r;
  r.name = "subset-i-set";
  for (const auto& label : all_parahoric_labels(group)) {
    const std::vector<int> k = label.nodes().to_vector();
    for (const auto& x : adm.elements) {
      const ExtAffineElement x_inv = group.inverse(x);
      std::vector<int> image(group.node_count(), -1);
      for (int s : k) {
        ExtAffineElement conj = group.multiply(
            group.multiply(x, group.frobenius(group.simple_reflection(s))), x_inv);
        for (int t = 0; t < group.node_count(); ++t)
          if (conj == group.simple_reflection(t))
            image[s] = t;
      }
      std::vector<NodeSet> stable;
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << k.size()); ++bits) {
        NodeSet sub;
        for (std::size_t i = 0; i < k.size(); ++i)
          if ((bits >> i) & 1u)
            sub.insert(k[i]);
        bool ok = true;
        for (int s : sub.to_vector())
          ok = ok && image[s] >= 0 && sub.contains(image[s]);
        if (ok)
          stable.push_back(sub);
      }
      NodeSet best;
      for (NodeSet s : stable)
        if (s.size() > best.size())
          best = s;
      ++r.checked;
      for (NodeSet s : stable)
        if (!s.subset_of(best))
          r.fail("no unique maximal stable subset in " + label.nodes().to_string());
      NodeSet fast = i_set(group, label.nodes(), x);
      if (fast != best)
        r.fail("K = " + label.nodes().to_string() + ", x = " +
               word_string(group.reduced_word(x).word) + ": i_set " + fast.to_string() +
               ", brute force " + best.to_string());
    }
  }
  return r;
}

namespace {

// Number of positive roots of the largest finite crystallographic root
// system of the given rank, which bounds the length of its longest element.
int longest_element_bound(int rank) {
  static const int table[] = {0, 1, 6, 9, 24, 25, 36, 63, 120};
  return rank < 9 ? table[rank] : rank * rank;
}

}  // namespace

std::size_t parabolic_order_bfs(const AffineWeylGroup& group, NodeSet j) {
  constexpr std::size_t kCap = 1'000'000;
  const int bound = longest_element_bound(j.size());
  const std::vector<int> gens = j.to_vector();
  std::unordered_set<ExtAffineElement, ElementHash> seen{group.identity()};
  std::vector<ExtAffineElement> layer{group.identity()};
  for (int depth = 0; !layer.empty(); ++depth) {
    if (depth > bound || seen.size() > kCap)
      return 0;
    std::vector<ExtAffineElement> next;
    for (const auto& y : layer)
      for (int s : gens) {
        ExtAffineElement z = group.multiply(y, group.simple_reflection(s));
        if (seen.insert(z).second)
          next.push_back(std::move(z));
      }
    layer = std::move(next);
  }
  return seen.size();
}

Result parabolic_finiteness(const AffineWeylGroup& group) {
  Result r;
  r.name = "parabolic-finiteness-bfs";
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << group.node_count()); ++bits) {
    NodeSet j = NodeSet::from_bits(bits);
    ++r.checked;
    std::size_t order = parabolic_order_bfs(group, j);
    bool rule = is_finite_parabolic(group.diagram(), j);
    if ((order != 0) != rule) {
      r.fail(j.to_string() + ": BFS says " + (order ? "finite" : "infinite"));
      continue;
    }
    if (order != 0 && group.parabolic_subgroup(j).size() != order)
      r.fail(j.to_string() + ": parabolic_subgroup size differs from BFS order");
  }
  return r;
}

std::vector<ExtAffineElement> adm_by_downward_closure(const AffineWeylGroup& group,
                                                      const AdmissibleSet& adm) {
  int radius = 0;
  for (const auto& t : adm.maximal)
    radius = std::max(radius, group.length(t));
  std::vector<ExtAffineElement> out;
  for (const auto& [y, d] : ball(group, radius)) {
    ExtAffineElement z = group.multiply(y, adm.tau);
    for (const auto& t : adm.maximal)
      if (group.bruhat_leq(z, t)) {
        out.push_back(z);
        break;
      }
  }
  return canonical_sort(group, std::move(out));
}

std::vector<int> straight_conjugacy_classes(const AffineWeylGroup& group,
                                            const std::vector<ExtAffineElement>& straight,
                                            int max_length,
                                            const std::vector<ExtAffineElement>& omegas) {
  std::unordered_map<ExtAffineElement, std::size_t, ElementHash> index;
  for (std::size_t i = 0; i < straight.size(); ++i)
    index.emplace(straight[i], i);
  std::vector<std::size_t> parent(straight.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i)
      i = parent[i] = parent[parent[i]];
    return i;
  };
  for (const auto& [y, d] : ball(group, max_length))
    for (const auto& omega : omegas) {
      ExtAffineElement c = group.multiply(y, omega);
      ExtAffineElement c_sigma_inv = group.inverse(group.frobenius(c));
      for (std::size_t i = 0; i < straight.size(); ++i) {
        auto it = index.find(group.multiply(group.multiply(c, straight[i]), c_sigma_inv));
        if (it != index.end())
          parent[find(i)] = find(it->second);
      }
    }
  std::vector<int> out(straight.size());
  std::unordered_map<std::size_t, int> label;
  for (std::size_t i = 0; i < straight.size(); ++i)
    out[i] = label.try_emplace(find(i), static_cast<int>(label.size())).first->second;
  return out;
}

}  // namespace atlas::oracle
