#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace racah {

/// A finite group given concretely by its multiplication table. Element 0 is
/// always the identity E. Immutable after construction.
struct FiniteGroup {
  std::string name;
  int order = 0;
  std::vector<std::vector<int>> mul;  // mul[g][h] = g*h
  std::vector<int> inv;
  std::vector<std::vector<int>> classes;  // conjugacy classes, identity first
  std::vector<int> class_of;              // element -> class index
  std::vector<std::string> element_names;

  int multiply(int g, int h) const { return mul[g][h]; }
  int inverse(int g) const { return inv[g]; }
  int conjugate(int g, int by) const { return mul[mul[by][g]][inv[by]]; }
  int num_classes() const { return static_cast<int>(classes.size()); }
  int class_size(int c) const { return static_cast<int>(classes[c].size()); }

  const std::string& element_name(int g) const { return element_names[g]; }

  bool is_ambivalent() const {
    for (int g = 0; g < order; ++g)
      if (class_of[g] != class_of[inv[g]]) return false;
    return true;
  }
};

namespace detail {

inline void check_table(const std::vector<std::vector<int>>& mul) {
  const int n = static_cast<int>(mul.size());
  if (n == 0) throw std::invalid_argument("group: empty multiplication table");
  for (const auto& row : mul) {
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("group: multiplication table is not square");
    for (int v : row)
      if (v < 0 || v >= n) throw std::invalid_argument("group: table entry out of range");
  }
  for (int g = 0; g < n; ++g)
    if (mul[0][g] != g || mul[g][0] != g)
      throw std::invalid_argument("group: element 0 is not the identity");
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      for (int k = 0; k < n; ++k)
        if (mul[mul[g][h]][k] != mul[g][mul[h][k]])
          throw std::invalid_argument("group: multiplication table is not associative at (" +
                                      std::to_string(g) + "," + std::to_string(h) + "," +
                                      std::to_string(k) + ")");
}

inline std::vector<int> compute_inverses(const std::vector<std::vector<int>>& mul) {
  const int n = static_cast<int>(mul.size());
  std::vector<int> inv(n, -1);
  for (int g = 0; g < n; ++g) {
    for (int h = 0; h < n; ++h)
      if (mul[g][h] == 0 && mul[h][g] == 0) {
        inv[g] = h;
        break;
      }
    if (inv[g] < 0)
      throw std::invalid_argument("group: element " + std::to_string(g) + " has no inverse");
  }
  return inv;
}

/// Conjugacy classes ordered: identity class first, then by increasing size,
/// ties broken by smallest element index.
inline std::vector<std::vector<int>> compute_classes(const std::vector<std::vector<int>>& mul,
                                                     const std::vector<int>& inv) {
  const int n = static_cast<int>(mul.size());
  std::vector<std::vector<int>> classes;
  std::vector<bool> seen(n, false);
  for (int g = 0; g < n; ++g) {
    if (seen[g]) continue;
    std::vector<int> cls;
    for (int s = 0; s < n; ++s) {
      int c = mul[mul[s][g]][inv[s]];
      if (!seen[c]) {
        seen[c] = true;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  std::sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) {
    if ((a[0] == 0) != (b[0] == 0)) return a[0] == 0;
    if (a.size() != b.size()) return a.size() < b.size();
    return a[0] < b[0];
  });
  return classes;
}

}  // namespace detail

/// Builds and fully validates a group from its multiplication table.
/// `classes`, when supplied, is checked against the computed partition.
inline FiniteGroup make_group(std::string name, std::vector<std::vector<int>> mul,
                              std::vector<std::string> element_names = {},
                              const std::vector<std::vector<int>>* claimed_classes = nullptr) {
  detail::check_table(mul);
  FiniteGroup g;
  g.name = std::move(name);
  g.order = static_cast<int>(mul.size());
  g.mul = std::move(mul);
  g.inv = detail::compute_inverses(g.mul);
  g.classes = detail::compute_classes(g.mul, g.inv);
  if (claimed_classes) {
    auto canon = [](std::vector<std::vector<int>> cs) {
      for (auto& c : cs) std::sort(c.begin(), c.end());
      std::sort(cs.begin(), cs.end());
      return cs;
    };
    if (canon(*claimed_classes) != canon(g.classes))
      throw std::invalid_argument("group " + g.name + ": declared classes do not match");
  }
  g.class_of.assign(g.order, -1);
  for (int c = 0; c < g.num_classes(); ++c)
    for (int e : g.classes[c]) g.class_of[e] = c;
  if (element_names.empty()) {
    for (int i = 0; i < g.order; ++i) element_names.push_back("g" + std::to_string(i));
    element_names[0] = "E";
  }
  if (static_cast<int>(element_names.size()) != g.order)
    throw std::invalid_argument("group " + g.name + ": element name count mismatch");
  g.element_names = std::move(element_names);
  return g;
}

/// Closes a generating set under an abstract product, producing element list
/// and multiplication table. `Elem` needs operator== via the `equal` functor.
template <typename Elem, typename Mul, typename Eq>
std::pair<std::vector<Elem>, std::vector<std::vector<int>>> close_generators(
    const Elem& identity, const std::vector<Elem>& gens, Mul&& multiply, Eq&& equal,
    int element_bound) {
  std::vector<Elem> elems{identity};
  auto find = [&](const Elem& e) -> int {
    for (size_t i = 0; i < elems.size(); ++i)
      if (equal(elems[i], e)) return static_cast<int>(i);
    return -1;
  };
  for (size_t i = 0; i < elems.size(); ++i) {
    for (const Elem& gen : gens) {
      Elem prod = multiply(elems[i], gen);
      if (find(prod) < 0) {
        if (static_cast<int>(elems.size()) >= element_bound)
          throw std::runtime_error("group closure exceeds element bound " +
                                   std::to_string(element_bound));
        elems.push_back(std::move(prod));
      }
    }
  }
  const int n = static_cast<int>(elems.size());
  std::vector<std::vector<int>> mul(n, std::vector<int>(n, -1));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int idx = find(multiply(elems[a], elems[b]));
      if (idx < 0) throw std::runtime_error("group closure: product escaped element set");
      mul[a][b] = idx;
    }
  return {std::move(elems), std::move(mul)};
}

/// Group from permutation generators in one-line image notation.
inline FiniteGroup group_from_permutations(std::string name,
                                           const std::vector<std::vector<int>>& generators,
                                           int element_bound = 4096) {
  if (generators.empty()) throw std::invalid_argument("group: no generators");
  const size_t degree = generators[0].size();
  for (const auto& p : generators) {
    if (p.size() != degree) throw std::invalid_argument("group: generator degree mismatch");
    std::vector<bool> hit(degree, false);
    for (int v : p) {
      if (v < 0 || v >= static_cast<int>(degree) || hit[v])
        throw std::invalid_argument("group: generator is not a permutation");
      hit[v] = true;
    }
  }
  std::vector<int> identity(degree);
  std::iota(identity.begin(), identity.end(), 0);
  auto compose = [](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
    return r;
  };
  auto [elems, mul] = close_generators(
      identity, generators, compose, std::equal_to<std::vector<int>>{}, element_bound);
  (void)elems;
  return make_group(std::move(name), std::move(mul));
}

/// Direct product G x H with elements indexed g*|H| + h.
inline FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b, std::string name) {
  const int n = a.order * b.order;
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  std::vector<std::string> names(n);
  auto idx = [&](int ga, int gb) { return ga * b.order + gb; };
  for (int g1 = 0; g1 < a.order; ++g1)
    for (int h1 = 0; h1 < b.order; ++h1) {
      names[idx(g1, h1)] = a.element_name(g1) + (h1 == 0 ? "" : "*" + b.element_name(h1));
      for (int g2 = 0; g2 < a.order; ++g2)
        for (int h2 = 0; h2 < b.order; ++h2)
          mul[idx(g1, h1)][idx(g2, h2)] = idx(a.mul[g1][g2], b.mul[h1][h2]);
    }
  return make_group(std::move(name), std::move(mul), std::move(names));
}

}  // namespace racah
