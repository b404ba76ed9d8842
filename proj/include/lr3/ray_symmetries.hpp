#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "lr3/matrix.hpp"
#include "lr3/rays.hpp"

// Symmetries of the ray set, found combinatorially. The rays are encoded as
// the complete edge-colored graph whose vertex colors are the diagonal and
// whose edge colors are the off-diagonal entries of the projection matrix
// Q = V^T (V V^T)^(-1) V (V has the rays as columns). Color-preserving
// vertex permutations of that graph are exactly the candidate linear
// symmetries of the ray set; lifting and certifying them is the next layer's
// job.

namespace lr3 {

// Permutation of the 9 ray indices. image[i] is where vertex i goes.
// Composition is standard function composition: (p * q)(i) = p(q(i)), i.e.
// the right factor acts first. (The relation words below happen to hold
// under the left-to-right reading as well; verify_relations reports both.)
struct RayPermutation {
  std::array<std::uint8_t, 9> image{};

  static RayPermutation identity() {
    RayPermutation p;
    for (std::uint8_t i = 0; i < 9; ++i) p.image[i] = i;
    return p;
  }

  std::uint8_t operator()(std::uint8_t i) const { return image[i]; }

  friend RayPermutation operator*(const RayPermutation& p, const RayPermutation& q) {
    RayPermutation r;
    for (int i = 0; i < 9; ++i) r.image[static_cast<std::size_t>(i)] = p.image[q.image[static_cast<std::size_t>(i)]];
    return r;
  }

  RayPermutation inverse() const {
    RayPermutation r;
    for (std::uint8_t i = 0; i < 9; ++i) r.image[image[i]] = i;
    return r;
  }

  friend bool operator==(const RayPermutation&, const RayPermutation&) = default;
  friend auto operator<=>(const RayPermutation&, const RayPermutation&) = default;

  // Cycle notation over ray labels; fixed points omitted, identity is [].
  // Each cycle starts at its smallest vertex; cycles are ordered by that
  // vertex, so the form is canonical.
  std::vector<std::string> to_cycles() const {
    std::vector<std::string> out;
    std::array<bool, 9> seen{};
    for (std::uint8_t start = 0; start < 9; ++start) {
      if (seen[start] || image[start] == start) continue;
      std::string cyc = "(";
      std::uint8_t v = start;
      bool first = true;
      do {
        seen[v] = true;
        if (!first) cyc += ",";
        cyc += std::string(kRayLabels[v]);
        first = false;
        v = image[v];
      } while (v != start);
      out.push_back(cyc + ")");
    }
    return out;
  }

  static RayPermutation from_cycles(const std::vector<std::string>& cycles) {
    RayPermutation p = identity();
    for (const std::string& cyc : cycles) {
      if (cyc.size() < 2 || cyc.front() != '(' || cyc.back() != ')')
        throw std::invalid_argument("cycle must look like (a,b,...): " + cyc);
      std::vector<int> ids;
      std::string token;
      for (std::size_t i = 1; i < cyc.size(); ++i) {
        const char ch = cyc[i];
        if (ch == ',' || ch == ')') {
          if (token.empty()) throw std::invalid_argument("empty label in cycle: " + cyc);
          const int idx = ray_index(token);
          if (idx < 0) throw std::invalid_argument("unknown ray label: " + token);
          ids.push_back(idx);
          token.clear();
        } else if (ch != ' ') {
          token += ch;
        }
      }
      for (std::size_t i = 0; i < ids.size(); ++i) {
        const std::size_t from = static_cast<std::size_t>(ids[i]);
        const std::size_t to = static_cast<std::size_t>(ids[(i + 1) % ids.size()]);
        if (p.image[from] != from)
          throw std::invalid_argument("cycles overlap at " + std::string(kRayLabels[from]));
        p.image[from] = static_cast<std::uint8_t>(to);
      }
    }
    return p;
  }
};

// Complete graph with rational vertex and edge colors, stored as one
// symmetric matrix: diagonal = vertex colors, off-diagonal = edge colors.
class ColoredGraph {
 public:
  ColoredGraph(std::vector<std::string> labels, RatMatrix colors)
      : labels_(std::move(labels)), colors_(std::move(colors)) {
    if (colors_.rows() != labels_.size() || colors_.cols() != labels_.size())
      throw std::invalid_argument("color matrix shape does not match labels");
    for (std::size_t i = 0; i < labels_.size(); ++i)
      for (std::size_t j = i + 1; j < labels_.size(); ++j)
        if (colors_(i, j) != colors_(j, i))
          throw std::invalid_argument("edge colors must be symmetric");
  }

  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  const Rat& vertex_color(std::size_t i) const { return colors_(i, i); }
  const Rat& edge_color(std::size_t i, std::size_t j) const { return colors_(i, j); }

 private:
  std::vector<std::string> labels_;
  RatMatrix colors_;
};

// Builds the colored graph of a spanning vector configuration in Z^6.
// Throws RankDeficient when the vectors do not span (V V^T singular).
inline ColoredGraph build_graph(const std::vector<Vec6>& rays,
                                std::vector<std::string> labels = {}) {
  RatMatrix v(6, rays.size());
  for (std::size_t col = 0; col < rays.size(); ++col)
    for (std::size_t row = 0; row < 6; ++row) v(row, col) = rays[col][row];
  RatMatrix q = projection_matrix(v);
  if (labels.empty()) {
    for (std::size_t i = 0; i < rays.size(); ++i)
      labels.push_back(rays.size() == kRayCount ? std::string(kRayLabels[i])
                                                : "v" + std::to_string(i));
  }
  return ColoredGraph(std::move(labels), std::move(q));
}

inline ColoredGraph build_graph(const std::array<LRPoint, kRayCount>& rays) {
  return build_graph(std::vector<Vec6>(rays.begin(), rays.end()));
}

// All color-preserving vertex permutations, by backtracking. Candidate
// images are restricted to vertices with the same color signature (vertex
// color plus multiset of incident edge colors); partial assignments are
// checked edge by edge against what is already placed. Every result is
// re-verified in full before being returned. Graphs have at most 9 vertices
// here; permutations fix indices beyond the graph size.
inline std::vector<RayPermutation> automorphisms(const ColoredGraph& g) {
  const std::size_t n = g.size();
  if (n > 9) throw std::invalid_argument("automorphisms supports at most 9 vertices");

  using Signature = std::pair<Rat, std::vector<Rat>>;
  std::vector<Signature> sig(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rat> incident;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) incident.push_back(g.edge_color(i, j));
    std::sort(incident.begin(), incident.end());
    sig[i] = {g.vertex_color(i), std::move(incident)};
  }

  std::vector<RayPermutation> found;
  RayPermutation p = RayPermutation::identity();
  std::array<bool, 9> used{};

  auto rec = [&](auto&& self, std::size_t v) -> void {
    if (v == n) {
      found.push_back(p);
      return;
    }
    for (std::size_t w = 0; w < n; ++w) {
      if (used[w] || sig[w] != sig[v]) continue;
      bool ok = true;
      for (std::size_t prev = 0; prev < v && ok; ++prev)
        ok = g.edge_color(v, prev) == g.edge_color(w, p.image[prev]);
      if (!ok) continue;
      used[w] = true;
      p.image[v] = static_cast<std::uint8_t>(w);
      self(self, v + 1);
      used[w] = false;
    }
  };
  rec(rec, 0);

  for (const RayPermutation& a : found) {
    for (std::size_t i = 0; i < n; ++i) {
      if (g.vertex_color(a.image[i]) != g.vertex_color(i))
        throw std::logic_error("automorphism search returned a color violation");
      for (std::size_t j = i + 1; j < n; ++j)
        if (g.edge_color(a.image[i], a.image[j]) != g.edge_color(i, j))
          throw std::logic_error("automorphism search returned a color violation");
    }
  }
  std::sort(found.begin(), found.end());
  return found;
}

// Exhaustively stored permutation group, elements sorted.
struct PermGroup {
  std::vector<RayPermutation> elements;

  std::size_t size() const { return elements.size(); }
  bool contains(const RayPermutation& p) const {
    return std::binary_search(elements.begin(), elements.end(), p);
  }
};

// Breadth-first products until the element set stabilizes.
inline PermGroup closure(const std::vector<RayPermutation>& generators) {
  std::set<RayPermutation> elems = {RayPermutation::identity()};
  std::vector<RayPermutation> frontier(elems.begin(), elems.end());
  while (!frontier.empty()) {
    std::vector<RayPermutation> next;
    for (const RayPermutation& a : frontier)
      for (const RayPermutation& g : generators) {
        const RayPermutation c = g * a;
        if (elems.insert(c).second) next.push_back(c);
      }
    frontier = std::move(next);
  }
  return PermGroup{std::vector<RayPermutation>(elems.begin(), elems.end())};
}

// Orbit of a seed under a fully enumerated group (the element list must be
// closed, so applying every element once reaches the whole orbit).
template <class Seed, class Action>
std::vector<Seed> orbit(const PermGroup& group, const Seed& seed, Action&& act) {
  std::set<Seed> out;
  for (const RayPermutation& p : group.elements) out.insert(act(p, seed));
  return std::vector<Seed>(out.begin(), out.end());
}

inline std::vector<int> vertex_orbit(const PermGroup& group, int v) {
  return orbit(group, v, [](const RayPermutation& p, int w) {
    return static_cast<int>(p.image[static_cast<std::size_t>(w)]);
  });
}

// The named generators of the ray-set symmetry group.
struct GeneratorPerms {
  RayPermutation s, t, u, x, v, y;
};

inline GeneratorPerms generator_permutations() {
  return GeneratorPerms{
      RayPermutation::from_cycles({"(d1,d2)", "(e1,e2)", "(g1,g2)"}),
      RayPermutation::from_cycles({"(d1,d2)", "(e1,g1)", "(e2,g2)", "(c,f)"}),
      RayPermutation::from_cycles({"(d1,g2)", "(d2,e2)", "(e1,g1)"}),
      RayPermutation::from_cycles({"(e1,g2)"}),
      RayPermutation::from_cycles({"(c,f)"}),
      RayPermutation::from_cycles({"(e1,d2)"}),
  };
}

namespace detail {

// Evaluates a word of permutations under one of the two reading orders.
inline RayPermutation word(const std::vector<RayPermutation>& factors,
                           bool rightmost_first) {
  RayPermutation r = RayPermutation::identity();
  if (rightmost_first) {
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) r = *it * r;
  } else {
    for (const RayPermutation& f : factors) r = f * r;
  }
  return r;
}

}  // namespace detail

// The defining relations v = txsx and y = usxsu, checked under both reading
// orders of the words. The library's fixed convention is rightmost-first
// (function composition); for these particular words the other order agrees,
// and the report records that fact rather than hiding it.
struct RelationReport {
  bool v_txsx_rightmost_first = false;
  bool v_txsx_leftmost_first = false;
  bool y_usxsu_rightmost_first = false;
  bool y_usxsu_leftmost_first = false;

  bool ok() const { return v_txsx_rightmost_first && y_usxsu_rightmost_first; }
};

inline RelationReport verify_relations() {
  const GeneratorPerms g = generator_permutations();
  RelationReport rep;
  const std::vector<RayPermutation> txsx = {g.t, g.x, g.s, g.x};
  const std::vector<RayPermutation> usxsu = {g.u, g.s, g.x, g.s, g.u};
  rep.v_txsx_rightmost_first = detail::word(txsx, true) == g.v;
  rep.v_txsx_leftmost_first = detail::word(txsx, false) == g.v;
  rep.y_usxsu_rightmost_first = detail::word(usxsu, true) == g.y;
  rep.y_usxsu_leftmost_first = detail::word(usxsu, false) == g.y;
  return rep;
}

// Brute-force enumeration of the permutations the block structure allows:
// b fixed, {c, f} preserved setwise, and the pair of blocks
// {d1, e2, g1} / {d2, e1, g2} preserved or swapped. The automorphism group
// of the colored graph must equal exactly this set.
inline std::vector<RayPermutation> block_stabilizer_permutations() {
  auto mask_of = [](const std::array<int, 3>& block, const std::array<int, 9>& img) {
    int m = 0;
    for (int idx : block) m |= 1 << img[static_cast<std::size_t>(idx)];
    return m;
  };
  const int block_one = (1 << 3) | (1 << 7) | (1 << 5);
  const int block_two = (1 << 6) | (1 << 4) | (1 << 8);
  const int cf = (1 << 1) | (1 << 2);

  std::array<int, 9> img = {0, 1, 2, 3, 4, 5, 6, 7, 8};
  std::vector<RayPermutation> out;
  do {
    if (img[0] != 0) continue;
    if (((1 << img[1]) | (1 << img[2])) != cf) continue;
    const int one = mask_of(kBlockOne, img);
    const int two = mask_of(kBlockTwo, img);
    if (!((one == block_one && two == block_two) || (one == block_two && two == block_one)))
      continue;
    RayPermutation p;
    for (std::size_t i = 0; i < 9; ++i) p.image[i] = static_cast<std::uint8_t>(img[i]);
    out.push_back(p);
  } while (std::next_permutation(img.begin(), img.end()));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace lr3
