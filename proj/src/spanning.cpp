// Copyright 2026 The bicross Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bicross/spanning.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <unordered_map>

#include "bicross/errors.hpp"

namespace bicross {

namespace {

template <class Wide>
struct KeyedEdge {
  Wide key;
  int a;  // local indices, a < b
  int b;
};

template <class Int>
auto sorted_edges(const detail::Lattice<Int>& L, std::span<const int> local_to_global) {
  using Wide = typename detail::Lattice<Int>::Wide;
  std::vector<KeyedEdge<Wide>> edges;
  const int m = static_cast<int>(local_to_global.size());
  edges.reserve(static_cast<std::size_t>(m) * (m - 1) / 2);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      edges.push_back({L.sq_dist(local_to_global[i], local_to_global[j]), i, j});
    }
  }
  // local indices follow ascending global order, so (a, b) order matches
  // the (min global index, max global index) tie-break.
  std::sort(edges.begin(), edges.end(), [](const auto& u, const auto& v) {
    if (u.key != v.key) return u.key < v.key;
    if (u.a != v.a) return u.a < v.a;
    return u.b < v.b;
  });
  return edges;
}

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
};

// Union-find without path compression so that unions can be undone.
class RollbackSets {
 public:
  explicit RollbackSets(int n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int v) const {
    while (parent_[v] != v) v = parent_[v];
    return v;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    history_.push_back(b);
    return true;
  }

  std::size_t checkpoint() const { return history_.size(); }

  void rollback(std::size_t mark) {
    while (history_.size() > mark) {
      int b = history_.back();
      history_.pop_back();
      int a = parent_[b];
      size_[a] -= size_[b];
      parent_[b] = b;
    }
  }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  std::vector<int> history_;
};

std::vector<int> sorted_unique(std::span<const int> subset) {
  std::vector<int> v(subset.begin(), subset.end());
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

Tree mst(const PointSet& points, std::span<const int> subset) {
  Tree tree;
  tree.vertices = sorted_unique(subset);
  const auto& verts = tree.vertices;
  const int m = static_cast<int>(verts.size());
  if (m <= 1) return tree;
  points.visit_lattice([&](const auto& L) {
    auto edges = sorted_edges(L, verts);
    DisjointSets sets(m);
    std::vector<int> usable;
    std::size_t i = 0;
    while (i < edges.size() && static_cast<int>(tree.edges.size()) < m - 1) {
      std::size_t j = i;
      while (j < edges.size() && edges[j].key == edges[i].key) ++j;
      // A usable edge of this weight class that ends up rejected means an
      // exchange with a class-mate yields a second MST.
      usable.clear();
      for (std::size_t k = i; k < j; ++k) {
        if (sets.find(edges[k].a) != sets.find(edges[k].b)) usable.push_back(static_cast<int>(k));
      }
      for (int k : usable) {
        if (sets.unite(edges[k].a, edges[k].b)) {
          tree.edges.push_back(Segment{verts[edges[k].a], verts[edges[k].b]});
        } else {
          tree.tie = true;
        }
      }
      i = j;
    }
  });
  std::sort(tree.edges.begin(), tree.edges.end());
  return tree;
}

Tree mst(const PointSet& points) {
  std::vector<int> all(points.size());
  std::iota(all.begin(), all.end(), 0);
  return mst(points, all);
}

std::vector<WeightClass> weight_classes(const PointSet& points, std::span<const int> subset) {
  std::vector<int> verts = sorted_unique(subset);
  std::vector<WeightClass> classes;
  points.visit_lattice([&](const auto& L) {
    auto edges = sorted_edges(L, verts);
    for (std::size_t i = 0; i < edges.size();) {
      std::size_t j = i;
      WeightClass cls;
      cls.squared_length = squared_length(points, Segment{verts[edges[i].a], verts[edges[i].b]});
      while (j < edges.size() && edges[j].key == edges[i].key) {
        cls.edges.push_back(Segment{verts[edges[j].a], verts[edges[j].b]});
        ++j;
      }
      classes.push_back(std::move(cls));
      i = j;
    }
  });
  return classes;
}

namespace {

class MstEnumerator {
 public:
  MstEnumerator(std::vector<int> verts, std::vector<std::vector<Segment>> classes, std::size_t cap)
      : verts_(std::move(verts)), classes_(std::move(classes)), cap_(cap),
        sets_(static_cast<int>(verts_.size())) {
    for (std::size_t i = 0; i < verts_.size(); ++i) local_[verts_[i]] = static_cast<int>(i);
  }

  std::vector<Tree> run() {
    if (verts_.size() <= 1) {
      Tree t;
      t.vertices = verts_;
      trees_.push_back(t);
      return trees_;
    }
    descend(0);
    for (Tree& t : trees_) {
      std::sort(t.edges.begin(), t.edges.end());
      t.tie = trees_.size() > 1;
    }
    std::sort(trees_.begin(), trees_.end(),
              [](const Tree& s, const Tree& t) { return s.edges < t.edges; });
    return trees_;
  }

 private:
  int local(int global) const { return local_.at(global); }

  void descend(std::size_t cls) {
    if (chosen_.size() + 1 == verts_.size()) {
      if (trees_.size() >= cap_) {
        throw Error(ErrorCode::kCapExceeded, "more than " + std::to_string(cap_) + " MSTs");
      }
      Tree t;
      t.vertices = verts_;
      t.edges = chosen_;
      trees_.push_back(std::move(t));
      return;
    }
    if (cls >= classes_.size()) return;
    std::vector<Segment> usable;
    for (const Segment& e : classes_[cls]) {
      if (sets_.find(local(e.a)) != sets_.find(local(e.b))) usable.push_back(e);
    }
    if (usable.empty()) {
      descend(cls + 1);
      return;
    }
    std::size_t mark = sets_.checkpoint();
    std::size_t rank = 0;
    for (const Segment& e : usable) rank += sets_.unite(local(e.a), local(e.b));
    bool forced = rank == usable.size();
    if (forced) {
      chosen_.insert(chosen_.end(), usable.begin(), usable.end());
      descend(cls + 1);
      chosen_.resize(chosen_.size() - usable.size());
      sets_.rollback(mark);
      return;
    }
    sets_.rollback(mark);
    choose(cls, usable, 0, 0, rank);
  }

  // Enumerates every acyclic rank-sized subset of `usable`.
  void choose(std::size_t cls, const std::vector<Segment>& usable, std::size_t i,
              std::size_t picked, std::size_t rank) {
    if (picked == rank) {
      descend(cls + 1);
      return;
    }
    if (usable.size() - i < rank - picked) return;
    const Segment& e = usable[i];
    std::size_t mark = sets_.checkpoint();
    if (sets_.unite(local(e.a), local(e.b))) {
      chosen_.push_back(e);
      choose(cls, usable, i + 1, picked + 1, rank);
      chosen_.pop_back();
      sets_.rollback(mark);
    }
    choose(cls, usable, i + 1, picked, rank);
  }

  std::vector<int> verts_;
  std::vector<std::vector<Segment>> classes_;
  std::size_t cap_;
  RollbackSets sets_;
  std::unordered_map<int, int> local_;
  std::vector<Segment> chosen_;
  std::vector<Tree> trees_;
};

}  // namespace

std::vector<Tree> enumerate_msts(const PointSet& points, std::span<const int> subset,
                                 std::size_t cap) {
  std::vector<int> verts = sorted_unique(subset);
  std::vector<std::vector<Segment>> classes;
  for (auto& cls : weight_classes(points, verts)) classes.push_back(std::move(cls.edges));
  return MstEnumerator(std::move(verts), std::move(classes), cap).run();
}

bool tree_is_mst(const PointSet& points, const Tree& tree) {
  const auto& verts = tree.vertices;
  const int m = static_cast<int>(verts.size());
  if (static_cast<int>(tree.edges.size()) != std::max(m - 1, 0)) return false;
  std::unordered_map<int, int> local;
  for (int i = 0; i < m; ++i) local[verts[i]] = i;
  std::vector<std::vector<int>> adj(m);
  for (const Segment& e : tree.edges) {
    auto ia = local.find(e.a);
    auto ib = local.find(e.b);
    if (ia == local.end() || ib == local.end() || e.a == e.b) return false;
    adj[ia->second].push_back(ib->second);
    adj[ib->second].push_back(ia->second);
  }
  return points.visit_lattice([&](const auto& L) {
    using Wide = typename std::decay_t<decltype(L)>::Wide;
    std::vector<Wide> path_max(m);
    std::vector<int> seen(m, -1);
    for (int root = 0; root < m; ++root) {
      std::queue<int> queue;
      queue.push(root);
      seen[root] = root;
      path_max[root] = 0;
      int reached = 1;
      while (!queue.empty()) {
        int u = queue.front();
        queue.pop();
        for (int v : adj[u]) {
          if (seen[v] == root) continue;
          seen[v] = root;
          Wide w = L.sq_dist(verts[u], verts[v]);
          path_max[v] = path_max[u] > w ? path_max[u] : w;
          queue.push(v);
          ++reached;
        }
      }
      if (reached != m) return false;
      for (int v = root + 1; v < m; ++v) {
        if (path_max[v] > L.sq_dist(verts[root], verts[v])) return false;
      }
    }
    return true;
  });
}

std::vector<Coord> edge_length_multiset(const PointSet& points, const Tree& tree) {
  std::vector<Coord> lengths;
  lengths.reserve(tree.edges.size());
  for (const Segment& e : tree.edges) lengths.push_back(squared_length(points, e));
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

}  // namespace bicross
