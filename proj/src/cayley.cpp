#include "torcay/cayley.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace torcay {

GroupElement multiply(const GroupElement& g, const GroupElement& h, const Lattice& n) {
  const Int sign = g.spin == Spin::Plus ? 1 : -1;
  return {n.reduce(g.t + sign * h.t), g.spin * h.spin};
}

std::array<GroupElement, 3> generators(const Lattice& n) {
  return {GroupElement{n.reduce(Vec2(1, 0)), Spin::Minus},
          GroupElement{n.reduce(Vec2(1, 1)), Spin::Minus},
          GroupElement{n.reduce(Vec2(0, 1)), Spin::Minus}};
}

Int FullereneGraph::vertex_index(const GroupElement& g) const {
  const Int offset = g.spin == Spin::Minus ? lattice.index() : 0;
  return offset + lattice.rep_index(g.t);
}

FullereneGraph build_graph(const Lattice& n) {
  FullereneGraph g{n, {}, {}, {}, -1};
  const Int count = n.index();
  g.vertices.reserve(static_cast<std::size_t>(2 * count));
  for (const Vec2& rep : n.coset_reps()) g.vertices.push_back({rep, Spin::Plus});
  for (const Vec2& rep : n.coset_reps()) g.vertices.push_back({rep, Spin::Minus});

  g.adjacency = Eigen::MatrixXi::Zero(2 * count, 2 * count);
  const auto gens = generators(n);
  // Every edge joins a plus vertex to a minus vertex, so scanning the plus
  // block records each unordered pair exactly once.
  for (Int i = 0; i < count; ++i) {
    for (const GroupElement& s : gens) {
      const Int j = g.vertex_index(multiply(g.vertices[static_cast<std::size_t>(i)], s, n));
      g.adjacency(i, j) += 1;
      g.adjacency(j, i) += 1;
    }
  }
  return g;
}

namespace {

std::array<Int, 6> canonical_cycle(const std::array<Int, 6>& walk) {
  std::array<Int, 6> best = walk;
  for (int dir : {1, -1}) {
    for (int start = 0; start < 6; ++start) {
      std::array<Int, 6> candidate;
      for (int k = 0; k < 6; ++k) {
        candidate[static_cast<std::size_t>(k)] =
            walk[static_cast<std::size_t>(((start + dir * k) % 6 + 6) % 6)];
      }
      best = std::min(best, candidate);
    }
  }
  return best;
}

}  // namespace

FaceSummary enumerate_faces(FullereneGraph& g) {
  static constexpr int kFaceWords[3][6] = {
      {0, 1, 2, 0, 1, 2}, {1, 2, 0, 1, 2, 0}, {2, 0, 1, 2, 0, 1}};

  const auto gens = generators(g.lattice);
  std::set<std::array<Int, 6>> clean;
  std::set<std::array<Int, 6>> degenerate;

  const Int total = static_cast<Int>(g.vertices.size());
  for (Int v = 0; v < total; ++v) {
    for (const auto& word : kFaceWords) {
      std::array<Int, 6> walk;
      walk[0] = v;
      GroupElement cur = g.vertices[static_cast<std::size_t>(v)];
      for (int step = 0; step < 5; ++step) {
        cur = multiply(cur, gens[static_cast<std::size_t>(word[step])], g.lattice);
        walk[static_cast<std::size_t>(step + 1)] = g.vertex_index(cur);
      }
      // The face words square the (abc)-relation, so the sixth step closes.
      assert(g.vertex_index(multiply(cur, gens[static_cast<std::size_t>(word[5])], g.lattice)) ==
             v);
      std::array<Int, 6> sorted = walk;
      std::sort(sorted.begin(), sorted.end());
      const bool distinct = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
      (distinct ? clean : degenerate).insert(canonical_cycle(walk));
    }
  }

  g.faces.assign(clean.begin(), clean.end());
  g.degenerate_walks = static_cast<Int>(degenerate.size());
  return {static_cast<Int>(g.faces.size()), g.degenerate_walks};
}

ValidityReport is_simple_fullerene(FullereneGraph& g) {
  if (g.degenerate_walks < 0) enumerate_faces(g);

  ValidityReport report;
  report.vertices = static_cast<Int>(g.vertices.size());
  report.edges = g.adjacency.sum() / 2;
  report.faces = static_cast<Int>(g.faces.size());

  report.simple = g.adjacency.maxCoeff() <= 1;
  report.simple_algebraic = !g.lattice.contains(Vec2(1, 0)) && !g.lattice.contains(Vec2(0, 1)) &&
                            !g.lattice.contains(Vec2(1, -1));

  std::vector<Int> faces_at(static_cast<std::size_t>(report.vertices), 0);
  for (const auto& face : g.faces) {
    for (Int v : face) faces_at[static_cast<std::size_t>(v)] += 1;
  }
  report.faces_ok = g.degenerate_walks == 0 &&
                    std::all_of(faces_at.begin(), faces_at.end(), [](Int c) { return c == 3; });
  report.euler_ok = report.vertices - report.edges + report.faces == 0;
  report.valid = report.simple && report.faces_ok && report.euler_ok;
  return report;
}

std::pair<std::vector<Int>, std::vector<Int>> bipartition(const FullereneGraph& g) {
  std::vector<Int> plus, minus;
  for (Int i = 0; i < static_cast<Int>(g.vertices.size()); ++i) {
    (g.vertices[static_cast<std::size_t>(i)].spin == Spin::Plus ? plus : minus).push_back(i);
  }
  return {std::move(plus), std::move(minus)};
}

}  // namespace torcay
