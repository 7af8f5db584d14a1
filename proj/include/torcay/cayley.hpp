#pragma once

#include "torcay/lattice.hpp"
#include "torcay/types.hpp"

#include <array>
#include <utility>
#include <vector>

namespace torcay {

/// The spin flip acts on translations by negation.
enum class Spin { Plus, Minus };

inline Spin operator*(Spin a, Spin b) { return a == b ? Spin::Plus : Spin::Minus; }

/// Element of G_N = Z^2/N x| Z/2: canonical coset vector plus spin bit.
struct GroupElement {
  Vec2 t = Vec2::Zero();
  Spin spin = Spin::Plus;

  friend bool operator==(const GroupElement& g, const GroupElement& h) {
    return eq(g.t, h.t) && g.spin == h.spin;
  }
};

inline GroupElement identity_element() { return {}; }

/// Semidirect product law: (t, e)(t', e') = (t + e*t', e*e'), reduced mod N.
GroupElement multiply(const GroupElement& g, const GroupElement& h, const Lattice& n);

/// The three spin-flip generators a = (v1, s), b = (v1 + v2, s), c = (v2, s),
/// with translation parts reduced mod N.
std::array<GroupElement, 3> generators(const Lattice& n);

/// Fullerene Cayley graph X_N on the 2n elements of G_N. Plus-spin vertices
/// come first, both blocks in coset_reps order. Multi-edges are allowed at
/// build time; see is_simple_fullerene.
struct FullereneGraph {
  Lattice lattice{Mat2::Identity()};
  std::vector<GroupElement> vertices;
  Eigen::MatrixXi adjacency;              // entry = number of edges (0..3)
  std::vector<std::array<Int, 6>> faces;  // filled by enumerate_faces
  Int degenerate_walks = -1;              // -1 until faces are enumerated

  Int vertex_index(const GroupElement& g) const;
};

/// Builds vertices and adjacency; each unordered edge {g, g*s} is counted once.
FullereneGraph build_graph(const Lattice& n);

struct FaceSummary {
  Int faces;
  Int degenerate_walks;  // distinct closed walks that repeat a vertex
};

/// Walks the three rotated face words (abcabc, bcabca, cabcab) from every
/// vertex, deduplicates cyclic rotations and reflections, and stores the
/// clean 6-cycles in g.faces. Degenerate walks are reported, not errors.
FaceSummary enumerate_faces(FullereneGraph& g);

struct ValidityReport {
  Int vertices = 0;
  Int edges = 0;
  Int faces = 0;
  bool simple = false;          // no multi-edges, from the adjacency matrix
  bool simple_algebraic = false;  // none of v1, v2, v1 - v2 lies in N
  bool faces_ok = false;
  bool euler_ok = false;
  bool valid = false;  // simple && faces_ok && euler_ok
};

/// Validity checks for a built graph; enumerates faces on demand.
ValidityReport is_simple_fullerene(FullereneGraph& g);

/// (plus-spin indices, minus-spin indices); every edge crosses the split.
std::pair<std::vector<Int>, std::vector<Int>> bipartition(const FullereneGraph& g);

}  // namespace torcay
