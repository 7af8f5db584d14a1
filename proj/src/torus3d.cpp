#include "torcay/torus3d.hpp"

#include "torcay/families.hpp"
#include "torcay/spectra.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <stdexcept>

namespace torcay {

Eigen::Vector2d hex_to_cartesian(double x, double y) {
  return {x - 0.5 * y, 0.5 * std::sqrt(3.0) * y};
}

namespace {

// Translation coordinates (v-basis) expressed in the hexagonal basis:
// v1 = (2, 1), v2 = (1, 2).
Eigen::Vector2d v_to_cartesian(const Vec2& t) {
  return hex_to_cartesian(static_cast<double>(2 * t(0) + t(1)),
                          static_cast<double>(t(0) + 2 * t(1)));
}

EdgeStats edge_stats(const std::vector<double>& lengths) {
  EdgeStats stats;
  if (lengths.empty()) return stats;
  stats.min_length = std::numeric_limits<double>::infinity();
  for (double len : lengths) {
    stats.min_length = std::min(stats.min_length, len);
    stats.max_length = std::max(stats.max_length, len);
    stats.mean_length += len;
  }
  stats.mean_length /= static_cast<double>(lengths.size());
  stats.ratio = stats.max_length / stats.min_length;
  return stats;
}

std::ofstream open_output(const std::filesystem::path& path, const char* what) {
  if (path.empty()) {
    throw std::invalid_argument(std::string(what) + ": empty output path");
  }
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error(std::string(what) + ": cannot open " + path.string());
  }
  out << std::fixed << std::setprecision(6);
  return out;
}

void finish_output(std::ofstream& out, const std::filesystem::path& path, const char* what) {
  out.flush();
  if (!out) {
    throw std::runtime_error(std::string(what) + ": write failed for " + path.string());
  }
}

}  // namespace

PlanarLayout planar_layout(Int p, Int q) {
  PlanarLayout layout;
  layout.p = p;
  layout.q = q;

  const Lattice lattice = family_lattice(p, q);
  FullereneGraph graph = build_graph(lattice);
  enumerate_faces(graph);
  if (!is_simple_fullerene(graph).simple) {
    throw std::domain_error("planar_layout: X_{p,q} has multi-edges for these parameters");
  }
  layout.gap = homo_lumo_gap(lattice);

  layout.span_u = static_cast<double>(p) * v_to_cartesian(Vec2(1, 0));
  layout.span_v = static_cast<double>(q) * v_to_cartesian(Vec2(-1, 2));

  layout.positions.reserve(graph.vertices.size());
  layout.uv.reserve(graph.vertices.size());
  for (const GroupElement& g : graph.vertices) {
    const double sign = g.spin == Spin::Plus ? 1.0 : -1.0;
    // rho(g) = g(e0): the coset translation, then +-e0 for the spin.
    const Eigen::Vector2d pos = v_to_cartesian(g.t) + sign * hex_to_cartesian(1.0, 1.0);
    double u = pos.dot(layout.span_u) / layout.span_u.squaredNorm();
    double v = pos.dot(layout.span_v) / layout.span_v.squaredNorm();
    u -= std::floor(u);
    v -= std::floor(v);
    layout.positions.push_back(pos);
    layout.uv.emplace_back(u, v);
  }
  layout.graph = std::move(graph);
  return layout;
}

Embedding3D torus_map(const PlanarLayout& layout) {
  Embedding3D emb;
  emb.p = layout.p;
  emb.q = layout.q;
  emb.gap = layout.gap;
  emb.tube_radius = layout.span_u.norm() / two_pi;
  emb.ring_radius = layout.span_v.norm() / two_pi;
  if (!(emb.tube_radius < emb.ring_radius)) {
    throw std::domain_error("torus_map: tube radius must stay below ring radius (needs sqrt(3)p < 3q)");
  }

  emb.positions.reserve(layout.positions.size());
  for (const Eigen::Vector2d& uv : layout.uv) {
    const double phi = two_pi * uv(0);
    const double psi = two_pi * uv(1);
    const double w = emb.ring_radius + emb.tube_radius * std::cos(phi);
    emb.positions.emplace_back(w * std::cos(psi), w * std::sin(psi),
                               emb.tube_radius * std::sin(phi));
  }

  const Eigen::MatrixXi& adj = layout.graph.adjacency;
  for (Int i = 0; i < adj.rows(); ++i) {
    for (Int j = i + 1; j < adj.cols(); ++j) {
      if (adj(i, j) == 0) continue;
      emb.edges.emplace_back(i, j);
      emb.edge_lengths.push_back((emb.positions[static_cast<std::size_t>(i)] -
                                  emb.positions[static_cast<std::size_t>(j)])
                                     .norm());
    }
  }
  emb.faces = layout.graph.faces;
  emb.stats = edge_stats(emb.edge_lengths);
  return emb;
}

void export_xyz(const Embedding3D& embedding, double bond_scale,
                const std::filesystem::path& path) {
  std::ofstream out = open_output(path, "export_xyz");
  out << embedding.positions.size() << '\n';
  out << "p=" << embedding.p << " q=" << embedding.q << " gap=" << embedding.gap << '\n';
  for (const Eigen::Vector3d& pos : embedding.positions) {
    out << "C " << bond_scale * pos(0) << ' ' << bond_scale * pos(1) << ' '
        << bond_scale * pos(2) << '\n';
  }
  finish_output(out, path, "export_xyz");
}

void export_obj(const Embedding3D& embedding, const std::filesystem::path& path) {
  std::ofstream out = open_output(path, "export_obj");
  for (const Eigen::Vector3d& pos : embedding.positions) {
    out << "v " << pos(0) << ' ' << pos(1) << ' ' << pos(2) << '\n';
  }
  for (const auto& [i, j] : embedding.edges) {
    out << "l " << i + 1 << ' ' << j + 1 << '\n';
  }
  for (const auto& face : embedding.faces) {
    out << 'f';
    for (Int v : face) out << ' ' << v + 1;
    out << '\n';
  }
  finish_output(out, path, "export_obj");
}

}  // namespace torcay
