// Command-line front end: builds fullerene Cayley graphs from an integer
// sublattice, reports spectra and gaps, scans the X_{p,q} family, and writes
// 3D coordinate files.
//
// Exit codes: 0 success, 1 verification failure, 2 argument error,
// 3 validity failure (degenerate graph, self-intersecting torus),
// 4 oracle mismatch beyond tolerance.

#include "torcay/affine.hpp"
#include "torcay/cayley.hpp"
#include "torcay/families.hpp"
#include "torcay/lattice.hpp"
#include "torcay/spectra.hpp"
#include "torcay/torus3d.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using json = nlohmann::ordered_json;
using namespace torcay;

constexpr int kExitVerification = 1;
constexpr int kExitArguments = 2;
constexpr int kExitValidity = 3;
constexpr int kExitOracle = 4;

std::string fixed6(double value) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(6) << value;
  return out.str();
}

struct LatticeChoice {
  std::vector<Int> basis;  // a,b,c,d = columns (a,b),(c,d)
  std::vector<Int> pq;

  void attach(CLI::App* cmd) {
    cmd->add_option("--basis", basis,
                    "lattice basis as four integers a,b,c,d for columns (a,b),(c,d)")
        ->delimiter(',')
        ->expected(4);
    cmd->add_option("--pq", pq, "family parameters p,q for the lattice N_{p,q}")
        ->delimiter(',')
        ->expected(2);
  }

  bool is_family() const { return !pq.empty(); }

  Lattice resolve() const {
    if (basis.empty() == pq.empty()) {
      throw CLI::ValidationError("lattice", "exactly one of --basis or --pq is required");
    }
    if (is_family()) return family_lattice(pq[0], pq[1]);
    return Lattice::from_columns(Vec2(basis[0], basis[1]), Vec2(basis[2], basis[3]));
  }

  json describe(const Lattice& lattice) const {
    json out;
    if (is_family()) {
      out["p"] = pq[0];
      out["q"] = pq[1];
    }
    out["basis"] = {{lattice.basis()(0, 0), lattice.basis()(0, 1)},
                    {lattice.basis()(1, 0), lattice.basis()(1, 1)}};
    out["hnf"] = {{lattice.hnf()(0, 0), lattice.hnf()(0, 1)},
                  {lattice.hnf()(1, 0), lattice.hnf()(1, 1)}};
    out["index"] = lattice.index();
    return out;
  }
};

void emit(const json& document) { std::cout << document.dump(2) << '\n'; }

int run_verify_embeddings(bool as_json) {
  bool all_pass = true;
  json rows = json::array();
  for (const EmbeddingSpec& spec : builtin_embeddings()) {
    const VerificationReport report = verify_embedding(spec);
    all_pass = all_pass && report.pass;
    if (as_json) {
      json row;
      row["id"] = report.id;
      row["pass"] = report.pass;
      row["relations"] = json::array();
      for (const auto& relation : report.relations) {
        row["relations"].push_back({{"word", relation.word}, {"holds", relation.holds}});
      }
      row["witnesses"] = json::array();
      for (const auto& witness : report.witnesses) {
        json w{{"word", witness.word},
               {"is_translation", witness.is_translation},
               {"vector", {witness.image.t(0), witness.image.t(1)}},
               {"matches", witness.matches}};
        if (witness.expected) w["expected"] = {(*witness.expected)(0), (*witness.expected)(1)};
        row["witnesses"].push_back(std::move(w));
      }
      rows.push_back(std::move(row));
    } else {
      std::size_t relations_ok = 0;
      for (const auto& relation : report.relations) relations_ok += relation.holds;
      std::size_t witnesses_ok = 0;
      for (const auto& witness : report.witnesses) witnesses_ok += witness.matches;
      std::cout << report.id << "  relations " << relations_ok << '/'
                << report.relations.size() << "  witnesses " << witnesses_ok << '/'
                << report.witnesses.size() << " ";
      for (const auto& witness : report.witnesses) {
        std::cout << ' ' << witness.word << "->(" << witness.image.t(0) << ','
                  << witness.image.t(1) << ')';
      }
      std::cout << (report.pass ? "  PASS" : "  FAIL") << '\n';
    }
  }
  if (as_json) {
    emit(json{{"command", "verify-embeddings"},
              {"lattice", nullptr},
              {"result", {{"pass", all_pass}, {"embeddings", std::move(rows)}}}});
  } else {
    std::cout << (all_pass ? "PASS" : "FAIL") << '\n';
  }
  return all_pass ? 0 : kExitVerification;
}

int run_graph(const LatticeChoice& choice, bool as_json) {
  const Lattice lattice = choice.resolve();
  FullereneGraph graph = build_graph(lattice);
  const ValidityReport report = is_simple_fullerene(graph);
  if (as_json) {
    emit(json{{"command", "graph"},
              {"lattice", choice.describe(lattice)},
              {"result",
               {{"vertices", report.vertices},
                {"edges", report.edges},
                {"faces", report.faces},
                {"degenerate_walks", graph.degenerate_walks},
                {"simple", report.simple},
                {"faces_ok", report.faces_ok},
                {"euler", report.vertices - report.edges + report.faces},
                {"valid", report.valid}}}});
  } else {
    std::cout << "vertices " << report.vertices << '\n'
              << "edges " << report.edges << '\n'
              << "faces " << report.faces << '\n'
              << "simple " << (report.simple ? "true" : "false") << '\n'
              << "valid " << (report.valid ? "true" : "false") << '\n'
              << "euler " << report.vertices - report.edges + report.faces << '\n';
  }
  return 0;
}

int run_spectrum(const LatticeChoice& choice, bool with_oracle, double tol, bool as_json) {
  const Lattice lattice = choice.resolve();
  const SpectrumReport closed = closed_form_spectrum(lattice);

  double max_deviation = 0.0;
  if (with_oracle) {
    FullereneGraph graph = build_graph(lattice);
    const SpectrumReport oracle = oracle_spectrum(graph);
    for (std::size_t i = 0; i < closed.eigenvalues.size(); ++i) {
      max_deviation =
          std::max(max_deviation, std::abs(closed.eigenvalues[i] - oracle.eigenvalues[i]));
    }
  }

  if (as_json) {
    json result{{"eigenvalues", closed.eigenvalues}, {"gap", closed.gap}};
    if (with_oracle) {
      result["oracle_max_deviation"] = max_deviation;
      result["tolerance"] = tol;
    }
    emit(json{{"command", "spectrum"},
              {"lattice", choice.describe(lattice)},
              {"result", std::move(result)}});
  } else {
    std::cout << "eigenvalues";
    for (double value : closed.eigenvalues) std::cout << ' ' << fixed6(value);
    std::cout << '\n' << "gap " << fixed6(closed.gap) << '\n';
    if (with_oracle) {
      std::cout << "oracle_max_deviation " << std::scientific << std::setprecision(3)
                << max_deviation << '\n';
    }
  }
  return with_oracle && max_deviation > tol ? kExitOracle : 0;
}

int run_gap(const LatticeChoice& choice, bool as_json) {
  const Lattice lattice = choice.resolve();
  const double gap = homo_lumo_gap(lattice);
  std::optional<double> asymptote;
  if (choice.is_family()) asymptote = gap_asymptote(choice.pq[0]);

  if (as_json) {
    json result{{"gap", gap}};
    if (asymptote) {
      result["asymptote"] = *asymptote;
      result["deviation"] = std::abs(gap - *asymptote);
    }
    emit(json{{"command", "gap"},
              {"lattice", choice.describe(lattice)},
              {"result", std::move(result)}});
  } else {
    std::cout << "gap " << fixed6(gap) << '\n';
    if (asymptote) {
      std::cout << "asymptote " << fixed6(*asymptote) << '\n'
                << "deviation " << fixed6(std::abs(gap - *asymptote)) << '\n';
    }
  }
  return 0;
}

int run_scan(Int p_max, const std::vector<Int>& q_list, bool as_csv, bool as_json) {
  const auto rows = scan(p_max, q_list);
  if (as_json) {
    json table = json::array();
    for (const FamilyPoint& row : rows) {
      table.push_back({{"p", row.p},
                       {"q", row.q},
                       {"vertices", row.vertices},
                       {"gap", row.gap},
                       {"character_gap", row.character_gap},
                       {"asymptote", row.asymptote},
                       {"deviation", row.deviation},
                       {"consistent", row.consistent}});
    }
    emit(json{{"command", "scan"}, {"lattice", nullptr}, {"result", std::move(table)}});
    return 0;
  }
  if (as_csv) std::cout << "p,q,vertices,gap,asymptote,deviation\n";
  for (const FamilyPoint& row : rows) {
    if (as_csv) {
      std::cout << row.p << ',' << row.q << ',' << row.vertices << ',' << fixed6(row.gap) << ','
                << fixed6(row.asymptote) << ',' << fixed6(row.deviation) << '\n';
    } else {
      std::cout << "p=" << row.p << " q=" << row.q << " vertices=" << row.vertices
                << " gap=" << fixed6(row.gap) << " asymptote=" << fixed6(row.asymptote)
                << " deviation=" << fixed6(row.deviation)
                << (row.consistent ? "" : "  DISAGREES") << '\n';
    }
  }
  return 0;
}

int run_embed(const std::vector<Int>& pq, const std::string& format, const std::string& out_path,
              double bond_scale, bool as_json) {
  if (pq.size() != 2) {
    throw CLI::ValidationError("embed", "--pq P,Q is required for embed");
  }
  if (out_path.empty()) {
    throw CLI::ValidationError("embed", "--out PATH is required for embed");
  }
  if (format != "xyz" && format != "obj") {
    throw CLI::ValidationError("embed", "--format must be xyz or obj");
  }
  const PlanarLayout layout = planar_layout(pq[0], pq[1]);
  const Embedding3D embedding = torus_map(layout);
  if (format == "xyz") {
    export_xyz(embedding, bond_scale, out_path);
  } else {
    export_obj(embedding, out_path);
  }

  if (as_json) {
    emit(json{{"command", "embed"},
              {"lattice", {{"p", pq[0]}, {"q", pq[1]}}},
              {"result",
               {{"out", out_path},
                {"format", format},
                {"vertices", embedding.positions.size()},
                {"edges", embedding.edges.size()},
                {"faces", embedding.faces.size()},
                {"tube_radius", embedding.tube_radius},
                {"ring_radius", embedding.ring_radius},
                {"gap", embedding.gap},
                {"edge_min", embedding.stats.min_length},
                {"edge_max", embedding.stats.max_length},
                {"edge_mean", embedding.stats.mean_length},
                {"edge_ratio", embedding.stats.ratio}}}});
  } else {
    std::cout << "wrote " << out_path << '\n'
              << "vertices " << embedding.positions.size() << '\n'
              << "edges " << embedding.edges.size() << '\n'
              << "faces " << embedding.faces.size() << '\n'
              << "tube_radius " << fixed6(embedding.tube_radius) << '\n'
              << "ring_radius " << fixed6(embedding.ring_radius) << '\n'
              << "edge_min " << fixed6(embedding.stats.min_length) << '\n'
              << "edge_max " << fixed6(embedding.stats.max_length) << '\n'
              << "edge_mean " << fixed6(embedding.stats.mean_length) << '\n'
              << "edge_ratio " << fixed6(embedding.stats.ratio) << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"toroidal fullerene Cayley graphs: spectra, gaps, and 3D embeddings"};
  app.require_subcommand(1);

  auto* verify_cmd = app.add_subcommand(
      "verify-embeddings", "check the four plane-group generator tables by exact composition");
  bool verify_json = false;
  verify_cmd->add_flag("--json", verify_json, "machine-readable output");

  auto* graph_cmd = app.add_subcommand("graph", "build X_N and report V/E/F and validity");
  LatticeChoice graph_choice;
  graph_choice.attach(graph_cmd);
  bool graph_json = false;
  graph_cmd->add_flag("--json", graph_json, "machine-readable output");

  auto* spectrum_cmd =
      app.add_subcommand("spectrum", "closed-form adjacency spectrum, optionally cross-checked");
  LatticeChoice spectrum_choice;
  spectrum_choice.attach(spectrum_cmd);
  bool spectrum_oracle = false;
  double spectrum_tol = 1e-8;
  bool spectrum_json = false;
  spectrum_cmd->add_flag("--oracle", spectrum_oracle, "cross-check against the dense eigensolver");
  spectrum_cmd->add_option("--tol", spectrum_tol, "oracle comparison tolerance");
  spectrum_cmd->add_flag("--json", spectrum_json, "machine-readable output");

  auto* gap_cmd = app.add_subcommand("gap", "HOMO-LUMO gap of X_N");
  LatticeChoice gap_choice;
  gap_choice.attach(gap_cmd);
  bool gap_json = false;
  gap_cmd->add_flag("--json", gap_json, "machine-readable output");

  auto* scan_cmd = app.add_subcommand("scan", "tabulate the X_{p,q} family");
  Int scan_p_max = 0;
  std::vector<Int> scan_q;
  bool scan_csv = false;
  bool scan_json = false;
  scan_cmd->add_option("--p-max", scan_p_max, "largest p")->required();
  scan_cmd->add_option("--q", scan_q, "comma-separated q values")->delimiter(',')->required();
  scan_cmd->add_flag("--csv", scan_csv, "CSV output");
  scan_cmd->add_flag("--json", scan_json, "machine-readable output");

  auto* embed_cmd = app.add_subcommand("embed", "write 3D torus coordinates for X_{p,q}");
  std::vector<Int> embed_pq;
  std::string embed_format = "xyz";
  std::string embed_out;
  double embed_bond_scale = 1.42;  // graphene C-C bond in angstroms
  bool embed_json = false;
  embed_cmd->add_option("--pq", embed_pq, "family parameters p,q")->delimiter(',')->expected(2);
  embed_cmd->add_option("--format", embed_format, "xyz or obj");
  embed_cmd->add_option("--out", embed_out, "output file path");
  embed_cmd->add_option("--bond-scale", embed_bond_scale, "bond length multiplier");
  embed_cmd->add_flag("--json", embed_json, "machine-readable output");

  try {
    app.parse(argc, argv);
    if (verify_cmd->parsed()) return run_verify_embeddings(verify_json);
    if (graph_cmd->parsed()) return run_graph(graph_choice, graph_json);
    if (spectrum_cmd->parsed()) {
      return run_spectrum(spectrum_choice, spectrum_oracle, spectrum_tol, spectrum_json);
    }
    if (gap_cmd->parsed()) return run_gap(gap_choice, gap_json);
    if (scan_cmd->parsed()) return run_scan(scan_p_max, scan_q, scan_csv, scan_json);
    if (embed_cmd->parsed()) {
      return run_embed(embed_pq, embed_format, embed_out, embed_bond_scale, embed_json);
    }
    return kExitArguments;
  } catch (const CLI::ParseError& error) {
    if (error.get_exit_code() == 0) return app.exit(error);  // --help and friends
    app.exit(error);
    return kExitArguments;
  } catch (const std::domain_error& error) {
    std::cerr << "error: " << error.what() << '\n';
    return kExitValidity;
  } catch (const std::invalid_argument& error) {
    std::cerr << "error: " << error.what() << '\n';
    return kExitArguments;
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << '\n';
    return 1;
  }
}
