// Command-line front end: biclique enumeration, biclique-graph construction,
// twin reduction, the induced-P3 membership filter, constructive degree-2
// vertex removal, preimage search, exhaustive generation, and the claim /
// conjecture verification harnesses.
//
// Exit codes: 0 success or positive verdict, 1 sound negative verdict,
// 2 usage error, 3 inconclusive.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bg/atlas.hpp"
#include "bg/canon.hpp"
#include "bg/conditions.hpp"
#include "bg/io.hpp"
#include "bg/kb.hpp"
#include "bg/lab.hpp"
#include "bg/parallel.hpp"
#include "bg/removal.hpp"
#include "bg/twins.hpp"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconclusive = 3;

struct InputSpec {
  std::string path;
  std::string inline_g6;
  std::string format = "auto";  // auto | g6 | edges
};

void add_input_flags(CLI::App* cmd, InputSpec& in) {
  auto* path = cmd->add_option("--in", in.path, "input file (graph6 record or edge list)");
  auto* inl = cmd->add_option("--g6", in.inline_g6, "inline graph6 record");
  cmd->add_option("--format", in.format, "input format: auto, g6, edges")
      ->check(CLI::IsMember({"auto", "g6", "edges"}));
  path->excludes(inl);
}

bg::Graph load_graph(const InputSpec& in) {
  if (!in.inline_g6.empty()) return bg::parse_graph6(in.inline_g6);
  if (in.path.empty()) throw CLI::ValidationError("--in or --g6 is required");
  std::ifstream file(in.path);
  if (!file) throw std::runtime_error("cannot open " + in.path);
  std::stringstream buffer;
  buffer << file.rdbuf();
  std::string text = buffer.str();
  std::string fmt = in.format;
  if (fmt == "auto") {
    size_t first = text.find_first_not_of(" \t\r\n");
    fmt = (first != std::string::npos && std::isdigit(static_cast<unsigned char>(text[first]))) ? "edges"
                                                                                                : "g6";
  }
  return fmt == "edges" ? bg::parse_edge_list_text(text) : bg::parse_graph6(text);
}

std::ostream& open_out(const std::string& path, std::ofstream& file) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw std::runtime_error("cannot write " + path);
  return file;
}

std::string vertex_list(bg::VertexSet s) {
  std::string out;
  for (int v : s) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

json biclique_json(const bg::Biclique& b) {
  json left = json::array(), right = json::array();
  for (int v : b.left) left.push_back(v);
  for (int v : b.right) right.push_back(v);
  return json{{"left", left}, {"right", right}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"biclique graph toolkit"};
  app.require_subcommand(1);
  int jobs = bg::default_jobs();
  std::string out_path;
  app.add_option("--jobs", jobs, "worker threads for sweeps")->check(CLI::PositiveNumber);
  app.add_option("--out", out_path, "write output to a file instead of stdout");

  InputSpec in;
  bool as_json = false;

  auto* cmd_bicliques = app.add_subcommand("bicliques", "list all bicliques of a graph");
  add_input_flags(cmd_bicliques, in);
  cmd_bicliques->add_flag("--json", as_json, "emit a JSON array");

  auto* cmd_kb = app.add_subcommand("kb", "biclique graph with the vertex->biclique map");
  add_input_flags(cmd_kb, in);
  bool kb_dot = false;
  cmd_kb->add_flag("--dot", kb_dot, "emit DOT instead of graph6 + JSON");

  auto* cmd_twins = app.add_subcommand("twins", "false-twin classes and the reduced graph");
  add_input_flags(cmd_twins, in);

  auto* cmd_p3 = app.add_subcommand("check-p3",
                                    "induced-P3 membership filter (fail = certified not a biclique graph)");
  add_input_flags(cmd_p3, in);

  auto* cmd_remove = app.add_subcommand("remove-deg2", "rewrite the host so one degree-2 vertex disappears");
  add_input_flags(cmd_remove, in);
  int kb_vertex = -1;
  cmd_remove->add_option("--kb-vertex", kb_vertex, "degree-2 vertex of the biclique graph")->required();

  auto* cmd_analyze = app.add_subcommand("analyze", "iterative degree-2 stripping with sound certificates");
  add_input_flags(cmd_analyze, in);
  int max_preimage = 8;
  cmd_analyze->add_option("--max-n", max_preimage, "preimage search cap")->check(CLI::Range(2, 9));

  auto* cmd_preimage = app.add_subcommand("preimage", "search for a host whose biclique graph matches");
  add_input_flags(cmd_preimage, in);
  int preimage_cap = 8;
  cmd_preimage->add_option("--max-n", preimage_cap, "host order cap")->check(CLI::Range(2, 9));

  auto* cmd_gen = app.add_subcommand("gen", "connected graphs up to isomorphism, graph6 per line");
  int gen_n = 0;
  bool gen_twin_free = false, gen_count_only = false;
  cmd_gen->add_option("--n", gen_n, "vertex count")->required()->check(CLI::Range(1, 9));
  cmd_gen->add_flag("--twin-free", gen_twin_free, "only false-twin-free graphs");
  cmd_gen->add_flag("--count-only", gen_count_only, "emit a JSON count summary instead");

  auto* cmd_verify = app.add_subcommand("verify", "re-run a computer-checked claim");
  std::string claim;
  int verify_n = 7, k_min = 7, k_max = 10;
  cmd_verify->add_option("claim", claim, "lemma1 or observation1")
      ->required()
      ->check(CLI::IsMember({"lemma1", "observation1"}));
  cmd_verify->add_option("--n", verify_n, "host order for lemma1 (6 or 7)");
  cmd_verify->add_option("--k-min", k_min, "first cycle order for observation1");
  cmd_verify->add_option("--k-max", k_max, "last cycle order for observation1");

  auto* cmd_conj = app.add_subcommand("conjecture", "gather evidence for one open conjecture");
  int conj_id = 1, conj_max_n = 7, conj_k_max = 9;
  cmd_conj->add_option("id", conj_id, "conjecture number")->required()->check(CLI::Range(1, 3));
  cmd_conj->add_option("--max-n", conj_max_n, "host sweep cap")->check(CLI::Range(2, 8));
  cmd_conj->add_option("--k-max", conj_k_max, "cycle order cap (conjecture 2)")->check(CLI::Range(7, 12));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::ofstream out_file;
  try {
    std::ostream& out = open_out(out_path, out_file);

    if (cmd_bicliques->parsed()) {
      bg::Graph g = load_graph(in);
      std::vector<bg::Biclique> bs = bg::enumerate_bicliques(g);
      if (as_json) {
        json arr = json::array();
        for (const bg::Biclique& b : bs) arr.push_back(biclique_json(b));
        out << arr.dump(2) << '\n';
      } else {
        for (const bg::Biclique& b : bs) out << vertex_list(b.left) << " | " << vertex_list(b.right) << '\n';
      }
      return kExitOk;
    }

    if (cmd_kb->parsed()) {
      bg::Graph g = load_graph(in);
      bg::LabeledKB kb = bg::biclique_graph(g);
      if (kb_dot) {
        out << bg::to_dot(kb.graph);
        return kExitOk;
      }
      out << bg::to_graph6(kb.graph) << '\n';
      json map = json::array();
      for (size_t i = 0; i < kb.bicliques.size(); ++i) {
        json entry = biclique_json(kb.bicliques[i]);
        entry["vertex"] = static_cast<int>(i);
        map.push_back(std::move(entry));
      }
      out << json{{"host_n", kb.host_n}, {"bicliques", map}}.dump(2) << '\n';
      return kExitOk;
    }

    if (cmd_twins->parsed()) {
      bg::Graph g = load_graph(in);
      bg::TwinPartition classes = bg::false_twin_classes(g);
      for (size_t i = 0; i < classes.classes.size(); ++i)
        out << "class " << i << ": {" << vertex_list(classes.classes[i]) << "} representative "
            << classes.representatives[i] << '\n';
      bg::TwinReduction reduced = bg::twin_reduce(g);
      out << "reduced " << bg::to_graph6(reduced.graph) << '\n';
      return kExitOk;
    }

    if (cmd_p3->parsed()) {
      bg::Graph g = load_graph(in);
      bg::P3Report report = bg::check_p3_condition(g);
      if (report.pass) {
        out << "pass: every induced P3 lies in an induced diamond or gem\n";
        return kExitOk;
      }
      out << "fail: induced P3 (" << report.witness->x << ", " << report.witness->y << ", "
          << report.witness->z << ") has no diamond or gem containment\n";
      out << "certified: not a biclique graph\n";
      return kExitNegative;
    }

    if (cmd_remove->parsed()) {
      bg::Graph g = load_graph(in);
      bg::RemovalResult r = bg::remove_degree2(g, kb_vertex);
      out << "reduced host " << bg::to_graph6(r.reduced_host) << '\n';
      out << "kb " << bg::to_graph6(r.kb.graph) << " vertex " << kb_vertex << " has degree 2\n";
      if (r.plan) {
        if (r.plan->family == 1)
          out << "plan family 1: v=" << r.plan->v << " w=" << r.plan->w << " x=" << r.plan->x
              << " I={" << vertex_list(r.plan->independent_set) << "}\n";
        else
          out << "plan family 2: a=" << r.plan->a << " b=" << r.plan->b << " c=" << r.plan->c << '\n';
      } else {
        out << "plan: exhaustive small-host search\n";
      }
      out << "h' " << bg::to_graph6(r.h_prime) << '\n';
      out << "verified: KB(h') isomorphic to KB(host) minus the vertex\n";
      return kExitOk;
    }

    if (cmd_analyze->parsed()) {
      bg::Graph g = load_graph(in);
      bg::AnalysisReport report = bg::analyze_not_biclique(g, max_preimage);
      json chain = json::array();
      for (const bg::ChainEntry& e : report.chain) {
        json entry{{"g6", bg::to_graph6(e.graph)}};
        if (e.removed_vertex >= 0) entry["removed_vertex"] = e.removed_vertex;
        switch (e.status) {
          case bg::ChainEntry::Status::NotBiclique:
            entry["status"] = "not-biclique";
            entry["p3_witness"] = json{{"x", e.p3_witness->x}, {"y", e.p3_witness->y}, {"z", e.p3_witness->z}};
            break;
          case bg::ChainEntry::Status::IsBiclique:
            entry["status"] = "is-biclique";
            entry["preimage_g6"] = bg::to_graph6(*e.preimage);
            break;
          default:
            entry["status"] = "unknown";
        }
        chain.push_back(std::move(entry));
      }
      const char* verdict = report.verdict == bg::AnalysisReport::Verdict::NotBiclique ? "not-biclique"
                            : report.verdict == bg::AnalysisReport::Verdict::IsBiclique ? "is-biclique"
                                                                                        : "inconclusive";
      out << json{{"schema_version", 1}, {"verdict", verdict}, {"removals", report.removals},
                  {"chain", chain}}
                 .dump(2)
          << '\n';
      if (report.verdict == bg::AnalysisReport::Verdict::NotBiclique) return kExitNegative;
      return report.verdict == bg::AnalysisReport::Verdict::IsBiclique ? kExitOk : kExitInconclusive;
    }

    if (cmd_preimage->parsed()) {
      bg::Graph g = load_graph(in);
      if (std::optional<bg::Graph> host = bg::find_preimage(g, preimage_cap)) {
        out << bg::to_graph6(*host) << '\n';
        return kExitOk;
      }
      out << "absent: no twin-free host with at most " << preimage_cap << " vertices\n";
      return kExitInconclusive;
    }

    if (cmd_gen->parsed()) {
      std::vector<bg::Graph> graphs = gen_twin_free ? bg::generate_twin_free_connected(gen_n, jobs)
                                                    : bg::generate_connected_graphs(gen_n, jobs);
      if (gen_count_only) {
        out << json{{"schema_version", 1}, {"n", gen_n}, {"twin_free", gen_twin_free},
                    {"count", graphs.size()}}
                   .dump(2)
            << '\n';
      } else {
        for (const bg::Graph& g : graphs) out << bg::to_graph6(g) << '\n';
      }
      return kExitOk;
    }

    if (cmd_verify->parsed()) {
      bg::LabReport report = claim == "lemma1" ? bg::verify_lemma1(verify_n, jobs)
                                               : bg::verify_observation1(k_min, k_max, jobs);
      out << report.to_json().dump(2) << '\n';
      return report.ok ? kExitOk : kExitNegative;
    }

    if (cmd_conj->parsed()) {
      bg::LabReport report = conj_id == 1   ? bg::test_conjecture1(conj_max_n, jobs)
                             : conj_id == 2 ? bg::test_conjecture2(conj_k_max, conj_max_n, jobs)
                                            : bg::test_conjecture3(conj_max_n, jobs);
      out << report.to_json().dump(2) << '\n';
      return report.ok ? kExitOk : kExitNegative;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
