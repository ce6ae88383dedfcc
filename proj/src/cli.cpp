#include "kgg/cli.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "kgg/constructions.hpp"
#include "kgg/error.hpp"
#include "kgg/group.hpp"
#include "kgg/homology.hpp"
#include "kgg/structure.hpp"
#include "kgg/table_io.hpp"

namespace kgg::cli {

namespace {

using json = nlohmann::json;

struct Globals {
  bool json = false;
  std::uint64_t seed = 1;
  int degree_cap = 20;
  std::string output;
};

void emit(const std::string& text, const Globals& gl, std::ostream& out) {
  if (gl.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(gl.output, std::ios::binary);
  if (!file || !(file << text)) throw Error(ErrorCode::io_error, "cannot write " + gl.output);
}

std::vector<int> parse_sizes(const std::string& text, int k, int fallback) {
  if (text.empty()) return std::vector<int>(static_cast<std::size_t>(k), fallback);
  std::vector<int> sizes;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || item.empty() || v < 1) {
      throw Error(ErrorCode::schema_error, "sizes must be positive integers, got '" + text + "'");
    }
    sizes.push_back(v);
  }
  if (static_cast<int>(sizes.size()) != k) {
    throw Error(ErrorCode::schema_error, "expected " + std::to_string(k) + " sizes, got '" + text + "'");
  }
  return sizes;
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::io_error, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json big_to_json(const BigInt& x) {
  if (x <= std::numeric_limits<std::int64_t>::max()) return x.convert_to<std::int64_t>();
  return x.str();
}

json homology_json(const HomologyGroup& h, int p) {
  json t = json::array();
  for (const auto& x : h.torsion) t.push_back(big_to_json(x));
  return {{"p", p}, {"free_rank", h.free_rank}, {"torsion", t}, {"text", h.to_string()}};
}

std::string bracket(const Degree& d) { return "(" + d.to_string() + ")"; }

Degree bound_or(const std::string& text, int rank, int fallback) {
  return text.empty() ? Degree::uniform(rank, fallback) : Degree::parse(text, rank);
}

// --- validate ---

int cmd_validate(const std::string& file, const Globals& gl, std::ostream& out) {
  const auto g = load_kgraph(file);
  const auto report = validate(g);
  if (gl.json) {
    json v = json::array();
    for (const auto& x : report.violations) {
      v.push_back({{"code", std::string(to_string(x.code))}, {"edges", x.edges}, {"detail", x.detail}});
    }
    json doc = {{"passed", report.passed()},
                {"vertices", g.vertex_count()},
                {"edges", g.edge_count()},
                {"squares", g.squares().size()},
                {"violations", v}};
    emit(doc.dump(2) + "\n", gl, out);
  } else {
    std::ostringstream s;
    for (const auto& x : report.violations) {
      s << to_string(x.code);
      if (!x.edges.empty()) {
        s << " [";
        for (std::size_t i = 0; i < x.edges.size(); ++i) s << (i ? "," : "") << x.edges[i];
        s << "]";
      }
      s << ": " << x.detail << "\n";
    }
    if (report.passed()) {
      s << "OK: rank " << g.rank() << ", " << g.vertex_count() << " vertices, " << g.edge_count() << " edges, "
        << g.squares().size() << " squares\n";
    } else {
      s << "FAILED: " << report.violations.size() << " violation(s)\n";
    }
    emit(s.str(), gl, out);
  }
  return report.passed() ? ok : check_failed;
}

// --- check ---

int cmd_check(const std::string& file, const std::string& pair_text, const std::string& witness_text,
              const Globals& gl, std::ostream& out) {
  const auto g = load_kgraph(file);
  const auto pb = bound_or(pair_text, g.rank(), 1);
  const auto wb = bound_or(witness_text, g.rank(), 2);
  const auto r = simplicity_verdict(g, pb, wb);
  const auto& ap = r.aperiodicity;

  if (gl.json) {
    json src = {{"verdict", std::string(to_string(r.sources.verdict))}};
    if (r.sources.counterexample) {
      src["vertex"] = g.vertex_name(r.sources.counterexample->first);
      src["color"] = r.sources.counterexample->second;
    }
    json cof = {{"verdict", std::string(to_string(r.cofinality.verdict))}};
    if (r.cofinality.counterexample) {
      cof["e"] = g.vertex_name(r.cofinality.counterexample->first);
      cof["f"] = g.vertex_name(r.cofinality.counterexample->second);
    }
    json wit = json::array(), miss = json::array();
    for (const auto& w : ap.witnesses) {
      wit.push_back({{"a", format_path(g, w.a)}, {"b", format_path(g, w.b)}, {"u", format_path(g, w.u)}});
    }
    for (const auto& [a, b] : ap.missing) miss.push_back({{"a", format_path(g, a)}, {"b", format_path(g, b)}});
    json doc = {{"no_sources", src},
                {"cofinality", cof},
                {"aperiodicity",
                 {{"verdict", std::string(to_string(ap.verdict))},
                  {"pair_bound", ap.pair_bound.to_string()},
                  {"witness_bound", ap.witness_bound.to_string()},
                  {"pairs_examined", ap.pairs_examined},
                  {"witnesses", wit},
                  {"missing", miss}}},
                {"infinite", r.infinite},
                {"verdict", std::string(to_string(r.verdict))}};
    emit(doc.dump(2) + "\n", gl, out);
  } else {
    std::ostringstream s;
    s << "no_sources: " << to_string(r.sources.verdict);
    if (r.sources.counterexample) {
      s << " (vertex " << g.vertex_name(r.sources.counterexample->first) << " receives no edge of color "
        << r.sources.counterexample->second << ")";
    }
    s << "\ncofinality: " << to_string(r.cofinality.verdict);
    if (r.cofinality.counterexample) {
      s << " (no path from " << g.vertex_name(r.cofinality.counterexample->second) << " to "
        << g.vertex_name(r.cofinality.counterexample->first) << ")";
    }
    s << "\naperiodicity: " << to_string(ap.verdict) << " (pair bound " << bracket(ap.pair_bound)
      << ", witness bound " << bracket(ap.witness_bound) << ", " << ap.pairs_examined << " pairs, "
      << ap.missing.size() << " without witness)\n";
    constexpr std::size_t shown = 10;
    for (std::size_t i = 0; i < ap.missing.size() && i < shown; ++i) {
      s << "  no witness: " << format_path(g, ap.missing[i].first) << " | " << format_path(g, ap.missing[i].second)
        << "\n";
    }
    if (ap.missing.size() > shown) s << "  ... " << ap.missing.size() - shown << " more\n";
    s << "size: " << (r.infinite ? "countably infinite" : "finite") << "\n";
    s << "verdict: " << to_string(r.verdict) << (r.verdict == Simplicity::simple_up_to_bounds ? " (up to bounds)" : "")
      << "\n";
    emit(s.str(), gl, out);
  }
  switch (r.verdict) {
    case Simplicity::simple_up_to_bounds: return ok;
    case Simplicity::not_decided: return undecided;
    case Simplicity::fails: return check_failed;
  }
  return undecided;
}

// --- homology ---

int cmd_homology(const std::string& file, bool shortcut, const Globals& gl, std::ostream& out) {
  const auto g = load_kgraph(file);
  const auto report = validate(g);
  if (!report.passed()) {
    throw Error(ErrorCode::schema_error, "graph fails validation (" +
                                             std::string(to_string(report.violations.front().code)) +
                                             "); run 'kgg validate' for details");
  }
  std::vector<std::pair<int, HomologyGroup>> groups;
  if (shortcut) {
    const auto s = h0_hk_shortcut(g);
    groups.emplace_back(0, s.h0);
    if (g.rank() > 0) groups.emplace_back(g.rank(), s.hk);
  } else {
    const auto hs = homology(evans_complex(g));
    for (std::size_t p = 0; p < hs.size(); ++p) groups.emplace_back(static_cast<int>(p), hs[p]);
  }
  if (gl.json) {
    json list = json::array();
    for (const auto& [p, h] : groups) list.push_back(homology_json(h, p));
    json doc = {{"method", shortcut ? "shortcut" : "evans"}, {"rank", g.rank()}, {"homology", list}};
    emit(doc.dump(2) + "\n", gl, out);
  } else {
    std::ostringstream s;
    for (const auto& [p, h] : groups) s << "H_" << p << " = " << h.to_string() << "\n";
    emit(s.str(), gl, out);
  }
  return ok;
}

// --- group ---

struct LoadedElement {
  TableFile table;
  GroupElement element;
};

LoadedElement load_element(const std::string& path) {
  LoadedElement le{load_table(path), {}};
  le.element = GroupElement::from_pairs(le.table.graph, le.table.pairs);
  return le;
}

void require_same_graph(const LoadedElement& a, const LoadedElement& b) {
  if (!(a.table.graph == b.table.graph)) {
    throw Error(ErrorCode::schema_error, "tables refer to different k-graphs");
  }
}

void emit_element(const KGraph& g, const std::string& graph_path, const GroupElement& e, const Globals& gl,
                  std::ostream& out) {
  emit(serialize_table(g, graph_reference(graph_path, gl.output), e.pairs()), gl, out);
}

GroupOptions group_options(const Globals& gl) {
  GroupOptions opts;
  opts.degree_cap = gl.degree_cap;
  return opts;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"kgg: k-graph groups, structure checks and homology", "kgg"};
  app.fallthrough();
  app.require_subcommand(1);

  Globals gl;
  app.add_flag("--json", gl.json, "Print a single JSON document instead of text");
  app.add_option("--seed", gl.seed, "Seed for random elements")->capture_default_str();
  app.add_option("--degree-cap", gl.degree_cap, "Largest degree component a refinement may reach")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("-o,--output", gl.output, "Write the result to this file");

  std::string file, file2, pair_bound, witness_bound, path_text, degree_text, sizes_text, labelling = "uniform";
  bool shortcut = false;
  int k = 2, R = 1, expansions = 2;

  auto* validate_cmd = app.add_subcommand("validate", "Check squares, bijectivity and associativity");
  validate_cmd->add_option("file", file, "k-graph document")->required();

  auto* check_cmd = app.add_subcommand("check", "No sources, cofinality, bounded aperiodicity scan");
  check_cmd->add_option("file", file, "k-graph document")->required();
  check_cmd->add_option("--pair-bound", pair_bound, "Degree bound for pairs (default 1,...,1)");
  check_cmd->add_option("--witness-bound", witness_bound, "Degree bound for witnesses (default 2,...,2)");

  auto* homology_cmd = app.add_subcommand("homology", "Homology of the Evans complex");
  homology_cmd->add_option("file", file, "k-graph document")->required();
  homology_cmd->add_flag("--shortcut", shortcut, "Only H_0 and H_k, from the coordinate matrices");

  auto* gen_cmd = app.add_subcommand("gen", "Generate example k-graphs");
  gen_cmd->require_subcommand(1);
  auto* gen_nv = gen_cmd->add_subcommand("nv", "Product of bouquets (one vertex)");
  auto* gen_cover = gen_cmd->add_subcommand("cover", "Double cover from a Z/2 labelling");
  auto* gen_ckr = gen_cmd->add_subcommand("ckr", "The (R+1)-vertex graph C_{k,R}");
  for (auto* sub : {gen_nv, gen_cover, gen_ckr}) {
    sub->add_option("--k", k, "Rank")->capture_default_str()->check(CLI::Range(1, kMaxRank));
  }
  gen_nv->add_option("--sizes", sizes_text, "Loops per color, e.g. 2,2 (default all 2)");
  gen_cover->add_option("--sizes", sizes_text, "Symbols per color, e.g. 1,1 (default all 1)");
  gen_cover->add_option("--labelling", labelling, "uniform | mixed | zero | explicit:<file>")
      ->capture_default_str();
  gen_ckr->add_option("--R", R, "Number of vertices minus one")->capture_default_str()->check(CLI::PositiveNumber);

  auto* group_cmd = app.add_subcommand("group", "Arithmetic in the group of the k-graph");
  group_cmd->require_subcommand(1);
  auto* g_mul = group_cmd->add_subcommand("mul", "Product A*B (apply B, then A)");
  g_mul->add_option("a", file, "table file")->required();
  g_mul->add_option("b", file2, "table file")->required();
  auto* g_inv = group_cmd->add_subcommand("inv", "Inverse");
  g_inv->add_option("a", file, "table file")->required();
  auto* g_eq = group_cmd->add_subcommand("eq", "Group equality (exit 0 equal, 1 not equal)");
  g_eq->add_option("a", file, "table file")->required();
  g_eq->add_option("b", file2, "table file")->required();
  auto* g_apply = group_cmd->add_subcommand("apply", "Image of a path");
  g_apply->add_option("a", file, "table file")->required();
  g_apply->add_option("--path", path_text, "Comma-separated edge names")->required();
  auto* g_reduce = group_cmd->add_subcommand("reduce", "Merge complete one-color families");
  g_reduce->add_option("a", file, "table file")->required();
  auto* g_refine = group_cmd->add_subcommand("refine", "Refine the domain code to all paths of a degree");
  g_refine->add_option("a", file, "table file")->required();
  g_refine->add_option("--degree", degree_text, "Target degree, e.g. 1,1")->required();
  auto* g_random = group_cmd->add_subcommand("random", "Random element (seeded by --seed)");
  g_random->add_option("graph", file, "k-graph document")->required();
  g_random->add_option("--expansions", expansions, "Single-leaf expansions per code")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : usage_error;
  }

  try {
    if (validate_cmd->parsed()) return cmd_validate(file, gl, out);
    if (check_cmd->parsed()) return cmd_check(file, pair_bound, witness_bound, gl, out);
    if (homology_cmd->parsed()) return cmd_homology(file, shortcut, gl, out);

    if (gen_cmd->parsed()) {
      KGraph g;
      if (gen_nv->parsed()) {
        g = bouquet_product(k, parse_sizes(sizes_text, k, 2));
      } else if (gen_cover->parsed()) {
        if (k < 2) throw Error(ErrorCode::schema_error, "double covers need --k >= 2");
        const auto sizes = parse_sizes(sizes_text, k, 1);
        Labelling lab;
        if (labelling == "uniform") {
          lab = Labelling::uniform(sizes);
        } else if (labelling == "mixed") {
          lab = Labelling::mixed(sizes);
        } else if (labelling == "zero") {
          lab = Labelling::constant(sizes, 0);
        } else if (labelling.starts_with("explicit:")) {
          lab = Labelling::from_json(sizes, read_text(labelling.substr(9)));
        } else {
          throw Error(ErrorCode::schema_error, "unknown labelling '" + labelling + "'");
        }
        g = double_cover(k, sizes, lab);
      } else {
        g = ckr(k, R);
      }
      emit(serialize_kgraph(g), gl, out);
      return ok;
    }

    const auto opts = group_options(gl);
    if (g_mul->parsed()) {
      const auto a = load_element(file);
      const auto b = load_element(file2);
      require_same_graph(a, b);
      emit_element(a.table.graph, a.table.graph_path, multiply(a.table.graph, a.element, b.element, opts), gl, out);
      return ok;
    }
    if (g_inv->parsed()) {
      const auto a = load_element(file);
      emit_element(a.table.graph, a.table.graph_path, invert(a.element), gl, out);
      return ok;
    }
    if (g_eq->parsed()) {
      const auto a = load_element(file);
      const auto b = load_element(file2);
      require_same_graph(a, b);
      const bool same = equals(a.table.graph, a.element, b.element, opts);
      if (gl.json) {
        emit(json({{"equal", same}}).dump() + "\n", gl, out);
      } else {
        emit(same ? "equal\n" : "not equal\n", gl, out);
      }
      return same ? ok : check_failed;
    }
    if (g_apply->parsed()) {
      const auto a = load_element(file);
      const auto& g = a.table.graph;
      const auto image = format_path(g, apply_to_path(g, a.element, parse_path(g, path_text)));
      emit(gl.json ? json({{"image", image}}).dump() + "\n" : image + "\n", gl, out);
      return ok;
    }
    if (g_reduce->parsed()) {
      const auto a = load_element(file);
      emit_element(a.table.graph, a.table.graph_path, reduce(a.table.graph, a.element), gl, out);
      return ok;
    }
    if (g_refine->parsed()) {
      const auto a = load_element(file);
      const auto& g = a.table.graph;
      emit_element(g, a.table.graph_path, refine_to_degree(g, a.element, Degree::parse(degree_text, g.rank()), opts),
                   gl, out);
      return ok;
    }
    if (g_random->parsed()) {
      const auto g = load_kgraph(file);
      std::mt19937_64 rng(gl.seed);
      emit_element(g, file, random_element(g, rng, expansions), gl, out);
      return ok;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return usage_error;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return usage_error;
  }
  err << app.help();
  return usage_error;
}

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace kgg::cli
