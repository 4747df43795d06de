// fbranch command-line tool. Every subcommand prints a text report by default or
// a JSON document with --format json. Errors go to stderr with a nonzero exit.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fbranch/classify.hpp"
#include "fbranch/cutfn.hpp"
#include "fbranch/decomp.hpp"
#include "fbranch/errors.hpp"
#include "fbranch/graph.hpp"
#include "fbranch/kernel_fes.hpp"
#include "fbranch/lemma_harness.hpp"
#include "fbranch/prune_td.hpp"
#include "fbranch/typseq.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace fbranch;

namespace {

constexpr const char* kSchema = "fbranch/1";
constexpr int kExitError = 1;
constexpr int kExitViolation = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << text;
  if (!out) throw Error("write failed: " + path);
}

json witness_json(const PatternWitness& w) {
  json j;
  j["family"] = w.family ? json(std::string(family_name(*w.family))) : json(nullptr);
  j["pairs"] = json::array();
  for (auto [a, b] : w.pairs) j["pairs"].push_back({a, b});
  return j;
}

std::string witness_text(const PatternWitness& w) {
  if (!w.family) return "-";
  std::ostringstream os;
  os << family_name(*w.family);
  for (auto [a, b] : w.pairs) os << " (" << a << "," << b << ")";
  return os.str();
}

std::string set_text(const VertexSet& s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  s.for_each([&](Vertex v) {
    os << (first ? "" : ",") << v;
    first = false;
  });
  os << '}';
  return os.str();
}

json set_json(const VertexSet& s) { return json(s.to_vector()); }

struct Output {
  std::string format = "text";
  bool is_json() const { return format == "json"; }
  void emit(const json& doc, const std::string& text) const {
    if (is_json()) {
      std::cout << doc.dump(2) << '\n';
    } else {
      std::cout << text;
    }
  }
};

json document(const std::string& command) {
  json j;
  j["schema"] = kSchema;
  j["command"] = command;
  return j;
}

// ---- width -----------------------------------------------------------------

struct WidthArgs {
  std::string graph, decomp, families = "match";
};

int cmd_width(const WidthArgs& a, const Output& out) {
  Graph g = parse_graph(read_file(a.graph));
  BranchDecomposition bd = parse_decomposition(read_file(a.decomp));
  FamilySelector sel = FamilySelector::parse(a.families);
  WidthReport r = decomposition_width(bd, g, sel);

  json doc = document("width");
  doc["families"] = sel.to_string();
  doc["width"] = r.width;
  doc["argmax"] = r.argmax ? json(*r.argmax) : json(nullptr);
  doc["edges"] = json::array();
  std::ostringstream text;
  for (const auto& e : r.per_edge) {
    auto [u, v] = bd.tree.edges[e.edge];
    json je;
    je["edge"] = e.edge;
    je["tree_edge"] = {u, v};
    je["x"] = set_json(e.cut.side_x);
    je["value"] = e.value.value;
    je["witness"] = witness_json(e.value.witness);
    doc["edges"].push_back(je);
    text << "edge " << e.edge << " (" << u << "," << v << ") X=" << set_text(e.cut.side_x)
         << " value=" << e.value.value << " witness=" << witness_text(e.value.witness) << '\n';
  }
  text << "width " << r.width << '\n';
  out.emit(doc, text.str());
  return 0;
}

// ---- solve -----------------------------------------------------------------

struct SolveArgs {
  std::string graph, families = "match", solver = "dp", out_path;
  std::size_t limit = 0;
  std::size_t threads = 0;
  std::uint64_t seed = 0;
  bool cross_check = false;
};

int cmd_solve(const SolveArgs& a, const Output& out) {
  Graph g = parse_graph(read_file(a.graph));
  FamilySelector sel = FamilySelector::parse(a.families);
  Solution s;
  if (a.solver == "dp") {
    s = exact_branchwidth_dp(g, sel, a.limit ? a.limit : kDpLimit, a.threads);
  } else if (a.solver == "enum") {
    s = exact_branchwidth_enum(g, sel, a.limit ? a.limit : kEnumerationLimit);
  } else {
    s = greedy_branchwidth(g, sel, a.seed);
  }

  // Emitted decompositions must re-validate and re-evaluate to the reported width.
  validate_decomposition(s.decomposition, g);
  std::size_t reeval = decomposition_width(s.decomposition, g, sel).width;
  if (reeval != s.width) {
    throw InternalError("solver reported width " + std::to_string(s.width) + " but the decomposition has " +
                        std::to_string(reeval));
  }
  if (a.cross_check && a.solver != "greedy") {
    std::size_t other = a.solver == "dp" ? exact_branchwidth_enum(g, sel).width
                                         : exact_branchwidth_dp(g, sel, kDpLimit, a.threads).width;
    if (other != s.width) {
      throw InternalError("dp and enum disagree: " + std::to_string(s.width) + " vs " + std::to_string(other));
    }
  }
  if (!a.out_path.empty()) write_file(a.out_path, write_decomposition(s.decomposition));

  json doc = document("solve");
  doc["families"] = sel.to_string();
  doc["solver"] = a.solver;
  doc["exact"] = a.solver != "greedy";
  doc["width"] = s.width;
  doc["decomposition"] = json::parse(decomposition_to_json(s.decomposition));
  std::ostringstream text;
  text << "width " << s.width << (a.solver == "greedy" ? " (upper bound)" : "") << '\n';
  if (a.out_path.empty()) text << write_decomposition(s.decomposition);
  out.emit(doc, text.str());
  return 0;
}

// ---- kernelize -------------------------------------------------------------

struct KernelArgs {
  std::string in, out_path, trace_path;
};

int cmd_kernelize(const KernelArgs& a, const Output& out) {
  Graph g = parse_graph(read_file(a.in));
  KernelTrace t = kernelize_fes(g);
  if (!a.out_path.empty()) write_file(a.out_path, write_graph(t.final_graph));
  if (!a.trace_path.empty()) write_file(a.trace_path, trace_to_json(t) + "\n");

  json doc = document("kernelize");
  doc["k"] = t.k;
  doc["forest"] = t.forest;
  doc["input"] = {{"n", g.order()}, {"m", g.size()}};
  doc["kernel"] = json::parse(graph_to_json(t.final_graph));
  doc["vertex_bound"] = kernel_vertex_bound(t.k);
  doc["size_bound_met"] = t.size_bound_met;
  doc["steps"] = t.steps.size();
  std::ostringstream text;
  text << "k " << t.k << (t.forest ? " (forest)" : "") << '\n'
       << "input n=" << g.order() << " m=" << g.size() << '\n'
       << "kernel n=" << t.final_graph.order() << " m=" << t.final_graph.size() << '\n'
       << "steps " << t.steps.size() << '\n';
  if (!t.forest) {
    text << "vertex bound " << kernel_vertex_bound(t.k) << (t.size_bound_met ? " met" : " NOT met") << '\n';
  }
  if (a.out_path.empty()) text << write_graph(t.final_graph);
  out.emit(doc, text.str());
  return 0;
}

// ---- prune -----------------------------------------------------------------

struct PruneArgs {
  std::string in, out_path;
  std::size_t threshold = 0;
  bool exact_bound = false;
};

int cmd_prune(const PruneArgs& a, const Output& out) {
  Graph g = parse_graph(read_file(a.in));
  ThresholdPolicy policy = a.exact_bound   ? ThresholdPolicy::exact_bound()
                           : a.threshold ? ThresholdPolicy::of(a.threshold)
                                         : ThresholdPolicy::surrogate();
  PruneRecord r = prune_by_treedepth(g, policy);
  if (!a.out_path.empty()) write_file(a.out_path, write_graph(r.graph));

  const char* policy_name = a.exact_bound ? "exact-bound" : a.threshold ? "fixed" : "surrogate";
  json doc = document("prune");
  doc["policy"] = policy_name;
  if (a.threshold && !a.exact_bound) doc["threshold"] = a.threshold;
  doc["input"] = {{"n", g.order()}, {"m", g.size()}};
  doc["output"] = json::parse(graph_to_json(r.graph));
  doc["to_original"] = r.to_original;
  doc["removed"] = r.removed;
  std::ostringstream text;
  text << "policy " << policy_name << '\n'
       << "input n=" << g.order() << " m=" << g.size() << '\n'
       << "output n=" << r.graph.order() << " m=" << r.graph.size() << '\n'
       << "removed components " << r.removed.size() << '\n';
  if (a.out_path.empty()) text << write_graph(r.graph);
  out.emit(doc, text.str());
  return 0;
}

// ---- classify --------------------------------------------------------------

struct ClassifyArgs {
  std::string in;
  std::size_t n = 0;
};

json families_json(const std::vector<Family>& fs) {
  json j = json::array();
  for (Family f : fs) j.push_back(std::string(family_name(f)));
  return j;
}

int cmd_classify(const ClassifyArgs& a, const Output& out) {
  OrderedBipartiteGraph h = parse_ordered_bipartite(read_file(a.in));
  Classification c = classify_si(h);
  json doc = document("classify");
  doc["q"] = h.q;
  doc["tags"] = families_json(c.tags);
  doc["order"] = c.order;
  doc["reversed"] = c.reversed;
  std::ostringstream text;
  text << "q " << h.q << '\n' << "tags";
  if (c.tags.empty()) text << " none";
  for (Family f : c.tags) text << ' ' << family_name(f);
  text << '\n';
  if (c.matches() && c.reversed) text << "order reversed\n";

  if (a.n) {
    auto sub = find_homogeneous_subset(h, a.n);
    if (sub) {
      // Output is 1-based to match the input format.
      std::vector<std::size_t> order;
      for (std::size_t p : sub->order) order.push_back(p + 1);
      doc["homogeneous"] = {{"n", a.n}, {"family", std::string(family_name(sub->tag))}, {"pairs", order}};
      text << "homogeneous " << family_name(sub->tag) << " pairs";
      for (std::size_t p : order) text << ' ' << p;
      text << '\n';
    } else {
      doc["homogeneous"] = nullptr;
      text << "homogeneous none of size " << a.n << '\n';
    }
  }
  out.emit(doc, text.str());
  return 0;
}

// ---- typical ---------------------------------------------------------------

struct TypicalArgs {
  std::string seq, other;
  std::size_t k = 0;
  std::size_t cap = 0;
  Nat z = 0;
};

json seq_json(const NatSequence& s) { return format_sequence(s); }

int cmd_typical_of(const TypicalArgs& a, const Output& out) {
  NatSequence s = parse_sequence(a.seq);
  NatSequence t = typical_of(s);
  json doc = document("typical");
  doc["input"] = seq_json(s);
  doc["typical"] = seq_json(t);
  out.emit(doc, format_sequence(t) + "\n");
  return 0;
}

int cmd_typical_enumerate(const TypicalArgs& a, const Output& out) {
  auto all = enumerate_typical(a.k);
  json doc = document("typical-enumerate");
  doc["k"] = a.k;
  doc["count"] = all.size();
  doc["sequences"] = json::array();
  std::ostringstream text;
  for (const auto& s : all) {
    doc["sequences"].push_back(seq_json(s));
    text << format_sequence(s) << '\n';
  }
  text << "count " << all.size() << '\n';
  out.emit(doc, text.str());
  return 0;
}

int cmd_typical_interleave(const TypicalArgs& a, const Output& out) {
  NatSequence s = parse_sequence(a.seq), t = parse_sequence(a.other);
  auto all = interleave(s, t, a.cap);
  json doc = document("typical-interleave");
  doc["s"] = seq_json(s);
  doc["t"] = seq_json(t);
  doc["sequences"] = json::array();
  std::ostringstream text;
  for (const auto& r : all) {
    doc["sequences"].push_back(seq_json(r));
    text << format_sequence(r) << '\n';
  }
  out.emit(doc, text.str());
  return 0;
}

int cmd_typical_shift(const TypicalArgs& a, const Output& out) {
  NatSequence s = parse_sequence(a.seq);
  NatSequence r = shift(s, a.z);
  json doc = document("typical-shift");
  doc["input"] = seq_json(s);
  doc["z"] = a.z;
  doc["result"] = seq_json(r);
  out.emit(doc, format_sequence(r) + "\n");
  return 0;
}

// ---- verify-lemmas ---------------------------------------------------------

struct VerifyArgs {
  std::uint64_t seed = 1;
  std::size_t n = 0;
  std::string only;
  bool inject_fault = false;
  std::string counterexample_dir = "counterexamples";
};

int cmd_verify(const VerifyArgs& a, const Output& out) {
  HarnessOptions opts;
  opts.seed = a.seed;
  opts.n = a.n;
  opts.inject_fault = a.inject_fault;
  if (!a.only.empty()) opts.only = a.only;
  auto results = run_lemma_harness(opts);

  json doc = document("verify-lemmas");
  doc["seed"] = a.seed;
  doc["suites"] = json::array();
  std::ostringstream text;
  std::size_t total = 0;
  for (const auto& r : results) {
    total += r.violations;
    json js = {{"name", r.name}, {"instances", r.instances}, {"violations", r.violations}};
    js["counterexamples"] = json::array();
    if (!r.counterexamples.empty()) fs::create_directories(a.counterexample_dir);
    for (std::size_t i = 0; i < r.counterexamples.size(); ++i) {
      std::string path = (fs::path(a.counterexample_dir) / (r.name + "-" + std::to_string(i) + ".txt")).string();
      write_file(path, r.counterexamples[i]);
      js["counterexamples"].push_back(path);
    }
    doc["suites"].push_back(js);
    text << (r.violations ? "FAIL " : "PASS ") << r.name << " instances=" << r.instances
         << " violations=" << r.violations << '\n';
    for (const auto& p : js["counterexamples"]) text << "  counterexample " << p.get<std::string>() << '\n';
  }
  doc["violations"] = total;
  out.emit(doc, text.str());
  return total ? kExitViolation : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fbranch: branch decompositions over obstruction families"};
  app.require_subcommand(1);
  Output out;
  app.add_option("--format", out.format, "Report format")->check(CLI::IsMember({"text", "json"}));

  WidthArgs wa;
  auto* width = app.add_subcommand("width", "Evaluate a decomposition edge by edge");
  width->add_option("--graph", wa.graph, "Graph file")->required();
  width->add_option("--decomp", wa.decomp, "Decomposition file")->required();
  width->add_option("--families", wa.families, "Family list or preset (primal, all, ntc)");

  SolveArgs sa;
  auto* solve = app.add_subcommand("solve", "Compute an optimal or heuristic decomposition");
  solve->add_option("--graph", sa.graph, "Graph file")->required();
  solve->add_option("--families", sa.families, "Family list or preset");
  solve->add_option("--solver", sa.solver, "dp, enum or greedy")->check(CLI::IsMember({"dp", "enum", "greedy"}));
  solve->add_option("--out", sa.out_path, "Write the decomposition here");
  solve->add_option("--limit", sa.limit, "Vertex limit for exact solvers")->check(CLI::PositiveNumber);
  solve->add_option("--threads", sa.threads, "Worker threads for dp (0: FBRANCH_THREADS or all cores)");
  solve->add_option("--seed", sa.seed, "Seed for the greedy solver");
  solve->add_flag("--cross-check", sa.cross_check, "Also run the other exact solver and compare");

  KernelArgs ka;
  auto* kern = app.add_subcommand("kernelize", "Feedback-edge-set kernel");
  kern->add_option("--in", ka.in, "Graph file")->required();
  kern->add_option("--out", ka.out_path, "Write the kernel graph here");
  kern->add_option("--trace", ka.trace_path, "Write the JSON reduction trace here");

  PruneArgs pa;
  auto* prune = app.add_subcommand("prune", "Remove surplus isomorphic components along a treedepth decomposition");
  prune->add_option("--in", pa.in, "Graph file")->required();
  auto* thr = prune->add_option("--threshold", pa.threshold, "Components kept per class (default: 2t+2p+1)")
                  ->check(CLI::PositiveNumber);
  prune->add_flag("--paper-bound", pa.exact_bound, "Use the exact g(t+1, p) threshold")->excludes(thr);
  prune->add_option("--out", pa.out_path, "Write the pruned graph here");

  ClassifyArgs ca;
  auto* classify = app.add_subcommand("classify", "Classify an ordered bipartite graph");
  classify->add_option("--in", ca.in, "Ordered bipartite graph file")->required();
  classify->add_option("--n", ca.n, "Also search a homogeneous subset of this many pairs")->check(CLI::PositiveNumber);

  TypicalArgs ta;
  auto* typical = app.add_subcommand("typical", "Typical sequence queries");
  typical->require_subcommand(1);
  auto* t_of = typical->add_subcommand("of", "Typical sequence of a comma list");
  t_of->add_option("seq", ta.seq, "Sequence, e.g. 1,3,2")->required();
  auto* t_enum = typical->add_subcommand("enumerate", "All typical sequences over 0..k");
  t_enum->add_option("--k", ta.k, "Largest value")->required();
  auto* t_inter = typical->add_subcommand("interleave", "Typical sums of index-aligned extensions");
  t_inter->add_option("s", ta.seq, "First sequence")->required();
  t_inter->add_option("t", ta.other, "Second sequence")->required();
  t_inter->add_option("--cap", ta.cap, "Extension length cap (0: |s|+|t|)");
  auto* t_shift = typical->add_subcommand("shift", "Add a constant to every entry");
  t_shift->add_option("seq", ta.seq, "Sequence")->required();
  t_shift->add_option("--z", ta.z, "Offset")->required();

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify-lemmas", "Run the structural property suites");
  verify->add_option("--seed", va.seed, "Random seed");
  verify->add_option("--n", va.n, "Size budget (0: per-suite default)");
  verify->add_option("--only", va.only, "Run one suite")->check(CLI::IsMember(harness_suite_names()));
  verify->add_flag("--inject-fault", va.inject_fault, "Corrupt solver widths to check the harness notices");
  verify->add_option("--counterexample-dir", va.counterexample_dir, "Where counterexamples are written");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*width) return cmd_width(wa, out);
    if (*solve) return cmd_solve(sa, out);
    if (*kern) return cmd_kernelize(ka, out);
    if (*prune) return cmd_prune(pa, out);
    if (*classify) return cmd_classify(ca, out);
    if (*t_of) return cmd_typical_of(ta, out);
    if (*t_enum) return cmd_typical_enumerate(ta, out);
    if (*t_inter) return cmd_typical_interleave(ta, out);
    if (*t_shift) return cmd_typical_shift(ta, out);
    if (*verify) return cmd_verify(va, out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
