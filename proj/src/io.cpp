#include "sfvs/io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "sfvs/errors.hpp"

namespace sfvs {

namespace {

// Non-empty, comment-stripped lines split into tokens.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool next(std::vector<std::string>& tokens) {
    std::string line;
    while (std::getline(in_, line)) {
      ++lineno_;
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      std::istringstream ss(line);
      tokens.clear();
      for (std::string tok; ss >> tok;) tokens.push_back(tok);
      if (!tokens.empty()) return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw InvalidInput("line " + std::to_string(lineno_) + ": " + what);
  }

  long long number(const std::string& tok) const {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      fail("expected an integer, got '" + tok + "'");
    }
    if (used != tok.size()) fail("expected an integer, got '" + tok + "'");
    return v;
  }

  void expect(const std::vector<std::string>& t, const char* kw,
              std::size_t min_fields, bool exact = true) const {
    if (t[0] != kw) fail(std::string("expected ") + kw + ", got " + t[0]);
    if (exact ? t.size() != min_fields : t.size() < min_fields)
      fail(std::string("wrong field count for ") + kw);
  }

  int lineno() const { return lineno_; }

 private:
  std::istream& in_;
  int lineno_ = 0;
};

void comments_out(std::ostream& out, const std::vector<std::string>& comments) {
  for (const auto& c : comments) out << "# " << c << '\n';
}

template <class F>
auto with_file(const std::string& path, F&& f) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  return f(in);
}

}  // namespace

Instance read_graph(std::istream& in) {
  LineReader r(in);
  std::vector<std::string> t;
  if (!r.next(t)) throw InvalidInput("empty graph file");
  r.expect(t, "GRAPH", 3);
  long long n = r.number(t[1]), m = r.number(t[2]);
  if (n < 0 || m < 0) r.fail("negative count");
  std::vector<Weight> w(n, 0);
  std::vector<char> s(n, 0), seen(n, 0);
  std::vector<Edge> edges;
  long long vcount = 0;
  while (r.next(t)) {
    if (t[0] == "V") {
      r.expect(t, "V", 4);
      long long id = r.number(t[1]);
      if (id < 0 || id >= n) r.fail("vertex id out of range");
      if (seen[id]) r.fail("vertex " + t[1] + " listed twice");
      seen[id] = 1;
      ++vcount;
      w[id] = r.number(t[2]);
      long long flag = r.number(t[3]);
      if (flag != 0 && flag != 1) r.fail("S-flag must be 0 or 1");
      s[id] = static_cast<char>(flag);
    } else if (t[0] == "E") {
      r.expect(t, "E", 3);
      edges.emplace_back(static_cast<Vertex>(r.number(t[1])),
                         static_cast<Vertex>(r.number(t[2])));
    } else {
      r.fail("unknown record '" + t[0] + "'");
    }
  }
  if (vcount != n) throw InvalidInput("graph lists " + std::to_string(vcount) + " of " + std::to_string(n) + " vertices");
  if (static_cast<long long>(edges.size()) != m)
    throw InvalidInput("graph header says " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  return build_instance(static_cast<int>(n), edges, w, s);
}

void write_graph(std::ostream& out, const Instance& inst,
                 const std::vector<std::string>& comments) {
  comments_out(out, comments);
  auto edges = inst.edges();
  out << "GRAPH " << inst.n << ' ' << edges.size() << '\n';
  for (Vertex v = 0; v < inst.n; ++v)
    out << "V " << v << ' ' << inst.weight[v] << ' ' << (inst.in_s[v] ? 1 : 0) << '\n';
  for (auto [u, v] : edges) out << "E " << u << ' ' << v << '\n';
}

TreeModel read_tree_model(std::istream& in) {
  LineReader r(in);
  std::vector<std::string> t;
  if (!r.next(t)) throw InvalidInput("empty tree model file");
  r.expect(t, "TREEMODEL", 3);
  long long N = r.number(t[1]), n = r.number(t[2]);
  if (N < 0 || n < 0) r.fail("negative count");
  TreeModel model;
  model.num_nodes = static_cast<int>(N);
  model.parent.assign(N, -1);
  model.subtree.assign(n, {});
  std::vector<char> node_seen(N, 0), vertex_seen(n, 0);
  while (r.next(t)) {
    if (t[0] == "NODE") {
      r.expect(t, "NODE", 3);
      long long id = r.number(t[1]), p = r.number(t[2]);
      if (id < 0 || id >= N) r.fail("node id out of range");
      if (node_seen[id]) r.fail("node " + t[1] + " listed twice");
      if (p < -1 || p >= N) r.fail("parent id out of range");
      node_seen[id] = 1;
      model.parent[id] = static_cast<Node>(p);
    } else if (t[0] == "SUBTREE") {
      r.expect(t, "SUBTREE", 3, false);
      long long v = r.number(t[1]), k = r.number(t[2]);
      if (v < 0 || v >= n) r.fail("vertex id out of range");
      if (vertex_seen[v]) r.fail("subtree of vertex " + t[1] + " listed twice");
      if (k < 0 || static_cast<long long>(t.size()) != 3 + k) r.fail("SUBTREE node count mismatch");
      vertex_seen[v] = 1;
      for (long long i = 0; i < k; ++i) {
        long long x = r.number(t[3 + i]);
        if (x < 0 || x >= N) r.fail("subtree names unknown node " + t[3 + i]);
        model.subtree[v].push_back(static_cast<Node>(x));
      }
      auto& nodes = model.subtree[v];
      std::sort(nodes.begin(), nodes.end());
      nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    } else {
      r.fail("unknown record '" + t[0] + "'");
    }
  }
  if (std::count(node_seen.begin(), node_seen.end(), 0))
    throw InvalidInput("tree model does not list every node");
  if (std::count(vertex_seen.begin(), vertex_seen.end(), 0))
    throw InvalidInput("tree model does not list every subtree");
  return model;
}

void write_tree_model(std::ostream& out, const TreeModel& model,
                      const std::vector<std::string>& comments) {
  comments_out(out, comments);
  out << "TREEMODEL " << model.num_nodes << ' ' << model.num_vertices() << '\n';
  for (Node x = 0; x < model.num_nodes; ++x) out << "NODE " << x << ' ' << model.parent[x] << '\n';
  for (Vertex v = 0; v < model.num_vertices(); ++v) {
    out << "SUBTREE " << v << ' ' << model.subtree[v].size();
    for (Node x : model.subtree[v]) out << ' ' << x;
    out << '\n';
  }
}

SolutionRecord read_solution(std::istream& in) {
  LineReader r(in);
  std::vector<std::string> t;
  SolutionRecord rec;
  if (!r.next(t)) throw InvalidInput("empty solution file");
  r.expect(t, "SOLUTION", 3);
  rec.removed_weight = r.number(t[1]);
  rec.kept_weight = r.number(t[2]);
  if (!r.next(t)) throw InvalidInput("solution file lacks a REMOVED line");
  r.expect(t, "REMOVED", 2, false);
  long long k = r.number(t[1]);
  if (k < 0 || static_cast<long long>(t.size()) != 2 + k) r.fail("REMOVED count mismatch");
  for (long long i = 0; i < k; ++i) rec.removed.push_back(static_cast<Vertex>(r.number(t[2 + i])));
  if (r.next(t)) r.fail("unexpected record after REMOVED");
  std::sort(rec.removed.begin(), rec.removed.end());
  return rec;
}

void write_solution(std::ostream& out, const Solution& sol,
                    const std::vector<std::string>& comments) {
  comments_out(out, comments);
  out << "SOLUTION " << sol.removed_weight << ' ' << sol.kept_weight << '\n';
  out << "REMOVED " << sol.removed.size();
  for (Vertex v : sol.removed) out << ' ' << v;
  out << '\n';
}

MccInstance read_mcc(std::istream& in) {
  LineReader r(in);
  std::vector<std::string> t;
  if (!r.next(t)) throw InvalidInput("empty MCC file");
  r.expect(t, "MCC", 4);
  MccInstance mcc;
  mcc.k = static_cast<int>(r.number(t[1]));
  mcc.p = static_cast<int>(r.number(t[2]));
  long long m = r.number(t[3]);
  while (r.next(t)) {
    r.expect(t, "EDGE", 5);
    mcc.edges.push_back({static_cast<int>(r.number(t[1])), static_cast<int>(r.number(t[2])),
                         static_cast<int>(r.number(t[3])), static_cast<int>(r.number(t[4]))});
  }
  if (static_cast<long long>(mcc.edges.size()) != m)
    throw InvalidInput("MCC header says " + std::to_string(m) + " edges, found " + std::to_string(mcc.edges.size()));
  check_mcc(mcc);
  return mcc;
}

void write_mcc(std::ostream& out, const MccInstance& mcc,
               const std::vector<std::string>& comments) {
  comments_out(out, comments);
  out << "MCC " << mcc.k << ' ' << mcc.p << ' ' << mcc.edges.size() << '\n';
  for (const auto& e : mcc.edges) out << "EDGE " << e.i << ' ' << e.a << ' ' << e.j << ' ' << e.b << '\n';
}

Instance load_graph(const std::string& path) {
  return with_file(path, [](std::istream& in) { return read_graph(in); });
}
TreeModel load_tree_model(const std::string& path) {
  return with_file(path, [](std::istream& in) { return read_tree_model(in); });
}
SolutionRecord load_solution(const std::string& path) {
  return with_file(path, [](std::istream& in) { return read_solution(in); });
}
MccInstance load_mcc(const std::string& path) {
  return with_file(path, [](std::istream& in) { return read_mcc(in); });
}

}  // namespace sfvs
