#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sfvs/graph.hpp"
#include "sfvs/reductions.hpp"
#include "sfvs/tree_model.hpp"

namespace sfvs {

// Line-based text formats; '#' starts a comment anywhere on a line. All
// readers throw InvalidInput with the offending line number.
//
//   GRAPH <n> <m>          TREEMODEL <nodes> <vertices>      MCC <k> <p> <m>
//   V <id> <w> <0|1>       NODE <id> <parent|-1>             EDGE <i> <a> <j> <b>
//   E <u> <v>              SUBTREE <v> <k> <node>...
//
//   SOLUTION <removed_weight> <kept_weight>
//   REMOVED <k> <v>...

Instance read_graph(std::istream& in);
void write_graph(std::ostream& out, const Instance& inst,
                 const std::vector<std::string>& comments = {});

TreeModel read_tree_model(std::istream& in);
void write_tree_model(std::ostream& out, const TreeModel& model,
                      const std::vector<std::string>& comments = {});

struct SolutionRecord {
  Weight removed_weight = 0;
  Weight kept_weight = 0;
  VertexSet removed;
};

SolutionRecord read_solution(std::istream& in);
void write_solution(std::ostream& out, const Solution& sol,
                    const std::vector<std::string>& comments = {});

MccInstance read_mcc(std::istream& in);
void write_mcc(std::ostream& out, const MccInstance& mcc,
               const std::vector<std::string>& comments = {});

// File wrappers; a missing file is InvalidInput.
Instance load_graph(const std::string& path);
TreeModel load_tree_model(const std::string& path);
SolutionRecord load_solution(const std::string& path);
MccInstance load_mcc(const std::string& path);

}  // namespace sfvs
