#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "enumerate.hpp"
#include "presentation.hpp"

namespace hfree {

// Directed edge l --s--> k of the coset graph; every (l, s) occurs exactly
// once, so each 2-cycle of s appears in both directions.
struct GraphEdge {
  std::uint32_t from;
  int gen;
  std::uint32_t to;
  bool tree;
};

// Coset graph with canonical numbering 0..n-1 (printed 1-based as x_1..x_n)
// and the spanning tree that defines the representative words x_l.
struct CosetGraph {
  std::uint32_t n = 0;
  int ngens = 0;
  OrderMode mode = OrderMode::lex;
  std::vector<int> shat;
  std::vector<int> subgroup;

  std::vector<std::uint32_t> order;     // canonical index -> action coset
  std::vector<std::uint32_t> index_of;  // action coset -> canonical index
  std::vector<Word> repword;
  std::vector<std::vector<std::uint32_t>> nbr;  // nbr[gen-1][l]
  std::vector<GraphEdge> edges;                 // discovery order
  // Tree edge entering l as (parent, gen); empty for the trivial coset.
  std::vector<std::optional<std::pair<std::uint32_t, int>>> parent;

  std::uint32_t neighbor(std::uint32_t l, int gen) const {
    return nbr[gen - 1][l];
  }
  bool is_tree_edge(std::uint32_t l, int gen) const;
  std::size_t tree_edge_count() const;
};

// Breadth-first orbit algorithm over the ordering `shat`.
CosetGraph build_lex(const CosetAction& a, const std::vector<int>& shat,
                     const std::vector<int>& subgroup = {});

// Two-queue variant grouping cosets by double coset W0 \ W / W0.
CosetGraph build_dc(const CosetAction& a, const std::vector<int>& shat,
                    const std::vector<int>& subgroup);

CosetGraph build_graph(const CosetAction& a, const CaseSpec& spec);

// Undirected DOT: one edge per 2-cycle, a loop per fixed point, one color
// per generator, spanning-tree edges drawn bold.
std::string export_dot(const CosetGraph& g, const std::string& name = "cosets");

// JSON array of representative words in canonical order.
std::string repwords_json(const CosetGraph& g);

}  // namespace hfree
