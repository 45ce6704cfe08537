#include "cosetgraph.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <sstream>

#include "json.hpp"

namespace hfree {

namespace {

constexpr std::uint32_t kUnseen = 0xffffffffu;

class GraphBuilder {
 public:
  GraphBuilder(const CosetAction& a, OrderMode mode, std::vector<int> shat,
               std::vector<int> subgroup)
      : a_(a) {
    g_.n = a.n;
    g_.ngens = a.ngens;
    g_.mode = mode;
    g_.shat = std::move(shat);
    g_.subgroup = std::move(subgroup);
    g_.index_of.assign(a.n, kUnseen);
    g_.nbr.assign(a.ngens, std::vector<std::uint32_t>(a.n, kUnseen));
    g_.order.reserve(a.n);
    g_.repword.reserve(a.n);
    g_.parent.reserve(a.n);
  }

  // Adds the trivial coset; returns its canonical index.
  std::uint32_t add_root() {
    return add_vertex(a_.basepoint, Word{}, std::nullopt);
  }

  // Process (x, s); returns the canonical index of a newly added coset.
  std::optional<std::uint32_t> process(std::uint32_t x, int s) {
    const std::uint32_t z_coset = a_.act(g_.order[x], s);
    std::optional<std::uint32_t> added;
    bool tree = false;
    if (g_.index_of[z_coset] == kUnseen) {
      Word w = g_.repword[x];
      w.push_back({static_cast<std::uint8_t>(s), false});
      added = add_vertex(z_coset, std::move(w), std::make_pair(x, s));
      tree = true;
    }
    const std::uint32_t z = g_.index_of[z_coset];
    if (g_.nbr[s - 1][x] == kUnseen) {
      g_.nbr[s - 1][x] = z;
      g_.edges.push_back({x, s, z, tree});
    }
    return added;
  }

  CosetGraph finish() {
    if (g_.order.size() != g_.n) {
      throw std::invalid_argument("coset action is not transitive");
    }
    for (int s = 1; s <= g_.ngens; ++s) {
      for (std::uint32_t l = 0; l < g_.n; ++l) {
        if (g_.nbr[s - 1][l] == kUnseen) {
          throw std::logic_error("edge left unprocessed");
        }
      }
    }
    return std::move(g_);
  }

 private:
  std::uint32_t add_vertex(std::uint32_t coset, Word w,
                           std::optional<std::pair<std::uint32_t, int>> par) {
    const auto idx = static_cast<std::uint32_t>(g_.order.size());
    g_.order.push_back(coset);
    g_.index_of[coset] = idx;
    g_.repword.push_back(std::move(w));
    g_.parent.push_back(par);
    return idx;
  }

  const CosetAction& a_;
  CosetGraph g_;
};

void check_ordering(const CosetAction& a, const std::vector<int>& shat) {
  std::vector<int> s = shat;
  std::sort(s.begin(), s.end());
  if (static_cast<int>(s.size()) != a.ngens) {
    throw std::invalid_argument("ordering must list every generator once");
  }
  for (int i = 0; i < a.ngens; ++i) {
    if (s[i] != i + 1) {
      throw std::invalid_argument("ordering must list every generator once");
    }
  }
}

}  // namespace

bool CosetGraph::is_tree_edge(std::uint32_t l, int gen) const {
  const std::uint32_t k = neighbor(l, gen);
  return parent[k] && parent[k]->first == l && parent[k]->second == gen;
}

std::size_t CosetGraph::tree_edge_count() const {
  return static_cast<std::size_t>(
      std::count_if(parent.begin(), parent.end(),
                    [](const auto& p) { return p.has_value(); }));
}

CosetGraph build_lex(const CosetAction& a, const std::vector<int>& shat,
                     const std::vector<int>& subgroup) {
  check_ordering(a, shat);
  GraphBuilder b(a, OrderMode::lex, shat, subgroup);
  std::deque<std::uint32_t> q{b.add_root()};
  while (!q.empty()) {
    const std::uint32_t x = q.front();
    q.pop_front();
    for (int s : shat) {
      if (auto z = b.process(x, s)) q.push_back(*z);
    }
  }
  return b.finish();
}

CosetGraph build_dc(const CosetAction& a, const std::vector<int>& shat,
                    const std::vector<int>& subgroup) {
  check_ordering(a, shat);
  std::vector<int> jhat, khat;
  for (int s : shat) {
    bool in_j = std::find(subgroup.begin(), subgroup.end(), s) != subgroup.end();
    (in_j ? jhat : khat).push_back(s);
  }
  GraphBuilder b(a, OrderMode::dc, shat, subgroup);
  const std::uint32_t root = b.add_root();
  std::deque<std::uint32_t> p{root}, q{root};
  auto push = [&](std::optional<std::uint32_t> z) {
    if (z) {
      p.push_back(*z);
      q.push_back(*z);
    }
  };
  while (!p.empty()) {
    const std::uint32_t y = p.front();
    p.pop_front();
    for (int t : khat) {
      while (!q.empty()) {
        const std::uint32_t x = q.front();
        q.pop_front();
        for (int s : jhat) push(b.process(x, s));
      }
      push(b.process(y, t));
    }
  }
  // With K empty the loops above never visit J-edges.
  if (khat.empty()) {
    while (!q.empty()) {
      const std::uint32_t x = q.front();
      q.pop_front();
      for (int s : jhat) push(b.process(x, s));
    }
  }
  return b.finish();
}

CosetGraph build_graph(const CosetAction& a, const CaseSpec& spec) {
  return spec.mode == OrderMode::lex ? build_lex(a, spec.shat, spec.subgroup)
                                     : build_dc(a, spec.shat, spec.subgroup);
}

std::string export_dot(const CosetGraph& g, const std::string& name) {
  static constexpr std::array<const char*, 9> kColors{
      "red", "forestgreen", "blue", "orange", "purple",
      "brown", "magenta", "cyan", "gray40"};
  std::ostringstream os;
  os << "graph \"" << name << "\" {\n";
  os << "  node [shape=circle, fontsize=10];\n";
  for (std::uint32_t l = 0; l < g.n; ++l) {
    std::string w = to_string(g.repword[l]);
    os << "  " << l + 1 << " [tooltip=\"" << (w.empty() ? "()" : w) << "\"];\n";
  }
  for (const auto& e : g.edges) {
    if (e.from > e.to) continue;
    bool bold = g.is_tree_edge(e.from, e.gen) || g.is_tree_edge(e.to, e.gen);
    os << "  " << e.from + 1 << " -- " << e.to + 1 << " [color="
       << kColors[(e.gen - 1) % kColors.size()] << ", label=\"" << e.gen
       << '"';
    if (bold) os << ", style=bold, penwidth=2.5";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

std::string repwords_json(const CosetGraph& g) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& w : g.repword) arr.push_back(to_string(w));
  return arr.dump();
}

}  // namespace hfree
