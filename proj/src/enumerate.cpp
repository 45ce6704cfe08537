#include "enumerate.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace hfree {

std::uint32_t CosetAction::act(std::uint32_t c, const Word& w) const {
  for (Letter l : w) c = perm[l.gen - 1][c];
  return c;
}

std::string CosetAction::to_csv() const {
  std::ostringstream os;
  os << "coset";
  for (int g = 1; g <= ngens; ++g) os << ",s" << g;
  os << "\n";
  for (std::uint32_t c = 0; c < n; ++c) {
    os << c + 1;
    for (int g = 0; g < ngens; ++g) os << ',' << perm[g][c] + 1;
    os << "\n";
  }
  return os.str();
}

namespace {

std::vector<std::uint8_t> reduce_involutive(std::vector<std::uint8_t> w) {
  std::vector<std::uint8_t> st;
  for (auto g : w) {
    if (!st.empty() && st.back() == g) {
      st.pop_back();
    } else {
      st.push_back(g);
    }
  }
  // Cyclic reduction.
  std::size_t b = 0, e = st.size();
  while (e - b >= 2 && st[b] == st[e - 1]) {
    ++b;
    --e;
  }
  return {st.begin() + b, st.begin() + e};
}

// Coset table with involutive columns: T(c, g) = d iff T(d, g) = c.
class Enumerator {
 public:
  Enumerator(int ngens, const std::vector<std::vector<std::uint8_t>>& rels,
             std::size_t limit)
      : m_(ngens), rels_(rels), limit_(limit) {
    new_coset();
  }

  CosetAction run(const std::vector<int>& subgroup) {
    for (int j : subgroup) {
      const auto g = static_cast<std::uint8_t>(j - 1);
      ensure_room(2);
      scan_and_fill(0, {g});
    }
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      for (const auto& r : rels_) {
        if (!live(c)) break;
        c = ensure_room(r.size() + 1, c);
        scan_and_fill(static_cast<std::int32_t>(c), r);
      }
    }
    return standardize();
  }

 private:
  std::int32_t& at(std::int32_t c, int g) {
    return table_[static_cast<std::size_t>(c) * m_ + g];
  }
  bool live(std::size_t c) const {
    return parent_[c] == static_cast<std::int32_t>(c);
  }

  std::int32_t new_coset() {
    auto c = static_cast<std::int32_t>(parent_.size());
    parent_.push_back(c);
    table_.insert(table_.end(), m_, -1);
    ++live_;
    return c;
  }

  std::int32_t rep(std::int32_t c) {
    std::int32_t r = c;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[c] != r) {
      std::int32_t next = parent_[c];
      parent_[c] = r;
      c = next;
    }
    return r;
  }

  void merge(std::int32_t a, std::int32_t b) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    --live_;
    queue_.push_back(b);
  }

  void coincidence(std::int32_t a, std::int32_t b) {
    merge(a, b);
    while (!queue_.empty()) {
      std::int32_t e = queue_.front();
      queue_.pop_front();
      for (int g = 0; g < m_; ++g) {
        std::int32_t f = at(e, g);
        if (f < 0) continue;
        if (at(f, g) == e) at(f, g) = -1;
        at(e, g) = -1;
        std::int32_t e1 = rep(e);
        std::int32_t f1 = rep(f);
        if (at(e1, g) >= 0) {
          merge(f1, at(e1, g));
        } else if (at(f1, g) >= 0) {
          merge(e1, at(f1, g));
        } else {
          at(e1, g) = f1;
          at(f1, g) = e1;
        }
      }
    }
  }

  // Trace r around c in both directions, defining new cosets when `define`
  // is set, otherwise only deducing and detecting coincidences.
  void scan(std::int32_t c, const std::vector<std::uint8_t>& r, bool define) {
    std::int32_t f = c, b = c;
    std::ptrdiff_t i = 0, j = static_cast<std::ptrdiff_t>(r.size()) - 1;
    for (;;) {
      while (i <= j && at(f, r[i]) >= 0) f = at(f, r[i++]);
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && at(b, r[j]) >= 0) b = at(b, r[j--]);
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        at(f, r[i]) = b;
        at(b, r[i]) = f;
        return;
      }
      if (!define) return;
      std::int32_t d = new_coset();
      at(f, r[i]) = d;
      at(d, r[i]) = f;
    }
  }

  void scan_and_fill(std::int32_t c, const std::vector<std::uint8_t>& r) {
    scan(c, r, true);
  }

  // Makes room for `needed` definitions; returns the (possibly renumbered)
  // position of the coset currently being processed.
  std::size_t ensure_room(std::size_t needed, std::size_t current = 0) {
    if (parent_.size() + needed <= limit_) return current;
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      for (const auto& r : rels_) {
        if (!live(c)) break;
        scan(static_cast<std::int32_t>(c), r, false);
      }
    }
    current = compact(current);
    if (parent_.size() + needed > limit_) {
      throw CosetLimitExceeded("coset enumeration exceeded " +
                               std::to_string(limit_) + " cosets");
    }
    return current;
  }

  std::size_t compact(std::size_t current) {
    std::vector<std::int32_t> index(parent_.size(), -1);
    std::int32_t k = 0;
    std::size_t new_current = 0;
    bool found = false;
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      if (!found && c >= current) {
        new_current = static_cast<std::size_t>(k);
        found = true;
      }
      if (live(c)) index[c] = k++;
    }
    if (!found) new_current = static_cast<std::size_t>(k);
    std::vector<std::int32_t> table(static_cast<std::size_t>(k) * m_, -1);
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      if (index[c] < 0) continue;
      for (int g = 0; g < m_; ++g) {
        std::int32_t d = at(static_cast<std::int32_t>(c), g);
        table[static_cast<std::size_t>(index[c]) * m_ + g] =
            d < 0 ? -1 : index[d];
      }
    }
    table_ = std::move(table);
    parent_.resize(static_cast<std::size_t>(k));
    for (std::int32_t c = 0; c < k; ++c) parent_[c] = c;
    live_ = static_cast<std::size_t>(k);
    return new_current;
  }

  CosetAction standardize() {
    compact(0);
    const std::size_t n = parent_.size();
    std::vector<std::int32_t> order;
    std::vector<std::int32_t> index(n, -1);
    order.reserve(n);
    order.push_back(0);
    index[0] = 0;
    for (std::size_t head = 0; head < order.size(); ++head) {
      for (int g = 0; g < m_; ++g) {
        std::int32_t d = at(order[head], g);
        if (d < 0) throw std::logic_error("incomplete coset table");
        if (index[d] < 0) {
          index[d] = static_cast<std::int32_t>(order.size());
          order.push_back(d);
        }
      }
    }
    CosetAction a;
    a.ngens = m_;
    a.n = static_cast<std::uint32_t>(n);
    a.perm.assign(m_, std::vector<std::uint32_t>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (int g = 0; g < m_; ++g) {
        a.perm[g][i] = static_cast<std::uint32_t>(index[at(order[i], g)]);
      }
    }
    return a;
  }

  int m_;
  const std::vector<std::vector<std::uint8_t>>& rels_;
  std::size_t limit_;
  std::vector<std::int32_t> table_;
  std::vector<std::int32_t> parent_;
  std::deque<std::int32_t> queue_;
  std::size_t live_ = 0;
};

}  // namespace

std::vector<std::vector<std::uint8_t>> involutive_relators(
    const Presentation& p) {
  std::vector<std::vector<std::uint8_t>> rels;
  for (int g = 0; g < p.ngens; ++g) {
    rels.push_back({static_cast<std::uint8_t>(g), static_cast<std::uint8_t>(g)});
  }
  std::vector<std::vector<std::uint8_t>> extra;
  for (const auto& r : p.relations) {
    std::vector<std::uint8_t> w;
    for (Letter l : r.lhs) w.push_back(static_cast<std::uint8_t>(l.gen - 1));
    for (auto it = r.rhs.letters().rbegin(); it != r.rhs.letters().rend();
         ++it) {
      w.push_back(static_cast<std::uint8_t>(it->gen - 1));
    }
    w = reduce_involutive(std::move(w));
    if (!w.empty()) extra.push_back(std::move(w));
  }
  std::stable_sort(extra.begin(), extra.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  rels.insert(rels.end(), extra.begin(), extra.end());
  return rels;
}

CosetAction todd_coxeter(int ngens,
                         const std::vector<std::vector<std::uint8_t>>& relators,
                         const std::vector<int>& subgroup,
                         const EnumerationOptions& opts) {
  Enumerator e(ngens, relators, std::max<std::size_t>(opts.max_cosets, 2));
  return e.run(subgroup);
}

CosetAction todd_coxeter(const Presentation& p,
                         const std::vector<int>& subgroup,
                         const EnumerationOptions& opts) {
  for (int j : subgroup) {
    if (j < 1 || j > p.ngens) {
      throw PresentationError("subgroup generator out of range");
    }
  }
  return todd_coxeter(p.ngens, involutive_relators(p), subgroup, opts);
}

std::uint64_t group_order(const Presentation& p,
                          const EnumerationOptions& opts) {
  return todd_coxeter(p, {}, opts).n;
}

}  // namespace hfree
