#include "srcfg/iso.hpp"

#include <algorithm>
#include <cstdio>
#include <deque>
#include <limits>
#include <numeric>
#include <optional>

#include "srcfg/errors.hpp"

namespace srcfg {

std::string CanonicalForm::hex() const {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char ch : bytes) {
    out.push_back(digits[ch >> 4]);
    out.push_back(digits[ch & 15]);
  }
  return out;
}

namespace {

using Perm = std::vector<std::uint32_t>;

std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  x ^= x >> 31;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 29;
  return h ^ x;
}

// Ordered partition of the vertex set into cells of consecutive positions.
struct Partition {
  std::vector<std::uint32_t> lab;        // position -> vertex
  std::vector<std::uint32_t> pos;        // vertex -> position
  std::vector<std::uint32_t> cell;       // vertex -> start of its cell
  std::vector<std::uint32_t> cell_end;   // cell start -> end (exclusive)
  std::uint32_t cells = 0;

  bool discrete() const { return cells == lab.size(); }
};

struct Node {
  Partition part;
  std::uint64_t trace = 0;
  std::vector<std::uint32_t> sequence;  // individualized vertices
};

struct Leaf {
  std::vector<std::uint64_t> traces;
  std::vector<std::uint64_t> cert;
  std::vector<std::uint32_t> lab;
  std::vector<std::uint32_t> sequence;
};

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) { std::iota(parent_.begin(), parent_.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
  }
  std::uint32_t size(std::uint32_t x) { return size_[find(x)]; }

 private:
  std::vector<std::uint32_t> parent_, size_;
};

class Canonizer {
 public:
  explicit Canonizer(const Configuration& c) : v_(c.v), b_(static_cast<std::uint32_t>(c.lines.size())) {
    n_ = v_ + b_;
    adj_.resize(n_);
    for (std::uint32_t l = 0; l < b_; ++l)
      for (Point p : c.lines[l]) {
        adj_[p].push_back(v_ + l);
        adj_[v_ + l].push_back(p);
      }
    count_.assign(n_, 0);
    header_ = std::to_string(c.v) + " " + std::to_string(c.k) + " " + std::to_string(b_) + "\n";
  }

  // Builds the first path and the automorphism group along it.
  void automorphisms() {
    Node root = root_node();
    first_.clear();
    first_.push_back(root);
    while (!first_.back().part.discrete()) {
      const Node& cur = first_.back();
      const std::uint32_t t = target_cell(cur.part);
      first_.push_back(individualize(cur, cur.part.lab[t]));
    }
    first_traces_.clear();
    for (const auto& nd : first_) first_traces_.push_back(nd.trace);
    first_leaf_ = make_leaf(first_.back(), first_traces_);

    const std::size_t depth = first_.size() - 1;
    orbit_sizes_.assign(depth, 1);
    for (std::size_t level = depth; level-- > 0;) {
      const Node& nu = first_[level];
      const std::uint32_t t = target_cell(nu.part);
      const std::uint32_t x = first_[level + 1].sequence.back();
      std::vector<std::uint32_t> failed;
      for (std::uint32_t p = t; p < nu.part.cell_end[t]; ++p) {
        const std::uint32_t w = nu.part.lab[p];
        if (w == x) continue;
        UnionFind uf = orbits(nu.sequence);
        if (uf.find(w) == uf.find(x)) continue;
        bool known_bad = false;
        for (auto f : failed) known_bad = known_bad || uf.find(f) == uf.find(w);
        if (known_bad) continue;
        Node child = individualize(nu, w);
        std::optional<Perm> gamma;
        if (child.trace == first_traces_[level + 1]) gamma = find_equivalent(child, level + 1);
        if (gamma) generators_.push_back(std::move(*gamma));
        else failed.push_back(w);
      }
      UnionFind uf = orbits(nu.sequence);
      orbit_sizes_[level] = 0;
      for (std::uint32_t p = t; p < nu.part.cell_end[t]; ++p)
        if (uf.find(nu.part.lab[p]) == uf.find(x)) ++orbit_sizes_[level];
    }
  }

  std::uint64_t group_order() const {
    unsigned __int128 order = 1;
    for (auto s : orbit_sizes_) {
      order *= s;
      if (order > std::numeric_limits<std::uint64_t>::max()) throw Overflow("automorphism group order exceeds 2^64");
    }
    return static_cast<std::uint64_t>(order);
  }

  // Best leaf over the whole tree; requires automorphisms() first.
  void canonical() {
    best_ = first_leaf_;
    std::vector<std::uint64_t> traces{first_[0].trace};
    search_best(first_[0], traces);
  }

  LabellingResult result() const {
    LabellingResult r;
    r.aut_order = group_order();
    r.generators = generators_;
    r.nodes = nodes_;
    r.labelling.assign(n_, 0);
    for (std::uint32_t p = 0; p < n_; ++p) r.labelling[best_.lab[p]] = p;
    r.form.bytes = header_;
    for (auto word : best_.cert)
      for (int byte = 0; byte < 8; ++byte) r.form.bytes.push_back(static_cast<char>((word >> (8 * byte)) & 0xff));
    return r;
  }

 private:
  std::uint32_t v_, b_, n_;
  std::vector<std::vector<std::uint32_t>> adj_;
  std::vector<std::uint32_t> count_;
  std::string header_;
  std::vector<Node> first_;
  std::vector<std::uint64_t> first_traces_;
  Leaf first_leaf_, best_;
  std::vector<Perm> generators_;
  std::vector<std::uint64_t> orbit_sizes_;
  std::uint64_t nodes_ = 0;

  Node root_node() {
    Node nd;
    Partition& P = nd.part;
    P.lab.resize(n_);
    std::iota(P.lab.begin(), P.lab.end(), 0u);
    P.pos = P.lab;
    P.cell.assign(n_, 0);
    P.cell_end.assign(n_ + 1, 0);
    std::deque<std::uint32_t> queue;
    if (v_ > 0) {
      P.cell_end[0] = v_;
      ++P.cells;
      queue.push_back(0);
    }
    if (b_ > 0) {
      for (std::uint32_t x = v_; x < n_; ++x) P.cell[x] = v_;
      P.cell_end[v_] = n_;
      ++P.cells;
      queue.push_back(v_);
    }
    nd.trace = refine(P, queue, mix(v_, b_));
    ++nodes_;
    return nd;
  }

  static std::uint32_t target_cell(const Partition& P) {
    std::uint32_t best = 0, best_size = 0;
    for (std::uint32_t s = 0; s < P.lab.size(); s = P.cell_end[s]) {
      const std::uint32_t size = P.cell_end[s] - s;
      if (size > 1 && (best_size == 0 || size < best_size)) {
        best = s;
        best_size = size;
      }
    }
    return best;
  }

  Node individualize(const Node& parent, std::uint32_t w) {
    Node nd;
    nd.part = parent.part;
    nd.sequence = parent.sequence;
    nd.sequence.push_back(w);
    Partition& P = nd.part;
    const std::uint32_t s = P.cell[w], e = P.cell_end[s];
    const std::uint32_t other = P.lab[s];
    std::swap(P.lab[s], P.lab[P.pos[w]]);
    P.pos[other] = P.pos[w];
    P.pos[w] = s;
    P.cell_end[s] = s + 1;
    P.cell_end[s + 1] = e;
    for (std::uint32_t p = s + 1; p < e; ++p) P.cell[P.lab[p]] = s + 1;
    ++P.cells;
    std::deque<std::uint32_t> queue{s};
    nd.trace = refine(P, queue, mix(parent.trace, s));
    ++nodes_;
    return nd;
  }

  // Equitable refinement; the returned trace depends only on the cell
  // structure, never on vertex names.
  std::uint64_t refine(Partition& P, std::deque<std::uint32_t>& queue, std::uint64_t trace) {
    std::vector<bool> queued(n_ + 1, false);
    for (auto s : queue) queued[s] = true;
    std::vector<std::uint32_t> touched, touched_cells, frag;
    while (!queue.empty() && !P.discrete()) {
      const std::uint32_t w = queue.front();
      queue.pop_front();
      queued[w] = false;
      touched.clear();
      for (std::uint32_t p = w; p < P.cell_end[w]; ++p)
        for (auto y : adj_[P.lab[p]]) {
          if (count_[y]++ == 0) touched.push_back(y);
        }
      touched_cells.clear();
      for (auto y : touched) touched_cells.push_back(P.cell[y]);
      std::sort(touched_cells.begin(), touched_cells.end());
      touched_cells.erase(std::unique(touched_cells.begin(), touched_cells.end()), touched_cells.end());
      trace = mix(trace, w);
      for (auto s : touched_cells) {
        const std::uint32_t e = P.cell_end[s];
        auto first = P.lab.begin() + s, last = P.lab.begin() + e;
        std::stable_sort(first, last, [&](std::uint32_t a, std::uint32_t b) { return count_[a] < count_[b]; });
        frag.clear();
        for (std::uint32_t p = s; p < e; ++p)
          if (p == s || count_[P.lab[p]] != count_[P.lab[p - 1]]) frag.push_back(p);
        for (std::uint32_t p = s; p < e; ++p) P.pos[P.lab[p]] = p;
        trace = mix(trace, s);
        trace = mix(trace, count_[P.lab[s]]);
        if (frag.size() == 1) continue;
        std::uint32_t largest = frag[0], largest_size = 0;
        for (std::size_t i = 0; i < frag.size(); ++i) {
          const std::uint32_t fs = frag[i], fe = i + 1 < frag.size() ? frag[i + 1] : e;
          P.cell_end[fs] = fe;
          for (std::uint32_t p = fs; p < fe; ++p) P.cell[P.lab[p]] = fs;
          trace = mix(trace, (std::uint64_t{count_[P.lab[fs]]} << 32) | (fe - fs));
          if (fe - fs > largest_size) {
            largest = fs;
            largest_size = fe - fs;
          }
        }
        P.cells += static_cast<std::uint32_t>(frag.size() - 1);
        const bool was_queued = queued[s];
        for (auto fs : frag) {
          if (queued[fs]) continue;
          if (!was_queued && fs == largest) continue;
          queued[fs] = true;
          queue.push_back(fs);
        }
      }
      for (auto y : touched) count_[y] = 0;
    }
    return mix(trace, P.cells);
  }

  std::vector<std::uint64_t> certificate(const Partition& P) const {
    std::vector<std::uint64_t> bits((static_cast<std::size_t>(v_) * b_ + 63) / 64, 0);
    for (std::uint32_t j = 0; j < b_; ++j)
      for (auto pt : adj_[P.lab[v_ + j]]) {
        const std::size_t bit = static_cast<std::size_t>(P.pos[pt]) * b_ + j;
        bits[bit >> 6] |= std::uint64_t{1} << (63 - (bit & 63));
      }
    return bits;
  }

  Leaf make_leaf(const Node& nd, const std::vector<std::uint64_t>& traces) const {
    return Leaf{traces, certificate(nd.part), nd.part.lab, nd.sequence};
  }

  Perm map_between(const std::vector<std::uint32_t>& from, const std::vector<std::uint32_t>& to) const {
    Perm g(n_);
    for (std::uint32_t p = 0; p < n_; ++p) g[from[p]] = to[p];
    return g;
  }

  bool fixes(const Perm& g, const std::vector<std::uint32_t>& seq) const {
    for (auto x : seq)
      if (g[x] != x) return false;
    return true;
  }

  UnionFind orbits(const std::vector<std::uint32_t>& seq) const {
    UnionFind uf(n_);
    for (const auto& g : generators_)
      if (fixes(g, seq))
        for (std::uint32_t x = 0; x < n_; ++x) uf.unite(x, g[x]);
    return uf;
  }

  // Searches below nd for a leaf equivalent to the first leaf.
  std::optional<Perm> find_equivalent(const Node& nd, std::size_t level) {
    if (nd.part.discrete()) {
      if (level + 1 != first_.size()) return std::nullopt;
      if (certificate(nd.part) != first_leaf_.cert) return std::nullopt;
      return map_between(first_leaf_.lab, nd.part.lab);
    }
    if (level + 1 >= first_.size()) return std::nullopt;
    const std::uint32_t t = target_cell(nd.part);
    std::vector<std::uint32_t> tried;
    std::size_t gens_seen = generators_.size();
    UnionFind uf = orbits(nd.sequence);
    for (std::uint32_t p = t; p < nd.part.cell_end[t]; ++p) {
      const std::uint32_t w = nd.part.lab[p];
      if (generators_.size() != gens_seen) {
        uf = orbits(nd.sequence);
        gens_seen = generators_.size();
      }
      bool skip = false;
      for (auto u : tried) skip = skip || uf.find(u) == uf.find(w);
      if (skip) continue;
      tried.push_back(w);
      Node child = individualize(nd, w);
      if (child.trace != first_traces_[level + 1]) continue;
      if (auto g = find_equivalent(child, level + 1)) return g;
    }
    return std::nullopt;
  }

  static int compare_prefix(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
    const std::size_t m = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < m; ++i)
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
  }

  // Returns the depth to unwind to, or -1 to carry on normally.
  long search_best(const Node& nd, std::vector<std::uint64_t>& traces) {
    const long depth = static_cast<long>(nd.sequence.size());
    if (compare_prefix(traces, best_.traces) < 0) return -1;
    if (nd.part.discrete()) {
      int cmp = compare_prefix(traces, best_.traces);
      if (cmp == 0 && traces.size() != best_.traces.size()) cmp = traces.size() < best_.traces.size() ? -1 : 1;
      if (cmp > 0) {
        best_ = make_leaf(nd, traces);
        return -1;
      }
      const auto cert = certificate(nd.part);
      if (cert > best_.cert) {
        best_ = Leaf{traces, cert, nd.part.lab, nd.sequence};
        return -1;
      }
      if (cert == best_.cert) {
        if (nd.part.lab == best_.lab) return -1;
        generators_.push_back(map_between(best_.lab, nd.part.lab));
        long common = 0;
        while (common < depth && nd.sequence[common] == best_.sequence[common]) ++common;
        return common;
      }
      return -1;
    }
    const std::uint32_t t = target_cell(nd.part);
    std::vector<std::uint32_t> tried;
    std::size_t gens_seen = generators_.size();
    UnionFind uf = orbits(nd.sequence);
    for (std::uint32_t p = t; p < nd.part.cell_end[t]; ++p) {
      const std::uint32_t w = nd.part.lab[p];
      if (generators_.size() != gens_seen) {
        uf = orbits(nd.sequence);
        gens_seen = generators_.size();
      }
      bool skip = false;
      for (auto u : tried) skip = skip || uf.find(u) == uf.find(w);
      if (skip) continue;
      tried.push_back(w);
      Node child = individualize(nd, w);
      traces.push_back(child.trace);
      const long jump = search_best(child, traces);
      traces.pop_back();
      if (jump >= 0 && jump < depth) return jump;
    }
    return -1;
  }
};

void require_valid(const Configuration& c) {
  if (!is_valid(c)) throw InvalidConfiguration("configuration fails validation");
}

}  // namespace

LabellingResult canonical_labelling(const Configuration& c) {
  require_valid(c);
  Canonizer z(c);
  z.automorphisms();
  z.canonical();
  return z.result();
}

CanonicalForm canonical_form(const Configuration& c) { return canonical_labelling(c).form; }

std::uint64_t aut_order(const Configuration& c) {
  require_valid(c);
  Canonizer z(c);
  z.automorphisms();
  return z.group_order();
}

bool is_self_dual(const Configuration& c) { return canonical_form(c) == canonical_form(dual(c)); }

bool isomorphic(const Configuration& a, const Configuration& b) {
  if (a.v != b.v || a.k != b.k || a.lines.size() != b.lines.size()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace srcfg
