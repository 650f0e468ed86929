#include "qchrom/exact.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

#include "qchrom/errors.hpp"

namespace qchrom::exact {

namespace {

using Clock = std::chrono::steady_clock;

class Bits {
 public:
  explicit Bits(std::size_t n = 0) : words_((n + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i / 64] |= bit(i); }
  void reset(std::size_t i) { words_[i / 64] &= ~bit(i); }
  bool test(std::size_t i) const { return words_[i / 64] & bit(i); }

  bool any() const {
    return std::any_of(words_.begin(), words_.end(),
                       [](std::uint64_t w) { return w != 0; });
  }

  std::size_t first() const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i]) {
        return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
      }
    }
    return npos;
  }

  Bits& operator&=(const Bits& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }

  void subtract(const Bits& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
  }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  static std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << (i % 64); }
  std::vector<std::uint64_t> words_;
};

class Deadline {
 public:
  Deadline(Clock::time_point start, Seconds budget)
      : end_(start + std::chrono::duration_cast<Clock::duration>(budget)) {}

  // Polls the clock every 1024 calls.
  bool expired() {
    if (expired_) return true;
    if ((++ticks_ & 1023u) == 0 && Clock::now() >= end_) expired_ = true;
    return expired_;
  }
  bool hit() const { return expired_; }

 private:
  Clock::time_point end_;
  std::uint32_t ticks_ = 0;
  bool expired_ = false;
};

std::vector<Vertex> degree_order(const Graph& g) {
  std::vector<Vertex> order(g.order());
  std::iota(order.begin(), order.end(), Vertex{0});
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    return g.degree(a) > g.degree(b);
  });
  return order;
}

class CliqueSearch {
 public:
  CliqueSearch(const Graph& g, Deadline& deadline)
      : deadline_(deadline), order_(degree_order(g)), nbrs_(g.order()) {
    // Relabel so bit i is the i-th vertex in degree order.
    std::vector<std::size_t> pos(g.order());
    for (std::size_t i = 0; i < order_.size(); ++i) pos[order_[i]] = i;
    for (std::size_t i = 0; i < order_.size(); ++i) {
      nbrs_[i] = Bits(g.order());
      for (Vertex w : g.neighbors(order_[i])) nbrs_[i].set(pos[w]);
    }
  }

  std::vector<Vertex> run() {
    const std::size_t n = order_.size();
    Bits all(n);
    for (std::size_t i = 0; i < n; ++i) all.set(i);
    if (n > 0) best_ = {0};
    std::vector<std::size_t> current;
    expand(current, all);
    std::vector<Vertex> out;
    for (auto i : best_) out.push_back(order_[i]);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  void expand(std::vector<std::size_t>& current, Bits candidates) {
    if (deadline_.expired()) return;
    std::vector<std::size_t> order;
    std::vector<std::size_t> bound;
    Bits uncolored = candidates;
    std::size_t color = 0;
    while (uncolored.any()) {
      ++color;
      Bits klass = uncolored;
      for (auto v = klass.first(); v != Bits::npos; v = klass.first()) {
        klass.reset(v);
        klass.subtract(nbrs_[v]);
        uncolored.reset(v);
        order.push_back(v);
        bound.push_back(color);
      }
    }
    for (std::size_t i = order.size(); i-- > 0;) {
      if (current.size() + bound[i] <= best_.size()) return;
      const auto v = order[i];
      current.push_back(v);
      Bits next = candidates;
      next &= nbrs_[v];
      if (!next.any()) {
        if (current.size() > best_.size()) best_ = current;
      } else {
        expand(current, next);
      }
      current.pop_back();
      candidates.reset(v);
      if (deadline_.hit()) return;
    }
  }

  Deadline& deadline_;
  std::vector<Vertex> order_;
  std::vector<Bits> nbrs_;
  std::vector<std::size_t> best_;
};

constexpr std::size_t kUncolored = static_cast<std::size_t>(-1);

class DsaturState {
 public:
  explicit DsaturState(const Graph& g)
      : g_(g),
        color_(g.order(), kUncolored),
        counts_(g.order(), std::vector<std::uint32_t>(g.order() + 1, 0)),
        saturation_(g.order(), 0) {}

  void assign(Vertex v, std::size_t k) {
    color_[v] = k;
    ++colored_;
    for (Vertex w : g_.neighbors(v)) {
      if (counts_[w][k]++ == 0) ++saturation_[w];
    }
  }

  void unassign(Vertex v) {
    const auto k = color_[v];
    color_[v] = kUncolored;
    --colored_;
    for (Vertex w : g_.neighbors(v)) {
      if (--counts_[w][k] == 0) --saturation_[w];
    }
  }

  bool allowed(Vertex v, std::size_t k) const { return counts_[v][k] == 0; }

  // Max saturation, then max degree, then lowest index.
  Vertex select() const {
    Vertex best = kUncolored;
    for (Vertex v = 0; v < g_.order(); ++v) {
      if (color_[v] != kUncolored) continue;
      if (best == kUncolored || saturation_[v] > saturation_[best] ||
          (saturation_[v] == saturation_[best] &&
           g_.degree(v) > g_.degree(best))) {
        best = v;
      }
    }
    return best;
  }

  bool complete() const { return colored_ == g_.order(); }
  const Coloring& coloring() const { return color_; }

 private:
  const Graph& g_;
  Coloring color_;
  std::vector<std::vector<std::uint32_t>> counts_;
  std::vector<std::size_t> saturation_;
  std::size_t colored_ = 0;
};

class ColoringSearch {
 public:
  ColoringSearch(const Graph& g, Deadline& deadline,
                 const std::vector<Vertex>& clique, Coloring upper)
      : g_(g), deadline_(deadline), state_(g), clique_(clique),
        best_(std::move(upper)), lower_(std::max<std::size_t>(clique.size(), 1)),
        upper_(color_count(best_)) {}

  void run() {
    if (upper_ <= lower_) return;
    for (std::size_t i = 0; i < clique_.size(); ++i) state_.assign(clique_[i], i);
    search(clique_.size());
  }

  std::size_t lower() const { return lower_; }
  std::size_t upper() const { return upper_; }
  const Coloring& best() const { return best_; }
  std::size_t nodes() const { return nodes_; }

 private:
  void search(std::size_t used) {
    ++nodes_;
    if (used >= upper_ || deadline_.expired()) return;
    if (state_.complete()) {
      upper_ = used;
      best_ = state_.coloring();
      return;
    }
    const Vertex v = state_.select();
    for (std::size_t k = 0; k < used; ++k) {
      if (!state_.allowed(v, k)) continue;
      state_.assign(v, k);
      search(used);
      state_.unassign(v);
      if (upper_ <= lower_ || deadline_.hit() || used >= upper_) return;
    }
    if (used + 1 < upper_) {
      state_.assign(v, used);
      search(used + 1);
      state_.unassign(v);
    }
  }

  const Graph& g_;
  Deadline& deadline_;
  DsaturState state_;
  std::vector<Vertex> clique_;
  Coloring best_;
  std::size_t lower_;
  std::size_t upper_;
  std::size_t nodes_ = 0;
};

void require_nonempty(const Graph& g) {
  if (g.order() == 0) throw StructuralError("exact solver needs n >= 1");
}

CliqueResult clique_with(const Graph& g, Deadline& deadline,
                         Clock::time_point start) {
  CliqueResult r;
  r.witness = CliqueSearch(g, deadline).run();
  r.clique = r.witness.size();
  r.status = deadline.hit() ? Status::kTimedOut : Status::kComplete;
  r.elapsed = Clock::now() - start;
  return r;
}

ChromaticResult chromatic_with(const Graph& g, Deadline& deadline,
                               const std::vector<Vertex>& clique,
                               Clock::time_point start) {
  ColoringSearch search(g, deadline, clique, dsatur_greedy(g));
  search.run();
  ChromaticResult r;
  r.upper = search.upper();
  r.coloring = search.best();
  r.nodes = search.nodes();
  r.status = deadline.hit() ? Status::kTimedOut : Status::kComplete;
  r.lower = r.status == Status::kComplete ? r.upper : search.lower();
  r.elapsed = Clock::now() - start;
  return r;
}

}  // namespace

std::string_view to_string(Status status) {
  return status == Status::kComplete ? "complete" : "timed_out";
}

Status ExactReport::status() const {
  return chromatic.status == Status::kComplete &&
                 clique.status == Status::kComplete
             ? Status::kComplete
             : Status::kTimedOut;
}

CliqueResult clique_number(const Graph& g, Seconds budget) {
  require_nonempty(g);
  const auto start = Clock::now();
  Deadline deadline(start, budget);
  return clique_with(g, deadline, start);
}

ChromaticResult chromatic_number(const Graph& g, Seconds budget) {
  return solve(g, budget).chromatic;
}

ExactReport solve(const Graph& g, Seconds budget) {
  require_nonempty(g);
  const auto start = Clock::now();
  Deadline deadline(start, budget);
  ExactReport r;
  r.clique = clique_with(g, deadline, start);
  r.chromatic = chromatic_with(g, deadline, r.clique.witness, start);
  if (r.clique.status == Status::kTimedOut) {
    // Without a proven clique the coloring search may still have finished,
    // but chi is only certified when both searches completed.
    r.chromatic.status = Status::kTimedOut;
    r.chromatic.lower = std::max<std::size_t>(r.clique.clique, 1);
  }
  return r;
}

Coloring dsatur_greedy(const Graph& g) {
  DsaturState state(g);
  while (!state.complete()) {
    const Vertex v = state.select();
    std::size_t k = 0;
    while (!state.allowed(v, k)) ++k;
    state.assign(v, k);
  }
  return state.coloring();
}

bool is_proper(const Graph& g, const Coloring& coloring) {
  if (coloring.size() != g.order()) return false;
  return std::none_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
    return coloring[e.first] == coloring[e.second];
  });
}

std::size_t color_count(const Coloring& coloring) {
  if (coloring.empty()) return 0;
  return *std::max_element(coloring.begin(), coloring.end()) + 1;
}

bool is_clique(const Graph& g, const std::vector<Vertex>& vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (!g.has_edge(vertices[i], vertices[j])) return false;
    }
  }
  return true;
}

cert::QuantumColoringCert proper_coloring_to_certificate(
    const Graph& g, const Coloring& coloring, std::size_t d) {
  if (coloring.size() != g.order()) {
    throw StructuralError("coloring has " + std::to_string(coloring.size()) +
                          " entries for " + std::to_string(g.order()) +
                          " vertices");
  }
  for (const auto& [u, v] : g.edges()) {
    if (coloring[u] == coloring[v]) {
      throw RefusalError("improper coloring: edge (" + std::to_string(u) +
                         "," + std::to_string(v) + ") has both ends color " +
                         std::to_string(coloring[u]));
    }
  }
  const std::size_t c = color_count(coloring);
  const auto dd = static_cast<Eigen::Index>(d);
  std::vector<CMatrix> ps;
  for (Vertex v = 0; v < g.order(); ++v) {
    for (std::size_t k = 0; k < c; ++k) {
      ps.push_back(coloring[v] == k ? CMatrix(CMatrix::Identity(dd, dd))
                                    : CMatrix(CMatrix::Zero(dd, dd)));
    }
  }
  return cert::QuantumColoringCert(g.order(), c, d, std::move(ps));
}

}  // namespace qchrom::exact
