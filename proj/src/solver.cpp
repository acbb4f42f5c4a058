#include <n3l/solver.hpp>
#include <n3l/parallel.hpp>

#include <atomic>
#include <chrono>
#include <numeric>
#include <set>
#include <unordered_set>

namespace n3l {

namespace {

using Clock = std::chrono::steady_clock;

// Flat description of the {1..n}^d grid in lexicographic cell order.  Cells
// are grouped into axis lines along the last coordinate: cell index idx lies
// on line idx / n, and a line holds at most 2 chosen points.
struct Grid {
  long n;
  int dim;
  std::size_t N;
  std::size_t lines;
  std::vector<int> coords;  // dim entries per cell
  int bits;                 // per-coordinate width of the packed direction key

  Grid(long n_, int dim_) : n(n_), dim(dim_) {
    if (n < 1 || dim < 2) throw DomainError("solver needs n >= 1, d >= 2");
    if (dim > 8) throw DomainError("solver supports dimensions up to 8");
    bits = dim <= 4 ? 16 : 8;
    if (n >= (1L << (bits - 1))) {
      throw DomainError("grid side too large for this dimension's direction packing");
    }
    double size = std::pow(static_cast<double>(n), dim);
    if (size > 1e7) throw DomainError("grid too large to materialize");
    N = static_cast<std::size_t>(size + 0.5);
    lines = N / static_cast<std::size_t>(n);
    coords.resize(N * static_cast<std::size_t>(dim));
    std::vector<int> odo(dim, 1);
    for (std::size_t idx = 0; idx < N; ++idx) {
      for (int k = 0; k < dim; ++k) coords[idx * dim + k] = odo[k];
      int i = dim - 1;
      while (i >= 0 && odo[i] == static_cast<int>(n)) {
        odo[i] = 1;
        --i;
      }
      if (i >= 0) ++odo[i];
    }
  }

  std::uint64_t dir_key(std::size_t a, std::size_t b) const {
    int d[8];
    int g = 0;
    for (int k = 0; k < dim; ++k) {
      d[k] = coords[a * dim + k] - coords[b * dim + k];
      g = std::gcd(g, d[k] < 0 ? -d[k] : d[k]);
    }
    int sign = 0;
    std::uint64_t key = 0;
    const int offset = 1 << (bits - 1);
    for (int k = 0; k < dim; ++k) {
      int c = d[k] / g;
      if (sign == 0 && c != 0) sign = c > 0 ? 1 : -1;
      key = (key << bits) | static_cast<std::uint64_t>(sign < 0 ? offset - c : offset + c);
    }
    return key;
  }

  IntVec cell_vec(std::size_t idx) const {
    IntVec v(dim);
    for (int k = 0; k < dim; ++k) v[k] = Int(coords[idx * dim + k]);
    return v;
  }
};

// One depth-first search context.  `bound` is read through a callable so
// phase one can share an atomic best across workers while phase two uses a
// frozen constant.
struct Search {
  const Grid& g;
  std::vector<std::size_t> chosen;
  std::vector<std::unordered_set<std::uint64_t>> dirs;
  std::vector<int> line_cnt;
  long long nodes = 0;
  Clock::time_point deadline;
  bool has_deadline = false;
  bool timed_out = false;

  explicit Search(const Grid& grid) : g(grid), line_cnt(grid.lines, 0) {}

  bool feasible(std::size_t idx) const {
    for (std::size_t i = 0; i < chosen.size(); ++i) {
      if (dirs[i].count(g.dir_key(idx, chosen[i]))) return false;
    }
    return true;
  }

  void add(std::size_t idx) {
    std::unordered_set<std::uint64_t> own;
    for (std::size_t i = 0; i < chosen.size(); ++i) {
      std::uint64_t key = g.dir_key(idx, chosen[i]);
      dirs[i].insert(key);
      own.insert(key);
    }
    chosen.push_back(idx);
    dirs.push_back(std::move(own));
    ++line_cnt[idx / static_cast<std::size_t>(g.n)];
  }

  void remove() {
    std::size_t idx = chosen.back();
    --line_cnt[idx / static_cast<std::size_t>(g.n)];
    chosen.pop_back();
    dirs.pop_back();
    for (std::size_t i = 0; i < chosen.size(); ++i) {
      dirs[i].erase(g.dir_key(idx, chosen[i]));
    }
  }

  bool out_of_time() {
    if (!has_deadline) return false;
    if (timed_out) return true;
    if ((nodes & 255) == 0 && Clock::now() > deadline) timed_out = true;
    return timed_out;
  }

  // Upper bound on the final size reachable from `pos` with the current
  // selection: remaining cells, capped by per-line capacity (2 per line;
  // lines after pos's line are untouched because chosen indices < pos).
  long upper_bound(std::size_t pos) const {
    const long n = g.n;
    std::size_t lid = pos / static_cast<std::size_t>(n);
    long in_line = std::min<long>(std::max(0, 2 - line_cnt[lid]),
                                  n - static_cast<long>(pos % static_cast<std::size_t>(n)));
    long after = 2 * static_cast<long>(g.lines - 1 - lid);
    long cap = std::min<long>(static_cast<long>(g.N - pos), in_line + after);
    return static_cast<long>(chosen.size()) + cap;
  }

  // Phase-one exploration: grow `best` (shared across workers) and keep the
  // worker's own best selection for the time-limit fallback.
  void explore(std::size_t pos, std::atomic<long>& best, std::vector<std::size_t>& local_best) {
    ++nodes;
    if (out_of_time()) return;
    long k = static_cast<long>(chosen.size());
    if (k > static_cast<long>(local_best.size())) local_best = chosen;
    long seen = best.load(std::memory_order_relaxed);
    while (k > seen && !best.compare_exchange_weak(seen, k, std::memory_order_relaxed)) {
    }
    for (std::size_t idx = pos; idx < g.N; ++idx) {
      if (upper_bound(idx) <= best.load(std::memory_order_relaxed)) break;
      if (!feasible(idx)) continue;
      add(idx);
      explore(idx + 1, best, local_best);
      remove();
      if (timed_out) return;
    }
  }

  // Phase-two canonical pass: with bound = max-1, the first selection that
  // improves it is the lexicographically smallest optimal set.
  bool canonical(std::size_t pos, long bound, std::vector<std::size_t>& witness) {
    ++nodes;
    if (out_of_time()) return false;
    if (static_cast<long>(chosen.size()) > bound) {
      witness = chosen;
      return true;
    }
    for (std::size_t idx = pos; idx < g.N; ++idx) {
      if (upper_bound(idx) <= bound) break;
      if (!feasible(idx)) continue;
      add(idx);
      if (canonical(idx + 1, bound, witness)) return true;
      remove();
    }
    return false;
  }
};

// Lexicographically smallest representative of a cell's orbit under the
// box symmetries (coordinate permutations and per-axis reflections):
// ascending coordinates, each at most (n+1)/2.
bool in_fundamental_domain(const Grid& g, std::size_t idx) {
  for (int k = 0; k < g.dim; ++k) {
    int c = g.coords[idx * g.dim + k];
    if (2 * c > static_cast<int>(g.n) + 1) return false;
    if (k > 0 && g.coords[idx * g.dim + k - 1] > c) return false;
  }
  return true;
}

}  // namespace

SolveResult exact_max(long n, int dim, const SolveOptions& opts) {
  auto t0 = Clock::now();
  Grid grid(n, dim);
  const int threads = std::max(1, resolve_threads(opts.threads));
  const bool limited = opts.time_limit_s > 0;
  const auto deadline =
      limited ? t0 + std::chrono::duration_cast<Clock::duration>(
                         std::chrono::duration<double>(opts.time_limit_s))
              : Clock::time_point::max();

  std::vector<std::size_t> roots;
  for (std::size_t idx = 0; idx < grid.N; ++idx) {
    if (!opts.symmetry_reduction || in_fundamental_domain(grid, idx)) roots.push_back(idx);
  }

  std::atomic<long> best{0};
  std::atomic<std::size_t> next{0};
  std::vector<std::vector<std::size_t>> worker_best(threads);
  std::vector<long long> worker_nodes(threads, 0);
  std::vector<char> worker_timeout(threads, 0);
  {
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w) {
      pool.emplace_back([&, w] {
        Search s(grid);
        s.has_deadline = limited;
        s.deadline = deadline;
        while (true) {
          std::size_t i = next.fetch_add(1);
          if (i >= roots.size() || s.timed_out) break;
          std::size_t root = roots[i];
          if (s.upper_bound(root) <= best.load(std::memory_order_relaxed)) continue;
          if (limited && Clock::now() > deadline) {
            s.timed_out = true;
            break;
          }
          s.add(root);
          s.explore(root + 1, best, worker_best[w]);
          s.remove();
        }
        worker_nodes[w] = s.nodes;
        worker_timeout[w] = s.timed_out ? 1 : 0;
      });
    }
    for (auto& t : pool) t.join();
  }
  bool timed_out =
      std::any_of(worker_timeout.begin(), worker_timeout.end(), [](char b) { return b != 0; });
  long max = best.load();

  std::vector<std::size_t> witness_cells;
  long long nodes = 0;
  bool optimal = false;
  if (!timed_out) {
    Search s(grid);
    s.has_deadline = limited;
    s.deadline = deadline;
    if (max > 0) s.canonical(0, max - 1, witness_cells);
    nodes = s.nodes;
    if (!s.timed_out && static_cast<long>(witness_cells.size()) == max) {
      optimal = true;
    } else {
      timed_out = true;
    }
  }
  if (timed_out && !optimal) {
    // Best-effort fallback: largest worker selection, ties to the
    // lexicographically smaller index sequence.
    for (const auto& wb : worker_best) {
      if (wb.size() > witness_cells.size() ||
          (wb.size() == witness_cells.size() && !wb.empty() && wb < witness_cells)) {
        witness_cells = wb;
      }
    }
    max = static_cast<long>(witness_cells.size());
    nodes = std::accumulate(worker_nodes.begin(), worker_nodes.end(), 0LL);
  }

  std::vector<IntVec> pts;
  pts.reserve(witness_cells.size());
  for (std::size_t idx : witness_cells) pts.push_back(grid.cell_vec(idx));
  PointSet witness(dim, Box::unit_grid(n, dim), std::move(pts));
  if (!verify_no_three(witness).pass) throw InternalError("solver witness fails verification");
  if (dim == 2 && max > 2 * n) throw InternalError("solver exceeded the 2n row ceiling");

  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
  return SolveResult{n, dim, max, std::move(witness), nodes, static_cast<long long>(ms), optimal};
}

bool is_maximal(const PointSet& s, long n, int dim) {
  if (s.dim() != dim) throw ContractViolation("point set dimension mismatch");
  Box box = Box::unit_grid(n, dim);
  for (const auto& p : s.points()) {
    if (!box.contains(p)) throw ContractViolation("point set leaves the stated grid");
  }
  if (!verify_no_three(s).pass) {
    throw ContractViolation("maximality test requires a verified point set");
  }
  std::set<std::vector<long>> members;
  std::vector<std::vector<long>> pts;
  for (const auto& p : s.points()) {
    std::vector<long> v(dim);
    for (int k = 0; k < dim; ++k) v[k] = p[k].get_si();
    members.insert(v);
    pts.push_back(std::move(v));
  }
  std::vector<std::set<std::vector<long>>> dirs(pts.size());
  std::vector<long> diff(dim);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      for (int k = 0; k < dim; ++k) diff[k] = pts[i][k] - pts[j][k];
      auto dv = primitive_direction(diff);
      dirs[i].insert(dv);
      dirs[j].insert(dv);
    }
  }
  std::vector<long> cell(dim, 1);
  while (true) {
    if (!members.count(cell)) {
      bool fits = true;
      for (std::size_t i = 0; i < pts.size() && fits; ++i) {
        for (int k = 0; k < dim; ++k) diff[k] = cell[k] - pts[i][k];
        if (dirs[i].count(primitive_direction(diff))) fits = false;
      }
      if (fits) return false;
    }
    int i = dim - 1;
    while (i >= 0 && cell[i] == n) {
      cell[i] = 1;
      --i;
    }
    if (i < 0) break;
    ++cell[i];
  }
  return true;
}

nlohmann::ordered_json SolveResult::to_json(const std::string& witness_file,
                                            bool with_timing) const {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["d"] = dim;
  j["max"] = max_count;
  j["optimal"] = optimal;
  j["nodes"] = nodes_explored;
  j["time_ms"] = with_timing ? time_ms : 0;  // 0 keeps default output byte-stable
  j["witness_file"] = witness_file;
  return j;
}

}  // namespace n3l
