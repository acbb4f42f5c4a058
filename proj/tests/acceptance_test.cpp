// Acceptance gate: eight end-to-end criteria, one PASS/FAIL line each.
// Every criterion re-derives its expectations from an independent oracle
// (raw rational arithmetic, subset enumeration, all-triples scans, byte
// comparison of CLI runs); tolerances are pinned as named constants.
#include <n3l/bounds.hpp>
#include <n3l/claims.hpp>
#include <n3l/collinear.hpp>
#include <n3l/constructions.hpp>
#include <n3l/solver.hpp>

#include <array>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

using namespace n3l;

namespace {

constexpr int kIdentitySamples = 1000;     // criterion 1
constexpr long kEnvelopeMaxCoord = 30;     // criterion 2
constexpr long kHarmonicMaxN = 10000;      // criterion 3
constexpr int kConstructionRuns = 200;     // criterion 5
constexpr int kOracleRuns = 200;           // criterion 5
constexpr double kBoundTol2d = 1e-4;       // criterion 7, paper_bound(10,2)
constexpr double kBoundTol3d = 1e-3;       // criterion 7, paper_bound(10,3)
constexpr long double kEulerGamma = 0.5772156649015328606L;

std::string g_detail;  // failure reason of the criterion that just ran

bool fail(const std::string& why) {
  g_detail = why;
  return false;
}

// --- criterion 1: exact identity + involution ----------------------------

bool criterion_identities() {
  std::mt19937_64 rng(20260823);
  const Rat scales[3] = {Rat(1, 2), Rat(1), Rat(2)};
  for (int it = 0; it < kIdentitySamples; ++it) {
    int d = 2 + static_cast<int>(rng() % 5);  // d in {2..6}
    std::vector<long> coords;
    while (static_cast<int>(coords.size()) < d) {
      long c = static_cast<long>(rng() % 101) - 50;
      if (c == 0) continue;
      bool dup = false;
      for (long e : coords) dup = dup || e == c;
      if (!dup) coords.push_back(c);
    }
    const Rat& m = scales[it % 3];
    // Oracle: both gap evaluations from raw rationals, no library calls.
    Rat direct = 0, sum_sq = 0, sum_inv_sq = 0;
    for (long c : coords) {
      Rat x(c), mx = m / x, diff = x - mx;
      direct += diff * diff;
      sum_sq += x * x;
      sum_inv_sq += Rat(1) / (x * x);
    }
    Rat expanded = sum_sq + m * m * sum_inv_sq - Rat(2 * d) * m;
    if (direct != expanded) return fail("raw identity mismatch");

    CompressionVector v = CompressionVector::from_longs(coords);
    Scale s{m};
    if (gap_squared(v, s) != direct) return fail("gap_squared disagrees with raw value");
    CompressionVector image{compress(v, s)};
    if (!vec_eq(compress(image, s), v.coords())) return fail("involution broken");
  }
  return true;
}

// --- criterion 2: mass/gap envelopes over the full small domain ----------

bool criterion_envelopes() {
  Scale one{Rat(1)};
  long checked = 0;
  for (int d = 2; d <= 4; ++d) {
    std::vector<long> tuple(d);
    std::vector<bool> used(kEnvelopeMaxCoord + 1, false);
    std::function<bool(int)> rec = [&](int pos) -> bool {
      if (pos == d) {
        CompressionVector v = CompressionVector::from_longs(tuple);
        auto mb = mass_bounds(v, one);
        Rat mv = mass(v, one);
        if (mv < mb.first || mb.second < mv) return false;
        auto gb = gap_sq_bounds(v, one);
        Rat gv = gap_squared(v, one);
        if (gv < gb.first || gb.second < gv) return false;
        ++checked;
        return true;
      }
      for (long c = 1; c <= kEnvelopeMaxCoord; ++c) {
        if (used[c]) continue;
        used[c] = true;
        tuple[pos] = c;
        bool ok = rec(pos + 1);
        used[c] = false;
        if (!ok) return false;
      }
      return true;
    };
    if (!rec(0)) return fail("envelope violated at d=" + std::to_string(d));
  }
  if (checked != 870 + 24360 + 657720) return fail("enumeration miscounted");
  return true;
}

// --- criterion 3: harmonic estimate ---------------------------------------

bool criterion_harmonic() {
  long double h = 0.0L;
  for (long n = 1; n <= kHarmonicMaxN; ++n) {
    h += 1.0L / static_cast<long double>(n);
    long double err = fabsl(h - logl(static_cast<long double>(n)) - kEulerGamma);
    if (!(err < 1.0L / static_cast<long double>(n)))
      return fail("estimate exceeds 1/N at N=" + std::to_string(n));
  }
  // Exact spot checks tie the float sweep back to the rational library.
  if (harmonic_sum(10) != Rat(7381, 2520)) return fail("H(10) wrong");
  Rat h100 = 0;
  for (long n = 1; n <= 100; ++n) h100 += Rat(1, n);
  if (harmonic_sum(100) != h100) return fail("H(100) wrong");
  for (long n : {1L, 10L, 100L, 1000L, 10000L}) {
    if (!(harmonic_estimate_error(n) < 1.0 / static_cast<double>(n)))
      return fail("harmonic_estimate_error too large at N=" + std::to_string(n));
  }
  return true;
}

// --- criterion 4: solver vs naive subset enumeration ----------------------

long naive_max_2d(long n) {
  std::vector<std::array<long, 2>> cells;
  for (long x = 1; x <= n; ++x)
    for (long y = 1; y <= n; ++y) cells.push_back({x, y});
  const std::size_t total = cells.size();
  std::vector<std::uint32_t> triples;
  for (std::size_t i = 0; i < total; ++i)
    for (std::size_t j = i + 1; j < total; ++j)
      for (std::size_t k = j + 1; k < total; ++k) {
        long cross = (cells[j][0] - cells[i][0]) * (cells[k][1] - cells[i][1]) -
                     (cells[j][1] - cells[i][1]) * (cells[k][0] - cells[i][0]);
        if (cross == 0) triples.push_back((1u << i) | (1u << j) | (1u << k));
      }
  long best = 0;
  for (std::uint32_t mask = 0; mask < (1u << total); ++mask) {
    bool ok = true;
    for (std::uint32_t t : triples)
      if ((mask & t) == t) {
        ok = false;
        break;
      }
    if (ok) best = std::max(best, static_cast<long>(std::popcount(mask)));
  }
  return best;
}

bool criterion_solver() {
  for (long n = 2; n <= 5; ++n) {
    SolveResult r = exact_max(n, 2);
    if (!r.optimal || r.max_count != 2 * n)
      return fail("exact_max(" + std::to_string(n) + ",2) != 2n");
    if (!verify_no_three(r.witness).pass) return fail("solver witness has a collinear triple");
  }
  for (long n = 2; n <= 4; ++n) {
    if (exact_max(n, 2).max_count != naive_max_2d(n))
      return fail("naive enumeration disagrees at n=" + std::to_string(n));
  }
  return true;
}

// --- criterion 5: construction soundness + verifier oracle ----------------

VerifyResult oracle_verify(const PointSet& s) {
  VerifyResult r;
  const auto& p = s.points();
  for (std::size_t i = 0; i + 2 < p.size(); ++i)
    for (std::size_t j = i + 1; j + 1 < p.size(); ++j)
      for (std::size_t k = j + 1; k < p.size(); ++k)
        if (collinear3(p[i], p[j], p[k])) {
          r.pass = false;
          r.witness = {i, j, k};
          return r;
        }
  return r;
}

bool criterion_constructions() {
  std::mt19937_64 rng(5);
  const long primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41,
                         43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101};
  for (int it = 0; it < kConstructionRuns; ++it) {
    PointSet points = [&]() -> PointSet {
      switch (it % 3) {
        case 0: {
          int d = 2 + static_cast<int>(rng() % 2);
          long n = (d == 2) ? 2 + static_cast<long>(rng() % 31)
                            : 2 + static_cast<long>(rng() % 11);
          return best_sphere(n, d, SphereStrategy::kCenterScan).points;
        }
        case 1: {
          int d = 2 + static_cast<int>(rng() % 2);
          long n = (d == 2) ? 2 + static_cast<long>(rng() % 31)
                            : 2 + static_cast<long>(rng() % 7);
          return greedy(n, d, rng()).points;
        }
        default:
          return erdos_parabola(static_cast<std::uint64_t>(primes[rng() % 26]));
      }
    }();
    int threads = 1 + static_cast<int>(rng() % 4);
    if (!verify_no_three(points, threads).pass)
      return fail("construction output fails verification at run " + std::to_string(it));
  }

  for (int it = 0; it < kOracleRuns; ++it) {
    int d = 2 + static_cast<int>(rng() % 2);
    long side = (d == 2) ? 7 + static_cast<long>(rng() % 8) : 4 + static_cast<long>(rng() % 5);
    std::size_t k = 3 + rng() % 38;  // at most 40 points
    std::vector<IntVec> pts;
    while (pts.size() < k) {
      IntVec p(d);
      for (int i = 0; i < d; ++i) p[i] = static_cast<long>(rng() % side) + 1;
      bool dup = false;
      for (const auto& q : pts) dup = dup || vec_eq(q, p);
      if (!dup) pts.push_back(p);
    }
    PointSet s(d, Box::unit_grid(side, d), pts);
    VerifyResult expect = oracle_verify(s);
    VerifyResult got = verify_no_three(s, 1 + static_cast<int>(rng() % 4));
    if (got.pass != expect.pass) return fail("verifier verdict disagrees with all-triples oracle");
    if (!expect.pass && got.witness != expect.witness)
      return fail("verifier witness disagrees with all-triples oracle");
  }
  return true;
}

// --- criterion 6: claim falsification at desk scale -----------------------

bool criterion_claims() {
  ClaimDomain dom;
  dom.dim = 2;
  dom.max_coord = 8;
  dom.scale = Rat(1);
  ClaimReport decider = check_decider(dom);
  if (!decider.refuted()) return fail("decider not refuted at K=8");
  bool found = false;
  for (const auto& ce : decider.counterexamples) {
    if (ce.witness["y"] != Json::array({"1", "8"}) ||
        ce.witness["z"] != Json::array({"4", "7"}))
      continue;
    found = true;
    Rat gy = parse_rational(ce.witness["gap_sq_y"].get<std::string>());
    Rat gz = parse_rational(ce.witness["gap_sq_z"].get<std::string>());
    Rat dist = parse_rational(ce.witness["dist_sq"].get<std::string>());
    Rat rad = parse_rational(ce.witness["radius_sq"].get<std::string>());
    if (gz != Rat(47889, 784) || gy != Rat(3969, 64)) return fail("witness gaps wrong");
    if (!(gz < gy)) return fail("witness does not have the smaller gap");
    if (dist != Rat(4513, 256) || rad != Rat(3969, 256)) return fail("witness distances wrong");
    if (!(dist > rad)) return fail("witness is not outside the ball");
    if (!recheck_counterexample(ClaimId::kDecider, Rat(1), ce))
      return fail("witness fails self-verification");
  }
  if (!found) return fail("documented decider witness missing");

  ClaimDomain corner;
  corner.dim = 2;
  corner.max_coord = 3;
  corner.scale = Rat(1);
  ClaimReport cs = check_cornerstone(corner, {Rat(1)});
  bool corner_found = false;
  for (const auto& ce : cs.counterexamples) {
    corner_found = corner_found || (ce.witness["x"] == Json::array({"2", "3"}) &&
                                    ce.witness["lambda"] == "1");
  }
  if (!corner_found) return fail("cornerstone witness x=(2,3), lambda=1 missing");

  for (int d = 2; d <= 3; ++d) {
    for (long n = 2; n <= 12; ++n) {
      ClaimReport shell = check_gap_shell(n, d, Scale{Rat(1)});
      if (shell.refuted() || !shell.counterexamples.empty())
        return fail("gap shell unexpectedly hit at n=" + std::to_string(n) +
                    ", d=" + std::to_string(d));
    }
  }
  return true;
}

// --- criterion 7: bound consistency ---------------------------------------

bool criterion_bounds() {
  auto rows = compare_table(2, 5, 2, {BoundsSource::kExact});
  for (const auto& row : rows) {
    if (!row.ratio || !(*row.ratio >= 1.0))
      return fail("exact/bound ratio below 1 at n=" + std::to_string(row.n));
  }
  if (std::fabs(paper_bound(10, 2) - 11.89207) >= kBoundTol2d)
    return fail("paper_bound(10,2) off target");
  if (std::fabs(paper_bound(10, 3) - 120.0937) >= kBoundTol3d)
    return fail("paper_bound(10,3) off target");
  return true;
}

// --- criterion 8: byte-identical CLI output -------------------------------

std::string run_cli(const std::string& bin, const std::string& args, int* rc) {
  std::string cmd = bin + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    *rc = -1;
    return "";
  }
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  int status = pclose(pipe);
  *rc = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

bool criterion_determinism() {
  const char* bin = std::getenv("N3L_BIN");
  if (!bin) return fail("N3L_BIN not set");
  const std::string commands[] = {
      "solve --n 4 --d 2",
      "solve --n 3 --d 3",
      "claims --claim decider --max-coord 8 --d 2",
      "claims --claim ballnest --max-coord 8 --d 2",
      "claims --claim gapshell --n 10 --d 2",
      "construct --method greedy --n 8 --d 2 --seed 3",
      "construct --method sphere --n 10 --d 2",
  };
  for (const std::string& base : commands) {
    std::string reference;
    for (int threads : {1, 4}) {
      for (int repeat = 0; repeat < 2; ++repeat) {
        // The thread count reaches every run: flagged subcommands take
        // --threads, the single-threaded ones see N3L_THREADS.
        std::string cmd = "env N3L_THREADS=" + std::to_string(threads) + " " +
                          std::string(bin) + " " + base;
        bool flagged = base.rfind("solve", 0) == 0 || base.rfind("claims", 0) == 0;
        if (flagged) cmd += " --threads " + std::to_string(threads);
        int rc = -1;
        std::string out = run_cli("", cmd, &rc);
        if (rc != 0) return fail("CLI run failed: " + base);
        if (reference.empty())
          reference = out;
        else if (out != reference)
          return fail("stdout differs across runs for: " + base);
      }
    }
  }
  return true;
}

}  // namespace

int main() {
  struct Entry {
    const char* label;
    bool (*fn)();
  };
  const Entry entries[] = {
      {"exact gap identity and involution on 1000 random vectors", criterion_identities},
      {"mass/gap envelopes on all distinct tuples with coordinates <= 30", criterion_envelopes},
      {"harmonic estimate |H(N) - ln N - gamma| < 1/N up to N = 10^4", criterion_harmonic},
      {"exact solver reaches 2n and matches naive subset enumeration", criterion_solver},
      {"200 constructions verify; verifier matches the all-triples oracle", criterion_constructions},
      {"decider/cornerstone refuted with documented witnesses; gap shell empty", criterion_claims},
      {"exact/bound ratios stay >= 1; bound values at pinned tolerances", criterion_bounds},
      {"byte-identical CLI output across runs and threads {1,4}", criterion_determinism},
  };
  int failures = 0;
  for (int i = 0; i < 8; ++i) {
    g_detail.clear();
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = entries[i].fn();
    } catch (const std::exception& e) {
      g_detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    char line[256];
    if (ok) {
      std::snprintf(line, sizeof line, "criterion %d: PASS  %s (%.2f s)", i + 1,
                    entries[i].label, secs);
    } else {
      std::snprintf(line, sizeof line, "criterion %d: FAIL  %s — %s (%.2f s)", i + 1,
                    entries[i].label, g_detail.c_str(), secs);
      ++failures;
    }
    std::cout << line << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
