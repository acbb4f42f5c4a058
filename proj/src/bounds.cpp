#include <n3l/bounds.hpp>
#include <n3l/constructions.hpp>
#include <n3l/solver.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace n3l {

namespace {

// pi / sqrt(3), the conjectured optimal-density constant for the planar
// problem; reported at full double precision rather than the rounded 1.814.
const double kConjectureConstant = 3.14159265358979323846 / std::sqrt(3.0);

constexpr char kCsvHeader[] = "n,d,paper_bound,erdos_ref,hall_ref,conjecture_ref,best,source,ratio";

std::string fmt6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::uint64_t next_prime_at_least(std::uint64_t n) {
  if (n < 2) return 2;
  for (std::uint64_t p = n;; ++p) {
    if (is_prime_u64(p)) return p;
  }
}

}  // namespace

double paper_bound(long n, int dim) {
  if (n < 1 || dim < 2) throw DomainError("bound needs n >= 1, d >= 2");
  return std::pow(static_cast<double>(n), dim - 1) *
         std::pow(static_cast<double>(dim), 1.0 / (2.0 * dim));
}

BoundsRow reference_row(long n, int dim) {
  BoundsRow row;
  row.n = n;
  row.dim = dim;
  row.paper_bound = paper_bound(n, dim);
  row.erdos_ref = static_cast<double>(n);
  if (dim == 2) {
    row.hall_ref = 1.5 * static_cast<double>(n);
    row.conjecture_ref = kConjectureConstant * static_cast<double>(n);
  }
  row.theta_n2_ref = (dim == 3);
  return row;
}

BoundsSource bounds_source_from_name(const std::string& name) {
  if (name == "exact") return BoundsSource::kExact;
  if (name == "sphere") return BoundsSource::kSphere;
  if (name == "erdos") return BoundsSource::kErdos;
  if (name == "greedy") return BoundsSource::kGreedy;
  throw DomainError("unknown bounds source '" + name + "'");
}

std::string bounds_source_name(BoundsSource s) {
  switch (s) {
    case BoundsSource::kExact: return "exact";
    case BoundsSource::kSphere: return "sphere";
    case BoundsSource::kErdos: return "erdos";
    case BoundsSource::kGreedy: return "greedy";
  }
  throw InternalError("unhandled bounds source");
}

bool exact_solver_in_limits(long n, int dim) {
  if (n < 1 || dim < 2 || dim > 8) return false;
  if (dim == 2) return n <= 10;
  if (dim == 3) return n <= 3;
  return n <= 2;
}

std::vector<BoundsRow> compare_table(long n_from, long n_to, int dim,
                                     const std::vector<BoundsSource>& sources) {
  if (n_from < 1 || n_to < n_from) throw DomainError("bad n range for the bounds table");
  if (dim < 2) throw DomainError("bounds table needs d >= 2");
  auto wants = [&](BoundsSource s) {
    return std::find(sources.begin(), sources.end(), s) != sources.end();
  };
  std::vector<BoundsRow> rows;
  for (long n = n_from; n <= n_to; ++n) {
    BoundsRow row = reference_row(n, dim);
    if (wants(BoundsSource::kExact) && exact_solver_in_limits(n, dim)) {
      row.best = exact_max(n, dim).max_count;
      row.source = "exact";
    } else {
      long best = -1;
      if (wants(BoundsSource::kSphere) && n >= 2) {
        best = std::max(best,
                        static_cast<long>(best_sphere(n, dim, SphereStrategy::kCenterScan).points.size()));
      }
      if (wants(BoundsSource::kErdos) && dim == 2) {
        std::uint64_t p = next_prime_at_least(static_cast<std::uint64_t>(n));
        PointSet parabola = erdos_parabola(p);
        long clipped = 0;  // keep only the points that fit the n x n grid
        for (const auto& pt : parabola.points()) {
          if (pt[0] <= n && pt[1] <= n) ++clipped;
        }
        best = std::max(best, clipped);
      }
      if (wants(BoundsSource::kGreedy) && n >= 2) {
        best = std::max(best, static_cast<long>(greedy(n, dim, 0).points.size()));
      }
      if (best >= 0) {
        row.best = best;
        row.source = "construction";
      }
    }
    if (row.best) row.ratio = static_cast<double>(*row.best) / row.paper_bound;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string to_csv(const std::vector<BoundsRow>& rows) {
  std::string out = kCsvHeader;
  out += '\n';
  for (const auto& r : rows) {
    out += std::to_string(r.n);
    out += ',';
    out += std::to_string(r.dim);
    out += ',';
    out += fmt6(r.paper_bound);
    out += ',';
    out += fmt6(r.erdos_ref);
    out += ',';
    if (r.hall_ref) out += fmt6(*r.hall_ref);
    out += ',';
    if (r.conjecture_ref) out += fmt6(*r.conjecture_ref);
    out += ',';
    if (r.best) out += std::to_string(*r.best);
    out += ',';
    out += r.source;
    out += ',';
    if (r.ratio) out += fmt6(*r.ratio);
    out += '\n';
  }
  return out;
}

std::vector<BoundsRow> parse_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) {
    throw IoError("bounds CSV must start with the canonical header");
  }
  std::vector<BoundsRow> rows;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::string cur;
    for (char c : line) {
      if (c == ',') {
        f.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    f.push_back(cur);
    if (f.size() != 9) {
      throw IoError("line " + std::to_string(lineno) + ": expected 9 CSV fields, got " +
                    std::to_string(f.size()));
    }
    try {
      BoundsRow row;
      row.n = std::stol(f[0]);
      row.dim = std::stoi(f[1]);
      row.paper_bound = std::stod(f[2]);
      row.erdos_ref = std::stod(f[3]);
      if (!f[4].empty()) row.hall_ref = std::stod(f[4]);
      if (!f[5].empty()) row.conjecture_ref = std::stod(f[5]);
      row.theta_n2_ref = (row.dim == 3);
      if (!f[6].empty()) row.best = std::stol(f[6]);
      row.source = f[7];
      if (!f[8].empty()) row.ratio = std::stod(f[8]);
      rows.push_back(std::move(row));
    } catch (const std::logic_error&) {
      throw IoError("line " + std::to_string(lineno) + ": malformed CSV field");
    }
  }
  return rows;
}

nlohmann::ordered_json BoundsRow::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["d"] = dim;
  j["paper_bound"] = paper_bound;
  j["erdos_ref"] = erdos_ref;
  j["hall_ref"] = hall_ref ? nlohmann::ordered_json(*hall_ref) : nlohmann::ordered_json(nullptr);
  j["conjecture_ref"] =
      conjecture_ref ? nlohmann::ordered_json(*conjecture_ref) : nlohmann::ordered_json(nullptr);
  j["theta_n2_ref"] = theta_n2_ref;
  j["best"] = best ? nlohmann::ordered_json(*best) : nlohmann::ordered_json(nullptr);
  j["source"] = source;
  j["ratio"] = ratio ? nlohmann::ordered_json(*ratio) : nlohmann::ordered_json(nullptr);
  return j;
}

}  // namespace n3l
