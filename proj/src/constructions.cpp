#include <n3l/constructions.hpp>
#include <n3l/bounds.hpp>

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace n3l {

SphereSpec make_sphere_spec(const RatVec& center, const Rat& radius_sq, const Box& box) {
  if (center.size() != box.lo.size()) throw DomainError("sphere center dimension mismatch");
  if (center.size() < 2) throw DomainError("sphere needs dimension >= 2");
  for (Eigen::Index i = 0; i < center.size(); ++i) {
    const Int& den = center[i].get_den();
    if (den != 1 && den != 2) {
      throw DomainError("sphere center coordinates must be half-integers, got " +
                        format_rational(center[i]));
    }
  }
  if (radius_sq < 0) throw DomainError("sphere needs a nonnegative squared radius");
  const Int& rden = radius_sq.get_den();
  if (rden != 1 && rden != 2 && rden != 4) {
    throw DomainError("squared radius must have denominator 1, 2 or 4, got " +
                      format_rational(radius_sq));
  }
  return SphereSpec{center, radius_sq, box};
}

namespace {

Int ceil_div2(const Int& a) {
  Int q;
  mpz_cdiv_q_ui(q.get_mpz_t(), a.get_mpz_t(), 2);
  return q;
}

Int floor_div2(const Int& a) {
  Int q;
  mpz_fdiv_q_ui(q.get_mpz_t(), a.get_mpz_t(), 2);
  return q;
}

// Lattice points at exact squared distance r4/4 from c2/2 inside the box,
// collected in lexicographic order.  depth indexes the coordinate being
// chosen; rem is 4*(squared radius left for the remaining coordinates).
void descend(const SphereSpec& spec, const IntVec& c2, const Int& rem, int depth, IntVec& partial,
             std::vector<IntVec>& out) {
  const int d = spec.dim();
  Int root;
  mpz_sqrt(root.get_mpz_t(), rem.get_mpz_t());
  if (depth == d - 1) {
    if (root * root != rem) return;  // no exact representation in the last slot
    // 2z - c2 = ±root, z integral.
    for (int sign = -1; sign <= 1; sign += 2) {
      Int num = c2[depth] + sign * root;
      if (mpz_odd_p(num.get_mpz_t())) continue;
      Int z = num / 2;
      if (z < spec.box.lo[depth] || z > spec.box.hi[depth]) continue;
      partial[depth] = z;
      out.push_back(partial);
      if (root == 0) break;  // ± coincide
    }
    return;
  }
  // (2z - c2)^2 <= rem bounds z to [ceil((c2-root)/2), floor((c2+root)/2)].
  Int lo = ceil_div2(Int(c2[depth] - root));
  Int hi = floor_div2(Int(c2[depth] + root));
  if (lo < spec.box.lo[depth]) lo = spec.box.lo[depth];
  if (hi > spec.box.hi[depth]) hi = spec.box.hi[depth];
  for (Int z = lo; z <= hi; ++z) {
    Int side = 2 * z - c2[depth];
    partial[depth] = z;
    descend(spec, c2, Int(rem - side * side), depth + 1, partial, out);
  }
}

}  // namespace

PointSet sphere_section(const SphereSpec& spec) {
  const int d = spec.dim();
  IntVec c2(d);
  for (int i = 0; i < d; ++i) {
    Rat doubled = spec.center[i] * 2;
    c2[i] = doubled.get_num();  // integral by the half-integer invariant
  }
  Rat r4q = spec.radius_sq * 4;
  Int r4 = r4q.get_num();
  IntVec partial(d);
  std::vector<IntVec> out;
  descend(spec, c2, r4, 0, partial, out);
  return PointSet(d, spec.box, std::move(out));
}

PointSet erdos_parabola(std::uint64_t p) {
  if (!is_prime_u64(p)) throw DomainError("parabola construction needs a prime modulus");
  std::vector<IntVec> pts;
  pts.reserve(p);
  for (std::uint64_t x = 0; x < p; ++x) {
    unsigned __int128 sq = static_cast<unsigned __int128>(x) * x;
    std::uint64_t y = static_cast<std::uint64_t>(sq % p);
    IntVec v(2);
    v[0] = Int(static_cast<unsigned long>(x + 1));
    v[1] = Int(static_cast<unsigned long>(y + 1));
    pts.push_back(std::move(v));
  }
  return PointSet(2, Box::unit_grid(static_cast<long>(p), 2), std::move(pts));
}

Json ConstructionReport::to_json(const std::string& points_file) const {
  if (!verified) {
    throw ContractViolation("construction report must be verified before serialization");
  }
  Json j;
  j["method"] = method;
  j["params"] = params;
  j["count"] = static_cast<long>(points.size());
  j["bound"] = bound_value;
  j["ratio"] = ratio;
  j["points_file"] = points_file;
  return j;
}

namespace {

Json center_json(const RatVec& c) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < c.size(); ++i) a.push_back(format_rational(c[i]));
  return a;
}

}  // namespace

ConstructionReport make_report(std::string method, Json params, PointSet points, long n, int dim) {
  ConstructionReport rep{std::move(method), std::move(params), std::move(points), false, 0.0, 0.0};
  if (!verify_no_three(rep.points).pass) {
    throw InternalError("construction produced a collinear triple");
  }
  rep.verified = true;
  rep.bound_value = paper_bound(n, dim);
  rep.ratio = static_cast<double>(rep.points.size()) / rep.bound_value;
  return rep;
}

ConstructionReport best_sphere(long n, int dim, SphereStrategy strategy,
                               const std::optional<RatVec>& center,
                               const std::optional<Rat>& radius_sq) {
  if (n < 2 || dim < 2) throw DomainError("sphere scan needs n >= 2, d >= 2");
  Box box = Box::unit_grid(n, dim);

  std::vector<RatVec> centers;
  if (strategy == SphereStrategy::kFixedCenter) {
    if (!center) throw DomainError("fixed-center strategy needs a center");
    centers.push_back(*center);
  } else {
    // Grid midpoint and all half-step perturbations, in lexicographic order.
    Rat mid(Int(n + 1), Int(2));
    mid.canonicalize();
    std::vector<int> off(dim, -1);
    while (true) {
      RatVec c(dim);
      for (int i = 0; i < dim; ++i) {
        Rat o(off[i], 2);
        o.canonicalize();
        c[i] = mid + o;
      }
      centers.push_back(std::move(c));
      int i = dim - 1;
      while (i >= 0 && off[i] == 1) {
        off[i] = -1;
        --i;
      }
      if (i < 0) break;
      ++off[i];
    }
  }

  struct Best {
    long count = -1;
    Int r4;
    RatVec center;
  } best;
  for (const RatVec& c : centers) {
    SphereSpec probe = make_sphere_spec(c, Rat(0), box);  // validates the center
    IntVec c2(dim);
    for (int i = 0; i < dim; ++i) c2[i] = Rat(c[i] * 2).get_num();
    std::map<Int, long> sections;  // 4*dist^2 -> lattice point count
    if (radius_sq) {
      sections[Rat(*radius_sq * 4).get_num()] = 0;
    }
    std::vector<long> odo(dim, 1);
    while (true) {
      Int d4 = 0;
      for (int i = 0; i < dim; ++i) {
        Int side = 2 * Int(odo[i]) - c2[i];
        d4 += side * side;
      }
      if (radius_sq) {
        auto it = sections.find(d4);
        if (it != sections.end()) ++it->second;
      } else {
        ++sections[d4];
      }
      int i = dim - 1;
      while (i >= 0 && odo[i] == n) {
        odo[i] = 1;
        --i;
      }
      if (i < 0) break;
      ++odo[i];
    }
    for (const auto& [r4, cnt] : sections) {
      // Centers are visited in lexicographic order and radii ascending, so a
      // strict improvement test implements the documented tie-break.
      if (cnt > best.count || (cnt == best.count && r4 < best.r4)) {
        best = Best{cnt, r4, probe.center};
      }
    }
  }

  Rat chosen_r2(best.r4, Int(4));
  chosen_r2.canonicalize();
  SphereSpec spec = make_sphere_spec(best.center, chosen_r2, box);
  PointSet pts = sphere_section(spec);
  if (static_cast<long>(pts.size()) != best.count) {
    throw InternalError("sphere section disagrees with the scan count");
  }
  Json params;
  params["n"] = n;
  params["d"] = dim;
  params["strategy"] = strategy == SphereStrategy::kCenterScan ? "center-scan" : "fixed-center";
  params["center"] = center_json(spec.center);
  params["radius_sq"] = format_rational(spec.radius_sq);
  return make_report("sphere", std::move(params), std::move(pts), n, dim);
}

ConstructionReport greedy(long n, int dim, std::uint64_t seed) {
  if (n < 2 || dim < 2) throw DomainError("greedy fill needs n >= 2, d >= 2");
  std::vector<std::vector<long>> cells;
  std::vector<long> odo(dim, 1);
  while (true) {
    cells.push_back(odo);
    int i = dim - 1;
    while (i >= 0 && odo[i] == n) {
      odo[i] = 1;
      --i;
    }
    if (i < 0) break;
    ++odo[i];
  }
  if (seed != 0) {
    // Fisher-Yates with an explicit generator so the permutation is identical
    // across standard libraries.
    std::mt19937_64 rng(seed);
    for (std::size_t i = cells.size() - 1; i > 0; --i) {
      std::size_t j = static_cast<std::size_t>(rng() % (i + 1));
      std::swap(cells[i], cells[j]);
    }
  }

  std::vector<std::vector<long>> chosen;
  std::vector<std::set<std::vector<long>>> dirs;  // per chosen point
  std::vector<long> diff(dim);
  for (const auto& c : cells) {
    bool ok = true;
    for (std::size_t i = 0; i < chosen.size(); ++i) {
      for (int k = 0; k < dim; ++k) diff[k] = c[k] - chosen[i][k];
      if (dirs[i].count(primitive_direction(diff))) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    std::set<std::vector<long>> own;
    for (std::size_t i = 0; i < chosen.size(); ++i) {
      for (int k = 0; k < dim; ++k) diff[k] = c[k] - chosen[i][k];
      auto dv = primitive_direction(diff);
      dirs[i].insert(dv);
      own.insert(std::move(dv));
    }
    chosen.push_back(c);
    dirs.push_back(std::move(own));
  }

  std::vector<IntVec> pts;
  pts.reserve(chosen.size());
  for (const auto& c : chosen) {
    IntVec v(dim);
    for (int i = 0; i < dim; ++i) v[i] = Int(c[i]);
    pts.push_back(std::move(v));
  }
  PointSet set(dim, Box::unit_grid(n, dim), std::move(pts));
  Json params;
  params["n"] = n;
  params["d"] = dim;
  params["seed"] = seed;
  return make_report("greedy", std::move(params), std::move(set), n, dim);
}

}  // namespace n3l
