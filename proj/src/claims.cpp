#include <n3l/claims.hpp>
#include <n3l/parallel.hpp>

#include <algorithm>
#include <numeric>
#include <set>

namespace n3l {

std::string claim_name(ClaimId id) {
  switch (id) {
    case ClaimId::kInvolution: return "involution";
    case ClaimId::kDecider: return "decider";
    case ClaimId::kBallnest: return "ballnest";
    case ClaimId::kAdmissible: return "admissible";
    case ClaimId::kCornerstone: return "cornerstone";
    case ClaimId::kGapShell: return "gapshell";
  }
  throw InternalError("unhandled claim id");
}

ClaimId claim_from_name(const std::string& name) {
  if (name == "involution") return ClaimId::kInvolution;
  if (name == "decider") return ClaimId::kDecider;
  if (name == "ballnest") return ClaimId::kBallnest;
  if (name == "admissible") return ClaimId::kAdmissible;
  if (name == "cornerstone") return ClaimId::kCornerstone;
  if (name == "gapshell") return ClaimId::kGapShell;
  throw DomainError("unknown claim '" + name + "'");
}

std::vector<std::vector<long>> ascending_tuples(long max_coord, int dim) {
  std::vector<std::vector<long>> out;
  if (dim < 1 || max_coord < dim) return out;
  std::vector<long> t(dim);
  std::iota(t.begin(), t.end(), 1L);
  while (true) {
    out.push_back(t);
    int i = dim - 1;
    while (i >= 0 && t[i] == max_coord - (dim - 1 - i)) --i;
    if (i < 0) break;
    ++t[i];
    for (int j = i + 1; j < dim; ++j) t[j] = t[j - 1] + 1;
  }
  return out;
}

namespace {

RatVec rat_vec_of(const std::vector<long>& t) {
  RatVec v(static_cast<Eigen::Index>(t.size()));
  for (std::size_t i = 0; i < t.size(); ++i) v[static_cast<Eigen::Index>(i)] = Rat(t[i]);
  return v;
}

Json vec_json(const RatVec& v) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(format_rational(v[i]));
  return a;
}

RatVec vec_from_json(const Json& a) {
  RatVec v(static_cast<Eigen::Index>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    v[static_cast<Eigen::Index>(i)] = parse_rational(a[i].get<std::string>());
  }
  return v;
}

std::string vec_str(const RatVec& v) {
  std::string s;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += format_rational(v[i]);
  }
  return s;
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

void validate_domain(const ClaimDomain& d, const std::string& required_kind) {
  if (d.dim < 2) throw DomainError("claim domain needs dim >= 2");
  if (d.max_coord < 1) throw DomainError("claim domain needs max_coord >= 1");
  if (d.kind != required_kind) {
    throw DomainError("claim requires coordinate kind '" + required_kind + "', domain has '" +
                      d.kind + "'");
  }
  Scale probe(d.scale);  // rejects nonpositive scales
}

// Sanity precondition run before every sweep that builds balls: the generator
// and its image sit exactly on the boundary of the induced ball.
void check_ball_sanity(const Ball& b, const CompressionVector& x, const Scale& sc) {
  if (!on_boundary(b, x.coords()) || !on_boundary(b, compress(x, sc))) {
    throw InternalError("generator or image off its own ball boundary");
  }
}

// Exact subset test for open balls (radii compared through their squares):
// B_in is contained in B_out iff dist(centers) + r_in <= r_out, evaluated by
// squaring once both sides are known nonnegative.
bool ball_subset(const Ball& inner, const Ball& outer) {
  if (inner.radius_sq > outer.radius_sq) return false;
  Rat d2 = Rat((inner.center - outer.center).squaredNorm());
  Rat slack = outer.radius_sq + inner.radius_sq - d2;
  if (slack < 0) return false;
  return slack * slack >= 4 * outer.radius_sq * inner.radius_sq;
}

struct ShardOut {
  std::vector<Counterexample> ces;
  long cases = 0;
  long skipped = 0;
};

ClaimReport merge_shards(ClaimId claim, ClaimDomain domain, std::vector<ShardOut>& shards) {
  ClaimReport rep;
  rep.claim = claim;
  rep.domain = std::move(domain);
  for (auto& s : shards) {
    rep.cases_checked += s.cases;
    rep.skipped += s.skipped;
    rep.counterexamples_total += static_cast<long>(s.ces.size());
    for (auto& ce : s.ces) {
      if (static_cast<long>(rep.counterexamples.size()) < kMaxCounterexamples) {
        rep.counterexamples.push_back(std::move(ce));
      }
    }
  }
  rep.truncated = rep.counterexamples_total > kMaxCounterexamples;
  return rep;
}

}  // namespace

ClaimReport check_involution(const ClaimDomain& domain, int threads) {
  validate_domain(domain, "distinct-naturals");
  Scale sc(domain.scale);
  auto tuples = ascending_tuples(domain.max_coord, domain.dim);
  std::vector<ShardOut> shards(shard_count(tuples.size(), threads));
  parallel_shards(tuples.size(), threads, [&](std::size_t s, std::size_t b, std::size_t e) {
    auto& out = shards[s];
    for (std::size_t i = b; i < e; ++i) {
      CompressionVector x(rat_vec_of(tuples[i]));
      ++out.cases;
      CompressionVector image(compress(x, sc));
      RatVec roundtrip = compress(image, sc);
      if (!vec_eq(roundtrip, x.coords())) {
        Counterexample ce;
        ce.witness["x"] = vec_json(x.coords());
        ce.witness["roundtrip"] = vec_json(roundtrip);
        ce.direction = "forward";
        ce.lhs = vec_str(roundtrip);
        ce.rhs = vec_str(x.coords());
        out.ces.push_back(std::move(ce));
      }
    }
  });
  return merge_shards(ClaimId::kInvolution, domain, shards);
}

ClaimReport check_decider(const ClaimDomain& domain, int threads) {
  validate_domain(domain, "distinct-naturals");
  Scale sc(domain.scale);
  auto tuples = ascending_tuples(domain.max_coord, domain.dim);
  std::vector<RatVec> vecs;
  std::vector<Rat> gaps;
  vecs.reserve(tuples.size());
  for (const auto& t : tuples) {
    CompressionVector x(rat_vec_of(t));
    vecs.push_back(x.coords());
    gaps.push_back(gap_squared(x, sc));
  }
  std::vector<ShardOut> shards(shard_count(vecs.size(), threads));
  parallel_shards(vecs.size(), threads, [&](std::size_t s, std::size_t b, std::size_t e) {
    auto& out = shards[s];
    for (std::size_t yi = b; yi < e; ++yi) {
      CompressionVector y(vecs[yi]);
      Ball by = ball_of(y, sc);
      check_ball_sanity(by, y, sc);
      for (std::size_t zi = 0; zi < vecs.size(); ++zi) {
        if (zi == yi) continue;
        ++out.cases;
        Rat dist_sq = Rat((vecs[zi] - by.center).squaredNorm());
        bool member = dist_sq < by.radius_sq;
        bool gap_lt = gaps[zi] < gaps[yi];
        if (member == gap_lt) continue;
        Counterexample ce;
        ce.witness["y"] = vec_json(vecs[yi]);
        ce.witness["z"] = vec_json(vecs[zi]);
        ce.witness["gap_sq_y"] = format_rational(gaps[yi]);
        ce.witness["gap_sq_z"] = format_rational(gaps[zi]);
        ce.witness["dist_sq"] = format_rational(dist_sq);
        ce.witness["radius_sq"] = format_rational(by.radius_sq);
        ce.direction = member ? "forward" : "backward";
        ce.lhs = bool_str(member);
        ce.rhs = bool_str(gap_lt);
        out.ces.push_back(std::move(ce));
      }
    }
  });
  return merge_shards(ClaimId::kDecider, domain, shards);
}

ClaimReport check_ballnest(const ClaimDomain& domain, int threads) {
  validate_domain(domain, "distinct-naturals");
  Scale sc(domain.scale);
  auto tuples = ascending_tuples(domain.max_coord, domain.dim);
  std::vector<RatVec> vecs;
  vecs.reserve(tuples.size());
  for (const auto& t : tuples) vecs.push_back(rat_vec_of(t));
  std::vector<ShardOut> shards(shard_count(vecs.size(), threads));
  parallel_shards(vecs.size(), threads, [&](std::size_t s, std::size_t b, std::size_t e) {
    auto& out = shards[s];
    for (std::size_t xi = b; xi < e; ++xi) {
      CompressionVector x(vecs[xi]);
      Ball bx = ball_of(x, sc);
      check_ball_sanity(bx, x, sc);
      for (std::size_t yi = 0; yi < vecs.size(); ++yi) {
        if (yi == xi || !ball_contains(bx, vecs[yi])) continue;
        ++out.cases;  // only containing pairs are cases for this claim
        CompressionVector y(vecs[yi]);
        Ball by = ball_of(y, sc);
        if (ball_subset(by, bx)) continue;
        Counterexample ce;
        ce.witness["x"] = vec_json(vecs[xi]);
        ce.witness["y"] = vec_json(vecs[yi]);
        ce.witness["center_x"] = vec_json(bx.center);
        ce.witness["center_y"] = vec_json(by.center);
        ce.witness["radius_sq_x"] = format_rational(bx.radius_sq);
        ce.witness["radius_sq_y"] = format_rational(by.radius_sq);
        ce.witness["dist_sq_centers"] = format_rational(Rat((by.center - bx.center).squaredNorm()));
        ce.direction = "forward";
        ce.lhs = bool_str(true);   // y is inside B(x)
        ce.rhs = bool_str(false);  // but B(y) is not a subset of B(x)
        out.ces.push_back(std::move(ce));
      }
    }
  });
  return merge_shards(ClaimId::kBallnest, domain, shards);
}

namespace {

// Ordered distinct d-tuples over the reciprocal closure {k, m/k : k <= K},
// lexicographic in the sorted closure.  Candidate family for the
// admissibility sweep.
std::vector<RatVec> closure_tuples(long max_coord, int dim, const Scale& sc) {
  std::set<Rat> closure;
  for (long k = 1; k <= max_coord; ++k) {
    Rat kk(k);
    closure.insert(kk);
    closure.insert(sc.m() / kk);
  }
  std::vector<Rat> base(closure.begin(), closure.end());
  std::vector<RatVec> out;
  const std::size_t n = base.size();
  if (n < static_cast<std::size_t>(dim)) return out;
  std::vector<std::size_t> idx(dim, 0);
  while (true) {
    bool distinct = true;
    for (int i = 0; i < dim && distinct; ++i) {
      for (int j = i + 1; j < dim; ++j) {
        if (idx[i] == idx[j]) {
          distinct = false;
          break;
        }
      }
    }
    if (distinct) {
      RatVec v(dim);
      for (int i = 0; i < dim; ++i) v[i] = base[idx[i]];
      out.push_back(std::move(v));
    }
    int i = dim - 1;
    while (i >= 0 && idx[i] + 1 == n) {
      idx[i] = 0;
      --i;
    }
    if (i < 0) break;
    ++idx[i];
  }
  return out;
}

}  // namespace

ClaimReport check_admissible_equiv(const ClaimDomain& domain, int threads) {
  validate_domain(domain, "rationals-from-grid");
  Scale sc(domain.scale);
  auto tuples = ascending_tuples(domain.max_coord, domain.dim);
  std::vector<RatVec> xs;
  xs.reserve(tuples.size());
  for (const auto& t : tuples) xs.push_back(rat_vec_of(t));
  std::vector<RatVec> ys = closure_tuples(domain.max_coord, domain.dim, sc);
  std::vector<ShardOut> shards(shard_count(xs.size(), threads));
  parallel_shards(xs.size(), threads, [&](std::size_t s, std::size_t b, std::size_t e) {
    auto& out = shards[s];
    for (std::size_t xi = b; xi < e; ++xi) {
      CompressionVector x(xs[xi]);
      Ball bx = ball_of(x, sc);
      check_ball_sanity(bx, x, sc);
      Rat gap_x = gap_squared(x, sc);
      for (const RatVec& yv : ys) {
        ++out.cases;
        bool boundary = on_boundary(bx, yv);
        CompressionVector y(yv);
        Ball by = ball_of(y, sc);
        bool equal = same_ball(by, bx) && gap_squared(y, sc) == gap_x;
        if (boundary == equal) continue;
        Counterexample ce;
        ce.witness["x"] = vec_json(xs[xi]);
        ce.witness["y"] = vec_json(yv);
        ce.direction = boundary ? "forward" : "backward";
        ce.lhs = bool_str(boundary);
        ce.rhs = bool_str(equal);
        out.ces.push_back(std::move(ce));
      }
    }
  });
  return merge_shards(ClaimId::kAdmissible, domain, shards);
}

namespace {

bool valid_compression_coords(const RatVec& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v[i] == 0) return false;
    for (Eigen::Index j = i + 1; j < v.size(); ++j) {
      if (v[i] == v[j]) return false;
    }
  }
  return true;
}

}  // namespace

ClaimReport check_cornerstone(const ClaimDomain& domain, const std::vector<Rat>& lambdas,
                              int threads) {
  validate_domain(domain, "distinct-naturals");
  Scale sc(domain.scale);
  auto tuples = ascending_tuples(domain.max_coord, domain.dim);
  std::vector<ShardOut> shards(shard_count(tuples.size(), threads));
  parallel_shards(tuples.size(), threads, [&](std::size_t s, std::size_t b, std::size_t e) {
    auto& out = shards[s];
    for (std::size_t xi = b; xi < e; ++xi) {
      CompressionVector x(rat_vec_of(tuples[xi]));
      Line line = line_of(x, sc);
      for (const Rat& lambda : lambdas) {
        RatVec a = line_point(line, lambda);
        if (!valid_compression_coords(a)) {
          ++out.skipped;
          continue;
        }
        ++out.cases;
        RatVec image = compress(CompressionVector(a), sc);
        if (line_contains(line, image)) continue;
        Counterexample ce;
        ce.witness["x"] = vec_json(x.coords());
        ce.witness["lambda"] = format_rational(lambda);
        ce.witness["a"] = vec_json(a);
        ce.witness["image"] = vec_json(image);
        ce.direction = "forward";
        ce.lhs = bool_str(true);   // a lies on the line by construction
        ce.rhs = bool_str(false);  // its image does not
        out.ces.push_back(std::move(ce));
      }
    }
  });
  return merge_shards(ClaimId::kCornerstone, domain, shards);
}

ClaimReport check_gap_shell(long n, int dim, const Scale& scale, int threads) {
  if (n < 2 || dim < 2) throw DomainError("gap-shell scan needs n >= 2, d >= 2");
  double size = std::pow(static_cast<double>(n), dim);
  if (size > 1e8) throw DomainError("gap-shell domain too large to scan exhaustively");
  const std::size_t total = static_cast<std::size_t>(size + 0.5);
  Int target_int(n);
  mpz_pow_ui(target_int.get_mpz_t(), target_int.get_mpz_t(), 2 * static_cast<unsigned>(dim));
  const Rat target(target_int);

  std::vector<std::size_t> pow(dim, 1);
  for (int i = dim - 2; i >= 0; --i) pow[i] = pow[i + 1] * static_cast<std::size_t>(n);

  std::vector<ShardOut> shards(shard_count(total, threads));
  std::vector<std::set<Rat>> values(shards.size());
  parallel_shards(total, threads, [&](std::size_t s, std::size_t b, std::size_t e) {
    auto& out = shards[s];
    auto& vals = values[s];
    std::vector<long> t(dim);
    for (std::size_t idx = b; idx < e; ++idx) {
      bool distinct = true;
      for (int i = 0; i < dim; ++i) {
        t[i] = static_cast<long>(idx / pow[i] % static_cast<std::size_t>(n)) + 1;
        for (int j = 0; j < i; ++j) {
          if (t[j] == t[i]) {
            distinct = false;
            break;
          }
        }
        if (!distinct) break;
      }
      if (!distinct) continue;
      ++out.cases;
      CompressionVector x(rat_vec_of(t));
      Rat g = gap_squared(x, scale);
      vals.insert(g);
      if (g != target) continue;
      Counterexample ce;
      ce.witness["x"] = vec_json(x.coords());
      ce.witness["gap_sq"] = format_rational(g);
      ce.direction = "forward";
      ce.lhs = format_rational(g);
      ce.rhs = format_rational(target);
      out.ces.push_back(std::move(ce));
    }
  });
  ClaimDomain dom;
  dom.dim = dim;
  dom.max_coord = n;
  dom.scale = scale.m();
  dom.kind = "grid-distinct";
  ClaimReport rep = merge_shards(ClaimId::kGapShell, std::move(dom), shards);

  std::set<Rat> all;
  for (auto& v : values) all.insert(v.begin(), v.end());
  auto it = all.lower_bound(target);
  for (auto walk = it; walk != all.begin() && rep.nearest_below.size() < 3;) {
    --walk;
    rep.nearest_below.push_back(format_rational(*walk));  // closest below first
  }
  for (auto walk = all.upper_bound(target); walk != all.end() && rep.nearest_above.size() < 3;
       ++walk) {
    rep.nearest_above.push_back(format_rational(*walk));  // closest above first
  }
  return rep;
}

Json ClaimReport::to_json() const {
  Json j;
  j["claim"] = claim_name(claim);
  Json dom;
  dom["dim"] = domain.dim;
  dom["max_coord"] = domain.max_coord;
  dom["scale"] = format_rational(domain.scale);
  dom["kind"] = domain.kind;
  j["domain"] = std::move(dom);
  j["cases_checked"] = cases_checked;
  j["verdict"] = refuted() ? "refuted" : "no-counterexample-found";
  Json ces = Json::array();
  for (const auto& ce : counterexamples) {
    Json c;
    c["witness"] = ce.witness;
    c["direction"] = ce.direction;
    c["lhs"] = ce.lhs;
    c["rhs"] = ce.rhs;
    ces.push_back(std::move(c));
  }
  j["counterexamples"] = std::move(ces);
  j["truncated"] = truncated;
  if (truncated) j["counterexamples_total"] = counterexamples_total;
  if (claim == ClaimId::kCornerstone) j["skipped"] = skipped;
  if (claim == ClaimId::kGapShell) {
    j["nearest_below"] = nearest_below;
    j["nearest_above"] = nearest_above;
  }
  return j;
}

bool recheck_counterexample(ClaimId claim, const Rat& scale, const Counterexample& ce) {
  Scale sc(scale);
  switch (claim) {
    case ClaimId::kInvolution: {
      CompressionVector x(vec_from_json(ce.witness.at("x")));
      RatVec roundtrip = compress(CompressionVector(compress(x, sc)), sc);
      return !vec_eq(roundtrip, x.coords()) && ce.lhs == vec_str(roundtrip) &&
             ce.rhs == vec_str(x.coords());
    }
    case ClaimId::kDecider: {
      CompressionVector y(vec_from_json(ce.witness.at("y")));
      RatVec z = vec_from_json(ce.witness.at("z"));
      Ball by = ball_of(y, sc);
      Rat dist_sq = Rat((z - by.center).squaredNorm());
      bool member = dist_sq < by.radius_sq;
      bool gap_lt = gap_squared(CompressionVector(z), sc) < gap_squared(y, sc);
      if (member == gap_lt) return false;
      if (ce.direction != (member ? "forward" : "backward")) return false;
      return ce.lhs == bool_str(member) && ce.rhs == bool_str(gap_lt) &&
             ce.witness.at("dist_sq") == format_rational(dist_sq) &&
             ce.witness.at("radius_sq") == format_rational(by.radius_sq) &&
             ce.witness.at("gap_sq_y") == format_rational(gap_squared(y, sc)) &&
             ce.witness.at("gap_sq_z") == format_rational(gap_squared(CompressionVector(z), sc));
    }
    case ClaimId::kBallnest: {
      CompressionVector x(vec_from_json(ce.witness.at("x")));
      CompressionVector y(vec_from_json(ce.witness.at("y")));
      Ball bx = ball_of(x, sc);
      Ball by = ball_of(y, sc);
      if (!ball_contains(bx, y.coords()) || ball_subset(by, bx)) return false;
      return ce.witness.at("radius_sq_x") == format_rational(bx.radius_sq) &&
             ce.witness.at("radius_sq_y") == format_rational(by.radius_sq) &&
             ce.witness.at("dist_sq_centers") ==
                 format_rational(Rat((by.center - bx.center).squaredNorm()));
    }
    case ClaimId::kAdmissible: {
      CompressionVector x(vec_from_json(ce.witness.at("x")));
      CompressionVector y(vec_from_json(ce.witness.at("y")));
      Ball bx = ball_of(x, sc);
      Ball by = ball_of(y, sc);
      bool boundary = on_boundary(bx, y.coords());
      bool equal = same_ball(by, bx) && gap_squared(y, sc) == gap_squared(x, sc);
      if (boundary == equal) return false;
      if (ce.direction != (boundary ? "forward" : "backward")) return false;
      return ce.lhs == bool_str(boundary) && ce.rhs == bool_str(equal);
    }
    case ClaimId::kCornerstone: {
      CompressionVector x(vec_from_json(ce.witness.at("x")));
      Rat lambda = parse_rational(ce.witness.at("lambda").get<std::string>());
      Line line = line_of(x, sc);
      RatVec a = line_point(line, lambda);
      if (!vec_eq(a, vec_from_json(ce.witness.at("a")))) return false;
      if (!valid_compression_coords(a)) return false;
      RatVec image = compress(CompressionVector(a), sc);
      if (!vec_eq(image, vec_from_json(ce.witness.at("image")))) return false;
      return !line_contains(line, image);
    }
    case ClaimId::kGapShell: {
      CompressionVector x(vec_from_json(ce.witness.at("x")));
      Rat g = gap_squared(x, sc);
      return format_rational(g) == ce.lhs && g == parse_rational(ce.rhs);
    }
  }
  throw InternalError("unhandled claim id");
}

}  // namespace n3l
