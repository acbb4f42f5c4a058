#include <n3l/collinear.hpp>
#include <n3l/parallel.hpp>

#include <map>
#include <numeric>
#include <optional>

namespace n3l {

bool collinear3(const IntVec& p, const IntVec& q, const IntVec& r) {
  if (p.size() != q.size() || p.size() != r.size() || p.size() < 2) {
    throw ContractViolation("collinearity test needs equal dimensions >= 2");
  }
  IntVec u = q - p;
  IntVec v = r - p;
  for (Eigen::Index i = 0; i + 1 < u.size(); ++i) {
    for (Eigen::Index j = i + 1; j < u.size(); ++j) {
      if (u[i] * v[j] != u[j] * v[i]) return false;
    }
  }
  return true;
}

bool collinear3(const RatVec& p, const RatVec& q, const RatVec& r) {
  if (p.size() != q.size() || p.size() != r.size() || p.size() < 2) {
    throw ContractViolation("collinearity test needs equal dimensions >= 2");
  }
  RatVec ur = q - p;
  RatVec vr = r - p;
  // Clear each difference vector to integers by its least common denominator;
  // scaling a vector by a positive rational does not change collinearity.
  IntVec u(ur.size()), v(vr.size());
  Int lu = 1, lv = 1;
  for (Eigen::Index i = 0; i < ur.size(); ++i) {
    mpz_lcm(lu.get_mpz_t(), lu.get_mpz_t(), ur[i].get_den_mpz_t());
    mpz_lcm(lv.get_mpz_t(), lv.get_mpz_t(), vr[i].get_den_mpz_t());
  }
  for (Eigen::Index i = 0; i < ur.size(); ++i) {
    u[i] = Int(ur[i].get_num() * (lu / ur[i].get_den()));
    v[i] = Int(vr[i].get_num() * (lv / vr[i].get_den()));
  }
  for (Eigen::Index i = 0; i + 1 < u.size(); ++i) {
    for (Eigen::Index j = i + 1; j < u.size(); ++j) {
      if (u[i] * v[j] != u[j] * v[i]) return false;
    }
  }
  return true;
}

IntVec primitive_direction(const IntVec& v) {
  Int g = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    Int a = abs(v[i]);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
  }
  if (g == 0) throw ContractViolation("direction of zero vector is undefined");
  IntVec d(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) d[i] = v[i] / g;
  for (Eigen::Index i = 0; i < d.size(); ++i) {
    if (d[i] != 0) {
      if (d[i] < 0) d = -d;
      break;
    }
  }
  return d;
}

std::vector<long> primitive_direction(const std::vector<long>& v) {
  long g = 0;
  for (long c : v) g = std::gcd(g, c);
  if (g == 0) throw ContractViolation("direction of zero vector is undefined");
  std::vector<long> d(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) d[i] = v[i] / g;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] != 0) {
      if (d[i] < 0) {
        for (auto& c : d) c = -c;
      }
      break;
    }
  }
  return d;
}

namespace {

struct LexLess {
  bool operator()(const IntVec& a, const IntVec& b) const { return lex_less(a, b); }
};

using Triple = std::array<std::size_t, 3>;

// Smallest collinear triple anchored at i, i.e. lex-min (j, k) with i < j < k
// and p_j, p_k on a common line through p_i.  Any two points whose offsets
// from p_i reduce to the same primitive direction are on such a line
// (sign normalisation folds opposite rays together).
std::optional<Triple> anchor_collision(const std::vector<IntVec>& pts, std::size_t i) {
  std::map<IntVec, std::pair<std::size_t, std::size_t>, LexLess> seen;
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  bool any = false;
  for (std::size_t j = i + 1; j < pts.size(); ++j) {
    IntVec dir = primitive_direction(IntVec(pts[j] - pts[i]));
    auto [it, fresh] = seen.try_emplace(std::move(dir), j, kNone);
    if (!fresh && it->second.second == kNone) {
      it->second.second = j;
      any = true;
    }
  }
  if (!any) return std::nullopt;
  Triple best{0, 0, 0};
  bool have = false;
  for (const auto& [dir, jk] : seen) {
    if (jk.second == kNone) continue;
    Triple t{i, jk.first, jk.second};
    if (!have || t < best) {
      best = t;
      have = true;
    }
  }
  return best;
}

}  // namespace

VerifyResult verify_no_three(const PointSet& s, int threads) {
  const auto& pts = s.points();
  VerifyResult res;
  if (pts.size() < 3) return res;
  const std::size_t anchors = pts.size() - 2;
  std::vector<std::optional<Triple>> found(shard_count(anchors, threads));
  parallel_shards(anchors, threads, [&](std::size_t shard, std::size_t begin, std::size_t end) {
    std::optional<Triple> best;
    for (std::size_t i = begin; i < end; ++i) {
      auto t = anchor_collision(pts, i);
      if (t) {
        best = t;
        break;  // later anchors in this shard only yield larger leading index
      }
    }
    found[shard] = best;
  });
  for (const auto& t : found) {
    if (t) {
      res.pass = false;
      res.witness = *t;
      return res;  // shards are ordered by anchor index, first hit is lex-min
    }
  }
  return res;
}

}  // namespace n3l
