#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <n3l/collinear.hpp>
#include <n3l/point.hpp>

#include <random>
#include <sstream>

using namespace n3l;

TEST_CASE("rational parsing and formatting") {
  CHECK(parse_rational("3/4") == Rat(3, 4));
  CHECK(parse_rational("-3/4") == Rat(-3, 4));
  CHECK(parse_rational("7") == Rat(7));
  CHECK(parse_rational("6/4") == Rat(3, 2));  // reduced on parse
  CHECK(format_rational(Rat(3, 2)) == "3/2");
  CHECK(format_rational(Rat(5)) == "5");
  CHECK(format_rational(Rat(-1, 3)) == "-1/3");
  CHECK_THROWS_AS(parse_rational(""), DomainError);
  CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
  CHECK_THROWS_AS(parse_rational("a/b"), DomainError);
  CHECK_THROWS_AS(parse_rational("1.5"), DomainError);
  CHECK(parse_integer("-12") == Int(-12));
  CHECK_THROWS_AS(parse_integer("1/2"), DomainError);
  CHECK(is_integer(Rat(4, 2)));
  CHECK_FALSE(is_integer(Rat(1, 2)));
}

TEST_CASE("deterministic primality below 2^64") {
  CHECK(is_prime_u64(2));
  CHECK(is_prime_u64(3));
  CHECK(is_prime_u64(101));
  CHECK(is_prime_u64(2147483647ULL));          // 2^31 - 1
  CHECK(is_prime_u64(18446744073709551557ULL));  // largest 64-bit prime
  CHECK_FALSE(is_prime_u64(0));
  CHECK_FALSE(is_prime_u64(1));
  CHECK_FALSE(is_prime_u64(4));
  CHECK_FALSE(is_prime_u64(1001));
  CHECK_FALSE(is_prime_u64(3215031751ULL));  // strong pseudoprime to 2,3,5,7
}

TEST_CASE("exact vectors: lex order, equality, conversions") {
  IntVec a = make_int_vec({1, 2, 3});
  IntVec b = make_int_vec({1, 2, 4});
  CHECK(lex_less(a, b));
  CHECK_FALSE(lex_less(b, a));
  CHECK_FALSE(lex_less(a, a));
  CHECK(vec_eq(a, a));
  CHECK_FALSE(vec_eq(a, b));

  RatVec r = to_rational(a);
  CHECK(r[2] == Rat(3));
  CHECK(vec_eq(to_integer(r), a));
  RatVec half = make_rat_vec({Rat(1, 2), Rat(3)});
  CHECK_THROWS_AS(to_integer(half), DomainError);
}

TEST_CASE("boxes") {
  Box g = Box::unit_grid(4, 2);
  CHECK(g.dim() == 2);
  CHECK(g.contains(make_int_vec({1, 1})));
  CHECK(g.contains(make_int_vec({4, 4})));
  CHECK_FALSE(g.contains(make_int_vec({0, 1})));
  CHECK_FALSE(g.contains(make_int_vec({5, 4})));
  CHECK_THROWS_AS(Box(make_int_vec({2, 2}), make_int_vec({1, 3})), DomainError);

  std::vector<IntVec> pts = {make_int_vec({3, -1}), make_int_vec({0, 5})};
  Box t = Box::tight(pts);
  CHECK(t.lo[0] == Int(0));
  CHECK(t.lo[1] == Int(-1));
  CHECK(t.hi[0] == Int(3));
  CHECK(t.hi[1] == Int(5));
}

TEST_CASE("point set validation") {
  Box g = Box::unit_grid(3, 2);
  std::vector<IntVec> ok = {make_int_vec({1, 1}), make_int_vec({2, 3})};
  PointSet s(2, g, ok);
  CHECK(s.size() == 2);
  CHECK(vec_eq(s[1], make_int_vec({2, 3})));

  std::vector<IntVec> dup = {make_int_vec({1, 1}), make_int_vec({1, 1})};
  CHECK_THROWS_AS(PointSet(2, g, dup), DomainError);
  std::vector<IntVec> outside = {make_int_vec({0, 1})};
  CHECK_THROWS_AS(PointSet(2, g, outside), DomainError);
  std::vector<IntVec> wrong_dim = {make_int_vec({1, 1, 1})};
  CHECK_THROWS_AS(PointSet(2, g, wrong_dim), DomainError);
  CHECK_THROWS_AS(PointSet(1, Box::unit_grid(3, 1), {make_int_vec({1})}), DomainError);

  PointSet tight = PointSet::with_tight_box(2, ok);
  CHECK(tight.box().lo[0] == Int(1));
  CHECK(tight.box().hi[1] == Int(3));
}

TEST_CASE("grid point range streams lexicographically") {
  std::vector<IntVec> got;
  for (const IntVec& p : GridPointRange(2, 3)) got.push_back(p);
  REQUIRE(got.size() == 8);
  CHECK(vec_eq(got.front(), make_int_vec({1, 1, 1})));
  CHECK(vec_eq(got[1], make_int_vec({1, 1, 2})));
  CHECK(vec_eq(got.back(), make_int_vec({2, 2, 2})));
  for (std::size_t i = 1; i < got.size(); ++i) CHECK(lex_less(got[i - 1], got[i]));
}

TEST_CASE("points file round-trip") {
  Box g = Box::unit_grid(5, 3);
  PointSet s(3, g,
             {make_int_vec({1, 2, 3}), make_int_vec({5, 5, 5}), make_int_vec({2, 1, 4})});
  std::ostringstream out;
  write_points(out, s);
  CHECK(out.str() == "dim 3\n1 2 3\n5 5 5\n2 1 4\n");

  std::istringstream in(out.str());
  PointSet back = read_points(in);
  CHECK(back.dim() == 3);
  REQUIRE(back.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) CHECK(vec_eq(back[i], s[i]));

  std::ostringstream again;
  write_points(again, back);
  CHECK(again.str() == out.str());
}

TEST_CASE("points file tolerant input, strict errors") {
  std::istringstream ok("# comment\ndim 2\n# mid comment\n1 2\n3 4\n");
  PointSet s = read_points(ok);
  CHECK(s.size() == 2);

  std::istringstream headerless("1 2\n3 4\n");
  CHECK(read_points(headerless).dim() == 2);

  std::istringstream crlf("dim 2\r\n1 2\r\n");
  CHECK(read_points(crlf).size() == 1);

  std::istringstream wrong_arity("dim 2\n1 2 3\n");
  CHECK_THROWS_AS(read_points(wrong_arity), IoError);
  std::istringstream garbage("dim 2\n1 x\n");
  CHECK_THROWS_AS(read_points(garbage), IoError);
  std::istringstream empty("");
  CHECK_THROWS_AS(read_points(empty), IoError);
  std::istringstream mismatched("dim 3\n1 2 3\n");
  CHECK_THROWS_AS(read_points(mismatched, 2), IoError);
  CHECK_THROWS_AS(read_points_file("/nonexistent/points.txt"), IoError);
}

TEST_CASE("integer collinearity predicate") {
  IntVec p = make_int_vec({1, 1});
  IntVec q = make_int_vec({2, 2});
  IntVec r = make_int_vec({5, 5});
  CHECK(collinear3(p, q, r));
  CHECK(collinear3(p, r, q));  // order-independent
  CHECK_FALSE(collinear3(p, q, make_int_vec({5, 6})));

  // Degenerate: coincident points are collinear with anything.
  CHECK(collinear3(p, p, r));

  // d = 3: on the diagonal and off it.
  CHECK(collinear3(make_int_vec({1, 1, 1}), make_int_vec({2, 3, 4}), make_int_vec({3, 5, 7})));
  CHECK_FALSE(
      collinear3(make_int_vec({1, 1, 1}), make_int_vec({2, 3, 4}), make_int_vec({3, 5, 8})));

  // Axis-parallel lines need every minor, not just the leading one.
  CHECK(collinear3(make_int_vec({2, 1}), make_int_vec({2, 5}), make_int_vec({2, 9})));
  CHECK_FALSE(collinear3(make_int_vec({2, 1}), make_int_vec({2, 5}), make_int_vec({3, 9})));

  CHECK_THROWS_AS(collinear3(p, q, make_int_vec({1, 2, 3})), ContractViolation);
  CHECK_THROWS_AS(
      collinear3(make_int_vec({1}), make_int_vec({2}), make_int_vec({3})), ContractViolation);
}

TEST_CASE("rational collinearity matches integer after scaling") {
  RatVec p = make_rat_vec({Rat(1, 2), Rat(1, 3)});
  RatVec q = make_rat_vec({Rat(1), Rat(2, 3)});
  RatVec r = make_rat_vec({Rat(2), Rat(4, 3)});
  CHECK(collinear3(p, q, r));  // all on y = 2x/3
  RatVec r2 = make_rat_vec({Rat(2), Rat(5, 3)});
  CHECK_FALSE(collinear3(p, q, r2));

  std::mt19937_64 rng(7);
  for (int it = 0; it < 200; ++it) {
    auto rnd = [&] { return Rat(static_cast<long>(rng() % 19) - 9, static_cast<long>(rng() % 7) + 1); };
    RatVec a(3), b(3), dir(3);
    for (int i = 0; i < 3; ++i) {
      a[i] = rnd();
      dir[i] = rnd();
    }
    Rat lam1 = rnd(), lam2 = rnd();
    b = a + dir * lam1;
    RatVec c = a + dir * lam2;
    CHECK(collinear3(a, b, c));
  }
}

TEST_CASE("collinearity is invariant under permutation and translation") {
  std::mt19937_64 rng(23);
  for (int it = 0; it < 150; ++it) {
    int d = 2 + static_cast<int>(rng() % 3);
    auto rnd_vec = [&] {
      IntVec v(d);
      for (int i = 0; i < d; ++i) v[i] = static_cast<long>(rng() % 21) - 10;
      return v;
    };
    IntVec p = rnd_vec(), q = rnd_vec(), r = rnd_vec(), t = rnd_vec();
    bool base = collinear3(p, q, r);
    CHECK(collinear3(p, r, q) == base);
    CHECK(collinear3(q, p, r) == base);
    CHECK(collinear3(q, r, p) == base);
    CHECK(collinear3(r, p, q) == base);
    CHECK(collinear3(r, q, p) == base);
    IntVec pt = p + t, qt = q + t, rt = r + t;
    CHECK(collinear3(pt, qt, rt) == base);
  }
}

TEST_CASE("primitive directions") {
  CHECK(vec_eq(primitive_direction(make_int_vec({4, 6})), make_int_vec({2, 3})));
  CHECK(vec_eq(primitive_direction(make_int_vec({-4, 6})), make_int_vec({2, -3})));
  CHECK(vec_eq(primitive_direction(make_int_vec({0, -5})), make_int_vec({0, 1})));
  CHECK(vec_eq(primitive_direction(make_int_vec({-3, 0, 9})), make_int_vec({1, 0, -3})));
  CHECK_THROWS_AS(primitive_direction(make_int_vec({0, 0})), ContractViolation);

  CHECK(primitive_direction(std::vector<long>{6, -4}) == std::vector<long>({3, -2}));
  CHECK(primitive_direction(std::vector<long>{0, 0, -7}) == std::vector<long>({0, 0, 1}));

  // Scaling by any nonzero integer keeps the canonical representative.
  std::mt19937_64 rng(31);
  for (int it = 0; it < 100; ++it) {
    int d = 2 + static_cast<int>(rng() % 3);
    IntVec v(d);
    bool zero = true;
    for (int i = 0; i < d; ++i) {
      v[i] = static_cast<long>(rng() % 15) - 7;
      zero = zero && v[i] == 0;
    }
    if (zero) v[0] = 1;
    long c = static_cast<long>(rng() % 6) + 1;
    if (rng() % 2) c = -c;
    IntVec scaled = v * Int(c);
    CHECK(vec_eq(primitive_direction(scaled), primitive_direction(v)));
  }
}

namespace {

VerifyResult oracle_verify(const PointSet& s) {
  VerifyResult r;
  const auto& p = s.points();
  for (std::size_t i = 0; i + 2 < p.size(); ++i)
    for (std::size_t j = i + 1; j + 1 < p.size(); ++j)
      for (std::size_t k = j + 1; k < p.size(); ++k)
        if (collinear3(p[i], p[j], p[k])) {
          r.pass = false;
          r.witness = {i, j, k};
          return r;  // scan order is lexicographic already
        }
  return r;
}

}  // namespace

TEST_CASE("verifier agrees with the all-triples oracle") {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 60; ++it) {
    int dim = 2 + static_cast<int>(rng() % 2);
    long side = 4 + static_cast<long>(rng() % 9);
    std::size_t want = 3 + rng() % 25;
    std::vector<IntVec> pts;
    while (pts.size() < want) {
      IntVec p(dim);
      for (int i = 0; i < dim; ++i) p[i] = static_cast<long>(rng() % side) + 1;
      bool dup = false;
      for (const auto& q : pts) dup = dup || vec_eq(q, p);
      if (!dup) pts.push_back(p);
    }
    PointSet s(dim, Box::unit_grid(side, dim), pts);
    VerifyResult expect = oracle_verify(s);
    for (int threads : {1, 2, 5}) {
      VerifyResult got = verify_no_three(s, threads);
      CHECK(got.pass == expect.pass);
      if (!expect.pass) CHECK(got.witness == expect.witness);
    }
  }
}

TEST_CASE("verifier witness is the lexicographically smallest triple") {
  // (0,2,4) and (1,2,3) are both collinear; lex order picks (0,2,4).
  PointSet s(2, Box::unit_grid(3, 2),
             {make_int_vec({1, 1}), make_int_vec({1, 2}), make_int_vec({2, 2}),
              make_int_vec({3, 2}), make_int_vec({3, 3})});
  VerifyResult r = verify_no_three(s);
  REQUIRE_FALSE(r.pass);
  CHECK(r.witness == std::array<std::size_t, 3>{0, 2, 4});
  CHECK(verify_no_three(s, 4).witness == std::array<std::size_t, 3>{0, 2, 4});
}

TEST_CASE("verifier passes on small clean sets") {
  PointSet s(2, Box::unit_grid(3, 2),
             {make_int_vec({1, 1}), make_int_vec({1, 2}), make_int_vec({2, 1}),
              make_int_vec({2, 3}), make_int_vec({3, 2}), make_int_vec({3, 3})});
  CHECK(verify_no_three(s).pass);
  PointSet tiny(2, Box::unit_grid(2, 2), {make_int_vec({1, 1}), make_int_vec({2, 2})});
  CHECK(verify_no_three(tiny).pass);  // fewer than three points
}

TEST_CASE("the twelve lattice points of the radius-5 circle verify") {
  std::vector<IntVec> pts;
  for (long s : {1L, -1L}) {
    pts.push_back(make_int_vec({5 * s, 0}));
    pts.push_back(make_int_vec({0, 5 * s}));
    for (long t : {1L, -1L}) {
      pts.push_back(make_int_vec({3 * s, 4 * t}));
      pts.push_back(make_int_vec({4 * s, 3 * t}));
    }
  }
  REQUIRE(pts.size() == 12);
  PointSet circle = PointSet::with_tight_box(2, pts);
  CHECK(verify_no_three(circle).pass);
  CHECK(oracle_verify(circle).pass);
}
