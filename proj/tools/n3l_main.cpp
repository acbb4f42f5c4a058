// Command-line front end: verification, exact solving, constructions,
// claim sweeps, and bound tables.  Machine output (JSON/CSV) goes to
// stdout, diagnostics to stderr, verdicts to exit codes (0 ok, 1 usage or
// domain error, 2 verification failure).
#include <CLI11.hpp>

#include <n3l/bounds.hpp>
#include <n3l/claims.hpp>
#include <n3l/collinear.hpp>
#include <n3l/constructions.hpp>
#include <n3l/parallel.hpp>
#include <n3l/point.hpp>
#include <n3l/solver.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace n3l;

std::string point_str(const IntVec& p) {
  std::string s;
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    if (i) s += ' ';
    s += p[i].get_str();
  }
  return s;
}

std::vector<Rat> parse_rational_list(const std::string& text) {
  std::vector<Rat> out;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      out.push_back(parse_rational(cur));
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(parse_rational(cur));
  if (out.empty()) throw DomainError("expected a comma-separated rational list");
  return out;
}

RatVec rat_vec_from_list(const std::vector<Rat>& vals) {
  RatVec v(static_cast<Eigen::Index>(vals.size()));
  for (std::size_t i = 0; i < vals.size(); ++i) v[static_cast<Eigen::Index>(i)] = vals[i];
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"no-three-in-line toolkit: exact verification, solving, constructions, "
               "claim sweeps and bound tables"};
  app.require_subcommand(1);
  int rc = 0;

  // verify ------------------------------------------------------------------
  std::string v_input;
  int v_dim = 0;
  int v_threads = 0;
  auto* verify = app.add_subcommand("verify", "Check a point file for collinear triples");
  verify->add_option("--input", v_input, "Point file to check")->required();
  verify->add_option("--dim", v_dim, "Expected dimension (default: infer from the file)");
  verify->add_option("--threads", v_threads, "Worker threads (default: N3L_THREADS or 1)");
  verify->callback([&] {
    PointSet s = read_points_file(v_input, v_dim);
    VerifyResult r = verify_no_three(s, resolve_threads(v_threads));
    if (r.pass) {
      std::cout << "PASS " << s.size() << " points, no three collinear\n";
      rc = 0;
    } else {
      const auto& pts = s.points();
      std::cout << "FAIL collinear triple at indices " << r.witness[0] << " " << r.witness[1]
                << " " << r.witness[2] << "\n"
                << point_str(pts[r.witness[0]]) << "\n"
                << point_str(pts[r.witness[1]]) << "\n"
                << point_str(pts[r.witness[2]]) << "\n";
      rc = 2;
    }
  });

  // solve -------------------------------------------------------------------
  long s_n = 0;
  int s_d = 0;
  double s_limit = 0.0;
  int s_threads = 0;
  bool s_symmetry = false;
  bool s_timing = false;
  std::string s_out;
  auto* solve = app.add_subcommand("solve", "Exact maximum no-three-in-line set on {1..n}^d");
  solve->add_option("--n", s_n, "Grid side length")->required();
  solve->add_option("--d", s_d, "Dimension")->required();
  solve->add_option("--time-limit", s_limit, "Time limit in seconds (0 = none)");
  solve->add_option("--threads", s_threads, "Worker threads (default: N3L_THREADS or 1)");
  solve->add_flag("--symmetry", s_symmetry, "Restrict root branches to a fundamental domain");
  solve->add_option("--out", s_out, "Write the witness point set to this file");
  solve->add_flag("--timing", s_timing, "Report wall time (off keeps output reproducible)");
  solve->callback([&] {
    SolveOptions opts;
    opts.time_limit_s = s_limit;
    opts.threads = s_threads;
    opts.symmetry_reduction = s_symmetry;
    SolveResult r = exact_max(s_n, s_d, opts);
    std::string witness_file;
    if (!s_out.empty()) {
      write_points_file(s_out, r.witness);
      witness_file = s_out;
    }
    std::cout << r.to_json(witness_file, s_timing).dump(2) << "\n";
  });

  // construct ---------------------------------------------------------------
  std::string c_method;
  long c_n = 0;
  int c_d = 0;
  std::uint64_t c_seed = 0;
  std::string c_center;
  std::string c_r2;
  std::string c_out;
  auto* construct = app.add_subcommand("construct", "Generate a verified point set");
  construct->add_option("--method", c_method, "sphere | erdos | greedy")
      ->required()
      ->check(CLI::IsMember({"sphere", "erdos", "greedy"}));
  construct->add_option("--n", c_n, "Grid side length (the prime p for erdos)")->required();
  construct->add_option("--d", c_d, "Dimension")->required();
  construct->add_option("--seed", c_seed, "Greedy fill order seed (0 = lexicographic)");
  construct->add_option("--center", c_center, "Fixed sphere center, e.g. \"5/2,5/2\"");
  construct->add_option("--r2", c_r2, "Fixed squared radius, e.g. 25/4");
  construct->add_option("--out", c_out, "Write the points to this file");
  construct->callback([&] {
    ConstructionReport rep = [&]() -> ConstructionReport {
      if (c_method == "sphere") {
        std::optional<RatVec> center;
        std::optional<Rat> radius_sq;
        if (!c_center.empty()) {
          RatVec cv = rat_vec_from_list(parse_rational_list(c_center));
          if (cv.size() != c_d) throw DomainError("--center must list exactly d coordinates");
          center = std::move(cv);
        }
        if (!c_r2.empty()) radius_sq = parse_rational(c_r2);
        SphereStrategy strategy =
            center ? SphereStrategy::kFixedCenter : SphereStrategy::kCenterScan;
        return best_sphere(c_n, c_d, strategy, center, radius_sq);
      }
      if (c_method == "erdos") {
        if (c_d != 2) throw DomainError("the parabola construction is planar; use --d 2");
        if (c_n < 2) throw DomainError("erdos needs a prime p >= 2");
        PointSet pts = erdos_parabola(static_cast<std::uint64_t>(c_n));
        Json params;
        params["p"] = c_n;
        return make_report("erdos", std::move(params), std::move(pts), c_n, 2);
      }
      return greedy(c_n, c_d, c_seed);
    }();
    std::string points_file;
    if (!c_out.empty()) {
      write_points_file(c_out, rep.points);
      points_file = c_out;
    }
    std::cout << rep.to_json(points_file).dump(2) << "\n";
  });

  // claims ------------------------------------------------------------------
  std::string k_claim;
  long k_max_coord = 0;
  int k_d = 0;
  std::string k_scale = "1";
  long k_n = 0;
  int k_threads = 0;
  std::string k_lambdas = "-2,-1,-1/2,1/2,1,2";
  auto* claims = app.add_subcommand("claims", "Exhaustive sweep of one compression claim");
  claims->add_option("--claim", k_claim,
                     "involution | decider | ballnest | admissible | cornerstone | gapshell")
      ->required();
  claims->add_option("--max-coord", k_max_coord, "Coordinate bound K of the sweep domain");
  claims->add_option("--d", k_d, "Dimension")->required();
  claims->add_option("--scale", k_scale, "Compression scale m as a rational (default 1)");
  claims->add_option("--n", k_n, "Grid side for the gapshell sweep");
  claims->add_option("--threads", k_threads, "Worker threads (default: N3L_THREADS or 1)");
  claims->add_option("--lambdas", k_lambdas, "Cornerstone line parameters, comma-separated");
  claims->callback([&] {
    ClaimId id = claim_from_name(k_claim);
    Rat m = parse_rational(k_scale);
    int threads = resolve_threads(k_threads);
    ClaimDomain domain;
    domain.dim = k_d;
    domain.max_coord = k_max_coord;
    domain.scale = m;
    domain.kind =
        (id == ClaimId::kAdmissible) ? "rationals-from-grid" : "distinct-naturals";
    ClaimReport rep;
    switch (id) {
      case ClaimId::kInvolution:
        rep = check_involution(domain, threads);
        break;
      case ClaimId::kDecider:
        rep = check_decider(domain, threads);
        break;
      case ClaimId::kBallnest:
        rep = check_ballnest(domain, threads);
        break;
      case ClaimId::kAdmissible:
        rep = check_admissible_equiv(domain, threads);
        break;
      case ClaimId::kCornerstone:
        rep = check_cornerstone(domain, parse_rational_list(k_lambdas), threads);
        break;
      case ClaimId::kGapShell:
        if (k_n < 2) throw DomainError("gapshell needs --n >= 2");
        rep = check_gap_shell(k_n, k_d, Scale(m), threads);
        break;
    }
    std::cout << rep.to_json().dump(2) << "\n";
  });

  // bound -------------------------------------------------------------------
  long b_n = 0;
  int b_d = 0;
  std::string b_source;
  auto* bound = app.add_subcommand("bound", "Reference bounds for one (n, d)");
  bound->add_option("--n", b_n, "Grid side length")->required();
  bound->add_option("--d", b_d, "Dimension")->required();
  bound->add_option("--source", b_source, "Also compute best via: exact | sphere | erdos | greedy");
  bound->callback([&] {
    BoundsRow row;
    if (b_source.empty()) {
      row = reference_row(b_n, b_d);
    } else {
      row = compare_table(b_n, b_n, b_d, {bounds_source_from_name(b_source)}).front();
    }
    std::cout << row.to_json().dump(2) << "\n";
  });

  // table -------------------------------------------------------------------
  long t_from = 0;
  long t_to = 0;
  int t_d = 0;
  std::vector<std::string> t_sources;
  std::string t_format = "csv";
  auto* table = app.add_subcommand("table", "Bounds table over a range of n");
  table->add_option("--n-from", t_from, "First grid side")->required();
  table->add_option("--n-to", t_to, "Last grid side")->required();
  table->add_option("--d", t_d, "Dimension")->required();
  table->add_option("--sources", t_sources, "Best-value sources: exact,sphere,erdos,greedy")
      ->required()
      ->delimiter(',');
  table->add_option("--format", t_format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}));
  table->callback([&] {
    std::vector<BoundsSource> sources;
    for (const auto& name : t_sources) sources.push_back(bounds_source_from_name(name));
    std::vector<BoundsRow> rows = compare_table(t_from, t_to, t_d, sources);
    if (t_format == "csv") {
      std::cout << to_csv(rows);
    } else {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const auto& row : rows) arr.push_back(row.to_json());
      std::cout << arr.dump(2) << "\n";
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const ContractViolation& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}
