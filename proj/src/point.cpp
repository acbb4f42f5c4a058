#include <n3l/point.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace n3l {

IntVec make_int_vec(std::initializer_list<long> coords) {
  IntVec v(static_cast<Eigen::Index>(coords.size()));
  Eigen::Index i = 0;
  for (long c : coords) v[i++] = Int(c);
  return v;
}

RatVec make_rat_vec(std::initializer_list<Rat> coords) {
  RatVec v(static_cast<Eigen::Index>(coords.size()));
  Eigen::Index i = 0;
  for (const Rat& c : coords) {
    v[i] = c;
    v[i].canonicalize();  // exact comparisons require reduced form
    ++i;
  }
  return v;
}

RatVec to_rational(const IntVec& v) {
  RatVec r(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
  return r;
}

IntVec to_integer(const RatVec& v) {
  IntVec r(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (!is_integer(v[i])) {
      throw DomainError("non-integral coordinate: " + format_rational(v[i]));
    }
    r[i] = v[i].get_num();
  }
  return r;
}

Box::Box(IntVec lo_, IntVec hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
  if (lo.size() != hi.size() || lo.size() < 2) {
    throw DomainError("box bounds need equal dimension >= 2");
  }
  for (Eigen::Index i = 0; i < lo.size(); ++i) {
    if (lo[i] > hi[i]) throw DomainError("empty box axis");
  }
}

Box Box::unit_grid(long n, int dim) {
  if (n < 1 || dim < 2) throw DomainError("grid needs n >= 1, d >= 2");
  IntVec lo(dim), hi(dim);
  for (int i = 0; i < dim; ++i) {
    lo[i] = 1;
    hi[i] = n;
  }
  return Box(std::move(lo), std::move(hi));
}

bool Box::contains(const IntVec& p) const {
  if (p.size() != lo.size()) return false;
  for (Eigen::Index i = 0; i < lo.size(); ++i) {
    if (p[i] < lo[i] || p[i] > hi[i]) return false;
  }
  return true;
}

Box Box::tight(const std::vector<IntVec>& points) {
  if (points.empty()) throw DomainError("tight box of empty point list");
  IntVec lo = points.front();
  IntVec hi = points.front();
  for (const auto& p : points) {
    for (Eigen::Index i = 0; i < p.size(); ++i) {
      lo[i] = std::min(lo[i], p[i]);
      hi[i] = std::max(hi[i], p[i]);
    }
  }
  return Box(std::move(lo), std::move(hi));
}

PointSet::PointSet(int dim, Box box, std::vector<IntVec> points)
    : dim_(dim), box_(std::move(box)), points_(std::move(points)) {
  if (dim_ < 2) throw DomainError("point set dimension must be >= 2");
  if (box_.dim() != dim_) throw DomainError("box dimension mismatch");
  for (const auto& p : points_) {
    if (static_cast<int>(p.size()) != dim_) throw DomainError("point dimension mismatch");
    if (!box_.contains(p)) throw DomainError("point outside box");
  }
  std::vector<const IntVec*> sorted;
  sorted.reserve(points_.size());
  for (const auto& p : points_) sorted.push_back(&p);
  std::sort(sorted.begin(), sorted.end(),
            [](const IntVec* a, const IntVec* b) { return lex_less(*a, *b); });
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (vec_eq(*sorted[i - 1], *sorted[i])) throw DomainError("duplicate point in set");
  }
}

PointSet PointSet::with_tight_box(int dim, std::vector<IntVec> points) {
  Box box = points.empty() ? Box::unit_grid(1, dim) : Box::tight(points);
  return PointSet(dim, std::move(box), std::move(points));
}

GridPointRange::GridPointRange(long n, int dim) : n_(n), dim_(dim) {
  if (n < 1 || dim < 2) throw DomainError("grid range needs n >= 1, d >= 2");
}

GridPointRange::iterator::iterator(long n, int dim, bool end) : n_(n) {
  if (end) {
    pos_ = -1;
    return;
  }
  pos_ = 0;
  odometer_.assign(static_cast<std::size_t>(dim), 1);
  current_.resize(dim);
  for (int i = 0; i < dim; ++i) current_[i] = 1;
}

GridPointRange::iterator& GridPointRange::iterator::operator++() {
  int d = static_cast<int>(odometer_.size());
  int i = d - 1;
  while (i >= 0) {
    if (odometer_[i] < n_) {
      ++odometer_[i];
      break;
    }
    odometer_[i] = 1;
    --i;
  }
  if (i < 0) {
    pos_ = -1;
    return *this;
  }
  ++pos_;
  for (int k = i; k < d; ++k) current_[k] = odometer_[k];
  return *this;
}

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

}  // namespace

PointSet read_points(std::istream& in, int expect_dim) {
  std::vector<IntVec> points;
  int dim = expect_dim;
  bool header_allowed = true;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto toks = split_ws(line);
    if (header_allowed && toks.size() == 2 && toks[0] == "dim") {
      long d = std::stol(toks[1]);
      if (d < 2) throw IoError("line " + std::to_string(lineno) + ": dim must be >= 2");
      if (expect_dim != 0 && d != expect_dim) {
        throw IoError("file declares dim " + std::to_string(d) + ", expected " +
                      std::to_string(expect_dim));
      }
      dim = static_cast<int>(d);
      header_allowed = false;
      continue;
    }
    header_allowed = false;
    if (dim == 0) dim = static_cast<int>(toks.size());
    if (static_cast<int>(toks.size()) != dim) {
      throw IoError("line " + std::to_string(lineno) + ": expected " + std::to_string(dim) +
                    " coordinates, got " + std::to_string(toks.size()));
    }
    IntVec p(dim);
    for (int i = 0; i < dim; ++i) {
      try {
        p[i] = parse_integer(toks[i]);
      } catch (const DomainError& e) {
        throw IoError("line " + std::to_string(lineno) + ": " + e.what());
      }
    }
    points.push_back(std::move(p));
  }
  if (dim == 0) throw IoError("no points and no dim header in input");
  return PointSet::with_tight_box(dim, std::move(points));
}

PointSet read_points_file(const std::string& path, int expect_dim) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open points file: " + path);
  return read_points(in, expect_dim);
}

void write_points(std::ostream& out, const PointSet& s) {
  out << "dim " << s.dim() << "\n";
  for (const auto& p : s.points()) {
    for (Eigen::Index i = 0; i < p.size(); ++i) {
      if (i) out << ' ';
      out << p[i].get_str();
    }
    out << "\n";
  }
}

void write_points_file(const std::string& path, const PointSet& s) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write points file: " + path);
  write_points(out, s);
}

}  // namespace n3l
