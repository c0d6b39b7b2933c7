#include "srcfg/constructions.hpp"

#include <algorithm>
#include <set>

#include "srcfg/errors.hpp"
#include "srcfg/field.hpp"
#include "srcfg/parallel.hpp"
#include "srcfg/projective.hpp"

namespace srcfg {

namespace {

std::uint32_t index_of(const std::vector<Subspace>& sorted, const Subspace& s) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), s);
  if (it == sorted.end() || !(*it == s)) throw InvalidConfiguration("subspace missing from enumeration");
  return static_cast<std::uint32_t>(it - sorted.begin());
}

// Subspaces of `host` of projective dimension dim, via coefficient matrices.
std::vector<Subspace> subspaces_of(const FiniteField& f, const Subspace& host, std::uint32_t dim) {
  const auto coeffs = pg_subspaces(f, host.dim, dim);
  std::vector<Subspace> out;
  out.reserve(coeffs.size());
  for (const auto& c : coeffs) {
    std::vector<FieldElement> rows(c.rows() * host.cols(), 0);
    for (std::uint32_t r = 0; r < c.rows(); ++r)
      for (std::uint32_t j = 0; j < host.rows(); ++j) {
        const FieldElement a = c.at(r, j);
        if (a == 0) continue;
        for (std::uint32_t x = 0; x < host.cols(); ++x)
          rows[r * host.cols() + x] = f.add(rows[r * host.cols() + x], f.mul(a, host.at(j, x)));
      }
    out.push_back(span(f, host.n, std::move(rows)));
  }
  return out;
}

bool in_hyperplane(const Subspace& s) {
  for (std::uint32_t r = 0; r < s.rows(); ++r)
    if (s.at(r, 4) != 0) return false;
  return true;
}

bool through_p0(const FiniteField& f, const Subspace& s) {
  std::vector<FieldElement> e5(5, 0);
  e5[4] = 1;
  return subspace_contains(f, s, span(f, 4, e5));
}

// Rows restricted to the first four coordinates, as a subspace of PG(3,q).
Subspace project_to_h0(const FiniteField& f, const Subspace& s) {
  std::vector<FieldElement> rows;
  for (std::uint32_t r = 0; r < s.rows(); ++r)
    for (std::uint32_t x = 0; x < 4; ++x) rows.push_back(s.at(r, x));
  const std::uint32_t rank = row_reduce(f, rows, s.rows(), 4);
  rows.resize(rank * 4);
  return span(f, 3, rows);
}

std::vector<FieldElement> lift_rows(const Subspace& s3) {
  std::vector<FieldElement> rows;
  for (std::uint32_t r = 0; r < s3.rows(); ++r) {
    for (std::uint32_t x = 0; x < 4; ++x) rows.push_back(s3.at(r, x));
    rows.push_back(0);
  }
  return rows;
}

}  // namespace

Configuration projective_plane(std::uint32_t q) {
  const FiniteField f = make_field(q);
  const auto points = pg_subspaces(f, 2, 0);
  const auto planes_lines = pg_subspaces(f, 2, 1);
  std::vector<Line> lines;
  for (const auto& l : planes_lines) {
    Line line;
    for (const auto& p : subspaces_of(f, l, 0)) line.push_back(index_of(points, p));
    lines.push_back(std::move(line));
  }
  return Configuration(static_cast<std::uint32_t>(points.size()), q + 1, std::move(lines));
}

std::vector<Point> coordinate_triangle(std::uint32_t q) {
  const FiniteField f = make_field(q);
  const auto points = pg_subspaces(f, 2, 0);
  std::vector<Point> out;
  for (std::uint32_t i = 0; i < 3; ++i) {
    std::vector<FieldElement> e(3, 0);
    e[i] = 1;
    out.push_back(index_of(points, span(f, 2, e)));
  }
  return out;
}

Configuration triangle_removal(const Configuration& plane, Point a, Point b, Point c) {
  if (!is_valid(plane)) throw InvalidConfiguration("input plane is not a valid configuration");
  const std::uint32_t n = plane.k - 1;
  if (plane.v != n * n + n + 1) throw InvalidConfiguration("input is not a projective plane");
  if (a >= plane.v || b >= plane.v || c >= plane.v) throw InvalidConfiguration("triangle vertex out of range");
  if (a == b || b == c || a == c) throw CollinearTriple("triangle vertices must be distinct");
  if (n < 5) throw OrderTooSmall("triangle removal needs order n >= 5, got " + std::to_string(n));

  auto on = [](const Line& l, Point p) { return std::binary_search(l.begin(), l.end(), p); };
  std::vector<bool> deleted_point(plane.v, false);
  std::vector<bool> keep_line(plane.lines.size(), true);
  for (std::size_t i = 0; i < plane.lines.size(); ++i) {
    const Line& l = plane.lines[i];
    const int vertices = on(l, a) + on(l, b) + on(l, c);
    if (vertices == 3) throw CollinearTriple("points " + std::to_string(a) + ", " + std::to_string(b) + ", " +
                                             std::to_string(c) + " are collinear");
    if (vertices == 2)
      for (Point p : l) deleted_point[p] = true;
    if (vertices >= 1) keep_line[i] = false;
  }
  std::vector<Point> renumber(plane.v, 0);
  std::uint32_t next = 0;
  for (Point p = 0; p < plane.v; ++p)
    if (!deleted_point[p]) renumber[p] = next++;
  std::vector<Line> lines;
  for (std::size_t i = 0; i < plane.lines.size(); ++i) {
    if (!keep_line[i]) continue;
    Line line;
    for (Point p : plane.lines[i])
      if (!deleted_point[p]) line.push_back(renumber[p]);
    lines.push_back(std::move(line));
  }
  return Configuration(next, n - 2, std::move(lines));
}

Configuration triangle_removal(std::uint32_t q) {
  const auto t = coordinate_triangle(q);
  return triangle_removal(projective_plane(q), t[0], t[1], t[2]);
}

Configuration moore_configuration(const Graph& g) {
  const auto p = srg_check(g);
  const std::int64_t k = p ? p->d : 0;
  if (!p || k < 3 || p->v != k * k + 1 || p->lambda != 0 || p->mu != 1)
    throw NotMooreGraph(p ? "graph is " + p->str() + ", not SRG(k^2+1,k,0,1) with k >= 3"
                          : "graph is not strongly regular");
  std::vector<Line> lines;
  for (Vertex x = 0; x < g.order(); ++x) lines.push_back(g.neighbours(x));
  return Configuration(g.order(), static_cast<std::uint32_t>(k), std::move(lines));
}

std::string PolarityFlags::str() const {
  if (hyperplane_side && point_side) return "both";
  if (hyperplane_side) return "hyperplane";
  if (point_side) return "point";
  return "none";
}

Configuration lp4(std::uint32_t q, PolarityFlags flags) {
  const FiniteField f = make_field(q);
  const auto points = pg_subspaces(f, 4, 1);
  const auto planes = pg_subspaces(f, 4, 2);
  const auto gram = symplectic_gram(f, 4);

  auto pi_line = [&](const Subspace& l) { return span(f, 4, lift_rows(perp(f, project_to_h0(f, l), gram))); };
  auto pi_prime_plane = [&](const Subspace& p) {
    auto rows = lift_rows(perp(f, project_to_h0(f, p), gram));
    rows.insert(rows.end(), {0, 0, 0, 0, 1});
    return span(f, 4, rows);
  };

  std::vector<Line> lines(planes.size());
  parallel_for(planes.size(), [&](std::size_t i) {
    const Subspace& p = planes[i];
    const bool in_h0 = in_hyperplane(p);
    const bool at_p0 = through_p0(f, p);
    if (in_h0 && at_p0) throw TheoremViolation("a plane lies in H0 and passes through P0");
    Line line;
    if (flags.hyperplane_side && in_h0) {
      for (const auto& m : subspaces_of(f, p, 1)) line.push_back(index_of(points, pi_line(m)));
    } else if (flags.point_side && at_p0) {
      for (const auto& m : subspaces_of(f, p, 1))
        if (!through_p0(f, m)) line.push_back(index_of(points, m));
      for (const auto& m : subspaces_of(f, pi_prime_plane(p), 1))
        if (through_p0(f, m)) line.push_back(index_of(points, m));
    } else {
      for (const auto& m : subspaces_of(f, p, 1)) line.push_back(index_of(points, m));
    }
    lines[i] = std::move(line);
  });
  return Configuration(static_cast<std::uint32_t>(points.size()), q * q + q + 1, std::move(lines));
}

Configuration development(const Group& g, const std::vector<GroupElement>& d) {
  const std::uint32_t n = g.order();
  std::vector<bool> seen(n, false);
  for (GroupElement a : d)
    if (a >= n) throw InvalidSpec("element " + std::to_string(a) + " out of range");
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = 0; j < d.size(); ++j) {
      if (i == j) continue;
      const GroupElement x = g.ldiff(d[i], d[j]);
      if (x == g.identity() || seen[x]) throw NotDeficient("left difference " + g.name(x) + " repeats");
      seen[x] = true;
    }
  std::vector<Line> lines;
  std::set<Line> distinct;
  for (GroupElement h = 0; h < n; ++h) {
    Line line;
    for (GroupElement a : d) line.push_back(g.mul(h, a));
    std::sort(line.begin(), line.end());
    if (distinct.insert(line).second) lines.push_back(std::move(line));
  }
  return Configuration(n, static_cast<std::uint32_t>(d.size()), std::move(lines));
}

Group fq_star_group(std::uint32_t q) {
  if (!prime_power(q)) throw NotPrimePower(std::to_string(q));
  const Group z = cyclic_group(q - 1);
  return direct_product(z, z);
}

std::vector<GroupElement> fq_star_sdds(std::uint32_t q) {
  const FiniteField f = make_field(q);
  const FieldElement minus_one = f.neg(1);
  std::vector<GroupElement> out;
  for (FieldElement x = 1; x < q; ++x) {
    if (x == minus_one) continue;
    out.push_back(f.log(x) * (q - 1) + f.log(f.add(x, 1)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<GroupElement> elements_by_name(const Group& g, const std::vector<std::string>& labels) {
  std::vector<GroupElement> out;
  for (const auto& l : labels) {
    const auto e = g.find(l);
    if (!e) throw InvalidSpec("no group element labelled '" + l + "'");
    out.push_back(*e);
  }
  return out;
}

}  // namespace srcfg
