#include "srcfg/configuration.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include "srcfg/errors.hpp"

namespace srcfg {

Configuration::Configuration(std::uint32_t v_, std::uint32_t k_, std::vector<Line> lines_)
    : v(v_), k(k_), lines(std::move(lines_)) {
  for (auto& l : lines) std::sort(l.begin(), l.end());
}

Configuration Configuration::sorted() const {
  Configuration out = *this;
  std::sort(out.lines.begin(), out.lines.end());
  return out;
}

bool operator==(const Configuration& a, const Configuration& b) {
  if (a.v != b.v || a.k != b.k || a.lines.size() != b.lines.size()) return false;
  return a.sorted().lines == b.sorted().lines;
}

std::string SrcParams::str() const {
  std::ostringstream out;
  out << "(" << v << "_" << k << ";" << lambda << "," << mu << ")";
  return out.str();
}

std::string to_string(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::LineCount:
      return "line count";
    case Violation::Kind::PointOutOfRange:
      return "point out of range";
    case Violation::Kind::RepeatedPoint:
      return "repeated point";
    case Violation::Kind::LineSize:
      return "line size";
    case Violation::Kind::PointDegree:
      return "point degree";
    case Violation::Kind::PairCoveredTwice:
      return "pair covered twice";
  }
  return "unknown";
}

std::vector<Violation> validate(const Configuration& c) {
  std::vector<Violation> out;
  const std::uint32_t v = c.v;
  if (c.lines.size() != v)
    out.push_back({Violation::Kind::LineCount,
                   "expected " + std::to_string(v) + " lines, found " + std::to_string(c.lines.size()),
                   {static_cast<std::uint32_t>(c.lines.size())}});

  std::vector<std::uint32_t> degree(v, 0);
  // first line covering each pair, indexed p*v+q
  std::vector<std::int64_t> cover(static_cast<std::size_t>(v) * v, -1);
  for (std::uint32_t j = 0; j < c.lines.size(); ++j) {
    const Line& l = c.lines[j];
    if (l.size() != c.k)
      out.push_back({Violation::Kind::LineSize,
                     "line " + std::to_string(j) + " has " + std::to_string(l.size()) + " points, expected " +
                         std::to_string(c.k),
                     {j}});
    bool usable = true;
    for (std::size_t a = 0; a < l.size(); ++a) {
      if (l[a] >= v) {
        out.push_back({Violation::Kind::PointOutOfRange,
                       "line " + std::to_string(j) + " mentions point " + std::to_string(l[a]),
                       {j, l[a]}});
        usable = false;
      } else if (a > 0 && l[a] == l[a - 1]) {
        out.push_back({Violation::Kind::RepeatedPoint,
                       "line " + std::to_string(j) + " repeats point " + std::to_string(l[a]),
                       {j, l[a]}});
      }
    }
    if (!usable) continue;
    std::vector<Point> pts(l.begin(), l.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    for (auto p : pts) ++degree[p];
    for (std::size_t a = 0; a < pts.size(); ++a)
      for (std::size_t b = a + 1; b < pts.size(); ++b) {
        auto& slot = cover[pts[a] * v + pts[b]];
        if (slot >= 0)
          out.push_back({Violation::Kind::PairCoveredTwice,
                         "pair covered twice: points " + std::to_string(pts[a]) + "," + std::to_string(pts[b]) +
                             " lie on lines " + std::to_string(slot) + " and " + std::to_string(j),
                         {pts[a], pts[b], static_cast<std::uint32_t>(slot), j}});
        else
          slot = j;
      }
  }
  for (std::uint32_t p = 0; p < v; ++p)
    if (degree[p] != c.k)
      out.push_back({Violation::Kind::PointDegree,
                     "point " + std::to_string(p) + " lies on " + std::to_string(degree[p]) + " lines, expected " +
                         std::to_string(c.k),
                     {p}});
  return out;
}

bool is_valid(const Configuration& c) { return validate(c).empty(); }

namespace {

void require_valid(const Configuration& c) {
  auto violations = validate(c);
  if (!violations.empty()) throw InvalidConfiguration(violations.front().message);
}

}  // namespace

Graph associated_graph(const Configuration& c, Side side) {
  require_valid(c);
  if (side == Side::Point) {
    Graph g(c.v);
    for (const auto& l : c.lines)
      for (std::size_t a = 0; a < l.size(); ++a)
        for (std::size_t b = a + 1; b < l.size(); ++b) g.add_edge(l[a], l[b]);
    return g;
  }
  const auto n = static_cast<std::uint32_t>(c.lines.size());
  std::vector<std::vector<std::uint32_t>> through(c.v);
  for (std::uint32_t j = 0; j < n; ++j)
    for (auto p : c.lines[j]) through[p].push_back(j);
  Graph g(n);
  for (const auto& ls : through)
    for (std::size_t a = 0; a < ls.size(); ++a)
      for (std::size_t b = a + 1; b < ls.size(); ++b) g.add_edge(ls[a], ls[b]);
  return g;
}

std::optional<SrcParams> src_check(const Configuration& c) {
  require_valid(c);
  const auto point = srg_check(associated_graph(c, Side::Point));
  if (!point) return std::nullopt;
  const auto line = srg_check(associated_graph(c, Side::Line));
  if (!line || !(*line == *point))
    throw TheoremViolation("point graph is " + point->str() + " but line graph is " +
                           (line ? line->str() : std::string("not strongly regular")));
  return SrcParams{c.v, c.k, point->lambda, point->mu};
}

Configuration dual(const Configuration& c) {
  std::vector<Line> lines(c.v);
  for (std::uint32_t j = 0; j < c.lines.size(); ++j)
    for (auto p : c.lines[j])
      if (p < c.v) lines[p].push_back(j);
  return Configuration(static_cast<std::uint32_t>(c.lines.size()), c.k, std::move(lines));
}

std::string GeometryClass::str() const {
  std::ostringstream out;
  switch (kind) {
    case Kind::PartialGeometry:
      out << "PartialGeometry(alpha=" << alpha << ")";
      break;
    case Kind::SemipartialGeometry:
      out << "SemipartialGeometry(alpha=" << alpha << ",mu=" << mu << ")";
      break;
    case Kind::AlphaBetaGeometry:
      out << "AlphaBetaGeometry(" << alpha << "," << beta << ")";
      break;
    case Kind::General:
      out << "General";
      break;
  }
  out << " spectrum {";
  bool first = true;
  for (auto [value, count] : spectrum) {
    out << (first ? "" : ", ") << value << ":" << count;
    first = false;
  }
  out << "}";
  return out.str();
}

GeometryClass alpha_spectrum(const Configuration& c) {
  const Graph g = associated_graph(c, Side::Point);
  GeometryClass out;
  std::vector<char> on_line(c.v);
  for (const auto& l : c.lines) {
    std::fill(on_line.begin(), on_line.end(), 0);
    for (auto p : l) on_line[p] = 1;
    for (Point p = 0; p < c.v; ++p) {
      if (on_line[p]) continue;
      std::uint32_t count = 0;
      for (auto q : l) count += g.adjacent(p, q);
      ++out.spectrum[count];
    }
  }
  if (out.spectrum.empty()) return out;

  const auto first = out.spectrum.begin()->first;
  const auto last = out.spectrum.rbegin()->first;
  if (out.spectrum.size() == 1) {
    out.kind = GeometryClass::Kind::PartialGeometry;
    out.alpha = out.beta = first;
  } else if (out.spectrum.size() == 2) {
    out.kind = GeometryClass::Kind::AlphaBetaGeometry;
    out.alpha = first;
    out.beta = last;
    if (first == 0) {
      // Semipartial: constant common-neighbour count over noncollinear pairs.
      std::optional<std::uint32_t> mu;
      bool constant = true;
      for (Point p = 0; p < c.v && constant; ++p)
        for (Point q = p + 1; q < c.v && constant; ++q) {
          if (g.adjacent(p, q)) continue;
          const auto m = g.common_neighbours(p, q);
          if (!mu) mu = m;
          else constant = *mu == m;
        }
      if (constant && mu) {
        out.kind = GeometryClass::Kind::SemipartialGeometry;
        out.alpha = last;
        out.beta = last;
        out.mu = *mu;
      }
    }
  } else {
    out.kind = GeometryClass::Kind::General;
    out.alpha = first;
    out.beta = last;
  }
  return out;
}

namespace {

std::uint32_t rank_mod_prime(const Configuration& c, std::uint64_t p) {
  const std::uint32_t rows = c.v, cols = static_cast<std::uint32_t>(c.lines.size());
  std::vector<std::uint64_t> m(static_cast<std::size_t>(rows) * cols, 0);
  for (std::uint32_t j = 0; j < cols; ++j)
    for (auto pt : c.lines[j]) m[pt * cols + j] = 1;
  auto pow_mod = [p](std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    a %= p;
    while (e) {
      if (e & 1) r = static_cast<std::uint64_t>((static_cast<unsigned __int128>(r) * a) % p);
      a = static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * a) % p);
      e >>= 1;
    }
    return r;
  };
  std::uint32_t rank = 0;
  for (std::uint32_t col = 0; col < cols && rank < rows; ++col) {
    std::uint32_t piv = rank;
    while (piv < rows && m[piv * cols + col] == 0) ++piv;
    if (piv == rows) continue;
    for (std::uint32_t j = 0; j < cols; ++j) std::swap(m[piv * cols + j], m[rank * cols + j]);
    const std::uint64_t inv = pow_mod(m[rank * cols + col], p - 2);
    for (std::uint32_t r = rank + 1; r < rows; ++r) {
      const std::uint64_t f = m[r * cols + col] * inv % p;
      if (f == 0) continue;
      for (std::uint32_t j = col; j < cols; ++j)
        m[r * cols + j] = (m[r * cols + j] + p - f * m[rank * cols + j] % p) % p;
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::uint32_t incidence_rank(const Configuration& c) {
  using boost::multiprecision::cpp_int;
  const std::uint32_t rows = c.v, cols = static_cast<std::uint32_t>(c.lines.size());
  std::vector<cpp_int> m(static_cast<std::size_t>(rows) * cols, 0);
  for (std::uint32_t j = 0; j < cols; ++j)
    for (auto pt : c.lines[j]) m[pt * cols + j] = 1;
  // Fraction-free elimination: every entry stays an integer minor.
  cpp_int prev = 1;
  std::uint32_t rank = 0;
  for (std::uint32_t col = 0; col < cols && rank < rows; ++col) {
    std::uint32_t piv = rank;
    while (piv < rows && m[piv * cols + col] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != rank)
      for (std::uint32_t j = 0; j < cols; ++j) std::swap(m[piv * cols + j], m[rank * cols + j]);
    const cpp_int pivot = m[rank * cols + col];
    for (std::uint32_t r = rank + 1; r < rows; ++r) {
      const cpp_int f = m[r * cols + col];
      for (std::uint32_t j = col; j < cols; ++j)
        m[r * cols + j] = (pivot * m[r * cols + j] - f * m[rank * cols + j]) / prev;
    }
    prev = pivot;
    ++rank;
  }
  return rank;
}

bool is_proper(const Configuration& c) {
  require_valid(c);
  for (std::uint64_t p : {2147483647ull, 1000000007ull})
    if (rank_mod_prime(c, p) == c.v) return true;
  return incidence_rank(c) == c.v;
}

std::string format_configuration(const Configuration& c) {
  std::ostringstream out;
  out << c.v << ' ' << c.k << '\n';
  for (const auto& l : c.lines) {
    for (std::size_t i = 0; i < l.size(); ++i) out << (i ? " " : "") << l[i];
    out << '\n';
  }
  return out.str();
}

Configuration parse_configuration(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::uint32_t v = 0, k = 0;
  bool header = false;
  std::vector<Line> lines;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<long long> nums;
    long long x;
    while (ls >> x) nums.push_back(x);
    if (!ls.eof()) throw ParseError("non-numeric token in configuration text");
    if (nums.empty()) continue;
    if (!header) {
      if (nums.size() != 2 || nums[0] <= 0 || nums[1] <= 0) throw ParseError("header must be 'v k'");
      v = static_cast<std::uint32_t>(nums[0]);
      k = static_cast<std::uint32_t>(nums[1]);
      header = true;
      continue;
    }
    Line l;
    for (auto n : nums) {
      if (n < 0) throw ParseError("negative point index");
      l.push_back(static_cast<Point>(n));
    }
    lines.push_back(std::move(l));
  }
  if (!header) throw ParseError("empty configuration text");
  return Configuration(v, k, std::move(lines));
}

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FileNotFound(path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

Configuration read_configuration_file(const std::string& path) { return parse_configuration(slurp(path)); }

void write_configuration_file(const std::string& path, const Configuration& c) {
  std::ofstream out(path);
  if (!out) throw FileNotFound(path);
  out << format_configuration(c);
}

std::string configuration_to_json(const Configuration& c) {
  nlohmann::json j;
  j["v"] = c.v;
  j["k"] = c.k;
  j["lines"] = c.lines;
  return j.dump();
}

Configuration configuration_from_json(const std::string& text) {
  try {
    const auto j = nlohmann::json::parse(text);
    return Configuration(j.at("v").get<std::uint32_t>(), j.at("k").get<std::uint32_t>(),
                         j.at("lines").get<std::vector<Line>>());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("configuration JSON: ") + e.what());
  }
}

Configuration load_configuration(const std::string& path) {
  const std::string text = slurp(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return configuration_from_json(text);
  return parse_configuration(text);
}

}  // namespace srcfg
