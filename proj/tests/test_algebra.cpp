#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "srcfg/errors.hpp"
#include "srcfg/field.hpp"
#include "srcfg/group.hpp"
#include "srcfg/projective.hpp"

using namespace srcfg;

TEST_CASE("prime powers") {
  CHECK(prime_power(1) == std::nullopt);
  CHECK(prime_power(6) == std::nullopt);
  CHECK(prime_power(12) == std::nullopt);
  CHECK(*prime_power(2) == std::pair<std::uint32_t, std::uint32_t>{2, 1});
  CHECK(*prime_power(64) == std::pair<std::uint32_t, std::uint32_t>{2, 6});
  CHECK(*prime_power(81) == std::pair<std::uint32_t, std::uint32_t>{3, 4});
  CHECK(*prime_power(49) == std::pair<std::uint32_t, std::uint32_t>{7, 2});
  CHECK(is_prime(65521));
  CHECK_FALSE(is_prime(65519 * 3));
}

TEST_CASE("field axioms hold exhaustively") {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u, 25u, 27u, 32u}) {
    CAPTURE(q);
    const FiniteField f(q);
    CHECK(f.order() == q);
    std::set<FieldElement> powers;
    for (std::uint32_t i = 0; i + 1 < q; ++i) powers.insert(f.exp(i));
    CHECK(powers.size() == q - 1);
    CHECK(f.pow(f.primitive_element(), q - 1) == 1);
    for (FieldElement a = 0; a < q; ++a) {
      CHECK(f.add(a, 0) == a);
      CHECK(f.mul(a, 1) == a);
      CHECK(f.add(a, f.neg(a)) == 0);
      if (a != 0) {
        CHECK(f.mul(a, f.inv(a)) == 1);
        CHECK(f.exp(f.log(a)) == a);
      }
      for (FieldElement b = 0; b < q; ++b) {
        CHECK(f.add(a, b) == f.add(b, a));
        CHECK(f.mul(a, b) == f.mul(b, a));
        CHECK(f.sub(f.add(a, b), b) == a);
        for (FieldElement c = 0; c < q; ++c) {
          if (f.add(f.add(a, b), c) != f.add(a, f.add(b, c))) FAIL("add not associative");
          if (f.mul(f.mul(a, b), c) != f.mul(a, f.mul(b, c))) FAIL("mul not associative");
          if (f.mul(a, f.add(b, c)) != f.add(f.mul(a, b), f.mul(a, c))) FAIL("not distributive");
        }
      }
    }
  }
}

TEST_CASE("field moduli are the least irreducibles") {
  CHECK(FiniteField(4).modulus() == std::vector<std::uint32_t>{1, 1});
  CHECK(FiniteField(8).modulus() == std::vector<std::uint32_t>{1, 1, 0});
  CHECK(FiniteField(9).modulus() == std::vector<std::uint32_t>{1, 0});
}

TEST_CASE("squares in odd fields") {
  for (std::uint32_t q : {5u, 9u, 13u, 25u}) {
    const FiniteField f(q);
    std::set<FieldElement> squares;
    for (FieldElement a = 1; a < q; ++a) squares.insert(f.mul(a, a));
    for (FieldElement a = 1; a < q; ++a) CHECK(f.is_square(a) == (squares.count(a) == 1));
  }
}

TEST_CASE("field errors") {
  CHECK_THROWS_AS(FiniteField(6), NotPrimePower);
  CHECK_THROWS_AS(make_field(1), NotPrimePower);
  CHECK_THROWS_AS(FiniteField(1u << 17), InvalidSpec);
  CHECK_THROWS_AS(FiniteField(7).inv(0), InvalidSpec);
}

namespace {

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// Number of (k+1)-dimensional vector subspaces of F_q^(n+1), as a product.
double subspace_count(std::uint32_t n, std::uint32_t q, std::uint32_t dim) {
  double num = 1, den = 1;
  for (std::uint32_t i = 0; i <= dim; ++i) {
    num *= static_cast<double>(ipow(q, n + 1 - i) - 1);
    den *= static_cast<double>(ipow(q, i + 1) - 1);
  }
  return num / den;
}

}  // namespace

TEST_CASE("gaussian binomials") {
  CHECK(gaussian_binomial(3, 1, 2) == 7);
  CHECK(gaussian_binomial(4, 2, 2) == 35);
  CHECK(gaussian_binomial(5, 2, 2) == 155);
  CHECK(gaussian_binomial(5, 3, 2) == 155);
  CHECK(gaussian_binomial(4, 0, 3) == 1);
  CHECK(gaussian_binomial(3, 4, 3) == 0);
}

TEST_CASE("subspace enumeration matches gaussian binomials") {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u})
    for (std::uint32_t n = 1; n <= 5; ++n)
      for (std::uint32_t dim = 0; dim <= n; ++dim) {
        const double expect = subspace_count(n, q, dim);
        if (expect > 1e5) continue;
        CAPTURE(q);
        CAPTURE(n);
        CAPTURE(dim);
        CHECK(gaussian_binomial(n + 1, dim + 1, q) == static_cast<std::uint64_t>(expect + 0.5));
        const auto subs = pg_subspaces(n, q, dim);
        CHECK(subs.size() == static_cast<std::size_t>(expect + 0.5));
        CHECK(std::is_sorted(subs.begin(), subs.end()));
        CHECK(std::adjacent_find(subs.begin(), subs.end()) == subs.end());
      }
}

TEST_CASE("points of PG(2,3) by brute force") {
  // Normalised nonzero vectors of F_3^3, first nonzero coordinate 1.
  const FiniteField f(3);
  std::set<Subspace> seen;
  for (std::uint32_t a = 0; a < 3; ++a)
    for (std::uint32_t b = 0; b < 3; ++b)
      for (std::uint32_t c = 0; c < 3; ++c)
        if (a || b || c) seen.insert(span(f, 2, {a, b, c}));
  CHECK(seen.size() == 13);
  const auto pts = pg_subspaces(f, 2, 0);
  CHECK(std::set<Subspace>(pts.begin(), pts.end()) == seen);
}

TEST_CASE("containment is a partial order") {
  const FiniteField f(2);
  const auto pts = pg_subspaces(f, 3, 0);
  const auto lines = pg_subspaces(f, 3, 1);
  const auto planes = pg_subspaces(f, 3, 2);
  for (const auto& l : lines) {
    CHECK(subspace_contains(f, l, l));
    std::size_t on = 0;
    for (const auto& p : pts) on += subspace_contains(f, l, p);
    CHECK(on == 3);
  }
  for (const auto& a : lines)
    for (const auto& b : lines)
      if (subspace_contains(f, a, b) && subspace_contains(f, b, a)) CHECK(a == b);
  for (const auto& p : pts)
    for (const auto& l : lines)
      for (const auto& h : planes)
        if (subspace_contains(f, l, p) && subspace_contains(f, h, l)) CHECK(subspace_contains(f, h, p));
}

TEST_CASE("intersection dimensions and perp") {
  const FiniteField f(2);
  const auto lines = pg_subspaces(f, 3, 1);
  std::map<int, std::size_t> hist;
  for (const auto& a : lines)
    for (const auto& b : lines) ++hist[intersection_dim(f, a, b)];
  // 35 lines; each meets 1 + 3*6 lines (itself included) in at least a point.
  CHECK(hist[1] == 35);
  CHECK(hist[0] == 35 * 18);
  CHECK(hist[-1] == 35 * 16);

  const auto gram = symplectic_gram(f, 4);
  for (const auto& l : lines) {
    const auto lp = perp(f, l, gram);
    CHECK(lp.dim == 1);
    CHECK(perp(f, lp, gram) == l);
  }
  const auto pts = pg_subspaces(f, 3, 0);
  for (const auto& p : pts) {
    const auto h = perp(f, p, gram);
    CHECK(h.dim == 2);
    CHECK(subspace_contains(f, h, p));  // symplectic: every point is isotropic
  }
}

TEST_CASE("projective errors") {
  const FiniteField f(3);
  CHECK_THROWS_AS(span(f, 2, {}), DimensionOutOfRange);
  CHECK_THROWS_AS(span(f, 2, {1, 0, 0, 2, 0, 0}), DimensionOutOfRange);
  CHECK_THROWS_AS(pg_subspaces(f, 2, 3), DimensionOutOfRange);
  const auto a = pg_subspaces(f, 2, 0).front();
  const auto b = pg_subspaces(f, 3, 0).front();
  CHECK_THROWS_AS(subspace_contains(f, a, b), AmbientMismatch);
}

namespace {

void check_group_axioms(const Group& g) {
  const auto n = g.order();
  for (GroupElement a = 0; a < n; ++a) {
    REQUIRE(g.mul(a, g.identity()) == a);
    REQUIRE(g.mul(g.identity(), a) == a);
    REQUIRE(g.mul(a, g.inv(a)) == g.identity());
    REQUIRE(g.mul(g.inv(a), a) == g.identity());
  }
  std::size_t bad = 0;
  for (GroupElement a = 0; a < n; ++a)
    for (GroupElement b = 0; b < n; ++b) {
      const auto ab = g.mul(a, b);
      for (GroupElement c = 0; c < n; ++c) bad += g.mul(ab, c) != g.mul(a, g.mul(b, c));
    }
  CHECK(bad == 0);
}

}  // namespace

TEST_CASE("constructed groups are groups") {
  for (const char* spec : {"cyclic:13", "cyclic:1", "symmetric:3", "symmetric:4", "symmetric:5", "quaternion8",
                           "product(quaternion8,quaternion8)", "product(cyclic:4,symmetric:4)", "frobenius31_5"}) {
    CAPTURE(spec);
    check_group_axioms(make_group(parse_group_spec(spec)));
  }
}

TEST_CASE("group conventions") {
  const Group s3 = symmetric_group(3);
  CHECK(s3.order() == 6);
  CHECK(s3.name(s3.identity()) == "id");
  // (1,2) first, then (2,3).
  CHECK(s3.mul(*s3.find("(1,2)"), *s3.find("(2,3)")) == *s3.find("(1,3,2)"));
  CHECK(s3.find("( 1, 2 )") == s3.find("(1,2)"));
  CHECK_FALSE(s3.is_abelian());

  const Group q8 = quaternion_group();
  CHECK(q8.mul(*q8.find("i"), *q8.find("j")) == *q8.find("k"));
  CHECK(q8.mul(*q8.find("j"), *q8.find("i")) == *q8.find("-k"));
  CHECK(q8.mul(*q8.find("i"), *q8.find("i")) == *q8.find("-1"));

  const Group fr = frobenius_31_5();
  CHECK(fr.order() == 155);
  const auto f = *fr.find("f"), g = *fr.find("g");
  GroupElement x = fr.identity();
  for (int i = 0; i < 31; ++i) x = fr.mul(x, f);
  CHECK(x == fr.identity());
  CHECK(fr.mul(fr.mul(g, g), fr.mul(g, fr.mul(g, g))) == fr.identity());
  // f then g: x -> 2(x+1); g then f^2: x -> 2x + 2.
  CHECK(fr.mul(f, g) == fr.mul(g, *fr.find("f^2")));

  const Group z2 = cyclic_group(2), z3 = cyclic_group(3);
  const Group p = direct_product(z2, z3);
  CHECK(p.name(1 * 3 + 2) == "(1,2)");
  CHECK(p.mul(1 * 3 + 2, 1 * 3 + 2) == 0 * 3 + 1);
  CHECK(p.is_abelian());
}

TEST_CASE("cayley tables round trip and reject bad input") {
  const Group s3 = symmetric_group(3);
  const Group back = parse_cayley_table(format_cayley_table(s3));
  CHECK(back.table() == s3.table());
  CHECK(back.names() == s3.names());

  CHECK_THROWS_AS(parse_cayley_table("2\n0 1\n0 1\n"), InvalidCayleyTable);
  CHECK_THROWS_AS(parse_cayley_table("2\n0 1\n"), InvalidCayleyTable);
  CHECK_THROWS_AS(parse_cayley_table(""), InvalidCayleyTable);
  // A Latin square with identity 0 that is not associative (order-5 loop).
  CHECK_THROWS_AS(parse_cayley_table("5\n0 1 2 3 4\n1 0 3 4 2\n2 4 0 1 3\n3 2 4 0 1\n4 3 1 2 0\n"),
                  InvalidCayleyTable);
  CHECK_THROWS_AS(read_cayley_file("/nonexistent/table.txt"), FileNotFound);
}

TEST_CASE("group specs") {
  CHECK(make_group(parse_group_spec("product(cyclic:4, symmetric:4)")).order() == 96);
  CHECK_THROWS_AS(parse_group_spec("cyclic:"), InvalidSpec);
  CHECK_THROWS_AS(parse_group_spec("product(cyclic:2"), InvalidSpec);
  CHECK_THROWS_AS(parse_group_spec("dihedral:5"), InvalidSpec);
  CHECK_THROWS_AS(parse_group_spec("cyclic:4x"), InvalidSpec);
  CHECK_THROWS_AS(symmetric_group(7), InvalidSpec);
  CHECK_THROWS_AS(cyclic_group(0), InvalidSpec);
}

TEST_CASE("permutation parsing") {
  CHECK(parse_permutation("id", 3) == std::vector<std::uint32_t>{0, 1, 2});
  CHECK(parse_permutation("(1,3)(2,4)", 4) == std::vector<std::uint32_t>{2, 3, 0, 1});
  CHECK(parse_permutation("(1,2,3)", 3) == std::vector<std::uint32_t>{1, 2, 0});
  CHECK_THROWS_AS(parse_permutation("(1,5)", 4), ParseError);
  CHECK_THROWS_AS(parse_permutation("(1,2", 4), ParseError);
}
