#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "distvar/distortion.h"
#include "distvar/models.h"
#include "oracles.h"

namespace distvar {
namespace {

using Fp = PrimeField;
using P = Polynomial<Fp>;

std::uint64_t eval_mod(const P& p, const std::vector<std::uint64_t>& x) {
  const std::uint64_t m = p.domain().modulus();
  std::uint64_t s = 0;
  for (const auto& t : p.terms()) {
    std::uint64_t v = t.coeff;
    for (int i = 0; i < p.num_vars(); ++i) {
      v = v * oracle::pow_mod(x[static_cast<std::size_t>(i)], static_cast<std::uint64_t>(t.monomial[i]), m) % m;
    }
    s = (s + v) % m;
  }
  return s;
}

P random_form(const Fp& fp, int n, int d, std::mt19937_64& rng, double density = 0.7) {
  std::uniform_int_distribution<std::int64_t> c(1, fp.modulus() - 1);
  std::bernoulli_distribution keep(density);
  std::vector<P::Term> ts;
  for (const auto& e : oracle::monomials_of_degree(n, d)) {
    const bool pure = std::count(e.begin(), e.end(), d) == 1;
    if (pure || keep(rng)) ts.push_back({Monomial::from_exponents(e), fp.from_int(c(rng))});
  }
  return P::from_terms(fp, n, std::move(ts));
}

DistortionVector random_u(int size, int max_entry, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> e(0, max_entry);
  for (;;) {
    std::vector<int> u(static_cast<std::size_t>(size));
    for (auto& x : u) x = e(rng);
    if (std::any_of(u.begin(), u.end(), [](int x) { return x > 0; })) return DistortionVector(u);
  }
}

// Up to sign, as text.
std::set<std::string> as_text_set(const std::vector<P>& ps, std::span<const std::string> names) {
  std::set<std::string> out;
  for (const auto& p : ps) {
    const auto a = to_string(p, names);
    const auto b = to_string(-p, names);
    out.insert(std::min(a, b));
  }
  return out;
}

std::set<std::string> parse_set(const Fp& fp, const std::vector<std::string>& texts, std::span<const std::string> names) {
  std::vector<P> ps;
  for (const auto& t : texts) ps.push_back(parse_polynomial(fp, t, names));
  return as_text_set(ps, names);
}

const DistortionVector kU({0, 0, 1, 0, 0, 1, 1, 1, 2});
const DistortionVector kV({0, 0, 1, 0, 0, 1, 0, 0, 1});

std::vector<std::string> u_names() { return scroll_coordinate_names(matrix_variable_names(), kU); }

TEST(DistortionVector, Basics) {
  EXPECT_EQ(kU.total(), 6);
  EXPECT_EQ(kU.ambient_size(), 15);
  EXPECT_EQ(DistortionVector::parse("1,2,3"), DistortionVector({1, 2, 3}));
  EXPECT_THROW(DistortionVector({0, 0}), RangeError);
  EXPECT_THROW(DistortionVector({1, -1}), RangeError);
  EXPECT_THROW(DistortionVector::parse("1,x"), ParseError);
}

TEST(ScrollMinors, HankelMatrixOfTheFundamentalMatrix) {
  const Fp fp;
  const auto names = u_names();
  const auto minors = scroll_minors(fp, kU);
  ASSERT_EQ(minors.size(), 15u);
  const std::vector<std::string> top{"x13", "x23", "x31", "x32", "x33", "y33"};
  const std::vector<std::string> bottom{"y13", "y23", "y31", "y32", "y33", "z33"};
  std::vector<std::string> expected;
  for (std::size_t p = 0; p < 6; ++p) {
    for (std::size_t q = p + 1; q < 6; ++q) expected.push_back(top[p] + "*" + bottom[q] + " - " + bottom[p] + "*" + top[q]);
  }
  EXPECT_EQ(as_text_set(minors, names), parse_set(fp, expected, names));
}

TEST(ScrollMinors, Counts) {
  const Fp fp;
  EXPECT_EQ(scroll_minors(fp, DistortionVector({1, 2, 3})).size(), 15u);
  const auto v = scroll_minors(fp, kV);
  EXPECT_EQ(v.size(), 3u);
  EXPECT_EQ(as_text_set(v, scroll_coordinate_names(matrix_variable_names(), kV)),
            parse_set(fp, {"x13*y23 - y13*x23", "x13*y33 - y13*x33", "x23*y33 - y23*x33"},
                      scroll_coordinate_names(matrix_variable_names(), kV)));
  EXPECT_TRUE(scroll_minors(fp, DistortionVector({1, 0})).empty());
}

TEST(DistortMonomial, FourteenDistortionsOfA3B2C2) {
  const DistortionVector u({1, 2, 3});
  const auto names = scroll_coordinate_names(default_variable_names(3), u);
  const std::vector<std::string> expected{
      "a0^3*b0^2*c0^2",    "a0^3*b0^2*c0*c1",   "a0^3*b0^2*c0*c2",   "a0^3*b0^2*c0*c3",   "a0^3*b0^2*c1*c3",
      "a0^3*b0^2*c2*c3",   "a0^3*b0^2*c3^2",    "a0^3*b0*b1*c3^2",   "a0^3*b0*b2*c3^2",   "a0^3*b1*b2*c3^2",
      "a0^3*b2^2*c3^2",    "a0^2*a1*b2^2*c3^2", "a0*a1^2*b2^2*c3^2", "a1^3*b2^2*c3^2"};
  const Monomial nu{3, 2, 2};
  ASSERT_EQ(monomial_weight(nu, u), 13);
  for (int i = 0; i <= 13; ++i) {
    EXPECT_EQ(format_monomial(distort_monomial(nu, i, u), names), expected[static_cast<std::size_t>(i)]) << i;
  }
  EXPECT_THROW(distort_monomial(nu, 14, u), RangeError);
  EXPECT_THROW(distort_monomial(nu, -1, u), RangeError);
}

TEST(DistortMonomial, ExtremesAndWeight) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> e(0, 3);
  for (int k = 0; k < 200; ++k) {
    const auto u = random_u(3, 3, rng);
    const Monomial nu{e(rng), e(rng), e(rng)};
    const auto weights = u.ambient_weights();
    const auto groups = u.ambient_groups();
    for (int i = 0; i <= monomial_weight(nu, u); ++i) {
      const auto m = distort_monomial(nu, i, u);
      std::int64_t w = 0;
      std::vector<int> per_group(3, 0);
      for (int c = 0; c < u.ambient_size(); ++c) {
        w += static_cast<std::int64_t>(weights[static_cast<std::size_t>(c)]) * m[c];
        per_group[static_cast<std::size_t>(groups[static_cast<std::size_t>(c)])] += m[c];
      }
      EXPECT_EQ(w, i);
      for (int j = 0; j < 3; ++j) EXPECT_EQ(per_group[static_cast<std::size_t>(j)], nu[j]);
    }
    Monomial first(u.ambient_size()), last(u.ambient_size());
    for (int j = 0; j < 3; ++j) {
      first.set(u.index(j, 0), nu[j]);
      last.set(u.index(j, u[j]), nu[j]);
    }
    EXPECT_EQ(distort_monomial(nu, 0, u), first);
    EXPECT_EQ(distort_monomial(nu, static_cast<int>(monomial_weight(nu, u)), u), last);
  }
}

TEST(ScrollProperties, SPairsReduceToZeroAndStandardMonomialsAreUnique) {
  const Fp fp;
  const auto order = TermOrder::grevlex();
  int checked = 0;
  for (int n = 1; n <= 3; ++n) {
    std::vector<int> u(static_cast<std::size_t>(n + 1), 0);
    std::function<void(std::size_t)> each = [&](std::size_t j) {
      if (j == u.size()) {
        if (std::all_of(u.begin(), u.end(), [](int x) { return x == 0; })) return;
        const DistortionVector dv(u);
        const auto minors = scroll_minors(fp, dv);
        GroebnerBasis<Fp> gb;
        gb.order = order;
        gb.num_vars = dv.ambient_size();
        for (const auto& m : minors) {
          gb.elements.push_back(m);
          gb.leading_monomials.push_back(leading_term(m, order).monomial);
        }
        for (std::size_t a = 0; a < minors.size(); ++a) {
          for (std::size_t b = a + 1; b < minors.size(); ++b) {
            ASSERT_TRUE(normal_form(s_polynomial(minors[a], minors[b], order), gb).is_zero()) << dv.to_string();
          }
        }
        for (int d = 0; d <= 3; ++d) {
          for (const auto& e : oracle::monomials_of_degree(n + 1, d)) {
            const Monomial nu = Monomial::from_exponents(e);
            for (int i = 0; i <= monomial_weight(nu, dv); ++i) {
              std::vector<Monomial> standard;
              for (const auto& e2 : oracle::scroll_fibre(e, i, u)) {
                const Monomial m = Monomial::from_exponents(e2);
                const bool reducible = std::any_of(gb.leading_monomials.begin(), gb.leading_monomials.end(),
                                                   [&](const Monomial& l) { return l.divides(m); });
                if (!reducible) standard.push_back(m);
              }
              ASSERT_EQ(standard.size(), 1u) << dv.to_string() << " i=" << i;
              EXPECT_EQ(standard.front(), distort_monomial(nu, i, dv));
              ++checked;
            }
          }
        }
        return;
      }
      for (int x = 0; x <= 3; ++x) {
        u[j] = x;
        each(j + 1);
      }
    };
    each(0);
  }
  EXPECT_GT(checked, 10000);
}

TEST(DistortPolynomial, DeterminantCubics) {
  const Fp fp;
  const auto names = u_names();
  const auto det = model_ideal<Fp>(ModelId::kF, fp).generators().front();
  EXPECT_EQ(as_text_set({distort_polynomial(det, 1, kU)}, names),
            parse_set(fp, {"x13*x22*y31 - x12*x23*y31 - x13*x21*y32 + x11*x23*y32 + x12*x21*y33 - x11*x22*y33"}, names));
  EXPECT_EQ(as_text_set({distort_polynomial(det, 2, kU)}, names),
            parse_set(fp, {"x22*y13*y31 - x12*y23*y31 - x21*y13*y32 + x11*y23*y32 + x12*x21*z33 - x11*x22*z33"}, names));
  EXPECT_EQ(to_string(distort_polynomial(det, 0, kU), names), to_string(det, matrix_variable_names()));
  EXPECT_THROW(distort_polynomial(det, 3, kU), RangeError);
}

TEST(DistortPolynomial, SubstitutionIdentity) {
  const Fp fp;
  const std::uint64_t p = fp.modulus();
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<std::uint64_t> coord(1, p - 1);
  for (int k = 0; k < 100; ++k) {
    const int n = std::uniform_int_distribution<int>(2, 4)(rng);
    const int d = std::uniform_int_distribution<int>(1, 4)(rng);
    const auto u = random_u(n, 3, rng);
    const auto poly = random_form(fp, n, d, rng, 0.5);
    const int i = std::uniform_int_distribution<int>(0, static_cast<int>(min_weight(poly, u)))(rng);
    const auto distorted = distort_polynomial(poly, i, u);
    for (int s = 0; s < 3; ++s) {
      std::vector<std::uint64_t> x(static_cast<std::size_t>(n));
      for (auto& v : x) v = coord(rng);
      const std::uint64_t l = coord(rng);
      const auto lhs = eval_mod(distorted, oracle::scroll_point(x, l, u.values(), p));
      const auto rhs = oracle::pow_mod(l, static_cast<std::uint64_t>(i), p) * eval_mod(poly, x) % p;
      EXPECT_EQ(lhs, rhs);
    }
    // Symbolically through the parametrization too.
    const auto images = scroll_parametrization(fp, u);
    const auto lhs = substitute<Fp>(distorted, images);
    std::vector<P> lift;
    for (int j = 0; j < n; ++j) lift.push_back(P::variable(fp, n + 1, j));
    const auto rhs = substitute<Fp>(poly, lift) * P::variable(fp, n + 1, n).pow(i);
    EXPECT_EQ(lhs, rhs);
  }
}

TEST(DistortionIdeal, DeterminantGivesFifteenQuadricsAndThreeCubics) {
  const Fp fp;
  const auto names = u_names();
  const auto gens = distortion_ideal_generators(model_ideal<Fp>(ModelId::kF, fp), kU);
  ASSERT_EQ(gens.size(), 18u);
  std::vector<P> cubics;
  for (const auto& g : gens.generators()) {
    if (g.total_degree() == 3) cubics.push_back(g);
  }
  EXPECT_EQ(as_text_set(cubics, names),
            parse_set(fp,
                      {"x11*x22*x33 - x11*x23*x32 - x12*x21*x33 + x12*x23*x31 + x13*x21*x32 - x13*x22*x31",
                       "x13*x22*y31 - x12*x23*y31 - x13*x21*y32 + x11*x23*y32 + x12*x21*y33 - x11*x22*y33",
                       "x22*y13*y31 - x12*y23*y31 - x21*y13*y32 + x11*y23*y32 + x12*x21*z33 - x11*x22*z33"},
                      names));
}

TEST(DistortionIdeal, PlaneCurveGivesDPlusOneForms) {
  const Fp fp;
  std::mt19937_64 rng(5);
  for (int d = 1; d <= 4; ++d) {
    Ideal<Fp> curve(fp, 3);
    curve.add(random_form(fp, 3, d, rng, 1.0));
    const auto gens = distortion_ideal_generators(curve, DistortionVector({1, 2, 3}));
    const auto minors = scroll_minors(fp, DistortionVector({1, 2, 3}));
    int distorted = 0;
    for (const auto& g : gens.generators()) {
      const bool minor = std::any_of(minors.begin(), minors.end(), [&](const P& m) { return g == m || g == -m; });
      if (!minor) {
        EXPECT_EQ(g.total_degree(), d);
        ++distorted;
      }
    }
    EXPECT_EQ(distorted, d + 1);
    EXPECT_EQ(static_cast<int>(gens.size()), 15 + d + 1) << "d=" << d;
  }
}

TEST(DistortionIdeal, HyperplaneGivesDistortedVariable) {
  const Fp fp;
  const DistortionVector u({2, 1, 1});
  Ideal<Fp> plane(fp, 3);
  plane.add(P::variable(fp, 3, 0));
  const auto gens = distortion_ideal_generators(plane, u);
  const auto names = scroll_coordinate_names(default_variable_names(3), u);
  std::set<std::string> linear;
  for (const auto& g : gens.generators()) {
    if (g.total_degree() == 1) linear.insert(to_string(g, names));
  }
  EXPECT_EQ(linear, (std::set<std::string>{"a0", "a1", "a2"}));
  EXPECT_EQ(gens.size(), scroll_minors(fp, u).size() + 3);
}

TEST(DistortionIdeal, GeneratorsVanishOnDistortedPoints) {
  // Points of E through [t]x R with entries scaled into the prime field is
  // awkward; use F instead: x = a b^T + c d^T has rank two.
  const Fp fp;
  const std::uint64_t p = fp.modulus();
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<std::uint64_t> coord(1, p - 1);
  const auto gens = distortion_ideal_generators(model_ideal<Fp>(ModelId::kF, fp), kU);
  for (int k = 0; k < 20; ++k) {
    std::vector<std::uint64_t> a(3), b(3), c(3), d(3), x(9);
    for (auto* v : {&a, &b, &c, &d}) {
      for (auto& e : *v) e = coord(rng);
    }
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) x[static_cast<std::size_t>(3 * i + j)] = (a[i] * b[j] + c[i] * d[j]) % p;
    }
    const auto pt = oracle::scroll_point(x, coord(rng), kU.values(), p);
    for (const auto& g : gens.generators()) EXPECT_EQ(eval_mod(g, pt), 0u);
  }
}

TEST(DegreeBound, TableValues) {
  EXPECT_EQ(degree_bound(3, 1, kU), 18);
  EXPECT_EQ(degree_bound(10, 3, kU), 60);
  EXPECT_EQ(degree_bound(15, 2, kU), 90);
  EXPECT_EQ(degree_bound(9, 2, kU), 54);
  EXPECT_EQ(degree_bound(3, 1, kV), 9);
  EXPECT_EQ(degree_bound(10, 3, kV), 30);
  EXPECT_EQ(degree_bound(15, 2, kV), 45);
  EXPECT_EQ(degree_bound(9, 2, kV), 27);
  EXPECT_EQ(degree_bound(1, 0, DistortionVector({1, 2, 3})), 6);
  EXPECT_THROW(degree_bound(3, 9, kU), RangeError);
}

TEST(DistortionDegree, ModelDegrees) {
  const Fp fp;
  EXPECT_EQ(distortion_degree(model_ideal<Fp>(ModelId::kF, fp), kU), 16);
  EXPECT_EQ(distortion_degree(model_ideal<Fp>(ModelId::kE, fp), kU), 52);
  EXPECT_EQ(distortion_degree(model_ideal<Fp>(ModelId::kGdoubleprime, fp), kV), 23);
}

TEST(DistortionDegree, ProjectiveSpaceGivesTotalWeight) {
  const Fp fp;
  std::mt19937_64 rng(21);
  for (int k = 0; k < 30; ++k) {
    const int n = std::uniform_int_distribution<int>(1, 4)(rng);
    const auto u = random_u(n, 4, rng);
    EXPECT_EQ(distortion_degree(Ideal<Fp>(fp, n), u), u.total());
  }
}

TEST(TropicalDegree, Examples) {
  const Fp fp;
  const DistortionVector u({1, 2, 3});
  const auto names = default_variable_names(3);
  EXPECT_EQ(tropical_hypersurface_degree(model_ideal<Fp>(ModelId::kF, fp).generators().front(), kU), 16);
  EXPECT_EQ(tropical_hypersurface_degree(parse_polynomial(fp, "x0 + x1 + x2", names), u), 5);
  EXPECT_EQ(tropical_hypersurface_degree(parse_polynomial(fp, "x2", names), u), 3);
  EXPECT_THROW(tropical_hypersurface_degree(P(fp, 3), u), RangeError);
}

TEST(TropicalDegree, AgreesWithDistortionDegreeOnTernaryForms) {
  const Fp fp;
  std::mt19937_64 rng(31);
  for (int k = 0; k < 100; ++k) {
    const int d = std::uniform_int_distribution<int>(1, 4)(rng);
    const auto psi = random_form(fp, 3, d, rng);
    const auto u = random_u(3, 4, rng);
    Ideal<Fp> ideal(fp, 3);
    ideal.add(psi);
    EXPECT_EQ(distortion_degree(ideal, u), tropical_hypersurface_degree(psi, u)) << to_string(psi, default_variable_names(3));
  }
}

TEST(BoundAttained, Examples) {
  const Fp fp;
  const DistortionVector u({1, 2, 3});
  const auto names = default_variable_names(3);
  Ideal<Fp> line(fp, 3);
  line.add(parse_polynomial(fp, "x0 + x1 + x2", names));
  EXPECT_TRUE(bound_attained(line, u));
  EXPECT_EQ(distortion_degree(line, u), degree_bound(1, 1, u));
  Ideal<Fp> point(fp, 3);
  point.add(parse_polynomial(fp, "x1", names));
  point.add(parse_polynomial(fp, "x2", names));
  EXPECT_FALSE(bound_attained(point, u));
  EXPECT_LT(distortion_degree(point, u), degree_bound(1, 2, u));
  EXPECT_TRUE(bound_attained(Ideal<Fp>(fp, 3), u));
}

TEST(BoundAttained, EquivalentToEqualityWithTheBound) {
  const Fp fp;
  std::mt19937_64 rng(41);
  auto check = [&](const Ideal<Fp>& ideal, const DistortionVector& u) {
    const auto h = hilbert_data(ideal);
    const int codim = ideal.num_vars() - 1 - h.projective_dimension;
    const auto bound = degree_bound(h.degree, codim, u);
    const auto deg = distortion_degree(ideal, u);
    EXPECT_LE(deg, bound);
    EXPECT_EQ(bound_attained(ideal, u), deg == bound) << u.to_string();
  };
  for (auto id : all_models()) {
    check(model_ideal<Fp>(id, fp), kU);
    check(model_ideal<Fp>(id, fp), kV);
  }
  const auto names = default_variable_names(3);
  for (int k = 0; k < 20; ++k) {
    Ideal<Fp> ideal(fp, 3);
    ideal.add(random_form(fp, 3, std::uniform_int_distribution<int>(1, 3)(rng), rng, 0.4));
    check(ideal, random_u(3, 3, rng));
  }
  Ideal<Fp> coordinate_point(fp, 3);
  coordinate_point.add(parse_polynomial(fp, "x1", names));
  coordinate_point.add(parse_polynomial(fp, "x0", names));
  check(coordinate_point, DistortionVector({1, 2, 3}));
}

}  // namespace
}  // namespace distvar
