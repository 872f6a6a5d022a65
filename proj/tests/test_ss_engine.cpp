#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "morcoh/oracles.hpp"
#include "morcoh/ss_engine.hpp"
#include "test_util.hpp"

using namespace morcoh;

namespace {

MapSpaceProblem p1_to_p1(long long d) {
  // X = P^1, target P^1; N_d = d + 1 sections, cutoff r_d = (d + 2) - 1.
  return MapSpaceProblem::create(projective_space_table(1), 1, 0, PNTarget{1},
                                 Int(d + 1), Int(d + 1), true);
}

BigradedTable curve_table(long long g) {
  BigradedTable t;
  t.add(0, 0, 0, 1);
  if (g > 0) {
    t.add(1, 1, 0, g);
    t.add(1, 0, 1, g);
  }
  t.add(2, 1, 1, 1);
  return t;
}

}  // namespace

TEST_CASE("problem validation", "[ss_engine]") {
  // impure table
  BigradedTable impure;
  impure.add(0, 0, 0, 1);
  impure.add(2, 1, 1, 1);
  impure.add(1, 1, 1, 1);
  CHECK_THROWS_AS(MapSpaceProblem::create(impure, 1, 0, PNTarget{1}, 1, 0, true),
                  input_error);
  // degree-1 dimension must match the irregularity
  CHECK_THROWS_AS(MapSpaceProblem::create(projective_space_table(1), 1, 1,
                                          PNTarget{1}, 1, 0, true),
                  input_error);
  // duality symmetry violation
  BigradedTable asym;
  asym.add(0, 0, 0, 1);
  asym.add(2, 2, 0, 1);
  asym.add(2, 1, 1, 1);
  asym.add(4, 2, 2, 1);
  CHECK_THROWS_AS(MapSpaceProblem::create(asym, 2, 0, PNTarget{1}, 1, 0, true),
                  input_error);
  // N_d must be positive
  CHECK_THROWS_AS(MapSpaceProblem::create(projective_space_table(1), 1, 0,
                                          PNTarget{1}, 0, 0, true),
                  input_error);
  // genus-2 curve table passes with q_irr = 2
  CHECK_NOTHROW(MapSpaceProblem::create(curve_table(2), 1, 2, PNTarget{1}, 4, 2, true));
}

TEST_CASE("degree-1 page to the line", "[ss_engine]") {
  const MapSpaceProblem prob = p1_to_p1(1);
  const E1Page page = assemble_e1(prob);
  REQUIRE(page.p_max == 3);
  CHECK(page.complete);
  REQUIRE(page.columns.size() == 4);

  CHECK(*page.column(0).table == projective_space_table(3));

  const BigradedTable& c1 = *page.column(1).table;
  CHECK(c1.dim_at(0, 0, 0) == 1);
  CHECK(c1.dim_at(2, 1, 1) == 2);
  CHECK(c1.dim_at(4, 2, 2) == 1);
  CHECK(c1.total_dim() == 4);

  CHECK(page.column(2).table->empty());
  CHECK(page.column(3).table->empty());
}

TEST_CASE("degree-2 page to the line", "[ss_engine]") {
  const E1Page page = assemble_e1(p1_to_p1(2));
  REQUIRE(page.p_max == 4);
  CHECK(page.complete);

  CHECK(*page.column(0).table == projective_space_table(5));
  CHECK(*page.column(1).table ==
        tensor(projective_space_table(1), projective_space_table(3)));

  const BigradedTable& c2 = *page.column(2).table;
  CHECK(c2.dim_at(2, 1, 1) == 1);
  CHECK(c2.dim_at(4, 2, 2) == 1);
  CHECK(c2.total_dim() == 2);

  CHECK(page.column(3).table->empty());
  CHECK(page.column(4).table->empty());
}

TEST_CASE("alternating sum gives the E-polynomial", "[ss_engine]") {
  const EPolynomial e1 = e_polynomial_of_mor(assemble_e1(p1_to_p1(1)));
  CHECK(e1 == EPolynomial::monomial(3, 3) - EPolynomial::monomial(1, 1));
  const EPolynomial e2 = e_polynomial_of_mor(assemble_e1(p1_to_p1(2)));
  CHECK(e2 == EPolynomial::monomial(5, 5) - EPolynomial::monomial(3, 3));
}

TEST_CASE("conservative cutoff renders the sum inconclusive", "[ss_engine]") {
  const E1Page page = assemble_e1(p1_to_p1(1), CutoffVariant::RMinusOne);
  CHECK(page.p_max == 1);
  CHECK_FALSE(page.complete);
  CHECK_THROWS_WITH(e_polynomial_of_mor(page),
                    "inconclusive: columns beyond validity cutoff not certified zero");
}

TEST_CASE("generic targets mirror the projective case when fed its fibers",
          "[ss_engine]") {
  const MapSpaceProblem pn = p1_to_p1(1);
  const E1Page expect = assemble_e1(pn);

  GenericYTarget gy;
  gy.N = 1;
  gy.ambient = projective_space_table(3);
  gy.fibers.emplace(1, projective_space_table(1));
  gy.fibers.emplace(2, BigradedTable());
  gy.fibers.emplace(3, BigradedTable());
  const MapSpaceProblem prob = MapSpaceProblem::create(
      projective_space_table(1), 1, 0, gy, Int(2), Int(2), true);
  const E1Page page = assemble_e1(prob);
  REQUIRE(page.p_max == expect.p_max);
  for (long long p = 0; p <= page.p_max; ++p)
    CHECK(*page.column(p).table == *expect.column(p).table);
  // completeness cannot be certified without the projective fiber structure
  CHECK_FALSE(page.complete);
  CHECK_THROWS_AS(e_polynomial_of_mor(page), inconclusive_error);
}

TEST_CASE("missing fiber data marks columns inconclusive", "[ss_engine]") {
  GenericYTarget gy;
  gy.N = 1;
  gy.ambient = projective_space_table(3);
  gy.fibers.emplace(1, projective_space_table(1));
  const MapSpaceProblem prob = MapSpaceProblem::create(
      projective_space_table(1), 1, 0, gy, Int(2), Int(2), true);
  const E1Page page = assemble_e1(prob);
  CHECK(page.column(0).table.has_value());
  CHECK(page.column(1).table.has_value());
  CHECK_FALSE(page.column(2).table.has_value());
  CHECK_FALSE(page.column(3).table.has_value());
  CHECK_THROWS_AS(weight_bounds(page), inconclusive_error);
}

TEST_CASE("columns vanish once the fiber degenerates and stay in the first quadrant",
          "[ss_engine]") {
  std::mt19937 g(401);
  std::uniform_int_distribution<long long> nd(1, 6);
  std::uniform_int_distribution<long long> Nd(1, 5);
  std::uniform_int_distribution<long long> rd(0, 4);
  std::uniform_int_distribution<long long> qd(0, 2);
  for (int i = 0; i < 40; ++i) {
    const long long q = qd(g);
    BigradedTable x;
    x.add(0, 0, 0, 1);
    x.add(2, 1, 1, 1);
    if (q > 0) {
      x.add(1, 1, 0, q);
      x.add(1, 0, 1, q);
    }
    const long long N = Nd(g);
    const Int n_d = nd(g);
    const MapSpaceProblem prob =
        MapSpaceProblem::create(x, 1, q, PNTarget{N}, n_d, Int(rd(g)), true);
    const E1Page page = assemble_e1(prob);
    for (const auto& col : page.columns) {
      REQUIRE(col.table.has_value());
      if (col.p >= 1 && (n_d - col.p) * (N + 1) - 1 < 0)
        CHECK(col.table->empty());
      for (const auto& [k, d] : col.table->entries()) {
        CHECK(k.deg >= 0);  // first quadrant: no negative rows
        CHECK(d > 0);
      }
    }
  }
}

TEST_CASE("stable window for the degree-2 line space", "[ss_engine]") {
  WarningSink w;
  const StableWindowReport rep = stable_window(p1_to_p1(2), w);
  CHECK(rep.p_hi == 4);
  CHECK(rep.mor_dim == 5);
  CHECK(rep.q_lo == 2);
  CHECK(rep.q_hi == 5);
  CHECK(rep.discriminant_codim == 1);
  REQUIRE(rep.level_codim_bounds.size() == 5);
  CHECK(rep.level_codim_bounds[1].first == 1);
  CHECK(rep.level_codim_bounds[1].second == 2);
  CHECK(rep.level_codim_bounds[4].second == 5);
  REQUIRE(w.size() == 1);
  CHECK(w[0].code == "window_ambiguity");

  GenericYTarget gy;
  gy.N = 1;
  gy.ambient = projective_space_table(3);
  const MapSpaceProblem generic = MapSpaceProblem::create(
      projective_space_table(1), 1, 0, gy, Int(2), Int(2), true);
  WarningSink w2;
  CHECK_THROWS_AS(stable_window(generic, w2), input_error);
}

TEST_CASE("weight brackets for the degree-1 line space", "[ss_engine]") {
  const auto brackets = weight_bounds(assemble_e1(p1_to_p1(1)));
  using K = std::pair<long long, long long>;
  REQUIRE(brackets.size() == 7);
  CHECK(brackets.at(K{0, 0}) == WeightBracket{0, 1});
  CHECK(brackets.at(K{1, 0}) == WeightBracket{0, 1});
  CHECK(brackets.at(K{2, 2}) == WeightBracket{0, 1});
  CHECK(brackets.at(K{3, 2}) == WeightBracket{1, 2});
  CHECK(brackets.at(K{4, 4}) == WeightBracket{0, 1});
  CHECK(brackets.at(K{5, 4}) == WeightBracket{0, 1});
  CHECK(brackets.at(K{6, 6}) == WeightBracket{1, 1});  // tight
}

TEST_CASE("brackets sandwich the complement-sequence answer", "[ss_engine]") {
  const auto brackets = weight_bounds(assemble_e1(p1_to_p1(1)));
  const BigradedTable truth = mor1_les_table(1);
  std::map<std::pair<long long, long long>, Int> actual;
  for (const auto& [k, d] : truth.entries()) actual[{k.deg, k.a + k.b}] += d;
  for (const auto& [key, br] : brackets) {
    const Int a = actual.count(key) ? actual.at(key) : Int(0);
    CHECK(br.lower <= a);
    CHECK(a <= br.upper);
  }
  // every nonzero actual dimension lies inside some reported bracket
  for (const auto& [key, a] : actual) {
    REQUIRE(brackets.count(key) == 1);
  }
}

TEST_CASE("first-differential ranks tighten the brackets", "[ss_engine]") {
  const E1Page page = assemble_e1(p1_to_p1(1));
  std::vector<D1Rank> ranks{{0, 2, 2, Int(1)}};
  const auto tight = weight_bounds(page, ranks);
  using K = std::pair<long long, long long>;
  CHECK(tight.count(K{2, 2}) == 0);  // cell cancelled completely
  CHECK(tight.at(K{3, 2}) == WeightBracket{1, 1});
  CHECK(tight.at(K{6, 6}) == WeightBracket{1, 1});

  // rank exceeding the available dimension is rejected
  std::vector<D1Rank> bad{{0, 2, 2, Int(2)}};
  CHECK_THROWS_AS(weight_bounds(page, bad), math_error);
  std::vector<D1Rank> nowhere{{0, 3, 2, Int(1)}};
  CHECK_THROWS_AS(weight_bounds(page, nowhere), math_error);
}

TEST_CASE("page serialization", "[ss_engine]") {
  const nlohmann::ordered_json j = to_json(assemble_e1(p1_to_p1(1)));
  CHECK(j["p_max"] == 3);
  CHECK(j["complete"] == true);
  CHECK(j["cutoff"] == "r+1");
  REQUIRE(j["cells"].size() == 4);
  CHECK(j["cells"][0]["p"] == 0);
  CHECK(j["cells"][0]["table"].size() == 4);
  CHECK(j["cells"][2]["table"].size() == 0);

  GenericYTarget gy;
  gy.N = 1;
  gy.ambient = projective_space_table(3);
  const E1Page partial = assemble_e1(MapSpaceProblem::create(
      projective_space_table(1), 1, 0, gy, Int(2), Int(2), true));
  const nlohmann::ordered_json pj = to_json(partial);
  CHECK(pj["cells"][1]["inconclusive"] == true);
}
