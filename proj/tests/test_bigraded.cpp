#include <catch2/catch_amalgamated.hpp>

#include "morcoh/bigraded.hpp"
#include "test_util.hpp"

using namespace morcoh;

TEST_CASE("table entries accumulate and prune", "[bigraded]") {
  BigradedTable t;
  t.add(2, 1, 1, 3);
  t.add(2, 1, 1, 2);
  CHECK(t.dim_at(2, 1, 1) == 5);
  t.add(2, 1, 1, -5);
  CHECK(t.empty());
  CHECK(t.dim_at(2, 1, 1) == 0);
  CHECK_THROWS_AS(t.add(2, 1, 1, -1), math_error);
  CHECK_THROWS_AS(t.add(-1, 0, 0, 1), math_error);
}

TEST_CASE("unit table", "[bigraded]") {
  const BigradedTable u = BigradedTable::unit();
  CHECK(u.total_dim() == 1);
  CHECK(u.dim_at(0, 0, 0) == 1);
  CHECK(u.is_pure());
}

TEST_CASE("projective space tables", "[bigraded]") {
  CHECK(projective_space_table(-1).empty());
  const BigradedTable p2 = projective_space_table(2);
  CHECK(p2.total_dim() == 3);
  CHECK(p2.dim_at(0, 0, 0) == 1);
  CHECK(p2.dim_at(2, 1, 1) == 1);
  CHECK(p2.dim_at(4, 2, 2) == 1);
  CHECK(p2.is_pure());
  CHECK_THROWS_AS(projective_space_table(-2), input_error);
}

TEST_CASE("torus tables carry binomial dimensions", "[bigraded]") {
  CHECK(pic_table(0) == BigradedTable::unit());
  const BigradedTable q1 = pic_table(1);
  CHECK(q1.dim_at(0, 0, 0) == 1);
  CHECK(q1.dim_at(1, 1, 0) == 1);
  CHECK(q1.dim_at(1, 0, 1) == 1);
  CHECK(q1.dim_at(2, 1, 1) == 1);
  CHECK(q1.total_dim() == 4);
  const BigradedTable q2 = pic_table(2);
  CHECK(q2.dim_at(2, 1, 1) == 4);  // C(2,1) * C(2,1)
  CHECK(q2.dim_at(1, 1, 0) == 2);
  CHECK(q2.total_dim() == 16);
  CHECK(q2.is_pure());
}

TEST_CASE("tensor of two lines", "[bigraded]") {
  const BigradedTable p1 = projective_space_table(1);
  const BigradedTable prod = tensor(p1, p1);
  CHECK(prod.dim_at(0, 0, 0) == 1);
  CHECK(prod.dim_at(2, 1, 1) == 2);
  CHECK(prod.dim_at(4, 2, 2) == 1);
  CHECK(prod.total_dim() == 4);
}

TEST_CASE("tensor laws", "[bigraded]") {
  auto g = test_util::rng(101);
  for (int i = 0; i < 50; ++i) {
    const BigradedTable x = test_util::random_table(g, 5, 6, 4, 3);
    const BigradedTable y = test_util::random_table(g, 5, 6, 4, 3);
    const BigradedTable z = test_util::random_table(g, 4, 5, 3, 2);
    CHECK(tensor(x, BigradedTable::unit()) == x);
    CHECK(tensor(x, y) == tensor(y, x));
    CHECK(tensor(tensor(x, y), z) == tensor(x, tensor(y, z)));
    CHECK(tensor(x, y).total_dim() == x.total_dim() * y.total_dim());
    if (!x.empty() && !y.empty())
      CHECK(tensor(x, y).max_degree() == x.max_degree() + y.max_degree());
  }
}

TEST_CASE("tensor preserves purity", "[bigraded]") {
  auto g = test_util::rng(102);
  for (int i = 0; i < 30; ++i) {
    const BigradedTable x = test_util::random_pure_table(g, 5, 6, 3);
    const BigradedTable y = test_util::random_pure_table(g, 5, 6, 3);
    CHECK(tensor(x, y).is_pure());
  }
}

TEST_CASE("duality reindexing", "[bigraded]") {
  BigradedTable t;
  t.add(1, 1, 0, 2);
  t.add(2, 1, 1, 1);
  const BigradedTable d = dual_shift(t, 2);
  CHECK(d.dim_at(3, 1, 2) == 2);
  CHECK(d.dim_at(2, 1, 1) == 1);
  CHECK(d.total_dim() == t.total_dim());

  auto g = test_util::rng(103);
  for (int i = 0; i < 40; ++i) {
    const BigradedTable x = test_util::random_table(g, 6, 6, 3, 3);
    const long long n = std::max({x.max_degree(), 3LL});
    CHECK(dual_shift(dual_shift(x, n), n) == x);  // involution
  }
}

TEST_CASE("duality rejects oversized tables", "[bigraded]") {
  BigradedTable t;
  t.add(5, 2, 2, 1);
  CHECK_THROWS_WITH(dual_shift(t, 2), "table exceeds duality dimension");
  BigradedTable h;
  h.add(2, 2, 0, 1);  // degree fits 2n, Hodge index does not
  CHECK_THROWS_WITH(dual_shift(h, 1), "table exceeds duality dimension");
}

TEST_CASE("e-polynomial values", "[bigraded]") {
  const EPolynomial e = e_polynomial(projective_space_table(2));
  CHECK(e.coefficient(0, 0) == 1);
  CHECK(e.coefficient(1, 1) == 1);
  CHECK(e.coefficient(2, 2) == 1);
  CHECK(e.str() == "u^2 v^2 + u v + 1");

  BigradedTable odd;
  odd.add(1, 1, 0, 1);
  odd.add(1, 0, 1, 1);
  CHECK(e_polynomial(odd).coefficient(1, 0) == -1);
  CHECK(e_polynomial(odd).str() == "-u - v");
}

TEST_CASE("e-polynomial is multiplicative over tensor", "[bigraded]") {
  auto g = test_util::rng(104);
  for (int i = 0; i < 40; ++i) {
    const BigradedTable x = test_util::random_table(g, 5, 6, 4, 3);
    const BigradedTable y = test_util::random_table(g, 5, 6, 4, 3);
    CHECK(e_polynomial(tensor(x, y)) == e_polynomial(x) * e_polynomial(y));
  }
}

TEST_CASE("json round trip is canonical", "[bigraded]") {
  BigradedTable t;
  t.add(2, 0, 2, 1);
  t.add(0, 0, 0, 1);
  t.add(2, 2, 0, 1);
  t.add(2, 1, 1, 4);
  const nlohmann::ordered_json j = to_json(t);
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 4);
  // sorted by (deg, a, b)
  CHECK(j[0]["deg"] == 0);
  CHECK(j[1]["hodge"] == nlohmann::ordered_json({0, 2}));
  CHECK(j[2]["hodge"] == nlohmann::ordered_json({1, 1}));
  CHECK(j[2]["dim"] == 4);
  CHECK(j[3]["hodge"] == nlohmann::ordered_json({2, 0}));
  CHECK(table_from_json(j) == t);

  // order-insensitive parse, duplicate keys merge
  nlohmann::json dup = nlohmann::json::array();
  dup.push_back({{"deg", 2}, {"hodge", {1, 1}}, {"dim", 3}});
  dup.push_back({{"deg", 2}, {"hodge", {1, 1}}, {"dim", 1}});
  CHECK(table_from_json(dup).dim_at(2, 1, 1) == 4);
}

TEST_CASE("json parse validation", "[bigraded]") {
  CHECK_THROWS_AS(table_from_json(nlohmann::json::object()), input_error);
  nlohmann::json bad_dim = nlohmann::json::array();
  bad_dim.push_back({{"deg", 0}, {"hodge", {0, 0}}, {"dim", 0}});
  CHECK_THROWS_AS(table_from_json(bad_dim), input_error);
  nlohmann::json bad_deg = nlohmann::json::array();
  bad_deg.push_back({{"deg", -1}, {"hodge", {0, 0}}, {"dim", 1}});
  CHECK_THROWS_AS(table_from_json(bad_deg), input_error);
  nlohmann::json bad_hodge = nlohmann::json::array();
  bad_hodge.push_back({{"deg", 1}, {"hodge", {0}}, {"dim", 1}});
  CHECK_THROWS_AS(table_from_json(bad_hodge), input_error);
}
