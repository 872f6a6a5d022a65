#include <catch2/catch_amalgamated.hpp>

#include "morcoh/chow.hpp"

using namespace morcoh;

TEST_CASE("projective space presets carry the right Todd class", "[chow]") {
  const RingWithTodd p1 = preset_projective_space(1);
  CHECK(p1.todd.coords.at(p1.ring.index_of("1")) == 1);
  CHECK(p1.todd.coords.at(p1.ring.index_of("h")) == 1);  // (h/(1-e^-h))^2 = 1 + h

  const RingWithTodd p2 = preset_projective_space(2);
  CHECK(p2.todd.coords.at(p2.ring.index_of("h")) == Rat(3, 2));
  CHECK(p2.todd.coords.at(p2.ring.index_of("h^2")) == 1);  // chi(O) = 1
}

TEST_CASE("section counts on projective space", "[chow]") {
  for (long long n = 1; n <= 4; ++n) {
    const RingWithTodd rt = preset_projective_space(n);
    for (long long d = 0; d <= 10; ++d) {
      RingElement c1;
      c1.set(rt.ring.index_of("h"), Rat(d));
      CHECK(hrr_sections(rt.ring, c1, rt.todd) == binomial(Int(n + d), n));
    }
  }
}

TEST_CASE("section counts on curves", "[chow]") {
  // g = 2, d = 5: chi = d + 1 - g = 4
  const RingWithTodd g2 = preset_curve(2);
  RingElement c1;
  c1.set(g2.ring.index_of("pt"), Rat(5));
  CHECK(hrr_sections(g2.ring, c1, g2.todd) == 4);

  for (long long g = 0; g <= 3; ++g) {
    const RingWithTodd rt = preset_curve(g);
    for (long long d = 0; d <= 10; ++d) {
      RingElement e;
      e.set(rt.ring.index_of("pt"), Rat(d));
      CHECK(hrr_euler_characteristic(rt.ring, e, rt.todd) == d + 1 - g);
    }
  }
}

TEST_CASE("negative euler characteristics are not section counts", "[chow]") {
  const RingWithTodd g2 = preset_curve(2);
  const RingElement zero;  // O: chi = 1 - g = -1
  CHECK(hrr_euler_characteristic(g2.ring, zero, g2.todd) == -1);
  CHECK_THROWS_WITH(hrr_sections(g2.ring, zero, g2.todd), "class not acyclic/effective");
}

TEST_CASE("non-integral integrals expose corrupted data", "[chow]") {
  const RingWithTodd p2 = preset_projective_space(2);
  RingElement bad_todd;  // 1 + h + pt instead of 1 + (3/2) h + pt
  bad_todd.set(p2.ring.index_of("1"), Rat(1));
  bad_todd.set(p2.ring.index_of("h"), Rat(1));
  bad_todd.set(p2.ring.index_of("h^2"), Rat(1));
  RingElement c1;
  c1.set(p2.ring.index_of("h"), Rat(1));
  CHECK(hrr_integral(p2.ring, c1, bad_todd) == Rat(5, 2));
  CHECK_THROWS_WITH(hrr_euler_characteristic(p2.ring, c1, bad_todd),
                    "inconsistent ring/Todd data");
}

TEST_CASE("chern character on the plane", "[chow]") {
  const RingWithTodd p2 = preset_projective_space(2);
  RingElement c1;
  c1.set(p2.ring.index_of("h"), Rat(2));
  const RingElement ch = chern_character(p2.ring, c1);
  CHECK(ch.coords.at(p2.ring.index_of("1")) == 1);
  CHECK(ch.coords.at(p2.ring.index_of("h")) == 2);
  CHECK(ch.coords.at(p2.ring.index_of("h^2")) == 2);  // 2^2 / 2!
  CHECK(chern_character(p2.ring, RingElement{}) == p2.ring.unit());
  CHECK_THROWS_AS(chern_character(p2.ring, p2.ring.unit()), input_error);
}

TEST_CASE("products multiply section counts", "[chow]") {
  const RingWithTodd rt = preset_product_of_projective_spaces(1, 2);
  for (long long d1 = 0; d1 <= 3; ++d1)
    for (long long d2 = 0; d2 <= 3; ++d2) {
      RingElement c1;
      c1.set(rt.ring.index_of("h1"), Rat(d1));
      c1.set(rt.ring.index_of("h2"), Rat(d2));
      CHECK(hrr_sections(rt.ring, c1, rt.todd) ==
            Int(d1 + 1) * binomial(Int(d2 + 2), 2));
    }
}

TEST_CASE("presentation validation", "[chow]") {
  using Mult = RingPresentation::MultEntry;
  // missing product entry
  CHECK_THROWS_AS(RingPresentation::create(2, {{"1"}, {"x"}, {"z"}}, {},
                                           {{"z", Rat(1)}}),
                  input_error);
  // product landing in the wrong codimension
  CHECK_THROWS_AS(RingPresentation::create(2, {{"1"}, {"x"}, {"z"}},
                                           {Mult{"x", "x", {{"x", Rat(1)}}}},
                                           {{"z", Rat(1)}}),
                  input_error);
  // duplicate basis name
  CHECK_THROWS_AS(RingPresentation::create(1, {{"1"}, {"1"}}, {}, {{"1", Rat(1)}}),
                  input_error);
  // associativity violation: (x*x)*y = u*y = t but x*(x*y) = 0
  CHECK_THROWS_AS(
      RingPresentation::create(3, {{"1"}, {"x", "y"}, {"u"}, {"t"}},
                               {Mult{"x", "x", {{"u", Rat(1)}}},
                                Mult{"x", "y", {}},
                                Mult{"y", "y", {}},
                                Mult{"x", "u", {{"t", Rat(1)}}},
                                Mult{"y", "u", {{"t", Rat(1)}}}},
                               {{"t", Rat(1)}}),
      input_error);
  // degree functional on a non-top class
  CHECK_THROWS_AS(RingPresentation::create(1, {{"1"}, {"pt"}},
                                           {Mult{"pt", "pt", {}}}, {{"1", Rat(1)}}),
                  input_error);
}

TEST_CASE("presentation json round trip", "[chow]") {
  const RingWithTodd rt = preset_product_of_projective_spaces(1, 1);
  const nlohmann::ordered_json j = to_json(rt.ring);
  const RingPresentation back = ring_from_json(j);
  CHECK(back.dim() == rt.ring.dim());
  CHECK(back.basis_size() == rt.ring.basis_size());
  for (int i = 0; i < back.basis_size(); ++i)
    for (int k = 0; k < back.basis_size(); ++k)
      CHECK(back.basis_product(i, k) == rt.ring.basis_product(i, k));

  const RingElement todd_back = element_from_json(back, element_to_json(rt.ring, rt.todd));
  CHECK(todd_back == rt.todd);
}

TEST_CASE("rational string forms", "[chow]") {
  CHECK(rat_to_string(Rat(3, 2)) == "3/2");
  CHECK(rat_to_string(Rat(-7)) == "-7");
  CHECK(rat_from_string("3/2") == Rat(3, 2));
  CHECK(rat_from_string("-7") == Rat(-7));
  CHECK(rat_from_string("-4/6") == Rat(-2, 3));
  CHECK_THROWS_AS(rat_from_string("1/0"), input_error);
  CHECK_THROWS_AS(rat_from_string("x"), input_error);
}
