#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <string>
#include <vector>

#include <json.hpp>

#include "lr3/chamber_complex.hpp"
#include "lr3/lr_oracle.hpp"

using namespace lr3;
using nlohmann::ordered_json;

namespace {

LRPoint ray(const char* label) { return kRays[static_cast<std::size_t>(ray_index(label))]; }

LRPoint add(const LRPoint& a, const LRPoint& b, Coord scale = 1) {
  LRPoint out = a;
  for (std::size_t i = 0; i < 6; ++i) out[i] += scale * b[i];
  return out;
}

}  // namespace

TEST_CASE("load_complex structure") {
  const ChamberComplex cc = load_complex();
  REQUIRE(cc.chambers().size() == 18);
  CHECK(cc.rays() == kRays);
  CHECK(ray("b") == LRPoint{2, 1, 2, 1, 3, 2});
  CHECK(cc.chamber_index("k1") == 0);
  CHECK(cc.chamber_index("k18") == 17);
  CHECK(cc.chamber_index("k19") == -1);

  for (const Chamber& ch : cc.chambers()) {
    // Ray-set decomposition: b, one of {c,f}, two from each 3-ray block.
    auto has = [&](const char* label) {
      const int idx = ray_index(label);
      return std::find(ch.ray_ids.begin(), ch.ray_ids.end(), idx) != ch.ray_ids.end();
    };
    CHECK(has("b"));
    CHECK((has("c") ? 1 : 0) + (has("f") ? 1 : 0) == 1);
    CHECK((has("d1") ? 1 : 0) + (has("e2") ? 1 : 0) + (has("g1") ? 1 : 0) == 2);
    CHECK((has("d2") ? 1 : 0) + (has("e1") ? 1 : 0) + (has("g2") ? 1 : 0) == 2);

    // Every formula takes the value 2 at b.
    CHECK(ch.formula(ray("b")) == 2);
  }
}

TEST_CASE("nu3") {
  CHECK(nu3({2, 1, 2, 1, 3, 2}) == 1);
  CHECK(nu3({0, 0, 0, 0, 0, 0}) == 0);
  CHECK(nu3({1, 1, 1, 1, 2, 1}) == 1);
}

TEST_CASE("chambers_containing") {
  const ChamberComplex cc = load_complex();

  // b spans a ray of every chamber.
  CHECK(cc.chambers_containing(ray("b")).size() == 18);

  CHECK(cc.chambers_containing({-1, 0, 0, 0, 0, 0}).empty());

  // Interior conic combination of k9's generators {b,c,d1,e2,e1,g2}.
  LRPoint p = add(ray("b"), ray("c"));
  p = add(p, ray("d1"), 2);
  p = add(p, ray("e2"));
  p = add(p, ray("e1"));
  p = add(p, ray("g2"), 3);
  CHECK(p == LRPoint{6, 5, 9, 3, 12, 7});
  CHECK(cc.chambers_containing(p) == std::vector<std::string>{"k9"});
}

TEST_CASE("evaluate_C pinned values") {
  const ChamberComplex cc = load_complex();
  CHECK(cc.evaluate_C({2, 1, 2, 1, 3, 2}) == 2);
  CHECK(cc.evaluate_C({0, 0, 0, 0, 0, 0}) == 1);
  CHECK(cc.evaluate_C({2, 0, 0, 0, 1, 1}) == 0);
  CHECK(cc.evaluate_C({1, 1, 1, 1, 2, 1}) == 1);
  CHECK(cc.evaluate_C({1, 0, 1, 0, 2, 0}) == 1);

  // Partition-inequality rejects.
  CHECK(cc.evaluate_C({-1, 0, 0, 0, 0, 0}) == 0);
  CHECK(cc.evaluate_C({0, 1, 0, 0, 1, 0}) == 0);
  CHECK(cc.evaluate_C({2, 1, 2, 1, 3, 0}) == 0);
  CHECK(cc.evaluate_C({1, 0, 1, 0, 3, 0}) == 0);
}

TEST_CASE("membership routes agree") {
  const ChamberComplex cc = load_complex();
  LRPoint p{};
  auto sweep = [&](auto&& self, std::size_t depth) -> void {
    if (depth == 6) {
      const auto ids = cc.chambers_containing(p);
      if (ids.empty()) {
        CHECK(cc.evaluate_C(p) == 0);
      } else {
        const int idx = cc.chamber_index(ids.front());
        CHECK(cc.evaluate_C(p) == cc.chambers()[static_cast<std::size_t>(idx)].formula(p));
      }
      return;
    }
    for (Coord v = 0; v <= 2; ++v) {
      p[depth] = v;
      self(self, depth + 1);
    }
  };
  sweep(sweep, 0);
}

TEST_CASE("formulas stay positive on the support") {
  const ChamberComplex cc = load_complex();
  for (const Chamber& ch : cc.chambers()) {
    std::array<Coord, 6> coeff{};
    for (;;) {
      LRPoint p{};
      for (std::size_t i = 0; i < 6; ++i)
        p = add(p, cc.rays()[static_cast<std::size_t>(ch.ray_ids[i])], coeff[i]);
      CHECK(cc.evaluate_C(p) >= 1);
      CHECK(cc.evaluate_C(p) == ch.formula(p));
      std::size_t pos = 0;
      while (pos < 6 && coeff[pos] == 2) coeff[pos++] = 0;
      if (pos == 6) break;
      ++coeff[pos];
    }
  }
}

TEST_CASE("cross_validate") {
  const ChamberComplex cc = load_complex();

  const auto tiny = cc.cross_validate(0);
  CHECK(tiny.points_checked == 1);
  CHECK(tiny.mismatches == 0);

  const auto rep = cc.cross_validate(4);
  CHECK(rep.points_checked == 15625);
  CHECK(rep.mismatches == 0);
}

TEST_CASE("json round trip") {
  const ChamberComplex cc = load_complex();
  const ordered_json doc = cc.to_json();

  const ChamberComplex back = ChamberComplex::from_json(doc);
  REQUIRE(back.chambers().size() == 18);
  CHECK(back.rays() == cc.rays());
  for (std::size_t i = 0; i < 18; ++i) {
    CHECK(back.chambers()[i].id == cc.chambers()[i].id);
    CHECK(back.chambers()[i].ray_ids == cc.chambers()[i].ray_ids);
    CHECK(back.chambers()[i].formula == cc.chambers()[i].formula);
  }
  CHECK(back.to_json() == doc);
  CHECK(back.evaluate_C({2, 1, 2, 1, 3, 2}) == 2);
}

TEST_CASE("corrupted documents are rejected") {
  const ordered_json doc = load_complex().to_json();
  REQUIRE(doc["chambers"][8]["id"] == "k9");
  REQUIRE(doc["chambers"][9]["id"] == "k10");

  SECTION("mutated ray vector") {
    ordered_json bad = doc;
    bad["rays"]["b"][0] = 5;
    CHECK_THROWS_AS(ChamberComplex::from_json(bad), DataCorrupt);
  }

  SECTION("missing ray") {
    ordered_json bad = doc;
    bad["rays"].erase("b");
    CHECK_THROWS_AS(ChamberComplex::from_json(bad), DataCorrupt);
  }

  SECTION("mutated formula constant") {
    ordered_json bad = doc;
    bad["chambers"][0]["formula"]["constant"] = 2;
    CHECK_THROWS_AS(ChamberComplex::from_json(bad), DataCorrupt);
  }

  SECTION("missing chamber") {
    ordered_json bad = doc;
    bad["chambers"].erase(17);
    CHECK_THROWS_AS(ChamberComplex::from_json(bad), DataCorrupt);
  }

  SECTION("repeated ray in one chamber") {
    ordered_json bad = doc;
    bad["chambers"][0]["rays"][1] = "b";
    CHECK_THROWS_AS(ChamberComplex::from_json(bad), DataCorrupt);
  }

  SECTION("unknown ray label") {
    ordered_json bad = doc;
    bad["chambers"][0]["rays"][1] = "z";
    CHECK_THROWS_AS(ChamberComplex::from_json(bad), DataCorrupt);
  }

  SECTION("two chambers with one ray set") {
    ordered_json bad = doc;
    bad["chambers"][1]["rays"] = bad["chambers"][0]["rays"];
    CHECK_THROWS_AS(ChamberComplex::from_json(bad), DataCorrupt);
  }

  SECTION("five rays only") {
    ordered_json bad = doc;
    bad["chambers"][0]["rays"].erase(5);
    CHECK_THROWS_AS(ChamberComplex::from_json(bad), DataCorrupt);
  }

  SECTION("formulas swapped between adjacent chambers") {
    // Both swapped formulas still hit 2 at b; the shared-face sampling is
    // what catches the exchange.
    ordered_json bad = doc;
    const ordered_json f9 = bad["chambers"][8]["formula"];
    bad["chambers"][8]["formula"] = bad["chambers"][9]["formula"];
    bad["chambers"][9]["formula"] = f9;
    CHECK_THROWS_AS(ChamberComplex::from_json(bad), DataCorrupt);
  }

  SECTION("structurally malformed document") {
    ordered_json bad = doc;
    bad["chambers"][0]["formula"].erase("coeffs");
    CHECK_THROWS_AS(ChamberComplex::from_json(bad), DataCorrupt);

    ordered_json empty;
    CHECK_THROWS_AS(ChamberComplex::from_json(empty), DataCorrupt);
  }
}
