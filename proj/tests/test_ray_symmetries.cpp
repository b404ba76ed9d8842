#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <vector>

#include "lr3/ray_symmetries.hpp"
#include "lr3/rays.hpp"

using namespace lr3;

namespace {

std::size_t idx(const char* label) { return static_cast<std::size_t>(ray_index(label)); }

}  // namespace

TEST_CASE("permutation composition and cycles") {
  const GeneratorPerms g = generator_permutations();

  // Function composition: (p*q) applies q first.
  CHECK((g.x * g.s).image[idx("e1")] == g.x.image[g.s.image[idx("e1")]]);
  CHECK(g.s * g.s == RayPermutation::identity());
  CHECK(g.x * g.x.inverse() == RayPermutation::identity());
  CHECK(g.t.inverse() == g.t);

  CHECK(RayPermutation::identity().to_cycles().empty());
  CHECK(g.x.to_cycles() == std::vector<std::string>{"(e1,g2)"});
  CHECK(g.s.to_cycles() == std::vector<std::string>{"(d1,d2)", "(e1,e2)", "(g1,g2)"});

  for (const RayPermutation& p : {g.s, g.t, g.u, g.x, g.v, g.y})
    CHECK(RayPermutation::from_cycles(p.to_cycles()) == p);

  CHECK_THROWS_AS(RayPermutation::from_cycles({"(b,q)"}), std::invalid_argument);
  CHECK_THROWS_AS(RayPermutation::from_cycles({"(b,c)", "(c,f)"}), std::invalid_argument);
  CHECK_THROWS_AS(RayPermutation::from_cycles({"b,c"}), std::invalid_argument);
}

TEST_CASE("named generators act as expected") {
  const GeneratorPerms g = generator_permutations();

  CHECK(g.s.image[idx("d1")] == idx("d2"));
  CHECK(g.s.image[idx("e2")] == idx("e1"));
  CHECK(g.s.image[idx("b")] == idx("b"));
  CHECK(g.s.image[idx("c")] == idx("c"));

  CHECK(g.t.image[idx("c")] == idx("f"));
  CHECK(g.u.image[idx("d1")] == idx("g2"));
  CHECK(g.v.image[idx("c")] == idx("f"));
  CHECK(g.v.image[idx("d1")] == idx("d1"));
  CHECK(g.x.image[idx("e1")] == idx("g2"));
  CHECK(g.x.image[idx("g2")] == idx("e1"));
  CHECK(g.x.image[idx("d1")] == idx("d1"));
  CHECK(g.y.image[idx("e1")] == idx("d2"));
}

TEST_CASE("padded basis graph has the half-integer color pattern") {
  // Six basis vectors plus duplicates of the first three: projecting onto
  // the full space splits the weight evenly inside each duplicate pair.
  std::vector<Vec6> vecs;
  for (int i = 0; i < 6; ++i) {
    Vec6 e{};
    e[static_cast<std::size_t>(i)] = 1;
    vecs.push_back(e);
  }
  for (int i = 0; i < 3; ++i) vecs.push_back(vecs[static_cast<std::size_t>(i)]);

  std::vector<std::string> labels;
  for (int i = 0; i < 9; ++i) labels.push_back("p" + std::to_string(i));
  const ColoredGraph g = build_graph(vecs, labels);
  REQUIRE(g.size() == 9);
  CHECK(g.label(0) == "p0");
  for (std::size_t i = 0; i < 9; ++i)
    for (std::size_t j = 0; j < 9; ++j) {
      const Rat got = i == j ? g.vertex_color(i) : g.edge_color(i, j);
      Rat want = 0;
      const std::size_t a = i % 6, b = j % 6;
      if (a == b) want = a < 3 ? Rat(1, 2) : Rat(1);
      CHECK(got == want);
    }
}

TEST_CASE("graph construction is functorial under relabeling") {
  const std::vector<Vec6> rays(kRays.begin(), kRays.end());
  const ColoredGraph direct = build_graph(rays);
  CHECK(direct.label(0) == "b");
  CHECK(direct.label(8) == "g2");

  // Reversing the input order permutes colors consistently.
  std::vector<Vec6> reversed(rays.rbegin(), rays.rend());
  const ColoredGraph back = build_graph(reversed);
  for (std::size_t i = 0; i < 9; ++i) {
    CHECK(back.vertex_color(i) == direct.vertex_color(8 - i));
    for (std::size_t j = 0; j < 9; ++j)
      if (i != j) CHECK(back.edge_color(i, j) == direct.edge_color(8 - i, 8 - j));
  }
  CHECK(automorphisms(back).size() == automorphisms(direct).size());

  CHECK_THROWS_AS(build_graph(std::vector<Vec6>(3, Vec6{1, 0, 0, 0, 0, 0})), RankDeficient);
}

TEST_CASE("generic configurations are rigid") {
  // Basis vectors plus one prime-weighted vector: all 21 edge colors differ
  // (pairwise prime products are distinct), leaving only the identity.
  std::vector<Vec6> vecs;
  for (int i = 0; i < 6; ++i) {
    Vec6 e{};
    e[static_cast<std::size_t>(i)] = 1;
    vecs.push_back(e);
  }
  vecs.push_back({2, 3, 5, 7, 11, 13});

  const auto autos = automorphisms(build_graph(vecs));
  REQUIRE(autos.size() == 1);
  CHECK(autos[0] == RayPermutation::identity());
}

TEST_CASE("ray graph automorphisms") {
  const auto autos = automorphisms(build_graph(kRays));
  REQUIRE(autos.size() == 144);

  const GeneratorPerms g = generator_permutations();
  CHECK(std::binary_search(autos.begin(), autos.end(), RayPermutation::identity()));
  for (const RayPermutation& p : {g.s, g.t, g.u, g.x, g.v, g.y})
    CHECK(std::binary_search(autos.begin(), autos.end(), p));

  // b is fixed by the whole group; {c,f} and the two 3-ray blocks are the
  // other vertex orbits.
  const PermGroup group{autos};
  for (const RayPermutation& p : autos) CHECK(p.image[idx("b")] == idx("b"));
  CHECK(vertex_orbit(group, static_cast<int>(idx("b"))) == std::vector<int>{0});
  CHECK(vertex_orbit(group, static_cast<int>(idx("c"))) == std::vector<int>{1, 2});
  CHECK(vertex_orbit(group, static_cast<int>(idx("d1"))) == std::vector<int>{3, 4, 5, 6, 7, 8});

  // Spot-check closure under product and inverse.
  for (std::size_t i = 0; i < autos.size(); i += 17)
    for (std::size_t j = 0; j < autos.size(); j += 13) {
      CHECK(group.contains(autos[i] * autos[j]));
      CHECK(group.contains(autos[i].inverse()));
    }
}

TEST_CASE("closures of the named generators") {
  const GeneratorPerms g = generator_permutations();
  CHECK(closure({}).size() == 1);
  CHECK(closure({RayPermutation::identity()}).size() == 1);
  CHECK(closure({g.s}).size() == 2);
  CHECK(closure({g.s, g.t, g.u}).size() == 12);
  CHECK(closure({g.s, g.t, g.u, g.x}).size() == 144);

  const auto autos = automorphisms(build_graph(kRays));
  CHECK(closure({g.s, g.t, g.u, g.x}).elements == autos);
}

TEST_CASE("relations among the generators") {
  const RelationReport rep = verify_relations();
  CHECK(rep.ok());
  CHECK(rep.v_txsx_rightmost_first);
  CHECK(rep.y_usxsu_rightmost_first);
  // Both relations happen to hold in either composition order: t commutes
  // with xsx (disjoint supports) and usxsu is a palindrome.
  CHECK(rep.v_txsx_leftmost_first);
  CHECK(rep.y_usxsu_leftmost_first);

  // Negative control: dropping the trailing factor breaks the relation.
  const GeneratorPerms g = generator_permutations();
  CHECK(g.t * g.x * g.s != g.v);
  CHECK(g.s * g.x * g.t != g.v);
}

TEST_CASE("group equals the block stabilizer") {
  const auto stabilizer = block_stabilizer_permutations();
  REQUIRE(stabilizer.size() == 144);
  CHECK(stabilizer == automorphisms(build_graph(kRays)));
}
