#pragma once

#include <array>
#include <string>

#include <json.hpp>

#include "lr3/chamber_complex.hpp"
#include "lr3/lr_oracle.hpp"
#include "lr3/partition.hpp"

// Bridge between 3-row highest-weight triples and the 6 reduced coordinates.
// Subtracting the determinant twists (l3 from lam, m3 from mu, l3 + m3 from
// nu) leaves the coefficient unchanged, which is what reduce_to_sl3
// implements; on top of the linear symmetries of the reduced function there
// is one extra generator that trades the twists of lam and mu.

namespace lr3 {

struct GL3Triple {
  std::array<long long, 3> lam{}, mu{}, nu{};

  bool is_valid() const {
    auto part_ok = [](const std::array<long long, 3>& p) {
      return p[0] >= p[1] && p[1] >= p[2] && p[2] >= 0;
    };
    return part_ok(lam) && part_ok(mu) && part_ok(nu);
  }

  // Tableau-rule coefficient; 0 when a component is not a partition.
  long long coefficient() const {
    if (!is_valid()) return 0;
    return lr_coefficient(Partition{lam[0], lam[1], lam[2]},
                          Partition{mu[0], mu[1], mu[2]},
                          Partition{nu[0], nu[1], nu[2]});
  }

  friend bool operator==(const GL3Triple&, const GL3Triple&) = default;

  std::string to_string() const {
    auto one = [](const std::array<long long, 3>& p) {
      return "(" + std::to_string(p[0]) + "," + std::to_string(p[1]) + "," +
             std::to_string(p[2]) + ")";
    };
    return one(lam) + " " + one(mu) + " " + one(nu);
  }

  nlohmann::ordered_json to_json() const {
    return nlohmann::ordered_json::array({lam, mu, nu});
  }

  static GL3Triple from_json(const nlohmann::ordered_json& doc) {
    if (!doc.is_array() || doc.size() != 3)
      throw std::invalid_argument("triple document must hold 3 components");
    GL3Triple t;
    std::array<std::array<long long, 3>*, 3> dst = {&t.lam, &t.mu, &t.nu};
    for (std::size_t c = 0; c < 3; ++c) {
      const auto& comp = doc.at(c);
      if (!comp.is_array() || comp.size() != 3)
        throw std::invalid_argument("each component must hold 3 integers");
      for (std::size_t i = 0; i < 3; ++i) (*dst[c])[i] = comp.at(i).get<long long>();
    }
    return t;
  }
};

// Strips the determinant twists, landing in (l1,l2,m1,m2,n1,n2) with
// l3 = m3 = 0 implied. Preserves the coefficient.
inline LRPoint reduce_to_sl3(const GL3Triple& t) {
  return LRPoint{t.lam[0] - t.lam[2], t.lam[1] - t.lam[2],
                 t.mu[0] - t.mu[2],  t.mu[1] - t.mu[2],
                 t.nu[0] - t.lam[2] - t.mu[2], t.nu[1] - t.lam[2] - t.mu[2]};
}

// Shift lam down and mu up by m = l3 - m3, keep nu. An involution that
// preserves the coefficient; composed with the 144 linear symmetries it
// doubles the symmetry count.
inline GL3Triple gl3_extra_generator(const GL3Triple& t) {
  const long long m = t.lam[2] - t.mu[2];
  GL3Triple out;
  for (std::size_t i = 0; i < 3; ++i) {
    out.lam[i] = t.lam[i] - m;
    out.mu[i] = t.mu[i] + m;
    out.nu[i] = t.nu[i];
  }
  return out;
}

struct Gl3Report {
  long long triples_checked = 0;
  long long mismatches = 0;
};

// Sweeps every triple of 3-row partitions with parts <= bound and verifies
// the extra generator preserves the tableau-rule coefficient. Throws
// ValidationFailure at the first counterexample.
inline Gl3Report check_gl3_generator(long long bound) {
  Gl3Report rep;
  std::array<std::array<long long, 3>, 3> comp{};
  auto sweep = [&](auto&& self, std::size_t which) -> void {
    if (which == 3) {
      ++rep.triples_checked;
      const GL3Triple t{comp[0], comp[1], comp[2]};
      const long long base = t.coefficient();
      if (gl3_extra_generator(t).coefficient() != base)
        throw ValidationFailure("extra generator changes the coefficient at " + t.to_string());
      return;
    }
    for (long long a = 0; a <= bound; ++a)
      for (long long b = 0; b <= a; ++b)
        for (long long c = 0; c <= b; ++c) {
          comp[which] = {a, b, c};
          self(self, which + 1);
        }
  };
  sweep(sweep, 0);
  return rep;
}

}  // namespace lr3
