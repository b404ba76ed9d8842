#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "lr3/lr_oracle.hpp"
#include "lr3/matrix.hpp"
#include "lr3/rays.hpp"

// The piecewise-linear description of the rank-2 Littlewood-Richardson
// function C on Z^6: eighteen simplicial cones, each spanned by six of the
// nine rays and carrying a degree-one formula. C(p) is that formula's value
// on any cone containing p, and 0 outside the support.

namespace lr3 {

struct DataCorrupt : std::runtime_error {
  explicit DataCorrupt(const std::string& what) : std::runtime_error(what) {}
};

struct ValidationFailure : std::runtime_error {
  explicit ValidationFailure(const std::string& what, std::optional<LRPoint> p = {})
      : std::runtime_error(what), point(p) {}
  std::optional<LRPoint> point;
};

// Internal assertion: two chambers whose closed cones share a point carry
// formulas that agree there. Must never fire on validated data.
struct InconsistentFormulas : std::logic_error {
  explicit InconsistentFormulas(const std::string& what) : std::logic_error(what) {}
};

// Degree-one polynomial constant + <coeffs, p>.
struct AffineForm {
  Coord constant = 0;
  Vec6 coeffs{};

  Coord operator()(const LRPoint& p) const {
    Coord s = constant;
    for (int i = 0; i < 6; ++i) s += coeffs[i] * p[i];
    return s;
  }

  friend bool operator==(const AffineForm&, const AffineForm&) = default;
};

struct Chamber {
  std::string id;
  std::array<int, 6> ray_ids;  // ascending indices into the ray table
  AffineForm formula;
};

inline Coord nu3(const LRPoint& p) {
  return p[0] + p[1] + p[2] + p[3] - p[4] - p[5];
}

namespace detail {

struct ChamberRow {
  std::string_view id;
  std::array<std::string_view, 6> rays;
  Coord constant;
  Vec6 coeffs;
};

// Chamber table. Formulas are stored with l3 = m3 = 0 applied and n3
// eliminated via n3 = l1 + l2 + m1 + m2 - n1 - n2, as affine forms in
// (l1, l2, m1, m2, n1, n2). All eighteen forms take the value 2 at ray b.
inline constexpr std::array<ChamberRow, 18> kChamberTable = {{
    {"k1", {"b", "c", "d1", "e2", "d2", "e1"}, 1, {0, -1, 0, -1, 1, 0}},
    {"k2", {"b", "c", "d1", "g1", "d2", "g2"}, 1, {-1, -1, -1, -1, 1, 2}},
    {"k3", {"b", "c", "e2", "g1", "e1", "g2"}, 1, {1, 0, 1, 0, -1, 0}},
    {"k4", {"b", "f", "d1", "e2", "d2", "e1"}, 1, {0, 0, 0, 0, 1, -1}},
    {"k5", {"b", "f", "d1", "g1", "d2", "g2"}, 1, {-1, 0, -1, 0, 1, 1}},
    {"k6", {"b", "f", "e2", "g1", "e1", "g2"}, 1, {1, 1, 1, 1, -1, -1}},
    {"k7", {"b", "c", "d1", "g1", "d2", "e1"}, 1, {-1, -1, 0, -1, 1, 1}},
    {"k8", {"b", "c", "d1", "e2", "d2", "g2"}, 1, {0, -1, -1, -1, 1, 1}},
    {"k9", {"b", "c", "d1", "e2", "e1", "g2"}, 1, {1, -1, 0, 0, 0, 0}},
    {"k10", {"b", "c", "e2", "g1", "d2", "e1"}, 1, {0, 0, 1, -1, 0, 0}},
    {"k11", {"b", "c", "d1", "g1", "e1", "g2"}, 1, {0, -1, 0, 0, 0, 1}},
    {"k12", {"b", "c", "e2", "g1", "d2", "g2"}, 1, {0, 0, 0, -1, 0, 1}},
    {"k13", {"b", "f", "d1", "g1", "d2", "e1"}, 1, {-1, 0, 0, 0, 1, 0}},
    {"k14", {"b", "f", "d1", "e2", "d2", "g2"}, 1, {0, 0, -1, 0, 1, 0}},
    {"k15", {"b", "f", "d1", "g1", "e1", "g2"}, 1, {0, 0, 0, 1, 0, 0}},
    {"k16", {"b", "f", "e2", "g1", "d2", "g2"}, 1, {0, 1, 0, 0, 0, 0}},
    {"k17", {"b", "f", "d1", "e2", "e1", "g2"}, 1, {1, 0, 0, 1, 0, -1}},
    {"k18", {"b", "f", "e2", "g1", "d2", "e1"}, 1, {0, 1, 1, 0, 0, -1}},
}};

// The partition inequalities as functionals on (l1,...,n2) plus a constant
// multiple of nothing: row * p >= 0 encodes, in order, l1-l2, l2, m1-m2, m2,
// n1-n2, n2-n3, n3 with n3 eliminated.
inline constexpr std::array<Vec6, 7> kSupportFunctionals = {{
    {1, -1, 0, 0, 0, 0},
    {0, 1, 0, 0, 0, 0},
    {0, 0, 1, -1, 0, 0},
    {0, 0, 0, 1, 0, 0},
    {0, 0, 0, 0, 1, -1},
    {-1, -1, -1, -1, 1, 2},
    {1, 1, 1, 1, -1, -1},
}};

}  // namespace detail

class ChamberComplex;
ChamberComplex load_complex();

class ChamberComplex {
 public:
  static constexpr std::size_t kChamberCount = 18;

  const std::array<LRPoint, kRayCount>& rays() const { return rays_; }
  const std::vector<Chamber>& chambers() const { return chambers_; }

  int chamber_index(std::string_view id) const {
    for (std::size_t i = 0; i < chambers_.size(); ++i)
      if (chambers_[i].id == id) return static_cast<int>(i);
    return -1;
  }

  // Ids of every chamber whose closed cone contains p, decided by solving
  // the exact 6x6 system expressing p over the chamber's rays and checking
  // that all coordinates are >= 0.
  std::vector<std::string> chambers_containing(const LRPoint& p) const {
    std::vector<std::string> out;
    for (const Chamber& ch : chambers_) {
      RatMatrix m(6, 6);
      for (int col = 0; col < 6; ++col)
        for (int row = 0; row < 6; ++row)
          m(static_cast<std::size_t>(row), static_cast<std::size_t>(col)) =
              rays_[static_cast<std::size_t>(ch.ray_ids[static_cast<std::size_t>(col)])]
                  [static_cast<std::size_t>(row)];
      std::vector<Rat> rhs(6);
      for (int i = 0; i < 6; ++i) rhs[static_cast<std::size_t>(i)] = p[static_cast<std::size_t>(i)];
      const std::vector<Rat> x = solve_linear(m, rhs);
      if (std::all_of(x.begin(), x.end(), [](const Rat& v) { return v >= 0; }))
        out.push_back(ch.id);
    }
    return out;
  }

  // C(p): 0 outside the partition inequalities or outside every cone,
  // otherwise the common value of the containing chambers' formulas.
  // Membership uses the precomputed integer adjugates (the rational solve
  // with the common denominator factored out), so the whole call is integer
  // arithmetic. Checks every containing chamber and insists their formula
  // values agree.
  Coord evaluate_C(const LRPoint& p) const {
    for (const Vec6& f : detail::kSupportFunctionals) {
      Coord s = 0;
      for (int i = 0; i < 6; ++i) s += f[i] * p[i];
      if (s < 0) return 0;
    }
    bool found = false;
    Coord value = 0;
    for (std::size_t c = 0; c < chambers_.size(); ++c) {
      const auto& adj = adjugates_[c];
      bool inside = true;
      for (int i = 0; i < 6 && inside; ++i) {
        Coord s = 0;
        for (int j = 0; j < 6; ++j) s += adj[i][j] * p[j];
        inside = s >= 0;
      }
      if (!inside) continue;
      const Coord v = chambers_[c].formula(p);
      if (found && v != value)
        throw InconsistentFormulas("formulas disagree inside chamber overlap at " +
                                   point_str(p));
      found = true;
      value = v;
    }
    return found ? value : 0;
  }

  struct Report {
    long long points_checked = 0;
    long long mismatches = 0;
  };

  // Compares evaluate_C against the tableau count on the whole box
  // [0, bound]^6. Points whose coordinates fail the partition inequalities
  // must evaluate to 0; the rest must match lr_coefficient exactly.
  // Throws ValidationFailure at the first mismatch.
  Report cross_validate(Coord bound) const {
    Report rep;
    LRPoint p{};
    cross_validate_rec(bound, 0, p, rep);
    return rep;
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json doc;
    auto& rays = doc["rays"];
    for (std::size_t i = 0; i < kRayCount; ++i)
      rays[std::string(kRayLabels[i])] = rays_[i];
    auto& chambers = doc["chambers"];
    chambers = nlohmann::ordered_json::array();
    for (const Chamber& ch : chambers_) {
      nlohmann::ordered_json c;
      c["id"] = ch.id;
      auto labels = nlohmann::ordered_json::array();
      for (int rid : ch.ray_ids) labels.push_back(std::string(kRayLabels[static_cast<std::size_t>(rid)]));
      c["rays"] = std::move(labels);
      c["formula"]["constant"] = ch.formula.constant;
      c["formula"]["coeffs"] = ch.formula.coeffs;
      chambers.push_back(std::move(c));
    }
    return doc;
  }

  static ChamberComplex from_json(const nlohmann::ordered_json& doc) {
    ChamberComplex cc;
    try {
      const auto& rays = doc.at("rays");
      if (rays.size() != kRayCount)
        throw DataCorrupt("expected exactly 9 rays, got " + std::to_string(rays.size()));
      std::array<bool, kRayCount> seen{};
      for (auto it = rays.begin(); it != rays.end(); ++it) {
        const int idx = ray_index(it.key());
        if (idx < 0) throw DataCorrupt("unknown ray label: " + it.key());
        seen[static_cast<std::size_t>(idx)] = true;
        const auto& v = it.value();
        if (!v.is_array() || v.size() != 6)
          throw DataCorrupt("ray " + it.key() + " is not a 6-vector");
        for (int i = 0; i < 6; ++i)
          cc.rays_[static_cast<std::size_t>(idx)][static_cast<std::size_t>(i)] =
              v.at(static_cast<std::size_t>(i)).get<Coord>();
      }
      if (!std::all_of(seen.begin(), seen.end(), [](bool s) { return s; }))
        throw DataCorrupt("missing ray label");
      for (const auto& c : doc.at("chambers")) {
        Chamber ch;
        ch.id = c.at("id").get<std::string>();
        const auto& labels = c.at("rays");
        if (!labels.is_array() || labels.size() != 6)
          throw DataCorrupt("chamber " + ch.id + " does not list 6 rays");
        for (int i = 0; i < 6; ++i) {
          const int idx = ray_index(labels.at(static_cast<std::size_t>(i)).get<std::string>());
          if (idx < 0) throw DataCorrupt("chamber " + ch.id + " references unknown ray");
          ch.ray_ids[static_cast<std::size_t>(i)] = idx;
        }
        std::sort(ch.ray_ids.begin(), ch.ray_ids.end());
        ch.formula.constant = c.at("formula").at("constant").get<Coord>();
        const auto& coeffs = c.at("formula").at("coeffs");
        if (!coeffs.is_array() || coeffs.size() != 6)
          throw DataCorrupt("chamber " + ch.id + " formula needs 6 coefficients");
        for (int i = 0; i < 6; ++i)
          ch.formula.coeffs[static_cast<std::size_t>(i)] =
              coeffs.at(static_cast<std::size_t>(i)).get<Coord>();
        cc.chambers_.push_back(std::move(ch));
      }
    } catch (const nlohmann::json::exception& e) {
      throw DataCorrupt(std::string("malformed chamber document: ") + e.what());
    }
    cc.validate();
    cc.finalize();
    return cc;
  }

 private:
  friend ChamberComplex load_complex();

  ChamberComplex() = default;

  static std::string point_str(const LRPoint& p) {
    std::string s = "(";
    for (int i = 0; i < 6; ++i) {
      if (i) s += ",";
      s += std::to_string(p[static_cast<std::size_t>(i)]);
    }
    return s + ")";
  }

  // Structural invariants; violation means the data is corrupt, not that an
  // input point is bad.
  void validate() const {
    for (std::size_t i = 0; i < kRayCount; ++i)
      if (rays_[i] != kRays[i])
        throw DataCorrupt("ray " + std::string(kRayLabels[i]) + " deviates from the fixed table");
    if (chambers_.size() != kChamberCount)
      throw DataCorrupt("expected 18 chambers, got " + std::to_string(chambers_.size()));

    std::set<std::string> ids;
    std::set<std::array<int, 6>> raysets;
    for (const Chamber& ch : chambers_) {
      if (!ids.insert(ch.id).second) throw DataCorrupt("duplicate chamber id " + ch.id);
      for (int i = 0; i < 5; ++i)
        if (ch.ray_ids[static_cast<std::size_t>(i)] >= ch.ray_ids[static_cast<std::size_t>(i) + 1])
          throw DataCorrupt("chamber " + ch.id + " repeats a ray");
      if (!raysets.insert(ch.ray_ids).second)
        throw DataCorrupt("two chambers share the ray set of " + ch.id);

      // b, exactly one of {c, f}, two from each block.
      auto has = [&](int idx) {
        return std::find(ch.ray_ids.begin(), ch.ray_ids.end(), idx) != ch.ray_ids.end();
      };
      if (!has(0)) throw DataCorrupt("chamber " + ch.id + " misses ray b");
      if (static_cast<int>(has(1)) + static_cast<int>(has(2)) != 1)
        throw DataCorrupt("chamber " + ch.id + " must use exactly one of c, f");
      int one = 0, two = 0;
      for (int idx : kBlockOne) one += has(idx);
      for (int idx : kBlockTwo) two += has(idx);
      if (one != 2 || two != 2)
        throw DataCorrupt("chamber " + ch.id + " must use two rays from each block");

      // Simplicial: the six rays are linearly independent.
      RatMatrix m(6, 6);
      for (int col = 0; col < 6; ++col)
        for (int row = 0; row < 6; ++row)
          m(static_cast<std::size_t>(row), static_cast<std::size_t>(col)) =
              rays_[static_cast<std::size_t>(ch.ray_ids[static_cast<std::size_t>(col)])]
                  [static_cast<std::size_t>(row)];
      if (determinant(m) == 0)
        throw DataCorrupt("chamber " + ch.id + " rays are linearly dependent");

      // Every formula takes the value 2 at ray b.
      if (ch.formula(rays_[0]) != 2)
        throw DataCorrupt("chamber " + ch.id + " formula is not 2 at ray b");
    }

    // Each ray satisfies the partition inequalities; by linearity the whole
    // support cone then does, which justifies the fast reject in evaluate_C.
    for (std::size_t i = 0; i < kRayCount; ++i)
      for (const Vec6& f : detail::kSupportFunctionals) {
        Coord s = 0;
        for (int j = 0; j < 6; ++j) s += f[j] * rays_[i][j];
        if (s < 0)
          throw DataCorrupt("ray " + std::string(kRayLabels[i]) +
                            " violates the partition inequalities");
      }

    // Local consistency: on sampled points of the intersection of two closed
    // cones (conic combinations of the shared rays, coefficients 0..3) both
    // formulas must agree.
    for (std::size_t a = 0; a < chambers_.size(); ++a)
      for (std::size_t b = a + 1; b < chambers_.size(); ++b) {
        std::vector<int> shared;
        for (int idx : chambers_[a].ray_ids)
          if (std::find(chambers_[b].ray_ids.begin(), chambers_[b].ray_ids.end(), idx) !=
              chambers_[b].ray_ids.end())
            shared.push_back(idx);
        std::vector<int> coeff(shared.size(), 0);
        for (;;) {
          LRPoint p{};
          for (std::size_t i = 0; i < shared.size(); ++i)
            for (int j = 0; j < 6; ++j)
              p[static_cast<std::size_t>(j)] +=
                  coeff[i] * rays_[static_cast<std::size_t>(shared[i])][static_cast<std::size_t>(j)];
          if (chambers_[a].formula(p) != chambers_[b].formula(p))
            throw DataCorrupt("chambers " + chambers_[a].id + " and " + chambers_[b].id +
                              " disagree at shared point " + point_str(p));
          std::size_t pos = 0;
          while (pos < coeff.size() && coeff[pos] == 3) coeff[pos++] = 0;
          if (pos == coeff.size()) break;
          ++coeff[pos];
        }
      }
  }

  // Precomputes, per chamber, the adjugate of the ray-column matrix scaled so
  // the determinant is positive: p lies in the closed cone iff adj * p is
  // componentwise >= 0.
  void finalize() {
    adjugates_.resize(chambers_.size());
    for (std::size_t c = 0; c < chambers_.size(); ++c) {
      RatMatrix m(6, 6);
      for (int col = 0; col < 6; ++col)
        for (int row = 0; row < 6; ++row)
          m(static_cast<std::size_t>(row), static_cast<std::size_t>(col)) =
              rays_[static_cast<std::size_t>(chambers_[c].ray_ids[static_cast<std::size_t>(col)])]
                  [static_cast<std::size_t>(row)];
      const Rat det = determinant(m);
      const RatMatrix inv = inverse(m);
      for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
          Rat scaled = inv(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) *
                       (det < 0 ? -det : det);
          if (denominator(scaled) != 1)
            throw DataCorrupt("chamber " + chambers_[c].id + " adjugate is not integral");
          adjugates_[c][static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
              static_cast<Coord>(numerator(scaled));
        }
    }
  }

  void cross_validate_rec(Coord bound, int depth, LRPoint& p, Report& rep) const {
    if (depth == 6) {
      ++rep.points_checked;
      const Coord n3 = nu3(p);
      long long expected = 0;
      if (p[0] >= p[1] && p[1] >= 0 && p[2] >= p[3] && p[3] >= 0 && p[4] >= p[5] &&
          p[5] >= n3 && n3 >= 0) {
        expected = lr_coefficient(Partition{p[0], p[1]}, Partition{p[2], p[3]},
                                  Partition{p[4], p[5], n3});
      }
      const Coord got = evaluate_C(p);
      if (got != expected)
        throw ValidationFailure("chamber evaluation " + std::to_string(got) +
                                    " disagrees with tableau count " +
                                    std::to_string(expected) + " at " + point_str(p),
                                p);
      return;
    }
    for (Coord v = 0; v <= bound; ++v) {
      p[static_cast<std::size_t>(depth)] = v;
      cross_validate_rec(bound, depth + 1, p, rep);
    }
  }

  std::array<LRPoint, kRayCount> rays_{};
  std::vector<Chamber> chambers_;
  std::vector<std::array<std::array<Coord, 6>, 6>> adjugates_;
};

// Builds the complex from the embedded tables and runs the full validation,
// exactly as from_json does for external data.
inline ChamberComplex load_complex() {
  ChamberComplex cc;
  cc.rays_ = kRays;
  for (const auto& row : detail::kChamberTable) {
    Chamber ch;
    ch.id = std::string(row.id);
    for (int i = 0; i < 6; ++i)
      ch.ray_ids[static_cast<std::size_t>(i)] = ray_index(row.rays[static_cast<std::size_t>(i)]);
    std::sort(ch.ray_ids.begin(), ch.ray_ids.end());
    ch.formula = AffineForm{row.constant, row.coeffs};
    cc.chambers_.push_back(std::move(ch));
  }
  cc.validate();
  cc.finalize();
  return cc;
}

}  // namespace lr3
