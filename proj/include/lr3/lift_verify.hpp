#pragma once

#include <array>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "lr3/chamber_complex.hpp"
#include "lr3/matrix.hpp"
#include "lr3/ray_symmetries.hpp"

// From ray permutations to certified linear symmetries of C. A candidate
// permutation p lifts to the unique linear F with F(r_i) = r_{p(i)}; the
// certificate then checks, chamber by chamber, that the formula of the image
// chamber is the original formula composed with F^(-1). A full set of valid
// certificates together with the graph-automorphism upper bound pins the
// symmetry group exactly.

namespace lr3 {

struct NoLift : std::runtime_error {
  explicit NoLift(const std::string& what) : std::runtime_error(what) {}
};

struct NotUnimodular : std::runtime_error {
  explicit NotUnimodular(const std::string& what) : std::runtime_error(what) {}
};

struct NotChamberMap : std::runtime_error {
  explicit NotChamberMap(const std::string& what) : std::runtime_error(what) {}
};

struct PolynomialMismatch : std::runtime_error {
  explicit PolynomialMismatch(const std::string& what) : std::runtime_error(what) {}
};

// Unimodular integer matrix acting on the 6 reduced weight coordinates.
// Unimodularity is enforced by the operations (lift, certify), not the type.
using LinearSymmetry = IntMat6;

// First six rays of the fixed scan order b,c,f,d1,e1,g1,d2,e2,g2 that are
// linearly independent. f = b + c, so the choice lands on b,c,d1,e1,g1,d2.
inline const std::array<int, 6>& lift_basis_indices() {
  static const std::array<int, 6> cached = [] {
    std::array<int, 6> out{};
    std::size_t chosen = 0;
    RatMatrix m(6, 6);
    for (int i = 0; i < static_cast<int>(kRayCount) && chosen < 6; ++i) {
      for (int row = 0; row < 6; ++row)
        m(chosen, static_cast<std::size_t>(row)) = kRays[static_cast<std::size_t>(i)][static_cast<std::size_t>(row)];
      RatMatrix probe(chosen + 1, 6);
      for (std::size_t r = 0; r <= chosen; ++r)
        for (std::size_t c = 0; c < 6; ++c) probe(r, c) = m(r, c);
      if (rank(probe) == chosen + 1) out[chosen++] = i;
    }
    if (chosen != 6) throw std::logic_error("ray table does not span");
    return out;
  }();
  return cached;
}

// The unique linear map with F(r_i) = r_{p(i)} for all nine rays, solved on
// the basis rays and verified on the remaining three. Throws NoLift when the
// leftover constraints are inconsistent, NotUnimodular when the result is
// not in GL_6(Z).
inline LinearSymmetry lift(const RayPermutation& p) {
  static const RatMatrix basis_inv = [] {
    RatMatrix basis(6, 6);
    for (int col = 0; col < 6; ++col)
      for (int row = 0; row < 6; ++row)
        basis(static_cast<std::size_t>(row), static_cast<std::size_t>(col)) =
            kRays[static_cast<std::size_t>(lift_basis_indices()[static_cast<std::size_t>(col)])]
                 [static_cast<std::size_t>(row)];
    return inverse(basis);
  }();

  RatMatrix images(6, 6);
  for (int col = 0; col < 6; ++col) {
    const std::size_t src = static_cast<std::size_t>(lift_basis_indices()[static_cast<std::size_t>(col)]);
    for (int row = 0; row < 6; ++row)
      images(static_cast<std::size_t>(row), static_cast<std::size_t>(col)) =
          kRays[p.image[src]][static_cast<std::size_t>(row)];
  }
  const RatMatrix f = images * basis_inv;

  for (std::size_t i = 0; i < kRayCount; ++i) {
    for (int row = 0; row < 6; ++row) {
      Rat s = 0;
      for (int col = 0; col < 6; ++col)
        s += f(static_cast<std::size_t>(row), static_cast<std::size_t>(col)) *
             kRays[i][static_cast<std::size_t>(col)];
      if (s != kRays[p.image[i]][static_cast<std::size_t>(row)])
        throw NoLift("no linear map sends ray " + std::string(kRayLabels[i]) + " to ray " +
                     std::string(kRayLabels[p.image[i]]) + " consistently");
    }
  }

  if (!is_integral(f)) throw NotUnimodular("lift is not an integer matrix");
  const IntMat6 fi = to_integral(f);
  if (!is_unimodular(fi)) throw NotUnimodular("lift determinant is not +-1");
  return fi;
}

// The permutation of the nine rays induced by F, or NotChamberMap when some
// image is not a ray (or two rays collapse).
inline RayPermutation induced_ray_permutation(const LinearSymmetry& f) {
  RayPermutation p;
  std::array<bool, kRayCount> hit{};
  for (std::size_t i = 0; i < kRayCount; ++i) {
    const Vec6 img = f.apply(kRays[i]);
    int found = -1;
    for (std::size_t j = 0; j < kRayCount; ++j)
      if (img == kRays[j]) {
        found = static_cast<int>(j);
        break;
      }
    if (found < 0)
      throw NotChamberMap("image of ray " + std::string(kRayLabels[i]) + " is not a ray");
    if (hit[static_cast<std::size_t>(found)])
      throw NotChamberMap("two rays collapse onto " +
                          std::string(kRayLabels[static_cast<std::size_t>(found)]));
    hit[static_cast<std::size_t>(found)] = true;
    p.image[i] = static_cast<std::uint8_t>(found);
  }
  return p;
}

// chamber_map[i] = index of the chamber whose ray set is the image of
// chamber i's ray set under F. NotChamberMap when an image set is not a
// chamber of the complex.
inline std::array<int, 18> induced_chamber_map(const LinearSymmetry& f,
                                               const ChamberComplex& cc) {
  const RayPermutation p = induced_ray_permutation(f);
  std::array<int, 18> out{};
  for (std::size_t i = 0; i < ChamberComplex::kChamberCount; ++i) {
    std::array<int, 6> img{};
    for (int k = 0; k < 6; ++k)
      img[static_cast<std::size_t>(k)] =
          p.image[static_cast<std::size_t>(cc.chambers()[i].ray_ids[static_cast<std::size_t>(k)])];
    std::sort(img.begin(), img.end());
    int found = -1;
    for (std::size_t j = 0; j < ChamberComplex::kChamberCount; ++j)
      if (cc.chambers()[j].ray_ids == img) {
        found = static_cast<int>(j);
        break;
      }
    if (found < 0)
      throw NotChamberMap("image of chamber " + cc.chambers()[i].id + " is not a chamber");
    out[i] = found;
  }
  return out;
}

struct SymmetryCertificate {
  LinearSymmetry map;
  std::array<int, 18> chamber_permutation{};  // one-line notation, 0-based
  std::array<bool, 18> polynomial_checks{};

  bool valid() const {
    for (bool ok : polynomial_checks)
      if (!ok) return false;
    return true;
  }

  std::vector<std::string> failing_chambers(const ChamberComplex& cc) const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < 18; ++i)
      if (!polynomial_checks[i]) out.push_back(cc.chambers()[i].id);
    return out;
  }
};

// Checks F as a symmetry of C: unimodular, maps chambers to chambers, and on
// every chamber the image formula equals the source formula composed with
// F^(-1). polynomial_checks records the per-chamber outcome.
inline SymmetryCertificate certify_symmetry(const LinearSymmetry& f,
                                            const ChamberComplex& cc) {
  if (!is_unimodular(f)) throw NotUnimodular("certificate requires |det| = 1");
  SymmetryCertificate cert;
  cert.map = f;
  cert.chamber_permutation = induced_chamber_map(f, cc);
  const IntMat6 f_inv = unimodular_inverse(f);
  for (std::size_t i = 0; i < ChamberComplex::kChamberCount; ++i) {
    const AffineForm& src = cc.chambers()[i].formula;
    AffineForm pulled;  // src composed with F^(-1)
    pulled.constant = src.constant;
    for (int j = 0; j < 6; ++j) {
      Coord s = 0;
      for (int r = 0; r < 6; ++r)
        s += src.coeffs[static_cast<std::size_t>(r)] *
             f_inv.a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
      pulled.coeffs[static_cast<std::size_t>(j)] = s;
    }
    cert.polynomial_checks[i] =
        cc.chambers()[static_cast<std::size_t>(cert.chamber_permutation[i])].formula == pulled;
  }
  return cert;
}

// The four distinguished symmetries, as matrices on (l1,l2,m1,m2,n1,n2).
// Coordinate maps, with n3 = l1+l2+m1+m2-n1-n2 already substituted:
//   S: (m1, m2, l1, l2, n1, n2)                       swap the 2-row inputs
//   T: (l1, l1-l2, m1, m1-m2, n1+n2-l2-m2, l1+m1-n2)  all three box complements
//   U: (2n1+n2-l1-l2-m1-m2, n1-n2, m1, m2, n1, n1-l2) first/third swap via complements
//   X: (l1+m1-n2, l2+m1-n2, n2, m2, n1, m1)           the e1<->g2 swap
struct KnownSymmetries {
  LinearSymmetry S, T, U, X;
};

inline KnownSymmetries known_symmetries() {
  KnownSymmetries k;
  k.S.a = {{{0, 0, 1, 0, 0, 0},
            {0, 0, 0, 1, 0, 0},
            {1, 0, 0, 0, 0, 0},
            {0, 1, 0, 0, 0, 0},
            {0, 0, 0, 0, 1, 0},
            {0, 0, 0, 0, 0, 1}}};
  k.T.a = {{{1, 0, 0, 0, 0, 0},
            {1, -1, 0, 0, 0, 0},
            {0, 0, 1, 0, 0, 0},
            {0, 0, 1, -1, 0, 0},
            {0, -1, 0, -1, 1, 1},
            {1, 0, 1, 0, 0, -1}}};
  k.U.a = {{{-1, -1, -1, -1, 2, 1},
            {0, 0, 0, 0, 1, -1},
            {0, 0, 1, 0, 0, 0},
            {0, 0, 0, 1, 0, 0},
            {0, 0, 0, 0, 1, 0},
            {0, -1, 0, 0, 1, 0}}};
  k.X.a = {{{1, 0, 1, 0, 0, -1},
            {0, 1, 1, 0, 0, -1},
            {0, 0, 0, 0, 0, 1},
            {0, 0, 0, 1, 0, 0},
            {0, 0, 0, 0, 1, 0},
            {0, 0, 1, 0, 0, 0}}};
  return k;
}

struct SymmetryGroupReport {
  std::vector<RayPermutation> permutations;       // sorted automorphisms
  std::vector<LinearSymmetry> elements;           // lifts, aligned with permutations
  std::vector<SymmetryCertificate> certificates;  // all valid
  bool closed_under_product = false;
  bool known_generate = false;       // closure of {s,t,u,x} is the whole group
  std::size_t known_subgroup_order = 0;  // closure of {s,t,u}
  std::vector<int> chamber_orbit;    // orbit of chamber k1, 0-based indices
  bool transitive_on_chambers = false;

  std::size_t order() const { return elements.size(); }
};

// Computes and certifies the full linear symmetry group of C. The graph
// automorphisms bound the group from above; a valid certificate for every
// lift shows the bound is attained. Throws PolynomialMismatch if any
// certificate fails (which would falsify the group claim).
inline SymmetryGroupReport full_symmetry_group(const ChamberComplex& cc) {
  SymmetryGroupReport rep;
  rep.permutations = automorphisms(build_graph(cc.rays()));
  for (const RayPermutation& p : rep.permutations) {
    const LinearSymmetry f = lift(p);
    SymmetryCertificate cert = certify_symmetry(f, cc);
    if (!cert.valid()) {
      throw PolynomialMismatch("lift of " +
                               (p.to_cycles().empty() ? std::string("()") : p.to_cycles()[0]) +
                               " fails on chamber " + cert.failing_chambers(cc)[0]);
    }
    rep.elements.push_back(f);
    rep.certificates.push_back(std::move(cert));
  }

  const std::set<LinearSymmetry> elem_set(rep.elements.begin(), rep.elements.end());
  rep.closed_under_product = elem_set.size() == rep.elements.size();
  for (const LinearSymmetry& a : rep.elements) {
    if (!rep.closed_under_product) break;
    for (const LinearSymmetry& b : rep.elements)
      if (!elem_set.count(a * b)) {
        rep.closed_under_product = false;
        break;
      }
  }

  const GeneratorPerms g = generator_permutations();
  const PermGroup from_known = closure({g.s, g.t, g.u, g.x});
  rep.known_generate = from_known.elements == rep.permutations;
  rep.known_subgroup_order = closure({g.s, g.t, g.u}).size();

  std::set<int> orb;
  for (const SymmetryCertificate& cert : rep.certificates)
    orb.insert(cert.chamber_permutation[0]);
  rep.chamber_orbit.assign(orb.begin(), orb.end());
  rep.transitive_on_chambers = orb.size() == ChamberComplex::kChamberCount;
  return rep;
}

// Orbit of a point under a list of symmetries, sorted and deduplicated.
inline std::vector<LRPoint> orbit_of_triple(const LRPoint& p,
                                            const std::vector<LinearSymmetry>& group) {
  std::set<LRPoint> out;
  for (const LinearSymmetry& f : group) out.insert(f.apply(p));
  return std::vector<LRPoint>(out.begin(), out.end());
}

inline nlohmann::ordered_json matrix_to_json(const LinearSymmetry& m) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (int i = 0; i < 6; ++i) rows.push_back(m.a[static_cast<std::size_t>(i)]);
  return rows;
}

inline LinearSymmetry matrix_from_json(const nlohmann::ordered_json& doc) {
  if (!doc.is_array() || doc.size() != 6)
    throw std::invalid_argument("matrix document must be 6 rows");
  LinearSymmetry m;
  for (std::size_t i = 0; i < 6; ++i) {
    const auto& row = doc.at(i);
    if (!row.is_array() || row.size() != 6)
      throw std::invalid_argument("matrix row must hold 6 integers");
    for (std::size_t j = 0; j < 6; ++j) m.a[i][j] = row.at(j).get<Coord>();
  }
  return m;
}

inline nlohmann::ordered_json certificate_to_json(const SymmetryCertificate& cert,
                                                  const ChamberComplex& cc) {
  nlohmann::ordered_json doc;
  doc["matrix"] = matrix_to_json(cert.map);
  auto perm = nlohmann::ordered_json::array();
  for (int idx : cert.chamber_permutation)
    perm.push_back(cc.chambers()[static_cast<std::size_t>(idx)].id);
  doc["chamber_permutation"] = std::move(perm);
  doc["polynomial_checks"] = cert.polynomial_checks;
  doc["valid"] = cert.valid();
  return doc;
}

inline nlohmann::ordered_json permutation_to_json(const RayPermutation& p) {
  return p.to_cycles();
}

}  // namespace lr3
