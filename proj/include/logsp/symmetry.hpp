#pragma once

#include <string>
#include <vector>

#include "logsp/grid.hpp"

namespace logsp {

// Signed actions [A*u](x) = tau(A) u(A^{-1}x) of closed subgroups of O(2),
// with tau: G -> {-1,+1} a homomorphism. Three families are provided:
//   Radial            G = O(2), tau == 1
//   ReflectionOddEven G = {id, -id, reflect x1, reflect x2},
//                     tau(reflect x1) = -1, tau(reflect x2) = +1
//   Dihedral(k)       G generated by the pi/k rotation A, |G| = 2k,
//                     tau(A^j) = (-1)^j
enum class GroupKind { Radial, ReflectionOddEven, Dihedral };

struct GroupElement {
  double mat[2][2];  // the orthogonal matrix A
  int tau;           // character value, -1 or +1
};

struct SymmetryGroup {
  GroupKind kind = GroupKind::Radial;
  int k = 0;  // Dihedral order parameter; |G| = 2k

  static SymmetryGroup radial() { return {GroupKind::Radial, 0}; }
  static SymmetryGroup reflection_odd_even() { return {GroupKind::ReflectionOddEven, 0}; }
  static SymmetryGroup dihedral(int k);

  // "radial" | "oddeven" | "dihedral:<k>"
  static SymmetryGroup parse(const std::string& s);
  std::string name() const;

  // Full element list for the finite families; the four lattice-exact probe
  // elements for Radial.
  std::vector<GroupElement> elements() const;
  // Generating set used by the invariance residual.
  std::vector<GroupElement> generators() const;
  bool has_sign_flip() const;
};

// Averaging projector S_G u = (1/|G|) sum_A tau(A) u(A^{-1}x). Reflections
// and quarter-turn rotations act as exact index maps; other rotations use
// bilinear interpolation; Radial uses angular averaging of a radial profile.
Field symmetrize(const Field& u, const SymmetryGroup& g);

// max over generators of ||tau(A) u(A^{-1}.) - u||_2 / max(||u||_2, eps).
double invariance_residual(const Field& u, const SymmetryGroup& g);

// tau(A) u(A^{-1} x) for one element (exact index map when possible).
Field apply_element(const Field& u, const GroupElement& e);

struct SignChangeReport {
  double min_value = 0.0;
  double max_value = 0.0;
  bool both_signs = false;
  double threshold = 0.0;            // theta * max|u|
  double fixed_set_max_abs = 0.0;    // max |u| sampled on the fixed-point set
  double fixed_band_fraction = 0.0;  // fraction of fixed-set samples below threshold
  int fixed_samples = 0;
};

// Certifies the forced sign change of fields invariant under a group with a
// tau = -1 element: u must vanish on {Ax = x}. Rejects groups with tau == 1.
SignChangeReport sign_change_certificate(const Field& u, const SymmetryGroup& g);

}  // namespace logsp
