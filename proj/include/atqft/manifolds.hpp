#pragma once

// Closed oriented 3-manifolds given by integral surgery on framed links,
// recorded as their symmetric linking matrices.

#include <string>
#include <vector>

#include "atqft/homology.hpp"
#include "atqft/intlinalg.hpp"
#include "atqft/linking.hpp"

namespace atqft {

class Manifold {
 public:
  /// Throws InvalidArgumentError for an empty name, NonSquareError or
  /// NonSymmetricError for a bad presentation.
  Manifold(std::string name, IntMatrix presentation, int orientation = 1);

  const std::string& name() const { return name_; }
  /// Catalog matrix, before the orientation is applied.
  const IntMatrix& presentation() const { return presentation_; }
  int orientation() const { return orientation_; }
  /// The presentation with the orientation applied (negated when reversed).
  IntMatrix linking_matrix() const;
  Manifold reversed() const;

 private:
  std::string name_;
  IntMatrix presentation_;
  int orientation_ = 1;
};

Manifold sphere3();
Manifold s1_x_s2();
/// Chain-link surgery from p/q = a1 - 1/(a2 - 1/(...)), a_i >= 2. q is
/// taken mod p. Throws NotCoprimeError, or InvalidArgumentError for p < 1.
Manifold lens_space(long long p, long long q);
/// Block-diagonal linking matrix.
Manifold connected_sum(const Manifold& a, const Manifold& b);
/// E8 plumbing: 2 on the diagonal, -1 along the edges of the E8 tree.
Manifold poincare_sphere();

/// Coefficients a_i >= 2 of the minus continued fraction of p/q, 0 < q < p.
std::vector<long long> minus_continued_fraction(long long p, long long q);

AbelianGroup homology(const Manifold& m);
/// Torsion linking form; free summands are split off first.
LinkingForm linking_form(const Manifold& m);

}  // namespace atqft
