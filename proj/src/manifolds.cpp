#include "atqft/manifolds.hpp"

#include <numeric>
#include <utility>

#include "atqft/errors.hpp"

namespace atqft {

Manifold::Manifold(std::string name, IntMatrix presentation, int orientation)
    : name_(std::move(name)), presentation_(std::move(presentation)), orientation_(orientation) {
  if (name_.empty()) throw InvalidArgumentError("manifold name must not be empty");
  if (!presentation_.is_square()) throw NonSquareError("surgery presentation must be square");
  if (!presentation_.is_symmetric())
    throw NonSymmetricError("surgery presentation must be symmetric");
  if (orientation_ != 1 && orientation_ != -1)
    throw InvalidArgumentError("orientation must be +1 or -1");
}

IntMatrix Manifold::linking_matrix() const {
  return orientation_ == 1 ? presentation_ : -presentation_;
}

Manifold Manifold::reversed() const {
  std::string name = name_.starts_with('-') ? name_.substr(1) : "-" + name_;
  return Manifold(std::move(name), presentation_, -orientation_);
}

Manifold sphere3() { return Manifold("S3", IntMatrix()); }

Manifold s1_x_s2() { return Manifold("S1xS2", IntMatrix{{0}}); }

std::vector<long long> minus_continued_fraction(long long p, long long q) {
  if (!(0 < q && q < p)) throw InvalidArgumentError("continued fraction needs 0 < q < p");
  std::vector<long long> a;
  while (q != 0) {
    const long long ai = (p + q - 1) / q;  // ceil(p / q)
    a.push_back(ai);
    const long long next = ai * q - p;
    p = q;
    q = next;
  }
  return a;
}

Manifold lens_space(long long p, long long q) {
  if (p < 1) throw InvalidArgumentError("lens space L(p,q) needs p >= 1");
  if (std::gcd(p, q) != 1) throw NotCoprimeError(p, q);
  const long long qc = ((q % p) + p) % p;
  const std::string name = "L(" + std::to_string(p) + "," + std::to_string(p == 1 ? 1 : qc) + ")";
  if (p == 1) return Manifold(name, IntMatrix{{1}});

  const auto a = minus_continued_fraction(p, qc);
  IntMatrix m(a.size(), a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    m(i, i) = static_cast<long>(a[i]);
    if (i + 1 < a.size()) m(i, i + 1) = m(i + 1, i) = 1;
  }
  return Manifold(name, std::move(m));
}

Manifold connected_sum(const Manifold& a, const Manifold& b) {
  return Manifold("sum(" + a.name() + "," + b.name() + ")",
                  block_diagonal(a.linking_matrix(), b.linking_matrix()));
}

Manifold poincare_sphere() {
  // Chain 0-1-2-3-4-5-6 with node 7 attached to node 4: arms of 4, 2 and 1
  // nodes around the trivalent vertex.
  constexpr std::pair<int, int> kEdges[] = {{0, 1}, {1, 2}, {2, 3}, {3, 4},
                                            {4, 5}, {5, 6}, {4, 7}};
  IntMatrix m(8, 8);
  for (std::size_t i = 0; i < 8; ++i) m(i, i) = 2;
  for (auto [i, j] : kEdges) m(i, j) = m(j, i) = -1;
  return Manifold("Poincare", std::move(m));
}

AbelianGroup homology(const Manifold& m) { return group_from_presentation(m.linking_matrix()); }

LinkingForm linking_form(const Manifold& m) { return linking_form_of_presentation(m.linking_matrix()); }

}  // namespace atqft
