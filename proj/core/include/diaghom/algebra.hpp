#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "diaghom/diagram.hpp"
#include "diaghom/ring.hpp"

namespace diaghom {

// Parameters handed to AlgebraSpec::make. Exactly the ones the family reads
// must be present; anything else is rejected.
struct AlgebraParams {
  std::optional<Scalar> delta;
  std::optional<Scalar> epsilon;
  std::optional<Scalar> gamma;
};

class AlgebraSpec {
 public:
  static AlgebraSpec make(const FamilySpec& family, const RingSpec& ring,
                          const AlgebraParams& params);

  const FamilySpec& family() const { return family_; }
  const RingSpec& ring() const { return ring_; }
  const Scalar& delta() const { return delta_; }
  const Scalar& epsilon() const { return epsilon_; }
  const Scalar& gamma() const { return gamma_; }

  bool operator==(const AlgebraSpec& o) const;
  bool operator!=(const AlgebraSpec& o) const { return !(*this == o); }
  std::string to_string() const;

 private:
  AlgebraSpec() = default;
  FamilySpec family_ = FamilySpec::make(Family::TemperleyLieb, 0);
  RingSpec ring_;
  Scalar delta_, epsilon_, gamma_;  // zero when the family does not read them
};

// k-linear combination of member diagrams. Zero coefficients are pruned as
// terms are collected, so is_zero is just emptiness.
class AlgebraElement {
 public:
  explicit AlgebraElement(AlgebraSpec spec) : spec_(std::move(spec)) {}
  static AlgebraElement basis(const AlgebraSpec& spec, const Diagram& d);

  const AlgebraSpec& spec() const { return spec_; }
  const std::map<Diagram, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(const Diagram& d) const;
  AlgebraElement& add_term(const Diagram& d, const Scalar& c);

  bool operator==(const AlgebraElement& o) const;
  bool operator!=(const AlgebraElement& o) const { return !(*this == o); }
  std::string to_string() const;

 private:
  AlgebraSpec spec_;
  std::map<Diagram, Scalar> terms_;
};

// The unit element: one all-propagating diagram, except for the dilute family
// where the unit is the sum over all 2^n sub-identity diagrams.
AlgebraElement identity(const AlgebraSpec& spec);

AlgebraElement add(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement scale(const Scalar& c, const AlgebraElement& x);

// Bilinear extension of diagram composition; every composed pair contributes
// the family's parameter scalar (delta per plain loop, epsilon per middle
// strand or isolated middle vertex, gamma per blobbed loop).
AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y);

// Scalar attached to one composition in this algebra.
Scalar composition_scalar(const AlgebraSpec& spec, const CompositionResult& r);

// tau on a basis diagram: 1 for permutation diagrams (identity only, for the
// blob and dilute families), 0 otherwise.
bool augments_to_one(const FamilySpec& fam, const Diagram& d);
Scalar augmentation(const AlgebraElement& x);

// Exhaustively verifies tau(d1 d2) = tau(d1) tau(d2) over basis pairs and
// tau(1) = 1. Returns true; a violation raises Malformed naming the pair.
bool is_algebra_map_augmentation(const AlgebraSpec& spec);

// Membership of d in the family's two-sided ideal at the given level: at most
// `level` propagating edges, except in the blob family where the top level
// also admits diagrams with exactly `level` propagating edges carrying a blob
// with a blob on the top-most propagating edge.
bool in_ideal(const Diagram& d, int level, const FamilySpec& fam);

// Valid ideal levels: -1 (zero ideal) through n-1, or n in the blob family.
int max_ideal_level(const FamilySpec& fam);

enum class GroupKind { Trivial, Symmetric, Cyclic, ProductSymmetric };

struct GroupSpec {
  GroupKind kind = GroupKind::Trivial;
  int n = 0;       // Symmetric(n), Cyclic(n)
  int r = 0, s = 0;  // ProductSymmetric(r, s)

  static GroupSpec trivial() { return {}; }
  static GroupSpec symmetric(int n);
  static GroupSpec cyclic(int n);
  static GroupSpec product_symmetric(int r, int s);
  // Accepts "trivial", "s<n>", "c<n>", "s<r>xs<s>", case-insensitive.
  static GroupSpec parse(const std::string& text);

  std::size_t order() const;
  bool operator==(const GroupSpec& o) const;
  std::string to_string() const;
};

// A finite free k-module with a based multiplication, a unit expressed in the
// basis, and an augmentation. Product rows are computed on demand and cached,
// so large diagram algebras never build a full table up front.
class BasedAlgebra {
 public:
  using Row = std::vector<std::pair<int, Scalar>>;  // sorted by basis index

  static BasedAlgebra diagram_algebra(const AlgebraSpec& spec);
  static BasedAlgebra quotient(const AlgebraSpec& spec, int ideal_level);
  static BasedAlgebra group_algebra(const GroupSpec& group, const RingSpec& ring,
                                    std::size_t max_order = 5040);

  int dim() const;
  const Ring& ring() const;
  const Row& unit() const;
  const Row& product(int i, int j) const;
  const Scalar& augment(int i) const;
  std::string label(int i) const;
  std::string describe() const;

  // Diagram-backed algebras expose their basis; group algebras return none.
  const std::vector<Diagram>* diagram_basis() const;
  int index_of(const Diagram& d) const;

 private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
};

}  // namespace diaghom
