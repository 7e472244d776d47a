#include "diaghom/homology.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace diaghom {

AugmentedAlgebra::AugmentedAlgebra(BasedAlgebra base, int unit_index, std::vector<Scalar> tau)
    : base_(std::move(base)), unit_index_(unit_index), tau_(std::move(tau)) {
  const std::size_t pairs =
      static_cast<std::size_t>(reduced_dim()) * static_cast<std::size_t>(reduced_dim());
  cache_.resize(pairs);
  cached_.assign(pairs, 0);
}

AugmentedAlgebra AugmentedAlgebra::make(const BasedAlgebra& a) {
  const Ring& ring = a.ring();
  std::vector<Scalar> tau(static_cast<std::size_t>(a.dim()));
  for (int i = 0; i < a.dim(); ++i) tau[static_cast<std::size_t>(i)] = a.augment(i);

  // tau(1) = 1.
  Scalar unit_aug = ring.zero();
  for (const auto& [k, c] : a.unit())
    unit_aug = ring.add(unit_aug, ring.mul(c, tau[static_cast<std::size_t>(k)]));
  require(ring.is_one(unit_aug), Errc::Malformed,
          "augmentation does not send the unit to 1 in " + a.describe());

  // Distinguished slot: a basis element entering the unit with coefficient 1,
  // preferably one of augmentation 1 (the identity diagram or group unit).
  int unit_index = -1;
  for (const auto& [k, c] : a.unit()) {
    if (!ring.is_one(c)) continue;
    if (unit_index < 0) unit_index = k;
    if (ring.is_one(tau[static_cast<std::size_t>(k)])) {
      unit_index = k;
      break;
    }
  }
  require(unit_index >= 0, Errc::Malformed,
          "no unit coordinate equals 1 in " + a.describe());

  // Spot-check multiplicativity of tau on a bounded sample of basis pairs.
  const int sample = std::min(a.dim(), 12);
  for (int i = 0; i < sample; ++i)
    for (int j = 0; j < sample; ++j) {
      Scalar lhs = ring.zero();
      for (const auto& [k, c] : a.product(i, j))
        lhs = ring.add(lhs, ring.mul(c, tau[static_cast<std::size_t>(k)]));
      require(lhs == ring.mul(tau[static_cast<std::size_t>(i)], tau[static_cast<std::size_t>(j)]),
              Errc::Malformed, "augmentation is not multiplicative in " + a.describe());
    }

  return AugmentedAlgebra(a, unit_index, std::move(tau));
}

const std::vector<std::pair<int, Scalar>>& AugmentedAlgebra::reduced_product(int i, int j) const {
  const int m = reduced_dim();
  require(i >= 0 && i < m && j >= 0 && j < m, Errc::BadArgument, "reduced index out of range");
  const std::size_t slot = static_cast<std::size_t>(i) * static_cast<std::size_t>(m) +
                           static_cast<std::size_t>(j);
  if (cached_[slot]) return cache_[slot];

  const Ring& ring = base_.ring();
  const int fi = full_index(i), fj = full_index(j);
  const Scalar ti = tau_[static_cast<std::size_t>(fi)], tj = tau_[static_cast<std::size_t>(fj)];

  // x = b_i b_j - tau_j b_i - tau_i b_j + tau_i tau_j 1 in full coordinates.
  std::map<int, Scalar> full;
  auto bump = [&](int k, const Scalar& c) {
    auto [it, fresh] = full.emplace(k, c);
    if (!fresh) it->second = ring.add(it->second, c);
  };
  for (const auto& [k, c] : base_.product(fi, fj)) bump(k, c);
  bump(fi, ring.neg(tj));
  bump(fj, ring.neg(ti));
  const Scalar titj = ring.mul(ti, tj);
  for (const auto& [k, c] : base_.unit()) bump(k, ring.mul(titj, c));

  // tau(v_i v_j) = 0; anything else means tau is not multiplicative here.
  Scalar aug = ring.zero();
  for (const auto& [k, c] : full)
    aug = ring.add(aug, ring.mul(c, tau_[static_cast<std::size_t>(k)]));
  require(ring.is_zero(aug), Errc::Malformed,
          "augmentation is not multiplicative in " + base_.describe());

  // Fold the distinguished coordinate through the unit relation
  // sum_k u_k v_k = 0 (with u at the distinguished slot equal to 1).
  Scalar cu = ring.zero();
  if (const auto it = full.find(unit_index_); it != full.end()) {
    cu = it->second;
    full.erase(it);
  }
  if (!ring.is_zero(cu))
    for (const auto& [k, c] : base_.unit()) {
      if (k == unit_index_) continue;
      bump(k, ring.neg(ring.mul(cu, c)));
    }

  std::vector<std::pair<int, Scalar>> out;
  for (const auto& [k, c] : full) {
    if (ring.is_zero(c)) continue;
    const int reduced = k < unit_index_ ? k : k - 1;
    out.push_back({reduced, c});
  }
  cache_[slot] = std::move(out);
  cached_[slot] = 1;
  return cache_[slot];
}

std::string AugmentedAlgebra::label(int reduced) const { return base_.label(full_index(reduced)); }

ChainComplex bar_complex(const AugmentedAlgebra& a, int D, long long budget) {
  require(D >= 0, Errc::BadArgument, "truncation degree must be nonnegative");
  require(budget >= 1, Errc::BadArgument, "budget must be positive");
  const Ring& ring = a.ring();
  const long long m = a.reduced_dim();
  const int top = D + 1;

  ChainComplex c;
  c.dims.assign(static_cast<std::size_t>(top) + 1, 0);
  c.dims[0] = 1;
  for (int k = 1; k <= top; ++k) {
    const long long dim = c.dims[static_cast<std::size_t>(k - 1)] * m;
    require(dim <= budget, Errc::BudgetExceeded,
            "chain rank " + std::to_string(dim) + " in degree " + std::to_string(k) +
                " exceeds budget " + std::to_string(budget));
    c.dims[static_cast<std::size_t>(k)] = dim;
  }

  c.boundary.emplace_back(0, 1);
  std::vector<int> digit;
  for (int k = 1; k <= top; ++k) {
    const long long rows = c.dims[static_cast<std::size_t>(k - 1)];
    const long long cols = c.dims[static_cast<std::size_t>(k)];
    SparseMatrix d(static_cast<int>(rows), static_cast<int>(cols));
    digit.assign(static_cast<std::size_t>(k), 0);
    for (long long col = 0; col < cols; ++col) {
      long long rest = col;
      for (int t = k - 1; t >= 0; --t) {
        digit[static_cast<std::size_t>(t)] = static_cast<int>(rest % m);
        rest /= m;
      }
      std::map<long long, Scalar> acc;
      for (int face = 1; face <= k - 1; ++face) {
        const bool negate = face % 2 == 1;
        for (const auto& [target, coeff] :
             a.reduced_product(digit[static_cast<std::size_t>(face - 1)],
                               digit[static_cast<std::size_t>(face)])) {
          long long row = 0;
          for (int s = 0; s < k - 1; ++s) {
            const int dig = s < face - 1
                                ? digit[static_cast<std::size_t>(s)]
                                : (s == face - 1 ? target : digit[static_cast<std::size_t>(s + 1)]);
            row = row * m + dig;
          }
          const Scalar value = negate ? ring.neg(coeff) : coeff;
          auto [it, fresh] = acc.emplace(row, value);
          if (!fresh) it->second = ring.add(it->second, value);
        }
      }
      SparseVec column;
      for (const auto& [row, value] : acc)
        if (!ring.is_zero(value)) column.push_back({static_cast<int32_t>(row), value});
      d.set_column(static_cast<int>(col), std::move(column));
    }
    c.boundary.push_back(std::move(d));
  }

  for (int k = 1; k < top; ++k)
    require(c.boundary[static_cast<std::size_t>(k)]
                .multiply(c.boundary[static_cast<std::size_t>(k + 1)], ring)
                .is_zero(),
            Errc::Malformed, "bar differential does not square to zero");
  return c;
}

namespace {

// Re-reads an integer matrix in the target ring, dropping entries that die.
SparseMatrix coerce_matrix(const SparseMatrix& m, const Ring& to) {
  SparseMatrix out(m.rows(), m.cols());
  for (int c = 0; c < m.cols(); ++c) {
    SparseVec col;
    for (const Entry& e : m.column(c)) {
      const Scalar v = to.from_integer(e.val.num());
      if (!to.is_zero(v)) col.push_back({e.row, v});
    }
    out.set_column(c, std::move(col));
  }
  return out;
}

// The complex with entries read in `ring`; requires either a ring match or an
// integer-based algebra.
ChainComplex complex_over(const AugmentedAlgebra& a, int D, const RingSpec& ring,
                          long long budget) {
  ChainComplex c = bar_complex(a, D, budget);
  if (ring == a.ring().spec()) return c;
  require(a.ring().spec() == RingSpec::integers(), Errc::BadArgument,
          "coefficient change requires an integer-based algebra");
  const Ring target(ring);
  for (SparseMatrix& d : c.boundary) d = coerce_matrix(d, target);
  return c;
}

GradedInvariants graded(const RingSpec& ring, int D) {
  GradedInvariants g;
  g.ring = ring;
  g.truncation = D;
  g.reliable.assign(static_cast<std::size_t>(D) + 1, true);
  return g;
}

}  // namespace

GradedInvariants tor(const AugmentedAlgebra& a, int D, const RingSpec& ring, long long budget) {
  const ChainComplex c = complex_over(a, D, ring, budget);
  GradedInvariants g = graded(ring, D);
  for (int k = 0; k <= D; ++k)
    g.degrees.push_back(homology_at(c.boundary[static_cast<std::size_t>(k)],
                                    c.boundary[static_cast<std::size_t>(k + 1)], ring));
  return g;
}

GradedInvariants ext(const AugmentedAlgebra& a, int D, const RingSpec& ring, long long budget) {
  const ChainComplex c = complex_over(a, D, ring, budget);
  GradedInvariants g = graded(ring, D);
  for (int k = 0; k <= D; ++k) {
    const SparseMatrix out = c.boundary[static_cast<std::size_t>(k + 1)].transpose();
    const SparseMatrix in = k == 0
                                ? SparseMatrix(static_cast<int>(c.dims[0]), 0)
                                : c.boundary[static_cast<std::size_t>(k)].transpose();
    g.degrees.push_back(homology_at(out, in, ring));
  }
  return g;
}

GradedInvariants tor_of_quotient(const QuotientSpec& q, int D, const RingSpec& ring,
                                 long long budget) {
  const AugmentedAlgebra a = AugmentedAlgebra::make(BasedAlgebra::quotient(q.algebra, q.ideal_level));
  return tor(a, D, ring, budget);
}

std::string GradedInvariants::to_string() const {
  std::ostringstream os;
  for (int k = 0; k <= truncation; ++k) {
    if (k) os << ", ";
    os << k << ": " << degrees[static_cast<std::size_t>(k)].render(ring);
  }
  return os.str();
}

GCentredReport g_centred_check(const AugmentedAlgebra& a, const GroupSpec& g, int D,
                               const std::vector<RingSpec>& rings, long long budget) {
  GCentredReport report;
  for (const RingSpec& ring : rings) {
    GCentredEntry entry{ring,
                        tor(a, D, ring, budget),
                        graded(ring, D),
                        ext(a, D, ring, budget),
                        graded(ring, D)};
    const AugmentedAlgebra ga = AugmentedAlgebra::make(BasedAlgebra::group_algebra(g, ring));
    entry.group_tor = tor(ga, D, ring, budget);
    entry.group_ext = ext(ga, D, ring, budget);
    for (int k = 0; k <= D && report.agrees; ++k) {
      const auto& at = entry.algebra_tor.degrees[static_cast<std::size_t>(k)];
      const auto& gt = entry.group_tor.degrees[static_cast<std::size_t>(k)];
      if (at != gt) {
        report.agrees = false;
        report.first_disagreement = "tor over " + ring.to_string() + " at degree " +
                                    std::to_string(k) + ": " + at.render(ring) + " vs " +
                                    gt.render(ring);
      }
      const auto& ae = entry.algebra_ext.degrees[static_cast<std::size_t>(k)];
      const auto& ge = entry.group_ext.degrees[static_cast<std::size_t>(k)];
      if (report.agrees && ae != ge) {
        report.agrees = false;
        report.first_disagreement = "ext over " + ring.to_string() + " at degree " +
                                    std::to_string(k) + ": " + ae.render(ring) + " vs " +
                                    ge.render(ring);
      }
    }
    report.entries.push_back(std::move(entry));
  }
  return report;
}

}  // namespace diaghom
