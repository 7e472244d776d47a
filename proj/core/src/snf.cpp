#include "diaghom/snf.hpp"

#include <algorithm>
#include <optional>
#include <queue>

namespace diaghom {

namespace {

using ZVec = std::vector<std::pair<int32_t, Int>>;  // sorted by row, no zeros

// Quotient nearest to a/b (minimizes |a - q*b|); b != 0.
Int round_div(const Int& a, const Int& b) {
  Int q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  // fdiv rounds toward -inf, so a/b lies in [q, q+1) whatever the signs; the
  // nearest multiple is q or q+1, and r/b in [0,1) is the fractional part.
  if (2 * abs(r) > abs(b)) q += 1;
  return q;
}

// a += q * b
ZVec zaxpy(const ZVec& a, const Int& q, const ZVec& b) {
  if (q == 0 || b.empty()) return a;
  ZVec out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, q * b[j].second);
      ++j;
    } else {
      Int v = a[i].second + q * b[j].second;
      if (v != 0) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

const Int* zfind(const ZVec& col, int32_t row) {
  auto it = std::lower_bound(col.begin(), col.end(), row,
                             [](const auto& e, int32_t r) { return e.first < r; });
  if (it != col.end() && it->first == row) return &it->second;
  return nullptr;
}

std::vector<ZVec> to_zcols(const SparseMatrix& m) {
  std::vector<ZVec> cols(m.cols());
  for (int c = 0; c < m.cols(); ++c) {
    cols[c].reserve(m.column(c).size());
    for (const auto& e : m.column(c)) {
      require(e.val.den() == 1, Errc::BadArgument, "integer matrix required");
      cols[c].emplace_back(e.row, e.val.num());
    }
  }
  return cols;
}

// Mutable column workspace with lazily maintained row occupancy.
struct ZWork {
  std::vector<ZVec> col;
  std::vector<std::vector<int32_t>> occ;  // row -> candidate columns (may be stale)
  std::vector<bool> col_dead, row_dead;

  ZWork(std::vector<ZVec> cols, int rows)
      : col(std::move(cols)), occ(rows), col_dead(col.size(), false), row_dead(rows, false) {
    for (std::size_t c = 0; c < col.size(); ++c)
      for (const auto& [r, v] : col[c]) occ[r].push_back(static_cast<int32_t>(c));
  }

  // Columns that really contain row r right now.
  std::vector<int32_t> cols_at(int32_t r) {
    std::vector<int32_t>& cand = occ[r];
    std::vector<int32_t> live;
    live.reserve(cand.size());
    for (int32_t c : cand)
      if (!col_dead[c] && zfind(col[c], r)) live.push_back(c);
    std::sort(live.begin(), live.end());
    live.erase(std::unique(live.begin(), live.end()), live.end());
    cand = live;
    return live;
  }

  // col[dst] += q * col[src], occupancy updated.
  void axpy(int32_t dst, const Int& q, int32_t src) {
    col[dst] = zaxpy(col[dst], q, col[src]);
    for (const auto& [r, v] : col[src]) occ[r].push_back(dst);
  }
};

// Divisibility fixup: diag(a, b) ~ diag(gcd, lcm) by elementary ops.
std::vector<Int> divisibility_chain(std::vector<Int> d) {
  for (auto& v : d) v = abs(v);
  const std::size_t k = d.size();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      if (d[j] % d[i] == 0) continue;
      Int g = gcd(d[i], d[j]);
      d[j] = d[i] / g * d[j];
      d[i] = std::move(g);
    }
  return d;
}

}  // namespace

SmithResult smith_normal_form(const SparseMatrix& m) {
  ZWork w(to_zcols(m), m.rows());
  const int ncols = m.cols();
  std::vector<Int> diag;

  // Phase 1: unit pivots only (no fill from division, no value growth from
  // the pivot itself). Lazy min-nnz heap over columns.
  using HeapItem = std::pair<std::size_t, int32_t>;
  std::priority_queue<HeapItem, std::vector<HeapItem>, std::greater<>> heap;
  for (int c = 0; c < ncols; ++c)
    if (!w.col[c].empty()) heap.emplace(w.col[c].size(), c);

  long progress = 0;
  std::vector<std::pair<int32_t, long>> deferred;  // (col, progress at defer)
  auto push_col = [&](int32_t c) {
    if (!w.col_dead[c] && !w.col[c].empty()) heap.emplace(w.col[c].size(), c);
  };

  while (true) {
    if (heap.empty()) {
      bool repushed = false;
      std::vector<std::pair<int32_t, long>> keep;
      for (auto& [c, at] : deferred) {
        if (w.col_dead[c]) continue;
        if (at < progress) {
          push_col(c);
          repushed = true;
        } else {
          keep.emplace_back(c, at);
        }
      }
      deferred = std::move(keep);
      if (!repushed) break;
      continue;
    }
    auto [sz, c] = heap.top();
    heap.pop();
    if (w.col_dead[c] || w.col[c].empty()) continue;
    if (w.col[c].size() != sz) {
      heap.emplace(w.col[c].size(), c);
      continue;
    }
    // Best unit pivot in this column: fewest columns sharing its row.
    int32_t best_row = -1;
    std::size_t best_cost = 0;
    for (const auto& [r, v] : w.col[c]) {
      if (v != 1 && v != -1) continue;
      std::size_t cost = w.cols_at(r).size();
      if (best_row < 0 || cost < best_cost) {
        best_row = r;
        best_cost = cost;
      }
    }
    if (best_row < 0) {
      deferred.emplace_back(c, progress);
      continue;
    }
    // Clear row best_row from every other column (pivot is a unit, so the
    // division is exact), then retire the pivot row and column.
    const Int piv = *zfind(w.col[c], best_row);
    for (int32_t c2 : w.cols_at(best_row)) {
      if (c2 == c) continue;
      const Int* v2 = zfind(w.col[c2], best_row);
      Int q = -(*v2 / piv);
      w.axpy(c2, q, c);
      push_col(c2);
    }
    w.row_dead[best_row] = true;
    w.col_dead[c] = true;
    w.occ[best_row].clear();
    diag.emplace_back(1);
    ++progress;
  }

  // Phase 2: remaining entries have |v| >= 2. Classical reduction with the
  // globally smallest pivot; remainders shrink each round, so it terminates.
  std::vector<int32_t> alive;
  for (int c = 0; c < ncols; ++c)
    if (!w.col_dead[c] && !w.col[c].empty()) alive.push_back(c);

  while (true) {
    int32_t pr = -1, pc = -1;
    const Int* pv = nullptr;
    for (int32_t c : alive) {
      if (w.col_dead[c]) continue;
      for (const auto& [r, v] : w.col[c])
        if (!pv || abs(v) < abs(*pv)) {
          pr = r;
          pc = c;
          pv = &v;
        }
    }
    if (!pv) break;
    Int piv = *pv;

    // Reduce row pr by column ops; leftover remainders mean a smaller entry
    // appeared, so restart pivot selection.
    bool remainder = false;
    for (int32_t c2 : w.cols_at(pr)) {
      if (c2 == pc) continue;
      const Int* v2 = zfind(w.col[c2], pr);
      Int q = -round_div(*v2, piv);
      w.axpy(c2, q, pc);
      if (zfind(w.col[c2], pr)) remainder = true;
    }
    if (remainder) continue;
    // Row pr now holds only the pivot, so clearing column pc with row ops
    // cannot touch any other column; reduce in place.
    bool col_remainder = false;
    ZVec reduced;
    for (const auto& [r, v] : w.col[pc]) {
      if (r == pr) {
        reduced.emplace_back(r, v);
        continue;
      }
      Int rem = v - round_div(v, piv) * piv;
      if (rem != 0) {
        reduced.emplace_back(r, std::move(rem));
        col_remainder = true;
      }
    }
    if (col_remainder) {
      w.col[pc] = std::move(reduced);
      continue;
    }
    w.col[pc] = {{pr, piv}};
    w.row_dead[pr] = true;
    w.col_dead[pc] = true;
    w.occ[pr].clear();
    diag.push_back(std::move(piv));
  }

  SmithResult out;
  out.factors = divisibility_chain(std::move(diag));
  std::sort(out.factors.begin(), out.factors.end());
  for (std::size_t i = 0; i + 1 < out.factors.size(); ++i)
    require(out.factors[i + 1] % out.factors[i] == 0, Errc::Malformed, "smith chain broken");
  return out;
}

int rank_over_field(const SparseMatrix& m, const Ring& ring) {
  require(ring.is_field(), Errc::BadArgument, "rank_over_field needs a field");

  // Dedicated mod-2 path: columns as sorted row lists, addition = symmetric
  // difference. The large characteristic-2 bar complexes go through here.
  if (ring.kind() == RingKind::IntegersMod && ring.modulus() == 2) {
    std::vector<std::vector<int32_t>> col(m.cols());
    for (int c = 0; c < m.cols(); ++c)
      for (const auto& e : m.column(c)) {
        if (mpz_odd_p(e.val.num().get_mpz_t())) col[c].push_back(e.row);
      }
    std::vector<int32_t> pivot_col_of_row(m.rows(), -1);
    int rank = 0;
    using HeapItem = std::pair<std::size_t, int32_t>;
    std::priority_queue<HeapItem, std::vector<HeapItem>, std::greater<>> heap;
    for (int c = 0; c < m.cols(); ++c)
      if (!col[c].empty()) heap.emplace(col[c].size(), c);
    std::vector<int32_t> tmp;
    while (!heap.empty()) {
      auto [sz, c] = heap.top();
      heap.pop();
      if (col[c].empty() || col[c].size() != sz) {
        if (!col[c].empty()) heap.emplace(col[c].size(), c);
        continue;
      }
      // Reduce against established pivots until empty or a fresh row appears.
      bool placed = false;
      while (!col[c].empty()) {
        int32_t r = col[c].front();
        int32_t pc = pivot_col_of_row[r];
        if (pc < 0) {
          pivot_col_of_row[r] = c;
          ++rank;
          placed = true;
          break;
        }
        tmp.clear();
        std::set_symmetric_difference(col[c].begin(), col[c].end(), col[pc].begin(),
                                      col[pc].end(), std::back_inserter(tmp));
        col[c].swap(tmp);
      }
      (void)placed;
    }
    return rank;
  }

  // Generic field elimination, min-nnz column heap, no pivot bookkeeping
  // beyond a per-row pivot registry (columns stay reduced lazily).
  std::vector<SparseVec> col(m.cols());
  for (int c = 0; c < m.cols(); ++c) col[c] = m.column(c);
  std::vector<int32_t> pivot_col_of_row(m.rows(), -1);
  int rank = 0;
  using HeapItem = std::pair<std::size_t, int32_t>;
  std::priority_queue<HeapItem, std::vector<HeapItem>, std::greater<>> heap;
  for (int c = 0; c < m.cols(); ++c)
    if (!col[c].empty()) heap.emplace(col[c].size(), c);
  while (!heap.empty()) {
    auto [sz, c] = heap.top();
    heap.pop();
    if (col[c].empty() || col[c].size() != sz) {
      if (!col[c].empty()) heap.emplace(col[c].size(), c);
      continue;
    }
    while (!col[c].empty()) {
      int32_t r = col[c].front().row;
      int32_t pc = pivot_col_of_row[r];
      if (pc < 0) {
        pivot_col_of_row[r] = c;
        ++rank;
        break;
      }
      // col[c] -= (lead / pivot_lead) * col[pc]
      Scalar q = ring.neg(ring.mul(col[c].front().val, *ring.invert(col[pc].front().val)));
      col[c] = vec_axpy(col[c], q, col[pc], ring);
    }
  }
  return rank;
}

namespace {

// Column Hermite reduction over Z. Returns (columns, pivot rows) with pivot
// rows strictly increasing; when canonical, pivots positive and entries to
// the left of each pivot reduced into [0, pivot).
struct Echelon {
  std::vector<ZVec> cols;
  std::vector<int32_t> pivot_row;
};

Echelon echelonize(std::vector<ZVec> cols, int rows, bool canonical) {
  std::vector<ZVec> active = std::move(cols);
  active.erase(std::remove_if(active.begin(), active.end(), [](const ZVec& v) { return v.empty(); }),
               active.end());
  // Keep active columns ordered by their current top row so each row pass
  // only inspects a prefix-by-top slice.
  Echelon out;
  for (int r = 0; r < rows && !active.empty(); ++r) {
    std::vector<ZVec> here, later;
    for (auto& v : active) {
      if (v.front().first == r)
        here.push_back(std::move(v));
      else
        later.push_back(std::move(v));
    }
    active = std::move(later);
    if (here.empty()) continue;
    // Gcd cascade on the row-r leading values.
    while (here.size() > 1) {
      std::size_t best = 0;
      for (std::size_t i = 1; i < here.size(); ++i)
        if (abs(here[i].front().second) < abs(here[best].front().second)) best = i;
      ZVec p = std::move(here[best]);
      std::vector<ZVec> next;
      bool survivors = false;
      for (std::size_t i = 0; i < here.size(); ++i) {
        if (i == best) continue;
        Int q = -round_div(here[i].front().second, p.front().second);
        ZVec reduced = zaxpy(here[i], q, p);
        if (reduced.empty()) continue;
        if (reduced.front().first == r) {
          next.push_back(std::move(reduced));
          survivors = true;
        } else {
          active.push_back(std::move(reduced));
        }
      }
      here.clear();
      here.push_back(std::move(p));
      std::move(next.begin(), next.end(), std::back_inserter(here));
      if (!survivors) break;
    }
    ZVec piv = std::move(here.front());
    if (canonical && piv.front().second < 0)
      for (auto& [rr, v] : piv) v = -v;
    if (canonical) {
      // Reduce row r of earlier pivot columns into [0, pivot).
      const Int& pv = piv.front().second;
      for (std::size_t j = 0; j < out.cols.size(); ++j) {
        const Int* e = zfind(out.cols[j], r);
        if (!e) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), e->get_mpz_t(), pv.get_mpz_t());
        if (q != 0) out.cols[j] = zaxpy(out.cols[j], -q, piv);
      }
    }
    out.pivot_row.push_back(r);
    out.cols.push_back(std::move(piv));
  }
  return out;
}

SparseMatrix zcols_to_matrix(const std::vector<ZVec>& cols, int rows) {
  SparseMatrix m(rows, static_cast<int>(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c) {
    SparseVec v;
    v.reserve(cols[c].size());
    for (const auto& [r, val] : cols[c]) v.push_back({r, Scalar(val)});
    m.set_column(static_cast<int>(c), std::move(v));
  }
  return m;
}

// Solve echelon * x = v over Z; nullopt when v is outside the lattice.
std::optional<ZVec> echelon_solve(const Echelon& e, ZVec v) {
  ZVec x;
  while (!v.empty()) {
    int32_t r = v.front().first;
    auto it = std::lower_bound(e.pivot_row.begin(), e.pivot_row.end(), r);
    if (it == e.pivot_row.end() || *it != r) return std::nullopt;
    std::size_t j = static_cast<std::size_t>(it - e.pivot_row.begin());
    const Int& piv = e.cols[j].front().second;
    Int q, rem;
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), v.front().second.get_mpz_t(), piv.get_mpz_t());
    if (rem != 0) return std::nullopt;
    v = zaxpy(v, -q, e.cols[j]);
    if (q != 0) x.emplace_back(static_cast<int32_t>(j), std::move(q));
  }
  std::sort(x.begin(), x.end());
  return x;
}

ZVec column_to_zvec(const SparseVec& col) {
  ZVec v;
  v.reserve(col.size());
  for (const auto& e : col) {
    require(e.val.den() == 1, Errc::BadArgument, "integer vector required");
    v.emplace_back(e.row, e.val.num());
  }
  return v;
}

// Integer kernel basis columns of m, echelonized.
std::vector<ZVec> kernel_zcols(const SparseMatrix& m) {
  const int rows = m.rows(), cols = m.cols();
  // Augmented columns (m-part, identity-part); eliminate the m-part.
  struct Aug {
    ZVec top;
    ZVec bot;
  };
  std::vector<Aug> work(cols);
  for (int c = 0; c < cols; ++c) {
    work[c].top = column_to_zvec(m.column(c));
    work[c].bot = {{static_cast<int32_t>(c), Int(1)}};
  }
  std::vector<Aug> active = std::move(work);
  for (int r = 0; r < rows && !active.empty(); ++r) {
    std::vector<Aug> here, later;
    for (auto& a : active) {
      if (!a.top.empty() && a.top.front().first == r)
        here.push_back(std::move(a));
      else
        later.push_back(std::move(a));
    }
    active = std::move(later);
    while (here.size() > 1) {
      std::size_t best = 0;
      for (std::size_t i = 1; i < here.size(); ++i)
        if (abs(here[i].top.front().second) < abs(here[best].top.front().second)) best = i;
      Aug p = std::move(here[best]);
      std::vector<Aug> next;
      bool survivors = false;
      for (std::size_t i = 0; i < here.size(); ++i) {
        if (i == best) continue;
        Int q = -round_div(here[i].top.front().second, p.top.front().second);
        Aug red{zaxpy(here[i].top, q, p.top), zaxpy(here[i].bot, q, p.bot)};
        if (red.top.empty()) {
          active.push_back(std::move(red));  // kernel candidate, no more top rows
        } else if (red.top.front().first == r) {
          next.push_back(std::move(red));
          survivors = true;
        } else {
          active.push_back(std::move(red));
        }
      }
      here.clear();
      here.push_back(std::move(p));
      std::move(next.begin(), next.end(), std::back_inserter(here));
      if (!survivors) break;
    }
    // here.front() is the pivot column for row r; it is not in the kernel.
  }
  std::vector<ZVec> kernel;
  for (auto& a : active) {
    require(a.top.empty(), Errc::Malformed, "kernel reduction left residue");
    kernel.push_back(std::move(a.bot));
  }
  return kernel;
}

}  // namespace

SparseMatrix kernel_basis_z(const SparseMatrix& m) {
  Echelon e = echelonize(kernel_zcols(m), m.cols(), /*canonical=*/false);
  return zcols_to_matrix(e.cols, m.cols());
}

SparseMatrix hermite_normal_form(const SparseMatrix& m) {
  Echelon e = echelonize(to_zcols(m), m.rows(), /*canonical=*/true);
  return zcols_to_matrix(e.cols, m.rows());
}

namespace {

SparseMatrix append_m_identity(const SparseMatrix& a, const Int& modulus) {
  SparseMatrix out(a.rows(), a.cols() + a.rows());
  for (int c = 0; c < a.cols(); ++c) {
    SparseVec v = a.column(c);
    out.set_column(c, std::move(v));
  }
  for (int r = 0; r < a.rows(); ++r) out.set_column(a.cols() + r, {{r, Scalar(modulus)}});
  return out;
}

}  // namespace

bool column_span_equal(const SparseMatrix& a, const SparseMatrix& b, const RingSpec& ring) {
  require(a.rows() == b.rows(), Errc::SizeMismatch, "span comparison shape mismatch");
  Ring rg(ring);
  if (rg.is_field()) {
    const int ra = rank_over_field(a, rg), rb = rank_over_field(b, rg);
    if (ra != rb) return false;
    SparseMatrix both(a.rows(), a.cols() + b.cols());
    for (int c = 0; c < a.cols(); ++c) both.set_column(c, a.column(c));
    for (int c = 0; c < b.cols(); ++c) both.set_column(a.cols() + c, b.column(c));
    return rank_over_field(both, rg) == ra;
  }
  if (ring.kind == RingKind::Integers) return hermite_normal_form(a) == hermite_normal_form(b);
  return hermite_normal_form(append_m_identity(a, ring.modulus)) ==
         hermite_normal_form(append_m_identity(b, ring.modulus));
}

bool in_column_span(const SparseMatrix& gens, const SparseVec& v, const RingSpec& ring) {
  Ring rg(ring);
  for (const auto& e : v) require(e.row >= 0 && e.row < gens.rows(), Errc::SizeMismatch, "vector shape");
  if (rg.is_field()) {
    const int r = rank_over_field(gens, rg);
    SparseMatrix aug(gens.rows(), gens.cols() + 1);
    for (int c = 0; c < gens.cols(); ++c) aug.set_column(c, gens.column(c));
    aug.set_column(gens.cols(), v);
    return rank_over_field(aug, rg) == r;
  }
  const SparseMatrix& target =
      ring.kind == RingKind::Integers ? gens : append_m_identity(gens, ring.modulus);
  Echelon e = echelonize(to_zcols(target), target.rows(), /*canonical=*/false);
  return echelon_solve(e, column_to_zvec(v)).has_value();
}

AbelianInvariants homology_at(const SparseMatrix& d_out, const SparseMatrix& d_in,
                              const RingSpec& ringspec) {
  Ring ring(ringspec);
  require(d_out.cols() == d_in.rows(), Errc::SizeMismatch, "chain degrees do not line up");
  require(d_out.multiply(d_in, ring).is_zero(), Errc::Malformed, "not a complex: d∘d != 0");
  const int dim = d_out.cols();
  if (dim == 0) return {};

  if (ring.is_field()) {
    AbelianInvariants inv;
    inv.free_rank = dim - rank_over_field(d_out, ring) - rank_over_field(d_in, ring);
    require(inv.free_rank >= 0, Errc::Malformed, "negative dimension");
    return inv;
  }

  if (ringspec.kind == RingKind::Integers) {
    // ker(d_out) in echelon basis, then SNF of d_in's columns in that basis.
    std::optional<Echelon> kernel;
    long kernel_dim;
    if (d_out.nnz() == 0) {
      kernel_dim = dim;  // kernel is everything; coordinates are standard
    } else {
      kernel.emplace(echelonize(kernel_zcols(d_out), dim, /*canonical=*/false));
      kernel_dim = static_cast<long>(kernel->cols.size());
    }
    std::vector<std::tuple<int, int, Scalar>> triplets;
    for (int c = 0; c < d_in.cols(); ++c) {
      ZVec coords;
      if (kernel) {
        auto solved = echelon_solve(*kernel, column_to_zvec(d_in.column(c)));
        require(solved.has_value(), Errc::Malformed, "boundary not inside kernel");
        coords = std::move(*solved);
      } else {
        coords = column_to_zvec(d_in.column(c));
      }
      for (auto& [r, val] : coords) triplets.emplace_back(r, c, Scalar(val));
    }
    SparseMatrix x = SparseMatrix::from_triplets(static_cast<int>(kernel_dim), d_in.cols(),
                                                 triplets, ring);
    SmithResult s = smith_normal_form(x);
    AbelianInvariants inv;
    inv.free_rank = kernel_dim - s.rank();
    require(inv.free_rank >= 0, Errc::Malformed, "negative free rank");
    for (const Int& f : s.factors)
      if (f > 1) inv.torsion.push_back(f);
    return inv;
  }

  // Composite Z/m: L = {x : d_out x = 0 mod m} as an integer lattice,
  // M = im(d_in) + m Z^dim; homology = L / M, always pure torsion.
  const Int& mod = ringspec.modulus;
  Echelon lattice = echelonize(kernel_zcols(append_m_identity(d_out, mod)), dim + d_out.rows(),
                               /*canonical=*/false);
  // Project away the auxiliary coordinates (rows >= dim).
  std::vector<ZVec> projected;
  for (const auto& colv : lattice.cols) {
    ZVec p;
    for (const auto& [r, v] : colv)
      if (r < dim) p.emplace_back(r, v);
    if (!p.empty()) projected.push_back(std::move(p));
  }
  Echelon lbasis = echelonize(std::move(projected), dim, /*canonical=*/false);
  require(static_cast<int>(lbasis.cols.size()) == dim, Errc::Malformed, "mod-m kernel not full rank");
  std::vector<std::tuple<int, int, Scalar>> triplets;
  int col_index = 0;
  auto add_generator = [&](ZVec gen) {
    auto solved = echelon_solve(lbasis, std::move(gen));
    require(solved.has_value(), Errc::Malformed, "generator outside mod-m kernel");
    for (auto& [r, val] : *solved) triplets.emplace_back(r, col_index, Scalar(val));
    ++col_index;
  };
  for (int c = 0; c < d_in.cols(); ++c) add_generator(column_to_zvec(d_in.column(c)));
  for (int r = 0; r < dim; ++r) add_generator({{r, mod}});
  SparseMatrix x = SparseMatrix::from_triplets(dim, col_index, triplets, Ring(RingSpec::integers()));
  SmithResult s = smith_normal_form(x);
  require(s.rank() == dim, Errc::Malformed, "mod-m homology must be finite");
  AbelianInvariants inv;
  for (const Int& f : s.factors)
    if (f > 1) inv.torsion.push_back(f);
  return inv;
}

std::string AbelianInvariants::render(const RingSpec& ring) const {
  if (is_zero()) return "0";
  std::string free_symbol;
  switch (ring.kind) {
    case RingKind::Integers: free_symbol = "Z"; break;
    case RingKind::Rationals: free_symbol = "Q"; break;
    case RingKind::IntegersMod: free_symbol = "Z/" + ring.modulus.get_str(); break;
  }
  std::string out;
  if (free_rank > 0) {
    out = free_symbol;
    if (free_rank > 1) out += "^" + std::to_string(free_rank);
  }
  for (const Int& t : torsion) {
    if (!out.empty()) out += " + ";
    out += "Z/" + t.get_str();
  }
  return out;
}

}  // namespace diaghom
