#include "periods/invariant_engine.hpp"

#include <algorithm>
#include <sstream>

namespace periods::invariant {

namespace {

void check_partition_split(const std::vector<int>& partition, std::pair<int, int> split) {
  if (partition.empty()) throw ValidationError("partition must be nonempty");
  int d = 0;
  for (int s : partition) {
    if (s <= 0) throw ValidationError("partition entries must be positive");
    d += s;
  }
  if (split.first < 0 || split.second < 0 || split.first + split.second != d)
    throw ValidationError("split must be nonnegative and sum to the dimension");
}

}  // namespace

bool AdmissibilityType::degree_balanced() const {
  long lhs = 0;
  for (std::size_t i = 0; i < block_weights.size(); ++i)
    lhs += static_cast<long>(block_weights[i]) * partition[i];
  long rhs = static_cast<long>(right_weights.first) * split.first +
             static_cast<long>(right_weights.second) * split.second;
  return lhs == rhs;
}

std::vector<int> AdmissibilityType::row_weights() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < partition.size(); ++i)
    out.insert(out.end(), partition[i], block_weights[i]);
  return out;
}

AdmissibilityType type_of_det(const std::vector<int>& partition,
                              std::pair<int, int> split) {
  check_partition_split(partition, split);
  AdmissibilityType t;
  t.block_weights.assign(partition.size(), 1);
  t.partition = partition;
  t.right_weights = {1, 1};
  t.split = split;
  return t;
}

AdmissibilityType type_of_corner(const std::vector<int>& partition,
                                 std::pair<int, int> split, Sign sign) {
  check_partition_split(partition, split);
  const int target = sign == Sign::Plus ? split.first : split.second;
  int prefix = 0;
  std::size_t cut = partition.size() + 1;
  for (std::size_t i = 0; i <= partition.size(); ++i) {
    if (prefix == target) {
      cut = i;
      break;
    }
    if (i < partition.size()) prefix += partition[i];
  }
  if (cut > partition.size())
    throw NotCriticalError("type_of_corner: no block prefix sums to the required d");
  AdmissibilityType t;
  t.block_weights.assign(partition.size(), 0);
  for (std::size_t i = 0; i < cut; ++i) t.block_weights[i] = 1;
  t.partition = partition;
  t.right_weights = sign == Sign::Plus ? std::pair{1, 0} : std::pair{0, 1};
  t.split = split;
  return t;
}

AdmissibilityType multiply_types(const AdmissibilityType& t1,
                                 const AdmissibilityType& t2) {
  if (t1.partition != t2.partition || t1.split != t2.split)
    throw ValidationError("multiply_types: partition/split mismatch");
  AdmissibilityType t = t1;
  for (std::size_t i = 0; i < t.block_weights.size(); ++i)
    t.block_weights[i] += t2.block_weights[i];
  t.right_weights.first += t2.right_weights.first;
  t.right_weights.second += t2.right_weights.second;
  return t;
}

AdmissibilityType type_of_cp(int n, int p) {
  return type_of_cp(n, p, {(n + 1) / 2, n / 2});
}

AdmissibilityType type_of_cp(int n, int p, std::pair<int, int> split) {
  if (split.first + split.second != n)
    throw ValidationError("type_of_cp: split must sum to n");
  const int limit = std::min(split.first, split.second) - 1;
  if (p < 1 || p > limit) {
    std::ostringstream os;
    os << "type_of_cp: p=" << p << " outside 1..min(d+,d-)-1=" << limit;
    throw ValidationError(os.str());
  }
  AdmissibilityType t;
  t.block_weights.assign(n, 1);
  for (int i = 0; i < p; ++i) {
    t.block_weights[i] = 2;
    t.block_weights[n - 1 - i] = 0;
  }
  t.partition.assign(n, 1);
  t.right_weights = {1, 1};
  t.split = split;
  return t;
}

namespace {

// ---- exponent matrix enumeration -----------------------------------------

// All d x d nonnegative integer matrices with prescribed row and column sums,
// in row-major lexicographic order.
class MatrixEnumerator {
 public:
  MatrixEnumerator(std::vector<int> row_sums, std::vector<int> col_sums)
      : row_sums_(std::move(row_sums)), col_sums_(std::move(col_sums)),
        d_(static_cast<int>(row_sums_.size())) {}

  std::vector<ExponentMatrix> run() {
    out_.clear();
    cur_.d = d_;
    cur_.e.assign(static_cast<std::size_t>(d_) * d_, 0);
    budget_ = col_sums_;
    fill_row(0);
    return std::move(out_);
  }

 private:
  void fill_row(int r) {
    if (r == d_) {
      for (int b : budget_)
        if (b != 0) return;
      out_.push_back(cur_);
      return;
    }
    // Column budgets must be coverable by the remaining row sums.
    long remaining = 0;
    for (int rr = r; rr < d_; ++rr) remaining += row_sums_[rr];
    for (int b : budget_)
      if (b > remaining) return;
    fill_cell(r, 0, row_sums_[r]);
  }

  void fill_cell(int r, int c, int need) {
    if (c == d_) {
      if (need == 0) fill_row(r + 1);
      return;
    }
    int future = 0;
    for (int cc = c + 1; cc < d_; ++cc) future += budget_[cc];
    const int lo = std::max(0, need - future);
    const int hi = std::min(need, budget_[c]);
    for (int e = lo; e <= hi; ++e) {
      cur_.at(r, c) = e;
      budget_[c] -= e;
      fill_cell(r, c + 1, need - e);
      budget_[c] += e;
      cur_.at(r, c) = 0;
    }
  }

  std::vector<int> row_sums_, col_sums_;
  int d_;
  std::vector<int> budget_;
  ExponentMatrix cur_;
  std::vector<ExponentMatrix> out_;
};

// ---- sparse exact linear algebra ------------------------------------------

using SparseRow = std::vector<std::pair<int, Rational>>;  // sorted by column

const Rational* row_get(const SparseRow& row, int col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const auto& a, int c) { return a.first < c; });
  if (it == row.end() || it->first != col) return nullptr;
  return &it->second;
}

// dst += f * src
void row_axpy(SparseRow& dst, const Rational& f, const SparseRow& src) {
  SparseRow out;
  out.reserve(dst.size() + src.size());
  auto a = dst.begin();
  auto b = src.begin();
  while (a != dst.end() || b != src.end()) {
    if (b == src.end() || (a != dst.end() && a->first < b->first)) {
      out.push_back(*a++);
    } else if (a == dst.end() || b->first < a->first) {
      Rational v = f * b->second;
      if (v != 0) out.emplace_back(b->first, std::move(v));
      ++b;
    } else {
      Rational v = a->second + f * b->second;
      if (v != 0) out.emplace_back(a->first, std::move(v));
      ++a;
      ++b;
    }
  }
  dst = std::move(out);
}

// Incremental reduced row echelon form. Pivot rows are kept fully reduced
// against each other, so nullspace extraction is a direct read-off.
class Rref {
 public:
  // Returns false if the row reduced to zero. Pivot rows are kept fully
  // inter-reduced, so eliminating a pivot column never introduces another.
  bool add_row(SparseRow row) {
    bool reduced = true;
    while (reduced) {
      reduced = false;
      for (const auto& [col, val] : row) {
        auto it = pivots_.find(col);
        if (it == pivots_.end()) continue;
        Rational f = -val;
        row_axpy(row, f, it->second);
        reduced = true;
        break;
      }
    }
    if (row.empty()) return false;
    const int lead = row.front().first;
    const Rational inv = 1 / row.front().second;
    for (auto& [c, v] : row) v *= inv;
    for (auto& [pc, prow] : pivots_) {
      if (const Rational* coef = row_get(prow, lead)) {
        Rational f = -*coef;
        row_axpy(prow, f, row);
      }
    }
    pivots_.emplace(lead, std::move(row));
    return true;
  }

  int rank() const { return static_cast<int>(pivots_.size()); }

  // Nullspace vector with free variable `free_col` set to 1.
  std::vector<Rational> kernel_vector(int free_col, int nvars) const {
    std::vector<Rational> x(nvars, Rational(0));
    x[free_col] = 1;
    for (const auto& [pc, prow] : pivots_) {
      if (const Rational* coef = row_get(prow, free_col)) x[pc] = -*coef;
    }
    return x;
  }

  bool is_pivot(int col) const { return pivots_.count(col) > 0; }

 private:
  std::map<int, SparseRow> pivots_;
};

std::vector<int> column_sums_for(const AdmissibilityType& t) {
  std::vector<int> cols;
  cols.insert(cols.end(), t.split.first, t.right_weights.first);
  cols.insert(cols.end(), t.split.second, t.right_weights.second);
  return cols;
}

std::vector<int> block_of_row(const AdmissibilityType& t) {
  std::vector<int> blk;
  for (std::size_t i = 0; i < t.partition.size(); ++i)
    blk.insert(blk.end(), t.partition[i], static_cast<int>(i));
  return blk;
}

}  // namespace

InvariantPolynomial construct_invariant(const AdmissibilityType& t) {
  check_partition_split(t.partition, t.split);
  if (t.block_weights.size() != t.partition.size())
    throw ValidationError("construct_invariant: block_weights/partition size mismatch");
  if (!t.degree_balanced())
    throw ValidationError("construct_invariant: degree imbalance");

  const int d = t.dimension();
  const std::vector<int> rows = t.row_weights();
  const std::vector<int> cols = column_sums_for(t);
  for (int w : rows)
    if (w < 0) throw NoSuchInvariantError("negative row weight");
  for (int w : cols)
    if (w < 0) throw NoSuchInvariantError("negative column weight");

  std::vector<ExponentMatrix> mats = MatrixEnumerator(rows, cols).run();
  if (mats.empty())
    throw NoSuchInvariantError("no monomials with the forced multidegrees");

  const std::vector<int> blk = block_of_row(t);
  const int dp = t.split.first;

  Rref rref;
  auto add_generator_rows = [&rref](std::map<ExponentMatrix, std::map<int, Rational>>& targets) {
    for (auto& [tgt, entries] : targets) {
      SparseRow row;
      row.reserve(entries.size());
      for (auto& [var, coef] : entries)
        if (coef != 0) row.emplace_back(var, std::move(coef));
      if (!row.empty()) rref.add_row(std::move(row));
    }
  };

  // Left unipotent generators: derivation x_{s,*} d/dx_{r,*} kills f for every
  // pair r != s with block(r) >= block(s).
  for (int r = 0; r < d; ++r) {
    for (int s = 0; s < d; ++s) {
      if (r == s || blk[r] < blk[s]) continue;
      std::map<ExponentMatrix, std::map<int, Rational>> targets;
      for (std::size_t v = 0; v < mats.size(); ++v) {
        const ExponentMatrix& em = mats[v];
        for (int c = 0; c < d; ++c) {
          const int e = em.at(r, c);
          if (e == 0) continue;
          ExponentMatrix moved = em;
          --moved.at(r, c);
          ++moved.at(s, c);
          targets[moved][static_cast<int>(v)] += e;
        }
      }
      add_generator_rows(targets);
    }
  }

  // Right unipotent generators: x_{*,c} d/dx_{*,c'} for c != c' in the same
  // sign block.
  for (int c = 0; c < d; ++c) {
    for (int c2 = 0; c2 < d; ++c2) {
      if (c == c2 || (c < dp) != (c2 < dp)) continue;
      std::map<ExponentMatrix, std::map<int, Rational>> targets;
      for (std::size_t v = 0; v < mats.size(); ++v) {
        const ExponentMatrix& em = mats[v];
        for (int u = 0; u < d; ++u) {
          const int e = em.at(u, c2);
          if (e == 0) continue;
          ExponentMatrix moved = em;
          --moved.at(u, c2);
          ++moved.at(u, c);
          targets[moved][static_cast<int>(v)] += e;
        }
      }
      add_generator_rows(targets);
    }
  }

  const int nvars = static_cast<int>(mats.size());
  const int dim = nvars - rref.rank();
  if (dim == 0) throw NoSuchInvariantError("equivariance constraints only satisfied by 0");
  if (dim > 1) {
    std::ostringstream os;
    os << "nullspace dimension " << dim << " contradicts uniqueness";
    throw NotUniqueError(os.str());
  }

  int free_col = -1;
  for (int v = 0; v < nvars; ++v)
    if (!rref.is_pivot(v)) {
      free_col = v;
      break;
    }
  std::vector<Rational> coef = rref.kernel_vector(free_col, nvars);

  InvariantPolynomial f;
  f.d = d;
  f.type = t;
  for (int v = 0; v < nvars; ++v)
    if (coef[v] != 0) f.terms.emplace(mats[v], coef[v]);

  // Normalize: lexicographically smallest exponent matrix gets coefficient 1.
  const Rational lead = f.terms.begin()->second;
  for (auto& [em, cf] : f.terms) cf /= lead;
  return f;
}

Rational evaluate(const InvariantPolynomial& f, const RationalMatrix& x) {
  if (x.rows() != f.d || x.cols() != f.d)
    throw DimensionError("evaluate: matrix dims do not match polynomial");
  Rational acc(0);
  for (const auto& [em, cf] : f.terms) {
    Rational term = cf;
    for (int i = 0; i < f.d; ++i)
      for (int j = 0; j < f.d; ++j) {
        for (int e = em.at(i, j); e > 0; --e) term *= x.at(i, j);
      }
    acc += term;
  }
  return acc;
}

InvariantPolynomial multiply(const InvariantPolynomial& f, const InvariantPolynomial& g) {
  if (f.d != g.d) throw DimensionError("multiply: polynomial dims disagree");
  InvariantPolynomial h;
  h.d = f.d;
  h.type = multiply_types(f.type, g.type);
  for (const auto& [ef, cf] : f.terms)
    for (const auto& [eg, cg] : g.terms) {
      ExponentMatrix em = ef;
      for (std::size_t i = 0; i < em.e.size(); ++i) em.e[i] += eg.e[i];
      auto [it, inserted] = h.terms.emplace(std::move(em), cf * cg);
      if (!inserted) {
        it->second += cf * cg;
        if (it->second == 0) h.terms.erase(it);
      }
    }
  return h;
}

EquivarianceReport check_equivariance(const InvariantPolynomial& f,
                                      const AdmissibilityType& t, int samples,
                                      std::uint64_t seed, int bound) {
  check_partition_split(t.partition, t.split);
  if (t.dimension() != f.d)
    throw DimensionError("check_equivariance: type dimension does not match polynomial");

  EquivarianceReport rep;
  rep.samples = samples;
  for (int s = 0; s < samples; ++s) {
    Rng rng(derive_seed(seed, {0xE9u, static_cast<std::uint64_t>(s)}));
    RationalMatrix p = random_block_lower(rng, t.partition, bound);
    RationalMatrix x = random_matrix(rng, f.d, f.d, bound);
    std::vector<int> gsizes;
    if (t.split.first > 0) gsizes.push_back(t.split.first);
    if (t.split.second > 0) gsizes.push_back(t.split.second);
    RationalMatrix g = random_block_diagonal(rng, gsizes, bound);

    Rational lambda1(1);
    int off = 0;
    for (std::size_t i = 0; i < t.partition.size(); ++i) {
      lambda1 *= rational_pow(block_determinant(p, off, t.partition[i]),
                              t.block_weights[i]);
      off += t.partition[i];
    }
    Rational lambda2 = rational_pow(block_determinant(g, 0, t.split.first),
                                    t.right_weights.first) *
                       rational_pow(block_determinant(g, t.split.first, t.split.second),
                                    t.right_weights.second);

    Rational lhs = evaluate(f, matmul(matmul(p, x), g));
    Rational rhs = lambda1 * evaluate(f, x) * lambda2;
    if (lhs != rhs) {
      rep.pass = false;
      rep.failed_sample = s;
      rep.lhs = lhs;
      rep.rhs = rhs;
      return rep;
    }
  }
  return rep;
}

}  // namespace periods::invariant
