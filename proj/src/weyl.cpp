#include "itnorm/weyl.hpp"

#include <cstdlib>

#include "itnorm/error.hpp"

namespace itnorm::weyl {

namespace {

int group_dim(GroupType g, int n) {
  switch (g) {
    case GroupType::SOOdd: return 2 * n + 1;
    case GroupType::Sp:
    case GroupType::SOEven: return 2 * n;
    default: throw Error(Errc::NonSplitGroup, std::string(group_name(g)) + " has no split matrix model here");
  }
}

}  // namespace

BlockMatrix BlockMatrix::identity(int dim) {
  BlockMatrix m(dim);
  for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
  return m;
}

BlockMatrix BlockMatrix::transposed() const {
  BlockMatrix m(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) m.at(j, i) = at(i, j);
  return m;
}

BlockMatrix BlockMatrix::scaled(int c) const {
  BlockMatrix m = *this;
  for (auto& v : m.e_) v *= c;
  return m;
}

bool BlockMatrix::is_identity() const { return *this == identity(dim_); }

void BlockMatrix::emplace_block(int row, int col, const BlockMatrix& src) {
  if (row + src.dim() > dim_ || col + src.dim() > dim_)
    throw Error(Errc::DimensionMismatch, "block does not fit");
  for (int i = 0; i < src.dim(); ++i)
    for (int j = 0; j < src.dim(); ++j) at(row + i, col + j) = src.at(i, j);
}

void BlockMatrix::emplace_identity(int row, int col, int size, int sign) {
  if (row + size > dim_ || col + size > dim_) throw Error(Errc::DimensionMismatch, "identity block does not fit");
  for (int i = 0; i < size; ++i) at(row + i, col + i) = sign;
}

std::string BlockMatrix::text() const {
  std::string out;
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) {
      if (j) out += " ";
      if (at(i, j) >= 0) out += " ";
      out += std::to_string(at(i, j));
    }
    out += "\n";
  }
  return out;
}

BlockMatrix multiply(const BlockMatrix& a, const BlockMatrix& b) {
  if (a.dim() != b.dim()) throw Error(Errc::DimensionMismatch, "matrix product of unequal dimensions");
  BlockMatrix m(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int k = 0; k < a.dim(); ++k) {
      int aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < a.dim(); ++j) m.at(i, j) += aik * b.at(k, j);
    }
  return m;
}

long long determinant(const BlockMatrix& m) {
  // Bareiss fraction-free elimination; entries here are tiny.
  int n = m.dim();
  std::vector<long long> a(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i) * n + j] = m.at(i, j);
  long long sign = 1, prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[static_cast<std::size_t>(k) * n + k] == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (a[static_cast<std::size_t>(i) * n + k] != 0) { p = i; break; }
      if (p < 0) return 0;
      for (int j = 0; j < n; ++j)
        std::swap(a[static_cast<std::size_t>(k) * n + j], a[static_cast<std::size_t>(p) * n + j]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        long long num = a[static_cast<std::size_t>(i) * n + j] * a[static_cast<std::size_t>(k) * n + k] -
                        a[static_cast<std::size_t>(i) * n + k] * a[static_cast<std::size_t>(k) * n + j];
        a[static_cast<std::size_t>(i) * n + j] = num / prev;
      }
    prev = a[static_cast<std::size_t>(k) * n + k];
  }
  return sign * a[static_cast<std::size_t>(n - 1) * n + (n - 1)];
}

BlockMatrix signed_permutation_inverse(const BlockMatrix& m) {
  BlockMatrix inv(m.dim());
  for (int j = 0; j < m.dim(); ++j) {
    int hits = 0;
    for (int i = 0; i < m.dim(); ++i) {
      int v = m.at(i, j);
      if (v == 0) continue;
      if (std::abs(v) != 1) throw Error(Errc::DimensionMismatch, "not a signed permutation matrix");
      inv.at(j, i) = v;  // (P^-1)_{ji} = 1/v = v for v = +-1
      ++hits;
    }
    if (hits != 1) throw Error(Errc::DimensionMismatch, "not a signed permutation matrix");
  }
  return inv;
}

GroupForm build_form(GroupType group, int n) {
  if (!is_split(group)) throw Error(Errc::NonSplitGroup, std::string(group_name(group)) + " has no fixed form");
  if (n < 1) throw Error(Errc::BadArgument, "rank must be >= 1");
  int N = group_dim(group, n);
  BlockMatrix J(N);
  for (int i = 0; i < N; ++i) {
    int v = 1;
    if (group == GroupType::Sp && i >= n) v = -1;
    J.at(i, N - 1 - i) = v;
  }
  return GroupForm{group, n, J};
}

bool preserves_form(const GroupForm& form, const BlockMatrix& m) {
  return multiply(multiply(m.transposed(), form.J), m) == form.J;
}

namespace {

// w_k candidate before sign resolution: (-1)^k antidiag(I_k | I_{N0} | eps I_k).
BlockMatrix wk_candidate(int N, int k, int eps) {
  BlockMatrix m(N);
  int N0 = N - 2 * k;
  m.emplace_identity(0, N - k, k, 1);
  m.emplace_identity(k, k, N0, 1);
  m.emplace_identity(N - k, 0, k, eps);
  return (k % 2 != 0) ? m.scaled(-1) : m;
}

}  // namespace

SignedWeylElement build_wk(GroupType group, int n, int k) {
  if (k < 1 || k > n) throw Error(Errc::BadArgument, "need 1 <= k <= n");
  GroupForm form = build_form(group, n);
  for (int eps : {1, -1}) {
    BlockMatrix m = wk_candidate(form.dim(), k, eps);
    if (preserves_form(form, m)) return SignedWeylElement{m, eps};
  }
  throw Error(Errc::NoValidSign, "neither sign of the lower block preserves the form (wrong form convention?)");
}

BlockMatrix build_c(int n) {
  if (n < 1) throw Error(Errc::BadArgument, "rank must be >= 1");
  BlockMatrix m = BlockMatrix::identity(2 * n);
  m.at(n - 1, n - 1) = 0;
  m.at(n, n) = 0;
  m.at(n - 1, n) = 1;
  m.at(n, n - 1) = 1;
  return m;
}

namespace {

// Embedded Weyl block for the same family at rank m, GL block size j; j = 0
// degenerates to the identity.
SignedWeylElement inner_w(GroupType group, int m, int j) {
  if (j == 0) return SignedWeylElement{BlockMatrix::identity(group_dim(group, m)), 1};
  return build_wk(group, m, j);
}

// [[0, I_top], [I_bottom, 0]] of size top+bottom with I_top in the upper
// right; this is the GL block-swap the decompositions conjugate by.
BlockMatrix block_swap(int top, int bottom) {
  BlockMatrix m(top + bottom);
  m.emplace_identity(0, bottom, top, 1);
  m.emplace_identity(top, 0, bottom, 1);
  return m;
}

}  // namespace

Decomposition decompose(DecompWay way, GroupType group, int n, int k, int d) {
  GroupForm form = build_form(group, n);
  int N = form.dim();
  int N0 = N - 2 * k;
  if (k < 1 || k > n) throw Error(Errc::BadArgument, "need 1 <= k <= n");

  Decomposition out;
  if (way == DecompWay::Way12) {
    if (d < 0 || d > k) throw Error(Errc::DimensionMismatch, "Way12 needs 0 <= d <= k");
    SignedWeylElement wd = inner_w(group, n - (k - d), d);
    SignedWeylElement wkd = inner_w(group, n - d, k - d);

    BlockMatrix f1(N);
    f1.emplace_identity(0, 0, k - d);
    f1.emplace_block(k - d, k - d, wd.matrix);
    f1.emplace_identity(N - (k - d), N - (k - d), k - d);

    BlockMatrix f2(N);
    f2.emplace_block(0, 0, block_swap(k - d, d));
    f2.emplace_identity(k, k, N0);
    f2.emplace_block(N - k, N - k, block_swap(d, k - d));

    BlockMatrix f3(N);
    f3.emplace_identity(0, 0, d);
    f3.emplace_block(d, d, wkd.matrix);
    f3.emplace_identity(N - d, N - d, d);

    out.factors = {f1, f2, f3};
    out.inner_eps = {wd.eps, wkd.eps};
  } else {
    if (d < 0 || d > n - k) throw Error(Errc::DimensionMismatch, "Way34 needs 0 <= d <= n-k");
    SignedWeylElement wk_inner = inner_w(group, n - d, k);

    BlockMatrix f1(N);
    f1.emplace_block(0, 0, block_swap(k, d));
    f1.emplace_identity(k + d, k + d, N0 - 2 * d);
    f1.emplace_block(N - (k + d), N - (k + d), block_swap(d, k));

    BlockMatrix f2(N);
    f2.emplace_identity(0, 0, d);
    f2.emplace_block(d, d, wk_inner.matrix);
    f2.emplace_identity(N - d, N - d, d);

    BlockMatrix f3(N);
    f3.emplace_block(0, 0, block_swap(d, k));
    f3.emplace_identity(k + d, k + d, N0 - 2 * d);
    f3.emplace_block(N - (k + d), N - (k + d), block_swap(k, d));

    out.factors = {f1, f2, f3};
    out.inner_eps = {wk_inner.eps};
  }
  return out;
}

DecompCheck check_decomposition(GroupType group, int n, int k, int d, DecompWay way) {
  GroupForm form = build_form(group, n);
  Decomposition dec = decompose(way, group, n, k, d);
  DecompCheck check;
  check.factors_preserve_form = true;
  for (const auto& f : dec.factors)
    if (!preserves_form(form, f)) check.factors_preserve_form = false;

  check.product = dec.factors[0] * dec.factors[1] * dec.factors[2];
  check.reference = build_wk(group, n, k).matrix;
  if (check.product == check.reference) {
    check.outcome = DecompOutcome::Exact;
    return check;
  }

  // Candidate torus element D = product * w_k^-1; accept iff it is a +-1
  // diagonal preserving the form (for antidiagonal J: d_i == d_{N-1-i}).
  BlockMatrix cand = check.product * signed_permutation_inverse(check.reference);
  bool diagonal = true;
  int N = cand.dim();
  for (int i = 0; i < N && diagonal; ++i)
    for (int j = 0; j < N && diagonal; ++j) {
      if (i == j ? std::abs(cand.at(i, j)) != 1 : cand.at(i, j) != 0) diagonal = false;
    }
  if (diagonal && preserves_form(form, cand)) {
    check.outcome = DecompOutcome::TorusCorrected;
    check.correction = cand;
    return check;
  }

  check.outcome = DecompOutcome::Fail;
  check.difference = BlockMatrix(N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) check.difference.at(i, j) = check.product.at(i, j) - check.reference.at(i, j);
  return check;
}

const char* outcome_name(DecompOutcome o) {
  switch (o) {
    case DecompOutcome::Exact: return "exact";
    case DecompOutcome::TorusCorrected: return "torus_corrected";
    case DecompOutcome::Fail: return "fail";
  }
  return "?";
}

}  // namespace itnorm::weyl
