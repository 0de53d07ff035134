#pragma once

#include <array>
#include <string>
#include <vector>

#include "itnorm/repdata.hpp"

namespace itnorm::weyl {

// Dense square integer matrix; entries stay in {-1,0,1} for everything this
// module builds, and all checks are exact.
class BlockMatrix {
 public:
  BlockMatrix() = default;
  explicit BlockMatrix(int dim) : dim_(dim), e_(static_cast<std::size_t>(dim) * dim, 0) {}

  static BlockMatrix identity(int dim);

  int dim() const { return dim_; }
  int at(int i, int j) const { return e_[static_cast<std::size_t>(i) * dim_ + j]; }
  int& at(int i, int j) { return e_[static_cast<std::size_t>(i) * dim_ + j]; }

  BlockMatrix transposed() const;
  BlockMatrix scaled(int c) const;
  bool is_identity() const;

  friend bool operator==(const BlockMatrix&, const BlockMatrix&) = default;

  // Places src so that its (0,0) entry lands at (row, col).
  void emplace_block(int row, int col, const BlockMatrix& src);
  void emplace_identity(int row, int col, int size, int sign = 1);

  std::string text() const;  // rows of signed integers

 private:
  int dim_ = 0;
  std::vector<int> e_;
};

BlockMatrix multiply(const BlockMatrix& a, const BlockMatrix& b);
inline BlockMatrix operator*(const BlockMatrix& a, const BlockMatrix& b) { return multiply(a, b); }

long long determinant(const BlockMatrix& m);  // exact, fraction-free elimination

// Inverse of a signed permutation matrix (one nonzero +-1 entry per row and
// column); throws DimensionMismatch on anything else.
BlockMatrix signed_permutation_inverse(const BlockMatrix& m);

// Defining antidiagonal form of a split group: symmetric all-ones for the SO
// types, alternating (+1 above the middle, -1 below) for Sp.
struct GroupForm {
  GroupType group;
  int rank = 0;
  BlockMatrix J;

  int dim() const { return J.dim(); }
};

GroupForm build_form(GroupType group, int n);  // throws NonSplitGroup

bool preserves_form(const GroupForm& form, const BlockMatrix& m);  // m^T J m == J

// w_k = (-1)^k antidiag(I_k | I_{N0} | eps I_k) with eps in {+1,-1} chosen so
// that the form is preserved; reports the chosen eps.
struct SignedWeylElement {
  BlockMatrix matrix;
  int eps = 0;
};

SignedWeylElement build_wk(GroupType group, int n, int k);  // throws NoValidSign if neither eps works

// c = diag(I_{n-1}, [0 1; 1 0], I_{n-1}) for SO_{2n}.
BlockMatrix build_c(int n);

enum class DecompWay { Way12, Way34 };

struct Decomposition {
  std::array<BlockMatrix, 3> factors;
  std::vector<int> inner_eps;  // eps chosen for each embedded Weyl block, in factor order
};

// Way12: w_k = diag(I_{k-d}, w_d, I_{k-d}) . diag(P, I_{N0}, Q) . diag(I_d, w_{k-d}, I_d),
//        0 <= d <= k.
// Way34: w_k = diag(A, I_{N0-2d}, B) . diag(I_d, w_k, I_d) . diag(B', I_{N0-2d}, A'),
//        0 <= d <= n-k.
// The embedded w blocks carry their own form-resolved signs.
Decomposition decompose(DecompWay way, GroupType group, int n, int k, int d);

enum class DecompOutcome { Exact, TorusCorrected, Fail };

struct DecompCheck {
  DecompOutcome outcome = DecompOutcome::Fail;
  BlockMatrix product;               // F1*F2*F3
  BlockMatrix reference;             // build_wk
  BlockMatrix correction;            // diagonal D with product == D * w_k (TorusCorrected)
  BlockMatrix difference;            // product - w_k (Fail)
  bool factors_preserve_form = false;
};

// Multiplies the three factors and compares with build_wk; on mismatch looks
// for a +-1 diagonal D with D^T J D = J and product = D * w_k.
DecompCheck check_decomposition(GroupType group, int n, int k, int d, DecompWay way);

const char* outcome_name(DecompOutcome o);

}  // namespace itnorm::weyl
