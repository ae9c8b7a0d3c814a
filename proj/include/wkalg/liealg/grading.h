#pragma once

#include <map>
#include <vector>

#include "wkalg/exact/rat.h"
#include "wkalg/liealg/partition.h"

namespace wkalg {

// Half-integer grades are stored doubled: key 2j for the degree j piece.

/// Diagonal of the Dynkin element x = h/2 for a partition: one chain
/// (p-1)/2, (p-3)/2, ..., -(p-1)/2 per part.
struct DynkinGrading {
  std::vector<int> twice_eigenvalues;  // sorted descending (dominant)
  std::vector<Rat> labels;             // N-1 weighted Dynkin labels in {0, 1/2, 1}

  std::vector<Rat> eigenvalues() const;
  int rank_plus_one() const { return static_cast<int>(twice_eigenvalues.size()); }
};

struct GradedDims {
  std::map<int, int> g;   // 2j -> dim g_j, every nonzero degree
  std::map<int, int> gf;  // 2j -> dim g^f_j for j <= 0, nonzero only

  int g_at(int twice_j) const;
  int gf_at(int twice_j) const;
  int total_g() const;
  int total_gf() const;
};

DynkinGrading dynkin_grading(const Partition& p);

/// dim g_j counts ordered eigenvalue pairs (u, v) with u - v = j, minus the
/// identity at j = 0; dim g^f_j = dim g_j - dim g_{j-1} for j <= 0.
GradedDims graded_dims(const DynkinGrading& grading);

/// (x|x) in the trace form.
Rat x_norm(const DynkinGrading& grading);

/// (h_theta|x): largest minus smallest eigenvalue of x.
Rat theta_pairing(const DynkinGrading& grading);

struct HeightInfo {
  int height = 0;      // max{n : ad(f)^n != 0} = theta(2x)
  bool in_np = false;  // ad(f)^{2p} = 0
};

/// pp >= 1; throws std::invalid_argument otherwise.
HeightInfo height_and_np(const Partition& p, int pp);

/// Even good grading x_good for the hook (m, 1^n).
struct HookGoodGrading {
  std::vector<Rat> eigenvalues;
  bool even = false;  // all eigenvalue differences integral
  int dim_g0 = 0;     // dim of the degree-0 piece (sl part)
};

HookGoodGrading hook_good_grading(int m, int n);

/// x_good is even and its g_0 has the dimension of g^f computed from the
/// Dynkin grading, as an even good grading must.
bool hook_good_grading_consistent(int m, int n);

}  // namespace wkalg
