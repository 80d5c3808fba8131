#ifndef NILCOH_CURVE_HPP
#define NILCOH_CURVE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nilcoh/graded.hpp"
#include "nilcoh/module.hpp"
#include "nilcoh/sym_koszul.hpp"

namespace nilcoh {

// formal curve with a regular twisting datum: every root line has
// h0 = h2 = 0 and h1 = 2g-2, optionally overridden globally or per root
struct CurveModel {
  int genus = 2;
  std::optional<int> h1_override;
  std::map<int, int> per_root;  // positive-root index -> h1

  int h1(int root_idx) const;
  void validate() const;  // genus >= 1 unless h1 is overridden
};

// truncated lattice-indexed integer series; every operation carries its bound
struct HilbertSeries {
  int lattice_rank = 0;
  int bound = 0;
  std::map<std::vector<int>, long long> coeff;

  HilbertSeries() = default;
  HilbertSeries(int rank, int bound_) : lattice_rank(rank), bound(bound_) {
    if (bound_ < 0) throw std::invalid_argument("HilbertSeries: bound must be >= 0");
  }

  void add(const std::vector<int>& key, long long v) {
    if (v == 0) return;
    auto it = coeff.find(key);
    if (it == coeff.end())
      coeff[key] = v;
    else if ((it->second += v) == 0)
      coeff.erase(it);
  }
  long long at(const std::vector<int>& key) const {
    auto it = coeff.find(key);
    return it == coeff.end() ? 0 : it->second;
  }
  static HilbertSeries one(int rank, int bound);
  // positive-cone product, truncated at min of the bounds
  HilbertSeries mul(const HilbertSeries& o) const;
  bool is_one() const;
};

struct PowerCohomology {
  GradedDims dims;  // key: empty vector, degree: topological
  int shift = 0;    // perverse normalization subtracts this
};

enum class PowerFlavor { symmetric, exterior };

// graded dimensions of the cohomology of the d-th external power on the
// symmetric power of the curve, from the graded symmetric/exterior formula
PowerCohomology power_cohomology(int h0, int h1, int h2, int d, PowerFlavor flavor);

// total dimension at lambda by direct enumeration of root decompositions
long long upsilon_total(const RootSystem& rs, const CurveModel& curve, const GradingVector& lambda);
GradedDims upsilon_dims(const RootSystem& rs, const CurveModel& curve, const GradingVector& lambda);

// coefficients of prod_a (1 - t^a)^{-h1(a)} up to the bound, by series product
HilbertSeries r_hilbert(const RootSystem& rs, const CurveModel& curve, int bound);

// graded dimensions of the fiber module of V at a point; keys are
// fundamental-weight coordinates
HilbertSeries hecke_hilbert(const RootSystem& rs, const CurveModel& curve,
                            const HighestWeightModule& v, int bound);

struct PartitionOfLambda {
  std::vector<std::pair<GradingVector, int>> parts;  // distinct nonzero, with multiplicity
  int size = 0;                                      // sum of multiplicities
};
std::vector<PartitionOfLambda> strata_partitions(const RootSystem& rs, const GradingVector& lambda);

struct GlobalInversionRow {
  GradingVector lambda;
  long long euler;       // coefficient of the Euler series E
  long long closed_form; // coefficient of prod (1-t^a)^{h1}
  long long product;     // coefficient of E * Hilb(R)
  bool pass;
};
struct GlobalInversionReport {
  bool pass = true;
  std::vector<GlobalInversionRow> rows;
};
GlobalInversionReport global_inversion(const RootSystem& rs, const CurveModel& curve, int bound);

struct Gl2Row {
  int d;
  long long binom;        // C(2g-2, d)
  long long power_dim;    // symmetric-flavor curve cohomology in degree d
  long long tor_dim;      // Koszul resolution term over Sym(W)
  bool pass;
};
struct Gl2Report {
  int genus = 0;
  int wdim = 0;
  bool pass = true;
  std::vector<Gl2Row> rows;
};
Gl2Report gl2_report(int genus, int bound);

}  // namespace nilcoh

#endif
