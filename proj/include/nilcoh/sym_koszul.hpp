#ifndef NILCOH_SYM_KOSZUL_HPP
#define NILCOH_SYM_KOSZUL_HPP

#include <map>
#include <vector>

#include "nilcoh/graded.hpp"
#include "nilcoh/linalg.hpp"
#include "nilcoh/root_system.hpp"

namespace nilcoh {

// free graded-commutative polynomial base Sym(W); generators carry nonzero
// grades in the positive cone of some lattice
struct GradedSpace {
  int lattice_rank = 1;
  std::vector<GradingVector> gens;

  int dim() const { return static_cast<int>(gens.size()); }
  GradingVector grade_of_mono(const std::vector<int>& exps) const;
  static GradedSpace uniform(int dim, int lattice_rank = 1);  // every generator in grade (1,0,..)
};

struct SymPoly {
  std::map<std::vector<int>, Rat> terms;  // exponent vector over W -> coefficient

  static SymPoly var(int i, int dim);
  static SymPoly constant(const Rat& c, int dim);
  bool is_zero() const { return terms.empty(); }
};

// finitely presented graded module over Sym(W)
struct GradedModule {
  GradedSpace W;
  std::vector<GradingVector> gen_grades;
  std::vector<std::vector<SymPoly>> relations;  // relation -> coefficient per generator

  void validate() const;  // homogeneity of every relation, throws otherwise

  static GradedModule free_rank_one(const GradedSpace& W);
  static GradedModule augmentation(const GradedSpace& W);  // Sym(W)/W = C
  static GradedModule quotient_by_one(const GradedSpace& W, const SymPoly& w);
};

// Tor over Sym(W) against C via the exterior Koszul complex, reported by
// (grade, homological degree) within the bound
GradedDims sym_koszul_tor(const GradedModule& M, int bound);

// the same Tor from the (normalized) bar resolution, an independent route
GradedDims tor_bar_resolution(const GradedModule& M, int bound);

}  // namespace nilcoh

#endif
