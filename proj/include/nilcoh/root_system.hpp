#ifndef NILCOH_ROOT_SYSTEM_HPP
#define NILCOH_ROOT_SYSTEM_HPP

#include <compare>
#include <string>
#include <vector>

#include "nilcoh/linalg.hpp"
#include "nilcoh/numeric.hpp"

namespace nilcoh {

struct CartanMatrix {
  std::vector<std::vector<int>> a;

  int rank() const { return static_cast<int>(a.size()); }

  // throws std::invalid_argument naming the first failing condition; the
  // finite-type test is positivity of every leading principal minor
  void validate() const;

  static CartanMatrix preset(const std::string& name);
  static const std::vector<std::string>& preset_names();
  static CartanMatrix from_json_file(const std::string& path);
};

// point of the grading lattice in simple-root coordinates
struct GradingVector {
  std::vector<int> c;

  GradingVector() = default;
  explicit GradingVector(std::vector<int> coords) : c(std::move(coords)) {}

  int rank() const { return static_cast<int>(c.size()); }
  int height() const;  // |lambda|
  bool nonneg() const;
  bool is_zero() const;

  GradingVector operator+(const GradingVector& o) const;
  GradingVector operator-(const GradingVector& o) const;
  bool operator==(const GradingVector& o) const = default;
  auto operator<=>(const GradingVector& o) const = default;  // plain lex
};

// height first, then lex: the canonical order used everywhere downstream
bool canonical_less(const GradingVector& x, const GradingVector& y);

// rational vector in simple-root coordinates
struct Weight {
  std::vector<Rat> c;

  Weight() = default;
  explicit Weight(std::vector<Rat> coords) : c(std::move(coords)) {}
  static Weight zero(int rank) { return Weight(std::vector<Rat>(rank, Rat(0))); }
  static Weight of(const GradingVector& g);

  int rank() const { return static_cast<int>(c.size()); }
  bool is_zero() const;

  Weight operator+(const Weight& o) const;
  Weight operator-(const Weight& o) const;
  Weight operator-() const;
  Weight scaled(const Rat& s) const;
  bool operator==(const Weight& o) const = default;
  bool operator<(const Weight& o) const;  // lex, for map keys
};

struct WeylElement {
  std::vector<int> word;                 // reduced word, certificate only
  std::vector<std::vector<int>> action;  // matrix on simple-root coordinates
  int length = 0;

  Weight apply(const Weight& w) const;
  std::vector<int> apply(const std::vector<int>& coords) const;
};

class RootSystem {
 public:
  explicit RootSystem(CartanMatrix cm);

  const CartanMatrix& cartan() const { return cm_; }
  int rank() const { return cm_.rank(); }

  const std::vector<GradingVector>& positive_roots() const { return pos_; }
  int num_positive() const { return static_cast<int>(pos_.size()); }
  const GradingVector& root(int i) const { return pos_[i]; }
  int root_index(const GradingVector& g) const;  // -1 if not a positive root
  bool is_root(const std::vector<int>& coords) const;  // membership in plus/minus Delta

  const Weight& rho() const { return rho_; }

  const std::vector<WeylElement>& weyl() const { return weyl_; }
  const WeylElement& longest_element() const { return weyl_.back(); }

  // symmetrized invariant form on the root-coordinate space
  Rat bilinear(const Weight& x, const Weight& y) const;
  Rat root_norm2(const GradingVector& g) const;
  // <mu, beta-check> = 2 (mu, beta) / (beta, beta)
  Rat pair_coroot(const Weight& mu, const GradingVector& beta) const;

  std::vector<Rat> fundamental_coords(const Weight& w) const;
  Weight from_fundamental(const std::vector<Rat>& f) const;
  Weight from_fundamental_int(const std::vector<int>& f) const;
  bool is_dominant_integral(const Weight& w) const;

  Weight simple_root(int i) const;
  GradingVector highest_root() const { return pos_.back(); }

 private:
  CartanMatrix cm_;
  std::vector<GradingVector> pos_;
  Weight rho_;
  std::vector<WeylElement> weyl_;  // sorted by (length, action lex), identity first
  std::vector<Rat> sym_;           // d_i with d_i a_ij symmetric
  DenseMat inv_cartan_;
};

RootSystem build_root_system(const CartanMatrix& cm);

std::vector<WeylElement> weyl_elements_by_length(const RootSystem& rs, int k);

// w(eta + rho) - rho
Weight dot_action(const WeylElement& w, const Weight& eta, const RootSystem& rs);

// number of multisets of positive roots with the given sum
long long kostant_partition(const RootSystem& rs, const GradingVector& lambda);

// all lattice points of the positive cone with |lambda| <= bound, canonical order
std::vector<GradingVector> positive_cone(int rank, int bound);

}  // namespace nilcoh

#endif
