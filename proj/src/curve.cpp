#include "nilcoh/curve.hpp"

#include <algorithm>
#include <stdexcept>

namespace nilcoh {

int CurveModel::h1(int root_idx) const {
  auto it = per_root.find(root_idx);
  if (it != per_root.end()) return it->second;
  if (h1_override) return *h1_override;
  return 2 * genus - 2;
}

void CurveModel::validate() const {
  if (h1_override) {
    if (*h1_override < 0) throw std::invalid_argument("curve model: h1 must be >= 0");
    return;
  }
  if (genus < 1) throw std::invalid_argument("curve model: genus must be >= 1 in the regular model");
  for (const auto& [r, h] : per_root)
    if (h < 0) throw std::invalid_argument("curve model: per-root h1 must be >= 0");
}

HilbertSeries HilbertSeries::one(int rank, int bound) {
  HilbertSeries s(rank, bound);
  s.coeff[std::vector<int>(rank, 0)] = 1;
  return s;
}

HilbertSeries HilbertSeries::mul(const HilbertSeries& o) const {
  if (lattice_rank != o.lattice_rank)
    throw std::invalid_argument("HilbertSeries: lattice rank mismatch");
  HilbertSeries out(lattice_rank, std::min(bound, o.bound));
  for (const auto& [ka, va] : coeff)
    for (const auto& [kb, vb] : o.coeff) {
      std::vector<int> k(lattice_rank);
      int h = 0;
      for (int i = 0; i < lattice_rank; ++i) {
        k[i] = ka[i] + kb[i];
        h += k[i];
      }
      if (h > out.bound) continue;
      out.add(k, va * vb);
    }
  return out;
}

bool HilbertSeries::is_one() const {
  if (coeff.size() != 1) return coeff.empty();
  const auto& [k, v] = *coeff.begin();
  return v == 1 && std::all_of(k.begin(), k.end(), [](int x) { return x == 0; });
}

PowerCohomology power_cohomology(int h0, int h1, int h2, int d, PowerFlavor flavor) {
  if (d < 0) throw std::invalid_argument("power_cohomology: d must be >= 0");
  PowerCohomology out;
  out.shift = flavor == PowerFlavor::exterior ? d : 0;
  // graded power of the three-step cohomology: pick a from degree 0, b from
  // degree 1, c from degree 2; the odd part flips between Sym and Lambda
  for (int a = 0; a <= d; ++a)
    for (int b = 0; a + b <= d; ++b) {
      int c = d - a - b;
      Int count;
      if (flavor == PowerFlavor::symmetric)
        count = multichoose(h0, a) * binomial(h1, b) * multichoose(h2, c);
      else
        count = binomial(h0, a) * multichoose(h1, b) * binomial(h2, c);
      if (count == 0) continue;
      out.dims.add({}, b + 2 * c, to_ll(count));
    }
  return out;
}

namespace {

long long upsilon_rec(const RootSystem& rs, const CurveModel& curve, const GradingVector& rem,
                      int from) {
  if (rem.is_zero()) return 1;
  if (from >= rs.num_positive() || !rem.nonneg()) return 0;
  long long total = upsilon_rec(rs, curve, rem, from + 1);  // multiplicity 0 at this root
  GradingVector r = rem - rs.root(from);
  int n = 1;
  while (r.nonneg()) {
    total += to_ll(multichoose(curve.h1(from), n)) * upsilon_rec(rs, curve, r, from + 1);
    r = r - rs.root(from);
    ++n;
  }
  return total;
}

}  // namespace

long long upsilon_total(const RootSystem& rs, const CurveModel& curve,
                        const GradingVector& lambda) {
  curve.validate();
  if (!lambda.nonneg()) throw std::invalid_argument("upsilon_dims: lambda must be in the cone");
  return upsilon_rec(rs, curve, lambda, 0);
}

GradedDims upsilon_dims(const RootSystem& rs, const CurveModel& curve,
                        const GradingVector& lambda) {
  GradedDims out;
  std::vector<Rat> key(lambda.c.size());
  for (size_t i = 0; i < lambda.c.size(); ++i) key[i] = lambda.c[i];
  out.add(key, 0, upsilon_total(rs, curve, lambda));
  return out;
}

HilbertSeries r_hilbert(const RootSystem& rs, const CurveModel& curve, int bound) {
  curve.validate();
  if (bound < 0) throw std::invalid_argument("r_hilbert: bound must be >= 0");
  HilbertSeries s = HilbertSeries::one(rs.rank(), bound);
  for (int r = 0; r < rs.num_positive(); ++r) {
    HilbertSeries geom(rs.rank(), bound);
    int ht = rs.root(r).height();
    for (int k = 0; k * ht <= bound; ++k) {
      std::vector<int> key(rs.rank());
      for (int i = 0; i < rs.rank(); ++i) key[i] = k * rs.root(r).c[i];
      geom.add(key, to_ll(multichoose(curve.h1(r), k)));
    }
    s = s.mul(geom);
  }
  return s;
}

HilbertSeries hecke_hilbert(const RootSystem& rs, const CurveModel& curve,
                            const HighestWeightModule& v, int bound) {
  curve.validate();
  if (bound < 0) throw std::invalid_argument("hecke_hilbert: bound must be >= 0");
  HilbertSeries s(rs.rank(), bound);
  for (const auto& nu_prime : v.weights()) {
    long long mult = v.weight_dim(nu_prime);
    std::vector<long long> f0;
    for (const Rat& x : rs.fundamental_coords(nu_prime)) f0.push_back(to_ll(x));
    for (const auto& lam : positive_cone(rs.rank(), bound)) {
      Weight nu = nu_prime - Weight::of(lam);
      std::vector<int> key(rs.rank());
      auto fc = rs.fundamental_coords(nu);
      for (int i = 0; i < rs.rank(); ++i) key[i] = static_cast<int>(to_ll(fc[i]));
      s.add(key, mult * upsilon_total(rs, curve, lam));
    }
  }
  return s;
}

namespace {

void partition_rec(const RootSystem& rs, const std::vector<GradingVector>& parts, size_t from,
                   const GradingVector& rem, std::vector<std::pair<GradingVector, int>>& cur,
                   std::vector<PartitionOfLambda>& out) {
  if (rem.is_zero()) {
    PartitionOfLambda p;
    p.parts = cur;
    for (const auto& [g, m] : cur) p.size += m;
    out.push_back(std::move(p));
    return;
  }
  for (size_t i = from; i < parts.size(); ++i) {
    GradingVector r = rem - parts[i];
    int mult = 1;
    while (r.nonneg()) {
      cur.emplace_back(parts[i], mult);
      partition_rec(rs, parts, i + 1, r, cur, out);
      cur.pop_back();
      r = r - parts[i];
      ++mult;
    }
  }
}

}  // namespace

std::vector<PartitionOfLambda> strata_partitions(const RootSystem& rs,
                                                 const GradingVector& lambda) {
  std::vector<PartitionOfLambda> out;
  if (lambda.is_zero()) return out;
  if (!lambda.nonneg())
    throw std::invalid_argument("strata_partitions: lambda must be in the positive cone");
  std::vector<GradingVector> parts;
  for (const auto& g : positive_cone(rs.rank(), lambda.height()))
    if (!g.is_zero() && (lambda - g).nonneg()) parts.push_back(g);
  std::vector<std::pair<GradingVector, int>> cur;
  partition_rec(rs, parts, 0, lambda, cur, out);
  return out;
}

GlobalInversionReport global_inversion(const RootSystem& rs, const CurveModel& curve, int bound) {
  curve.validate();
  if (bound < 0) throw std::invalid_argument("global_inversion: bound must be >= 0");
  GlobalInversionReport rep;

  // Euler series over compositions: E = 1/(1 + U) with U the upsilon series
  HilbertSeries u(rs.rank(), bound);
  for (const auto& lam : positive_cone(rs.rank(), bound))
    if (!lam.is_zero()) u.add(lam.c, upsilon_total(rs, curve, lam));
  HilbertSeries e(rs.rank(), bound);
  std::vector<int> zero(rs.rank(), 0);
  e.add(zero, 1);
  for (const auto& lam : positive_cone(rs.rank(), bound)) {
    if (lam.is_zero()) continue;
    long long v = 0;
    for (const auto& [mu, umu] : u.coeff) {
      std::vector<int> diff(rs.rank());
      bool ok = true;
      for (int i = 0; i < rs.rank(); ++i) {
        diff[i] = lam.c[i] - mu[i];
        ok = ok && diff[i] >= 0;
      }
      if (!ok) continue;
      v -= umu * e.at(diff);  // smaller height, already computed
    }
    e.add(lam.c, v);
  }

  // closed form: prod over roots of (1 - t^a)^{h1}
  HilbertSeries closed = HilbertSeries::one(rs.rank(), bound);
  for (int r = 0; r < rs.num_positive(); ++r) {
    HilbertSeries binomial_series(rs.rank(), bound);
    int ht = rs.root(r).height();
    for (int k = 0; k * ht <= bound && k <= curve.h1(r); ++k) {
      std::vector<int> key(rs.rank());
      for (int i = 0; i < rs.rank(); ++i) key[i] = k * rs.root(r).c[i];
      long long b = to_ll(binomial(curve.h1(r), k));
      binomial_series.add(key, k % 2 == 0 ? b : -b);
    }
    closed = closed.mul(binomial_series);
  }

  HilbertSeries product = e.mul(r_hilbert(rs, curve, bound));
  for (const auto& lam : positive_cone(rs.rank(), bound)) {
    GlobalInversionRow row;
    row.lambda = lam;
    row.euler = e.at(lam.c);
    row.closed_form = closed.at(lam.c);
    row.product = product.at(lam.c);
    row.pass = row.euler == row.closed_form && row.product == (lam.is_zero() ? 1 : 0);
    if (!row.pass) rep.pass = false;
    rep.rows.push_back(row);
  }
  return rep;
}

Gl2Report gl2_report(int genus, int bound) {
  if (genus < 1) throw std::invalid_argument("gl2_report: genus must be >= 1");
  Gl2Report rep;
  rep.genus = genus;
  rep.wdim = 2 * genus - 2;

  GradedSpace w = GradedSpace::uniform(rep.wdim, 1);
  GradedModule aug = GradedModule::augmentation(w);
  GradedDims tor = sym_koszul_tor(aug, std::max(bound, rep.wdim));

  for (int d = 0; d <= rep.wdim; ++d) {
    Gl2Row row;
    row.d = d;
    row.binom = to_ll(binomial(rep.wdim, d));
    PowerCohomology pc = power_cohomology(0, rep.wdim, 0, d, PowerFlavor::symmetric);
    row.power_dim = pc.dims.at({}, d);
    row.tor_dim = tor.at({Rat(d)}, d);
    row.pass = row.power_dim == row.binom && row.tor_dim == row.binom;
    // the power cohomology must be concentrated in the single degree d
    if (pc.dims.total() != row.power_dim) row.pass = false;
    if (!row.pass) rep.pass = false;
    rep.rows.push_back(row);
  }
  // no Tor outside the Koszul range
  long long tor_total = 0;
  for (const auto& [k, v] : tor.entries) tor_total += v;
  long long expect = 0;
  for (const auto& r : rep.rows) expect += r.binom;
  if (tor_total != expect) rep.pass = false;
  return rep;
}

}  // namespace nilcoh
