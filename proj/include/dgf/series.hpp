#pragma once

// Truncated formal power series in z over CoeffPoly.
//
// A series stores numerators c_0..c_N. For the EGF kind the represented series
// is sum c_n z^n/n!; for the GGF kind it is sum c_n/(1+w)^binom(n,2) z^n/n!.
// The GGF denominator is never materialized: the numerator of a family's GGF
// is the family polynomial a_n(w, u) itself, and the product of two GGFs picks
// up the factor (1+w)^(k*l) for every split k + l = n.

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "dgf/coeff_poly.hpp"
#include "dgf/error.hpp"

namespace dgf {

enum class SeriesKind { Egf, Ggf };

const char* to_string(SeriesKind kind);

class Series {
 public:
  /// coeffs must be non-empty; in Numeric mode every coefficient must be constant.
  Series(SeriesKind kind, CoeffMode mode, std::vector<CoeffPoly> coeffs);

  static Series zero(SeriesKind kind, std::size_t order, CoeffMode mode = CoeffMode::polynomial());
  static Series one(SeriesKind kind, std::size_t order, CoeffMode mode = CoeffMode::polynomial());
  /// The series z (c_1 = 1).
  static Series z(SeriesKind kind, std::size_t order, CoeffMode mode = CoeffMode::polynomial());

  SeriesKind kind() const { return kind_; }
  const CoeffMode& mode() const { return mode_; }
  std::size_t order() const { return coeffs_.size() - 1; }
  std::span<const CoeffPoly> coeffs() const { return coeffs_; }
  const CoeffPoly& operator[](std::size_t n) const { return coeffs_[n]; }

  friend bool operator==(const Series&, const Series&) = default;

 private:
  SeriesKind kind_;
  CoeffMode mode_;
  std::vector<CoeffPoly> coeffs_;
};

/// Pascal triangle C(n, k) for 0 <= k <= n <= n_max.
class BinomialTable {
 public:
  explicit BinomialTable(std::size_t n_max);

  std::size_t n_max() const { return rows_.size() - 1; }
  const BigInt& operator()(std::size_t n, std::size_t k) const { return rows_[n][k]; }
  std::span<const BigInt> row(std::size_t n) const { return rows_[n]; }

 private:
  std::vector<std::vector<BigInt>> rows_;
};

/// Shared table covering at least n_max. Thread-safe; the returned table
/// stays valid while the caller holds it.
std::shared_ptr<const BinomialTable> binomials(std::size_t n_max);

Series series_add(const Series& a, const Series& b);
Series series_sub(const Series& a, const Series& b);
Series series_negate(const Series& a);
Series series_truncate(const Series& a, std::size_t order);

/// Kind-aware product: plain EGF product, or the arrow product for GGFs.
Series series_mul(const Series& a, const Series& b);

Series series_exp(const Series& a);
Series series_log(const Series& a);
Series series_recip(const Series& a);

/// Exponential Hadamard product of two EGFs.
Series series_hadamard(const Series& a, const Series& b);

/// Family translation GGF -> EGF (Hadamard with the graph EGF). Numerators are
/// the family polynomials, so this only changes the kind tag.
Series retag_ggf_to_family_egf(const Series& a);

/// Family translation EGF -> GGF (Hadamard with the Set GGF).
Series retag_egf_to_family_ggf(const Series& a);

/// Same formal series, EGF written as a GGF: c_n -> c_n (1+w)^binom(n,2).
Series reinterpret_value_egf_as_ggf(const Series& a);

/// z d/dz: c_n -> n c_n.
Series series_point(const Series& a);

/// z -> s z: c_n -> s^n c_n.
Series series_scale_z(const Series& a, const CoeffPoly& s);

/// u -> u + delta in every coefficient. Polynomial mode only.
Series series_subst_u(const Series& a, long delta);

/// u -> u_value in every coefficient, w kept symbolic. Polynomial mode only.
Series series_eval_u(const Series& a, long u_value);

inline Series operator+(const Series& a, const Series& b) { return series_add(a, b); }
inline Series operator-(const Series& a, const Series& b) { return series_sub(a, b); }
inline Series operator-(const Series& a) { return series_negate(a); }
inline Series operator*(const Series& a, const Series& b) { return series_mul(a, b); }

}  // namespace dgf
