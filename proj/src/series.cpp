#include "dgf/series.hpp"

#include <algorithm>
#include <mutex>
#include <string>
#include <utility>

namespace dgf {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::KindMismatch: return "KindMismatch";
    case ErrorCode::ModeMismatch: return "ModeMismatch";
    case ErrorCode::NonzeroConstantTerm: return "NonzeroConstantTerm";
    case ErrorCode::ConstantTermNotOne: return "ConstantTermNotOne";
    case ErrorCode::EmptyObjectInFamily: return "EmptyObjectInFamily";
    case ErrorCode::MarkerCollision: return "MarkerCollision";
    case ErrorCode::LimitExceeded: return "LimitExceeded";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

const char* to_string(SeriesKind kind) { return kind == SeriesKind::Egf ? "EGF" : "GGF"; }

Series::Series(SeriesKind kind, CoeffMode mode, std::vector<CoeffPoly> coeffs)
    : kind_(kind), mode_(mode), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw Error(ErrorCode::InvalidArgument, "series needs at least c_0");
  if (mode_.is_numeric()) {
    for (const auto& c : coeffs_) {
      if (!c.is_constant())
        throw Error(ErrorCode::ModeMismatch, "numeric-mode coefficient is not a constant: " + to_string(c));
    }
  }
}

Series Series::zero(SeriesKind kind, std::size_t order, CoeffMode mode) {
  return Series(kind, mode, std::vector<CoeffPoly>(order + 1));
}

Series Series::one(SeriesKind kind, std::size_t order, CoeffMode mode) {
  std::vector<CoeffPoly> c(order + 1);
  c[0] = 1;
  return Series(kind, mode, std::move(c));
}

Series Series::z(SeriesKind kind, std::size_t order, CoeffMode mode) {
  std::vector<CoeffPoly> c(order + 1);
  if (order >= 1) c[1] = 1;
  return Series(kind, mode, std::move(c));
}

BinomialTable::BinomialTable(std::size_t n_max) : rows_(n_max + 1) {
  for (std::size_t n = 0; n <= n_max; ++n) {
    rows_[n].resize(n + 1);
    rows_[n][0] = 1;
    rows_[n][n] = 1;
    for (std::size_t k = 1; k < n; ++k) rows_[n][k] = rows_[n - 1][k - 1] + rows_[n - 1][k];
  }
}

std::shared_ptr<const BinomialTable> binomials(std::size_t n_max) {
  static std::mutex mu;
  static std::shared_ptr<const BinomialTable> table;
  std::lock_guard lock(mu);
  if (!table || table->n_max() < n_max) {
    std::size_t target = std::max<std::size_t>(n_max, table ? 2 * table->n_max() : 32);
    table = std::make_shared<const BinomialTable>(target);
  }
  return table;
}

namespace {

void require_same_kind(const Series& a, const Series& b, const char* op) {
  if (a.kind() != b.kind())
    throw Error(ErrorCode::KindMismatch, std::string(op) + ": " + to_string(a.kind()) + " vs " +
                                             to_string(b.kind()));
}

void require_same_mode(const Series& a, const Series& b, const char* op) {
  if (!(a.mode() == b.mode()))
    throw Error(ErrorCode::ModeMismatch,
                std::string(op) + ": " + a.mode().describe() + " vs " + b.mode().describe());
}

void require_polynomial_mode(const Series& a, const char* op) {
  if (a.mode().is_numeric())
    throw Error(ErrorCode::ModeMismatch, std::string(op) + " needs polynomial mode, u is fixed in " +
                                             a.mode().describe());
}

// The recurrences below run on BigInt in Numeric mode and on CoeffPoly
// otherwise; Kernel supplies the kind-aware convolution weight.
bool is_zero(const BigInt& x) { return x == 0; }
bool is_zero(const CoeffPoly& x) { return x.is_zero(); }

template <class T>
std::vector<T> unpack(const Series& s);

template <>
std::vector<BigInt> unpack<BigInt>(const Series& s) {
  std::vector<BigInt> out;
  out.reserve(s.order() + 1);
  for (const auto& c : s.coeffs()) out.push_back(c.constant_term());
  return out;
}

template <>
std::vector<CoeffPoly> unpack<CoeffPoly>(const Series& s) {
  return {s.coeffs().begin(), s.coeffs().end()};
}

Series pack(SeriesKind kind, const CoeffMode& mode, std::vector<BigInt> v) {
  std::vector<CoeffPoly> c;
  c.reserve(v.size());
  for (auto& x : v) c.emplace_back(x);
  return Series(kind, mode, std::move(c));
}

Series pack(SeriesKind kind, const CoeffMode& mode, std::vector<CoeffPoly> v) {
  return Series(kind, mode, std::move(v));
}

template <class T>
class Kernel {
 public:
  Kernel(SeriesKind kind, const CoeffMode& mode, std::size_t order)
      : kind_(kind), mode_(mode), binom_(binomials(order)) {}

  const BigInt& binom(std::size_t n, std::size_t k) const { return (*binom_)(n, k); }

  // acc += weight * S(k, l) * x * y, with S = 1 for EGF and (1+w)^(k l) for GGF.
  void accumulate(T& acc, const BigInt& weight, const T& x, const T& y, std::size_t k,
                  std::size_t l) const {
    if (is_zero(x) || is_zero(y)) return;
    T t = x * y;
    if (kind_ == SeriesKind::Ggf) mode_.apply_shift(t, std::uint64_t(k) * l);
    t *= weight;
    acc += t;
  }

 private:
  SeriesKind kind_;
  const CoeffMode& mode_;
  std::shared_ptr<const BinomialTable> binom_;
};

template <class T>
std::vector<T> mul_impl(const Kernel<T>& ker, const std::vector<T>& a, const std::vector<T>& b,
                        std::size_t order) {
  std::vector<T> c(order + 1);
  for (std::size_t n = 0; n <= order; ++n) {
    for (std::size_t k = 0; k <= n; ++k) ker.accumulate(c[n], ker.binom(n, k), a[k], b[n - k], k, n - k);
  }
  return c;
}

template <class T>
std::vector<T> exp_impl(const Kernel<T>& ker, const std::vector<T>& a) {
  const std::size_t order = a.size() - 1;
  std::vector<T> e(order + 1);
  e[0] = T(1);
  for (std::size_t n = 1; n <= order; ++n) {
    for (std::size_t k = 1; k <= n; ++k)
      ker.accumulate(e[n], ker.binom(n - 1, k - 1), a[k], e[n - k], k, n - k);
  }
  return e;
}

template <class T>
std::vector<T> log_impl(const Kernel<T>& ker, const std::vector<T>& a) {
  const std::size_t order = a.size() - 1;
  std::vector<T> l(order + 1);
  for (std::size_t n = 1; n <= order; ++n) {
    T acc{};
    for (std::size_t k = 1; k < n; ++k)
      ker.accumulate(acc, ker.binom(n - 1, k - 1), l[k], a[n - k], k, n - k);
    l[n] = a[n];
    l[n] -= acc;
  }
  return l;
}

template <class T>
std::vector<T> recip_impl(const Kernel<T>& ker, const std::vector<T>& a) {
  const std::size_t order = a.size() - 1;
  std::vector<T> r(order + 1);
  r[0] = T(1);
  for (std::size_t n = 1; n <= order; ++n) {
    T acc{};
    for (std::size_t k = 1; k <= n; ++k) ker.accumulate(acc, ker.binom(n, k), a[k], r[n - k], k, n - k);
    r[n] -= acc;
  }
  return r;
}

// Dispatches a unary recurrence on the coefficient representation.
template <class Fn>
Series run_unary(const Series& a, Fn&& fn) {
  if (a.mode().is_numeric()) {
    Kernel<BigInt> ker(a.kind(), a.mode(), a.order());
    return pack(a.kind(), a.mode(), fn(ker, unpack<BigInt>(a)));
  }
  Kernel<CoeffPoly> ker(a.kind(), a.mode(), a.order());
  return pack(a.kind(), a.mode(), fn(ker, unpack<CoeffPoly>(a)));
}

template <class Fn>
Series map_coeffs(const Series& a, Fn&& fn) {
  std::vector<CoeffPoly> c;
  c.reserve(a.order() + 1);
  for (std::size_t n = 0; n <= a.order(); ++n) c.push_back(fn(n, a[n]));
  return Series(a.kind(), a.mode(), std::move(c));
}

std::uint64_t binom2(std::size_t n) { return std::uint64_t(n) * (n == 0 ? 0 : n - 1) / 2; }

}  // namespace

Series series_add(const Series& a, const Series& b) {
  require_same_kind(a, b, "series_add");
  require_same_mode(a, b, "series_add");
  const std::size_t order = std::min(a.order(), b.order());
  std::vector<CoeffPoly> c(order + 1);
  for (std::size_t n = 0; n <= order; ++n) c[n] = a[n] + b[n];
  return Series(a.kind(), a.mode(), std::move(c));
}

Series series_sub(const Series& a, const Series& b) { return series_add(a, series_negate(b)); }

Series series_negate(const Series& a) {
  return map_coeffs(a, [](std::size_t, const CoeffPoly& c) { return -c; });
}

Series series_truncate(const Series& a, std::size_t order) {
  if (order >= a.order()) return a;
  return Series(a.kind(), a.mode(), {a.coeffs().begin(), a.coeffs().begin() + order + 1});
}

Series series_mul(const Series& a, const Series& b) {
  require_same_kind(a, b, "series_mul");
  require_same_mode(a, b, "series_mul");
  const std::size_t order = std::min(a.order(), b.order());
  if (a.mode().is_numeric()) {
    Kernel<BigInt> ker(a.kind(), a.mode(), order);
    return pack(a.kind(), a.mode(), mul_impl(ker, unpack<BigInt>(a), unpack<BigInt>(b), order));
  }
  Kernel<CoeffPoly> ker(a.kind(), a.mode(), order);
  return pack(a.kind(), a.mode(), mul_impl(ker, unpack<CoeffPoly>(a), unpack<CoeffPoly>(b), order));
}

Series series_exp(const Series& a) {
  if (!a[0].is_zero())
    throw Error(ErrorCode::NonzeroConstantTerm, "series_exp: c_0 = " + to_string(a[0]));
  return run_unary(a, [](const auto& ker, const auto& v) { return exp_impl(ker, v); });
}

Series series_log(const Series& a) {
  if (!(a[0] == CoeffPoly(1)))
    throw Error(ErrorCode::ConstantTermNotOne, "series_log: c_0 = " + to_string(a[0]));
  return run_unary(a, [](const auto& ker, const auto& v) { return log_impl(ker, v); });
}

Series series_recip(const Series& a) {
  if (!(a[0] == CoeffPoly(1)))
    throw Error(ErrorCode::ConstantTermNotOne, "series_recip: c_0 = " + to_string(a[0]));
  return run_unary(a, [](const auto& ker, const auto& v) { return recip_impl(ker, v); });
}

Series series_hadamard(const Series& a, const Series& b) {
  if (a.kind() != SeriesKind::Egf || b.kind() != SeriesKind::Egf)
    throw Error(ErrorCode::KindMismatch, "series_hadamard is defined on EGF operands only");
  require_same_mode(a, b, "series_hadamard");
  const std::size_t order = std::min(a.order(), b.order());
  std::vector<CoeffPoly> c(order + 1);
  for (std::size_t n = 0; n <= order; ++n) c[n] = a[n] * b[n];
  return Series(SeriesKind::Egf, a.mode(), std::move(c));
}

Series retag_ggf_to_family_egf(const Series& a) {
  if (a.kind() != SeriesKind::Ggf) throw Error(ErrorCode::KindMismatch, "retag_ggf_to_family_egf expects a GGF");
  return Series(SeriesKind::Egf, a.mode(), {a.coeffs().begin(), a.coeffs().end()});
}

Series retag_egf_to_family_ggf(const Series& a) {
  if (a.kind() != SeriesKind::Egf) throw Error(ErrorCode::KindMismatch, "retag_egf_to_family_ggf expects an EGF");
  return Series(SeriesKind::Ggf, a.mode(), {a.coeffs().begin(), a.coeffs().end()});
}

Series reinterpret_value_egf_as_ggf(const Series& a) {
  if (a.kind() != SeriesKind::Egf)
    throw Error(ErrorCode::KindMismatch, "reinterpret_value_egf_as_ggf expects an EGF");
  Series shifted = map_coeffs(a, [&](std::size_t n, const CoeffPoly& c) {
    CoeffPoly out = c;
    a.mode().apply_shift(out, binom2(n));
    return out;
  });
  return retag_egf_to_family_ggf(shifted);
}

Series series_point(const Series& a) {
  return map_coeffs(a, [](std::size_t n, const CoeffPoly& c) {
    return c * BigInt(static_cast<unsigned long>(n));
  });
}

Series series_scale_z(const Series& a, const CoeffPoly& s) {
  const CoeffPoly factor = a.mode().lift(s);
  CoeffPoly power = 1;
  return map_coeffs(a, [&](std::size_t n, const CoeffPoly& c) {
    if (n > 0) power = power * factor;
    return c * power;
  });
}

Series series_subst_u(const Series& a, long delta) {
  require_polynomial_mode(a, "series_subst_u");
  return map_coeffs(a, [&](std::size_t, const CoeffPoly& c) { return poly_subst_u(c, delta); });
}

Series series_eval_u(const Series& a, long u_value) {
  require_polynomial_mode(a, "series_eval_u");
  const BigInt u = u_value;
  return map_coeffs(a, [&](std::size_t, const CoeffPoly& c) { return poly_eval_u(c, u); });
}

}  // namespace dgf
