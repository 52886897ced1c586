#include "dgf/coeff_poly.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <sstream>
#include <utility>

namespace dgf {

namespace {

bool term_less(const Term& a, const Term& b) {
  return a.w_exp != b.w_exp ? a.w_exp < b.w_exp : a.u_exp < b.u_exp;
}

// Merges two sorted term lists; sign = -1 subtracts b.
std::vector<Term> merge_terms(const std::vector<Term>& a, std::span<const Term> b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && term_less(a[i], b[j]))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || term_less(b[j], a[i])) {
      out.push_back(b[j++]);
      if (sign < 0) out.back().coeff = -out.back().coeff;
    } else {
      Term t = a[i++];
      if (sign < 0)
        t.coeff -= b[j++].coeff;
      else
        t.coeff += b[j++].coeff;
      if (t.coeff != 0) out.push_back(std::move(t));
    }
  }
  return out;
}

}  // namespace

CoeffPoly::CoeffPoly(long c) {
  if (c != 0) terms_.push_back(Term{0, 0, BigInt(c)});
}

CoeffPoly::CoeffPoly(const BigInt& c) {
  if (c != 0) terms_.push_back(Term{0, 0, c});
}

CoeffPoly CoeffPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_less);
  CoeffPoly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().w_exp == t.w_exp && p.terms_.back().u_exp == t.u_exp) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (t.coeff != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

CoeffPoly CoeffPoly::monomial(BigInt c, std::uint32_t w_exp, std::uint32_t u_exp) {
  CoeffPoly p;
  if (c != 0) p.terms_.push_back(Term{w_exp, u_exp, std::move(c)});
  return p;
}

bool CoeffPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].w_exp == 0 && terms_[0].u_exp == 0);
}

bool CoeffPoly::depends_on_u() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.u_exp != 0; });
}

BigInt CoeffPoly::coeff(std::uint32_t w_exp, std::uint32_t u_exp) const {
  Term key{w_exp, u_exp, {}};
  auto it = std::lower_bound(terms_.begin(), terms_.end(), key, term_less);
  if (it != terms_.end() && it->w_exp == w_exp && it->u_exp == u_exp) return it->coeff;
  return 0;
}

std::uint32_t CoeffPoly::deg_w() const { return terms_.empty() ? 0 : terms_.back().w_exp; }

std::uint32_t CoeffPoly::deg_u() const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.u_exp);
  return d;
}

CoeffPoly CoeffPoly::operator-() const {
  CoeffPoly p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

CoeffPoly& CoeffPoly::operator+=(const CoeffPoly& other) {
  if (other.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, other.terms_, +1);
  return *this;
}

CoeffPoly& CoeffPoly::operator-=(const CoeffPoly& other) {
  if (other.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, other.terms_, -1);
  return *this;
}

CoeffPoly& CoeffPoly::operator*=(const CoeffPoly& other) {
  *this = *this * other;
  return *this;
}

CoeffPoly& CoeffPoly::operator*=(const BigInt& scalar) {
  if (scalar == 0) {
    terms_.clear();
  } else if (scalar != 1) {
    for (auto& t : terms_) t.coeff *= scalar;
  }
  return *this;
}

CoeffPoly operator*(const CoeffPoly& a, const CoeffPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.size() == 1 && b.size() == 1) {
    const Term& x = a.terms_[0];
    const Term& y = b.terms_[0];
    return CoeffPoly::monomial(x.coeff * y.coeff, x.w_exp + y.w_exp, x.u_exp + y.u_exp);
  }
  const CoeffPoly& small = a.size() <= b.size() ? a : b;
  const CoeffPoly& large = a.size() <= b.size() ? b : a;
  if (small.size() == 1 && small.terms_[0].w_exp == 0 && small.terms_[0].u_exp == 0) {
    CoeffPoly out = large;
    out *= small.terms_[0].coeff;
    return out;
  }

  // Dense accumulation over the bounding box of exponents.
  const std::size_t width_u = std::size_t(a.deg_u()) + b.deg_u() + 1;
  const std::size_t width_w = std::size_t(a.deg_w()) + b.deg_w() + 1;
  std::vector<BigInt> grid(width_u * width_w);
  for (const Term& x : a.terms_) {
    for (const Term& y : b.terms_) {
      BigInt& cell = grid[(x.w_exp + y.w_exp) * width_u + (x.u_exp + y.u_exp)];
      mpz_addmul(cell.get_mpz_t(), x.coeff.get_mpz_t(), y.coeff.get_mpz_t());
    }
  }
  CoeffPoly out;
  for (std::size_t idx = 0; idx < grid.size(); ++idx) {
    if (grid[idx] != 0) {
      out.terms_.push_back(Term{std::uint32_t(idx / width_u), std::uint32_t(idx % width_u),
                                std::move(grid[idx])});
    }
  }
  return out;
}

CoeffPoly poly_add(const CoeffPoly& a, const CoeffPoly& b) { return a + b; }

CoeffPoly poly_mul(const CoeffPoly& a, const CoeffPoly& b) { return a * b; }

const CoeffPoly& one_plus_w_pow(std::uint64_t k) {
  static std::mutex mu;
  static std::map<std::uint64_t, std::unique_ptr<const CoeffPoly>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[k];
  if (!slot) {
    std::vector<Term> terms;
    terms.reserve(k + 1);
    BigInt c = 1;
    for (std::uint64_t j = 0; j <= k; ++j) {
      terms.push_back(Term{std::uint32_t(j), 0, c});
      c = c * BigInt(static_cast<unsigned long>(k - j)) / BigInt(static_cast<unsigned long>(j + 1));
    }
    slot = std::make_unique<const CoeffPoly>(CoeffPoly::from_terms(std::move(terms)));
  }
  return *slot;
}

CoeffPoly poly_subst_u(const CoeffPoly& p, long delta) {
  if (delta == 0 || !p.depends_on_u()) return p;
  std::vector<Term> out;
  const BigInt d = delta;
  for (const Term& t : p.terms()) {
    // c w^a (u + d)^b = c w^a sum_j C(b, j) d^(b-j) u^j
    BigInt binom = 1;
    for (std::uint32_t j = 0; j <= t.u_exp; ++j) {
      BigInt dpow;
      mpz_pow_ui(dpow.get_mpz_t(), d.get_mpz_t(), t.u_exp - j);
      out.push_back(Term{t.w_exp, j, t.coeff * binom * dpow});
      binom = binom * (t.u_exp - j) / (j + 1);
    }
  }
  return CoeffPoly::from_terms(std::move(out));
}

BigInt poly_eval(const CoeffPoly& p, const BigInt& w_value, const BigInt& u_value) {
  BigInt sum = 0;
  BigInt wp, up;
  for (const Term& t : p.terms()) {
    mpz_pow_ui(wp.get_mpz_t(), w_value.get_mpz_t(), t.w_exp);
    mpz_pow_ui(up.get_mpz_t(), u_value.get_mpz_t(), t.u_exp);
    sum += t.coeff * wp * up;
  }
  return sum;
}

CoeffPoly poly_eval_u(const CoeffPoly& p, const BigInt& u_value) {
  if (!p.depends_on_u()) return p;
  std::vector<Term> out;
  out.reserve(p.size());
  BigInt up;
  for (const Term& t : p.terms()) {
    mpz_pow_ui(up.get_mpz_t(), u_value.get_mpz_t(), t.u_exp);
    out.push_back(Term{t.w_exp, 0, t.coeff * up});
  }
  return CoeffPoly::from_terms(std::move(out));
}

std::string to_string(const CoeffPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const Term& t : p.terms()) {
    const bool negative = t.coeff < 0;
    BigInt magnitude = abs(t.coeff);
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;

    const bool has_var = t.w_exp != 0 || t.u_exp != 0;
    bool need_star = false;
    if (magnitude != 1 || !has_var) {
      os << magnitude.get_str();
      need_star = true;
    }
    if (t.w_exp != 0) {
      os << (need_star ? "*" : "") << "w";
      if (t.w_exp != 1) os << "^" << t.w_exp;
      need_star = true;
    }
    if (t.u_exp != 0) {
      os << (need_star ? "*" : "") << "u";
      if (t.u_exp != 1) os << "^" << t.u_exp;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const CoeffPoly& p) { return os << to_string(p); }

CoeffPoly CoeffMode::lift(const CoeffPoly& p) const {
  if (!numeric_) return p;
  return CoeffPoly(poly_eval(p, BigInt(w_value_), BigInt(u_value_)));
}

namespace {

BigInt numeric_shift(long w_value, std::uint64_t k) {
  static std::mutex mu;
  static std::map<std::pair<long, std::uint64_t>, BigInt> cache;
  std::lock_guard lock(mu);
  auto [it, inserted] = cache.try_emplace({w_value, k});
  if (inserted) {
    BigInt base = 1 + w_value;
    mpz_pow_ui(it->second.get_mpz_t(), base.get_mpz_t(), k);
  }
  return it->second;
}

}  // namespace

CoeffPoly CoeffMode::shift_factor(std::uint64_t k) const {
  if (!numeric_) return one_plus_w_pow(k);
  return CoeffPoly(numeric_shift(w_value_, k));
}

void CoeffMode::apply_shift(CoeffPoly& p, std::uint64_t k) const {
  if (k == 0 || p.is_zero()) return;
  if (!numeric_) {
    p = p * one_plus_w_pow(k);
  } else if (w_value_ == 1) {
    BigInt c = p.constant_term();
    mpz_mul_2exp(c.get_mpz_t(), c.get_mpz_t(), k);
    p = CoeffPoly(c);
  } else {
    p *= numeric_shift(w_value_, k);
  }
}

void CoeffMode::apply_shift(BigInt& value, std::uint64_t k) const {
  if (k == 0 || value == 0) return;
  if (w_value_ == 1)
    mpz_mul_2exp(value.get_mpz_t(), value.get_mpz_t(), k);
  else
    value *= numeric_shift(w_value_, k);
}

std::string CoeffMode::describe() const {
  if (!numeric_) return "poly";
  return "numeric(w=" + std::to_string(w_value_) + ",u=" + std::to_string(u_value_) + ")";
}

}  // namespace dgf
