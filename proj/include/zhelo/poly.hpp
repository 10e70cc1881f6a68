#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zhelo/rat.hpp"
#include "zhelo/rootsys.hpp"

namespace zhelo {

constexpr int kMaxVars = 8;

// Exponent vector of a monomial in h_1..h_l.
using Expo = std::array<std::uint8_t, kMaxVars>;

inline int expo_degree(const Expo& e) {
  int d = 0;
  for (auto x : e) d += x;
  return d;
}

// Graded lexicographic order (degree first, then lex with h_1 heaviest).
struct GrlexLess {
  bool operator()(const Expo& a, const Expo& b) const {
    int da = expo_degree(a), db = expo_degree(b);
    if (da != db) return da < db;
    return a < b;
  }
};

// Sparse multivariate polynomial over exact rationals in the coordinates
// h_i, i.e. the linear functions lambda -> lambda(h_i) on the weight space.
class Poly {
 public:
  Poly() : nv_(0) {}
  explicit Poly(int nvars) : nv_(nvars) {}

  static Poly constant(int nvars, const Rat& c);
  static Poly variable(int nvars, int i);
  // c0 + sum coeffs[i] * h_i
  static Poly linear(int nvars, const std::vector<Rat>& coeffs, const Rat& c0 = Rat(0));
  static Poly monomial(int nvars, const Expo& e, const Rat& c);

  int nvars() const { return nv_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rat constant_term() const;
  int degree() const;  // -1 for the zero polynomial
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Expo, Rat, GrlexLess>& terms() const { return terms_; }

  Rat coeff(const Expo& e) const;
  void add_term(const Expo& e, const Rat& c);

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly& operator*=(const Rat& c);
  Poly operator*(const Rat& c) const;
  Poly operator/(const Rat& c) const;
  bool operator==(const Poly& o) const { return nv_ == o.nv_ && terms_ == o.terms_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly homogeneous_part(int d) const;

  // Substitute images[v] for h_v (variables absent from the map are kept).
  Poly substitute(const std::map<int, Poly>& images) const;

  // Canonical text form: monomials sorted by degree then lex, explicit
  // rational coefficients, e.g. "h1^2*h2 - 2/3*h2 + 5".
  std::string to_string() const;

 private:
  int nv_;
  std::map<Expo, Rat, GrlexLess> terms_;
};

Poly operator*(const Rat& c, const Poly& p);

// ---- derivations and evaluations --------------------------------------

Poly partial(int i, const Poly& q);  // d/dh_i

// Substitutes h_i -> s for every i; returns a univariate polynomial in s.
Poly eval_srho(const Poly& q);

// Coefficient of the i-th fundamental weight in the gradient of q taken
// with respect to the Weyl-invariant form:
//   (1/d_i) * sum_j a[j][i] dq/dh_j.
// For invariant q this is the component the text writes as dq/dpi_i; it is
// divisible by h_i.
Poly gradient_component(const RootSystem& rs, int i, const Poly& q);

// ---- Weyl actions -------------------------------------------------------

// Plain action of the simple reflection s_i.
Poly weyl_act(const RootSystem& rs, int i, const Poly& q);
// Plain action of a word s_{i1}...s_{ik} (rightmost letter acts first).
Poly weyl_act(const RootSystem& rs, const std::vector<int>& word, const Poly& q);
// Plain action through a coroot-coordinate matrix.
Poly weyl_act(const RootSystem& rs, const std::vector<std::vector<long long>>& mat, const Poly& q);

// Translated (dot) action: s_i.(h+m) = h+m - h(alpha_i)(h_i+1), extended as
// an algebra automorphism.
Poly dot_act(const RootSystem& rs, int i, const Poly& q);
Poly dot_act(const RootSystem& rs, const std::vector<int>& word, const Poly& q);

// theta shifts every variable by 1: theta(h_i + m) = h_i + m + 1.
Poly theta(const Poly& q);
Poly theta_inv(const Poly& q);

// ---- exact division -----------------------------------------------------

std::optional<Poly> divide_by_variable(const Poly& q, int i);
// Exact division by an arbitrary linear polynomial; nullopt if not exact.
std::optional<Poly> divide_by_linear(const Poly& q, const Poly& lin);

// Divides a tuple by the gcd of all coefficients and fixes the sign of the
// first nonzero coefficient to be positive. Returns the removed factor.
Rat content_normalize(std::vector<Poly>& tuple);

// Linear polynomial attached to a coroot vector: sum_k v[k] h_k + c0.
Poly coroot_linear(int nvars, const IVec& v, const Rat& c0 = Rat(0));

// ---- univariate helpers (nvars == 1) ------------------------------------

// Quotient/remainder in one variable.
std::pair<Poly, Poly> upoly_divmod(const Poly& num, const Poly& den);
Poly upoly_gcd(Poly a, Poly b);  // monic gcd

// Rational function in one variable, kept reduced with monic denominator.
struct RatFn1 {
  Poly num{1};
  Poly den{Poly::constant(1, Rat(1))};

  static RatFn1 of(const Poly& p);
  RatFn1 operator+(const RatFn1& o) const;
  RatFn1 operator-(const RatFn1& o) const;
  RatFn1 operator*(const RatFn1& o) const;
  RatFn1 operator/(const RatFn1& o) const;
  bool operator==(const RatFn1& o) const;
  bool is_zero() const { return num.is_zero(); }
  void reduce();
};

// Element of the fraction field of S(h): numerator over a product of linear
// factors. Only used for the localized Zhelobenko action, where all
// denominators are powers of single variables.
struct RatFn {
  Poly num;
  Poly den;

  static RatFn of(const Poly& p);
  bool same_as(const RatFn& o) const;  // equality by cross-multiplication
};

}  // namespace zhelo
