#include "zhelo/poly.hpp"

#include <algorithm>
#include <sstream>

namespace zhelo {

Poly Poly::constant(int nvars, const Rat& c) {
  Poly p(nvars);
  if (!zhelo::is_zero(c)) p.terms_[Expo{}] = c;
  return p;
}

Poly Poly::variable(int nvars, int i) {
  Poly p(nvars);
  Expo e{};
  e[i] = 1;
  p.terms_[e] = Rat(1);
  return p;
}

Poly Poly::linear(int nvars, const std::vector<Rat>& coeffs, const Rat& c0) {
  Poly p = constant(nvars, c0);
  for (int i = 0; i < nvars; ++i) {
    if (zhelo::is_zero(coeffs[i])) continue;
    Expo e{};
    e[i] = 1;
    p.terms_[e] = coeffs[i];
  }
  return p;
}

Poly Poly::monomial(int nvars, const Expo& e, const Rat& c) {
  Poly p(nvars);
  if (!zhelo::is_zero(c)) p.terms_[e] = c;
  return p;
}

bool Poly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first == Expo{};
}

Rat Poly::constant_term() const {
  auto it = terms_.find(Expo{});
  return it == terms_.end() ? Rat(0) : it->second;
}

int Poly::degree() const {
  if (terms_.empty()) return -1;
  return expo_degree(terms_.rbegin()->first);  // grlex: last term has max degree
}

Rat Poly::coeff(const Expo& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

void Poly::add_term(const Expo& e, const Rat& c) {
  if (zhelo::is_zero(c)) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (zhelo::is_zero(it->second)) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  for (auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  r += o;
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  r -= o;
  return r;
}

Poly Poly::operator-() const {
  Poly r(nv_);
  for (auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r(nv_);
  for (auto& [e1, c1] : terms_) {
    for (auto& [e2, c2] : o.terms_) {
      Expo e{};
      for (int k = 0; k < kMaxVars; ++k) e[k] = static_cast<std::uint8_t>(e1[k] + e2[k]);
      r.add_term(e, c1 * c2);
    }
  }
  return r;
}

Poly& Poly::operator*=(const Rat& c) {
  if (zhelo::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Poly Poly::operator*(const Rat& c) const {
  Poly r = *this;
  r *= c;
  return r;
}

Poly Poly::operator/(const Rat& c) const {
  require(!zhelo::is_zero(c), "division by zero rational");
  Poly r = *this;
  r *= Rat(1) / c;
  return r;
}

Poly operator*(const Rat& c, const Poly& p) { return p * c; }

Poly Poly::homogeneous_part(int d) const {
  Poly r(nv_);
  for (auto& [e, c] : terms_)
    if (expo_degree(e) == d) r.terms_[e] = c;
  return r;
}

Poly Poly::substitute(const std::map<int, Poly>& images) const {
  // Powers of each image are shared across monomials.
  std::map<int, std::vector<Poly>> pows;
  for (auto& [v, img] : images) pows[v] = {Poly::constant(nv_, Rat(1)), img};
  auto power = [&](int v, int e) -> const Poly& {
    auto& vec = pows[v];
    while (static_cast<int>(vec.size()) <= e) vec.push_back(vec.back() * vec[1]);
    return vec[e];
  };
  Poly out(nv_);
  for (auto& [e, c] : terms_) {
    Expo skel = e;
    bool touched = false;
    for (auto& [v, img] : images) {
      (void)img;
      if (skel[v] != 0) touched = true;
      skel[v] = 0;
    }
    Poly prod = Poly::monomial(nv_, skel, c);
    if (touched) {
      for (auto& [v, img] : images) {
        (void)img;
        if (e[v] != 0) prod = prod * power(v, e[v]);
      }
    }
    out += prod;
  }
  return out;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  // Highest degree first reads naturally.
  std::vector<std::pair<Expo, Rat>> items(terms_.begin(), terms_.end());
  std::reverse(items.begin(), items.end());
  std::ostringstream os;
  bool first = true;
  for (auto& [e, c] : items) {
    Rat coeff = c;
    if (first) {
      if (sgn(coeff) < 0) {
        os << "-";
        coeff = -coeff;
      }
    } else {
      os << (sgn(coeff) < 0 ? " - " : " + ");
      if (sgn(coeff) < 0) coeff = -coeff;
    }
    first = false;
    bool has_vars = expo_degree(e) > 0;
    if (!has_vars || coeff != 1) {
      os << rat_to_string(coeff);
      if (has_vars) os << "*";
    }
    bool first_var = true;
    for (int v = 0; v < nv_; ++v) {
      if (e[v] == 0) continue;
      if (!first_var) os << "*";
      first_var = false;
      os << "h" << (v + 1);
      if (e[v] > 1) os << "^" << static_cast<int>(e[v]);
    }
  }
  return os.str();
}

Poly partial(int i, const Poly& q) {
  Poly r(q.nvars());
  for (auto& [e, c] : q.terms()) {
    if (e[i] == 0) continue;
    Expo e2 = e;
    e2[i] -= 1;
    r.add_term(e2, c * Rat(static_cast<int>(e[i])));
  }
  return r;
}

Poly eval_srho(const Poly& q) {
  Poly r(1);
  for (auto& [e, c] : q.terms()) {
    Expo e2{};
    e2[0] = static_cast<std::uint8_t>(expo_degree(e));
    r.add_term(e2, c);
  }
  return r;
}

Poly gradient_component(const RootSystem& rs, int i, const Poly& q) {
  Poly r(q.nvars());
  for (int j = 0; j < rs.rank; ++j) {
    int aji = rs.datum.a[j][i];
    if (aji == 0) continue;
    r += partial(j, q) * Rat(aji);
  }
  return r / Rat(rs.datum.d[i]);
}

Poly weyl_act(const RootSystem& rs, int i, const Poly& q) {
  // s_i(h_j) = h_j - a[j][i] h_i
  std::map<int, Poly> images;
  int nv = q.nvars();
  for (int j = 0; j < rs.rank; ++j) {
    int aji = rs.datum.a[j][i];
    if (aji == 0) continue;
    Poly img = Poly::variable(nv, j);
    img.add_term([&] { Expo e{}; e[i] = 1; return e; }(), Rat(-aji));
    images[j] = img;
  }
  return q.substitute(images);
}

Poly weyl_act(const RootSystem& rs, const std::vector<int>& word, const Poly& q) {
  Poly r = q;
  for (auto it = word.rbegin(); it != word.rend(); ++it) r = weyl_act(rs, *it, r);
  return r;
}

Poly weyl_act(const RootSystem& rs, const std::vector<std::vector<long long>>& mat, const Poly& q) {
  std::map<int, Poly> images;
  int nv = q.nvars();
  for (int j = 0; j < rs.rank; ++j) {
    std::vector<Rat> col(nv, Rat(0));
    bool is_identity = true;
    for (int k = 0; k < rs.rank; ++k) {
      col[k] = rat_ll(mat[k][j]);
      if (mat[k][j] != (k == j ? 1 : 0)) is_identity = false;
    }
    if (!is_identity) images[j] = Poly::linear(nv, col);
  }
  return q.substitute(images);
}

Poly dot_act(const RootSystem& rs, int i, const Poly& q) {
  // s_i.(h_j) = h_j - a[j][i](h_i + 1)
  std::map<int, Poly> images;
  int nv = q.nvars();
  for (int j = 0; j < rs.rank; ++j) {
    int aji = rs.datum.a[j][i];
    if (aji == 0) continue;
    Poly img = Poly::variable(nv, j);
    img.add_term([&] { Expo e{}; e[i] = 1; return e; }(), Rat(-aji));
    img.add_term(Expo{}, Rat(-aji));
    images[j] = img;
  }
  return q.substitute(images);
}

Poly dot_act(const RootSystem& rs, const std::vector<int>& word, const Poly& q) {
  Poly r = q;
  for (auto it = word.rbegin(); it != word.rend(); ++it) r = dot_act(rs, *it, r);
  return r;
}

namespace {
Poly shift_all(const Poly& q, const Rat& delta) {
  std::map<int, Poly> images;
  for (int v = 0; v < q.nvars(); ++v) {
    Poly img = Poly::variable(q.nvars(), v);
    img.add_term(Expo{}, delta);
    images[v] = img;
  }
  return q.substitute(images);
}
}  // namespace

Poly theta(const Poly& q) { return shift_all(q, Rat(1)); }
Poly theta_inv(const Poly& q) { return shift_all(q, Rat(-1)); }

std::optional<Poly> divide_by_variable(const Poly& q, int i) {
  Poly r(q.nvars());
  for (auto& [e, c] : q.terms()) {
    if (e[i] == 0) return std::nullopt;
    Expo e2 = e;
    e2[i] -= 1;
    r.add_term(e2, c);
  }
  return r;
}

std::optional<Poly> divide_by_linear(const Poly& q, const Poly& lin) {
  require(lin.degree() <= 1 && !lin.is_zero(), "divisor must be a nonzero linear polynomial");
  if (q.is_zero()) return Poly(q.nvars());
  if (lin.is_constant()) return q / lin.constant_term();
  // Pivot on the first variable present in the divisor.
  int v = -1;
  Rat a;
  for (auto& [e, c] : lin.terms()) {
    if (expo_degree(e) == 1) {
      for (int k = 0; k < kMaxVars; ++k)
        if (e[k] == 1) {
          v = k;
          a = c;
          break;
        }
      if (v >= 0) break;
    }
  }
  Poly rest = lin;  // lin - a*h_v
  {
    Expo e{};
    e[v] = 1;
    rest.add_term(e, -a);
  }
  Poly rem = q;
  Poly quot(q.nvars());
  while (true) {
    int dv = 0;
    for (auto& [e, c] : rem.terms()) dv = std::max(dv, static_cast<int>(e[v]));
    if (dv == 0) break;
    // slice of maximal v-degree, shifted down by one and divided by a
    Poly t(q.nvars());
    for (auto& [e, c] : rem.terms()) {
      if (static_cast<int>(e[v]) != dv) continue;
      Expo e2 = e;
      e2[v] -= 1;
      t.add_term(e2, c / a);
    }
    quot += t;
    rem -= t * lin;
  }
  if (!rem.is_zero()) return std::nullopt;
  return quot;
}

Rat content_normalize(std::vector<Poly>& tuple) {
  mpz_class num_gcd(0), den_lcm(1);
  const Rat* lead = nullptr;
  for (auto& p : tuple)
    for (auto& [e, c] : p.terms()) {
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
      if (!lead) lead = &c;
    }
  if (!lead) return Rat(1);
  Rat factor(num_gcd, den_lcm);
  factor.canonicalize();
  if (sgn(*lead) < 0) factor = -factor;
  for (auto& p : tuple) p *= Rat(1) / factor;
  return factor;
}

Poly coroot_linear(int nvars, const IVec& v, const Rat& c0) {
  std::vector<Rat> coeffs(nvars, Rat(0));
  for (int k = 0; k < nvars && k < static_cast<int>(v.size()); ++k) coeffs[k] = rat_ll(v[k]);
  return Poly::linear(nvars, coeffs, c0);
}

// ---- univariate ----------------------------------------------------------

namespace {
int udeg(const Poly& p) { return p.degree(); }
Rat ucoeff(const Poly& p, int k) {
  Expo e{};
  e[0] = static_cast<std::uint8_t>(k);
  return p.coeff(e);
}
Poly umono(int k, const Rat& c) {
  Expo e{};
  e[0] = static_cast<std::uint8_t>(k);
  return Poly::monomial(1, e, c);
}
}  // namespace

std::pair<Poly, Poly> upoly_divmod(const Poly& num, const Poly& den) {
  require(num.nvars() == 1 && den.nvars() == 1 && !den.is_zero(), "univariate division needs nvars==1");
  Poly q(1), r = num;
  int dd = udeg(den);
  Rat lead = ucoeff(den, dd);
  while (!r.is_zero() && udeg(r) >= dd) {
    int k = udeg(r) - dd;
    Rat c = ucoeff(r, udeg(r)) / lead;
    Poly t = umono(k, c);
    q += t;
    r -= t * den;
  }
  return {q, r};
}

Poly upoly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    auto [q, r] = upoly_divmod(a, b);
    (void)q;
    a = b;
    b = r;
  }
  if (a.is_zero()) return a;
  return a / ucoeff(a, udeg(a));  // monic
}

RatFn1 RatFn1::of(const Poly& p) {
  RatFn1 f;
  f.num = p;
  f.den = Poly::constant(1, Rat(1));
  return f;
}

void RatFn1::reduce() {
  require(!den.is_zero(), "rational function with zero denominator");
  if (num.is_zero()) {
    den = Poly::constant(1, Rat(1));
    return;
  }
  Poly g = upoly_gcd(num, den);
  if (g.degree() > 0) {
    num = upoly_divmod(num, g).first;
    den = upoly_divmod(den, g).first;
  }
  Rat lead = ucoeff(den, udeg(den));
  num = num / lead;
  den = den / lead;
}

RatFn1 RatFn1::operator+(const RatFn1& o) const {
  RatFn1 r;
  r.num = num * o.den + o.num * den;
  r.den = den * o.den;
  r.reduce();
  return r;
}

RatFn1 RatFn1::operator-(const RatFn1& o) const {
  RatFn1 r;
  r.num = num * o.den - o.num * den;
  r.den = den * o.den;
  r.reduce();
  return r;
}

RatFn1 RatFn1::operator*(const RatFn1& o) const {
  RatFn1 r;
  r.num = num * o.num;
  r.den = den * o.den;
  r.reduce();
  return r;
}

RatFn1 RatFn1::operator/(const RatFn1& o) const {
  require(!o.num.is_zero(), "division by zero rational function");
  RatFn1 r;
  r.num = num * o.den;
  r.den = den * o.num;
  r.reduce();
  return r;
}

bool RatFn1::operator==(const RatFn1& o) const { return num * o.den == o.num * den; }

RatFn RatFn::of(const Poly& p) {
  RatFn f;
  f.num = p;
  f.den = Poly::constant(p.nvars(), Rat(1));
  return f;
}

bool RatFn::same_as(const RatFn& o) const { return num * o.den == o.num * den; }

}  // namespace zhelo
