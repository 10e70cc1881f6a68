#include "zhelo/rootsys.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace zhelo {

namespace {

std::vector<std::vector<int>> zero_matrix(int n) {
  return std::vector<std::vector<int>>(n, std::vector<int>(n, 0));
}

void set_chain(std::vector<std::vector<int>>& a, int n) {
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  for (int i = 0; i + 1 < n; ++i) {
    a[i][i + 1] = -1;
    a[i + 1][i] = -1;
  }
}

}  // namespace

CartanDatum cartan_datum(char family, int rank) {
  CartanDatum cd;
  cd.family = family;
  cd.rank = rank;
  int n = rank;
  auto& a = cd.a;
  a = zero_matrix(n);
  cd.d.assign(n, 1);
  switch (family) {
    case 'A':
      require(n >= 1, "type A needs rank >= 1");
      set_chain(a, n);
      break;
    case 'B':
      require(n >= 2, "type B needs rank >= 2");
      set_chain(a, n);
      a[n - 1][n - 2] = -2;  // alpha_{n-1}(h_n) = -2, alpha_n short
      for (int i = 0; i < n - 1; ++i) cd.d[i] = 2;
      break;
    case 'C':
      require(n >= 2, "type C needs rank >= 2");
      set_chain(a, n);
      a[n - 2][n - 1] = -2;  // alpha_n(h_{n-1}) = -2, alpha_n long
      cd.d[n - 1] = 2;
      break;
    case 'D':
      require(n >= 3, "type D needs rank >= 3");
      set_chain(a, n - 1);
      a[n - 1][n - 1] = 2;
      a[n - 3][n - 1] = -1;  // alpha_n attached to alpha_{n-2}
      a[n - 1][n - 3] = -1;
      break;
    case 'E': {
      require(n >= 6 && n <= 8, "type E needs rank 6..8");
      // Bourbaki: chain 1-3-4-5-6(-7-8), node 2 attached to 4.
      for (int i = 0; i < n; ++i) a[i][i] = 2;
      auto link = [&](int i, int j) { a[i - 1][j - 1] = a[j - 1][i - 1] = -1; };
      link(1, 3);
      link(3, 4);
      link(4, 5);
      link(5, 6);
      link(2, 4);
      if (n >= 7) link(6, 7);
      if (n >= 8) link(7, 8);
      break;
    }
    case 'F':
      require(n == 4, "type F needs rank 4");
      // Reverse-Bourbaki labelling: the double bond points from row 2 to
      // row 3, so h_1, h_2 are the long coroots.
      set_chain(a, 4);
      a[1][2] = -2;
      cd.d = {1, 1, 2, 2};
      break;
    case 'G':
      require(n == 2, "type G needs rank 2");
      a[0][0] = a[1][1] = 2;
      a[0][1] = -3;  // alpha_2(h_1) = -3
      a[1][0] = -1;
      cd.d = {1, 3};
      break;
    default:
      fault(std::string("unknown family '") + family + "'");
  }
  // Validate the Cartan axioms and the symmetrizer.
  for (int i = 0; i < n; ++i) {
    require(a[i][i] == 2, "Cartan diagonal must be 2");
    for (int j = 0; j < n; ++j) {
      if (i != j) {
        require(a[i][j] <= 0, "off-diagonal Cartan entries must be <= 0");
        require((a[i][j] == 0) == (a[j][i] == 0), "Cartan zero pattern must be symmetric");
      }
      require(static_cast<long long>(cd.d[i]) * a[i][j] == static_cast<long long>(cd.d[j]) * a[j][i],
              "symmetrizer mismatch");
    }
  }
  return cd;
}

CartanDatum parse_type(const std::string& tag) {
  require(tag.size() >= 2, "type tag must look like 'B3'");
  char fam = tag[0];
  require(fam >= 'A' && fam <= 'G', "family must be one of A..G");
  for (std::size_t k = 1; k < tag.size(); ++k)
    require(tag[k] >= '0' && tag[k] <= '9', "rank must be numeric");
  int rank = std::stoi(tag.substr(1));
  require(rank >= 1 && rank <= 8, "rank must be between 1 and 8");
  return cartan_datum(fam, rank);
}

CartanDatum dual_datum(const CartanDatum& cd) {
  CartanDatum dual;
  dual.family = cd.family;  // informational; the matrix is what counts
  dual.rank = cd.rank;
  int n = cd.rank;
  dual.a = zero_matrix(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) dual.a[i][j] = cd.a[j][i];
  // Symmetrizer of the transpose: proportional to 1/d_i, made integral.
  long long lcm = 1;
  for (int i = 0; i < n; ++i) lcm = std::lcm(lcm, static_cast<long long>(cd.d[i]));
  dual.d.resize(n);
  for (int i = 0; i < n; ++i) dual.d[i] = static_cast<int>(lcm / cd.d[i]);
  return dual;
}

std::vector<std::vector<Rat>> inverse_cartan(const CartanDatum& cd) {
  int n = cd.rank;
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(2 * n, Rat(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = Rat(cd.a[i][j]);
    m[i][n + i] = Rat(1);
  }
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!is_zero(m[r][col])) {
        piv = r;
        break;
      }
    require(piv >= 0, "Cartan matrix is singular");
    std::swap(m[piv], m[col]);
    Rat inv = 1 / m[col][col];
    for (int j = 0; j < 2 * n; ++j) m[col][j] *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == col || is_zero(m[r][col])) continue;
      Rat f = m[r][col];
      for (int j = 0; j < 2 * n; ++j) m[r][j] -= f * m[col][j];
    }
  }
  std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
  return inv;
}

long long RootSystem::simple_root_on_coroot(int i, const IVec& v) const {
  long long s = 0;
  for (int k = 0; k < rank; ++k) s += v[k] * datum.a[k][i];
  return s;
}

long long RootSystem::root_on_simple_coroot(const IVec& gamma, int j) const {
  long long s = 0;
  for (int k = 0; k < rank; ++k) s += gamma[k] * datum.a[j][k];
  return s;
}

IVec RootSystem::reflect_coroot(int j, const IVec& v) const {
  IVec w = v;
  w[j] -= simple_root_on_coroot(j, v);  // s_j(v) = v - alpha_j(v) h_j
  return w;
}

IVec RootSystem::reflect_root(int j, const IVec& v) const {
  IVec w = v;
  w[j] -= root_on_simple_coroot(v, j);  // s_j(v) = v - v(h_j) alpha_j
  return w;
}

std::optional<int> RootSystem::positive_coroot_index(const IVec& v) const {
  auto it = coroot_index_.find(v);
  if (it == coroot_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> RootSystem::positive_root_index(const IVec& v) const {
  auto it = root_index_.find(v);
  if (it == root_index_.end()) return std::nullopt;
  return it->second;
}

bool RootSystem::is_coroot(const IVec& v) const {
  if (coroot_index_.count(v)) return true;
  IVec neg(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) neg[k] = -v[k];
  return coroot_index_.count(neg) > 0;
}

bool RootSystem::is_root(const IVec& v) const {
  if (root_index_.count(v)) return true;
  IVec neg(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) neg[k] = -v[k];
  return root_index_.count(neg) > 0;
}

Rat RootSystem::coroot_norm2(const IVec& v) const {
  // In the dual system the coroots of this system are roots, with
  // (h_i, h_j) proportional to a[j][i]/d_i; any global scale cancels in
  // every use.
  Rat s(0);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      s += rat_ll(v[i] * v[j] * datum.a[j][i]) / datum.d[i];
  return s;
}

Rat RootSystem::root_norm2(const IVec& v) const {
  // (alpha_i, alpha_j) proportional to d_i a[i][j].
  Rat s(0);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      s += rat_ll(v[i] * v[j] * datum.a[i][j] * datum.d[i]);
  return s;
}

// In a simply-laced system every (co)root counts as long.
bool RootSystem::coroot_is_short(const IVec& v) const {
  return min_coroot_norm2_ != max_coroot_norm2_ && coroot_norm2(v) == min_coroot_norm2_;
}

bool RootSystem::root_is_short(const IVec& v) const {
  return min_root_norm2_ != max_root_norm2_ && root_norm2(v) == min_root_norm2_;
}

bool RootSystem::simply_laced() const { return min_root_norm2_ == max_root_norm2_; }

std::vector<std::vector<long long>> RootSystem::simple_matrix(int j) const {
  // Action on coroot coordinates: (s_j v)_j = v_j - sum_k a[k][j] v_k.
  std::vector<std::vector<long long>> m(rank, std::vector<long long>(rank, 0));
  for (int i = 0; i < rank; ++i) m[i][i] = 1;
  for (int k = 0; k < rank; ++k) m[j][k] -= datum.a[k][j];
  return m;
}

namespace {
std::vector<std::vector<long long>> mat_mul(const std::vector<std::vector<long long>>& x,
                                            const std::vector<std::vector<long long>>& y) {
  int n = static_cast<int>(x.size());
  std::vector<std::vector<long long>> z(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      long long v = x[i][k];
      if (v == 0) continue;
      for (int j = 0; j < n; ++j) z[i][j] += v * y[k][j];
    }
  return z;
}
}  // namespace

WeylElement RootSystem::element_from_word(const std::vector<int>& word) const {
  WeylElement e;
  e.word = word;
  e.mat.assign(rank, std::vector<long long>(rank, 0));
  for (int i = 0; i < rank; ++i) e.mat[i][i] = 1;
  for (int j : word) e.mat = mat_mul(e.mat, simple_matrix(j));
  return e;
}

const std::vector<WeylElement>& RootSystem::weyl_elements() const {
  if (!weyl_cache_.empty()) return weyl_cache_;
  std::map<std::vector<std::vector<long long>>, int> seen;
  std::vector<WeylElement> out;
  WeylElement id;
  id.mat.assign(rank, std::vector<long long>(rank, 0));
  for (int i = 0; i < rank; ++i) id.mat[i][i] = 1;
  seen[id.mat] = 0;
  out.push_back(id);
  std::size_t head = 0;
  while (head < out.size()) {
    WeylElement cur = out[head++];
    for (int j = 0; j < rank; ++j) {
      auto m = mat_mul(cur.mat, simple_matrix(j));
      if (seen.count(m)) continue;
      WeylElement nxt;
      nxt.word = cur.word;
      nxt.word.push_back(j);
      nxt.mat = std::move(m);
      seen[nxt.mat] = static_cast<int>(out.size());
      out.push_back(std::move(nxt));
    }
  }
  weyl_cache_ = std::move(out);
  return weyl_cache_;
}

std::vector<int> RootSystem::longest_word(bool prefer_high_index) const {
  // Walk a regular dominant vector (2 rho-check) into the antidominant
  // chamber; each step crosses exactly one wall, so the word is reduced and
  // the product is the longest element.
  IVec v(rank, 0);
  for (const auto& c : coroots)
    for (int k = 0; k < rank; ++k) v[k] += c[k];
  std::vector<int> word;
  while (true) {
    int found = -1;
    for (int t = 0; t < rank; ++t) {
      int j = prefer_high_index ? rank - 1 - t : t;
      if (simple_root_on_coroot(j, v) > 0) {
        found = j;
        break;
      }
    }
    if (found < 0) break;
    v = reflect_coroot(found, v);
    word.push_back(found);
  }
  std::reverse(word.begin(), word.end());
  require(static_cast<int>(word.size()) == num_positive(), "longest word length must equal |Delta+|");
  return word;
}

RootSystem build_root_system(const CartanDatum& cd) {
  RootSystem rs;
  rs.datum = cd;
  rs.rank = cd.rank;
  int n = cd.rank;

  // Orbit closure of the paired simple (root, coroot) vectors.
  std::map<IVec, IVec> root_to_coroot;
  std::vector<IVec> queue;
  for (int i = 0; i < n; ++i) {
    IVec r(n, 0), c(n, 0);
    r[i] = 1;
    c[i] = 1;
    root_to_coroot[r] = c;
    queue.push_back(r);
  }
  std::size_t head = 0;
  while (head < queue.size()) {
    IVec r = queue[head++];
    IVec c = root_to_coroot[r];
    for (int j = 0; j < n; ++j) {
      IVec r2 = rs.reflect_root(j, r);
      if (root_to_coroot.count(r2)) continue;
      root_to_coroot[r2] = rs.reflect_coroot(j, c);
      queue.push_back(r2);
    }
  }

  struct Entry {
    IVec root, coroot;
    int rh;
  };
  std::vector<Entry> pos;
  for (auto& [r, c] : root_to_coroot) {
    bool all_nonneg = true, all_nonpos = true;
    for (int k = 0; k < n; ++k) {
      if (r[k] > 0) all_nonpos = false;
      if (r[k] < 0) all_nonneg = false;
    }
    require(all_nonneg || all_nonpos, "mixed-sign vector in root orbit: not a Cartan matrix");
    // Coroot sign must agree with the root sign.
    for (int k = 0; k < n; ++k)
      require((all_nonneg && c[k] >= 0) || (all_nonpos && c[k] <= 0), "root/coroot sign mismatch");
    if (!all_nonneg) continue;
    int rh = 0;
    for (auto x : r) rh += static_cast<int>(x);
    pos.push_back({r, c, rh});
  }
  // Height then lex with h_1 heaviest, so the simple roots occupy indices
  // 0..rank-1 in label order.
  std::sort(pos.begin(), pos.end(), [](const Entry& x, const Entry& y) {
    if (x.rh != y.rh) return x.rh < y.rh;
    return x.root > y.root;
  });

  for (auto& e : pos) {
    int idx = static_cast<int>(rs.roots.size());
    rs.roots.push_back(e.root);
    rs.coroots.push_back(e.coroot);
    rs.root_height.push_back(e.rh);
    int ch = 0;
    for (auto x : e.coroot) ch += static_cast<int>(x);
    rs.coroot_height.push_back(ch);
    rs.root_index_[e.root] = idx;
    rs.coroot_index_[e.coroot] = idx;
  }

  // Highest root / coroot (unique maxima).
  int max_rh = 0, max_ch = 0;
  for (int k = 0; k < rs.num_positive(); ++k) {
    max_rh = std::max(max_rh, rs.root_height[k]);
    max_ch = std::max(max_ch, rs.coroot_height[k]);
  }
  int cnt_rh = 0, cnt_ch = 0;
  for (int k = 0; k < rs.num_positive(); ++k) {
    if (rs.root_height[k] == max_rh) {
      rs.highest_root_index = k;
      ++cnt_rh;
    }
    if (rs.coroot_height[k] == max_ch) {
      rs.highest_coroot_index = k;
      ++cnt_ch;
    }
  }
  require(cnt_rh == 1, "highest root is not unique");
  require(cnt_ch == 1, "highest coroot is not unique");

  // Level counts and exponents (dual partition of the coroot heights).
  rs.coroot_level_count.assign(max_ch + 1, 0);
  for (int k = 0; k < rs.num_positive(); ++k) rs.coroot_level_count[rs.coroot_height[k]]++;
  for (int r = 1; r < max_ch; ++r)
    require(rs.coroot_level_count[r] >= rs.coroot_level_count[r + 1],
            "coroot level counts must be weakly decreasing");
  rs.exponents_.clear();
  for (int i = 1; i <= n; ++i) {
    int cnt = 0;  // number of levels with at least i coroots
    for (int r = 1; r <= max_ch; ++r)
      if (rs.coroot_level_count[r] >= i) ++cnt;
    rs.exponents_.push_back(cnt);
  }
  std::sort(rs.exponents_.begin(), rs.exponents_.end());
  require(rs.exponents_.front() == 1, "smallest exponent must be 1");
  require(rs.exponents_.back() == max_ch, "largest exponent must be the highest coroot height");

  for (int i = 0; i < n; ++i) {
    require(rs.roots[i][i] == 1 && rs.root_height[i] == 1, "simple roots must come first in label order");
  }

  rs.min_coroot_norm2_ = rs.coroot_norm2(rs.coroots[0]);
  rs.max_coroot_norm2_ = rs.min_coroot_norm2_;
  rs.min_root_norm2_ = rs.root_norm2(rs.roots[0]);
  rs.max_root_norm2_ = rs.min_root_norm2_;
  for (int k = 1; k < rs.num_positive(); ++k) {
    rs.min_coroot_norm2_ = std::min(rs.min_coroot_norm2_, rs.coroot_norm2(rs.coroots[k]));
    rs.max_coroot_norm2_ = std::max(rs.max_coroot_norm2_, rs.coroot_norm2(rs.coroots[k]));
    rs.min_root_norm2_ = std::min(rs.min_root_norm2_, rs.root_norm2(rs.roots[k]));
    rs.max_root_norm2_ = std::max(rs.max_root_norm2_, rs.root_norm2(rs.roots[k]));
  }
  return rs;
}

}  // namespace zhelo
