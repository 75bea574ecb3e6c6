#pragma once

// Test oracle: finite-dimensional irreducible highest-weight module built
// from the Serre presentation alone. Basis vectors are words in the simple
// lowering operators applied to a highest weight vector; the module is the
// quotient of the word span by the radical of the contravariant form. Only
// generator-level brackets enter the construction, so the resulting matrices
// are an independent check of every structure constant.

#include <map>
#include <stdexcept>
#include <vector>

#include "g2voa/chevalley.hpp"
#include "g2voa/rootsys.hpp"

namespace g2voa::testing {

struct Mat {
  int n = 0;
  std::vector<Q> a;

  static Mat zero(int n) {
    Mat m;
    m.n = n;
    m.a.assign(static_cast<size_t>(n) * n, Q(0));
    return m;
  }
  Q& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
  const Q& at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }

  friend Mat operator*(const Mat& x, const Mat& y) {
    Mat r = zero(x.n);
    for (int i = 0; i < x.n; ++i)
      for (int k = 0; k < x.n; ++k) {
        if (x.at(i, k) == 0) continue;
        for (int j = 0; j < x.n; ++j) r.at(i, j) += x.at(i, k) * y.at(k, j);
      }
    return r;
  }
  friend Mat operator+(Mat x, const Mat& y) {
    for (size_t i = 0; i < x.a.size(); ++i) x.a[i] += y.a[i];
    return x;
  }
  friend Mat operator-(Mat x, const Mat& y) {
    for (size_t i = 0; i < x.a.size(); ++i) x.a[i] -= y.a[i];
    return x;
  }
  friend Mat operator*(Mat x, const Q& c) {
    for (auto& v : x.a) v *= c;
    return x;
  }
  friend bool operator==(const Mat& x, const Mat& y) {
    return x.n == y.n && x.a == y.a;
  }
  bool is_zero() const {
    for (const auto& v : a)
      if (v != 0) return false;
    return true;
  }
  Q trace() const {
    Q t(0);
    for (int i = 0; i < n; ++i) t += at(i, i);
    return t;
  }
  friend Mat commutator(const Mat& x, const Mat& y) {
    return x * y - y * x;
  }
};

// Solves G x = b for symmetric positive-definite G (Gaussian elimination).
inline std::vector<Q> solve_spd(std::vector<std::vector<Q>> g,
                                std::vector<Q> b) {
  size_t n = g.size();
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && g[piv][col] == 0) ++piv;
    if (piv == n) throw std::logic_error("singular Gram matrix");
    std::swap(g[piv], g[col]);
    std::swap(b[piv], b[col]);
    for (size_t r = 0; r < n; ++r) {
      if (r == col || g[r][col] == 0) continue;
      Q f = g[r][col] / g[col][col];
      for (size_t c = col; c < n; ++c) g[r][c] -= f * g[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<Q> x(n);
  for (size_t i = 0; i < n; ++i) x[i] = b[i] / g[i][i];
  return x;
}

class SerreRep {
 public:
  // Word alphabet: 0 = F10, 1 = F01.
  using Word = std::vector<int>;

  SerreRep(int m1, int m2, int max_depth) : highest_{Q(m1), Q(m2)} {
    build_basis(max_depth);
    build_matrices();
  }

  int dim() const { return dim_; }

  const Mat& matrix(BasisId b) const { return rho_[basis_index(b)]; }

 private:
  FiniteWeight highest_;
  int dim_ = 0;
  // selected basis words, globally indexed; bucketed by weight
  std::vector<Word> basis_words_;
  std::map<std::pair<Q, Q>, std::vector<int>> by_weight_;  // weight -> indices
  std::map<std::pair<Word, Word>, Q> inner_memo_;
  std::array<Mat, kBasisCount> rho_;

  static FiniteWeight word_shift(const Word& w, FiniteWeight top) {
    for (int i : w) {
      if (i == 0) {
        top.mu10 -= 2;
        top.mu01 += 1;
      } else {
        top.mu10 += 3;
        top.mu01 -= 2;
      }
    }
    return top;
  }

  FiniteWeight word_weight(const Word& w) const {
    return word_shift(w, highest_);
  }

  // E_i applied to a word vector, as a combination of shorter words:
  // E_i F_j u = F_j E_i u + delta_ij <wt(u), alpha_i^vee> u.
  std::map<Word, Q> eapply(int i, const Word& w) const {
    std::map<Word, Q> out;
    if (w.empty()) return out;
    Word tail(w.begin() + 1, w.end());
    for (const auto& [sub, c] : eapply(i, tail)) {
      Word full;
      full.push_back(w[0]);
      full.insert(full.end(), sub.begin(), sub.end());
      out[full] += c;
    }
    if (w[0] == i) {
      FiniteWeight wt = word_weight(tail);
      Q scalar = (i == 0) ? wt.mu10 : wt.mu01;
      if (scalar != 0) out[tail] += scalar;
    }
    for (auto it = out.begin(); it != out.end();) {
      if (it->second == 0)
        it = out.erase(it);
      else
        ++it;
    }
    return out;
  }

  // Contravariant form: <F_i u, w> = <u, E_i w>, <v, v> = 1.
  Q inner(const Word& a, const Word& b) {
    if (a.empty()) return b.empty() ? Q(1) : Q(0);
    auto key = std::make_pair(a, b);
    if (auto it = inner_memo_.find(key); it != inner_memo_.end())
      return it->second;
    Word tail(a.begin() + 1, a.end());
    Q acc(0);
    for (const auto& [sub, c] : eapply(a[0], b)) acc += c * inner(tail, sub);
    inner_memo_[key] = acc;
    return acc;
  }

  void build_basis(int max_depth) {
    std::map<std::pair<Q, Q>, std::vector<Word>> selected;
    std::vector<Word> frontier = {Word{}};
    register_word(selected, Word{});
    for (int depth = 1; depth <= max_depth; ++depth) {
      std::vector<Word> next;
      for (const Word& w : frontier)
        for (int i = 0; i < 2; ++i) {
          Word ext;
          ext.push_back(i);
          ext.insert(ext.end(), w.begin(), w.end());
          if (register_word(selected, ext)) next.push_back(ext);
        }
      frontier = std::move(next);
      if (frontier.empty()) break;
    }
    for (const auto& [wt, words] : selected)
      for (const Word& w : words) {
        by_weight_[wt].push_back(static_cast<int>(basis_words_.size()));
        basis_words_.push_back(w);
      }
    dim_ = static_cast<int>(basis_words_.size());
  }

  // Keeps the word when it enlarges the quotient span at its weight (the
  // bordered Gram determinant stays nonzero; the contravariant form is
  // positive definite on the irreducible quotient, so the Schur complement
  // test is exact).
  bool register_word(std::map<std::pair<Q, Q>, std::vector<Word>>& selected,
                     const Word& w) {
    FiniteWeight wt = word_weight(w);
    auto key = std::make_pair(wt.mu10, wt.mu01);
    auto& bucket = selected[key];
    size_t n = bucket.size();
    if (n == 0) {
      if (inner(w, w) == 0) return false;
      bucket.push_back(w);
      return true;
    }
    std::vector<std::vector<Q>> g(n, std::vector<Q>(n));
    std::vector<Q> rhs(n);
    for (size_t i = 0; i < n; ++i) {
      rhs[i] = inner(bucket[i], w);
      for (size_t j = 0; j < n; ++j) g[i][j] = inner(bucket[i], bucket[j]);
    }
    std::vector<Q> x = solve_spd(g, rhs);
    Q schur = inner(w, w);
    for (size_t i = 0; i < n; ++i) schur -= rhs[i] * x[i];
    if (schur == 0) return false;
    bucket.push_back(w);
    return true;
  }

  Q combo_norm(const std::map<Word, Q>& combo) {
    Q acc(0);
    for (const auto& [w1, c1] : combo)
      for (const auto& [w2, c2] : combo) acc += c1 * c2 * inner(w1, w2);
    return acc;
  }

  // Coordinates of a word combination in the selected basis of its weight.
  // A missing bucket is legitimate only when the combination's image is zero.
  void accumulate(Mat& m, int src_col, const std::map<Word, Q>& combo) {
    if (combo.empty()) return;
    FiniteWeight wt = word_weight(combo.begin()->first);
    auto key = std::make_pair(wt.mu10, wt.mu01);
    auto it = by_weight_.find(key);
    if (it == by_weight_.end()) {
      if (combo_norm(combo) != 0)
        throw std::logic_error("word depth too small for module");
      return;
    }
    const std::vector<int>& idx = it->second;
    size_t n = idx.size();
    std::vector<std::vector<Q>> g(n, std::vector<Q>(n));
    std::vector<Q> rhs(n, Q(0));
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < n; ++j)
        g[i][j] = inner(basis_words_[idx[i]], basis_words_[idx[j]]);
      for (const auto& [w, c] : combo)
        rhs[i] += c * inner(basis_words_[idx[i]], w);
    }
    std::vector<Q> x = solve_spd(g, rhs);
    for (size_t i = 0; i < n; ++i) m.at(idx[i], src_col) += x[i];
  }

  void build_matrices() {
    for (auto& m : rho_) m = Mat::zero(dim_);
    // generators
    for (int col = 0; col < dim_; ++col) {
      const Word& w = basis_words_[col];
      FiniteWeight wt = word_weight(w);
      rho_[basis_index(BasisId::H10)].at(col, col) = wt.mu10;
      rho_[basis_index(BasisId::H01)].at(col, col) = wt.mu01;
      for (int i = 0; i < 2; ++i) {
        Word ext;
        ext.push_back(i);
        ext.insert(ext.end(), w.begin(), w.end());
        std::map<Word, Q> f_combo;
        f_combo[ext] = Q(1);
        accumulate(rho_[i == 0 ? basis_index(BasisId::F10)
                               : basis_index(BasisId::F01)],
                   col, f_combo);
        std::map<Word, Q> e_combo = eapply(i, w);
        if (!e_combo.empty())
          accumulate(rho_[i == 0 ? basis_index(BasisId::E10)
                                 : basis_index(BasisId::E01)],
                     col, e_combo);
      }
    }
    // composite root vectors through their defining brackets
    for (int d = 1; d <= 4; ++d)
      for (int i = 0; i < kBasisCount; ++i) {
        BasisId b = basis_id(i);
        if (detail::definition_depth(b) != d) continue;
        auto def = detail::basis_definition(b).value();
        rho_[i] = commutator(rho_[basis_index(def.p)],
                             rho_[basis_index(def.q)]) *
                  def.coeff;
      }
  }
};

}  // namespace g2voa::testing
