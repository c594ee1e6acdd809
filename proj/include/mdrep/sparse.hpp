#pragma once

#include <map>
#include <vector>

#include "mdrep/matrix.hpp"

namespace mdrep {

template <class T>
using SparseVec = std::map<std::size_t, T>;

// Incremental row echelon form over sparse rows. Row k is reduced against rows 0..k-1 only.
template <class T, class P>
class Echelon {
 public:
  Echelon(std::size_t ncols, P pol) : n_(ncols), pol_(pol) {}

  std::size_t cols() const { return n_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<std::size_t>& pivots() const { return piv_; }

  void reduce(SparseVec<T>& v) const {
    for (std::size_t k = 0; k < rows_.size() && !v.empty(); ++k) {
      auto it = v.find(piv_[k]);
      if (it == v.end()) continue;
      T f = it->second;  // rows are normalised to 1 at the pivot
      for (const auto& [c, a] : rows_[k]) {
        T& slot = v[c];
        slot -= f * a;
        if (slot.is_zero()) v.erase(c);
      }
    }
  }

  // True if v was independent of the rows so far (or was deferred).
  bool add(SparseVec<T> v) {
    reduce(v);
    if (v.empty()) return false;
    if (!insert(std::move(v))) return true;
    return true;
  }

  bool in_span(SparseVec<T> v) const {
    reduce(v);
    return v.empty();
  }

  // Retries deferred rows; throws branch_ambiguity if one cannot be pivoted.
  void finish() {
    bool progress = true;
    while (!deferred_.empty() && progress) {
      progress = false;
      std::vector<SparseVec<T>> left;
      for (auto& v : deferred_) {
        reduce(v);
        if (v.empty()) {
          progress = true;
          continue;
        }
        if (pick(v) == n_)
          left.push_back(std::move(v));
        else {
          insert(std::move(v));
          progress = true;
        }
      }
      deferred_ = std::move(left);
    }
    if (!deferred_.empty()) throw branch_ambiguity(pol_.describe(deferred_.front().begin()->second));
  }

  // Kernel basis of the row space, one vector per free column.
  std::vector<SparseVec<T>> kernel() {
    finish();
    std::vector<char> is_piv(n_, 0);
    for (auto c : piv_) is_piv[c] = 1;
    std::vector<SparseVec<T>> out;
    for (std::size_t f = 0; f < n_; ++f) {
      if (is_piv[f]) continue;
      SparseVec<T> x;
      x[f] = T(1);
      for (std::size_t k = rows_.size(); k-- > 0;) {
        T s(0);
        for (const auto& [c, a] : rows_[k]) {
          if (c == piv_[k]) continue;
          auto it = x.find(c);
          if (it != x.end()) s += a * it->second;
        }
        if (!s.is_zero()) x[piv_[k]] = -s;
      }
      out.push_back(std::move(x));
    }
    return out;
  }

  // Coordinates of v in terms of the inserted rows (requires v in the span).
  const std::vector<SparseVec<T>>& rows() const { return rows_; }

 private:
  std::size_t pick(const SparseVec<T>& v) const {
    std::size_t best = n_, best_cost = std::numeric_limits<std::size_t>::max();
    for (const auto& [c, a] : v) {
      if (pol_.classify(a) != PivotClass::ok) continue;
      std::size_t cost = pol_.cost(a);
      if (cost < best_cost) {
        best = c;
        best_cost = cost;
      }
    }
    return best;
  }

  bool insert(SparseVec<T> v) {
    std::size_t c = pick(v);
    if (c == n_) {
      deferred_.push_back(std::move(v));
      return false;
    }
    T inv = T(1) / v[c];
    for (auto& [j, a] : v) a = j == c ? T(1) : a * inv;
    rows_.push_back(std::move(v));
    piv_.push_back(c);
    return true;
  }

  std::size_t n_;
  P pol_;
  std::vector<SparseVec<T>> rows_;
  std::vector<std::size_t> piv_;
  std::vector<SparseVec<T>> deferred_;
};

}  // namespace mdrep
