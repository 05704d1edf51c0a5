#include "adlie/lie_algebra.hpp"

#include <algorithm>

#include "adlie/error.hpp"

namespace adlie {

namespace {

void sparse_add(SparseVec& v, std::size_t k, const Scalar& c) {
  if (sgn(c) == 0) return;
  auto it = std::lower_bound(v.begin(), v.end(), k,
                             [](const auto& entry, std::size_t key) { return entry.first < key; });
  if (it != v.end() && it->first == k) {
    it->second += c;
    if (sgn(it->second) == 0) v.erase(it);
  } else {
    v.insert(it, {k, c});
  }
}

void sparse_set(SparseVec& v, std::size_t k, const Scalar& c) {
  auto it = std::lower_bound(v.begin(), v.end(), k,
                             [](const auto& entry, std::size_t key) { return entry.first < key; });
  if (it != v.end() && it->first == k) {
    if (sgn(c) == 0) {
      v.erase(it);
    } else {
      it->second = c;
    }
  } else if (sgn(c) != 0) {
    v.insert(it, {k, c});
  }
}

}  // namespace

LieAlgebra::LieAlgebra(std::size_t dim) : dim_(dim), table_(dim * dim) {}

void LieAlgebra::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != dim_) throw Error(Errc::DimensionMismatch, "label count");
  labels_ = std::move(labels);
}

void LieAlgebra::check_index(std::size_t i) const {
  if (i >= dim_) throw Error(Errc::DimensionMismatch, "basis index out of range");
}

void LieAlgebra::set_bracket(std::size_t i, std::size_t j, const Vec& value) {
  check_index(i);
  check_index(j);
  if (value.size() != dim_) throw Error(Errc::DimensionMismatch, "bracket value length");
  if (i == j) {
    if (!is_zero(value)) throw Error(Errc::BadParameter, "[e_i, e_i] must vanish");
    return;
  }
  SparseVec pos, neg;
  for (std::size_t k = 0; k < dim_; ++k) {
    if (sgn(value[k]) != 0) {
      pos.emplace_back(k, value[k]);
      neg.emplace_back(k, -value[k]);
    }
  }
  table_[i * dim_ + j] = std::move(pos);
  table_[j * dim_ + i] = std::move(neg);
}

void LieAlgebra::add_bracket_term(std::size_t i, std::size_t j, std::size_t k, const Scalar& c) {
  check_index(i);
  check_index(j);
  check_index(k);
  if (i == j) {
    if (sgn(c) != 0) throw Error(Errc::BadParameter, "[e_i, e_i] must vanish");
    return;
  }
  sparse_add(table_[i * dim_ + j], k, c);
  sparse_add(table_[j * dim_ + i], k, -c);
}

void LieAlgebra::set_constant_raw(std::size_t i, std::size_t j, std::size_t k, const Scalar& c) {
  check_index(i);
  check_index(j);
  check_index(k);
  sparse_set(table_[i * dim_ + j], k, c);
}

Scalar LieAlgebra::constant(std::size_t i, std::size_t j, std::size_t k) const {
  for (const auto& [idx, c] : bracket_sparse(i, j)) {
    if (idx == k) return c;
  }
  return 0;
}

Vec LieAlgebra::bracket(std::size_t i, std::size_t j) const {
  Vec v(dim_);
  for (const auto& [k, c] : bracket_sparse(i, j)) v[k] = c;
  return v;
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw Error(Errc::DimensionMismatch, "bracket argument length");
  Vec out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (sgn(y[j]) == 0) continue;
      const auto& b = bracket_sparse(i, j);
      if (b.empty()) continue;
      const Scalar f = x[i] * y[j];
      for (const auto& [k, c] : b) out[k] += f * c;
    }
  }
  return out;
}

Mat LieAlgebra::ad(const Vec& x) const {
  if (x.size() != dim_) throw Error(Errc::DimensionMismatch, "ad argument length");
  Mat m(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      for (const auto& [k, c] : bracket_sparse(i, j)) m(k, j) += x[i] * c;
    }
  }
  return m;
}

Mat LieAlgebra::ad_basis(std::size_t i) const {
  check_index(i);
  Mat m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    for (const auto& [k, c] : bracket_sparse(i, j)) m(k, j) = c;
  }
  return m;
}

bool LieAlgebra::is_abelian() const {
  return std::all_of(table_.begin(), table_.end(), [](const SparseVec& v) { return v.empty(); });
}

MetricLieAlgebra::MetricLieAlgebra(LieAlgebra alg, BilinearSpace met)
    : algebra(std::move(alg)), metric(std::move(met)) {
  if (algebra.dim() != metric.dim()) throw Error(Errc::DimensionMismatch, "metric dimension");
  if (!metric.is_nondegenerate()) throw Error(Errc::DegenerateMetric, "metric is degenerate");
}

}  // namespace adlie
