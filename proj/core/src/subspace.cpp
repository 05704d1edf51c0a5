#include "adlie/subspace.hpp"

#include "adlie/error.hpp"
#include "adlie/linalg.hpp"

namespace adlie {

SubspaceBasis::SubspaceBasis(std::size_t ambient_dim, std::vector<Vec> vectors)
    : ambient_dim_(ambient_dim), vectors_(std::move(vectors)) {
  for (const auto& v : vectors_) {
    if (v.size() != ambient_dim_) throw Error(Errc::DimensionMismatch, "subspace vector length");
  }
  if (!vectors_.empty() && rank(as_rows()) != vectors_.size()) {
    throw Error(Errc::LinearlyDependent, "subspace basis vectors are dependent");
  }
}

SubspaceBasis SubspaceBasis::span(std::size_t ambient_dim, const std::vector<Vec>& vectors) {
  if (vectors.empty()) return SubspaceBasis(ambient_dim);
  for (const auto& v : vectors) {
    if (v.size() != ambient_dim) throw Error(Errc::DimensionMismatch, "subspace vector length");
  }
  const Rref r = rref(Mat::from_rows(vectors, ambient_dim));
  SubspaceBasis out(ambient_dim);
  for (std::size_t i = 0; i < r.pivots.size(); ++i) out.vectors_.push_back(r.reduced.row(i));
  return out;
}

SubspaceBasis SubspaceBasis::whole(std::size_t n) {
  SubspaceBasis out(n);
  for (std::size_t i = 0; i < n; ++i) out.vectors_.push_back(unit_vec(n, i));
  return out;
}

Mat SubspaceBasis::as_rows() const { return Mat::from_rows(vectors_, ambient_dim_); }

Mat SubspaceBasis::as_cols() const { return Mat::from_cols(vectors_, ambient_dim_); }

SubspaceBasis SubspaceBasis::canonical() const { return span(ambient_dim_, vectors_); }

bool SubspaceBasis::contains(const Vec& v) const {
  if (v.size() != ambient_dim_) throw Error(Errc::DimensionMismatch, "vector length");
  if (is_zero(v)) return true;
  auto rows = vectors_;
  rows.push_back(v);
  return rank(Mat::from_rows(rows, ambient_dim_)) == vectors_.size();
}

bool SubspaceBasis::contains(const SubspaceBasis& other) const {
  if (other.ambient_dim_ != ambient_dim_) throw Error(Errc::DimensionMismatch, "ambient dimension");
  if (other.empty()) return true;
  auto rows = vectors_;
  rows.insert(rows.end(), other.vectors_.begin(), other.vectors_.end());
  return rank(Mat::from_rows(rows, ambient_dim_)) == vectors_.size();
}

Vec SubspaceBasis::coordinates(const Vec& v) const {
  if (v.size() != ambient_dim_) throw Error(Errc::DimensionMismatch, "vector length");
  return solve_linear(as_cols(), v).particular;
}

bool same_subspace(const SubspaceBasis& a, const SubspaceBasis& b) {
  return a.ambient_dim() == b.ambient_dim() && a.dim() == b.dim() && a.contains(b);
}

SubspaceBasis annihilator(const SubspaceBasis& a) {
  if (a.empty()) return SubspaceBasis::whole(a.ambient_dim());
  return SubspaceBasis(a.ambient_dim(), kernel(a.as_rows()));
}

SubspaceBasis intersect(const SubspaceBasis& a, const SubspaceBasis& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw Error(Errc::DimensionMismatch, "ambient dimension");
  const std::size_t n = a.ambient_dim();
  auto rows = annihilator(a).vectors();
  const auto more = annihilator(b).vectors();
  rows.insert(rows.end(), more.begin(), more.end());
  if (rows.empty()) return SubspaceBasis::whole(n);
  return SubspaceBasis(n, kernel(Mat::from_rows(rows, n)));
}

SubspaceBasis subspace_sum(const SubspaceBasis& a, const SubspaceBasis& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw Error(Errc::DimensionMismatch, "ambient dimension");
  auto rows = a.vectors();
  rows.insert(rows.end(), b.vectors().begin(), b.vectors().end());
  return SubspaceBasis::span(a.ambient_dim(), rows);
}

SubspaceBasis greedy_complement(const SubspaceBasis& sub, const SubspaceBasis& within) {
  if (sub.ambient_dim() != within.ambient_dim()) {
    throw Error(Errc::DimensionMismatch, "ambient dimension");
  }
  const std::size_t n = sub.ambient_dim();
  // Keep a running echelon form so each membership test is a single reduction.
  Mat echelon = sub.empty() ? Mat(0, n) : rref(sub.as_rows()).reduced;
  std::size_t current = sub.dim();
  std::vector<Vec> added;
  for (const auto& w : within.vectors()) {
    Mat trial(current + 1, n);
    if (current > 0) trial.set_block(0, 0, echelon.block(0, 0, current, n));
    trial.set_row(current, w);
    Rref r = rref(std::move(trial));
    if (r.pivots.size() == current + 1) {
      echelon = std::move(r.reduced);
      ++current;
      added.push_back(w);
    }
  }
  return SubspaceBasis(n, std::move(added));
}

SubspaceBasis image(const Mat& map, const SubspaceBasis& sub) {
  if (map.cols() != sub.ambient_dim()) throw Error(Errc::DimensionMismatch, "map domain");
  std::vector<Vec> imgs;
  imgs.reserve(sub.dim());
  for (const auto& v : sub.vectors()) imgs.push_back(map * v);
  return SubspaceBasis::span(map.rows(), imgs);
}

}  // namespace adlie
