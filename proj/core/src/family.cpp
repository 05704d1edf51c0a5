#include "adlie/family.hpp"

#include <random>

#include "adlie/error.hpp"
#include "adlie/linalg.hpp"
#include "polynomial.hpp"

namespace adlie {

std::string_view to_string(FamilyMethod method) {
  switch (method) {
    case FamilyMethod::constant: return "constant";
    case FamilyMethod::numeric_witness: return "numeric_witness";
    case FamilyMethod::common_kernel: return "common_kernel";
    case FamilyMethod::symbolic_determinant: return "symbolic_determinant";
    case FamilyMethod::grid: return "grid";
  }
  return "unknown";
}

void ParamMatrixFamily::check_shapes() const {
  for (const auto& d : directions) {
    if (d.rows() != base.rows() || d.cols() != base.cols()) {
      throw Error(Errc::DimensionMismatch, "family direction shape differs from base");
    }
  }
}

Mat ParamMatrixFamily::evaluate(const Vec& params) const {
  if (params.size() != directions.size()) throw Error(Errc::DimensionMismatch, "parameter count");
  Mat m = base;
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (sgn(params[i]) != 0) m += directions[i] * params[i];
  }
  return m;
}

namespace {

bool invertible_at(const ParamMatrixFamily& f, const Vec& t) { return sgn(determinant(f.evaluate(t))) != 0; }

// Nonzero x killing every member, found as the common kernel of base and directions.
Vec shared_kernel(const ParamMatrixFamily& f, bool left) {
  const std::size_t n = f.base.cols();
  std::vector<Vec> rows;
  auto append = [&](const Mat& m) {
    const Mat a = left ? m.transpose() : m;
    for (std::size_t i = 0; i < a.rows(); ++i) rows.push_back(a.row(i));
  };
  append(f.base);
  for (const auto& d : f.directions) append(d);
  const auto k = kernel(Mat::from_rows(rows, n));
  return k.empty() ? Vec{} : k.front();
}

FamilyDecision yes(FamilyMethod method, Vec witness) {
  FamilyDecision d;
  d.invertible = true;
  d.method = method;
  d.witness = std::move(witness);
  return d;
}

FamilyDecision no(FamilyMethod method) {
  FamilyDecision d;
  d.invertible = false;
  d.method = method;
  return d;
}

}  // namespace

FamilyDecision family_contains_invertible(const ParamMatrixFamily& family, const FamilyOptions& options) {
  family.check_shapes();
  if (!family.base.is_square()) throw Error(Errc::DimensionMismatch, "family matrices are not square");
  const std::size_t p = family.parameter_count();
  const std::size_t n = family.base.rows();

  if (p == 0) {
    if (invertible_at(family, {})) return yes(FamilyMethod::constant, {});
    return no(FamilyMethod::constant);
  }

  // Cheap witnesses first: all ones, 1..p, then seeded small integers.
  {
    Vec t(p, Scalar(1));
    if (invertible_at(family, t)) return yes(FamilyMethod::numeric_witness, t);
    for (std::size_t i = 0; i < p; ++i) t[i] = Scalar(static_cast<long>(i + 1));
    if (invertible_at(family, t)) return yes(FamilyMethod::numeric_witness, t);
    std::mt19937 rng(options.seed);
    std::uniform_int_distribution<int> dist(-5, 5);
    for (std::size_t attempt = 0; attempt < options.random_attempts; ++attempt) {
      for (auto& x : t) x = dist(rng);
      if (invertible_at(family, t)) return yes(FamilyMethod::numeric_witness, t);
    }
  }

  for (bool left : {false, true}) {
    Vec x = shared_kernel(family, left);
    if (!x.empty()) {
      FamilyDecision d = no(FamilyMethod::common_kernel);
      d.kernel_certificate = std::move(x);
      d.certificate_is_left = left;
      return d;
    }
  }

  if (p <= options.symbolic_limit) {
    std::vector<std::vector<detail::Poly>> m(n, std::vector<detail::Poly>(n, detail::Poly(p)));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        m[i][j] = detail::Poly::constant(p, family.base(i, j));
        for (std::size_t v = 0; v < p; ++v) {
          const Scalar& c = family.directions[v](i, j);
          if (sgn(c) != 0) {
            detail::Monomial mono(p, 0);
            mono[v] = 1;
            m[i][j].add_term(mono, c);
          }
        }
      }
    }
    detail::Poly det = detail::determinant(std::move(m), p);
    if (det.is_zero()) return no(FamilyMethod::symbolic_determinant);
    // Fix variables one at a time; d+1 values always contain a non-root.
    Vec witness(p);
    for (std::size_t v = 0; v < p; ++v) {
      const std::uint32_t deg = det.degree_in(v);
      for (std::uint32_t value = 0; value <= deg; ++value) {
        detail::Poly reduced = det.substitute(v, Scalar(value));
        if (!reduced.is_zero()) {
          witness[v] = value;
          det = std::move(reduced);
          break;
        }
      }
    }
    if (!invertible_at(family, witness)) throw Error(Errc::InvariantBreach, "symbolic witness is singular");
    return yes(FamilyMethod::symbolic_determinant, witness);
  }

  // Each variable has degree at most n in the determinant, so a nonzero
  // determinant cannot vanish on all of {0..n}^p.
  std::size_t total = 1;
  for (std::size_t v = 0; v < p; ++v) {
    total *= (n + 1);
    if (total > options.grid_limit) {
      throw Error(Errc::TooManyParameters, "too many parameters for an exact decision");
    }
  }
  std::vector<std::size_t> idx(p, 0);
  Vec t(p);
  for (std::size_t step = 0; step < total; ++step) {
    for (std::size_t v = 0; v < p; ++v) t[v] = Scalar(static_cast<long>(idx[v]));
    if (invertible_at(family, t)) return yes(FamilyMethod::grid, t);
    for (std::size_t v = 0; v < p; ++v) {
      if (++idx[v] <= n) break;
      idx[v] = 0;
    }
  }
  return no(FamilyMethod::grid);
}

}  // namespace adlie
