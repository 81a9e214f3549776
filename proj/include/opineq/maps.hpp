#ifndef OPINEQ_MAPS_HPP
#define OPINEQ_MAPS_HPP

#include <numeric>
#include <string>
#include <vector>

#include "opineq/calculus.hpp"
#include "opineq/rng.hpp"

namespace opineq {

// Unital positive linear maps in structurally positive form. Every variant is
// in fact completely positive; the theorems only need positivity, and CP maps
// are the easy-to-construct test class (limitation documented in the README).
class MapSpec {
public:
  enum class Variant { Compression, NormalizedTrace, Pinching, KrausMixture };

  struct KrausTerm {
    double weight = 1.0;
    ComplexMatrix isometry; // n_in x n_out, V*V = I_{n_out}
  };

  static MapSpec compression(int n_in, int k) {
    if (k < 1 || k > n_in) throw dimension_error("compression block out of range");
    MapSpec m;
    m.variant_ = Variant::Compression;
    m.n_in_ = n_in;
    m.n_out_ = k;
    return m;
  }

  static MapSpec normalized_trace(int n_in, int n_out = -1) {
    MapSpec m;
    m.variant_ = Variant::NormalizedTrace;
    m.n_in_ = n_in;
    m.n_out_ = n_out <= 0 ? n_in : n_out;
    return m;
  }

  static MapSpec pinching(int n_in, std::vector<std::vector<int>> partition) {
    MapSpec m;
    m.variant_ = Variant::Pinching;
    m.n_in_ = n_in;
    m.n_out_ = n_in;
    std::vector<int> seen(n_in, 0);
    for (auto& block : partition)
      for (int i : block) {
        if (i < 0 || i >= n_in || seen[i]++) throw dimension_error("pinching partition invalid");
      }
    for (int c : seen)
      if (!c) throw dimension_error("pinching partition must cover all indices");
    m.partition_ = std::move(partition);
    return m;
  }

  static MapSpec kraus_mixture(int n_in, int n_out, std::vector<KrausTerm> terms) {
    MapSpec m;
    m.variant_ = Variant::KrausMixture;
    m.n_in_ = n_in;
    m.n_out_ = n_out;
    m.terms_ = std::move(terms);
    for (auto& t : m.terms_) {
      if (t.isometry.rows() != n_in || t.isometry.cols() != n_out)
        throw dimension_error("Kraus isometry shape mismatch");
      if (t.weight <= 0.0) throw dimension_error("Kraus weights must be positive");
    }
    return m;
  }

  Variant variant() const { return variant_; }
  int n_in() const { return n_in_; }
  int n_out() const { return n_out_; }
  const std::vector<std::vector<int>>& partition() const { return partition_; }
  const std::vector<KrausTerm>& terms() const { return terms_; }

  std::string variant_name() const {
    switch (variant_) {
      case Variant::Compression: return "compression";
      case Variant::NormalizedTrace: return "normalized_trace";
      case Variant::Pinching: return "pinching";
      case Variant::KrausMixture: return "kraus_mixture";
    }
    return "?";
  }

  HermitianMatrix apply(const HermitianMatrix& A) const {
    if (A.n() != n_in_) throw dimension_error("map input dimension mismatch");
    switch (variant_) {
      case Variant::Compression: {
        ComplexMatrix r(n_out_, n_out_);
        for (int i = 0; i < n_out_; ++i)
          for (int j = 0; j < n_out_; ++j) r(i, j) = A(i, j);
        return HermitianMatrix(r);
      }
      case Variant::NormalizedTrace: {
        cplx tr = 0.0;
        for (int i = 0; i < n_in_; ++i) tr += A(i, i);
        ComplexMatrix r(n_out_, n_out_);
        const double mean = tr.real() / n_in_;
        for (int i = 0; i < n_out_; ++i) r(i, i) = mean;
        return HermitianMatrix(r);
      }
      case Variant::Pinching: {
        ComplexMatrix r(n_in_, n_in_);
        for (const auto& block : partition_)
          for (int i : block)
            for (int j : block) r(i, j) = A(i, j);
        return HermitianMatrix(r);
      }
      case Variant::KrausMixture: {
        ComplexMatrix acc(n_out_, n_out_);
        for (const auto& t : terms_)
          acc = acc + t.weight * (t.isometry.adjoint() * (A.cm() * t.isometry));
        return HermitianMatrix(acc);
      }
    }
    throw dimension_error("unreachable map variant");
  }

private:
  Variant variant_ = Variant::NormalizedTrace;
  int n_in_ = 1, n_out_ = 1;
  std::vector<std::vector<int>> partition_;
  std::vector<KrausTerm> terms_;
};

inline HermitianMatrix apply(const MapSpec& phi, const HermitianMatrix& A) {
  return phi.apply(A);
}

struct MapValidationReport {
  bool unital = false;
  bool positive = false;
  double unitality_deviation = 0.0;
  double worst_output_min_eig = 0.0;
  bool weights_normalized = true;
  bool passed() const { return unital && positive && weights_normalized; }
};

namespace detail {

inline ComplexMatrix random_gaussian(int rows, int cols, Rng& rng) {
  ComplexMatrix g(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) g(i, j) = cplx(rng.gaussian(), rng.gaussian());
  return g;
}

// Gram-Schmidt with one re-orthogonalization pass; columns end orthonormal.
inline ComplexMatrix orthonormalize_columns(ComplexMatrix g) {
  const int rows = g.rows(), cols = g.cols();
  for (int pass = 0; pass < 2; ++pass) {
    for (int j = 0; j < cols; ++j) {
      for (int k = 0; k < j; ++k) {
        cplx dot = 0.0;
        for (int i = 0; i < rows; ++i) dot += std::conj(g(i, k)) * g(i, j);
        for (int i = 0; i < rows; ++i) g(i, j) -= dot * g(i, k);
      }
      double norm = 0.0;
      for (int i = 0; i < rows; ++i) norm += std::norm(g(i, j));
      norm = std::sqrt(norm);
      if (norm < 1e-12) { // degenerate draw; replace with a unit coordinate
        for (int i = 0; i < rows; ++i) g(i, j) = (i == j % rows) ? 1.0 : 0.0;
      } else {
        for (int i = 0; i < rows; ++i) g(i, j) /= norm;
      }
    }
  }
  return g;
}

inline ComplexMatrix random_isometry(int n_in, int n_out, Rng& rng) {
  return orthonormalize_columns(random_gaussian(n_in, n_out, rng));
}

inline ComplexMatrix random_unitary(int n, Rng& rng) { return random_isometry(n, n, rng); }

inline HermitianMatrix random_psd(int n, Rng& rng) {
  ComplexMatrix g = random_gaussian(n, n, rng);
  return HermitianMatrix((1.0 / n) * (g.adjoint() * g));
}

} // namespace detail

// Checks unitality and, on 200 seeded random PSD inputs, positivity of the
// output. Returns a failed report instead of throwing.
inline MapValidationReport validate(const MapSpec& phi, std::uint64_t seed = 7) {
  MapValidationReport rep;
  const HermitianMatrix out_id = phi.apply(HermitianMatrix::identity(phi.n_in()));
  rep.unitality_deviation =
      distance_frobenius(out_id.cm(), ComplexMatrix::identity(phi.n_out()));
  rep.unital = rep.unitality_deviation <= 1e-10;
  if (phi.variant() == MapSpec::Variant::KrausMixture) {
    double wsum = 0.0;
    for (const auto& t : phi.terms()) wsum += t.weight;
    rep.weights_normalized = std::abs(wsum - 1.0) <= 1e-12;
  }
  rep.worst_output_min_eig = std::numeric_limits<double>::infinity();
  Rng rng(derive_seed(seed, hash_str("validate"), 0));
  for (int trial = 0; trial < 200; ++trial) {
    const HermitianMatrix x = detail::random_psd(phi.n_in(), rng);
    rep.worst_output_min_eig = std::min(rep.worst_output_min_eig, min_eig(phi.apply(x)));
  }
  rep.positive = rep.worst_output_min_eig >= -1e-10;
  return rep;
}

// Kraus mixture with Haar-like random isometries and normalized-exponential
// weights. Deterministic given the seed.
inline MapSpec random_map(int n_in, int n_out, int terms, std::uint64_t seed) {
  if (n_out > n_in) throw dimension_error("random_map needs n_out <= n_in");
  if (terms < 1) throw dimension_error("random_map needs at least one term");
  Rng rng(derive_seed(seed, hash_str("random_map"), 0));
  std::vector<double> w(terms);
  double wsum = 0.0;
  for (double& x : w) {
    x = std::exp(rng.gaussian());
    wsum += x;
  }
  std::vector<MapSpec::KrausTerm> ts(terms);
  for (int i = 0; i < terms; ++i) {
    ts[i].weight = w[i] / wsum;
    ts[i].isometry = detail::random_isometry(n_in, n_out, rng);
  }
  return MapSpec::kraus_mixture(n_in, n_out, std::move(ts));
}

} // namespace opineq

#endif
