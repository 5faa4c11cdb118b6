#pragma once

// Length-dimension algebra in natural units (hbar = c = 1). Every quantity
// carries a single exact exponent n meaning [L^n].

#include <cstdint>
#include <map>
#include <ostream>
#include <string>

#include <boost/rational.hpp>

namespace densbench::dims {

using Exponent = boost::rational<std::int64_t>;

class Dim {
 public:
  constexpr Dim() = default;
  Dim(std::int64_t num, std::int64_t den = 1) : exponent_(num, den) {}
  explicit Dim(Exponent e) : exponent_(e) {}

  const Exponent& exponent() const { return exponent_; }

  /// [L^a][L^b] = [L^(a+b)]
  friend Dim operator*(const Dim& a, const Dim& b) { return Dim(a.exponent_ + b.exponent_); }
  friend Dim operator/(const Dim& a, const Dim& b) { return Dim(a.exponent_ - b.exponent_); }
  Dim pow(std::int64_t k) const { return Dim(exponent_ * k); }

  friend bool operator==(const Dim&, const Dim&) = default;

  std::string str() const;

 private:
  Exponent exponent_{0};
};

std::ostream& operator<<(std::ostream& os, const Dim& d);

inline const Dim kDimensionless{0};
inline const Dim kDerivative{-1};            // each d/dx^mu
inline const Dim kLagrangianDensity{-4};     // action dimensionless, d^4x ~ [L^4]
inline const Dim kDensity{-3};

/// One monomial of a density or Lagrangian, reduced to what matters for
/// dimension counting.
struct TermSpec {
  std::map<std::string, int> field_powers;
  int derivative_count = 0;
  Dim operator_dim;  // constants and operator factors (mass, charge, ...)

  /// Product of two terms.
  TermSpec operator*(const TermSpec& other) const;
};

using FieldDims = std::map<std::string, Dim>;

Dim term_dimension(const TermSpec& term, const FieldDims& field_dims);

/// Dimension a field must carry so that a term bilinear in it, multiplied
/// by an operator of dimension `operator_dim`, is a Lagrangian density.
Dim infer_field_dimension(const Dim& operator_dim, bool bilinear = true);

/// Requirement on any physical density: dimension [L^-3].
bool check_density_dimension(const TermSpec& density_term, const FieldDims& field_dims);

}  // namespace densbench::dims
