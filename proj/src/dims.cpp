#include "densbench/dims.hpp"

#include <sstream>

#include "densbench/error.hpp"

namespace densbench::dims {

std::string Dim::str() const {
  std::ostringstream os;
  os << "[L^";
  if (exponent_.denominator() == 1) {
    os << exponent_.numerator();
  } else {
    os << exponent_.numerator() << '/' << exponent_.denominator();
  }
  os << ']';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Dim& d) { return os << d.str(); }

TermSpec TermSpec::operator*(const TermSpec& other) const {
  TermSpec out = *this;
  for (const auto& [sym, power] : other.field_powers) out.field_powers[sym] += power;
  out.derivative_count += other.derivative_count;
  out.operator_dim = operator_dim * other.operator_dim;
  return out;
}

Dim term_dimension(const TermSpec& term, const FieldDims& field_dims) {
  if (term.derivative_count < 0) {
    throw Error(ErrorKind::InvalidArgument, "negative derivative count");
  }
  Dim total = term.operator_dim * kDerivative.pow(term.derivative_count);
  for (const auto& [sym, power] : term.field_powers) {
    if (power < 0) throw Error(ErrorKind::InvalidArgument, "negative power of field '" + sym + "'");
    auto it = field_dims.find(sym);
    if (it == field_dims.end()) throw Error(ErrorKind::UnknownSymbol, "no dimension for field '" + sym + "'");
    total = total * it->second.pow(power);
  }
  return total;
}

Dim infer_field_dimension(const Dim& operator_dim, bool bilinear) {
  if (!bilinear) {
    throw Error(ErrorKind::UnsupportedStructure, "field dimension inference needs a bilinear term");
  }
  // 2 d + op = -4
  return Dim((kLagrangianDensity.exponent() - operator_dim.exponent()) / Exponent(2));
}

bool check_density_dimension(const TermSpec& density_term, const FieldDims& field_dims) {
  return term_dimension(density_term, field_dims) == kDensity;
}

}  // namespace densbench::dims
