#pragma once

// Polynomial expression trees over field symbols and their spacetime
// derivatives. Enough algebra to run Euler-Lagrange and Legendre steps on
// Lagrangian densities that contain at most first derivatives, with exact
// (complex rational) coefficients so that results can be compared
// structurally.

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace densbench::sym {

using Rational = boost::rational<std::int64_t>;

/// Exact complex rational. The imaginary unit lives here rather than as a
/// symbol, so i*i = -1 needs no rewrite rule.
struct Coeff {
  Rational re{0};
  Rational im{0};

  Coeff() = default;
  Coeff(std::int64_t r) : re(r) {}  // NOLINT(google-explicit-constructor)
  Coeff(Rational r, Rational i = Rational(0)) : re(r), im(i) {}

  static Coeff i() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return re.numerator() == 0 && im.numerator() == 0; }
  bool is_one() const { return re == Rational(1) && im.numerator() == 0; }

  friend Coeff operator+(const Coeff& a, const Coeff& b) { return {a.re + b.re, a.im + b.im}; }
  friend Coeff operator-(const Coeff& a, const Coeff& b) { return {a.re - b.re, a.im - b.im}; }
  friend Coeff operator-(const Coeff& a) { return {-a.re, -a.im}; }
  friend Coeff operator*(const Coeff& a, const Coeff& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  Coeff& operator+=(const Coeff& o) { return *this = *this + o; }
  Coeff& operator*=(const Coeff& o) { return *this = *this * o; }

  friend bool operator==(const Coeff&, const Coeff&) = default;

  /// Signed rendering used by the serializer: "+1", "-1/2", "+i", "-3i", "+(1-2i)".
  std::string str() const;
};

enum class AtomKind : std::uint8_t {
  Field,      // psi[a], psibar[a], phi, phi*
  Potential,  // V, A[k] / A[mu]
  Parameter,  // e, m: spacetime constants
  Gamma,      // gamma^mu[a,b], an uninterpreted matrix-entry tag
};

/// A symbol together with its first (or, after differentiation, higher)
/// spacetime derivatives. Ordering is lexicographic on name first, then
/// component indices, conjugation and derivative indices.
struct Atom {
  std::string name;
  bool conj = false;
  std::vector<int> indices;
  std::vector<int> derivs;  // sorted; derivatives commute
  AtomKind kind = AtomKind::Field;

  friend auto operator<=>(const Atom&, const Atom&) = default;
  friend bool operator==(const Atom&, const Atom&) = default;

  /// Same symbol with one more derivative d/dx^mu.
  Atom d(int mu) const;
  Atom without_derivs() const;
  int time_derivative_count() const;
  bool is_constant() const { return kind == AtomKind::Parameter || kind == AtomKind::Gamma; }

  std::string str() const;
};

using Monomial = std::vector<Atom>;  // sorted multiset
using Polynomial = std::map<Monomial, Coeff>;

/// Immutable expression tree. Nodes are shared between copies.
class Expr {
 public:
  enum class Kind : std::uint8_t { Const, Symbol, Sum, Product };

  Expr();  // constant zero
  Expr(std::int64_t value);  // NOLINT(google-explicit-constructor)
  Expr(Coeff value);         // NOLINT(google-explicit-constructor)
  Expr(Atom atom);           // NOLINT(google-explicit-constructor)

  static Expr sum(std::vector<Expr> terms);
  static Expr product(std::vector<Expr> factors);

  Kind kind() const;
  const Coeff& value() const;  // Const only
  const Atom& atom() const;    // Symbol only
  const std::vector<Expr>& children() const;

  friend Expr operator+(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a);
  friend Expr operator*(const Expr& a, const Expr& b);

  /// Structural (node-for-node) equality. Compare canonical forms to decide
  /// algebraic equality.
  friend bool operator==(const Expr& a, const Expr& b);

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

// Symbol constructors.
Atom phi();
Atom phi_conj();
Atom psi(int component);
Atom psibar(int component);
Atom scalar_potential();         // V
Atom vector_potential(int index);  // A[k] (k = 1..3) or A[mu] (mu = 0..3)
Atom charge();                   // e
Atom mass();                     // m
Atom gamma(int mu, int row, int col);

// Polynomial algebra.
Polynomial expand(const Expr& e);
Expr to_expr(const Polynomial& p);

/// Sum of products; each product is [Const if != 1] followed by sorted
/// symbols. Zero is the empty sum.
Expr canonicalize(const Expr& e);
bool equivalent(const Expr& a, const Expr& b);
bool is_zero(const Expr& e);

/// d/dx^mu, product rule; constants (e, m, gamma tags) have zero derivative.
Expr total_derivative(const Expr& e, int mu);
/// Formal partial derivative with respect to a symbol, all other symbols
/// (including its derivatives) held fixed.
Expr partial(const Expr& e, const Atom& wrt);
Expr substitute(const Expr& e, const Atom& target, const Expr& replacement);
/// Exchanges `name` and `name*` everywhere, keeping derivative indices.
Expr swap_conjugate(const Expr& e, const std::string& name);

// Field-theory operations.

/// d_mu (dL/d f_{,mu}) - dL/df. Throws UnsupportedStructure if the
/// Lagrangian already holds second derivatives.
Expr euler_lagrange(const Expr& lagrangian, const Atom& field);

/// sum_f f_{,0} dL/df_{,0} - L.
Expr legendre_transform(const Expr& lagrangian, const std::vector<Atom>& fields);

enum class TermSymmetry : std::uint8_t { Symmetric, Antisymmetric, NoTimeDerivative, Mixed };
std::string_view to_string(TermSymmetry s);

/// Looks only at the monomials carrying the most time derivatives and asks
/// how they behave under `name` <-> `name*`.
TermSymmetry classify_time_symmetry(const Expr& e, const std::string& name = "phi");

/// phi* -> phi; with `charge_to_zero` also e -> 0.
Expr substitute_real(const Expr& e, bool charge_to_zero);

/// Monomial count of a canonical expression.
std::size_t term_count(const Expr& e);
/// Highest number of time-derivative indices carried by any monomial.
int max_time_derivatives(const Expr& e);

/// One monomial per line, in canonical order: `<coeff> <factor> <factor>...`.
std::string serialize(const Expr& e);
std::ostream& operator<<(std::ostream& os, const Expr& e);

}  // namespace densbench::sym
