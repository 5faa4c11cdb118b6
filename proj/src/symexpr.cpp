#include "densbench/symexpr.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "densbench/error.hpp"

namespace densbench::sym {

namespace {

std::string rational_str(const Rational& r) {
  std::string s = std::to_string(r.numerator());
  if (r.denominator() != 1) s += "/" + std::to_string(r.denominator());
  return s;
}

bool negative(const Rational& r) { return r.numerator() < 0; }
bool vanishes(const Rational& r) { return r.numerator() == 0; }
bool is_unit(const Rational& r) { return r == Rational(1) || r == Rational(-1); }
Rational magnitude(const Rational& r) { return negative(r) ? -r : r; }

}  // namespace

std::string Coeff::str() const {
  if (vanishes(im)) return (negative(re) ? "-" : "+") + rational_str(magnitude(re));
  if (vanishes(re)) {
    std::string mag = is_unit(im) ? "" : rational_str(magnitude(im));
    return (negative(im) ? "-" : "+") + mag + "i";
  }
  std::string s = "+(" + rational_str(re);
  s += (negative(im) ? "-" : "+");
  s += is_unit(im) ? "" : rational_str(magnitude(im));
  return s + "i)";
}

// ---------------------------------------------------------------------------
// Atoms

Atom Atom::d(int mu) const {
  if (mu < 0 || mu > 3) throw Error(ErrorKind::InvalidArgument, "derivative index out of range");
  Atom out = *this;
  out.derivs.insert(std::upper_bound(out.derivs.begin(), out.derivs.end(), mu), mu);
  return out;
}

Atom Atom::without_derivs() const {
  Atom out = *this;
  out.derivs.clear();
  return out;
}

int Atom::time_derivative_count() const {
  return static_cast<int>(std::count(derivs.begin(), derivs.end(), 0));
}

std::string Atom::str() const {
  std::string s = name;
  if (kind == AtomKind::Gamma) {
    s += "^" + std::to_string(indices.at(0)) + "[" + std::to_string(indices.at(1)) + "," +
         std::to_string(indices.at(2)) + "]";
  } else {
    if (conj) s += "*";
    if (!indices.empty()) {
      s += "[";
      for (std::size_t i = 0; i < indices.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(indices[i]);
      }
      s += "]";
    }
  }
  if (!derivs.empty()) {
    s += "_{";
    for (int mu : derivs) s += "," + std::to_string(mu);
    s += "}";
  }
  return s;
}

Atom phi() { return {"phi", false, {}, {}, AtomKind::Field}; }
Atom phi_conj() { return {"phi", true, {}, {}, AtomKind::Field}; }
Atom psi(int component) { return {"psi", false, {component}, {}, AtomKind::Field}; }
Atom psibar(int component) { return {"psibar", false, {component}, {}, AtomKind::Field}; }
Atom scalar_potential() { return {"V", false, {}, {}, AtomKind::Potential}; }
Atom vector_potential(int index) { return {"A", false, {index}, {}, AtomKind::Potential}; }
Atom charge() { return {"e", false, {}, {}, AtomKind::Parameter}; }
Atom mass() { return {"m", false, {}, {}, AtomKind::Parameter}; }
Atom gamma(int mu, int row, int col) { return {"gamma", false, {mu, row, col}, {}, AtomKind::Gamma}; }

// ---------------------------------------------------------------------------
// Tree

struct Expr::Node {
  Kind kind = Kind::Const;
  Coeff value;
  Atom atom;
  std::vector<Expr> children;
};

Expr::Expr() : Expr(Coeff{}) {}
Expr::Expr(std::int64_t value) : Expr(Coeff(value)) {}
Expr::Expr(Coeff value) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Const;
  n->value = value;
  node_ = std::move(n);
}
Expr::Expr(Atom atom) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Symbol;
  n->atom = std::move(atom);
  node_ = std::move(n);
}
Expr::Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Expr Expr::sum(std::vector<Expr> terms) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Sum;
  n->children = std::move(terms);
  return Expr(std::shared_ptr<const Node>(std::move(n)));
}

Expr Expr::product(std::vector<Expr> factors) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Product;
  n->children = std::move(factors);
  return Expr(std::shared_ptr<const Node>(std::move(n)));
}

Expr::Kind Expr::kind() const { return node_->kind; }

const Coeff& Expr::value() const {
  if (node_->kind != Kind::Const) throw Error(ErrorKind::InvalidArgument, "not a constant node");
  return node_->value;
}

const Atom& Expr::atom() const {
  if (node_->kind != Kind::Symbol) throw Error(ErrorKind::InvalidArgument, "not a symbol node");
  return node_->atom;
}

const std::vector<Expr>& Expr::children() const { return node_->children; }

Expr operator+(const Expr& a, const Expr& b) { return Expr::sum({a, b}); }
Expr operator-(const Expr& a, const Expr& b) { return Expr::sum({a, -b}); }
Expr operator-(const Expr& a) { return Expr::product({Expr(Coeff(-1)), a}); }
Expr operator*(const Expr& a, const Expr& b) { return Expr::product({a, b}); }

bool operator==(const Expr& a, const Expr& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Expr::Kind::Const:
      return a.node_->value == b.node_->value;
    case Expr::Kind::Symbol:
      return a.node_->atom == b.node_->atom;
    case Expr::Kind::Sum:
    case Expr::Kind::Product:
      return a.children() == b.children();
  }
  return false;
}

// ---------------------------------------------------------------------------
// Polynomial algebra

namespace {

void accumulate(Polynomial& into, Monomial mono, const Coeff& c) {
  if (c.is_zero()) return;
  std::sort(mono.begin(), mono.end());
  auto [it, inserted] = into.try_emplace(std::move(mono), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) into.erase(it);
  }
}

Polynomial multiply(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) {
      Monomial m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      accumulate(out, std::move(m), ca * cb);
    }
  }
  return out;
}

Polynomial map_atoms(const Polynomial& p, const auto& fn) {
  Polynomial out;
  for (const auto& [mono, c] : p) {
    Monomial m;
    m.reserve(mono.size());
    for (const auto& a : mono) m.push_back(fn(a));
    accumulate(out, std::move(m), c);
  }
  return out;
}

Polynomial derivative(const Polynomial& p, int mu) {
  Polynomial out;
  for (const auto& [mono, c] : p) {
    for (std::size_t i = 0; i < mono.size(); ++i) {
      if (mono[i].is_constant()) continue;
      Monomial m = mono;
      m[i] = m[i].d(mu);
      accumulate(out, std::move(m), c);
    }
  }
  return out;
}

Polynomial partial_of(const Polynomial& p, const Atom& wrt) {
  Polynomial out;
  for (const auto& [mono, c] : p) {
    auto first = std::find(mono.begin(), mono.end(), wrt);
    if (first == mono.end()) continue;
    const auto multiplicity = std::count(mono.begin(), mono.end(), wrt);
    Monomial m = mono;
    m.erase(m.begin() + (first - mono.begin()));
    accumulate(out, std::move(m), c * Coeff(multiplicity));
  }
  return out;
}

Polynomial add(Polynomial a, const Polynomial& b, const Coeff& scale = Coeff(1)) {
  for (const auto& [mono, c] : b) accumulate(a, mono, c * scale);
  return a;
}

int time_count(const Monomial& m) {
  int n = 0;
  for (const auto& a : m) n += a.time_derivative_count();
  return n;
}

}  // namespace

Polynomial expand(const Expr& e) {
  switch (e.kind()) {
    case Expr::Kind::Const: {
      Polynomial p;
      accumulate(p, {}, e.value());
      return p;
    }
    case Expr::Kind::Symbol: {
      Polynomial p;
      accumulate(p, {e.atom()}, Coeff(1));
      return p;
    }
    case Expr::Kind::Sum: {
      Polynomial p;
      for (const auto& child : e.children()) p = add(std::move(p), expand(child));
      return p;
    }
    case Expr::Kind::Product: {
      Polynomial p;
      accumulate(p, {}, Coeff(1));
      for (const auto& child : e.children()) p = multiply(p, expand(child));
      return p;
    }
  }
  return {};
}

Expr to_expr(const Polynomial& p) {
  std::vector<Expr> terms;
  terms.reserve(p.size());
  for (const auto& [mono, c] : p) {
    std::vector<Expr> factors;
    if (!c.is_one() || mono.empty()) factors.emplace_back(c);
    for (const auto& a : mono) factors.emplace_back(a);
    terms.push_back(Expr::product(std::move(factors)));
  }
  return Expr::sum(std::move(terms));
}

Expr canonicalize(const Expr& e) { return to_expr(expand(e)); }

bool equivalent(const Expr& a, const Expr& b) { return expand(a) == expand(b); }

bool is_zero(const Expr& e) { return expand(e).empty(); }

Expr total_derivative(const Expr& e, int mu) { return to_expr(derivative(expand(e), mu)); }

Expr partial(const Expr& e, const Atom& wrt) { return to_expr(partial_of(expand(e), wrt)); }

Expr substitute(const Expr& e, const Atom& target, const Expr& replacement) {
  const Polynomial rep = expand(replacement);
  Polynomial out;
  for (const auto& [mono, c] : expand(e)) {
    Polynomial term;
    Monomial rest;
    accumulate(term, {}, c);
    for (const auto& a : mono) {
      if (a == target) {
        term = multiply(term, rep);
      } else {
        rest.push_back(a);
      }
    }
    Polynomial restp;
    accumulate(restp, std::move(rest), Coeff(1));
    out = add(std::move(out), multiply(term, restp));
  }
  return to_expr(out);
}

Expr swap_conjugate(const Expr& e, const std::string& name) {
  return to_expr(map_atoms(expand(e), [&](const Atom& a) {
    if (a.kind != AtomKind::Field || a.name != name) return a;
    Atom out = a;
    out.conj = !a.conj;
    return out;
  }));
}

Expr euler_lagrange(const Expr& lagrangian, const Atom& field) {
  if (!field.derivs.empty()) {
    throw Error(ErrorKind::InvalidArgument, "vary with respect to an underived field, got " + field.str());
  }
  const Polynomial lag = expand(lagrangian);
  for (const auto& [mono, c] : lag) {
    for (const auto& a : mono) {
      if (a.derivs.size() > 1) {
        throw Error(ErrorKind::UnsupportedStructure, "higher derivative " + a.str() + " in Lagrangian");
      }
    }
  }
  Polynomial out;
  for (int mu = 0; mu < 4; ++mu) out = add(std::move(out), derivative(partial_of(lag, field.d(mu)), mu));
  out = add(std::move(out), partial_of(lag, field), Coeff(-1));
  return to_expr(out);
}

Expr legendre_transform(const Expr& lagrangian, const std::vector<Atom>& fields) {
  const Polynomial lag = expand(lagrangian);
  Polynomial out;
  for (const auto& f : fields) {
    const Atom rate = f.d(0);
    Polynomial rate_p;
    accumulate(rate_p, {rate}, Coeff(1));
    out = add(std::move(out), multiply(rate_p, partial_of(lag, rate)));
  }
  out = add(std::move(out), lag, Coeff(-1));
  return to_expr(out);
}

std::string_view to_string(TermSymmetry s) {
  switch (s) {
    case TermSymmetry::Symmetric: return "Symmetric";
    case TermSymmetry::Antisymmetric: return "Antisymmetric";
    case TermSymmetry::NoTimeDerivative: return "NoTimeDerivative";
    case TermSymmetry::Mixed: return "Mixed";
  }
  return "?";
}

TermSymmetry classify_time_symmetry(const Expr& e, const std::string& name) {
  const Polynomial p = expand(e);
  int top = 0;
  for (const auto& [mono, c] : p) top = std::max(top, time_count(mono));
  if (top == 0) return TermSymmetry::NoTimeDerivative;

  Polynomial leading;
  for (const auto& [mono, c] : p) {
    if (time_count(mono) == top) leading.emplace(mono, c);
  }
  const Polynomial swapped = expand(swap_conjugate(to_expr(leading), name));
  if (swapped == leading) return TermSymmetry::Symmetric;
  if (add(swapped, leading).empty()) return TermSymmetry::Antisymmetric;
  return TermSymmetry::Mixed;
}

Expr substitute_real(const Expr& e, bool charge_to_zero) {
  Polynomial out;
  for (const auto& [mono, c] : expand(e)) {
    if (charge_to_zero && std::find(mono.begin(), mono.end(), charge()) != mono.end()) continue;
    Monomial m = mono;
    for (auto& a : m) {
      if (a.kind == AtomKind::Field) a.conj = false;
    }
    accumulate(out, std::move(m), c);
  }
  return to_expr(out);
}

std::size_t term_count(const Expr& e) { return expand(e).size(); }

int max_time_derivatives(const Expr& e) {
  int top = 0;
  for (const auto& [mono, c] : expand(e)) top = std::max(top, time_count(mono));
  return top;
}

std::string serialize(const Expr& e) {
  std::ostringstream os;
  const Polynomial p = expand(e);
  if (p.empty()) return "0\n";
  for (const auto& [mono, c] : p) {
    os << c.str();
    for (std::size_t i = 0; i < mono.size();) {
      std::size_t j = i;
      while (j < mono.size() && mono[j] == mono[i]) ++j;
      os << ' ' << mono[i].str();
      if (j - i > 1) os << '^' << (j - i);
      i = j;
    }
    os << '\n';
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Expr& e) { return os << serialize(e); }

}  // namespace densbench::sym
