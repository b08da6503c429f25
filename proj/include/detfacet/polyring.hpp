#ifndef DETFACET_POLYRING_HPP
#define DETFACET_POLYRING_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace detfacet {

using Rational = mpq_class;
using Integer = mpz_class;

/// Thrown when a configurable work budget (Groebner pair cap, labeling
/// search nodes, ...) runs out before the computation finishes.  A budget
/// overrun is never reported as a mathematical result.
struct budget_exceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The ambient m x n matrix of indeterminates x[i,j], with m <= n, plus an
/// optional block of auxiliary variables z[1..aux] appended for elimination.
/// Variable ids are flattened row-major: x[i,j] -> (i-1)*n + (j-1), so the
/// chain x[1,1] > x[1,2] > ... > x[m,n] is just ascending id.
struct MatrixShape {
  int rows = 0;
  int cols = 0;
  int aux = 0;

  MatrixShape() = default;
  MatrixShape(int m, int n, int num_aux = 0);

  int matrix_vars() const { return rows * cols; }
  int num_vars() const { return rows * cols + aux; }

  int var(int i, int j) const;  // 1-based i in [m], j in [n]
  int aux_var(int k) const;     // 0-based k in [0, aux)
  bool is_aux(int id) const { return id >= rows * cols; }
  int var_row(int id) const { return id / cols + 1; }
  int var_col(int id) const { return id % cols + 1; }

  MatrixShape with_aux(int num_aux) const { return MatrixShape(rows, cols, num_aux); }

  friend bool operator==(const MatrixShape&, const MatrixShape&) = default;
};

/// "x[i,j]" for matrix variables, "z[k]" for auxiliary ones.
std::string var_name(const MatrixShape& shape, int id);

enum class OrderKind {
  RowMajorLex,       ///< lex with x[1,1] > x[1,2] > ... > x[m,n] (> z[1] > ...)
  BlockElimination,  ///< every auxiliary variable greater than every x[i,j]
};

/// Sparse exponent vector, sorted by variable id; zero exponents never stored.
struct Monomial {
  std::vector<std::pair<int, int>> exps;  // (variable id, exponent >= 1)

  static Monomial one() { return {}; }
  static Monomial variable(int id, int e = 1);

  bool is_one() const { return exps.empty(); }
  int degree() const;
  int exponent(int id) const;
  bool contains(int id) const { return exponent(id) > 0; }
  bool has_var_at_least(int first_id) const;

  Monomial operator*(const Monomial& o) const;
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.exps < b.exps; }
};

bool divides(const Monomial& a, const Monomial& b);      // a | b
Monomial quotient(const Monomial& b, const Monomial& a); // b / a; requires a | b
Monomial lcm(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);

std::strong_ordering compare_monomials(const Monomial& a, const Monomial& b,
                                       const MatrixShape& shape, OrderKind ord);

struct Term {
  Rational coeff;  // nonzero
  Monomial mono;
};

/// Sparse exact-rational polynomial.  Terms are kept strictly descending in
/// the active order at all times; the empty term list is 0.  Values are
/// immutable after construction and safe to share across threads.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(MatrixShape shape, OrderKind ord = OrderKind::RowMajorLex);

  static Polynomial zero(MatrixShape shape, OrderKind ord = OrderKind::RowMajorLex);
  static Polynomial constant(MatrixShape shape, Rational c,
                             OrderKind ord = OrderKind::RowMajorLex);
  static Polynomial variable(MatrixShape shape, int id,
                             OrderKind ord = OrderKind::RowMajorLex);
  static Polynomial from_terms(MatrixShape shape, std::vector<Term> terms,
                               OrderKind ord = OrderKind::RowMajorLex);

  const MatrixShape& shape() const { return shape_; }
  OrderKind order() const { return order_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || terms_[0].mono.is_one(); }

  /// Order-greatest term; throws std::invalid_argument on the zero polynomial.
  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().mono; }
  const Rational& leading_coefficient() const { return leading_term().coeff; }
  int total_degree() const;  // max over terms; -1 for 0
  bool uses_aux() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const Rational& c) const;
  Polynomial times_term(const Term& t) const;

  Polynomial with_order(OrderKind ord) const;
  Polynomial with_shape(MatrixShape shape) const;  // ids must fit the new shape

  /// Integer coefficients with content 1 and positive leading coefficient.
  Polynomial primitive_part() const;
  Polynomial monic() const;

  /// Ring-homomorphic substitution: every variable listed in `images` is
  /// replaced by its image, all others stay fixed.  Images must share the
  /// polynomial's shape and order.
  Polynomial substitute(const std::map<int, Polynomial>& images) const;

  /// Canonical text form, e.g. "x[1,1]*x[2,2] - x[1,2]*x[2,1]".
  std::string str() const;
  static Polynomial parse(const std::string& text, MatrixShape shape,
                          OrderKind ord = OrderKind::RowMajorLex);

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.shape_ == b.shape_ && a.terms_ == b.terms_;
  }

 private:
  MatrixShape shape_;
  OrderKind order_ = OrderKind::RowMajorLex;
  std::vector<Term> terms_;

  void normalize();
  void require_compatible(const Polynomial& o) const;
};

inline bool operator==(const Term& a, const Term& b) {
  return a.coeff == b.coeff && a.mono == b.mono;
}

}  // namespace detfacet

#endif
