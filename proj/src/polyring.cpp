#include "detfacet/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace detfacet {

MatrixShape::MatrixShape(int m, int n, int num_aux) : rows(m), cols(n), aux(num_aux) {
  if (m < 1 || n < m) throw std::invalid_argument("MatrixShape: need 1 <= m <= n");
  if (num_aux < 0) throw std::invalid_argument("MatrixShape: negative aux count");
}

int MatrixShape::var(int i, int j) const {
  if (i < 1 || i > rows || j < 1 || j > cols)
    throw std::invalid_argument("MatrixShape::var: index out of range");
  return (i - 1) * cols + (j - 1);
}

int MatrixShape::aux_var(int k) const {
  if (k < 0 || k >= aux) throw std::invalid_argument("MatrixShape::aux_var: out of range");
  return rows * cols + k;
}

std::string var_name(const MatrixShape& shape, int id) {
  std::ostringstream os;
  if (shape.is_aux(id)) {
    os << "z[" << (id - shape.matrix_vars() + 1) << "]";
  } else {
    os << "x[" << shape.var_row(id) << "," << shape.var_col(id) << "]";
  }
  return os.str();
}

Monomial Monomial::variable(int id, int e) {
  if (e < 1) throw std::invalid_argument("Monomial::variable: exponent must be >= 1");
  Monomial m;
  m.exps.emplace_back(id, e);
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (auto& [id, e] : exps) d += e;
  return d;
}

int Monomial::exponent(int id) const {
  for (auto& [v, e] : exps)
    if (v == id) return e;
  return 0;
}

bool Monomial::has_var_at_least(int first_id) const {
  return !exps.empty() && exps.back().first >= first_id;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.exps.reserve(exps.size() + o.exps.size());
  size_t i = 0, j = 0;
  while (i < exps.size() && j < o.exps.size()) {
    if (exps[i].first < o.exps[j].first) {
      r.exps.push_back(exps[i++]);
    } else if (exps[i].first > o.exps[j].first) {
      r.exps.push_back(o.exps[j++]);
    } else {
      r.exps.emplace_back(exps[i].first, exps[i].second + o.exps[j].second);
      ++i, ++j;
    }
  }
  for (; i < exps.size(); ++i) r.exps.push_back(exps[i]);
  for (; j < o.exps.size(); ++j) r.exps.push_back(o.exps[j]);
  return r;
}

bool divides(const Monomial& a, const Monomial& b) {
  size_t j = 0;
  for (auto& [v, e] : a.exps) {
    while (j < b.exps.size() && b.exps[j].first < v) ++j;
    if (j == b.exps.size() || b.exps[j].first != v || b.exps[j].second < e) return false;
  }
  return true;
}

Monomial quotient(const Monomial& b, const Monomial& a) {
  Monomial r;
  size_t i = 0;
  for (auto& [v, e] : b.exps) {
    int sub = 0;
    if (i < a.exps.size() && a.exps[i].first == v) sub = a.exps[i++].second;
    if (sub > e) throw std::invalid_argument("quotient: not divisible");
    if (e - sub > 0) r.exps.emplace_back(v, e - sub);
  }
  if (i != a.exps.size()) throw std::invalid_argument("quotient: not divisible");
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  size_t i = 0, j = 0;
  while (i < a.exps.size() && j < b.exps.size()) {
    if (a.exps[i].first < b.exps[j].first) {
      r.exps.push_back(a.exps[i++]);
    } else if (a.exps[i].first > b.exps[j].first) {
      r.exps.push_back(b.exps[j++]);
    } else {
      r.exps.emplace_back(a.exps[i].first, std::max(a.exps[i].second, b.exps[j].second));
      ++i, ++j;
    }
  }
  for (; i < a.exps.size(); ++i) r.exps.push_back(a.exps[i]);
  for (; j < b.exps.size(); ++j) r.exps.push_back(b.exps[j]);
  return r;
}

bool coprime(const Monomial& a, const Monomial& b) {
  size_t i = 0, j = 0;
  while (i < a.exps.size() && j < b.exps.size()) {
    if (a.exps[i].first == b.exps[j].first) return false;
    if (a.exps[i].first < b.exps[j].first) ++i;
    else ++j;
  }
  return true;
}

namespace {

// Lex comparison restricted to ids in [lo, hi); ascending id = descending
// significance.  Returns greater if `a` wins on the most significant
// disagreeing variable.
std::strong_ordering lex_compare_range(const Monomial& a, const Monomial& b, int lo, int hi) {
  size_t i = 0, j = 0;
  while (i < a.exps.size() && a.exps[i].first < lo) ++i;
  while (j < b.exps.size() && b.exps[j].first < lo) ++j;
  while (true) {
    bool ae = i == a.exps.size() || a.exps[i].first >= hi;
    bool be = j == b.exps.size() || b.exps[j].first >= hi;
    if (ae && be) return std::strong_ordering::equal;
    // A present variable beats an absent one: it has the smaller id among
    // the remaining entries, i.e. more significance, with exponent > 0.
    if (ae) return std::strong_ordering::less;
    if (be) return std::strong_ordering::greater;
    int va = a.exps[i].first, vb = b.exps[j].first;
    if (va < vb) return std::strong_ordering::greater;
    if (va > vb) return std::strong_ordering::less;
    if (a.exps[i].second != b.exps[j].second)
      return a.exps[i].second > b.exps[j].second ? std::strong_ordering::greater
                                                 : std::strong_ordering::less;
    ++i, ++j;
  }
}

}  // namespace

std::strong_ordering compare_monomials(const Monomial& a, const Monomial& b,
                                       const MatrixShape& shape, OrderKind ord) {
  const int mv = shape.matrix_vars();
  const int nv = shape.num_vars();
  if (ord == OrderKind::BlockElimination) {
    auto c = lex_compare_range(a, b, mv, nv);
    if (c != std::strong_ordering::equal) return c;
    return lex_compare_range(a, b, 0, mv);
  }
  return lex_compare_range(a, b, 0, nv);
}

Polynomial::Polynomial(MatrixShape shape, OrderKind ord) : shape_(shape), order_(ord) {}

Polynomial Polynomial::zero(MatrixShape shape, OrderKind ord) { return Polynomial(shape, ord); }

Polynomial Polynomial::constant(MatrixShape shape, Rational c, OrderKind ord) {
  Polynomial p(shape, ord);
  if (c != 0) p.terms_.push_back({std::move(c), Monomial::one()});
  return p;
}

Polynomial Polynomial::variable(MatrixShape shape, int id, OrderKind ord) {
  if (id < 0 || id >= shape.num_vars())
    throw std::invalid_argument("Polynomial::variable: id out of shape");
  Polynomial p(shape, ord);
  p.terms_.push_back({Rational(1), Monomial::variable(id)});
  return p;
}

Polynomial Polynomial::from_terms(MatrixShape shape, std::vector<Term> terms, OrderKind ord) {
  Polynomial p(shape, ord);
  for (auto& t : terms) {
    for (auto& [v, e] : t.mono.exps) {
      if (v < 0 || v >= shape.num_vars())
        throw std::invalid_argument("Polynomial::from_terms: variable outside shape");
      if (e < 1) throw std::invalid_argument("Polynomial::from_terms: nonpositive exponent");
    }
  }
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void Polynomial::normalize() {
  std::sort(terms_.begin(), terms_.end(), [&](const Term& a, const Term& b) {
    return compare_monomials(a.mono, b.mono, shape_, order_) == std::strong_ordering::greater;
  });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().mono == t.mono) {
      merged.back().coeff += t.coeff;
      if (merged.back().coeff == 0) merged.pop_back();
    } else if (t.coeff != 0) {
      merged.push_back(std::move(t));
    }
  }
  terms_ = std::move(merged);
}

void Polynomial::require_compatible(const Polynomial& o) const {
  if (!(shape_ == o.shape_)) throw std::invalid_argument("polynomial shape mismatch");
  if (order_ != o.order_) throw std::invalid_argument("polynomial order mismatch");
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw std::invalid_argument("leading_term of zero polynomial");
  return terms_[0];
}

int Polynomial::total_degree() const {
  int d = -1;
  for (auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

bool Polynomial::uses_aux() const {
  for (auto& t : terms_)
    if (t.mono.has_var_at_least(shape_.matrix_vars())) return true;
  return false;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  require_compatible(o);
  Polynomial r(shape_, order_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    auto c = compare_monomials(terms_[i].mono, o.terms_[j].mono, shape_, order_);
    if (c == std::strong_ordering::greater) {
      r.terms_.push_back(terms_[i++]);
    } else if (c == std::strong_ordering::less) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      Rational s = terms_[i].coeff + o.terms_[j].coeff;
      if (s != 0) r.terms_.push_back({std::move(s), terms_[i].mono});
      ++i, ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::times_term(const Term& t) const {
  if (t.coeff == 0) return Polynomial(shape_, order_);
  Polynomial r(shape_, order_);
  r.terms_.reserve(terms_.size());
  for (auto& s : terms_) r.terms_.push_back({s.coeff * t.coeff, s.mono * t.mono});
  // Multiplication by a fixed monomial preserves the order of terms.
  return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  return times_term({c, Monomial::one()});
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  require_compatible(o);
  Polynomial r(shape_, order_);
  if (is_zero() || o.is_zero()) return r;
  const Polynomial& small = terms_.size() <= o.terms_.size() ? *this : o;
  const Polynomial& big = terms_.size() <= o.terms_.size() ? o : *this;
  for (auto& t : small.terms_) r = r + big.times_term(t);
  return r;
}

Polynomial Polynomial::with_order(OrderKind ord) const {
  if (ord == order_) return *this;
  Polynomial r(shape_, ord);
  r.terms_ = terms_;
  r.normalize();
  return r;
}

Polynomial Polynomial::with_shape(MatrixShape shape) const {
  Polynomial r(shape, order_);
  for (auto& t : terms_)
    for (auto& [v, e] : t.mono.exps)
      if (v >= shape.num_vars())
        throw std::invalid_argument("with_shape: variable does not fit target shape");
  r.terms_ = terms_;
  if (shape.cols != shape_.cols)
    throw std::invalid_argument("with_shape: column count must match (ids are row-major)");
  r.normalize();
  return r;
}

Polynomial Polynomial::primitive_part() const {
  if (is_zero()) return *this;
  Integer den(1);
  for (auto& t : terms_) den = den / gcd(den, t.coeff.get_den()) * t.coeff.get_den();
  Integer content(0);
  for (auto& t : terms_) content = gcd(content, Integer(t.coeff.get_num() * (den / t.coeff.get_den())));
  Rational f(den, content);
  f.canonicalize();
  if (terms_[0].coeff < 0) f = -f;
  return scaled(f);
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(1 / terms_[0].coeff);
}

Polynomial Polynomial::substitute(const std::map<int, Polynomial>& images) const {
  Polynomial acc(shape_, order_);
  for (auto& t : terms_) {
    Polynomial prod = Polynomial::constant(shape_, t.coeff, order_);
    for (auto& [v, e] : t.mono.exps) {
      auto it = images.find(v);
      if (it == images.end()) {
        prod = prod.times_term({Rational(1), Monomial::variable(v, e)});
      } else {
        it->second.shape();  // images validated below via require_compatible
        prod.require_compatible(it->second);
        for (int k = 0; k < e; ++k) prod = prod * it->second;
      }
    }
    acc = acc + prod;
  }
  return acc;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& t : terms_) {
    Rational c = t.coeff;
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    bool coeff_shown = (c != 1) || t.mono.is_one();
    if (coeff_shown) os << c.get_str();
    bool sep = !coeff_shown;
    for (auto& [v, e] : t.mono.exps) {
      if (!sep) os << "*";
      sep = false;
      os << var_name(shape_, v);
      if (e > 1) os << "^" << e;
    }
  }
  return os.str();
}

namespace {

struct Parser {
  const std::string& s;
  size_t pos = 0;
  const MatrixShape& shape;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("polynomial parse error at position " + std::to_string(pos) +
                                ": " + what);
  }

  long integer() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected integer");
    return std::stol(s.substr(start, pos - start));
  }

  Rational rational() {
    std::string digits;
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected number");
    digits = s.substr(start, pos - start);
    if (eat('/')) {
      skip_ws();
      size_t dstart = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (pos == dstart) fail("expected denominator");
      digits += "/" + s.substr(dstart, pos - dstart);
    }
    Rational r(digits);
    r.canonicalize();
    return r;
  }

  int variable() {
    skip_ws();
    if (pos >= s.size()) fail("expected variable");
    char v = s[pos];
    if (v != 'x' && v != 'z') fail("expected 'x' or 'z'");
    ++pos;
    if (!eat('[')) fail("expected '['");
    long a = integer();
    int id;
    if (v == 'x') {
      if (!eat(',')) fail("expected ','");
      long b = integer();
      if (a < 1 || a > shape.rows || b < 1 || b > shape.cols) fail("x index out of shape");
      id = shape.var(static_cast<int>(a), static_cast<int>(b));
    } else {
      if (a < 1 || a > shape.aux) fail("z index out of shape");
      id = shape.aux_var(static_cast<int>(a) - 1);
    }
    if (!eat(']')) fail("expected ']'");
    return id;
  }

  Term term() {
    Term t{Rational(1), Monomial::one()};
    bool any = false;
    bool expect_factor = true;
    while (expect_factor) {
      skip_ws();
      if (pos >= s.size()) break;
      char c = s[pos];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        t.coeff *= rational();
        any = true;
      } else if (c == 'x' || c == 'z') {
        int id = variable();
        int e = 1;
        if (eat('^')) e = static_cast<int>(integer());
        if (e < 1) fail("exponent must be positive");
        t.mono = t.mono * Monomial::variable(id, e);
        any = true;
      } else {
        fail("expected factor");
      }
      expect_factor = eat('*');
    }
    if (!any) fail("empty term");
    return t;
  }
};

}  // namespace

Polynomial Polynomial::parse(const std::string& text, MatrixShape shape, OrderKind ord) {
  Parser p{text, 0, shape};
  std::vector<Term> terms;
  p.skip_ws();
  if (p.pos < text.size() && text.compare(p.pos, 1, "0") == 0 && p.pos + 1 >= text.size())
    return Polynomial::zero(shape, ord);
  bool negative = p.eat('-');
  if (!negative) p.eat('+');
  while (true) {
    Term t = p.term();
    if (negative) t.coeff = -t.coeff;
    terms.push_back(std::move(t));
    p.skip_ws();
    if (p.pos >= text.size()) break;
    if (p.eat('+')) negative = false;
    else if (p.eat('-')) negative = true;
    else p.fail("expected '+' or '-'");
  }
  return Polynomial::from_terms(shape, std::move(terms), ord);
}

}  // namespace detfacet
