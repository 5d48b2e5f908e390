#ifndef FOLIATION_MULTIPOLY_HPP
#define FOLIATION_MULTIPOLY_HPP

#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "foliation/rational.hpp"

namespace fol {

using Expvec = std::vector<int>;

inline int total_degree(const Expvec& e) {
  int d = 0;
  for (int x : e) d += x;
  return d;
}

// Monomial order. Block compares a leading variable block first (graded
// reverse lex inside each block); with the variables to eliminate in the
// front block this is an elimination order.
struct TermOrder {
  enum class Kind { GrevLex, Lex, Block };
  Kind kind = Kind::GrevLex;
  int split = 0;  // Block: number of leading (eliminated) variables

  static TermOrder grevlex() { return {Kind::GrevLex, 0}; }
  static TermOrder lex() { return {Kind::Lex, 0}; }
  static TermOrder block(int split) { return {Kind::Block, split}; }

  // strict "a < b"
  bool less(const Expvec& a, const Expvec& b) const;
  bool same_as(const TermOrder& o) const { return kind == o.kind && split == o.split; }
};

// Sparse multivariate polynomial over Q. Terms are kept sorted descending
// in the active order (front = leading term); no zero coefficients are
// stored and the zero polynomial has no terms.
class MultiPoly {
 public:
  using Term = std::pair<Expvec, Rat>;

  MultiPoly() = default;
  MultiPoly(std::vector<std::string> vars, TermOrder order)
      : vars_(std::move(vars)), order_(order) {}

  static MultiPoly zero(const std::vector<std::string>& vars, TermOrder order) {
    return MultiPoly(vars, order);
  }
  static MultiPoly constant(const Rat& c, const std::vector<std::string>& vars, TermOrder order);
  static MultiPoly variable(const std::string& name, const std::vector<std::string>& vars,
                            TermOrder order);
  static MultiPoly monomial(const Expvec& e, const Rat& c, const std::vector<std::string>& vars,
                            TermOrder order);

  const std::vector<std::string>& vars() const { return vars_; }
  const TermOrder& order() const { return order_; }
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_[0].first) == 0);
  }
  bool is_one() const;
  Rat constant_value() const;  // requires is_constant()

  const Expvec& leading_exp() const { return terms_.front().first; }
  const Rat& leading_coeff() const { return terms_.front().second; }
  int degree() const;  // total degree, -1 for zero
  int degree_in(int var_index) const;

  MultiPoly operator-() const;
  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
  MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  bool operator==(const MultiPoly& o) const;
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  MultiPoly scaled(const Rat& c) const;
  MultiPoly monic() const;  // divide by leading coefficient
  MultiPoly mul_monomial(const Expvec& e, const Rat& c) const;
  MultiPoly pow(unsigned e) const;

  // Exact division; throws std::domain_error if not divisible.
  MultiPoly div_exact(const MultiPoly& d) const;
  bool divides(const MultiPoly& d) const;

  MultiPoly derivative(int var_index) const;

  // Substitution of values (one entry per variable, may mix in variables of
  // the target ring). Used for evaluation and coordinate changes.
  Rat eval(const std::vector<Rat>& point) const;
  MultiPoly subst(const std::vector<MultiPoly>& images, const std::vector<std::string>& new_vars,
                  TermOrder new_order) const;

  // Rebuild on a different variable list (must contain all variables
  // actually used) and/or order.
  MultiPoly with_vars(const std::vector<std::string>& new_vars, TermOrder new_order) const;
  MultiPoly with_order(TermOrder new_order) const;

  // Integer-primitive associate: integer coefficients with content 1 and
  // positive leading coefficient; used for canonical printing.
  MultiPoly primitive_part() const;

  // Group terms by the exponents of the given variable subset: returns the
  // coefficients (polynomials in the remaining variables are kept in the
  // same ring) indexed by the exponent pattern on `group_vars`.
  std::map<Expvec, MultiPoly> coefficients_of(const std::vector<int>& group_var_indices) const;

  void add_term(const Expvec& e, const Rat& c);  // merges, keeps invariants

  std::string str() const;

 private:
  void sort_terms();
  std::vector<std::string> vars_;
  TermOrder order_ = TermOrder::grevlex();
  std::vector<Term> terms_;  // descending in order_
};

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

// gcd of multivariate polynomials over Q (monic normalization of the
// result under the poly's order). gcd(0,0) = 0.
MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b);

MultiPoly poly_lcm(const MultiPoly& a, const MultiPoly& b);

// determinant of a square polynomial matrix (Bareiss, fraction-free)
MultiPoly poly_det(std::vector<std::vector<MultiPoly>> m, const std::vector<std::string>& vars,
                   TermOrder order);

// --- text grammar -----------------------------------------------------
//
// poly  := ['+'|'-'] term (('+'|'-') term)*
// term  := coef '*' mono | mono | coef
// coef  := int | int '/' int
// mono  := var ('^' uint)? ('*' var ('^' uint)?)*
//
// parse_poly accepts a superset (parenthesized expressions, '-' inside
// factors); print always emits the grammar above.
MultiPoly parse_poly(const std::string& text, const std::vector<std::string>& vars,
                     TermOrder order = TermOrder::grevlex());

}  // namespace fol

#endif
