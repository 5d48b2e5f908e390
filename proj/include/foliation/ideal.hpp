#ifndef FOLIATION_IDEAL_HPP
#define FOLIATION_IDEAL_HPP

#include <string>
#include <vector>

#include "foliation/multipoly.hpp"

namespace fol {

// Polynomial ideal presented by generators over a fixed ring. `is_groebner`
// marks lists that are reduced Gröbner bases under `order()`; reduction
// against an unmarked list is refused.
class Ideal {
 public:
  Ideal() = default;
  Ideal(std::vector<std::string> vars, TermOrder order, std::vector<MultiPoly> gens,
        bool is_groebner = false);

  static Ideal zero(const std::vector<std::string>& vars, TermOrder order) {
    return Ideal(vars, order, {});
  }

  const std::vector<std::string>& vars() const { return vars_; }
  const TermOrder& order() const { return order_; }
  const std::vector<MultiPoly>& gens() const { return gens_; }
  bool is_groebner() const { return is_groebner_; }

  bool is_zero_ideal() const { return gens_.empty(); }
  bool is_unit_ideal() const;  // computes a basis if needed

  std::string str() const;

 private:
  std::vector<std::string> vars_;
  TermOrder order_ = TermOrder::grevlex();
  std::vector<MultiPoly> gens_;
  bool is_groebner_ = false;
};

// Reduced Gröbner basis of `ideal` under `order` (Buchberger, sugar pair
// selection). Idempotent; the unit ideal yields {1}.
Ideal groebner_basis(const Ideal& ideal, TermOrder order);

// Unique normal form modulo a reduced Gröbner basis; zero iff member.
MultiPoly reduce_mod_ideal(const MultiPoly& p, const Ideal& gb);

// Full multivariate division remainder against an arbitrary generator list
// (not canonical unless the list is a Gröbner basis).
MultiPoly normal_form(const MultiPoly& p, const std::vector<MultiPoly>& gens);

bool ideal_member(const MultiPoly& p, const Ideal& ideal);

// Elimination ideal: drops the named variables (block order, dropped
// variables in front). Result lives on the remaining variables, grevlex.
Ideal eliminate(const Ideal& ideal, const std::vector<std::string>& drop);

// Rabinowitsch: generators of I + (q*u - 1) on vars + {u}; the basis is the
// unit ideal iff q vanishes nowhere on V(I). Used for radical membership
// and chart-localization checks.
Ideal adjoin_inverse(const Ideal& ideal, const MultiPoly& q, const std::string& fresh_var = "_u");

// p in radical(I)?
bool radical_member(const MultiPoly& p, const Ideal& ideal);

// dim_Q of R/(I) counted by standard monomials of a Gröbner basis, assuming
// the quotient is finite-dimensional with all standard monomials of total
// degree <= degree_cap (callers arrange this by adding a power of the
// maximal ideal). Returns the count.
long quotient_dimension(const Ideal& gb, int degree_cap);

}  // namespace fol

#endif
