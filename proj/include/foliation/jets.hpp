#ifndef FOLIATION_JETS_HPP
#define FOLIATION_JETS_HPP

#include <map>
#include <string>
#include <vector>

#include "foliation/ratfunc.hpp"

namespace fol {

// Polynomial in formal time variables t_1..t_nt, truncated at a total
// degree cap, with RationalFunc coefficients over a chart ring. Used for
// formal flow jets and leafwise restrictions of chart functions.
class JetPoly {
 public:
  JetPoly(size_t nt, int cap, std::vector<std::string> coeff_vars, TermOrder coeff_order)
      : nt_(nt), cap_(cap), cvars_(std::move(coeff_vars)), corder_(coeff_order) {}

  static JetPoly constant(const RationalFunc& c, size_t nt, int cap);
  static JetPoly time_var(size_t index, size_t nt, int cap, const std::vector<std::string>& cvars,
                          TermOrder corder);

  size_t times() const { return nt_; }
  int cap() const { return cap_; }
  const std::map<Expvec, RationalFunc>& terms() const { return terms_; }
  const std::vector<std::string>& coeff_vars() const { return cvars_; }
  TermOrder coeff_order() const { return corder_; }

  bool is_zero() const { return terms_.empty(); }
  RationalFunc coeff(const Expvec& e) const;

  JetPoly operator+(const JetPoly& o) const;
  JetPoly operator-(const JetPoly& o) const;
  JetPoly operator*(const JetPoly& o) const;
  JetPoly scaled(const RationalFunc& c) const;
  JetPoly truncated(int new_cap) const;

  JetPoly time_derivative(size_t t_index) const;

  void add_term(const Expvec& e, const RationalFunc& c);

  // evaluate the coefficients at a rational chart point, producing a
  // MultiPoly in fresh time variables over Q
  MultiPoly eval_coeffs(const std::vector<Rat>& point, const std::vector<std::string>& tvars,
                        TermOrder order) const;

  std::string str(const std::string& tprefix = "t") const;

 private:
  size_t nt_;
  int cap_;
  std::vector<std::string> cvars_;
  TermOrder corder_;
  std::map<Expvec, RationalFunc> terms_;
};

// Composition P(values...) of a chart polynomial / rational function with
// jets (one jet per chart variable), truncated at the jets' cap. The
// rational-function version requires the denominator jet to be a unit.
JetPoly compose_poly(const MultiPoly& p, const std::vector<JetPoly>& values);
JetPoly compose_ratfunc(const RationalFunc& f, const std::vector<JetPoly>& values);

// inverse of a jet with unit constant term
JetPoly jet_inverse(const JetPoly& a);

// all exponent vectors of length n with total degree <= cap, graded order
// (degree first, lexicographic within a degree); deterministic
std::vector<Expvec> graded_exponents(size_t n, int cap);

}  // namespace fol

#endif
