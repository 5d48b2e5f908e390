#include "foliation/jets.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace fol {

JetPoly JetPoly::constant(const RationalFunc& c, size_t nt, int cap) {
  JetPoly j(nt, cap, c.vars(), c.num().order());
  j.add_term(Expvec(nt, 0), c);
  return j;
}

JetPoly JetPoly::time_var(size_t index, size_t nt, int cap, const std::vector<std::string>& cvars,
                          TermOrder corder) {
  JetPoly j(nt, cap, cvars, corder);
  Expvec e(nt, 0);
  e[index] = 1;
  j.add_term(e, RationalFunc::constant(1, cvars, corder));
  return j;
}

RationalFunc JetPoly::coeff(const Expvec& e) const {
  auto it = terms_.find(e);
  if (it == terms_.end()) return RationalFunc::zero(cvars_, corder_);
  return it->second;
}

void JetPoly::add_term(const Expvec& e, const RationalFunc& c) {
  if (c.is_zero() || total_degree(e) > cap_) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

JetPoly JetPoly::operator+(const JetPoly& o) const {
  assert(nt_ == o.nt_);
  JetPoly r(nt_, std::min(cap_, o.cap_), cvars_, corder_);
  for (const auto& [e, c] : terms_) r.add_term(e, c);
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

JetPoly JetPoly::operator-(const JetPoly& o) const {
  assert(nt_ == o.nt_);
  JetPoly r(nt_, std::min(cap_, o.cap_), cvars_, corder_);
  for (const auto& [e, c] : terms_) r.add_term(e, c);
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

JetPoly JetPoly::operator*(const JetPoly& o) const {
  assert(nt_ == o.nt_);
  JetPoly r(nt_, std::min(cap_, o.cap_), cvars_, corder_);
  for (const auto& [ea, ca] : terms_) {
    int da = total_degree(ea);
    for (const auto& [eb, cb] : o.terms_) {
      if (da + total_degree(eb) > r.cap_) continue;
      Expvec e(nt_);
      for (size_t k = 0; k < nt_; ++k) e[k] = ea[k] + eb[k];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

JetPoly JetPoly::scaled(const RationalFunc& c) const {
  JetPoly r(nt_, cap_, cvars_, corder_);
  for (const auto& [e, k] : terms_) r.add_term(e, k * c);
  return r;
}

JetPoly JetPoly::truncated(int new_cap) const {
  JetPoly r(nt_, new_cap, cvars_, corder_);
  for (const auto& [e, c] : terms_)
    if (total_degree(e) <= new_cap) r.add_term(e, c);
  return r;
}

JetPoly JetPoly::time_derivative(size_t t_index) const {
  JetPoly r(nt_, cap_, cvars_, corder_);
  for (const auto& [e, c] : terms_) {
    if (e[t_index] == 0) continue;
    Expvec d = e;
    d[t_index] -= 1;
    r.add_term(d, c.scaled(e[t_index]));
  }
  return r;
}

MultiPoly JetPoly::eval_coeffs(const std::vector<Rat>& point, const std::vector<std::string>& tvars,
                               TermOrder order) const {
  assert(tvars.size() == nt_);
  MultiPoly out(tvars, order);
  for (const auto& [e, c] : terms_) {
    Rat v = c.eval(point);
    if (!fol::is_zero(v)) out.add_term(e, v);
  }
  return out;
}

std::string JetPoly::str(const std::string& tprefix) const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    for (size_t k = 0; k < nt_; ++k) {
      if (e[k] == 0) continue;
      os << "*" << tprefix << (k + 1);
      if (e[k] > 1) os << "^" << e[k];
    }
  }
  if (first) os << "0";
  return os.str();
}

JetPoly compose_poly(const MultiPoly& p, const std::vector<JetPoly>& values) {
  assert(p.vars().size() == values.size());
  size_t nt = values.empty() ? 0 : values[0].times();
  int cap = values.empty() ? 0 : values[0].cap();
  const auto& cvars = values.empty() ? p.vars() : values[0].coeff_vars();
  TermOrder corder = values.empty() ? p.order() : values[0].coeff_order();

  // per-variable power cache
  std::vector<std::vector<JetPoly>> pw(values.size());
  auto power = [&](size_t v, int e) -> const JetPoly& {
    auto& cache = pw[v];
    if (cache.empty())
      cache.push_back(JetPoly::constant(RationalFunc::constant(1, cvars, corder), nt, cap));
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * values[v]);
    return cache[static_cast<size_t>(e)];
  };

  JetPoly acc(nt, cap, cvars, corder);
  for (const auto& [e, c] : p.terms()) {
    JetPoly t = JetPoly::constant(RationalFunc::constant(c, cvars, corder), nt, cap);
    for (size_t v = 0; v < e.size(); ++v)
      if (e[v] != 0) t = t * power(v, e[v]);
    acc = acc + t;
  }
  return acc;
}

JetPoly jet_inverse(const JetPoly& a) {
  Expvec zero(a.times(), 0);
  RationalFunc c0 = a.coeff(zero);
  if (c0.is_zero()) throw std::domain_error("jet_inverse: constant term vanishes");
  // Newton iteration x -> x(2 - a x) doubles correct order each step
  JetPoly x = JetPoly::constant(c0.inverse(), a.times(), a.cap());
  JetPoly two = JetPoly::constant(RationalFunc::constant(2, a.coeff_vars(), a.coeff_order()),
                                  a.times(), a.cap());
  int correct = 1;
  while (correct <= a.cap()) {
    x = x * (two - a * x);
    correct *= 2;
  }
  return x;
}

JetPoly compose_ratfunc(const RationalFunc& f, const std::vector<JetPoly>& values) {
  JetPoly num = compose_poly(f.num(), values);
  if (f.is_polynomial()) return num;
  JetPoly den = compose_poly(f.den(), values);
  return num * jet_inverse(den);
}

std::vector<Expvec> graded_exponents(size_t n, int cap) {
  std::vector<Expvec> out;
  Expvec scratch(n, 0);
  std::function<void(size_t, int)> rec = [&](size_t pos, int remaining) {
    if (pos + 1 == n) {
      scratch[pos] = remaining;
      out.push_back(scratch);
      scratch[pos] = 0;
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      scratch[pos] = e;
      rec(pos + 1, remaining - e);
    }
    scratch[pos] = 0;
  };
  for (int d = 0; d <= cap; ++d) {
    if (n == 0) break;
    rec(0, d);
  }
  return out;
}

}  // namespace fol
