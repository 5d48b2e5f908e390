#include "foliation/multipoly.hpp"

#include <algorithm>
#include <cassert>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace fol {

bool TermOrder::less(const Expvec& a, const Expvec& b) const {
  assert(a.size() == b.size());
  auto grevlex_range = [](const Expvec& x, const Expvec& y, size_t lo, size_t hi) -> int {
    int dx = 0, dy = 0;
    for (size_t i = lo; i < hi; ++i) {
      dx += x[i];
      dy += y[i];
    }
    if (dx != dy) return dx < dy ? -1 : 1;
    for (size_t i = hi; i-- > lo;) {
      if (x[i] != y[i]) return x[i] > y[i] ? -1 : 1;  // larger rightmost exponent is smaller
    }
    return 0;
  };
  switch (kind) {
    case Kind::Lex:
      for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i];
      return false;
    case Kind::GrevLex:
      return grevlex_range(a, b, 0, a.size()) < 0;
    case Kind::Block: {
      size_t s = static_cast<size_t>(split);
      int c = grevlex_range(a, b, 0, std::min(s, a.size()));
      if (c != 0) return c < 0;
      if (s < a.size()) return grevlex_range(a, b, s, a.size()) < 0;
      return false;
    }
  }
  return false;
}

MultiPoly MultiPoly::constant(const Rat& c, const std::vector<std::string>& vars, TermOrder order) {
  MultiPoly p(vars, order);
  if (!fol::is_zero(c)) p.terms_.push_back({Expvec(vars.size(), 0), c});
  return p;
}

MultiPoly MultiPoly::variable(const std::string& name, const std::vector<std::string>& vars,
                              TermOrder order) {
  auto it = std::find(vars.begin(), vars.end(), name);
  if (it == vars.end()) throw std::invalid_argument("MultiPoly::variable: unknown variable " + name);
  Expvec e(vars.size(), 0);
  e[static_cast<size_t>(it - vars.begin())] = 1;
  return monomial(e, 1, vars, order);
}

MultiPoly MultiPoly::monomial(const Expvec& e, const Rat& c, const std::vector<std::string>& vars,
                              TermOrder order) {
  MultiPoly p(vars, order);
  if (!fol::is_zero(c)) p.terms_.push_back({e, c});
  return p;
}

bool MultiPoly::is_one() const {
  return terms_.size() == 1 && total_degree(terms_[0].first) == 0 && terms_[0].second == 1;
}

Rat MultiPoly::constant_value() const {
  if (terms_.empty()) return 0;
  assert(is_constant());
  return terms_[0].second;
}

int MultiPoly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
  return d;
}

int MultiPoly::degree_in(int var_index) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<size_t>(var_index)]);
  return terms_.empty() ? -1 : d;
}

void MultiPoly::sort_terms() {
  std::sort(terms_.begin(), terms_.end(),
            [&](const Term& x, const Term& y) { return order_.less(y.first, x.first); });
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  assert(vars_ == o.vars_ && order_.same_as(o.order_));
  MultiPoly r(vars_, order_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    if (terms_[i].first == o.terms_[j].first) {
      Rat c = terms_[i].second + o.terms_[j].second;
      if (!fol::is_zero(c)) r.terms_.push_back({terms_[i].first, c});
      ++i, ++j;
    } else if (order_.less(o.terms_[j].first, terms_[i].first)) {
      r.terms_.push_back(terms_[i++]);
    } else {
      r.terms_.push_back(o.terms_[j++]);
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  assert(vars_ == o.vars_ && order_.same_as(o.order_));
  std::map<Expvec, Rat> acc;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      Expvec e(ea.size());
      for (size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      auto [it, inserted] = acc.try_emplace(std::move(e), ca * cb);
      if (!inserted) it->second += ca * cb;
    }
  }
  MultiPoly r(vars_, order_);
  r.terms_.reserve(acc.size());
  for (auto& [e, c] : acc)
    if (!fol::is_zero(c)) r.terms_.push_back({e, c});
  r.sort_terms();
  return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
  return vars_ == o.vars_ && terms_ == o.terms_;
}

MultiPoly MultiPoly::scaled(const Rat& c) const {
  if (fol::is_zero(c)) return MultiPoly(vars_, order_);
  MultiPoly r = *this;
  for (auto& [e, k] : r.terms_) k *= c;
  return r;
}

MultiPoly MultiPoly::monic() const {
  if (terms_.empty()) return *this;
  Rat inv = 1 / leading_coeff();
  return scaled(inv);
}

MultiPoly MultiPoly::mul_monomial(const Expvec& e, const Rat& c) const {
  if (fol::is_zero(c)) return MultiPoly(vars_, order_);
  MultiPoly r = *this;
  for (auto& [te, tc] : r.terms_) {
    for (size_t k = 0; k < te.size(); ++k) te[k] += e[k];
    tc *= c;
  }
  // multiplying every exponent by the same monomial preserves relative order
  return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly r = constant(1, vars_, order_);
  MultiPoly b = *this;
  while (e != 0) {
    if (e & 1) r = r * b;
    b = (e >>= 1) ? b * b : b;
  }
  return r;
}

MultiPoly MultiPoly::div_exact(const MultiPoly& d) const {
  assert(vars_ == d.vars_ && order_.same_as(d.order_));
  if (d.is_zero()) throw std::domain_error("div_exact: division by zero");
  MultiPoly q(vars_, order_);
  MultiPoly r = *this;
  while (!r.is_zero()) {
    const Expvec& le = r.leading_exp();
    const Expvec& de = d.leading_exp();
    Expvec qe(le.size());
    for (size_t k = 0; k < le.size(); ++k) {
      qe[k] = le[k] - de[k];
      if (qe[k] < 0) throw std::domain_error("div_exact: not divisible");
    }
    Rat qc = r.leading_coeff() / d.leading_coeff();
    q.terms_.push_back({qe, qc});
    r = r - d.mul_monomial(qe, qc);
  }
  q.sort_terms();
  return q;
}

bool MultiPoly::divides(const MultiPoly& p) const {
  if (is_zero()) return p.is_zero();
  try {
    (void)p.div_exact(*this);
    return true;
  } catch (const std::domain_error&) {
    return false;
  }
}

MultiPoly MultiPoly::derivative(int var_index) const {
  size_t v = static_cast<size_t>(var_index);
  MultiPoly r(vars_, order_);
  for (const auto& [e, c] : terms_) {
    if (e[v] == 0) continue;
    Expvec de = e;
    de[v] -= 1;
    r.terms_.push_back({std::move(de), c * e[v]});
  }
  r.sort_terms();
  return r;
}

Rat MultiPoly::eval(const std::vector<Rat>& point) const {
  assert(point.size() == vars_.size());
  Rat acc = 0;
  for (const auto& [e, c] : terms_) {
    Rat t = c;
    for (size_t k = 0; k < e.size(); ++k)
      if (e[k] != 0) t *= pow_rat(point[k], static_cast<unsigned long>(e[k]));
    acc += t;
  }
  return acc;
}

MultiPoly MultiPoly::subst(const std::vector<MultiPoly>& images,
                           const std::vector<std::string>& new_vars, TermOrder new_order) const {
  assert(images.size() == vars_.size());
  // power cache per variable
  std::vector<std::vector<MultiPoly>> pw(images.size());
  auto power = [&](size_t v, int e) -> const MultiPoly& {
    auto& cache = pw[v];
    if (cache.empty()) cache.push_back(MultiPoly::constant(1, new_vars, new_order));
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[v]);
    return cache[static_cast<size_t>(e)];
  };
  MultiPoly acc(new_vars, new_order);
  for (const auto& [e, c] : terms_) {
    MultiPoly t = MultiPoly::constant(c, new_vars, new_order);
    for (size_t k = 0; k < e.size(); ++k)
      if (e[k] != 0) t = t * power(k, e[k]);
    acc = acc + t;
  }
  return acc;
}

MultiPoly MultiPoly::with_vars(const std::vector<std::string>& new_vars, TermOrder new_order) const {
  std::vector<int> map(vars_.size(), -1);
  for (size_t i = 0; i < vars_.size(); ++i) {
    auto it = std::find(new_vars.begin(), new_vars.end(), vars_[i]);
    if (it != new_vars.end()) {
      map[i] = static_cast<int>(it - new_vars.begin());
    }
  }
  MultiPoly r(new_vars, new_order);
  for (const auto& [e, c] : terms_) {
    Expvec ne(new_vars.size(), 0);
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (map[i] < 0)
        throw std::invalid_argument("with_vars: variable " + vars_[i] + " missing from target ring");
      ne[static_cast<size_t>(map[i])] = e[i];
    }
    r.terms_.push_back({std::move(ne), c});
  }
  r.sort_terms();
  return r;
}

MultiPoly MultiPoly::with_order(TermOrder new_order) const {
  MultiPoly r = *this;
  r.order_ = new_order;
  r.sort_terms();
  return r;
}

MultiPoly MultiPoly::primitive_part() const {
  if (terms_.empty()) return *this;
  Int den_lcm = 1;
  for (const auto& [e, c] : terms_) {
    Int d = c.get_den();
    den_lcm = lcm(den_lcm, d);
  }
  Int num_gcd = 0;
  for (const auto& [e, c] : terms_) {
    Int n = c.get_num() * (den_lcm / c.get_den());
    num_gcd = gcd(num_gcd, n);
  }
  if (num_gcd == 0) num_gcd = 1;
  Rat scale(den_lcm, num_gcd);
  scale.canonicalize();
  MultiPoly r = scaled(scale);
  if (sgn(r.leading_coeff()) < 0) r = r.scaled(-1);
  return r;
}

std::map<Expvec, MultiPoly> MultiPoly::coefficients_of(
    const std::vector<int>& group_var_indices) const {
  std::map<Expvec, MultiPoly> out;
  for (const auto& [e, c] : terms_) {
    Expvec key(group_var_indices.size());
    Expvec rest = e;
    for (size_t k = 0; k < group_var_indices.size(); ++k) {
      size_t v = static_cast<size_t>(group_var_indices[k]);
      key[k] = e[v];
      rest[v] = 0;
    }
    auto [it, inserted] = out.try_emplace(key, MultiPoly(vars_, order_));
    it->second.add_term(rest, c);
  }
  return out;
}

void MultiPoly::add_term(const Expvec& e, const Rat& c) {
  if (fol::is_zero(c)) return;
  for (auto it = terms_.begin(); it != terms_.end(); ++it) {
    if (it->first == e) {
      it->second += c;
      if (fol::is_zero(it->second)) terms_.erase(it);
      return;
    }
    if (order_.less(it->first, e)) {
      terms_.insert(it, {e, c});
      return;
    }
  }
  terms_.push_back({e, c});
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rat a = c;
    if (first) {
      if (sgn(a) < 0) {
        os << "-";
        a = -a;
      }
      first = false;
    } else {
      os << (sgn(a) < 0 ? " - " : " + ");
      if (sgn(a) < 0) a = -a;
    }
    bool has_mono = total_degree(e) > 0;
    bool coeff_shown = !has_mono || a != 1;
    if (coeff_shown) os << to_string(a);
    if (has_mono) {
      if (coeff_shown) os << "*";
      bool first_factor = true;
      for (size_t k = 0; k < e.size(); ++k) {
        if (e[k] == 0) continue;
        if (!first_factor) os << "*";
        first_factor = false;
        os << vars_[k];
        if (e[k] != 1) os << "^" << e[k];
      }
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.str(); }

// ------------------------------------------------------------------
// multivariate gcd: content/primitive-part recursion with a primitive
// pseudo-remainder sequence in the last occurring variable.

namespace {

int last_used_var(const MultiPoly& a, const MultiPoly& b) {
  int last = -1;
  auto scan = [&](const MultiPoly& p) {
    for (const auto& [e, c] : p.terms())
      for (size_t k = 0; k < e.size(); ++k)
        if (e[k] != 0) last = std::max(last, static_cast<int>(k));
  };
  scan(a);
  scan(b);
  return last;
}

// univariate view in variable v: exponent -> coefficient (with v zeroed)
std::map<int, MultiPoly> uni_coeffs(const MultiPoly& p, int v) {
  std::map<int, MultiPoly> out;
  for (const auto& [e, c] : p.terms()) {
    Expvec rest = e;
    int k = rest[static_cast<size_t>(v)];
    rest[static_cast<size_t>(v)] = 0;
    auto [it, inserted] = out.try_emplace(k, MultiPoly(p.vars(), p.order()));
    it->second.add_term(rest, c);
  }
  for (auto it = out.begin(); it != out.end();) {
    if (it->second.is_zero())
      it = out.erase(it);
    else
      ++it;
  }
  return out;
}

MultiPoly uni_assemble(const std::map<int, MultiPoly>& coeffs, int v,
                       const std::vector<std::string>& vars, TermOrder order) {
  MultiPoly acc(vars, order);
  Expvec mono(vars.size(), 0);
  for (const auto& [k, c] : coeffs) {
    mono[static_cast<size_t>(v)] = k;
    acc = acc + c.mul_monomial(mono, 1);
  }
  return acc;
}

int uni_deg(const std::map<int, MultiPoly>& c) { return c.empty() ? -1 : c.rbegin()->first; }

MultiPoly gcd_impl(const MultiPoly& a, const MultiPoly& b);

MultiPoly content_of(const std::map<int, MultiPoly>& coeffs) {
  MultiPoly g;
  bool started = false;
  for (const auto& [k, c] : coeffs) {
    if (!started) {
      g = c;
      started = true;
    } else {
      g = gcd_impl(g, c);
    }
    if (g.is_constant() && !g.is_zero()) break;
  }
  return g;
}

// pseudo-remainder of A by B in variable v (both nonzero, degA >= degB)
MultiPoly pseudo_rem(MultiPoly A, const MultiPoly& B, int v) {
  auto cb = uni_coeffs(B, v);
  int db = uni_deg(cb);
  const MultiPoly lb = cb.rbegin()->second;
  while (true) {
    auto ca = uni_coeffs(A, v);
    int da = uni_deg(ca);
    if (da < db || da < 0) return A;
    const MultiPoly la = ca.rbegin()->second;
    // A <- lb*A - la * x^(da-db) * B
    Expvec shift(A.vars().size(), 0);
    shift[static_cast<size_t>(v)] = da - db;
    A = A * lb - (B.mul_monomial(shift, 1)) * la;
  }
}

MultiPoly gcd_impl(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.is_constant() || b.is_constant())
    return MultiPoly::constant(1, a.vars(), a.order());
  int v = last_used_var(a, b);
  if (v < 0) return MultiPoly::constant(1, a.vars(), a.order());

  auto ca = uni_coeffs(a, v);
  auto cb = uni_coeffs(b, v);
  if (uni_deg(ca) == 0 || uni_deg(cb) == 0) {
    // v does not actually occur in one of them: gcd divides its content
    MultiPoly ga = uni_deg(ca) == 0 ? a : content_of(ca);
    MultiPoly gb = uni_deg(cb) == 0 ? b : content_of(cb);
    return gcd_impl(ga, gb);
  }

  MultiPoly cont_a = content_of(ca);
  MultiPoly cont_b = content_of(cb);
  MultiPoly A = a.div_exact(cont_a);
  MultiPoly B = b.div_exact(cont_b);
  MultiPoly cont_g = gcd_impl(cont_a, cont_b);

  // primitive PRS
  if (uni_deg(uni_coeffs(A, v)) < uni_deg(uni_coeffs(B, v))) std::swap(A, B);
  while (!B.is_zero()) {
    MultiPoly R = pseudo_rem(A, B, v);
    A = B;
    if (R.is_zero()) {
      B = R;
    } else {
      auto cr = uni_coeffs(R, v);
      if (uni_deg(cr) == 0) {
        // gcd in v is trivial
        return cont_g;
      }
      B = R.div_exact(content_of(cr));
    }
  }
  return cont_g * A;
}

}  // namespace

MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b) {
  assert(a.vars() == b.vars());
  MultiPoly g = gcd_impl(a, b);
  return g.is_zero() ? g : g.monic();
}

MultiPoly poly_lcm(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  if (a.is_zero() || b.is_zero()) return MultiPoly::zero(a.vars(), a.order());
  MultiPoly g = poly_gcd(a, b);
  return a.div_exact(g) * b;
}

MultiPoly poly_det(std::vector<std::vector<MultiPoly>> m, const std::vector<std::string>& vars,
                   TermOrder order) {
  size_t s = m.size();
  if (s == 0) return MultiPoly::constant(1, vars, order);
  MultiPoly prev = MultiPoly::constant(1, vars, order);
  int sign = 1;
  for (size_t r = 0; r + 1 < s; ++r) {
    size_t pivot = r;
    while (pivot < s && m[pivot][r].is_zero()) ++pivot;
    if (pivot == s) return MultiPoly::zero(vars, order);
    if (pivot != r) {
      std::swap(m[pivot], m[r]);
      sign = -sign;
    }
    for (size_t i = r + 1; i < s; ++i) {
      for (size_t j = r + 1; j < s; ++j) {
        MultiPoly t = m[i][j] * m[r][r] - m[i][r] * m[r][j];
        m[i][j] = t.div_exact(prev);
      }
      m[i][r] = MultiPoly::zero(vars, order);
    }
    prev = m[r][r];
  }
  MultiPoly det = m[s - 1][s - 1];
  return sign < 0 ? -det : det;
}

}  // namespace fol
