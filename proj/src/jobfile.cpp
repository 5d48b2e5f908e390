#include "foliation/jobfile.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace fol {

namespace {

struct JobValue {
  bool is_list = false;
  std::string scalar;
  std::vector<JobValue> list;
};

struct JobParser {
  const std::string& s;
  size_t pos = 0;

  explicit JobParser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size()) {
      char c = s[pos];
      if (c == '#') {
        while (pos < s.size() && s[pos] != '\n') ++pos;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos;
      } else {
        break;
      }
    }
  }

  [[noreturn]] void fail(const std::string& msg) {
    size_t line = 1;
    for (size_t i = 0; i < pos && i < s.size(); ++i)
      if (s[i] == '\n') ++line;
    throw std::invalid_argument("job file, line " + std::to_string(line) + ": " + msg);
  }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  std::string ident() {
    skip_ws();
    std::string out;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_' || s[pos] == '-'))
      out += s[pos++];
    if (out.empty()) fail("expected an identifier");
    return out;
  }

  // raw expression text up to ';', ',', ']' or '}' at paren depth 0
  std::string raw_value() {
    skip_ws();
    std::string out;
    int depth = 0;
    while (pos < s.size()) {
      char c = s[pos];
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (depth == 0 && (c == ';' || c == ',' || c == ']' || c == '}')) break;
      if (c == '#' ) {
        while (pos < s.size() && s[pos] != '\n') ++pos;
        continue;
      }
      out += c;
      ++pos;
    }
    while (!out.empty() && std::isspace(static_cast<unsigned char>(out.back()))) out.pop_back();
    return out;
  }

  JobValue value() {
    skip_ws();
    JobValue v;
    if (eat('[')) {
      v.is_list = true;
      skip_ws();
      if (eat(']')) return v;
      while (true) {
        v.list.push_back(value());
        if (eat(',')) continue;
        if (eat(']')) break;
        fail("expected ',' or ']' in list");
      }
      return v;
    }
    v.scalar = raw_value();
    if (v.scalar.empty()) fail("expected a value");
    return v;
  }
};

std::vector<std::string> scalar_list(const JobValue& v, const std::string& what) {
  if (!v.is_list) throw std::invalid_argument("job file: " + what + " must be a list");
  std::vector<std::string> out;
  for (const auto& e : v.list) {
    if (e.is_list) throw std::invalid_argument("job file: " + what + " must be a flat list");
    out.push_back(e.scalar);
  }
  return out;
}

}  // namespace

JobFile parse_job_file(const std::string& text) {
  JobParser p(text);
  JobFile job;
  while (true) {
    p.skip_ws();
    if (p.pos >= p.s.size()) break;
    std::string key = p.ident();
    if (key == "chart" || key == "family" || key == "form") {
      if (!p.eat('{')) p.fail("expected '{' after '" + key + "'");
      while (!p.eat('}')) {
        std::string sub = p.ident();
        if (!p.eat(':')) p.fail("expected ':' after '" + sub + "'");
        JobValue v = p.value();
        if (!p.eat(';')) p.fail("expected ';' after the value of '" + sub + "'");
        if (key == "chart") {
          job.has_chart = true;
          if (sub == "vars")
            job.chart_vars = scalar_list(v, "chart.vars");
          else if (sub == "ideal")
            job.chart_ideal = scalar_list(v, "chart.ideal");
          else if (sub == "invert")
            job.chart_invert = scalar_list(v, "chart.invert");
          else
            p.fail("unknown chart entry '" + sub + "'");
        } else if (key == "family") {
          job.has_family = true;
          if (sub == "f")
            job.family_f = v.scalar;
          else if (sub == "x")
            job.family_x = v.scalar;
          else if (sub == "base")
            job.family_base = scalar_list(v, "family.base");
          else
            p.fail("unknown family entry '" + sub + "'");
        } else {
          job.has_form = true;
          if (sub == "numerator")
            job.form_numerator = v.scalar;
          else if (sub == "pole")
            job.form_pole = std::stoi(v.scalar);
          else
            p.fail("unknown form entry '" + sub + "'");
        }
      }
    } else {
      if (!p.eat(':')) p.fail("expected ':' after '" + key + "'");
      JobValue v = p.value();
      if (!p.eat(';')) p.fail("expected ';' after the value of '" + key + "'");
      if (key == "fields") {
        job.has_fields = true;
        if (!v.is_list) p.fail("fields must be a list of lists");
        for (const auto& row : v.list) job.fields.push_back(scalar_list(row, "fields row"));
      } else if (key == "variety") {
        job.has_variety = true;
        job.variety = scalar_list(v, "variety");
      } else if (key == "params") {
        job.params = scalar_list(v, "params");
      } else {
        p.fail("unknown top-level entry '" + key + "'");
      }
    }
  }
  return job;
}

JobFile load_job_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open job file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return parse_job_file(os.str());
}

AffineChart job_chart(const JobFile& job) {
  if (!job.has_chart || job.chart_vars.empty())
    throw std::invalid_argument("job file: missing chart block with vars");
  TermOrder order = TermOrder::grevlex();
  std::vector<MultiPoly> ideal, invert;
  for (const auto& t : job.chart_ideal) ideal.push_back(parse_poly(t, job.chart_vars, order));
  for (const auto& t : job.chart_invert) invert.push_back(parse_poly(t, job.chart_vars, order));
  return AffineChart(job.chart_vars, std::move(ideal), std::move(invert));
}

Foliation job_foliation(const JobFile& job) {
  AffineChart chart = job_chart(job);
  if (!job.has_fields || job.fields.empty())
    throw std::invalid_argument("job file: missing fields block");
  std::vector<VectorField> fields;
  for (const auto& row : job.fields) {
    if (row.size() != chart.vars().size())
      throw std::invalid_argument("job file: each field needs one component per chart variable");
    VectorField f;
    for (const auto& t : row) f.push_back(parse_ratfunc(t, chart.vars(), chart.order()));
    fields.push_back(std::move(f));
  }
  return Foliation(std::move(chart), std::move(fields), job.params);
}

Ideal job_variety(const JobFile& job, const AffineChart& chart) {
  if (!job.has_variety) throw std::invalid_argument("job file: missing variety block");
  std::vector<MultiPoly> gens;
  for (const auto& t : job.variety) gens.push_back(parse_poly(t, chart.vars(), chart.order()));
  return Ideal(chart.vars(), chart.order(), std::move(gens));
}

HyperellipticFamily job_family(const JobFile& job) {
  if (!job.has_family || job.family_f.empty() || job.family_base.empty())
    throw std::invalid_argument("job file: missing family block with f and base");
  std::vector<std::string> cv;
  cv.push_back(job.family_x);
  for (const auto& b : job.family_base) cv.push_back(b);
  MultiPoly f = parse_poly(job.family_f, cv);
  return HyperellipticFamily(std::move(f), job.family_x, job.family_base);
}

DeRhamForm job_form(const JobFile& job, const HyperellipticFamily& fam) {
  DeRhamForm form;
  form.numerator = parse_poly(job.has_form ? job.form_numerator : "1", fam.curve_vars(),
                              fam.order());
  form.pole_order = job.has_form ? job.form_pole : 1;
  return form;
}

}  // namespace fol
