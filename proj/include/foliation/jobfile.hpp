#ifndef FOLIATION_JOBFILE_HPP
#define FOLIATION_JOBFILE_HPP

#include <optional>
#include <string>
#include <vector>

#include "foliation/chart.hpp"
#include "foliation/foliation.hpp"
#include "foliation/hyperelliptic.hpp"
#include "foliation/ideal.hpp"

namespace fol {

// Declarative job description.
//
//   # comment
//   chart {
//     vars: [x, y];
//     ideal: [];
//     invert: [];
//   }
//   fields: [[1, y]];
//   variety: [x*y];
//   params: [c];
//   family {
//     f: x^3 + a*x + b;
//     x: x;
//     base: [a, b];
//   }
//   form {
//     numerator: 1;
//     pole: 1;
//   }
//
// Values are polynomial / rational-function expressions in the declared
// variables; lists are bracketed and comma-separated; entries end with ';'.
struct JobFile {
  bool has_chart = false;
  std::vector<std::string> chart_vars;
  std::vector<std::string> chart_ideal;
  std::vector<std::string> chart_invert;

  bool has_fields = false;
  std::vector<std::vector<std::string>> fields;

  bool has_variety = false;
  std::vector<std::string> variety;

  std::vector<std::string> params;

  bool has_family = false;
  std::string family_f;
  std::string family_x = "x";
  std::vector<std::string> family_base;

  bool has_form = false;
  std::string form_numerator = "1";
  int form_pole = 1;
};

JobFile parse_job_file(const std::string& text);
JobFile load_job_file(const std::string& path);

// constructors from a parsed job; each validates that its blocks exist
AffineChart job_chart(const JobFile& job);
Foliation job_foliation(const JobFile& job);
Ideal job_variety(const JobFile& job, const AffineChart& chart);
HyperellipticFamily job_family(const JobFile& job);
DeRhamForm job_form(const JobFile& job, const HyperellipticFamily& fam);

}  // namespace fol

#endif
