// foliation-loci: exact equation generation for leafwise unlikely
// intersection loci, Gauss-Manin connections, Picard-Fuchs operators, and
// symplectic period data for hyperelliptic families. One job per
// invocation; JSON on stdout, diagnostics on stderr.

#include <cstdlib>
#include <set>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "foliation/errors.hpp"
#include "foliation/jobfile.hpp"
#include "foliation/multiplicity.hpp"
#include "foliation/pairing.hpp"
#include "foliation/periods.hpp"
#include "foliation/sigma.hpp"

using json = nlohmann::ordered_json;
using namespace fol;

namespace {

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

OrderBoundPolicy mu_policy(const std::string& mu) {
  if (mu == "heuristic") return OrderBoundPolicy::heuristic();
  return OrderBoundPolicy::fixed(std::stoi(mu));
}

json rf_matrix_json(const RfMatrix& m) {
  json rows = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& e : row) r.push_back(e.str());
    rows.push_back(r);
  }
  return rows;
}

json cmatrix_json(const CMatrix& m) {
  json rows = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& e : row)
      r.push_back(json::array({static_cast<double>(e.real()), static_cast<double>(e.imag())}));
    rows.push_back(r);
  }
  return rows;
}

json sigma_json(const SigmaLocusResult& res) {
  json out;
  out["k"] = res.k;
  out["mu"] = res.mu;
  out["rigorous"] = res.rigorous;
  out["subsets_used"] = res.subsets_used;
  out["max_degree"] = res.max_degree;
  out["sum_degree"] = res.sum_degree;
  out["degree_bound"] = res.degree_bound;
  json gens = json::array();
  for (const auto& g : res.generators.gens()) gens.push_back(g.str());
  out["generators"] = gens;
  out["provenance"] = res.provenance;
  return out;
}

// the job must carry exactly the blocks the subcommand consumes
void validate_blocks(const JobFile& job, bool chart, bool fields, bool variety, bool family,
                     bool form_ok, bool params_ok) {
  auto refuse = [](const std::string& what) {
    throw std::invalid_argument("job file: unexpected block '" + what +
                                "' for this subcommand");
  };
  if (chart) {
    if (!job.has_chart) throw std::invalid_argument("job file: missing block 'chart'");
  } else if (job.has_chart) {
    refuse("chart");
  }
  if (fields) {
    if (!job.has_fields) throw std::invalid_argument("job file: missing block 'fields'");
  } else if (job.has_fields) {
    refuse("fields");
  }
  if (variety) {
    if (!job.has_variety) throw std::invalid_argument("job file: missing block 'variety'");
  } else if (job.has_variety) {
    refuse("variety");
  }
  if (family) {
    if (!job.has_family) throw std::invalid_argument("job file: missing block 'family'");
  } else if (job.has_family) {
    refuse("family");
  }
  if (!form_ok && job.has_form) refuse("form");
  if (!params_ok && !job.params.empty()) refuse("params");
}

int run(int argc, char** argv) {
  CLI::App app{"exact foliation-intersection loci and hyperelliptic period pipelines"};
  app.require_subcommand(1);

  std::string job_path;
  std::string mu = "heuristic";
  int k = 1;
  long subset_cap = 2000;
  long minor_cap = 20000;
  std::string lambda = "1/2";
  int prec = 10;
  int order = 8;

  auto add_job = [&](CLI::App* cmd) {
    cmd->add_option("job", job_path, "job file")->required();
  };

  CLI::App* c_check = app.add_subcommand("check-foliation", "verify commutation and tangency");
  add_job(c_check);

  CLI::App* c_mult = app.add_subcommand("mult-ops", "multiplicity operators for the variety tuple");
  add_job(c_mult);
  c_mult->add_option("--k", k, "operator order");
  c_mult->add_option("--mu", mu, "override order: integer, or 'heuristic'");
  c_mult->add_option("--minor-cap", minor_cap, "limit on the number of emitted minors");

  CLI::App* c_sigma = app.add_subcommand("sigma", "equations for the leafwise intersection locus");
  add_job(c_sigma);
  c_sigma->add_option("--k", k, "leaf intersection dimension")->required();
  c_sigma->add_option("--mu", mu, "truncation order: integer, or 'heuristic'");
  c_sigma->add_option("--subset-cap", subset_cap, "limit on generator subsets");
  c_sigma->add_option("--minor-cap", minor_cap, "limit on emitted minors per stage");

  CLI::App* c_alocus = app.add_subcommand("a-locus", "sigma with declared parameters");
  add_job(c_alocus);
  c_alocus->add_option("--k", k, "leaf intersection dimension")->required();
  c_alocus->add_option("--mu", mu, "truncation order: integer, or 'heuristic'");
  c_alocus->add_option("--subset-cap", subset_cap, "limit on generator subsets");
  c_alocus->add_option("--minor-cap", minor_cap, "limit on emitted minors per stage");

  CLI::App* c_gm = app.add_subcommand("gauss-manin", "connection matrices for the family");
  add_job(c_gm);

  CLI::App* c_pf = app.add_subcommand("picard-fuchs", "annihilating operator of the form's class");
  add_job(c_pf);

  CLI::App* c_pair = app.add_subcommand("pairing", "residue pairing matrix");
  add_job(c_pair);

  CLI::App* c_norm = app.add_subcommand("normalize", "symplectic normalization of the basis");
  add_job(c_norm);

  CLI::App* c_per = app.add_subcommand("periods", "numeric period matrix at a base point");
  add_job(c_per);
  c_per->add_option("--lambda", lambda, "rational base point");
  c_per->add_option("--prec", prec, "target digits");

  CLI::App* c_exp = app.add_subcommand("expansion", "Laurent expansion of the form at infinity");
  add_job(c_exp);
  c_exp->add_option("--order", order, "highest exponent reported");

  // the env var caps worker threads; evaluation is sequential, so the only
  // accepted cap is >= 1
  if (const char* env = std::getenv("FOLIATION_LOCI_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v < 1) {
      std::cerr << "FOLIATION_LOCI_THREADS must be a positive integer\n";
      return 1;
    }
  }

  CLI11_PARSE(app, argc, argv);

  JobFile job = load_job_file(job_path);

  if (c_check->parsed()) {
    validate_blocks(job, true, true, false, false, false, true);
    Foliation f = job_foliation(job);
    json out;
    out["ok"] = true;
    out["leaf_dim"] = f.leaf_dim();
    out["chart_vars"] = f.chart().vars();
    out["params"] = f.params();
    emit(out);
    return 0;
  }

  if (c_mult->parsed()) {
    validate_blocks(job, true, true, true, false, false, true);
    Foliation f = job_foliation(job);
    Ideal V = job_variety(job, f.chart());
    int use_order = k;
    bool rigorous = true;
    if (c_mult->count("--mu")) {
      if (mu == "heuristic") {
        OrderBoundPolicy pol = OrderBoundPolicy::heuristic();
        int deg_p = 1;
        for (const auto& g : V.gens()) deg_p = std::max(deg_p, g.degree());
        use_order = order_bound(pol, static_cast<int>(f.leaf_dim()),
                                std::max(f.max_field_degree_num(), f.max_field_degree_den()),
                                deg_p);
        rigorous = false;
      } else {
        use_order = std::stoi(mu);
      }
    }
    std::vector<MultiPoly> P = V.gens();
    MultiplicityOperatorSet set =
        multiplicity_operators(P, f, use_order, static_cast<size_t>(minor_cap));
    json out;
    out["order"] = set.order;
    out["count"] = set.emitted.size();
    out["max_degree"] = set.max_degree;
    out["degree_bound"] = set.degree_bound;
    out["rigorous"] = rigorous;
    json cleared = json::array();
    {
      std::set<std::string> seen;
      for (const auto& factor : set.row_clearing)
        if (!factor.is_one() && seen.insert(factor.str()).second)
          cleared.push_back(factor.str());
    }
    out["cleared_factors"] = cleared;
    json gens = json::array();
    for (const auto& e : set.emitted) gens.push_back(e.str());
    out["operators"] = gens;
    emit(out);
    return 0;
  }

  if (c_sigma->parsed() || c_alocus->parsed()) {
    validate_blocks(job, true, true, true, false, false, true);
    Foliation f = job_foliation(job);
    Ideal V = job_variety(job, f.chart());
    OrderBoundPolicy policy = mu_policy(mu);
    SigmaLocusResult res =
        c_sigma->parsed()
            ? sigma_equations(V, f, k, policy, static_cast<size_t>(subset_cap),
                              static_cast<size_t>(minor_cap))
            : a_locus(V, f, k, policy, static_cast<size_t>(subset_cap),
                      static_cast<size_t>(minor_cap));
    emit(sigma_json(res));
    return 0;
  }

  if (c_gm->parsed()) {
    validate_blocks(job, false, false, false, true, false, false);
    HyperellipticFamily fam = job_family(job);
    ConnectionMatrix conn = gauss_manin_matrix(fam);
    json out;
    out["genus"] = fam.genus();
    out["base"] = fam.base_vars();
    out["discriminant"] = fam.discriminant().str();
    json omegas = json::array();
    for (const auto& m : conn.omegas) omegas.push_back(rf_matrix_json(m));
    out["omega"] = omegas;
    emit(out);
    return 0;
  }

  if (c_pf->parsed()) {
    validate_blocks(job, false, false, false, true, true, false);
    HyperellipticFamily fam = job_family(job);
    DeRhamForm form = job_form(job, fam);
    DiffOperator op = picard_fuchs(fam, form);
    json out;
    out["order"] = op.order;
    out["monic"] = true;
    json coeffs = json::array();
    for (const auto& c : op.lower) coeffs.push_back(c.str());
    out["coefficients"] = coeffs;
    out["operator"] = op.str("d");
    emit(out);
    return 0;
  }

  if (c_pair->parsed()) {
    validate_blocks(job, false, false, false, true, false, false);
    HyperellipticFamily fam = job_family(job);
    PairingMatrix pm = pairing_matrix(fam);
    json out;
    out["genus"] = fam.genus();
    out["lambda"] = rf_matrix_json(pm.lambda);
    emit(out);
    return 0;
  }

  if (c_norm->parsed()) {
    validate_blocks(job, false, false, false, true, false, false);
    HyperellipticFamily fam = job_family(job);
    PairingMatrix pm = pairing_matrix(fam);
    ConnectionMatrix conn = gauss_manin_matrix(fam);
    NormalizationResult norm = symplectic_normalize(fam, pm, conn);
    json out;
    out["base_change"] = rf_matrix_json(norm.base_change);
    json omegas = json::array();
    for (const auto& m : norm.connection.omegas) omegas.push_back(rf_matrix_json(m));
    out["omega_normalized"] = omegas;
    out["sp_identity"] = true;  // verified inside symplectic_normalize
    emit(out);
    return 0;
  }

  if (c_per->parsed()) {
    validate_blocks(job, false, false, false, true, false, false);
    HyperellipticFamily fam = job_family(job);
    PeriodMatrixNumeric pm = numeric_period_oracle(fam, parse_rat(lambda), prec);
    json out;
    out["lambda0"] = to_string(pm.lambda0);
    out["periods"] = cmatrix_json(pm.pi);
    out["periods_raw_basis"] = cmatrix_json(pm.pi_raw);
    out["error_estimate"] = static_cast<double>(pm.error_estimate);
    out["riemann_residual"] = static_cast<double>(riemann_relation_residual(pm));
    CMatrix beta = beta_blocks(pm);
    out["beta"] = cmatrix_json(beta);
    out["beta_imag_positive_definite"] = imag_positive_definite(beta);
    emit(out);
    return 0;
  }

  if (c_exp->parsed()) {
    validate_blocks(job, false, false, false, true, true, false);
    HyperellipticFamily fam = job_family(job);
    DeRhamForm form = job_form(job, fam);
    LaurentSeries series = expansion_at_infinity(form, fam, order);
    json out;
    out["low"] = series.low();
    out["order"] = order;
    json coeffs = json::array();
    for (int e = series.low(); e <= order; ++e) {
      json entry;
      entry["exponent"] = e;
      entry["coefficient"] = series.coeff(e).str();
      coeffs.push_back(entry);
    }
    out["coefficients"] = coeffs;
    out["residue"] = series.trunc() > -1 ? series.residue().str() : "0";
    emit(out);
    return 0;
  }

  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const MathError& e) {
    json out;
    out["error"] = e.name();
    out["message"] = e.what();
    std::cout << out.dump(2) << "\n";
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
