#include "qtoda/report.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace qtoda {

std::string format_double(double x) {
  if (!std::isfinite(x)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

namespace {

// Tiny ordered JSON emitter; commas and nesting handled explicitly so the
// byte layout is fully determined by the emission order.
class JsonWriter {
 public:
  std::string str() && { return std::move(out_); }

  JsonWriter& begin_object() { return open('{'); }
  JsonWriter& end_object() { return close('}'); }
  JsonWriter& begin_array() { return open('['); }
  JsonWriter& end_array() { return close(']'); }

  JsonWriter& key(const char* name) {
    separate();
    out_ += '"';
    out_ += name;
    out_ += "\":";
    pending_value_ = true;
    return *this;
  }

  JsonWriter& value(double x) { return raw(format_double(x)); }
  JsonWriter& value(int x) { return raw(std::to_string(x)); }
  JsonWriter& value(bool x) { return raw(x ? "true" : "false"); }
  JsonWriter& value(const std::string& s) { return raw('"' + s + '"'); }

  template <typename T>
  JsonWriter& number_array(const std::vector<T>& xs) {
    begin_array();
    for (const T& x : xs) value(x);
    return end_array();
  }

 private:
  JsonWriter& open(char c) {
    separate();
    out_ += c;
    first_ = true;
    pending_value_ = false;
    return *this;
  }
  JsonWriter& close(char c) {
    out_ += c;
    first_ = false;
    return *this;
  }
  JsonWriter& raw(const std::string& s) {
    separate();
    out_ += s;
    pending_value_ = false;
    return *this;
  }
  void separate() {
    if (pending_value_) return;  // value right after a key
    if (!first_ && !out_.empty() && out_.back() != '{' && out_.back() != '[') out_ += ',';
    first_ = false;
  }

  std::string out_;
  bool first_ = true;
  bool pending_value_ = false;
};

void emit_params(JsonWriter& w, const ModelParams& p) {
  w.key("params").begin_object();
  w.key("q").value(p.q);
  w.key("p_plus").value(p.p_plus);
  w.key("q_plus").value(p.q_plus);
  w.key("p_minus").value(p.p_minus);
  w.key("q_minus").value(p.q_minus);
  w.key("alpha_plus").value(p.alpha_plus());
  w.key("beta_plus").value(p.beta_plus());
  w.key("alpha_minus").value(p.alpha_minus());
  w.key("beta_minus").value(p.beta_minus());
  w.end_object();
}

}  // namespace

std::string verification_to_json(const VerificationReport& report) {
  JsonWriter w;
  w.begin_object();
  w.key("q1").value(false);
  w.key("n").value(report.cfg.n);
  w.key("m").value(report.cfg.m);
  emit_params(w, report.params);
  w.key("solutions").begin_array();
  const EigenSystem& es = report.eigensystem;
  for (std::size_t i = 0; i < es.solutions.size(); ++i) {
    const BetheSolution& sol = es.solutions[i];
    w.begin_object();
    w.key("kappa").number_array(sol.kappa.parts());
    w.key("xi").number_array(sol.xi.xi);
    w.key("energy").value(sol.energy);
    w.key("grad_norm").value(sol.grad_norm);
    w.key("bae_residual").value(sol.bae_residual);
    w.key("hessian_min_eig").value(sol.hessian_min_eig);
    w.key("eigen_residual").value(es.eigen_residuals[i]);
    w.end_object();
  }
  w.end_array();
  w.key("spectrum_comparison").begin_object();
  w.key("max_diff").value(report.spectrum_max_diff);
  w.key("matrix_max_abs").value(report.matrix_max_abs);
  w.end_object();
  w.key("gram_max_offdiag").value(report.orthogonality.max_offdiag);
  w.key("gram_max_offdiag_distinct").value(report.orthogonality.max_offdiag_distinct);
  w.key("degenerate_pairs").value(report.orthogonality.degenerate_pairs);
  w.key("condition_number").value(es.condition_number);
  w.key("self_adjoint_residual").value(report.self_adjoint_residual);
  w.key("k_minus").value(report.kb.k_minus);
  w.key("k_plus").value(report.kb.k_plus);
  w.key("k_minus_as_printed").value(report.kb.k_minus_as_printed);
  w.key("k_plus_as_printed").value(report.kb.k_plus_as_printed);
  w.key("hessian_lower_bound").value(report.hessian_lower_bound);
  w.key("min_hessian_eig").value(report.min_hessian_eig);
  w.key("min_pairwise_xi_distance").value(report.min_pairwise_xi_distance);
  w.key("orthogonality_unconditional_regime").value(report.orthogonality_unconditional);
  w.key("checks").begin_array();
  for (const CheckResult& c : report.checks) {
    w.begin_object();
    w.key("name").value(c.name);
    w.key("passed").value(c.passed);
    w.key("value").value(c.value);
    w.key("threshold").value(c.threshold);
    w.end_object();
  }
  w.end_array();
  w.key("passed").value(report.passed);
  w.end_object();
  std::string out = std::move(w).str();
  out += '\n';
  return out;
}

std::string q1_report_to_json(const Q1Report& report) {
  JsonWriter w;
  w.begin_object();
  w.key("q1").value(true);
  w.key("n").value(report.cfg.n);
  w.key("m").value(report.cfg.m);
  emit_params(w, report.params);
  w.key("thetas").number_array(report.thetas);
  w.key("bs_residual_max").value(report.bs_residual_max);
  w.key("roots_increasing").value(report.roots_increasing);
  w.key("solutions").begin_array();
  for (const Q1Solution& sol : report.solutions) {
    w.begin_object();
    w.key("kappa").number_array(sol.kappa.parts());
    w.key("xi").number_array(sol.xi.xi);
    w.key("energy").value(sol.energy);
    w.key("grad_residual").value(sol.grad_residual);
    w.key("eigen_residual").value(sol.eigen_residual);
    w.end_object();
  }
  w.end_array();
  w.key("spectrum_comparison").begin_object();
  w.key("max_diff").value(report.spectrum_max_diff);
  w.key("matrix_max_abs").value(report.matrix_max_abs);
  w.end_object();
  w.key("gram_max_offdiag").value(report.gram_max_offdiag);
  w.key("condition_number").value(report.condition_number);
  w.key("self_adjoint_residual").value(report.self_adjoint_residual);
  w.key("multinomial_norm_rel_err").value(report.multinomial_norm_rel_err);
  w.key("m1_recurrence_residual").value(report.m1_recurrence_residual);
  w.key("passed").value(report.passed);
  w.end_object();
  std::string out = std::move(w).str();
  out += '\n';
  return out;
}

void write_solutions_csv(std::ostream& os, const std::vector<BetheSolution>& sols) {
  if (sols.empty()) return;
  const std::size_t m = sols.front().xi.xi.size();
  os << "kappa";
  for (std::size_t j = 1; j <= m; ++j) os << ",xi_" << j;
  os << ",energy,grad_norm,bae_residual,hessian_min_eig\n";
  for (const BetheSolution& sol : sols) {
    for (std::size_t j = 0; j < sol.kappa.parts().size(); ++j) {
      os << (j ? " " : "") << sol.kappa.parts()[j];
    }
    for (double x : sol.xi.xi) os << ',' << format_double(x);
    os << ',' << format_double(sol.energy) << ',' << format_double(sol.grad_norm) << ','
       << format_double(sol.bae_residual) << ',' << format_double(sol.hessian_min_eig)
       << '\n';
  }
}

void write_flow_csv(std::ostream& os, const std::vector<FlowSample>& samples) {
  if (samples.empty()) return;
  const std::size_t m = samples.front().xi.xi.size();
  os << "t";
  for (std::size_t j = 1; j <= m; ++j) os << ",xi_" << j;
  os << ",grad_norm\n";
  for (const FlowSample& s : samples) {
    os << format_double(s.t);
    for (double x : s.xi.xi) os << ',' << format_double(x);
    os << ',' << format_double(s.grad_norm) << '\n';
  }
}

}  // namespace qtoda
