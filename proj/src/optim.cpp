#include "signtail/optim.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

#include "signtail/matfun.hpp"
#include "signtail/norms.hpp"

namespace signtail {

void HyperParams::validate() const {
  if (!(eta > 0.0)) throw std::invalid_argument("HyperParams: eta must be > 0");
  if (!(beta >= 0.0 && beta <= 1.0))
    throw std::invalid_argument("HyperParams: beta must be in [0, 1]");
  if (!(beta1 >= 0.0 && beta1 <= 1.0))
    throw std::invalid_argument("HyperParams: beta1 must be in [0, 1]");
  if (!(beta2 >= 0.0 && beta2 <= 1.0))
    throw std::invalid_argument("HyperParams: beta2 must be in [0, 1]");
  if (!(lambda >= 0.0)) throw std::invalid_argument("HyperParams: lambda must be >= 0");
  if (batch < 1) throw std::invalid_argument("HyperParams: batch must be >= 1");
  if (ns_iters < 0) throw std::invalid_argument("HyperParams: ns_iters must be >= 0");
}

namespace {

// ---- shared flat kernels ----
// Vector and matrix variants of the same method route through these so the
// documented reductions (MNSGD == NSGD on flattenings, Lion == SignSGD at
// beta1 == beta2) hold bit-for-bit, not just approximately.

void ema_flat(double* m, const double* g, std::size_t n, double keep, double mix) {
  for (std::size_t i = 0; i < n; ++i) m[i] = keep * m[i] + mix * g[i];
}

double l2_flat(const double* x, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[i] * x[i];
  return std::sqrt(s);
}

/** EMA then l2-normalized step over flat arrays (NSGD and MNSGD). */
void nsgd_flat(double* x, double* m, const double* g, std::size_t n, long& t,
               double eta, double beta, bool* skipped) {
  if (t == 0) {
    for (std::size_t i = 0; i < n; ++i) m[i] = g[i];
  } else {
    ema_flat(m, g, n, beta, 1.0 - beta);
  }
  const double nrm = l2_flat(m, n);
  bool skip = (nrm == 0.0);
  if (!skip) {
    for (std::size_t i = 0; i < n; ++i) x[i] -= eta * (m[i] / nrm);
  }
  if (skipped) *skipped = skip;
  ++t;
}

double sgn(double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }

bool all_zero(const DenseMatrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m.data()[i] != 0.0) return false;
  return true;
}

DenseMatrix orthogonalize(const DenseMatrix& b, const HyperParams& hp) {
  if (all_zero(b)) return DenseMatrix::zeros(b.rows(), b.cols());
  if (hp.msign_mode == MsignMode::exact_svd) return msign(b);
  return newton_schulz(b, hp.ns_iters);
}

}  // namespace

// ---- single steps ----

void signsgd_step(VectorOptState& s, const DenseVector& g, const HyperParams& hp) {
  require_same_size(s.x, g, "signsgd_step");
  if (s.m.size() != s.x.size()) s.m = DenseVector::zeros(s.x.size());
  if (s.t == 0) {
    s.m = g;  // m_0 := g_1 makes the first EMA output equal g_1 exactly
  } else {
    ema_flat(s.m.data(), g.data(), g.size(), hp.beta, 1.0 - hp.beta);
  }
  for (std::size_t i = 0; i < s.x.size(); ++i) s.x[i] -= hp.eta * sgn(s.m[i]);
  ++s.t;
}

void lion_step(VectorOptState& s, const DenseVector& g, const HyperParams& hp) {
  require_same_size(s.x, g, "lion_step");
  if (s.m.size() != s.x.size()) s.m = DenseVector::zeros(s.x.size());
  DenseVector v(s.x.size());
  if (s.t == 0) {
    // With m_0 := g_1 both blends collapse to g_1 identically (any beta),
    // so the first step uses the exact reduction rather than re-deriving it
    // in floating point.
    s.m = g;
    v = g;
  } else {
    for (std::size_t i = 0; i < v.size(); ++i)
      v[i] = hp.beta1 * s.m[i] + (1.0 - hp.beta1) * g[i];
    ema_flat(s.m.data(), g.data(), g.size(), hp.beta2, 1.0 - hp.beta2);
  }
  for (std::size_t i = 0; i < s.x.size(); ++i)
    s.x[i] = s.x[i] - hp.eta * sgn(v[i]) - hp.eta * hp.lambda * s.x[i];
  ++s.t;
}

void nsgd_step(VectorOptState& s, const DenseVector& g, const HyperParams& hp,
               bool* skipped) {
  require_same_size(s.x, g, "nsgd_step");
  if (s.m.size() != s.x.size()) s.m = DenseVector::zeros(s.x.size());
  nsgd_flat(s.x.data(), s.m.data(), g.data(), g.size(), s.t, hp.eta, hp.beta, skipped);
}

void muon_step(MatrixOptState& s, const DenseMatrix& g, const HyperParams& hp) {
  require_same_shape(s.x, g, "muon_step");
  if (s.b.rows() != s.x.rows() || s.b.cols() != s.x.cols())
    s.b = DenseMatrix::zeros(s.x.rows(), s.x.cols());
  // Undamped accumulator: B <- beta B + G (B starts at zero).
  for (std::size_t i = 0; i < s.b.size(); ++i)
    s.b.data()[i] = hp.beta * s.b.data()[i] + g.data()[i];
  const DenseMatrix o = orthogonalize(s.b, hp);
  for (std::size_t i = 0; i < s.x.size(); ++i)
    s.x.data()[i] -= hp.eta * o.data()[i];
  ++s.t;
}

void muonlight_step(MatrixOptState& s, const DenseMatrix& g, const HyperParams& hp) {
  require_same_shape(s.x, g, "muonlight_step");
  if (s.b.rows() != s.x.rows() || s.b.cols() != s.x.cols())
    s.b = DenseMatrix::zeros(s.x.rows(), s.x.cols());
  for (std::size_t i = 0; i < s.b.size(); ++i)
    s.b.data()[i] = hp.beta2 * s.b.data()[i] + g.data()[i];
  DenseMatrix lookahead(s.x.rows(), s.x.cols());
  for (std::size_t i = 0; i < lookahead.size(); ++i)
    lookahead.data()[i] = hp.beta1 * s.b.data()[i] + g.data()[i];
  const DenseMatrix o = orthogonalize(lookahead, hp);
  for (std::size_t i = 0; i < s.x.size(); ++i)
    s.x.data()[i] = s.x.data()[i] - hp.eta * o.data()[i] -
                    hp.eta * hp.lambda * s.x.data()[i];
  ++s.t;
}

void mnsgd_step(MatrixOptState& s, const DenseMatrix& g, const HyperParams& hp,
                bool* skipped) {
  require_same_shape(s.x, g, "mnsgd_step");
  if (s.b.rows() != s.x.rows() || s.b.cols() != s.x.cols())
    s.b = DenseMatrix::zeros(s.x.rows(), s.x.cols());
  nsgd_flat(s.x.data(), s.b.data(), g.data(), g.size(), s.t, hp.eta, hp.beta, skipped);
}

// ---- names ----

std::string method_name(VectorMethod m) {
  switch (m) {
    case VectorMethod::signsgd: return "signsgd";
    case VectorMethod::lion: return "lion";
    case VectorMethod::nsgd: return "nsgd";
  }
  throw std::logic_error("method_name: unreachable");
}

std::string method_name(MatrixMethod m) {
  switch (m) {
    case MatrixMethod::muon: return "muon";
    case MatrixMethod::muonlight: return "muonlight";
    case MatrixMethod::mnsgd: return "mnsgd";
  }
  throw std::logic_error("method_name: unreachable");
}

bool is_matrix_method(const std::string& name) {
  return name == "muon" || name == "muonlight" || name == "mnsgd";
}

VectorMethod vector_method_from_name(const std::string& name) {
  if (name == "signsgd") return VectorMethod::signsgd;
  if (name == "lion") return VectorMethod::lion;
  if (name == "nsgd") return VectorMethod::nsgd;
  throw std::invalid_argument("unknown vector optimizer '" + name + "'");
}

MatrixMethod matrix_method_from_name(const std::string& name) {
  if (name == "muon") return MatrixMethod::muon;
  if (name == "muonlight") return MatrixMethod::muonlight;
  if (name == "mnsgd") return MatrixMethod::mnsgd;
  throw std::invalid_argument("unknown matrix optimizer '" + name + "'");
}

// ---- full runs ----

namespace {

struct SummaryAccum {
  double sum = 0.0;
  double last = 0.0;
  double min = 0.0;
  long count = 0;
  void add(double v) {
    sum += v;
    last = v;
    min = (count == 0) ? v : std::min(min, v);
    ++count;
  }
  void finish(RunRecord& r) const {
    if (count > 0) {
      r.avg_native_grad = sum / static_cast<double>(count);
      r.last_native_grad = last;
      r.min_native_grad = min;
      r.summary_defined = true;
    }
  }
};

}  // namespace

RunRecord run(VectorMethod method, const VectorProblem& problem,
              const DenseVector& x1, const HyperParams& hp, long T, RngStream& rng,
              const NoiseSpec* noise, const StochasticGradFn* sampler,
              bool record_rows) {
  hp.validate();
  if (x1.size() != problem.dim)
    throw std::invalid_argument("run: x1 dimension does not match problem");

  RunRecord rec;
  rec.native_norm = (method == VectorMethod::nsgd) ? "l2" : "l1";
  SummaryAccum acc;

  VectorOptState st;
  st.x = x1;
  st.m = DenseVector::zeros(problem.dim);

  for (long t = 1; t <= T; ++t) {
    const double loss = problem.eval_f(st.x);
    const DenseVector grad = problem.eval_grad(st.x);
    if (!std::isfinite(loss) || !grad.all_finite() || !st.x.all_finite()) {
      rec.aborted = true;
      rec.abort_step = t;
      break;
    }

    DenseVector gbar;
    if (sampler != nullptr) {
      std::vector<DenseVector> draws;
      draws.reserve(static_cast<std::size_t>(hp.batch));
      for (long b = 0; b < hp.batch; ++b) draws.push_back((*sampler)(st.x, rng));
      gbar = (hp.batch == 1) ? std::move(draws[0]) : batch_mean(draws);
    } else if (noise != nullptr) {
      std::vector<DenseVector> draws = noisy_gradient_batch(grad, *noise, hp.batch, rng);
      gbar = (hp.batch == 1) ? std::move(draws[0]) : batch_mean(draws);
    } else {
      gbar = grad;
    }

    const DenseVector x_before = st.x;
    bool skipped = false;
    switch (method) {
      case VectorMethod::signsgd: signsgd_step(st, gbar, hp); break;
      case VectorMethod::lion: lion_step(st, gbar, hp); break;
      case VectorMethod::nsgd: nsgd_step(st, gbar, hp, &skipped); break;
    }
    if (skipped) ++rec.skipped_steps;

    const bool l1_native = (method != VectorMethod::nsgd);
    const double native_grad = l1_native ? norm_l1(grad) : norm_l2(grad);
    acc.add(native_grad);

    if (record_rows) {
      StepRow row;
      row.t = t;
      row.loss = loss;
      row.grad_l1 = norm_l1(grad);
      row.grad_l2 = norm_l2(grad);
      row.grad_nuclear = row.grad_l2;  // one-column reshape
      row.grad_fro = row.grad_l2;
      const DenseVector eps = st.m - grad;
      row.eps_norm = l1_native ? norm_l1(eps) : norm_l2(eps);
      const DenseVector dx = st.x - x_before;
      row.step_norm = l1_native ? norm_linf(dx) : norm_l2(dx);
      rec.rows.push_back(row);
    }
  }

  acc.finish(rec);
  rec.final_x_vec = st.x;
  return rec;
}

RunRecord run(MatrixMethod method, const MatrixProblem& problem,
              const DenseMatrix& x1, const HyperParams& hp, long T, RngStream& rng,
              const NoiseSpec* noise, bool record_rows) {
  hp.validate();
  if (x1.rows() != problem.rows || x1.cols() != problem.cols)
    throw std::invalid_argument("run: x1 shape does not match problem");

  RunRecord rec;
  rec.native_norm = (method == MatrixMethod::mnsgd) ? "frobenius" : "nuclear";
  SummaryAccum acc;

  MatrixOptState st;
  st.x = x1;
  st.b = DenseMatrix::zeros(problem.rows, problem.cols);

  for (long t = 1; t <= T; ++t) {
    const double loss = problem.eval_f(st.x);
    const DenseMatrix grad = problem.eval_grad(st.x);
    if (!std::isfinite(loss) || !grad.all_finite() || !st.x.all_finite()) {
      rec.aborted = true;
      rec.abort_step = t;
      break;
    }

    DenseMatrix gbar;
    if (noise != nullptr) {
      std::vector<DenseMatrix> draws =
          noisy_gradient_batch_matrix(grad, *noise, hp.batch, rng);
      gbar = (hp.batch == 1) ? std::move(draws[0]) : batch_mean(draws);
    } else {
      gbar = grad;
    }

    const DenseMatrix x_before = st.x;
    bool skipped = false;
    switch (method) {
      case MatrixMethod::muon: muon_step(st, gbar, hp); break;
      case MatrixMethod::muonlight: muonlight_step(st, gbar, hp); break;
      case MatrixMethod::mnsgd: mnsgd_step(st, gbar, hp, &skipped); break;
    }
    if (skipped) ++rec.skipped_steps;

    const bool fro_native = (method == MatrixMethod::mnsgd);
    const double native_grad = fro_native ? norm_frobenius(grad) : norm_nuclear(grad);
    acc.add(native_grad);

    if (record_rows) {
      StepRow row;
      row.t = t;
      row.loss = loss;
      row.grad_l1 = norm_entrywise_l1(grad);
      row.grad_l2 = norm_frobenius(grad);
      row.grad_nuclear = fro_native ? native_grad0(grad) : native_grad;
      row.grad_fro = row.grad_l2;
      // Momentum estimation error: compare the scale-matched momentum
      // average with the true gradient. For the undamped accumulators this
      // divides out the geometric weight sum.
      DenseMatrix mhat = st.b;
      if (method == MatrixMethod::muon) {
        const double w = geometric_weight(hp.beta, st.t);
        for (std::size_t i = 0; i < mhat.size(); ++i) mhat.data()[i] /= w;
      } else if (method == MatrixMethod::muonlight) {
        const double w = geometric_weight(hp.beta2, st.t);
        for (std::size_t i = 0; i < mhat.size(); ++i) mhat.data()[i] /= w;
      }
      const DenseMatrix eps = mhat - grad;
      row.eps_norm = fro_native ? norm_frobenius(eps) : norm_nuclear(eps);
      const DenseMatrix dx = st.x - x_before;
      row.step_norm = fro_native ? norm_frobenius(dx) : norm_operator(dx);
      rec.rows.push_back(row);
    }
  }

  acc.finish(rec);
  rec.final_x_mat = st.x;
  return rec;
}

// ---- serialization ----

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string run_record_csv(const RunRecord& record) {
  std::string out = "t,loss,grad_l1,grad_l2,grad_nuclear,grad_fro,eps_norm,step_norm\n";
  for (const StepRow& r : record.rows) {
    out += std::to_string(r.t);
    out += ',';
    out += format_double(r.loss);
    out += ',';
    out += format_double(r.grad_l1);
    out += ',';
    out += format_double(r.grad_l2);
    out += ',';
    out += format_double(r.grad_nuclear);
    out += ',';
    out += format_double(r.grad_fro);
    out += ',';
    out += format_double(r.eps_norm);
    out += ',';
    out += format_double(r.step_norm);
    out += '\n';
  }
  return out;
}

}  // namespace signtail
