#pragma once

#include <string>
#include <vector>

#include "signtail/dense.hpp"
#include "signtail/noise.hpp"
#include "signtail/problems.hpp"
#include "signtail/rng.hpp"

namespace signtail {

// ---- hyperparameters and state ----

enum class MsignMode { exact_svd, newton_schulz };

/**
 * Step-size, momentum, decay and batch settings shared by all six
 * optimizers. Fields a given method ignores are simply unused:
 * beta drives SignSGD / Muon / NSGD / MNSGD, (beta1, beta2, lambda) drive
 * Lion and Muonlight.
 */
struct HyperParams {
  double eta = 0.1;
  double beta = 0.0;
  double beta1 = 0.0;
  double beta2 = 0.0;
  double lambda = 0.0;
  long batch = 1;
  MsignMode msign_mode = MsignMode::exact_svd;
  int ns_iters = 5;

  void validate() const;
};

/** Momentum state for the vector methods. t counts completed steps; the
 *  first step initializes the momentum to the first batch-mean gradient
 *  (the algebraically exact m_0 := g_1 convention). */
struct VectorOptState {
  DenseVector x;
  DenseVector m;
  long t = 0;
};

/** Momentum state for the matrix methods; the accumulator starts at
 *  B_0 = 0 and, for Muon/Muonlight, is deliberately NOT damped
 *  (B_t = beta B_{t-1} + G_t). */
struct MatrixOptState {
  DenseMatrix x;
  DenseMatrix b;
  long t = 0;
};

// ---- single steps ----
// Each advances the state by one iteration given the batch-mean gradient.

/** m <- beta m + (1-beta) g (m := g on the first step); x <- x - eta sign(m). */
void signsgd_step(VectorOptState& s, const DenseVector& g, const HyperParams& hp);

/** Lookahead v <- beta1 m + (1-beta1) g decides the sign direction;
 *  m <- beta2 m + (1-beta2) g; x <- x - eta sign(v) - eta lambda x. */
void lion_step(VectorOptState& s, const DenseVector& g, const HyperParams& hp);

/** EMA momentum then l2-normalized step x <- x - eta m/||m||_2. A zero
 *  momentum skips the step and reports it via *skipped. */
void nsgd_step(VectorOptState& s, const DenseVector& g, const HyperParams& hp,
               bool* skipped = nullptr);

/** B <- beta B + G (undamped); X <- X - eta msign(B). */
void muon_step(MatrixOptState& s, const DenseMatrix& g, const HyperParams& hp);

/** B <- beta2 B + G; lookahead Bt = beta1 B + G; X <- X - eta msign(Bt)
 *  - eta lambda X. */
void muonlight_step(MatrixOptState& s, const DenseMatrix& g, const HyperParams& hp);

/** Frobenius-normalized momentum step; bit-identical to nsgd_step on the
 *  row-major flattening of the matrices. */
void mnsgd_step(MatrixOptState& s, const DenseMatrix& g, const HyperParams& hp,
                bool* skipped = nullptr);

// ---- full runs ----

enum class VectorMethod { signsgd, lion, nsgd };
enum class MatrixMethod { muon, muonlight, mnsgd };

std::string method_name(VectorMethod m);
std::string method_name(MatrixMethod m);
bool is_matrix_method(const std::string& name);
VectorMethod vector_method_from_name(const std::string& name);
MatrixMethod matrix_method_from_name(const std::string& name);

/** Per-step trajectory row. All four gradient norms are recorded for
 *  cross-comparison; for vector runs the nuclear and Frobenius columns
 *  coincide with the l2 value of the gradient (its one-column reshape). */
struct StepRow {
  long t = 0;
  double loss = 0.0;
  double grad_l1 = 0.0;
  double grad_l2 = 0.0;
  double grad_nuclear = 0.0;
  double grad_fro = 0.0;
  double eps_norm = 0.0;   // momentum estimation error, native norm
  double step_norm = 0.0;  // iterate displacement, native norm
};

/**
 * Outcome of a full optimization run. avg/last/min_native_grad summarize
 * ||grad f(x_t)|| in the optimizer's native norm (l1 for sign methods, l2
 * for NSGD, nuclear for Muon/Muonlight, Frobenius for MNSGD) over the
 * visited iterates x_1..x_T.
 */
struct RunRecord {
  std::vector<StepRow> rows;
  std::string native_norm;
  double avg_native_grad = 0.0;
  double last_native_grad = 0.0;
  double min_native_grad = 0.0;
  bool summary_defined = false;  // false for T = 0 (empty run)
  bool aborted = false;          // non-finite iterate encountered
  long abort_step = -1;
  long skipped_steps = 0;  // zero-momentum skips (NSGD / MNSGD)
  DenseVector final_x_vec;
  DenseMatrix final_x_mat;
};

/**
 * Run T steps from x1. The batch-mean gradient at each step comes from, in
 * order of precedence: the problem-intrinsic sampler (if given), the
 * synthetic noise spec (if given), else the exact gradient. A non-finite
 * loss or iterate aborts the run and records the step index.
 */
RunRecord run(VectorMethod method, const VectorProblem& problem,
              const DenseVector& x1, const HyperParams& hp, long T, RngStream& rng,
              const NoiseSpec* noise = nullptr,
              const StochasticGradFn* sampler = nullptr,
              bool record_rows = true);

RunRecord run(MatrixMethod method, const MatrixProblem& problem,
              const DenseMatrix& x1, const HyperParams& hp, long T, RngStream& rng,
              const NoiseSpec* noise = nullptr, bool record_rows = true);

/** CSV serialization: header `t,loss,grad_l1,grad_l2,grad_nuclear,grad_fro,
 *  eps_norm,step_norm`, one row per step, shortest round-trip number
 *  formatting (locale-independent, byte-stable). */
std::string run_record_csv(const RunRecord& record);

/** Shortest round-trip decimal rendering of a double (via std::to_chars). */
std::string format_double(double v);

}  // namespace signtail
