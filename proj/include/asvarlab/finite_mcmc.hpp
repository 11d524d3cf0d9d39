// Exact kernel algebra on finite state spaces: construct, transform and
// spectrally analyze reversible Markov kernels, and compute asymptotic
// variances and Dirichlet forms without sampling.
#ifndef ASVARLAB_FINITE_MCMC_HPP
#define ASVARLAB_FINITE_MCMC_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace asvarlab {

// Probability vector on n labeled states.  Entries are nonnegative and sum
// to one within 1e-12; labels are distinct.
struct FiniteDist {
  std::vector<std::string> labels;
  Eigen::VectorXd probs;

  FiniteDist() = default;
  FiniteDist(std::vector<std::string> labels_, Eigen::VectorXd probs_);
  int size() const { return static_cast<int>(probs.size()); }
};

// Dense row-stochastic transition matrix on the same labeled states.
struct FiniteKernel {
  std::vector<std::string> labels;
  Eigen::MatrixXd rows;

  FiniteKernel() = default;
  FiniteKernel(std::vector<std::string> labels_, Eigen::MatrixXd rows_);
  int size() const { return static_cast<int>(rows.rows()); }
};

// Real-valued function on the same labels.
struct RealFunction {
  std::vector<std::string> labels;
  Eigen::VectorXd values;

  RealFunction() = default;
  RealFunction(std::vector<std::string> labels_, Eigen::VectorXd values_);
  int size() const { return static_cast<int>(values.size()); }
};

// Spectrum of a reversible kernel on the support of its stationary law.
// left_gap is 1 minus the most negative spectral mass over mean-zero
// functions; negativity_indicator is 0 iff the kernel is a positive
// operator.
struct SpectralInfo {
  Eigen::VectorXd eigenvalues;  // sorted descending
  double left_gap = 0.0;
  bool positive = false;
  bool aperiodic = false;
  int negativity_indicator = 0;
};

// Both sides of the ordering inequalities together with the constants used
// and per-inequality verdicts.  worst_* report the extreme Dirichlet-form
// ratios E_L(g)/E_K(g) seen over a random test-function battery.
struct OrderingReport {
  double lhs_upper = 0.0;
  double rhs_upper = 0.0;
  double lhs_lower = 0.0;
  double rhs_lower = 0.0;
  double augmented_lhs = 0.0;
  double augmented_rhs = 0.0;
  double c_lower = 0.0;
  double c_upper = 0.0;
  int n_k = 0;
  bool upper_ok = false;
  bool lower_ok = false;
  bool augmented_ok = false;
  bool hypothesis_ok = false;
  double worst_ratio_high = 0.0;
  double worst_ratio_low = 0.0;
};

// Unique stationary distribution of K, raised to the recurrent support if
// transient states exist.  Throws if multiple recurrent classes exist.
FiniteDist stationary_dist(const FiniteKernel& k);

// Entrywise detailed-balance check |mu_i K_ij - mu_j K_ji| <= tol.
bool check_reversible(const FiniteKernel& k, const FiniteDist& mu, double tol);

// (1/2) sum_ij mu_i K_ij (g_i - g_j)^2 for a mu-reversible K.  Throws when
// the flux form and <g,(1-K)g>_mu disagree, i.e. the pair is not reversible.
double dirichlet_form(const FiniteKernel& k, const FiniteDist& mu,
                      const RealFunction& g);

// Asymptotic variance of the ergodic average of f under the mu-reversible
// kernel lambda*K, restricted to the support of mu.  lambda = 1 uses the
// spectral sum over a mu-orthonormal eigenbasis; lambda < 1 the resolvent
// formula 2<fbar,(1-lambda K)^{-1} fbar>_mu - mu(fbar^2).  Both routes are
// evaluated and must agree to 1e-9.  Returns +infinity when a unit
// eigenvalue on the support carries fbar-mass.
double exact_asvar(const FiniteKernel& k, const FiniteDist& mu,
                   const RealFunction& f, double lambda = 1.0);

// Metropolis-Hastings kernel with proposal q and target nu.  Acceptance
// ratio nu(x')q_{x'}(x) / (nu(x)q_x(x')), defined as 0 when the denominator
// vanishes; the diagonal absorbs the rejection mass.
FiniteKernel build_mh(const FiniteKernel& q, const FiniteDist& nu);

// Second-stage acceptance correction of a mu-reversible K by a nonnegative
// weight w; the result is reversible for nu ~ w*mu on {w > 0}.  A move from
// w(x) = 0 is accepted with probability 1.
FiniteKernel build_da(const FiniteKernel& k, const RealFunction& w);

// Augmentation of a kernel on T by a refresh table Q (rows: T, cols: Y):
// K[(t,y),(t',y')] = Kdot[t,t'] Q[t',y'], with invariant law mudot (x) Q.
std::pair<FiniteKernel, FiniteDist> augment(const FiniteKernel& kdot,
                                            const Eigen::MatrixXd& q_table);

struct JumpChain {
  FiniteKernel kernel;  // zero diagonal
  FiniteDist dist;      // proportional to alpha * mu
  RealFunction alpha;   // per-state move probability K(x, complement of x)
};

// Jump-chain transform: renormalize off-diagonal rows by alpha and tilt the
// stationary law by alpha.  Throws if any state has alpha = 0.
JumpChain jump_transform(const FiniteKernel& k, const FiniteDist& mu);

// Eigenvalues and positivity of the symmetrized kernel on the mu-support.
SpectralInfo spectral_info(const FiniteKernel& k, const FiniteDist& mu);

// Evaluates both ordering inequalities between the mu-reversible K (run on
// the reweighted function w*phi) and the nu-reversible L (run on phi), at
// constants c_lower/c_upper (defaulting to min/max of w over the mu-support,
// or of the T-marginal weight when marginal_split = (nT, nY) is given), plus
// the augmented-kernel bound with the (1 + 2 N_K) variance penalty.  Also
// probes the Dirichlet-form hypothesis on a battery of random functions.
OrderingReport peskun_check(const FiniteKernel& k, const FiniteKernel& l,
                            const FiniteDist& mu, const FiniteDist& nu,
                            const RealFunction& phi,
                            std::optional<double> c_lower = std::nullopt,
                            std::optional<double> c_upper = std::nullopt,
                            std::optional<std::pair<int, int>> marginal_split =
                                std::nullopt);

// Plain variance var_mu(f) = mu(f^2) - mu(f)^2.
double variance(const FiniteDist& mu, const RealFunction& f);

}  // namespace asvarlab

#endif
