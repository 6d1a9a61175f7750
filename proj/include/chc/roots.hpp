#pragma once

// Root data of u(p,q), strongly orthogonal root sets, Cartan subgroup shapes
// and Weyl denominators on the compact Cartan.

#include "chc/algebra.hpp"

#include <utility>
#include <vector>

namespace chc {

/// Points with weyl_D_sqrt at or below this are treated as singular.
inline constexpr double kRegularityTolerance = 1e-9;

/// The positive root e_i - e_j (zero-based i < j).
struct Root {
  int i = 0;
  int j = 0;
  bool compact = false;
};

class RootSystem {
 public:
  std::size_t n() const { return n_; }
  std::size_t p() const { return p_; }
  std::size_t q() const { return q_; }
  const std::vector<Root>& positive_roots() const { return roots_; }
  const Weight& rho() const { return rho_; }
  const Weight& rho_compact() const { return rho_compact_; }

 private:
  friend RootSystem build_root_system(int p, int q);
  std::size_t n_ = 0, p_ = 0, q_ = 0;
  std::vector<Root> roots_;
  Weight rho_;
  Weight rho_compact_;
};

/// Throws std::invalid_argument if p or q is negative or p + q == 0.
RootSystem build_root_system(int p, int q);

/// S_i = {e_t - e_{offset+t} : t = 1..i}; pairs are zero-based (t-1, offset+t-1).
struct StronglyOrthogonalSet {
  int index = 0;
  std::vector<std::pair<int, int>> pairs;
};

/// The nested sets S_0 = {} < S_1 < ... < S_min(p,q) for U(p,q), p <= q.
std::vector<StronglyOrthogonalSet> strongly_orthogonal_sets(int p, int q);

struct CartanShape {
  int compact_circles = 0;
  int hyperbolic_pairs = 0;
  bool operator==(const CartanShape&) const = default;
};

CartanShape cartan_shape(const StronglyOrthogonalSet& s, int n);

/// prod_{a>0} (e^{i a(theta)/2} - e^{-i a(theta)/2}).
Complex delta_psi(const RootSystem& rs, const TorusPoint& theta);
/// Same product over the negative roots.
Complex delta_phi(const RootSystem& rs, const TorusPoint& theta);
/// prod_{a>0} |1 - e^{i a(theta)}|^2.
double abs_delta_squared(const RootSystem& rs, const TorusPoint& theta);
/// |D|^{1/2} = prod_{a>0} |1 - e^{i a(theta)}|.
double weyl_D_sqrt(const RootSystem& rs, const TorusPoint& theta);
bool is_regular(const RootSystem& rs, const TorusPoint& theta,
                double tolerance = kRegularityTolerance);

/// Coordinates of h' in H'_{S_k}: e^{i theta_t - X_t} at t = 1..k, the circle
/// values e^{i phi_j} in the middle, e^{i theta_t + X_t} at r+s-k+t.
struct EtaCoordinates {
  std::vector<double> theta;
  std::vector<double> log_radius;
  std::vector<double> circle_angles;
};

/// The positive roots spanning eta'(S_k) in U(r,s), zero-based.
std::vector<std::pair<int, int>> eta_roots(int k, int r, int s);

/// prod over eta_roots of (1 - h^{-alpha}) without any reality check.
Complex eta_determinant(int k, int r, int s, const EtaCoordinates& coords);

/// The determinant above as a positive real. Throws std::domain_error when
/// the point is singular and std::logic_error if the value is not real positive.
double eta_positivity(int k, int r, int s, const EtaCoordinates& coords);

}  // namespace chc
