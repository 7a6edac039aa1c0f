#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fusioncat/category.hpp"
#include "fusioncat/types.hpp"

namespace fcat {

// Object of a fusion ring over a backend: finitely supported multiplicity map
// keyed by canonical label names.
using RingObject = std::map<std::string, long>;

// Enumerable fusion-ring data, possibly infinite.  Labels are canonical
// strings in a fixed exhaustion order; `truncation(level)` materializes the
// labels of one truncation window.  The meaning of `level` is backend
// defined: label count for finite and chain-like backends, ball radius for
// group backends.
class IrrBackend {
 public:
  virtual ~IrrBackend() = default;

  virtual std::string name() const = 0;
  virtual bool finite() const = 0;
  virtual std::string unit() const = 0;
  virtual std::string dual(const std::string& s) const = 0;
  virtual double dim(const std::string& s) const = 0;
  // decomposition of U_s (x) U_t with multiplicities
  virtual std::vector<std::pair<std::string, long>> fuse(const std::string& s,
                                                         const std::string& t) const = 0;

  long mult(const std::string& s, const std::string& t, const std::string& r) const;

  virtual std::size_t truncation_size(long level) const = 0;
  // throws CapabilityError if the window cannot be materialized
  virtual std::vector<std::string> truncation(long level) const = 0;

  // Exact collapse of the ball-truncated action of X onto the radial
  // subspace, as a symmetric tridiagonal matrix, for backends and objects
  // where the truncated top eigenvector is radial.  Lets ball norms be
  // evaluated at radii whose label sets are far beyond materialization.
  virtual std::optional<RMat> radial_profile(const RingObject& x, long level) const {
    (void)x;
    (void)level;
    return std::nullopt;
  }

  double object_dim(const RingObject& x) const;
};

// finite backend from skeletal data (or bare rules + dimensions)
std::shared_ptr<IrrBackend> make_finite_backend(std::string name, FusionRules rules,
                                                std::vector<double> dims);

// Temperley-Lieb / SU(2)-generic chain: labels "0","1",..., generator "1" of
// dimension delta, path-graph fusion.
std::shared_ptr<IrrBackend> make_tl_backend(double delta);

// SU(2) level-k fusion ring (finite), labels "0".."k".
std::shared_ptr<IrrBackend> make_su2k_backend(int k);

// Free group on k generators (k <= 3); labels are reduced words over
// a,b,c with inverses A,B,C; unit "1"; level = ball radius.
std::shared_ptr<IrrBackend> make_free_group_backend(int k);

// Z x Z; labels "x,y"; level = max-norm ball radius.
std::shared_ptr<IrrBackend> make_zxz_backend();

}  // namespace fcat
