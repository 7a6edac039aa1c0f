#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace fcat {

using Cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using RMat = Eigen::MatrixXd;
using RVec = Eigen::VectorXd;

// Simple labels are interned per category / backend; the id is the position
// in the declared label order, which fixes every basis enumeration below.
using LabelId = std::uint32_t;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ShapeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Requested computation needs data the input does not carry
// (e.g. center machinery on a fusion-ring-only category).
struct CapabilityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DiagnosticError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr double kDefaultTol = 1e-9;

}  // namespace fcat
