#include "fusioncat/morphism.hpp"

#include <Eigen/SVD>
#include <sstream>

namespace fcat {

namespace {
const Mat kEmpty = Mat(0, 0);
}

Morphism::Morphism(ObjectExpr src, ObjectExpr tgt) : src_(std::move(src)), tgt_(std::move(tgt)) {}

Morphism Morphism::identity(const ObjectExpr& x) {
  Morphism f(x, x);
  for (auto& [s, n] : x.mults()) f.blocks_[s] = Mat::Identity(n, n);
  return f;
}

Morphism Morphism::unit_scalar(LabelId unit, Cplx value) {
  ObjectExpr one = ObjectExpr::simple(unit);
  Morphism f(one, one);
  f.blocks_[unit] = Mat::Constant(1, 1, value);
  return f;
}

const Mat& Morphism::block(LabelId r) const {
  auto it = blocks_.find(r);
  return it == blocks_.end() ? kEmpty : it->second;
}

Mat& Morphism::mutable_block(LabelId r) {
  auto it = blocks_.find(r);
  if (it == blocks_.end()) {
    it = blocks_.emplace(r, Mat::Zero(tgt_.mult(r), src_.mult(r))).first;
  }
  return it->second;
}

void Morphism::set_block(LabelId r, Mat m) {
  if (m.rows() != tgt_.mult(r) || m.cols() != src_.mult(r)) {
    std::ostringstream os;
    os << "block shape mismatch at label id " << r << ": got " << m.rows() << "x" << m.cols()
       << ", expected " << tgt_.mult(r) << "x" << src_.mult(r);
    throw ShapeError(os.str());
  }
  if (m.size() == 0) {
    blocks_.erase(r);
    return;
  }
  blocks_[r] = std::move(m);
}

Morphism Morphism::dagger() const {
  Morphism f(tgt_, src_);
  for (auto& [r, m] : blocks_) f.blocks_[r] = m.adjoint();
  return f;
}

Morphism Morphism::operator+(const Morphism& o) const {
  if (!shape_equals(o)) throw ShapeError("morphism sum: source/target mismatch");
  Morphism f(src_, tgt_);
  f.blocks_ = blocks_;
  for (auto& [r, m] : o.blocks_) {
    auto it = f.blocks_.find(r);
    if (it == f.blocks_.end())
      f.blocks_[r] = m;
    else
      it->second += m;
  }
  return f;
}

Morphism Morphism::operator-(const Morphism& o) const { return *this + o * Cplx(-1.0); }

Morphism Morphism::operator*(Cplx c) const {
  Morphism f(src_, tgt_);
  for (auto& [r, m] : blocks_) f.blocks_[r] = m * c;
  return f;
}

double Morphism::op_norm() const {
  double n = 0;
  for (auto& [r, m] : blocks_) {
    if (m.size() == 0) continue;
    Eigen::JacobiSVD<Mat> svd(m);
    if (svd.singularValues().size() > 0) n = std::max(n, svd.singularValues()(0));
  }
  return n;
}

double Morphism::frob_norm() const {
  double n2 = 0;
  for (auto& [r, m] : blocks_) n2 += m.squaredNorm();
  return std::sqrt(n2);
}

Cplx Morphism::unit_scalar_value(LabelId unit) const {
  if (src_.mult(unit) != 1 || tgt_.mult(unit) != 1 || src_.total() != 1 || tgt_.total() != 1)
    throw ShapeError("unit_scalar_value: not a scalar endomorphism of the unit");
  auto it = blocks_.find(unit);
  return it == blocks_.end() ? Cplx(0) : it->second(0, 0);
}

Morphism compose(const Morphism& g, const Morphism& f) {
  if (!(f.tgt() == g.src())) {
    // name the first offending label block to ease debugging
    for (auto& [r, n] : f.tgt().mults()) {
      if (g.src().mult(r) != n) {
        std::ostringstream os;
        os << "composition shape error: label id " << r << " has multiplicity " << n
           << " in the inner target but " << g.src().mult(r) << " in the outer source";
        throw ShapeError(os.str());
      }
    }
    throw ShapeError("composition shape error: inner target != outer source");
  }
  Morphism h(f.src(), g.tgt());
  for (auto& [r, gm] : g.blocks()) {
    if (!f.has_block(r)) continue;
    const Mat& fm = f.block(r);
    if (gm.size() == 0 || fm.size() == 0) continue;
    h.set_block(r, gm * fm);
  }
  return h;
}

double distance(const Morphism& a, const Morphism& b) {
  if (!a.shape_equals(b)) throw ShapeError("distance: shape mismatch");
  return (a - b).op_norm();
}

Vec vectorize_morphism(const Morphism& m) {
  long total = 0;
  for (const auto& [r, n] : m.tgt().mults()) total += n * m.src().mult(r);
  Vec v = Vec::Zero(total);
  long off = 0;
  for (const auto& [r, n] : m.tgt().mults()) {
    const long cols = m.src().mult(r);
    if (cols == 0) continue;
    if (m.has_block(r)) {
      const Mat& b = m.block(r);
      v.segment(off, b.size()) = Eigen::Map<const Vec>(b.data(), b.size());
    }
    off += n * cols;
  }
  return v;
}

Morphism morphism_from_vector(const ObjectExpr& src, const ObjectExpr& tgt, const Vec& v) {
  Morphism m(src, tgt);
  long off = 0;
  for (const auto& [r, n] : tgt.mults()) {
    const long cols = src.mult(r);
    if (cols == 0) continue;
    Mat b(n, cols);
    Eigen::Map<Vec>(b.data(), b.size()) = v.segment(off, b.size());
    m.set_block(r, std::move(b));
    off += b.size();
  }
  return m;
}

long matrix_rank(const Mat& m, double rel_tol) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Mat> svd(m);
  const auto& sv = svd.singularValues();
  long rank = 0;
  for (long i = 0; i < sv.size(); ++i)
    if (sv(i) > rel_tol * std::max(1.0, sv(0))) ++rank;
  return rank;
}

long hom_dim(const ObjectExpr& a, const ObjectExpr& b) {
  long d = 0;
  for (const auto& [r, n] : a.mults()) d += n * b.mult(r);
  return d;
}

std::vector<Morphism> hom_basis(const ObjectExpr& a, const ObjectExpr& b) {
  std::vector<Morphism> basis;
  for (const auto& [r, n] : b.mults()) {
    const long cols = a.mult(r);
    for (long j = 0; j < cols; ++j)
      for (long i = 0; i < n; ++i) {
        Morphism e(a, b);
        Mat m = Mat::Zero(n, cols);
        m(i, j) = 1.0;
        e.set_block(r, std::move(m));
        basis.push_back(std::move(e));
      }
  }
  return basis;
}

}  // namespace fcat
