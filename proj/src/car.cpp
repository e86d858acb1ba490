// Copyright 2026 The fentropy authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fentropy/car.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

namespace fentropy::car {

Region::Region(std::initializer_list<int> m) : Region(std::vector<int>(m)) {}

Region::Region(std::vector<int> m) : modes(std::move(m)) {
  for (std::size_t k = 0; k + 1 < modes.size(); ++k) {
    if (modes[k] >= modes[k + 1]) {
      throw Error("region mode indices must be strictly increasing");
    }
  }
  if (!modes.empty() && modes.front() < 1) {
    throw Error("region mode indices are 1-based");
  }
}

bool Region::contains(int mode) const {
  return std::binary_search(modes.begin(), modes.end(), mode);
}

bool Region::disjoint_from(const Region& other) const {
  for (int m : modes)
    if (other.contains(m)) return false;
  return true;
}

Region Region::union_with(const Region& other) const {
  std::vector<int> merged;
  std::merge(modes.begin(), modes.end(), other.modes.begin(), other.modes.end(),
             std::back_inserter(merged));
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
  return Region(merged);
}

std::string Region::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t k = 0; k < modes.size(); ++k) {
    if (k) os << ',';
    os << modes[k];
  }
  os << '}';
  return os.str();
}

namespace {

Matrix lowering_2x2() { return Matrix(2, 2, {0, 1, 0, 0}); }
Matrix parity_2x2() { return Matrix(2, 2, {-1, 0, 0, 1}); }

// Tensor factor chain: op at the given 1-based slot, `fill` on the slots
// before it, identity after.
Matrix slot_chain(int n, int slot, const Matrix& op, const Matrix& fill) {
  Matrix out = Matrix::identity(1);
  for (int s = 1; s <= n; ++s) {
    if (s < slot)
      out = linalg::kron(out, fill);
    else if (s == slot)
      out = linalg::kron(out, op);
    else
      out = linalg::kron(out, Matrix::identity(2));
  }
  return out;
}

}  // namespace

FockRep::FockRep(int n_modes) : n_(n_modes) {
  if (n_ < 1 || n_ > 10) throw TooManyModes("mode count must be in [1, 10]");
  dim_ = 1 << n_;
  const Matrix a = lowering_2x2();
  const Matrix v = parity_2x2();
  annihilators_.reserve(n_);
  for (int i = 1; i <= n_; ++i) annihilators_.push_back(slot_chain(n_, i, a, v));
  grading_ = Matrix::identity(dim_);
  for (int b = 0; b < dim_; ++b) {
    const int ones = std::popcount(static_cast<unsigned>(b));
    grading_(b, b) = ((n_ - ones) % 2 == 0) ? 1.0 : -1.0;
  }
  number_ = Matrix(dim_, dim_);
  for (int b = 0; b < dim_; ++b) number_(b, b) = std::popcount(static_cast<unsigned>(b));
}

const Matrix& FockRep::annihilator(int mode) const {
  if (mode < 1 || mode > n_) throw Error("mode index out of range");
  return annihilators_[mode - 1];
}

Region FockRep::full_region() const {
  std::vector<int> all(n_);
  for (int i = 0; i < n_; ++i) all[i] = i + 1;
  return Region(all);
}

cplx FockRep::tau(const Matrix& x) const {
  if (x.rows() != dim_ || x.cols() != dim_) throw DimensionMismatch("tau: wrong operator size");
  return x.trace() / static_cast<double>(dim_);
}

cplx FockRep::tau_inner(const Matrix& x, const Matrix& y) const {
  if (x.rows() != dim_ || y.rows() != dim_) throw DimensionMismatch("tau_inner: wrong operator size");
  return linalg::hs_inner(x, y) / static_cast<double>(dim_);
}

double FockRep::tau_norm(const Matrix& x) const {
  return x.frobenius_norm() / std::sqrt(static_cast<double>(dim_));
}

Matrix grading(const FockRep& rep, const Matrix& x) {
  if (x.rows() != rep.dim() || x.cols() != rep.dim()) {
    throw DimensionMismatch("grading: wrong operator size");
  }
  return rep.grading_unitary() * x * rep.grading_unitary();
}

EvenOddParts even_odd_split(const FockRep& rep, const Matrix& x) {
  const Matrix gx = grading(rep, x);
  return {(x + gx) * 0.5, (x - gx) * 0.5};
}

double odd_part_norm(const FockRep& rep, const Matrix& x) {
  return rep.tau_norm(even_odd_split(rep, x).odd);
}

Matrix gauge_transform(const FockRep& rep, const Matrix& x, double theta) {
  const int d = rep.dim();
  if (x.rows() != d || x.cols() != d) throw DimensionMismatch("gauge_transform: wrong size");
  // exp(i theta N) is diagonal with phases e^{i theta popcount(b)}.
  std::vector<cplx> phase(d);
  for (int b = 0; b < d; ++b) {
    const int ones = std::popcount(static_cast<unsigned>(b));
    phase[b] = std::polar(1.0, theta * ones);
  }
  Matrix out(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) out(i, j) = phase[i] * x(i, j) * std::conj(phase[j]);
  return out;
}

Matrix gauge_average(const FockRep& rep, const Matrix& x) {
  const int d = rep.dim();
  if (x.rows() != d || x.cols() != d) throw DimensionMismatch("gauge_average: wrong size");
  Matrix out(d, d);
  for (int i = 0; i < d; ++i) {
    const int ni = std::popcount(static_cast<unsigned>(i));
    for (int j = 0; j < d; ++j) {
      if (std::popcount(static_cast<unsigned>(j)) == ni) out(i, j) = x(i, j);
    }
  }
  return out;
}

Matrix region_unitary(const FockRep& rep, const Region& region) {
  Matrix out = Matrix::identity(rep.dim());
  for (int mode : region.modes) {
    if (mode < 1 || mode > rep.n_modes()) throw Error("region mode out of range");
    // v_i = a_i^dag a_i - a_i a_i^dag; the Jordan-Wigner strings cancel, so
    // this is the local parity at slot i.
    const Matrix& a = rep.annihilator(mode);
    out = out * (a.adjoint() * a - a * a.adjoint());
  }
  return out;
}

namespace {

struct Monomial {
  unsigned creators = 0;      // bitmask over region positions
  unsigned annihilators = 0;  // bitmask over region positions
  int degree() const {
    return std::popcount(creators) + std::popcount(annihilators);
  }
};

// Normal-ordered monomial: creators (ascending mode) then annihilators
// (ascending mode), masks indexing into region.modes.
Matrix build_monomial(const FockRep& rep, const Region& region, const Monomial& m) {
  Matrix out = Matrix::identity(rep.dim());
  for (int k = 0; k < region.size(); ++k)
    if (m.creators & (1u << k)) out = out * rep.creator(region.modes[k]);
  for (int k = 0; k < region.size(); ++k)
    if (m.annihilators & (1u << k)) out = out * rep.annihilator(region.modes[k]);
  return out;
}

// Stable Gram-Schmidt under tau with one re-orthogonalization pass.
void orthonormalize(const FockRep& rep, std::vector<Matrix>& basis) {
  for (std::size_t k = 0; k < basis.size(); ++k) {
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t j = 0; j < k; ++j) {
        const cplx c = rep.tau_inner(basis[j], basis[k]);
        basis[k] -= basis[j] * c;
      }
    }
    const double nrm = rep.tau_norm(basis[k]);
    if (nrm < 1e-12) throw Error("degenerate monomial basis");
    basis[k] *= cplx(1.0 / nrm, 0.0);
  }
}

Subalgebra make_subalgebra(const FockRep& rep, const Region& region, const Region& twist,
                           SubalgebraKind kind) {
  const int r = region.size();
  if (r > 5) throw Error("subalgebra regions limited to 5 modes");
  std::vector<Monomial> monomials;
  monomials.reserve(1u << (2 * r));
  for (unsigned c = 0; c < (1u << r); ++c)
    for (unsigned a = 0; a < (1u << r); ++a) monomials.push_back({c, a});
  std::sort(monomials.begin(), monomials.end(), [](const Monomial& x, const Monomial& y) {
    if (x.degree() != y.degree()) return x.degree() < y.degree();
    if (x.creators != y.creators) return x.creators < y.creators;
    return x.annihilators < y.annihilators;
  });

  Matrix vtwist;
  if (kind == SubalgebraKind::Twisted) vtwist = region_unitary(rep, twist);

  Subalgebra sub;
  sub.kind = kind;
  sub.region = region;
  sub.twist = twist;
  sub.space_dim = rep.dim();
  sub.n_modes = rep.n_modes();
  sub.factor_dim = 1 << r;
  sub.basis.reserve(monomials.size());
  sub.even_mask.reserve(monomials.size());
  for (const Monomial& m : monomials) {
    const bool even = (m.degree() % 2 == 0);
    Matrix op = build_monomial(rep, region, m);
    if (!even && kind == SubalgebraKind::Twisted) op = vtwist * op;
    sub.basis.push_back(std::move(op));
    sub.even_mask.push_back(even);
  }
  // Monomials of different parity are tau-orthogonal already, so the
  // Gram-Schmidt pass never mixes parities and even_mask stays valid.
  orthonormalize(rep, sub.basis);
  return sub;
}

}  // namespace

std::string Subalgebra::label() const {
  std::ostringstream os;
  if (kind == SubalgebraKind::Regional) {
    os << "A" << region.to_string();
  } else {
    os << "A^" << region.to_string() << "~twist" << twist.to_string();
  }
  return os.str();
}

std::vector<int> Subalgebra::even_indices() const {
  std::vector<int> idx;
  for (std::size_t k = 0; k < even_mask.size(); ++k)
    if (even_mask[k]) idx.push_back(static_cast<int>(k));
  return idx;
}

Subalgebra regional_subalgebra(const FockRep& rep, const Region& region) {
  return make_subalgebra(rep, region, Region{}, SubalgebraKind::Regional);
}

Subalgebra twisted_subalgebra(const FockRep& rep, const Region& region, const Region& twist) {
  if (!region.disjoint_from(twist)) {
    throw OverlappingRegions("twisted subalgebra requires disjoint region and twist");
  }
  return make_subalgebra(rep, region, twist, SubalgebraKind::Twisted);
}

}  // namespace fentropy::car
