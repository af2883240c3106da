// SPDX-License-Identifier: Apache-2.0

#include "luq/state.hpp"

#include <algorithm>
#include <cmath>

namespace luq {

namespace {

std::size_t product(const std::vector<std::size_t>& dims) {
  std::size_t p = 1;
  for (std::size_t d : dims) p *= d;
  return p;
}

std::size_t flatten(const std::vector<std::size_t>& dims,
                    const std::vector<std::size_t>& idx) {
  std::size_t f = 0;
  for (std::size_t s = 0; s < dims.size(); ++s) f = f * dims[s] + idx[s];
  return f;
}

bool advance_index(const std::vector<std::size_t>& dims,
             std::vector<std::size_t>& idx) {
  for (std::size_t s = dims.size(); s-- > 0;) {
    if (++idx[s] < dims[s]) return true;
    idx[s] = 0;
  }
  return false;
}

}  // namespace

PureState::PureState(std::vector<std::size_t> dims, std::vector<cplx> amplitudes)
    : dims_(std::move(dims)), amps_(std::move(amplitudes)) {
  if (dims_.size() != 2 && dims_.size() != 3) {
    throw Error(ErrorCode::WrongArity, "pure state needs 2 or 3 subsystems");
  }
  for (std::size_t d : dims_) {
    if (d == 0) throw Error(ErrorCode::BadSpec, "zero subsystem dimension");
  }
  if (amps_.size() != product(dims_)) {
    throw Error(ErrorCode::ShapeMismatch,
                "amplitude count does not match the dimension product");
  }
  double nrm = 0.0;
  for (const cplx& z : amps_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw Error(ErrorCode::BadSpec, "non-finite amplitude");
    }
    nrm += std::norm(z);
  }
  if (std::abs(std::sqrt(nrm) - 1.0) > 1e-10) {
    throw Error(ErrorCode::BadSpec, "pure state is not normalized");
  }
}

std::size_t PureState::total_dim() const { return product(dims_); }

MixedState::MixedState(std::vector<std::size_t> dims, ComplexMatrix matrix)
    : dims_(std::move(dims)), mat_(std::move(matrix)) {
  if (dims_.size() != 2 && dims_.size() != 3) {
    throw Error(ErrorCode::WrongArity, "mixed state needs 2 or 3 subsystems");
  }
  if (!mat_.is_square() || mat_.rows() != product(dims_)) {
    throw Error(ErrorCode::ShapeMismatch,
                "density matrix side does not match the dimension product");
  }
  if (!mat_.is_hermitian(1e-10)) {
    throw Error(ErrorCode::NotHermitian, "density matrix is not Hermitian");
  }
  if (std::abs(mat_.trace().real() - 1.0) > 1e-10 ||
      std::abs(mat_.trace().imag()) > 1e-10) {
    throw Error(ErrorCode::BadSpec, "density matrix trace is not 1");
  }
  SpectralData sd = eig_hermitian(mat_);
  for (double lam : sd.eigenvalues) {
    if (lam < -1e-10) {
      throw Error(ErrorCode::BadSpec, "density matrix has a negative eigenvalue");
    }
  }
}

MixedState MixedState::projector(const PureState& psi) {
  const std::size_t d = psi.total_dim();
  ComplexMatrix m(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      m(i, j) = psi.amplitudes()[i] * std::conj(psi.amplitudes()[j]);
  return MixedState(psi.dims(), std::move(m));
}

ComplexMatrix unfold(const PureState& state, int pivot) {
  if (state.arity() != 3) {
    throw Error(ErrorCode::WrongArity, "unfold needs a 3-party state");
  }
  if (pivot < 1 || pivot > 3) {
    throw Error(ErrorCode::BadLabel, "pivot must be 1, 2 or 3");
  }
  const std::size_t K = state.dims()[0];
  const std::size_t M = state.dims()[1];
  const std::size_t N = state.dims()[2];
  std::size_t rows, cols;
  switch (pivot) {
    case 1: rows = K; cols = M * N; break;
    case 2: rows = M; cols = K * N; break;
    default: rows = N; cols = K * M; break;
  }
  ComplexMatrix a(rows, cols);
  for (std::size_t i = 0; i < K; ++i)
    for (std::size_t j = 0; j < M; ++j)
      for (std::size_t k = 0; k < N; ++k) {
        const cplx amp = state.amplitudes()[(i * M + j) * N + k];
        switch (pivot) {
          case 1: a(i, j * N + k) = amp; break;
          case 2: a(j, i * N + k) = amp; break;
          default: a(k, i * M + j) = amp; break;
        }
      }
  return a;
}

ComplexMatrix unfold_bipartite(const PureState& state) {
  if (state.arity() != 2) {
    throw Error(ErrorCode::WrongArity, "unfold_bipartite needs a 2-party state");
  }
  const std::size_t M = state.dims()[0];
  const std::size_t N = state.dims()[1];
  ComplexMatrix b(M, N);
  for (std::size_t j = 0; j < M; ++j)
    for (std::size_t k = 0; k < N; ++k) b(j, k) = state.amplitudes()[j * N + k];
  return b;
}

ComplexMatrix partial_trace(const MixedState& state,
                            const std::vector<int>& keep) {
  const std::size_t arity = state.arity();
  std::vector<bool> kept(arity, false);
  for (int label : keep) {
    if (label < 1 || static_cast<std::size_t>(label) > arity) {
      throw Error(ErrorCode::BadSubset, "subsystem label out of range");
    }
    if (kept[label - 1]) {
      throw Error(ErrorCode::BadSubset, "duplicate subsystem label");
    }
    kept[label - 1] = true;
  }
  if (keep.empty() || keep.size() >= arity) {
    throw Error(ErrorCode::BadSubset,
                "keep must be a nonempty proper subset of the labels");
  }

  std::vector<std::size_t> keep_dims, trace_dims, keep_slots, trace_slots;
  for (std::size_t s = 0; s < arity; ++s) {
    if (kept[s]) {
      keep_dims.push_back(state.dims()[s]);
      keep_slots.push_back(s);
    } else {
      trace_dims.push_back(state.dims()[s]);
      trace_slots.push_back(s);
    }
  }

  const std::size_t dk = product(keep_dims);
  ComplexMatrix out(dk, dk);

  std::vector<std::size_t> full_row(arity), full_col(arity);
  std::vector<std::size_t> a(keep_dims.size(), 0);
  do {
    std::vector<std::size_t> b(keep_dims.size(), 0);
    do {
      cplx sum = 0.0;
      std::vector<std::size_t> t(trace_dims.size(), 0);
      do {
        for (std::size_t s = 0; s < keep_slots.size(); ++s) {
          full_row[keep_slots[s]] = a[s];
          full_col[keep_slots[s]] = b[s];
        }
        for (std::size_t s = 0; s < trace_slots.size(); ++s) {
          full_row[trace_slots[s]] = t[s];
          full_col[trace_slots[s]] = t[s];
        }
        sum += state.matrix()(flatten(state.dims(), full_row),
                              flatten(state.dims(), full_col));
      } while (advance_index(trace_dims, t));
      out(flatten(keep_dims, a), flatten(keep_dims, b)) = sum;
    } while (advance_index(keep_dims, b));
  } while (advance_index(keep_dims, a));
  return out;
}

std::vector<std::pair<double, PureState>> spectral_branches(
    const MixedState& state) {
  SpectralData sd = eig_hermitian(state.matrix());
  const double top = sd.eigenvalues.empty() ? 0.0 : std::abs(sd.eigenvalues[0]);
  std::vector<std::pair<double, PureState>> out;
  for (std::size_t j = 0; j < sd.eigenvalues.size(); ++j) {
    const double lam = sd.eigenvalues[j];
    if (lam <= kEigZeroCutoff * top || lam <= 0.0) continue;
    std::vector<cplx> amps(state.matrix().rows());
    for (std::size_t i = 0; i < amps.size(); ++i) amps[i] = sd.vectors(i, j);
    out.emplace_back(lam, PureState(state.dims(), std::move(amps)));
  }
  return out;
}

ReducedFamily reduced_family_bipartite(const MixedState& state) {
  if (state.arity() != 2) {
    throw Error(ErrorCode::WrongArity,
                "reduced_family_bipartite needs a 2-party state");
  }
  ReducedFamily fam;
  for (auto& [weight, branch] : spectral_branches(state)) {
    const ComplexMatrix b = unfold_bipartite(branch);
    fam.weights.push_back(weight);
    fam.left.push_back(b * b.adjoint());
    fam.right.push_back(b.adjoint() * b);
  }
  return fam;
}

std::pair<MixedState, ReducedFamily> reduced_family_pure3(
    const PureState& state, int pivot) {
  if (state.arity() != 3) {
    throw Error(ErrorCode::WrongArity, "reduced_family_pure3 needs 3 parties");
  }
  if (pivot < 1 || pivot > 3) {
    throw Error(ErrorCode::BadLabel, "pivot must be 1, 2 or 3");
  }
  std::vector<int> keep;
  std::vector<std::size_t> keep_dims;
  for (int s = 1; s <= 3; ++s) {
    if (s != pivot) {
      keep.push_back(s);
      keep_dims.push_back(state.dims()[s - 1]);
    }
  }
  MixedState tau(keep_dims,
                 partial_trace(MixedState::projector(state), keep));
  ReducedFamily fam = reduced_family_bipartite(tau);
  return {std::move(tau), std::move(fam)};
}

Mixed3Hierarchy mixed3_hierarchy(const MixedState& state) {
  if (state.arity() != 3) {
    throw Error(ErrorCode::WrongArity, "mixed3_hierarchy needs 3 parties");
  }
  const std::size_t M = state.dims()[1];
  const std::size_t N = state.dims()[2];
  Mixed3Hierarchy h;
  for (auto& [weight, branch] : spectral_branches(state)) {
    const ComplexMatrix a = unfold(branch, 1);
    ComplexMatrix theta23 = a * a.adjoint();
    ComplexMatrix rho_i = (a.adjoint() * a).conjugate();
    h.inner.push_back(
        reduced_family_bipartite(MixedState({M, N}, rho_i)));
    h.outer.weights.push_back(weight);
    h.outer.left.push_back(std::move(theta23));
    h.outer.right.push_back(std::move(rho_i));
  }
  return h;
}

namespace {

ComplexMatrix full_local_operator(const std::vector<std::size_t>& dims,
                                  const std::vector<ComplexMatrix>& factors) {
  if (factors.size() != dims.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                "factor count does not match subsystem count");
  }
  for (std::size_t s = 0; s < dims.size(); ++s) {
    if (!factors[s].is_square() || factors[s].rows() != dims[s]) {
      throw Error(ErrorCode::DimensionMismatch,
                  "factor dimension does not match its subsystem");
    }
    if (!factors[s].is_unitary(1e-8)) {
      throw Error(ErrorCode::NotUnitary, "factor is not unitary");
    }
  }
  ComplexMatrix u = factors[0];
  for (std::size_t s = 1; s < factors.size(); ++s) u = kron(u, factors[s]);
  return u;
}

}  // namespace

PureState apply_local_unitary(const PureState& state,
                              const std::vector<ComplexMatrix>& factors) {
  const ComplexMatrix u = full_local_operator(state.dims(), factors);
  std::vector<cplx> out(state.total_dim(), 0.0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    cplx s = 0.0;
    for (std::size_t j = 0; j < out.size(); ++j)
      s += u(i, j) * state.amplitudes()[j];
    out[i] = s;
  }
  return PureState(state.dims(), std::move(out));
}

MixedState apply_local_unitary(const MixedState& state,
                               const std::vector<ComplexMatrix>& factors) {
  const ComplexMatrix u = full_local_operator(state.dims(), factors);
  return MixedState(state.dims(), u * state.matrix() * u.adjoint());
}

std::vector<double> schmidt_coefficients(const PureState& state) {
  if (state.arity() != 2) {
    throw Error(ErrorCode::WrongArity, "schmidt_coefficients needs 2 parties");
  }
  return svd(unfold_bipartite(state)).singulars;
}

}  // namespace luq
