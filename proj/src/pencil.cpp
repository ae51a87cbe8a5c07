#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "liouville/symplin.hpp"

namespace liouville {

namespace {

using CMatrix = Eigen::MatrixXcd;
using cplx = std::complex<double>;

struct Chain {
  std::vector<Eigen::VectorXcd> v, w;
};

[[noreturn]] void ill_conditioned(const std::string& why) { throw NumericalError("ill-conditioned pencil: " + why); }

// Chains v_j = eps^-j N^j v_0, w_k dual to v_k, w_(j-1) = eps^-1 (B - conj lambda) w_j, inside the
// generalized eigenspace of lambda. m_total is the multiplicity of lambda in B, m the part not yet
// used; prev holds earlier block vectors for the same eigenvalue.
Chain build_chain(const Matrix& B, const Matrix& A0, cplx lambda, int m_total, int m, const Matrix& prev, bool real,
                  double eps) {
  int n = static_cast<int>(B.rows());
  CMatrix Bc = B.cast<cplx>(), A0c = A0.cast<cplx>();
  int p = std::max(1, m_total / 2);
  CMatrix Np = CMatrix::Identity(n, n);
  for (int i = 0; i < p; ++i) Np = Bc * Np - lambda * Np;
  auto small_space = [&](const auto& M, int keep, bool gap_check) {
    using M_t = std::decay_t<decltype(M)>;
    Eigen::JacobiSVD<M_t> svd(M, Eigen::ComputeFullV);
    const auto& s = svd.singularValues();
    int d = static_cast<int>(M.cols());
    double top = std::max(s(0), 1e-300);
    if (gap_check && keep < d && s(d - keep) > 1e-4 * s(d - keep - 1))
      ill_conditioned("generalized eigenspace is not separated");
    (void)top;
    return M_t(svd.matrixV().rightCols(keep));
  };
  // orthonormal basis of the generalized eigenspace of B
  CMatrix E = real ? CMatrix(small_space(Matrix(Np.real()), m_total, true).cast<cplx>())
                   : CMatrix(small_space(Np, m_total, true));
  if (prev.cols() > 0) {
    // omega0-orthogonal to the earlier blocks of this eigenvalue
    CMatrix C = prev.transpose().cast<cplx>() * A0c * E;
    if (real) E = E * small_space(Matrix(C.real()), m, false).cast<cplx>();
    else E = E * small_space(C, m, false);
    if (real) {
      Eigen::HouseholderQR<Matrix> qr(E.real());
      E = (qr.householderQ() * Matrix::Identity(n, m)).cast<cplx>();
    } else {
      Eigen::HouseholderQR<CMatrix> qr(E);
      E = qr.householderQ() * CMatrix::Identity(n, m);
    }
  }
  lambda = (E.adjoint() * Bc * E).trace() / static_cast<double>(m);
  if (real) lambda = lambda.real();
  CMatrix N = Bc - lambda * CMatrix::Identity(n, n);
  CMatrix NE = E.adjoint() * N * E;
  double scale = std::max(1.0, std::abs(lambda));
  int chain = 1;
  CMatrix Pw = NE;
  while (chain < m && Pw.norm() > 1e-6 * std::pow(scale, chain)) {
    Pw = Pw * NE;
    ++chain;
  }
  Eigen::VectorXcd c0 = Eigen::VectorXcd::Unit(m, 0);
  if (chain > 1) {
    CMatrix Nk = CMatrix::Identity(m, m);
    for (int i = 0; i + 1 < chain; ++i) Nk = Nk * NE;
    Eigen::JacobiSVD<CMatrix> top_svd(Nk, Eigen::ComputeFullV);
    c0 = top_svd.matrixV().col(0);
  }
  Chain out;
  out.v.push_back(E * c0);
  for (int j = 1; j < chain; ++j) out.v.push_back(N * out.v.back() / eps);
  CMatrix W = real ? E : CMatrix(E.conjugate());
  CMatrix R(chain, m);
  for (int j = 0; j < chain; ++j) R.row(j) = out.v[j].adjoint() * A0c * W;
  Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(chain);
  rhs(chain - 1) = 1;
  Eigen::VectorXcd c = R.completeOrthogonalDecomposition().solve(rhs);
  if ((R * c - rhs).norm() > 1e-8) ill_conditioned("no dual vector for the chain");
  std::vector<Eigen::VectorXcd> w(chain);
  w[chain - 1] = W * c;
  CMatrix Nbar = Bc - std::conj(lambda) * CMatrix::Identity(n, n);
  for (int j = chain - 1; j > 0; --j) w[j - 1] = Nbar * w[j] / eps;
  out.w = std::move(w);
  return out;
}

// Basis changes that keep both model matrices: a common phase on the chain (complex),
// w_0 made orthogonal to v_0 (real, chain 1), and v -> s v, w -> w / s.
void condition_chain(Chain& ch, bool real) {
  if (!real) {
    double xx = 0, yy = 0, xy = 0;
    for (const auto& v : ch.v) {
      xx += v.real().squaredNorm();
      yy += v.imag().squaredNorm();
      xy += v.real().dot(v.imag());
    }
    cplx ph = std::polar(1.0, -0.5 * std::atan2(2 * xy, xx - yy));
    for (auto& v : ch.v) v *= ph;
    for (auto& w : ch.w) w *= ph;
  } else if (ch.v.size() == 1) {
    ch.w[0] -= (ch.w[0].real().dot(ch.v[0].real()) / ch.v[0].real().squaredNorm()) * ch.v[0];
  }
  double nv = 0, nw = 0;
  for (const auto& v : ch.v) nv += v.squaredNorm();
  for (const auto& w : ch.w) nw += w.squaredNorm();
  double s = std::pow(nw / nv, 0.25);
  for (auto& v : ch.v) v *= s;
  for (auto& w : ch.w) w /= s;
}

struct Attempt {
  std::vector<PencilBlock> blocks;
  Matrix P;
};

Attempt reduce_once(const Matrix& A0, const Matrix& B, double eps) {
  int n = static_cast<int>(A0.rows());
  double tol = 1e-7 * std::max(1.0, B.operatorNorm());
  Attempt at;
  std::vector<Eigen::VectorXd> cols;
  // eigenvalues are removed from ev as blocks consume them
  Eigen::EigenSolver<Matrix> es(B, false);
  const std::vector<cplx> all(es.eigenvalues().data(), es.eigenvalues().data() + n);
  std::vector<cplx> ev = all;
  auto consume = [&](cplx z, int count) {
    for (int c = 0; c < count && !ev.empty(); ++c) {
      auto it = std::min_element(ev.begin(), ev.end(),
                                 [&](const cplx& a, const cplx& b) { return std::abs(a - z) < std::abs(b - z); });
      ev.erase(it);
    }
  };
  // single-linkage cluster of seed inside list
  auto cluster = [&](const std::vector<cplx>& list, cplx seed) {
    std::vector<char> in(list.size(), 0);
    std::vector<cplx> members{seed};
    for (bool grew = true; grew;) {
      grew = false;
      for (size_t i = 0; i < list.size(); ++i) {
        if (in[i]) continue;
        for (const auto& mz : members)
          if (std::abs(list[i] - mz) <= tol) {
            in[i] = 1;
            members.push_back(list[i]);
            grew = true;
            break;
          }
      }
    }
    for (size_t i = 0; i < list.size(); ++i)
      if (!in[i])
        for (size_t j = 0; j < list.size(); ++j)
          if (in[j] && std::abs(list[i] - list[j]) <= 10 * tol) ill_conditioned("eigenvalue gap below tolerance");
    return in;
  };
  std::vector<std::pair<cplx, Eigen::VectorXd>> used;  // (eigenvalue, block vector)
  while (!ev.empty()) {
    // candidate: largest real part, upper half plane
    cplx lead = ev[0];
    for (const auto& z : ev)
      if (z.real() > lead.real() || (z.real() == lead.real() && z.imag() > lead.imag())) lead = z;
    if (lead.imag() < 0) lead = std::conj(lead);
    auto in = cluster(ev, lead);
    cplx mean = 0;
    int m = 0;
    for (size_t i = 0; i < ev.size(); ++i)
      if (in[i]) {
        mean += ev[i];
        ++m;
      }
    mean /= static_cast<double>(m);
    bool real = std::abs(mean.imag()) <= 1e-8 * std::abs(mean.real());
    if (!real && std::abs(mean.imag()) <= 10 * tol) ill_conditioned("eigenvalue near the real axis");
    if (m % 2) ill_conditioned("odd multiplicity");
    if (real) mean = mean.real();
    int m_total = 0;
    for (char c : cluster(all, mean)) m_total += c;
    std::vector<Eigen::VectorXd> same;
    for (const auto& [z, v] : used)
      if (std::abs(z - mean) <= 10 * tol) same.push_back(v);
    Matrix prev(n, static_cast<long>(same.size()));
    for (size_t i = 0; i < same.size(); ++i) prev.col(static_cast<long>(i)) = same[i];

    Chain ch = build_chain(B, A0, mean, m_total, m, prev, real, eps);
    int k1 = static_cast<int>(ch.v.size());
    condition_chain(ch, real);
    PencilBlock blk;
    blk.chain = k1;
    blk.offset = static_cast<int>(cols.size());
    std::vector<Eigen::VectorXd> vs, ws;
    if (real) {
      blk.kind = PencilBlock::Kind::real;
      blk.size = 2 * k1;
      for (auto& v : ch.v) vs.push_back(v.real());
      for (auto& w : ch.w) ws.push_back(w.real());
    } else {
      blk.kind = PencilBlock::Kind::complex;
      blk.size = 4 * k1;
      const double r2 = std::numbers::sqrt2;
      for (auto& v : ch.v) {
        vs.push_back(r2 * v.real());
        vs.push_back(-r2 * v.imag());
      }
      for (auto& w : ch.w) {
        ws.push_back(r2 * w.real());
        ws.push_back(-r2 * w.imag());
      }
    }
    if (static_cast<int>(cols.size()) + blk.size > n) ill_conditioned("chain longer than the remaining space");
    for (auto& v : vs) cols.push_back(v);
    for (auto& w : ws) cols.push_back(w);
    for (int i = blk.offset; i < blk.offset + blk.size; ++i) used.emplace_back(mean, cols[i]);
    at.blocks.push_back(blk);
    consume(mean, 2 * k1);
    if (!real) consume(std::conj(mean), 2 * k1);
  }
  if (static_cast<int>(cols.size()) != n) ill_conditioned("blocks do not fill the space");
  at.P.resize(n, n);
  for (int i = 0; i < n; ++i) at.P.col(i) = cols[i];
  return at;
}

// Block parameters read back from the transported omega1.
void refine_parameters(std::vector<PencilBlock>& blocks, const Matrix& T1) {
  for (auto& b : blocks) {
    int o = b.offset;
    if (b.kind == PencilBlock::Kind::real) {
      double s = 0;
      for (int j = 0; j < b.chain; ++j) s += T1(o + j, o + b.chain + j);
      b.lambda = s / b.chain;
    } else {
      int h = 2 * b.chain;
      double mu = 0, nu = 0;
      for (int j = 0; j < b.chain; ++j) {
        mu += T1(o + 2 * j, o + h + 2 * j);
        nu += T1(o + 2 * j, o + h + 2 * j + 1);
      }
      b.mu = mu / b.chain;
      b.nu = nu / b.chain;
    }
  }
}

}  // namespace

Matrix PencilBlocks::model0() const {
  int n = static_cast<int>(P.rows());
  Matrix M = Matrix::Zero(n, n);
  for (const auto& b : blocks) M.block(b.offset, b.offset, b.size, b.size) = standard_omega(b.size);
  return M;
}

Matrix PencilBlocks::model1() const {
  int n = static_cast<int>(P.rows());
  Matrix M = Matrix::Zero(n, n);
  for (const auto& b : blocks) {
    int h = b.size / 2;
    Matrix D = Matrix::Zero(h, h);
    if (b.kind == PencilBlock::Kind::real) {
      D = b.lambda * Matrix::Identity(h, h);
    } else {
      for (int j = 0; j < b.chain; ++j) {
        D(2 * j, 2 * j) = b.mu;
        D(2 * j, 2 * j + 1) = b.nu;
        D(2 * j + 1, 2 * j) = -b.nu;
        D(2 * j + 1, 2 * j + 1) = b.mu;
      }
    }
    M.block(b.offset, b.offset + h, h, h) = D;
    M.block(b.offset + h, b.offset, h, h) = -D.transpose();
  }
  return M;
}

PencilBlocks simultaneous_reduce(const Matrix& A0, const Matrix& A1, double eps) {
  if (!(eps > 0)) throw InputError("eps must be positive");
  Matrix B = pencil_endomorphism(A0, A1);
  if (!is_nondegenerate(A1)) throw InputError("omega1 is degenerate");
  std::string last;
  for (int attempt = 0; attempt <= 6; ++attempt, eps /= 2) {
    Attempt at = reduce_once(A0, B, eps);
    PencilBlocks r;
    r.blocks = std::move(at.blocks);
    r.P = std::move(at.P);
    r.eps = eps;
    r.attempts = attempt + 1;
    Matrix T0 = r.P.transpose() * A0 * r.P, T1 = r.P.transpose() * A1 * r.P;
    refine_parameters(r.blocks, T1);
    for (const auto& b : r.blocks) r.experimental = r.experimental || b.chain > 1;
    r.residual0 = (T0 - r.model0()).cwiseAbs().maxCoeff();
    r.residual1 = (T1 - r.model1()).cwiseAbs().maxCoeff();
    Eigen::JacobiSVD<Matrix> svd(r.P);
    r.cond = svd.singularValues()(0) / svd.singularValues()(svd.singularValues().size() - 1);
    // roundoff floor of the transported forms
    double p2 = std::pow(svd.singularValues()(0), 2);
    double floor0 = std::max(1e-9, 1e-12 * p2 * A0.operatorNorm()), floor1 = std::max(1e-9, 1e-12 * p2 * A1.operatorNorm());
    if (r.residual0 <= floor0 && r.residual1 <= 10 * eps + floor1) return r;
    std::ostringstream o;
    o << "residuals " << r.residual0 << ", " << r.residual1 << " at eps " << eps;
    last = o.str();
  }
  throw NumericalError("pencil reduction failed its residual gate (" + last + ")");
}

CotameResult construct_cotamed(const Matrix& A0, const Matrix& A1) {
  if (!cotamed_exists(A0, A1)) throw InputError("no cotamed complex structure: the pencil degenerates");
  int n = static_cast<int>(A0.rows());
  // first try eps = 1e-3; chains then fall back to half the smallest chain margin, which keeps P well conditioned
  double eps = 1e-3;
  std::ostringstream why;
  for (int attempt = 0; attempt <= 6; ++attempt) {
    // taming is invariant under positive rescaling of the forms
    PencilBlocks pb = simultaneous_reduce(Matrix(A0 / A0.operatorNorm()), Matrix(A1 / A1.operatorNorm()), eps);
    Matrix Jb = Matrix::Zero(n, n);
    for (const auto& b : pb.blocks) {
      int o = b.offset, h = b.size / 2;
      if (b.kind == PencilBlock::Kind::real) {
        if (b.lambda <= 0) throw NumericalError("real block with nonpositive eigenvalue on a nondegenerate segment");
        Jb.block(o, o + h, h, h) = -Matrix::Identity(h, h);
        Jb.block(o + h, o, h, h) = Matrix::Identity(h, h);
      } else {
        double theta = -std::atan2(b.nu, b.mu) / 2;
        Matrix Q = Matrix::Zero(h, h);
        for (int j = 0; j < b.chain; ++j) {
          Q(2 * j, 2 * j) = std::cos(theta);
          Q(2 * j, 2 * j + 1) = -std::sin(theta);
          Q(2 * j + 1, 2 * j) = std::sin(theta);
          Q(2 * j + 1, 2 * j + 1) = std::cos(theta);
        }
        Jb.block(o, o + h, h, h) = -Q;
        Jb.block(o + h, o, h, h) = Q.transpose();
      }
    }
    Matrix J = pb.P * Jb * pb.P.inverse();
    for (int i = 0; i < 2; ++i) J = (J - J.inverse()) / 2;
    CotameResult r;
    r.defect = complex_structure_defect(J);
    r.margin0 = taming_margin(A0, J);
    r.margin1 = taming_margin(A1, J);
    r.J = std::move(J);
    r.eps = eps;
    r.attempts = attempt + 1;
    r.blocks = std::move(pb);
    if (r.defect <= 1e-10 && r.margin0 > 1e-10 && r.margin1 > 1e-10) return r;
    double chain_margin = std::numeric_limits<double>::infinity();
    for (const auto& b : r.blocks.blocks) {
      if (b.chain == 1) continue;
      double m = b.kind == PencilBlock::Kind::real ? b.lambda : std::hypot(b.mu, b.nu) * std::cos(std::atan2(b.nu, b.mu) / 2);
      chain_margin = std::min(chain_margin, m);
    }
    eps = (attempt == 0 && std::isfinite(chain_margin)) ? chain_margin / 2 : r.eps / 2;
    why.str("");
    why << "margins " << r.margin0 << ", " << r.margin1 << ", defect " << r.defect << ", cond(P) "
        << r.blocks.cond;
  }
  throw NumericalError("cotamed construction failed to verify (" + why.str() + ")");
}

}  // namespace liouville
