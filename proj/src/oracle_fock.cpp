#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "xychain/entanglement.hpp"
#include "xychain/error.hpp"
#include "xychain/oracle.hpp"

namespace xychain {

using cd = std::complex<double>;

namespace {

constexpr int kMaxFockModes = 12;
constexpr double kBaseSubstep = 0.05;

// Column-wise builder: `column(s, emit)` calls emit(row, value) for column s.
template <class Column>
SparseOperator build_operator(std::uint32_t dim, Column column) {
  SparseOperator op;
  op.dim = dim;
  op.offsets.reserve(dim + 1);
  op.offsets.push_back(0);
  for (std::uint32_t s = 0; s < dim; ++s) {
    column(s, [&](std::uint32_t row, cd value) {
      if (value != cd{}) op.entries.push_back({row, value});
    });
    op.offsets.push_back(static_cast<std::uint32_t>(op.entries.size()));
  }
  return op;
}

double fermion_sign(std::uint32_t s, int k) {
  return (std::popcount(s & ((1u << k) - 1u)) % 2 == 0) ? 1.0 : -1.0;
}

// Sparse vector workspace for applying operator products to basis states.
class Workspace {
 public:
  explicit Workspace(std::uint32_t dim) : acc_(dim), stamp_(dim, 0) {}

  using Vec = std::vector<std::pair<std::uint32_t, cd>>;

  Vec apply(const SparseOperator& op, const Vec& in) {
    ++generation_;
    touched_.clear();
    for (const auto& [col, x] : in) {
      for (std::uint32_t e = op.offsets[col]; e < op.offsets[col + 1]; ++e) {
        const std::uint32_t row = op.entries[e].row;
        if (stamp_[row] != generation_) {
          stamp_[row] = generation_;
          acc_[row] = cd{};
          touched_.push_back(row);
        }
        acc_[row] += op.entries[e].value * x;
      }
    }
    Vec out;
    out.reserve(touched_.size());
    for (std::uint32_t row : touched_) {
      if (acc_[row] != cd{}) out.emplace_back(row, acc_[row]);
    }
    return out;
  }

  // ops[0] * ops[1] * ... * ops[m-1] applied to e_s.
  Vec chain(std::span<const SparseOperator* const> ops, std::uint32_t s) {
    Vec v{{s, cd{1.0}}};
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) v = apply(**it, v);
    return v;
  }

 private:
  std::vector<cd> acc_;
  std::vector<std::uint64_t> stamp_;
  std::vector<std::uint32_t> touched_;
  std::uint64_t generation_ = 0;
};

struct UnionFind {
  std::vector<std::uint32_t> parent;
  explicit UnionFind(std::uint32_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

struct Chain {
  cd coeff{1.0};
  std::vector<const SparseOperator*> ops;
};

Eigen::MatrixXcd propagator_step(const Eigen::MatrixXcd& H, double dt) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(H);
  const Eigen::VectorXcd phases =
      (eig.eigenvalues().cast<cd>() * cd(0.0, -dt)).array().exp().matrix();
  return eig.eigenvectors() * phases.asDiagonal() * eig.eigenvectors().adjoint();
}

}  // namespace

FockOracle::FockOracle(const ChainSpec& spec) : spec_(spec) {
  spec_.validate();
  const int N = spec_.N;
  if (N > kMaxFockModes) {
    throw ConfigError("Fock oracle supports N <= " + std::to_string(kMaxFockModes));
  }
  const std::uint32_t D = dim();
  const int half = N / 2;
  const std::vector<ModeBlock> blocks = mode_blocks(spec_);
  std::vector<double> momentum(N);
  for (int p = 0; p < half; ++p) {
    momentum[p] = blocks[p].phi;
    momentum[half + p] = blocks[p].partner_phi;
  }

  for (int k = 0; k < N; ++k) {
    const std::uint32_t bit = 1u << k;
    c_.push_back(build_operator(D, [&](std::uint32_t s, auto emit) {
      if (s & bit) emit(s ^ bit, fermion_sign(s, k));
    }));
    cdag_.push_back(build_operator(D, [&](std::uint32_t s, auto emit) {
      if (!(s & bit)) emit(s | bit, fermion_sign(s, k));
    }));
  }

  // b_l = N^-1/2 sum_k e^{-i l phi_k} c_k
  const double norm = 1.0 / std::sqrt(static_cast<double>(N));
  for (int l = 0; l < N; ++l) {
    for (int sign : {+1, -1}) {
      auto op = build_operator(D, [&](std::uint32_t s, auto emit) {
        for (int k = 0; k < N; ++k) {
          const std::uint32_t bit = 1u << k;
          const cd phase = std::exp(cd(0.0, l * momentum[k]));
          if (s & bit) emit(s ^ bit, sign * norm * std::conj(phase) * fermion_sign(s, k));
          else emit(s | bit, norm * phase * fermion_sign(s, k));
        }
      });
      (sign > 0 ? a_ : b_).push_back(std::move(op));
    }
  }

  Workspace ws(D);
  for (int p = 0; p < N; ++p) {
    for (int q = 0; q < N; ++q) {
      const SparseOperator* cdq[] = {&c_[p], &cdag_[q]};
      const SparseOperator* qdc[] = {&cdag_[q], &c_[p]};
      const SparseOperator* cc1[] = {&c_[p], &c_[q]};
      const SparseOperator* cc2[] = {&c_[q], &c_[p]};
      for (std::uint32_t s = 0; s < D; ++s) {
        for (auto [first, second, expected] :
             {std::tuple{std::span<const SparseOperator* const>(cdq),
                         std::span<const SparseOperator* const>(qdc), p == q ? 1.0 : 0.0},
              std::tuple{std::span<const SparseOperator* const>(cc1),
                         std::span<const SparseOperator* const>(cc2), 0.0}}) {
          std::vector<std::pair<std::uint32_t, cd>> sum = ws.chain(first, s);
          for (const auto& [row, v] : ws.chain(second, s)) {
            auto it = std::find_if(sum.begin(), sum.end(), [&](const auto& e) { return e.first == row; });
            if (it == sum.end()) sum.emplace_back(row, v);
            else it->second += v;
          }
          double off = 0.0;
          cd diag{};
          for (const auto& [row, v] : sum) {
            if (row == s) diag += v;
            else off = std::max(off, std::abs(v));
          }
          anticommutation_defect_ =
              std::max({anticommutation_defect_, off, std::abs(diag - expected)});
        }
      }
    }
  }
  if (anticommutation_defect_ > 1e-12) {
    throw NumericalError("Fock operators violate the anticommutation relations");
  }

  // X = sum_p [-2 cos(phi) n_a - 2 cos(partner) n_b + i delta (a^dag b^dag + a b)]
  // Y = sum_p [-2 (n_a + n_b) + 2]
  std::vector<std::vector<std::pair<std::uint32_t, cd>>> xcol(D), ycol(D);
  for (std::uint32_t s = 0; s < D; ++s) {
    std::vector<cd> xs, ys;
    auto add = [](std::vector<std::pair<std::uint32_t, cd>>& col, std::uint32_t row, cd v) {
      for (auto& [r, x] : col) {
        if (r == row) {
          x += v;
          return;
        }
      }
      col.emplace_back(row, v);
    };
    for (int p = 0; p < half; ++p) {
      const int a = p;
      const int b = half + p;
      const SparseOperator* na[] = {&cdag_[a], &c_[a]};
      const SparseOperator* nb[] = {&cdag_[b], &c_[b]};
      const SparseOperator* create[] = {&cdag_[a], &cdag_[b]};
      const SparseOperator* destroy[] = {&c_[a], &c_[b]};
      for (const auto& [row, v] : ws.chain(na, s)) {
        add(xcol[s], row, -2.0 * std::cos(momentum[a]) * v);
        add(ycol[s], row, -2.0 * v);
      }
      for (const auto& [row, v] : ws.chain(nb, s)) {
        add(xcol[s], row, -2.0 * std::cos(momentum[b]) * v);
        add(ycol[s], row, -2.0 * v);
      }
      add(ycol[s], s, 2.0);
      for (const auto& [row, v] : ws.chain(create, s)) add(xcol[s], row, cd(0.0, blocks[p].delta) * v);
      for (const auto& [row, v] : ws.chain(destroy, s)) add(xcol[s], row, cd(0.0, blocks[p].delta) * v);
    }
  }

  UnionFind uf(D);
  for (std::uint32_t s = 0; s < D; ++s) {
    for (const auto& [row, v] : xcol[s]) {
      if (std::abs(v) > 0.0) uf.unite(s, row);
    }
    for (const auto& [row, v] : ycol[s]) {
      if (std::abs(v) > 0.0) uf.unite(s, row);
    }
  }
  std::vector<int> sector_of_root(D, -1);
  std::vector<std::uint32_t> local(D);
  std::vector<int> sector_of(D);
  for (std::uint32_t s = 0; s < D; ++s) {
    const std::uint32_t root = uf.find(s);
    if (sector_of_root[root] < 0) {
      sector_of_root[root] = static_cast<int>(sectors_.size());
      sectors_.emplace_back();
    }
    Sector& sec = sectors_[sector_of_root[root]];
    sector_of[s] = sector_of_root[root];
    local[s] = static_cast<std::uint32_t>(sec.states.size());
    sec.states.push_back(s);
  }
  for (auto& sec : sectors_) {
    const auto d = static_cast<Eigen::Index>(sec.states.size());
    sec.X = Eigen::MatrixXcd::Zero(d, d);
    sec.Y = Eigen::MatrixXcd::Zero(d, d);
  }
  for (std::uint32_t s = 0; s < D; ++s) {
    Sector& sec = sectors_[sector_of[s]];
    for (const auto& [row, v] : xcol[s]) sec.X(local[row], local[s]) += v;
    for (const auto& [row, v] : ycol[s]) sec.Y(local[row], local[s]) += v;
  }
}

Eigen::MatrixXcd FockOracle::sector_hamiltonian(std::size_t s, double t) const {
  return spec_.coupling(t) * sectors_[s].X + spec_.field(t) * sectors_[s].Y;
}

FockState fock_thermal_state(const FockOracle& oracle) {
  const auto& sectors = oracle.sectors();
  const ChainSpec& spec = oracle.spec();
  std::vector<Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>> eig;
  eig.reserve(sectors.size());
  double e0 = std::numeric_limits<double>::infinity();
  double scale = 1.0;
  for (std::size_t s = 0; s < sectors.size(); ++s) {
    eig.emplace_back(oracle.sector_hamiltonian(s, 0.0));
    e0 = std::min(e0, eig.back().eigenvalues().minCoeff());
    scale = std::max(scale, eig.back().eigenvalues().cwiseAbs().maxCoeff());
  }

  FockState state;
  double total = 0.0;
  for (std::size_t s = 0; s < sectors.size(); ++s) {
    const Eigen::VectorXd& E = eig[s].eigenvalues();
    Eigen::VectorXd w(E.size());
    for (Eigen::Index i = 0; i < E.size(); ++i) {
      if (spec.kT == 0.0) {
        w(i) = (E(i) - e0 <= kDegeneracyTolerance * scale) ? 1.0 : 0.0;
      } else if (std::isinf(spec.kT)) {
        w(i) = 1.0;
      } else {
        w(i) = std::exp(-(E(i) - e0) / spec.kT);
      }
    }
    total += w.sum();
    const auto& V = eig[s].eigenvectors();
    state.blocks.push_back(V * w.cast<cd>().asDiagonal() * V.adjoint());
  }
  for (auto& b : state.blocks) b /= total;
  return state;
}

std::vector<FockState> fock_evolve(const FockOracle& oracle, std::span<const double> t_grid,
                                   double dt_sub) {
  if (t_grid.empty() || t_grid.front() != 0.0) throw PreconditionError("time grid must start at 0");
  const FockState init = fock_thermal_state(oracle);
  std::vector<FockState> out(t_grid.size());
  for (std::size_t g = 0; g < t_grid.size(); ++g) {
    out[g].t = t_grid[g];
    out[g].blocks.resize(init.blocks.size());
  }
  const ChainSpec& spec = oracle.spec();

  for (std::size_t s = 0; s < oracle.sectors().size(); ++s) {
    const auto d = init.blocks[s].rows();
    Eigen::MatrixXcd U = Eigen::MatrixXcd::Identity(d, d);
    Eigen::MatrixXcd step;
    double last_J = std::numeric_limits<double>::quiet_NaN();
    double last_h = last_J;
    double last_dt = last_J;
    out[0].blocks[s] = init.blocks[s];
    for (std::size_t g = 1; g < t_grid.size(); ++g) {
      const double span = t_grid[g] - t_grid[g - 1];
      const long n = midpoint_substeps(span, dt_sub, 0);
      const double dt = span / static_cast<double>(n);
      for (long k = 0; k < n; ++k) {
        const double tm = t_grid[g - 1] + (static_cast<double>(k) + 0.5) * dt;
        const double J = spec.coupling(tm);
        const double h = spec.field(tm);
        if (J != last_J || h != last_h || dt != last_dt) {
          const auto& sec = oracle.sectors()[s];
          step = propagator_step(J * sec.X + h * sec.Y, dt);
          last_J = J;
          last_h = h;
          last_dt = dt;
        }
        U = step * U;
      }
      out[g].blocks[s] = U * init.blocks[s] * U.adjoint();
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

// Operator catalogue, in packing order.
struct Catalogue {
  int N;
  int half;
  std::size_t modes_begin, contractions_begin, strings_begin, spin_begin, anchor_begin, count;

  explicit Catalogue(int n) : N(n), half(n / 2) {
    modes_begin = 0;
    contractions_begin = modes_begin + 3 * half;
    strings_begin = contractions_begin + 4 * N;
    spin_begin = strings_begin + 5 * half;
    anchor_begin = spin_begin + 16 * half;
    count = anchor_begin + 3 * half;
  }
};

enum Pauli { I = 0, X = 1, Y = 2, Z = 3 };

// Jordan-Wigner image of a Pauli operator at `site`, appended to `chain`.
void append_pauli(const FockOracle& o, Pauli a, int site, Chain& chain) {
  switch (a) {
    case I: return;
    case Z:
      chain.coeff *= -1.0;
      chain.ops.push_back(&o.site_a(site));
      chain.ops.push_back(&o.site_b(site));
      return;
    case X:
    case Y:
      for (int i = 0; i < site; ++i) {
        chain.ops.push_back(&o.site_a(i));
        chain.ops.push_back(&o.site_b(i));
      }
      if (a == X) {
        chain.ops.push_back(&o.site_a(site));
      } else {
        chain.coeff *= cd(0.0, -1.0);
        chain.ops.push_back(&o.site_b(site));
      }
      return;
  }
}

Chain pauli_pair(const FockOracle& o, Pauli a, int l, Pauli b, int m) {
  Chain c;
  append_pauli(o, a, l, c);
  append_pauli(o, b, m, c);
  return c;
}

Eigen::Matrix2cd pauli_matrix(int a) {
  Eigen::Matrix2cd s;
  switch (a) {
    case X: s << 0, 1, 1, 0; break;
    case Y: s << 0, cd(0, -1), cd(0, 1), 0; break;
    case Z: s << 1, 0, 0, -1; break;
    default: s.setIdentity();
  }
  return s;
}

Eigen::Matrix4cd kron(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
  Eigen::Matrix4cd k;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) k.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return k;
}

}  // namespace

FockObservableSet::FockObservableSet(const FockOracle& oracle) : oracle_(&oracle) {
  const int N = oracle.modes();
  const int half = N / 2;
  const Catalogue cat(N);
  std::vector<Chain> chains;
  chains.reserve(cat.count);

  for (int p = 0; p < half; ++p) {
    chains.push_back({1.0, {&oracle.creator(p), &oracle.annihilator(p)}});
    chains.push_back({1.0, {&oracle.creator(half + p), &oracle.annihilator(half + p)}});
    chains.push_back({1.0, {&oracle.annihilator(p), &oracle.annihilator(half + p)}});
  }
  for (int r = 0; r < N; ++r) {
    chains.push_back({1.0, {&oracle.site_b(0), &oracle.site_a(r)}});
    chains.push_back({1.0, {&oracle.site_a(0), &oracle.site_b(r)}});
    chains.push_back({1.0, {&oracle.site_a(0), &oracle.site_a(r)}});
    chains.push_back({1.0, {&oracle.site_b(0), &oracle.site_b(r)}});
  }
  for (int r = 1; r <= half; ++r) {
    Chain x, y, z, xy, yx;
    x.ops.push_back(&oracle.site_b(0));
    y.ops.push_back(&oracle.site_a(0));
    xy.ops.push_back(&oracle.site_b(0));
    yx.ops.push_back(&oracle.site_a(0));
    for (int j = 1; j < r; ++j) {
      x.ops.insert(x.ops.end(), {&oracle.site_a(j), &oracle.site_b(j)});
      y.ops.insert(y.ops.end(), {&oracle.site_b(j), &oracle.site_a(j)});
      xy.ops.insert(xy.ops.end(), {&oracle.site_a(j), &oracle.site_b(j)});
      yx.ops.insert(yx.ops.end(), {&oracle.site_a(j), &oracle.site_b(j)});
    }
    x.ops.push_back(&oracle.site_a(r));
    y.ops.push_back(&oracle.site_b(r));
    xy.ops.push_back(&oracle.site_b(r));
    yx.ops.push_back(&oracle.site_a(r));
    z.ops = {&oracle.site_a(0), &oracle.site_b(0), &oracle.site_a(r), &oracle.site_b(r)};
    for (Chain* c : {&x, &y, &z, &xy, &yx}) chains.push_back(std::move(*c));
  }
  for (int r = 1; r <= half; ++r) {
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        chains.push_back(pauli_pair(oracle, Pauli(a), 0, Pauli(b), r));
  }
  for (int r = 1; r <= half; ++r) {
    for (Pauli a : {X, Y, Z}) chains.push_back(pauli_pair(oracle, a, 1, a, 1 + r));
  }

  const auto& sectors = oracle.sectors();
  std::vector<int> sector_of(oracle.dim());
  std::vector<Eigen::Index> local(oracle.dim());
  for (std::size_t s = 0; s < sectors.size(); ++s) {
    for (std::size_t i = 0; i < sectors[s].states.size(); ++i) {
      sector_of[sectors[s].states[i]] = static_cast<int>(s);
      local[sectors[s].states[i]] = static_cast<Eigen::Index>(i);
    }
  }

  Workspace ws(oracle.dim());
  ops_.resize(chains.size());
  for (std::size_t c = 0; c < chains.size(); ++c) {
    auto& blocks = ops_[c].blocks;
    blocks.resize(sectors.size());
    for (std::size_t s = 0; s < sectors.size(); ++s) {
      const auto d = static_cast<Eigen::Index>(sectors[s].states.size());
      blocks[s] = Eigen::MatrixXcd::Zero(d, d);
    }
    for (std::uint32_t st = 0; st < oracle.dim(); ++st) {
      const int s = sector_of[st];
      for (const auto& [row, v] : ws.chain(chains[c].ops, st)) {
        if (sector_of[row] == s) blocks[s](local[row], local[st]) += chains[c].coeff * v;
      }
    }
  }
}

cd FockObservableSet::expect(const Entry& e, const FockState& state) const {
  cd sum{};
  for (std::size_t s = 0; s < state.blocks.size(); ++s) {
    sum += state.blocks[s].cwiseProduct(e.blocks[s].transpose()).sum();
  }
  return sum;
}

std::vector<double> FockObservableSet::pack(const FockState& state) const {
  std::vector<double> out;
  out.reserve(2 * ops_.size());
  for (const auto& e : ops_) {
    const cd v = expect(e, state);
    out.push_back(v.real());
    out.push_back(v.imag());
  }
  return out;
}

FockObservables FockObservableSet::unpack(double t, std::span<const double> packed) const {
  const ChainSpec& spec = oracle_->spec();
  const int N = spec.N;
  const int half = N / 2;
  const Catalogue cat(N);
  auto value = [&](std::size_t i) { return cd(packed[2 * i], packed[2 * i + 1]); };

  FockObservables o;
  o.t = t;
  const std::vector<ModeBlock> blocks = mode_blocks(spec);
  for (int p = 0; p < half; ++p) {
    ModeExpectations m;
    m.p = p + 1;
    m.phi = blocks[p].phi;
    m.partner_phi = blocks[p].partner_phi;
    m.n_p = value(cat.modes_begin + 3 * p).real();
    m.n_mp = value(cat.modes_begin + 3 * p + 1).real();
    m.kappa = value(cat.modes_begin + 3 * p + 2);
    o.modes.push_back(m);
  }

  ContractionSet& cs = o.contractions;
  cs.N = N;
  cs.wrap_sign = spec.grid == MomentumGrid::antiperiodic ? -1 : 1;
  for (int r = 0; r < N; ++r) {
    const std::size_t base = cat.contractions_begin + 4 * r;
    cs.F.push_back(value(base));
    cs.P.push_back(value(base + 1));
    cs.Q.push_back(value(base + 2));
    cs.G.push_back(value(base + 3));
  }

  const auto spin = [&](int r, int a, int b) {
    return value(cat.spin_begin + 16 * (r - 1) + 4 * a + b);
  };
  o.M = 0.5 * spin(1, Z, I).real();

  for (int r = 1; r <= half; ++r) {
    const std::size_t base = cat.strings_begin + 5 * (r - 1);
    const cd ysign = (r % 2 == 0) ? 1.0 : -1.0;
    const cd vx = 0.25 * value(base);
    const cd vy = 0.25 * ysign * value(base + 1);
    const cd vz = 0.25 * value(base + 2);
    const cd vxy = 0.25 * cd(0.0, -1.0) * (value(base + 3) + value(base + 4));
    Correlators c;
    c.Sx = vx.real();
    c.Sy = vy.real();
    c.Sz = vz.real();
    c.Sxy = vxy.real();
    c.imag_residual = std::max({std::abs(vx.imag()), std::abs(vy.imag()), std::abs(vz.imag())});
    o.corr.push_back(c);
    o.C.push_back(concurrence_x(two_site_state(o.M, c.Sx, c.Sy, c.Sz)).C);

    Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) rho += 0.25 * spin(r, a, b) * kron(pauli_matrix(a), pauli_matrix(b));
    o.two_site.push_back(rho);

    for (int k = 0; k < 3; ++k) {
      const Pauli a = Pauli(X + k);
      const cd anchored = value(cat.anchor_begin + 3 * (r - 1) + k);
      o.translation_defect = std::max(o.translation_defect, std::abs(anchored - spin(r, a, a)));
    }
  }
  return o;
}

FockObservables FockObservableSet::evaluate(const FockState& state) const {
  const std::vector<double> packed = pack(state);
  return unpack(state.t, packed);
}

FockObservables fock_expectations(const FockOracle& oracle, const FockState& state) {
  return FockObservableSet(oracle).evaluate(state);
}

std::vector<FockObservables> fock_observe(const FockOracle& oracle, std::span<const double> t_grid,
                                          double tol, RombergResult* report) {
  const FockObservableSet set(oracle);
  const double rate = oracle.spec().max_rate();
  const double dt0 = rate > 0.0 ? std::min(kBaseSubstep, 0.5 / rate) : kBaseSubstep;
  auto run = [&](int level) {
    std::vector<std::vector<double>> rows;
    for (const FockState& s : fock_evolve(oracle, t_grid, dt0 / std::ldexp(1.0, level))) {
      rows.push_back(set.pack(s));
    }
    return rows;
  };
  RombergResult result = romberg_extrapolate(run, tol);
  std::vector<FockObservables> out;
  out.reserve(t_grid.size());
  for (std::size_t g = 0; g < t_grid.size(); ++g) out.push_back(set.unpack(t_grid[g], result.values[g]));
  if (report) *report = std::move(result);
  return out;
}

}  // namespace xychain
