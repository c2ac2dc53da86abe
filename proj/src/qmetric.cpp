#include "anyoncodec/qmetric.hpp"

#include <map>
#include <random>

#include <boost/multiprecision/cpp_int.hpp>

#include "anyoncodec/errors.hpp"

namespace anyoncodec {

namespace {

using Rational = boost::multiprecision::cpp_rational;
using Key = OperatorSum::Key;

struct GaussRational {
  Rational re;
  Rational im;

  bool is_zero() const { return re == 0 && im == 0; }
  GaussRational operator+(const GaussRational& b) const { return {re + b.re, im + b.im}; }
  GaussRational operator-(const GaussRational& b) const { return {re - b.re, im - b.im}; }
  GaussRational operator*(const GaussRational& b) const { return {re * b.re - im * b.im, re * b.im + im * b.re}; }
  GaussRational inverse() const {
    const Rational norm = re * re + im * im;
    return {re / norm, -im / norm};
  }
  GaussRational conj() const { return {re, -im}; }
};

GaussRational from_dyadic(const DyadicComplex& c) {
  Rational scale(1);
  for (unsigned s = 0; s < c.shift(); ++s) scale /= 2;
  return {Rational(c.re()) * scale, Rational(c.im()) * scale};
}

GaussRational i_power(unsigned e) { return from_dyadic(DyadicComplex::i_power(e)); }

using Row = std::map<Key, GaussRational>;

Row to_row(const OperatorSum& op) {
  Row r;
  for (const auto& [k, c] : op.terms()) r.emplace(k, from_dyadic(c));
  return r;
}

void axpy(Row& v, const GaussRational& a, const Row& row) {
  for (const auto& [k, c] : row) {
    auto it = v.find(k);
    if (it == v.end()) {
      GaussRational value = a * c;
      if (!value.is_zero()) v.emplace(k, std::move(value));
    } else {
      it->second = it->second + a * c;
      if (it->second.is_zero()) v.erase(it);
    }
  }
}

Row multiply(const Row& a, const Row& b) {
  Row out;
  for (const auto& [ka, ca] : a) {
    const PauliTerm pa(ka.first, ka.second);
    for (const auto& [kb, cb] : b) {
      const PauliTerm p = pa * PauliTerm(kb.first, kb.second);
      Row single{{Key{p.x_mask(), p.z_mask()}, ca * cb * i_power(p.phase_exponent())}};
      axpy(out, GaussRational{1, 0}, single);
    }
  }
  return out;
}

Row adjoint(const Row& a) {
  Row out;
  for (const auto& [k, c] : a) {
    const PauliTerm p = PauliTerm(k.first, k.second).adjoint();
    Row single{{Key{p.x_mask(), p.z_mask()}, c.conj() * i_power(p.phase_exponent())}};
    axpy(out, GaussRational{1, 0}, single);
  }
  return out;
}

}  // namespace

struct ExactSpan::Impl {
  std::size_t qubits;
  // Each row has coefficient 1 at its pivot, its smallest key.
  std::map<Key, Row> by_pivot;
  std::vector<Key> order;

  void reduce(Row& v) const {
    auto it = v.begin();
    while (it != v.end()) {
      auto p = by_pivot.find(it->first);
      if (p == by_pivot.end()) {
        ++it;
        continue;
      }
      const Key cursor = it->first;
      const GaussRational coef = it->second;
      for (const auto& [k, c] : p->second) {
        auto jt = v.find(k);
        const GaussRational delta = coef * c;
        if (jt == v.end()) {
          v.emplace(k, GaussRational{-delta.re, -delta.im});
        } else {
          jt->second = jt->second - delta;
          if (jt->second.is_zero()) v.erase(jt);
        }
      }
      it = v.upper_bound(cursor);
    }
  }

  bool insert(Row v) {
    reduce(v);
    if (v.empty()) return false;
    const GaussRational inv = v.begin()->second.inverse();
    for (auto& [k, c] : v) c = c * inv;
    const Key pivot = v.begin()->first;
    order.push_back(pivot);
    by_pivot.emplace(pivot, std::move(v));
    return true;
  }

  bool contains(Row v) const {
    reduce(v);
    return v.empty();
  }
};

ExactSpan::ExactSpan(std::size_t qubits) : impl_(std::make_unique<Impl>(Impl{qubits, {}, {}})) {}
ExactSpan::ExactSpan(const ExactSpan& other) : impl_(std::make_unique<Impl>(*other.impl_)) {}
ExactSpan& ExactSpan::operator=(const ExactSpan& other) {
  if (this != &other) impl_ = std::make_unique<Impl>(*other.impl_);
  return *this;
}
ExactSpan::ExactSpan(ExactSpan&&) noexcept = default;
ExactSpan& ExactSpan::operator=(ExactSpan&&) noexcept = default;
ExactSpan::~ExactSpan() = default;

std::size_t ExactSpan::qubits() const { return impl_->qubits; }
std::size_t ExactSpan::dimension() const { return impl_->order.size(); }

bool ExactSpan::insert(const OperatorSum& op) {
  if (op.qubits() != impl_->qubits) throw InputError("ExactSpan: qubit count mismatch");
  return impl_->insert(to_row(op));
}

bool ExactSpan::contains(const OperatorSum& op) const {
  if (op.qubits() != impl_->qubits) throw InputError("ExactSpan: qubit count mismatch");
  return impl_->contains(to_row(op));
}

std::vector<DenseOperator<double>> ExactSpan::dense_basis(std::size_t max_qubits) const {
  detail::check_dense_cap(impl_->qubits, max_qubits);
  const Eigen::Index dim = Eigen::Index{1} << impl_->qubits;
  std::vector<DenseOperator<double>> out;
  for (const Key& pivot : impl_->order) {
    DenseOperator<double> m = DenseOperator<double>::Zero(dim, dim);
    for (const auto& [k, c] : impl_->by_pivot.at(pivot)) {
      detail::accumulate_pauli<double>(m, detail::mask_index(k.first), detail::mask_index(k.second),
                                       {c.re.convert_to<double>(), c.im.convert_to<double>()});
    }
    out.push_back(std::move(m));
  }
  return out;
}

GeneratingSet gen_quantum_hamming(std::size_t qubits) {
  if (qubits < 1) throw InputError("quantum Hamming metric needs at least one qubit");
  GeneratingSet g{"quantum-hamming", qubits, qubits, {}};
  g.generators.push_back(OperatorSum::identity(qubits));
  for (std::size_t q = 0; q < qubits; ++q) {
    for (char letter : {'X', 'Y', 'Z'}) g.generators.emplace_back(PauliTerm::single(qubits, q, letter));
  }
  return g;
}

GeneratingSet gen_full_clifford(std::size_t modes) {
  if (modes < 2) throw InputError("full Clifford metric needs at least 2 modes");
  const std::size_t qubits = qubits_for_modes(modes);
  GeneratingSet g{"full-clifford", modes, qubits, {}};
  g.generators.push_back(OperatorSum::identity(qubits));
  for (std::size_t i = 1; i <= modes; ++i) g.generators.emplace_back(majorana(i, modes));
  return g;
}

GeneratingSet gen_spinorial(std::size_t modes) {
  if (modes < 3) throw InputError("spinorial metric needs at least 3 modes");
  const std::size_t qubits = qubits_for_modes(modes);
  GeneratingSet g{"spinorial", modes, qubits, {}};
  g.generators.push_back(OperatorSum::identity(qubits));
  for (std::size_t k = 0; k < modes; ++k) {
    for (std::size_t l = k + 1; l < modes; ++l) {
      BitVector x(modes);
      x.set(k);
      x.set(l);
      g.generators.emplace_back(gamma_of(x));
    }
  }
  return g;
}

GeneratingSet gen_semispinorial(std::size_t modes, Chirality block) {
  if (modes < 4 || modes % 2 != 0) throw InputError("semispinorial metric needs an even mode count >= 4");
  const std::size_t qubits = qubits_for_modes(modes) - 1;
  GeneratingSet g{block == Chirality::Plus ? "semispinorial" : "semispinorial-minus", modes, qubits, {}};
  g.generators.push_back(OperatorSum::identity(qubits));
  for (std::size_t k = 0; k < modes; ++k) {
    for (std::size_t l = k + 1; l < modes; ++l) {
      BitVector x(modes);
      x.set(k);
      x.set(l);
      g.generators.emplace_back(compress_to_chirality(gamma_of(x), modes, block));
    }
  }
  return g;
}

namespace {

// Levels E_0..E_{t_max}, continuing past t_max until saturation when
// `until_saturated` is set. A level only multiplies the operators that were
// new at the previous level, since E_{t+1} = E_t + (E_t / E_{t-1}) E.
std::vector<ExactSpan> build_levels(const GeneratingSet& gen, std::size_t t_max, bool until_saturated) {
  if (gen.qubits > kMaxMetricQubits) {
    throw CapacityError("filtration on " + std::to_string(gen.qubits) + " qubits exceeds the cap of " +
                        std::to_string(kMaxMetricQubits));
  }
  std::vector<ExactSpan> levels;
  ExactSpan span(gen.qubits);
  span.insert(OperatorSum::identity(gen.qubits));
  levels.push_back(span);

  std::vector<OperatorSum> fresh;
  for (const auto& g : gen.generators) {
    if (span.insert(g)) fresh.push_back(g);
  }
  levels.push_back(span);

  while (levels.size() <= t_max || (until_saturated && !fresh.empty())) {
    std::vector<OperatorSum> next;
    for (const auto& a : fresh) {
      for (const auto& g : gen.generators) {
        OperatorSum product = a * g;
        if (span.insert(product)) next.push_back(std::move(product));
      }
    }
    fresh = std::move(next);
    levels.push_back(span);
  }
  return levels;
}

const std::map<Key, Row>& rows_of(const ExactSpan& span) { return span.impl().by_pivot; }

}  // namespace

std::vector<ExactSpan> filtration_levels(const GeneratingSet& gen, std::size_t t_max) {
  auto levels = build_levels(gen, t_max, false);
  levels.resize(t_max + 1, levels.back());
  return levels;
}

FiltrationReport filtration(const GeneratingSet& gen, std::size_t t_max) {
  const auto levels = build_levels(gen, t_max, true);
  FiltrationReport report;
  report.label = gen.label;
  report.ambient_dim = gen.ambient_dim();
  for (std::size_t t = 0; t <= t_max; ++t) {
    report.dims.push_back(levels[std::min(t, levels.size() - 1)].dimension());
  }
  for (std::size_t t = 0; t + 1 < levels.size(); ++t) {
    if (levels[t].dimension() == levels[t + 1].dimension()) {
      report.saturation_level = t;
      break;
    }
  }
  return report;
}

AxiomReport check_axioms(const GeneratingSet& gen, std::size_t t_max, std::size_t samples, std::uint64_t seed) {
  const auto levels = filtration_levels(gen, t_max);
  AxiomReport report;
  report.identity_level = levels[0].dimension() == 1 && levels[0].contains(OperatorSum::identity(gen.qubits));

  report.adjoint_closed = true;
  for (const auto& level : levels) {
    for (const auto& [pivot, row] : rows_of(level)) {
      Row adj = adjoint(row);
      if (!level.impl().contains(std::move(adj))) report.adjoint_closed = false;
    }
  }

  report.generators_adjoint_closed = true;
  for (const auto& g : gen.generators) {
    if (!levels[1].contains(g.adjoint())) report.generators_adjoint_closed = false;
  }

  report.products_nested = true;
  std::mt19937_64 rng(seed);
  std::vector<std::vector<const Row*>> level_rows;
  for (const auto& level : levels) {
    std::vector<const Row*> rows;
    for (const auto& [pivot, row] : rows_of(level)) rows.push_back(&row);
    level_rows.push_back(std::move(rows));
  }
  for (std::size_t i = 0; i < samples && t_max >= 1; ++i) {
    const std::size_t s = rng() % (t_max + 1);
    const std::size_t t = rng() % (t_max - s + 1);
    const auto& ra = level_rows[s];
    const auto& rb = level_rows[t];
    const Row product = multiply(*ra[rng() % ra.size()], *rb[rng() % rb.size()]);
    if (!levels[s + t].impl().contains(product)) report.products_nested = false;
  }
  return report;
}

IsometryResult isometry_check(const GeneratingSet& gen, const DenseOperator<double>& unitary, std::size_t t_max,
                              double tolerance) {
  const Eigen::Index dim = Eigen::Index{1} << gen.qubits;
  if (unitary.rows() != dim || unitary.cols() != dim) {
    throw InputError("isometry check: unitary is " + std::to_string(unitary.rows()) + "x" +
                     std::to_string(unitary.cols()) + ", expected " + std::to_string(dim));
  }
  const auto levels = filtration_levels(gen, t_max);
  IsometryResult result;
  for (std::size_t t = 1; t <= t_max; ++t) {
    const auto basis = levels[t].dense_basis();
    DenseOperator<double> stacked(dim * dim, static_cast<Eigen::Index>(basis.size()));
    for (std::size_t k = 0; k < basis.size(); ++k) stacked.col(static_cast<Eigen::Index>(k)) = basis[k].reshaped();
    Eigen::HouseholderQR<DenseOperator<double>> qr(stacked);
    const DenseOperator<double> q =
        qr.householderQ() * DenseOperator<double>::Identity(stacked.rows(), stacked.cols());
    for (const auto& b : basis) {
      const DenseOperator<double> image = unitary * b * unitary.adjoint();
      const Eigen::VectorXcd v = image.reshaped();
      const Eigen::VectorXcd residual = v - q * (q.adjoint() * v);
      if (residual.norm() > tolerance * std::max(1.0, v.norm())) {
        result.is_isometry = false;
        result.failing_level = t;
        return result;
      }
    }
  }
  return result;
}

}  // namespace anyoncodec
