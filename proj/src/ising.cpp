#include "cascor/ising.hpp"

#include "cascor/error.hpp"
#include "cascor/parallel.hpp"
#include "cascor/penalty.hpp"
#include "cascor/random.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <tuple>

namespace cascor {

template <typename Tag>
SignVector<Tag>::SignVector(std::vector<std::int8_t> values) : values_(std::move(values)) {
  for (std::int8_t v : values_)
    if (v != 1 && v != -1)
      throw InputError("sign vector entry " + std::to_string(v) + " is not +1 or -1");
}

template class SignVector<SpinTag>;
template class SignVector<GaugeTag>;

//===----------------------------------------------------------------------===//
// IsingModel
//===----------------------------------------------------------------------===//

IsingModel::IsingModel(std::vector<double> h, std::vector<Coupling> couplings) : h_(std::move(h)) {
  const std::size_t n = h_.size();
  for (Coupling &c : couplings) {
    if (c.i == c.j)
      throw InputError("self-coupling on qubit " + std::to_string(c.i));
    if (c.i >= n || c.j >= n)
      throw InputError("coupling (" + std::to_string(c.i) + ", " + std::to_string(c.j) +
                       ") outside " + std::to_string(n) + " qubits");
    if (c.i > c.j)
      std::swap(c.i, c.j);
  }
  std::sort(couplings.begin(), couplings.end(), [](const Coupling &a, const Coupling &b) {
    return a.i != b.i ? a.i < b.i : a.j < b.j;
  });
  for (const Coupling &c : couplings) {
    if (!couplings_.empty() && couplings_.back().i == c.i && couplings_.back().j == c.j)
      couplings_.back().value += c.value;
    else
      couplings_.push_back(c);
  }
  std::erase_if(couplings_, [](const Coupling &c) { return c.value == 0.0; });
}

double IsingModel::coupling(std::uint32_t i, std::uint32_t j) const {
  if (i > j)
    std::swap(i, j);
  auto it = std::lower_bound(couplings_.begin(), couplings_.end(), std::pair{i, j},
                             [](const Coupling &c, const std::pair<std::uint32_t, std::uint32_t> &key) {
                               return c.i != key.first ? c.i < key.first : c.j < key.second;
                             });
  return it != couplings_.end() && it->i == i && it->j == j ? it->value : 0.0;
}

bool IsingModel::integral() const {
  auto whole = [](double x) { return std::isfinite(x) && std::trunc(x) == x; };
  return std::all_of(h_.begin(), h_.end(), whole) &&
         std::all_of(couplings_.begin(), couplings_.end(),
                     [&](const Coupling &c) { return whole(c.value); });
}

Adjacency::Adjacency(const IsingModel &model) {
  const std::size_t n = model.num_qubits();
  std::vector<std::size_t> degree(n, 0);
  for (const Coupling &c : model.couplings()) {
    ++degree[c.i];
    ++degree[c.j];
  }
  offsets.assign(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i)
    offsets[i + 1] = offsets[i] + degree[i];
  neighbor.resize(offsets[n]);
  weight.resize(offsets[n]);
  std::vector<std::size_t> fill(offsets.begin(), offsets.end() - 1);
  for (const Coupling &c : model.couplings()) {
    neighbor[fill[c.i]] = c.j;
    weight[fill[c.i]++] = c.value;
    neighbor[fill[c.j]] = c.i;
    weight[fill[c.j]++] = c.value;
  }
}

//===----------------------------------------------------------------------===//
// Energy and gauges
//===----------------------------------------------------------------------===//

namespace {

void require_size(std::size_t expected, std::size_t got, const char *what) {
  if (expected != got)
    throw InputError(std::string(what) + " has length " + std::to_string(got) + ", expected " +
                     std::to_string(expected));
}

} // namespace

double energy(const IsingModel &model, const SpinState &s) {
  require_size(model.num_qubits(), s.size(), "spin state");
  double e = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i)
    e += model.h()[i] * s[i];
  for (const Coupling &c : model.couplings())
    e += c.value * s[c.i] * s[c.j];
  return e;
}

IsingModel apply_gauge(const IsingModel &model, const Gauge &g) {
  require_size(model.num_qubits(), g.size(), "gauge");
  std::vector<double> h(model.h());
  for (std::size_t i = 0; i < h.size(); ++i)
    h[i] *= g[i];
  std::vector<Coupling> couplings(model.couplings());
  for (Coupling &c : couplings)
    c.value *= g[c.i] * g[c.j];
  return IsingModel(std::move(h), std::move(couplings));
}

SpinState ungauge_sample(const SpinState &s, const Gauge &g) {
  require_size(g.size(), s.size(), "spin state");
  std::vector<std::int8_t> out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i)
    out[i] = static_cast<std::int8_t>(s[i] * g[i]);
  return SpinState(std::move(out));
}

Gauge random_gauge(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<std::int8_t> signs(n);
  for (auto &sign : signs)
    sign = rng.coin() ? 1 : -1;
  return Gauge(std::move(signs));
}

//===----------------------------------------------------------------------===//
// Exhaustive ground-state scan
//===----------------------------------------------------------------------===//

namespace {

// Bit q of a mask set means spin q is +1.
SpinState state_of_mask(std::uint64_t mask, std::size_t n) {
  std::vector<std::int8_t> spins(n);
  for (std::size_t q = 0; q < n; ++q)
    spins[q] = (mask >> q) & 1u ? 1 : -1;
  return SpinState(std::move(spins));
}

struct ChunkResult {
  double best = std::numeric_limits<double>::infinity();
  std::vector<std::uint64_t> masks;
};

} // namespace

GroundStates enumerate_ground_states(const IsingModel &model, std::size_t limit, unsigned threads) {
  const std::size_t n = model.num_qubits();
  if (n > limit)
    throw LimitError("exhaustive scan of " + std::to_string(n) + " qubits exceeds the limit of " +
                     std::to_string(limit));
  if (n > 62)
    throw LimitError("exhaustive scan is limited to 62 qubits");

  // Non-integer models keep near-ties during the incremental scan; the final
  // set is filtered on exactly recomputed energies.
  const bool exact = model.integral();
  auto tolerance = [&](double e) { return exact ? 0.0 : 1e-9 * (1.0 + std::abs(e)); };

  const Adjacency adj(model);
  const std::size_t highBits = n > 12 ? std::min<std::size_t>(6, n - 6) : 0;
  const std::size_t lowBits = n - highBits;
  const std::size_t chunks = std::size_t{1} << highBits;
  std::vector<ChunkResult> results(chunks);

  parallel_for(chunks, threads, [&](std::size_t chunk) {
    // Low bits start at zero (spins -1); high bits are fixed by the chunk.
    std::vector<int> spin(n, -1);
    for (std::size_t b = 0; b < highBits; ++b)
      if ((chunk >> b) & 1u)
        spin[lowBits + b] = 1;
    std::vector<double> field(model.h());
    double e = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      e += model.h()[i] * spin[i];
    for (const Coupling &c : model.couplings()) {
      e += c.value * spin[c.i] * spin[c.j];
      field[c.i] += c.value * spin[c.j];
      field[c.j] += c.value * spin[c.i];
    }
    std::uint64_t mask = static_cast<std::uint64_t>(chunk) << lowBits;

    ChunkResult &out = results[chunk];
    auto consider = [&] {
      if (e < out.best - tolerance(out.best)) {
        out.best = e;
        out.masks.clear();
      }
      if (e <= out.best + tolerance(out.best))
        out.masks.push_back(mask);
    };
    consider();

    const std::uint64_t steps = std::uint64_t{1} << lowBits;
    for (std::uint64_t t = 1; t < steps; ++t) {
      const std::size_t q = static_cast<std::size_t>(std::countr_zero(t));
      e -= 2.0 * spin[q] * field[q];
      spin[q] = -spin[q];
      mask ^= std::uint64_t{1} << q;
      const double twice = 2.0 * spin[q];
      for (std::size_t k = adj.offsets[q]; k < adj.offsets[q + 1]; ++k)
        field[adj.neighbor[k]] += twice * adj.weight[k];
      consider();
    }
  });

  double best = std::numeric_limits<double>::infinity();
  for (const ChunkResult &r : results)
    best = std::min(best, r.best);

  GroundStates ground;
  std::vector<std::pair<double, SpinState>> candidates;
  for (const ChunkResult &r : results) {
    if (r.best > best + tolerance(best))
      continue;
    for (std::uint64_t mask : r.masks) {
      SpinState s = state_of_mask(mask, n);
      const double e = exact ? r.best : energy(model, s);
      candidates.emplace_back(e, std::move(s));
    }
  }
  ground.min_energy = std::numeric_limits<double>::infinity();
  for (const auto &candidate : candidates)
    ground.min_energy = std::min(ground.min_energy, candidate.first);
  for (auto &candidate : candidates)
    if (candidate.first == ground.min_energy)
      ground.states.push_back(std::move(candidate.second));
  std::sort(ground.states.begin(), ground.states.end());
  return ground;
}

//===----------------------------------------------------------------------===//
// Clause-wise ancilla minimization
//===----------------------------------------------------------------------===//

double min_energy_over_ancillas(const IsingModel &model, const PenaltyLayout &layout,
                                const Assignment &a) {
  const std::size_t n = model.num_qubits();
  require_size(layout.num_qubits, n, "model");

  // owner[q]: -1 for a variable qubit, c >= 0 for an ancilla of clause c.
  constexpr long kUnowned = -2;
  constexpr long kVariable = -1;
  std::vector<long> owner(n, kUnowned);
  std::vector<int> spin(n, 0);
  for (const auto &[var, qubit] : layout.var_to_qubit) {
    if (var == 0 || var > a.size())
      throw InputError("assignment does not cover variable " + std::to_string(var));
    owner[qubit] = kVariable;
    spin[qubit] = spin_of(a.value(var));
  }
  for (std::size_t c = 0; c < layout.clause_ancillas.size(); ++c) {
    if (layout.clause_ancillas[c].size() > 24)
      throw LimitError("clause " + std::to_string(c) + " has more than 24 ancillas");
    for (std::uint32_t q : layout.clause_ancillas[c])
      owner[q] = static_cast<long>(c);
  }
  for (std::size_t q = 0; q < n; ++q)
    if (owner[q] == kUnowned)
      throw InputError("qubit " + std::to_string(q) + " is neither a variable nor an ancilla");

  // Per clause: ancilla-local fields from clamped variables plus the
  // ancilla-ancilla couplings inside the clause.
  struct Local {
    std::vector<double> field;
    std::vector<std::tuple<std::size_t, std::size_t, double>> internal;
  };
  std::vector<Local> locals(layout.clause_ancillas.size());
  std::vector<std::size_t> slot(n, 0);
  for (std::size_t c = 0; c < locals.size(); ++c) {
    const auto &ancillas = layout.clause_ancillas[c];
    locals[c].field.resize(ancillas.size());
    for (std::size_t k = 0; k < ancillas.size(); ++k) {
      slot[ancillas[k]] = k;
      locals[c].field[k] = model.h()[ancillas[k]];
    }
  }

  double fixed = 0.0;
  for (std::size_t q = 0; q < n; ++q)
    if (owner[q] == kVariable)
      fixed += model.h()[q] * spin[q];
  for (const Coupling &c : model.couplings()) {
    const long oi = owner[c.i];
    const long oj = owner[c.j];
    if (oi == kVariable && oj == kVariable) {
      fixed += c.value * spin[c.i] * spin[c.j];
    } else if (oi == kVariable) {
      locals[oj].field[slot[c.j]] += c.value * spin[c.i];
    } else if (oj == kVariable) {
      locals[oi].field[slot[c.i]] += c.value * spin[c.j];
    } else if (oi == oj) {
      locals[oi].internal.emplace_back(slot[c.i], slot[c.j], c.value);
    } else {
      throw InputError("ancillas of clauses " + std::to_string(oi) + " and " + std::to_string(oj) +
                       " are coupled");
    }
  }

  double total = fixed;
  for (const Local &local : locals) {
    const std::size_t m = local.field.size();
    if (m == 0)
      continue;
    double best = std::numeric_limits<double>::infinity();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
      auto s = [&](std::size_t k) { return (mask >> k) & 1u ? 1.0 : -1.0; };
      double e = 0.0;
      for (std::size_t k = 0; k < m; ++k)
        e += local.field[k] * s(k);
      for (const auto &[i, j, w] : local.internal)
        e += w * s(i) * s(j);
      best = std::min(best, e);
    }
    total += best;
  }
  return total;
}

} // namespace cascor
