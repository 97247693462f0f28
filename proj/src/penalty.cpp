#include "cascor/penalty.hpp"

#include "cascor/error.hpp"
#include "cascor/random.hpp"

#include <memory>

namespace cascor {

//===----------------------------------------------------------------------===//
// TermSet
//===----------------------------------------------------------------------===//

void TermSet::add_linear(std::uint32_t q, double c) {
  double &slot = linear_[q];
  slot += c;
  if (slot == 0.0)
    linear_.erase(q);
}

void TermSet::add_quadratic(std::uint32_t a, std::uint32_t b, double c) {
  if (a == b)
    throw InputError("quadratic term on a single qubit " + std::to_string(a));
  const Pair key = a < b ? Pair{a, b} : Pair{b, a};
  double &slot = quadratic_[key];
  slot += c;
  if (slot == 0.0)
    quadratic_.erase(key);
}

void TermSet::add(const TermSet &other) {
  for (const auto &[q, c] : other.linear_)
    add_linear(q, c);
  for (const auto &[pair, c] : other.quadratic_)
    add_quadratic(pair.first, pair.second, c);
}

double TermSet::linear(std::uint32_t q) const {
  auto it = linear_.find(q);
  return it == linear_.end() ? 0.0 : it->second;
}

double TermSet::quadratic(std::uint32_t a, std::uint32_t b) const {
  auto it = quadratic_.find(a < b ? Pair{a, b} : Pair{b, a});
  return it == quadratic_.end() ? 0.0 : it->second;
}

std::size_t TermSet::span() const {
  std::size_t n = 0;
  for (const auto &entry : linear_)
    n = std::max<std::size_t>(n, entry.first + 1);
  for (const auto &entry : quadratic_)
    n = std::max<std::size_t>(n, entry.first.second + 1);
  return n;
}

IsingModel TermSet::to_model(std::size_t numQubits) const {
  if (span() > numQubits)
    throw InputError("term set references qubit " + std::to_string(span() - 1) +
                     " beyond model size " + std::to_string(numQubits));
  std::vector<double> h(numQubits, 0.0);
  for (const auto &[q, c] : linear_)
    h[q] = c;
  std::vector<Coupling> couplings;
  couplings.reserve(quadratic_.size());
  for (const auto &[pair, c] : quadratic_)
    couplings.push_back(Coupling{pair.first, pair.second, c});
  return IsingModel(std::move(h), std::move(couplings));
}

//===----------------------------------------------------------------------===//
// Policies and allocation
//===----------------------------------------------------------------------===//

ConstructionPolicy ConstructionPolicy::parse(const std::string &name,
                                             std::optional<std::uint64_t> seed) {
  if (name == "chain")
    return chain();
  if (name == "balanced")
    return balanced();
  if (name == "random" || name == "seeded_random") {
    if (!seed)
      throw InputError("policy 'random' needs a seed");
    return seeded_random(*seed);
  }
  throw InputError("unknown construction policy '" + name + "'");
}

std::string ConstructionPolicy::name() const {
  switch (kind_) {
  case Kind::Chain:
    return "chain";
  case Kind::Balanced:
    return "balanced";
  case Kind::SeededRandom:
    return "random";
  }
  return "chain";
}

std::uint32_t QubitAllocator::fresh() {
  if (capacity_ && next_ >= *capacity_)
    throw LimitError("qubit allocator exhausted at " + std::to_string(*capacity_) + " qubits");
  return next_++;
}

//===----------------------------------------------------------------------===//
// Gadgets
//===----------------------------------------------------------------------===//

double clause_ground_energy(std::size_t k) {
  if (k <= 2)
    return -1.0;
  return -1.0 - 3.0 * static_cast<double>(k - 2);
}

// Negating a literal flips every coefficient that touches its qubit, i.e. a
// gauge on that qubit restricted to this gadget.

TermSet build_h2(std::uint32_t q1, std::uint32_t q2, bool neg1, bool neg2) {
  if (q1 == q2)
    throw InputError("H2 needs two distinct qubits");
  const double s1 = neg1 ? -1.0 : 1.0;
  const double s2 = neg2 ? -1.0 : 1.0;
  TermSet terms;
  terms.add_linear(q1, -s1);
  terms.add_linear(q2, -s2);
  terms.add_quadratic(q1, q2, s1 * s2);
  return terms;
}

TermSet build_h_or(std::uint32_t q1, std::uint32_t q2, std::uint32_t qz, bool neg1, bool neg2) {
  if (q1 == q2 || q1 == qz || q2 == qz)
    throw InputError("OR gadget needs three distinct qubits");
  const double s1 = neg1 ? -1.0 : 1.0;
  const double s2 = neg2 ? -1.0 : 1.0;
  TermSet terms;
  terms.add_linear(q1, s1);
  terms.add_linear(q2, s2);
  terms.add_linear(qz, -2.0);
  terms.add_quadratic(q1, q2, s1 * s2);
  terms.add_quadratic(q1, qz, -2.0 * s1);
  terms.add_quadratic(q2, qz, -2.0 * s2);
  return terms;
}

namespace {

// Shape of a clause penalty: a full binary tree whose leaves are the literal
// slots (assigned left to right) and whose inner nodes are ORs. The root is
// H2 over its two children; every other inner node is an OR-with-output
// whose output qubit is an ancilla.
struct OrTree {
  std::unique_ptr<OrTree> left;
  std::unique_ptr<OrTree> right;

  bool leaf() const { return !left; }
};

std::unique_ptr<OrTree> make_leaf() { return std::make_unique<OrTree>(); }

std::unique_ptr<OrTree> make_node(std::unique_ptr<OrTree> l, std::unique_ptr<OrTree> r) {
  auto node = std::make_unique<OrTree>();
  node->left = std::move(l);
  node->right = std::move(r);
  return node;
}

// ((x1 v x2) v x3) v ... : each new OR block is cascaded into the slot the
// previous block introduced.
std::unique_ptr<OrTree> chain_tree(std::size_t k) {
  auto tree = make_node(make_leaf(), make_leaf());
  for (std::size_t i = 2; i < k; ++i)
    tree = make_node(std::move(tree), make_leaf());
  return tree;
}

std::unique_ptr<OrTree> balanced_tree(std::size_t k) {
  if (k == 1)
    return make_leaf();
  const std::size_t half = (k + 1) / 2;
  return make_node(balanced_tree(half), balanced_tree(k - half));
}

void collect_leaves(OrTree &node, std::vector<OrTree *> &out) {
  if (node.leaf()) {
    out.push_back(&node);
    return;
  }
  collect_leaves(*node.left, out);
  collect_leaves(*node.right, out);
}

// Starts from H2 and repeatedly expands a uniformly chosen variable slot.
std::unique_ptr<OrTree> random_tree(std::size_t k, std::uint64_t seed) {
  Rng rng(seed);
  auto tree = make_node(make_leaf(), make_leaf());
  for (std::size_t i = 2; i < k; ++i) {
    std::vector<OrTree *> leaves;
    collect_leaves(*tree, leaves);
    OrTree *slot = leaves[rng.below(leaves.size())];
    slot->left = make_leaf();
    slot->right = make_leaf();
  }
  return tree;
}

struct Emitter {
  const Clause &clause;
  const std::vector<std::uint32_t> &literalQubits;
  QubitAllocator &alloc;
  ClausePenalty &out;
  std::size_t nextLiteral = 0;

  struct Endpoint {
    std::uint32_t qubit;
    bool negated;
  };

  // Children are emitted first, so ancillas are numbered bottom-up.
  Endpoint emit(const OrTree &node, bool root) {
    if (node.leaf()) {
      const std::size_t pos = nextLiteral++;
      return Endpoint{literalQubits[pos], clause[pos].negated};
    }
    const Endpoint a = emit(*node.left, false);
    const Endpoint b = emit(*node.right, false);
    if (root) {
      out.terms.add(build_h2(a.qubit, b.qubit, a.negated, b.negated));
      return Endpoint{0, false};
    }
    const std::uint32_t z = alloc.fresh();
    out.ancilla_qubits.push_back(z);
    out.terms.add(build_h_or(a.qubit, b.qubit, z, a.negated, b.negated));
    return Endpoint{z, false};
  }
};

} // namespace

ClausePenalty build_clause_penalty(const Clause &clause, QubitAllocator &alloc,
                                   const VariableMap &varMap, const ConstructionPolicy &policy) {
  const std::size_t k = clause.size();
  if (k == 0)
    throw InputError("cannot build a penalty for an empty clause");

  ClausePenalty penalty;
  penalty.variable_qubits.reserve(k);
  for (const Literal &lit : clause.literals()) {
    auto it = varMap.find(lit.var);
    if (it == varMap.end())
      throw InputError("variable " + std::to_string(lit.var) + " has no qubit");
    penalty.variable_qubits.push_back(it->second);
  }
  penalty.ground_energy = clause_ground_energy(k);

  if (k == 1) {
    penalty.terms.add_linear(penalty.variable_qubits[0], clause[0].negated ? 1.0 : -1.0);
    return penalty;
  }

  std::unique_ptr<OrTree> tree;
  switch (policy.kind()) {
  case ConstructionPolicy::Kind::Chain:
    tree = chain_tree(k);
    break;
  case ConstructionPolicy::Kind::Balanced:
    tree = balanced_tree(k);
    break;
  case ConstructionPolicy::Kind::SeededRandom:
    tree = random_tree(k, policy.seed().value_or(0));
    break;
  }

  Emitter emitter{clause, penalty.variable_qubits, alloc, penalty};
  emitter.emit(*tree, true);
  return penalty;
}

CompiledModel compile_cnf(const Cnf &cnf, const ConstructionPolicy &policy) {
  if (cnf.clauses().empty())
    throw InputError("cannot compile a formula with no clauses");

  CompiledModel compiled;
  PenaltyLayout &layout = compiled.layout;
  layout.policy = policy;

  QubitAllocator alloc;
  for (std::uint32_t var : cnf.occurring_vars())
    layout.var_to_qubit.emplace(var, alloc.fresh());

  TermSet total;
  const auto &clauses = cnf.clauses();
  for (std::size_t c = 0; c < clauses.size(); ++c) {
    const ConstructionPolicy clausePolicy =
        policy.kind() == ConstructionPolicy::Kind::SeededRandom
            ? ConstructionPolicy::seeded_random(derive_seed(policy.seed().value_or(0), c))
            : policy;
    ClausePenalty penalty = build_clause_penalty(clauses[c], alloc, layout.var_to_qubit, clausePolicy);
    total.add(penalty.terms);
    layout.clause_ancillas.push_back(penalty.ancilla_qubits);
    layout.clause_ground_energies.push_back(penalty.ground_energy);
    layout.ground_bound += penalty.ground_energy;
    compiled.penalties.push_back(std::move(penalty));
  }
  layout.num_qubits = alloc.next();
  compiled.model = total.to_model(layout.num_qubits);
  return compiled;
}

} // namespace cascor
