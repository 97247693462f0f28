#include "cascor/allsat.hpp"

#include "cascor/error.hpp"

#include <unordered_set>

namespace cascor {

namespace {

using Lit = std::uint32_t; // 2 * (var - 1) + negated

constexpr Lit negate(Lit l) { return l ^ 1u; }
constexpr std::uint32_t var_of(Lit l) { return l >> 1; }
constexpr bool is_negative(Lit l) { return (l & 1u) != 0; }

Lit encode(const Literal &lit) { return 2 * (lit.var - 1) + (lit.negated ? 1u : 0u); }

enum class Value : std::uint8_t { Unassigned, True, False };

struct AssignmentHash {
  std::size_t operator()(const Assignment &a) const { return std::hash<std::vector<bool>>{}(a.bits()); }
};

/// DPLL over the input clauses with chronological backtracking that resumes
/// after every model. Clause state is tracked with true/false literal
/// counters, which also give the per-literal occurrence counts in
/// unsatisfied clauses used for pure literals and branching.
///
/// A pure literal cannot be eliminated when enumerating (the opposite
/// polarity may still extend to further models), so it is taken as the first
/// branch of a choice point whose complement is explored on backtrack.
///
/// Blocking clauses span all n variables, so one can only be falsified by a
/// complete assignment; they are kept as a set of blocked models and checked
/// whenever the assignment becomes complete.
class Enumerator {
public:
  explicit Enumerator(const Cnf &cnf)
      : numVars_(cnf.num_vars()), value_(numVars_, Value::Unassigned),
        occurs_(2 * static_cast<std::size_t>(numVars_)),
        activeOcc_(2 * static_cast<std::size_t>(numVars_), 0) {
    for (const Clause &clause : cnf.clauses()) {
      const std::size_t c = clauses_.size();
      std::vector<Lit> lits;
      lits.reserve(clause.size());
      for (const Literal &lit : clause.literals()) {
        lits.push_back(encode(lit));
        occurs_[lits.back()].push_back(c);
        ++activeOcc_[lits.back()];
      }
      if (lits.size() == 1)
        pending_.push_back(c);
      clauses_.push_back(std::move(lits));
    }
    numTrue_.assign(clauses_.size(), 0);
    numFalse_.assign(clauses_.size(), 0);
    unsatisfied_ = clauses_.size();
    conflict_ = !propagate();
  }

  enum class Outcome { Model, Exhausted, Timeout };

  /// Advances the search to the next model not yet blocked.
  template <typename Expired>
  Outcome next(Assignment &model, Expired &&expired) {
    std::uint64_t steps = 0;
    for (;;) {
      if ((++steps & 255u) == 0 && expired())
        return Outcome::Timeout;

      if (conflict_) {
        if (!backtrack())
          return Outcome::Exhausted;
        continue;
      }

      if (trail_.size() == numVars_) {
        model = current_assignment();
        if (blocked_.count(model)) {
          conflict_ = true;
          continue;
        }
        return Outcome::Model;
      }

      Lit choice;
      if (auto pure = find_pure_literal())
        choice = *pure;
      else
        choice = choose_branch();
      choices_.push_back(Choice{trail_.size(), choice, false});
      conflict_ = !assign(choice) || !propagate();
    }
  }

  /// Adds the blocking clause of `model` (the current complete assignment);
  /// it is falsified, so the next call to next() backtracks first.
  void block(const Assignment &model) {
    blocked_.insert(model);
    conflict_ = true;
  }

private:
  struct Choice {
    std::size_t trailPos;
    Lit lit;
    bool flipped;
  };

  Assignment current_assignment() const {
    Assignment a(numVars_);
    for (std::uint32_t v = 0; v < numVars_; ++v)
      a.set(v + 1, value_[v] == Value::True);
    return a;
  }

  /// Flips the deepest choice that still has an unexplored branch.
  bool backtrack() {
    while (!choices_.empty() && choices_.back().flipped)
      choices_.pop_back();
    if (choices_.empty())
      return false;
    Choice &top = choices_.back();
    undo_to(top.trailPos);
    top.flipped = true;
    top.lit = negate(top.lit);
    conflict_ = !assign(top.lit) || !propagate();
    return true;
  }

  /// Makes `l` true. Returns false if an input clause became falsified.
  bool assign(Lit l) {
    value_[var_of(l)] = is_negative(l) ? Value::False : Value::True;
    trail_.push_back(l);
    for (std::size_t c : occurs_[l]) {
      if (numTrue_[c]++ == 0) {
        --unsatisfied_;
        for (Lit other : clauses_[c])
          --activeOcc_[other];
      }
    }
    bool ok = true;
    for (std::size_t c : occurs_[negate(l)]) {
      const std::uint32_t falses = ++numFalse_[c];
      if (numTrue_[c] != 0)
        continue;
      if (falses == clauses_[c].size())
        ok = false;
      else if (falses + 1 == clauses_[c].size())
        pending_.push_back(c);
    }
    return ok;
  }

  void unassign(Lit l) {
    for (std::size_t c : occurs_[negate(l)])
      --numFalse_[c];
    for (std::size_t c : occurs_[l]) {
      if (--numTrue_[c] == 0) {
        ++unsatisfied_;
        for (Lit other : clauses_[c])
          ++activeOcc_[other];
      }
    }
    value_[var_of(l)] = Value::Unassigned;
  }

  void undo_to(std::size_t trailPos) {
    while (trail_.size() > trailPos) {
      unassign(trail_.back());
      trail_.pop_back();
    }
    pending_.clear();
  }

  /// Unit propagation. Returns false on conflict.
  bool propagate() {
    while (!pending_.empty()) {
      const std::size_t c = pending_.back();
      pending_.pop_back();
      if (numTrue_[c] != 0)
        continue;
      const std::size_t size = clauses_[c].size();
      if (numFalse_[c] == size) {
        pending_.clear();
        return false;
      }
      if (numFalse_[c] + 1 != size)
        continue;
      for (Lit l : clauses_[c]) {
        if (value_[var_of(l)] == Value::Unassigned) {
          if (!assign(l)) {
            pending_.clear();
            return false;
          }
          break;
        }
      }
    }
    return true;
  }

  /// A literal whose complement occurs in no unsatisfied input clause.
  std::optional<Lit> find_pure_literal() const {
    for (std::uint32_t v = 0; v < numVars_; ++v) {
      if (value_[v] != Value::Unassigned)
        continue;
      const std::uint32_t pos = activeOcc_[2 * v];
      const std::uint32_t neg = activeOcc_[2 * v + 1];
      if (pos > 0 && neg == 0)
        return 2 * v;
      if (neg > 0 && pos == 0)
        return 2 * v + 1;
    }
    return std::nullopt;
  }

  /// Unassigned variable with the most occurrences in unsatisfied clauses,
  /// phased toward its more frequent polarity. Variables that occur nowhere
  /// unsatisfied score 0 and are tried false first.
  Lit choose_branch() const {
    std::uint32_t best = 0;
    std::uint32_t bestScore = 0;
    bool found = false;
    for (std::uint32_t v = 0; v < numVars_; ++v) {
      if (value_[v] != Value::Unassigned)
        continue;
      const std::uint32_t score = activeOcc_[2 * v] + activeOcc_[2 * v + 1];
      if (!found || score > bestScore) {
        best = v;
        bestScore = score;
        found = true;
      }
    }
    if (bestScore == 0)
      return 2 * best + 1;
    return activeOcc_[2 * best] >= activeOcc_[2 * best + 1] ? 2 * best : 2 * best + 1;
  }

  std::uint32_t numVars_;
  std::vector<Value> value_;
  std::vector<std::vector<Lit>> clauses_;
  std::vector<std::uint32_t> numTrue_;
  std::vector<std::uint32_t> numFalse_;
  std::vector<std::vector<std::size_t>> occurs_;
  std::vector<std::uint32_t> activeOcc_;
  std::size_t unsatisfied_ = 0;
  std::vector<Lit> trail_;
  std::vector<Choice> choices_;
  std::vector<std::size_t> pending_;
  std::unordered_set<Assignment, AssignmentHash> blocked_;
  bool conflict_ = false;
};

} // namespace

EnumerationResult enumerate_all(const Cnf &cnf, std::uint64_t cap,
                                std::optional<Duration> timeBudget) {
  if (cap == 0)
    throw InputError("enumeration cap must be at least 1");

  using Clock = std::chrono::steady_clock;
  const Clock::time_point start = Clock::now();
  auto expired = [&] { return timeBudget && Clock::now() - start >= *timeBudget; };

  EnumerationResult result;
  Enumerator search(cnf);
  Assignment model;
  for (;;) {
    if (expired())
      return result;
    switch (search.next(model, expired)) {
    case Enumerator::Outcome::Timeout:
      return result;
    case Enumerator::Outcome::Exhausted:
      result.complete = true;
      return result;
    case Enumerator::Outcome::Model:
      break;
    }
    if (result.events.size() == cap) {
      result.cap_hit = true;
      return result;
    }
    const Duration stamp = std::chrono::duration_cast<Duration>(Clock::now() - start);
    result.events.push_back(SolutionEvent{model, stamp, result.events.size() + 1});
    search.block(model);
  }
}

std::optional<std::uint64_t> count_solutions_capped(const Cnf &cnf, std::uint64_t cap) {
  EnumerationResult result = enumerate_all(cnf, cap);
  if (result.cap_hit)
    return std::nullopt;
  return result.events.size();
}

} // namespace cascor
