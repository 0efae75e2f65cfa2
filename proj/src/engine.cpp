#include "dl4x/engine.hpp"

#include <algorithm>
#include <numeric>

#include "dl4x/codec.hpp"
#include "dl4x/errors.hpp"

namespace dl4x {

const char* to_string(Rule r) { return r == Rule::E ? "E-Rule" : "PB-Rule"; }

std::string to_string(const ClosureWitness& w) {
  if (!w.complement) return encode(w.literal);
  return encode(w.literal) + " / " + encode(*w.complement);
}

// Equivalence classes

const Variable& EquivPartition::representative(const Variable& v) const {
  auto it = sigma.find(v);
  return it == sigma.end() ? v : it->second;
}

std::vector<std::vector<Variable>> EquivPartition::nontrivial() const {
  std::vector<std::vector<Variable>> out;
  for (const auto& c : classes)
    if (c.size() > 1) out.push_back(c);
  return out;
}

Literal EquivPartition::apply(const Literal& l) const {
  return {l.atom.map_individuals([&](const Variable& v) { return representative(v); }), l.positive};
}

EquivPartition compute_equiv(std::span<const Literal> branch, std::span<const Variable> order) {
  std::vector<Variable> vars(order.begin(), order.end());
  std::map<Variable, std::size_t> index;
  for (std::size_t i = 0; i < vars.size(); ++i) index.emplace(vars[i], i);
  auto id = [&](const Variable& v) {
    auto [it, inserted] = index.emplace(v, vars.size());
    if (inserted) vars.push_back(v);
    return it->second;
  };
  for (const auto& l : branch)
    if (l.atom.is_equality()) {
      id(l.atom.first());
      id(l.atom.target());
    }

  // union-find; the root of each tree is its <_theta-minimum
  std::vector<std::size_t> parent(vars.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& l : branch) {
    if (!l.positive || !l.atom.is_equality()) continue;
    std::size_t a = find(index.at(l.atom.first()));
    std::size_t b = find(index.at(l.atom.target()));
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }

  EquivPartition p;
  std::map<std::size_t, std::size_t> class_of_root;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    std::size_t r = find(i);
    auto [it, inserted] = class_of_root.emplace(r, p.classes.size());
    if (inserted) p.classes.emplace_back();
    p.classes[it->second].push_back(vars[i]);
    if (r != i) p.sigma.emplace(vars[i], vars[r]);
  }
  return p;
}

std::optional<ClosureWitness> final_clash_check(std::span<const Literal> branch, const EquivPartition& p) {
  std::set<Literal> seen;
  std::vector<Literal> substituted;
  for (const auto& l : branch) {
    Literal s = p.apply(l);
    if (seen.insert(s).second) substituted.push_back(s);
  }
  for (const auto& l : substituted)
    if (is_self_disequality(l)) return ClosureWitness{l, std::nullopt};
  for (const auto& l : substituted)
    if (l.positive && seen.contains(complement(l))) return ClosureWitness{l, complement(l)};
  return std::nullopt;
}

// Models

std::size_t Interpretation::element_of(const Variable& x) const {
  auto it = element.find(x);
  if (it == element.end()) throw PreconditionViolated("variable " + x.name + " outside the model domain");
  return it->second;
}

bool Interpretation::holds(const Literal& l) const {
  const Atom& a = l.atom;
  bool value;
  if (a.is_equality()) {
    value = element_of(a.first()) == element_of(a.target());
  } else if (a.is_pair()) {
    auto it = relations.find(a.target());
    value = it != relations.end() && it->second.contains({element_of(a.first()), element_of(a.second())});
  } else {
    auto it = sets.find(a.target());
    value = it != sets.end() && it->second.contains(element_of(a.first()));
  }
  return value == l.positive;
}

bool Interpretation::satisfies(const Clause& c) const {
  return std::ranges::any_of(c.disjuncts(), [&](const Literal& l) { return holds(l); });
}

Interpretation extract_model(std::span<const Literal> branch, const EquivPartition& p,
                             std::span<const Variable> sets, std::span<const Variable> relations) {
  Interpretation m;
  m.domain = p.classes;
  for (std::size_t i = 0; i < m.domain.size(); ++i)
    for (const auto& v : m.domain[i]) m.element.emplace(v, i);
  for (const auto& s : sets) m.sets[s];
  for (const auto& r : relations) m.relations[r];
  for (const auto& l : branch) {
    if (!l.positive || l.atom.is_equality()) continue;
    Literal s = p.apply(l);
    if (s.atom.is_pair())
      m.relations[s.atom.target()].emplace(m.element_of(s.atom.first()), m.element_of(s.atom.second()));
    else
      m.sets[s.atom.target()].insert(m.element_of(s.atom.first()));
  }
  return m;
}

// Tableau

Tableau::Tableau(const ExpandedKB& e) : clauses_(e.clauses), domain_(e.domain) {
  auto s = e.registry.free(1);
  sets_.assign(s.begin(), s.end());
  auto r = e.registry.free(3);
  relations_.assign(r.begin(), r.end());
  for (const auto& c : clauses_)
    for (const auto& l : c.disjuncts()) intern(l.atom);

  nodes_.push_back(Node{});
  State root{Branch{0, 0, Status::Open, {}, std::nullopt}, std::vector<std::int8_t>(atoms_.size(), 0), {}, {}};
  for (std::size_t i = 0; i < clauses_.size(); ++i) {
    if (clauses_[i].is_unit()) {
      nodes_[0].literals.push_back(clauses_[i][0]);
      assert_literal(root, clauses_[i][0]);
    } else {
      root.unfulfilled.push_back(i);
    }
  }
  add_branch(std::move(root));
}

int Tableau::find_atom(const Atom& a) const {
  auto it = atoms_.find(a);
  return it == atoms_.end() ? -1 : it->second;
}

int Tableau::intern(const Atom& a) {
  auto [it, inserted] = atoms_.emplace(a, static_cast<int>(atoms_.size()));
  return it->second;
}

std::int8_t Tableau::value(const State& s, const Literal& l) const {
  int id = find_atom(l.atom);
  if (id < 0 || static_cast<std::size_t>(id) >= s.value.size() || s.value[id] == 0) return 0;
  return (s.value[id] > 0) == l.positive ? 1 : -1;
}

void Tableau::assert_literal(State& s, const Literal& l) {
  auto id = static_cast<std::size_t>(intern(l.atom));
  if (id >= s.value.size()) s.value.resize(atoms_.size(), 0);
  std::int8_t v = value(s, l);
  if (v == 1 || (v == -1 && std::ranges::find(s.b.literals, l) != s.b.literals.end())) return;
  s.b.literals.push_back(l);
  // x = y against not (x = y) is left to the final check, where sigma
  // turns it into not (z = z)
  if (v == -1) {
    if (!l.atom.is_equality() && s.b.status == Status::Open) {
      s.b.status = Status::Closed;
      s.b.witness = l.positive ? ClosureWitness{l, complement(l)} : ClosureWitness{complement(l), l};
    }
    return;
  }
  s.value[id] = l.positive ? 1 : -1;
  if (is_self_disequality(l) && s.b.status == Status::Open) {
    s.b.status = Status::Closed;
    s.b.witness = ClosureWitness{l, std::nullopt};
  }
}

std::size_t Tableau::add_branch(State s) {
  std::size_t id = branches_.size();
  s.b.id = id;
  branch_of_leaf_[s.b.leaf] = id;
  branches_.push_back(std::move(s));
  return id;
}

bool Tableau::on_branch(std::size_t branch, const Literal& l) const {
  const State& s = branches_.at(branch);
  std::int8_t v = value(s, l);
  return v == 1 || (v == -1 && l.atom.is_equality() && std::ranges::find(s.b.literals, l) != s.b.literals.end());
}

bool Tableau::fulfilled(std::size_t branch, std::size_t clause) const {
  return std::ranges::any_of(clauses_.at(clause).disjuncts(), [&](const Literal& l) { return on_branch(branch, l); });
}

std::vector<std::size_t> Tableau::open_disjuncts(std::size_t branch, std::size_t clause) const {
  const State& s = branches_.at(branch);
  const Clause& c = clauses_.at(clause);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (value(s, c[i]) != -1) out.push_back(i);
  return out;
}

bool Tableau::e_rule_applicable(std::size_t branch) const {
  if (branches_.at(branch).b.status != Status::Open) return false;
  for (std::size_t c = 0; c < clauses_.size(); ++c)
    if (!fulfilled(branch, c) && open_disjuncts(branch, c).size() <= 1) return true;
  return false;
}

std::size_t Tableau::apply_e_rule(std::size_t branch, std::size_t clause, std::size_t i) {
  State& s = branches_.at(branch);
  if (s.b.status != Status::Open) throw PreconditionViolated("E-rule on a branch that is not open");
  if (clause >= clauses_.size()) throw PreconditionViolated("E-rule clause index out of range");
  const Clause& c = clauses_[clause];
  if (i >= c.size()) throw PreconditionViolated("E-rule disjunct index out of range");
  for (std::size_t j = 0; j < c.size(); ++j)
    if (j != i && value(s, c[j]) != -1)
      throw PreconditionViolated("E-rule premise missing: " + encode(complement(c[j])));
  if (value(s, c[i]) == 1) throw PreconditionViolated("E-rule conclusion already on the branch");

  std::size_t n = nodes_.size();
  nodes_.push_back(Node{{c[i]}, Rule::E, clause, s.b.leaf, std::nullopt, std::nullopt});
  nodes_[s.b.leaf].left = n;
  branch_of_leaf_.erase(s.b.leaf);
  branch_of_leaf_[n] = branch;
  s.b.leaf = n;
  assert_literal(s, c[i]);
  trace_.push_back({Rule::E, branch, clause, c[i]});
  ++stats_.e_rules;
  return n;
}

std::pair<std::size_t, std::size_t> Tableau::apply_pb_rule(std::size_t branch, const Literal& l, std::size_t clause) {
  if (branches_.at(branch).b.status != Status::Open) throw PreconditionViolated("PB-rule on a branch that is not open");
  if (value(branches_[branch], l) != 0) throw PreconditionViolated("PB-rule literal already decided: " + encode(l));

  State left = branches_[branch];
  State right = branches_[branch];
  std::size_t parent = left.b.leaf;
  std::size_t ln = nodes_.size();
  nodes_.push_back(Node{{l}, Rule::PB, clause, parent, std::nullopt, std::nullopt});
  nodes_.push_back(Node{{complement(l)}, Rule::PB, clause, parent, std::nullopt, std::nullopt});
  nodes_[parent].left = ln;
  nodes_[parent].right = ln + 1;
  branch_of_leaf_.erase(parent);
  branches_[branch].b.status = Status::Split;

  left.b.leaf = ln;
  right.b.leaf = ln + 1;
  assert_literal(left, l);
  assert_literal(right, complement(l));
  std::size_t li = add_branch(std::move(left));
  std::size_t ri = add_branch(std::move(right));
  trace_.push_back({Rule::PB, branch, clause, l, li, ri});
  ++stats_.pb_rules;
  return {li, ri};
}

void Tableau::finish(std::size_t branch) {
  State& s = branches_[branch];
  s.partition = compute_equiv(s.b.literals, domain_);
  if (auto w = final_clash_check(s.b.literals, s.partition)) {
    s.b.status = Status::Closed;
    s.b.witness = w;
  }
}

void Tableau::saturate() {
  std::vector<std::size_t> work;
  for (std::size_t id : open_branches()) work.push_back(id);
  std::ranges::reverse(work);

  while (!work.empty()) {
    std::size_t id = work.back();
    State& s = branches_[id];
    if (s.b.status != Status::Open) {
      work.pop_back();
      continue;
    }
    std::erase_if(s.unfulfilled, [&](std::size_t c) { return fulfilled(id, c); });
    if (s.unfulfilled.empty()) {
      work.pop_back();
      finish(id);
      continue;
    }

    // E-rule first, scanning from the top of the stack
    bool applied = false;
    for (std::size_t k = s.unfulfilled.size(); k-- > 0;) {
      std::size_t c = s.unfulfilled[k];
      auto rest = open_disjuncts(id, c);
      if (rest.size() <= 1) {
        apply_e_rule(id, c, rest.empty() ? 0 : rest[0]);
        applied = true;
        // a refuted equality stays open until the final check
        if (rest.empty() && branches_[id].b.status == Status::Open) {
          work.pop_back();
          finish(id);
        }
        break;
      }
    }
    if (applied) continue;

    std::size_t c = s.unfulfilled.back();
    std::size_t h = open_disjuncts(id, c).front();
    auto [left, right] = apply_pb_rule(id, complement(clauses_[c][h]), c);
    work.pop_back();
    work.push_back(right);
    work.push_back(left);
  }
}

std::vector<std::size_t> Tableau::leaves(Status status) const {
  std::vector<std::size_t> out;
  std::vector<std::size_t> stack{0};
  while (!stack.empty()) {
    std::size_t n = stack.back();
    stack.pop_back();
    const Node& node = nodes_[n];
    if (node.right) stack.push_back(*node.right);
    if (node.left) stack.push_back(*node.left);
    if (!node.left && !node.right) {
      std::size_t b = branch_of_leaf_.at(n);
      if (branches_[b].b.status == status) out.push_back(b);
    }
  }
  return out;
}

std::vector<std::size_t> Tableau::open_branches() const { return leaves(Status::Open); }
std::vector<std::size_t> Tableau::closed_branches() const { return leaves(Status::Closed); }

Interpretation Tableau::model(std::size_t branch) const {
  const State& s = branches_.at(branch);
  return extract_model(s.b.literals, s.partition, sets_, relations_);
}

void Tableau::render_node(std::string& out, std::size_t n, std::size_t indent) const {
  auto line = [&](const std::string& text) {
    out.append(indent, ' ');
    out += text;
    out += '\n';
  };
  if (n == 0)
    for (const auto& c : clauses_) line(encode(c));
  for (;;) {
    const Node& node = nodes_[n];
    if (n != 0) {
      std::string text = encode(node.literals.front());
      if (node.rule == Rule::E) text += "    [E-Rule]";
      line(text);
    }
    if (node.left && node.right) {
      line("PB-Rule");
      render_node(out, *node.left, indent + 4);
      render_node(out, *node.right, indent + 4);
      return;
    }
    if (node.left) {
      n = *node.left;
      continue;
    }
    const Branch& b = branches_[branch_of_leaf_.at(n)].b;
    if (b.status == Status::Open)
      line("open (branch " + std::to_string(b.id) + ")");
    else
      line("closed (branch " + std::to_string(b.id) + "): " + to_string(*b.witness));
    return;
  }
}

std::string Tableau::render() const {
  std::string out;
  render_node(out, 0, 0);
  return out;
}

}  // namespace dl4x
