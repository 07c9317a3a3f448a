#include "utp/alphabet.hpp"

#include <set>

#include "utp/errors.hpp"

namespace utp {

AlphabetPtr Alphabet::relational(
    const std::vector<std::pair<std::string, DomainPtr>>& before) {
  std::vector<Var> vars;
  vars.reserve(before.size() * 2);
  for (const auto& [name, dom] : before) vars.push_back({name, dom, Role::Before});
  for (const auto& [name, dom] : before) vars.push_back({name + "'", dom, Role::After});
  return make(std::move(vars));
}

AlphabetPtr Alphabet::make(std::vector<Var> vars) {
  auto a = std::make_shared<Alphabet>();
  a->vars_ = std::move(vars);

  std::set<std::string> seen;
  int phase = 0;
  for (const Var& v : a->vars_) {
    if (!seen.insert(v.name).second)
      throw ConfigError("duplicate alphabet variable: " + v.name);
    if (!v.dom || v.dom->size() == 0)
      throw ConfigError("variable " + v.name + " has an empty domain");
    int p = v.role == Role::Before ? 0 : v.role == Role::Extra ? 1 : 2;
    if (p < phase) throw ConfigError("alphabet variables must be grouped before/extra/after");
    phase = p;
    if (v.role == Role::Before) ++a->n_before_;
    if (v.role == Role::Extra) ++a->n_extra_;
    if (v.role == Role::After) ++a->n_after_;
  }

  a->radix_.resize(a->vars_.size());
  a->stride_.resize(a->vars_.size());
  for (std::size_t i = 0; i < a->vars_.size(); ++i)
    a->radix_[i] = a->vars_[i].dom->size();
  std::uint64_t s = 1;
  for (std::size_t i = a->vars_.size(); i-- > 0;) {
    a->stride_[i] = s;
    s *= a->radix_[i];
    if (s > (1ULL << 40))
      throw ConfigError("universe too large: more than 2^40 bindings");
    const Role r = a->vars_[i].role;
    if (r == Role::After) a->after_block_ *= a->radix_[i];
    if (r == Role::Extra) a->extra_block_ *= a->radix_[i];
    if (r == Role::Before) a->before_block_ *= a->radix_[i];
  }
  a->size_ = s;

  // twin pairing: after block mirrors the before block positionally
  a->twin_.assign(a->vars_.size(), -1);
  a->twins_aligned_ = a->n_before_ == a->n_after_;
  const std::size_t after_base = a->n_before_ + a->n_extra_;
  if (a->twins_aligned_) {
    for (std::size_t k = 0; k < a->n_before_; ++k) {
      const Var& b = a->vars_[k];
      const Var& p = a->vars_[after_base + k];
      if (p.name != b.name + "'" || !p.dom->same(*b.dom)) {
        a->twins_aligned_ = false;
        break;
      }
    }
  }
  if (a->twins_aligned_) {
    for (std::size_t k = 0; k < a->n_before_; ++k) {
      a->twin_[k] = static_cast<int>(after_base + k);
      a->twin_[after_base + k] = static_cast<int>(k);
    }
  }
  return a;
}

int Alphabet::find(const std::string& name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i].name == name) return static_cast<int>(i);
  return -1;
}

int Alphabet::id_of(const std::string& name) const {
  int i = find(name);
  if (i < 0) throw UnknownVariable("unknown variable: " + name);
  return i;
}

bool Alphabet::same(const Alphabet& o) const {
  if (vars_.size() != o.vars_.size()) return false;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i].name != o.vars_[i].name || vars_[i].role != o.vars_[i].role ||
        !vars_[i].dom->same(*o.vars_[i].dom))
      return false;
  }
  return true;
}

std::string Alphabet::binding_str(std::uint64_t rank) const {
  std::vector<std::uint32_t> d(vars_.size());
  decode(rank, d.data());
  std::string s = "{";
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (i) s += ", ";
    s += vars_[i].name + "=" + vars_[i].dom->value_str(d[i]);
  }
  return s + "}";
}

nlohmann::json Alphabet::binding_json(std::uint64_t rank) const {
  std::vector<std::uint32_t> d(vars_.size());
  decode(rank, d.data());
  nlohmann::json j;
  for (std::size_t i = 0; i < vars_.size(); ++i)
    j[vars_[i].name] = vars_[i].dom->value_json(d[i]);
  return j;
}

bool compatible(const AlphabetPtr& a, const AlphabetPtr& b) {
  return a == b || (a && b && a->same(*b));
}

}  // namespace utp
