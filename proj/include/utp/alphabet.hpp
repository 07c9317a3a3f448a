#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "json.hpp"
#include "utp/domain.hpp"

namespace utp {

class Alphabet;
using AlphabetPtr = std::shared_ptr<const Alphabet>;

// An ordered variable list with a mixed-radix ranking of its bindings.
// Variables are grouped [before..., extra..., after...]; a rank encodes one
// total binding, with the after block least significant:
//
//   rank = (before_rank * extra_block + extra_rank) * after_block + after_rank
//
// In a relational alphabet every before variable has a primed twin and the
// after block mirrors the before block digit for digit, so sequential
// composition can match middles by rank arithmetic alone. Merge alphabets
// add indexed copies of the after variables as extras.
class Alphabet {
 public:
  enum class Role { Before, Extra, After };

  struct Var {
    std::string name;
    DomainPtr dom;
    Role role = Role::Before;
  };

  // before variables only; a primed twin (name + "'") is added per variable
  static AlphabetPtr relational(const std::vector<std::pair<std::string, DomainPtr>>& before);

  // explicit layout; vars must already be grouped Before*, Extra*, After*
  static AlphabetPtr make(std::vector<Var> vars);

  std::size_t var_count() const { return vars_.size(); }
  const Var& var(std::size_t i) const { return vars_[i]; }
  int find(const std::string& name) const;      // -1 when absent
  int id_of(const std::string& name) const;     // throws UnknownVariable

  std::size_t n_before() const { return n_before_; }
  std::size_t n_extra() const { return n_extra_; }
  std::size_t n_after() const { return n_after_; }

  std::uint64_t size() const { return size_; }
  std::uint64_t before_block() const { return before_block_; }
  std::uint64_t extra_block() const { return extra_block_; }
  std::uint64_t after_block() const { return after_block_; }

  // true when seq_comp applies: no extras, and the after block mirrors the
  // before block with matching domains
  bool homogeneous() const { return n_extra_ == 0 && twins_aligned_; }

  // twin variable id (before <-> after); -1 for extras
  int twin(std::size_t var_id) const { return twin_[var_id]; }
  bool is_after(std::size_t var_id) const { return vars_[var_id].role == Role::After; }
  bool is_before(std::size_t var_id) const { return vars_[var_id].role == Role::Before; }

  std::uint32_t digit(std::uint64_t rank, std::size_t var_id) const {
    return static_cast<std::uint32_t>((rank / stride_[var_id]) % radix_[var_id]);
  }
  std::uint64_t with_digit(std::uint64_t rank, std::size_t var_id, std::uint32_t val) const {
    std::uint32_t old = digit(rank, var_id);
    return rank + (static_cast<std::int64_t>(val) - old) * static_cast<std::int64_t>(stride_[var_id]);
  }
  void decode(std::uint64_t rank, std::uint32_t* out) const {
    for (std::size_t i = vars_.size(); i-- > 0;) {
      out[i] = static_cast<std::uint32_t>(rank % radix_[i]);
      rank /= radix_[i];
    }
  }
  std::uint64_t encode(const std::uint32_t* digits) const {
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < vars_.size(); ++i) r = r * radix_[i] + digits[i];
    return r;
  }
  std::uint64_t stride(std::size_t var_id) const { return stride_[var_id]; }
  std::uint64_t radix(std::size_t var_id) const { return radix_[var_id]; }

  bool same(const Alphabet& o) const;

  std::string binding_str(std::uint64_t rank) const;
  nlohmann::json binding_json(std::uint64_t rank) const;

 private:
  std::vector<Var> vars_;
  std::vector<std::uint64_t> radix_;
  std::vector<std::uint64_t> stride_;
  std::vector<int> twin_;
  std::size_t n_before_ = 0, n_extra_ = 0, n_after_ = 0;
  std::uint64_t size_ = 1;
  std::uint64_t before_block_ = 1, extra_block_ = 1, after_block_ = 1;
  bool twins_aligned_ = false;
};

// A total assignment viewed through its rank; digits are extracted on
// demand, so callbacks that touch two variables of a twelve-variable
// alphabet never pay for a full decode.
struct BindingView {
  const Alphabet* alpha;
  std::uint64_t rank;
  std::uint32_t operator[](std::size_t var_id) const { return alpha->digit(rank, var_id); }
};

// whether two predicate operands live over the same alphabet
bool compatible(const AlphabetPtr& a, const AlphabetPtr& b);

}  // namespace utp
