#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "utp/event_seq.hpp"
#include "utp/rational.hpp"
#include "utp/timed_trace.hpp"

namespace utp {

// A finite, duplicate-free trace universe with its operations precomputed
// as index tables. Building the table pays the exact-arithmetic cost once;
// the relational engine afterwards works on plain integers. Index 0 is
// always the empty trace. All tables are total except concatenation, which
// reports -1 when the result leaves the universe.
//
// Every table is closed under the subtraction the healthiness conditions
// substitute with: for all members x, y the value y - x is a member (it is
// the empty trace whenever x is not a prefix of y).
class TraceTable {
 public:
  enum class Model { Seq, Rat, Timed };

  static std::shared_ptr<const TraceTable> seq(std::vector<std::string> events,
                                               std::size_t bound);
  // the grid {0, step, 2*step, ..., bound}; bound must be a multiple of step
  static std::shared_ptr<const TraceTable> rat_grid(const Rational& step,
                                                    const Rational& bound);
  // seed traces closed under pairwise subtraction (bounded: subtraction
  // never increases end times, so the closure is finite)
  static std::shared_ptr<const TraceTable> timed(const std::vector<TimedTrace>& seed);

  Model model() const { return model_; }
  std::size_t size() const { return display_.size(); }
  std::uint32_t empty_index() const { return 0; }

  bool prefix(std::uint32_t x, std::uint32_t y) const { return prefix_[idx(x, y)]; }
  std::uint32_t subtract(std::uint32_t y, std::uint32_t x) const { return sub_[idx(y, x)]; }
  std::int32_t concat(std::uint32_t x, std::uint32_t y) const { return cat_[idx(x, y)]; }

  const std::string& display(std::uint32_t i) const { return display_[i]; }
  const nlohmann::json& value_json(std::uint32_t i) const { return json_[i]; }
  std::optional<std::uint32_t> find(const nlohmann::json& literal) const;

  // typed views; null unless the model matches
  const EventSeq* seq_value(std::uint32_t i) const {
    return model_ == Model::Seq ? &seqs_[i] : nullptr;
  }
  const Rational* rat_value(std::uint32_t i) const {
    return model_ == Model::Rat ? &rats_[i] : nullptr;
  }
  const TimedTrace* timed_value(std::uint32_t i) const {
    return model_ == Model::Timed ? &timeds_[i] : nullptr;
  }

  bool same(const TraceTable& o) const {
    return model_ == o.model_ && json_ == o.json_;
  }

 private:
  std::size_t idx(std::uint32_t a, std::uint32_t b) const { return a * size() + b; }
  void finish_tables();  // fills prefix_/sub_/cat_ from the typed vectors

  Model model_;
  std::vector<std::string> display_;
  std::vector<nlohmann::json> json_;
  std::map<std::string, std::uint32_t> index_;  // canonical dump -> index
  std::vector<EventSeq> seqs_;
  std::vector<Rational> rats_;
  std::vector<TimedTrace> timeds_;
  std::vector<bool> prefix_;
  std::vector<std::uint32_t> sub_;
  std::vector<std::int32_t> cat_;
};

using TraceTablePtr = std::shared_ptr<const TraceTable>;

// Variable domain of the relational engine: booleans, a finite event set,
// a bounded trace universe, or an explicit value list.
class Domain {
 public:
  enum class Kind { Bool, Event, Trace, Enum };

  static std::shared_ptr<const Domain> boolean();
  static std::shared_ptr<const Domain> events(std::vector<std::string> names);
  static std::shared_ptr<const Domain> enums(std::vector<std::string> names);
  static std::shared_ptr<const Domain> traces(TraceTablePtr table);

  Kind kind() const { return kind_; }
  std::size_t size() const;
  std::string value_str(std::uint32_t i) const;
  nlohmann::json value_json(std::uint32_t i) const;
  std::optional<std::uint32_t> find(const nlohmann::json& literal) const;

  const TraceTable* table() const { return table_.get(); }
  TraceTablePtr table_ptr() const { return table_; }

  bool same(const Domain& o) const;

 private:
  Kind kind_;
  std::vector<std::string> names_;  // Event / Enum
  TraceTablePtr table_;             // Trace
};

using DomainPtr = std::shared_ptr<const Domain>;

}  // namespace utp
