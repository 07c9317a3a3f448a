#include "utp/domain.hpp"

#include <algorithm>
#include <stdexcept>

#include "utp/errors.hpp"
#include "utp/trace_model.hpp"

namespace utp {

namespace {

std::string key_of(const nlohmann::json& j) { return j.dump(); }

}  // namespace

std::optional<std::uint32_t> TraceTable::find(const nlohmann::json& literal) const {
  auto it = index_.find(key_of(literal));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void TraceTable::finish_tables() {
  const std::size_t n = display_.size();
  prefix_.assign(n * n, false);
  sub_.assign(n * n, 0);
  cat_.assign(n * n, -1);

  auto concat_of = [&](std::size_t a, std::size_t b) -> nlohmann::json {
    switch (model_) {
      case Model::Seq:
        return nlohmann::json(seq_concat(seqs_[a], seqs_[b]));
      case Model::Rat:
        return nlohmann::json((rats_[a] + rats_[b]).str());
      case Model::Timed:
        return tt_to_json(tt_concat(timeds_[a], timeds_[b]));
    }
    return {};
  };

  for (std::size_t y = 0; y < n; ++y) {
    for (std::size_t x = 0; x < n; ++x) {
      bool pre = false;
      std::uint32_t dif = 0;
      switch (model_) {
        case Model::Seq: {
          pre = seq_prefix(seqs_[x], seqs_[y]);
          EventSeq d = seq_subtract(seqs_[y], seqs_[x]);
          auto it = index_.find(key_of(nlohmann::json(d)));
          if (it == index_.end())
            throw ConfigError("sequence universe is not subtraction-closed");
          dif = it->second;
          break;
        }
        case Model::Rat: {
          pre = rats_[x] <= rats_[y];
          Rational d = pre ? rats_[y] - rats_[x] : Rational(0);
          auto it = index_.find(key_of(nlohmann::json(d.str())));
          if (it == index_.end())
            throw ConfigError("rational universe is not subtraction-closed");
          dif = it->second;
          break;
        }
        case Model::Timed: {
          pre = tt_prefix(timeds_[x], timeds_[y]);
          TimedTrace d = tt_subtract(timeds_[y], timeds_[x]);
          auto it = index_.find(key_of(tt_to_json(d)));
          if (it == index_.end())
            throw ConfigError("timed universe is not subtraction-closed");
          dif = it->second;
          break;
        }
      }
      prefix_[x * n + y] = pre;
      sub_[y * n + x] = dif;
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      // timed concatenation may reject mismatched variable sets; such a
      // pair simply concatenates out of the universe
      try {
        auto it = index_.find(key_of(concat_of(x, y)));
        cat_[x * n + y] = it == index_.end() ? -1 : static_cast<std::int32_t>(it->second);
      } catch (const VariableSetMismatch&) {
        cat_[x * n + y] = -1;
      }
    }
  }
}

std::shared_ptr<const TraceTable> TraceTable::seq(std::vector<std::string> events,
                                                  std::size_t bound) {
  auto t = std::make_shared<TraceTable>();
  t->model_ = Model::Seq;
  SeqModel m(events, bound);
  const auto all = m.enumerate();
  for (const EventSeq& v : *all) {
    nlohmann::json j(v);
    t->index_[key_of(j)] = static_cast<std::uint32_t>(t->display_.size());
    t->display_.push_back(seq_str(v));
    t->json_.push_back(j);
    t->seqs_.push_back(v);
  }
  t->finish_tables();
  return t;
}

std::shared_ptr<const TraceTable> TraceTable::rat_grid(const Rational& step,
                                                       const Rational& bound) {
  if (!(step > Rational(0)) || bound < Rational(0))
    throw ConfigError("rational grid needs step > 0 and bound >= 0");
  Rational ratio = bound / step;
  if (!ratio.is_integer())
    throw ConfigError("rational grid bound must be a multiple of the step");
  auto t = std::make_shared<TraceTable>();
  t->model_ = Model::Rat;
  for (Rational v(0); v <= bound; v += step) {
    nlohmann::json j(v.str());
    t->index_[key_of(j)] = static_cast<std::uint32_t>(t->display_.size());
    t->display_.push_back(v.str());
    t->json_.push_back(j);
    t->rats_.push_back(v);
  }
  t->finish_tables();
  return t;
}

std::shared_ptr<const TraceTable> TraceTable::timed(const std::vector<TimedTrace>& seed) {
  auto t = std::make_shared<TraceTable>();
  t->model_ = Model::Timed;
  auto add = [&](const TimedTrace& v) -> bool {
    std::string k = key_of(tt_to_json(v));
    if (t->index_.count(k)) return false;
    t->index_[k] = static_cast<std::uint32_t>(t->display_.size());
    t->display_.push_back(v.str());
    t->json_.push_back(tt_to_json(v));
    t->timeds_.push_back(v);
    return true;
  };
  add(TimedTrace());
  for (const TimedTrace& v : seed) add(v);

  // close under pairwise subtraction; results never grow, so this stops
  constexpr std::size_t kMaxUniverse = 4096;
  bool grew = true;
  while (grew) {
    grew = false;
    const std::size_t n = t->timeds_.size();
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t x = 0; x < n; ++x) {
        if (add(tt_subtract(t->timeds_[y], t->timeds_[x]))) grew = true;
        if (t->timeds_.size() > kMaxUniverse)
          throw ConfigError("timed universe closure exceeded " +
                            std::to_string(kMaxUniverse) + " traces");
      }
    }
  }
  t->finish_tables();
  return t;
}

std::shared_ptr<const Domain> Domain::boolean() {
  auto d = std::make_shared<Domain>();
  d->kind_ = Kind::Bool;
  return d;
}

std::shared_ptr<const Domain> Domain::events(std::vector<std::string> names) {
  if (names.empty()) throw ConfigError("event domain must be inhabited");
  auto d = std::make_shared<Domain>();
  d->kind_ = Kind::Event;
  d->names_ = std::move(names);
  return d;
}

std::shared_ptr<const Domain> Domain::enums(std::vector<std::string> names) {
  if (names.empty()) throw ConfigError("enum domain must be inhabited");
  auto d = std::make_shared<Domain>();
  d->kind_ = Kind::Enum;
  d->names_ = std::move(names);
  return d;
}

std::shared_ptr<const Domain> Domain::traces(TraceTablePtr table) {
  auto d = std::make_shared<Domain>();
  d->kind_ = Kind::Trace;
  d->table_ = std::move(table);
  return d;
}

std::size_t Domain::size() const {
  switch (kind_) {
    case Kind::Bool:
      return 2;
    case Kind::Event:
    case Kind::Enum:
      return names_.size();
    case Kind::Trace:
      return table_->size();
  }
  return 0;
}

std::string Domain::value_str(std::uint32_t i) const {
  switch (kind_) {
    case Kind::Bool:
      return i ? "true" : "false";
    case Kind::Event:
    case Kind::Enum:
      return names_[i];
    case Kind::Trace:
      return table_->display(i);
  }
  return {};
}

nlohmann::json Domain::value_json(std::uint32_t i) const {
  switch (kind_) {
    case Kind::Bool:
      return nlohmann::json(i != 0);
    case Kind::Event:
    case Kind::Enum:
      return nlohmann::json(names_[i]);
    case Kind::Trace:
      return table_->value_json(i);
  }
  return {};
}

std::optional<std::uint32_t> Domain::find(const nlohmann::json& literal) const {
  switch (kind_) {
    case Kind::Bool:
      if (literal.is_boolean()) return literal.get<bool>() ? 1 : 0;
      return std::nullopt;
    case Kind::Event:
    case Kind::Enum: {
      if (!literal.is_string()) return std::nullopt;
      auto it = std::find(names_.begin(), names_.end(), literal.get<std::string>());
      if (it == names_.end()) return std::nullopt;
      return static_cast<std::uint32_t>(it - names_.begin());
    }
    case Kind::Trace:
      return table_->find(literal);
  }
  return std::nullopt;
}

bool Domain::same(const Domain& o) const {
  if (kind_ != o.kind_) return false;
  if (kind_ == Kind::Trace) return table_ == o.table_ || table_->same(*o.table_);
  return names_ == o.names_;
}

}  // namespace utp
