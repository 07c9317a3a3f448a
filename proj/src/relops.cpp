#include "utp/relops.hpp"

#include <atomic>

namespace utp {

Predicate conj(const Predicate& p, const Predicate& q) {
  require_same_alphabet(p, q, "conjunction");
  return Predicate(p.alphabet(), p.rows() & q.rows());
}

Predicate disj(const Predicate& p, const Predicate& q) {
  require_same_alphabet(p, q, "disjunction");
  return Predicate(p.alphabet(), p.rows() | q.rows());
}

Predicate neg(const Predicate& p) {
  return Predicate(p.alphabet(), p.rows().complement());
}

Predicate implies(const Predicate& p, const Predicate& q) {
  require_same_alphabet(p, q, "implication");
  return Predicate(p.alphabet(), p.rows().complement() | q.rows());
}

namespace {

// b depends only on unprimed variables iff its membership is unchanged
// when the extra and after digits are cleared
bool before_only(const Predicate& b) {
  const Alphabet& a = *b.alphabet();
  const std::uint64_t ea = a.extra_block() * a.after_block();
  if (ea == 1) return true;
  for (std::uint64_t r = 0; r < a.size(); ++r) {
    if (b.rows().test(r) != b.rows().test((r / ea) * ea)) return false;
  }
  return true;
}

}  // namespace

Predicate cond(const Predicate& p, const Predicate& b, const Predicate& q) {
  require_same_alphabet(p, q, "conditional");
  require_same_alphabet(p, b, "conditional");
  if (!before_only(b))
    throw ConditionMentionsAfterVars("conditional: condition constrains primed or indexed variables");
  return disj(conj(b, p), conj(neg(b), q));
}

Predicate seq_comp(const Predicate& p, const Predicate& q) {
  require_same_alphabet(p, q, "sequential composition");
  const AlphabetPtr& al = p.alphabet();
  if (!al->homogeneous())
    throw AlphabetMismatch("sequential composition needs every before variable twinned");
  const std::uint64_t A = al->after_block();
  const Bitset& pr = p.rows();
  const Bitset& qr = q.rows();
  return Predicate::of_rows(al, [&, A](std::uint64_t r) {
    const std::uint64_t before = r / A;
    const std::uint64_t after = r % A;
    for (std::uint64_t m = 0; m < A; ++m) {
      if (pr.test(before * A + m) && qr.test(m * A + after)) return true;
    }
    return false;
  });
}

Predicate assign(const AlphabetPtr& a, const std::string& var, const ValueFn& e) {
  const std::size_t x = static_cast<std::size_t>(a->id_of(var));
  if (!a->is_before(x)) throw UnknownVariable("assign: " + var + " is not a before variable");
  const int xp = a->twin(x);
  if (xp < 0) throw UnknownVariable("assign: " + var + " has no primed twin");
  const Alphabet& al = *a;
  std::atomic<bool> violation{false};
  Predicate out = Predicate::of_bindings(a, [&](const BindingView& bv) {
    const std::uint32_t target = e(bv);
    if (target >= al.radix(static_cast<std::size_t>(xp))) {
      violation.store(true, std::memory_order_relaxed);
      return false;
    }
    for (std::size_t i = 0; i < al.var_count(); ++i) {
      if (!al.is_after(i)) continue;
      const std::uint32_t want =
          static_cast<int>(i) == xp ? target : bv[static_cast<std::size_t>(al.twin(i))];
      if (bv[i] != want) return false;
    }
    return true;
  });
  if (violation.load())
    throw DomainViolation("assign: expression left the domain of " + var);
  return out;
}

Predicate skip(const AlphabetPtr& a) {
  const Alphabet& al = *a;
  for (std::size_t i = 0; i < al.var_count(); ++i) {
    if (al.is_after(i) && al.twin(i) < 0)
      throw AlphabetMismatch("skip: after variable without a twin");
  }
  return Predicate::of_bindings(a, [&al](const BindingView& bv) {
    for (std::size_t i = 0; i < al.var_count(); ++i) {
      if (al.is_after(i) && bv[i] != bv[static_cast<std::size_t>(al.twin(i))]) return false;
    }
    return true;
  });
}

Predicate exists(const std::string& var, const Predicate& p) {
  const Alphabet& al = *p.alphabet();
  const std::size_t x = static_cast<std::size_t>(al.id_of(var));
  const std::uint64_t stride = al.stride(x);
  const std::uint64_t radix = al.radix(x);
  const Bitset& rows = p.rows();
  return Predicate::of_rows(p.alphabet(), [&rows, &al, x, stride, radix](std::uint64_t r) {
    const std::uint64_t base = r - al.digit(r, x) * stride;
    for (std::uint64_t v = 0; v < radix; ++v) {
      if (rows.test(base + v * stride)) return true;
    }
    return false;
  });
}

Predicate substitute(const Predicate& p, const std::vector<Substitution>& subst) {
  const Alphabet& al = *p.alphabet();
  const Bitset& rows = p.rows();
  std::atomic<bool> violation{false};
  Predicate out = Predicate::of_rows(p.alphabet(), [&](std::uint64_t r) {
    BindingView bv{&al, r};
    std::uint64_t target = r;
    for (const Substitution& s : subst) {
      const std::uint32_t v = s.value(bv);  // from the original binding
      if (v >= al.radix(s.var_id)) {
        violation.store(true, std::memory_order_relaxed);
        return false;
      }
      target = al.with_digit(target, s.var_id, v);
    }
    return rows.test(target);
  });
  if (violation.load())
    throw DomainViolation("substitute: a computed value left its variable's domain");
  return out;
}

bool refines(const Predicate& p, const Predicate& q) {
  require_same_alphabet(p, q, "refines");
  return q.rows().subset_of(p.rows());
}

Predicate lattice_inf(const AlphabetPtr& a, std::span<const Predicate> ps) {
  if (ps.empty()) return Predicate::top(a);
  Bitset acc(a->size(), false);
  for (const Predicate& p : ps) {
    if (!compatible(a, p.alphabet()))
      throw AlphabetMismatch("lattice_inf: member over a different alphabet");
    acc |= p.rows();
  }
  return Predicate(a, std::move(acc));
}

Predicate lattice_sup(const AlphabetPtr& a, std::span<const Predicate> ps) {
  if (ps.empty()) return Predicate::bottom(a);
  Bitset acc(a->size(), true);
  for (const Predicate& p : ps) {
    if (!compatible(a, p.alphabet()))
      throw AlphabetMismatch("lattice_sup: member over a different alphabet");
    acc &= p.rows();
  }
  return Predicate(a, std::move(acc));
}

namespace {

void spot_check_monotone(const PredicateTransformer& f,
                         std::span<const std::pair<Predicate, Predicate>> pairs) {
  for (const auto& [weaker, stronger] : pairs) {
    if (!refines(weaker, stronger)) continue;  // unordered sample, nothing to check
    if (!refines(f(weaker), f(stronger)))
      throw NonMonotoneDetected("transformer violates monotonicity on a sampled pair");
  }
}

}  // namespace

Predicate lfp(const AlphabetPtr& a, const PredicateTransformer& f,
              std::span<const std::pair<Predicate, Predicate>> spot_checks) {
  spot_check_monotone(f, spot_checks);
  Predicate x = Predicate::top(a);  // bottom of the refinement order
  for (std::uint64_t i = 0; i <= a->size() + 1; ++i) {
    Predicate y = f(x);
    if (!compatible(y.alphabet(), a))
      throw AlphabetMismatch("lfp: transformer changed the alphabet");
    if (y == x) return x;
    if (!y.rows().subset_of(x.rows()))
      throw NonMonotoneDetected("lfp: iteration step was not an ascent");
    x = std::move(y);
  }
  throw NonMonotoneDetected("lfp: no fixed point within the lattice height");
}

Predicate gfp(const AlphabetPtr& a, const PredicateTransformer& f,
              std::span<const std::pair<Predicate, Predicate>> spot_checks) {
  spot_check_monotone(f, spot_checks);
  Predicate x = Predicate::bottom(a);  // top of the refinement order
  for (std::uint64_t i = 0; i <= a->size() + 1; ++i) {
    Predicate y = f(x);
    if (!compatible(y.alphabet(), a))
      throw AlphabetMismatch("gfp: transformer changed the alphabet");
    if (y == x) return x;
    if (!x.rows().subset_of(y.rows()))
      throw NonMonotoneDetected("gfp: iteration step was not a descent");
    x = std::move(y);
  }
  throw NonMonotoneDetected("gfp: no fixed point within the lattice height");
}

}  // namespace utp
