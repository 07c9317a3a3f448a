#include "utp/merge.hpp"

#include <map>

namespace utp {

AlphabetPtr merge_alphabet(const AlphabetPtr& reactive) {
  ReactiveView::of(reactive);  // shape check
  if (!reactive->homogeneous())
    throw NotReactiveAlphabet("merge alphabet needs a fully twinned reactive alphabet");
  std::vector<Alphabet::Var> vars;
  const std::size_t nb = reactive->n_before();
  for (std::size_t i = 0; i < nb; ++i) {
    const auto& v = reactive->var(i);
    vars.push_back({v.name, v.dom, Alphabet::Role::Before});
  }
  for (int idx = 0; idx <= 1; ++idx) {
    for (std::size_t i = 0; i < nb; ++i) {
      const auto& v = reactive->var(i);
      vars.push_back({std::to_string(idx) + "." + v.name, v.dom, Alphabet::Role::Extra});
    }
  }
  for (std::size_t i = 0; i < nb; ++i) {
    const auto& v = reactive->var(reactive->n_before() + i);
    vars.push_back({v.name, v.dom, Alphabet::Role::After});
  }
  return Alphabet::make(std::move(vars));
}

MergeView MergeView::of(const AlphabetPtr& merge) {
  MergeView v;
  v.alpha = merge;
  v.reactive = ReactiveView::of(merge);
  const std::size_t nb = merge->n_before();
  if (merge->n_extra() != 2 * nb || merge->n_after() != nb)
    throw NotReactiveAlphabet("not a merge alphabet: indexed blocks missing");
  v.idx0_base = nb;
  v.idx1_base = 2 * nb;
  for (std::size_t i = 0; i < nb; ++i) {
    const auto& b = merge->var(i);
    const auto& z = merge->var(v.idx0_base + i);
    const auto& o = merge->var(v.idx1_base + i);
    if (z.name != "0." + b.name || o.name != "1." + b.name || !z.dom->same(*b.dom) ||
        !o.dom->same(*b.dom))
      throw NotReactiveAlphabet("not a merge alphabet: indexed copies are misaligned");
  }
  v.idx0_tr = v.idx0_base + (v.reactive.tr);
  v.idx0_wait = v.idx0_base + (v.reactive.wait);
  v.idx1_tr = v.idx1_base + (v.reactive.tr);
  v.idx1_wait = v.idx1_base + (v.reactive.wait);
  return v;
}

Predicate sep(const Predicate& p, int index, const AlphabetPtr& merge) {
  if (index != 0 && index != 1) throw ConfigError("sep index must be 0 or 1");
  MergeView mv = MergeView::of(merge);
  const AlphabetPtr& ra = p.alphabet();
  ReactiveView::of(ra);
  const std::size_t nb = merge->n_before();
  if (ra->n_before() != nb || !ra->homogeneous())
    throw AlphabetMismatch("sep: process alphabet does not match the merge alphabet");
  for (std::size_t i = 0; i < nb; ++i) {
    if (ra->var(i).name != merge->var(i).name || !ra->var(i).dom->same(*merge->var(i).dom))
      throw AlphabetMismatch("sep: process alphabet does not match the merge alphabet");
  }

  // merge rank = ((before * A + i0) * A + i1) * A + prime; every block
  // shares the after block's radices
  const std::uint64_t A = merge->after_block();
  const Bitset& rows = p.rows();
  return Predicate::of_rows(merge, [&rows, A, index](std::uint64_t r) {
    std::uint64_t rest = r / A;  // drop the primed block
    const std::uint64_t i1 = rest % A;
    rest /= A;
    const std::uint64_t i0 = rest % A;
    const std::uint64_t before = rest / A;
    return rows.test(before * A + (index == 0 ? i0 : i1));
  });
}

namespace {

// every before variable copied to its primed twin; indexed copies free
Predicate pre_state_copy(const AlphabetPtr& merge) { return skip(merge); }

}  // namespace

Predicate par_by_merge(const Predicate& p, const Predicate& m, const Predicate& q) {
  MergeView mv = MergeView::of(m.alphabet());
  require_same_alphabet(p, q, "par_by_merge");
  const AlphabetPtr merge = m.alphabet();

  Predicate composite =
      conj(conj(sep(p, 0, merge), sep(q, 1, merge)), pre_state_copy(merge));

  // compose: M's before variables read the copied pre-state through the
  // composite's primed slots, its indexed variables the separated results;
  // the result keeps the composite's unprimed and M's primed values
  const std::uint64_t A = merge->after_block();
  const Bitset& c = composite.rows();
  const Bitset& mr = m.rows();
  AlphabetPtr reactive = p.alphabet();
  if (reactive->after_block() != A || reactive->before_block() != A)
    throw AlphabetMismatch("par_by_merge: process and merge alphabets disagree");

  return Predicate::of_rows(reactive, [&c, &mr, A](std::uint64_t r) {
    const std::uint64_t before = r / A;
    const std::uint64_t after = r % A;
    for (std::uint64_t i0 = 0; i0 < A; ++i0) {
      for (std::uint64_t i1 = 0; i1 < A; ++i1) {
        for (std::uint64_t mid = 0; mid < A; ++mid) {
          const std::uint64_t c_rank = ((before * A + i0) * A + i1) * A + mid;
          if (!c.test(c_rank)) continue;
          const std::uint64_t m_rank = ((mid * A + i0) * A + i1) * A + after;
          if (mr.test(m_rank)) return true;
        }
      }
    }
    return false;
  });
}

Predicate R2m(const Predicate& m) {
  MergeView mv = MergeView::of(m.alphabet());
  const TraceTable* tt = mv.reactive.table;
  const std::size_t tr = mv.reactive.tr;
  std::vector<Substitution> subst;
  subst.push_back({tr, [tt](const BindingView&) { return tt->empty_index(); }});
  for (std::size_t var : {mv.reactive.trp, mv.idx0_tr, mv.idx1_tr}) {
    subst.push_back({var, [tt, var, tr](const BindingView& b) {
                       return tt->subtract(b[var], b[tr]);
                     }});
  }
  // raw conditional: the guard tr <= tr' constrains an after variable
  Predicate grew = trace_monotone_atom(m.alphabet());
  return disj(conj(grew, substitute(m, subst)), conj(neg(grew), m));
}

Predicate Rm(const Predicate& m) {
  MergeView mv = MergeView::of(m.alphabet());
  Predicate waiting = Predicate::of_rows(m.alphabet(), [&al = *m.alphabet(),
                                                        w = mv.reactive.wait](std::uint64_t r) {
    return al.digit(r, w) == 1;
  });
  Predicate r3 = cond(skip(m.alphabet()), waiting, m);
  return conj(R2m(r3), trace_monotone_atom(m.alphabet()));
}

std::vector<EventSeq> interleavings(const EventSeq& s, const EventSeq& t) {
  if (s.empty()) return {t};
  if (t.empty()) return {s};
  std::vector<EventSeq> out;
  EventSeq s1(s.begin() + 1, s.end());
  for (EventSeq w : interleavings(s1, t)) {
    w.insert(w.begin(), s.front());
    out.push_back(std::move(w));
  }
  EventSeq t1(t.begin() + 1, t.end());
  for (EventSeq w : interleavings(s, t1)) {
    w.insert(w.begin(), t.front());
    out.push_back(std::move(w));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Predicate make_interleave_merge(const AlphabetPtr& merge, const MergePolicy& policy) {
  MergeView mv = MergeView::of(merge);
  const TraceTable* tt = mv.reactive.table;
  if (tt->model() != TraceTable::Model::Seq)
    throw ConfigError("the interleaving merge needs a sequence trace universe");
  const std::size_t n = tt->size();

  // shuffle_ok[s][t] marks the in-universe interleavings of extensions s, t
  std::vector<Bitset> shuffle_ok(n * n, Bitset(n));
  for (std::uint32_t s = 0; s < n; ++s) {
    for (std::uint32_t t = 0; t < n; ++t) {
      Bitset& ok = shuffle_ok[s * n + t];
      for (const EventSeq& u : interleavings(*tt->seq_value(s), *tt->seq_value(t))) {
        if (auto i = tt->find(nlohmann::json(u))) ok.set(*i);
      }
    }
  }

  // The shuffle condition is stated purely on trace differences, with the
  // totalised subtraction reading a non-extending indexed trace as the
  // empty contribution. Absolute guards on 0.tr and 1.tr would collapse to
  // nothing under history deletion and lose the R2m fixed point; on rows
  // reachable from R1-healthy processes the indexed traces extend tr
  // anyway, so nothing observable changes.
  const Alphabet& al = *merge;
  Predicate core = Predicate::of_bindings(merge, [&al, mv, tt, &shuffle_ok, policy,
                                                  n](const BindingView& b) {
    const std::uint32_t tr = b[mv.reactive.tr];
    const std::uint32_t trp = b[mv.reactive.trp];
    if (!tt->prefix(tr, trp)) return false;
    const std::uint32_t ext0 = tt->subtract(b[mv.idx0_tr], tr);
    const std::uint32_t ext1 = tt->subtract(b[mv.idx1_tr], tr);
    const std::uint32_t ext = tt->subtract(trp, tr);
    if (!shuffle_ok[ext0 * n + ext1].test(ext)) return false;
    const std::uint32_t w0 = b[mv.idx0_wait];
    const std::uint32_t w1 = b[mv.idx1_wait];
    const std::uint32_t want_wait = policy.wait_disjunction ? (w0 | w1) : (w0 & w1);
    if (b[mv.reactive.waitp] != want_wait) return false;
    // program variables resolve by the policy's bias
    const std::size_t nb = al.n_before();
    const std::size_t after_base = 3 * nb;
    const std::size_t chosen_base = policy.state_left_bias ? mv.idx0_base : mv.idx1_base;
    for (std::size_t k = 0; k < nb; ++k) {
      const std::size_t after = after_base + k;
      if (after == mv.reactive.trp || after == mv.reactive.waitp) continue;
      if (b[after] != b[chosen_base + k]) return false;
    }
    return true;
  });

  Predicate waiting = Predicate::of_rows(merge, [&al, w = mv.reactive.wait](std::uint64_t r) {
    return al.digit(r, w) == 1;
  });
  return cond(skip(merge), waiting, core);
}

Predicate swap_indices(const Predicate& m) {
  MergeView::of(m.alphabet());
  const std::uint64_t A = m.alphabet()->after_block();
  const Bitset& rows = m.rows();
  return Predicate::of_rows(m.alphabet(), [&rows, A](std::uint64_t r) {
    const std::uint64_t prime = r % A;
    std::uint64_t rest = r / A;
    const std::uint64_t i1 = rest % A;
    rest /= A;
    const std::uint64_t i0 = rest % A;
    const std::uint64_t before = rest / A;
    return rows.test(((before * A + i1) * A + i0) * A + prime);
  });
}

Predicate contribution_dominated(const AlphabetPtr& merge) {
  MergeView mv = MergeView::of(merge);
  const TraceTable* tt = mv.reactive.table;
  if (tt->model() != TraceTable::Model::Seq)
    throw ConfigError("contribution_dominated needs a sequence universe");
  return Predicate::of_bindings(merge, [mv, tt](const BindingView& b) {
    const std::uint32_t tr = b[mv.reactive.tr];
    const std::size_t ext = tt->seq_value(tt->subtract(b[mv.reactive.trp], tr))->size();
    const std::size_t e0 = tt->seq_value(tt->subtract(b[mv.idx0_tr], tr))->size();
    const std::size_t e1 = tt->seq_value(tt->subtract(b[mv.idx1_tr], tr))->size();
    return e0 <= ext && e1 <= ext;
  });
}

TheoryReport check_parallel_closure(const Predicate& p, const Predicate& q,
                                    const Predicate& m) {
  TheoryReport rep;
  rep.theorem = "parallel-closure";
  auto rh = [](const Predicate& x) { return R(x); };
  const bool pre_ok = is_healthy(rh, p) && is_healthy(rh, q) && Rm(m) == m;
  Predicate composed = par_by_merge(p, m, q);
  TheoryReport eq = equal_report("parallel-closure", R(composed), composed);
  if (!pre_ok) {
    rep.verified = false;
    rep.note = std::string("precondition failed; closure equality held: ") +
               (eq.verified ? "yes" : "no");
    rep.counterexample = eq.counterexample;
    return rep;
  }
  return eq;
}

}  // namespace utp
