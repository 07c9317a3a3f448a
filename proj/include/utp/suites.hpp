#pragma once

#include "json.hpp"
#include "utp/config.hpp"

namespace utp {

// Suite runners shared by the CLI and the acceptance harness. Each returns
// a deterministic report document:
//   { "schema": 1, "command": ..., "config": {...},
//     "reports": [...], "all_passed": bool }

// trace-algebra laws over the configured model
nlohmann::json run_lawsuite(const SuiteConfig& c);

// healthiness-condition theorems on sampled predicates over the universe
// (idempotence, commutation, monotonicity, trace contribution, sequential
// decomposition and closures, healthy lattice bounds; plus the exhaustive
// micro tier when configured)
nlohmann::json run_theory(const SuiteConfig& c);

// quantale laws Q1-Q3 on sampled healthy sets
nlohmann::json run_quantale(const SuiteConfig& c);

// parallel-by-merge: the worked interleaving example against its oracle,
// merge healthiness, symmetry, and the closure theorem on sampled triples
nlohmann::json run_parallel(const SuiteConfig& c);

// the exhaustive micro-tier family: distinct predicates generated from
// conjunctions/disjunctions of atomic constraints over a universe
std::vector<Predicate> micro_predicate_family(const dsl::Universe& u, std::size_t cap);

bool suite_passed(const nlohmann::json& report);

}  // namespace utp
