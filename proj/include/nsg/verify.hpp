// Cross-validation harness: runs every closed-form result against the
// brute-force oracle and against independent recomputation, printing one
// pass/fail line per check family.
//
// The two counting formulas are injected through VerifyHooks so tests can
// demonstrate that a wrong formula is actually caught; production callers
// use the defaults.

#pragma once

#include <functional>
#include <iosfwd>

#include "nsg/oracle.hpp"

namespace nsg {

struct VerifyHooks {
  // Number of reflective semigroups of a given genus.
  std::function<Int(Int)> genus_count;
  // Number of reflective semigroups with a given Frobenius number.
  std::function<Int(Int)> frobenius_count;

  // Wires the production counting formulas.
  VerifyHooks();
};

struct VerifyRequest {
  // Sweep genus 1..max_genus in the genus-indexed families.
  Int max_genus = 12;
  // Sweep Frobenius numbers 1..max_frobenius; -1 derives
  // min(2 * max_genus - 1, 2 * genus_limit - 1).
  Int max_frobenius = -1;
  // Cap forwarded to the oracle.
  Int genus_limit = kDefaultOracleGenusLimit;
};

// Runs all check families, writing one line per family ("pass <name> ..."
// or "FAIL <name>: <first counterexample>") plus a final summary line.
// Returns 0 when every family passes and 3 otherwise. Throws LimitExceeded
// when the request does not fit within genus_limit.
int run_verification(const VerifyRequest& request, const VerifyHooks& hooks,
                     std::ostream& out);

// Same with default hooks.
int run_verification(const VerifyRequest& request, std::ostream& out);

}  // namespace nsg
