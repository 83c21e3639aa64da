#pragma once

#include <optional>
#include <stdexcept>
#include <utility>

#include "braid/centralizer.hpp"
#include "braid/parabolic.hpp"
#include "braid/simconj.hpp"
#include "braid/word.hpp"

namespace braid {

// Decide whether g' lies in the double coset A g B.
struct DCPInstance {
  int n = 2;
  ParabolicSpec a_spec;
  ParabolicSpec b_spec;
  BraidWord g;
  BraidWord g_prime;
};

void validate(const DCPInstance& inst);

// Intermediates of the reduction, kept for reporting.
struct DCPDiagnostics {
  BraidWord a_tilde;       // raw simultaneous-conjugacy witness
  int delta_exponent = 0;  // k with a_tilde = Delta^{2k} a_hat
  BraidWord a_hat;         // block part of a_tilde
  BraidWord b_hat;         // block part of g1^{-1} a_tilde^{-1} g1'
};

struct DCPSolution {
  BraidWord a;  // member of A
  BraidWord b;  // member of B
  DCPDiagnostics diagnostics;
};

struct DCPResult {
  SolveStatus status = SolveStatus::NoSolution;
  std::optional<DCPSolution> solution;
};

// Raised when a step that the underlying theory guarantees fails anyway
// (the returned conjugacy witness cannot be split as Delta^{2k} * block
// element, or the derived b is outside its block). Carries diagnostics.
class InvariantViolation : public std::logic_error {
 public:
  InvariantViolation(const std::string& what, DCPDiagnostics diag)
      : std::logic_error(what), diagnostics(std::move(diag)) {}
  DCPDiagnostics diagnostics;
};

// The simultaneous conjugacy system for a standardized instance:
//   s = (c_1,...,c_p, g d_1 g^{-1},...), t = (c_1,...,c_p, g' d_1 g'^{-1},...)
std::pair<ConjTuple, ConjTuple> build_simcp_instance(
    const BraidWord& g, const BraidWord& g_prime, const CentralizerGens& cgens,
    const CentralizerGens& dgens);

DCPResult solve_dcp(const DCPInstance& inst, const SearchOptions& opts = {});

// Test utility for the exponent lemma: whenever g h1 g^{-1} h2 is an even
// Delta power, that power must be zero. Returns true if the claim holds on
// this input (vacuously when the product is not an even Delta power).
bool check_k_zero(const BraidWord& h1, const Interval& iv1,
                  const BraidWord& h2, const Interval& iv2, const BraidWord& g);

}  // namespace braid
