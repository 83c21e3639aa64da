#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "braid/dcp.hpp"
#include "braid/parabolic.hpp"
#include "braid/simconj.hpp"
#include "braid/word.hpp"

namespace braid {

// Text form "n; k l; <alpha word>"; the alpha field may be empty.
ParabolicSpec parse_parabolic_spec(const std::string& text);
std::string format_parabolic_spec(const ParabolicSpec& spec);

// Instance file: line 1 "n", lines 2-3 the A- and B-specs, lines 4-5 g and
// g'. Blank lines are significant only for the (possibly empty) words.
DCPInstance parse_dcp_instance(std::istream& in);
DCPInstance read_dcp_instance(const std::string& path);
std::string format_dcp_instance(const DCPInstance& inst);

// One braid word per line; n supplied out of band.
ConjTuple parse_tuple(std::istream& in, int n);
ConjTuple read_tuple(const std::string& path, int n);

// Machine-readable result records ("--json"). Plain JSON text.
std::string dcp_result_json(const DCPResult& r);
std::string conj_result_json(const ConjResult& r);
std::string dcp_violation_json(const InvariantViolation& e);

}  // namespace braid
