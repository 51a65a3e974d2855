#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hklab/report.hpp"
#include "hklab/spec_format.hpp"

namespace hklab {

/// True when the absolute errors shrink along a ladder: non-increasing
/// throughout, strictly decreasing from any nonzero error (an exactly-zero
/// error counts as converged).
bool ladder_errors_converging(const std::vector<BigRational>& errors);

ReportDocument cmd_stirling(uint32_t n, uint32_t k);
ReportDocument cmd_segre(int r, int s, const std::vector<uint64_t>& q_ladder, uint64_t budget);
ReportDocument cmd_rees(int s);
ReportDocument cmd_veronese(uint32_t e, const std::vector<uint64_t>& q_ladder, uint64_t budget);
ReportDocument cmd_quotient(uint64_t group_order, uint64_t mu, uint32_t p);

/// Ring-engine commands; e_max and budget ride on the InputSpec. The ideal
/// name may be empty: `ehk` then defaults to the maximal ideal, the others
/// require a unique ideal in the spec.
ReportDocument cmd_ehk(const InputSpec& spec, const std::string& ideal_name = "");
ReportDocument cmd_mhk(const InputSpec& spec, const std::string& ideal_name = "");
ReportDocument cmd_relhk(const InputSpec& spec, const std::string& inner_name,
                         const std::string& outer_name);

ReportDocument cmd_bounds(const BigRational& e_mult, const BigRational& ehk,
                          const BigRational& mhk, int d, bool is_hypersurface);
ReportDocument cmd_probe_q26(uint32_t p, int d, uint32_t e_max, uint64_t budget);

}  // namespace hklab
