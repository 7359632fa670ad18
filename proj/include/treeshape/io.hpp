#ifndef TREESHAPE_IO_HPP_
#define TREESHAPE_IO_HPP_

// CSV and JSON renderings of the library's tables. Exact values are written
// as separate numerator and denominator columns; the float column is the
// shortest decimal that round-trips the nearest double.

#include <string>

#include "treeshape/analysis.hpp"
#include "treeshape/exact_dist.hpp"
#include "treeshape/generators.hpp"
#include "treeshape/moments.hpp"

namespace treeshape {

auto format_double(double x) -> std::string;

// a,b,numerator,denominator,float64
auto joint_csv(const JointPmf& pmf) -> std::string;
// k,numerator,denominator,float64
auto marginal_csv(const MarginalPmf& pmf) -> std::string;
auto joint_json(const JointPmf& pmf) -> std::string;
auto marginal_json(const MarginalPmf& pmf) -> std::string;

// n,mean_a,mean_b,var_a,var_b,cov_ab (p/q or NA), the same as floats, corr_ab
auto moments_csv_header() -> std::string;
auto moments_csv_row(const MomentSummary& s) -> std::string;

// n,model,tvd_numerator,tvd_denominator,tvd_float
auto tvd_csv(const TvdSequence& seq, bool header = true) -> std::string;

// a,b,count
auto histogram_csv(const CountHistogram& hist) -> std::string;

}  // namespace treeshape

#endif  // TREESHAPE_IO_HPP_
