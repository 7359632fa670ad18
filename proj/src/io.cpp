#include "treeshape/io.hpp"

#include <fmt/format.h>

#include "json.hpp"

namespace treeshape {

namespace {

auto exact_columns(const Rational& q) -> std::string {
  return fmt::format("{},{},{}", q.get_num().get_str(), q.get_den().get_str(),
                     format_double(to_double(q)));
}

auto header_json(Model model, Rootedness rootedness, int n) -> nlohmann::ordered_json {
  auto j = nlohmann::ordered_json{};
  j["model"] = to_string(model);
  j["rootedness"] = to_string(rootedness);
  j["n"] = n;
  return j;
}

auto row_json(const Rational& q) -> nlohmann::ordered_json {
  auto j = nlohmann::ordered_json{};
  j["numerator"] = q.get_num().get_str();
  j["denominator"] = q.get_den().get_str();
  j["float64"] = to_double(q);
  return j;
}

auto exact_or_na(const std::optional<Rational>& q) -> std::string {
  return q ? to_string(*q) : "NA";
}

auto float_or_na(const std::optional<Rational>& q) -> std::string {
  return q ? format_double(to_double(*q)) : "NA";
}

}  // namespace

auto format_double(double x) -> std::string { return fmt::format("{}", x); }

auto joint_csv(const JointPmf& pmf) -> std::string {
  auto out = std::string{"a,b,numerator,denominator,float64\n"};
  for (const auto& [ab, p] : pmf.table) {
    out += fmt::format("{},{},{}\n", ab.first, ab.second, exact_columns(p));
  }
  return out;
}

auto marginal_csv(const MarginalPmf& pmf) -> std::string {
  auto out = std::string{"k,numerator,denominator,float64\n"};
  for (const auto& [k, p] : pmf.table) {
    out += fmt::format("{},{}\n", k, exact_columns(p));
  }
  return out;
}

auto joint_json(const JointPmf& pmf) -> std::string {
  auto j = header_json(pmf.model, pmf.rootedness, pmf.n);
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& [ab, p] : pmf.table) {
    auto row = nlohmann::ordered_json{{"a", ab.first}, {"b", ab.second}};
    row.update(row_json(p));
    j["rows"].push_back(std::move(row));
  }
  return j.dump(2) + "\n";
}

auto marginal_json(const MarginalPmf& pmf) -> std::string {
  auto j = header_json(pmf.model, pmf.rootedness, pmf.n);
  j["statistic"] = to_string(pmf.statistic);
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& [k, p] : pmf.table) {
    auto row = nlohmann::ordered_json{{"k", k}};
    row.update(row_json(p));
    j["rows"].push_back(std::move(row));
  }
  return j.dump(2) + "\n";
}

auto moments_csv_header() -> std::string {
  return "n,mean_a,mean_b,var_a,var_b,cov_ab,"
         "mean_a_float,mean_b_float,var_a_float,var_b_float,cov_ab_float,corr_ab\n";
}

auto moments_csv_row(const MomentSummary& s) -> std::string {
  return fmt::format("{},{},{},{},{},{},{},{},{},{},{},{}\n", s.n, exact_or_na(s.mean_a),
                     exact_or_na(s.mean_b), exact_or_na(s.var_a), exact_or_na(s.var_b),
                     exact_or_na(s.cov_ab), float_or_na(s.mean_a), float_or_na(s.mean_b),
                     float_or_na(s.var_a), float_or_na(s.var_b), float_or_na(s.cov_ab),
                     s.corr_ab ? format_double(*s.corr_ab) : "NA");
}

auto tvd_csv(const TvdSequence& seq, bool header) -> std::string {
  auto out = header ? std::string{"n,model,tvd_numerator,tvd_denominator,tvd_float\n"}
                    : std::string{};
  for (auto i = 0U; i < seq.ns.size(); ++i) {
    out += fmt::format("{},{},{}\n", seq.ns[i], to_string(seq.model),
                       exact_columns(seq.distance[i]));
  }
  return out;
}

auto histogram_csv(const CountHistogram& hist) -> std::string {
  auto out = std::string{"a,b,count\n"};
  for (const auto& [ab, count] : hist.cells) {
    out += fmt::format("{},{},{}\n", ab.first, ab.second, count);
  }
  return out;
}

}  // namespace treeshape
