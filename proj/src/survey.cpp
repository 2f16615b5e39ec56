#include "polydefect/survey.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <utility>

#include "polydefect/defect.hpp"
#include "polydefect/ehrhart.hpp"
#include "polydefect/errors.hpp"
#include "polydefect/parallel.hpp"

namespace polydefect {

const char* const kSegreWordingNote =
    "S_k1 x S_k2 has dual defect exactly when k1 != k2: the criterion 2 k_i > k1 + k2 needs unequal sizes, "
    "and c(S_1 x S_1) = 2 is the degree of the 2x2 determinant. The condition is sometimes misstated as "
    "k1 = k2; the rows below follow the criterion.";

namespace {

long ceil_div(long a, long b) { return (a + b - 1) / b; }

SurveyRow survey_product(const std::vector<long>& d, const std::vector<long>& k) {
  SurveyRow row;
  row.d = d;
  row.k = k;
  std::vector<LatticePolytope> factors;
  std::ostringstream name;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) name << " x ";
    if (d[i] != 1) name << d[i];
    name << "S_" << k[i];
    factors.push_back(dilate(unit_simplex(static_cast<int>(k[i])), d[i]));
    row.factor_codegree.push_back(codegree(factors.back()));
    row.factor_codegree_ceiling.push_back(ceil_div(k[i] + 1, d[i]));
  }
  row.member = name.str();
  LatticePolytope p = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) p = product(p, factors[i]);

  const EhrhartProfile prof = ehrhart_profile(p);
  row.dim = prof.dim;
  row.codegree = prof.codegree;
  row.degree = prof.degree;
  row.c_general = c_invariant(p);
  row.criterion = product_defect_criterion(factors);

  bool ok = segre_veronese_defect(d, k) == row.criterion;
  ok = ok && row.criterion == (row.c_general == 0);
  ok = ok && row.codegree == *std::max_element(row.factor_codegree.begin(), row.factor_codegree.end());
  for (std::size_t i = 0; i < d.size(); ++i) ok = ok && row.factor_codegree[i] == row.factor_codegree_ceiling[i];
  row.consistent = ok;
  return row;
}

}  // namespace

std::vector<SurveyRow> survey_segre(long k1_max, long k2_max, unsigned threads) {
  if (k1_max < 1 || k2_max < 1) throw InputError("segre survey needs k1max >= 1 and k2max >= 1");
  std::vector<std::pair<long, long>> members;
  for (long a = 1; a <= k1_max; ++a)
    for (long b = 1; b <= k2_max; ++b) members.emplace_back(a, b);
  return parallel_map(members.size(), threads, [&](std::size_t i) {
    const auto [a, b] = members[i];
    SurveyRow row = survey_product({1, 1}, {a, b});
    row.c_closed = c_segre_closed(a, b);
    row.consistent = row.consistent && *row.c_closed == row.c_general;
    return row;
  });
}

std::vector<SurveyRow> survey_dilated_simplices(long r, long d_max, long k_max, unsigned threads) {
  if (r < 1 || d_max < 1 || k_max < 1) throw InputError("dilated-simplex survey needs r, dmax, kmax >= 1");
  std::vector<std::pair<long, long>> kinds;
  for (long d = 1; d <= d_max; ++d)
    for (long k = 1; k <= k_max; ++k) kinds.emplace_back(d, k);

  // multisets of size r, as nondecreasing index sequences
  std::vector<std::vector<std::size_t>> members;
  std::vector<std::size_t> idx(static_cast<std::size_t>(r), 0);
  for (;;) {
    members.push_back(idx);
    std::size_t pos = idx.size();
    while (pos > 0 && idx[pos - 1] + 1 == kinds.size()) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (std::size_t q = pos; q < idx.size(); ++q) idx[q] = idx[pos - 1];
  }
  return parallel_map(members.size(), threads, [&](std::size_t i) {
    std::vector<long> d, k;
    for (std::size_t t : members[i]) {
      d.push_back(kinds[t].first);
      k.push_back(kinds[t].second);
    }
    return survey_product(d, k);
  });
}

Json to_json(const std::vector<SurveyRow>& rows, const std::string& family) {
  Json out{{"format", kReportFormat}, {"family", family}};
  if (family == "segre") out["note"] = kSegreWordingNote;
  Json arr = Json::array();
  bool all = true;
  for (const auto& r : rows) {
    Json j{{"member", r.member},
           {"d", r.d},
           {"k", r.k},
           {"dim", r.dim},
           {"codegree", r.codegree},
           {"degree", r.degree},
           {"factor_codegree", r.factor_codegree},
           {"factor_codegree_ceiling", r.factor_codegree_ceiling}};
    if (r.c_closed) j["c_closed"] = to_json(*r.c_closed);
    j["c"] = to_json(r.c_general);
    j["criterion"] = r.criterion;
    j["consistent"] = r.consistent;
    all = all && r.consistent;
    arr.push_back(std::move(j));
  }
  out["rows"] = std::move(arr);
  out["all_consistent"] = all;
  return out;
}

std::string render_survey(const std::vector<SurveyRow>& rows) {
  const bool closed = std::any_of(rows.begin(), rows.end(), [](const SurveyRow& r) { return r.c_closed.has_value(); });
  std::size_t w = 6;
  for (const auto& r : rows) w = std::max(w, r.member.size());
  std::ostringstream os;
  os << std::left << std::setw(static_cast<int>(w)) << "member" << std::right << std::setw(5) << "dim" << std::setw(5)
     << "cd" << std::setw(5) << "deg" << std::setw(14) << "ceil(k+1)/d";
  if (closed) os << std::setw(10) << "c_closed";
  os << std::setw(10) << "c" << std::setw(11) << "criterion" << std::setw(7) << "agree" << '\n';
  for (const auto& r : rows) {
    std::ostringstream ceil;
    for (std::size_t i = 0; i < r.factor_codegree_ceiling.size(); ++i)
      ceil << (i ? "," : "") << r.factor_codegree_ceiling[i];
    os << std::left << std::setw(static_cast<int>(w)) << r.member << std::right << std::setw(5) << r.dim << std::setw(5)
       << r.codegree << std::setw(5) << r.degree << std::setw(14) << ceil.str();
    if (closed) os << std::setw(10) << (r.c_closed ? to_string(*r.c_closed) : "-");
    os << std::setw(10) << to_string(r.c_general) << std::setw(11) << (r.criterion ? "defect" : "no") << std::setw(7)
       << (r.consistent ? "yes" : "NO") << '\n';
  }
  return os.str();
}

}  // namespace polydefect
