#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polydefect/lattice_algebra.hpp"
#include "polydefect/report.hpp"

namespace polydefect {

struct SurveyRow {
  std::string member;
  std::vector<long> d, k;
  int dim = 0;
  int codegree = 0;
  int degree = 0;
  std::vector<int> factor_codegree;          // direct
  std::vector<long> factor_codegree_ceiling;  // ceil((k+1)/d)
  std::optional<Int> c_closed;                // Segre family only
  Int c_general;
  bool criterion = false;
  bool consistent = true;
};

// P^{k1} x P^{k2} for 1 <= k1 <= k1_max, 1 <= k2 <= k2_max.
std::vector<SurveyRow> survey_segre(long k1_max, long k2_max, unsigned threads = 1);
// Products of r dilated simplices d_i S_{k_i}, 1 <= d_i <= d_max, 1 <= k_i <= k_max,
// one row per multiset of factors.
std::vector<SurveyRow> survey_dilated_simplices(long r, long d_max, long k_max, unsigned threads = 1);

Json to_json(const std::vector<SurveyRow>& rows, const std::string& family);
std::string render_survey(const std::vector<SurveyRow>& rows);

// Wording note attached to Segre surveys.
extern const char* const kSegreWordingNote;

}  // namespace polydefect
