#include "gdss/fixtures/case_study.hpp"

#include "gdss/mcda/pairwise.hpp"

namespace gdss::fixtures {

mcda::PerformanceMatrix case_study_matrix() {
  using mcda::Direction;
  return mcda::PerformanceMatrix::from_labels(
      {"729", "732", "737", "740", "743", "745", "748", "1030", "1033", "1038", "1045", "1046", "1233",
       "1236", "1239", "1321", "1324", "1326"},
      {{"NUISANCES", Direction::Maximize},
       {"BRUIT", Direction::Maximize},
       {"IMPACTS", Direction::Maximize},
       {"GEOTECHNIQ", Direction::Maximize},
       {"EQUIPEMENT", Direction::Maximize},
       {"ACCESSIBIL", Direction::Maximize},
       {"CLIMAT", Direction::Maximize}},
      {
          {1.00, 0.99, 2, 6, 1867, 10, 0.68},
          {1.00, 0.98, 2, 6, 1957, 10, 0.71},
          {1.00, 0.97, 2, 6, 2047, 10, 0.70},
          {1.00, 0.97, 2, 6, 2147, 10, 0.69},
          {1.00, 0.93, 2, 6, 2233, 9, 0.67},
          {1.00, 0.96, 2, 6, 2185, 12, 0.84},
          {1.00, 0.67, 2, 6, 2220, 9, 0.68},
          {1.00, 0.15, 4, 6, 1832, 11, 0.71},
          {0.99, 0.55, 4, 6, 1906, 10, 0.74},
          {0.98, 0.27, 4, 6, 2037, 10, 0.75},
          {1.00, 0.96, 4, 6, 2232, 13, 0.86},
          {1.00, 0.69, 4, 6, 2186, 5, 0.78},
          {1.00, 0.62, 6, 3, 1911, 10, 0.70},
          {1.00, 1.00, 6, 3, 2070, 6, 0.85},
          {1.00, 1.00, 6, 3, 2142, 6, 0.85},
          {1.00, 0.98, 6, 6, 1648, 10, 0.84},
          {1.00, 0.98, 6, 6, 1756, 10, 0.68},
          {1.00, 0.98, 6, 6, 1821, 10, 0.83},
      });
}

std::vector<mcda::PrometheeParams> case_study_promethee() {
  return {
      {{7.51, 13.63, 13.63, 13.63, 17.2, 17.2, 17.2},
       {0.3, 0.3, 0, 55, 5, 0.3, 0.3},
       {0.6, 0.6, 0, 110, 10, 0.6, 0.6}},
      {{4.51, 7.08, 17.31, 18.63, 18.93, 17.52, 15.27},
       {0.35, 0.35, 0.3, 5, 4, 0.5, 0.35},
       {0.7, 0.7, 0.6, 110, 8, 1, 0.7}},
      {{6.15, 19.57, 13.79, 13.79, 13.79, 16.45, 16.45},
       {0.2, 0.2, 0.1, 30, 2, 0.15, 0.2},
       {0.4, 0.4, 0.2, 60, 4, 0.6, 0.4}},
      {{17.38, 29.4, 6.16, 6.16, 6.16, 17.38, 17.38},
       {0.25, 0.3, 0.15, 45, 3, 0.25, 0.25},
       {0.5, 0.6, 0.3, 90, 6, 0.5, 0.5}},
  };
}

std::vector<std::vector<Grid>> case_study_ahp_printed() {
  return {
      {
          {{1, 0.33, 0.14, 0.14}, {3, 1, 0.33, 5}, {7, 3, 1, 3}, {7, 0.2, 0.33, 1}},
          {{1, 7, 7, 0.33}, {0.14, 1, 7, 5}, {0.14, 0.14, 1, 0.33}, {3, 0.2, 3, 1}},
          {{1, 7, 3, 7}, {0.14, 1, 3, 5}, {0.33, 0.33, 1, 5}, {0.14, 0.2, 0.2, 1}},
          {{1, 0.14, 0.2, 0.11}, {7, 1, 7, 9}, {5, 0.14, 1, 5}, {9, 0.11, 0.2, 1}},
          {{1, 5, 1, 3}, {0.2, 1, 7, 0.33}, {1, 0.14, 1, 0.11}, {0.33, 3, 9, 1}},
      },
      {
          {{1, 5, 0.14, 3}, {0.2, 1, 0.11, 5}, {7, 7, 1, 0.14}, {0.33, 0.2, 7, 1}},
          {{1, 0.2, 0.11, 9}, {5, 1, 0.33, 5}, {9, 3, 1, 9}, {0.11, 0.2, 0.11, 1}},
          {{1, 5, 3, 7}, {0.2, 1, 3, 0.14}, {0.33, 0.33, 1, 0.14}, {0.14, 7, 7, 1}},
          {{1, 0.2, 7, 0.11}, {5, 1, 7, 0.33}, {0.14, 0.14, 1, 5}, {9, 3, 0.2, 1}},
          {{1, 5, 1, 3}, {0.2, 1, 7, 7}, {1, 0.14, 1, 0.11}, {0.33, 0.14, 9, 1}},
      },
      {
          {{1, 0.33, 7, 5}, {3, 1, 3, 5}, {0.14, 0.33, 1, 9}, {0.2, 0.2, 0.11, 1}},
          {{1, 0.11, 0.11, 0.2}, {9, 1, 0.2, 5}, {9, 5, 1, 9}, {5, 0.2, 0.11, 1}},
          {{1, 0.2, 0.2, 7}, {5, 1, 3, 0.14}, {5, 0.33, 1, 0.11}, {0.14, 7, 9, 1}},
          {{1, 3, 5, 0.11}, {0.33, 1, 0.14, 0.33}, {0.2, 7, 1, 0.2}, {9, 3, 5, 1}},
          {{1, 5, 7, 5}, {0.2, 1, 0.11, 9}, {0.14, 9, 1, 0.11}, {0.2, 0.11, 9, 1}},
      },
      {
          {{1, 0.33, 7, 5}, {3, 1, 7, 5}, {0.14, 0.14, 1, 0.2}, {0.2, 0.2, 5, 1}},
          {{1, 0.11, 3, 0.2}, {9, 1, 7, 0.14}, {0.33, 0.14, 1, 9}, {7, 7, 0.11, 1}},
          {{1, 3, 0.2, 7}, {0.33, 1, 7, 5}, {5, 0.14, 1, 0.11}, {0.14, 0.2, 9, 1}},
          {{1, 3, 5, 0.11}, {0.33, 1, 0.14, 0.14}, {0.2, 7, 1, 0.2}, {9, 7, 5, 1}},
          {{1, 0.33, 0.33, 5}, {3, 1, 0.33, 9}, {3, 3, 1, 0.11}, {0.2, 0.11, 9, 1}},
      },
  };
}

std::vector<mcda::SaatyJudgments> case_study_ahp() {
  auto upper = [](const Grid& g) {
    std::vector<double> out;
    for (std::size_t i = 0; i < g.size(); ++i) {
      for (std::size_t j = i + 1; j < g.size(); ++j) out.push_back(g[i][j]);
    }
    return mcda::pairwise_from_upper_triangle(out);
  };
  std::vector<mcda::SaatyJudgments> out;
  for (const auto& decider : case_study_ahp_printed()) {
    std::vector<mcda::PairwiseMatrix> actions;
    for (std::size_t c = 1; c < decider.size(); ++c) actions.push_back(upper(decider[c]));
    out.push_back({upper(decider[0]), std::move(actions)});
  }
  return out;
}

}  // namespace gdss::fixtures
