#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "moncp/graph.hpp"
#include "moncp/solver.hpp"

namespace moncp {

/// Objective point as reported: f1 minimized, f2 (= f2_raw) maximized.
struct Point2 {
    double f1 = 0.0;
    double f2 = 0.0;
    friend bool operator==(const Point2&, const Point2&) = default;
};

struct Front {
    std::vector<Point2> points;
    std::string provenance;
};

Front make_front(std::span<const FrontPoint> pf, std::string provenance = {});

/// Non-dominated, duplicate-free subset, sorted by ascending f1.
Front nondominated(Front f);

/// Non-dominated subset of all pooled points.
Front union_reference_front(std::span<const Front> fronts);

/// Min/max of the minimized coordinates (f1, -f2) used for normalization.
struct Bounds {
    double f1_min = 0.0, f1_max = 0.0;
    double f2_min = 0.0, f2_max = 0.0;  // over -f2
};

Bounds bounds_of(std::span<const Front> fronts);

/// Maps a point into the unit box of minimized coordinates; a degenerate
/// axis maps to 0. Throws std::out_of_range for points outside the bounds.
std::pair<double, double> normalize(const Point2& p, const Bounds& b);

inline constexpr double hv_reference = 1.1;

/// Area dominated by already-normalized minimized points up to (1.1, 1.1).
double hypervolume_normalized(std::span<const std::pair<double, double>> points);

double hypervolume(const Front& front, const Bounds& bounds);

/// Mean distance from each reference point to its nearest front point, in
/// normalized space when `bounds` is given, raw (f1, f2) otherwise. +inf for
/// an empty front.
double igd(const Front& front, const Front& reference, const std::optional<Bounds>& bounds = std::nullopt);

/// Fraction of solutions selecting each node.
std::vector<double> gene_frequency(std::span<const DecisionVector> ps);

/// Nodes whose frequency is strictly above `threshold`.
std::vector<NodeId> select_drivers(std::span<const double> freq, double threshold = 0.8);

struct DrugCombination {
    std::string id;
    std::vector<std::string> targets;
    int efficacious = 0;
};

/// "combo_id<TAB>label<TAB>gene1,gene2,..." per line; '#' comments.
std::vector<DrugCombination> parse_drug_combinations(std::istream& in);

struct RankedCombination {
    std::string id;
    std::size_t score = 0;   // targets hit by the driver set
    double probability = 0.0;
    std::size_t rank = 0;    // competition rank, 1 = best
    int efficacious = 0;
};

/// Scores by driver overlap, normalized by the best score; descending.
std::vector<RankedCombination> rank_drug_combinations(std::span<const std::string> drivers,
                                                      std::span<const DrugCombination> combos);

class UndefinedMetric : public std::domain_error {
    using std::domain_error::domain_error;
};

/// Mann-Whitney AUC; ties count one half. Throws UndefinedMetric when only one
/// class is present.
double auc(std::span<const double> scores, std::span<const int> labels);

struct RankSumResult {
    double p_value = 1.0;
    double rank_sum = 0.0;  // of sample a
    double z = 0.0;         // normal approximation only
    bool exact = false;
};

/// Two-sided Wilcoxon rank-sum test. Exact permutation distribution (with
/// mid-ranks) when both samples have at most 10 values, tie-corrected
/// normal approximation otherwise.
RankSumResult rank_sum_compare(std::span<const double> a, std::span<const double> b);

}  // namespace moncp
