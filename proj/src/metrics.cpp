#include "moncp/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "moncp/evo.hpp"

namespace moncp {

Front make_front(std::span<const FrontPoint> pf, std::string provenance) {
    Front f;
    f.provenance = std::move(provenance);
    for (const auto& p : pf) f.points.push_back({static_cast<double>(p.f1), static_cast<double>(p.f2)});
    return nondominated(std::move(f));
}

Front nondominated(Front f) {
    auto& pts = f.points;
    std::sort(pts.begin(), pts.end(), [](const Point2& a, const Point2& b) {
        return a.f1 != b.f1 ? a.f1 < b.f1 : a.f2 > b.f2;
    });
    std::vector<Point2> kept;
    for (const auto& p : pts) {
        // sorted by f1 asc, f2 desc: p survives iff its f2 beats every earlier one
        if (!kept.empty() && p.f2 <= kept.back().f2) continue;
        kept.push_back(p);
    }
    pts = std::move(kept);
    return f;
}

Front union_reference_front(std::span<const Front> fronts) {
    if (fronts.empty()) throw std::invalid_argument("reference front needs at least one front");
    Front pooled;
    pooled.provenance = "union";
    for (const auto& f : fronts) pooled.points.insert(pooled.points.end(), f.points.begin(), f.points.end());
    return nondominated(std::move(pooled));
}

Bounds bounds_of(std::span<const Front> fronts) {
    Bounds b;
    bool first = true;
    for (const auto& f : fronts)
        for (const auto& p : f.points) {
            const double g = -p.f2;
            if (first) {
                b = {p.f1, p.f1, g, g};
                first = false;
                continue;
            }
            b.f1_min = std::min(b.f1_min, p.f1);
            b.f1_max = std::max(b.f1_max, p.f1);
            b.f2_min = std::min(b.f2_min, g);
            b.f2_max = std::max(b.f2_max, g);
        }
    return b;
}

std::pair<double, double> normalize(const Point2& p, const Bounds& b) {
    auto axis = [](double v, double lo, double hi) {
        if (v < lo || v > hi) throw std::out_of_range("point lies outside the normalization bounds");
        return hi > lo ? (v - lo) / (hi - lo) : 0.0;
    };
    return {axis(p.f1, b.f1_min, b.f1_max), axis(-p.f2, b.f2_min, b.f2_max)};
}

double hypervolume_normalized(std::span<const std::pair<double, double>> points) {
    std::vector<std::pair<double, double>> pts;
    for (const auto& p : points)
        if (p.first < hv_reference && p.second < hv_reference) pts.push_back(p);
    std::sort(pts.begin(), pts.end());
    double area = 0.0, ceiling = hv_reference;
    for (const auto& [x, y] : pts) {
        if (y >= ceiling) continue;  // dominated by an earlier point
        area += (hv_reference - x) * (ceiling - y);
        ceiling = y;
    }
    return area;
}

double hypervolume(const Front& front, const Bounds& bounds) {
    std::vector<std::pair<double, double>> norm;
    norm.reserve(front.points.size());
    for (const auto& p : front.points) norm.push_back(normalize(p, bounds));
    return hypervolume_normalized(norm);
}

double igd(const Front& front, const Front& reference, const std::optional<Bounds>& bounds) {
    if (reference.points.empty()) throw std::invalid_argument("IGD needs a non-empty reference front");
    if (front.points.empty()) return std::numeric_limits<double>::infinity();
    auto coords = [&](const Point2& p) -> std::pair<double, double> {
        if (bounds) return normalize(p, *bounds);
        return {p.f1, p.f2};
    };
    std::vector<std::pair<double, double>> mine;
    for (const auto& p : front.points) mine.push_back(coords(p));
    double total = 0.0;
    for (const auto& r : reference.points) {
        const auto [rx, ry] = coords(r);
        double best = std::numeric_limits<double>::infinity();
        for (const auto& [x, y] : mine) best = std::min(best, std::hypot(x - rx, y - ry));
        total += best;
    }
    return total / static_cast<double>(reference.points.size());
}

std::vector<double> gene_frequency(std::span<const DecisionVector> ps) {
    if (ps.empty()) throw std::invalid_argument("gene frequency needs at least one solution");
    const std::size_t n = ps.front().size();
    std::vector<double> freq(n, 0.0);
    for (const auto& x : ps) {
        if (x.size() != n) throw std::invalid_argument("solutions differ in length");
        for (std::size_t i = 0; i < n; ++i) freq[i] += x[i];
    }
    for (auto& f : freq) f /= static_cast<double>(ps.size());
    return freq;
}

std::vector<NodeId> select_drivers(std::span<const double> freq, double threshold) {
    std::vector<NodeId> out;
    for (std::size_t i = 0; i < freq.size(); ++i)
        if (freq[i] > threshold) out.push_back(static_cast<NodeId>(i));
    return out;
}

std::vector<DrugCombination> parse_drug_combinations(std::istream& in) {
    std::vector<DrugCombination> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, '\t')) fields.push_back(field);
        if (fields.size() != 3) throw ParseError("expected 3 tab-separated fields", lineno);
        DrugCombination c;
        c.id = fields[0];
        if (fields[1] != "0" && fields[1] != "1") throw ParseError("efficacy label must be 0 or 1", lineno);
        c.efficacious = fields[1] == "1";
        std::stringstream genes(fields[2]);
        std::string gene;
        while (std::getline(genes, gene, ','))
            if (!gene.empty()) c.targets.push_back(gene);
        if (c.targets.empty()) throw ParseError("combination without targets", lineno);
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<RankedCombination> rank_drug_combinations(std::span<const std::string> drivers,
                                                      std::span<const DrugCombination> combos) {
    if (combos.empty()) throw std::invalid_argument("no drug combinations to rank");
    std::vector<std::string> sorted_drivers(drivers.begin(), drivers.end());
    std::sort(sorted_drivers.begin(), sorted_drivers.end());

    std::vector<RankedCombination> out;
    std::size_t top = 0;
    for (const auto& c : combos) {
        std::vector<std::string> targets = c.targets;
        std::sort(targets.begin(), targets.end());
        targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
        std::size_t score = 0;
        for (const auto& t : targets) score += std::binary_search(sorted_drivers.begin(), sorted_drivers.end(), t);
        top = std::max(top, score);
        out.push_back({c.id, score, 0.0, 0, c.efficacious});
    }
    for (auto& r : out) r.probability = static_cast<double>(r.score) / static_cast<double>(std::max<std::size_t>(1, top));
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.score > b.score; });
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i].rank = (i > 0 && out[i].score == out[i - 1].score) ? out[i - 1].rank : i + 1;
    return out;
}

double auc(std::span<const double> scores, std::span<const int> labels) {
    if (scores.size() != labels.size()) throw std::invalid_argument("scores and labels differ in length");
    auto ranks = mean_ranks(scores);
    double pos_rank_sum = 0.0;
    std::size_t pos = 0;
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i]) {
            ++pos;
            pos_rank_sum += ranks[i];
        }
    const std::size_t neg = labels.size() - pos;
    if (pos == 0 || neg == 0) throw UndefinedMetric("AUC needs both positive and negative labels");
    const double np = static_cast<double>(pos), nn = static_cast<double>(neg);
    return (pos_rank_sum - np * (np + 1.0) / 2.0) / (np * nn);
}

RankSumResult rank_sum_compare(std::span<const double> a, std::span<const double> b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("rank-sum test needs two non-empty samples");
    std::vector<double> pooled(a.begin(), a.end());
    pooled.insert(pooled.end(), b.begin(), b.end());
    const auto ranks = mean_ranks(pooled);
    const std::size_t n1 = a.size(), n2 = b.size(), total = n1 + n2;

    RankSumResult res;
    for (std::size_t i = 0; i < n1; ++i) res.rank_sum += ranks[i];

    if (n1 <= 10 && n2 <= 10) {
        // mid-ranks doubled are integers; DP over subsets of size n1
        std::vector<std::size_t> doubled(total);
        for (std::size_t i = 0; i < total; ++i) doubled[i] = static_cast<std::size_t>(std::lround(2.0 * ranks[i]));
        const std::size_t max_sum = std::accumulate(doubled.begin(), doubled.end(), std::size_t{0});
        std::vector<std::vector<double>> count(n1 + 1, std::vector<double>(max_sum + 1, 0.0));
        count[0][0] = 1.0;
        for (std::size_t r : doubled)
            for (std::size_t k = n1; k-- > 0;)
                for (std::size_t s = max_sum - r + 1; s-- > 0;)
                    if (count[k][s] != 0.0) count[k + 1][s + r] += count[k][s];
        const auto centre = static_cast<long long>(n1 * (total + 1));  // 2·E[W]
        const long long observed = std::llabs(std::lround(2.0 * res.rank_sum) - centre);
        double extreme = 0.0, all = 0.0;
        for (std::size_t s = 0; s <= max_sum; ++s) {
            const double c = count[n1][s];
            if (c == 0.0) continue;
            all += c;
            if (std::llabs(static_cast<long long>(s) - centre) >= observed) extreme += c;
        }
        res.exact = true;
        res.p_value = std::min(1.0, extreme / all);
        return res;
    }

    const double N = static_cast<double>(total);
    const double mean = static_cast<double>(n1) * (N + 1.0) / 2.0;
    std::vector<double> sorted = pooled;
    std::sort(sorted.begin(), sorted.end());
    double tie_term = 0.0;
    for (std::size_t lo = 0; lo < sorted.size();) {
        std::size_t hi = lo;
        while (hi < sorted.size() && sorted[hi] == sorted[lo]) ++hi;
        const double t = static_cast<double>(hi - lo);
        tie_term += t * t * t - t;
        lo = hi;
    }
    const double var = static_cast<double>(n1) * static_cast<double>(n2) / 12.0 * ((N + 1.0) - tie_term / (N * (N - 1.0)));
    if (var <= 0.0) return res;
    res.z = (res.rank_sum - mean) / std::sqrt(var);
    res.p_value = std::min(1.0, std::erfc(std::fabs(res.z) / std::sqrt(2.0)));
    return res;
}

}  // namespace moncp
