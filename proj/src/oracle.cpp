#include "moncp/oracle.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "moncp/digest.hpp"

namespace moncp {

OracleFront enumerate_pareto(const ProblemInstance& p, std::size_t n_limit) {
    const std::size_t n = p.dimension();
    if (n > n_limit || n >= 63)
        throw OracleRefusal("instance has " + std::to_string(n) + " nodes, oracle limit is " + std::to_string(n_limit));

    const auto& labels = p.labels().labels;
    // best f2 per f1 among feasible vectors, with every vector attaining it
    std::map<std::int64_t, std::pair<std::int64_t, std::vector<DecisionVector>>> best;

    DecisionVector x(n, 0);
    std::int64_t f1 = 0, f2 = 0;
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t k = 0; k < total; ++k) {
        if (k) {
            const auto bit = static_cast<std::size_t>(std::countr_zero(k));
            x[bit] ^= 1;
            const std::int64_t d = x[bit] ? 1 : -1;
            f1 += d;
            if (labels[bit]) f2 += d;
        }
        if (violation(p.model(), p.graph(), x).total_violation != 0.0) continue;
        auto [it, fresh] = best.try_emplace(f1, f2, std::vector<DecisionVector>{});
        auto& [level, vectors] = it->second;
        if (fresh || f2 > level) {
            level = f2;
            vectors.assign(1, x);
        } else if (f2 == level) {
            vectors.push_back(x);
        }
    }

    OracleFront out;
    out.vectors_checked = total;
    out.instance_hash = instance_digest(p);
    std::int64_t best_f2 = std::numeric_limits<std::int64_t>::min();
    for (auto& [level_f1, entry] : best) {
        if (entry.first <= best_f2) continue;  // dominated by a smaller selection
        best_f2 = entry.first;
        out.pf.push_back({level_f1, entry.first});
        std::sort(entry.second.begin(), entry.second.end());
        out.ps.push_back(std::move(entry.second));
    }
    return out;
}

}  // namespace moncp
