#include "oracles.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace oracle {

double mann_whitney_auc(const rocaware::ScoredDataset& ds) {
    long long wins2 = 0;  // doubled: win = 2, tie = 1
    long long pairs = 0;
    for (std::size_t i = 0; i < ds.size(); ++i) {
        if (!ds.positive(i)) continue;
        for (std::size_t j = 0; j < ds.size(); ++j) {
            if (ds.positive(j)) continue;
            ++pairs;
            if (ds.score(i) > ds.score(j))
                wins2 += 2;
            else if (ds.score(i) == ds.score(j))
                wins2 += 1;
        }
    }
    return static_cast<double>(wins2) / (2.0 * static_cast<double>(pairs));
}

RateAt recount(const rocaware::ScoredDataset& ds, double t) {
    RateAt r;
    for (std::size_t i = 0; i < ds.size(); ++i) {
        const bool est = ds.score(i) > t;
        if (ds.positive(i)) {
            ++r.ap;
            r.tp += est;
        } else {
            ++r.an;
            r.fp += est;
        }
    }
    return r;
}

rocaware::ScoredDataset GridData::dataset() const {
    std::vector<double> s;
    for (int p : pct) s.push_back(p / 100.0);
    return rocaware::ScoredDataset(std::move(s), label);
}

std::size_t GridData::positives() const {
    std::size_t n = 0;
    for (auto l : label) n += l;
    return n;
}

GridData random_grid_data(std::mt19937_64& rng, std::size_t max_n) {
    std::uniform_int_distribution<std::size_t> size(2, max_n);
    GridData g;
    while (true) {
        const std::size_t n = size(rng);
        // A small pool of distinct values forces ties; a skew per class gives
        // the whole range from worse-than-random to perfect.
        std::uniform_int_distribution<int> pool_size(1, 12);
        std::uniform_int_distribution<int> any(0, 100);
        std::vector<int> pool(static_cast<std::size_t>(pool_size(rng)));
        for (auto& v : pool) v = any(rng);
        std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        const double skew = u(rng);
        g.pct.assign(n, 0);
        g.label.assign(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            g.label[i] = u(rng) < 0.5;
            int a = pool[pick(rng)], b = pool[pick(rng)];
            if (u(rng) < skew) g.pct[i] = g.label[i] ? std::max(a, b) : std::min(a, b);
            else g.pct[i] = a;
        }
        const auto p = g.positives();
        if (p > 0 && p < n) return g;
    }
}

namespace {

void push_run(std::vector<std::pair<int, int>>& runs, int k, bool on) {
    if (!on) return;
    if (!runs.empty() && runs.back().second == k - 1)
        runs.back().second = k;
    else
        runs.emplace_back(k, k);
}

} // namespace

GridVerdict dense_grid(const GridData& g) {
    long long ap = 0, an = 0;
    for (auto l : g.label) (l ? ap : an) += 1;
    GridVerdict v;
    bool all_ok = true;
    for (int k = 1; k < kGrid; ++k) {
        long long tp = 0, fp = 0;
        for (std::size_t i = 0; i < g.pct.size(); ++i) {
            // pct/100 > k/10000  <=>  pct*100 > k
            if (g.pct[i] * 100 > k) (g.label[i] ? tp : fp) += 1;
        }
        // TPR >= 1 - t  <=>  tp*10000 >= (10000-k)*ap
        const long long lhs_t = tp * kGrid, rhs_t = (kGrid - k) * ap;
        const long long lhs_f = fp * kGrid, rhs_f = (kGrid - k) * an;
        const bool tpr_ok = lhs_t >= rhs_t;
        const bool fpr_ok = lhs_f <= rhs_f;
        if (lhs_t > rhs_t || lhs_f < rhs_f) v.strict_somewhere = true;
        all_ok = all_ok && tpr_ok && fpr_ok;
        push_run(v.ok_runs, k, tpr_ok && fpr_ok);
        push_run(v.tpr_bad_runs, k, !tpr_ok);
        push_run(v.fpr_bad_runs, k, !fpr_ok);
    }
    v.holds = all_ok && v.strict_somewhere;
    return v;
}

bool matches_runs(const rocaware::IntervalSet& set, const std::vector<std::pair<int, int>>& runs,
                  std::string* why) {
    std::vector<std::pair<int, int>> kept;
    for (auto r : runs)
        if (r.second > r.first) kept.push_back(r);
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (set.size() != kept.size())
        return fail("piece count " + std::to_string(set.size()) + " vs grid " +
                    std::to_string(kept.size()));
    const double step = 1.0 / kGrid;
    for (std::size_t i = 0; i < kept.size(); ++i) {
        const auto& iv = set.intervals()[i];
        const double lo = kept[i].first * step, hi = kept[i].second * step;
        if (std::abs(iv.lo - lo) > step + 1e-12 || std::abs(iv.hi - hi) > step + 1e-12) {
            std::ostringstream ss;
            ss << "piece " << i << ": [" << iv.lo << ", " << iv.hi << "] vs grid [" << lo << ", "
               << hi << "]";
            return fail(ss.str());
        }
    }
    return true;
}

std::vector<double> logistic_gradient(const std::vector<std::vector<double>>& columns,
                                      const std::vector<std::uint8_t>& labels,
                                      const std::vector<double>& coefficients) {
    std::vector<long double> g(coefficients.size(), 0.0L);
    for (std::size_t i = 0; i < labels.size(); ++i) {
        long double eta = coefficients[0];
        for (std::size_t j = 0; j < columns.size(); ++j)
            eta += static_cast<long double>(coefficients[j + 1]) * columns[j][i];
        const long double p = 1.0L / (1.0L + std::exp(-eta));
        const long double r = labels[i] - p;
        g[0] += r;
        for (std::size_t j = 0; j < columns.size(); ++j) g[j + 1] += r * columns[j][i];
    }
    return {g.begin(), g.end()};
}

std::size_t Table::col(const std::string& name) const {
    for (std::size_t j = 0; j < header.size(); ++j)
        if (header[j] == name) return j;
    throw std::runtime_error("no column " + name);
}

Table read_csv(const std::string& text) {
    Table t;
    std::istringstream in(text);
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::stringstream ls(line);
        std::string f;
        while (std::getline(ls, f, ',')) fields.push_back(f);
        if (!line.empty() && line.back() == ',') fields.emplace_back();
        if (first) {
            t.header = fields;
            first = false;
        } else {
            t.rows.push_back(fields);
        }
    }
    return t;
}

} // namespace oracle
