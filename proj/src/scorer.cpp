#include "rocaware/scorer.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

#include "rocaware/error.hpp"
#include "rocaware/simd/kernels.hpp"

namespace rocaware {

FeatureDataset::FeatureDataset(std::vector<std::string> names,
                               std::vector<std::vector<double>> columns,
                               std::vector<std::uint8_t> labels, std::vector<std::string> ids)
    : names_(std::move(names)),
      columns_(std::move(columns)),
      labels_(std::move(labels)),
      ids_(std::move(ids)) {
    if (names_.size() != columns_.size()) throw Error("feature name/column count mismatch");
    for (const auto& c : columns_) {
        if (c.size() != labels_.size()) throw Error("feature column length mismatch");
        for (double v : c)
            if (!std::isfinite(v)) throw Error("non-finite feature value");
    }
    if (!ids_.empty() && ids_.size() != labels_.size()) throw Error("id count mismatch");
    for (auto& l : labels_) l = l ? 1 : 0;
}

std::size_t FeatureDataset::positives() const {
    return static_cast<std::size_t>(std::count(labels_.begin(), labels_.end(), 1));
}

std::size_t FeatureDataset::index_of(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) throw Error("unknown feature '" + name + "'");
    return static_cast<std::size_t>(it - names_.begin());
}

FeatureDataset FeatureDataset::select(std::span<const std::string> names) const {
    std::vector<std::size_t> idx;
    for (const auto& n : names) idx.push_back(index_of(n));
    return select(idx);
}

FeatureDataset FeatureDataset::select(std::span<const std::size_t> indices) const {
    std::vector<std::string> names;
    std::vector<std::vector<double>> cols;
    for (auto j : indices) {
        if (j >= columns_.size()) throw Error("feature index out of range");
        names.push_back(names_[j]);
        cols.push_back(columns_[j]);
    }
    return FeatureDataset(std::move(names), std::move(cols), labels_, ids_);
}

FeatureDataset FeatureDataset::without_row(std::size_t row) const {
    auto drop = [row](auto v) {
        if (!v.empty()) v.erase(v.begin() + static_cast<std::ptrdiff_t>(row));
        return v;
    };
    std::vector<std::vector<double>> cols;
    cols.reserve(columns_.size());
    for (const auto& c : columns_) cols.push_back(drop(c));
    return FeatureDataset(names_, std::move(cols), drop(labels_), drop(ids_));
}

FeatureDataset FeatureDataset::with_label(std::size_t row, bool positive) const {
    auto labels = labels_;
    labels.at(row) = positive ? 1 : 0;
    return FeatureDataset(names_, columns_, std::move(labels), ids_);
}

namespace {

double sigmoid(double eta) {
    if (eta >= 0.0) return 1.0 / (1.0 + std::exp(-eta));
    const double e = std::exp(eta);
    return e / (1.0 + e);
}

double softplus(double eta) {
    return eta > 0.0 ? eta + std::log1p(std::exp(-eta)) : std::log1p(std::exp(eta));
}

struct Standardized {
    std::vector<std::vector<double>> z;
    std::vector<double> mean;
    std::vector<double> sd;
};

Standardized standardize(const FeatureDataset& ds) {
    const auto n = static_cast<double>(ds.rows());
    Standardized s;
    for (std::size_t j = 0; j < ds.features(); ++j) {
        auto col = ds.column(j);
        double m = 0.0;
        for (double v : col) m += v;
        m /= n;
        double ss = 0.0;
        for (double v : col) ss += (v - m) * (v - m);
        const double sd = std::sqrt(ss / n);
        if (!(sd > 0.0)) throw Error("collinear features");
        std::vector<double> z(col.size());
        for (std::size_t i = 0; i < col.size(); ++i) z[i] = (col[i] - m) / sd;
        s.z.push_back(std::move(z));
        s.mean.push_back(m);
        s.sd.push_back(sd);
    }
    return s;
}

void require_full_rank(const std::vector<std::vector<double>>& z, std::size_t n) {
    if (z.empty()) return;
    Eigen::MatrixXd m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(z.size()));
    for (std::size_t j = 0; j < z.size(); ++j)
        for (std::size_t i = 0; i < n; ++i)
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = z[j][i];
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(m);
    qr.setThreshold(1e-9);
    if (static_cast<std::size_t>(qr.rank()) < z.size()) throw Error("collinear features");
}

} // namespace

double LogisticModel::predict(std::span<const double> x) const {
    if (x.size() + 1 != coefficients.size()) throw Error("feature count mismatch in predict");
    double eta = coefficients[0];
    for (std::size_t j = 0; j < x.size(); ++j) eta += coefficients[j + 1] * x[j];
    return sigmoid(eta);
}

LogisticModel fit_logistic(const FeatureDataset& ds, const FitOptions& opts) {
    const std::size_t n = ds.rows();
    const std::size_t m = ds.features();
    if (n < m + 2) throw Error("too few rows for the number of features");
    const std::size_t pos = ds.positives();
    if (pos == 0 || pos == n) throw Error("single-class data");

    const Standardized st = standardize(ds);
    require_full_rank(st.z, n);

    const std::size_t p = m + 1;
    std::vector<double> y(n);
    for (std::size_t i = 0; i < n; ++i) y[i] = ds.labels()[i];
    const std::vector<double> ones(n, 1.0);
    auto column = [&](std::size_t j) -> std::span<const double> {
        return j == 0 ? std::span<const double>(ones) : std::span<const double>(st.z[j - 1]);
    };

    std::vector<double> eta(n), mu(n), w(n), resid(n);
    auto linear_predictor = [&](const Eigen::VectorXd& g) {
        std::fill(eta.begin(), eta.end(), g(0));
        for (std::size_t j = 1; j < p; ++j)
            simd::axpy(g(static_cast<Eigen::Index>(j)), st.z[j - 1], eta);
    };
    auto objective = [&](const Eigen::VectorXd& g) {
        double ll = 0.0;
        for (std::size_t i = 0; i < n; ++i) ll += y[i] * eta[i] - softplus(eta[i]);
        for (std::size_t j = 1; j < p; ++j)
            ll -= 0.5 * opts.ridge * g(static_cast<Eigen::Index>(j)) * g(static_cast<Eigen::Index>(j));
        return ll;
    };

    const double ybar = static_cast<double>(pos) / static_cast<double>(n);
    Eigen::VectorXd gamma = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(p));
    gamma(0) = std::log(ybar / (1.0 - ybar));
    linear_predictor(gamma);
    double ll = objective(gamma);

    LogisticModel model;
    model.ridge = opts.ridge;
    Eigen::MatrixXd hess(p, p);
    Eigen::VectorXd grad(p);
    for (int it = 1; it <= opts.max_iterations; ++it) {
        for (std::size_t i = 0; i < n; ++i) {
            mu[i] = sigmoid(eta[i]);
            w[i] = mu[i] * (1.0 - mu[i]);
            resid[i] = y[i] - mu[i];
        }
        for (std::size_t j = 0; j < p; ++j) {
            const auto jj = static_cast<Eigen::Index>(j);
            grad(jj) = simd::dot(column(j), resid);
            if (j > 0) grad(jj) -= opts.ridge * gamma(jj);
            for (std::size_t k = 0; k <= j; ++k) {
                const auto kk = static_cast<Eigen::Index>(k);
                hess(jj, kk) = simd::weighted_dot(column(j), w, column(k));
                hess(kk, jj) = hess(jj, kk);
            }
            if (j > 0) hess(jj, jj) += opts.ridge;
        }

        Eigen::LDLT<Eigen::MatrixXd> ldlt(hess);
        Eigen::VectorXd delta = ldlt.solve(grad);
        model.iterations = it;
        if (ldlt.info() != Eigen::Success || !delta.allFinite()) {
            model.separation = true;
            break;
        }

        // Newton step, halved while the objective would decrease.
        double step = 1.0;
        Eigen::VectorXd candidate = gamma + delta;
        linear_predictor(candidate);
        double ll_new = objective(candidate);
        for (int h = 0; h < 30 && ll_new < ll - 1e-12 * (1.0 + std::abs(ll)); ++h) {
            step *= 0.5;
            candidate = gamma + step * delta;
            linear_predictor(candidate);
            ll_new = objective(candidate);
        }
        gamma = candidate;
        ll = ll_new;

        if (gamma.cwiseAbs().maxCoeff() > opts.separation_bound) {
            model.separation = true;
            break;
        }
        if (step * delta.cwiseAbs().maxCoeff() < opts.tolerance) {
            model.converged = true;
            break;
        }
    }

    model.log_likelihood = ll;
    model.coefficients.assign(p, 0.0);
    double intercept = gamma(0);
    for (std::size_t j = 1; j < p; ++j) {
        const double b = gamma(static_cast<Eigen::Index>(j)) / st.sd[j - 1];
        model.coefficients[j] = b;
        intercept -= b * st.mean[j - 1];
    }
    model.coefficients[0] = intercept;
    return model;
}

std::vector<double> log_likelihood_gradient(const FeatureDataset& ds,
                                            std::span<const double> coefficients) {
    if (coefficients.size() != ds.features() + 1) throw Error("coefficient count mismatch");
    std::vector<double> g(coefficients.size(), 0.0);
    for (std::size_t i = 0; i < ds.rows(); ++i) {
        double eta = coefficients[0];
        for (std::size_t j = 0; j < ds.features(); ++j) eta += coefficients[j + 1] * ds.column(j)[i];
        const double r = static_cast<double>(ds.labels()[i]) - sigmoid(eta);
        g[0] += r;
        for (std::size_t j = 0; j < ds.features(); ++j) g[j + 1] += ds.column(j)[i] * r;
    }
    return g;
}

LoocvResult loocv_scores(const FeatureDataset& ds, const FitOptions& opts) {
    const std::size_t n = ds.rows();
    const std::size_t m = ds.features();
    if (n < m + 3) throw Error("too few rows for leave-one-out cross-validation");

    std::vector<double> scores(n);
    std::vector<FoldNote> notes;
    std::vector<double> row(m);
    for (std::size_t i = 0; i < n; ++i) {
        const FeatureDataset train = ds.without_row(i);
        const double prevalence =
            static_cast<double>(train.positives()) / static_cast<double>(train.rows());
        for (std::size_t j = 0; j < m; ++j) row[j] = ds.column(j)[i];

        if (train.positives() == 0 || train.positives() == train.rows()) {
            scores[i] = prevalence;
            notes.push_back({i, "single-class training data"});
            continue;
        }
        try {
            const LogisticModel model = fit_logistic(train, opts);
            scores[i] = model.predict(row);
            if (model.separation)
                notes.push_back({i, "separation"});
            else if (!model.converged)
                notes.push_back({i, "not converged"});
        } catch (const Error& e) {
            scores[i] = prevalence;
            notes.push_back({i, e.what()});
        }
    }
    std::vector<std::uint8_t> labels(ds.labels().begin(), ds.labels().end());
    return {ScoredDataset(std::move(scores), std::move(labels), ds.ids()), std::move(notes)};
}

} // namespace rocaware
