#include "bergman/operator.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bergman/error.hpp"

namespace bergman {

OperatorMatrix::OperatorMatrix(int dim, int lower, int upper, bool hermitian)
    : dim_(dim), lower_(std::clamp(lower, 0, std::max(dim - 1, 0))), upper_(std::clamp(upper, 0, std::max(dim - 1, 0))),
      hermitian_(hermitian) {
    if (dim < 1) throw PreconditionError("operator section dimension must be positive");
    band_.assign(static_cast<std::size_t>(dim_) * static_cast<std::size_t>(lower_ + upper_ + 1), 0.0);
}

std::size_t OperatorMatrix::slot(int n, int m) const {
    return static_cast<std::size_t>(n) * static_cast<std::size_t>(lower_ + upper_ + 1) +
           static_cast<std::size_t>(m - n + lower_);
}

cdouble OperatorMatrix::operator()(int n, int m) const {
    if (n < 0 || m < 0 || n >= dim_ || m >= dim_) return 0.0;
    if (n - m > lower_ || m - n > upper_) return 0.0;
    return band_[slot(n, m)];
}

void OperatorMatrix::set(int n, int m, cdouble value) {
    if (n < 0 || m < 0 || n >= dim_ || m >= dim_ || n - m > lower_ || m - n > upper_) {
        throw PreconditionError("entry (" + std::to_string(n) + ", " + std::to_string(m) + ") outside band");
    }
    band_[slot(n, m)] = value;
}

void OperatorMatrix::apply(std::span<const cdouble> x, std::span<cdouble> y) const {
    for (int n = 0; n < dim_; ++n) {
        cdouble acc = 0.0;
        const int lo = std::max(0, n - lower_);
        const int hi = std::min(dim_ - 1, n + upper_);
        for (int m = lo; m <= hi; ++m) acc += band_[slot(n, m)] * x[static_cast<std::size_t>(m)];
        y[static_cast<std::size_t>(n)] = acc;
    }
}

cdouble OperatorMatrix::form(std::span<const cdouble> v) const {
    std::vector<cdouble> w(v.size());
    apply(v, w);
    cdouble acc = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) acc += std::conj(v[i]) * w[i];
    return acc;
}

double OperatorMatrix::hermitian_defect() const {
    double worst = 0.0;
    for (int n = 0; n < dim_; ++n) {
        for (int m = std::max(0, n - std::max(lower_, upper_)); m <= std::min(dim_ - 1, n + std::max(lower_, upper_));
             ++m) {
            worst = std::max(worst, std::abs((*this)(n, m) - std::conj((*this)(m, n))));
        }
    }
    return worst;
}

nlohmann::ordered_json matrix_to_json(const OperatorMatrix& m) {
    nlohmann::ordered_json out;
    out["dim"] = m.dim();
    out["hermitian"] = m.hermitian();
    auto rows = nlohmann::ordered_json::array();
    for (int n = 0; n < m.dim(); ++n) {
        auto row = nlohmann::ordered_json::array();
        for (int k = 0; k < m.dim(); ++k) row.push_back({m(n, k).real(), m(n, k).imag()});
        rows.push_back(std::move(row));
    }
    out["entries"] = std::move(rows);
    return out;
}

OperatorMatrix toeplitz_matrix(const TaylorSymbol& s, int N) {
    if (N < 1) throw PreconditionError("toeplitz_matrix needs N >= 1");
    const int K = s.degree();
    OperatorMatrix T(N, K, 0, false);
    for (int n = 0; n < N; ++n) {
        for (int m = std::max(0, n - K); m <= n; ++m) {
            T.set(n, m, s.coeff(n - m) * std::sqrt(static_cast<double>(m + 1) / (n + 1)));
        }
    }
    return T;
}

OperatorMatrix commutator_matrix(const TaylorSymbol& s, int N) {
    if (N < 1) throw PreconditionError("commutator_matrix needs N >= 1");
    // c_0 contributes a multiple of the identity to T, which commutes; drop it
    // so constant invariance holds bit-for-bit.
    const int K = s.degree();
    auto c = [&](int k) { return k >= 1 ? s.coeff(k) : cdouble(0.0); };
    OperatorMatrix C(N, K, K, true);
    for (int n = 0; n < N; ++n) {
        for (int m = std::max(0, n - K); m <= std::min(N - 1, n + K); ++m) {
            const double scale = std::sqrt(static_cast<double>(n + 1) * (m + 1));
            // (T*T)(n,m) = sum_j conj(c_{j-n}) c_{j-m} sqrt((n+1)(m+1)) / (j+1)
            cdouble tt = 0.0;
            for (int j = std::max(n, m); j <= std::min(n, m) + K; ++j) {
                tt += std::conj(c(j - n)) * c(j - m) / static_cast<double>(j + 1);
            }
            // (TT*)(n,m) = sum_j c_{n-j} conj(c_{m-j}) (j+1) / sqrt((n+1)(m+1))
            cdouble ttstar = 0.0;
            for (int j = std::max(0, std::max(n, m) - K); j <= std::min(n, m); ++j) {
                ttstar += c(n - j) * std::conj(c(m - j)) * static_cast<double>(j + 1);
            }
            C.set(n, m, tt * scale - ttstar / scale);
        }
    }
    return C;
}

namespace {

double norm2(std::span<const cdouble> v) {
    double acc = 0.0;
    for (const auto& x : v) acc += std::norm(x);
    return std::sqrt(acc);
}

}  // namespace

EigenEstimate dominant_eigenpair(const OperatorMatrix& M, const EigenOptions& opts) {
    if (!M.hermitian()) throw PreconditionError("dominant_eigenvalue requires a Hermitian matrix");
    if (!(opts.tol > 0.0)) throw PreconditionError("dominant_eigenvalue tolerance must be positive");
    const auto N = static_cast<std::size_t>(M.dim());
    std::vector<cdouble> v(N, 1.0 / std::sqrt(static_cast<double>(N)));
    std::vector<cdouble> w(N);
    EigenEstimate est;
    for (int it = 1; it <= opts.max_iterations; ++it) {
        M.apply(v, w);
        cdouble rq = 0.0;
        for (std::size_t i = 0; i < N; ++i) rq += std::conj(v[i]) * w[i];
        const double theta = rq.real();
        double res = 0.0;
        for (std::size_t i = 0; i < N; ++i) res += std::norm(w[i] - theta * v[i]);
        res = std::sqrt(res);
        est = {theta, res, it};
        if (res <= opts.tol) return est;
        const double wn = norm2(w);
        if (wn == 0.0) return {0.0, 0.0, it};
        for (std::size_t i = 0; i < N; ++i) v[i] = w[i] / wn;
    }
    throw ConvergenceError("power iteration did not converge in " + std::to_string(opts.max_iterations) +
                           " iterations (residual " + std::to_string(est.residual) + ")");
}

double dominant_eigenvalue(const OperatorMatrix& M, double tol) {
    EigenOptions opts;
    opts.tol = tol;
    return dominant_eigenpair(M, opts).value;
}

CommutatorNorm commutator_norm(const TaylorSymbol& s, double tol, const CommutatorOptions& opts) {
    if (!(tol > 0.0)) throw PreconditionError("commutator_norm tolerance must be positive");
    EigenOptions eig;
    eig.tol = tol / 8.0;
    eig.max_iterations = opts.max_iterations;

    CommutatorNorm out;
    int N = 4 * (s.degree() + 1);
    double previous = dominant_eigenpair(commutator_matrix(s, N), eig).value;
    out.history.push_back(previous);
    while (true) {
        if (2 * N > opts.max_dim) {
            throw ConvergenceError("commutator_norm did not stabilize by N = " + std::to_string(N));
        }
        N *= 2;
        const double current = dominant_eigenpair(commutator_matrix(s, N), eig).value;
        out.history.push_back(current);
        if (N > 4096) out.large_truncation = true;
        if (std::abs(current - previous) < tol / 2.0) {
            out.value = current;
            out.N_used = N;
            break;
        }
        previous = current;
    }

    // A priori cap: ||[T*,T]|| <= (1/2) sum m |c_m|^2.
    const double cap = 0.5 * dirichlet_sum(s).get_d();
    if (out.value > cap + tol) {
        throw ConsistencyError("commutator norm " + std::to_string(out.value) + " exceeds a priori bound " +
                               std::to_string(cap));
    }
    return out;
}

TaylorSymbol bergman_project(const BiPoly& f) {
    const auto c = bergman_project_coeffs(f);
    return TaylorSymbol(std::span<const cdouble>(c));
}

TaylorSymbol bergman_project(const ExactBiPoly& f) { return TaylorSymbol(bergman_project_coeffs(f)); }

BiPoly hankel_apply(const TaylorSymbol& s, const TaylorSymbol& f) { return hankel_apply_as<cdouble>(s, f); }

}  // namespace bergman
