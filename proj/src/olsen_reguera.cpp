#include "bergman/olsen_reguera.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "bergman/error.hpp"

namespace bergman {

CoeffSeq::CoeffSeq(std::vector<cdouble> a) : a_(std::move(a)) {
    if (a_.empty()) a_.push_back(0.0);
}

CoeffSeq CoeffSeq::from_b(std::span<const cdouble> b_from_1) {
    std::vector<cdouble> a(std::max<std::size_t>(b_from_1.size(), 1), 0.0);
    for (std::size_t n = 0; n < b_from_1.size(); ++n) a[n] = b_from_1[n] * static_cast<double>(n + 1);
    return CoeffSeq(std::move(a));
}

CoeffSeq CoeffSeq::from_symbol(const TaylorSymbol& f) {
    return CoeffSeq(std::vector<cdouble>(f.coeffs().begin(), f.coeffs().end()));
}

cdouble CoeffSeq::a(int n) const {
    if (n < 0 || n >= size()) return 0.0;
    return a_[static_cast<std::size_t>(n)];
}

cdouble CoeffSeq::b(int n) const {
    if (n < 1) return 0.0;
    return a(n - 1) / static_cast<double>(n);
}

double seq_norm_sq(const CoeffSeq& f) {
    double total = 0.0;
    for (int n = 0; n < f.size(); ++n) total += std::norm(f.a(n)) / (n + 1);
    return total;
}

double seq_dirichlet(const TaylorSymbol& s) {
    double total = 0.0;
    for (int m = 1; m <= s.degree(); ++m) total += m * std::norm(s.coeff(m));
    return total;
}

double sum_I(const CoeffSeq& f, const TaylorSymbol& s) {
    const int Nb = f.size();  // b is supported on 1..Nb
    const int K = s.degree();
    cdouble total = 0.0;
    for (int n = 1; n <= Nb; ++n) {
        for (int m = 1; m <= Nb; ++m) {
            const cdouble bb = f.b(n) * std::conj(f.b(m));
            if (bb == 0.0) continue;
            for (int k = 0; k + std::max(n, m) <= K; ++k) {
                total += bb * s.coeff(k + m) * std::conj(s.coeff(k + n)) * static_cast<double>(n * m) /
                         static_cast<double>(n + m + k);
            }
        }
    }
    return total.real();
}

double sum_II(const CoeffSeq& f, const TaylorSymbol& s) {
    const int Nb = f.size();
    const int K = s.degree();
    cdouble total = 0.0;
    for (int n = 1; n <= K; ++n) {
        for (int m = 1; m <= K; ++m) {
            const cdouble cc = s.coeff(m) * std::conj(s.coeff(n));
            if (cc == 0.0) continue;
            for (int k = 1; k + std::max(n, m) <= Nb; ++k) {
                total += f.b(n + k) * std::conj(f.b(m + k)) * cc * static_cast<double>(m * n) /
                         static_cast<double>(n + m + k);
            }
        }
    }
    return total.real();
}

double sum_star(const CoeffSeq& f, const TaylorSymbol& s) {
    double weighted_b = 0.0;
    for (int n = 1; n <= f.size(); ++n) weighted_b += n * std::norm(f.b(n));
    return 0.5 * weighted_b * seq_dirichlet(s);
}

double hankel_norm_sq_on(const CoeffSeq& f, const TaylorSymbol& s) { return sum_I(f, s) + sum_II(f, s); }

double or_bound(const CoeffSeq& f, const TaylorSymbol& s) { return 0.5 * seq_norm_sq(f) * seq_dirichlet(s); }

namespace {

using SparseRow = std::vector<std::pair<int, QComplex>>;

struct RowLess {
    bool operator()(const SparseRow& x, const SparseRow& y) const {
        if (x.size() != y.size()) return x.size() < y.size();
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (x[i].first != y[i].first) return x[i].first < y[i].first;
            if (lex_less(x[i].second, y[i].second)) return true;
            if (lex_less(y[i].second, x[i].second)) return false;
        }
        return false;
    }
};

// Builds rows given a c-lookup, the largest c-index whose value is known and
// the largest index that can hold a nonzero value.
template <class CoeffAt>
ConstraintMatrix build_system(CoeffAt c, int known_max, int support_max, int N) {
    std::set<SparseRow, RowLess> unique;
    // Row x b_i - y b_j, normalized so the leading entry is 1.
    auto add = [&](int i, const QComplex& x, int j, const QComplex& y) {
        SparseRow row;
        if (i == j) {
            QComplex v = x - y;
            if (!v.is_zero()) row.emplace_back(i, std::move(v));
        } else {
            if (!x.is_zero()) row.emplace_back(i, x);
            if (!y.is_zero()) row.emplace_back(j, -y);
            std::sort(row.begin(), row.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
        }
        if (row.empty()) return;
        const QComplex lead = row.front().second;
        for (auto& [col, v] : row) v /= lead;
        unique.insert(std::move(row));
    };

    // b_i c_{j+k} = b_j c_{i+k}
    for (int i = 1; i <= N; ++i) {
        for (int j = i + 1; j <= N; ++j) {
            for (int k = 0; j + k <= known_max && i + k <= support_max; ++k) add(i, c(j + k), j, c(i + k));
        }
    }
    // b_{i+k} c_j = b_{j+k} c_i
    for (int k = 1; k < N; ++k) {
        for (int i = 1; i + k <= N && i <= std::min(known_max, support_max); ++i) {
            for (int j = i + 1; j + k <= N && j <= known_max; ++j) add(i + k, c(j), j + k, c(i));
        }
    }

    ConstraintMatrix out;
    out.unknowns = N;
    out.rows.reserve(unique.size());
    for (const auto& row : unique) {
        std::vector<QComplex> dense(static_cast<std::size_t>(N));
        for (const auto& [col, v] : row) dense[static_cast<std::size_t>(col - 1)] = v;
        out.rows.push_back(std::move(dense));
    }
    return out;
}

}  // namespace

ConstraintMatrix equality_system(const TaylorSymbol& s, int N) {
    const int K = s.degree();
    if (N < K + 2) {
        throw PreconditionError("equality_system needs N >= degree + 2 = " + std::to_string(K + 2));
    }
    // Beyond the degree every coefficient is a known zero, and a row whose
    // c-indices both exceed K vanishes; N + K bounds the indices that matter.
    auto c = [&](int k) -> const QComplex& { return s.exact_coeff(k); };
    return build_system(c, N + K, K, N);
}

ConstraintMatrix sampled_equality_system(std::span<const QComplex> c, int N) {
    if (N < 1) throw PreconditionError("sampled_equality_system needs N >= 1");
    const int known_max = static_cast<int>(c.size()) - 1;
    auto at = [&](int k) -> const QComplex& { return c[static_cast<std::size_t>(k)]; };
    return build_system(at, known_max, known_max, N);
}

QComplex max_residual(const ConstraintMatrix& m, std::span<const QComplex> b_from_1) {
    if (static_cast<int>(b_from_1.size()) != m.unknowns) {
        throw PreconditionError("residual vector length does not match the number of unknowns");
    }
    QComplex worst;
    mpq_class worst_norm = 0;
    for (const auto& row : m.rows) {
        QComplex acc;
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (!row[j].is_zero()) acc += row[j] * b_from_1[j];
        }
        mpq_class nrm = acc.norm();
        if (nrm > worst_norm) {
            worst_norm = nrm;
            worst = acc;
        }
    }
    return worst;
}

bool satisfies_all(const ConstraintMatrix& m, std::span<const QComplex> b_from_1) {
    return max_residual(m, b_from_1).is_zero();
}

Nullspace exact_nullspace(const ConstraintMatrix& m) {
    const int N = m.unknowns;
    // pivot column -> row with a leading 1 there and zeros in earlier pivot columns
    std::map<int, std::vector<QComplex>> pivots;
    for (const auto& input : m.rows) {
        if (static_cast<int>(pivots.size()) == N) break;
        std::vector<QComplex> row = input;
        for (const auto& [col, prow] : pivots) {
            const QComplex factor = row[static_cast<std::size_t>(col)];
            if (factor.is_zero()) continue;
            for (int j = col; j < N; ++j) {
                if (!prow[static_cast<std::size_t>(j)].is_zero()) {
                    row[static_cast<std::size_t>(j)] -= factor * prow[static_cast<std::size_t>(j)];
                }
            }
        }
        int lead = 0;
        while (lead < N && row[static_cast<std::size_t>(lead)].is_zero()) ++lead;
        if (lead == N) continue;
        const QComplex scale = row[static_cast<std::size_t>(lead)];
        for (int j = lead; j < N; ++j) row[static_cast<std::size_t>(j)] /= scale;
        // Keep the pivot set reduced: clear the new pivot column elsewhere.
        for (auto& [col, prow] : pivots) {
            const QComplex factor = prow[static_cast<std::size_t>(lead)];
            if (factor.is_zero()) continue;
            for (int j = lead; j < N; ++j) {
                if (!row[static_cast<std::size_t>(j)].is_zero()) {
                    prow[static_cast<std::size_t>(j)] -= factor * row[static_cast<std::size_t>(j)];
                }
            }
        }
        pivots.emplace(lead, std::move(row));
    }

    Nullspace out;
    out.rank = static_cast<int>(pivots.size());
    for (int free = 0; free < N; ++free) {
        if (pivots.count(free)) continue;
        std::vector<QComplex> v(static_cast<std::size_t>(N));
        v[static_cast<std::size_t>(free)] = QComplex(1L);
        for (const auto& [col, prow] : pivots) v[static_cast<std::size_t>(col)] = -prow[static_cast<std::size_t>(free)];
        out.basis.push_back(std::move(v));
    }
    return out;
}

std::string to_string(Extremality e) {
    switch (e) {
        case Extremality::Monomial:
            return "Monomial";
        case Extremality::GeometricTail:
            return "GeometricTail";
        case Extremality::Other:
            return "Other";
    }
    return "Other";
}

ExtremalityResult extremal_nullspace(const TaylorSymbol& s, int N) {
    const int K = s.degree();
    if (N == 0) N = 4 * (K + 1);
    if (N < K + 2) throw PreconditionError("extremal_nullspace needs N >= degree + 2 = " + std::to_string(K + 2));

    ExtremalityResult out;
    out.truncation = N;
    int nonzero = 0;
    for (int k = 1; k <= K; ++k) nonzero += s.exact_coeff(k).is_zero() ? 0 : 1;
    out.classification = nonzero == 1 ? Extremality::Monomial : Extremality::Other;

    Nullspace ns = exact_nullspace(equality_system(s, N));
    out.nullspace_dim = static_cast<int>(ns.basis.size());
    for (const auto& v : ns.basis) {
        std::vector<cdouble> b;
        b.reserve(v.size());
        for (const auto& x : v) b.push_back(x.to_complex());
        out.basis.push_back(CoeffSeq::from_b(b));
    }
    out.exact_basis = std::move(ns.basis);
    out.stable = static_cast<int>(exact_nullspace(equality_system(s, 2 * N)).basis.size()) == out.nullspace_dim;
    return out;
}

}  // namespace bergman
