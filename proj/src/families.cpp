#include "liecoh/families.hpp"

#include <algorithm>

namespace liecoh {

namespace {

std::vector<std::string> y_labels(std::uint32_t n) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::uint32_t i = 1; i <= n; ++i)
        labels.push_back("Y" + std::to_string(i));
    return labels;
}

void add_bracket(BracketTable& table, std::uint32_t i, std::uint32_t j, std::uint32_t target,
                 const Rational& coeff, std::uint32_t n) {
    // all arguments 1-based
    VectorQ& v = table.try_emplace({i - 1, j - 1}, VectorQ(n)).first->second;
    v[target - 1] += coeff;
}

void spine(BracketTable& table, std::uint32_t n, std::uint32_t last) {
    // [Y1, Yj] = Y_{j+1} for j = 2..last
    for (std::uint32_t j = 2; j <= last; ++j)
        add_bracket(table, 1, j, j + 1, Rational(1), n);
}

struct CoefficientSystem {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> support;  // 1-based pairs, lex order
    std::size_t lambda_count = 0;
    // entries aligned with `support`
    std::vector<Rational> values;
    std::vector<std::vector<Rational>> unit_values;  // one solution per unit lambda
};

// Solves a_ij = a_{i,j+1} + a_{i+1,j} with a_{i,i+1} = lambda_{i-1}, products
// bounded by Y_{max_target}. Unique for every parameter range the families
// use; anything else is reported, not patched.
CoefficientSystem solve_coefficients(std::uint32_t n, std::uint32_t k,
                                     const std::vector<Rational>& lambda,
                                     std::uint32_t max_target) {
    CoefficientSystem sys;
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::size_t> col_of;
    for (std::uint32_t i = 2; i + 1 <= n; ++i)
        for (std::uint32_t j = i + 1; j <= n; ++j)
            if (i + j + k - 2 <= max_target) {
                col_of[{i, j}] = sys.support.size();
                sys.support.emplace_back(i, j);
            }
    std::vector<std::size_t> pin_cols;  // superdiagonal pairs, ascending i
    for (std::size_t c = 0; c < sys.support.size(); ++c)
        if (sys.support[c].second == sys.support[c].first + 1)
            pin_cols.push_back(c);
    sys.lambda_count = pin_cols.size();
    if (lambda.size() != sys.lambda_count)
        throw std::invalid_argument("family: expected " + std::to_string(sys.lambda_count) +
                                    " lambda parameters, got " + std::to_string(lambda.size()));

    std::vector<std::pair<std::uint32_t, std::uint32_t>> recurrence;
    for (const auto& [i, j] : sys.support)
        if (i + j + k - 2 <= max_target - 1)
            recurrence.emplace_back(i, j);

    // the matrix is lambda-independent; only the pin right-hand side varies
    const std::size_t rows = recurrence.size() + pin_cols.size();
    MatrixQ m(rows, sys.support.size());
    auto coeff_at = [&](std::size_t row, std::uint32_t i, std::uint32_t j, const Rational& c) {
        if (i >= j)
            return;  // a_ii = 0, ordered pairs only
        auto it = col_of.find({i, j});
        if (it != col_of.end())
            m.at(row, it->second) += c;
    };
    for (std::size_t r = 0; r < recurrence.size(); ++r) {
        const auto [i, j] = recurrence[r];
        coeff_at(r, i, j, Rational(1));
        coeff_at(r, i, j + 1, Rational(-1));
        coeff_at(r, i + 1, j, Rational(-1));
    }
    for (std::size_t p = 0; p < pin_cols.size(); ++p)
        m.at(recurrence.size() + p, pin_cols[p]) = Rational(1);

    auto solve_for = [&](const std::vector<Rational>& lam) {
        VectorQ rhs(rows);
        for (std::size_t p = 0; p < pin_cols.size(); ++p)
            rhs[recurrence.size() + p] = lam[p];
        auto sol = solve_affine(m, rhs);
        if (!sol)
            throw FamilyError("family: coefficient system inconsistent");
        if (!sol->homogeneous.empty())
            throw FamilyError("family: coefficient system underdetermined");
        return sol->particular;
    };

    sys.values = solve_for(lambda);
    for (std::size_t w = 0; w < sys.lambda_count; ++w) {
        std::vector<Rational> unit(sys.lambda_count);
        unit[w] = Rational(1);
        sys.unit_values.push_back(solve_for(unit));
    }
    return sys;
}

BracketTable a_family_table(std::uint32_t n, std::uint32_t k, const std::vector<Rational>& lambda,
                            std::uint32_t spine_last, std::uint32_t max_target) {
    BracketTable table;
    spine(table, n, spine_last);
    const CoefficientSystem sys = solve_coefficients(n, k, lambda, max_target);
    for (std::size_t c = 0; c < sys.support.size(); ++c) {
        const auto [i, j] = sys.support[c];
        if (!sys.values[c].is_zero())
            add_bracket(table, i, j, i + j + k - 2, sys.values[c], n);
    }
    return table;
}

LieAlgebra finish(std::uint32_t n, BracketTable table) {
    LieAlgebra g = LieAlgebra::create(n, y_labels(n), std::move(table));
    const auto violations = jacobi_check(g);
    if (!violations.empty()) {
        const auto& v = violations.front();
        throw FamilyError("family: Jacobi identity fails at triple (Y" +
                              std::to_string(v.i + 1) + ", Y" + std::to_string(v.j + 1) + ", Y" +
                              std::to_string(v.k + 1) + ")",
                          std::array<std::uint32_t, 3>{v.i + 1, v.j + 1, v.k + 1});
    }
    return g;
}

}  // namespace

LieAlgebra build_family(const FamilySpec& spec) {
    using Tag = FamilySpec::Tag;
    const std::uint32_t n = spec.n;
    switch (spec.tag) {
        case Tag::L: {
            if (n < 3)
                throw std::invalid_argument("L_n requires n >= 3");
            BracketTable table;
            spine(table, n, n - 1);
            return finish(n, std::move(table));
        }
        case Tag::Q: {
            if (n < 4 || n % 2 != 0)
                throw std::invalid_argument("Q_n requires even n >= 4");
            BracketTable table;
            spine(table, n, n - 2);
            for (std::uint32_t i = 2; i <= n / 2; ++i)
                add_bracket(table, i, n + 1 - i, n, Rational(i % 2 == 0 ? -1 : 1), n);
            return finish(n, std::move(table));
        }
        case Tag::A: {
            if (spec.k < 2 || spec.k + 3 > n)
                throw std::invalid_argument("A_n^k requires 2 <= k <= n-3");
            return finish(n, a_family_table(n, spec.k, spec.lambda, n - 1, n));
        }
        case Tag::B: {
            if (n % 2 != 0)
                throw std::invalid_argument("B_n^k requires even n");
            if (spec.k < 2 || spec.k + 3 > n)
                throw std::invalid_argument("B_n^k requires 2 <= k <= n-3");
            BracketTable table = a_family_table(n, spec.k, spec.lambda, n - 2, n - 1);
            for (std::uint32_t i = 2; i <= n / 2; ++i)
                add_bracket(table, i, n + 1 - i, n, Rational(i % 2 == 0 ? -1 : 1), n);
            return finish(n, std::move(table));
        }
        case Tag::C: {
            if (n < 6 || n % 2 != 0)
                throw std::invalid_argument("C_n requires even n >= 6");
            const std::uint32_t m = (n - 2) / 2;
            if (spec.lambda.size() != m - 1)
                throw std::invalid_argument("C_n requires " + std::to_string(m - 1) +
                                            " lambda parameters");
            BracketTable table;
            spine(table, n, n - 2);
            // top shell carries (-1)^{i-1}
            for (std::uint32_t i = 2; i <= m + 1; ++i)
                add_bracket(table, i, n + 1 - i, n, Rational(i % 2 == 0 ? -1 : 1), n);
            for (std::uint32_t s = 1; s + 1 <= m; ++s) {
                if (spec.lambda[s - 1].is_zero())
                    continue;
                const std::uint32_t pair_sum = n - 2 * s + 1;
                for (std::uint32_t i = 2; 2 * i < pair_sum; ++i)
                    add_bracket(table, i, pair_sum - i, n,
                                Rational(i % 2 == 0 ? -1 : 1) * spec.lambda[s - 1], n);
            }
            return finish(n, std::move(table));
        }
        case Tag::Rh:
            return build_r_h(spec.k, spec.h, spec.lambda);
    }
    throw std::invalid_argument("build_family: unknown tag");
}

std::string family_spec_to_string(const FamilySpec& spec) {
    using Tag = FamilySpec::Tag;
    std::string s;
    switch (spec.tag) {
        case Tag::L: s = "L"; break;
        case Tag::Q: s = "Q"; break;
        case Tag::A: s = "A"; break;
        case Tag::B: s = "B"; break;
        case Tag::C: s = "C"; break;
        case Tag::Rh: s = "rh"; break;
    }
    if (spec.tag != Tag::Rh)
        s += " n=" + std::to_string(spec.n);
    if (spec.tag == Tag::A || spec.tag == Tag::B || spec.tag == Tag::Rh)
        s += " k=" + std::to_string(spec.k);
    if (spec.tag == Tag::Rh)
        s += " h=" + std::to_string(spec.h);
    if (!spec.lambda.empty()) {
        s += " lambda=";
        for (std::size_t i = 0; i < spec.lambda.size(); ++i) {
            if (i)
                s += ",";
            s += spec.lambda[i].to_string();
        }
    }
    return s;
}

CoefficientTable coefficient_table(std::uint32_t n, std::uint32_t k,
                                   const std::vector<Rational>& lambda) {
    if (k < 2 || k + 3 > n)
        throw std::invalid_argument("coefficient_table requires 2 <= k <= n-3");
    const CoefficientSystem sys = solve_coefficients(n, k, lambda, n);
    CoefficientTable out;
    out.lambda_count = sys.lambda_count;
    for (std::size_t c = 0; c < sys.support.size(); ++c) {
        out.entries[sys.support[c]] = sys.values[c];
        std::vector<Rational> alpha(sys.lambda_count);
        for (std::size_t w = 0; w < sys.lambda_count; ++w)
            alpha[w] = sys.unit_values[w][c];
        out.lambda_coeffs[sys.support[c]] = std::move(alpha);
    }
    // a_ij = sum alpha_ij^w lambda_w must reproduce the entries exactly
    for (std::size_t c = 0; c < sys.support.size(); ++c) {
        Rational acc;
        for (std::size_t w = 0; w < sys.lambda_count; ++w)
            acc += sys.unit_values[w][c] * lambda[w];
        if (acc != sys.values[c])
            throw std::logic_error("coefficient_table: linearity check failed");
    }
    return out;
}

LieAlgebra semidirect(const LieAlgebra& n_alg, const TorusBasis& t) {
    const std::uint32_t n = static_cast<std::uint32_t>(n_alg.dim());
    const std::uint32_t r = static_cast<std::uint32_t>(t.dim());
    if (t.ambient_dim != n)
        throw std::invalid_argument("semidirect: torus/algebra dimension mismatch");
    for (const auto& w : t.weight_vectors) {
        if (w.size() != n)
            throw std::invalid_argument("semidirect: weight vector length mismatch");
        for (const auto& [pair, coeffs] : n_alg.constants()) {
            const auto [i, j] = pair;
            for (std::uint32_t x = 0; x < n; ++x)
                if (!coeffs[x].is_zero() && w[i] + w[j] != w[x])
                    throw std::invalid_argument(
                        "semidirect: torus vector is not a derivation of the nilpotent part");
        }
    }
    const std::uint32_t dim = n + r;
    std::vector<std::string> labels = n_alg.labels();
    for (std::uint32_t a = 1; a <= r; ++a)
        labels.push_back("T" + std::to_string(a));
    BracketTable table;
    for (const auto& [pair, coeffs] : n_alg.constants()) {
        VectorQ v(dim);
        std::copy(coeffs.begin(), coeffs.end(), v.begin());
        table[{pair.first, pair.second}] = std::move(v);
    }
    for (std::uint32_t a = 0; a < r; ++a)
        for (std::uint32_t i = 0; i < n; ++i)
            if (!t.weight_vectors[a][i].is_zero()) {
                VectorQ v(dim);
                v[i] = -t.weight_vectors[a][i];  // [X_i, T_a] = -d_{a,i} X_i
                table[{i, n + a}] = std::move(v);
            }
    LieAlgebra g = LieAlgebra::create(dim, std::move(labels), std::move(table));
    if (!jacobi_check(g).empty())
        throw std::logic_error("semidirect: assembled product violates Jacobi");
    return g;
}

LieAlgebra build_r_h(std::uint32_t k, std::uint32_t h, const std::vector<Rational>& lambda) {
    if (k < 4 || k % 2 != 0)
        throw std::invalid_argument("r_h requires even k >= 4");
    if (h < 3 || h > k + 3)
        throw std::invalid_argument("r_h requires 3 <= h <= k+3");
    if (lambda.size() != h / 2 + 1)
        throw std::invalid_argument("r_h requires " + std::to_string(h / 2 + 1) +
                                    " lambda parameters");
    if (lambda.front().is_zero())
        throw std::invalid_argument("r_h requires lambda_1 != 0");
    FamilySpec a_spec;
    a_spec.tag = FamilySpec::Tag::A;
    a_spec.n = k + h + 3;
    a_spec.k = k;
    a_spec.lambda = lambda;
    const LieAlgebra a = build_family(a_spec);
    const TorusBasis t = diagonal_torus(a);
    if (t.dim() != 1)
        throw std::logic_error("r_h: expected a one-dimensional diagonal torus");
    return semidirect(a, t);
}

Cochain deformation_cocycle(const LieAlgebra& rh, std::uint32_t k, std::uint32_t which) {
    const std::uint32_t dim = static_cast<std::uint32_t>(rh.dim());
    if (dim < 2)
        throw std::invalid_argument("deformation_cocycle: ambient algebra too small");
    const std::uint32_t n = dim - 1;  // nilpotent part
    if (k < 2 || k + 3 > n)
        throw std::invalid_argument("deformation_cocycle: k out of range");
    std::vector<Rational> probe;  // unit lambda; sized by the superdiagonal pairs
    {
        std::uint32_t count = 0;
        for (std::uint32_t i = 2; 2 * i + k - 1 <= n; ++i)
            ++count;
        probe.assign(count, Rational(0));
    }
    if (which == 0 || which > probe.size())
        throw std::invalid_argument("deformation_cocycle: which out of range");
    probe[which - 1] = Rational(1);
    const CoefficientTable table = coefficient_table(n, k, probe);
    Cochain phi(rh, 2);
    for (const auto& [pair, value] : table.entries) {
        if (value.is_zero())
            continue;
        const auto [i, j] = pair;
        VectorQ v(dim);
        v[i + j + k - 2 - 1] = value;
        phi.set({i - 1, j - 1}, std::move(v));
    }
    return phi;
}

}  // namespace liecoh
