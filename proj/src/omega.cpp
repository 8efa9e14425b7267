#include "sdc/omega.hpp"

#include <algorithm>
#include <map>

#include "sdc/error.hpp"

namespace sdc {

namespace {

void require_omega_shape(const Poly& f) {
    if (f.degree() < 1 || f.lead() != 1 || f.coeff(0) == 0)
        fail(errc::bad_argument, "omega base must be monic with nonzero constant term");
    if (f.degree() % 2 != 0)
        fail(errc::not_self_reciprocal, "omega is defined for even-degree self-reciprocal factors");
    if (poly_reciprocal(f) != f)
        fail(errc::not_self_reciprocal, "omega base must be self-reciprocal");
}

int trail_compare(const Field& F, unsigned d,
                  const std::vector<Poly>& a, const std::vector<Poly>& b) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        const std::uint64_t ka = elem_key(F, a[i], d), kb = elem_key(F, b[i], d);
        if (ka != kb) return ka < kb ? -1 : 1;
    }
    return 0;
}

}  // namespace

bool omega_membership(const Field& F, const Poly& f, unsigned nu, const Poly& beta) {
    require_omega_shape(f);
    if (nu < 1) fail(errc::bad_argument, "nu must be >= 1");
    QuotRing R(F, f, nu);
    const unsigned d = static_cast<unsigned>(f.degree());
    const Poly b = R.reduce(beta);
    const Poly lhs = poly_add(
        b, R.mul(R.x_inverse_pow(static_cast<std::uint64_t>(nu) * d), R.substitute_x_inverse(b)));
    return lhs.is_zero();
}

OmegaSet omega_enumerate(const Field& F, const Poly& f, unsigned nu) {
    require_omega_shape(f);
    if (nu < 1) fail(errc::bad_argument, "nu must be >= 1");
    const unsigned d = static_cast<unsigned>(f.degree());

    OmegaSet out;
    out.nu = nu;
    out.ring = std::make_shared<QuotRing>(F, f, nu);
    TraceCtx tc(F, f);
    const QuotRing& Fj = tc.ring();

    // step rings F[x]/(f^t) for t = 1..nu
    std::vector<std::unique_ptr<QuotRing>> step_ring(nu + 1);
    for (unsigned t = 1; t <= nu; ++t) step_ring[t] = std::make_unique<QuotRing>(F, f, t);

    // x^(±(nu+i) d/2) in F_j, for i = 0..nu-1
    std::vector<Poly> xpow(nu), xnegpow(nu);
    for (unsigned i = 0; i < nu; ++i) {
        xpow[i] = Fj.pow(Poly::x(), static_cast<std::uint64_t>(nu + i) * d / 2);
        xnegpow[i] = Fj.x_inverse_pow(static_cast<std::uint64_t>(nu + i) * d / 2);
    }

    auto sorted_scaled_preimage = [&](const Poly& scale, const Poly& target) {
        std::vector<Poly> set;
        for (const Poly& xi : tc.trace_preimage(target)) set.push_back(Fj.mul(scale, xi));
        std::sort(set.begin(), set.end(), [&](const Poly& a, const Poly& b) {
            return elem_key(F, a, d) < elem_key(F, b, d);
        });
        return set;
    };

    // W^(j,nu;0) = x^(-nu d/2) Tr^(-1)(0)
    const std::vector<Poly> w0 = sorted_scaled_preimage(xnegpow[0], Poly::zero());

    std::vector<Poly> digits;                    // beta_0 .. beta_{p}
    std::vector<std::vector<Poly>> delta_tables; // delta_tables[p][l-p-1] = delta^(l) of prefix p

    // After choosing digit beta_p (p <= nu-2): expand the step-(p+1) defect
    //   beta_p + x^(-(nu+p)d) beta_p(x^(-1)) + sum_{h<p} delta^(p)_{(..h)}
    // in F[x]/(f^(nu-p)); digit 0 must vanish, digits z >= 1 are delta^(p+z).
    auto compute_deltas = [&](unsigned p) {
        const QuotRing& R = *step_ring[nu - p];
        Poly acc = R.reduce(digits[p]);
        const Poly sub = R.substitute_x_inverse(digits[p]);
        acc = poly_add(acc, R.mul(R.x_inverse_pow(static_cast<std::uint64_t>(nu + p) * d), sub));
        for (unsigned h = 0; h < p; ++h)
            acc = poly_add(acc, R.reduce(delta_tables[h][p - h - 1]));
        auto digs = R.fadic_expand(acc);
        if (!digs[0].is_zero())
            fail(errc::thm_assumption_violated, "step defect not divisible by f");
        // Only the scaled digit sums that feed the trace preimages are forced into
        // the subfield; digits of a single table pick up f-adic carries and may
        // land outside it. The per-step target check in the walk is the guard,
        // with the kernel oracle as the referee.
        return std::vector<Poly>(digs.begin() + 1, digs.end());  // delta^(p+1) .. delta^(nu-1)
    };

    auto record_leaf = [&]() {
        Poly beta;
        for (std::size_t i = digits.size(); i-- > 0;)
            beta = poly_add(out.ring->mul(beta, f), digits[i]);
        beta = out.ring->reduce(beta);
        if (!omega_membership(F, f, nu, beta))
            fail(errc::thm_assumption_violated, "constructed element fails the congruence");
        out.elements.push_back(std::move(beta));
        out.trails.push_back(digits);
    };

    // depth-first over digit choices
    auto step = [&](auto&& self, unsigned i) -> void {
        std::vector<Poly> w;
        if (i == 0) {
            w = w0;
        } else {
            Poly sum;
            for (unsigned h = 0; h < i; ++h)
                sum = poly_add(sum, delta_tables[h][i - h - 1]);
            const Poly target = Fj.mul(xpow[i], sum);
            if (!tc.in_subfield(target))
                fail(errc::thm_assumption_violated, "W-set target escapes the subfield");
            w = sorted_scaled_preimage(xnegpow[i], target);
        }
        out.w_sets.push_back({digits, w});
        for (const Poly& beta : w) {
            digits.push_back(beta);
            if (i + 1 < nu) {
                delta_tables.push_back(compute_deltas(i));
                self(self, i + 1);
                delta_tables.pop_back();
            } else {
                record_leaf();
            }
            digits.pop_back();
        }
    };
    step(step, 0);

    // lexicographic on digit trails
    std::vector<std::size_t> order(out.elements.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return trail_compare(F, d, out.trails[a], out.trails[b]) < 0;
    });
    std::vector<Poly> elems;
    std::vector<std::vector<Poly>> trails;
    for (std::size_t i : order) {
        elems.push_back(std::move(out.elements[i]));
        trails.push_back(std::move(out.trails[i]));
    }
    out.elements = std::move(elems);
    out.trails = std::move(trails);
    return out;
}

std::vector<Poly> omega_kernel_oracle(const Field& F, const Poly& f, unsigned nu) {
    require_omega_shape(f);
    if (nu < 1) fail(errc::bad_argument, "nu must be >= 1");
    const unsigned d = static_cast<unsigned>(f.degree());
    const unsigned dim = nu * d;
    QuotRing R(F, f, nu);
    const Poly xneg = R.x_inverse_pow(static_cast<std::uint64_t>(nu) * d);

    // columns of the operator beta -> beta + x^(-nu d) beta(x^(-1))
    std::vector<std::vector<felem>> mat(dim, std::vector<felem>(dim, 0));
    for (unsigned c = 0; c < dim; ++c) {
        const Poly img = poly_add(Poly::monomial(c),
                                  R.mul(xneg, R.substitute_x_inverse(Poly::monomial(c))));
        for (unsigned r = 0; r < dim; ++r) mat[r][c] = img.coeff(r);
    }
    // kernel basis by Gaussian elimination over F_{2^m}
    std::vector<int> pivot_of_col(dim, -1);
    unsigned rank = 0;
    for (unsigned c = 0; c < dim && rank < dim; ++c) {
        unsigned sel = rank;
        while (sel < dim && mat[sel][c] == 0) ++sel;
        if (sel == dim) continue;
        std::swap(mat[sel], mat[rank]);
        const felem inv = F.inv(mat[rank][c]);
        for (unsigned cc = 0; cc < dim; ++cc) mat[rank][cc] = F.mul(mat[rank][cc], inv);
        for (unsigned r = 0; r < dim; ++r) {
            if (r == rank || mat[r][c] == 0) continue;
            const felem coef = mat[r][c];
            for (unsigned cc = 0; cc < dim; ++cc)
                mat[r][cc] ^= F.mul(coef, mat[rank][cc]);
        }
        pivot_of_col[c] = static_cast<int>(rank);
        ++rank;
    }
    std::vector<std::vector<felem>> basis;
    for (unsigned c = 0; c < dim; ++c) {
        if (pivot_of_col[c] >= 0) continue;
        std::vector<felem> v(dim, 0);
        v[c] = 1;
        for (unsigned cc = 0; cc < dim; ++cc)
            if (pivot_of_col[cc] >= 0)
                v[cc] = mat[static_cast<unsigned>(pivot_of_col[cc])][c];
        basis.push_back(std::move(v));
    }
    // enumerate all field-coefficient combinations of the basis
    const std::uint64_t q = F.size();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (total > (1ULL << 26)) fail(errc::too_large, "kernel too large to materialize");
        total *= q;
    }
    std::vector<Poly> out;
    out.reserve(total);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::vector<felem> v(dim, 0);
        std::uint64_t rest = idx;
        for (const auto& b : basis) {
            const felem coef = static_cast<felem>(rest % q);
            rest /= q;
            if (coef)
                for (unsigned cc = 0; cc < dim; ++cc) v[cc] ^= F.mul(coef, b[cc]);
        }
        out.emplace_back(std::move(v));
    }
    // order as omega_enumerate does: lexicographic on f-adic digit keys
    std::vector<std::vector<Poly>> trails;
    trails.reserve(out.size());
    for (const Poly& e : out) trails.push_back(R.fadic_expand(e));
    std::vector<std::size_t> order(out.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return trail_compare(F, d, trails[a], trails[b]) < 0;
    });
    std::vector<Poly> sorted;
    sorted.reserve(out.size());
    for (std::size_t i : order) sorted.push_back(std::move(out[i]));
    return sorted;
}

BitMatrix kronecker_M(unsigned l) {
    if (l < 1 || l > 63) fail(errc::bad_argument, "matrix size out of range");
    unsigned lambda = 0;
    while ((1u << lambda) < l) ++lambda;
    if (lambda == 0) lambda = 1;
    const unsigned n = 1u << lambda;
    // G_2 = [[1,0],[1,1]]; G doubles as [[G,0],[G,G]]
    std::vector<std::uint64_t> g{0b01, 0b11};
    for (unsigned size = 2; size < n; size *= 2) {
        std::vector<std::uint64_t> nx(2 * size);
        for (unsigned r = 0; r < size; ++r) {
            nx[r] = g[r];
            nx[size + r] = g[r] | (g[r] << size);
        }
        g = std::move(nx);
    }
    BitMatrix M;
    M.n = l;
    M.rows.resize(l);
    const std::uint64_t mask = (l == 64) ? ~0ULL : ((1ULL << l) - 1);
    for (unsigned r = 0; r < l; ++r)
        M.rows[r] = (g[r] ^ (1ULL << r)) & mask;  // I + G, sliced
    return M;
}

SolutionSpace solution_space(unsigned l, unsigned delta) {
    if (delta >= l) fail(errc::bad_argument, "delta must satisfy 0 <= delta < l");
    const BitMatrix M = kronecker_M(l);
    const unsigned nvars = l - delta;
    // Columns delta..l-1 of M_l, as bit-rows over the tail variables.
    std::vector<std::uint64_t> rows(l, 0);
    for (unsigned r = 0; r < l; ++r)
        rows[r] = (M.rows[r] >> delta) & ((nvars == 64) ? ~0ULL : ((1ULL << nvars) - 1));
    // RREF over F_2
    std::vector<int> pivot_of_col(nvars, -1);
    unsigned rank = 0;
    for (unsigned c = 0; c < nvars && rank < l; ++c) {
        unsigned sel = rank;
        while (sel < l && !((rows[sel] >> c) & 1)) ++sel;
        if (sel == l) continue;
        std::swap(rows[sel], rows[rank]);
        for (unsigned r = 0; r < l; ++r)
            if (r != rank && ((rows[r] >> c) & 1)) rows[r] ^= rows[rank];
        pivot_of_col[c] = static_cast<int>(rank);
        ++rank;
    }
    SolutionSpace S;
    S.l = l;
    S.delta = delta;
    for (unsigned c = 0; c < nvars; ++c) {
        if (pivot_of_col[c] >= 0) continue;
        std::vector<std::uint8_t> v(nvars, 0);
        v[c] = 1;
        for (unsigned cc = 0; cc < nvars; ++cc)
            if (pivot_of_col[cc] >= 0)
                v[cc] = static_cast<std::uint8_t>(
                    (rows[static_cast<unsigned>(pivot_of_col[cc])] >> c) & 1);
        S.basis.push_back(std::move(v));
    }
    return S;
}

std::vector<felem> SolutionSpace::element(const Field& F, std::uint64_t idx) const {
    std::vector<felem> v(l - delta, 0);
    const std::uint64_t q = F.size();
    for (const auto& b : basis) {
        const felem coef = static_cast<felem>(idx % q);
        idx /= q;
        if (coef)
            for (std::size_t i = 0; i < v.size(); ++i)
                if (b[i]) v[i] ^= coef;
    }
    if (idx) fail(errc::index_out_of_range, "solution-space index out of range");
    return v;
}

}  // namespace sdc
