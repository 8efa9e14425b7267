#include "sdc/verify.hpp"

#include <algorithm>
#include <sstream>

#include "sdc/error.hpp"

namespace sdc {

RElem r_mul(const Field& F, RElem x, RElem y) {
    return {F.mul(x.a, y.a), F.add(F.mul(x.a, y.b), F.mul(x.b, y.a))};
}

RElem r_inner(const Field& F, const RVector& x, const RVector& y) {
    if (x.size() != y.size()) fail(errc::shape_error, "inner product length mismatch");
    RElem acc;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const RElem p = r_mul(F, x[i], y[i]);
        acc.a ^= p.a;
        acc.b ^= p.b;
    }
    return acc;
}

RVector rvector_from_gen(const GenPair& g, unsigned N) {
    RVector v(N);
    for (unsigned i = 0; i < N; ++i) v[i] = {g.a.coeff(i), g.b.coeff(i)};
    return v;
}

RVector rvector_shift(const RVector& v) {
    RVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[(i + 1) % v.size()] = v[i];
    return out;
}

RVector rvector_mul_u(const RVector& v) {
    RVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = {0, v[i].a};
    return out;
}

namespace {

std::vector<felem> flat_coords(const RVector& v) {
    std::vector<felem> out(2 * v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        out[i] = v[i].a;
        out[v.size() + i] = v[i].b;
    }
    return out;
}

// echelon insert; returns true if the row increased the span
bool echelon_insert(const Field& F, SpanBasis& basis, std::vector<felem> v) {
    for (std::size_t r = 0; r < basis.rows.size(); ++r) {
        const felem c = v[basis.pivots[r]];
        if (c == 0) continue;
        for (std::size_t i = 0; i < v.size(); ++i)
            v[i] ^= F.mul(c, basis.rows[r][i]);
    }
    unsigned pivot = 0;
    while (pivot < v.size() && v[pivot] == 0) ++pivot;
    if (pivot == v.size()) return false;
    const felem inv = F.inv(v[pivot]);
    for (auto& e : v) e = F.mul(e, inv);
    // back-substitute into earlier rows, keep rows sorted by pivot
    for (std::size_t r = 0; r < basis.rows.size(); ++r) {
        const felem c = basis.rows[r][pivot];
        if (c == 0) continue;
        for (std::size_t i = 0; i < v.size(); ++i)
            basis.rows[r][i] ^= F.mul(c, v[i]);
    }
    const auto at = std::upper_bound(basis.pivots.begin(), basis.pivots.end(), pivot);
    const std::size_t where = static_cast<std::size_t>(at - basis.pivots.begin());
    basis.pivots.insert(at, pivot);
    basis.rows.insert(basis.rows.begin() + static_cast<std::ptrdiff_t>(where), std::move(v));
    return true;
}

}  // namespace

SpanBasis echelon_rows(const Field& F, unsigned N,
                       const std::vector<std::vector<felem>>& rows) {
    SpanBasis basis;
    basis.N = N;
    for (const auto& row : rows) echelon_insert(F, basis, row);
    return basis;
}

bool SpanBasis::contains(const Field& F, std::vector<felem> v) const {
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const felem c = v[pivots[r]];
        if (c == 0) continue;
        for (std::size_t i = 0; i < v.size(); ++i)
            v[i] ^= F.mul(c, rows[r][i]);
    }
    return std::all_of(v.begin(), v.end(), [](felem e) { return e == 0; });
}

SpanBasis span_basis(const Field& F, const CodeRecord& rec, unsigned N) {
    std::vector<std::vector<felem>> rows;
    rows.reserve(rec.gens.size() * 2 * N);
    for (const auto& g : rec.gens) {
        RVector v = rvector_from_gen(g, N);
        for (unsigned i = 0; i < N; ++i) {
            rows.push_back(flat_coords(v));
            rows.push_back(flat_coords(rvector_mul_u(v)));
            v = rvector_shift(v);
        }
    }
    return echelon_rows(F, N, rows);
}

namespace {

RVector rvector_from_coords(std::span<const felem> row, unsigned N) {
    RVector v(N);
    for (unsigned i = 0; i < N; ++i) v[i] = {row[i], row[N + i]};
    return v;
}

}  // namespace

VerifyResult verify_self_dual(const Field& F, const CodeRecord& rec, unsigned N) {
    const SpanBasis basis = span_basis(F, rec, N);
    VerifyResult res;
    res.dim = basis.dim();
    std::vector<RVector> rows;
    rows.reserve(basis.dim());
    for (const auto& r : basis.rows) rows.push_back(rvector_from_coords(r, N));
    for (unsigned i = 0; i < rows.size(); ++i)
        for (unsigned k = i; k < rows.size(); ++k)
            if (r_inner(F, rows[i], rows[k]) != RElem{}) {
                res.witness = {i, k};
                return res;
            }
    res.self_dual = (res.dim == N) && !res.witness;
    return res;
}

std::vector<felem> gray_map(const Field& F, const RVector& v) {
    std::vector<felem> out(2 * v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        out[i] = v[i].b;
        out[v.size() + i] = F.add(v[i].a, v[i].b);
    }
    return out;
}

RVector gray_unmap(const Field& F, std::span<const felem> img) {
    if (img.size() % 2) fail(errc::shape_error, "gray image length must be even");
    const std::size_t N = img.size() / 2;
    RVector v(N);
    for (std::size_t i = 0; i < N; ++i) {
        const felem b = img[i];
        v[i] = {F.add(img[N + i], b), b};
    }
    return v;
}

unsigned lee_weight(const Field& F, const RVector& v) {
    unsigned w = 0;
    for (const RElem& e : v) {
        if (e.b != 0) ++w;
        if (F.add(e.a, e.b) != 0) ++w;
    }
    return w;
}

GrayReport gray_image_checks(const Field& F, const CodeRecord& rec, unsigned N) {
    const SpanBasis basis = span_basis(F, rec, N);
    GrayReport rep;
    // Gray rows span, built freshly from the code basis
    std::vector<std::vector<felem>> gray_rows;
    gray_rows.reserve(basis.dim());
    for (const auto& r : basis.rows)
        gray_rows.push_back(gray_map(F, rvector_from_coords(r, N)));
    const SpanBasis gray = echelon_rows(F, N, gray_rows);
    rep.rank = gray.dim();
    rep.rank_ok = (rep.rank == N);

    rep.orthogonal = true;
    for (std::size_t i = 0; i < gray_rows.size() && rep.orthogonal; ++i)
        for (std::size_t k = i; k < gray_rows.size(); ++k) {
            felem acc = 0;
            for (std::size_t c = 0; c < gray_rows[i].size(); ++c)
                acc ^= F.mul(gray_rows[i][c], gray_rows[k][c]);
            if (acc != 0) { rep.orthogonal = false; break; }
        }

    rep.quasi_cyclic = true;
    for (const auto& row : gray_rows) {
        // simultaneous single cyclic shift of each length-N half
        std::vector<felem> shifted(2 * N);
        for (unsigned i = 0; i < N; ++i) {
            shifted[(i + 1) % N] = row[i];
            shifted[N + (i + 1) % N] = row[N + i];
        }
        if (!gray.contains(F, shifted)) { rep.quasi_cyclic = false; break; }
    }
    return rep;
}

WeightReport weight_distribution(const Field& F, const CodeRecord& rec, unsigned N,
                                 unsigned cap) {
    const SpanBasis basis = span_basis(F, rec, N);
    const unsigned k = basis.dim();
    if (static_cast<std::uint64_t>(k) * F.degree() > cap)
        fail(errc::too_large, "codeword walk dimension exceeds the cap");

    std::vector<RVector> lee_rows;
    std::vector<std::vector<felem>> gray_rows;
    for (const auto& r : basis.rows) {
        lee_rows.push_back(rvector_from_coords(r, N));
        gray_rows.push_back(gray_map(F, lee_rows.back()));
    }

    WeightReport rep;
    const std::uint64_t q = F.size();
    std::uint64_t count = 1;
    for (unsigned i = 0; i < k; ++i) count *= q;

    // Lee side: base-q odometer with delta updates (field multiplication is
    // F_2-bilinear, so changing one coefficient XORs in (old^new) * row)
    {
        std::vector<felem> coef(k, 0);
        RVector cur(N);
        std::uint64_t idx = 0;
        while (true) {
            rep.lee[lee_weight(F, cur)]++;
            if (++idx == count) break;
            unsigned pos = 0;
            while (true) {
                const felem old = coef[pos];
                coef[pos] = static_cast<felem>((old + 1) % q);
                const felem diff = old ^ coef[pos];
                for (unsigned c = 0; c < N; ++c) {
                    cur[c].a ^= F.mul(diff, lee_rows[pos][c].a);
                    cur[c].b ^= F.mul(diff, lee_rows[pos][c].b);
                }
                if (coef[pos] != 0) break;
                ++pos;
            }
        }
    }
    // Gray side: independent walk over the mapped rows
    {
        std::vector<felem> coef(k, 0);
        std::vector<felem> cur(2 * N, 0);
        std::uint64_t idx = 0;
        while (true) {
            unsigned w = 0;
            for (felem e : cur)
                if (e != 0) ++w;
            rep.gray_hamming[w]++;
            if (++idx == count) break;
            unsigned pos = 0;
            while (true) {
                const felem old = coef[pos];
                coef[pos] = static_cast<felem>((old + 1) % q);
                const felem diff = old ^ coef[pos];
                for (unsigned c = 0; c < 2 * N; ++c)
                    cur[c] ^= F.mul(diff, gray_rows[pos][c]);
                if (coef[pos] != 0) break;
                ++pos;
            }
        }
    }
    rep.match = (rep.lee == rep.gray_hamming);
    return rep;
}

std::string span_fingerprint(const Field& F, const CodeRecord& rec, unsigned N) {
    const SpanBasis basis = span_basis(F, rec, N);
    std::ostringstream os;
    os << basis.dim() << ';';
    for (const auto& row : basis.rows) {
        for (felem e : row) os << std::hex << e << ',';
        os << '|';
    }
    return os.str();
}

}  // namespace sdc
