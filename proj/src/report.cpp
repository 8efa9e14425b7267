#include "sdc/report.hpp"

#include <atomic>
#include <cstdlib>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "sdc/error.hpp"
#include "sdc/verify.hpp"

namespace sdc {

using ordered_json = nlohmann::ordered_json;

std::string count_report(const System& sys, CountMode mode) {
    switch (mode) {
        case CountMode::closed_form:
            return sys.count_closed_form().to_decimal();
        case CountMode::enumerate_all:
            return sys.count_enumerate().to_decimal();
        case CountMode::both: {
            const BigUInt closed = sys.count_closed_form();
            const BigUInt walked = sys.count_enumerate();
            if (closed != walked)
                fail(errc::count_mismatch, "closed form " + closed.to_decimal() +
                                               " != enumeration " + walked.to_decimal());
            return closed.to_decimal();
        }
    }
    fail(errc::internal, "unknown count mode");
}

std::string factor_report_json(const System& sys) {
    const Field& F = sys.field();
    const FactorData& fd = sys.factors();
    ordered_json out;
    out["m"] = F.degree();
    out["modulus"] = F.modulus_bits();
    out["n"] = fd.n;
    out["s"] = fd.s;
    out["N"] = fd.N;
    out["rho"] = fd.rho;
    out["epsilon"] = fd.epsilon;
    ordered_json factors = ordered_json::array();
    for (std::size_t i = 0; i < fd.factors.size(); ++i) {
        const FactorRec& rec = fd.factors[i];
        ordered_json f;
        f["j"] = i + 1;
        f["poly"] = poly_to_text(F, rec.f);
        f["degree"] = rec.degree;
        f["class"] = factor_class_name(rec.cls);
        if (rec.partner) f["partner"] = rec.partner;
        else f["partner"] = nullptr;
        f["delta"] = rec.delta;
        f["coset"] = rec.coset;
        factors.push_back(std::move(f));
    }
    out["factors"] = std::move(factors);
    ordered_json eps = ordered_json::array();
    for (const Poly& e : fd.idempotents) eps.push_back(poly_to_text(F, e));
    out["idempotents"] = std::move(eps);
    return out.dump(2) + "\n";
}

namespace {

void check_omega_args(const System& sys, unsigned j, unsigned nu) {
    if (j < 2 || j > sys.factors().rho)
        fail(errc::not_self_reciprocal,
             "--j must name a self-reciprocal factor index in 2..rho");
    if (nu < 1 || nu > sys.two_s() / 2)
        fail(errc::bad_argument, "--nu must lie in 1..2^(s-1)");
}

std::string set_text(const Field& F, const std::vector<Poly>& set) {
    std::string out = "{";
    for (std::size_t i = 0; i < set.size(); ++i) {
        if (i) out += ", ";
        out += poly_to_text(F, set[i]);
    }
    return out + "}";
}

}  // namespace

std::string omega_report_text(const System& sys, unsigned j, unsigned nu) {
    check_omega_args(sys, j, nu);
    const Field& F = sys.field();
    const OmegaSet& os = sys.omega(j, nu);
    std::ostringstream out;
    out << "Omega_{" << j << "," << nu << "} over F_" << F.size()
        << ", f_j = " << poly_to_text(F, sys.factors().factors[j - 1].f)
        << ", " << os.elements.size() << " elements\n";
    out << set_text(F, os.elements) << "\n";
    out << "digit trails (beta_0..beta_" << nu - 1 << "):\n";
    for (std::size_t i = 0; i < os.elements.size(); ++i) {
        out << "  " << poly_to_text(F, os.elements[i]) << "  <-  (";
        for (std::size_t t = 0; t < os.trails[i].size(); ++t) {
            if (t) out << ", ";
            out << poly_to_text(F, os.trails[i][t]);
        }
        out << ")\n";
    }
    out << "W-sets:\n";
    for (const auto& w : os.w_sets) {
        out << "  W^(" << w.prefix.size() << ")";
        if (!w.prefix.empty()) {
            out << "_(";
            for (std::size_t t = 0; t < w.prefix.size(); ++t) {
                if (t) out << ", ";
                out << poly_to_text(F, w.prefix[t]);
            }
            out << ")";
        }
        out << " = " << set_text(F, w.choices) << "\n";
    }
    return out.str();
}

std::string omega_report_json(const System& sys, unsigned j, unsigned nu) {
    check_omega_args(sys, j, nu);
    const Field& F = sys.field();
    const OmegaSet& os = sys.omega(j, nu);
    ordered_json out;
    out["j"] = j;
    out["nu"] = nu;
    out["f"] = poly_to_text(F, sys.factors().factors[j - 1].f);
    out["cardinality"] = os.elements.size();
    ordered_json elems = ordered_json::array();
    for (std::size_t i = 0; i < os.elements.size(); ++i) {
        ordered_json e;
        e["poly"] = poly_to_text(F, os.elements[i]);
        ordered_json digits = ordered_json::array();
        for (const Poly& d : os.trails[i]) digits.push_back(poly_to_text(F, d));
        e["digits"] = std::move(digits);
        elems.push_back(std::move(e));
    }
    out["elements"] = std::move(elems);
    ordered_json wsets = ordered_json::array();
    for (const auto& w : os.w_sets) {
        ordered_json e;
        ordered_json prefix = ordered_json::array();
        for (const Poly& p : w.prefix) prefix.push_back(poly_to_text(F, p));
        e["prefix"] = std::move(prefix);
        ordered_json choices = ordered_json::array();
        for (const Poly& c : w.choices) choices.push_back(poly_to_text(F, c));
        e["choices"] = std::move(choices);
        wsets.push_back(std::move(e));
    }
    out["w_sets"] = std::move(wsets);
    return out.dump(2) + "\n";
}

std::string record_json(const System& sys, const CodeRecord& rec) {
    const Field& F = sys.field();
    ordered_json out;
    out["index"] = rec.index;
    ordered_json choices = ordered_json::array();
    for (const IdealSpec& spec : rec.choices) {
        ordered_json c;
        c["j"] = spec.j;
        c["case"] = case_tag_name(spec.tag);
        ordered_json params = ordered_json::object();
        if (spec.nu >= 0) params["nu"] = spec.nu;
        if (spec.k >= 0) params["k"] = spec.k;
        if (spec.t >= 0) params["t"] = spec.t;
        if (spec.h >= 0) params["h"] = spec.h;
        if (!spec.partner_gens.empty())
            params["partner"] = sys.factors().factors[spec.j - 1].partner;
        c["params"] = std::move(params);
        if (spec.b.is_zero() && spec.tag != CaseTag::II_2 && spec.tag != CaseTag::II_3)
            c["b_poly"] = nullptr;
        else
            c["b_poly"] = poly_to_text(F, spec.b);
        if (spec.tag == CaseTag::II_2 || spec.tag == CaseTag::II_3)
            c["beta_poly"] = poly_to_text(F, spec.beta);
        choices.push_back(std::move(c));
    }
    out["choices"] = std::move(choices);
    ordered_json gens = ordered_json::array();
    for (const GenPair& g : rec.gens) {
        ordered_json e;
        e["a_poly"] = poly_to_text(F, g.a);
        e["b_poly"] = poly_to_text(F, g.b);
        gens.push_back(std::move(e));
    }
    out["generators"] = std::move(gens);
    return out.dump();
}

unsigned default_thread_count() {
    if (const char* env = std::getenv("SDC_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1 && v <= 256) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

namespace {

// index-partitioned parallel map; results land in deterministic slots
template <typename Fn>
void parallel_for(std::uint64_t count, unsigned threads, Fn&& fn) {
    if (threads <= 1 || count < 2) {
        for (std::uint64_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::uint64_t> next{0};
    auto worker = [&]() {
        while (true) {
            const std::uint64_t i = next.fetch_add(1);
            if (i >= count) break;
            fn(i);
        }
    };
    std::vector<std::thread> pool;
    const unsigned use = static_cast<unsigned>(
        std::min<std::uint64_t>(threads, count));
    pool.reserve(use);
    for (unsigned t = 0; t < use; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

}  // namespace

std::string verify_report_json(const System& sys, std::int64_t sample, unsigned threads) {
    const BigUInt total = sys.total();
    if (threads == 0) threads = default_thread_count();

    std::vector<std::uint64_t> indices;
    if (sample < 0) {
        if (BigUInt::compare(total, BigUInt(1ULL << 22)) > 0)
            fail(errc::too_large, "verify --all refused for " + total.to_decimal() +
                                      " codes; use --sample");
        const std::uint64_t n = total.to_u64();
        indices.resize(n);
        for (std::uint64_t i = 0; i < n; ++i) indices[i] = i;
    } else {
        if (!total.fits_u64())
            fail(errc::too_large, "sampling needs a total below 2^64");
        const std::uint64_t n = total.to_u64();
        const std::uint64_t k = std::min<std::uint64_t>(static_cast<std::uint64_t>(sample), n);
        indices.reserve(k);
        for (std::uint64_t i = 0; i < k; ++i)
            indices.push_back(static_cast<std::uint64_t>(
                (static_cast<unsigned __int128>(i) * n) / k));
    }

    sys.slots();  // build shared state before fanning out
    std::vector<std::uint8_t> ok(indices.size(), 0);
    std::vector<unsigned> dims(indices.size(), 0);
    parallel_for(indices.size(), threads, [&](std::uint64_t i) {
        const CodeRecord rec = sys.record_at(indices[i]);
        const VerifyResult res = verify_self_dual(sys.field(), rec, sys.N());
        ok[i] = res.self_dual ? 1 : 0;
        dims[i] = res.dim;
    });

    ordered_json out;
    out["m"] = sys.field().degree();
    out["n"] = sys.n();
    out["s"] = sys.s();
    out["total"] = total.to_decimal();
    out["checked"] = indices.size();
    std::uint64_t confirmed = 0;
    ordered_json failures = ordered_json::array();
    ordered_json failure_dims = ordered_json::array();
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (ok[i]) {
            ++confirmed;
        } else {
            failures.push_back(indices[i]);
            failure_dims.push_back(dims[i]);
        }
    }
    out["confirmed"] = confirmed;
    out["failures"] = std::move(failures);
    if (!failure_dims.empty()) out["failure_dimensions"] = std::move(failure_dims);
    return out.dump(2) + "\n";
}

std::string gray_matrix_text(const System& sys, std::uint64_t index) {
    const Field& F = sys.field();
    const CodeRecord rec = sys.record_at(index);
    const SpanBasis basis = span_basis(F, rec, sys.N());
    // generator matrix of phi(C): echelon basis of the mapped span
    std::vector<std::vector<felem>> gray_rows;
    for (const auto& r : basis.rows) {
        RVector v(sys.N());
        for (unsigned i = 0; i < sys.N(); ++i) v[i] = {r[i], r[sys.N() + i]};
        gray_rows.push_back(gray_map(F, v));
    }
    const SpanBasis gray = echelon_rows(F, sys.N(), gray_rows);
    std::ostringstream out;
    for (const auto& row : gray.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (F.degree() > 4 && i) out << ' ';
            out << std::hex << row[i] << std::dec;
        }
        out << '\n';
    }
    return out.str();
}

std::string weights_report_json(const System& sys, std::uint64_t index, unsigned cap) {
    const CodeRecord rec = sys.record_at(index);
    const WeightReport rep = weight_distribution(sys.field(), rec, sys.N(), cap);
    ordered_json out;
    out["index"] = index;
    out["dimension"] = span_basis(sys.field(), rec, sys.N()).dim();
    ordered_json hist = ordered_json::object();
    for (auto& [w, c] : rep.lee) hist[std::to_string(w)] = c;
    out["lee_histogram"] = std::move(hist);
    out["matches_gray_hamming"] = rep.match;
    return out.dump(2) + "\n";
}

}  // namespace sdc
