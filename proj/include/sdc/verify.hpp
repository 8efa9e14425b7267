#ifndef SDC_VERIFY_HPP
#define SDC_VERIFY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "sdc/enumerate.hpp"
#include "sdc/field.hpp"

namespace sdc {

// Element of R = F_{2^m} + u F_{2^m}: value a + u b with u^2 = 0, so
// (a,b) * (a',b') = (a a', a b' + a' b).
struct RElem {
    felem a = 0, b = 0;
    bool operator==(const RElem&) const = default;
};
using RVector = std::vector<RElem>;

RElem r_mul(const Field& F, RElem x, RElem y);
// Euclidean inner product sum a_i b_i in R; lengths must agree.
RElem r_inner(const Field& F, const RVector& x, const RVector& y);

RVector rvector_from_gen(const GenPair& g, unsigned N);
RVector rvector_shift(const RVector& v);        // multiply by x (cyclic)
RVector rvector_mul_u(const RVector& v);        // multiply by u

// Row-echelon F_{2^m}-basis of the code as a subspace of F^{2N} with the
// (a | b) coordinate convention. Rows are reduced echelon; pivot bookkeeping
// backs the membership test.
struct SpanBasis {
    unsigned N = 0;
    std::vector<std::vector<felem>> rows;
    std::vector<unsigned> pivots;  // pivot column of each row, strictly increasing

    unsigned dim() const { return static_cast<unsigned>(rows.size()); }
    // reduce v against the basis; true if it lands in the span
    bool contains(const Field& F, std::vector<felem> v) const;
};

// F-span of {x^i g, u x^i g} over all generators and shifts.
SpanBasis span_basis(const Field& F, const CodeRecord& rec, unsigned N);

// Reduced echelon span of arbitrary rows over F.
SpanBasis echelon_rows(const Field& F, unsigned N,
                       const std::vector<std::vector<felem>>& rows);

struct VerifyResult {
    bool self_dual = false;
    unsigned dim = 0;
    // witness pair of basis rows with nonzero inner product, if any
    std::optional<std::pair<unsigned, unsigned>> witness;
};
// Self-duality = (all pairwise inner products vanish) and (dimension = N).
VerifyResult verify_self_dual(const Field& F, const CodeRecord& rec, unsigned N);

// phi(a + u b) = (b | a + b), coordinatewise over the length-N vector.
std::vector<felem> gray_map(const Field& F, const RVector& v);
RVector gray_unmap(const Field& F, std::span<const felem> img);
unsigned lee_weight(const Field& F, const RVector& v);

struct GrayReport {
    unsigned rank = 0;
    bool rank_ok = false;   // rank = N
    bool orthogonal = false;  // G G^T = 0
    bool quasi_cyclic = false;  // closed under the simultaneous half-shifts
    bool ok() const { return rank_ok && orthogonal && quasi_cyclic; }
};
GrayReport gray_image_checks(const Field& F, const CodeRecord& rec, unsigned N);

// Exhaustive codeword walk (Lee side and Gray side computed independently);
// keys are weights, values are codeword counts. Refuses above the cap.
struct WeightReport {
    std::map<unsigned, std::uint64_t> lee;
    std::map<unsigned, std::uint64_t> gray_hamming;
    bool match = false;
};
WeightReport weight_distribution(const Field& F, const CodeRecord& rec, unsigned N,
                                 unsigned cap = 24);

// Canonical fingerprint of the code's row space (echelon rows serialized);
// equal codes give equal fingerprints.
std::string span_fingerprint(const Field& F, const CodeRecord& rec, unsigned N);

}  // namespace sdc

#endif
