#ifndef SDC_ENUMERATE_HPP
#define SDC_ENUMERATE_HPP

#include <map>
#include <memory>
#include <vector>

#include "sdc/bigint.hpp"
#include "sdc/chain.hpp"
#include "sdc/factorization.hpp"
#include "sdc/field.hpp"
#include "sdc/omega.hpp"
#include "sdc/poly.hpp"

namespace sdc {

// One bullet of the per-factor ideal lists, identified by case family.
enum class CaseTag {
    I_s1_a, I_s1_b,
    I_s2_a, I_s2_b, I_s2_c,
    I_s3_a, I_s3_b, I_s3_c, I_s3_d, I_s3_e,
    II_1, II_2, II_3,
    III_1, III_2, III_3, III_4, III_5,
};
const char* case_tag_name(CaseTag tag);

// a(x) + u b(x); reduced mod f_j^(2^s) per factor, mod x^N - 1 once assembled.
struct GenPair {
    Poly a, b;
    bool is_zero() const { return a.is_zero() && b.is_zero(); }
    bool operator==(const GenPair&) const = default;
};

// One chosen ideal: C_j for a self-reciprocal slot, the (C_j, C_{j+eps}) pair
// for a reciprocal-pair slot.
struct IdealSpec {
    unsigned j = 0;
    CaseTag tag = CaseTag::I_s1_a;
    int nu = -1, k = -1, t = -1, h = -1;  // case parameters where applicable
    Poly b;                                // payload b(x) of the generator formula
    Poly beta;                             // Case II: the Omega element behind b
    std::vector<GenPair> gens;             // generators of C_j
    std::vector<GenPair> partner_gens;     // pair slots: generators of C_{j+eps}
};

struct CodeRecord {
    std::uint64_t index = 0;
    std::vector<IdealSpec> choices;  // one per slot, factor order
    std::vector<GenPair> gens;       // assembled generators mod x^N - 1
};

// Everything derived from (field, n, s): factorization, chain rings, Omega sets,
// and the slot/family decomposition of the code enumeration. Lazy pieces are
// built on first use from a single thread; afterwards reads are unrestricted.
class System {
public:
    System(Field field, unsigned n, unsigned s);
    // lazy members hold pointers back into this object
    System(const System&) = delete;
    System& operator=(const System&) = delete;

    const Field& field() const { return field_; }
    const FactorData& factors() const { return fd_; }
    unsigned n() const { return fd_.n; }
    unsigned s() const { return fd_.s; }
    unsigned N() const { return fd_.N; }
    unsigned two_s() const { return 1u << fd_.s; }

    const QuotRing& K(unsigned j) const;                    // F[x]/(f_j^(2^s))
    const OmegaSet& omega(unsigned j, unsigned nu) const;   // cached; j self-reciprocal >= 2

    struct Family {
        CaseTag tag = CaseTag::I_s1_a;
        int nu = -1, k = -1, t = -1, h = -1;
        enum class Payload { none, scalar, sspace, digits, omega } kind = Payload::none;
        unsigned digit_lo = 0, digit_hi = 0;  // digits: b = sum_{i in [lo,hi)} b_i f^i
        SolutionSpace space;                  // sspace: tail of the nullspace slice
        unsigned exp_lo = 0;                  // sspace: f-exponent of tail position 0
        const OmegaSet* om = nullptr;         // omega: b = f^(nu-1) * element
        BigUInt size;
    };
    struct Slot {
        unsigned j = 0;
        bool is_pair = false;
        std::vector<Family> families;
        BigUInt size;
    };
    const std::vector<Slot>& slots() const;

    BigUInt total() const;            // product of slot sizes
    BigUInt count_closed_form() const;  // mass formula; s = 1 is not covered
    // Constructs every per-factor ideal spec and multiplies the list lengths;
    // slots longer than the cap are refused.
    BigUInt count_enumerate(std::uint64_t cap = (1ULL << 22)) const;

    std::vector<IdealSpec> choices_at(std::uint64_t index) const;
    CodeRecord record_at(std::uint64_t index) const;
    CodeRecord assemble(std::vector<IdealSpec> choices, std::uint64_t index) const;

    IdealSpec slot_spec_at(const Slot& slot, const BigUInt& pos) const;

    // Rebuild a spec's generators after replacing its payload polynomial; the
    // case family and parameters are kept, no membership constraint is applied.
    IdealSpec respec(const IdealSpec& original, Poly b) const;

private:
    void build_slots() const;
    void build_gens(IdealSpec& spec) const;
    IdealSpec make_spec(const Slot& slot, const Family& fam, std::uint64_t payload) const;
    Poly payload_b(unsigned j, const Family& fam, std::uint64_t payload, Poly* beta_out) const;

    Field field_;
    FactorData fd_;
    mutable std::vector<std::unique_ptr<QuotRing>> K_;  // per factor, lazy
    mutable std::map<std::pair<unsigned, unsigned>, OmegaSet> omega_;
    mutable std::vector<Slot> slots_;
    mutable bool slots_built_ = false;
};

}  // namespace sdc

#endif
