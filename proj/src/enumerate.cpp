#include "sdc/enumerate.hpp"

#include <algorithm>
#include <string>

#include "sdc/error.hpp"

namespace sdc {

const char* case_tag_name(CaseTag tag) {
    switch (tag) {
        case CaseTag::I_s1_a: return "I-s1-a";
        case CaseTag::I_s1_b: return "I-s1-b";
        case CaseTag::I_s2_a: return "I-s2-a";
        case CaseTag::I_s2_b: return "I-s2-b";
        case CaseTag::I_s2_c: return "I-s2-c";
        case CaseTag::I_s3_a: return "I-s3-a";
        case CaseTag::I_s3_b: return "I-s3-b";
        case CaseTag::I_s3_c: return "I-s3-c";
        case CaseTag::I_s3_d: return "I-s3-d";
        case CaseTag::I_s3_e: return "I-s3-e";
        case CaseTag::II_1: return "II-1";
        case CaseTag::II_2: return "II-2";
        case CaseTag::II_3: return "II-3";
        case CaseTag::III_1: return "III-1";
        case CaseTag::III_2: return "III-2";
        case CaseTag::III_3: return "III-3";
        case CaseTag::III_4: return "III-4";
        case CaseTag::III_5: return "III-5";
    }
    return "?";
}

System::System(Field field, unsigned n, unsigned s)
    : field_(std::move(field)), fd_(factor_system(field_, n, s)) {
    K_.resize(fd_.factors.size());
}

const QuotRing& System::K(unsigned j) const {
    if (j < 1 || j > fd_.factors.size()) fail(errc::index_out_of_range, "factor index");
    auto& slot = K_[j - 1];
    if (!slot) slot = std::make_unique<QuotRing>(field_, fd_.factors[j - 1].f, two_s());
    return *slot;
}

const OmegaSet& System::omega(unsigned j, unsigned nu) const {
    if (j < 2 || j > fd_.rho)
        fail(errc::not_self_reciprocal,
             "omega is defined for self-reciprocal factor indices 2..rho");
    if (nu < 1) fail(errc::bad_argument, "nu must be >= 1");
    auto key = std::make_pair(j, nu);
    auto it = omega_.find(key);
    if (it == omega_.end())
        it = omega_.emplace(key, omega_enumerate(field_, fd_.factors[j - 1].f, nu)).first;
    return it->second;
}

namespace {
BigUInt q_pow(const Field& F, std::uint64_t bits_per_unit, std::uint64_t units) {
    return BigUInt::pow2(bits_per_unit * units * F.degree());
}
}  // namespace

void System::build_slots() const {
    if (slots_built_) return;
    const unsigned E = two_s();
    const unsigned half = E / 2;

    auto digits_family = [&](unsigned j, CaseTag tag, int nu, int k, int t, int h,
                             unsigned lo, unsigned hi) {
        Family fam;
        fam.tag = tag;
        fam.nu = nu; fam.k = k; fam.t = t; fam.h = h;
        fam.kind = Family::Payload::digits;
        fam.digit_lo = lo;
        fam.digit_hi = std::max(lo, hi);
        fam.size = q_pow(field_, fd_.factors[j - 1].degree, fam.digit_hi - fam.digit_lo);
        return fam;
    };

    slots_.clear();

    {  // Case I: the x - 1 slot
        Slot slot;
        slot.j = 1;
        if (fd_.s == 1) {
            Family a;
            a.tag = CaseTag::I_s1_a;
            a.size = BigUInt(1);
            slot.families.push_back(std::move(a));
            Family b;
            b.tag = CaseTag::I_s1_b;
            b.kind = Family::Payload::scalar;
            b.size = BigUInt(field_.size());
            slot.families.push_back(std::move(b));
        } else if (fd_.s == 2) {
            Family a;
            a.tag = CaseTag::I_s2_a;
            a.size = BigUInt(1);
            slot.families.push_back(std::move(a));
            slot.families.push_back(digits_family(1, CaseTag::I_s2_b, -1, -1, -1, -1, 1, 3));
            Family c;
            c.tag = CaseTag::I_s2_c;
            c.kind = Family::Payload::scalar;
            c.size = BigUInt(field_.size());
            slot.families.push_back(std::move(c));
        } else {
            Family a;
            a.tag = CaseTag::I_s3_a;
            a.size = BigUInt(1);
            slot.families.push_back(std::move(a));
            Family b;
            b.tag = CaseTag::I_s3_b;
            b.kind = Family::Payload::sspace;
            b.space = solution_space(E - 1, half - 1);
            b.exp_lo = half - 1;
            b.size = b.space.cardinality(field_);
            slot.families.push_back(std::move(b));
            Family c;
            c.tag = CaseTag::I_s3_c;
            c.kind = Family::Payload::scalar;
            c.size = BigUInt(field_.size());
            slot.families.push_back(std::move(c));
            for (unsigned h = 1; h <= (1u << (fd_.s - 2)) - 1; ++h) {
                Family d;
                d.tag = CaseTag::I_s3_d;
                d.h = static_cast<int>(h);
                d.kind = Family::Payload::sspace;
                d.space = solution_space(4 * h - 1, 2 * h - 1);
                d.exp_lo = 2 * h - 1;
                d.size = d.space.cardinality(field_);
                slot.families.push_back(std::move(d));
            }
            for (unsigned h = 1; h <= (1u << (fd_.s - 2)) - 1; ++h) {
                Family e;
                e.tag = CaseTag::I_s3_e;
                e.h = static_cast<int>(h);
                e.kind = Family::Payload::sspace;
                e.space = solution_space(4 * h + 1, 2 * h);
                e.exp_lo = 2 * h;
                e.size = e.space.cardinality(field_);
                slot.families.push_back(std::move(e));
            }
        }
        slots_.push_back(std::move(slot));
    }

    for (unsigned j = 2; j <= fd_.rho; ++j) {  // Case II slots
        Slot slot;
        slot.j = j;
        Family one;
        one.tag = CaseTag::II_1;
        one.size = BigUInt(1);
        slot.families.push_back(std::move(one));
        Family two;
        two.tag = CaseTag::II_2;
        two.nu = static_cast<int>(half);
        two.kind = Family::Payload::omega;
        two.om = &omega(j, half);
        two.size = BigUInt(two.om->elements.size());
        slot.families.push_back(std::move(two));
        for (unsigned nu = 1; nu + 1 <= half; ++nu) {
            Family three;
            three.tag = CaseTag::II_3;
            three.nu = static_cast<int>(nu);
            three.kind = Family::Payload::omega;
            three.om = &omega(j, nu);
            three.size = BigUInt(three.om->elements.size());
            slot.families.push_back(std::move(three));
        }
        slots_.push_back(std::move(slot));
    }

    for (unsigned j = fd_.rho + 1; j <= fd_.rho + fd_.epsilon; ++j) {  // Case III slots
        Slot slot;
        slot.j = j;
        slot.is_pair = true;
        slot.families.push_back(digits_family(j, CaseTag::III_1, -1, -1, -1, -1,
                                              half - 1, E - 1));
        for (unsigned k = 1; k + 1 <= E; ++k) {
            const unsigned t = E - k;  // partner chain length; payload lives mod f^(t-1)
            slot.families.push_back(digits_family(j, CaseTag::III_2, -1,
                                                  static_cast<int>(k), -1, -1,
                                                  (t + 1) / 2 - 1, t - 1));
        }
        for (unsigned k = 0; k <= E; ++k) {
            Family fam;
            fam.tag = CaseTag::III_3;
            fam.k = static_cast<int>(k);
            fam.size = BigUInt(1);
            slot.families.push_back(std::move(fam));
        }
        for (unsigned t = 1; t + 1 <= E; ++t)
            slot.families.push_back(digits_family(j, CaseTag::III_4, -1, -1,
                                                  static_cast<int>(t), -1,
                                                  (t + 1) / 2 - 1, t - 1));
        for (unsigned k = 1; k + 2 <= E; ++k)
            for (unsigned t = 1; t <= E - k - 1; ++t)
                slot.families.push_back(digits_family(j, CaseTag::III_5, -1,
                                                      static_cast<int>(k),
                                                      static_cast<int>(t), -1,
                                                      (t + 1) / 2 - 1, t - 1));
        slots_.push_back(std::move(slot));
    }

    for (auto& slot : slots_) {
        slot.size = BigUInt(0);
        for (const auto& fam : slot.families) slot.size += fam.size;
    }
    // touch every K ring so later reads are lock-free
    for (unsigned j = 1; j <= fd_.factors.size(); ++j) K(j);
    slots_built_ = true;
}

const std::vector<System::Slot>& System::slots() const {
    build_slots();
    return slots_;
}

BigUInt System::total() const {
    BigUInt t(1);
    for (const auto& slot : slots()) t *= slot.size;
    return t;
}

Poly System::payload_b(unsigned j, const Family& fam, std::uint64_t payload,
                       Poly* beta_out) const {
    const FactorRec& rec = fd_.factors[j - 1];
    const Poly& f = rec.f;
    switch (fam.kind) {
        case Family::Payload::none:
            return Poly();
        case Family::Payload::scalar:
            if (payload >= field_.size()) fail(errc::index_out_of_range, "scalar payload");
            return Poly::constant(static_cast<felem>(payload));
        case Family::Payload::digits: {
            const std::uint64_t q = field_.size();
            Poly b;
            std::uint64_t rest = payload;
            for (unsigned i = fam.digit_lo; i < fam.digit_hi; ++i) {
                std::uint64_t key = 0;
                for (unsigned c = 0; c < rec.degree; ++c) {
                    key |= (rest % q) << (field_.degree() * c);
                    rest /= q;
                }
                const Poly digit = elem_from_key(field_, key, rec.degree);
                b = poly_add(b, poly_mul(field_, digit, poly_pow(field_, f, i)));
            }
            if (rest) fail(errc::index_out_of_range, "digit payload");
            return b;
        }
        case Family::Payload::sspace: {
            const auto tail = fam.space.element(field_, payload);
            Poly b;
            for (std::size_t i = 0; i < tail.size(); ++i)
                if (tail[i])
                    b = poly_add(b, poly_scale(field_,
                                               poly_pow(field_, f, fam.exp_lo + i),
                                               tail[i]));
            return b;
        }
        case Family::Payload::omega: {
            if (payload >= fam.om->elements.size())
                fail(errc::index_out_of_range, "omega payload");
            const Poly& beta = fam.om->elements[payload];
            if (beta_out) *beta_out = beta;
            return poly_mul(field_, poly_pow(field_, f, static_cast<unsigned>(fam.nu) - 1),
                            beta);
        }
    }
    fail(errc::internal, "unhandled payload kind");
}

IdealSpec System::make_spec(const Slot& slot, const Family& fam,
                            std::uint64_t payload) const {
    IdealSpec spec;
    spec.j = slot.j;
    spec.tag = fam.tag;
    spec.nu = fam.nu; spec.k = fam.k; spec.t = fam.t; spec.h = fam.h;
    spec.b = payload_b(slot.j, fam, payload, &spec.beta);
    build_gens(spec);
    return spec;
}

IdealSpec System::respec(const IdealSpec& original, Poly b) const {
    IdealSpec spec = original;
    spec.b = std::move(b);
    spec.beta = Poly();
    spec.gens.clear();
    spec.partner_gens.clear();
    build_gens(spec);
    return spec;
}

void System::build_gens(IdealSpec& spec) const {
    const unsigned j = spec.j;
    const unsigned E = two_s();
    const unsigned half = E / 2;
    const QuotRing& Kj = K(j);
    const Poly& f = fd_.factors[j - 1].f;

    auto gen = [&](const Poly& a, const Poly& b) {
        return GenPair{Kj.reduce(a), Kj.reduce(b)};
    };
    auto fp = [&](unsigned e) { return Kj.base_power(std::min(e, E)); };

    switch (spec.tag) {
        case CaseTag::I_s1_a:
            spec.gens = {gen(f, Poly())};
            break;
        case CaseTag::I_s1_b:
        case CaseTag::I_s2_b:
        case CaseTag::I_s3_b:
            spec.gens = {gen(poly_mul(field_, f, spec.b), Poly::one())};
            break;
        case CaseTag::I_s2_a:
            spec.gens = {gen(fp(2), Poly())};
            break;
        case CaseTag::I_s2_c:
            spec.gens = {gen(poly_mul(field_, fp(2), spec.b), f), gen(fp(3), Poly())};
            break;
        case CaseTag::I_s3_a:
            spec.gens = {gen(fp(half), Poly())};
            break;
        case CaseTag::I_s3_c:
            spec.gens = {gen(poly_mul(field_, fp(half), spec.b), fp(half - 1)),
                         gen(fp(half + 1), Poly())};
            break;
        case CaseTag::I_s3_d: {
            const unsigned h = static_cast<unsigned>(spec.h);
            spec.gens = {gen(poly_mul(field_, fp(half - 2 * h + 1), spec.b), fp(half - 2 * h)),
                         gen(fp(half + 2 * h), Poly())};
            break;
        }
        case CaseTag::I_s3_e: {
            const unsigned h = static_cast<unsigned>(spec.h);
            spec.gens = {gen(poly_mul(field_, fp(half - 2 * h), spec.b), fp(half - 2 * h - 1)),
                         gen(fp(half + 2 * h + 1), Poly())};
            break;
        }
        case CaseTag::II_1:
            spec.gens = {gen(fp(half), Poly())};
            break;
        case CaseTag::II_2:
            spec.gens = {gen(poly_mul(field_, f, spec.b), Poly::one())};
            break;
        case CaseTag::II_3: {
            const unsigned nu = static_cast<unsigned>(spec.nu);
            spec.gens = {gen(poly_mul(field_, fp(half - nu + 1), spec.b), fp(half - nu)),
                         gen(fp(half + nu), Poly())};
            break;
        }
        case CaseTag::III_1:
        case CaseTag::III_2:
        case CaseTag::III_3:
        case CaseTag::III_4:
        case CaseTag::III_5: {
            const unsigned jp = fd_.factors[j - 1].partner;
            const QuotRing& Kp = K(jp);
            const felem delta = fd_.factors[j - 1].delta;
            const unsigned d = fd_.factors[j - 1].degree;
            auto pgen = [&](const Poly& a, const Poly& b) {
                return GenPair{Kp.reduce(a), Kp.reduce(b)};
            };
            auto fpp = [&](unsigned e) { return Kp.base_power(std::min(e, E)); };
            // delta_j x^(N - d_j) f_partner^(e) b(x^(-1)) + u f_partner^(eu), in K_partner
            auto partner_head = [&](unsigned e) {
                Poly bs = Kp.substitute_x_inverse(spec.b);
                Poly head = Kp.mul(Kp.x_inverse_pow(d), bs);
                head = Kp.mul(head, fpp(e));
                return poly_scale(field_, head, delta);
            };
            switch (spec.tag) {
                case CaseTag::III_1:
                    spec.gens = {gen(poly_mul(field_, f, spec.b), Poly::one())};
                    spec.partner_gens = {pgen(partner_head(1), Poly::one())};
                    break;
                case CaseTag::III_2: {
                    const unsigned k = static_cast<unsigned>(spec.k);
                    spec.gens = {gen(poly_mul(field_, fp(k + 1), spec.b), fp(k))};
                    spec.partner_gens = {pgen(partner_head(1), Poly::one()),
                                         pgen(fpp(E - k), Poly())};
                    break;
                }
                case CaseTag::III_3: {
                    const unsigned k = static_cast<unsigned>(spec.k);
                    spec.gens = {gen(fp(k), Poly())};
                    spec.partner_gens = {pgen(fpp(E - k), Poly())};
                    break;
                }
                case CaseTag::III_4: {
                    const unsigned t = static_cast<unsigned>(spec.t);
                    spec.gens = {gen(poly_mul(field_, f, spec.b), Poly::one()),
                                 gen(fp(t), Poly())};
                    spec.partner_gens = {pgen(partner_head(E - t + 1), fpp(E - t))};
                    break;
                }
                case CaseTag::III_5: {
                    const unsigned k = static_cast<unsigned>(spec.k);
                    const unsigned t = static_cast<unsigned>(spec.t);
                    spec.gens = {gen(poly_mul(field_, fp(k + 1), spec.b), fp(k)),
                                 gen(fp(k + t), Poly())};
                    spec.partner_gens = {pgen(partner_head(E - k - t + 1), fpp(E - k - t)),
                                         pgen(fpp(E - k), Poly())};
                    break;
                }
                default: break;
            }
            break;
        }
    }
}

IdealSpec System::slot_spec_at(const Slot& slot, const BigUInt& pos) const {
    BigUInt cum(0);
    for (const auto& fam : slot.families) {
        BigUInt next = cum + fam.size;
        if (BigUInt::compare(pos, next) < 0) {
            const BigUInt off = pos - cum;
            return make_spec(slot, fam, off.to_u64());
        }
        cum = next;
    }
    fail(errc::index_out_of_range, "slot position beyond slot size");
}

std::vector<IdealSpec> System::choices_at(std::uint64_t index) const {
    const auto& sl = slots();
    if (BigUInt::compare(BigUInt(index), total()) >= 0)
        fail(errc::index_out_of_range, "record index " + std::to_string(index));
    std::vector<BigUInt> pos(sl.size());
    BigUInt rest(index);
    for (std::size_t i = sl.size(); i-- > 0;) {
        auto [q, r] = BigUInt::divmod(rest, sl[i].size);
        pos[i] = r;
        rest = q;
    }
    std::vector<IdealSpec> out;
    out.reserve(sl.size());
    for (std::size_t i = 0; i < sl.size(); ++i)
        out.push_back(slot_spec_at(sl[i], pos[i]));
    return out;
}

CodeRecord System::assemble(std::vector<IdealSpec> choices, std::uint64_t index) const {
    const auto& sl = slots();
    if (choices.size() != sl.size())
        fail(errc::choice_shape_mismatch, "one ideal choice per factor slot is required");
    const Poly xN1 = poly_add(Poly::monomial(N()), Poly::one());
    CodeRecord rec;
    rec.index = index;
    auto emit = [&](unsigned j, const std::vector<GenPair>& gens) {
        const Poly& eps = fd_.idempotents[j - 1];
        for (const auto& g : gens) {
            GenPair out{poly_mod(field_, poly_mul(field_, eps, g.a), xN1),
                        poly_mod(field_, poly_mul(field_, eps, g.b), xN1)};
            if (!out.is_zero()) rec.gens.push_back(std::move(out));
        }
    };
    for (std::size_t i = 0; i < sl.size(); ++i) {
        const IdealSpec& spec = choices[i];
        if (spec.j != sl[i].j)
            fail(errc::choice_shape_mismatch, "choice does not match its slot");
        emit(spec.j, spec.gens);
        if (sl[i].is_pair) emit(fd_.factors[spec.j - 1].partner, spec.partner_gens);
    }
    rec.choices = std::move(choices);
    return rec;
}

CodeRecord System::record_at(std::uint64_t index) const {
    return assemble(choices_at(index), index);
}

BigUInt System::count_enumerate(std::uint64_t cap) const {
    // Build every per-factor ideal spec explicitly, then take the product over
    // the direct-sum slots; the count comes from constructed lists, never from
    // the mass formula.
    BigUInt count(1);
    for (const auto& slot : slots()) {
        if (BigUInt::compare(slot.size, BigUInt(cap)) > 0)
            fail(errc::too_large, "slot of " + slot.size.to_decimal() +
                                      " ideals refused; raise the cap");
        std::uint64_t made = 0;
        for (const auto& fam : slot.families) {
            const std::uint64_t fam_count = fam.size.to_u64();
            for (std::uint64_t payload = 0; payload < fam_count; ++payload) {
                const IdealSpec spec = make_spec(slot, fam, payload);
                if (spec.gens.empty() && spec.partner_gens.empty())
                    fail(errc::internal, "constructed ideal spec has no generators");
                ++made;
            }
        }
        if (BigUInt(made) != slot.size)
            fail(errc::internal, "slot enumeration drifted from its size");
        count *= BigUInt(made);
    }
    return count;
}

BigUInt System::count_closed_form() const {
    if (fd_.s < 2)
        fail(errc::closed_form_unavailable,
             "no closed form for s = 1; use enumeration instead");
    const unsigned m = field_.degree();
    const unsigned half = 1u << (fd_.s - 1);
    const BigUInt qm(field_.size());

    BigUInt n1;
    if (fd_.s == 2) {
        n1 = BigUInt(1) + qm + qm * qm;
    } else {
        // 1 + 2^m + 2 (2^m)^2 ((2^m)^(2^(s-2)-1) - 1)/(2^m - 1) + (2^m)^(2^(s-2)+1),
        // with the geometric fraction expanded as an explicit sum
        n1 = BigUInt(1) + qm;
        for (unsigned h = 1; h + 1 <= (1u << (fd_.s - 2)); ++h)
            n1 += BigUInt(2) * BigUInt::pow(qm, h + 1);
        n1 += BigUInt::pow(qm, (1u << (fd_.s - 2)) + 1);
    }

    BigUInt out = n1;
    for (unsigned j = 2; j <= fd_.rho; ++j) {
        const unsigned d = fd_.factors[j - 1].degree;
        BigUInt term(1);
        for (unsigned nu = 1; nu <= half; ++nu)
            term += BigUInt::pow2(static_cast<std::uint64_t>(nu) * m * d / 2);
        out *= term;
    }
    for (unsigned j = fd_.rho + 1; j <= fd_.rho + fd_.epsilon; ++j) {
        const unsigned d = fd_.factors[j - 1].degree;
        BigUInt term(0);
        for (unsigned i = 0; i <= half; ++i)
            term += BigUInt(1 + 4 * static_cast<std::uint64_t>(i)) *
                    BigUInt::pow2(static_cast<std::uint64_t>(half - i) * m * d);
        out *= term;
    }
    return out;
}

}  // namespace sdc
