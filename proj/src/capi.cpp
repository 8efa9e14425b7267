#include "selfdualcyclic.h"

#include <cstring>
#include <string>

#include "sdc/enumerate.hpp"
#include "sdc/error.hpp"
#include "sdc/report.hpp"

namespace {

thread_local std::string g_last_error;

sdc_status map_errc(sdc::errc code) {
    using sdc::errc;
    switch (code) {
        case errc::bad_argument: return SDC_ERR_BAD_ARGUMENT;
        case errc::unsupported_degree: return SDC_ERR_UNSUPPORTED_DEGREE;
        case errc::modulus_not_irreducible: return SDC_ERR_MODULUS_NOT_IRREDUCIBLE;
        case errc::even_length: return SDC_ERR_EVEN_LENGTH;
        case errc::not_self_reciprocal: return SDC_ERR_NOT_SELF_RECIPROCAL;
        case errc::closed_form_unavailable: return SDC_ERR_CLOSED_FORM_UNAVAILABLE;
        case errc::index_out_of_range: return SDC_ERR_INDEX_OUT_OF_RANGE;
        case errc::too_large: return SDC_ERR_TOO_LARGE;
        case errc::count_mismatch: return SDC_ERR_COUNT_MISMATCH;
        case errc::not_self_dual: return SDC_ERR_NOT_SELF_DUAL;
        default: return SDC_ERR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
sdc_status guarded(Fn&& fn) {
    try {
        fn();
        return SDC_OK;
    } catch (const sdc::error& e) {
        g_last_error = std::string(sdc::errc_name(e.code())) + ": " + e.what();
        return map_errc(e.code());
    } catch (const std::exception& e) {
        g_last_error = std::string("InternalError: ") + e.what();
        return SDC_ERR_INTERNAL;
    }
}

}  // namespace

struct sdc_system {
    sdc::System sys;
    sdc_system(sdc::Field field, std::uint32_t n, std::uint32_t s)
        : sys(std::move(field), n, s) {}
};

struct sdc_stream {
    const sdc_system* owner;
    std::uint64_t next;
    std::uint64_t total;
};

extern "C" {

const char* sdc_status_name(sdc_status status) {
    switch (status) {
        case SDC_OK: return "Ok";
        case SDC_ERR_BAD_ARGUMENT: return "BadArgument";
        case SDC_ERR_UNSUPPORTED_DEGREE: return "UnsupportedDegree";
        case SDC_ERR_MODULUS_NOT_IRREDUCIBLE: return "ModulusNotIrreducible";
        case SDC_ERR_EVEN_LENGTH: return "EvenLengthNotCoprime";
        case SDC_ERR_NOT_SELF_RECIPROCAL: return "NotSelfReciprocalFactor";
        case SDC_ERR_CLOSED_FORM_UNAVAILABLE: return "ClosedFormUnavailable";
        case SDC_ERR_INDEX_OUT_OF_RANGE: return "IndexOutOfRange";
        case SDC_ERR_TOO_LARGE: return "TooLargeForExhaustive";
        case SDC_ERR_COUNT_MISMATCH: return "CountMismatch";
        case SDC_ERR_NOT_SELF_DUAL: return "NotSelfDual";
        case SDC_ERR_END_OF_STREAM: return "EndOfStream";
        case SDC_ERR_INTERNAL: return "InternalError";
    }
    return "UnknownStatus";
}

const char* sdc_last_error(void) { return g_last_error.c_str(); }

sdc_status sdc_system_open(uint32_t m, uint32_t n, uint32_t s,
                           uint64_t modulus_bits, sdc_system** out_system) {
    if (!out_system) return SDC_ERR_BAD_ARGUMENT;
    *out_system = nullptr;
    return guarded([&] {
        if (s < 1) sdc::fail(sdc::errc::bad_argument, "s must be >= 1");
        sdc::Field field = modulus_bits
                               ? sdc::Field(m, static_cast<std::uint32_t>(modulus_bits))
                               : sdc::Field(m);
        *out_system = new sdc_system(std::move(field), n, s);
    });
}

void sdc_system_close(sdc_system* system) { delete system; }

sdc_status sdc_factor_json(sdc_system* system, char** out_json) {
    if (!system || !out_json) return SDC_ERR_BAD_ARGUMENT;
    return guarded([&] { *out_json = dup_string(sdc::factor_report_json(system->sys)); });
}

sdc_status sdc_omega_text(sdc_system* system, uint32_t j, uint32_t nu, char** out_text) {
    if (!system || !out_text) return SDC_ERR_BAD_ARGUMENT;
    return guarded(
        [&] { *out_text = dup_string(sdc::omega_report_text(system->sys, j, nu)); });
}

sdc_status sdc_omega_json(sdc_system* system, uint32_t j, uint32_t nu, char** out_json) {
    if (!system || !out_json) return SDC_ERR_BAD_ARGUMENT;
    return guarded(
        [&] { *out_json = dup_string(sdc::omega_report_json(system->sys, j, nu)); });
}

sdc_status sdc_count_decimal(sdc_system* system, int mode, char** out_decimal) {
    if (!system || !out_decimal) return SDC_ERR_BAD_ARGUMENT;
    return guarded([&] {
        sdc::CountMode cm;
        switch (mode) {
            case SDC_COUNT_CLOSED_FORM: cm = sdc::CountMode::closed_form; break;
            case SDC_COUNT_ENUMERATE: cm = sdc::CountMode::enumerate_all; break;
            case SDC_COUNT_BOTH: cm = sdc::CountMode::both; break;
            default: sdc::fail(sdc::errc::bad_argument, "unknown count mode");
        }
        *out_decimal = dup_string(sdc::count_report(system->sys, cm));
    });
}

sdc_status sdc_total_decimal(sdc_system* system, char** out_decimal) {
    if (!system || !out_decimal) return SDC_ERR_BAD_ARGUMENT;
    return guarded([&] { *out_decimal = dup_string(system->sys.total().to_decimal()); });
}

sdc_status sdc_stream_open(sdc_system* system, uint64_t start, sdc_stream** out_stream) {
    if (!system || !out_stream) return SDC_ERR_BAD_ARGUMENT;
    *out_stream = nullptr;
    return guarded([&] {
        const sdc::BigUInt total = system->sys.total();
        std::uint64_t capped = 0;
        if (total.fits_u64()) {
            capped = total.to_u64();
        } else {
            capped = UINT64_MAX;  // indices beyond 2^64 are unreachable anyway
        }
        if (start > capped)
            sdc::fail(sdc::errc::index_out_of_range, "start index beyond the total");
        *out_stream = new sdc_stream{system, start, capped};
    });
}

sdc_status sdc_stream_next_json(sdc_stream* stream, char** out_json) {
    if (!stream || !out_json) return SDC_ERR_BAD_ARGUMENT;
    if (stream->next >= stream->total) return SDC_ERR_END_OF_STREAM;
    return guarded([&] {
        const sdc::CodeRecord rec = stream->owner->sys.record_at(stream->next);
        *out_json = dup_string(sdc::record_json(stream->owner->sys, rec));
        ++stream->next;
    });
}

void sdc_stream_close(sdc_stream* stream) { delete stream; }

sdc_status sdc_verify_json(sdc_system* system, int64_t sample, uint32_t threads,
                           char** out_json) {
    if (!system || !out_json) return SDC_ERR_BAD_ARGUMENT;
    return guarded([&] {
        *out_json = dup_string(sdc::verify_report_json(system->sys, sample, threads));
    });
}

sdc_status sdc_gray_text(sdc_system* system, uint64_t index, char** out_text) {
    if (!system || !out_text) return SDC_ERR_BAD_ARGUMENT;
    return guarded(
        [&] { *out_text = dup_string(sdc::gray_matrix_text(system->sys, index)); });
}

sdc_status sdc_weights_json(sdc_system* system, uint64_t index, uint32_t max_dim,
                            char** out_json) {
    if (!system || !out_json) return SDC_ERR_BAD_ARGUMENT;
    return guarded([&] {
        *out_json = dup_string(sdc::weights_report_json(system->sys, index, max_dim));
    });
}

void sdc_free_string(char* str) { delete[] str; }

}  // extern "C"
