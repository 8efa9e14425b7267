/*
 * selfdualcyclic - construction, enumeration, counting and verification of
 * self-dual cyclic codes of length 2^s n (n odd) over F_{2^m} + u F_{2^m},
 * with their self-dual 2-quasi-cyclic Gray images over F_{2^m}.
 *
 * C interface: opaque handles, integer status codes, and UTF-8 result strings
 * that the caller releases with sdc_free_string(). All handles are
 * single-owner; a system handle must outlive the streams opened on it.
 * Reads on one handle are safe from multiple threads once the first
 * enumeration or verification call has returned.
 */

#ifndef SELFDUALCYCLIC_H
#define SELFDUALCYCLIC_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sdc_status {
    SDC_OK = 0,
    SDC_ERR_BAD_ARGUMENT = 1,
    SDC_ERR_UNSUPPORTED_DEGREE = 2,
    SDC_ERR_MODULUS_NOT_IRREDUCIBLE = 3,
    SDC_ERR_EVEN_LENGTH = 4,
    SDC_ERR_NOT_SELF_RECIPROCAL = 5,
    SDC_ERR_CLOSED_FORM_UNAVAILABLE = 6,
    SDC_ERR_INDEX_OUT_OF_RANGE = 7,
    SDC_ERR_TOO_LARGE = 8,
    SDC_ERR_COUNT_MISMATCH = 9,
    SDC_ERR_NOT_SELF_DUAL = 10,
    SDC_ERR_END_OF_STREAM = 11,
    SDC_ERR_INTERNAL = 12
} sdc_status;

/* stable name of a status code ("CountMismatch", ...) */
const char* sdc_status_name(sdc_status status);

/* thread-local detail message for the most recent failing call */
const char* sdc_last_error(void);

typedef struct sdc_system sdc_system;
typedef struct sdc_stream sdc_stream;

/*
 * Open the (F_{2^m}, n, s) system: field arithmetic, the factorization of
 * x^n - 1 with its reciprocal classification and idempotents.
 *   m            field degree, 1..16
 *   n            odd positive co-length
 *   s            2-adic exponent, >= 1 (code length is 2^s n)
 *   modulus_bits optional field modulus as an F_2 bitmask (bit m set,
 *                constant bit set); 0 selects the built-in default
 */
sdc_status sdc_system_open(uint32_t m, uint32_t n, uint32_t s,
                           uint64_t modulus_bits, sdc_system** out_system);
void sdc_system_close(sdc_system* system);

/* factorization report: factors, classes, partners, deltas, idempotents */
sdc_status sdc_factor_json(sdc_system* system, char** out_json);

/* Omega_{j,nu} listings (j self-reciprocal in 2..rho, 1 <= nu <= 2^(s-1)) */
sdc_status sdc_omega_text(sdc_system* system, uint32_t j, uint32_t nu, char** out_text);
sdc_status sdc_omega_json(sdc_system* system, uint32_t j, uint32_t nu, char** out_json);

#define SDC_COUNT_CLOSED_FORM 0
#define SDC_COUNT_ENUMERATE 1
#define SDC_COUNT_BOTH 2
/* decimal code count; SDC_COUNT_BOTH fails with SDC_ERR_COUNT_MISMATCH when
 * the mass formula and the full enumeration disagree */
sdc_status sdc_count_decimal(sdc_system* system, int mode, char** out_decimal);

/* decimal number of codes (product of the per-factor ideal counts) */
sdc_status sdc_total_decimal(sdc_system* system, char** out_decimal);

/* enumeration cursor over code records, starting at the given index; each
 * record arrives as one line of JSON. SDC_ERR_END_OF_STREAM signals the end. */
sdc_status sdc_stream_open(sdc_system* system, uint64_t start, sdc_stream** out_stream);
sdc_status sdc_stream_next_json(sdc_stream* stream, char** out_json);
void sdc_stream_close(sdc_stream* stream);

/* self-duality sweep; sample < 0 verifies every code, otherwise a
 * deterministic stride sample of that size. threads = 0 uses SDC_THREADS or
 * the hardware default. */
sdc_status sdc_verify_json(sdc_system* system, int64_t sample, uint32_t threads,
                           char** out_json);

/* generator matrix of the Gray image of code `index`, one row per line */
sdc_status sdc_gray_text(sdc_system* system, uint64_t index, char** out_text);

/* Lee/Hamming weight histogram of code `index`; refuses when the walk would
 * exceed max_dim bits of codewords */
sdc_status sdc_weights_json(sdc_system* system, uint64_t index, uint32_t max_dim,
                            char** out_json);

void sdc_free_string(char* str);

#ifdef __cplusplus
}
#endif

#endif /* SELFDUALCYCLIC_H */
