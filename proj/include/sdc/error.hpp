#ifndef SDC_ERROR_HPP
#define SDC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace sdc {

enum class errc {
    bad_argument,
    unsupported_degree,
    modulus_not_irreducible,
    even_length,
    zero_gcd,
    zero_constant_term,
    classification_broken,
    x_not_invertible,
    trace_undefined,
    not_in_subfield,
    thm_assumption_violated,
    not_self_reciprocal,
    choice_shape_mismatch,
    not_self_dual,
    shape_error,
    gray_property_violated,
    too_large,
    closed_form_unavailable,
    index_out_of_range,
    count_mismatch,
    internal,
};

const char* errc_name(errc code);

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
    throw error(code, what);
}

}  // namespace sdc

#endif
