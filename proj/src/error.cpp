#include "sdc/error.hpp"

namespace sdc {

const char* errc_name(errc code) {
    switch (code) {
        case errc::bad_argument: return "BadArgument";
        case errc::unsupported_degree: return "UnsupportedDegree";
        case errc::modulus_not_irreducible: return "ModulusNotIrreducible";
        case errc::even_length: return "EvenLengthNotCoprime";
        case errc::zero_gcd: return "ZeroGcd";
        case errc::zero_constant_term: return "ZeroConstantTerm";
        case errc::classification_broken: return "ClassificationInvariantBroken";
        case errc::x_not_invertible: return "XNotInvertible";
        case errc::trace_undefined: return "TraceUndefined";
        case errc::not_in_subfield: return "NotInSubfield";
        case errc::thm_assumption_violated: return "ThmAssumptionViolated";
        case errc::not_self_reciprocal: return "NotSelfReciprocalFactor";
        case errc::choice_shape_mismatch: return "ChoiceShapeMismatch";
        case errc::not_self_dual: return "NotSelfDual";
        case errc::shape_error: return "ShapeError";
        case errc::gray_property_violated: return "GrayPropertyViolated";
        case errc::too_large: return "TooLargeForExhaustive";
        case errc::closed_form_unavailable: return "ClosedFormUnavailable";
        case errc::index_out_of_range: return "IndexOutOfRange";
        case errc::count_mismatch: return "CountMismatch";
        case errc::internal: return "InternalError";
    }
    return "UnknownError";
}

}  // namespace sdc
