#ifndef SDC_REPORT_HPP
#define SDC_REPORT_HPP

#include <cstdint>
#include <string>

#include "sdc/enumerate.hpp"

namespace sdc {

enum class CountMode { closed_form, enumerate_all, both };

// Decimal count per mode; `both` checks the two routes agree (CountMismatch).
std::string count_report(const System& sys, CountMode mode);

std::string factor_report_json(const System& sys);

// Worked listing: the set, the digit trails, and the W-set lineage.
std::string omega_report_text(const System& sys, unsigned j, unsigned nu);
std::string omega_report_json(const System& sys, unsigned j, unsigned nu);

// Single-line JSON object for one enumerated code.
std::string record_json(const System& sys, const CodeRecord& rec);

// Verification sweep; sample < 0 checks every code (capped), otherwise the
// stride-sampled subset of the stated size. threads = 0 picks a default from
// SDC_THREADS or the hardware.
std::string verify_report_json(const System& sys, std::int64_t sample, unsigned threads);

// Generator matrix of phi(C), one row of 2N symbols per line.
std::string gray_matrix_text(const System& sys, std::uint64_t index);

std::string weights_report_json(const System& sys, std::uint64_t index, unsigned cap);

unsigned default_thread_count();

}  // namespace sdc

#endif
