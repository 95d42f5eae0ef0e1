#ifndef ALPWAVE_IO_HPP
#define ALPWAVE_IO_HPP

#include "alpwave/exact.hpp"
#include "alpwave/matrix.hpp"
#include "alpwave/transform.hpp"

#include <iosfwd>
#include <string>

namespace alpwave {

/// Serialization grammar for exact values: `num/den*sqrt(m)` with m squarefree,
/// abbreviated to `0`, `num`, `num/den`, `sqrt(m)`, `num*sqrt(m)` where parts
/// are trivial.  Sums of distinct surds join with ` + ` / ` - `.
std::string to_string(const ExactScalar& v);
std::string to_string(const SurdSum& v);
ExactScalar parse_exact_scalar(const std::string& s);
SurdSum parse_surd_sum(const std::string& s);

/// Shortest round-trippable decimal form.
std::string format_double(double v);

std::string matrix_to_csv(const Matrix<ExactScalar>& m);
std::string matrix_to_json(const Matrix<ExactScalar>& m);
Matrix<ExactScalar> matrix_from_csv(const std::string& text);
Matrix<ExactScalar> matrix_from_json(const std::string& text);

/// Signal files: CSV with header `cell,degree,value`, one row per coefficient.
void write_signal(std::ostream& os, const Signal& sig);
void write_signal(std::ostream& os, const SignalF& sig);

/// Reads a signal; returns true and fills `exact` when every value parses
/// under the exact grammar, otherwise fills `approx`.  Validates the declared
/// sizes against the file contents.
bool read_signal(std::istream& is, long n, long levels, Signal& exact, SignalF& approx);

/// Coefficient files: CSV with header `level,shift,degree,value`; the root
/// scaling block is stored as level -1, shift 0.
void write_coeffs(std::ostream& os, const Coeffs& co);
void write_coeffs(std::ostream& os, const CoeffsF& co);
bool read_coeffs(std::istream& is, long n, long levels, Coeffs& exact, CoeffsF& approx);

}  // namespace alpwave

#endif
