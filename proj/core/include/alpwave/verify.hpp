#ifndef ALPWAVE_VERIFY_HPP
#define ALPWAVE_VERIFY_HPP

#include "alpwave/report.hpp"

#include <string>
#include <vector>

namespace alpwave {

/// Identity suites behind the `verify` command.  Each returns a report with
/// one entry per property; n_max bounds the polynomial order swept (individual
/// properties keep their own tighter caps where exact arithmetic gets costly).
Report verify_hypergeom(long n_max);
Report verify_legendre(long n_max);
Report verify_wavelets(long n_max);
Report verify_filterbank(long n_max);
Report verify_fourier(long n_max);
Report verify_transform(long n_max);

/// All suites, or just the named one ("" = all).  Throws std::invalid_argument
/// for an unknown module name.
std::vector<Report> verify_all(long n_max, const std::string& module = "");

}  // namespace alpwave

#endif
