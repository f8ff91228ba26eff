#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "heiscusp/heis.hpp"
#include "heiscusp/ring.hpp"

namespace heiscusp {

/// Canonical compact forms, accepted back by the parsers:
///   Rat       "3", "-5/2"
///   ImagQuad  "0", "2", "1/2 - 3/2*i*sqrt(3)", "i" (d = 1), "2*i*sqrt(7)"
///   RealQuad  "0", "4", "2*sqrt(3)", "1 + 1/2*sqrt(5)"
///   HeisIsom  "(z; t; u)" or "(z; t; u)*sigma"
std::string to_text(const Rat& r);
std::string to_text(const ImagQuad& x);
std::string to_text(const RealQuad& t);
std::string to_text(const HeisIsom& g);
std::string to_text(const AffineMapC& f);
std::string to_text(const IqPoly& f);

/// Parses "(z; t; u)" or "(z; t; u)*sigma".  The field is inferred from
/// sqrt(n) and bare-i tokens in the text; `d_hint` supplies it when no such
/// token occurs, and defaults to 1.  Inconsistent or malformed input throws
/// std::invalid_argument.
HeisIsom parse_heis(const std::string& text,
                    std::optional<long> d_hint = std::nullopt);

std::ostream& operator<<(std::ostream& os, const ImagQuad& x);
std::ostream& operator<<(std::ostream& os, const RealQuad& t);
std::ostream& operator<<(std::ostream& os, const HeisIsom& g);
std::ostream& operator<<(std::ostream& os, const AffineMapC& f);
std::ostream& operator<<(std::ostream& os, const IqPoly& f);

}  // namespace heiscusp
