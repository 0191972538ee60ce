#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "logbloch/series.hpp"

namespace logbloch {

/// Text form: one `n,re,im` line per coefficient, n strictly increasing from
/// 0; omitted trailing indices are zeros. Blank lines and lines starting with
/// '#' are skipped on input.
void write_series_text(const CoefficientSeries& f, std::ostream& out);
CoefficientSeries read_series_text(std::istream& in);

/// JSON form: {"degree": N, "coeffs": [[re, im], ...]} with degree+1 pairs.
std::string series_to_json(const CoefficientSeries& f);
CoefficientSeries series_from_json(const std::string& text);

/// File I/O. A ".json" extension selects the JSON form; reading sniffs the
/// leading character so either form is accepted regardless of extension.
CoefficientSeries read_series_file(const std::filesystem::path& path);
void write_series_file(const CoefficientSeries& f, const std::filesystem::path& path);

} // namespace logbloch
