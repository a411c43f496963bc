#pragma once

#include <iosfwd>
#include <string>

#include "layered/delta_train.hpp"
#include "layered/forward.hpp"
#include "layered/medium.hpp"

namespace layered::cli {

/// Shortest text that is guaranteed to read back as the same double (17 significant digits).
std::string format_double(double value);

/// Parses a medium document: either {"tau", "R", optional "tau_last"} or
/// {"layers", "depths", "references"}. Throws ValidationError naming the bad field.
Medium parse_medium(const std::string& text);
Medium read_medium_file(const std::string& path);

/// {"tau": [...], "R": [...]} plus "tau_last" when the medium has an exit travel time.
std::string medium_to_json(const Medium& medium);

/// CSV with header `time,amplitude`. Throws ValidationError on a bad header, a
/// malformed row or non-increasing times.
DeltaTrain parse_train(std::istream& in);
DeltaTrain read_train_file(const std::string& path);
void write_train(std::ostream& out, const DeltaTrain& train);

/// CSV with header `omega,re,im,abs`.
void write_spectrum(std::ostream& out, const FrequencyResponse& response);

/// Writes `text` to `path`, or to `fallback` when path is empty or "-".
void emit(const std::string& path, const std::string& text, std::ostream& fallback);

}  // namespace layered::cli
