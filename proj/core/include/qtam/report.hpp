#pragma once

#include <iosfwd>
#include <string>

#include "qtam/pipeline.hpp"

namespace qtam {

/// Pareto front as CSV: header f1..f5,g_s,c_s, one row per archive member,
/// rows sorted, full 17-digit precision. Byte-stable for identical runs.
void write_front_csv(std::ostream& out, const ParetoArchive& archive);

/// Human- and machine-readable run summary as pretty-printed JSON.
std::string report_json(const CircuitSpec& spec, const RunConfig& cfg,
                        const RunOutput& output);

}  // namespace qtam
