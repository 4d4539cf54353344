/*
 * (C) Copyright 2026 rado developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <string>

#include "core/bounds.hpp"
#include "core/search.hpp"

namespace rado {

struct ConjectureReport;
struct ReproReport;

// Stable result schema shared by every JSON emitter:
//   {coeffs, shift, colors, status, value, witness, method, elapsed_ms,
//    engine_version}
// Report documents extend it with report-specific keys but never rename or
// drop the shared ones.  Key order is fixed; golden-file tested.
std::string to_json(const RadoResult& result);
std::string to_json(const ExcellenceResult& result);
std::string to_json(const BoundsReport& report,
                    std::chrono::milliseconds elapsed);
std::string to_json(const ConjectureReport& report);
std::string to_json(const ReproReport& report);

// Plain-text rendering of any report JSON produced above, one line per row
// for the row-based reports.  Dispatches on the "method" key.
std::string render_report_text(const std::string& report_json);

// CSV rendering of the row-based reports (conjecture-check, reproduce).
// Other methods have no row structure and raise std::invalid_argument.
std::string render_report_csv(const std::string& report_json);

}  // namespace rado
