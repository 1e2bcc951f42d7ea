#pragma once

#include <string>

#include <json.hpp>

#include "mindisk/immersion.hpp"
#include "mindisk/slice.hpp"
#include "mindisk/verify.hpp"

// File emitters. All three formats are deterministic functions of their
// inputs: fixed field order, fixed float formatting, no timestamps, so a
// repeated run produces identical bytes.

namespace mindisk {

/// ASCII OBJ: `v` lines (6 decimals), then `vn` lines, then 1-based `f`
/// lines, in mesh order.
void write_obj(const TriangleMesh& mesh, const std::string& path);

/// CSV with header `y,p1,p2,t1,t2,u,v`, one row per sample.
void write_slice_csv(const SliceCurve& curve, const std::string& path);

nlohmann::ordered_json report_to_json(const VerificationReport& report);

/// The exact bytes write_report_json emits: 2-space indent plus trailing
/// newline.
std::string report_json_text(const VerificationReport& report);

void write_report_json(const VerificationReport& report, const std::string& path);

}  // namespace mindisk
