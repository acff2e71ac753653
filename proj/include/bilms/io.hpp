#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <string_view>
#include <system_error>

#include "bilms/harness.hpp"

namespace bilms {

/// Shortest decimal form with up to 17 significant digits (round-trip safe
/// for doubles); infinities print as "inf".
inline std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string curve_to_csv(const LearningCurve& curve) {
    std::string out = "step,sq_error,weight_err_sq\n";
    for (const CurveRow& row : curve.rows) {
        out += std::to_string(row.step);
        out += ',';
        out += format_real(row.sq_error);
        out += ',';
        out += format_real(row.weight_err_sq);
        out += '\n';
    }
    return out;
}

inline std::string sweep_summary_csv(const std::vector<SweepRow>& rows) {
    std::string out = "mu,final_sq_error,final_weight_err_sq\n";
    for (const SweepRow& row : rows) {
        out += format_real(row.mu);
        out += ',';
        out += format_real(row.final_sq_error);
        out += ',';
        out += format_real(row.final_weight_err_sq);
        out += '\n';
    }
    return out;
}

/// Writes via a sibling temp file and renames it into place, so readers
/// never observe a truncated file.
inline void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open '" + tmp.string() + "' for writing");
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out) throw std::runtime_error("write to '" + tmp.string() + "' failed");
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace bilms
