#pragma once

// Subcommand computations rendered as stable JSON and human-readable text.

#include <cstddef>
#include <optional>
#include <string>

#include "gstruct/spec_io.hpp"

namespace gstruct {

inline constexpr const char* kReportSchema = "gstruct-report/1";

struct Report {
    Json json;         // always carries "schema" and "command"
    std::string text;  // newline-terminated lines
};

struct CurvatureOptions {
    std::string module = "T";
    CurvatureMode mode = CurvatureMode::prolongation;
    bool unprojected = false;
    std::optional<std::size_t> up_to;
};

CurvatureMode parse_curvature_mode(const std::string& s);

Report check_report(const LoadedSpec& loaded);
Report prolong_report(const LoadedSpec& loaded);
Report chern_report(const LoadedSpec& loaded, const CurvatureOptions& opts);
Report relations_report(const LoadedSpec& loaded, const CurvatureOptions& opts, int degree);
Report vanish_report(const LoadedSpec& loaded, const CurvatureOptions& opts);
/// `invariant` is a Chern polynomial ("c1^2 - c2") or a trace pattern ("tr(1,2)").
Report cs_report(const LoadedSpec& loaded, const std::string& module, const std::string& invariant);

}  // namespace gstruct
