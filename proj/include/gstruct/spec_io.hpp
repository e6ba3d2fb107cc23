#pragma once

// JSON spec files, manual curvature input and the bundled catalogue.
//
// Rationals are written as strings ("-11/2"); integers are accepted as
// shorthand on input.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gstruct/char_forms.hpp"
#include "gstruct/lie_core.hpp"
#include "json.hpp"

namespace gstruct {

using Json = nlohmann::json;

/// Malformed or unreadable input; maps to exit status 1.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct LoadedSpec {
    std::string name;
    std::optional<GStructureSpec> spec;  // absent for manual-curvature-only files
    std::map<std::string, CurvatureMatrix> manual;
};

/// Parses and validates; throws ParseError or ValidationError.
LoadedSpec parse_spec(const Json& doc);
LoadedSpec parse_spec_text(const std::string& text);
LoadedSpec load_spec(const std::string& path);

Json spec_to_json(const LoadedSpec& loaded);
Json matrix_to_json(const RatMatrix& m);
RatMatrix matrix_from_json(const Json& rows, std::size_t expect_rows, std::size_t expect_cols,
                           const std::string& where);

/// The projective normal-bundle curvature -delta^I_J w_K s^K - w_J s^I for
/// codimension q, over generators p1..pq, s1..sq.
CurvatureMatrix projective_normal_curvature(std::size_t q);

/// Bundled catalogue as (file name, document) pairs.
std::vector<std::pair<std::string, Json>> catalogue();

/// Canonical text for a document: sorted keys, two-space indent, trailing newline.
std::string dump(const Json& doc);

}  // namespace gstruct
