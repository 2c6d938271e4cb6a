#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hurwitz/series.hpp"

namespace hurwitz {

/// One transform step: a recognized name plus an optional textual argument
/// ("L:-2" carries arg "-2"). Arguments are parsed against the ring of the
/// series the step is applied to.
struct PipelineStep {
    std::string name;
    std::string arg;
};

/// Comma-separated step list. Recognized names:
///   E, L:<y>, Bous, S, Sinv, V:<k>, A, U, invert, exp, log
struct PipelineSpec {
    std::vector<PipelineStep> steps;

    static PipelineSpec parse(std::string_view text); // ParseError on unknown step
};

Series apply_step(const Series& a, const PipelineStep& step);

/// Applies steps left to right. Errors are rethrown with the failing step
/// named: parse failures stay ParseError, everything else surfaces as
/// PreconditionViolation.
Series apply_pipeline(const Series& a, const PipelineSpec& spec);

} // namespace hurwitz
