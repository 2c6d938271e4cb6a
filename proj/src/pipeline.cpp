#include "hurwitz/pipeline.hpp"

#include <cstddef>

#include "hurwitz/bell.hpp"
#include "hurwitz/dynamics.hpp"
#include "hurwitz/io.hpp"
#include "hurwitz/transforms.hpp"

namespace hurwitz {

namespace {

bool step_takes_arg(std::string_view name) { return name == "L" || name == "V"; }

bool step_known(std::string_view name) {
    return name == "E" || name == "L" || name == "Bous" || name == "S" || name == "Sinv" ||
           name == "V" || name == "A" || name == "U" || name == "invert" || name == "exp" ||
           name == "log";
}

std::size_t parse_count(const std::string& text) {
    std::size_t pos = 0;
    unsigned long k = 0;
    try {
        k = std::stoul(text, &pos);
    } catch (const std::exception&) {
        throw ParseError("bad count '" + text + "'");
    }
    if (pos != text.size() || k < 1)
        throw ParseError("bad count '" + text + "'");
    return k;
}

} // namespace

PipelineSpec PipelineSpec::parse(std::string_view text) {
    PipelineSpec spec;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(',', start);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view token = text.substr(start, end - start);
        if (token.empty())
            throw ParseError("empty pipeline step");
        const std::size_t colon = token.find(':');
        PipelineStep step;
        step.name = std::string(token.substr(0, colon));
        if (colon != std::string_view::npos)
            step.arg = std::string(token.substr(colon + 1));
        if (!step_known(step.name))
            throw ParseError("unknown pipeline step '" + step.name + "'");
        if (step_takes_arg(step.name) && step.arg.empty())
            throw ParseError("step '" + step.name + "' needs a parameter");
        if (!step_takes_arg(step.name) && colon != std::string_view::npos)
            throw ParseError("step '" + step.name + "' takes no parameter");
        if (step.name == "V")
            parse_count(step.arg); // ring-independent, so validated here
        spec.steps.push_back(std::move(step));
        if (end == text.size())
            break;
        start = end + 1;
    }
    if (spec.steps.empty())
        throw ParseError("empty pipeline");
    return spec;
}

Series apply_step(const Series& a, const PipelineStep& step) {
    if (step.name == "E")
        return alternating_sign(a);
    if (step.name == "L")
        return binomial_interpolated(a, parse_payload(a.ring(), step.arg));
    if (step.name == "Bous")
        return boustrophedon(a);
    if (step.name == "S")
        return stirling_transform(a);
    if (step.name == "Sinv")
        return stirling_inverse(a);
    if (step.name == "V")
        return prepend_ones(a, parse_count(step.arg));
    if (step.name == "A")
        return autoconvolution(a);
    if (step.name == "U")
        return transform_u(a);
    if (step.name == "invert")
        return invert_series(a);
    if (step.name == "exp")
        return series_exp(a);
    if (step.name == "log")
        return series_log(a);
    throw ParseError("unknown pipeline step '" + step.name + "'");
}

Series apply_pipeline(const Series& a, const PipelineSpec& spec) {
    Series cur = a;
    for (std::size_t i = 0; i < spec.steps.size(); ++i) {
        const PipelineStep& step = spec.steps[i];
        const std::string where = "step " + std::to_string(i + 1) + " ('" + step.name + "'): ";
        try {
            cur = apply_step(cur, step);
        } catch (const ParseError& e) {
            throw ParseError(where + e.what());
        } catch (const Error& e) {
            throw PreconditionViolation(where + e.what());
        }
    }
    return cur;
}

} // namespace hurwitz
