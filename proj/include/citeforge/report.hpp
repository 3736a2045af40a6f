#pragma once

#include "citeforge/citation.hpp"
#include "citeforge/driver.hpp"

#include <json.hpp>

#include <string>

namespace citeforge {

enum class RenderMode { plain, annotated };

// plain drops styles; annotated wraps styled spans as ⟨tt:…⟩, ⟨em:…⟩, ⟨sc:…⟩.
std::string render(const RenderedFragment& fragment, RenderMode mode);

nlohmann::json layout_json(const LayoutParams& layout, const UnitScale& scale);
nlohmann::json bibliography_json(const Bibliography& bib, const UnitScale& scale);
nlohmann::json make_report(const FixpointResult& result, const JobConfig& cfg);

}  // namespace citeforge
