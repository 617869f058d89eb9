#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "steach/core/box.hpp"

namespace steach::core {

enum class AnnotationSource { Manual, HandProximal, DistanceBased };

inline const char* to_string(AnnotationSource s) {
    switch (s) {
        case AnnotationSource::Manual: return "manual";
        case AnnotationSource::HandProximal: return "hand-proximal";
        case AnnotationSource::DistanceBased: return "distance-based";
    }
    return "?";
}

inline AnnotationSource annotation_source_from_string(const std::string& s) {
    if (s == "manual") return AnnotationSource::Manual;
    if (s == "hand-proximal") return AnnotationSource::HandProximal;
    if (s == "distance-based") return AnnotationSource::DistanceBased;
    throw std::invalid_argument("unknown annotation source: " + s);
}

// Frame-indexed labeled box with provenance.
struct Annotation {
    std::uint32_t frame_index = 0;
    BoundingBox box;
    std::string label;
    AnnotationSource source = AnnotationSource::Manual;
    std::uint32_t blob_pixels = 0;  // size of the source blob, 0 if not blob-derived
};

struct Detection {
    BoundingBox box;
    std::string label;
    double score = 0.0;
};

}  // namespace steach::core
