#include "expanse/face.hpp"

#include <algorithm>

namespace expanse {

namespace {

void sortCanonical(std::vector<Face>& faces) {
    std::sort(faces.begin(), faces.end(), canonicalLess);
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
}

}  // namespace

std::vector<Face> maximalFaces(std::vector<Face> faces) {
    sortCanonical(faces);
    std::vector<Face> kept;
    // Largest first: a face can only be dominated by an earlier one.
    for (auto it = faces.rbegin(); it != faces.rend(); ++it) {
        const Face f = *it;
        const bool dominated =
            std::any_of(kept.begin(), kept.end(), [f](Face g) { return f.isSubsetOf(g); });
        if (!dominated) {
            kept.push_back(f);
        }
    }
    sortCanonical(kept);
    return kept;
}

std::vector<Face> minimalFaces(std::vector<Face> faces) {
    sortCanonical(faces);
    std::vector<Face> kept;
    for (Face f : faces) {
        const bool dominated =
            std::any_of(kept.begin(), kept.end(), [f](Face g) { return g.isSubsetOf(f); });
        if (!dominated) {
            kept.push_back(f);
        }
    }
    return kept;
}

bool isAntichain(std::span<const Face> faces) {
    for (std::size_t a = 0; a < faces.size(); ++a) {
        for (std::size_t b = 0; b < faces.size(); ++b) {
            if (a != b && faces[a].isSubsetOf(faces[b])) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace expanse
