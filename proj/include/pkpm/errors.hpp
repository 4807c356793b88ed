#pragma once

#include <stdexcept>
#include <string>

namespace pkpm {

/// Mesh generation could not reach the requested quality.
struct MeshQualityError : std::runtime_error {
    explicit MeshQualityError(const std::string& what) : std::runtime_error(what) {}
};

/// Linear solver failed to converge.
struct SolveError : std::runtime_error {
    explicit SolveError(const std::string& what) : std::runtime_error(what) {}
};

/// A Monte-Carlo campaign lost too many trials to be meaningful.
struct CampaignError : std::runtime_error {
    explicit CampaignError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace pkpm
