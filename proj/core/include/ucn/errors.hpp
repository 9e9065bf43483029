#pragma once

#include <stdexcept>
#include <string>

namespace ucn {

// Precondition violations. Verdict-style outcomes (NotInCone, NonMember, ...)
// are ordinary return values, not exceptions.

struct ShapeError : std::invalid_argument {
    explicit ShapeError(const std::string& what) : std::invalid_argument(what) {}
};

struct RankError : std::invalid_argument {
    explicit RankError(const std::string& what) : std::invalid_argument(what) {}
};

struct IndexError : std::invalid_argument {
    explicit IndexError(const std::string& what) : std::invalid_argument(what) {}
};

struct InvalidRank : std::invalid_argument {
    explicit InvalidRank(const std::string& what) : std::invalid_argument(what) {}
};

struct InvalidInput : std::invalid_argument {
    explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

struct InvalidNormVector : std::invalid_argument {
    explicit InvalidNormVector(const std::string& what) : std::invalid_argument(what) {}
};

// Input class fails the pairwise effectivity condition a_i + a_j >= 0.
struct NotEffectiveLike : std::invalid_argument {
    explicit NotEffectiveLike(const std::string& what) : std::invalid_argument(what) {}
};

struct DegenerateCloud : std::invalid_argument {
    explicit DegenerateCloud(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace ucn
