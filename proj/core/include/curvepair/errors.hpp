// Error types shared across the pipeline stages.
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace curvepair {

// Quadtree address of a box: grid cell (ix, iy) at the given depth.
struct BoxKey {
    int depth = 0;
    std::uint32_t ix = 0;
    std::uint32_t iy = 0;

    friend constexpr auto operator<=>(const BoxKey&, const BoxKey&) = default;
};

std::string to_string(const BoxKey& key);

// All pipeline failures carry a stable machine-readable code, the stage that
// raised them and, when applicable, the offending box address.
class Error : public std::runtime_error {
  public:
    Error(std::string code, std::string stage, std::string message,
          std::optional<BoxKey> box = std::nullopt)
        : std::runtime_error(message), code_(std::move(code)), stage_(std::move(stage)),
          box_(box) {}

    const std::string& code() const { return code_; }
    const std::string& stage() const { return stage_; }
    const std::optional<BoxKey>& box() const { return box_; }

  private:
    std::string code_;
    std::string stage_;
    std::optional<BoxKey> box_;
};

inline Error max_depth_exceeded(const std::string& stage, const BoxKey& box) {
    return Error("MaxDepthExceeded", stage,
                 "depth cap reached at box " + to_string(box) +
                     "; likely a singularity, a tangential intersection, or an insufficient cap",
                 box);
}

inline Error iteration_cap_exceeded(const std::string& stage, int rounds) {
    return Error("IterationCapExceeded", stage,
                 "no fixpoint after " + std::to_string(rounds) + " rounds");
}

}  // namespace curvepair
