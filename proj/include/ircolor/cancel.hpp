#pragma once

#include "ircolor/errors.hpp"

#include <atomic>
#include <chrono>
#include <cstdint>
#include <optional>

namespace ircolor {

/**
 * Cooperative cancellation for long searches. Solvers call check() at branch
 * boundaries; it throws Cancelled once the flag is raised or the deadline has
 * passed. The clock is only consulted every 1024 checks.
 *
 * A default-constructed token never fires.
 */
class CancelToken
{
  public:
    using clock = std::chrono::steady_clock;

    CancelToken() = default;

    static auto with_deadline(clock::time_point deadline) -> CancelToken
    {
        CancelToken t;
        t.deadline_ = deadline;
        return t;
    }

    static auto with_budget(std::chrono::milliseconds budget) -> CancelToken
    {
        return with_deadline(clock::now() + budget);
    }

    /// Also fire when *flag becomes true. The flag must outlive the token.
    auto watch(const std::atomic<bool> * flag) -> CancelToken &
    {
        flag_ = flag;
        return *this;
    }

    auto check() const -> void
    {
        if (flag_ && flag_->load(std::memory_order_relaxed))
            throw Cancelled{};
        if (deadline_ && (++ticks_ & 1023U) == 0 && clock::now() > *deadline_)
            throw Cancelled{};
    }

  private:
    std::optional<clock::time_point> deadline_;
    const std::atomic<bool> * flag_ = nullptr;
    mutable std::uint32_t ticks_ = 0;
};

inline auto no_cancel() -> const CancelToken &
{
    static const CancelToken token;
    return token;
}

} // namespace ircolor
