#pragma once

#include <chrono>
#include <cstdint>

#include "oppdc/error.hpp"

namespace oppdc {

/// Search limits. Node counts are deterministic; the wall-clock limit is a
/// safety net and makes results timing-dependent only when it trips.
struct Budget {
    std::uint64_t max_nodes = 200'000'000;
    std::chrono::milliseconds max_millis{600'000};

    void validate() const {
        if (max_nodes == 0 || max_millis.count() <= 0)
            throw InputError("budget limits must be positive");
    }
};

/// Counts search nodes against a Budget. Shared by nested searches so that
/// a whole pipeline draws from one pool.
class BudgetMeter {
public:
    explicit BudgetMeter(Budget budget)
        : budget_(budget), start_(std::chrono::steady_clock::now()) {
        budget_.validate();
    }

    /// Accounts one node. Returns false once the budget is exhausted (and
    /// keeps returning false).
    bool tick() {
        if (exhausted_) return false;
        ++nodes_;
        if (nodes_ > budget_.max_nodes) {
            exhausted_ = true;
            return false;
        }
        if ((nodes_ & 0x3FF) == 0 && elapsed() > budget_.max_millis) {
            exhausted_ = true;
            return false;
        }
        return true;
    }

    /// Accounts `n` nodes spent under another meter.
    void charge(std::uint64_t n) {
        nodes_ += n;
        if (nodes_ > budget_.max_nodes || elapsed() > budget_.max_millis) exhausted_ = true;
    }

    bool exhausted() const noexcept { return exhausted_; }
    std::uint64_t nodes() const noexcept { return nodes_; }
    const Budget& budget() const noexcept { return budget_; }

    std::chrono::milliseconds elapsed() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                     start_);
    }

    std::chrono::nanoseconds elapsed_precise() const { return std::chrono::steady_clock::now() - start_; }

private:
    Budget budget_;
    std::chrono::steady_clock::time_point start_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
};

}  // namespace oppdc
