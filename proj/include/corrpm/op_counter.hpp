#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace corrpm {

/// Multiply-accumulate bookkeeping for forward passes. Counts are derived
/// from operation geometry only, so identical shapes give identical totals.
class OpCounter {
public:
    void add(std::string_view op, std::uint64_t macs) {
        total_ += macs;
        macs_[std::string(op)] += macs;
        calls_[std::string(op)] += 1;
    }

    std::uint64_t total() const { return total_; }

    std::uint64_t macs(const std::string& op) const {
        auto it = macs_.find(op);
        return it == macs_.end() ? 0 : it->second;
    }

    /// Number of counted invocations carrying this tag.
    std::uint64_t calls(const std::string& op) const {
        auto it = calls_.find(op);
        return it == calls_.end() ? 0 : it->second;
    }

    const std::map<std::string, std::uint64_t>& breakdown() const { return macs_; }
    const std::map<std::string, std::uint64_t>& call_counts() const { return calls_; }

    void reset() {
        total_ = 0;
        macs_.clear();
        calls_.clear();
    }

private:
    std::uint64_t total_ = 0;
    std::map<std::string, std::uint64_t> macs_;
    std::map<std::string, std::uint64_t> calls_;
};

} // namespace corrpm
