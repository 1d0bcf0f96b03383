#pragma once

#include "gwblowup/lattice.hpp"

#include <mutex>
#include <optional>
#include <shared_mutex>
#include <unordered_map>
#include <utility>
#include <vector>

namespace gwb {

// Canonical key -> invariant. Readers share the lock; an insert is atomic per
// key and never replaces an existing entry, so racing writers of the same key
// are harmless (they computed the same value).
class MemoStore {
public:
    MemoStore() = default;
    MemoStore(const MemoStore&) = delete;
    MemoStore& operator=(const MemoStore&) = delete;
    MemoStore(MemoStore&& other) noexcept {
        std::unique_lock lock(other.mutex_);
        values_ = std::move(other.values_);
    }
    MemoStore& operator=(MemoStore&& other) noexcept {
        if (this != &other) {
            std::scoped_lock lock(mutex_, other.mutex_);
            values_ = std::move(other.values_);
        }
        return *this;
    }

    std::optional<BigCount> find(const CanonKey& key) const {
        std::shared_lock lock(mutex_);
        auto it = values_.find(key);
        if (it == values_.end()) return std::nullopt;
        return it->second;
    }

    bool contains(const CanonKey& key) const {
        std::shared_lock lock(mutex_);
        return values_.count(key) != 0;
    }

    // Returns false when the key was already present.
    bool insert(const CanonKey& key, BigCount value) {
        std::unique_lock lock(mutex_);
        return values_.try_emplace(key, std::move(value)).second;
    }

    // Unconditional write. Only for loading and fault injection.
    void assign(const CanonKey& key, BigCount value) {
        std::unique_lock lock(mutex_);
        values_.insert_or_assign(key, std::move(value));
    }

    std::size_t size() const {
        std::shared_lock lock(mutex_);
        return values_.size();
    }

    // Entries sorted by (d, alpha).
    std::vector<std::pair<CanonKey, BigCount>> snapshot() const {
        std::vector<std::pair<CanonKey, BigCount>> out;
        {
            std::shared_lock lock(mutex_);
            out.assign(values_.begin(), values_.end());
        }
        std::sort(out.begin(), out.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        return out;
    }

    friend bool operator==(const MemoStore& a, const MemoStore& b) {
        return a.snapshot() == b.snapshot();
    }

private:
    mutable std::shared_mutex mutex_;
    std::unordered_map<CanonKey, BigCount, CanonKeyHash> values_;
};

}  // namespace gwb
