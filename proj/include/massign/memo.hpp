#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>

namespace massign::detail {

// Single-writer / many-reader memo with idempotent fill.  A racing fill may
// compute the value twice; the first insert wins and later computations are
// discarded, so readers always observe one shared value per key.
template <class Key, class Value>
class MemoCache {
public:
    template <class Fill>
    std::shared_ptr<const Value> get_or_fill(const Key& key, Fill&& fill) {
        {
            std::shared_lock lock(mu_);
            auto it = map_.find(key);
            if (it != map_.end()) return it->second;
        }
        auto computed = std::make_shared<const Value>(fill());
        std::unique_lock lock(mu_);
        auto [it, inserted] = map_.try_emplace(key, std::move(computed));
        return it->second;
    }

private:
    mutable std::shared_mutex mu_;
    std::map<Key, std::shared_ptr<const Value>> map_;
};

}  // namespace massign::detail
