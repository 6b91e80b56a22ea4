#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>

namespace hopfmzv {

/// Thread-safe memo table. The lock is never held while a value is computed,
/// so recursive computations may populate the table concurrently; a racing
/// duplicate insert keeps the first value.
template <class Key, class Value>
class Memo {
public:
    std::optional<Value> find(const Key& k) const
    {
        std::shared_lock lock(mutex_);
        auto it = table_.find(k);
        if (it == table_.end())
            return std::nullopt;
        return it->second;
    }

    Value insert(const Key& k, Value v)
    {
        std::unique_lock lock(mutex_);
        return table_.try_emplace(k, std::move(v)).first->second;
    }

    void insert_or_assign(const Key& k, Value v)
    {
        std::unique_lock lock(mutex_);
        table_.insert_or_assign(k, std::move(v));
    }

    template <class F>
    Value get_or_compute(const Key& k, F&& compute)
    {
        if (auto hit = find(k))
            return *std::move(hit);
        return insert(k, compute());
    }

    std::size_t size() const
    {
        std::shared_lock lock(mutex_);
        return table_.size();
    }

private:
    mutable std::shared_mutex mutex_;
    std::map<Key, Value> table_;
};

} // namespace hopfmzv
