#pragma once

#include <map>

#include "spectre/rational.hpp"

namespace spectre {

struct SpectralPair {
    Rat alpha;
    int weight = 0; // 0, 1 or 2

    friend bool operator==(const SpectralPair&, const SpectralPair&) = default;
    friend std::strong_ordering operator<=>(const SpectralPair&, const SpectralPair&) = default;
};

// Integer-weighted multiset.  Zero multiplicities are never stored;
// negative ones are allowed while a sum is being assembled.
template <class K>
class Bag {
public:
    using Map = std::map<K, long>;

    void add(const K& key, long count = 1)
    {
        if (count == 0)
            return;
        auto [it, fresh] = entries_.try_emplace(key, count);
        if (!fresh) {
            it->second += count;
            if (it->second == 0)
                entries_.erase(it);
        }
    }

    long count(const K& key) const
    {
        auto it = entries_.find(key);
        return it == entries_.end() ? 0 : it->second;
    }

    Bag& operator+=(const Bag& o)
    {
        for (const auto& [k, c] : o.entries_)
            add(k, c);
        return *this;
    }
    Bag& operator-=(const Bag& o)
    {
        for (const auto& [k, c] : o.entries_)
            add(k, -c);
        return *this;
    }
    friend Bag operator+(Bag a, const Bag& b) { return a += b; }
    friend Bag operator-(Bag a, const Bag& b) { return a -= b; }

    Bag scaled(long f) const
    {
        Bag out;
        if (f != 0)
            for (const auto& [k, c] : entries_)
                out.entries_.emplace(k, c * f);
        return out;
    }

    // Sum of all multiplicities.
    long total() const
    {
        long t = 0;
        for (const auto& [k, c] : entries_)
            t += c;
        return t;
    }

    bool all_nonnegative() const
    {
        for (const auto& [k, c] : entries_)
            if (c < 0)
                return false;
        return true;
    }

    bool empty() const { return entries_.empty(); }
    size_t size() const { return entries_.size(); }
    const Map& entries() const { return entries_; }
    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    friend bool operator==(const Bag&, const Bag&) = default;

private:
    Map entries_;
};

using PairBag = Bag<SpectralPair>;
using SpecBag = Bag<Rat>;

// Forget the weights.
SpecBag project(const PairBag& pairs);

// sum of mult * alpha^k
Rat moment(const SpecBag& sp, unsigned k);

// Largest / smallest key with positive multiplicity.  Throws on an empty bag.
Rat max_value(const SpecBag& sp);
Rat min_value(const SpecBag& sp);

} // namespace spectre
