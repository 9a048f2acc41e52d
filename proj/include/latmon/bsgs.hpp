#pragma once

#include "latmon/f2.hpp"

#include <map>
#include <optional>
#include <vector>

namespace latmon {

// Base and strong generating set for a finite group of invertible F2
// matrices acting on the nonzero vectors of F2^dim. The build is fully
// deterministic: base points are the smallest moved points in integer
// order and orbits are explored breadth-first with generators in label
// order. Transversal entries and strong generators carry words in the
// ORIGINAL generator labels; all generators are required to be involutions
// (true for transvections), so inverse words are just reversals.
class BSGSGroup {
public:
    using Word = std::vector<int>;

    explicit BSGSGroup(std::vector<F2Mat> generators);

    Int order() const;
    int base_length() const { return int(levels_.size()); }
    std::vector<F2Vec> base() const;

    bool contains(const F2Mat& g) const;

    // Word w with evaluate(w) == g; throws if g is not in the group.
    Word factor(const F2Mat& g) const;

    F2Mat evaluate(const Word& w) const;

    const std::vector<F2Mat>& generators() const { return gens_; }

    // transversal sizes, one per level (for reporting)
    std::vector<int> orbit_sizes() const;

private:
    struct Elem {
        F2Mat m;
        Word word;
    };
    struct Level {
        F2Vec beta = 0;
        std::vector<Elem> stab_gens;              // generators of this level's stabilizer group
        std::map<F2Vec, Elem> transversal;        // point -> element mapping beta to point
    };

    void insert(Elem e, size_t level);
    void rebuild_orbit(size_t level);
    // returns the level where e got stuck (levels_.size() if e sifts to id)
    std::optional<Elem> strip(const Elem& e, size_t from, size_t* stuck_level) const;

    int dim_ = 0;
    std::vector<F2Mat> gens_;
    std::vector<Level> levels_;
};

} // namespace latmon
