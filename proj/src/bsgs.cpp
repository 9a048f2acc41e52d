#include "latmon/bsgs.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace latmon {

namespace {

BSGSGroup::Word concat(const BSGSGroup::Word& a, const BSGSGroup::Word& b) {
    BSGSGroup::Word out;
    out.reserve(a.size() + b.size());
    out.insert(out.end(), a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

BSGSGroup::Word reversed(const BSGSGroup::Word& a) {
    return BSGSGroup::Word(a.rbegin(), a.rend());
}

} // namespace

BSGSGroup::BSGSGroup(std::vector<F2Mat> generators) : gens_(std::move(generators)) {
    if (gens_.empty()) throw std::invalid_argument("BSGS needs at least one generator");
    dim_ = gens_[0].dim();
    for (size_t i = 0; i < gens_.size(); ++i) {
        if (gens_[i].dim() != dim_) throw std::invalid_argument("BSGS generators of mixed dimension");
        if (!(gens_[i] * gens_[i]).is_identity())
            throw std::invalid_argument("BSGS generators must be involutions (word inverses are reversals)");
    }
    for (size_t i = 0; i < gens_.size(); ++i) {
        if (gens_[i].is_identity()) continue;
        insert(Elem{gens_[i], Word{int(i)}}, 0);
    }
}

std::optional<BSGSGroup::Elem> BSGSGroup::strip(const Elem& e, size_t from, size_t* stuck_level) const {
    Elem cur = e;
    for (size_t i = from; i < levels_.size(); ++i) {
        F2Vec p = cur.m.apply(levels_[i].beta);
        if (p == levels_[i].beta) continue;
        auto it = levels_[i].transversal.find(p);
        if (it == levels_[i].transversal.end()) {
            *stuck_level = i;
            return cur;
        }
        // divide by the coset representative: cur <- t_p^{-1} . cur
        cur = Elem{it->second.m.inverse() * cur.m, concat(reversed(it->second.word), cur.word)};
    }
    if (cur.m.is_identity()) return std::nullopt;
    *stuck_level = levels_.size();
    return cur;
}

void BSGSGroup::insert(Elem e, size_t level) {
    size_t stuck = 0;
    auto residue = strip(e, level, &stuck);
    if (!residue) return;

    if (stuck == levels_.size()) {
        // residue fixes all current base points: open a new level at the
        // smallest point it moves
        F2Vec beta = 0;
        for (F2Vec p = 1; p < (F2Vec(1) << dim_); ++p) {
            if (residue->m.apply(p) != p) { beta = p; break; }
        }
        if (beta == 0) return;   // identity (should have been caught)
        Level lv;
        lv.beta = beta;
        lv.transversal.emplace(beta, Elem{F2Mat::identity(dim_), Word{}});
        levels_.push_back(std::move(lv));
        stuck = levels_.size() - 1;
    }

    Level& lv = levels_[stuck];
    for (const auto& g : lv.stab_gens)
        if (g.m == residue->m) return;   // already known
    lv.stab_gens.push_back(*residue);

    rebuild_orbit(stuck);
}

void BSGSGroup::rebuild_orbit(size_t level) {
    // Phase 1: extend the orbit to closure under the current generator set
    // (existing transversal words are kept). Phase 2: collect the Schreier
    // generators. Phase 3: sift them into deeper levels. The recursive
    // inserts in phase 3 may grow `levels_`, so no Level reference is held
    // across them.
    std::vector<Elem> schreier;
    {
        Level& lv = levels_[level];
        std::vector<F2Vec> queue;
        for (const auto& [p, e] : lv.transversal) queue.push_back(p);
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            F2Vec p = queue[qi];
            const Elem tp = lv.transversal.at(p);
            for (const auto& g : lv.stab_gens) {
                F2Vec np = g.m.apply(p);
                if (lv.transversal.count(np)) continue;
                lv.transversal.emplace(np, Elem{g.m * tp.m, concat(g.word, tp.word)});
                queue.push_back(np);
            }
        }

        for (const auto& [p, tp] : lv.transversal) {
            for (const auto& g : lv.stab_gens) {
                F2Vec gp = g.m.apply(p);
                const Elem& tgp = lv.transversal.at(gp);
                F2Mat sm = tgp.m.inverse() * (g.m * tp.m);
                if (sm.is_identity()) continue;
                schreier.push_back(Elem{std::move(sm),
                                        concat(reversed(tgp.word), concat(g.word, tp.word))});
            }
        }
    }

    for (auto& s : schreier) insert(std::move(s), level + 1);
}

Int BSGSGroup::order() const {
    Int n(1);
    for (const auto& lv : levels_) n *= Int(lv.transversal.size());
    return n;
}

std::vector<F2Vec> BSGSGroup::base() const {
    std::vector<F2Vec> out;
    for (const auto& lv : levels_) out.push_back(lv.beta);
    return out;
}

std::vector<int> BSGSGroup::orbit_sizes() const {
    std::vector<int> out;
    for (const auto& lv : levels_) out.push_back(int(lv.transversal.size()));
    return out;
}

bool BSGSGroup::contains(const F2Mat& g) const {
    if (g.is_identity()) return true;
    size_t stuck = 0;
    return !strip(Elem{g, Word{}}, 0, &stuck).has_value();
}

BSGSGroup::Word BSGSGroup::factor(const F2Mat& g) const {
    Word out;
    F2Mat cur = g;
    for (const auto& lv : levels_) {
        F2Vec p = cur.apply(lv.beta);
        if (p == lv.beta) continue;
        auto it = lv.transversal.find(p);
        if (it == lv.transversal.end())
            throw std::invalid_argument("factor: element is not in the group (membership failure)");
        out = concat(out, it->second.word);
        cur = it->second.m.inverse() * cur;
    }
    if (!cur.is_identity())
        throw std::invalid_argument("factor: element is not in the group (membership failure)");
    return out;
}

F2Mat BSGSGroup::evaluate(const Word& w) const {
    F2Mat out = F2Mat::identity(dim_);
    for (int label : w) out = out * gens_[size_t(label)];
    return out;
}

} // namespace latmon
